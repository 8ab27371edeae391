// Copyright 2026 The zwcalc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Test-side oracles. Nothing here calls generator_matrix or interpret: the
// generator formulas are written out again as basis-state maps, and
// diagrams are evaluated by naive Kronecker products and matrix products.

#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "zw/derived.hpp"
#include "zw/diagram.hpp"
#include "zw/matrix.hpp"
#include "zw/rules.hpp"

namespace zw::oracle {

using Dense = std::vector<std::vector<Complex>>;

inline Dense zeros(std::size_t r, std::size_t c) {
  return Dense(r, std::vector<Complex>(c, 0.0));
}

inline Dense eye(std::size_t n) {
  Dense m = zeros(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1.0;
  return m;
}

inline Dense multiply(const Dense& a, const Dense& b) {
  const std::size_t inner = b.size();
  const std::size_t cols = inner ? b[0].size() : 0;
  Dense out = zeros(a.size(), cols);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

inline Dense kronecker(const Dense& a, const Dense& b) {
  const std::size_t ar = a.size(), ac = ar ? a[0].size() : 0;
  const std::size_t br = b.size(), bc = br ? b[0].size() : 0;
  Dense out = zeros(ar * br, ac * bc);
  for (std::size_t i = 0; i < ar; ++i)
    for (std::size_t j = 0; j < ac; ++j)
      for (std::size_t k = 0; k < br; ++k)
        for (std::size_t l = 0; l < bc; ++l)
          out[i * br + k][j * bc + l] = a[i][j] * b[k][l];
  return out;
}

inline Complex xi_pow(int d, long long k) {
  return std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(k) / d);
}

// Digits of a big-endian index.
inline std::vector<int> digits(std::size_t index, const std::vector<int>& dims) {
  std::vector<int> out(dims.size());
  for (std::size_t i = dims.size(); i-- > 0;) {
    out[i] = static_cast<int>(index % dims[i]);
    index /= dims[i];
  }
  return out;
}

inline std::size_t index_of(const std::vector<int>& digits, const std::vector<int>& dims) {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) idx = idx * dims[i] + digits[i];
  return idx;
}

inline std::size_t size_of(const std::vector<int>& dims) {
  std::size_t n = 1;
  for (int d : dims) n *= d;
  return n;
}

/** Generator formula, evaluated entry by entry from the basis labels. */
inline Dense generator(const Generator& g) {
  const auto& in = g.domain();
  const auto& out = g.codomain();
  Dense m = zeros(size_of(out), size_of(in));
  const int d = g.dim();
  for (std::size_t c = 0; c < m[0].size(); ++c) {
    const auto x = digits(c, in);
    for (std::size_t r = 0; r < m.size(); ++r) {
      const auto y = digits(r, out);
      Complex v = 0.0;
      switch (g.kind()) {
        case GeneratorKind::Empty:
          v = 1.0;
          break;
        case GeneratorKind::ZSpider: {
          // All legs carry the same label j; the entry is a_j.
          int j = -1;
          bool same = true;
          for (int a : x) same = same && (j < 0 || a == j), j = a;
          for (int a : y) same = same && (j < 0 || a == j), j = a;
          if (same) {
            if (j < 0) {
              for (int k = 0; k < d; ++k) v += g.phase().coefficient(k);
            } else {
              v = g.phase().coefficient(j);
            }
          }
          break;
        }
        case GeneratorKind::W:
          // Output pair with at most one non-zero label summing to the input.
          if ((y[0] == 0 || y[1] == 0) && y[0] + y[1] == x[0]) v = 1.0;
          break;
        case GeneratorKind::Braid:
        case GeneratorKind::BraidInv:
          if (y[0] == x[1] && y[1] == x[0]) {
            const long long e = static_cast<long long>(y[0]) * y[1];
            v = xi_pow(d, g.kind() == GeneratorKind::Braid ? e : -e);
          }
          break;
        case GeneratorKind::Identity:
          v = x[0] == y[0] ? 1.0 : 0.0;
          break;
        case GeneratorKind::Swap:
          v = (y[0] == x[1] && y[1] == x[0]) ? 1.0 : 0.0;
          break;
        case GeneratorKind::Cap:
          v = y[0] == y[1] ? 1.0 : 0.0;
          break;
        case GeneratorKind::Cup:
          v = x[0] == x[1] ? 1.0 : 0.0;
          break;
        case GeneratorKind::Hadamard:
          v = xi_pow(d, static_cast<long long>(y[0]) * x[0]);
          break;
        case GeneratorKind::HadamardDagger:
          v = xi_pow(d, -static_cast<long long>(y[0]) * x[0]);
          break;
        case GeneratorKind::Triangle:
        case GeneratorKind::TriangleInv:
          if (y[0] == x[0]) v = 1.0;
          else if (y[0] == 0) v = g.kind() == GeneratorKind::Triangle ? 1.0 : -1.0;
          break;
        case GeneratorKind::Binder:
          v = y[0] == x[0] * g.second_dim() + x[1] ? 1.0 : 0.0;
          break;
        case GeneratorKind::Splitter:
          v = (y[0] == x[0] / g.second_dim() && y[1] == x[0] % g.second_dim())
                  ? 1.0
                  : 0.0;
          break;
      }
      m[r][c] = v;
    }
  }
  return m;
}

/** Naive evaluation: Kronecker products for Par, products for Seq. */
inline Dense evaluate(const Diagram& d) {
  switch (d.shape()) {
    case Diagram::Shape::Leaf:
      return generator(d.generator());
    case Diagram::Shape::Seq:
      return multiply(evaluate(d.second()), evaluate(d.first()));
    case Diagram::Shape::Par:
      return kronecker(evaluate(d.first()), evaluate(d.second()));
  }
  return {};
}

inline double max_diff(const Dense& a, const ComplexMatrix& b) {
  if (a.size() != b.rows() || (!a.empty() && a[0].size() != b.cols())) {
    return INFINITY;
  }
  double dev = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j)
      dev = std::max(dev, std::abs(a[i][j] - b(i, j)));
  return dev;
}

inline double max_diff(const Dense& a, const Dense& b) {
  if (a.size() != b.size() || (!a.empty() && a[0].size() != b[0].size())) {
    return INFINITY;
  }
  double dev = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j)
      dev = std::max(dev, std::abs(a[i][j] - b[i][j]));
  return dev;
}

/** Closed form of the black spider with one input and m outputs. */
inline Dense black_spider_formula(int m, int d) {
  std::vector<int> dims(m, d);
  Dense out = zeros(size_of(dims), d);
  out[0][0] = 1.0;
  for (int i = 1; i < d; ++i) {
    for (int k = 0; k < m; ++k) {
      std::vector<int> label(m, 0);
      label[k] = i;
      out[index_of(label, dims)][i] = 1.0;
    }
  }
  return out;
}

enum class Palette { ZW, ZX };

/** A random generator of the chosen calculus at dimension d. */
template <typename Rng>
Generator random_generator(Palette palette, int d, Rng& rng) {
  std::uniform_int_distribution<int> pick(0, 7);
  std::uniform_int_distribution<int> legs(0, 2);
  switch (pick(rng)) {
    case 0: {
      const int n = legs(rng);
      const int m = legs(rng);
      return Generator::z_spider(d, n, m, random_phase(d, rng));
    }
    case 1:
      return palette == Palette::ZW ? Generator::w(d) : Generator::hadamard(d);
    case 2:
      return palette == Palette::ZW ? Generator::braid(d)
                                    : Generator::hadamard_dagger(d);
    case 3:
      return palette == Palette::ZW ? Generator::braid_inverse(d)
                                    : Generator::triangle(d);
    case 4:
      return palette == Palette::ZW ? Generator::swap(d)
                                    : Generator::triangle_inverse(d);
    case 5:
      return Generator::cap(d);
    case 6:
      return Generator::cup(d);
    default:
      return palette == Palette::ZW ? Generator::identity(d) : Generator::swap(d);
  }
}

/**
 * Layered random diagram with `count` generators and at most `max_wires`
 * wires between layers. Each layer pads one generator with identities.
 */
template <typename Rng>
Diagram random_diagram(
    Palette palette, int d, int count, Rng& rng, int max_wires = 4,
    int start_wires = -1) {
  std::uniform_int_distribution<int> start(1, 3);
  int wires = start_wires >= 0 ? start_wires : start(rng);
  Diagram out = identity_wires(d, wires);
  int placed = 0;
  while (placed < count) {
    const Generator g = random_generator(palette, d, rng);
    const int in = g.inputs();
    const int next = wires - in + g.outputs();
    if (in > wires || next > max_wires) continue;
    std::uniform_int_distribution<int> pos(0, wires - in);
    const int left = pos(rng);
    const Diagram layer = par(
        {identity_wires(d, left), Diagram(g), identity_wires(d, wires - in - left)});
    out = seq(out, layer);
    wires = next;
    ++placed;
  }
  return out;
}

}  // namespace zw::oracle
