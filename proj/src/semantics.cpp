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

#include "zw/semantics.hpp"

#include <cmath>
#include <numbers>

namespace zw {

namespace {

std::size_t ipow(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// Index of |j j ... j> (k copies) in dimension d.
std::size_t repeated_index(std::size_t j, int copies, std::size_t d) {
  std::size_t idx = 0;
  for (int i = 0; i < copies; ++i) idx = idx * d + j;
  return idx;
}

void check_cap(std::size_t rows, std::size_t cols, const InterpretOptions& opts) {
  if (cols != 0 && rows > opts.max_entries / cols) {
    throw DimensionOverflow(
        "interpretation needs " + std::to_string(rows) + "x" +
        std::to_string(cols) + " entries, cap is " +
        std::to_string(opts.max_entries));
  }
}

// [l][r][k] -> [r][l][k]
ComplexMatrix swap_outer(
    const ComplexMatrix& x, std::size_t left, std::size_t right,
    std::size_t k) {
  ComplexMatrix out(right, left * k);
  const auto& src = x.data();
  auto& dst = out.data();
  for (std::size_t l = 0; l < left; ++l) {
    for (std::size_t r = 0; r < right; ++r) {
      const Complex* from = &src[(l * right + r) * k];
      Complex* to = &dst[(r * left + l) * k];
      std::copy(from, from + k, to);
    }
  }
  return out;
}

// Applies [[d]] to the columns of x, whose rows index the domain of d.
ComplexMatrix apply(
    const Diagram& d, ComplexMatrix x, const InterpretOptions& opts) {
  switch (d.shape()) {
    case Diagram::Shape::Leaf: {
      const GeneratorKind kind = d.generator().kind();
      if (kind == GeneratorKind::Empty || kind == GeneratorKind::Identity) {
        return x;
      }
      const ComplexMatrix g = generator_matrix(d.generator());
      check_cap(g.rows(), x.cols(), opts);
      return matmul(g, x);
    }
    case Diagram::Shape::Seq:
      return apply(d.second(), apply(d.first(), std::move(x), opts), opts);
    case Diagram::Shape::Par: {
      const std::size_t left = space_size(d.first().domain());
      const std::size_t right = space_size(d.second().domain());
      const std::size_t k = x.cols();
      const std::size_t right_out = space_size(d.second().codomain());
      check_cap(left * right_out, k, opts);
      // Right factor: bring its index to the front, apply, move it back.
      ComplexMatrix y = apply(
          d.second(), swap_outer(x, left, right, k), opts);
      y = swap_outer(y, right_out, left, k);
      // Left factor acts on the leading index of an L x (R' * K) view.
      ComplexMatrix view(left, right_out * k, std::move(y.data()));
      ComplexMatrix z = apply(d.first(), std::move(view), opts);
      const std::size_t left_out = z.rows();
      return ComplexMatrix(left_out * right_out, k, std::move(z.data()));
    }
  }
  throw DiagramError("unknown diagram shape");
}

}  // namespace

std::size_t space_size(const WireSignature& sig) {
  std::size_t n = 1;
  for (int d : sig) n *= static_cast<std::size_t>(d);
  return n;
}

ComplexMatrix generator_matrix(const Generator& g) {
  const auto d = static_cast<std::size_t>(g.dim());
  switch (g.kind()) {
    case GeneratorKind::Empty:
      return ComplexMatrix::identity(1);
    case GeneratorKind::ZSpider: {
      ComplexMatrix m(ipow(d, g.outputs()), ipow(d, g.inputs()));
      for (std::size_t j = 0; j < d; ++j) {
        m(repeated_index(j, g.outputs(), d), repeated_index(j, g.inputs(), d)) +=
            g.phase().coefficient(static_cast<int>(j));
      }
      return m;
    }
    case GeneratorKind::W: {
      // |00><0| + sum_i (|0i> + |i0>)<i|
      ComplexMatrix m(d * d, d);
      m(0, 0) = 1.0;
      for (std::size_t i = 1; i < d; ++i) {
        m(i, i) = 1.0;
        m(i * d, i) = 1.0;
      }
      return m;
    }
    case GeneratorKind::Braid:
    case GeneratorKind::BraidInv: {
      // sum_{j,k} xi^{jk} |jk><kj|, conjugated for the inverse.
      const auto& xi = roots_of_unity(g.dim());
      const long long sign = g.kind() == GeneratorKind::Braid ? 1 : -1;
      ComplexMatrix m(d * d, d * d);
      for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t k = 0; k < d; ++k) {
          m(j * d + k, k * d + j) =
              xi.power(sign * static_cast<long long>(j * k));
        }
      }
      return m;
    }
    case GeneratorKind::Identity:
      return ComplexMatrix::identity(d);
    case GeneratorKind::Swap: {
      const auto s = static_cast<std::size_t>(g.dim());
      const auto t = static_cast<std::size_t>(g.second_dim());
      ComplexMatrix m(s * t, s * t);
      for (std::size_t a = 0; a < s; ++a) {
        for (std::size_t b = 0; b < t; ++b) m(b * s + a, a * t + b) = 1.0;
      }
      return m;
    }
    case GeneratorKind::Cap:
    case GeneratorKind::Cup: {
      ComplexMatrix m(d * d, 1);
      for (std::size_t j = 0; j < d; ++j) m(j * d + j, 0) = 1.0;
      return g.kind() == GeneratorKind::Cap ? m : m.transpose();
    }
    case GeneratorKind::Hadamard:
    case GeneratorKind::HadamardDagger: {
      const auto& xi = roots_of_unity(g.dim());
      const long long sign = g.kind() == GeneratorKind::Hadamard ? 1 : -1;
      ComplexMatrix m(d, d);
      for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t k = 0; k < d; ++k) {
          m(j, k) = xi.power(sign * static_cast<long long>(j * k));
        }
      }
      return m;
    }
    case GeneratorKind::Triangle:
    case GeneratorKind::TriangleInv: {
      // I +/- sum_{i>=1} |0><i|
      ComplexMatrix m = ComplexMatrix::identity(d);
      const double sign = g.kind() == GeneratorKind::Triangle ? 1.0 : -1.0;
      for (std::size_t i = 1; i < d; ++i) m(0, i) = sign;
      return m;
    }
    case GeneratorKind::Binder: {
      // sum_{k,l} |kt + l><kl|
      const auto s = static_cast<std::size_t>(g.dim());
      const auto t = static_cast<std::size_t>(g.second_dim());
      ComplexMatrix m(s * t, s * t);
      for (std::size_t k = 0; k < s; ++k) {
        for (std::size_t l = 0; l < t; ++l) m(k * t + l, k * t + l) = 1.0;
      }
      return m;
    }
    case GeneratorKind::Splitter: {
      // sum_k |[k/t]>|k - t[k/t]><k|
      const auto s = static_cast<std::size_t>(g.dim());
      const auto t = static_cast<std::size_t>(g.second_dim());
      ComplexMatrix m(s * t, s * t);
      for (std::size_t k = 0; k < s * t; ++k) {
        const std::size_t hi = k / t;
        const std::size_t lo = k - t * hi;
        m(hi * t + lo, k) = 1.0;
      }
      return m;
    }
  }
  throw DiagramError("unknown generator kind");
}

ComplexMatrix interpret(const Diagram& d, const InterpretOptions& opts) {
  const std::size_t cols = space_size(d.domain());
  check_cap(space_size(d.codomain()), cols, opts);
  check_cap(cols, cols, opts);
  return apply(d, ComplexMatrix::identity(cols), opts);
}

ComplexMatrix x_spider_formula(int inputs, int outputs, int shift, int d) {
  if (d < 2 || shift < 0 || shift >= d) {
    throw DiagramError("x_spider_formula: need d >= 2 and 0 <= j < d");
  }
  const auto ud = static_cast<std::size_t>(d);
  const std::size_t rows = ipow(ud, outputs);
  const std::size_t cols = ipow(ud, inputs);
  ComplexMatrix m(rows, cols);
  auto digit_sum = [&](std::size_t index, int digits) {
    std::size_t s = 0;
    for (int i = 0; i < digits; ++i) {
      s += index % ud;
      index /= ud;
    }
    return s;
  };
  for (std::size_t r = 0; r < rows; ++r) {
    const std::size_t out_sum = digit_sum(r, outputs) + static_cast<std::size_t>(shift);
    for (std::size_t c = 0; c < cols; ++c) {
      if ((out_sum - digit_sum(c, inputs) + ud * (inputs + 1)) % ud == 0) {
        m(r, c) = 1.0;
      }
    }
  }
  return m;
}

ComplexMatrix red_tau_formula(int d) {
  if (d < 2) throw DiagramError("red_tau_formula: need d >= 2");
  const auto& xi = roots_of_unity(d);
  const auto ud = static_cast<std::size_t>(d);
  ComplexMatrix m(ud, ud);
  for (std::size_t l = 0; l < ud; ++l) {
    const double ld = static_cast<double>(l);
    const double tau = ld * std::numbers::pi + ld * ld * std::numbers::pi / d;
    const Complex phase = std::polar(1.0, tau);
    for (std::size_t k = 0; k < ud; ++k) {
      for (std::size_t n = 0; n < ud; ++n) {
        const long long e = (static_cast<long long>(k) - static_cast<long long>(n)) *
                            static_cast<long long>(l);
        m(k, n) += phase * xi.power(e) / static_cast<double>(d);
      }
    }
  }
  return m;
}

}  // namespace zw
