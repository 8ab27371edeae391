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

#include "zw/generator.hpp"

#include <sstream>

namespace zw {

namespace {

void require_dim(int d, int min, GeneratorKind kind) {
  if (d < min) {
    throw DiagramError(
        to_string(kind) + " needs dimension >= " + std::to_string(min) +
        ", got " + std::to_string(d));
  }
}

}  // namespace

std::string to_string(const WireSignature& sig) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < sig.size(); ++i) {
    if (i) os << ",";
    os << sig[i];
  }
  os << "]";
  return os.str();
}

std::string to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::Empty:
      return "empty";
    case GeneratorKind::ZSpider:
      return "z";
    case GeneratorKind::W:
      return "w";
    case GeneratorKind::Braid:
      return "tau";
    case GeneratorKind::BraidInv:
      return "taui";
    case GeneratorKind::Identity:
      return "id";
    case GeneratorKind::Swap:
      return "swap";
    case GeneratorKind::Cap:
      return "cap";
    case GeneratorKind::Cup:
      return "cup";
    case GeneratorKind::Hadamard:
      return "h";
    case GeneratorKind::HadamardDagger:
      return "hdag";
    case GeneratorKind::Triangle:
      return "tri";
    case GeneratorKind::TriangleInv:
      return "trii";
    case GeneratorKind::Binder:
      return "bind";
    case GeneratorKind::Splitter:
      return "split";
  }
  return "?";
}

Generator Generator::empty() {
  return Generator(GeneratorKind::Empty, 1, 1, 0, 0);
}

Generator Generator::z_spider(
    int d, int inputs, int outputs, PhaseVector phase) {
  require_dim(d, 1, GeneratorKind::ZSpider);
  if (inputs < 0 || outputs < 0) {
    throw DiagramError("spider arity must be non-negative");
  }
  if (phase.dim() != d) {
    throw DiagramError(
        "phase length " + std::to_string(phase.entries().size()) +
        " != d-1=" + std::to_string(d - 1));
  }
  Generator g(GeneratorKind::ZSpider, d, d, inputs, outputs);
  g.phase_ = std::move(phase);
  return g;
}

Generator Generator::z_spider(
    int d, int inputs, int outputs, std::vector<Complex> phase) {
  require_dim(d, 1, GeneratorKind::ZSpider);
  return z_spider(d, inputs, outputs, PhaseVector(d, std::move(phase)));
}

Generator Generator::w(int d) {
  require_dim(d, 2, GeneratorKind::W);
  return Generator(GeneratorKind::W, d, d, 1, 2);
}

Generator Generator::braid(int d) {
  require_dim(d, 2, GeneratorKind::Braid);
  return Generator(GeneratorKind::Braid, d, d, 2, 2);
}

Generator Generator::braid_inverse(int d) {
  require_dim(d, 2, GeneratorKind::BraidInv);
  return Generator(GeneratorKind::BraidInv, d, d, 2, 2);
}

Generator Generator::identity(int d) {
  require_dim(d, 1, GeneratorKind::Identity);
  return Generator(GeneratorKind::Identity, d, d, 1, 1);
}

Generator Generator::swap(int left, int right) {
  require_dim(left, 1, GeneratorKind::Swap);
  require_dim(right, 1, GeneratorKind::Swap);
  return Generator(GeneratorKind::Swap, left, right, 2, 2);
}

Generator Generator::cap(int d) {
  require_dim(d, 1, GeneratorKind::Cap);
  return Generator(GeneratorKind::Cap, d, d, 0, 2);
}

Generator Generator::cup(int d) {
  require_dim(d, 1, GeneratorKind::Cup);
  return Generator(GeneratorKind::Cup, d, d, 2, 0);
}

Generator Generator::hadamard(int d) {
  require_dim(d, 2, GeneratorKind::Hadamard);
  return Generator(GeneratorKind::Hadamard, d, d, 1, 1);
}

Generator Generator::hadamard_dagger(int d) {
  require_dim(d, 2, GeneratorKind::HadamardDagger);
  return Generator(GeneratorKind::HadamardDagger, d, d, 1, 1);
}

Generator Generator::triangle(int d) {
  require_dim(d, 2, GeneratorKind::Triangle);
  return Generator(GeneratorKind::Triangle, d, d, 1, 1);
}

Generator Generator::triangle_inverse(int d) {
  require_dim(d, 2, GeneratorKind::TriangleInv);
  return Generator(GeneratorKind::TriangleInv, d, d, 1, 1);
}

Generator Generator::binder(int s, int t) {
  require_dim(s, 1, GeneratorKind::Binder);
  require_dim(t, 1, GeneratorKind::Binder);
  return Generator(GeneratorKind::Binder, s, t, 2, 1);
}

Generator Generator::splitter(int s, int t) {
  require_dim(s, 1, GeneratorKind::Splitter);
  require_dim(t, 1, GeneratorKind::Splitter);
  return Generator(GeneratorKind::Splitter, s, t, 1, 2);
}

WireSignature Generator::domain() const {
  switch (kind_) {
    case GeneratorKind::Swap:
    case GeneratorKind::Binder:
      return {s_, t_};
    case GeneratorKind::Splitter:
      return {s_ * t_};
    default:
      return WireSignature(static_cast<std::size_t>(inputs_), s_);
  }
}

WireSignature Generator::codomain() const {
  switch (kind_) {
    case GeneratorKind::Swap:
      return {t_, s_};
    case GeneratorKind::Binder:
      return {s_ * t_};
    case GeneratorKind::Splitter:
      return {s_, t_};
    default:
      return WireSignature(static_cast<std::size_t>(outputs_), s_);
  }
}

Calculus Generator::calculus() const {
  switch (kind_) {
    case GeneratorKind::W:
    case GeneratorKind::Braid:
    case GeneratorKind::BraidInv:
      return Calculus::ZW;
    case GeneratorKind::Hadamard:
    case GeneratorKind::HadamardDagger:
    case GeneratorKind::Triangle:
    case GeneratorKind::TriangleInv:
      return Calculus::ZX;
    case GeneratorKind::Binder:
    case GeneratorKind::Splitter:
      return Calculus::Qufinite;
    default:
      return Calculus::Common;
  }
}

}  // namespace zw
