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

#include "zw/derived.hpp"

#include <numbers>
#include <vector>

namespace zw {

Diagram z(int d, int inputs, int outputs, const PhaseVector& phase) {
  return Diagram(Generator::z_spider(d, inputs, outputs, phase));
}
Diagram w(int d) { return Diagram(Generator::w(d)); }
Diagram braid(int d) { return Diagram(Generator::braid(d)); }
Diagram braid_inv(int d) { return Diagram(Generator::braid_inverse(d)); }
Diagram id(int d) { return Diagram(Generator::identity(d)); }
Diagram swap(int d) { return Diagram(Generator::swap(d)); }
Diagram cap(int d) { return Diagram(Generator::cap(d)); }
Diagram cup(int d) { return Diagram(Generator::cup(d)); }
Diagram hadamard(int d) { return Diagram(Generator::hadamard(d)); }
Diagram hadamard_dagger(int d) {
  return Diagram(Generator::hadamard_dagger(d));
}
Diagram triangle(int d) { return Diagram(Generator::triangle(d)); }
Diagram triangle_inv(int d) { return Diagram(Generator::triangle_inverse(d)); }

namespace {

Diagram down_w(int d) {
  // Inputs x, y. Open a cap on the right, feed its left end into W, then
  // close W's outputs against y and x with nested cups.
  return seq({
      par({id(d), id(d), cap(d)}),
      par({id(d), id(d), w(d), id(d)}),
      par({id(d), cup(d), id(d), id(d)}),
      par(cup(d), id(d)),
  });
}

}  // namespace

Diagram derived_zw(DerivedKind kind, int d) {
  switch (kind) {
    case DerivedKind::DownW:
      return down_w(d);
    case DerivedKind::BlackDot:
      return seq(cap(d), down_w(d));
    case DerivedKind::BlackCodot:
      return seq(w(d), cup(d));
    case DerivedKind::WhiteNoPhase:
      return white_spider(d, 1, 2);
    case DerivedKind::DownWhiteUnit:
      return white_spider(d, 1, 0);
  }
  throw DiagramError("unknown derived diagram");
}

Diagram white_spider(int d, int inputs, int outputs) {
  return z(d, inputs, outputs, PhaseVector::ones(d));
}

Diagram black_spider(int legs, int d, Orientation orientation) {
  if (legs < 1) throw DiagramError("black spider needs at least one leg");
  if (orientation == Orientation::Down) {
    return flip(black_spider(legs, d, Orientation::Up));
  }
  if (legs == 1) return id(d);
  Diagram out = w(d);
  for (int m = 3; m <= legs; ++m) {
    out = seq(out, par(w(d), identity_wires(d, m - 2)));
  }
  return out;
}

Diagram bend(const Diagram& f) {
  if (f.domain().size() != 1 || f.codomain().size() != 1) {
    throw DiagramError("bend expects a 1 -> 1 diagram");
  }
  const int in = f.domain()[0];
  const int out = f.codomain()[0];
  return seq({
      par(cap(in), id(out)),
      par({id(in), f, id(out)}),
      par(id(in), cup(out)),
  });
}

Diagram flip(const Diagram& d) {
  switch (d.shape()) {
    case Diagram::Shape::Seq:
      return seq(flip(d.second()), flip(d.first()));
    case Diagram::Shape::Par:
      return par(flip(d.first()), flip(d.second()));
    case Diagram::Shape::Leaf:
      break;
  }
  const Generator& g = d.generator();
  switch (g.kind()) {
    case GeneratorKind::ZSpider:
      return Diagram(
          Generator::z_spider(g.dim(), g.outputs(), g.inputs(), g.phase()));
    case GeneratorKind::W:
      return down_w(g.dim());
    case GeneratorKind::Swap:
      return Diagram(Generator::swap(g.second_dim(), g.dim()));
    case GeneratorKind::Cap:
      return cup(g.dim());
    case GeneratorKind::Cup:
      return cap(g.dim());
    case GeneratorKind::Triangle:
    case GeneratorKind::TriangleInv:
      return bend(d);
    case GeneratorKind::Binder:
      return Diagram(Generator::splitter(g.dim(), g.second_dim()));
    case GeneratorKind::Splitter:
      return Diagram(Generator::binder(g.dim(), g.second_dim()));
    default:
      // Empty, identity, braids and Hadamards have symmetric matrices.
      return d;
  }
}

Diagram scalar(int d, Complex c) {
  return z(d, 0, 0, PhaseVector::scalar(d, c));
}

Diagram x_spider(int d, int inputs, int outputs, int shift) {
  return par(
      scalar(d, 1.0 / d),
      seq({
          repeat_par(hadamard_dagger(d), inputs),
          z(d, inputs, outputs, PhaseVector::shift(d, shift)),
          repeat_par(hadamard(d), outputs),
      }));
}

Diagram red_tau(int d) {
  std::vector<double> tau;
  for (int k = 1; k < d; ++k) {
    tau.push_back(k * std::numbers::pi + k * k * std::numbers::pi / d);
  }
  return par(
      scalar(d, 1.0 / d),
      seq({hadamard_dagger(d), z(d, 1, 1, PhaseVector::from_angles(d, tau)),
           hadamard(d)}));
}

Diagram negation(int d) {
  return par(scalar(d, 1.0 / d), seq(hadamard(d), hadamard(d)));
}

}  // namespace zw
