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

#include "zw/translate.hpp"

#include "zw/derived.hpp"
#include "zw/semantics.hpp"

namespace zw {

namespace {

// ZX -> ZW.

// Bend the input of a crossing into a white unit and sum the left output
// away: what remains is sum_{j,k} xi^{+-jk} |j><k|.
Diagram hadamard_in_zw(int d, bool dagger) {
  return seq({
      par(white_spider(d, 0, 1), id(d)),
      dagger ? braid_inv(d) : braid(d),
      par(white_spider(d, 1, 0), id(d)),
  });
}

// W followed by a white effect on the right leg: |i> -> |i> + |0> for
// i != 0 (or |i> - |0> with phase -1).
Diagram triangle_in_zw(int d, bool inverse) {
  const PhaseVector effect =
      inverse ? PhaseVector::constant(d, -1.0) : PhaseVector::ones(d);
  return seq(w(d), par(id(d), z(d, 1, 0, effect)));
}

// ZW -> ZX.

Diagram w_in_zx(int d) {
  // Copy, push the left copy through a triangle, copy again, negate the
  // middle wire and add it to the right one.
  return seq({
      white_spider(d, 1, 2),
      par(triangle(d), id(d)),
      par(white_spider(d, 1, 2), id(d)),
      par({id(d), negation(d), id(d)}),
      par(id(d), x_spider(d, 2, 1, 0)),
  });
}

Diagram braid_in_zx(int d, bool inverse) {
  // Copy both inputs, join one copy of each through a Hadamard and a cup,
  // which produces the phase xi^{jk}, then swap.
  const Diagram copy = white_spider(d, 1, 2);
  return seq({
      par(copy, copy),
      par({id(d), inverse ? hadamard_dagger(d) : hadamard(d), id(d), id(d)}),
      par({id(d), cup(d), id(d)}),
      swap(d),
  });
}

bool is_common(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::Empty:
    case GeneratorKind::ZSpider:
    case GeneratorKind::Identity:
    case GeneratorKind::Swap:
    case GeneratorKind::Cap:
    case GeneratorKind::Cup:
      return true;
    default:
      return false;
  }
}

}  // namespace

std::string to_string(Direction dir) {
  return dir == Direction::XW ? "xw" : "wx";
}

Diagram translate_generator(const Generator& g, Direction dir) {
  if (is_common(g.kind())) {
    if (g.kind() == GeneratorKind::Swap && g.dim() != g.second_dim()) {
      throw TranslationError("mixed-dimension swap has no translation");
    }
    return Diagram(g);
  }
  const int d = g.dim();
  if (dir == Direction::XW) {
    switch (g.kind()) {
      case GeneratorKind::Hadamard:
        return hadamard_in_zw(d, false);
      case GeneratorKind::HadamardDagger:
        return hadamard_in_zw(d, true);
      case GeneratorKind::Triangle:
        return triangle_in_zw(d, false);
      case GeneratorKind::TriangleInv:
        return triangle_in_zw(d, true);
      default:
        break;
    }
  } else {
    switch (g.kind()) {
      case GeneratorKind::W:
        return w_in_zx(d);
      case GeneratorKind::Braid:
        return braid_in_zx(d, false);
      case GeneratorKind::BraidInv:
        return braid_in_zx(d, true);
      default:
        break;
    }
  }
  throw TranslationError(
      "no " + to_string(dir) + " translation for generator " +
      to_string(g.kind()));
}

Diagram translate(const Diagram& d, Direction dir) {
  switch (d.shape()) {
    case Diagram::Shape::Leaf:
      return translate_generator(d.generator(), dir);
    case Diagram::Shape::Seq:
      return seq(translate(d.first(), dir), translate(d.second(), dir));
    case Diagram::Shape::Par:
      return par(translate(d.first(), dir), translate(d.second(), dir));
  }
  throw DiagramError("unknown diagram shape");
}

VerificationReport check_preservation(
    const Diagram& d, Direction dir, double tol) {
  VerificationReport r;
  r.rule = "preserve-" + to_string(dir);
  r.dim = d.domain().empty()
              ? (d.codomain().empty() ? 0 : d.codomain()[0])
              : d.domain()[0];
  r.trials = 1;
  try {
    const Comparison c = approx_equal(interpret(translate(d, dir)), interpret(d), tol);
    r.pass = c.equal;
    r.max_deviation = c.max_deviation;
    r.error = c.reason;
  } catch (const DiagramError& e) {
    r.pass = false;
    r.error = e.what();
  }
  return r;
}

RoundTripReport round_trip_zx(const Diagram& d, double tol) {
  const Diagram back = to_zx(to_zw(d));
  const Comparison c = approx_equal(interpret(back), interpret(d), tol);
  return RoundTripReport{c.equal, equal_structural(back, d), c.max_deviation};
}

}  // namespace zw
