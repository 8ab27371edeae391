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

#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"
#include "zw/derived.hpp"
#include "zw/qufinite.hpp"
#include "zw/semantics.hpp"

namespace zw {
namespace test_qufinite {

SCENARIO("Binder and splitter matrices") {
  GIVEN("The worked cases") {
    CHECK(binder_matrix(2, 3) == ComplexMatrix::identity(6));
    CHECK(binder_matrix(1, 4) == ComplexMatrix::identity(4));
    CHECK(binder_matrix(3, 1) == ComplexMatrix::identity(3));
    CHECK(splitter_matrix(1, 5) == ComplexMatrix::identity(5));
    // k = 3 with t = 2 splits into |1>|1>.
    const ComplexMatrix sp = splitter_matrix(2, 2);
    CHECK(sp(1 * 2 + 1, 3) == Complex(1.0));
  }
  GIVEN("Every small pair") {
    for (int s = 1; s <= 5; ++s) {
      for (int t = 1; t <= 5; ++t) {
        const auto i = ComplexMatrix::identity(static_cast<std::size_t>(s * t));
        CHECK(matmul(splitter_matrix(s, t), binder_matrix(s, t)) == i);
        CHECK(matmul(binder_matrix(s, t), splitter_matrix(s, t)) == i);
        CHECK(oracle::max_diff(oracle::generator(Generator::binder(s, t)),
                               binder_matrix(s, t)) == 0.0);
        CHECK(oracle::max_diff(oracle::generator(Generator::splitter(s, t)),
                               splitter_matrix(s, t)) == 0.0);
      }
    }
  }
}

SCENARIO("Mixed-dimension interpretation shapes") {
  const Diagram d = par(binder(2, 3), id(4));
  CHECK(d.domain() == WireSignature{2, 3, 4});
  CHECK(d.codomain() == WireSignature{6, 4});
  const ComplexMatrix m = interpret(d);
  CHECK(m.rows() == 24);
  CHECK(m.cols() == 24);
  const Diagram mixed = seq(Diagram(Generator::swap(2, 3)), par(id(3), id(2)));
  CHECK(mixed.codomain() == WireSignature{3, 2});
  CHECK(interpret(mixed).rows() == 6);
  // A swap of a qubit and a qutrit agrees with the oracle.
  CHECK(oracle::max_diff(oracle::generator(Generator::swap(2, 3)),
                         interpret(Diagram(Generator::swap(2, 3)))) == 0.0);
}

SCENARIO("The mixed-dimension rules") {
  const auto& rules = qufinite_catalog();
  std::vector<std::string> names;
  for (const auto& r : rules) names.push_back(r.name);
  CHECK(names == std::vector<std::string>{
                     "binder_unitary_1", "binder_unitary_2", "binder_assoc",
                     "binder_wspider", "binder_with1_right", "binder_with1_left"});

  GIVEN("The (s, t, u) grid") {
    for (const auto& r : verify_grid(rules, {1, 2, 3})) {
      INFO(to_line(r));
      CHECK(r.pass);
    }
    CHECK(verify_grid(rules, {1, 2, 3}).size() == 9 + 9 + 27 + 9 + 3 + 3);
  }
  GIVEN("Unitarity for s, t up to 4") {
    for (int s = 1; s <= 4; ++s) {
      for (int t = 1; t <= 4; ++t) {
        CHECK(verify(rules[0], s, t, 1).pass);
        CHECK(verify(rules[1], s, t, 1).pass);
      }
    }
  }
  GIVEN("The copy rule at (2, 3) against the naive oracle") {
    const Equation e = rules[3].build(2, 3, 1);
    CHECK(oracle::max_diff(oracle::evaluate(e.lhs), oracle::evaluate(e.rhs)) == 0.0);
    CHECK(verify(rules[3], 2, 3, 1).pass);
  }
  GIVEN("A wrong binder order is caught") {
    QufiniteRule wrong{"wrong", 2, [](int s, int t, int) {
                         return Equation{binder(s, t), seq(Diagram(Generator::swap(s, t)),
                                                           binder(t, s)), {}};
                       }};
    CHECK_FALSE(verify(wrong, 2, 3, 1).pass);
    // Different codomains are reported, not thrown.
    QufiniteRule typed{"typed", 2, [](int s, int t, int) {
                         return Equation{binder(s, t), par(id(s), id(t)), {}};
                       }};
    CHECK_FALSE(verify(typed, 2, 3, 1).pass);
  }
}

}  // namespace test_qufinite
}  // namespace zw
