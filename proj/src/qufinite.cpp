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

#include "zw/qufinite.hpp"

#include <limits>
#include <sstream>

#include "zw/derived.hpp"
#include "zw/semantics.hpp"

namespace zw {

namespace {

Diagram wire(int s) { return id(s); }

// A dimension-1 wire carries C^1, so the white effect on it is the 1x1
// matrix [1] and closes the wire without changing anything.
Diagram close_trivial() { return white_spider(1, 1, 0); }

std::vector<QufiniteRule> build_rules() {
  std::vector<QufiniteRule> rules;
  rules.push_back({"binder_unitary_1", 2, [](int s, int t, int) {
                     return Equation{seq(binder(s, t), splitter(s, t)),
                                     par(wire(s), wire(t)), {}};
                   }});
  rules.push_back({"binder_unitary_2", 2, [](int s, int t, int) {
                     return Equation{seq(splitter(s, t), binder(s, t)),
                                     wire(s * t), {}};
                   }});
  rules.push_back({"binder_assoc", 3, [](int s, int t, int u) {
                     return Equation{
                         seq(par(binder(s, t), wire(u)), binder(s * t, u)),
                         seq(par(wire(s), binder(t, u)), binder(s, t * u)),
                         {}};
                   }});
  rules.push_back({"binder_wspider", 2, [](int s, int t, int) {
                     // Copying both halves and binding each pair copies the
                     // bound wire.
                     return Equation{
                         seq({
                             par(white_spider(s, 1, 2), white_spider(t, 1, 2)),
                             par({wire(s), Diagram(Generator::swap(s, t)), wire(t)}),
                             par(binder(s, t), binder(s, t)),
                         }),
                         seq(binder(s, t), white_spider(s * t, 1, 2)),
                         {}};
                   }});
  rules.push_back({"binder_with1_right", 1, [](int s, int, int) {
                     return Equation{binder(s, 1), par(wire(s), close_trivial()), {}};
                   }});
  rules.push_back({"binder_with1_left", 1, [](int s, int, int) {
                     return Equation{binder(1, s), par(close_trivial(), wire(s)), {}};
                   }});
  return rules;
}

}  // namespace

ComplexMatrix binder_matrix(int s, int t) {
  return generator_matrix(Generator::binder(s, t));
}

ComplexMatrix splitter_matrix(int s, int t) {
  return generator_matrix(Generator::splitter(s, t));
}

Diagram binder(int s, int t) { return Diagram(Generator::binder(s, t)); }
Diagram splitter(int s, int t) { return Diagram(Generator::splitter(s, t)); }

const std::vector<QufiniteRule>& qufinite_catalog() {
  static const std::vector<QufiniteRule> rules = build_rules();
  return rules;
}

QufiniteReport verify(const QufiniteRule& rule, int s, int t, int u, double tol) {
  QufiniteReport r{rule.name, s, rule.arity >= 2 ? t : 0,
                   rule.arity >= 3 ? u : 0, false, 0.0, {}};
  try {
    const Equation e = rule.build(s, t, u);
    if (e.lhs.domain() != e.rhs.domain() || e.lhs.codomain() != e.rhs.codomain()) {
      r.max_deviation = std::numeric_limits<double>::infinity();
      r.error = "sides have different signatures";
      return r;
    }
    const Comparison c = approx_equal(interpret(e.lhs), interpret(e.rhs), tol);
    r.pass = c.equal;
    r.max_deviation = c.max_deviation;
    r.error = c.reason;
  } catch (const DiagramError& err) {
    r.error = err.what();
  }
  return r;
}

std::vector<QufiniteReport> verify_grid(
    const std::vector<QufiniteRule>& rules, const std::vector<int>& values,
    double tol) {
  std::vector<QufiniteReport> out;
  for (const auto& rule : rules) {
    const std::vector<int> unused{1};
    const auto& ts = rule.arity >= 2 ? values : unused;
    const auto& us = rule.arity >= 3 ? values : unused;
    for (int s : values) {
      for (int t : ts) {
        for (int u : us) out.push_back(verify(rule, s, t, u, tol));
      }
    }
  }
  return out;
}

std::string to_line(const QufiniteReport& r) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific;
  os << (r.pass ? "PASS " : "FAIL ") << r.rule << " s=" << r.s;
  if (r.t) os << " t=" << r.t;
  if (r.u) os << " u=" << r.u;
  os << " max_dev=" << r.max_deviation;
  if (!r.error.empty()) os << " error: " << r.error;
  return os.str();
}

}  // namespace zw
