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

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "zw/matrix.hpp"
#include "zw/rules.hpp"

namespace zw {

/** sum_{k,l} |kt + l><kl|, the identity under big-endian ordering. */
ComplexMatrix binder_matrix(int s, int t);
/** sum_k |k / t>|k mod t><k|, the inverse of binder_matrix(s, t). */
ComplexMatrix splitter_matrix(int s, int t);

Diagram binder(int s, int t);
Diagram splitter(int s, int t);

/**
 * Equation over per-wire dimensions. `arity` says how many of (s, t, u) the
 * builder reads; the rest are ignored.
 */
struct QufiniteRule {
  std::string name;
  int arity = 2;
  std::function<Equation(int s, int t, int u)> build;
};

const std::vector<QufiniteRule>& qufinite_catalog();

struct QufiniteReport {
  std::string rule;
  int s = 0, t = 0, u = 0;
  bool pass = false;
  double max_deviation = 0.0;
  std::string error;
};

QufiniteReport verify(const QufiniteRule& rule, int s, int t, int u, double tol = 1e-9);

/** Every rule over every (s, t, u) drawn from `values`, up to the rule's arity. */
std::vector<QufiniteReport> verify_grid(
    const std::vector<QufiniteRule>& rules, const std::vector<int>& values,
    double tol = 1e-9);

std::string to_line(const QufiniteReport& r);

}  // namespace zw
