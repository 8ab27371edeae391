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

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "zw/diagram.hpp"

namespace zw {

/** Values for a rule's phase-vector slots, in slot order. */
using Assignment = std::vector<PhaseVector>;

/**
 * One instance of an equation. Every diagram in `via` is an intermediate
 * step of a derivation and must interpret to the same matrix as lhs and rhs.
 */
struct Equation {
  Diagram lhs;
  Diagram rhs;
  std::vector<Diagram> via;
};

/**
 * A named equation between two families of diagrams.
 *
 * `group` is a short tag for the rule family (braids, W node, spiders,
 * lemma) and `parameters` names the phase-vector slots that are drawn at
 * random during verification. Rules without parameters are deterministic.
 */
struct RewriteRule {
  std::string name;
  std::string group;
  std::vector<std::string> parameters;
  std::function<Equation(int d, const Assignment&)> build;
};

/** Lemmas have the same shape as rules. */
using Lemma = RewriteRule;

/** The ZW rewrite rules, in catalog order. */
const std::vector<RewriteRule>& catalog();
/** Derived ZW equations. The general Hopf law appears once per m = 2, 3, 4. */
const std::vector<Lemma>& lemma_catalog();

/** Looks a name up in both catalogs. */
std::optional<RewriteRule> find_rule(const std::string& name);

struct VerificationReport {
  std::string rule;
  int dim = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  bool pass = false;
  double max_deviation = 0.0;
  /** First assignment that exceeded the tolerance, rendered as text. */
  std::string failing_assignment;
  /** Construction error (for instance a signature mismatch), if any. */
  std::string error;
};

/**
 * Entry cap used by the verifier. Mirrored W nodes are built from caps and
 * cups, so some equations at d = 5 pass through ~2M-entry intermediates.
 */
inline constexpr std::size_t kVerifyMaxEntries = 8'000'000;

struct VerifyOptions {
  int trials = 20;
  double tol = 1e-9;
  std::uint64_t seed = 42;
  /** Run rule x dimension cells on a pool of worker threads. */
  bool parallel = true;
};

/** Seed of the random stream owned by one (rule, d) cell. */
std::uint64_t cell_seed(std::uint64_t seed, const std::string& rule, int d);

/** Random phase vector: modulus uniform in [0.5, 1.5], angle uniform. */
template <typename Rng>
PhaseVector random_phase(int d, Rng& rng);

/**
 * Checks a rule at dimension d. Parameterless rules run a single trial.
 * Construction errors are recorded in the report rather than thrown.
 */
VerificationReport verify(
    const RewriteRule& rule, int d, int trials = 20, double tol = 1e-9,
    std::uint64_t seed = 42);

/**
 * Runs verify over `rules` for every d in dims. Reports are ordered by rule,
 * then by dimension, regardless of `opts.parallel`.
 */
std::vector<VerificationReport> verify_all(
    const std::vector<RewriteRule>& rules, const std::vector<int>& dims,
    const VerifyOptions& opts = {});

/** catalog() followed by lemma_catalog(). */
std::vector<VerificationReport> verify_all(
    const std::vector<int>& dims, const VerifyOptions& opts = {});

/** Both sides of the W-W bialgebra equation at dimension d. */
Equation bialgebra_equation(int d);

/** Max entrywise deviation between the two sides of bialgebra_equation. */
double bialgebra_counterexample(int d);

/** One line per report: rule, d, pass, deviation, seed. */
std::string to_line(const VerificationReport& r);
/** JSON object with the report fields. */
std::string to_json(const VerificationReport& r);

}  // namespace zw

#include "zw/rules_impl.hpp"
