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

// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "support.hpp"
#include "zw/derived.hpp"
#include "zw/qufinite.hpp"
#include "zw/rules.hpp"
#include "zw/semantics.hpp"
#include "zw/text.hpp"
#include "zw/translate.hpp"

namespace {

using namespace zw;

constexpr double kTol = 1e-9;

// Frozen from the first oracle run (naive Kronecker evaluation agrees).
constexpr double kBialgebraD3 = 1.0;
constexpr double kBialgebraD4 = 2.0;

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome soundness() {
  const auto start = std::chrono::steady_clock::now();
  const auto reports = verify_all({2, 3, 4, 5}, VerifyOptions{20, kTol, 42, true});
  const double secs = std::chrono::duration<double>(
      std::chrono::steady_clock::now() - start).count();
  std::size_t passed = 0;
  double worst = 0.0;
  std::string first_failure;
  for (const auto& r : reports) {
    passed += r.pass;
    worst = std::max(worst, r.max_deviation);
    if (!r.pass && first_failure.empty()) first_failure = to_line(r);
  }
  std::ostringstream os;
  os << catalog().size() << " rules + " << lemma_catalog().size()
     << " lemma instances x 4 dims: " << passed << "/" << reports.size()
     << " pass, worst deviation " << worst << ", " << secs << " s";
  if (!first_failure.empty()) os << "; first failure: " << first_failure;
  return {passed == reports.size() && secs < 60.0, os.str()};
}

Outcome qubit_w() {
  const ComplexMatrix m = interpret(w(2));
  ComplexMatrix expect(4, 2);
  expect(0, 0) = expect(1, 1) = expect(2, 1) = 1.0;
  return {m == expect, "[[W]] at d=2 equals [[1,0],[0,1],[0,1],[0,0]]"};
}

Outcome bialgebra() {
  const double d3 = bialgebra_counterexample(3);
  const double d4 = bialgebra_counterexample(4);
  std::ostringstream os;
  os.precision(17);
  os << "deviation d=3 " << d3 << " (frozen " << kBialgebraD3 << "), d=4 " << d4
     << " (frozen " << kBialgebraD4 << "), d=2 " << bialgebra_counterexample(2);
  const bool pass = d3 > 0.1 && d4 > 0.1 && std::abs(d3 - kBialgebraD3) < kTol &&
                    std::abs(d4 - kBialgebraD4) < kTol;
  return {pass, os.str()};
}

Outcome preservation() {
  std::mt19937_64 rng(42);
  std::size_t checked = 0, passed = 0;
  for (int d = 2; d <= 5; ++d) {
    const std::vector<Generator> zx = {
        Generator::z_spider(d, 1, 2, random_phase(d, rng)),
        Generator::z_spider(d, 2, 0, random_phase(d, rng)),
        Generator::hadamard(d), Generator::hadamard_dagger(d),
        Generator::triangle(d), Generator::triangle_inverse(d),
        Generator::identity(d), Generator::swap(d), Generator::cap(d), Generator::cup(d)};
    const std::vector<Generator> zw = {
        Generator::z_spider(d, 2, 1, random_phase(d, rng)),
        Generator::z_spider(d, 0, 1, random_phase(d, rng)),
        Generator::w(d), Generator::braid(d), Generator::braid_inverse(d),
        Generator::identity(d), Generator::swap(d), Generator::cap(d), Generator::cup(d)};
    for (const auto& g : zx) {
      passed += check_preservation(Diagram(g), Direction::XW, kTol).pass;
      ++checked;
    }
    for (const auto& g : zw) {
      passed += check_preservation(Diagram(g), Direction::WX, kTol).pass;
      ++checked;
    }
  }
  const std::size_t generators = checked;
  for (int d : {2, 3}) {
    for (int i = 0; i < 200; ++i) {
      const Diagram a = oracle::random_diagram(oracle::Palette::ZX, d, 6, rng);
      const Diagram b = oracle::random_diagram(oracle::Palette::ZW, d, 6, rng);
      passed += check_preservation(a, Direction::XW, kTol).pass;
      passed += check_preservation(b, Direction::WX, kTol).pass;
      checked += 2;
    }
  }
  std::ostringstream os;
  os << passed << "/" << checked << " (" << generators
     << " generator cases, 800 random 6-generator composites)";
  return {passed == checked, os.str()};
}

Outcome round_trip() {
  std::mt19937_64 rng(43);
  std::size_t checked = 0, semantic = 0, structural_expected = 0, structural_ok = 0;
  for (int d = 2; d <= 5; ++d) {
    const std::vector<Generator> zx = {
        Generator::z_spider(d, 2, 1, random_phase(d, rng)),
        Generator::hadamard(d), Generator::hadamard_dagger(d),
        Generator::triangle(d), Generator::triangle_inverse(d),
        Generator::identity(d), Generator::swap(d), Generator::cap(d), Generator::cup(d)};
    for (const auto& g : zx) {
      const RoundTripReport r = round_trip_zx(Diagram(g), kTol);
      semantic += r.semantic;
      ++checked;
      const auto k = g.kind();
      if (k == GeneratorKind::ZSpider || k == GeneratorKind::Identity ||
          k == GeneratorKind::Swap || k == GeneratorKind::Cap || k == GeneratorKind::Cup) {
        ++structural_expected;
        structural_ok += r.structural;
      }
    }
  }
  for (int i = 0; i < 200; ++i) {
    const Diagram a = oracle::random_diagram(oracle::Palette::ZX, 2 + i % 2, 6, rng);
    semantic += round_trip_zx(a, kTol).semantic;
    ++checked;
  }
  std::ostringstream os;
  os << "semantic " << semantic << "/" << checked << ", structural " << structural_ok
     << "/" << structural_expected << " (spiders and common generators)";
  return {semantic == checked && structural_ok == structural_expected, os.str()};
}

Outcome qufinite() {
  bool exact = true;
  for (int s = 1; s <= 5; ++s) {
    for (int t = 1; t <= 5; ++t) {
      exact = exact && matmul(splitter_matrix(s, t), binder_matrix(s, t)) ==
                           ComplexMatrix::identity(static_cast<std::size_t>(s * t));
    }
  }
  const auto reports = verify_grid(qufinite_catalog(), {1, 2, 3}, kTol);
  std::size_t passed = 0;
  for (const auto& r : reports) passed += r.pass;
  std::ostringstream os;
  os << "splitter*binder = I exactly for s,t in 1..5: " << (exact ? "yes" : "no")
     << "; " << qufinite_catalog().size() << " rules over s,t,u in {1,2,3}: " << passed
     << "/" << reports.size();
  return {exact && passed == reports.size(), os.str()};
}

Outcome black_spiders() {
  std::size_t checked = 0, passed = 0;
  for (int d = 2; d <= 4; ++d) {
    for (int m = 1; m <= 5; ++m) {
      passed += oracle::max_diff(oracle::black_spider_formula(m, d),
                                 interpret(black_spider(m, d))) == 0.0;
      ++checked;
    }
  }
  std::ostringstream os;
  os << passed << "/" << checked << " (m in 1..5, d in 2..4, exact)";
  return {passed == checked, os.str()};
}

Outcome compact_structure() {
  std::size_t checked = 0, passed = 0;
  for (int d = 2; d <= 5; ++d) {
    const std::vector<std::pair<Diagram, Diagram>> eqs = {
        {seq(par(id(d), cap(d)), par(cup(d), id(d))), id(d)},
        {seq(par(cap(d), id(d)), par(id(d), cup(d))), id(d)},
        {seq(cap(d), swap(d)), cap(d)},
        {seq(swap(d), cup(d)), cup(d)},
    };
    for (const auto& [lhs, rhs] : eqs) {
      passed += approx_equal(interpret(lhs), interpret(rhs), kTol).equal;
      ++checked;
    }
  }
  std::ostringstream os;
  os << passed << "/" << checked << " (two snakes, cap and cup absorb the swap)";
  return {passed == checked, os.str()};
}

int run_cli(const std::string& text, std::string& err) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path();
  const fs::path term = dir / "zwcalc_acceptance.term";
  const fs::path errfile = dir / "zwcalc_acceptance.err";
  std::ofstream(term) << text;
  const std::string cmd = std::string("\"") + ZWCALC_CLI + "\" interpret --dim 3 \"" +
                          term.string() + "\" > /dev/null 2> \"" + errfile.string() + "\"";
  const int status = std::system(cmd.c_str());
  std::ifstream in(errfile);
  std::stringstream ss;
  ss << in.rdbuf();
  err = ss.str();
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome parser() {
  std::mt19937_64 rng(9);
  std::size_t round_trips = 0;
  for (int i = 0; i < 500; ++i) {
    const int d = 2 + i % 2;
    const auto palette = i % 4 < 2 ? oracle::Palette::ZW : oracle::Palette::ZX;
    const Diagram a = oracle::random_diagram(palette, d, 6, rng);
    round_trips += equal_structural(parse(print(a), d), a);
  }
  const std::vector<std::string> malformed = {
      "(seq (w) (id))", "", "(", "(w", "(w))", "(foo)", "(z 1 1 [1])",
      "(z 1 1 [1, 2, 3])", "(z 1 [])", "(z 1 1 [1+2])", "(par (w))",
      "(seq (cap) (w) (w))", "(bind 0 2)", "(z 1 1 [1 2])", "w", "(z 1 1 [nan, 1])",
  };
  std::size_t exit2 = 0;
  std::string bad;
  for (const auto& text : malformed) {
    std::string err;
    const int code = run_cli(text, err);
    if (code == 2 && err.find("position ") != std::string::npos) {
      ++exit2;
    } else if (bad.empty()) {
      bad = "'" + text + "' gave exit " + std::to_string(code);
    }
  }
  std::ostringstream os;
  os << "parse(print(D)) = D on " << round_trips << "/500; malformed inputs exiting 2 "
     << "with a position: " << exit2 << "/" << malformed.size();
  if (!bad.empty()) os << "; " << bad;
  return {round_trips == 500 && exit2 == malformed.size(), os.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Outcome (*)()>> criteria = {
      {"1 soundness sweep", soundness},
      {"2 qubit W node", qubit_w},
      {"3 no W-W bialgebra", bialgebra},
      {"4 translation preservation", preservation},
      {"5 round trip", round_trip},
      {"6 qufinite", qufinite},
      {"7 black spider closed form", black_spiders},
      {"8 compact structure", compact_structure},
      {"9 parser", parser},
  };
  bool all = true;
  for (const auto& [name, run] : criteria) {
    Outcome o{false, ""};
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << "criterion " << name << ": " << o.detail
              << std::endl;
  }
  return all ? 0 : 1;
}
