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

// Command-line front end: interpret, verify, translate, roundtrip and
// counterexample. Exit codes: 0 success, 1 verification failure, 2 usage,
// parse or type error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zw/qufinite.hpp"
#include "zw/rules.hpp"
#include "zw/semantics.hpp"
#include "zw/text.hpp"
#include "zw/translate.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(
        std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

zw::Diagram load(const std::string& path, int d) {
  return zw::parse(read_input(path), d);
}

int cmd_interpret(const std::string& file, int d, const std::string& calculus,
                  std::size_t max_entries) {
  const zw::Diagram diagram = load(file, d);
  if (calculus == "zw" && !zw::uses_only(diagram, zw::Calculus::ZW)) {
    throw UsageError("diagram uses generators outside the ZW-calculus");
  }
  if (calculus == "zx" && !zw::uses_only(diagram, zw::Calculus::ZX)) {
    throw UsageError("diagram uses generators outside the ZX-calculus");
  }
  zw::InterpretOptions opts;
  opts.max_entries = max_entries;
  zw::write_matrix(std::cout, zw::interpret(diagram, opts));
  return kOk;
}

int cmd_verify(const std::vector<int>& dims, const zw::VerifyOptions& opts,
               const std::vector<std::string>& names, bool lemmas,
               bool qufinite, bool json) {
  std::vector<zw::RewriteRule> rules;
  if (names.empty()) {
    rules = zw::catalog();
    if (lemmas) {
      rules.insert(rules.end(), zw::lemma_catalog().begin(), zw::lemma_catalog().end());
    }
  } else {
    for (const auto& n : names) {
      auto r = zw::find_rule(n);
      if (!r) throw UsageError("unknown rule '" + n + "'");
      rules.push_back(*r);
    }
  }
  for (int d : dims) {
    if (d < 2) throw UsageError("--dims entries must be >= 2");
  }
  std::size_t passed = 0, total = 0;
  for (const auto& r : zw::verify_all(rules, dims, opts)) {
    std::cout << (json ? zw::to_json(r) : zw::to_line(r)) << "\n";
    passed += r.pass;
    ++total;
  }
  if (qufinite) {
    for (const auto& r : zw::verify_grid(zw::qufinite_catalog(), {1, 2, 3}, opts.tol)) {
      if (!json) std::cout << zw::to_line(r) << "\n";
      passed += r.pass;
      ++total;
    }
  }
  if (!json) std::cout << "summary: " << passed << "/" << total << " passed\n";
  return passed == total ? kOk : kFailed;
}

int cmd_translate(const std::string& file, int d, const std::string& direction) {
  const zw::Diagram diagram = load(file, d);
  const zw::Direction dir =
      direction == "xw" ? zw::Direction::XW : zw::Direction::WX;
  std::cout << zw::print(zw::translate(diagram, dir)) << "\n";
  return kOk;
}

int cmd_roundtrip(const std::string& file, int d, double tol) {
  const zw::Diagram diagram = load(file, d);
  if (!zw::uses_only(diagram, zw::Calculus::ZX)) {
    throw UsageError("roundtrip expects a ZX diagram");
  }
  const zw::RoundTripReport r = zw::round_trip_zx(diagram, tol);
  std::cout << "semantic: " << (r.semantic ? "pass" : "fail")
            << " max_dev=" << r.max_deviation << "\n"
            << "structural: " << (r.structural ? "pass" : "fail") << "\n";
  return r.semantic ? kOk : kFailed;
}

int cmd_counterexample(int d) {
  std::cout.precision(17);
  std::cout << "bialgebra d=" << d
            << " max_dev=" << zw::bialgebra_counterexample(d) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Qudit ZW/ZX diagram interpreter and rule verifier"};
  app.require_subcommand(1);

  int dim = 2;
  std::string file;
  std::string calculus = "any";
  std::size_t max_entries = zw::InterpretOptions{}.max_entries;
  auto* interpret = app.add_subcommand("interpret", "Print the matrix of a diagram");
  interpret->add_option("--dim", dim, "Wire dimension")->required()->check(CLI::PositiveNumber);
  interpret->add_option("--calculus", calculus, "Restrict the generator set")
      ->check(CLI::IsMember({"zw", "zx", "any"}));
  interpret->add_option("--max-entries", max_entries, "Entry cap for intermediates");
  interpret->add_option("file", file, "Diagram file, - for stdin")->required();

  std::vector<int> dims{2, 3, 4, 5};
  zw::VerifyOptions vopts;
  std::vector<std::string> names;
  bool lemmas = false, qufinite = false, json = false, serial = false;
  auto* verify = app.add_subcommand("verify", "Check rewrite rules numerically");
  verify->add_option("--dims", dims, "Dimensions")->delimiter(',');
  verify->add_option("--trials", vopts.trials, "Random trials per cell")->check(CLI::PositiveNumber);
  verify->add_option("--tol", vopts.tol, "Entrywise tolerance");
  verify->add_option("--seed", vopts.seed, "Global seed");
  verify->add_option("--rules", names, "Rule or lemma names")->delimiter(',');
  verify->add_flag("--lemmas", lemmas, "Include the lemma catalog");
  verify->add_flag("--qufinite", qufinite, "Include the mixed-dimension rules");
  verify->add_flag("--json", json, "One JSON object per cell");
  verify->add_flag("--serial", serial, "Do not use worker threads");

  std::string direction;
  auto* translate = app.add_subcommand("translate", "Translate between ZX and ZW");
  translate->add_option("--dim", dim, "Wire dimension")->required()->check(CLI::Range(2, 64));
  translate->add_option("--direction", direction, "xw (ZX to ZW) or wx (ZW to ZX)")
      ->required()
      ->check(CLI::IsMember({"xw", "wx"}));
  translate->add_option("file", file, "Diagram file, - for stdin")->required();

  double tol = 1e-9;
  auto* roundtrip = app.add_subcommand("roundtrip", "ZX to ZW to ZX comparison");
  roundtrip->add_option("--dim", dim, "Wire dimension")->required()->check(CLI::Range(2, 64));
  roundtrip->add_option("--tol", tol, "Entrywise tolerance");
  roundtrip->add_option("file", file, "Diagram file, - for stdin")->required();

  auto* counter = app.add_subcommand("counterexample", "W-W bialgebra deviation");
  counter->add_option("--dim", dim, "Wire dimension")->required()->check(CLI::Range(2, 64));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*interpret) return cmd_interpret(file, dim, calculus, max_entries);
    if (*verify) {
      vopts.parallel = !serial;
      return cmd_verify(dims, vopts, names, lemmas, qufinite, json);
    }
    if (*translate) return cmd_translate(file, dim, direction);
    if (*roundtrip) return cmd_roundtrip(file, dim, tol);
    if (*counter) return cmd_counterexample(dim);
  } catch (const zw::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const zw::DiagramError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
