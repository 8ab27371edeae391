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

#include "zw/rules.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "zw/derived.hpp"
#include "zw/semantics.hpp"

namespace zw {

namespace {

Diagram dot(int d) { return derived_zw(DerivedKind::BlackDot, d); }
Diagram codot(int d) { return derived_zw(DerivedKind::BlackCodot, d); }
Diagram down_w(int d) { return derived_zw(DerivedKind::DownW, d); }
Diagram white(int d, int n, int m) { return white_spider(d, n, m); }

PhaseVector minus_ones(int d) { return PhaseVector::constant(d, -1.0); }

// Right partial trace of a 2 -> 2 diagram: the second wire is looped back
// up on the right.
Diagram right_trace(const Diagram& f, int d) {
  return seq({par(id(d), cap(d)), par(f, id(d)), par(id(d), cup(d))});
}

// Left partial trace: the first wire is looped back up on the left.
Diagram left_trace(const Diagram& f, int d) {
  return seq({par(cap(d), id(d)), par(id(d), f), par(cup(d), id(d))});
}

Diagram yang_baxter_lhs(const Diagram& b, int d) {
  return seq({par(b, id(d)), par(id(d), b), par(b, id(d))});
}

Diagram yang_baxter_rhs(const Diagram& b, int d) {
  return seq({par(id(d), b), par(b, id(d)), par(id(d), b)});
}

Diagram wnt1_lhs(int d) {
  return seq({par(w(d), id(d)), par(id(d), braid(d)), par(braid(d), id(d))});
}

Diagram wnt1_rhs(int d) { return seq(braid(d), par(id(d), w(d))); }

Diagram baw_lhs(int d) { return seq(white(d, 2, 1), w(d)); }

Diagram baw_rhs(int d) {
  return seq({
      par(w(d), w(d)),
      par({id(d), swap(d), id(d)}),
      par(white(d, 2, 1), white(d, 2, 1)),
  });
}

Diagram wbs_lhs(int d, bool inverse_first) {
  const Diagram outer = inverse_first ? braid_inv(d) : braid(d);
  const Diagram inner = inverse_first ? braid(d) : braid_inv(d);
  return seq({par(white(d, 1, 2), id(d)), par(id(d), outer), par(inner, id(d))});
}

Diagram wbs_rhs(int d) { return seq(swap(d), par(id(d), white(d, 1, 2))); }

Equation eq(Diagram lhs, Diagram rhs) {
  return Equation{std::move(lhs), std::move(rhs), {}};
}

std::vector<RewriteRule> build_catalog() {
  std::vector<RewriteRule> rules;
  auto add = [&](std::string name, std::string group,
                 std::vector<std::string> params,
                 std::function<Equation(int, const Assignment&)> build) {
    rules.push_back({std::move(name), std::move(group), std::move(params),
                     std::move(build)});
  };

  // Braids and naturality.
  add("Bd1", "braid", {}, [](int d, const Assignment&) {
    return eq(seq(braid(d), braid_inv(d)), identity_wires(d, 2));
  });
  add("Bd2", "braid", {}, [](int d, const Assignment&) {
    return eq(repeat_seq(braid(d), d), repeat_seq(swap(d), d));
  });
  add("Bd3", "braid", {}, [](int d, const Assignment&) {
    return eq(seq(braid_inv(d), braid(d)), identity_wires(d, 2));
  });
  add("Bd4", "braid", {}, [](int d, const Assignment&) {
    return eq(yang_baxter_lhs(braid(d), d), yang_baxter_rhs(braid(d), d));
  });
  add("Nat1", "braid", {}, [](int d, const Assignment&) {
    const Diagram i = id(d);
    return eq(
        seq({par(braid(d), i), par(i, braid(d)), par(swap(d), i)}),
        seq({par(i, swap(d)), par(braid(d), i), par(i, braid(d))}));
  });
  add("Nat2", "braid", {}, [](int d, const Assignment&) {
    const Diagram i = id(d);
    return eq(
        seq({par(swap(d), i), par(i, braid(d)), par(braid(d), i)}),
        seq({par(i, braid(d)), par(braid(d), i), par(i, swap(d))}));
  });
  add("Nat3", "braid", {}, [](int d, const Assignment&) {
    return eq(seq(par(dot(d), id(d)), braid(d)), par(id(d), dot(d)));
  });
  add("Nat4", "braid", {}, [](int d, const Assignment&) {
    return eq(seq(braid(d), par(id(d), codot(d))), par(codot(d), id(d)));
  });
  add("Nat5", "braid", {}, [](int d, const Assignment&) {
    return eq(
        seq({par(id(d), cap(d)), par(braid(d), id(d)),
             par(id(d), braid_inv(d))}),
        par(cap(d), id(d)));
  });
  add("Nat6", "braid", {}, [](int d, const Assignment&) {
    return eq(
        seq({par(id(d), braid_inv(d)), par(braid(d), id(d)),
             par(id(d), cup(d))}),
        par(cup(d), id(d)));
  });

  // W node.
  add("Syb", "w", {}, [](int d, const Assignment&) {
    return eq(seq(w(d), swap(d)), w(d));
  });
  add("Unt", "w", {}, [](int d, const Assignment&) {
    return eq(seq(w(d), par(id(d), codot(d))), id(d));
  });
  add("Aso", "w", {}, [](int d, const Assignment&) {
    return eq(seq(w(d), par(w(d), id(d))), seq(w(d), par(id(d), w(d))));
  });
  add("Cpy", "w", {}, [](int d, const Assignment&) {
    return eq(seq(dot(d), w(d)), par(dot(d), dot(d)));
  });
  add("Wnt1", "w", {}, [](int d, const Assignment&) {
    return eq(wnt1_lhs(d), wnt1_rhs(d));
  });
  add("Wnt2", "w", {}, [](int d, const Assignment&) {
    return eq(
        seq({par(id(d), w(d)), par(braid(d), id(d)), par(id(d), braid(d))}),
        seq(braid(d), par(w(d), id(d))));
  });
  add("Wsm", "w", {}, [](int d, const Assignment&) {
    return eq(seq(w(d), braid(d)), w(d));
  });
  add("Bsm", "w", {}, [](int d, const Assignment&) {
    return eq(seq(braid(d), swap(d)), seq(swap(d), braid(d)));
  });
  add("Ept", "w", {}, [](int d, const Assignment&) {
    return eq(seq(dot(d), codot(d)), Diagram());
  });
  add("Bhf", "w", {}, [](int d, const Assignment&) {
    return eq(
        seq({w(d), par(id(d), z(d, 1, 1, minus_ones(d))), down_w(d)}),
        seq(codot(d), dot(d)));
  });

  // White spiders and their interaction with W.
  add("S1", "spider", {"a", "b"}, [](int d, const Assignment& p) {
    return eq(
        seq(z(d, 2, 2, p[0]), par(id(d), z(d, 1, 2, p[1]))),
        z(d, 2, 3, p[0] * p[1]));
  });
  add("S2", "spider", {"a"}, [](int d, const Assignment& p) {
    return eq(seq(swap(d), z(d, 2, 1, p[0])), z(d, 2, 1, p[0]));
  });
  add("S3", "spider", {"a"}, [](int d, const Assignment& p) {
    return eq(
        seq(par(id(d), cap(d)), par(z(d, 2, 1, p[0]), id(d))),
        z(d, 1, 2, p[0]));
  });
  add("Wps", "spider", {}, [](int d, const Assignment&) {
    return eq(right_trace(braid(d), d), z(d, 1, 1, PhaseVector::braid_loop(d)));
  });
  add("Baw", "spider", {}, [](int d, const Assignment&) {
    return eq(baw_lhs(d), baw_rhs(d));
  });
  add("WBh", "spider", {}, [](int d, const Assignment&) {
    return eq(seq(w(d), white(d, 2, 1)), seq(codot(d), dot(d)));
  });
  add("WBs", "spider", {}, [](int d, const Assignment&) {
    return eq(wbs_lhs(d, false), wbs_rhs(d));
  });
  add("Pcp", "spider", {"a"}, [](int d, const Assignment& p) {
    return eq(
        seq(z(d, 1, 1, p[0]), w(d)),
        seq(w(d), par(z(d, 1, 1, p[0]), z(d, 1, 1, p[0]))));
  });
  add("AD", "spider", {"a", "b"}, [](int d, const Assignment& p) {
    return eq(
        seq({w(d), par(z(d, 1, 1, p[0]), z(d, 1, 1, p[1])), down_w(d)}),
        z(d, 1, 1, p[0] + p[1]));
  });
  add("Pcp2", "spider", {"a"}, [](int d, const Assignment& p) {
    return eq(seq(dot(d), z(d, 1, 2, p[0])), par(dot(d), dot(d)));
  });
  return rules;
}

std::vector<Lemma> build_lemmas() {
  std::vector<Lemma> lemmas;
  auto add = [&](std::string name, std::vector<std::string> params,
                 std::function<Equation(int, const Assignment&)> build) {
    lemmas.push_back(
        {std::move(name), "lemma", std::move(params), std::move(build)});
  };

  add("crossinv", {}, [](int d, const Assignment&) {
    // Bd2 turns d - 1 crossings plus d swaps into the inverse crossing.
    return eq(
        braid_inv(d),
        seq(repeat_seq(braid(d), d - 1), repeat_seq(swap(d), d)));
  });
  add("braidinv4", {}, [](int d, const Assignment&) {
    return eq(
        yang_baxter_lhs(braid_inv(d), d), yang_baxter_rhs(braid_inv(d), d));
  });
  add("braid_ptrace", {}, [](int d, const Assignment&) {
    return eq(left_trace(braid(d), d), z(d, 1, 1, PhaseVector::braid_loop(d)));
  });
  add("braid_ptrace2", {}, [](int d, const Assignment&) {
    return eq(
        right_trace(braid_inv(d), d),
        z(d, 1, 1, PhaseVector::braid_loop(d).conj()));
  });
  add("w_inv_braid_sym", {}, [](int d, const Assignment&) {
    // The inverse crossing is rewritten as d - 1 crossings (even d) or
    // d - 1 crossings and a swap (odd d); Wsm and Syb absorb each one.
    Equation e = eq(seq(w(d), braid_inv(d)), w(d));
    if (d % 2 == 0) {
      e.via.push_back(seq(w(d), repeat_seq(braid(d), d - 1)));
    } else {
      e.via.push_back(seq({w(d), repeat_seq(braid(d), d - 1), swap(d)}));
    }
    return e;
  });
  add("w_nat_flip", {}, [](int d, const Assignment&) {
    return eq(flip(wnt1_lhs(d)), flip(wnt1_rhs(d)));
  });
  add("white_downblack_bialg", {}, [](int d, const Assignment&) {
    return eq(flip(baw_lhs(d)), flip(baw_rhs(d)));
  });
  add("white_downblack_hopf", {}, [](int d, const Assignment&) {
    return eq(seq(white(d, 1, 2), down_w(d)), seq(codot(d), dot(d)));
  });
  add("white_black_inv_swap", {}, [](int d, const Assignment&) {
    return eq(wbs_lhs(d, true), wbs_rhs(d));
  });
  add("braid_loop_phase", {"a"}, [](int d, const Assignment& p) {
    return eq(
        seq(z(d, 2, 2, p[0]), par(id(d), right_trace(braid(d), d))),
        z(d, 2, 2, p[0] * PhaseVector::braid_loop(d)));
  });
  add("addition_two_blacks", {"a", "b", "c"},
      [](int d, const Assignment& p) {
        return eq(
            seq({
                black_spider(3, d),
                par({z(d, 1, 1, p[0]), z(d, 1, 1, p[1]), z(d, 1, 1, p[2])}),
                black_spider(3, d, Orientation::Down),
            }),
            z(d, 1, 1, p[0] + p[1] + p[2]));
      });
  add("black_dot_copy", {}, [](int d, const Assignment&) {
    return eq(
        seq(dot(d), black_spider(3, d)), par({dot(d), dot(d), dot(d)}));
  });
  for (int m = 2; m <= 4; ++m) {
    add("general_hopf_m" + std::to_string(m), {},
        [m](int d, const Assignment&) {
          return eq(
              seq(black_spider(m, d), white(d, m, 1)), seq(codot(d), dot(d)));
        });
  }
  return lemmas;
}

std::string render(const Assignment& params, const std::vector<std::string>& names) {
  std::ostringstream os;
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) os << " ";
    os << names[i] << "=" << params[i].to_string();
  }
  return os.str();
}

}  // namespace

const std::vector<RewriteRule>& catalog() {
  static const std::vector<RewriteRule> rules = build_catalog();
  return rules;
}

const std::vector<Lemma>& lemma_catalog() {
  static const std::vector<Lemma> lemmas = build_lemmas();
  return lemmas;
}

std::optional<RewriteRule> find_rule(const std::string& name) {
  for (const auto* list : {&catalog(), &lemma_catalog()}) {
    for (const auto& r : *list) {
      if (r.name == name) return r;
    }
  }
  return std::nullopt;
}

std::uint64_t cell_seed(std::uint64_t seed, const std::string& rule, int d) {
  // FNV-1a over the rule name, then splitmix-style mixing with seed and d.
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : rule) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::uint64_t x = seed ^ (h + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(d + 1));
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

VerificationReport verify(
    const RewriteRule& rule, int d, int trials, double tol,
    std::uint64_t seed) {
  if (d < 2) throw DiagramError("verify needs d >= 2");
  if (trials < 1) throw DiagramError("verify needs at least one trial");
  VerificationReport report;
  report.rule = rule.name;
  report.dim = d;
  report.seed = cell_seed(seed, rule.name, d);
  report.trials = rule.parameters.empty() ? 1 : trials;
  report.pass = true;

  std::mt19937_64 rng(report.seed);
  for (int t = 0; t < report.trials; ++t) {
    Assignment params;
    for (std::size_t i = 0; i < rule.parameters.size(); ++i) {
      params.push_back(random_phase(d, rng));
    }
    try {
      const Equation e = rule.build(d, params);
      const InterpretOptions io{kVerifyMaxEntries};
      const ComplexMatrix lhs = interpret(e.lhs, io);
      std::vector<ComplexMatrix> others{interpret(e.rhs, io)};
      for (const auto& v : e.via) others.push_back(interpret(v, io));
      for (const auto& other : others) {
        const Comparison c = approx_equal(lhs, other, tol);
        report.max_deviation = std::max(report.max_deviation, c.max_deviation);
        if (!c.equal && report.pass) {
          report.pass = false;
          report.failing_assignment =
              params.empty() ? "(none)" : render(params, rule.parameters);
          if (!c.reason.empty()) report.error = c.reason;
        }
      }
    } catch (const DiagramError& err) {
      report.pass = false;
      report.error = err.what();
      report.failing_assignment =
          params.empty() ? "(none)" : render(params, rule.parameters);
      break;
    }
  }
  return report;
}

std::vector<VerificationReport> verify_all(
    const std::vector<RewriteRule>& rules, const std::vector<int>& dims,
    const VerifyOptions& opts) {
  std::vector<VerificationReport> out;
  out.reserve(rules.size() * dims.size());
  if (!opts.parallel) {
    for (const auto& r : rules) {
      for (int d : dims) out.push_back(verify(r, d, opts.trials, opts.tol, opts.seed));
    }
    return out;
  }
  // Each cell owns its random stream, so the schedule cannot change results.
  const std::size_t cells = rules.size() * dims.size();
  out.resize(cells);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells; i = next++) {
      out[i] = verify(rules[i / dims.size()], dims[i % dims.size()],
                      opts.trials, opts.tol, opts.seed);
    }
  };
  const std::size_t n = std::min<std::size_t>(
      cells, std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return out;
}

std::vector<VerificationReport> verify_all(
    const std::vector<int>& dims, const VerifyOptions& opts) {
  std::vector<RewriteRule> all = catalog();
  const auto& lemmas = lemma_catalog();
  all.insert(all.end(), lemmas.begin(), lemmas.end());
  return verify_all(all, dims, opts);
}

Equation bialgebra_equation(int d) {
  // Two W nodes on top, two upside-down W nodes below, middle wires crossed.
  return eq(
      seq({par(w(d), w(d)), par({id(d), braid(d), id(d)}),
           par(down_w(d), down_w(d))}),
      seq(down_w(d), w(d)));
}

double bialgebra_counterexample(int d) {
  const Equation e = bialgebra_equation(d);
  const InterpretOptions io{kVerifyMaxEntries};
  return approx_equal(interpret(e.lhs, io), interpret(e.rhs, io)).max_deviation;
}

std::string to_line(const VerificationReport& r) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific;
  os << (r.pass ? "PASS " : "FAIL ") << r.rule << " d=" << r.dim
     << " trials=" << r.trials << " max_dev=" << r.max_deviation
     << " seed=" << r.seed;
  if (!r.pass) {
    if (!r.failing_assignment.empty()) os << " params: " << r.failing_assignment;
    if (!r.error.empty()) os << " error: " << r.error;
  }
  return os.str();
}

std::string to_json(const VerificationReport& r) {
  nlohmann::json j = {
      {"rule", r.rule},       {"d", r.dim},
      {"trials", r.trials},   {"seed", r.seed},
      {"pass", r.pass},       {"max_deviation", r.max_deviation},
  };
  if (!r.failing_assignment.empty()) j["failing_assignment"] = r.failing_assignment;
  if (!r.error.empty()) j["error"] = r.error;
  return j.dump();
}

}  // namespace zw
