// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"

using namespace tnorm;
using Kind = PositivitySign::Kind;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const std::vector<oracle::CorpusEntry>& corpus() {
  static const auto c = oracle::certified_corpus(100, 20261014);
  return c;
}

OrderElement random_element(std::mt19937_64& rng, std::size_t k, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  OrderElement e{IntVector(k)};
  for (auto& x : e.coords) x = d(rng);
  return e;
}

Outcome three_way_trace() {
  auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(1);
  std::size_t checked = 0;
  for (const auto& entry : corpus()) {
    if (entry.order.certificate().status != Irreducibility::Irreducible) return {false, "uncertified order"};
    for (int i = 0; i < 20; ++i) {
      OrderElement a = random_element(rng, entry.order.degree(), 10);
      Integer by_mult = trace_via_mult(entry.order, a);
      Integer by_newton = trace_via_newton(entry.order, a);
      Integer by_embed;
      try {
        by_embed = trace_via_embeddings(entry.order, a, 1e-8);
      } catch (const Error& e) {
        return {false, std::string(e.what()) + " on " + entry.matrix.to_string()};
      }
      if (by_mult != by_newton || by_mult != by_embed)
        return {false, "disagreement on " + entry.matrix.to_string() + " element " + format_list(a.coords)};
      ++checked;
    }
  }
  double elapsed = seconds_since(t0);
  return {elapsed < 10.0, std::to_string(checked) + " elements, " + std::to_string(elapsed) + " s (limit 10 s)"};
}

Outcome newton_identity() {
  for (const auto& entry : corpus()) {
    IntVector sums = newton_power_sums(char_poly(entry.matrix), 10);
    for (std::size_t j = 0; j <= 10; ++j)
      if (sums[j] != oracle::trace_of_power(entry.matrix, j))
        return {false, entry.matrix.to_string() + " j=" + std::to_string(j)};
  }
  return {true, "100 matrices, j <= 10"};
}

Outcome linearity() {
  std::mt19937_64 rng(3);
  std::size_t checks = 0;
  for (const auto& entry : corpus()) {
    for (int pair = 0; pair < 10; ++pair) {
      OrderElement a = random_element(rng, entry.order.degree(), 10);
      OrderElement b = random_element(rng, entry.order.degree(), 10);
      Integer ta = trace_via_mult(entry.order, a), tb = trace_via_mult(entry.order, b);
      for (long p = -5; p <= 5; ++p)
        for (long q = -5; q <= 5; ++q) {
          OrderElement c{add(scale(Integer(p), a.coords), scale(Integer(q), b.coords))};
          if (trace_via_mult(entry.order, c) != p * ta + q * tb) return {false, entry.matrix.to_string()};
          ++checks;
        }
    }
  }
  return {true, std::to_string(checks) + " exact checks"};
}

Outcome unimodular_invariance() {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<std::size_t> pick(0, corpus().size() - 1);
  for (int i = 0; i < 50; ++i) {
    const auto& entry = corpus()[pick(rng)];
    IntMatrix m = mult_matrix(entry.order, random_element(rng, entry.order.degree(), 10));
    auto [u, u_inv] = oracle::random_unimodular(rng, m.size(), 15);
    if (!(u * u_inv == IntMatrix::identity(m.size()))) return {false, "bad inverse"};
    if ((u * m * u_inv).trace() != m.trace()) return {false, "trace changed for " + m.to_string()};
  }
  return {true, "50 conjugations"};
}

Outcome cone_axioms() {
  for (auto t : {make_vector({2, 3}), make_vector({3, 1, 3}), make_vector({4, 1, 3, 7})}) {
    if (auto bad = cone_axiom_check(ConeDescription{TraceFunctional{t}}, 3, 4))
      return {false, "counterexample for t=" + format_list(t) + " at " + format_list(bad->first.z)};
  }
  return {true, "0 counterexamples, radius 3, scale 4"};
}

Outcome perron_fixture() {
  const double expected = (3 + std::sqrt(5.0)) / 2;
  PerronData d = perron_data(IntMatrix{{2, 1}, {1, 1}}, 1e-12, 100000);
  if (std::fabs(d.lambda - expected) > 1e-9 || std::fabs(d.lambda - 2.618033988750) > 1e-9)
    return {false, "lambda = " + std::to_string(d.lambda)};
  for (const auto& entry : corpus()) {
    PerronData p = perron_data(entry.matrix, 1e-12, 100000);
    int self = 0;
    for (const auto& r : complex_roots(char_poly(entry.matrix))) {
      if (std::abs(r - static_cast<long double>(p.lambda)) < 1e-8L) {
        ++self;
        continue;
      }
      if (!(std::abs(r) < p.lambda)) return {false, "root not dominated for " + entry.matrix.to_string()};
    }
    if (self != 1) return {false, "lambda not a simple root for " + entry.matrix.to_string()};
  }
  return {true, "lambda = 2.61803398875, dominance on 100 matrices"};
}

Outcome singularity_identities() {
  std::size_t total = 0;
  for (long g : {2L, 3L}) {
    std::set<std::vector<long>> expected;
    for (auto parts : oracle::partitions(4 * g - 4)) {
      for (auto& p : parts) p += 2;
      std::sort(parts.begin(), parts.end());
      expected.insert(parts);
    }
    const long max_value = 4 * g;
    const std::size_t max_len = static_cast<std::size_t>(4 * g - 3);
    std::vector<long> cur;
    bool agree = true;
    std::function<void(long)> walk = [&](long lo) {
      bool ok = true;
      try {
        validate_singularity_data(g, SingularityData{cur});
      } catch (const Error&) {
        ok = false;
      }
      if (ok != (expected.count(cur) == 1)) agree = false;
      ++total;
      if (cur.size() == max_len) return;
      for (long v = lo; v <= max_value; ++v) {
        cur.push_back(v);
        walk(v);
        cur.pop_back();
      }
    };
    walk(1);
    if (!agree) return {false, "validator disagrees with partitions for g=" + std::to_string(g)};
    try {
      validate_singularity_data(g, SingularityData{{4 * g - 2}});
      validate_singularity_data(g, SingularityData{std::vector<long>(static_cast<std::size_t>(4 * g - 4), 3)});
    } catch (const Error& e) {
      return {false, e.what()};
    }
  }
  return {true, std::to_string(total) + " multisets against the partition enumerator"};
}

Outcome rank_formula() {
  for (long g = 2; g <= 10; ++g)
    for (long m = 1; m <= 4 * g - 4; ++m)
      if (h2_rank(g, m) != 2 * g + m - 1) return {false, "g=" + std::to_string(g) + " m=" + std::to_string(m)};
  return {true, "g in [2,10], m in [1,4g-4]"};
}

Outcome dim_group_coherence() {
  for (const IntMatrix& a : {IntMatrix{{1, 1}, {1, 0}}, IntMatrix{{2, 1}, {1, 1}}}) {
    auto g = make_dim_group(a);
    for (long x = -3; x <= 3; ++x)
      for (long y = -3; y <= 3; ++y)
        for (std::size_t stage = 0; stage <= 4; ++stage) {
          DimGroupElement e{make_vector({x, y}), stage};
          auto s = is_positive(g, e);
          if (s.kind == Kind::Undecided) return {false, "undecided " + format_list(e.v)};
          for (std::size_t n = stage; n <= 4; ++n)
            if (is_positive(g, telescope(g, e, n)).kind != s.kind)
              return {false, "telescoping changed the sign of " + format_list(e.v)};
        }
    if (is_positive(g, order_unit(g)).kind != Kind::Positive) return {false, "order unit not positive"};
  }
  return {true, "v in [-3,3]^2, stages <= 4, both matrices"};
}

Outcome desk_theorem_instance() {
  auto t0 = std::chrono::steady_clock::now();
  IntMatrix companion{{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 1, 1, 1}};
  auto b = build_bundle(2, SingularityData{{6}}, companion);
  auto r = fiber_class_report(b, HomologyClass{make_vector({0, 2, 0, 0})});
  double elapsed = seconds_since(t0);
  bool ok = r.norm_at_fiber == 2 && r.thurston_fiber_target == 2 * b.genus() - 2 && r.discrepancy == 0 &&
            r.gromov_value && *r.gromov_value == 4 && r.dual_euler_value == 2 && elapsed < 1.0;
  return {ok, "N = " + r.norm_at_fiber.get_str() + ", discrepancy = " + r.discrepancy.get_str() +
                  ", gromov = " + (r.gromov_value ? r.gromov_value->get_str() : "-") +
                  ", dual_euler = " + std::to_string(r.dual_euler_value) + ", " + std::to_string(elapsed) + " s"};
}

struct Run {
  std::string out;
  int exit_code;
};

Run run_cli(const std::string& args) {
  std::string cmd = std::string(TNORM_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r{{}, -1};
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Outcome cli_determinism() {
  const std::string data = TNORM_DATA_DIR;
  struct Case {
    std::string args;
    int exit_code;
  };
  const std::vector<Case> cases = {
      {"charpoly --input " + data + "/golden.txt", 0},
      {"perron --input " + data + "/golden.txt", 0},
      {"perron --input " + data + "/tribonacci.txt --tol 1e-13", 0},
      {"trace --input " + data + "/golden.txt --element [1,1]", 0},
      {"trace --input " + data + "/tribonacci.txt --element [0,0,1]", 0},
      {"norm --input " + data + "/golden.txt --class [1,1]", 0},
      {"cone --input " + data + "/golden.txt --class [1,0] --box 3", 0},
      {"validate --input " + data + "/fourbonacci_bundle.txt", 0},
      {"dimgroup --input " + data + "/fibonacci.txt --vector [1,-1] --stage 2", 0},
      {"bratteli --input " + data + "/golden.txt --levels 3 --format dot", 0},
      {"bratteli --input " + data + "/golden.txt --levels 3", 0},
      {"report --input " + data + "/fourbonacci_bundle.txt --fiber-class [0,2,0,0]", 0},
      {"validate --input " + data + "/bad_index_bundle.txt", 1},
      {"norm --input " + data + "/reducible.txt --class [1,1]", 1},
      {"perron --input " + data + "/tribonacci.txt --max-iter 2", 1},
      {"charpoly --input " + data + "/duplicate_key.txt", 2},
      {"frobnicate --input " + data + "/golden.txt", 2},
      {"charpoly --input " + data + "/golden.txt --bogus 1", 2},
      {"charpoly --input " + data + "/does_not_exist.txt", 2},
      {"charpoly --input " + data + "/swinnerton_dyer.txt", 3},
      {"dimgroup --input " + data + "/reducible.txt --vector [1,-1]", 3},
  };
  for (const auto& c : cases) {
    Run first = run_cli(c.args), second = run_cli(c.args);
    if (first.out != second.out) return {false, "output differs between runs: " + c.args};
    if (first.exit_code != c.exit_code || second.exit_code != c.exit_code)
      return {false, "exit " + std::to_string(first.exit_code) + " != " + std::to_string(c.exit_code) + ": " + c.args};
    bool has_error = first.out.find("error = ") != std::string::npos;
    if (has_error != (first.exit_code != 0)) return {false, "error line / exit code mismatch: " + c.args};
  }
  Run report = run_cli("report --input " + data + "/fourbonacci_bundle.txt --fiber-class [0,2,0,0]");
  for (const char* line : {"norm_at_fiber = 2\n", "thurston_fiber_target = 2\n", "discrepancy = 0\n", "gromov_value = 4\n"})
    if (report.out.find(line) == std::string::npos) return {false, std::string("report lacks ") + line};
  return {true, std::to_string(cases.size()) + " invocations, each run twice"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"C1  three-way trace agreement", three_way_trace},
      {"C2  Newton power sums = tr(A^j)", newton_identity},
      {"C3  trace linearity", linearity},
      {"C4  unimodular similarity invariance", unimodular_invariance},
      {"C5  cone axioms", cone_axioms},
      {"C6  Perron fixture and spectral dominance", perron_fixture},
      {"C7  singularity identities", singularity_identities},
      {"C8  H2 rank formula", rank_formula},
      {"C9  dimension-group coherence", dim_group_coherence},
      {"C10 4-nacci fiber-class instance", desk_theorem_instance},
      {"C11 CLI determinism and exit codes", cli_determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "PASS " : "FAIL ") << c.name << " -- " << o.detail << "\n";
    failures += !o.pass;
  }
  std::cout << (failures ? "acceptance: FAILED (" + std::to_string(failures) + ")" : std::string("acceptance: all passed"))
            << "\n";
  return failures ? 1 : 0;
}
