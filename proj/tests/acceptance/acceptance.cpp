// Acceptance gate. Usage: acceptance <agt-binary> <golden-card-table>
//
// Each numbered criterion prints exactly one [PASS]/[FAIL] line; the exit
// code is the number of failures. Time budgets are enforced wall-clock.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "agt/cardinal.hpp"
#include "agt/classify.hpp"
#include "agt/group.hpp"
#include "agt/parse.hpp"
#include "agt/topo_invariants.hpp"
#include "agt/verify.hpp"

namespace {

int g_failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  }
};

void report(int criterion, const std::string& what, bool ok,
            double seconds, double budget, const std::string& detail) {
  bool in_budget = budget <= 0 || seconds <= budget;
  char buf[64];
  std::snprintf(buf, sizeof buf, " (%.2fs)", seconds);
  if (ok && in_budget) {
    std::cout << "[PASS] criterion " << criterion << ": " << what << buf << "\n";
    return;
  }
  ++g_failures;
  std::cout << "[FAIL] criterion " << criterion << ": " << what << buf;
  if (!ok) std::cout << " — " << detail;
  if (!in_budget) std::cout << " — exceeded " << budget << "s budget";
  std::cout << "\n";
}

std::string run_capture(const std::string& cmd, int& exit_code) {
  std::string out;
  FILE* p = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!p) {
    exit_code = -1;
    return out;
  }
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  int status = pclose(p);
  exit_code = status < 0 ? -1 : WEXITSTATUS(status);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string quote(const std::string& s) { return "'" + s + "'"; }

void suite_criterion(int criterion, const std::string& what,
                     const std::string& suite, long long cap, double budget) {
  Timer t;
  agt::SuiteOptions opt;
  opt.cap = cap;
  agt::SuiteReport rep = agt::run_suite(suite, opt);
  std::string detail = std::to_string(rep.failure_count) + " failures";
  if (!rep.failures.empty()) detail += "; first: " + rep.failures.front();
  report(criterion, what, rep.ok(), t.seconds(), budget, detail);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance <agt-binary> <golden-card-table>\n";
    return 64;
  }
  const std::string agt_bin = argv[1];
  const std::string golden_path = argv[2];

  // 1. Formula table against the golden file, plus CLI spot checks.
  {
    Timer t;
    int code = 0;
    std::string table = run_capture(agt_bin + " verify formula-table", code);
    std::string golden = read_file(golden_path);
    bool ok = code == 0 && !golden.empty() && table == golden;
    std::string detail = code != 0 ? "verify exited " + std::to_string(code)
                                   : "table does not match the golden file";
    int c1 = 0, c2 = 0, c3 = 0;
    std::string s1 = run_capture(
        agt_bin + " card " + quote("Z(2)^(aleph0)") + " --topology gamma --invariant w", c1);
    std::string s2 = run_capture(
        agt_bin + " card Z --topology bohr --invariant chi", c2);
    std::string s3 = run_capture(
        agt_bin + " card " + quote("J(2)") + " --topology bohr --invariant w", c3);
    if (ok && (c1 || s1 != "2^aleph0\n" || c2 || s2 != "2^aleph0\n" || c3 ||
               s3 != "2^2^aleph0\n")) {
      ok = false;
      detail = "card spot checks disagree";
    }
    report(1, "formula table matches the golden card file", ok, t.seconds(),
           1.0, detail);
  }

  // 2. Bounded coincidence: gamma = bohr exactly on the bounded battery
  //    members, with w(gamma) = w(bohr) = 2^|G| there.
  {
    Timer t;
    bool ok = true;
    std::string detail;
    int bounded_seen = 0;
    for (const char* name :
         {"Z", "Z^2", "Q", "Z(2^inf)", "Z(2)^(aleph0)", "Z(8)^(c)", "J(2)",
          "T(2)", "Q+Z(2)", "Z+Z(6)"}) {
      agt::StructuredGroup g = agt::parse_group(name);
      bool bounded = agt::exponent_of(g).has_value();
      agt::EqualizerAnswer eq =
          agt::equalizer_member(agt::topo(agt::TopologyKind::Profinite),
                                agt::topo(agt::TopologyKind::Bohr), g);
      if (eq.verdict != agt::verdict_of(bounded)) {
        ok = false;
        detail = std::string(name) + ": equalizer verdict wrong";
        break;
      }
      if (!bounded) continue;
      ++bounded_seen;
      agt::Cardinal wg = agt::invariant(g, agt::topo(agt::TopologyKind::Profinite),
                                        agt::CardinalInvariantKind::Weight).value;
      agt::Cardinal wb = agt::invariant(g, agt::topo(agt::TopologyKind::Bohr),
                                        agt::CardinalInvariantKind::Weight).value;
      agt::Cardinal want = agt::exp2(agt::size_of(g));
      if (!(wg == wb) || !(wg == want)) {
        ok = false;
        detail = std::string(name) + ": w(gamma) != w(bohr) = 2^|G|";
        break;
      }
    }
    if (ok && bounded_seen != 2) {
      ok = false;
      detail = "expected exactly 2 bounded battery members";
    }
    report(2, "bounded groups: gamma = bohr with weight 2^|G|", ok,
           t.seconds(), 1.0, detail);
  }

  // 3. The density gap on the torsion product.
  {
    Timer t;
    agt::StructuredGroup g = agt::parse_group("T(2)");
    agt::Cardinal d = agt::invariant(g, agt::topo(agt::TopologyKind::Natural),
                                     agt::CardinalInvariantKind::Density).value;
    bool ok = d == agt::aleph0() &&
              agt::size_of(g) == agt::continuum() &&
              agt::cmp(d, agt::size_of(g), agt::CardinalMode::Zfc) ==
                  agt::Ordering::LT;
    report(3, "T(2): d(nu) = aleph0 < |G| = c in ZFC", ok, t.seconds(), 0,
           "density gap not reproduced");
  }

  // 4-10. Batch suites at their acceptance budgets.
  suite_criterion(4, "finite oracle equivalence up to order 200",
                  "finite-lattice", 200, 60.0);
  suite_criterion(5, "subgroup-counting zeta oracle", "zeta", 10000, 30.0);
  suite_criterion(6, "closure and cofinality on 500 seeded instances",
                  "closure", 10000, 30.0);

  // 7. Equalizer fact table, including the recorded open pair.
  {
    Timer t;
    agt::SuiteOptions opt;
    agt::SuiteReport rep = agt::run_suite("equalizer", opt);
    agt::EqualizerAnswer open = agt::equalizer_member(
        agt::topo(agt::TopologyKind::AlephBounded),
        agt::topo(agt::TopologyKind::ProCountable), agt::parse_group("Z"));
    bool ok = rep.ok() && open.verdict == agt::Verdict::Unknown;
    std::string detail = std::to_string(rep.failure_count) + " failures";
    if (!rep.failures.empty()) detail += "; first: " + rep.failures.front();
    if (open.verdict != agt::Verdict::Unknown)
      detail = "E(gbound, rho) did not come back unknown";
    report(7, "equalizer fact table on the witness battery", ok, t.seconds(),
           0, detail);
  }

  suite_criterion(8, "classifier implications on 1000 seeded groups",
                  "classifier", 10000, 10.0);
  suite_criterion(9, "cardinal kernel soundness on 10000 seeded pairs",
                  "cardinal", 10000, 5.0);
  suite_criterion(10, "countable-or-continuum dichotomy on 1000 seeded groups",
                  "dichotomy", 10000, 0);

  return g_failures;
}
