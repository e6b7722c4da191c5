// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "stirling/enumerators.hpp"
#include "stirling/grammar.hpp"
#include "stirling/io.hpp"
#include "stirling/sp_code.hpp"
#include "stirling/verify.hpp"

namespace {

using Failure = std::optional<std::string>;

struct Step {
  std::string id;
  std::optional<int> n_max;
};

Failure run_targets(const std::vector<Step>& steps) {
  for (const auto& s : steps) {
    const auto report = stirling::verify(s.id, s.n_max);
    if (!report.passed) return s.id + ": " + report.counterexample;
  }
  return std::nullopt;
}

int shell(const std::string& cmd, std::string* out = nullptr) {
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return -1;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) {
    if (out) out->append(buf, got);
  }
  const int status = pclose(pipe);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

bool symmetric_in_xyz(const stirling::Polynomial& p) {
  using stirling::Polynomial;
  const Polynomial x = Polynomial::variable("x");
  const Polynomial y = Polynomial::variable("y");
  const Polynomial z = Polynomial::variable("z");
  return p.substitute({{"x", y}, {"y", x}}) == p && p.substitute({{"y", z}, {"z", y}}) == p;
}

Failure criterion1() {
  using stirling::Family;
  const std::vector<std::string> printed{"x", "x + 2*x^2", "x + 8*x^2 + 6*x^3"};
  for (int n = 1; n <= 3; ++n) {
    const auto want = stirling::parse_polynomial(printed[static_cast<std::size_t>(n - 1)]);
    if (stirling::family_by_statistic(Family::C, n) != want) return "statistic route at n=" + std::to_string(n);
    if (stirling::family_by_recurrence(Family::C, n) != want) return "recurrence route at n=" + std::to_string(n);
    if (stirling::c_by_grammar(n) != want) return "grammar route at n=" + std::to_string(n);
  }
  return run_targets({{"families", std::nullopt}});
}

Failure criterion4() {
  if (auto f = run_targets({{"thm37", 6}, {"symmetry", 6}})) return f;
  for (int n = 1; n <= 6; ++n) {
    if (!symmetric_in_xyz(stirling::poly_C3(n))) return "C_n(x,y,z) not symmetric at n=" + std::to_string(n);
    if (!symmetric_in_xyz(stirling::poly_N3(n))) return "N_n(x,y,z) not symmetric at n=" + std::to_string(n);
  }
  return std::nullopt;
}

Failure criterion11() {
  if (auto f = run_targets({{"leibniz", std::nullopt}, {"ebasis_roundtrip", std::nullopt},
                            {"convert_roundtrip", std::nullopt}})) {
    return f;
  }
  const std::string cli = STIRLING_CLI;
  const auto dir = std::filesystem::temp_directory_path() / "stirling_acceptance";
  std::filesystem::create_directories(dir);
  const std::vector<std::string> kinds{"stirling", "code", "tree", "riordan", "dumont", "matching"};
  for (const auto& c : stirling::all_codes(3)) {
    for (const auto& from : kinds) {
      const std::string x = stirling::dump_object(stirling::convert(c, stirling::object_from_name(from)));
      for (const auto& to : kinds) {
        const auto in = dir / "x.json";
        std::ofstream(in) << x;
        std::string there;
        if (shell(cli + " convert --from " + from + " --to " + to + " < " + in.string(), &there) != 0) {
          return "CLI convert " + from + " -> " + to + " failed on " + x;
        }
        const auto mid = dir / "y.json";
        std::ofstream(mid) << there;
        std::string back;
        shell(cli + " convert --from " + to + " --to " + from + " < " + mid.string(), &back);
        while (!back.empty() && back.back() == '\n') back.pop_back();
        if (back != x) return "CLI round trip " + from + " -> " + to + " changed " + x + " into " + back;
      }
    }
  }
  const int code = shell(cli + " verify --all > /dev/null 2>&1");
  if (code != 0) return "verify --all exited " + std::to_string(code);
  return std::nullopt;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Failure()>>> criteria{
      {"second-order Eulerian polynomials for n=1..3 by three routes", criterion1},
      {"worked examples reproduced exactly", [] { return run_targets({{"examples", std::nullopt}}); }},
      {"equidistribution of scalar and set-valued statistics, n<=6",
       [] {
         return run_targets({{"bona", 6}, {"laprpd", 6}, {"apud", 6}, {"thm34", 6}, {"thm35", 6}, {"thm36", 6}});
       }},
      {"symmetric triples and symmetric trivariate polynomials, n<=6", criterion4},
      {"bijection round trips and (2n-1)!! cardinalities", [] { return run_targets({{"bijections", 7}}); }},
      {"grammar identities",
       [] { return run_targets({{"lemma52", std::nullopt}, {"chen22", 8}, {"g2display", std::nullopt}}); }},
      {"e-positivity and gamma tables",
       [] { return run_targets({{"ebasis", 7}, {"mainthm51", 6}, {"gamma_rec", 6}}); }},
      {"k-Stirling numerics",
       [] { return run_targets({{"gamman3", 10}, {"cn2", 10}, {"propfinal", 7}, {"mainthm64", 4}}); }},
      {"Eulerian-type identities and recurrences",
       [] { return run_targets({{"prop21", 4}, {"convo", 6}, {"families", 6}}); }},
      {"Carlitz, Dumont and tree identities",
       [] { return run_targets({{"carlitz", 6}, {"dumont_dt", 6}, {"qntn", 6}, {"dumont_rec", 6}}); }},
      {"property suites and the command-line checks", criterion11},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Failure f;
    try {
      f = criteria[i].second();
    } catch (const std::exception& e) {
      f = std::string("exception: ") + e.what();
    }
    std::cout << (f ? "FAIL" : "PASS") << " criterion " << i + 1 << ": " << criteria[i].first;
    if (f) std::cout << " (" << *f << ")";
    std::cout << std::endl;
    failed += f ? 1 : 0;
  }
  return failed == 0 ? 0 : 1;
}
