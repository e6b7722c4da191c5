#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "stirling/core_objects.hpp"
#include "stirling/enumerators.hpp"
#include "stirling/grammar.hpp"
#include "stirling/io.hpp"
#include "stirling/sp_code.hpp"
#include "stirling/statistics.hpp"
#include "stirling/structures.hpp"
#include "stirling/verify.hpp"

namespace {

using namespace stirling;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

// Bad flag combinations found after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kObjects{"stirling", "code", "tree", "riordan", "dumont", "matching", "plane-tree"};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Non-blank stdin lines.
template <typename F>
void each_line(F&& f) {
  std::string line;
  while (std::getline(std::cin, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    f(line);
  }
}

// ---------------------------------------------------------------- enumerate

struct EnumerateArgs {
  std::string object = "stirling";
  int n = -1;
  int k = 0;
  std::string variant;
  std::string format = "json";
  std::uint64_t cap = kDefaultCap;
};

int run_enumerate(const EnumerateArgs& a) {
  const ObjectKind kind = object_from_name(a.object);
  const bool text = a.format == "text";
  auto emit = [&](const AnyObject& o) {
    if (text && kind == ObjectKind::stirling) {
      std::cout << word_to_string(std::get<StirlingPermutation>(o).word()) << '\n';
    } else if (text && kind == ObjectKind::code) {
      std::cout << code_to_string(std::get<SPCode>(o).tuples()) << '\n';
    } else {
      std::cout << dump_object(o) << '\n';
    }
  };
  if (!a.variant.empty() && (a.variant != "q1" || kind != ObjectKind::stirling)) {
    throw UsageError("--variant q1 applies to --object stirling only");
  }
  if (a.k != 0 && kind != ObjectKind::stirling && kind != ObjectKind::plane_tree) {
    throw UsageError("--k applies to stirling (arity) and plane-tree (maximum degree) only");
  }
  switch (kind) {
    case ObjectKind::stirling:
      if (a.variant == "q1") {
        enumerate_q1(
            a.n, [&](std::span<const int> w) { std::cout << (text ? word_to_string(w) : json(w).dump()) << '\n'; },
            a.cap);
      } else {
        const int arity = a.k == 0 ? 2 : a.k;
        enumerate_q(
            a.n, arity,
            [&](std::span<const int> w) { std::cout << (text ? word_to_string(w) : json(w).dump()) << '\n'; },
            a.cap);
      }
      break;
    case ObjectKind::code:
      enumerate_codes(a.n, [&](std::span<const CodeTuple> t) { emit(SPCode({t.begin(), t.end()})); }, a.cap);
      break;
    case ObjectKind::tree:
      enumerate_ternary_trees(a.n, [&](const TernaryTree& t) { emit(t); }, a.cap);
      break;
    case ObjectKind::riordan:
      enumerate_riordan(a.n, [&](const RiordanWord& t) { emit(t); }, a.cap);
      break;
    case ObjectKind::dumont:
      enumerate_dumont(a.n, [&](const DumontWord& w) { emit(w); }, a.cap);
      break;
    case ObjectKind::matching:
      enumerate_matchings(a.n, [&](const PerfectMatching& m) { emit(m); }, a.cap);
      break;
    case ObjectKind::plane_tree:
      enumerate_plane_trees(a.n, a.k == 0 ? 3 : a.k, [&](const PlaneIncreasingTree& t) { emit(t); }, a.cap);
      break;
  }
  return kOk;
}

// -------------------------------------------------------------------- stats

int run_stats(int arity) {
  each_line([&](const std::string& line) {
    const auto perm = std::get<StirlingPermutation>(parse_object(ObjectKind::stirling, line, arity));
    const auto& w = perm.word();
    json stats = json::object();
    if (arity == 2) {
      for (const auto& info : kStatTable) stats[std::string(info.name)] = scalar_stat(w, info.id);
      for (const auto& info : kSetStatTable) stats[std::string(info.name)] = set_stat(w, info.id);
    } else {
      for (StatId id : {StatId::asc, StatId::des, StatId::plat}) stats[std::string(name_of(id))] = scalar_stat(w, id);
    }
    for (int j = 1; j <= arity; ++j) {
      const std::string tag = "_" + std::to_string(j);
      stats["plat" + tag] = j_stat(w, arity, {j, JStatKind::plateau});
      stats["asc" + tag] = j_stat(w, arity, {j, JStatKind::ascent});
      stats["des" + tag] = j_stat(w, arity, {j, JStatKind::descent});
    }
    std::cout << json{{"word", w}, {"stats", stats}}.dump() << '\n';
  });
  return kOk;
}

// ------------------------------------------------------------------ convert

int run_convert(const std::string& from, const std::string& to) {
  const ObjectKind a = object_from_name(from);
  const ObjectKind b = object_from_name(to);
  each_line([&](const std::string& line) { std::cout << dump_object(convert(parse_object(a, line), b)) << '\n'; });
  return kOk;
}

// --------------------------------------------------------------------- poly

void print_polynomial(const Polynomial& p, const std::string& format) {
  if (format == "json") {
    std::cout << dump_polynomial(p) << '\n';
  } else {
    std::cout << p.to_string() << '\n';
  }
}

int run_poly(const std::string& family, int n, std::optional<int> k, const std::string& format, bool ebasis) {
  Polynomial p;
  if (family == "C3") {
    p = poly_C3(n);
  } else if (family == "N3") {
    p = poly_N3(n);
  } else if (family == "Ck") {
    if (!k) throw UsageError("--family Ck needs --k");
    p = poly_Ck(n, *k);
  } else {
    p = poly_family(family_from_name(family), n);
  }
  if (k && family != "Ck") throw UsageError("--k applies to --family Ck only");
  if (ebasis) p = to_elementary_basis(p, family == "N3" ? "w" : "e");
  print_polynomial(p, format);
  return kOk;
}

// -------------------------------------------------------------------- gamma

int run_gamma(int n, std::optional<int> k, const std::string& format) {
  if (k) {
    const auto table = gammaK(n, *k);
    std::cout << (format == "json" ? dump_gammaK(table) + "\n" : gammaK_csv(table, n));
  } else {
    const auto table = gamma3(n);
    std::cout << (format == "json" ? dump_gamma3(table) + "\n" : gamma3_csv(table));
  }
  return kOk;
}

// ------------------------------------------------------------------ grammar

struct GrammarArgs {
  std::string rules;
  std::string builtin_name;
  std::optional<int> k;
  std::string start;
  int iterate = 1;
  std::string subst;
  std::string format = "text";
};

int run_grammar(const GrammarArgs& a) {
  if (a.rules.empty() == a.builtin_name.empty()) throw UsageError("give exactly one of --rules and --builtin");
  const Grammar g = a.rules.empty() ? builtin(a.builtin_name, a.k) : parse_grammar(read_file(a.rules));
  Polynomial p = derive_n(g, parse_polynomial(a.start), a.iterate);
  if (!a.subst.empty()) {
    std::map<std::string, Polynomial> images;
    for (auto& [sym, image] : parse_substitution(read_file(a.subst))) images.emplace(sym, image);
    p = p.substitute(images);
  }
  print_polynomial(p, a.format);
  return kOk;
}

// ------------------------------------------------------------------- verify

int run_verify(const std::string& theorem, bool all, std::optional<int> max_n, std::optional<int> k,
               const std::string& format) {
  std::vector<VerificationReport> reports;
  if (all || theorem == "all") {
    if (k) throw UsageError("--k needs a single --theorem");
    reports = verify_all(max_n);
  } else if (!theorem.empty()) {
    reports.push_back(verify(theorem, max_n, k));
  } else {
    throw UsageError("give --theorem ID or --all");
  }
  bool ok = true;
  for (const auto& r : reports) {
    ok = ok && r.passed;
    if (format == "json") {
      std::cout << dump_report(r) << '\n';
      continue;
    }
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.id << "  n=" << r.n_min << ".." << r.n_max;
    if (r.k) std::cout << " k=" << *r.k;
    std::cout << "  " << r.description << '\n';
    if (!r.passed) std::cout << "     " << r.counterexample << '\n';
  }
  return ok ? kOk : kFailed;
}

std::string theorem_list() {
  std::string out = "Theorem ids:\n";
  for (const auto& t : registry()) {
    out += "  " + t.id + std::string(t.id.size() < 18 ? 18 - t.id.size() : 1, ' ') + t.description + "\n";
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stirling permutations, codes, trees, grammars and second-order Eulerian polynomials"};
  app.require_subcommand(1);
  app.footer("Exit codes: 0 success, 1 verification failure, 2 usage or input error.");

  EnumerateArgs en;
  auto* enumerate = app.add_subcommand("enumerate", "List every object of order n, one JSON line each");
  enumerate->add_option("--object", en.object, "Object family")->check(CLI::IsMember(kObjects));
  enumerate->add_option("--n", en.n, "Order")->required()->check(CLI::NonNegativeNumber);
  enumerate->add_option("--k", en.k, "Arity of Stirling words (default 2) or maximum plane-tree degree (default 3)")
      ->check(CLI::PositiveNumber);
  enumerate->add_option("--variant", en.variant, "q1: Stirling words of {1, 2^2, ..., (n+1)^2}")
      ->check(CLI::IsMember({"q1"}));
  enumerate->add_option("--format", en.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  enumerate->add_option("--cap", en.cap, "Refuse to start when more objects than this would be produced");

  int stats_k = 2;
  auto* stats = app.add_subcommand("stats", "Read JSON words from stdin; print every statistic of each");
  stats->add_option("--k", stats_k, "Arity of the words")->check(CLI::PositiveNumber);

  std::string from;
  std::string to;
  auto* conv = app.add_subcommand("convert", "Read JSON objects from stdin; print them converted");
  conv->add_option("--from", from, "Input object")->required()->check(CLI::IsMember(kObjects));
  conv->add_option("--to", to, "Output object")->required()->check(CLI::IsMember(kObjects));

  std::string family;
  int poly_n = 0;
  std::optional<int> poly_k;
  std::string poly_format = "text";
  bool ebasis = false;
  auto* poly = app.add_subcommand("poly", "Print a polynomial after checking its independent routes agree");
  poly->add_option("--family", family,
                   "A, B, M, N, C (in x), C3, N3 (in x,y,z) or Ck (in x1..x{k+1}). A_n follows the convention "
                   "A_1 = x (descents with zeros at both ends); the classical Eulerian polynomial is A_n(x)/x.")
      ->required()
      ->check(CLI::IsMember({"A", "B", "M", "N", "C", "C3", "N3", "Ck"}));
  poly->add_option("--n", poly_n, "Order")->required()->check(CLI::NonNegativeNumber);
  poly->add_option("--k", poly_k, "Arity for Ck")->check(CLI::PositiveNumber);
  poly->add_option("--format", poly_format, "text or json")->check(CLI::IsMember({"text", "json"}));
  poly->add_flag("--ebasis", ebasis, "Rewrite in elementary symmetric polynomials (w1, w2, w3 for N3, else e1, ...)");

  int gamma_n = 1;
  std::optional<int> gamma_k;
  std::string gamma_format = "csv";
  auto* gamma = app.add_subcommand("gamma", "Print a gamma-coefficient table");
  gamma->add_option("--n", gamma_n, "Order")->required()->check(CLI::PositiveNumber);
  gamma->add_option("--k", gamma_k, "Arity; without it the three-variable table of D_H^{n-1}(w)")
      ->check(CLI::PositiveNumber);
  gamma->add_option("--format", gamma_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  GrammarArgs gr;
  auto* grammar = app.add_subcommand("grammar", "Iterate a grammar derivative");
  grammar->add_option("--rules", gr.rules, "Rule file: 'sym -> poly' per line or ';', 'const a, b', '#' comments");
  grammar->add_option("--builtin", gr.builtin_name, "G, H, I, G1 or G2")
      ->check(CLI::IsMember({"G", "H", "I", "G1", "G2"}));
  grammar->add_option("--k", gr.k, "Arity for G1 and G2")->check(CLI::PositiveNumber);
  grammar->add_option("--start", gr.start, "Polynomial to derive")->required();
  grammar->add_option("--iterate", gr.iterate, "Number of derivatives")->check(CLI::NonNegativeNumber);
  grammar->add_option("--subst", gr.subst, "File of 'sym -> poly' images applied to the result");
  grammar->add_option("--format", gr.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::string theorem;
  bool all = false;
  std::optional<int> max_n;
  std::optional<int> verify_k;
  std::string verify_format = "text";
  auto* ver = app.add_subcommand("verify", "Check identities exhaustively up to an order");
  ver->add_option("--theorem", theorem, "Theorem id or 'all'");
  ver->add_flag("--all", all, "Every registered theorem");
  ver->add_option("--max-n", max_n, "Largest order to check (default per theorem)")->check(CLI::NonNegativeNumber);
  ver->add_option("--k", verify_k, "Single arity for mainthm64")->check(CLI::PositiveNumber);
  ver->add_option("--format", verify_format, "text or json")->check(CLI::IsMember({"text", "json"}));
  ver->footer(theorem_list());

  auto help_for = [&]() -> std::string {
    for (auto* sub : app.get_subcommands()) return sub->help();
    return app.help();
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << help_for();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << help_for();
    return kUsage;
  }

  try {
    if (*enumerate) return run_enumerate(en);
    if (*stats) return run_stats(stats_k);
    if (*conv) return run_convert(from, to);
    if (*poly) return run_poly(family, poly_n, poly_k, poly_format, ebasis);
    if (*gamma) return run_gamma(gamma_n, gamma_k, gamma_format);
    if (*grammar) return run_grammar(gr);
    if (*ver) return run_verify(theorem, all, max_n, verify_k, verify_format);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << help_for();
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << kind_name(e.kind()) << " at " << e.line() << ":" << e.column() << ": " << e.what()
              << '\n';
    return kUsage;
  } catch (const DefectError& e) {
    std::cerr << "defect: " << e.what() << '\n';
    return kFailed;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
