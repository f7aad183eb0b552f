// Command-line front end. Exit codes: 0 success or equivalent, 1 proven
// inequivalent or unequal, 2 inconclusive within limits, 3 input error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "monodromy/certificate.hpp"
#include "monodromy/config.hpp"
#include "monodromy/document.hpp"
#include "monodromy/equiv.hpp"
#include "monodromy/garside.hpp"
#include "monodromy/verify.hpp"

namespace {

using namespace monodromy;
using json = nlohmann::json;

constexpr int kOk = 0;
constexpr int kNo = 1;
constexpr int kInconclusive = 2;
constexpr int kInputError = 3;

struct Common {
  int m = 0;
  int depth = SearchLimits{}.max_depth;
  std::size_t states = SearchLimits{}.max_states;
  int jobs = 1;
  std::uint64_t seed = 0;
  bool letters = false;
  bool json_out = false;

  SearchLimits limits() const {
    SearchLimits l;
    l.max_depth = depth;
    l.max_states = states;
    l.jobs = jobs;
    return l;
  }
  BraidWord word(const std::string& text) const { return parse_braid_word(text, m, letters); }
  std::string show(const BraidWord& w) const { return letters ? format_letters(w) : w.to_string(); }
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--m", c.m, "Number of strands");
  sub->add_option("--limits-depth", c.depth, "Search depth limit");
  sub->add_option("--limits-states", c.states, "Search state limit");
  sub->add_option("--jobs", c.jobs, "Worker threads for searches")->check(CLI::PositiveNumber);
  sub->add_option("--seed", c.seed, "Seed for randomized operations");
  sub->add_flag("--letters", c.letters, "Read and print generators as a, b, c, ...");
  auto* j = sub->add_flag("--json", c.json_out, "JSON output");
  sub->add_flag("--text{false}", c.json_out, "Text output (default)")->excludes(j);
}

int verdict_code(Verdict v) {
  switch (v) {
    case Verdict::Equivalent:
      return kOk;
    case Verdict::Inequivalent:
      return kNo;
    case Verdict::Inconclusive:
      break;
  }
  return kInconclusive;
}

int report_search(const SearchResult& r, const Common& c) {
  const MoveCounts counts = count_moves(r.certificate);
  if (c.json_out) {
    json out{{"verdict", to_string(r.verdict)},
             {"reason", r.reason},
             {"states_visited", r.states_visited},
             {"counts",
              {{"hurwitz", counts.hurwitz},
               {"conj", counts.conj},
               {"insert", counts.insert},
               {"cancel", counts.cancel}}}};
    if (r.found()) out["certificate"] = json::parse(certificate_to_json(r.certificate));
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << to_string(r.verdict);
    if (!r.reason.empty()) std::cout << ": " << r.reason;
    std::cout << "\n";
    if (r.found()) {
      std::cout << "moves: " << r.certificate.size() << " (hurwitz " << counts.hurwitz
                << ", insert " << counts.insert << ", cancel " << counts.cancel << ")\n";
      for (const auto& m : r.certificate.moves) std::cout << describe(m) << "\n";
    }
  }
  return verdict_code(r.verdict);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

int run_nf(const Common& c, const std::string& w) {
  const GarsideNF nf = normal_form(c.word(w));
  if (c.json_out) {
    json factors = json::array();
    for (const auto& p : nf.simple_factors) factors.push_back(p.images());
    std::cout << json{{"delta_power", nf.delta_power},
                      {"simple_factors", factors},
                      {"word", nf.to_word().letters()}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << nf.to_string() << "\n" << c.show(nf.to_word()) << "\n";
  }
  return kOk;
}

int run_eq(const Common& c, const std::string& w1, const std::string& w2) {
  const bool equal = words_equal(c.word(w1), c.word(w2));
  if (c.json_out) {
    std::cout << json{{"equal", equal}}.dump() << "\n";
  } else {
    std::cout << (equal ? "equal" : "unequal") << "\n";
  }
  return equal ? kOk : kNo;
}

int run_perm(const Common& c, const std::string& w) {
  const Permutation p = permutation_of(c.word(w));
  if (c.json_out) {
    std::cout << json{{"cycles", p.to_string()}, {"images", p.images()}}.dump() << "\n";
  } else {
    std::cout << p.to_string() << "\n";
  }
  return kOk;
}

int run_alpha(const Common& c, const std::string& file) {
  const Factorization s = read_factorization_file(file).value;
  const BraidWord a = alpha(s);
  const GarsideNF nf = normal_form(a);
  if (c.json_out) {
    std::cout << json{{"alpha", a.letters()}, {"normal_form", nf.to_string()}}.dump(2) << "\n";
  } else {
    std::cout << c.show(a) << "\n" << nf.to_string() << "\n";
  }
  return kOk;
}

int run_invariants(const Common& c, const std::string& file) {
  const Factorization s = read_factorization_file(file).value;
  const MultiDegree d = multi_degree(s);
  const std::vector<int> cd = c_multi_degree(s);
  const std::string gamma = transposition_list(sym_image(s));
  const std::size_t order = generated_sym_subgroup(s).order();
  if (c.json_out) {
    std::cout << json{{"multi_degree", d.to_string()},
                      {"c_multi_degree", cd},
                      {"gamma", gamma},
                      {"subgroup_order", order}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "multi-degree: " << d.to_string() << "\nc-multi-degree:";
    for (int x : cd) std::cout << " " << x;
    std::cout << "\ngamma: " << gamma << "\nsubgroup order: " << order << "\n";
  }
  return kOk;
}

int run_check_cert(const Common& c, const std::string& f1, const std::string& f2,
                   const std::string& cert_file) {
  const Factorization s1 = read_factorization_file(f1).value;
  const Factorization s2 = read_factorization_file(f2).value;
  const MoveCertificate cert = parse_certificate(read_file(cert_file), s1.strands);
  const CertificateCheck check = check_certificate(s1, s2, cert);
  if (c.json_out) {
    std::cout << json{{"valid", check.ok}, {"diagnostic", check.diagnostic}}.dump() << "\n";
  } else {
    std::cout << (check.ok ? "valid" : "invalid: " + check.diagnostic) << "\n";
  }
  return check.ok ? kOk : kNo;
}

int run_gen(const Common& c, int n, const std::string& profile, int count) {
  const int m = c.m == 0 ? 3 : c.m;
  const std::uint64_t seed = c.seed == 0 ? default_instance_seed() : c.seed;
  const auto pairs = gen_instances(m, n, profile, seed, count);
  if (c.json_out) {
    std::cout << instances_to_json(pairs, 2) << "\n";
  } else {
    for (const auto& p : pairs) {
      std::cout << p.name << "\n  " << to_string(p.first) << "\n  " << to_string(p.second) << "\n";
    }
  }
  return kOk;
}

int run_verify(const Common& c) {
  VerifyOptions options;
  options.seed = c.seed;
  const VerificationReport report = verify_paper(options);
  std::cout << (c.json_out ? report.to_json() + "\n" : report.to_text());
  return report.passed() ? kOk : kNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Braid monodromy factorization toolkit"};
  app.require_subcommand(1);
  Common c;
  std::string w1, w2, f1, f2, f3, profile = "conjugate";
  int n = 1, count = 20;

  auto* nf = app.add_subcommand("nf", "Garside normal form of a braid word");
  nf->add_option("word", w1)->required();
  auto* eq = app.add_subcommand("eq", "Equality of two braid words");
  eq->add_option("word1", w1)->required();
  eq->add_option("word2", w2)->required();
  auto* perm = app.add_subcommand("perm", "Permutation of a braid word");
  perm->add_option("word", w1)->required();
  auto* al = app.add_subcommand("alpha", "Product of a factorization");
  al->add_option("file", f1)->required();
  auto* inv = app.add_subcommand("invariants", "Multi-degrees, transpositions and subgroup order");
  inv->add_option("file", f1)->required();
  auto* hs = app.add_subcommand("hurwitz-search", "Hurwitz equivalence search");
  auto* we = app.add_subcommand("weak-equiv", "Weak equivalence search");
  auto* rm = app.add_subcommand("rewrite-main", "Constructive weak equivalence of Delta^2N factorizations");
  for (auto* sub : {hs, we, rm}) {
    sub->add_option("first", f1)->required();
    sub->add_option("second", f2)->required();
  }
  auto* cc = app.add_subcommand("check-cert", "Replay a certificate");
  cc->add_option("first", f1)->required();
  cc->add_option("second", f2)->required();
  cc->add_option("certificate", f3)->required();
  auto* gen = app.add_subcommand("gen-instances", "Generate instance pairs");
  gen->add_option("--n", n, "Power N of Delta^2");
  gen->add_option("--profile", profile, "conjugate or shuffle");
  gen->add_option("--count", count, "Number of pairs");
  auto* vp = app.add_subcommand("verify-paper", "Run the verification suite");
  for (auto* sub : app.get_subcommands({})) add_common(sub, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (nf->parsed()) return run_nf(c, w1);
    if (eq->parsed()) return run_eq(c, w1, w2);
    if (perm->parsed()) return run_perm(c, w1);
    if (al->parsed()) return run_alpha(c, f1);
    if (inv->parsed()) return run_invariants(c, f1);
    if (cc->parsed()) return run_check_cert(c, f1, f2, f3);
    if (gen->parsed()) return run_gen(c, n, profile, count);
    if (vp->parsed()) return run_verify(c);
    const Factorization s1 = read_factorization_file(f1).value;
    const Factorization s2 = read_factorization_file(f2).value;
    if (s1.strands != s2.strands) throw PreconditionError("strand counts differ");
    if (hs->parsed()) {
      if (s1.size() != s2.size()) {
        SearchResult r;
        r.verdict = Verdict::Inequivalent;
        r.reason = "lengths differ";
        return report_search(r, c);
      }
      return report_search(bfs_hurwitz_equiv(s1, s2, c.limits()), c);
    }
    if (we->parsed()) return report_search(bfs_weak_equiv(s1, s2, c.limits()), c);
    if (rm->parsed()) return report_search(rewrite_theorem_main(s1, s2, c.limits()), c);
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
