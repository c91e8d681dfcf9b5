// invco - cosets of closed inverse subsemigroups
//
// Command-line front end. Exit status: 0 success, 1 mathematical mismatch,
// 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "invco/invco.hpp"

namespace {

  using nlohmann::json;
  using namespace invco;

  constexpr int exit_ok       = 0;
  constexpr int exit_mismatch = 1;
  constexpr int exit_usage    = 2;

  FiniteInverseSemigroup load_semigroup(std::string const& source) {
    if (source.ends_with(".json")) {
      std::ifstream in(source);
      if (!in) {
        throw UsageError("cannot open \"" + source + "\"");
      }
      json j;
      try {
        in >> j;
      } catch (json::exception const& e) {
        throw UsageError("\"" + source + "\" is not valid JSON: " + e.what());
      }
      return semigroup_from_json(j);
    }
    return builtin_semigroup(source);
  }

  std::vector<std::string> names_of(FiniteInverseSemigroup const& S, ElementSet const& A) {
    std::vector<std::string> out;
    for (auto a : A.members()) {
      out.push_back(S.name(a));
    }
    return out;
  }

  std::string braces(std::vector<std::string> const& items) {
    std::string out = "{";
    for (std::size_t i = 0; i < items.size(); ++i) {
      out += (i ? ", " : "") + items[i];
    }
    return out + "}";
  }

  std::string join(std::vector<std::string> const& items, char sep) {
    std::string out;
    for (auto const& s : items) {
      if (!out.empty()) {
        out += sep;
      }
      out += s;
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////

  struct IndexArgs {
    std::string source;
    std::string gens;
    bool        as_json = false;
    unsigned    threads = 1;
  };

  int cmd_index(IndexArgs const& a) {
    auto S = load_semigroup(a.source);
    auto L = generate_closed(S, parse_generators(S, a.gens));
    if (a.threads == 0) {
      throw UsageError("--threads must be at least 1");
    }
    auto        cosets    = enumerate_cosets(L, a.threads);
    std::size_t undefined = coset_union(L).union_set.size();
    undefined             = S.size() - undefined;

    if (a.as_json) {
      json list = json::array();
      for (auto const& c : cosets) {
        list.push_back({{"representative", S.name(c.representative)},
                        {"members", names_of(S, c.members)}});
      }
      json out = {{"semigroup", a.source},
                  {"order", S.size()},
                  {"L", names_of(S, L.members())},
                  {"size", L.size()},
                  {"full", is_full(L)},
                  {"index", cosets.size()},
                  {"no_coset", undefined},
                  {"cosets", list}};
      std::cout << dump(out);
      return exit_ok;
    }
    std::cout << "semigroup: " << a.source << " (order " << S.size() << ")\n"
              << "L: " << braces(names_of(S, L.members())) << "\n"
              << "|L|: " << L.size() << "\n"
              << "full: " << (is_full(L) ? "yes" : "no") << "\n"
              << "index: " << cosets.size() << "\n"
              << "elements with no coset: " << undefined << "\n";
    for (std::size_t i = 0; i < cosets.size(); ++i) {
      std::cout << "  C" << (i + 1) << " = up(L " << S.name(cosets[i].representative)
                << "): " << braces(names_of(S, cosets[i].members)) << "\n";
    }
    return exit_ok;
  }

  ////////////////////////////////////////////////////////////////////////

  struct FimArgs {
    std::string              alphabet;
    std::vector<std::string> gens;
    std::string              word;
    std::string              format = "dot";
  };

  FimClosedSub fim_sub(FimArgs const& a) {
    return FimClosedSub(a.alphabet, a.gens);
  }

  int cmd_fim_index(FimArgs const& a) {
    auto K = fim_sub(a);
    if (!verify_state_coset_bijection(K)) {
      std::cerr << "states and cosets disagree\n";
      return exit_mismatch;
    }
    std::cout << index(K) << "\n";
    return exit_ok;
  }

  int cmd_fim_automaton(FimArgs const& a) {
    auto A = coset_automaton(fim_sub(a));
    if (a.format == "dot") {
      std::cout << to_dot(A);
    } else {
      std::cout << dump(to_json(A));
    }
    return exit_ok;
  }

  int cmd_fim_member(FimArgs const& a) {
    auto K = fim_sub(a);
    std::cout << (fim_membership(K, munn_tree(a.word)) ? "true" : "false") << "\n";
    return exit_ok;
  }

  ////////////////////////////////////////////////////////////////////////

  struct FormulaArgs {
    std::string              source;
    std::string              alphabet;
    std::vector<std::string> h;
    std::vector<std::string> k;
    bool                     as_json = false;
  };

  int cmd_formula(FormulaArgs const& a) {
    if (a.source.empty() == a.alphabet.empty()) {
      throw UsageError("give exactly one of --semigroup and --alphabet");
    }
    IndexReport rep{};
    if (!a.source.empty()) {
      auto S = load_semigroup(a.source);
      auto H = generate_closed(S, parse_generators(S, join(a.h, ' ')));
      auto K = generate_closed(S, parse_generators(S, join(a.k, ' ')));
      rep    = check_index_formula(H, K);
    } else {
      rep = check_index_formula(FimClosedSub(a.alphabet, a.h), FimClosedSub(a.alphabet, a.k));
    }
    if (a.as_json) {
      std::cout << dump(rep.to_json());
    } else {
      std::cout << "[S:K] = " << rep.s_k << "\n"
                << "[S:H] = " << rep.s_h << "\n"
                << "[H:K] = " << rep.h_k << "\n"
                << "[S:K] = [S:H][H:K]: " << rep.verdict();
      for (auto const& f : rep.flags()) {
        std::cout << " (" << f << ")";
      }
      std::cout << "\n";
    }
    // A failure is only a mismatch when K is full.
    return rep.k_full && !rep.holds() ? exit_mismatch : exit_ok;
  }

  ////////////////////////////////////////////////////////////////////////

  struct ExamplesArgs {
    bool                     as_json = false;
    std::vector<std::string> overrides;
  };

  int cmd_examples(ExamplesArgs const& a) {
    std::map<std::string, std::string> overrides;
    for (auto const& o : a.overrides) {
      auto eq = o.rfind('=');
      if (eq == std::string::npos) {
        throw UsageError("--override expects claim=value, found \"" + o + "\"");
      }
      overrides[o.substr(0, eq)] = o.substr(eq + 1);
    }
    auto report = worked_examples(overrides);
    for (auto const& [name, value] : overrides) {
      bool known = false;
      for (auto const& c : report.claims) {
        known = known || c.name == name;
      }
      if (!known) {
        throw UsageError("unknown claim \"" + name + "\"");
      }
    }
    if (a.as_json) {
      std::cout << dump(report.to_json());
    } else {
      for (auto const& c : report.claims) {
        std::cout << (c.passed() ? "PASS  " : "FAIL  ") << c.name << ": " << c.computed;
        if (!c.passed()) {
          std::cout << " (expected " << c.expected << ")";
        }
        std::cout << "\n";
      }
      if (report.all_passed()) {
        std::cout << "all claims pass\n";
      } else {
        std::cout << report.failures().size() << " claim(s) failed\n";
      }
    }
    return report.all_passed() ? exit_ok : exit_mismatch;
  }

  ////////////////////////////////////////////////////////////////////////

  struct F2abArgs {
    std::size_t count   = 10;
    bool        as_json = false;
  };

  int cmd_f2ab(F2abArgs const& a) {
    auto r = f2ab::demo(a.count);
    if (a.as_json) {
      std::cout << dump(f2ab::to_json(r));
    } else {
      std::cout << "count: " << r.representatives.size() << "\n";
      std::size_t shown = std::min<std::size_t>(r.representatives.size(), 5);
      for (std::size_t i = 0; i < shown; ++i) {
        std::cout << "  " << r.representatives[i].to_string() << "\n";
      }
      if (shown < r.representatives.size()) {
        std::cout << "  ...\n  " << r.representatives.back().to_string() << "\n";
      }
      std::cout << "verified: " << (r.verified() ? "true" : "false") << "\n";
    }
    return r.verified() ? exit_ok : exit_mismatch;
  }

  ////////////////////////////////////////////////////////////////////////

  int cmd_export(std::string const& source) {
    std::cout << dump(to_json(load_semigroup(source)));
    return exit_ok;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"invco - cosets of closed inverse subsemigroups"};
  app.require_subcommand(1);
  int status = exit_ok;

  IndexArgs ia;
  auto*     index_cmd = app.add_subcommand("index", "cosets and index of a closed inverse subsemigroup");
  index_cmd->add_option("--semigroup,-s", ia.source, "builtin name or JSON file")->required();
  index_cmd->add_option("--gens,-g", ia.gens, "generators: element names, stab1, E, id");
  index_cmd->add_flag("--json", ia.as_json, "JSON output");
  index_cmd->add_option("--threads,-t", ia.threads, "worker threads")->capture_default_str();
  index_cmd->callback([&] { status = cmd_index(ia); });

  FimArgs fa;
  auto*   fim_cmd = app.add_subcommand("fim", "closed inverse submonoids of FIM(X)");
  fim_cmd->require_subcommand(1);
  auto add_fim_options = [&fa](CLI::App* c) {
    c->add_option("--alphabet,-a", fa.alphabet, "positive letters")->required();
    c->add_option("--gen,-g", fa.gens, "generator word (repeatable)");
  };
  auto* fim_index = fim_cmd->add_subcommand("index", "number of cosets");
  add_fim_options(fim_index);
  fim_index->callback([&] { status = cmd_fim_index(fa); });
  auto* fim_aut = fim_cmd->add_subcommand("automaton", "the folded coset automaton");
  add_fim_options(fim_aut);
  fim_aut->add_option("--format,-f", fa.format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}))
      ->capture_default_str();
  fim_aut->callback([&] { status = cmd_fim_automaton(fa); });
  auto* fim_member = fim_cmd->add_subcommand("member", "membership of a word");
  add_fim_options(fim_member);
  fim_member->add_option("--word,-w", fa.word, "the word")->required();
  fim_member->callback([&] { status = cmd_fim_member(fa); });

  FormulaArgs fo;
  auto*       formula_cmd = app.add_subcommand("formula", "check [S:K] = [S:H][H:K]");
  formula_cmd->add_option("--semigroup,-s", fo.source, "finite semigroup");
  formula_cmd->add_option("--alphabet,-a", fo.alphabet, "FIM(X) alphabet");
  formula_cmd->add_option("-H,--h-gens", fo.h, "generators of H")->required();
  formula_cmd->add_option("-K,--k-gens", fo.k, "generators of K")->required();
  formula_cmd->add_flag("--json", fo.as_json, "JSON output");
  formula_cmd->callback([&] { status = cmd_formula(fo); });

  ExamplesArgs ea;
  auto*        examples_cmd = app.add_subcommand("examples", "recompute the worked examples");
  examples_cmd->add_flag("--json", ea.as_json, "JSON output");
  examples_cmd->add_option("--override", ea.overrides, "claim=value replaces an expected value");
  examples_cmd->callback([&] { status = cmd_examples(ea); });

  F2abArgs f2;
  auto*    f2ab_cmd = app.add_subcommand("f2ab", "cosets of F2' u {0} in F2 u F2^ab");
  f2ab_cmd->add_option("--count,-n", f2.count, "number of representatives")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  f2ab_cmd->add_flag("--json", f2.as_json, "JSON output");
  f2ab_cmd->callback([&] { status = cmd_f2ab(f2); });

  std::string export_source;
  auto*       export_cmd = app.add_subcommand("export", "print a semigroup as JSON");
  export_cmd->add_option("--semigroup,-s", export_source, "builtin name or JSON file")->required();
  export_cmd->callback([&] { status = cmd_export(export_source); });

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  } catch (UsageError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (ConstructionError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    for (auto const& r : e.reasons()) {
      std::cerr << "  " << r << "\n";
    }
    return exit_usage;
  } catch (ResourceError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (InvariantError const& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return exit_mismatch;
  }
  return status;
}
