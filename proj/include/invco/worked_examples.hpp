// invco - cosets of closed inverse subsemigroups
//
// The worked examples recomputed end to end: each claim pairs a computed
// value with its expected constant. Expected values may be overridden,
// which is how the failure path is exercised.

#ifndef INVCO_WORKED_EXAMPLES_HPP_
#define INVCO_WORKED_EXAMPLES_HPP_

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "builtins.hpp"
#include "closure.hpp"
#include "cosets.hpp"
#include "exception.hpp"
#include "families.hpp"
#include "json.hpp"
#include "semigroup.hpp"

namespace invco {

  struct Claim {
    std::string name;
    std::string computed;
    std::string expected;

    bool passed() const {
      return computed == expected;
    }
  };

  struct ExampleReport {
    std::vector<Claim> claims;

    bool all_passed() const {
      for (auto const& c : claims) {
        if (!c.passed()) {
          return false;
        }
      }
      return true;
    }

    std::vector<Claim> failures() const {
      std::vector<Claim> out;
      for (auto const& c : claims) {
        if (!c.passed()) {
          out.push_back(c);
        }
      }
      return out;
    }

    nlohmann::json to_json() const {
      nlohmann::json list = nlohmann::json::array();
      for (auto const& c : claims) {
        list.push_back({{"claim", c.name},
                        {"computed", c.computed},
                        {"expected", c.expected},
                        {"pass", c.passed()}});
      }
      return {{"claims", list}, {"all_pass", all_passed()}};
    }
  };

  namespace detail {
    inline std::string set_string(FiniteInverseSemigroup const& S, ElementSet const& A) {
      std::string out = "{";
      for (auto a : A.members()) {
        out += (out.size() > 1 ? "," : "") + S.name(a);
      }
      return out + "}";
    }
  }  // namespace detail

  // Computes every claim; `overrides` replaces expected values by claim name.
  inline ExampleReport worked_examples(std::map<std::string, std::string> const& overrides = {}) {
    ExampleReport report;
    auto          add = [&](std::string name, std::string computed, std::string expected) {
      if (auto it = overrides.find(name); it != overrides.end()) {
        expected = it->second;
      }
      report.claims.push_back({std::move(name), std::move(computed), std::move(expected)});
    };
    auto num = [](std::size_t n) {
      return std::to_string(n);
    };

    // Brandt semigroup B_2.
    {
      auto S  = brandt(2);
      auto p  = [&](std::size_t x, std::size_t y) { return brandt_pair(2, x, y); };
      add("B2: (1,2)(2,1)", S.name(S.multiply(p(1, 2), p(2, 1))), "(1,1)");
      add("B2: (1,2)(1,2)", S.name(S.multiply(p(1, 2), p(1, 2))), "0");
      add("B2: idempotents", detail::set_string(S, S.idempotents()), "{(1,1),(2,2),0}");
      add("B2: (1,2) <= (2,2)", S.natural_leq(p(1, 2), p(2, 2)) ? "true" : "false", "false");
      auto E1 = generate_closed(S, ElementSet::from_range(5, std::vector<ElementId>{p(1, 1)}));
      add("B2: E_1", detail::set_string(S, E1.members()), "{(1,1)}");
      add("B2: [B2:E_1]", num(index(E1)), "2");
      add("B2: coset union of E_1", detail::set_string(S, coset_union(E1).union_set), "{(1,1),(1,2)}");
    }

    // Symmetric inverse monoid I_3.
    {
      auto S    = symmetric_inverse_monoid(3);
      auto L    = FiniteClosedSub(S, stabilizer_of_one(S));
      auto K    = generate_closed(S, parse_generators(S, "{1->1,2->3,3->2}"));
      add("I3: |I3|", num(S.size()), "34");
      add("I3: |stab(1)|", num(L.size()), "7");
      add("I3: [I3:stab(1)]", num(index(L)), "3");
      add("I3: |K|", num(K.size()), "2");
      add("I3: [stab(1):K]", num(relative_index(L, K)), "1");
      add("I3: [I3:K]", num(index(K)), "3");
      auto rep = check_index_formula(L, K);
      add("I3: [I3:K] = [I3:stab(1)][stab(1):K]", rep.verdict(), "holds");
      add("I3: K full", rep.k_full ? "true" : "false", "false");
      // C_2 = {s : 1s = 2}
      ElementSet C2(S.size());
      for (ElementId a = 0; a < S.size(); ++a) {
        if (as_partial_bijection(S, a)(0) == 1) {
          C2.insert(a);
        }
      }
      auto c = coset_of(L, element(S, "{1->2}"));
      add("I3: coset of stab(1) through {1->2} is C_2",
          c && c->members == C2 ? "true" : "false",
          "true");
    }

    // FIM(x, y).
    {
      FimClosedSub K("xy", {"xx"});
      FimClosedSub H("xy", {"xx", "yy"});
      add("FIM: [FIM:<x^2>]", num(index(K)), "2");
      add("FIM: [FIM:<x^2,y^2>]", num(index(H)), "3");
      add("FIM: [<x^2,y^2>:<x^2>]", num(relative_index(H, K)), "1");
      auto rep = check_index_formula(H, K);
      add("FIM: index formula", rep.verdict(), "fails");
      add("FIM: <x^2> full", rep.k_full ? "true" : "false", "false");
    }

    // Clifford semigroup C_4 u C_4.
    {
      auto S = clifford(cyclic_group(4));
      auto E = generate_closed(S, S.idempotents());
      auto H = generate_closed(S, parse_generators(S, "(1,a^2) (0,e)"));
      add("cliffordC4: [S:E]", num(index(E)), "4");
      add("cliffordC4: |S^|", num(max_group_image(S).group.size()), "4");
      add("cliffordC4: [S:H]", num(index(H)), "2");
      add("cliffordC4: [H:E]", num(relative_index(H, E)), "2");
      add("cliffordC4: index formula", check_index_formula(H, E).verdict(), "holds");
    }
    return report;
  }

}  // namespace invco

#endif  // INVCO_WORKED_EXAMPLES_HPP_
