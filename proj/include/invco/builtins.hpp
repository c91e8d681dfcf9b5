// invco - cosets of closed inverse subsemigroups
//
// Named semigroups, standard generator maps, and the generator-set syntax
// used on the command line: element names separated by whitespace or ';',
// plus the macros stab1 (maps fixing 1 in I_n), E (all idempotents) and id.

#ifndef INVCO_BUILTINS_HPP_
#define INVCO_BUILTINS_HPP_

#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "element_set.hpp"
#include "exception.hpp"
#include "families.hpp"
#include "semigroup.hpp"

namespace invco {

  inline std::vector<std::string> builtin_names() {
    return {"I1", "I2", "I3", "I4", "B2", "B3", "cliffordC2", "cliffordC4"};
  }

  inline FiniteInverseSemigroup builtin_semigroup(std::string_view name) {
    if (name.size() == 2 && name[0] == 'I' && name[1] >= '1' && name[1] <= '5') {
      return symmetric_inverse_monoid(static_cast<std::size_t>(name[1] - '0'));
    }
    if (name.size() == 2 && name[0] == 'B' && name[1] >= '1' && name[1] <= '9') {
      return brandt(static_cast<std::size_t>(name[1] - '0'));
    }
    if (name == "cliffordC2") {
      return clifford(cyclic_group(2));
    }
    if (name == "cliffordC4") {
      return clifford(cyclic_group(4));
    }
    throw UsageError("unknown semigroup \"" + std::string(name) + "\"");
  }

  // {s : 1s = 1} in I_n.
  inline ElementSet stabilizer_of_one(FiniteInverseSemigroup const& In) {
    ElementSet out(In.size());
    for (ElementId a = 0; a < In.size(); ++a) {
      if (as_partial_bijection(In, a)(0) == 0) {
        out.insert(a);
      }
    }
    return out;
  }

  inline std::vector<std::string> split_generators(std::string_view text) {
    std::vector<std::string> out;
    std::string              current;
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c)) || c == ';') {
        if (!current.empty()) {
          out.push_back(current);
          current.clear();
        }
      } else {
        current += c;
      }
    }
    if (!current.empty()) {
      out.push_back(current);
    }
    return out;
  }

  // The set of elements named by a generator string.
  inline ElementSet parse_generators(FiniteInverseSemigroup const& S, std::string_view text) {
    ElementSet out(S.size());
    for (auto const& token : split_generators(text)) {
      if (token == "stab1") {
        out |= stabilizer_of_one(S);
      } else if (token == "E") {
        out |= S.idempotents();
      } else if (token == "id") {
        if (!S.identity()) {
          throw UsageError("the semigroup has no identity");
        }
        out.insert(*S.identity());
      } else if (auto a = S.find(token)) {
        out.insert(*a);
      } else {
        throw UsageError("unknown element \"" + token + "\"");
      }
    }
    return out;
  }

  inline ElementId element(FiniteInverseSemigroup const& S, std::string_view name) {
    auto a = S.find(name);
    if (!a) {
      throw UsageError("unknown element \"" + std::string(name) + "\"");
    }
    return *a;
  }

  // x -> (12), y -> (123), z -> the identity on {2, 3}.
  inline GeneratorMap i3_generators(FiniteInverseSemigroup const& I3) {
    return GeneratorMap(I3,
                        {{'x', element(I3, "{1->2,2->1,3->3}")},
                         {'y', element(I3, "{1->2,2->3,3->1}")},
                         {'z', element(I3, "{2->2,3->3}")}});
  }

  // x -> the transposition, y -> the identity on {1}.
  inline GeneratorMap i2_generators(FiniteInverseSemigroup const& I2) {
    return GeneratorMap(I2, {{'x', element(I2, "{1->2,2->1}")}, {'y', element(I2, "{1->1}")}});
  }

  // x -> (1,2).
  inline GeneratorMap b2_generators(FiniteInverseSemigroup const& B2) {
    return GeneratorMap(B2, {{'x', element(B2, "(1,2)")}});
  }

}  // namespace invco

#endif  // INVCO_BUILTINS_HPP_
