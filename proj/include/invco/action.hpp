// invco - cosets of closed inverse subsemigroups
//
// The action of S on the cosets of L by partial bijections, the induced
// homomorphism phi_L into the symmetric inverse monoid on the cosets, coset
// automata, and enumeration of the closed inverse subsemigroups of a given
// index.

#ifndef INVCO_ACTION_HPP_
#define INVCO_ACTION_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "automaton.hpp"
#include "closure.hpp"
#include "cosets.hpp"
#include "element_set.hpp"
#include "exception.hpp"
#include "families.hpp"
#include "semigroup.hpp"

namespace invco {

  // C <| u: defined iff s uu^-1 s^-1 lies in L for the representative s of
  // C, and then the coset through su.
  inline std::optional<Coset> coset_action(FiniteClosedSub const& L,
                                           Coset const&           C,
                                           ElementId              u) {
    auto const& S  = L.semigroup();
    ElementId   s  = C.representative;
    ElementId   su = S.multiply(s, u);
    if (!L.contains(S.multiply(su, S.inverse(su)))) {
      return std::nullopt;
    }
    return coset_of(L, su);
  }

  // The same action on coset indices of a transversal.
  inline std::optional<std::size_t> coset_action(Transversal const& T,
                                                 std::size_t        i,
                                                 ElementId          u) {
    auto const& S = T.subsemigroup().semigroup();
    auto        k = T.coset_index(S.multiply(T.representative(i), u));
    if (k == Transversal::npos) {
      return std::nullopt;
    }
    return k;
  }

  // The image of u under phi_L, on the points 1..d (point 1 being L).
  inline PartialBijection coset_permutation(Transversal const& T, ElementId u) {
    std::vector<int> img(T.size(), PartialBijection::undefined);
    for (std::size_t i = 0; i < T.size(); ++i) {
      if (auto k = coset_action(T, i, u)) {
        img[i] = static_cast<int>(*k);
      }
    }
    return PartialBijection(std::move(img));
  }

  // Every element of S is a product of generator images (or the identity).
  inline bool generates(GeneratorMap const& gm) {
    auto const& S = gm.semigroup();
    ElementSet  images(S.size());
    for (char c : gm.letters()) {
      images.insert(gm.image(c));
    }
    ElementSet reached = images.empty() ? ElementSet(S.size())
                                        : inverse_subsemigroup_closure(S, images);
    if (S.identity()) {
      reached.insert(*S.identity());
    }
    return reached.size() == S.size();
  }

  struct CosetActionTable {
    std::size_t                   degree;
    Transversal                   transversal;
    std::map<char, PartialBijection> generators;
    std::vector<PartialBijection> elements;     // phi_L(s) for every s in S
    bool                          homomorphism; // phi(uv) = phi(u) phi(v)
    bool                          stabilizer;   // {s : 1 phi(s) = 1} = L

    PartialBijection const& operator()(ElementId s) const {
      return elements.at(s);
    }

    ElementSet stabilizer_of_one() const {
      auto const& S = transversal.subsemigroup().semigroup();
      ElementSet  out(S.size());
      for (ElementId s = 0; s < S.size(); ++s) {
        if (elements[s](0) == 0) {
          out.insert(s);
        }
      }
      return out;
    }
  };

  // phi_L, with the homomorphism law checked over all pairs and the
  // stabilizer of the point 1 compared against L.
  inline CosetActionTable phi_hom(GeneratorMap const& gm, FiniteClosedSub const& L) {
    auto const& S = gm.semigroup();
    if (!S.same_as(L.semigroup())) {
      throw UsageError("generator map and subsemigroup live in different semigroups");
    }
    if (!generates(gm)) {
      throw UsageError("the generator map does not generate the semigroup");
    }
    Transversal      T(L);
    CosetActionTable out{T.size(), T, {}, {}, true, true};
    for (ElementId s = 0; s < S.size(); ++s) {
      out.elements.push_back(coset_permutation(T, s));
    }
    for (char c : gm.letters()) {
      out.generators.emplace(c, out.elements[gm.image(c)]);
    }
    for (ElementId u = 0; u < S.size() && out.homomorphism; ++u) {
      for (ElementId v = 0; v < S.size(); ++v) {
        if (out.elements[S.multiply(u, v)] != out.elements[u].then(out.elements[v])) {
          out.homomorphism = false;
          break;
        }
      }
    }
    out.stabilizer = out.stabilizer_of_one() == L.members();
    return out;
  }

  // The coset automaton: states are the cosets in transversal order (state 0
  // is L, the initial and only final state) and L t -a-> L t a when defined.
  inline InverseAutomaton coset_automaton(GeneratorMap const& gm, FiniteClosedSub const& L) {
    if (!gm.semigroup().same_as(L.semigroup())) {
      throw UsageError("generator map and subsemigroup live in different semigroups");
    }
    if (!generates(gm)) {
      throw UsageError("the generator map does not generate the semigroup");
    }
    Transversal T(L);
    if (T.size() > state_cap()) {
      throw ResourceError("coset automaton exceeds the state cap");
    }
    InverseAutomaton A(gm.letters(), T.size(), 0);
    A.set_final(0);
    for (std::size_t i = 0; i < T.size(); ++i) {
      for (char c : gm.signed_letters()) {
        if (auto k = coset_action(T, i, gm.image(c))) {
          A.set_transition(static_cast<State>(i), c, static_cast<State>(*k));
        }
      }
    }
    if (!is_inverse_automaton(A)) {
      throw InvariantError("coset automaton is not an inverse automaton");
    }
    return A;
  }

  // For FIM(X) the coset automaton is the folded automaton of K.
  inline InverseAutomaton coset_automaton(FimClosedSub const& K) {
    if (!is_inverse_automaton(K.automaton())) {
      throw InvariantError("folded automaton is not an inverse automaton");
    }
    return K.automaton();
  }

  enum class Strategy { exhaustive, generators };

  struct ClosedOfIndex {
    std::vector<FiniteClosedSub> subsemigroups;  // ordered by member list
    bool                         complete;
  };

  inline constexpr std::size_t exhaustive_limit = 20;

  // All closed inverse subsemigroups of S with exactly d cosets. The
  // exhaustive strategy tests every subset of S; the generators strategy
  // takes the closures of all generator sets of at most `bound` elements and
  // is complete only when bound >= |S|.
  inline ClosedOfIndex enumerate_closed_of_index(FiniteInverseSemigroup const& S,
                                                 std::size_t                   d,
                                                 Strategy    strategy = Strategy::exhaustive,
                                                 std::size_t bound    = 3) {
    std::set<ElementSet> found;
    bool                 complete = true;
    std::size_t const    n        = S.size();
    if (strategy == Strategy::exhaustive) {
      if (n > exhaustive_limit) {
        throw ResourceError("exhaustive enumeration needs |S| <= 20");
      }
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        auto A = ElementSet::from_mask(n, mask);
        if (is_closed_inverse_sub(S, A) && index(FiniteClosedSub(S, A)) == d) {
          found.insert(std::move(A));
        }
      }
    } else {
      complete = bound >= n;
      std::vector<ElementId> chosen;
      auto visit = [&](auto&& self, ElementId next) -> void {
        if (!chosen.empty()) {
          auto L = generate_closed(S, ElementSet::from_range(n, chosen));
          if (!found.contains(L.members()) && index(L) == d) {
            found.insert(L.members());
          }
        }
        if (chosen.size() == bound) {
          return;
        }
        for (ElementId x = next; x < n; ++x) {
          chosen.push_back(x);
          self(self, x + 1);
          chosen.pop_back();
        }
      };
      visit(visit, 0);
    }
    ClosedOfIndex out{{}, complete};
    for (auto const& A : found) {
      out.subsemigroups.emplace_back(S, A);
    }
    return out;
  }

}  // namespace invco

#endif  // INVCO_ACTION_HPP_
