// invco - cosets of closed inverse subsemigroups
//
// Upward closure and the closed inverse subsemigroup generated by a set, the
// predicates closed / atlas / coset / full, and closed inverse submonoids of
// FIM(X) given by generator words and their folded automaton.

#ifndef INVCO_CLOSURE_HPP_
#define INVCO_CLOSURE_HPP_

#include <cstddef>
#include <deque>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "automaton.hpp"
#include "element_set.hpp"
#include "exception.hpp"
#include "munn.hpp"
#include "semigroup.hpp"

namespace invco {

  // {s : s >= a for some a in A}
  inline ElementSet up_closure(FiniteInverseSemigroup const& S, ElementSet const& A) {
    ElementSet out(S.size());
    for (auto a : A.members()) {
      out |= S.up_set(a);
    }
    return out;
  }

  inline bool is_closed(FiniteInverseSemigroup const& S, ElementSet const& A) {
    for (auto a : A.members()) {
      if (!S.up_set(a).is_subset_of(A)) {
        return false;
      }
    }
    return true;
  }

  // The inverse subsemigroup generated by Y: all nonempty products of
  // elements of Y u Y^-1.
  inline ElementSet inverse_subsemigroup_closure(FiniteInverseSemigroup const& S,
                                                 ElementSet const&             Y) {
    auto       gens = (Y | inverse_set(S, Y)).members();
    ElementSet out(S.size());
    std::deque<ElementId> queue;
    for (auto g : gens) {
      out.insert(g);
      queue.push_back(g);
    }
    while (!queue.empty()) {
      ElementId x = queue.front();
      queue.pop_front();
      for (auto g : gens) {
        ElementId xg = S.multiply(x, g);
        if (!out.contains(xg)) {
          out.insert(xg);
          queue.push_back(xg);
        }
      }
    }
    return out;
  }

  // Nonempty, closed under products and inverses, and upward closed.
  inline bool is_closed_inverse_sub(FiniteInverseSemigroup const& S,
                                    ElementSet const&             A) {
    if (A.empty() || !is_closed(S, A)) {
      return false;
    }
    auto ms = A.members();
    for (auto a : ms) {
      if (!A.contains(S.inverse(a))) {
        return false;
      }
      for (auto b : ms) {
        if (!A.contains(S.multiply(a, b))) {
          return false;
        }
      }
    }
    return true;
  }

  // A A^-1 A is contained in A.
  inline bool is_atlas(FiniteInverseSemigroup const& S, ElementSet const& A) {
    if (A.empty()) {
      throw UsageError("atlas test on the empty set");
    }
    auto ms = A.members();
    for (auto a : ms) {
      for (auto b : ms) {
        ElementId ab = S.multiply(a, S.inverse(b));
        for (auto c : ms) {
          if (!A.contains(S.multiply(ab, c))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  // A coset is a closed atlas.
  inline bool is_coset(FiniteInverseSemigroup const& S, ElementSet const& C) {
    return is_atlas(S, C) && is_closed(S, C);
  }

  // A closed inverse subsemigroup of a finite inverse semigroup.
  class FiniteClosedSub {
   public:
    FiniteClosedSub(FiniteInverseSemigroup S, ElementSet members)
        : _semigroup(std::move(S)), _members(std::move(members)) {
      if (_members.universe() != _semigroup.size()) {
        throw UsageError("subset universe does not match the semigroup");
      }
      if (!is_closed_inverse_sub(_semigroup, _members)) {
        throw UsageError("not a closed inverse subsemigroup");
      }
    }

    FiniteInverseSemigroup const& semigroup() const noexcept {
      return _semigroup;
    }

    ElementSet const& members() const noexcept {
      return _members;
    }

    bool contains(ElementId a) const {
      return _members.contains(a);
    }

    std::size_t size() const {
      return _members.size();
    }

    friend bool operator==(FiniteClosedSub const& a, FiniteClosedSub const& b) {
      return a._semigroup.same_as(b._semigroup) && a._members == b._members;
    }

   private:
    FiniteInverseSemigroup _semigroup;
    ElementSet             _members;
  };

  // The smallest closed inverse subsemigroup containing Y. The inverse
  // subsemigroup generated by Y is closed upwards once: if a >= x and b >= y
  // then ab >= xy, so the upward closure of an inverse subsemigroup is one.
  inline FiniteClosedSub generate_closed(FiniteInverseSemigroup const& S,
                                         ElementSet const&             Y) {
    ElementSet base(S.size());
    if (Y.empty()) {
      if (!S.identity()) {
        throw UsageError("empty generating set in a semigroup without identity");
      }
      base.insert(*S.identity());
    } else {
      base = inverse_subsemigroup_closure(S, Y);
    }
    ElementSet closed = up_closure(S, base);
    if (!is_closed_inverse_sub(S, closed)) {
      throw InvariantError("upward closure of an inverse subsemigroup is not closed");
    }
    return FiniteClosedSub(S, std::move(closed));
  }

  // E(S) is contained in L.
  inline bool is_full(FiniteClosedSub const& L) {
    return L.semigroup().idempotents().is_subset_of(L.members());
  }

  // A closed inverse submonoid of FIM(X) generated by finitely many words,
  // represented by the folded automaton of their bouquet. The base state is
  // the initial and only final state.
  class FimClosedSub {
   public:
    FimClosedSub(std::string alphabet, std::vector<Word> generators, FoldOptions const& opts = {})
        : _alphabet(std::move(alphabet)), _generators(std::move(generators)) {
      detail::check_alphabet(_alphabet);
      for (auto const& w : _generators) {
        check_word(w);
      }
      _automaton = fold(Bouquet::from_words(_alphabet, _generators), opts);
    }

    std::string const& alphabet() const noexcept {
      return _alphabet;
    }

    std::vector<Word> const& generators() const noexcept {
      return _generators;
    }

    InverseAutomaton const& automaton() const noexcept {
      return _automaton;
    }

    State base() const noexcept {
      return _automaton.initial();
    }

   private:
    std::string       _alphabet;
    std::vector<Word> _generators;
    InverseAutomaton  _automaton;
  };

  using ClosedInverseSub = std::variant<FiniteClosedSub, FimClosedSub>;

  namespace detail {
    inline void check_tree_alphabet(FimClosedSub const& K, MunnTree const& t) {
      for (auto const& v : t.vertices()) {
        for (char c : v) {
          char lower = c >= 'A' && c <= 'Z' ? inverse_letter(c) : c;
          if (K.alphabet().find(lower) == std::string::npos) {
            throw UsageError("letter '" + std::string(1, c)
                             + "' is not in the alphabet \"" + K.alphabet()
                             + "\"");
          }
        }
      }
    }
  }  // namespace detail

  // Every vertex of t is readable from the base, and the mark leads back to
  // the base.
  inline bool fim_membership(FimClosedSub const& K, MunnTree const& t) {
    detail::check_tree_alphabet(K, t);
    auto const& A = K.automaton();
    for (auto const& v : t.vertices()) {
      if (run_from(A, K.base(), v) == no_state) {
        return false;
      }
    }
    return run_from(A, K.base(), t.mark()) == K.base();
  }

  // ss^-1 is in K, so the coset of K through s exists.
  inline bool fim_coset_exists(FimClosedSub const& K, MunnTree const& s) {
    detail::check_tree_alphabet(K, s);
    for (auto const& v : s.vertices()) {
      if (run_from(K.automaton(), K.base(), v) == no_state) {
        return false;
      }
    }
    return true;
  }

  // K is full in FIM(X) iff it contains every idempotent (P, 1), that is,
  // iff every reduced word can be read from the base.
  inline bool is_full(FimClosedSub const& K) {
    return is_complete(K.automaton());
  }

}  // namespace invco

#endif  // INVCO_CLOSURE_HPP_
