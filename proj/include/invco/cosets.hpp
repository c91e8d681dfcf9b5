// invco - cosets of closed inverse subsemigroups
//
// Right cosets up(Ls), their enumeration and the index, transversals and the
// delta elements that generate L, the index formula, the union of the cosets,
// and the E-unitary / minimum group congruence machinery.
//
// Finite cosets are keyed by their member set. Cosets of a closed inverse
// submonoid K of FIM(X) are keyed by the state of K's folded automaton that
// the mark of a representative leads to.

#ifndef INVCO_COSETS_HPP_
#define INVCO_COSETS_HPP_

#include <algorithm>
#include <cstddef>
#include <deque>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "automaton.hpp"
#include "closure.hpp"
#include "element_set.hpp"
#include "exception.hpp"
#include "families.hpp"
#include "json.hpp"
#include "munn.hpp"
#include "semigroup.hpp"

namespace invco {

  ////////////////////////////////////////////////////////////////////////
  // Finite cosets
  ////////////////////////////////////////////////////////////////////////

  struct Coset {
    ElementSet members;
    ElementId  representative;

    friend bool operator==(Coset const& a, Coset const& b) {
      return a.members == b.members;
    }
  };

  // The coset up(Ls), or nullopt when ss^-1 is not in L.
  inline std::optional<Coset> coset_of(FiniteClosedSub const& L, ElementId s) {
    auto const& S = L.semigroup();
    if (!L.contains(S.multiply(s, S.inverse(s)))) {
      return std::nullopt;
    }
    ElementSet Ls(S.size());
    for (auto l : L.members().members()) {
      Ls.insert(S.multiply(l, s));
    }
    return Coset{up_closure(S, Ls), s};
  }

  // a and b lie in the same coset iff ab^-1 is in L.
  inline bool same_coset(FiniteClosedSub const& L, ElementId a, ElementId b) {
    auto const& S = L.semigroup();
    for (auto x : {a, b}) {
      if (!L.contains(S.multiply(x, S.inverse(x)))) {
        throw UsageError("element " + S.name(x) + " does not determine a coset");
      }
    }
    return L.contains(S.multiply(a, S.inverse(b)));
  }

  namespace detail {
    // Representative of the coset L itself: the identity when L holds it.
    inline ElementId home_representative(FiniteClosedSub const& L) {
      auto id = L.semigroup().identity();
      return id && L.contains(*id) ? *id : L.members().first();
    }

    // Cosets of L through the elements of `within` (an upward closed subset
    // of S holding L), L first and the rest by least member. The member set
    // of every coset through an element of `within` stays inside it.
    inline std::vector<Coset> cosets_within(FiniteClosedSub const& L,
                                            ElementSet const&      within,
                                            unsigned               threads) {
      auto const& S = L.semigroup();
      std::vector<ElementId> candidates;
      for (auto s : within.members()) {
        if (L.contains(S.multiply(s, S.inverse(s)))) {
          candidates.push_back(s);
        }
      }
      std::vector<Coset> out;
      out.push_back({L.members(), home_representative(L)});
      ElementSet covered = L.members();

      if (threads <= 1 || candidates.size() < 2 * threads) {
        for (auto s : candidates) {
          if (!covered.contains(s)) {
            auto C = *coset_of(L, s);
            covered |= C.members;
            out.push_back(std::move(C));
          }
        }
        return out;
      }

      // Each worker computes the coset through its share of candidates; the
      // merge keeps the first coset met in candidate order, which is the one
      // whose least member comes first, so output matches the serial path.
      std::vector<std::optional<Coset>> computed(candidates.size());
      {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) {
          pool.emplace_back([&, t] {
            for (std::size_t i = t; i < candidates.size(); i += threads) {
              if (!L.contains(candidates[i])) {
                computed[i] = coset_of(L, candidates[i]);
              }
            }
          });
        }
      }
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (!covered.contains(candidates[i]) && computed[i]) {
          covered |= computed[i]->members;
          out.push_back(std::move(*computed[i]));
        }
      }
      return out;
    }
  }  // namespace detail

  // All right cosets of L in S: L first, then by least member, each
  // represented by its least member (L by the identity when present).
  inline std::vector<Coset> enumerate_cosets(FiniteClosedSub const& L,
                                             unsigned               threads = 1) {
    return detail::cosets_within(L, L.semigroup().all(), threads);
  }

  inline std::size_t index(FiniteClosedSub const& L) {
    return enumerate_cosets(L).size();
  }

  // [H : K] for closed inverse subsemigroups K of H.
  inline std::size_t relative_index(FiniteClosedSub const& H, FiniteClosedSub const& K) {
    if (!K.members().is_subset_of(H.members())) {
      throw UsageError("K is not contained in H");
    }
    return detail::cosets_within(K, H.members(), 1).size();
  }

  // The closed inverse subsemigroup up(CC^-1) associated with a coset.
  inline FiniteClosedSub coset_to_subsemigroup(FiniteInverseSemigroup const& S,
                                               ElementSet const&             C) {
    if (C.empty() || !is_coset(S, C)) {
      throw UsageError("not a coset");
    }
    return FiniteClosedSub(S, up_closure(S, product(S, C, inverse_set(S, C))));
  }

  struct CosetUnionReport {
    ElementSet union_set;
    bool       covers_semigroup;    // U = S
    bool       full;                // L is full
    bool       direct;              // U is a closed inverse subsemigroup
    bool       criterion;           // the (ses^-1, s^-1 s) criterion holds
    std::optional<ElementId> failure;  // where the criterion fails
  };

  // U = {s : ss^-1 in L}, with the checks on whether U is again a closed
  // inverse subsemigroup made both directly and through the criterion
  // "ses^-1 in U for e in E(L), s in U, and s^-1 s in L whenever ss^-1 in L".
  inline CosetUnionReport coset_union(FiniteClosedSub const& L) {
    auto const&      S = L.semigroup();
    CosetUnionReport r{ElementSet(S.size()), false, is_full(L), false, true, std::nullopt};
    for (ElementId s = 0; s < S.size(); ++s) {
      if (L.contains(S.multiply(s, S.inverse(s)))) {
        r.union_set.insert(s);
      }
    }
    r.covers_semigroup = r.union_set.size() == S.size();
    r.direct           = is_closed_inverse_sub(S, r.union_set);

    auto const idem_L = (S.idempotents() & L.members()).members();
    for (auto s : r.union_set.members()) {
      bool ok = L.contains(S.multiply(S.inverse(s), s));
      for (auto e : idem_L) {
        ok = ok && r.union_set.contains(S.multiply(S.multiply(s, e), S.inverse(s)));
      }
      if (!ok) {
        r.criterion = false;
        r.failure   = s;
        break;
      }
    }
    return r;
  }

  // One representative per coset, with the coset of every element of S.
  class Transversal {
   public:
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    explicit Transversal(FiniteClosedSub L, unsigned threads = 1)
        : _sub(std::move(L)), _cosets(enumerate_cosets(_sub, threads)) {
      _coset_of.assign(_sub.semigroup().size(), npos);
      for (std::size_t i = 0; i < _cosets.size(); ++i) {
        for (auto s : _cosets[i].members.members()) {
          if (_coset_of[s] != npos) {
            throw InvariantError("cosets are not disjoint");
          }
          _coset_of[s] = i;
        }
      }
    }

    FiniteClosedSub const& subsemigroup() const noexcept {
      return _sub;
    }

    std::vector<Coset> const& cosets() const noexcept {
      return _cosets;
    }

    std::size_t size() const noexcept {
      return _cosets.size();
    }

    ElementId representative(std::size_t i) const {
      return _cosets.at(i).representative;
    }

    std::vector<ElementId> representatives() const {
      std::vector<ElementId> out;
      for (auto const& c : _cosets) {
        out.push_back(c.representative);
      }
      return out;
    }

    // Index of the coset holding s, or npos when ss^-1 is not in L.
    std::size_t coset_index(ElementId s) const {
      return _coset_of.at(s);
    }

    // The representative of the coset holding s.
    std::optional<ElementId> bar(ElementId s) const {
      auto i = coset_index(s);
      if (i == npos) {
        return std::nullopt;
      }
      return representative(i);
    }

   private:
    FiniteClosedSub          _sub;
    std::vector<Coset>       _cosets;
    std::vector<std::size_t> _coset_of;
  };

  inline Transversal transversal(FiniteClosedSub const& L) {
    return Transversal(L);
  }

  // delta(r, s) = rs (bar(rs))^-1, an element of L whenever it is defined.
  inline std::optional<ElementId> delta(Transversal const& T, ElementId r, ElementId s) {
    auto const& S  = T.subsemigroup().semigroup();
    ElementId   rs = S.multiply(r, s);
    auto        b  = T.bar(rs);
    if (!b) {
      return std::nullopt;
    }
    return S.multiply(rs, S.inverse(*b));
  }

  struct SchreierResult {
    ElementSet      generators;  // the defined delta(r, a)
    FiniteClosedSub generated;   // the closed inverse subsemigroup they generate
    bool            verified;    // generated == L
  };

  // The elements delta(r, a) for r in the transversal and a a generator or
  // its inverse. When S has no identity the formal identity is added to the
  // transversal (contributing a bar(a)^-1) together with the representative
  // of L, so the telescoping product of deltas still lies below each h in L.
  inline SchreierResult schreier_generators(GeneratorMap const& gm,
                                            FiniteClosedSub const& L) {
    auto const& S = gm.semigroup();
    if (!S.same_as(L.semigroup())) {
      throw UsageError("generator map and subsemigroup live in different semigroups");
    }
    Transversal T(L);
    ElementSet  gens(S.size());
    for (char a : gm.signed_letters()) {
      ElementId image = gm.image(a);
      for (auto r : T.representatives()) {
        if (auto d = delta(T, r, image)) {
          gens.insert(*d);
        }
      }
      if (!S.identity()) {
        if (auto b = T.bar(image)) {
          gens.insert(S.multiply(image, S.inverse(*b)));
        }
      }
    }
    if (!S.identity()) {
      gens.insert(T.representative(0));
    }
    if (!gens.is_subset_of(L.members())) {
      throw InvariantError("a delta element lies outside L");
    }
    auto generated = generate_closed(S, gens);
    bool ok        = generated.members() == L.members();
    return {std::move(gens), std::move(generated), ok};
  }

  struct IndexReport {
    std::size_t s_k;  // [S:K]
    std::size_t s_h;  // [S:H]
    std::size_t h_k;  // [H:K]
    bool        k_full;
    bool        h_full;

    bool holds() const noexcept {
      return s_k == s_h * h_k;
    }

    std::string verdict() const {
      return holds() ? "holds" : "fails";
    }

    std::vector<std::string> flags() const {
      std::vector<std::string> out;
      if (!k_full) {
        out.emplace_back("K not full");
      }
      return out;
    }

    nlohmann::json to_json() const {
      return {{"index_S_K", s_k},
              {"index_S_H", s_h},
              {"index_H_K", h_k},
              {"K_full", k_full},
              {"H_full", h_full},
              {"hypothesis", k_full ? "K full" : "K not full"},
              {"verdict", verdict()}};
    }
  };

  // [S:K] against [S:H][H:K]. Equality is guaranteed when K is full; the
  // report is produced either way.
  inline IndexReport check_index_formula(FiniteClosedSub const& H,
                                         FiniteClosedSub const& K) {
    if (!H.semigroup().same_as(K.semigroup())) {
      throw UsageError("H and K live in different semigroups");
    }
    if (!K.members().is_subset_of(H.members())) {
      throw UsageError("K is not contained in H");
    }
    return {index(K), index(H), relative_index(H, K), is_full(K), is_full(H)};
  }

  ////////////////////////////////////////////////////////////////////////
  // E-unitary semigroups and the minimum group congruence
  ////////////////////////////////////////////////////////////////////////

  inline bool is_e_unitary(FiniteInverseSemigroup const& S) {
    return up_closure(S, S.idempotents()) == S.idempotents();
  }

  // Class number of each element under s ~ t iff es = et for some
  // idempotent e; classes are numbered in order of their least member.
  inline std::vector<std::size_t> sigma_classes(FiniteInverseSemigroup const& S) {
    auto const  idem = S.idempotents().members();
    auto        related = [&](ElementId s, ElementId t) {
      for (auto e : idem) {
        if (S.multiply(e, s) == S.multiply(e, t)) {
          return true;
        }
      }
      return false;
    };
    std::size_t const        none = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> cls(S.size(), none);
    std::size_t              next = 0;
    for (ElementId s = 0; s < S.size(); ++s) {
      if (cls[s] != none) {
        continue;
      }
      cls[s] = next;
      for (ElementId t = s + 1; t < S.size(); ++t) {
        if (cls[t] == none && related(s, t)) {
          cls[t] = next;
        }
      }
      ++next;
    }
    return cls;
  }

  struct GroupImage {
    FiniteInverseSemigroup   group;
    std::vector<std::size_t> class_of;
  };

  // S / sigma, checked to be a group.
  inline GroupImage max_group_image(FiniteInverseSemigroup const& S) {
    auto        cls = sigma_classes(S);
    std::size_t k   = 1 + *std::max_element(cls.begin(), cls.end());
    std::vector<ElementId> rep(k);
    for (ElementId s = S.size(); s-- > 0;) {
      rep[cls[s]] = s;
    }
    Table                    table(k, std::vector<ElementId>(k));
    std::vector<std::string> names;
    for (std::size_t i = 0; i < k; ++i) {
      names.push_back("[" + S.name(rep[i]) + "]");
      for (std::size_t j = 0; j < k; ++j) {
        table[i][j] = static_cast<ElementId>(cls[S.multiply(rep[i], rep[j])]);
      }
    }
    // The product must not depend on the representatives.
    for (ElementId s = 0; s < S.size(); ++s) {
      for (ElementId t = 0; t < S.size(); ++t) {
        if (cls[S.multiply(s, t)] != table[cls[s]][cls[t]]) {
          throw InvariantError("sigma is not a congruence");
        }
      }
    }
    FiniteInverseSemigroup G(std::move(names), table);
    if (!is_group(G)) {
      throw InvariantError("quotient by sigma is not a group");
    }
    return {std::move(G), std::move(cls)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Cosets in FIM(X)
  ////////////////////////////////////////////////////////////////////////

  struct FimCoset {
    State state;           // base <| mark of any representative
    Word  representative;  // a word evaluating to a member

    friend bool operator==(FimCoset const& a, FimCoset const& b) {
      return a.state == b.state;
    }
  };

  // The coset up(Ks), or nullopt when ss^-1 is not in K.
  inline std::optional<FimCoset> coset_of(FimClosedSub const& K, MunnTree const& s) {
    if (!fim_coset_exists(K, s)) {
      return std::nullopt;
    }
    return FimCoset{run_from(K.automaton(), K.base(), s.mark()), traversal_word(s)};
  }

  inline std::optional<FimCoset> coset_of(FimClosedSub const& K, std::string_view word) {
    auto c = coset_of(K, munn_tree(word));
    if (c) {
      c->representative = Word(word);
    }
    return c;
  }

  inline bool same_coset(FimClosedSub const& K, MunnTree const& a, MunnTree const& b) {
    if (!fim_coset_exists(K, a) || !fim_coset_exists(K, b)) {
      throw UsageError("element does not determine a coset");
    }
    return fim_membership(K, mt_multiply(a, mt_inverse(b)));
  }

  // One coset per state of the folded automaton, represented by the
  // shortlex-least word reaching it.
  inline std::vector<FimCoset> enumerate_cosets(FimClosedSub const& K) {
    auto const            words = shortlex_words(K.automaton());
    std::vector<FimCoset> out;
    for (State s = 0; s < K.automaton().size(); ++s) {
      if (words[s]) {
        out.push_back({s, *words[s]});
      }
    }
    return out;
  }

  inline std::size_t index(FimClosedSub const& K) {
    return enumerate_cosets(K).size();
  }

  // Shortlex transversal, indexed by state.
  inline std::vector<Word> transversal(FimClosedSub const& K) {
    std::vector<Word> out;
    for (auto const& c : enumerate_cosets(K)) {
      out.push_back(c.representative);
    }
    return out;
  }

  // delta(r, s) = r s bar(rs)^-1 as a word, or nullopt when the coset of rs
  // does not exist.
  inline std::optional<Word> delta(FimClosedSub const&      K,
                                   std::vector<Word> const& T,
                                   std::string_view         r,
                                   std::string_view         s) {
    Word const rs    = Word(r) + Word(s);
    State      state = run_from(K.automaton(), K.base(), rs);
    if (state == no_state) {
      return std::nullopt;
    }
    return rs + inverse_word(T.at(state));
  }

  struct FimSchreierResult {
    std::vector<Word> generators;
    FimClosedSub      generated;
    bool              verified;  // folded automata are isomorphic
  };

  inline FimSchreierResult schreier_generators(FimClosedSub const& K) {
    auto const        T = transversal(K);
    std::vector<Word> gens;
    for (auto const& r : T) {
      for (std::size_t a = 0; a < K.automaton().number_of_letters(); ++a) {
        if (auto d = delta(K, T, r, std::string(1, K.automaton().letter(a)))) {
          if (!fim_membership(K, munn_tree(*d))) {
            throw InvariantError("a delta element lies outside K");
          }
          gens.push_back(*d);
        }
      }
    }
    FimClosedSub generated(K.alphabet(), gens);
    bool         ok = is_isomorphic(generated.automaton(), K.automaton());
    return {std::move(gens), std::move(generated), ok};
  }

  // Cross-check of states against cosets: the shortlex words of distinct
  // states lie in distinct cosets and each state word determines a coset.
  inline bool verify_state_coset_bijection(FimClosedSub const& K) {
    auto const               cosets = enumerate_cosets(K);
    std::vector<MunnTree>    trees;
    for (auto const& c : cosets) {
      trees.push_back(munn_tree(c.representative));
      if (!fim_coset_exists(K, trees.back())) {
        return false;
      }
    }
    for (std::size_t i = 0; i < trees.size(); ++i) {
      for (std::size_t j = 0; j < trees.size(); ++j) {
        if (same_coset(K, trees[i], trees[j]) != (i == j)) {
          return false;
        }
      }
    }
    return true;
  }

  // [H : K] for K contained in H: the states q of K's automaton such that
  // (base_H, q) is reachable from (base_H, base_K) in the product automaton.
  inline std::size_t relative_index(FimClosedSub const& H, FimClosedSub const& K) {
    auto const& A = H.automaton();
    auto const& B = K.automaton();
    if (A.alphabet() != B.alphabet()) {
      throw UsageError("H and K are over different alphabets");
    }
    std::map<std::pair<State, State>, bool> seen;
    std::deque<std::pair<State, State>>     queue{{H.base(), K.base()}};
    seen[{H.base(), K.base()}] = true;
    std::vector<bool> home(B.size(), false);
    while (!queue.empty()) {
      auto [p, q] = queue.front();
      queue.pop_front();
      if (p == H.base()) {
        home[q] = true;
      }
      for (std::size_t a = 0; a < A.number_of_letters(); ++a) {
        State p2 = A.target(p, a), q2 = B.target(q, a);
        if (p2 != no_state && q2 != no_state && !seen[{p2, q2}]) {
          seen[{p2, q2}] = true;
          queue.emplace_back(p2, q2);
        }
      }
    }
    return static_cast<std::size_t>(std::count(home.begin(), home.end(), true));
  }

  // K is contained in H iff every generator of K lies in H.
  inline bool is_contained(FimClosedSub const& K, FimClosedSub const& H) {
    for (auto const& w : K.generators()) {
      if (!fim_membership(H, munn_tree(w))) {
        return false;
      }
    }
    return true;
  }

  inline IndexReport check_index_formula(FimClosedSub const& H, FimClosedSub const& K) {
    if (!is_contained(K, H)) {
      throw UsageError("K is not contained in H");
    }
    return {index(K), index(H), relative_index(H, K), is_full(K), is_full(H)};
  }

}  // namespace invco

#endif  // INVCO_COSETS_HPP_
