// invco - cosets of closed inverse subsemigroups
//
// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "invco/invco.hpp"
#include "support.hpp"

using namespace invco;
using namespace invco::testing;

namespace {

  struct Outcome {
    bool        pass;
    std::string detail;
  };

  std::string num(std::size_t n) {
    return std::to_string(n);
  }

  ElementSet singleton(FiniteInverseSemigroup const& S, std::string const& name) {
    return ElementSet::from_range(S.size(), std::vector<ElementId>{element(S, name)});
  }

  std::vector<ElementSet> nonempty_subsets(std::size_t n) {
    std::vector<ElementSet> out;
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
      out.push_back(ElementSet::from_mask(n, m));
    }
    return out;
  }

  // Free reduction by deleting the leftmost cancelling pair until none is left.
  std::string naive_reduce(std::string w) {
    for (std::size_t i = 0; i + 1 < w.size();) {
      if (w[i] != w[i + 1] && std::tolower(w[i]) == std::tolower(w[i + 1])) {
        w.erase(i, 2);
        i = 0;
      } else {
        ++i;
      }
    }
    return w;
  }

  // Words of the free inverse monoid are equal iff they have the same set of
  // reduced prefixes and the same reduced form.
  std::pair<std::set<std::string>, std::string> prefix_oracle(std::string const& w) {
    std::set<std::string> prefixes;
    for (std::size_t i = 0; i <= w.size(); ++i) {
      prefixes.insert(naive_reduce(w.substr(0, i)));
    }
    return {prefixes, naive_reduce(w)};
  }

  // Membership in up<x^2> or up<x^2, y^2> read off a word: every maximal run
  // of one letter pair has even exponent sum, and `letters` lists the pairs
  // allowed at all.
  bool block_parity(std::string const& w, std::string const& letters) {
    std::size_t i = 0;
    while (i < w.size()) {
      char base = static_cast<char>(std::tolower(w[i]));
      if (letters.find(base) == std::string::npos) {
        return false;
      }
      long sum = 0;
      for (; i < w.size() && std::tolower(w[i]) == base; ++i) {
        sum += w[i] == base ? 1 : -1;
      }
      if (sum % 2 != 0) {
        return false;
      }
    }
    return true;
  }

  // The standard generator map of a semigroup of the closed family.
  GeneratorMap generators_for(FiniteInverseSemigroup const& S) {
    switch (S.size()) {
      case 5: return b2_generators(S);
      case 7: return i2_generators(S);
      default: return i3_generators(S);
    }
  }

  //////////////////////////////////////////////////////////////////////////

  Outcome criterion_1() {
    auto            I3 = symmetric_inverse_monoid(3);
    FiniteClosedSub L(I3, stabilizer_of_one(I3));
    std::size_t     n = L.size(), d = index(L);
    return {n == 7 && d == 3, "|stab(1)| = " + num(n) + ", [I3:stab(1)] = " + num(d)};
  }

  Outcome criterion_2() {
    auto            I3 = symmetric_inverse_monoid(3);
    FiniteClosedSub L(I3, stabilizer_of_one(I3));
    auto            K    = generate_closed(I3, singleton(I3, "{1->1,2->3,3->2}"));
    std::size_t     l_k  = relative_index(L, K);
    std::size_t     s_k  = index(K);
    std::size_t     s_l  = index(L);
    bool            pass = K.size() == 2 && l_k == 1 && s_k == 3 && s_k == s_l * l_k;
    return {pass, "[stab(1):K] = " + num(l_k) + ", [I3:K] = " + num(s_k) + " = " + num(s_l)
                      + "*" + num(l_k)};
  }

  Outcome criterion_3() {
    auto B2   = brandt(2);
    auto E1   = generate_closed(B2, singleton(B2, "(1,1)"));
    auto U    = coset_union(E1).union_set;
    auto want = singleton(B2, "(1,1)") | singleton(B2, "(1,2)");
    return {index(E1) == 2 && U == want,
            "[B2:E1] = " + num(index(E1)) + ", coset union has " + num(U.size()) + " elements"};
  }

  Outcome criterion_4() {
    FimClosedSub K("xy", {"xx"});
    FimClosedSub H("xy", {"xx", "yy"});
    auto         r    = check_index_formula(H, K);
    bool         flag = r.flags() == std::vector<std::string>{"K not full"};
    bool pass = index(K) == 2 && index(H) == 3 && relative_index(H, K) == 1 && !r.holds() && flag
                && r.s_k == 2 && r.s_h == 3 && r.h_k == 1;
    return {pass, "[FIM:K] = " + num(r.s_k) + ", [FIM:H] = " + num(r.s_h) + ", [H:K] = "
                      + num(r.h_k) + ", formula " + r.verdict() + (flag ? " (K not full)" : "")};
  }

  Outcome criterion_5() {
    auto        S = clifford(cyclic_group(4));
    auto        E = generate_closed(S, S.idempotents());
    auto        H = generate_closed(S, S.idempotents() | singleton(S, "(1,a^2)"));
    std::size_t s_e = index(E), hat = max_group_image(S).group.size();
    std::size_t s_h = index(H), h_e = relative_index(H, E);
    bool pass = s_e == 4 && hat == 4 && is_full(H) && H.size() == 4 && s_h * h_e == s_e;
    return {pass, "[S:E] = " + num(s_e) + ", |S^| = " + num(hat) + ", [S:H][H:E] = "
                      + num(s_h) + "*" + num(h_e)};
  }

  Outcome criterion_6() {
    std::size_t checked = 0, mismatches = 0;
    for (auto const& S : {brandt(2), symmetric_inverse_monoid(2)}) {
      for (auto const& C : nonempty_subsets(S.size())) {
        auto L       = up_closure(S, product(S, C, inverse_set(S, C)));
        bool witness = false;
        for (auto s : C.members()) {
          auto Ls = product(S, L, ElementSet::from_range(S.size(), std::vector<ElementId>{s}));
          if (L.contains(S.multiply(s, S.inverse(s))) && up_closure(S, Ls) == C) {
            witness = true;
          }
        }
        mismatches += is_coset(S, C) != witness;
        ++checked;
      }
    }
    return {checked == 31 + 127 && mismatches == 0,
            num(checked) + " subsets, " + num(mismatches) + " mismatches"};
  }

  Outcome criterion_7(std::vector<FiniteClosedSub> const& family) {
    std::size_t mismatches = 0, pairs = 0;
    for (auto const& L : family) {
      auto const& S      = L.semigroup();
      ElementSet  seen(S.size());
      for (auto const& C : enumerate_cosets(L)) {
        mismatches += C.members.intersects(seen);
        seen |= C.members;
        mismatches += !(coset_to_subsemigroup(S, C.members) == L);
      }
      std::vector<std::optional<Coset>> cosets;
      for (ElementId a = 0; a < S.size(); ++a) {
        cosets.push_back(coset_of(L, a));
      }
      for (ElementId a = 0; a < S.size(); ++a) {
        for (ElementId b = 0; b < S.size(); ++b) {
          if (cosets[a] && cosets[b]) {
            ++pairs;
            mismatches += same_coset(L, a, b) != (cosets[a]->members == cosets[b]->members);
          }
        }
      }
    }
    return {mismatches == 0, num(family.size()) + " subsemigroups, " + num(pairs)
                                 + " element pairs, " + num(mismatches) + " mismatches"};
  }

  Outcome criterion_8(std::vector<FiniteClosedSub> const& family) {
    std::size_t mismatches = 0, closed = 0;
    for (auto const& L : family) {
      auto r = coset_union(L);
      mismatches += r.direct != r.criterion;
      closed += r.direct;
    }
    return {mismatches == 0, num(family.size()) + " subsemigroups (" + num(closed)
                                 + " with closed union), " + num(mismatches) + " mismatches"};
  }

  Outcome criterion_9() {
    std::mt19937_64 rng(2024);
    std::size_t     holds = 0;
    for (int trial = 0; trial < 100; ++trial) {
      auto S = random_clifford(rng);
      auto K = generate_closed(S, S.idempotents() | random_subset(S, rng, rng() % 3));
      auto H = generate_closed(S, K.members() | random_subset(S, rng, rng() % 3));
      holds += is_full(K) && check_index_formula(H, K).holds();
    }
    return {holds == 100, num(holds) + "/100"};
  }

  Outcome criterion_10() {
    std::size_t checks = 0, mismatches = 0;
    auto        I3 = symmetric_inverse_monoid(3);
    auto        B2 = brandt(2);
    for (auto const& L : {FiniteClosedSub(I3, stabilizer_of_one(I3)),
                          generate_closed(B2, singleton(B2, "(1,1)"))}) {
      auto const& S = L.semigroup();
      Transversal T(L);
      for (std::size_t i = 0; i < T.size(); ++i) {
        std::set<std::size_t> reached;
        for (ElementId u = 0; u < S.size(); ++u) {
          auto iu = coset_action(T, i, u);
          if (iu) {
            reached.insert(*iu);
          }
          for (ElementId v = 0; v < S.size(); ++v) {
            auto lhs = iu ? coset_action(T, *iu, v) : std::nullopt;
            mismatches += lhs != coset_action(T, i, S.multiply(u, v));
            ++checks;
          }
        }
        mismatches += reached.size() != T.size();
      }
    }
    return {mismatches == 0, num(checks) + " compositions, " + num(mismatches) + " mismatches"};
  }

  Outcome criterion_11() {
    auto        I2 = symmetric_inverse_monoid(2);
    auto        I3 = symmetric_inverse_monoid(3);
    std::size_t tables = 0, bad = 0, collisions = 0;
    for (auto const& [gm, family] :
         {std::pair{i2_generators(I2), generated_family(I2, 7)},
          std::pair{i3_generators(I3), generated_family(I3, 2)}}) {
      std::map<std::size_t, std::set<std::vector<PartialBijection>>> by_degree;
      std::map<std::size_t, std::size_t>                             count;
      for (auto const& L : family) {
        auto phi = phi_hom(gm, L);
        bad += !phi.homomorphism || !phi.stabilizer;
        by_degree[phi.degree].insert(phi.elements);
        ++count[phi.degree];
        ++tables;
      }
      for (auto const& [d, distinct] : by_degree) {
        collisions += count[d] - distinct.size();
      }
    }
    auto B2 = brandt(2);
    auto d2 = enumerate_closed_of_index(B2, 2);
    std::set<ElementSet> got;
    for (auto const& L : d2.subsemigroups) {
      got.insert(L.members());
    }
    std::set<ElementSet> want{singleton(B2, "(1,1)"), singleton(B2, "(2,2)")};
    bool                 b2 = got == want && d2.subsemigroups.size() == 2;
    return {bad == 0 && collisions == 0 && b2,
            num(tables) + " actions, " + num(bad) + " failures, " + num(collisions)
                + " collisions, index-2 subsemigroups of B2 " + (b2 ? "= {E1, E2}" : "wrong")};
  }

  Outcome criterion_12(std::vector<FiniteClosedSub> const& family) {
    std::size_t pairs = 0, failures = 0;
    for (auto const& L : family) {
      auto const  gm = generators_for(L.semigroup());
      failures += !schreier_generators(gm, L).verified;
      ++pairs;
    }
    std::vector<std::vector<Word>> fim{{"xx"}, {"xx", "yy"}, {"xy"}, {"xyXY", "yx"}, {"x", "y"}};
    for (auto const& gens : fim) {
      failures += !schreier_generators(FimClosedSub("xy", gens)).verified;
      ++pairs;
    }
    return {failures == 0, num(pairs) + " pairs, " + num(failures) + " failures"};
  }

  // Walks every word of length at most `depth` over the signed letters of
  // gm, comparing acceptance with membership of the value in L.
  std::size_t language_mismatches(GeneratorMap const&     gm,
                                  FiniteClosedSub const&  L,
                                  InverseAutomaton const& A,
                                  std::size_t             depth,
                                  std::size_t&            words) {
    auto const& S       = gm.semigroup();
    std::string letters = gm.signed_letters();
    std::size_t bad     = 0;
    auto walk = [&](auto&& self, std::optional<ElementId> value, State state, std::size_t len) -> void {
      if (value) {
        ++words;
        bad += (state != no_state && A.is_final(state)) != L.contains(*value);
      }
      if (len == depth) {
        return;
      }
      for (char c : letters) {
        ElementId next = value ? S.multiply(*value, gm.image(c)) : gm.image(c);
        State     to   = state == no_state ? no_state : A.target(state, c);
        self(self, next, to, len + 1);
      }
    };
    walk(walk, S.identity(), A.initial(), 0);
    return bad;
  }

  Outcome criterion_13(std::vector<FiniteClosedSub> const& family) {
    std::size_t pairs = 0, words = 0, mismatches = 0, not_minimal = 0;
    for (auto const& L : family) {
      auto const  gm = generators_for(L.semigroup());
      auto        A  = coset_automaton(gm, L);
      mismatches += language_mismatches(gm, L, A, 6, words);
      not_minimal += minimize(A).size() != A.size();
      ++pairs;
    }
    for (auto const& [gens, letters] :
         {std::pair{std::vector<Word>{"xx"}, std::string("x")},
          std::pair{std::vector<Word>{"xx", "yy"}, std::string("xy")}}) {
      auto A = coset_automaton(FimClosedSub("xy", gens));
      for (auto const& w : all_words("xy", 6)) {
        mismatches += accepts(A, w) != block_parity(w, letters);
        ++words;
      }
      not_minimal += minimize(A).size() != A.size();
      ++pairs;
    }
    return {mismatches == 0 && not_minimal == 0,
            num(pairs) + " pairs, " + num(words) + " words, " + num(mismatches)
                + " mismatches, " + num(not_minimal) + " reducible automata"};
  }

  Outcome criterion_14() {
    auto                                                       words = all_words("xy", 5);
    std::vector<std::pair<std::set<std::string>, std::string>> oracle;
    for (auto const& w : words) {
      oracle.push_back(prefix_oracle(w));
    }
    std::size_t pairs = 0, mismatches = 0;
    for (std::size_t i = 0; i < words.size(); ++i) {
      for (std::size_t j = 0; j < words.size(); ++j) {
        mismatches += mt_equal(words[i], words[j]) != (oracle[i] == oracle[j]);
        ++pairs;
      }
    }
    return {mismatches == 0, num(pairs) + " pairs, " + num(mismatches) + " mismatches"};
  }

  Outcome criterion_15() {
    std::mt19937_64 rng(5);
    std::size_t     agree = 0, total = 0;
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<Word> gens(1 + rng() % 3);
      for (auto& w : gens) {
        std::size_t len = 1 + rng() % 8;
        for (std::size_t i = 0; i < len; ++i) {
          w += "xXyY"[rng() % 4];
        }
      }
      auto bouquet   = Bouquet::from_words("xy", gens);
      auto reference = fold(bouquet);
      for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        agree += is_isomorphic(fold(bouquet, FoldOptions{seed * 7919, 0}), reference);
        ++total;
      }
    }
    return {agree == 500 && total == 500, num(agree) + "/" + num(total)};
  }

  Outcome criterion_16() {
    auto        r     = f2ab::demo(10'000);
    std::size_t words = 0, mismatches = 0;
    for (auto const& w : all_words("xy", 4)) {
      auto a = f2ab::top(w);
      mismatches += f2ab::in_k(a) != f2ab::in_k_by_witness(a);
      ++words;
    }
    bool pass = r.verified() && r.representatives.size() == 10'000 && mismatches == 0;
    return {pass, num(r.representatives.size()) + " cosets " + (r.verified() ? "verified" : "NOT verified")
                      + ", " + num(words) + " words, " + num(mismatches) + " mismatches"};
  }

}  // namespace

int main() {
  auto const family = closed_family();

  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"I3 point stabilizer order and index", criterion_1},
      {"index product through stab(1)", criterion_2},
      {"B2 index and coset union", criterion_3},
      {"FIM indices and failing index formula", criterion_4},
      {"C4 Clifford index and group image", criterion_5},
      {"coset characterisation by brute force", criterion_6},
      {"coset partition and same-coset criterion", [&] { return criterion_7(family); }},
      {"coset union criterion", [&] { return criterion_8(family); }},
      {"index formula on random Clifford semigroups", criterion_9},
      {"coset action functorial and transitive", criterion_10},
      {"phi_L homomorphism, stabilizer and index-2 enumeration", criterion_11},
      {"delta generators regenerate L", [&] { return criterion_12(family); }},
      {"coset automaton languages and minimality", [&] { return criterion_13(family); }},
      {"Munn tree word problem against prefix oracle", criterion_14},
      {"fold confluence", criterion_15},
      {"F2 over F2^ab coset demo", criterion_16},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto    start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (std::exception const& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    failures += !o.pass;
    std::printf("criterion %2zu %s  %s: %s (%lld ms)\n", i + 1, o.pass ? "PASS" : "FAIL",
                criteria[i].first.c_str(), o.detail.c_str(), static_cast<long long>(ms));
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
