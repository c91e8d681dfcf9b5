// invco - cosets of closed inverse subsemigroups
//
// Cosets, indices, transversals, delta generators, the index formula,
// coset unions and the minimum group congruence.

#include <random>

#include "catch_amalgamated.hpp"
#include "support.hpp"

using namespace invco;
using namespace invco::testing;

namespace {
  ElementSet one_point_image(FiniteInverseSemigroup const& I3, int image) {
    ElementSet out(I3.size());
    for (ElementId a = 0; a < I3.size(); ++a) {
      if (as_partial_bijection(I3, a)(0) == image) {
        out.insert(a);
      }
    }
    return out;
  }
}  // namespace

TEST_CASE("coset_of", "[cosets]") {
  auto I3 = symmetric_inverse_monoid(3);
  auto L  = FiniteClosedSub(I3, stabilizer_of_one(I3));
  auto c  = coset_of(L, element(I3, "{1->2,2->3,3->1}"));
  REQUIRE(c);
  CHECK(c->members == one_point_image(I3, 1));

  auto B2 = brandt(2);
  auto E1 = generate_closed(B2, parse_generators(B2, "(1,1)"));
  CHECK_FALSE(coset_of(E1, element(B2, "(2,1)")));
  CHECK(coset_of(E1, element(B2, "(1,2)"))->members == parse_generators(B2, "(1,2)"));

  for (auto l : L.members().members()) {
    REQUIRE(coset_of(L, l)->members == L.members());
  }
}

TEST_CASE("same_coset", "[cosets]") {
  auto I3 = symmetric_inverse_monoid(3);
  auto L  = FiniteClosedSub(I3, stabilizer_of_one(I3));
  CHECK(same_coset(L, element(I3, "{1->2}"), element(I3, "{1->2,2->1,3->3}")));
  CHECK(same_coset(L, element(I3, "{1->3}"), element(I3, "{1->3}")));
  CHECK_FALSE(same_coset(L, element(I3, "{1->2}"), element(I3, "{1->3}")));
  CHECK_THROWS_AS(same_coset(L, element(I3, "{1->2}"), element(I3, "{2->2}")), UsageError);
}

TEST_CASE("enumerate_cosets and index", "[cosets]") {
  auto I3 = symmetric_inverse_monoid(3);
  auto L  = FiniteClosedSub(I3, stabilizer_of_one(I3));
  auto K  = generate_closed(I3, parse_generators(I3, "{1->1,2->3,3->2}"));
  CHECK(index(L) == 3);
  CHECK(index(K) == 3);
  CHECK(relative_index(L, K) == 1);
  auto cosets = enumerate_cosets(L);
  CHECK(cosets[0].members == L.members());
  CHECK(cosets[1].members == one_point_image(I3, 1));
  CHECK(cosets[2].members == one_point_image(I3, 2));
  CHECK_THROWS_AS(relative_index(K, L), UsageError);

  auto B2 = brandt(2);
  CHECK(index(generate_closed(B2, parse_generators(B2, "(1,1)"))) == 2);

  CHECK(index(FimClosedSub("xy", {"xx"})) == 2);
  CHECK(index(FimClosedSub("xy", {"xx", "yy"})) == 3);
  CHECK(index(FimClosedSub("xy", {})) == 1);
}

TEST_CASE("parallel enumeration matches the serial one", "[cosets]") {
  for (auto const& L : generated_family(symmetric_inverse_monoid(3), 1)) {
    auto serial = enumerate_cosets(L, 1);
    for (unsigned t : {2U, 3U, 8U}) {
      auto parallel = enumerate_cosets(L, t);
      REQUIRE(parallel.size() == serial.size());
      for (std::size_t i = 0; i < serial.size(); ++i) {
        REQUIRE(parallel[i].members == serial[i].members);
        REQUIRE(parallel[i].representative == serial[i].representative);
      }
    }
  }
}

TEST_CASE("coset_to_subsemigroup", "[cosets]") {
  auto I3 = symmetric_inverse_monoid(3);
  auto L  = FiniteClosedSub(I3, stabilizer_of_one(I3));
  CHECK(coset_to_subsemigroup(I3, one_point_image(I3, 1)) == L);
  CHECK(coset_to_subsemigroup(I3, L.members()) == L);
  auto B2 = brandt(2);
  CHECK(coset_to_subsemigroup(B2, parse_generators(B2, "(1,2)")).members()
        == parse_generators(B2, "(1,1)"));
  CHECK_THROWS_AS(coset_to_subsemigroup(B2, parse_generators(B2, "(1,2) (2,1)")), UsageError);
  CHECK_THROWS_AS(coset_to_subsemigroup(B2, ElementSet(5)), UsageError);
}

TEST_CASE("coset_union", "[cosets]") {
  auto B2 = brandt(2);
  auto E1 = generate_closed(B2, parse_generators(B2, "(1,1)"));
  auto r  = coset_union(E1);
  CHECK(r.union_set == parse_generators(B2, "(1,1) (1,2)"));
  CHECK_FALSE(r.covers_semigroup);
  CHECK_FALSE(r.direct);
  CHECK_FALSE(r.criterion);
  REQUIRE(r.failure);
  CHECK(B2.name(*r.failure) == "(1,2)");

  auto C4 = clifford(cyclic_group(4));
  auto E  = generate_closed(C4, C4.idempotents());
  auto u  = coset_union(E);
  CHECK(u.covers_semigroup);
  CHECK(u.full);
  CHECK(u.direct);
  CHECK(u.criterion);
}

TEST_CASE("cosets partition the coset union", "[cosets]") {
  for (auto const& L : closed_family()) {
    auto const& S      = L.semigroup();
    auto        cosets = enumerate_cosets(L);
    ElementSet  seen(S.size());
    for (auto const& C : cosets) {
      REQUIRE_FALSE(C.members.intersects(seen));
      seen |= C.members;
      REQUIRE(is_coset(S, C.members));
      REQUIRE(coset_to_subsemigroup(S, C.members) == L);
      REQUIRE(L.contains(S.multiply(C.representative, S.inverse(C.representative))));
    }
    auto U = coset_union(L);
    REQUIRE(seen == U.union_set);
    REQUIRE(U.covers_semigroup == U.full);
    REQUIRE(U.direct == U.criterion);
  }
}

TEST_CASE("same_coset agrees with coset keys", "[cosets]") {
  for (auto const& L : closed_family()) {
    auto const& S = L.semigroup();
    for (ElementId a = 0; a < S.size(); ++a) {
      auto ca = coset_of(L, a);
      if (!ca) {
        continue;
      }
      for (ElementId b = 0; b < S.size(); ++b) {
        auto cb = coset_of(L, b);
        if (cb) {
          REQUIRE(same_coset(L, a, b) == (ca->members == cb->members));
        }
      }
    }
  }
}

TEST_CASE("transversals", "[cosets]") {
  auto I3 = symmetric_inverse_monoid(3);
  auto T  = transversal(FiniteClosedSub(I3, stabilizer_of_one(I3)));
  CHECK(T.size() == 3);
  CHECK(T.representative(0) == *I3.identity());
  for (std::size_t i = 0; i < T.size(); ++i) {
    for (std::size_t j = i + 1; j < T.size(); ++j) {
      REQUIRE_FALSE(same_coset(T.subsemigroup(), T.representative(i), T.representative(j)));
    }
  }
  CHECK(T.coset_index(element(I3, "{2->2}")) == Transversal::npos);
  CHECK(T.bar(element(I3, "{1->3,2->2}")) == T.representative(2));

  CHECK(transversal(FimClosedSub("xy", {"xx"})) == std::vector<Word>{"", "x"});
  CHECK(transversal(FimClosedSub("xy", {"xx", "yy"})) == std::vector<Word>{"", "x", "y"});

  auto whole = transversal(FiniteClosedSub(I3, I3.all()));
  CHECK(whole.representatives() == std::vector<ElementId>{*I3.identity()});
}

TEST_CASE("delta", "[cosets]") {
  auto I3 = symmetric_inverse_monoid(3);
  auto L  = FiniteClosedSub(I3, stabilizer_of_one(I3));
  Transversal T(L);
  auto        swap12 = element(I3, "{1->2,2->1,3->3}");
  CHECK(T.bar(swap12) == swap12);
  CHECK(delta(T, *I3.identity(), swap12) == *I3.identity());
  for (auto r : T.representatives()) {
    for (ElementId s = 0; s < I3.size(); ++s) {
      if (auto d = delta(T, r, s)) {
        REQUIRE(L.contains(*d));
      }
    }
  }

  FimClosedSub K("xy", {"xx"});
  auto         TK = transversal(K);
  CHECK(delta(K, TK, "x", "x") == Word("xx"));
  CHECK_FALSE(delta(K, TK, "x", "y"));
}

TEST_CASE("Schreier generators", "[cosets]") {
  auto I3 = symmetric_inverse_monoid(3);
  auto r  = schreier_generators(i3_generators(I3), FiniteClosedSub(I3, stabilizer_of_one(I3)));
  CHECK(r.verified);
  CHECK(r.generated.members() == stabilizer_of_one(I3));

  auto whole = schreier_generators(i3_generators(I3), FiniteClosedSub(I3, I3.all()));
  CHECK(whole.verified);

  auto B2 = brandt(2);
  for (auto const& L : all_closed(B2)) {
    REQUIRE(schreier_generators(b2_generators(B2), L).verified);
  }
  auto I2 = symmetric_inverse_monoid(2);
  for (auto const& L : all_closed(I2)) {
    REQUIRE(schreier_generators(i2_generators(I2), L).verified);
  }
  for (auto const& L : generated_family(I3, 2)) {
    REQUIRE(schreier_generators(i3_generators(I3), L).verified);
  }

  for (auto const& gens : std::vector<std::vector<Word>>{{"xx"}, {"xx", "yy"}, {"xy"}, {"xyXY"}, {"x", "yxY"}}) {
    auto f = schreier_generators(FimClosedSub("xy", gens));
    REQUIRE(f.verified);
  }
}

TEST_CASE("index formula", "[cosets]") {
  auto I3 = symmetric_inverse_monoid(3);
  auto L  = FiniteClosedSub(I3, stabilizer_of_one(I3));
  auto K  = generate_closed(I3, parse_generators(I3, "{1->1,2->3,3->2}"));
  auto r  = check_index_formula(L, K);
  CHECK(r.s_k == 3);
  CHECK(r.s_h == 3);
  CHECK(r.h_k == 1);
  CHECK(r.verdict() == "holds");
  CHECK_FALSE(r.k_full);
  CHECK_THROWS_AS(check_index_formula(K, L), UsageError);

  auto C4 = clifford(cyclic_group(4));
  auto E  = generate_closed(C4, C4.idempotents());
  auto H  = generate_closed(C4, parse_generators(C4, "(1,a^2) (0,e)"));
  auto c  = check_index_formula(H, E);
  CHECK(c.s_k == 4);
  CHECK(c.s_h == 2);
  CHECK(c.h_k == 2);
  CHECK(c.holds());
  CHECK(c.k_full);

  FimClosedSub Kf("xy", {"xx"}), Hf("xy", {"xx", "yy"});
  auto         f = check_index_formula(Hf, Kf);
  CHECK(f.s_k == 2);
  CHECK(f.s_h == 3);
  CHECK(f.h_k == 1);
  CHECK(f.verdict() == "fails");
  CHECK(f.flags() == std::vector<std::string>{"K not full"});
  CHECK(f.to_json()["hypothesis"] == "K not full");
  CHECK_THROWS_AS(check_index_formula(Kf, Hf), UsageError);
}

TEST_CASE("index formula on random Clifford semigroups", "[cosets]") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    auto S = random_clifford(rng);
    auto K = generate_closed(S, S.idempotents() | random_subset(S, rng, rng() % 3));
    auto H = generate_closed(S, K.members() | random_subset(S, rng, rng() % 3));
    REQUIRE(is_full(K));
    REQUIRE(check_index_formula(H, K).holds());
  }
}

TEST_CASE("E-unitary semigroups and sigma", "[cosets]") {
  auto C2 = clifford(cyclic_group(2));
  CHECK(is_e_unitary(C2));
  auto E = generate_closed(C2, C2.idempotents());
  CHECK(index(E) == 2);
  CHECK(max_group_image(C2).group.size() == 2);

  CHECK_FALSE(is_e_unitary(brandt(2)));

  auto G = abelian_group({2, 3});
  CHECK(is_e_unitary(G));
  auto img = max_group_image(G);
  CHECK(img.group.size() == 6);
  CHECK(is_group(img.group));

  auto I3 = symmetric_inverse_monoid(3);
  CHECK_FALSE(is_e_unitary(I3));
  CHECK(max_group_image(I3).group.size() == 1);

  // sigma against its definition
  auto cls = sigma_classes(C2);
  for (ElementId s = 0; s < C2.size(); ++s) {
    for (ElementId t = 0; t < C2.size(); ++t) {
      bool related = false;
      for (auto e : C2.idempotents().members()) {
        related = related || C2.multiply(e, s) == C2.multiply(e, t);
      }
      REQUIRE(related == (cls[s] == cls[t]));
    }
  }
}

TEST_CASE("index of full subsemigroups of E-unitary semigroups", "[cosets]") {
  std::mt19937_64 rng(99);
  std::vector<FiniteInverseSemigroup> family{clifford(cyclic_group(2)),
                                             clifford(cyclic_group(4)),
                                             clifford(abelian_group({2, 2}))};
  while (family.size() < 12) {
    auto S = random_clifford(rng);
    if (is_e_unitary(S)) {
      family.push_back(S);
    }
  }
  for (auto const& S : family) {
    REQUIRE(is_e_unitary(S));
    std::size_t group_order = max_group_image(S).group.size();
    REQUIRE(index(generate_closed(S, S.idempotents())) == group_order);
    for (auto const& L : generated_family(S, 2)) {
      if (is_full(L)) {
        REQUIRE(index(L) * group_image_order(L) == group_order);
      }
    }
  }
}

TEST_CASE("FIM cosets", "[cosets]") {
  FimClosedSub K("xy", {"xx"});
  auto         c = coset_of(K, "xxx");
  REQUIRE(c);
  CHECK(c->state == 1);
  CHECK_FALSE(coset_of(K, "y"));
  CHECK(same_coset(K, munn_tree("x"), munn_tree("xxx")));
  CHECK_FALSE(same_coset(K, munn_tree("x"), munn_tree("xx")));
  CHECK_THROWS_AS(same_coset(K, munn_tree("y"), munn_tree("x")), UsageError);

  for (auto const& gens : std::vector<std::vector<Word>>{{"xx"}, {"xx", "yy"}, {"xy"}, {"xx", "yy", "xyXY"}, {"xxx", "yxY"}}) {
    FimClosedSub L("xy", gens);
    REQUIRE(index(L) <= 8);
    REQUIRE(verify_state_coset_bijection(L));
  }

  // coset of every word agrees with same_coset on its representative
  FimClosedSub H("xy", {"xx", "yy"});
  auto         T = transversal(H);
  for (auto const& w : all_words("xy", 4)) {
    auto t = munn_tree(w);
    if (auto cw = coset_of(H, t)) {
      REQUIRE(same_coset(H, t, munn_tree(T[cw->state])));
    }
  }
}
