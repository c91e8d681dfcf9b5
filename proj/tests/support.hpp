// invco - cosets of closed inverse subsemigroups
//
// Shared fixtures for the unit and acceptance suites.

#ifndef INVCO_TESTS_SUPPORT_HPP_
#define INVCO_TESTS_SUPPORT_HPP_

#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "invco/invco.hpp"

namespace invco::testing {

  // All words over the signed letters of `alphabet` of length at most n, in
  // shortlex order.
  inline std::vector<std::string> all_words(std::string const& alphabet, std::size_t n) {
    std::string letters;
    for (char c : alphabet) {
      letters += c;
      letters += inverse_letter(c);
    }
    std::vector<std::string> out{""};
    std::size_t              begin = 0;
    for (std::size_t len = 1; len <= n; ++len) {
      std::size_t end = out.size();
      for (std::size_t i = begin; i < end; ++i) {
        for (char c : letters) {
          out.push_back(out[i] + c);
        }
      }
      begin = end;
    }
    return out;
  }

  // Distinct closed inverse subsemigroups generated by at most `max_gens`
  // elements (and, in a monoid, by the empty set).
  inline std::vector<FiniteClosedSub> generated_family(FiniteInverseSemigroup const& S,
                                                       std::size_t                   max_gens) {
    std::set<ElementSet>   seen;
    std::vector<ElementId> chosen;
    auto                   visit = [&](auto&& self, ElementId next) -> void {
      if (!chosen.empty() || S.identity()) {
        seen.insert(generate_closed(S, ElementSet::from_range(S.size(), chosen)).members());
      }
      if (chosen.size() == max_gens) {
        return;
      }
      for (ElementId x = next; x < S.size(); ++x) {
        chosen.push_back(x);
        self(self, x + 1);
        chosen.pop_back();
      }
    };
    visit(visit, 0);
    std::vector<FiniteClosedSub> out;
    for (auto const& A : seen) {
      out.emplace_back(S, A);
    }
    return out;
  }

  // The generated closed inverse subsemigroups of B2 and I2, and those of I3
  // with at most two generators.
  inline std::vector<FiniteClosedSub> closed_family() {
    auto out = generated_family(brandt(2), 5);
    for (auto const& L : generated_family(symmetric_inverse_monoid(2), 7)) {
      out.push_back(L);
    }
    for (auto const& L : generated_family(symmetric_inverse_monoid(3), 2)) {
      out.push_back(L);
    }
    return out;
  }

  // Every closed inverse subsemigroup of a small S.
  inline std::vector<FiniteClosedSub> all_closed(FiniteInverseSemigroup const& S) {
    std::vector<FiniteClosedSub> out;
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << S.size()); ++m) {
      auto A = ElementSet::from_mask(S.size(), m);
      if (is_closed_inverse_sub(S, A)) {
        out.emplace_back(S, A);
      }
    }
    return out;
  }

  // A random semilattice of two finite abelian groups G1 > G0 linked by a
  // random homomorphism. Generator i of G1 goes to a random element whose
  // order divides the order of generator i.
  inline FiniteInverseSemigroup random_clifford(std::mt19937_64& rng) {
    auto random_orders = [&] {
      std::vector<std::size_t> o(1 + rng() % 2);
      for (auto& x : o) {
        x = 1 + rng() % 4;
      }
      return o;
    };
    auto a = random_orders(), b = random_orders();
    auto G1 = abelian_group(a), G0 = abelian_group(b);

    std::vector<std::vector<std::size_t>> h(a.size(), std::vector<std::size_t>(b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) {
        std::size_t step = b[j] / std::gcd(a[i], b[j]);
        h[i][j]          = step * (rng() % (b[j] / step));
      }
    }
    auto decode = [](std::size_t id, std::vector<std::size_t> const& orders) {
      std::vector<std::size_t> v(orders.size());
      for (std::size_t i = orders.size(); i-- > 0;) {
        v[i] = id % orders[i];
        id /= orders[i];
      }
      return v;
    };
    auto encode = [](std::vector<std::size_t> const& v, std::vector<std::size_t> const& orders) {
      std::size_t id = 0;
      for (std::size_t i = 0; i < orders.size(); ++i) {
        id = id * orders[i] + v[i];
      }
      return id;
    };
    std::vector<ElementId> alpha(G1.size());
    for (ElementId g = 0; g < G1.size(); ++g) {
      auto                     v = decode(g, a);
      std::vector<std::size_t> w(b.size(), 0);
      for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
          w[j] = (w[j] + v[i] * h[i][j]) % b[j];
        }
      }
      alpha[g] = static_cast<ElementId>(encode(w, b));
    }
    return clifford(G1, G0, alpha);
  }

  // A random element subset of S.
  inline ElementSet random_subset(FiniteInverseSemigroup const& S,
                                  std::mt19937_64&              rng,
                                  std::size_t                   k) {
    ElementSet out(S.size());
    for (std::size_t i = 0; i < k; ++i) {
      out.insert(static_cast<ElementId>(rng() % S.size()));
    }
    return out;
  }

  // The group L^ of a closed inverse subsemigroup viewed on its own.
  inline std::size_t group_image_order(FiniteClosedSub const& L) {
    auto [T, ids] = restrict_to(L.semigroup(), L.members());
    return max_group_image(T).group.size();
  }

}  // namespace invco::testing

#endif  // INVCO_TESTS_SUPPORT_HPP_
