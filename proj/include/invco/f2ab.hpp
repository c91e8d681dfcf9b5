// invco - cosets of closed inverse subsemigroups
//
// M = F2 u F2^ab, the semilattice of two groups linked by abelianisation,
// and its closed inverse submonoid K = F2' u {0}, which is generated by 0
// and has infinitely many cosets.

#ifndef INVCO_F2AB_HPP_
#define INVCO_F2AB_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "exception.hpp"
#include "json.hpp"
#include "munn.hpp"

namespace invco {

  namespace f2ab {

    struct Vec2 {
      std::int64_t x = 0;
      std::int64_t y = 0;

      friend bool operator==(Vec2 const&, Vec2 const&) = default;

      Vec2 operator+(Vec2 const& o) const noexcept {
        return {x + o.x, y + o.y};
      }

      Vec2 operator-() const noexcept {
        return {-x, -y};
      }
    };

    // Layer 1 carries a reduced word over {x, y}; layer 0 an exponent vector.
    struct Element {
      int  layer = 1;
      Word word;
      Vec2 vec;

      friend bool operator==(Element const&, Element const&) = default;

      // Words are written with exponents, e.g. (1,x^3y^-1).
      std::string to_string() const {
        if (layer == 1) {
          std::string out;
          for (std::size_t i = 0; i < word.size();) {
            std::size_t j = i;
            while (j < word.size() && word[j] == word[i]) {
              ++j;
            }
            bool        inv = word[i] == 'X' || word[i] == 'Y';
            std::size_t run = j - i;
            out += inv ? inverse_letter(word[i]) : word[i];
            if (inv || run > 1) {
              out += "^" + std::string(inv ? "-" : "") + std::to_string(run);
            }
            i = j;
          }
          return "(1," + (out.empty() ? std::string("1") : out) + ")";
        }
        return "(0,[" + std::to_string(vec.x) + "," + std::to_string(vec.y) + "])";
      }
    };

    inline void check_xy(std::string_view w) {
      for (char c : w) {
        if (c != 'x' && c != 'y' && c != 'X' && c != 'Y') {
          throw UsageError("letter '" + std::string(1, c) + "' is not in {x, y, X, Y}");
        }
      }
    }

    // The abelianisation map alpha.
    inline Vec2 exponent_sums(std::string_view w) {
      check_xy(w);
      Vec2 v;
      for (char c : w) {
        switch (c) {
          case 'x': ++v.x; break;
          case 'X': --v.x; break;
          case 'y': ++v.y; break;
          default: --v.y; break;
        }
      }
      return v;
    }

    inline Element top(std::string_view w) {
      check_xy(w);
      return {1, reduce(w), {}};
    }

    inline Element bottom(Vec2 v) {
      return {0, {}, v};
    }

    inline Element one() {
      return top("");
    }

    inline Element zero() {
      return bottom({0, 0});
    }

    inline Vec2 alpha(Element const& a) {
      return a.layer == 1 ? exponent_sums(a.word) : a.vec;
    }

    inline Element multiply(Element const& a, Element const& b) {
      if (a.layer == 1 && b.layer == 1) {
        return top(a.word + b.word);
      }
      return bottom(alpha(a) + alpha(b));
    }

    inline Element inverse(Element const& a) {
      return a.layer == 1 ? top(inverse_word(a.word)) : bottom(-a.vec);
    }

    // p <= t iff p = (pp^-1) t.
    inline bool natural_leq(Element const& p, Element const& t) {
      return multiply(multiply(p, inverse(p)), t) == p;
    }

    // Membership in K by exponent sums.
    inline bool in_k(Element const& a) {
      return alpha(a) == Vec2{0, 0};
    }

    // Membership in K = up<0> by searching the generated inverse submonoid
    // {1, 0} for an element below a.
    inline bool in_k_by_witness(Element const& a) {
      for (auto const& p : {one(), zero()}) {
        if (natural_leq(p, a)) {
          return true;
        }
      }
      return false;
    }

    // a and b lie in the same coset of K iff ab^-1 is in K.
    inline bool same_coset(Element const& a, Element const& b) {
      return in_k(multiply(a, inverse(b)));
    }

    // The coset of K through a is determined by alpha(a).
    inline Vec2 coset_key(Element const& a) {
      return alpha(a);
    }

    struct Vec2Hash {
      std::size_t operator()(Vec2 const& v) const noexcept {
        auto h = static_cast<std::uint64_t>(v.x) * 0x9e3779b97f4a7c15ULL;
        return static_cast<std::size_t>(h ^ (static_cast<std::uint64_t>(v.y) + (h << 6) + (h >> 2)));
      }
    };

    struct DemoReport {
      std::vector<Element> representatives;
      bool                 distinct_keys;   // all coset keys differ
      bool                 adjacent_check;  // consecutive reps fail ab^-1 in K
      bool                 key_agrees;      // key equality matches ab^-1 test on a block
      bool                 verified() const noexcept {
        return distinct_keys && adjacent_check && key_agrees;
      }
    };

    // Representatives (1, x^k) for k < n of pairwise distinct cosets, checked
    // in O(n) through the coset keys; the key is compared against the
    // ab^-1 criterion on every pair among the first `block` representatives.
    inline DemoReport demo(std::size_t n, std::size_t block = 64) {
      if (n == 0) {
        throw UsageError("the demo needs n >= 1");
      }
      DemoReport r{{}, true, true, true};
      Word       w;
      for (std::size_t k = 0; k < n; ++k) {
        r.representatives.push_back(top(w));
        w += 'x';
      }
      std::unordered_set<Vec2, Vec2Hash> keys;
      for (auto const& a : r.representatives) {
        if (!keys.insert(coset_key(a)).second) {
          r.distinct_keys = false;
        }
      }
      for (std::size_t k = 1; k < n; ++k) {
        if (same_coset(r.representatives[k - 1], r.representatives[k])) {
          r.adjacent_check = false;
        }
      }
      std::size_t m = std::min(n, block);
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          auto const& a = r.representatives[i];
          auto const& b = r.representatives[j];
          if (same_coset(a, b) != (coset_key(a) == coset_key(b))) {
            r.key_agrees = false;
          }
        }
      }
      return r;
    }

    inline nlohmann::json to_json(DemoReport const& r) {
      nlohmann::json reps = nlohmann::json::array();
      for (auto const& a : r.representatives) {
        reps.push_back(a.to_string());
      }
      return {{"count", r.representatives.size()},
              {"representatives", reps},
              {"distinct", r.distinct_keys},
              {"adjacent_check", r.adjacent_check},
              {"key_agrees", r.key_agrees},
              {"verified", r.verified()}};
    }

  }  // namespace f2ab

}  // namespace invco

#endif  // INVCO_F2AB_HPP_
