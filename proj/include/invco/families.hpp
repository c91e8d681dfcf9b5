// invco - cosets of closed inverse subsemigroups
//
// Constructors for the standard families (symmetric inverse monoids, Brandt
// semigroups, finite abelian groups and two-layer Clifford semigroups) and the
// evaluation of words over X and its formal inverses.

#ifndef INVCO_FAMILIES_HPP_
#define INVCO_FAMILIES_HPP_

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "exception.hpp"
#include "semigroup.hpp"

namespace invco {

  // A partial injection of {1, ..., n}, stored zero-based.
  class PartialBijection {
   public:
    static constexpr int undefined = -1;

    PartialBijection() = default;

    explicit PartialBijection(std::vector<int> image)
        : _image(std::move(image)) {
      std::vector<bool> hit(_image.size(), false);
      for (int y : _image) {
        if (y == undefined) {
          continue;
        }
        if (y < 0 || static_cast<std::size_t>(y) >= _image.size()) {
          throw UsageError("partial bijection image out of range");
        }
        if (hit[y]) {
          throw UsageError("partial bijection is not injective");
        }
        hit[y] = true;
      }
    }

    static PartialBijection identity(std::size_t n) {
      std::vector<int> img(n);
      std::iota(img.begin(), img.end(), 0);
      return PartialBijection(std::move(img));
    }

    // From 1-based pairs (x, y) meaning x -> y.
    static PartialBijection from_pairs(std::size_t                           n,
                                       std::vector<std::pair<int, int>> const& pairs) {
      std::vector<int> img(n, undefined);
      for (auto [x, y] : pairs) {
        if (x < 1 || static_cast<std::size_t>(x) > n) {
          throw UsageError("point out of range");
        }
        img[x - 1] = y - 1;
      }
      return PartialBijection(std::move(img));
    }

    std::size_t degree() const noexcept {
      return _image.size();
    }

    // Zero-based image of zero-based x, or undefined.
    int operator()(std::size_t x) const {
      return _image.at(x);
    }

    std::vector<int> const& image() const noexcept {
      return _image;
    }

    // Left-to-right composition: x(st) = (xs)t.
    PartialBijection then(PartialBijection const& t) const {
      if (t.degree() != degree()) {
        throw UsageError("degree mismatch in composition");
      }
      std::vector<int> img(degree(), undefined);
      for (std::size_t x = 0; x < degree(); ++x) {
        if (_image[x] != undefined) {
          img[x] = t._image[_image[x]];
        }
      }
      return PartialBijection(std::move(img));
    }

    PartialBijection inverse() const {
      std::vector<int> img(degree(), undefined);
      for (std::size_t x = 0; x < degree(); ++x) {
        if (_image[x] != undefined) {
          img[_image[x]] = static_cast<int>(x);
        }
      }
      return PartialBijection(std::move(img));
    }

    std::size_t rank() const {
      return static_cast<std::size_t>(
          std::count_if(_image.begin(), _image.end(), [](int y) {
            return y != undefined;
          }));
    }

    // "{1->2,3->3}", with "{}" for the empty map.
    std::string to_string() const {
      std::string out = "{";
      bool        first = true;
      for (std::size_t x = 0; x < degree(); ++x) {
        if (_image[x] == undefined) {
          continue;
        }
        if (!first) {
          out += ",";
        }
        first = false;
        out += std::to_string(x + 1) + "->" + std::to_string(_image[x] + 1);
      }
      return out + "}";
    }

    friend bool operator==(PartialBijection const&, PartialBijection const&)
        = default;
    friend auto operator<=>(PartialBijection const&, PartialBijection const&)
        = default;

   private:
    std::vector<int> _image;
  };

  namespace detail {
    inline void all_partial_injections(std::size_t                    n,
                                       std::vector<int>&              img,
                                       std::vector<bool>&             used,
                                       std::size_t                    x,
                                       std::vector<PartialBijection>& out) {
      if (x == n) {
        out.emplace_back(img);
        return;
      }
      img[x] = PartialBijection::undefined;
      all_partial_injections(n, img, used, x + 1, out);
      for (std::size_t y = 0; y < n; ++y) {
        if (!used[y]) {
          used[y] = true;
          img[x]  = static_cast<int>(y);
          all_partial_injections(n, img, used, x + 1, out);
          used[y] = false;
        }
      }
      img[x] = PartialBijection::undefined;
    }

    template <typename T, typename Mul>
    FiniteInverseSemigroup from_elements(std::vector<T> const&    elts,
                                         std::vector<std::string> names,
                                         Mul&&                    mul,
                                         bool check_associativity) {
      std::map<T, ElementId> index;
      for (std::size_t i = 0; i < elts.size(); ++i) {
        index.emplace(elts[i], static_cast<ElementId>(i));
      }
      Table table(elts.size(), std::vector<ElementId>(elts.size()));
      for (std::size_t i = 0; i < elts.size(); ++i) {
        for (std::size_t j = 0; j < elts.size(); ++j) {
          table[i][j] = index.at(mul(elts[i], elts[j]));
        }
      }
      return FiniteInverseSemigroup(std::move(names), table, check_associativity);
    }
  }  // namespace detail

  // The largest degree accepted by symmetric_inverse_monoid; the Cayley table
  // of I_6 alone would hold 13327^2 entries.
  inline constexpr std::size_t max_symmetric_degree = 5;

  // All partial injections of degree n by decreasing rank, then in
  // lexicographic order of their image vectors (undefined first). The
  // identity has id 0 and the permutations come first.
  inline std::vector<PartialBijection> partial_injections(std::size_t n) {
    std::vector<PartialBijection> out;
    std::vector<int>              img(n, PartialBijection::undefined);
    std::vector<bool>             used(n, false);
    detail::all_partial_injections(n, img, used, 0, out);
    std::stable_sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
      return a.rank() > b.rank();
    });
    return out;
  }

  // The symmetric inverse monoid I_n, composed left to right.
  inline FiniteInverseSemigroup symmetric_inverse_monoid(std::size_t n) {
    if (n < 1) {
      throw UsageError("degree must be at least 1");
    }
    if (n > max_symmetric_degree) {
      throw ResourceError("symmetric inverse monoid of degree "
                          + std::to_string(n) + " exceeds the limit of "
                          + std::to_string(max_symmetric_degree));
    }
    auto                     elts = partial_injections(n);
    std::vector<std::string> names;
    for (auto const& p : elts) {
      names.push_back(p.to_string());
    }
    return detail::from_elements(
        elts,
        std::move(names),
        [](PartialBijection const& a, PartialBijection const& b) {
          return a.then(b);
        },
        elts.size() <= FiniteInverseSemigroup::exhaustive_check_limit);
  }

  // Recovers the partial bijection named by an element of I_n.
  inline PartialBijection parse_partial_bijection(std::string_view text,
                                                  std::size_t      n) {
    if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
      throw UsageError("expected {x->y,...}, found \"" + std::string(text)
                       + "\"");
    }
    std::vector<std::pair<int, int>> pairs;
    std::string_view                 body = text.substr(1, text.size() - 2);
    while (!body.empty()) {
      auto comma = body.find(',');
      auto item  = body.substr(0, comma);
      auto arrow = item.find("->");
      if (arrow == std::string_view::npos) {
        throw UsageError("malformed pair \"" + std::string(item) + "\"");
      }
      pairs.emplace_back(std::stoi(std::string(item.substr(0, arrow))),
                         std::stoi(std::string(item.substr(arrow + 2))));
      body = comma == std::string_view::npos ? std::string_view{}
                                             : body.substr(comma + 1);
    }
    return PartialBijection::from_pairs(n, pairs);
  }

  // |I_n| = sum over k of C(n,k)^2 k!
  inline std::size_t symmetric_inverse_order(std::size_t n) {
    std::size_t total = 0, binom = 1, fact = 1;
    for (std::size_t k = 0; k <= n; ++k) {
      if (k > 0) {
        binom = binom * (n - k + 1) / k;
        fact *= k;
      }
      total += binom * binom * fact;
    }
    return total;
  }

  // Element of I_n as a partial bijection, recovered from its name.
  inline PartialBijection as_partial_bijection(FiniteInverseSemigroup const& In,
                                               ElementId                     a) {
    for (std::size_t n = 1; n <= max_symmetric_degree; ++n) {
      if (symmetric_inverse_order(n) == In.size()) {
        return parse_partial_bijection(In.name(a), n);
      }
    }
    throw UsageError("not a symmetric inverse monoid");
  }

  // The Brandt semigroup B_n: pairs (x, y) in lexicographic order, then 0.
  inline FiniteInverseSemigroup brandt(std::size_t n) {
    if (n < 1) {
      throw UsageError("Brandt semigroup needs n >= 1");
    }
    std::size_t const        zero = n * n;
    std::vector<std::string> names;
    for (std::size_t x = 1; x <= n; ++x) {
      for (std::size_t y = 1; y <= n; ++y) {
        names.push_back("(" + std::to_string(x) + "," + std::to_string(y) + ")");
      }
    }
    names.push_back("0");
    Table table(zero + 1, std::vector<ElementId>(zero + 1, static_cast<ElementId>(zero)));
    for (std::size_t a = 0; a < zero; ++a) {
      for (std::size_t b = 0; b < zero; ++b) {
        std::size_t u = a / n, v = a % n, x = b / n, y = b % n;
        if (v == x) {
          table[a][b] = static_cast<ElementId>(u * n + y);
        }
      }
    }
    return FiniteInverseSemigroup(
        std::move(names),
        table,
        zero + 1 <= FiniteInverseSemigroup::exhaustive_check_limit);
  }

  // Id of the Brandt element (x, y), 1-based.
  inline ElementId brandt_pair(std::size_t n, std::size_t x, std::size_t y) {
    return static_cast<ElementId>((x - 1) * n + (y - 1));
  }

  inline ElementId brandt_zero(std::size_t n) {
    return static_cast<ElementId>(n * n);
  }

  // The finite abelian group Z_{o_1} x ... x Z_{o_k}. Elements are exponent
  // vectors in lexicographic order; names use generators a, b, c, ... and the
  // identity is "e".
  inline FiniteInverseSemigroup abelian_group(std::vector<std::size_t> const& orders) {
    if (orders.empty() || orders.size() > 26) {
      throw UsageError("abelian group needs between 1 and 26 cyclic factors");
    }
    for (auto o : orders) {
      if (o < 1) {
        throw UsageError("cyclic factor of order 0");
      }
    }
    std::vector<std::vector<std::size_t>> elts{{}};
    for (auto o : orders) {
      std::vector<std::vector<std::size_t>> next;
      for (auto const& v : elts) {
        for (std::size_t k = 0; k < o; ++k) {
          auto w = v;
          w.push_back(k);
          next.push_back(std::move(w));
        }
      }
      elts = std::move(next);
    }
    std::vector<std::string> names;
    for (auto const& v : elts) {
      std::string name;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) {
          continue;
        }
        name += static_cast<char>('a' + i);
        if (v[i] > 1) {
          name += "^" + std::to_string(v[i]);
        }
      }
      names.push_back(name.empty() ? "e" : name);
    }
    return detail::from_elements(
        elts,
        std::move(names),
        [&orders](std::vector<std::size_t> const& x,
                  std::vector<std::size_t> const& y) {
          std::vector<std::size_t> z(x.size());
          for (std::size_t i = 0; i < x.size(); ++i) {
            z[i] = (x[i] + y[i]) % orders[i];
          }
          return z;
        },
        elts.size() <= 64);
  }

  inline FiniteInverseSemigroup cyclic_group(std::size_t n) {
    return abelian_group({n});
  }

  // True when S has exactly one idempotent and it is an identity.
  inline bool is_group(FiniteInverseSemigroup const& S) {
    return S.idempotents().size() == 1 && S.identity().has_value();
  }

  // The semilattice of groups G1 u G0 over 1 > 0 with linking map alpha.
  // Elements (1,g) come first in the order of G1, then (0,h) in the order
  // of G0.
  inline FiniteInverseSemigroup clifford(FiniteInverseSemigroup const& G1,
                                         FiniteInverseSemigroup const& G0,
                                         std::vector<ElementId> const& alpha) {
    if (!is_group(G1) || !is_group(G0)) {
      throw ConstructionError("Clifford layers must be groups");
    }
    if (alpha.size() != G1.size()) {
      throw ConstructionError("linking map has the wrong domain size");
    }
    for (auto h : alpha) {
      if (h >= G0.size()) {
        throw ConstructionError("linking map leaves G0");
      }
    }
    std::vector<std::string> reasons;
    for (ElementId g = 0; g < G1.size(); ++g) {
      for (ElementId h = 0; h < G1.size(); ++h) {
        if (alpha[G1.multiply(g, h)] != G0.multiply(alpha[g], alpha[h])) {
          reasons.push_back("alpha(" + G1.name(g) + G1.name(h) + ") != alpha("
                            + G1.name(g) + ")alpha(" + G1.name(h) + ")");
        }
      }
    }
    if (!reasons.empty()) {
      throw ConstructionError("linking map is not a homomorphism",
                              std::move(reasons));
    }
    std::size_t const        n1 = G1.size(), n0 = G0.size();
    std::vector<std::string> names;
    for (ElementId g = 0; g < n1; ++g) {
      names.push_back("(1," + G1.name(g) + ")");
    }
    for (ElementId h = 0; h < n0; ++h) {
      names.push_back("(0," + G0.name(h) + ")");
    }
    auto  lower = [&](ElementId x) { return x < n1 ? alpha[x] : x - n1; };
    Table table(n1 + n0, std::vector<ElementId>(n1 + n0));
    for (ElementId x = 0; x < n1 + n0; ++x) {
      for (ElementId y = 0; y < n1 + n0; ++y) {
        if (x < n1 && y < n1) {
          table[x][y] = G1.multiply(x, y);
        } else {
          table[x][y] = static_cast<ElementId>(
              n1 + G0.multiply(lower(x), lower(y)));
        }
      }
    }
    return FiniteInverseSemigroup(
        std::move(names),
        table,
        n1 + n0 <= FiniteInverseSemigroup::exhaustive_check_limit);
  }

  inline FiniteInverseSemigroup clifford(FiniteInverseSemigroup const& G) {
    std::vector<ElementId> id(G.size());
    std::iota(id.begin(), id.end(), 0);
    return clifford(G, G, id);
  }

  // Assigns an element of S to each letter of a lowercase alphabet; the
  // uppercase letter is read as the inverse of its lowercase partner.
  class GeneratorMap {
   public:
    GeneratorMap(FiniteInverseSemigroup S, std::map<char, ElementId> images)
        : _semigroup(std::move(S)) {
      for (auto [letter, image] : images) {
        if (!std::islower(static_cast<unsigned char>(letter))) {
          throw UsageError(std::string("generator letters must be a-z, found '")
                           + letter + "'");
        }
        if (image >= _semigroup.size()) {
          throw UsageError("generator image out of range");
        }
        _letters.push_back(letter);
        _images.push_back(image);
      }
    }

    FiniteInverseSemigroup const& semigroup() const noexcept {
      return _semigroup;
    }

    // Positive letters in increasing order.
    std::string const& letters() const noexcept {
      return _letters;
    }

    // The signed alphabet in the order x, X, y, Y, ...
    std::string signed_letters() const {
      std::string out;
      for (char c : _letters) {
        out += c;
        out += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      }
      return out;
    }

    ElementId image(char letter) const {
      char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(letter)));
      auto pos   = _letters.find(lower);
      if (pos == std::string::npos || !std::isalpha(static_cast<unsigned char>(letter))) {
        throw UsageError(std::string("letter '") + letter
                         + "' is not in the alphabet");
      }
      return std::isupper(static_cast<unsigned char>(letter))
                 ? _semigroup.inverse(_images[pos])
                 : _images[pos];
    }

   private:
    FiniteInverseSemigroup _semigroup;
    std::string            _letters;
    std::vector<ElementId> _images;
  };

  // The image of a word under the homomorphism determined by gm.
  inline ElementId evaluate_word(GeneratorMap const& gm, std::string_view word) {
    auto const& S = gm.semigroup();
    if (word.empty()) {
      if (!S.identity()) {
        throw UsageError("empty word in a semigroup without identity");
      }
      return *S.identity();
    }
    ElementId out = gm.image(word[0]);
    for (std::size_t i = 1; i < word.size(); ++i) {
      out = S.multiply(out, gm.image(word[i]));
    }
    return out;
  }

}  // namespace invco

#endif  // INVCO_FAMILIES_HPP_
