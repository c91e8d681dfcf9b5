// invco - cosets of closed inverse subsemigroups
//
// The free inverse monoid FIM(X) as Munn trees. Words are strings over a-z
// with A-Z as the formal inverses; a tree is a finite prefix-closed set of
// freely reduced words together with a marked vertex.

#ifndef INVCO_MUNN_HPP_
#define INVCO_MUNN_HPP_

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "exception.hpp"
#include "json.hpp"

namespace invco {

  using Word = std::string;

  inline bool is_letter(char c) noexcept {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
  }

  inline char inverse_letter(char c) noexcept {
    return c >= 'a' && c <= 'z' ? static_cast<char>(c - 'a' + 'A')
                                : static_cast<char>(c - 'A' + 'a');
  }

  inline void check_word(std::string_view w) {
    for (char c : w) {
      if (!is_letter(c)) {
        throw UsageError("invalid letter '" + std::string(1, c) + "' in word \""
                         + std::string(w) + "\"");
      }
    }
  }

  // Formal inverse: reverse and swap case.
  inline Word inverse_word(std::string_view w) {
    Word out(w.rbegin(), w.rend());
    for (auto& c : out) {
      c = inverse_letter(c);
    }
    return out;
  }

  inline bool is_reduced(std::string_view w) noexcept {
    for (std::size_t i = 1; i < w.size(); ++i) {
      if (w[i] == inverse_letter(w[i - 1])) {
        return false;
      }
    }
    return true;
  }

  // Free reduction in the free group.
  inline Word reduce(std::string_view w) {
    check_word(w);
    Word out;
    out.reserve(w.size());
    for (char c : w) {
      if (!out.empty() && out.back() == inverse_letter(c)) {
        out.pop_back();
      } else {
        out.push_back(c);
      }
    }
    return out;
  }

  // Shortlex order on words, letters ordered x < X < y < Y < ...
  struct ShortLex {
    static int rank(char c) noexcept {
      return c >= 'a' && c <= 'z' ? 2 * (c - 'a') : 2 * (c - 'A') + 1;
    }

    bool operator()(std::string_view a, std::string_view b) const noexcept {
      if (a.size() != b.size()) {
        return a.size() < b.size();
      }
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) {
          return rank(a[i]) < rank(b[i]);
        }
      }
      return false;
    }
  };

  class MunnTree {
   public:
    // The identity ({1}, 1).
    MunnTree() : _vertices{Word{}} {}

    // Checks every invariant: reduced words, the root and the mark present,
    // and prefix closure.
    MunnTree(std::vector<Word> vertices, Word mark)
        : _vertices(std::move(vertices)), _mark(std::move(mark)) {
      normalise();
      for (auto const& v : _vertices) {
        check_word(v);
        if (!is_reduced(v)) {
          throw InvariantError("Munn tree vertex \"" + v + "\" is not reduced");
        }
        if (!v.empty() && !contains(std::string_view(v).substr(0, v.size() - 1))) {
          throw InvariantError("Munn tree vertex set is not prefix-closed at \""
                               + v + "\"");
        }
      }
      if (!contains("")) {
        throw InvariantError("Munn tree does not contain the root");
      }
      if (!contains(_mark)) {
        throw InvariantError("Munn tree does not contain its mark \"" + _mark
                             + "\"");
      }
    }

    // Vertices in shortlex order.
    std::vector<Word> const& vertices() const noexcept {
      return _vertices;
    }

    Word const& mark() const noexcept {
      return _mark;
    }

    bool contains(std::string_view v) const {
      return std::binary_search(_vertices.begin(), _vertices.end(), v, ShortLex{});
    }

    bool is_idempotent() const noexcept {
      return _mark.empty();
    }

    // Number of edges of the underlying subtree.
    std::size_t edge_count() const noexcept {
      return _vertices.size() - 1;
    }

    friend bool operator==(MunnTree const&, MunnTree const&) = default;

    std::size_t hash() const noexcept {
      std::size_t h = std::hash<std::string>{}(_mark);
      for (auto const& v : _vertices) {
        h ^= std::hash<std::string>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6)
             + (h >> 2);
      }
      return h;
    }

   private:
    void normalise() {
      std::sort(_vertices.begin(), _vertices.end(), ShortLex{});
      _vertices.erase(std::unique(_vertices.begin(), _vertices.end()),
                      _vertices.end());
    }

    std::vector<Word> _vertices;
    Word              _mark;
  };

  struct MunnTreeHash {
    std::size_t operator()(MunnTree const& t) const noexcept {
      return t.hash();
    }
  };

  // The Munn tree of a word: the reduced forms of all its prefixes, marked at
  // the reduced form of the whole word.
  inline MunnTree munn_tree(std::string_view word) {
    check_word(word);
    std::vector<Word> vertices{Word{}};
    Word              current;
    for (char c : word) {
      if (!current.empty() && current.back() == inverse_letter(c)) {
        current.pop_back();
      } else {
        current.push_back(c);
        vertices.push_back(current);
      }
    }
    return MunnTree(std::move(vertices), std::move(current));
  }

  // (P, w)(Q, v) = (P u wQ, wv)
  inline MunnTree mt_multiply(MunnTree const& s, MunnTree const& t) {
    std::vector<Word> vertices = s.vertices();
    for (auto const& q : t.vertices()) {
      vertices.push_back(reduce(s.mark() + q));
    }
    return MunnTree(std::move(vertices), reduce(s.mark() + t.mark()));
  }

  // (P, w)^-1 = (w^-1 P, w^-1)
  inline MunnTree mt_inverse(MunnTree const& t) {
    Word const        winv = inverse_word(t.mark());
    std::vector<Word> vertices;
    vertices.reserve(t.vertices().size());
    for (auto const& p : t.vertices()) {
      vertices.push_back(reduce(winv + p));
    }
    return MunnTree(std::move(vertices), winv);
  }

  // s <= t iff the marks agree and t's vertices are among s's.
  inline bool mt_leq(MunnTree const& s, MunnTree const& t) {
    if (s.mark() != t.mark()) {
      return false;
    }
    return std::includes(s.vertices().begin(),
                         s.vertices().end(),
                         t.vertices().begin(),
                         t.vertices().end(),
                         ShortLex{});
  }

  // Word problem in FIM(X).
  inline bool mt_equal(std::string_view u, std::string_view v) {
    return munn_tree(u) == munn_tree(v);
  }

  // A word whose Munn tree is t: a depth-first walk of the tree (returning
  // to the root) followed by the reduced path to the mark.
  inline Word traversal_word(MunnTree const& t) {
    Word out;
    // Children of v are the vertices v + c; walk them in shortlex order.
    std::function<void(Word const&)> visit = [&](Word const& v) {
      for (auto const& u : t.vertices()) {
        if (u.size() == v.size() + 1 && u.compare(0, v.size(), v) == 0) {
          out += u.back();
          visit(u);
          out += inverse_letter(u.back());
        }
      }
    };
    visit(Word{});
    return out + t.mark();
  }

  inline nlohmann::json to_json(MunnTree const& t) {
    return {{"vertices", t.vertices()}, {"mark", t.mark()}};
  }

  inline MunnTree munn_tree_from_json(nlohmann::json const& j) {
    try {
      return MunnTree(j.at("vertices").get<std::vector<Word>>(),
                      j.at("mark").get<Word>());
    } catch (nlohmann::json::exception const& e) {
      throw UsageError(std::string("malformed Munn tree JSON: ") + e.what());
    } catch (InvariantError const& e) {
      throw UsageError(e.what());
    }
  }

}  // namespace invco

#endif  // INVCO_MUNN_HPP_
