// invco - cosets of closed inverse subsemigroups
//
// ElementSet: a fixed-universe bitset of element ids. Subsets of a finite
// semigroup are compared, hashed and ordered structurally, so cosets can use
// their member set directly as a canonical key.

#ifndef INVCO_ELEMENT_SET_HPP_
#define INVCO_ELEMENT_SET_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace invco {

  using ElementId = std::uint32_t;

  class ElementSet {
    using word_type                       = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

   public:
    ElementSet() = default;

    explicit ElementSet(std::size_t universe)
        : _universe(universe), _words((universe + word_bits - 1) / word_bits) {}

    ElementSet(std::size_t universe, std::initializer_list<ElementId> ids)
        : ElementSet(universe) {
      for (auto id : ids) {
        insert(id);
      }
    }

    template <typename Range>
    static ElementSet from_range(std::size_t universe, Range const& ids) {
      ElementSet out(universe);
      for (auto id : ids) {
        out.insert(static_cast<ElementId>(id));
      }
      return out;
    }

    // All of {0, ..., universe - 1}.
    static ElementSet full(std::size_t universe) {
      ElementSet out(universe);
      for (std::size_t i = 0; i < universe; ++i) {
        out.insert(static_cast<ElementId>(i));
      }
      return out;
    }

    // The subset whose members are the set bits of mask (universe <= 64).
    static ElementSet from_mask(std::size_t universe, std::uint64_t mask) {
      ElementSet out(universe);
      if (!out._words.empty()) {
        out._words[0] = universe >= word_bits
                            ? mask
                            : mask & ((word_type(1) << universe) - 1);
      }
      return out;
    }

    std::size_t universe() const noexcept {
      return _universe;
    }

    bool contains(ElementId id) const noexcept {
      return id < _universe
             && ((_words[id / word_bits] >> (id % word_bits)) & 1U) != 0;
    }

    void insert(ElementId id) {
      _words[id / word_bits] |= word_type(1) << (id % word_bits);
    }

    void erase(ElementId id) {
      _words[id / word_bits] &= ~(word_type(1) << (id % word_bits));
    }

    std::size_t size() const noexcept {
      std::size_t n = 0;
      for (auto w : _words) {
        n += static_cast<std::size_t>(std::popcount(w));
      }
      return n;
    }

    bool empty() const noexcept {
      for (auto w : _words) {
        if (w != 0) {
          return false;
        }
      }
      return true;
    }

    bool is_subset_of(ElementSet const& that) const noexcept {
      for (std::size_t i = 0; i < _words.size(); ++i) {
        if ((_words[i] & ~that._words[i]) != 0) {
          return false;
        }
      }
      return true;
    }

    bool intersects(ElementSet const& that) const noexcept {
      for (std::size_t i = 0; i < _words.size(); ++i) {
        if ((_words[i] & that._words[i]) != 0) {
          return true;
        }
      }
      return false;
    }

    ElementSet& operator|=(ElementSet const& that) noexcept {
      for (std::size_t i = 0; i < _words.size(); ++i) {
        _words[i] |= that._words[i];
      }
      return *this;
    }

    ElementSet& operator&=(ElementSet const& that) noexcept {
      for (std::size_t i = 0; i < _words.size(); ++i) {
        _words[i] &= that._words[i];
      }
      return *this;
    }

    friend ElementSet operator|(ElementSet lhs, ElementSet const& rhs) {
      return lhs |= rhs;
    }

    friend ElementSet operator&(ElementSet lhs, ElementSet const& rhs) {
      return lhs &= rhs;
    }

    // Members in increasing order.
    std::vector<ElementId> members() const {
      std::vector<ElementId> out;
      out.reserve(size());
      for (std::size_t i = 0; i < _words.size(); ++i) {
        word_type w = _words[i];
        while (w != 0) {
          auto bit = static_cast<std::size_t>(std::countr_zero(w));
          out.push_back(static_cast<ElementId>(i * word_bits + bit));
          w &= w - 1;
        }
      }
      return out;
    }

    // Least member; undefined on the empty set.
    ElementId first() const noexcept {
      for (std::size_t i = 0; i < _words.size(); ++i) {
        if (_words[i] != 0) {
          return static_cast<ElementId>(
              i * word_bits
              + static_cast<std::size_t>(std::countr_zero(_words[i])));
        }
      }
      return static_cast<ElementId>(_universe);
    }

    friend bool operator==(ElementSet const&, ElementSet const&) = default;

    // Orders by the least differing member, so results are reproducible.
    friend bool operator<(ElementSet const& lhs, ElementSet const& rhs) {
      return lhs.members() < rhs.members();
    }

    std::size_t hash() const noexcept {
      std::size_t h = _universe;
      for (auto w : _words) {
        h ^= std::hash<word_type>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6)
             + (h >> 2);
      }
      return h;
    }

   private:
    std::size_t            _universe = 0;
    std::vector<word_type> _words;
  };

  struct ElementSetHash {
    std::size_t operator()(ElementSet const& s) const noexcept {
      return s.hash();
    }
  };

}  // namespace invco

#endif  // INVCO_ELEMENT_SET_HPP_
