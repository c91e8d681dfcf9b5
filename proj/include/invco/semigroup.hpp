// invco - cosets of closed inverse subsemigroups
//
// FiniteInverseSemigroup: a validated Cayley table with the unique inverses,
// the idempotents and the natural partial order precomputed. Values are
// immutable and cheap to copy (the table is shared).

#ifndef INVCO_SEMIGROUP_HPP_
#define INVCO_SEMIGROUP_HPP_

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "element_set.hpp"
#include "exception.hpp"

namespace invco {

  using Table = std::vector<std::vector<ElementId>>;

  struct Violation {
    enum class Kind {
      shape,
      range,
      associativity,
      inverse,
      idempotents_commute,
    };
    Kind                     kind;
    std::string              message;
    std::array<ElementId, 3> where = {0, 0, 0};
  };

  namespace detail {
    // Number of associativity failures reported before the list is cut off.
    inline constexpr std::size_t max_reported_triples = 256;

    inline std::string triple_str(ElementId a, ElementId b, ElementId c) {
      return "(" + std::to_string(a) + ", " + std::to_string(b) + ", "
             + std::to_string(c) + ")";
    }

    // Returns the inverse of every element, or nullopt for elements that do
    // not have exactly one generalised inverse.
    inline std::vector<std::optional<ElementId>>
    find_inverses(std::vector<ElementId> const& flat, std::size_t n) {
      auto mul = [&](ElementId a, ElementId b) { return flat[a * n + b]; };
      std::vector<std::optional<ElementId>> inv(n);
      for (ElementId a = 0; a < n; ++a) {
        std::size_t count = 0;
        for (ElementId b = 0; b < n; ++b) {
          if (mul(mul(a, b), a) == a && mul(mul(b, a), b) == b) {
            if (count++ == 0) {
              inv[a] = b;
            }
          }
        }
        if (count != 1) {
          inv[a] = std::nullopt;
        }
      }
      return inv;
    }

    inline std::vector<Violation> validate_flat(std::vector<ElementId> const& flat,
                                                std::size_t n,
                                                bool check_associativity) {
      std::vector<Violation> out;
      auto mul = [&](ElementId a, ElementId b) { return flat[a * n + b]; };

      if (check_associativity) {
        std::size_t failures = 0;
        for (ElementId a = 0; a < n; ++a) {
          for (ElementId b = 0; b < n; ++b) {
            ElementId ab = mul(a, b);
            for (ElementId c = 0; c < n; ++c) {
              if (mul(ab, c) != mul(a, mul(b, c))) {
                if (failures++ < max_reported_triples) {
                  out.push_back({Violation::Kind::associativity,
                                 "not associative at " + triple_str(a, b, c),
                                 {a, b, c}});
                }
              }
            }
          }
        }
        if (failures > max_reported_triples) {
          out.push_back({Violation::Kind::associativity,
                         std::to_string(failures - max_reported_triples)
                             + " further associativity failures omitted"});
        }
      }

      auto inv = find_inverses(flat, n);
      for (ElementId a = 0; a < n; ++a) {
        if (!inv[a]) {
          out.push_back({Violation::Kind::inverse,
                         "element " + std::to_string(a)
                             + " does not have a unique inverse",
                         {a, a, a}});
        }
      }

      std::vector<ElementId> idem;
      for (ElementId a = 0; a < n; ++a) {
        if (mul(a, a) == a) {
          idem.push_back(a);
        }
      }
      for (std::size_t i = 0; i < idem.size(); ++i) {
        for (std::size_t j = i + 1; j < idem.size(); ++j) {
          ElementId e = idem[i], f = idem[j];
          if (mul(e, f) != mul(f, e)) {
            out.push_back({Violation::Kind::idempotents_commute,
                           "idempotents do not commute: "
                               + std::to_string(e) + " and "
                               + std::to_string(f),
                           {e, f, e}});
          }
        }
      }
      return out;
    }
  }  // namespace detail

  // Checks that table is the multiplication table of an inverse semigroup.
  // An empty result means the table is valid.
  inline std::vector<Violation> validate(Table const& table) {
    std::size_t const n = table.size();
    if (n == 0) {
      return {{Violation::Kind::shape, "table is empty"}};
    }
    std::vector<Violation> out;
    for (std::size_t i = 0; i < n; ++i) {
      if (table[i].size() != n) {
        out.push_back({Violation::Kind::shape,
                       "row " + std::to_string(i) + " has "
                           + std::to_string(table[i].size())
                           + " entries, expected " + std::to_string(n)});
      }
    }
    if (!out.empty()) {
      return out;
    }
    std::vector<ElementId> flat;
    flat.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (table[i][j] >= n) {
          out.push_back({Violation::Kind::range,
                         "entry (" + std::to_string(i) + ", "
                             + std::to_string(j) + ") is out of range"});
        }
        flat.push_back(table[i][j]);
      }
    }
    if (!out.empty()) {
      return out;
    }
    return detail::validate_flat(flat, n, true);
  }

  class FiniteInverseSemigroup {
    struct Data {
      std::vector<std::string>                   names;
      std::vector<ElementId>                     table;  // row-major n x n
      std::vector<ElementId>                     inv;
      ElementSet                                 idempotents;
      std::vector<ElementSet>                    up;  // up[a] = {b : a <= b}
      std::optional<ElementId>                   identity;
      std::unordered_map<std::string, ElementId> by_name;
    };

   public:
    // Orders above this are trusted to be associative when built from a
    // construction that guarantees it (see the families header).
    static constexpr std::size_t exhaustive_check_limit = 256;

    FiniteInverseSemigroup(std::vector<std::string> names, Table const& table)
        : FiniteInverseSemigroup(std::move(names), table, true) {}

    // When check_associativity is false the O(n^3) associativity check is
    // skipped; inverses and commuting idempotents are always verified.
    FiniteInverseSemigroup(std::vector<std::string> names,
                           Table const&             table,
                           bool                     check_associativity) {
      std::size_t const n = table.size();
      if (names.size() != n) {
        throw ConstructionError("expected " + std::to_string(n)
                                + " element names, found "
                                + std::to_string(names.size()));
      }
      std::vector<Violation> violations;
      if (check_associativity) {
        violations = validate(table);
      } else {
        auto data = flatten(table, violations);
        if (violations.empty()) {
          violations = detail::validate_flat(data, n, false);
        }
      }
      if (!violations.empty()) {
        std::vector<std::string> reasons;
        for (auto const& v : violations) {
          reasons.push_back(v.message);
        }
        throw ConstructionError("not an inverse semigroup", std::move(reasons));
      }
      auto d   = std::make_shared<Data>();
      d->names = std::move(names);
      std::vector<Violation> unused;
      d->table = flatten(table, unused);
      auto inv = detail::find_inverses(d->table, n);
      d->inv.reserve(n);
      for (auto const& i : inv) {
        d->inv.push_back(*i);
      }
      d->idempotents = ElementSet(n);
      for (ElementId a = 0; a < n; ++a) {
        if (d->table[a * n + a] == a) {
          d->idempotents.insert(a);
        }
      }
      // a <= b  iff  a = (a a^-1) b
      d->up.assign(n, ElementSet(n));
      for (ElementId a = 0; a < n; ++a) {
        ElementId aa = d->table[a * n + d->inv[a]];
        for (ElementId b = 0; b < n; ++b) {
          if (d->table[aa * n + b] == a) {
            d->up[a].insert(b);
          }
        }
      }
      for (ElementId e = 0; e < n; ++e) {
        bool is_identity = true;
        for (ElementId x = 0; x < n && is_identity; ++x) {
          is_identity = d->table[e * n + x] == x && d->table[x * n + e] == x;
        }
        if (is_identity) {
          d->identity = e;
          break;
        }
      }
      for (ElementId a = 0; a < n; ++a) {
        if (!d->by_name.emplace(d->names[a], a).second) {
          throw ConstructionError("duplicate element name \"" + d->names[a]
                                  + "\"");
        }
      }
      _data = std::move(d);
    }

    std::size_t size() const noexcept {
      return _data->inv.size();
    }

    ElementId multiply(ElementId a, ElementId b) const {
      check(a);
      check(b);
      return _data->table[a * size() + b];
    }

    ElementId inverse(ElementId a) const {
      check(a);
      return _data->inv[a];
    }

    // The heap operation a b^-1 c.
    ElementId heap(ElementId a, ElementId b, ElementId c) const {
      return multiply(multiply(a, inverse(b)), c);
    }

    bool is_idempotent(ElementId a) const {
      check(a);
      return _data->idempotents.contains(a);
    }

    ElementSet const& idempotents() const noexcept {
      return _data->idempotents;
    }

    // Natural partial order: a <= b iff a = (a a^-1) b.
    bool natural_leq(ElementId a, ElementId b) const {
      check(a);
      check(b);
      return _data->up[a].contains(b);
    }

    // {b : a <= b}
    ElementSet const& up_set(ElementId a) const {
      check(a);
      return _data->up[a];
    }

    std::optional<ElementId> identity() const noexcept {
      return _data->identity;
    }

    std::string const& name(ElementId a) const {
      check(a);
      return _data->names[a];
    }

    std::vector<std::string> const& names() const noexcept {
      return _data->names;
    }

    std::optional<ElementId> find(std::string_view name) const {
      auto it = _data->by_name.find(std::string(name));
      if (it == _data->by_name.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    Table table() const {
      Table out(size(), std::vector<ElementId>(size()));
      for (std::size_t a = 0; a < size(); ++a) {
        for (std::size_t b = 0; b < size(); ++b) {
          out[a][b] = _data->table[a * size() + b];
        }
      }
      return out;
    }

    ElementSet empty_set() const {
      return ElementSet(size());
    }

    ElementSet all() const {
      return ElementSet::full(size());
    }

    // Two handles denote the same semigroup when they share a table.
    bool same_as(FiniteInverseSemigroup const& that) const noexcept {
      return _data == that._data;
    }

   private:
    void check(ElementId a) const {
      if (a >= size()) {
        throw UsageError("element id " + std::to_string(a)
                         + " out of range for a semigroup of order "
                         + std::to_string(size()));
      }
    }

    static std::vector<ElementId> flatten(Table const&            table,
                                          std::vector<Violation>& violations) {
      std::size_t const      n = table.size();
      std::vector<ElementId> flat;
      flat.reserve(n * n);
      if (n == 0) {
        violations.push_back({Violation::Kind::shape, "table is empty"});
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (table[i].size() != n) {
          violations.push_back(
              {Violation::Kind::shape, "row " + std::to_string(i) + " is not of length n"});
          return flat;
        }
        for (auto x : table[i]) {
          if (x >= n) {
            violations.push_back({Violation::Kind::range, "entry out of range"});
          }
          flat.push_back(x);
        }
      }
      return flat;
    }

    std::shared_ptr<Data const> _data;
  };

  // Product set A B.
  inline ElementSet product(FiniteInverseSemigroup const& S,
                            ElementSet const&             A,
                            ElementSet const&             B) {
    ElementSet out(S.size());
    auto       bs = B.members();
    for (auto a : A.members()) {
      for (auto b : bs) {
        out.insert(S.multiply(a, b));
      }
    }
    return out;
  }

  // A^-1
  inline ElementSet inverse_set(FiniteInverseSemigroup const& S,
                                ElementSet const&             A) {
    ElementSet out(S.size());
    for (auto a : A.members()) {
      out.insert(S.inverse(a));
    }
    return out;
  }

  // The inverse subsemigroup `members` of S as a semigroup in its own right.
  // Element k of the result is the k-th member in increasing order; the
  // second component maps result ids back to ids of S.
  inline std::pair<FiniteInverseSemigroup, std::vector<ElementId>>
  restrict_to(FiniteInverseSemigroup const& S, ElementSet const& members) {
    auto ids = members.members();
    if (ids.empty()) {
      throw UsageError("cannot restrict to the empty set");
    }
    std::vector<ElementId> local(S.size(), static_cast<ElementId>(S.size()));
    for (std::size_t k = 0; k < ids.size(); ++k) {
      local[ids[k]] = static_cast<ElementId>(k);
    }
    Table                    table(ids.size(), std::vector<ElementId>(ids.size()));
    std::vector<std::string> names;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      names.push_back(S.name(ids[i]));
      for (std::size_t j = 0; j < ids.size(); ++j) {
        ElementId p = S.multiply(ids[i], ids[j]);
        if (!members.contains(p)) {
          throw UsageError("subset is not closed under multiplication");
        }
        table[i][j] = local[p];
      }
    }
    // Associativity is inherited from S.
    return {FiniteInverseSemigroup(std::move(names), table, false),
            std::move(ids)};
  }

}  // namespace invco

#endif  // INVCO_SEMIGROUP_HPP_
