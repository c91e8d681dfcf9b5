// invco - cosets of closed inverse subsemigroups
//
// JSON form of a finite inverse semigroup:
//   {"elements": [names], "table": [[ids]], "identity": id | null}
// Inverses and idempotents are always recomputed from the table.

#ifndef INVCO_SEMIGROUP_JSON_HPP_
#define INVCO_SEMIGROUP_JSON_HPP_

#include <string>
#include <vector>

#include "exception.hpp"
#include "json.hpp"
#include "semigroup.hpp"

namespace invco {

  inline nlohmann::json to_json(FiniteInverseSemigroup const& S) {
    nlohmann::json j;
    j["elements"] = S.names();
    j["table"]    = S.table();
    j["identity"] = S.identity() ? nlohmann::json(*S.identity()) : nlohmann::json(nullptr);
    return j;
  }

  inline FiniteInverseSemigroup semigroup_from_json(nlohmann::json const& j) {
    std::vector<std::string> names;
    Table                    table;
    try {
      names = j.at("elements").get<std::vector<std::string>>();
      table = j.at("table").get<Table>();
    } catch (nlohmann::json::exception const& e) {
      throw UsageError(std::string("malformed semigroup JSON: ") + e.what());
    }
    FiniteInverseSemigroup S(std::move(names), table);
    if (j.contains("identity") && !j["identity"].is_null()) {
      if (!j["identity"].is_number_unsigned()
          || S.identity() != j["identity"].get<ElementId>()) {
        throw ConstructionError("declared identity is not the identity of the table");
      }
    }
    return S;
  }

  // Canonical text: keys sorted, two-space indent, trailing newline.
  inline std::string dump(nlohmann::json const& j) {
    return j.dump(2) + "\n";
  }

}  // namespace invco

#endif  // INVCO_SEMIGROUP_JSON_HPP_
