// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string_view>

#include "json.hpp"

#include "bt1/catalog.hpp"
#include "bt1/certificate.hpp"
#include "bt1/family.hpp"
#include "bt1/kappa.hpp"
#include "bt1/kraft.hpp"
#include "bt1/pair_table.hpp"
#include "bt1/stabilizer.hpp"

namespace bt1 {

using Json = nlohmann::ordered_json;

/// Throws Error(kParse) on malformed input.
Json parse_json(std::string_view text);

/// {"num": n, "den": d}; integers that do not fit in 64 bits become strings.
Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json(Pair pair);
Json to_json(const Permutation& pi);  // one-line image list
Json to_json(const PairTable& table);
Json to_json(const Path& path, int p);
Json to_json(const KappaReport& report);
Json to_json(const KraftInvariant& inv);
Json to_json(const Monomial& monomial, int p);
Json to_json(const WeightCertificate& cert, int p);
Json to_json(const EliminationReport& report);
Json to_json(const FinitenessReport& report);
Json to_json(const StabilizerReport& report);
Json to_json(const FamilyReport& report);
Json to_json(const CatalogEntry& entry);
CatalogEntry catalog_entry_from_json(const Json& j);

}  // namespace bt1
