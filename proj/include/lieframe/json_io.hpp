#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "lieframe/cauchy.hpp"
#include "lieframe/einstein.hpp"
#include "lieframe/product6d.hpp"

namespace lieframe {

using Json = nlohmann::ordered_json;

Json to_json(const Vec& v);
Json to_json(const FamilySpec& s);
Json to_json(const EtaEinsteinFit& f);
Json to_json(const TableRowReport& r);
Json to_json(const FactorSpec& f);
Json to_json(const ScanHit& h);
Json to_json(const Form& w);
Json to_json(const SugraResiduals& r);
Json to_json(const CatalogEntry& e);
Json to_json(const ConstraintResiduals& r);
Json to_json(const EvolutionResiduals& r);
Json to_json(const SurfaceData& d);

// Throws UsageError on malformed input.
FamilySpec family_spec_from_json(const Json& j);
FactorSpec factor_from_json(const Json& j);
// {"n": factor, "x": factor, "lambda": λ, "l": l}
CatalogSample solution_config_from_json(const Json& j);
SurfaceData surface_from_json(const Json& j);

// RFC 4180 quoting when needed.
std::string csv_field(const std::string& s);
std::string csv_row(const std::vector<std::string>& fields);
std::string format_number(double v);

}  // namespace lieframe
