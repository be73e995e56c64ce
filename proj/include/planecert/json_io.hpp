// JSON views of every report type. Output is deterministic: insertion
// order is preserved and all quantities that can outgrow native integers
// (class sizes, rationals) are emitted as decimal strings.
#pragma once

#include <planecert/character_table.hpp>
#include <planecert/delsarte_system.hpp>
#include <planecert/feasibility.hpp>
#include <planecert/plane_oracle.hpp>
#include <planecert/refutation.hpp>

#include <json.hpp>

namespace planecert {

using Json = nlohmann::ordered_json;

Json to_json(const Partition& p);  // plain array of parts
Json to_json(const Rational& q);   // {"num": "...", "den": "..."}
Json to_json(const ConjugacyClassInfo& info);
Json to_json(const CharacterTable& t);
Json to_json(const ValidationReport& r);
Json to_json(const ThetaVector& theta);
Json to_json(const DelsarteSystem& s);
Json to_json(const FeasibilityReport& r, const DelsarteSystem& s);
Json to_json(const RefutationReport& r, const DelsarteSystem& s);
Json to_json(const AffineLineSet& plane);

Partition partition_from_json(const Json& j);
ThetaVector theta_from_json(const Json& j);

}  // namespace planecert
