#pragma once

#include <json.hpp>

#include "hopford/frobenius.hpp"
#include "hopford/twist.hpp"

namespace hopford {

using Json = nlohmann::ordered_json;  // insertion order kept: byte-stable output

Json coeff_to_json(const CycNumber& c);
CycNumber coeff_from_json(const FieldPtr& field, const Json& j);
Json vec_to_json(const Vec& v);
Vec vec_from_json(const FieldPtr& field, const Json& j);
Json tensor_to_json(const SparseMulti& t);
SparseMulti tensor_from_json(const FieldPtr& field, unsigned dim, const Json& j);

Json group_spec_to_json(const GroupSpec& s);
GroupSpec group_spec_from_json(const Json& j);
/// Labeled multiplication table export.
Json group_to_json(const FiniteGroup& g);

/// Structure-constant interchange. Multiplication, comultiplication and
/// antipode are written as sparse triple lists; coefficients are full-length
/// power-basis lists of "num/den" strings. Round-trips bit-exactly.
Json hopf_to_json(const HopfAlgebraData& h);
HopfPtr hopf_from_json(const Json& j);

Json twist_to_json(const TwistData& t);
TwistData twist_from_json(HopfPtr parent, const Json& j);

Json axiom_report_to_json(const AxiomReport& rep);

}  // namespace hopford
