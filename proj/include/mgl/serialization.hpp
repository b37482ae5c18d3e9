// JSON documents for the result types. Reals are written as decimal strings
// with enough digits to read back the same binary value at the precision
// they were computed with; rationals as reduced "a/b" strings.
#pragma once

#include "mgl/fourier.hpp"
#include "mgl/identities.hpp"

#include <json.hpp>

namespace mgl {

using Json = nlohmann::ordered_json;

// Decimal text that parses back to x at x's precision.
std::string full_string(const Real& x);

Json to_json(const MeasureParams& params);

// {params, backend, n_max, digits, p, q, err_units}; p and q hold fractions
// (exact backend) or decimals.
Json to_json(const PQTable& table);
// Inverse of to_json; validates the document and throws ValidationError.
PQTable pq_table_from_json(const Json& doc);

Json to_json(const EigenvalueRecord& record);
// Reads a record; reals are parsed at the recorded precision.
EigenvalueRecord eigenvalue_record_from_json(const Json& doc);

Json to_json(const EigenfunctionSample& sample);
Json to_json(const CheckEntry& entry);
Json to_json(const VerificationReport& report);
Json to_json(const FourierExpansion& expansion);
Json to_json(const ParsevalSum& sum);
Json to_json(const Reconstruction& reconstruction);

}  // namespace mgl
