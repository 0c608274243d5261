#ifndef SRMDP_SERIALIZE_HPP
#define SRMDP_SERIALIZE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "srmdp/convcode.hpp"
#include "srmdp/field.hpp"
#include "srmdp/matrix.hpp"
#include "srmdp/superregular.hpp"

namespace srmdp {

using Json = nlohmann::json;

// Element format: comma-separated coefficients, low degree first, trailing
// zeros trimmed ("0" for the zero element); alternatively "a" or "a^K" for
// powers of alpha when alpha is (asserted) primitive.
std::string element_to_string(const FieldElement& x);
FieldElement element_from_string(const FieldPtr& field, const std::string& s);

// Full coefficient lists (for moduli): every coefficient, low degree first.
std::string coeffs_to_string(const std::vector<std::uint32_t>& coeffs);
std::vector<std::uint32_t> coeffs_from_string(const std::string& s);

Json field_to_json(const Field& f);
FieldPtr field_from_json(const Json& j,
                         std::uint64_t factor_budget = Field::kDefaultFactorBudget);

Json params_to_json(const CodeParams& p);
CodeParams params_from_json(const Json& j);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, const FieldPtr& field);
Json poly_matrix_to_json(const PolyMatrix& m);  // array of coefficient matrices
PolyMatrix poly_matrix_from_json(const Json& j, const FieldPtr& field);

Json code_to_json(const ConvCode& code);
ConvCode code_from_json(const Json& j,
                        std::uint64_t factor_budget = Field::kDefaultFactorBudget);

// Report fragments (row/column sets 1-based in reports).
Json minor_index_to_json(const MinorIndex& idx);
Json minor_witness_to_json(const MinorWitness& w);
Json sr_report_to_json(const SuperregularReport& r);
Json distance_to_json(const DistanceResult& d, bool include_witness = true);
Json profile_to_json(const ColumnDistanceProfile& p, bool include_witness = true);
Json min_field_to_json(const MinFieldResult& r);
Json unique_max_to_json(const UniqueMaxResult& r);

}  // namespace srmdp

#endif
