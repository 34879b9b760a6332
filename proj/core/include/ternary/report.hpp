#ifndef TERNARY_REPORT_HPP
#define TERNARY_REPORT_HPP

#include <nlohmann/json.hpp>

#include "ternary/applications.hpp"
#include "ternary/counterexample.hpp"
#include "ternary/ternary.hpp"

namespace ternary {

using Json = nlohmann::ordered_json;

// Scalars are strings ("3/2", "1-1/2*i"); elements are arrays of scalars in
// basis coordinates; maps are arrays of rows of their coordinate matrix.
Json to_json(const Scalar& s);
Json to_json(const Vec& v);
Json to_json(const Mat& m);
Json to_json(const OpMap& map);
Json to_json(const WitnessPair& pair);
Json to_json(const ImplementingTriple& rst);
Json to_json(const ZReport& report);
Json to_json(const StepReport& report);
Json to_json(const CompletionSystem& system);
Json to_json(const NoGammaCertificate& cert);
Json to_json(const ExampleZReport& report);
Json to_json(const ContrastCase& c);
Json to_json(const AlgebraCensus& c);
Json structure_constants(const FiniteAlgebra& alg);

Vec vec_from_json(const Json& j);
OpMap opmap_from_json(const Json& j);

}  // namespace ternary

#endif  // TERNARY_REPORT_HPP
