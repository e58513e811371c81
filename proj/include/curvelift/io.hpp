#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

#include "curvelift/curve.hpp"
#include "curvelift/experiments.hpp"
#include "curvelift/hyperplane.hpp"
#include "curvelift/lifting.hpp"
#include "curvelift/monomial.hpp"
#include "curvelift/point_sets.hpp"
#include "curvelift/rational.hpp"
#include "curvelift/tube.hpp"

namespace curvelift::io {

// Insertion-ordered so that emitted documents are byte-stable.
using Json = nlohmann::ordered_json;

Json read_json_file(const std::filesystem::path& path);
Json parse_json(const std::string& text);

// "p/q"; integers are also accepted on input.
Json to_json(const Rational& value);
Rational rational_from_json(const Json& j);
// {"exact": "p/q", "approx": double}.
Json ratio_json(const Rational& value);

Json to_json(const ExactPoint& p);
ExactPoint point_from_json(const Json& j);
Json to_json(const FiniteSet& set);
FiniteSet set_from_json(const Json& j);
Json to_json(const Gap& gap);
Gap gap_from_json(const Json& j);
Json to_json(const MonomialSet& monomials);
MonomialSet monomials_from_json(const Json& j);
Json to_json(const Hyperplane& plane);
Hyperplane hyperplane_from_json(const Json& j);

// Curve documents: {kind, dimension, coefficients, domain, smoothness_order}
// plus numerators/denominators for rational-parametric and base/monomials for
// lifted curves. A string in place of an object is a file reference resolved
// against base_dir.
Json to_json(const CurveSpec& curve);
CurveSpec curve_from_json(const Json& j, const std::filesystem::path& base_dir = {});

// {curve, delta: "p/q" | {d, N, n}, source: {...}, retain_points?}.
TubeQuery tube_query_from_json(const Json& j, const std::filesystem::path& base_dir = {});
Json to_json(const CountResult& result);

Json to_json(const WronskianValue& value);
Json to_json(const NondegeneracyCertificate& cert);
Json to_json(const BijectionReport& report);
Json to_json(const IntersectionResult& result);
Json to_json(const IntersectionEstimate& estimate);
Json to_json(const MvtReport& report);
Json to_json(const EnergyBoundReport& report);
Json to_json(const PlunneckeReport& report);

ExperimentConfig experiment_config_from_json(const Json& j,
                                             const std::filesystem::path& base_dir = {});
Json to_json(const CountReport& report, bool with_runtime = false);
Json to_json(const EnergyReport& report, bool with_runtime = false);
Json to_json(const CampaignReport& report);

// N, delta, count, certified, runtime_ms.
std::string to_csv(const CountReport& report);
// N, size_b, m, energy, ratio, skipped, runtime_ms.
std::string to_csv(const EnergyReport& report);

}  // namespace curvelift::io
