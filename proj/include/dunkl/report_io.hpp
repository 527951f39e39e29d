#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "dunkl/besov.hpp"
#include "dunkl/inequalities.hpp"
#include "dunkl/measure.hpp"
#include "dunkl/rearrange.hpp"
#include "dunkl/transform.hpp"
#include "dunkl/weights.hpp"

namespace dunkl::io {

using Json = nlohmann::json;  // std::map objects, so keys come out sorted

/// Finite values as numbers; inf and nan as the strings "inf", "-inf", "nan".
Json number(double x);
Json numbers(const std::vector<double>& xs);

Json to_json(const DunklIndex& idx);
Json to_json(const SupReport& r);
Json to_json(const PittIndex& r);
Json to_json(const InequalityReport& r);
Json to_json(const NecessityProbe& r);
Json to_json(const BesovSeminorm& r);
Json to_json(const Theorem3Report& r);
Json to_json(const LpIdentity& r);
Json to_json(const RatioCurve& r);
/// Grid, values and error estimates of a transform.
Json to_json(const TransformResult& r);

/// Two spaces of indentation and a trailing newline.
void write_json(std::ostream& out, const Json& j);

/// Shortest round-trip decimal text for a double, "inf"/"nan" spelled out.
std::string format_double(double x);

}  // namespace dunkl::io
