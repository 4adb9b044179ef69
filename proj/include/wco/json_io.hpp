#pragma once

#include "wco/calculus.hpp"
#include "wco/oracle.hpp"
#include "wco/space.hpp"
#include "wco/verdict.hpp"

#include <json.hpp>

#include <string>

namespace wco {

using nlohmann::json;

// Space document:
//   {"points":[...], "mass":{pt:num}, "phi":{pt:pt}, "w":{pt:[re,im]}}
// Point labels are strings; numbers are IEEE doubles. The loader rejects
// NaN/Inf values and nonpositive masses.
PointSpace space_from_json(const json& doc);
PointSpace load_space(const std::string& path);
json space_to_json(const PointSpace& s);

// Fields serialize as point -> number with the string "inf" for infinity.
json field_to_json(const PointSpace& s, const ScalarField& f);
json weight_to_json(const PointSpace& s, const WeightFunction& w);  // pt -> [re,im]

json verdict_to_json(const Verdict& v);

// nested arrays of [re, im]
json matrix_to_json(const DenseMatrix& m);

}  // namespace wco
