#pragma once

#include <json.hpp>

#include "ghl/complex.hpp"

namespace ghl::app {

using nlohmann::json;

json integer_to_json(const Integer& v);
Integer integer_from_json(const json& j);
json factors_to_json(const std::vector<Integer>& f);

json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const json& j);
json triplets_to_json(const IntMatrix& m);

json group_to_json(const FpAbGroup& g);
FpAbGroup ab_group_from_json(const json& j);

json finite_group_to_json(const FiniteGroup& g);
FiniteGroup finite_group_from_json(const json& j);

json module_to_json(const GModule& m);
GModule module_from_json(const FiniteGroup& g, const json& j);

/// One record per degree: {"degree","group","boundary"}, boundary = triplets of the map out of that degree.
json complex_to_json(const ComplexOfFp& c);

/// Group specifier including file:PATH.
FiniteGroup parse_group(const std::string& spec);
/// Module specifier including file:PATH.
GModule parse_module(const FiniteGroup& g, const std::string& spec);

}  // namespace ghl::app
