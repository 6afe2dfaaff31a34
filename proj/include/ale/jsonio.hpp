#ifndef ALE_JSONIO_HPP
#define ALE_JSONIO_HPP

#include <string>

#include "json.hpp"

#include "ale/classify.hpp"
#include "ale/delpezzo.hpp"
#include "ale/germ.hpp"
#include "ale/gh.hpp"
#include "ale/znquot.hpp"

namespace ale {

using Json = nlohmann::ordered_json;

// Field access with SchemaError naming the offending path.
const Json& get_field(const Json& j, const std::string& name);
long require_integer(const Json& j, const std::string& name);

Json complex_to_json(Cplx z);
Cplx complex_from_json(const Json& j, const std::string& where);

// {"type":"Ak","k":2,"coeffs":[[[0,0],[1,0]], ...]} with coefficients low to
// high in z and complex numbers as [re, im].
Json germ_to_json(const CoefficientGerm& g);
CoefficientGerm germ_from_json(const Json& j);

// {"kind":"A","rank":2,"zeta_r":[...],"zeta_c":[[re,im],...]}
Json parameter_to_json(const DeformationParameter& p);
DeformationParameter parameter_from_json(const Json& j);

// {"points":[[x,y,z],...],"string_direction":[...],"fiber_period":...};
// direction and period optional on input.
Json gh_config_to_json(const GHConfig& cfg);
GHConfig gh_config_from_json(const Json& j);

// {"d":2,"n":2,"m":1,"polygons":[{"height":..,"radius":..,"phase":..},...]}
Json polygon_config_to_json(const PolygonConfig& pc);
PolygonConfig polygon_config_from_json(const Json& j);

Json lifted_germ_to_json(const LiftedGerm& lg);
Json tangent_graviton_to_json(const TangentGraviton& tg);
Json classification_to_json(const Classification& c, const RootSystem& rs);
Json quotient_verdict_to_json(const QuotientSphereVerdict& v);
Json tsingularity_to_json(const TSingularity& t);
Json inventory_to_json(const std::vector<FixedPointEntry>& inv);

Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);  // "-" = stdout

}  // namespace ale

#endif
