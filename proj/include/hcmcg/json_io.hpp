#pragma once

#include <json.hpp>

#include "hcmcg/abgroup.hpp"
#include "hcmcg/cocycles.hpp"
#include "hcmcg/group_cohomology.hpp"
#include "hcmcg/matrix.hpp"

namespace hcmcg {

using Json = nlohmann::json;

// Integers that fit in 64 bits are JSON numbers, larger ones decimal strings.
Json int_to_json(const Int& x);
Int int_from_json(const Json& j);

Json vector_to_json(const IntVector& v);
IntVector vector_from_json(const Json& j);

Json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);

// {"rank": r, "torsion": [d1, ...]}
Json group_to_json(const FinAbGroup& g);
FinAbGroup group_from_json(const Json& j);

Json element_to_json(const GroupElement& x);

// {"gens": k, "relators": [[1,1,-2], ...]}
Json presentation_to_json(const Presentation& p);
Presentation presentation_from_json(const Json& j);

// {"dimension": d, "modulus": m, "action": [matrix, ...]}
Json module_to_json(const GModule& m);
GModule module_from_json(const Json& j);

// {"g": g, "h": h, "pairs": [[A,B], ...], "translations": [[v,w], ...]}
Json class_to_json(const AffineSurfaceClass& c, bool with_translations = true);
AffineSurfaceClass class_from_json(const Json& j);
// True when the file carried translation data.
bool class_json_has_translations(const Json& j);

Json parse_json_file(const std::string& path);

}  // namespace hcmcg
