#pragma once

#include "ggl/euler.hpp"
#include "ggl/flag.hpp"

#include <json.hpp>

namespace ggl {

using Json = nlohmann::ordered_json;

/// {"ring": "Z", "nvars": n, "terms": [{"exp": [...], "coef": "<string>"}]},
/// terms in canonical (descending graded-lexicographic) order.
Json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const Json& j);

/// {"ring": ..., "N": n, "a": [{"i": 1, "j": 1, "coef": "1"}]}.
Json fgl_to_json(const TruncatedFGL& f);
TruncatedFGL fgl_from_json(const Json& j);
TruncatedFGL fgl_from_file(const std::string& path);

Json expansion_to_json(const FlagExpansion& e);
Json report_to_json(const RegularityReport& r);

}  // namespace ggl
