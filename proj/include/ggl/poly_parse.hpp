#pragma once

#include "ggl/laurent.hpp"

namespace ggl {

/// Parse expressions like "t^2 - t + 1", "t1*t2^-1 - 1", "1/2*x^2 + x" over
/// the given ring and variable names. Supports + - * ^ and parentheses.
LaurentPoly parse_poly(const std::string& src, const Ring& ring,
                       const std::vector<std::string>& var_names);

}  // namespace ggl
