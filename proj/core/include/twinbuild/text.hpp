#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "twinbuild/matrix.hpp"

namespace tb {

// Laurent polynomial text: terms "coef*z^e" in ascending exponent order,
// e.g. "1 - 2*z + (1+i)*z^3", "z^-1", "0".
std::string to_text(const LaurentPoly& p);
LaurentPoly parse_laurent(std::string_view text);

using MatrixRows = std::vector<std::vector<std::string>>;
MatrixRows to_rows(const LaurentMatrix& m);
LaurentMatrix from_rows(const MatrixRows& rows);

// Single-line form "[[a, b], [c, d]]" for diagnostics and text output.
std::string to_text(const LaurentMatrix& m);

}  // namespace tb
