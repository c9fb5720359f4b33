#ifndef REFAB_RENDER_HPP
#define REFAB_RENDER_HPP

#include <string>

#include "refab/laurent.hpp"
#include "refab/npoly.hpp"
#include "refab/series.hpp"

namespace refab {

enum class Format { text, json, latex, csv };

/* Accepts the four names used on the command line; anything else throws. */
Format parse_format(const std::string& name);

/* Laurent polynomials print by descending exponent, matching how the
 * invariants are usually written out: "2q - 4 + 2q^{-1}" in latex,
 * "2q - 4 + 2q^-1" in text. */
std::string render(const LaurentPoly& p, Format f);

/* Truncated series print by ascending exponent in the given variable,
 * with an explicit O(var^{N+1}) tail marker in text form. */
std::string render(const Series& s, Format f, const std::string& var = "x");

std::string render(const NPoly& p, Format f);

std::string render(const ArInvariant& a, Format f);

}  // namespace refab

#endif
