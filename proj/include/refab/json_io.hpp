#ifndef REFAB_JSON_IO_HPP
#define REFAB_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "refab/laurent.hpp"
#include "refab/npoly.hpp"
#include "refab/series.hpp"

namespace refab {

/* ordered_json keeps insertion order, so encodings are canonical and cache
 * files diff cleanly. Big integers travel as decimal strings. */
using Json = nlohmann::ordered_json;

/* {"degree": d, "terms": [{"exp": e, "num": "..", "den": ".."}...],
 *  "symmetric": bool}, terms ascending by exponent. Only integral exponents
 * are encodable; the zero polynomial encodes with degree 0 and no terms. */
Json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

/* {"order": N, "coeffs": [["num","den"], ...]} with exactly N+1 entries. */
Json to_json(const Series& s);
Series series_from_json(const Json& j);

/* [["num","den"], ...] ascending powers of n; zero polynomial = [["0","1"]]. */
Json to_json(const NPoly& p);
NPoly npoly_from_json(const Json& j);

/* {"genus": g, "imax": I, "codegree": [{"i": i, "npoly": [...]}...]} */
Json to_json(const ArInvariant& a);
ArInvariant ar_from_json(const Json& j);

/* The one true byte encoding used for cache files and --format json:
 * compact dump plus a trailing newline. */
std::string canonical_dump(const Json& j);

}  // namespace refab

#endif
