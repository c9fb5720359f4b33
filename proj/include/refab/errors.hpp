#ifndef REFAB_ERRORS_HPP
#define REFAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace refab {

/* Raised when a result that must live in Z[q^{\pm 1}] carries a fractional
 * exponent, e.g. a vertex multiplicity vector inconsistent with the gcd. */
struct non_integral_error : std::domain_error {
    explicit non_integral_error(const std::string& what) : std::domain_error(what) {}
};

/* A verification point disagreed with the fitted polynomial: the sampled
 * values are not a polynomial of the claimed degree. Distinct from
 * arithmetic errors on purpose, so callers can react by resampling. */
struct interpolation_error : std::runtime_error {
    explicit interpolation_error(const std::string& what) : std::runtime_error(what) {}
};

/* Stabilization retries exhausted: sampled windows kept failing
 * interpolation even after raising the threshold. */
struct stabilization_error : std::runtime_error {
    explicit stabilization_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace refab

#endif
