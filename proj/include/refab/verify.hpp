#ifndef REFAB_VERIFY_HPP
#define REFAB_VERIFY_HPP

#include <string>
#include <vector>

namespace refab {

struct CheckResult {
    std::string id;
    std::string description;
    bool passed = false;
    bool informational = false;  // reported, never fails a suite
    std::string detail;          // mismatch context, or the informational report
};

/* Each check bundles one verifiable claim family; bounds are parameters so
 * the command line can run them small and the acceptance gate can run them
 * at full depth. */
CheckResult check_bar_p_examples();
CheckResult check_convolution_oracle(long max_genus, long max_n);
CheckResult check_structural(long max_genus, long max_n);
CheckResult check_gm_quasimodularity(long max_m, long order);
CheckResult check_first_values(long imax_to_g4, long imax_g5_g6);
CheckResult check_closed_vs_interpolated(long max_genus, long max_codegree);
CheckResult check_degree_bounds(long max_genus);
CheckResult check_multiple_cover();
CheckResult check_genus_gf();
CheckResult check_codegree2_arbitration();

struct VerifyBounds {
    long max_genus = 6;
    long max_trunc = 6;
};

/* suite is "paper" (printed identities), "oracle" (independent
 * recomputation agreement) or "all". Results come back sorted by id. */
std::vector<CheckResult> verify_suite(const std::string& suite, const VerifyBounds& bounds);

/* True when every non-informational check passed. */
bool suite_passed(const std::vector<CheckResult>& results);

}  // namespace refab

#endif
