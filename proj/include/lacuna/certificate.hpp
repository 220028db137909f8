#ifndef LACUNA_CERTIFICATE_HPP
#define LACUNA_CERTIFICATE_HPP

#include <map>
#include <memory>
#include <string>

#include "lacuna/lacunary.hpp"

namespace lacuna {

/// Witness tree for "lacunary of order L": an order-0 certificate asserts the
/// set is a single direction; an order-L certificate provides a dissection and
/// one child certificate of order <= L-1 per nonempty segment of each of its
/// partitions.
struct LacunaryCertificate {
    int order = 0;
    double lambda_bound = 0.0;  // uniform bound on all lacunary constants below
    Dissection dissection;      // unused when order == 0
    std::map<std::pair<SigmaPair, SegmentIndex>, std::shared_ptr<LacunaryCertificate>> children;

    int max_depth() const;
};

struct VerifyResult {
    bool valid = false;
    int order = 0;
    std::string witness;  // first violated condition, empty when valid
};

/// Recursive check of a certificate against a finite direction set.
/// Returns the first violation as a human-readable witness.
VerifyResult verify_lacunary_certificate(const DirectionSet& omega,
                                         const LacunaryCertificate& cert);

/// Dominating-segment test over empirical norm lower bounds: true iff
/// estimate(i) <= 2 * estimate(i_star) for every index present.
/// Throws when i_star has no estimate.
bool verify_dominating(const std::map<SegmentIndex, double>& norm_estimates,
                       const SegmentIndex& i_star);

} // namespace lacuna

#endif
