#include "lacuna/certificate.hpp"

#include <stdexcept>

namespace lacuna {

int LacunaryCertificate::max_depth() const {
    int d = 0;
    for (const auto& [key, child] : children)
        d = std::max(d, 1 + (child ? child->max_depth() : 0));
    return d;
}

namespace {

std::string key_name(const SigmaPair& s, const SegmentIndex& i) {
    return "(sigma=(" + std::to_string(s.j) + "," + std::to_string(s.k) +
           "), i=" + i.to_string() + ")";
}

VerifyResult invalid(std::string why) {
    VerifyResult r;
    r.valid = false;
    r.witness = std::move(why);
    return r;
}

VerifyResult verify_rec(const DirectionSet& omega, const LacunaryCertificate& cert,
                        double lambda_bound, int order_bound) {
    if (omega.empty()) return invalid("certificate references empty segment");
    if (cert.order < 0) return invalid("negative order");
    if (cert.order > order_bound)
        return invalid("child order " + std::to_string(cert.order) + " exceeds bound " +
                       std::to_string(order_bound));

    if (cert.order == 0) {
        size_t k = distinct_count(omega);
        if (k != 1)
            return invalid("order-0 certificate for a set with " + std::to_string(k) +
                           " distinct directions");
        VerifyResult r;
        r.valid = true;
        r.order = 0;
        return r;
    }

    const Dissection& d = cert.dissection;
    if (d.sigmas.empty()) return invalid("positive order without a dissection");
    if (d.sigmas.size() != d.sequences.size())
        return invalid("dissection sigma/sequence mismatch");
    for (const auto& seq : d.sequences) {
        if (!(seq.lambda() < 1.0) || !(seq.lambda() > 0.0))
            return invalid("invalid lacunary constant");
        if (seq.lambda() > lambda_bound + 1e-15)
            return invalid("lacunary constant exceeds declared uniform bound");
    }

    // Every nonempty segment of every partition needs a valid child of order <= L-1;
    // a child pointing at an empty segment is a violation.
    for (size_t s = 0; s < d.sigmas.size(); ++s) {
        std::map<SegmentIndex, Segment> parts;
        try {
            parts = partition(omega, d.sigmas[s], d.sequences[s], d.basis);
        } catch (const std::exception& e) {
            return invalid(std::string("invalid sequence: ") + e.what());
        }
        for (const auto& [idx, seg] : parts) {
            auto it = cert.children.find({d.sigmas[s], idx});
            if (it == cert.children.end() || !it->second)
                return invalid("missing child certificate for nonempty segment " +
                               key_name(d.sigmas[s], idx));
            VerifyResult sub =
                verify_rec(seg.members, *it->second, lambda_bound, cert.order - 1);
            if (!sub.valid) {
                sub.witness = key_name(d.sigmas[s], idx) + ": " + sub.witness;
                return sub;
            }
        }
        for (const auto& [key, child] : cert.children) {
            if (!(key.first == d.sigmas[s])) continue;
            if (parts.find(key.second) == parts.end())
                return invalid("certificate references empty segment " +
                               key_name(key.first, key.second));
        }
    }

    VerifyResult r;
    r.valid = true;
    r.order = cert.order;
    return r;
}

} // namespace

VerifyResult verify_lacunary_certificate(const DirectionSet& omega,
                                         const LacunaryCertificate& cert) {
    double bound = cert.lambda_bound > 0 ? cert.lambda_bound : 1.0 - 1e-12;
    return verify_rec(omega, cert, bound, cert.order);
}

bool verify_dominating(const std::map<SegmentIndex, double>& norm_estimates,
                       const SegmentIndex& i_star) {
    auto it = norm_estimates.find(i_star);
    if (it == norm_estimates.end())
        throw std::invalid_argument("verify_dominating: missing estimate for i_star");
    double ref = it->second;
    for (const auto& [idx, est] : norm_estimates)
        if (est > 2.0 * ref) return false;
    return true;
}

} // namespace lacuna
