#include "lacuna/generators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace lacuna {

namespace {

std::vector<std::vector<double>> identity_basis(int n) {
    std::vector<std::vector<double>> b(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) b[i][i] = 1.0;
    return b;
}

std::shared_ptr<LacunaryCertificate> order0() {
    return std::make_shared<LacunaryCertificate>(singleton_certificate());
}

} // namespace

LacunaryCertificate singleton_certificate() {
    LacunaryCertificate c;
    c.order = 0;
    c.lambda_bound = 0.5;
    return c;
}

// ---------------------------------------------------------------------------
// Nagel-Stein-Wainger family
// ---------------------------------------------------------------------------

GeneratedFamily nsw_directions(const std::vector<double>& exponents,
                               const LacunarySequence& vartheta, int count) {
    int n = static_cast<int>(exponents.size());
    if (n < 2) throw std::invalid_argument("nsw_directions: need n >= 2 exponents");
    if (count < 1) throw std::invalid_argument("nsw_directions: count >= 1");
    for (int m = 0; m + 1 < n; ++m)
        if (!(exponents[m] < exponents[m + 1]))
            throw std::invalid_argument("nsw_directions: exponents must be strictly increasing");
    if (!(exponents[0] > 0))
        throw std::invalid_argument("nsw_directions: exponents must be positive");

    DirectionSet ds;
    ds.n = n;
    for (int i = 1; i <= count; ++i) {
        double v = vartheta.theta(i);
        std::vector<double> x(n);
        for (int m = 0; m < n; ++m) x[m] = std::pow(v, exponents[m]);
        ds.dirs.push_back(Direction(x).normalized_unit());
    }

    // Canonical dissection: theta_{sigma,i} read off from the stored
    // coordinates so band boundaries coincide bit-for-bit with the ratios the
    // partition computes.
    Dissection d;
    d.basis = identity_basis(n);
    d.sigmas = all_sigma_pairs(n);
    for (const auto& s : d.sigmas) {
        std::vector<double> vals(count);
        for (int i = 0; i < count; ++i)
            vals[i] = ds.dirs[i].x[s.k] / ds.dirs[i].x[s.j];
        double lam = 0;
        for (int i = 0; i + 1 < count; ++i) lam = std::max(lam, vals[i + 1] / vals[i]);
        if (count == 1)
            lam = std::pow(vartheta.lambda(), exponents[s.k] - exponents[s.j]);
        d.sequences.push_back(LacunarySequence::table(1, vals, std::min(lam, 1.0 - 1e-9)));
    }

    LacunaryCertificate cert;
    cert.order = count == 1 ? 0 : 1;
    cert.lambda_bound = 0;
    for (const auto& seq : d.sequences) cert.lambda_bound = std::max(cert.lambda_bound, seq.lambda());
    if (cert.order > 0) {
        cert.dissection = d;
        for (size_t s = 0; s < d.sigmas.size(); ++s) {
            auto parts = partition(ds, d.sigmas[s], d.sequences[s], d.basis);
            for (const auto& [idx, seg] : parts)
                cert.children[{d.sigmas[s], idx}] = order0();
        }
    }
    return {ds, cert};
}

// ---------------------------------------------------------------------------
// Carbery family
// ---------------------------------------------------------------------------

namespace {

// Recursion state for the dyadic-lattice certificate. Each member direction
// is sum_m scales[m] * 2^{tuples[member][m]} * rows[m] up to a per-member
// factor, with the rows orthonormal. Each dissection level fixes one exponent
// difference and folds the pair (j,k) into a single in-plane axis, so the
// axis count drops by one per level and the recursion terminates with order
// at most d-1.
struct DyadicState {
    std::vector<std::vector<long long>> tuples;
    std::vector<Direction> dirs;          // parallel to tuples
    std::vector<double> scales;           // per axis
    std::vector<std::vector<double>> rows; // per axis, length n
};

size_t distinct_tuples(const DyadicState& st) {
    std::vector<std::vector<long long>> forms;
    for (const auto& t : st.tuples) {
        std::vector<long long> f(t.size());
        for (size_t m = 0; m < t.size(); ++m) f[m] = t[m] - t[0];
        if (std::find(forms.begin(), forms.end(), f) == forms.end()) forms.push_back(f);
    }
    return forms.size();
}

std::vector<std::vector<double>> complete_basis(std::vector<std::vector<double>> rows, int n) {
    for (int i = 0; i < n && static_cast<int>(rows.size()) < n; ++i) {
        std::vector<double> v(n, 0.0);
        v[i] = 1.0;
        for (const auto& r : rows) {
            double c = std::inner_product(v.begin(), v.end(), r.begin(), 0.0);
            for (int m = 0; m < n; ++m) v[m] -= c * r[m];
        }
        double nrm = std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
        if (nrm > 1e-9) {
            for (int m = 0; m < n; ++m) v[m] /= nrm;
            rows.push_back(std::move(v));
        }
    }
    return rows;
}

LacunaryCertificate build_dyadic_certificate(const DyadicState& st, int n) {
    if (distinct_tuples(st) <= 1) return singleton_certificate();
    int d = static_cast<int>(st.rows.size());
    if (d < 2) throw std::runtime_error("dyadic certificate: degenerate state");

    Dissection dis;
    dis.basis = complete_basis(st.rows, n);
    dis.sigmas = all_sigma_pairs(d);
    // sqrt(2)-offset dyadic bands: member ratios sit mid-band, so the float
    // dot products can never straddle a band boundary.
    for (const auto& s : dis.sigmas)
        dis.sequences.push_back(LacunarySequence::geometric(
            (st.scales[s.k] / st.scales[s.j]) * std::sqrt(2.0), 0.5));

    DirectionSet members;
    members.n = n;
    members.rational_mode = !st.dirs.empty() && st.dirs.front().is_rational();
    members.dirs = st.dirs;

    LacunaryCertificate cert;
    cert.dissection = dis;
    cert.lambda_bound = 0.5;
    int max_child = 0;
    for (size_t s = 0; s < dis.sigmas.size(); ++s) {
        const SigmaPair& sg = dis.sigmas[s];
        auto parts = partition(members, sg, dis.sequences[s], dis.basis);
        // Regroup tuples along the partition the verifier will see.
        std::map<SegmentIndex, std::vector<size_t>> groups;
        for (size_t m = 0; m < st.dirs.size(); ++m)
            groups[segment_index(st.dirs[m], sg, dis.sequences[s], dis.basis)].push_back(m);
        for (const auto& [idx, mem_idx] : groups) {
            if (parts.find(idx) == parts.end())
                throw std::logic_error("dyadic certificate: group/partition mismatch");
            long long diff = st.tuples[mem_idx.front()][sg.k] - st.tuples[mem_idx.front()][sg.j];
            for (size_t m : mem_idx)
                if (st.tuples[m][sg.k] - st.tuples[m][sg.j] != diff)
                    throw std::logic_error("dyadic certificate: band mixed exponent differences");

            DyadicState child;
            double rho = (st.scales[sg.k] / st.scales[sg.j]) * std::ldexp(1.0, static_cast<int>(diff));
            double fold = std::sqrt(1.0 + rho * rho);
            for (int a = 0; a < d; ++a) {
                if (a == sg.k) continue;
                if (a == sg.j) {
                    std::vector<double> g(n);
                    for (int m = 0; m < n; ++m)
                        g[m] = (st.rows[sg.j][m] + rho * st.rows[sg.k][m]) / fold;
                    child.rows.push_back(std::move(g));
                    child.scales.push_back(st.scales[sg.j] * fold);
                } else {
                    child.rows.push_back(st.rows[a]);
                    child.scales.push_back(st.scales[a]);
                }
            }
            for (size_t m : mem_idx) {
                std::vector<long long> t;
                for (int a = 0; a < d; ++a)
                    if (a != sg.k) t.push_back(st.tuples[m][a]);
                child.tuples.push_back(std::move(t));
                child.dirs.push_back(st.dirs[m]);
            }
            auto sub = std::make_shared<LacunaryCertificate>(build_dyadic_certificate(child, n));
            max_child = std::max(max_child, sub->order);
            cert.lambda_bound = std::max(cert.lambda_bound, sub->lambda_bound);
            cert.children[{sg, idx}] = sub;
        }
    }
    cert.order = 1 + max_child;
    return cert;
}

} // namespace

GeneratedFamily carbery_directions(int n, int k_min, int k_max) {
    if (n < 2) throw std::invalid_argument("carbery_directions: n >= 2");
    if (k_min > k_max) throw std::invalid_argument("carbery_directions: empty range");

    DirectionSet ds;
    ds.n = n;
    ds.rational_mode = true;
    DyadicState st;
    int span = k_max - k_min + 1;
    long long total = 1;
    for (int i = 0; i < n; ++i) total *= span;
    for (long long t = 0; t < total; ++t) {
        long long rem = t;
        std::vector<Rational> rc(n);
        std::vector<long long> tuple(n);
        for (int i = 0; i < n; ++i) {
            int k = k_min + static_cast<int>(rem % span);
            rem /= span;
            rc[i] = Rational::pow2(k);
            tuple[i] = k;
        }
        ds.dirs.push_back(Direction(rc).normalized_projective());
        st.tuples.push_back(std::move(tuple));
        st.dirs.push_back(ds.dirs.back());
    }
    st.scales.assign(n, 1.0);
    st.rows.assign(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) st.rows[i][i] = 1.0;

    LacunaryCertificate cert = build_dyadic_certificate(st, n);
    return {ds, cert};
}

// ---------------------------------------------------------------------------
// Rational slope enumeration and the two counterexample families
// ---------------------------------------------------------------------------

std::vector<Rational> slope_rationals(int count) {
    std::vector<Rational> out;
    Rational lo(1, 2), hi(2, 3);
    for (long long den = 1; static_cast<int>(out.size()) < count; ++den) {
        long long num_lo = (den + 1) / 2;              // ceil(den/2)
        long long num_hi = (2 * den) / 3;              // floor(2 den / 3)
        for (long long num = num_lo; num <= num_hi; ++num) {
            if (std::gcd(num, den) != 1) continue;
            Rational q(num, den);
            if (q < lo || hi < q) continue;
            out.push_back(q);
            if (static_cast<int>(out.size()) == count) break;
        }
    }
    return out;
}

DirectionSet rational_slope_set(int n, int count) {
    if (n < 2) throw std::invalid_argument("rational_slope_set: n >= 2");
    if (count < 1) throw std::invalid_argument("rational_slope_set: count >= 1");
    auto qs = slope_rationals(count);

    DirectionSet ds;
    ds.n = n;
    for (int l = 1; l <= count; ++l) {
        double q = qs[l - 1].to_double();
        std::vector<double> x(n, 0.0);
        if (n == 2) {
            x[1] = 1.0;
            x[0] = q;
        } else {
            for (int j = 2; j < n; ++j) x[j - 1] = std::ldexp(1.0, -j * l); // w_j = 2^{-jl}
            x[0] = q * x[1];
            double s = 0;
            for (int j = 0; j + 1 < n; ++j) s += x[j] * x[j];
            x[n - 1] = std::sqrt(1.0 - s);
        }
        Direction d{x};
        ds.dirs.push_back(n == 2 ? d.normalized_unit() : d);
    }
    return ds;
}

namespace {

double angle_between(const std::vector<double>& a, const std::vector<double>& b) {
    double num = std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
    double na = std::sqrt(std::inner_product(a.begin(), a.end(), a.begin(), 0.0));
    double nb = std::sqrt(std::inner_product(b.begin(), b.end(), b.begin(), 0.0));
    double c = std::clamp(num / (na * nb), -1.0, 1.0);
    return std::acos(c);
}

} // namespace

RotatedFamily rotated_accumulating_set(int n, int count, double delta) {
    if (n < 3) throw std::invalid_argument("rotated_accumulating_set: n >= 3");
    if (count < 1) throw std::invalid_argument("rotated_accumulating_set: count >= 1");
    if (!(delta > 0 && delta < 0.2))
        throw std::invalid_argument("rotated_accumulating_set: delta in (0, 0.2)");

    double z = std::sqrt(1.0 + delta * delta);
    std::vector<double> e2p(n, 0.0), enp(n, 0.0);
    e2p[1] = 1.0 / z;
    e2p[n - 1] = delta / z;
    enp[1] = -delta / z;
    enp[n - 1] = 1.0 / z;

    auto qs = slope_rationals(count);

    auto make = [&](int l, double phi) {
        double q = qs[l - 1].to_double();
        double vs = std::sqrt(1.0 + q * q);
        std::vector<double> w(n, 0.0);
        double c = std::cos(phi), s = std::sin(phi);
        for (int i = 0; i < n; ++i) w[i] = c * enp[i] + (s / vs) * (e2p[i] * q);
        w[0] += s / vs;  // e_1 component of v_l
        // Small interior components keep every coordinate pair in its own
        // dyadic band for n >= 4; they vanish from all e_1/e_2'/e_n' dots.
        for (int j = 3; j < n; ++j) w[j - 1] += s * std::ldexp(1.0, -j * l);
        double nrm = std::sqrt(std::inner_product(w.begin(), w.end(), w.begin(), 0.0));
        for (auto& c2 : w) c2 /= nrm;
        return w;
    };

    // Per-pair trend of |w.e_k|/|w.e_j| as the directions home in on e_n':
    // pairs reaching into e_n grow, pairs confined to the shrinking components
    // decay. (2,n) is exempt: that ratio tends to the constant 1/delta, which
    // is why those segments accumulate only in the primed frame.
    auto pair_grows = [&](int j, int k) {  // 1-based axes
        if (j == 1) return k == 2 || k == n;
        return k == n;
    };

    std::vector<std::vector<double>> ws;
    double phi = delta / 2;
    ws.push_back(make(1, phi));
    for (int l = 2; l <= count; ++l) {
        const auto& prev = ws.back();
        double cand_phi = phi / 2;
        int iter = 0;
        for (;; cand_phi /= 2) {
            if (++iter > 200)
                throw std::runtime_error("rotated_accumulating_set: bisection failed");
            auto cand = make(l, cand_phi);
            if (angle_between(prev, enp) < 2.0 * angle_between(cand, enp)) continue;
            double bp = std::inner_product(prev.begin(), prev.end(), enp.begin(), 0.0) /
                        std::inner_product(prev.begin(), prev.end(), e2p.begin(), 0.0);
            double bc = std::inner_product(cand.begin(), cand.end(), enp.begin(), 0.0) /
                        std::inner_product(cand.begin(), cand.end(), e2p.begin(), 0.0);
            if (!(bp <= 0.5 * bc)) continue;
            bool ok = true;
            for (int j = 1; j <= n && ok; ++j)
                for (int k = j + 1; k <= n && ok; ++k) {
                    if (j == 2 && k == n) continue;
                    double rp = std::fabs(prev[k - 1]) / std::fabs(prev[j - 1]);
                    double rc = std::fabs(cand[k - 1]) / std::fabs(cand[j - 1]);
                    ok = pair_grows(j, k) ? (rp <= 0.5 * rc) : (rc <= 0.5 * rp);
                }
            if (!ok) continue;
            ws.push_back(cand);
            phi = cand_phi;
            break;
        }
    }

    RotatedFamily out;
    out.directions.n = n;
    for (auto& w : ws) out.directions.dirs.push_back(Direction(std::move(w)));
    out.e2_prime = e2p;
    out.en_prime = enp;
    return out;
}

// ---------------------------------------------------------------------------
// Besicovitch rectangle families (Perron tree translations)
// ---------------------------------------------------------------------------

double Rectangle2D::diam() const { return std::hypot(length, width); }

std::array<std::array<double, 2>, 4> Rectangle2D::corners(double length_scale) const {
    double hx = dir_x * length * length_scale / 2, hy = dir_y * length * length_scale / 2;
    double px = -dir_y * width / 2, py = dir_x * width / 2;
    return {{{cx - hx - px, cy - hy - py},
             {cx + hx - px, cy + hy - py},
             {cx + hx + px, cy + hy + py},
             {cx - hx + px, cy - hy + py}}};
}

double besicovitch_default_alpha(int levels) {
    // Keep fraction per merge. Chosen so the measured |U R| / |U 3R| tracks
    // a/N across N = 1..8 at the spec's rectangle dimensions.
    if (levels <= 1) return 0.5;
    double a = 1.0 - std::log(2.0 * levels) / (2.0 * levels);
    return std::clamp(a, 0.5, 0.98);
}

RectangleFamily besicovitch_family(int levels,
                                   std::vector<std::vector<double>> plane_basis,
                                   const std::optional<std::vector<double>>& slopes,
                                   const BesicovitchOptions& opts) {
    if (levels < 0) throw std::invalid_argument("besicovitch_family: N >= 0");
    int m = 1 << levels;

    std::vector<double> s;
    if (slopes) {
        s = *slopes;
        std::sort(s.begin(), s.end(), std::greater<double>());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (static_cast<int>(s.size()) < m)
            throw std::invalid_argument("besicovitch_family: need at least 2^N distinct slopes");
        s.resize(m);
    } else {
        s.resize(m);
        for (int j = 0; j < m; ++j)
            s[j] = 2.0 / 3.0 - (j + 0.5) * (1.0 / 6.0) / m;  // uniform in (1/2, 2/3)
    }

    double alpha = opts.alpha > 0 ? opts.alpha : besicovitch_default_alpha(levels);
    double W = opts.anchor_width;
    double width = std::ldexp(1.0, -levels);

    RectangleFamily fam;
    fam.plane_basis = std::move(plane_basis);
    fam.levels = levels;
    for (int j = 0; j < m; ++j) {
        double anchor = (j + 0.5) * W / m;
        // Right subtrees shift left by (1 - alpha) * (node base width).
        for (int d = 0; d < levels; ++d) {
            int bit = (j >> (levels - 1 - d)) & 1;
            if (bit) anchor -= (1.0 - alpha) * W * std::ldexp(1.0, -d);
        }
        Rectangle2D r;
        double nrm = std::hypot(s[j], 1.0);
        r.dir_x = s[j] / nrm;
        r.dir_y = 1.0 / nrm;
        r.length = 1.0;
        r.width = width;
        r.cx = anchor + r.dir_x * 0.5;
        r.cy = r.dir_y * 0.5;
        fam.rectangles.push_back(r);
    }
    return fam;
}

KakeyaLift kakeya_lift(const RectangleFamily& family, const DirectionSet& omega,
                       std::vector<std::vector<double>> ambient_basis,
                       double angle_tol) {
    int n = static_cast<int>(ambient_basis.size());
    if (n < 2) throw std::invalid_argument("kakeya_lift: ambient dimension >= 2");

    KakeyaLift lift;
    lift.family = family;
    lift.basis = std::move(ambient_basis);

    for (const auto& r : family.rectangles) {
        int found = -1;
        double w1 = 0, w2 = 0;
        for (size_t i = 0; i < omega.size(); ++i) {
            double c1 = dot(omega[i], lift.basis[0]);
            double c2 = dot(omega[i], lift.basis[1]);
            double nrm = std::hypot(c1, c2);
            if (nrm <= 1e-300) continue;
            double dx = c1 / nrm - r.dir_x, dy = c2 / nrm - r.dir_y;
            if (std::hypot(dx, dy) <= angle_tol) {
                found = static_cast<int>(i);
                // plane components of the (unit) shading direction
                double full = omega[i].norm();
                w1 = c1 / full;
                w2 = c2 / full;
                break;
            }
        }
        if (found < 0)
            throw std::invalid_argument("kakeya_lift: no shading direction for a rectangle");
        lift.shading.push_back(found);
        lift.betas.push_back(r.diam() / std::hypot(w1, w2));
    }
    lift.alpha = 0;
    for (double b : lift.betas) lift.alpha = std::max(lift.alpha, b);
    lift.alpha *= 10.0;
    return lift;
}

} // namespace lacuna
