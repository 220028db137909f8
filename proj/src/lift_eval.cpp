#include "lacuna/lift_eval.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lacuna/parallel.hpp"

namespace lacuna {

namespace {

bool point_in_quad(const std::array<std::array<double, 2>, 4>& q, double x, double y) {
    // convex, counterclockwise
    for (int e = 0; e < 4; ++e) {
        const auto& a = q[e];
        const auto& b = q[(e + 1) % 4];
        double cross = (b[0] - a[0]) * (y - a[1]) - (b[1] - a[1]) * (x - a[0]);
        if (cross < 0) return false;
    }
    return true;
}

bool in_union(const std::vector<std::array<std::array<double, 2>, 4>>& quads, double x, double y) {
    for (const auto& q : quads)
        if (point_in_quad(q, x, y)) return true;
    return false;
}

} // namespace

ScaledLift build_scaled_lift(const KakeyaLift& lift, const DirectionSet& omega,
                             const LiftGridSpec& spec) {
    int n = static_cast<int>(lift.basis.size());
    if (n != 3) throw std::invalid_argument("build_scaled_lift: ambient dimension must be 3");
    if (omega.empty()) throw std::invalid_argument("build_scaled_lift: empty direction set");

    ScaledLift sl;
    sl.lift = lift;

    // Plane window: bbox of union 3R plus margin.
    double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
    std::vector<std::array<std::array<double, 2>, 4>> quads1, quads3;
    for (const auto& r : lift.family.rectangles) {
        quads1.push_back(r.corners(1.0));
        quads3.push_back(r.corners(3.0));
        for (const auto& c : quads3.back()) {
            x0 = std::min(x0, c[0]);
            x1 = std::max(x1, c[0]);
            y0 = std::min(y0, c[1]);
            y1 = std::max(y1, c[1]);
        }
    }
    double extent = std::max(x1 - x0, y1 - y0) * (1.0 + 2.0 * spec.plane_margin);
    sl.nx = sl.ny = spec.plane_res;
    sl.h = extent / (spec.plane_res - 1);
    sl.ox = (x0 + x1) / 2 - extent / 2;
    sl.oy = (y0 + y1) / 2 - extent / 2;

    sl.chi2d.assign(static_cast<size_t>(sl.nx) * sl.ny, 0.0);
    parallel_for(static_cast<size_t>(sl.nx), [&](size_t ix) {
        double x = sl.ox + sl.h * ix;
        for (int iy = 0; iy < sl.ny; ++iy) {
            double y = sl.oy + sl.h * iy;
            if (in_union(quads1, x, y)) sl.chi2d[ix * sl.ny + iy] = 1.0;
        }
    });

    // Transverse window: depth = (trans_cells - 2*margin) cells, kappa maps
    // the true [0, alpha] onto it.
    sl.nt = spec.trans_cells;
    sl.ot = -spec.trans_margin_cells * sl.h;
    sl.depth = (spec.trans_cells - 1 - 2 * spec.trans_margin_cells) * sl.h;
    if (!(sl.depth > 0)) throw std::invalid_argument("build_scaled_lift: too few transverse cells");
    sl.kappa = sl.depth / lift.alpha;
    sl.profile.assign(sl.nt, 0.0);
    for (int it = 0; it < sl.nt; ++it) {
        double t = sl.ot + sl.h * it;
        if (t >= 0.0 && t <= sl.depth) sl.profile[it] = 1.0;
    }

    // Directions in lift-basis coordinates, transverse component scaled.
    sl.dirs.n = 3;
    for (const auto& w : omega.dirs) {
        double c1 = dot(w, lift.basis[0]);
        double c2 = dot(w, lift.basis[1]);
        double c3 = dot(w, lift.basis[2]);
        std::vector<double> v{c1, c2, sl.kappa * c3};
        double nrm = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
        if (!(nrm > 0)) throw std::invalid_argument("build_scaled_lift: degenerate direction");
        for (auto& c : v) c /= nrm;
        sl.dirs.dirs.push_back(Direction{v});
    }
    return sl;
}

GridFunction materialize_chi(const ScaledLift& sl) {
    GridFunction g = GridFunction::zeros({sl.nx, sl.ny, sl.nt}, sl.h, {sl.ox, sl.oy, sl.ot});
    for (int ix = 0; ix < sl.nx; ++ix)
        for (int iy = 0; iy < sl.ny; ++iy) {
            double v = sl.chi2d[static_cast<size_t>(ix) * sl.ny + iy];
            if (v == 0.0) continue;
            size_t base = (static_cast<size_t>(ix) * sl.ny + iy) * sl.nt;
            for (int it = 0; it < sl.nt; ++it) g.data[base + it] = v * sl.profile[it];
        }
    return g;
}

double lift_chi_lp_norm(const ScaledLift& sl, double p) {
    double c2 = 0;
    for (double v : sl.chi2d) c2 += v;   // 0/1 mask
    double ct = 0;
    for (double v : sl.profile) ct += v;
    return std::pow(c2 * ct * std::pow(sl.h, 3), 1.0 / p);
}

double lift_norm_ratio(const ScaledLift& sl, const GridFunction& m, double p) {
    double den = lift_chi_lp_norm(sl, p);
    if (den == 0) throw std::invalid_argument("lift_norm_ratio: empty chi");
    return lp_norm(m, p) / den;
}

namespace {

inline double bilinear2d(const std::vector<double>& a, int nx, int ny, double ox, double oy,
                         double h, double x, double y) {
    double u = (x - ox) / h, v = (y - oy) / h;
    double fu = std::floor(u), fv = std::floor(v);
    int i = static_cast<int>(fu), j = static_cast<int>(fv);
    double du = u - fu, dv = v - fv;
    auto cell = [&](int ii, int jj) -> double {
        if (ii < 0 || ii >= nx || jj < 0 || jj >= ny) return 0.0;
        return a[static_cast<size_t>(ii) * ny + jj];
    };
    return (1 - du) * ((1 - dv) * cell(i, j) + dv * cell(i, j + 1)) +
           du * ((1 - dv) * cell(i + 1, j) + dv * cell(i + 1, j + 1));
}

// Piecewise pieces of the transverse weight L(p0 + s k) over an integer
// k-range: L is the linear interpolation of the 0/1 profile, a trapezoid with
// unit plateau [F, G] and ramps of width h on both sides.
struct AffinePiece {
    long long k1, k2;
    double a, b;  // weight = a + b * k
};

void trapezoid_pieces(double p0, double s, long long k1, long long k2, double F, double G,
                      double h, std::vector<AffinePiece>& out) {
    out.clear();
    if (k1 > k2) return;
    auto value = [&](double p) -> double {
        if (p <= F - h || p >= G + h) return 0.0;
        if (p >= F && p <= G) return 1.0;
        if (p < F) return (p - (F - h)) / h;
        return ((G + h) - p) / h;
    };
    if (s == 0.0) {
        double v = value(p0);
        if (v != 0.0) out.push_back({k1, k2, v, 0.0});
        return;
    }
    // p-breakpoints mapped to k, then walk the integer subranges.
    double bp[4] = {F - h, F, G, G + h};
    double kb[4];
    for (int i = 0; i < 4; ++i) kb[i] = (bp[i] - p0) / s;
    if (s < 0) std::swap(kb[0], kb[3]), std::swap(kb[1], kb[2]);
    // kb is now increasing; clip to [k1, k2]
    long long edges[6];
    edges[0] = k1;
    for (int i = 0; i < 4; ++i)
        edges[i + 1] = std::clamp(static_cast<long long>(std::floor(kb[i])), k1 - 1, k2);
    edges[5] = k2;
    long long lo = k1;
    for (int seg = 0; seg <= 4; ++seg) {
        long long hi = seg < 4 ? std::min(edges[seg + 1], k2) : k2;
        if (hi < lo) continue;
        // classify by midpoint
        double pm = p0 + s * (0.5 * (lo + hi));
        if (pm <= F - h || pm >= G + h) {
            // zero region
        } else if (pm >= F && pm <= G) {
            out.push_back({lo, hi, 1.0, 0.0});
        } else if (pm < F) {
            // L = (p - (F-h))/h = (p0 - F + h)/h + (s/h) k
            out.push_back({lo, hi, (p0 - F + h) / h, s / h});
        } else {
            out.push_back({lo, hi, (G + h - p0) / h, -s / h});
        }
        lo = hi + 1;
        if (lo > k2) break;
    }
}

} // namespace

GridFunction lift_maximal(const ScaledLift& sl) {
    GridFunction shape = GridFunction::zeros({sl.nx, sl.ny, sl.nt}, sl.h, {sl.ox, sl.oy, sl.ot});
    return lift_maximal(sl, RadiusSet::dyadic(shape));
}

GridFunction lift_maximal(const ScaledLift& sl, const RadiusSet& radii) {
    GridFunction out = GridFunction::zeros({sl.nx, sl.ny, sl.nt}, sl.h, {sl.ox, sl.oy, sl.ot});
    std::vector<long long> ks;
    for (double r : radii.radii) ks.push_back(static_cast<long long>(std::ceil(r / sl.h)));
    long long kmax = *std::max_element(ks.begin(), ks.end());
    size_t nd = sl.dirs.size();

    // Transverse support edges (grid-point coordinates of the 0/1 profile).
    int cfirst = -1, clast = -1;
    for (int it = 0; it < sl.nt; ++it)
        if (sl.profile[it] != 0.0) {
            if (cfirst < 0) cfirst = it;
            clast = it;
        }
    if (cfirst < 0) throw std::invalid_argument("lift_maximal: empty transverse profile");
    double F = sl.ot + sl.h * cfirst;
    double G = sl.ot + sl.h * clast;

    parallel_for(static_cast<size_t>(sl.nx), [&](size_t ix) {
        std::vector<double> Bn(kmax + 1), Bp(kmax + 1);
        std::vector<double> SN0(kmax + 1), SN1(kmax + 1), SP0(kmax + 1), SP1(kmax + 1);
        std::vector<double> safe_max(nd);
        std::vector<AffinePiece> pieces;
        double x = sl.ox + sl.h * ix;
        for (int iy = 0; iy < sl.ny; ++iy) {
            double y = sl.oy + sl.h * iy;

            for (size_t d = 0; d < nd; ++d) {
                const auto& w = sl.dirs[d].x;
                double b0 = bilinear2d(sl.chi2d, sl.nx, sl.ny, sl.ox, sl.oy, sl.h, x, y);
                SN0[0] = SP0[0] = SN1[0] = SP1[0] = 0.0;
                Bn[0] = Bp[0] = b0;
                double sum = b0;
                double best = 0.0;
                size_t mi = 0;
                long long filled = 0;
                for (long long K : ks) {
                    for (long long k = filled + 1; k <= K; ++k) {
                        double bn = bilinear2d(sl.chi2d, sl.nx, sl.ny, sl.ox, sl.oy, sl.h,
                                               x - k * sl.h * w[0], y - k * sl.h * w[1]);
                        double bp = bilinear2d(sl.chi2d, sl.nx, sl.ny, sl.ox, sl.oy, sl.h,
                                               x + k * sl.h * w[0], y + k * sl.h * w[1]);
                        Bn[k] = bn;
                        Bp[k] = bp;
                        SN0[k] = SN0[k - 1] + bn;
                        SN1[k] = SN1[k - 1] + bn * k;
                        SP0[k] = SP0[k - 1] + bp;
                        SP1[k] = SP1[k - 1] + bp * k;
                        sum += bn + bp;
                    }
                    filled = std::max(filled, K);
                    double avg = sum / static_cast<double>(2 * K + 1);
                    if (avg > best) best = avg;
                    ++mi;
                }
                safe_max[d] = best;
            }

            size_t base = (static_cast<size_t>(ix) * sl.ny + iy) * sl.nt;
            for (int it = 0; it < sl.nt; ++it) {
                double t = sl.ot + sl.h * it;
                double m = 0.0;
                for (size_t d = 0; d < nd; ++d) {
                    double wt = sl.dirs[d].x[2];
                    double drift = kmax * sl.h * std::fabs(wt);
                    double v;
                    if (t - drift >= F && t + drift <= G) {
                        v = safe_max[d];  // every sample stays on the unit plateau
                    } else {
                        // transverse-weighted resum via the prefix tables
                        double Lc = 0.0;
                        {
                            double p = t;
                            if (p > F - sl.h && p < G + sl.h)
                                Lc = p >= F && p <= G ? 1.0
                                     : p < F        ? (p - (F - sl.h)) / sl.h
                                                    : ((G + sl.h) - p) / sl.h;
                        }
                        double b0 = Bn[0];
                        v = 0.0;
                        for (long long K : ks) {
                            double total = b0 * Lc;
                            trapezoid_pieces(t, -sl.h * wt, 1, K, F, G, sl.h, pieces);
                            for (const auto& pc : pieces)
                                total += pc.a * (SN0[pc.k2] - SN0[pc.k1 - 1]) +
                                         pc.b * (SN1[pc.k2] - SN1[pc.k1 - 1]);
                            trapezoid_pieces(t, sl.h * wt, 1, K, F, G, sl.h, pieces);
                            for (const auto& pc : pieces)
                                total += pc.a * (SP0[pc.k2] - SP0[pc.k1 - 1]) +
                                         pc.b * (SP1[pc.k2] - SP1[pc.k1 - 1]);
                            double avg = total / static_cast<double>(2 * K + 1);
                            if (avg > v) v = avg;
                        }
                    }
                    if (v > m) m = v;
                }
                out.data[base + it] = m;
            }
        }
    });
    return out;
}

std::pair<double, size_t> lift_region_min(const ScaledLift& sl, const GridFunction& m,
                                          double inset_cells) {
    double inset = inset_cells * sl.h;
    std::vector<std::array<std::array<double, 2>, 4>> quads3;
    for (const auto& r : sl.lift.family.rectangles) quads3.push_back(r.corners(3.0));

    double best = 1e300;
    size_t count = 0;
    for (int ix = 0; ix < sl.nx; ++ix) {
        double x = sl.ox + sl.h * ix;
        for (int iy = 0; iy < sl.ny; ++iy) {
            double y = sl.oy + sl.h * iy;
            int hit = -1;
            for (size_t q = 0; q < quads3.size(); ++q) {
                // inset: shrink the quad test by requiring the point to stay in
                // when nudged along both axes
                if (point_in_quad(quads3[q], x, y) && point_in_quad(quads3[q], x + inset, y) &&
                    point_in_quad(quads3[q], x - inset, y) && point_in_quad(quads3[q], x, y + inset) &&
                    point_in_quad(quads3[q], x, y - inset)) {
                    hit = static_cast<int>(q);
                    break;
                }
            }
            if (hit < 0) continue;
            double blo = 3.0 * sl.kappa * sl.lift.betas[hit] + inset;
            double bhi = sl.depth - 3.0 * sl.kappa * sl.lift.betas[hit] - inset;
            size_t base = (static_cast<size_t>(ix) * sl.ny + iy) * sl.nt;
            for (int it = 0; it < sl.nt; ++it) {
                double t = sl.ot + sl.h * it;
                if (t < blo || t > bhi) continue;
                best = std::min(best, m.data[base + it]);
                ++count;
            }
        }
    }
    return {count ? best : 0.0, count};
}

} // namespace lacuna
