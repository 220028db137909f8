#include "lacuna/maximal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lacuna/parallel.hpp"

namespace lacuna {

namespace {

std::vector<long long> ring_counts(const GridFunction& f, const RadiusSet& radii) {
    std::vector<long long> ks;
    ks.reserve(radii.radii.size());
    for (double r : radii.radii) {
        if (!(r > 0)) throw std::invalid_argument("maximal: radii must be positive");
        ks.push_back(static_cast<long long>(std::ceil(r / f.h)));
    }
    return ks;
}

// One point of the directional maximal function: running window sums over
// rings, value recorded at each radius, max over (direction, radius).
double point_value(const GridFunction& f, const std::vector<const Direction*>& dirs,
                   const std::vector<long long>& ks, const std::vector<double>& x) {
    int n = f.n;
    double pos[8];
    double best = 0.0;
    double center = std::fabs(f.interpolate(x.data()));
    for (const Direction* w : dirs) {
        double sum = center;
        long long filled = 0;
        for (long long K : ks) {
            for (long long k = filled + 1; k <= K; ++k) {
                for (int a = 0; a < n; ++a) pos[a] = x[a] - k * f.h * w->x[a];
                sum += std::fabs(f.interpolate(pos));
                for (int a = 0; a < n; ++a) pos[a] = x[a] + k * f.h * w->x[a];
                sum += std::fabs(f.interpolate(pos));
            }
            filled = std::max(filled, K);
            double avg = sum / static_cast<double>(2 * K + 1);
            if (avg > best) best = avg;
        }
    }
    return best;
}

} // namespace

GridFunction directional_maximal(const GridFunction& f, const DirectionSet& omega,
                                 const RadiusSet& radii) {
    f.validate();
    if (omega.empty()) throw std::invalid_argument("directional_maximal: empty direction set");
    if (f.n > 8) throw std::invalid_argument("directional_maximal: dimension > 8");
    auto ks = ring_counts(f, radii);

    std::vector<const Direction*> dirs;
    for (const auto& d : omega.dirs) dirs.push_back(&d);

    GridFunction out = GridFunction::zeros(f.dims, f.h, f.origin);
    parallel_for(f.total(), [&](size_t p) {
        auto idx = f.unflat(p);
        auto x = f.point(idx);
        out.data[p] = point_value(f, dirs, ks, x);
    });
    return out;
}

GridFunction brute_oracle(const GridFunction& f, const DirectionSet& omega,
                          const RadiusSet& radii) {
    f.validate();
    if (f.total() > 1000000)
        throw std::invalid_argument("brute_oracle: grid larger than the 10^6 cell guard");
    if (omega.empty()) throw std::invalid_argument("brute_oracle: empty direction set");
    auto ks = ring_counts(f, radii);

    GridFunction out = GridFunction::zeros(f.dims, f.h, f.origin);
    int n = f.n;
    double pos[8];
    for (size_t p = 0; p < f.total(); ++p) {
        auto idx = f.unflat(p);
        auto x = f.point(idx);
        double best = 0.0;
        for (const auto& w : omega.dirs) {
            for (double r : radii.radii) {
                long long K = static_cast<long long>(std::ceil(r / f.h));
                // Recompute the whole window from scratch; the summation walks
                // the same ring order as the optimized path.
                double sum = std::fabs(f.interpolate(x.data()));
                for (long long k = 1; k <= K; ++k) {
                    for (int a = 0; a < n; ++a) pos[a] = x[a] - k * f.h * w.x[a];
                    sum += std::fabs(f.interpolate(pos));
                    for (int a = 0; a < n; ++a) pos[a] = x[a] + k * f.h * w.x[a];
                    sum += std::fabs(f.interpolate(pos));
                }
                double avg = sum / static_cast<double>(2 * K + 1);
                if (avg > best) best = avg;
            }
        }
        out.data[p] = best;
    }
    return out;
}

GridFunction hl_1d(const GridFunction& f, int axis, const RadiusSet& radii) {
    if (axis < 0 || axis >= f.n) throw std::invalid_argument("hl_1d: bad axis");
    DirectionSet e;
    e.n = f.n;
    std::vector<double> x(f.n, 0.0);
    x[axis] = 1.0;
    e.dirs.push_back(Direction{x});
    return directional_maximal(f, e, radii);
}

GridFunction hl_1d(const GridFunction& f, int axis) {
    return hl_1d(f, axis, RadiusSet::dyadic(f));
}

GridFunction strong_maximal(const GridFunction& f, const RadiusSet& radii) {
    GridFunction g = f;
    for (int a = 0; a < f.n; ++a) g = hl_1d(g, a, radii);
    return g;
}

GridFunction strong_maximal(const GridFunction& f) {
    return strong_maximal(f, RadiusSet::dyadic(f));
}

GridFunction tube_maximal(const GridFunction& f, const DirectionSet& omega,
                          const std::vector<double>& lengths,
                          const std::vector<double>& widths) {
    f.validate();
    if (omega.empty()) throw std::invalid_argument("tube_maximal: empty direction set");
    int n = f.n;
    if (n > 4) throw std::invalid_argument("tube_maximal: dimension > 4");

    // Per direction: orthonormal frame (axis first), from Gram-Schmidt over
    // the coordinate vectors.
    std::vector<std::vector<std::vector<double>>> frames;
    for (const auto& w : omega.dirs) {
        std::vector<std::vector<double>> fr;
        fr.push_back(w.normalized_unit().x);
        for (int i = 0; i < n && static_cast<int>(fr.size()) < n; ++i) {
            std::vector<double> v(n, 0.0);
            v[i] = 1.0;
            for (const auto& r : fr) {
                double c = 0;
                for (int a = 0; a < n; ++a) c += v[a] * r[a];
                for (int a = 0; a < n; ++a) v[a] -= c * r[a];
            }
            double nrm = 0;
            for (double c : v) nrm += c * c;
            nrm = std::sqrt(nrm);
            if (nrm > 1e-9) {
                for (auto& c : v) c /= nrm;
                fr.push_back(std::move(v));
            }
        }
        frames.push_back(std::move(fr));
    }

    GridFunction out = GridFunction::zeros(f.dims, f.h, f.origin);
    parallel_for(f.total(), [&](size_t p) {
        auto idx = f.unflat(p);
        auto x = f.point(idx);
        double best = 0.0;
        double rel[4], pos[4], coord[4];
        for (size_t di = 0; di < frames.size(); ++di) {
            const auto& fr = frames[di];
            for (double L : lengths) {
                for (double W : widths) {
                    long long KL = static_cast<long long>(std::ceil(L / 2 / f.h));
                    long long KW = static_cast<long long>(std::ceil(W / 2 / f.h));
                    // Candidate centers: lattice points around x within the tube shape.
                    long long reach = static_cast<long long>(std::ceil((L / 2 + W) / f.h)) + 1;
                    std::vector<long long> lo(n), hi(n);
                    for (int a = 0; a < n; ++a) {
                        lo[a] = std::max<long long>(0, idx[a] - reach);
                        hi[a] = std::min<long long>(f.dims[a] - 1, idx[a] + reach);
                    }
                    std::vector<long long> c(lo);
                    while (true) {
                        for (int a = 0; a < n; ++a) coord[a] = f.origin[a] + f.h * c[a];
                        for (int a = 0; a < n; ++a) rel[a] = x[a] - coord[a];
                        bool contains = true;
                        for (int a = 0; a < n && contains; ++a) {
                            double pr = 0;
                            for (int b = 0; b < n; ++b) pr += rel[b] * fr[a][b];
                            contains = std::fabs(pr) <= (a == 0 ? L / 2 : W / 2) + 1e-12;
                        }
                        if (contains) {
                            double sum = 0;
                            long long cnt = 0;
                            // rasterized average over the tube's own lattice
                            std::vector<long long> kk(n, 0);
                            kk[0] = -KL;
                            for (int a = 1; a < n; ++a) kk[a] = -KW;
                            while (true) {
                                for (int a = 0; a < n; ++a) {
                                    pos[a] = coord[a];
                                    for (int b = 0; b < n; ++b) pos[a] += kk[b] * f.h * fr[b][a];
                                }
                                sum += std::fabs(f.interpolate(pos));
                                ++cnt;
                                int a = n - 1;
                                for (; a >= 0; --a) {
                                    long long cap = a == 0 ? KL : KW;
                                    if (++kk[a] <= cap) break;
                                    kk[a] = -cap;
                                }
                                if (a < 0) break;
                            }
                            double avg = sum / static_cast<double>(cnt);
                            if (avg > best) best = avg;
                        }
                        int a = n - 1;
                        for (; a >= 0; --a) {
                            if (++c[a] <= hi[a]) break;
                            c[a] = lo[a];
                        }
                        if (a < 0) break;
                    }
                }
            }
        }
        out.data[p] = best;
    });
    return out;
}

double lp_norm(const GridFunction& f, double p) {
    double s = 0;
    for (double v : f.data) s += std::pow(std::fabs(v), p);
    double hn = std::pow(f.h, f.n);
    return std::pow(s * hn, 1.0 / p);
}

double norm_ratio(const GridFunction& f, const GridFunction& result, double p) {
    if (!(p > 1) || std::isinf(p)) throw std::invalid_argument("norm_ratio: p in (1, inf)");
    double den = lp_norm(f, p);
    if (den == 0) throw std::invalid_argument("norm_ratio: zero input norm");
    return lp_norm(result, p) / den;
}

} // namespace lacuna
