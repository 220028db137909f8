#include "lacuna/direction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lacuna {

double Direction::norm() const {
    double s = 0;
    for (double c : x) s += c * c;
    return std::sqrt(s);
}

Direction Direction::normalized_unit() const {
    double nr = norm();
    if (nr == 0) throw std::invalid_argument("direction: zero vector");
    Direction out;
    out.x.resize(x.size());
    for (size_t i = 0; i < x.size(); ++i) out.x[i] = x[i] / nr;
    return out;
}

Direction Direction::normalized_projective() const {
    if (is_rational()) {
        Rational best(0);
        for (const auto& c : rx) {
            Rational a = c.abs();
            if (best < a) best = a;
        }
        if (best.is_zero()) throw std::invalid_argument("direction: zero vector");
        std::vector<Rational> out(rx.size());
        for (size_t i = 0; i < rx.size(); ++i) out[i] = rx[i] / best;
        return Direction(out);
    }
    double best = 0;
    for (double c : x) best = std::max(best, std::fabs(c));
    if (best == 0) throw std::invalid_argument("direction: zero vector");
    Direction out;
    out.x.resize(x.size());
    for (size_t i = 0; i < x.size(); ++i) out.x[i] = x[i] / best;
    return out;
}

std::vector<SigmaPair> all_sigma_pairs(int d) {
    std::vector<SigmaPair> out;
    for (int j = 0; j < d; ++j)
        for (int k = j + 1; k < d; ++k) out.push_back({j, k});
    return out;
}

double dot(const Direction& w, const std::vector<double>& v) {
    double s = 0;
    for (size_t i = 0; i < v.size(); ++i) s += w.x[i] * v[i];
    return s;
}

bool same_direction(const Direction& a, const Direction& b, double tol) {
    if (a.dim() != b.dim()) return false;
    if (a.is_rational() && b.is_rational()) {
        Direction pa = a.normalized_projective();
        Direction pb = b.normalized_projective();
        for (int i = 0; i < a.dim(); ++i)
            if (!(pa.rx[i] == pb.rx[i])) return false;
        return true;
    }
    Direction ua = a.normalized_unit();
    Direction ub = b.normalized_unit();
    double d2 = 0;
    for (int i = 0; i < a.dim(); ++i) {
        double d = ua.x[i] - ub.x[i];
        d2 += d * d;
    }
    return std::sqrt(d2) <= tol;
}

size_t distinct_count(const DirectionSet& ds, double tol) {
    std::vector<const Direction*> reps;
    for (const auto& d : ds.dirs) {
        bool found = false;
        for (const auto* r : reps)
            if (same_direction(*r, d, tol)) { found = true; break; }
        if (!found) reps.push_back(&d);
    }
    return reps.size();
}

std::map<std::string, DirectionSet> octant_split(const DirectionSet& omega) {
    if (omega.empty()) throw std::invalid_argument("octant_split: empty set");
    std::map<std::string, DirectionSet> parts;
    for (const auto& d : omega.dirs) {
        std::string key(omega.n, '+');
        for (int i = 0; i < omega.n; ++i)
            if (d.x[i] < 0) key[i] = '-';
        auto& part = parts[key];
        part.n = omega.n;
        part.rational_mode = omega.rational_mode;
        part.dirs.push_back(d);
    }
    return parts;
}

namespace {

// True when every basis row is a signed standard unit vector; fills axes
// with the (axis, sign) of each row. Such bases keep rational exactness.
bool unit_rows(const std::vector<std::vector<double>>& basis,
               std::vector<std::pair<int, int>>& axes) {
    axes.clear();
    for (const auto& row : basis) {
        int axis = -1, sign = 0;
        for (size_t i = 0; i < row.size(); ++i) {
            if (row[i] == 0.0) continue;
            if (axis >= 0 || (row[i] != 1.0 && row[i] != -1.0)) return false;
            axis = static_cast<int>(i);
            sign = row[i] > 0 ? 1 : -1;
        }
        if (axis < 0) return false;
        axes.emplace_back(axis, sign);
    }
    return true;
}

} // namespace

DirectionSet shadow(const DirectionSet& omega,
                    const std::vector<std::vector<double>>& plane_basis) {
    int m = static_cast<int>(plane_basis.size());
    if (m < 1) throw std::invalid_argument("shadow: empty basis");
    std::vector<std::pair<int, int>> axes;
    bool exact = omega.rational_mode && unit_rows(plane_basis, axes);

    DirectionSet out;
    out.n = m;
    out.rational_mode = exact;
    for (const auto& d : omega.dirs) {
        if (exact) {
            std::vector<Rational> c(m);
            bool nonzero = false;
            for (int i = 0; i < m; ++i) {
                c[i] = d.rx[axes[i].first];
                if (axes[i].second < 0) c[i] = Rational(0) - c[i];
                nonzero = nonzero || !c[i].is_zero();
            }
            if (!nonzero) continue;   // perpendicular to the subspace
            Direction proj{c};
            proj = proj.normalized_projective();
            bool dup = false;
            for (const auto& r : out.dirs)
                if (same_direction(r, proj)) { dup = true; break; }
            if (!dup) out.dirs.push_back(proj);
        } else {
            std::vector<double> c(m);
            double nrm2 = 0;
            for (int i = 0; i < m; ++i) {
                c[i] = dot(d, plane_basis[i]);
                nrm2 += c[i] * c[i];
            }
            double nrm = std::sqrt(nrm2);
            if (nrm <= 1e-12) continue;
            Direction proj{std::vector<double>(m)};
            for (int i = 0; i < m; ++i) proj.x[i] = c[i] / nrm;
            bool dup = false;
            for (const auto& r : out.dirs)
                if (same_direction(r, proj, 1e-10)) { dup = true; break; }
            if (!dup) out.dirs.push_back(proj);
        }
    }
    return out;
}

} // namespace lacuna
