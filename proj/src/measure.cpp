#include "lacuna/measure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lacuna {

namespace {

// x-interval of the convex quadrilateral at height y, empty -> lo > hi.
struct Interval {
    double lo, hi;
};

bool row_interval(const std::array<std::array<double, 2>, 4>& q, double y, Interval& out) {
    double lo = 0, hi = 0;
    bool any = false;
    for (int e = 0; e < 4; ++e) {
        const auto& a = q[e];
        const auto& b = q[(e + 1) % 4];
        double y0 = a[1], y1 = b[1];
        if ((y0 <= y && y1 >= y) || (y1 <= y && y0 >= y)) {
            double x;
            if (y1 == y0) {
                // horizontal edge on the scan line: take both ends
                if (!any) { lo = hi = a[0]; any = true; }
                lo = std::min({lo, a[0], b[0]});
                hi = std::max({hi, a[0], b[0]});
                continue;
            }
            double t = (y - y0) / (y1 - y0);
            x = a[0] + t * (b[0] - a[0]);
            if (!any) { lo = hi = x; any = true; }
            lo = std::min(lo, x);
            hi = std::max(hi, x);
        }
    }
    if (!any) return false;
    out = {lo, hi};
    return true;
}

double union_length(std::vector<Interval>& iv) {
    if (iv.empty()) return 0;
    std::sort(iv.begin(), iv.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    double total = 0, lo = iv[0].lo, hi = iv[0].hi;
    for (size_t i = 1; i < iv.size(); ++i) {
        if (iv[i].lo > hi) {
            total += hi - lo;
            lo = iv[i].lo;
            hi = iv[i].hi;
        } else {
            hi = std::max(hi, iv[i].hi);
        }
    }
    return total + (hi - lo);
}

} // namespace

double measure_union(const RectangleFamily& family, int resolution, int dilation) {
    if (resolution < 256) throw std::invalid_argument("measure_union: resolution >= 256");
    if (dilation != 1 && dilation != 3) throw std::invalid_argument("measure_union: dilation 1 or 3");
    if (family.rectangles.empty()) return 0;

    std::vector<std::array<std::array<double, 2>, 4>> quads;
    double ymin = 1e300, ymax = -1e300;
    for (const auto& r : family.rectangles) {
        quads.push_back(r.corners(dilation));
        for (const auto& c : quads.back()) {
            ymin = std::min(ymin, c[1]);
            ymax = std::max(ymax, c[1]);
        }
    }

    int rows = resolution * 4;  // 4x supersampling across cells
    double dy = (ymax - ymin) / rows;
    if (!(dy > 0)) return 0;
    double area = 0;
    std::vector<Interval> iv;
    for (int r = 0; r < rows; ++r) {
        double y = ymin + (r + 0.5) * dy;
        iv.clear();
        Interval one;
        for (const auto& q : quads)
            if (row_interval(q, y, one) && one.hi > one.lo) iv.push_back(one);
        area += union_length(iv) * dy;
    }
    return area;
}

double measure_union(const KakeyaLift& lift, int resolution, int dilation) {
    double area = measure_union(lift.family, resolution, dilation);
    int n = static_cast<int>(lift.basis.size());
    if (n <= 2) return area;
    return area * std::pow(lift.alpha, n - 2);
}

} // namespace lacuna
