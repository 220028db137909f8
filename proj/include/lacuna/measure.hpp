#ifndef LACUNA_MEASURE_HPP
#define LACUNA_MEASURE_HPP

#include "lacuna/generators.hpp"

namespace lacuna {

/// Rasterized area of the union of (length-dilated) rectangles: rows sampled
/// at 4 sub-rows per cell, interval union exact in x within each sub-row.
/// Error is O(total perimeter / resolution).
double measure_union(const RectangleFamily& family, int resolution, int dilation);

/// Volume of the union of (dilated) lifted boxes R x [0, alpha]^{n-2}; the
/// dilation is planar, the transverse box is shared, so this is
/// area(union of dilated rectangles) * alpha^{n-2}.
double measure_union(const KakeyaLift& lift, int resolution, int dilation);

} // namespace lacuna

#endif
