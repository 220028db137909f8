#include "lacuna/grid.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace lacuna {

static_assert(std::endian::native == std::endian::little,
              "grid binary io assumes a little-endian host");

GridFunction GridFunction::zeros(std::vector<int> dims, double h, std::vector<double> origin) {
    GridFunction g;
    g.n = static_cast<int>(dims.size());
    g.dims = std::move(dims);
    g.h = h;
    g.origin = origin.empty() ? std::vector<double>(g.n, 0.0) : std::move(origin);
    g.data.assign(g.total(), 0.0);
    g.validate();
    return g;
}

size_t GridFunction::total() const {
    size_t t = 1;
    for (int d : dims) t *= static_cast<size_t>(d);
    return t;
}

size_t GridFunction::flat(const std::vector<int>& idx) const {
    size_t f = 0;
    for (int a = 0; a < n; ++a) f = f * dims[a] + idx[a];
    return f;
}

std::vector<int> GridFunction::unflat(size_t f) const {
    std::vector<int> idx(n);
    for (int a = n - 1; a >= 0; --a) {
        idx[a] = static_cast<int>(f % dims[a]);
        f /= dims[a];
    }
    return idx;
}

std::vector<double> GridFunction::point(const std::vector<int>& idx) const {
    std::vector<double> p(n);
    for (int a = 0; a < n; ++a) p[a] = origin[a] + h * idx[a];
    return p;
}

double GridFunction::interpolate(const double* pos) const {
    // Corner gather over the 2^n surrounding lattice points.
    int base[8];
    double frac[8];
    if (n > 8) throw std::invalid_argument("interpolate: dimension > 8");
    for (int a = 0; a < n; ++a) {
        double u = (pos[a] - origin[a]) / h;
        double fl = std::floor(u);
        base[a] = static_cast<int>(fl);
        frac[a] = u - fl;
    }
    double acc = 0.0;
    int corners = 1 << n;
    for (int c = 0; c < corners; ++c) {
        double w = 1.0;
        size_t f = 0;
        bool inside = true;
        for (int a = 0; a < n; ++a) {
            int bit = (c >> a) & 1;
            int i = base[a] + bit;
            w *= bit ? frac[a] : 1.0 - frac[a];
            if (i < 0 || i >= dims[a]) { inside = false; break; }
            f = f * dims[a] + i;
        }
        if (inside && w != 0.0) acc += w * data[f];
    }
    return acc;
}

double GridFunction::diameter() const {
    double s = 0;
    for (int d : dims) s += static_cast<double>(d - 1) * (d - 1);
    return h * std::sqrt(s);
}

void GridFunction::validate() const {
    if (n < 1 || static_cast<int>(dims.size()) != n || static_cast<int>(origin.size()) != n)
        throw std::invalid_argument("grid: inconsistent dimensions");
    for (int d : dims)
        if (d < 1) throw std::invalid_argument("grid: extents must be >= 1");
    if (!(h > 0)) throw std::invalid_argument("grid: spacing must be positive");
    if (data.size() != total()) throw std::invalid_argument("grid: data length mismatch");
    for (double v : data)
        if (!std::isfinite(v)) throw std::invalid_argument("grid: non-finite sample");
}

RadiusSet RadiusSet::dyadic(const GridFunction& f) {
    RadiusSet rs;
    double limit = f.diameter() / 2;
    for (double r = f.h; rs.radii.empty() || r <= limit; r *= 2) {
        rs.radii.push_back(r);
        if (r > limit) break;
    }
    return rs;
}

RadiusSet RadiusSet::explicit_list(std::vector<double> rs) {
    if (rs.empty()) throw std::invalid_argument("radius set: empty");
    for (size_t i = 0; i < rs.size(); ++i) {
        if (!(rs[i] > 0)) throw std::invalid_argument("radius set: radii must be positive");
        if (i > 0 && !(rs[i] > rs[i - 1]))
            throw std::invalid_argument("radius set: radii must increase");
    }
    return {std::move(rs)};
}

namespace {
constexpr char kMagic[8] = {'L', 'A', 'C', 'G', 'R', 'I', 'D', '1'};
}

void write_grid(const GridFunction& f, const std::string& path) {
    f.validate();
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out.write(kMagic, 8);
    auto put_u32 = [&](std::uint32_t v) { out.write(reinterpret_cast<const char*>(&v), 4); };
    put_u32(static_cast<std::uint32_t>(f.n));
    for (int d : f.dims) put_u32(static_cast<std::uint32_t>(d));
    out.write(reinterpret_cast<const char*>(&f.h), 8);
    out.write(reinterpret_cast<const char*>(f.origin.data()), 8 * f.n);
    out.write(reinterpret_cast<const char*>(f.data.data()),
              static_cast<std::streamsize>(8 * f.data.size()));
    if (!out) throw std::runtime_error("write failed: " + path);
}

GridFunction read_grid(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    char magic[8];
    in.read(magic, 8);
    if (!in || std::memcmp(magic, kMagic, 8) != 0)
        throw std::runtime_error("not a LACGRID1 file: " + path);
    auto get_u32 = [&]() {
        std::uint32_t v;
        in.read(reinterpret_cast<char*>(&v), 4);
        return v;
    };
    GridFunction f;
    f.n = static_cast<int>(get_u32());
    if (f.n < 1 || f.n > 8) throw std::runtime_error("grid file: bad dimension");
    f.dims.resize(f.n);
    for (int a = 0; a < f.n; ++a) f.dims[a] = static_cast<int>(get_u32());
    in.read(reinterpret_cast<char*>(&f.h), 8);
    f.origin.resize(f.n);
    in.read(reinterpret_cast<char*>(f.origin.data()), 8 * f.n);
    f.data.resize(f.total());
    in.read(reinterpret_cast<char*>(f.data.data()),
            static_cast<std::streamsize>(8 * f.data.size()));
    if (!in) throw std::runtime_error("truncated grid file: " + path);
    f.validate();
    return f;
}

} // namespace lacuna
