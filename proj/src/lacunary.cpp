#include "lacuna/lacunary.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lacuna {

LacunarySequence LacunarySequence::geometric(double scale, double ratio) {
    LacunarySequence s;
    s.kind_ = Kind::Geometric;
    s.scale_ = scale;
    s.ratio_ = ratio;
    s.lambda_ = ratio;
    s.validate();
    return s;
}

LacunarySequence LacunarySequence::table(long long first_index, std::vector<double> values,
                                         double lambda) {
    LacunarySequence s;
    s.kind_ = Kind::Table;
    s.first_ = first_index;
    s.values_ = std::move(values);
    s.lambda_ = lambda;
    for (size_t i = 0; i + 1 < s.values_.size(); ++i)
        s.lambda_ = std::max(s.lambda_, s.values_[i + 1] / s.values_[i]);
    s.validate();
    return s;
}

void LacunarySequence::validate() const {
    if (kind_ == Kind::Geometric) {
        if (!(scale_ > 0) || !(ratio_ > 0) || !(ratio_ < 1))
            throw std::invalid_argument("lacunary sequence: need scale > 0, 0 < ratio < 1");
    } else {
        if (values_.empty()) throw std::invalid_argument("lacunary sequence: empty table");
        for (double v : values_)
            if (!(v > 0)) throw std::invalid_argument("lacunary sequence: values must be positive");
        for (size_t i = 0; i + 1 < values_.size(); ++i)
            if (!(values_[i + 1] < values_[i]))
                throw std::invalid_argument("lacunary sequence: table not strictly decreasing");
    }
    if (!(lambda_ > 0) || !(lambda_ < 1))
        throw std::invalid_argument("lacunary sequence: lambda outside (0,1)");
}

double LacunarySequence::theta(long long i) const {
    if (kind_ == Kind::Geometric)
        return scale_ * std::pow(ratio_, static_cast<double>(i));
    long long last = first_ + static_cast<long long>(values_.size()) - 1;
    if (i < first_)
        return values_.front() * std::pow(lambda_, static_cast<double>(i - first_));
    if (i > last)
        return values_.back() * std::pow(lambda_, static_cast<double>(i - last));
    return values_[static_cast<size_t>(i - first_)];
}

namespace {
constexpr int kAdjustLimit = 300;
}

long long LacunarySequence::index_of(double t) const {
    if (!(t > 0)) throw std::invalid_argument("index_of: ratio must be positive");
    long long i;
    if (kind_ == Kind::Geometric) {
        i = static_cast<long long>(std::floor(std::log(t / scale_) / std::log(ratio_)));
    } else {
        long long last = first_ + static_cast<long long>(values_.size()) - 1;
        if (t > values_.front()) {
            i = first_ - 1 -
                static_cast<long long>(std::floor(std::log(t / values_.front()) / std::log(1.0 / lambda_)));
        } else if (t <= values_.back()) {
            i = last +
                static_cast<long long>(std::floor(std::log(t / values_.back()) / std::log(lambda_)));
        } else {
            auto it = std::lower_bound(values_.begin(), values_.end(), t,
                                       [](double v, double x) { return v > x; });
            i = first_ + (it - values_.begin()) - 1;
        }
    }
    // Fix up rounding with the half-open band condition theta_{i+1} < t <= theta_i.
    int guard = 0;
    while (t > theta(i)) {
        --i;
        if (++guard > kAdjustLimit) throw std::runtime_error("index_of: no band found");
    }
    while (t <= theta(i + 1)) {
        ++i;
        if (++guard > kAdjustLimit) throw std::runtime_error("index_of: no band found");
    }
    return i;
}

long long LacunarySequence::index_of_exact(const Rational& t) const {
    if (t.is_zero() || t.negative())
        throw std::invalid_argument("index_of_exact: ratio must be positive");
    long long i = index_of(t.to_double());
    int guard = 0;
    while (compare_rational_double(t, theta(i)) > 0) {
        --i;
        if (++guard > kAdjustLimit) throw std::runtime_error("index_of_exact: no band found");
    }
    while (compare_rational_double(t, theta(i + 1)) <= 0) {
        ++i;
        if (++guard > kAdjustLimit) throw std::runtime_error("index_of_exact: no band found");
    }
    return i;
}

double LacunarySequence::min_ratio() const {
    if (kind_ == Kind::Geometric) return ratio_;
    double mr = lambda_;
    for (size_t i = 0; i + 1 < values_.size(); ++i)
        mr = std::min(mr, values_[i + 1] / values_[i]);
    return mr;
}

namespace {

// Number of geometric means to insert in a gap of ratio rho < 1 so that the
// refined ratio rho^(1/(m+1)) is >= 2/3.
int insert_count(double rho) {
    if (rho >= 2.0 / 3.0) return 0;
    int m = static_cast<int>(std::ceil(std::log(1.0 / rho) / std::log(1.5))) - 1;
    while (std::pow(rho, 1.0 / (m + 1)) < 2.0 / 3.0) ++m;  // guard against ceil rounding
    return m;
}

} // namespace

LacunarySequence LacunarySequence::refined() const {
    if (kind_ == Kind::Geometric) {
        int m = insert_count(ratio_);
        if (m == 0) return *this;
        return geometric(scale_, std::pow(ratio_, 1.0 / (m + 1)));
    }
    std::vector<double> out;
    out.push_back(values_.front());
    for (size_t g = 0; g + 1 < values_.size(); ++g) {
        double a = values_[g], b = values_[g + 1];
        double rho = b / a;
        int m = insert_count(rho);
        double step = std::pow(rho, 1.0 / (m + 1));
        for (int t = 1; t <= m; ++t) out.push_back(a * std::pow(step, t));
        out.push_back(b);
    }
    int mext = insert_count(lambda_);
    double lam = std::pow(lambda_, 1.0 / (mext + 1));
    for (size_t i = 0; i + 1 < out.size(); ++i) lam = std::max(lam, out[i + 1] / out[i]);
    return table(0, std::move(out), lam);
}

LacunarySequence refine_sequence(const LacunarySequence& seq) { return seq.refined(); }

const LacunarySequence& Dissection::sequence_for(const SigmaPair& s) const {
    for (size_t i = 0; i < sigmas.size(); ++i)
        if (sigmas[i] == s) return sequences[i];
    throw std::invalid_argument("dissection: no sequence for sigma");
}

Dissection Dissection::uniform(int n, int d, const LacunarySequence& seq) {
    Dissection out;
    out.basis.assign(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) out.basis[i][i] = 1.0;
    out.sigmas = all_sigma_pairs(d);
    out.sequences.assign(out.sigmas.size(), seq);
    return out;
}

namespace {

// (axis, sign) per basis row when all rows are signed standard unit vectors.
bool signed_unit_rows(const std::vector<std::vector<double>>& basis,
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

SegmentIndex segment_index(const Direction& omega, const SigmaPair& sigma,
                           const LacunarySequence& seq,
                           const std::vector<std::vector<double>>& basis) {
    std::vector<std::pair<int, int>> axes;
    if (omega.is_rational() && signed_unit_rows(basis, axes)) {
        const Rational& cj = omega.rx[axes[sigma.j].first];
        const Rational& ck = omega.rx[axes[sigma.k].first];
        if (cj.is_zero() || ck.is_zero()) return SegmentIndex::inf();
        return SegmentIndex::at(seq.index_of_exact((ck / cj).abs()));
    }
    double cj = dot(omega, basis[sigma.j]);
    double ck = dot(omega, basis[sigma.k]);
    if (cj == 0.0 || ck == 0.0) return SegmentIndex::inf();
    return SegmentIndex::at(seq.index_of(std::fabs(ck) / std::fabs(cj)));
}

std::map<SegmentIndex, Segment> partition(const DirectionSet& omega,
                                          const SigmaPair& sigma,
                                          const LacunarySequence& seq,
                                          const std::vector<std::vector<double>>& basis) {
    std::map<SegmentIndex, Segment> parts;
    size_t assigned = 0;
    for (const auto& d : omega.dirs) {
        SegmentIndex idx = segment_index(d, sigma, seq, basis);
        auto& seg = parts[idx];
        if (seg.members.empty()) {
            seg.sigma = sigma;
            seg.index = idx;
            seg.members.n = omega.n;
            seg.members.rational_mode = omega.rational_mode;
        }
        seg.members.dirs.push_back(d);
        ++assigned;
    }
    if (assigned != omega.size())
        throw std::logic_error("partition: cover violated");  // unreachable
    return parts;
}

std::map<CellIndex, DirectionSet> cells(const DirectionSet& omega, const Dissection& d) {
    std::map<CellIndex, DirectionSet> out;
    for (const auto& dir : omega.dirs) {
        CellIndex idx;
        idx.reserve(d.sigmas.size());
        for (size_t s = 0; s < d.sigmas.size(); ++s)
            idx.push_back(segment_index(dir, d.sigmas[s], d.sequences[s], d.basis));
        auto& cell = out[idx];
        cell.n = omega.n;
        cell.rational_mode = omega.rational_mode;
        cell.dirs.push_back(dir);
    }
    return out;
}

} // namespace lacuna
