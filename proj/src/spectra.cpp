#include "abssep/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace abssep {

void Tolerance::validate() const {
    if (eq_eps <= 0 || rank_eps <= 0 || norm_eps <= 0)
        throw Error("Tolerance: thresholds must be strictly positive");
}

SystemDims::SystemDims(int m_, int n_) : m(m_), n(n_) {
    if (m < 2 || n < 2)
        throw DimensionMismatch("SystemDims: need m >= 2 and n >= 2, got " +
                                std::to_string(m) + "x" + std::to_string(n));
}

double Spectrum::sum() const {
    return std::accumulate(values.begin(), values.end(), 0.0);
}

double Spectrum::purity() const {
    double p = 0.0;
    for (double v : values) p += v * v;
    return p;
}

double Spectrum::scale() const {
    if (normalized) return 1.0;
    return values.empty() ? 1.0 : std::max(values.front(), 1e-300);
}

std::vector<int> Spectrum::equality_groups(double eq_eps) const {
    std::vector<int> g(values.size(), 0);
    const double gap = eq_eps * scale();
    int gi = 0;
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i - 1] - values[i] > gap) ++gi;
        g[i] = gi;
    }
    return g;
}

int Spectrum::distinct_count(double eq_eps) const {
    if (values.empty()) return 0;
    return equality_groups(eq_eps).back() + 1;
}

Vec sorted_desc(Vec v) {
    std::sort(v.begin(), v.end(), std::greater<double>());
    return v;
}

Vec sorted_asc(Vec v) {
    std::sort(v.begin(), v.end());
    return v;
}

Spectrum make_spectrum(Vec raw, SystemDims dims, const Tolerance& tol) {
    tol.validate();
    if (static_cast<int>(raw.size()) != dims.total())
        throw DimensionMismatch("make_spectrum: expected " +
                                std::to_string(dims.total()) + " values, got " +
                                std::to_string(raw.size()));
    double top = raw.empty() ? 0.0 : *std::max_element(raw.begin(), raw.end());
    const double floor = -tol.eq_eps * std::max(1.0, top);
    for (double v : raw)
        if (v < floor)
            throw NegativeEigenvalue("make_spectrum: entry " + std::to_string(v) +
                                     " below tolerance");
    std::stable_sort(raw.begin(), raw.end(), std::greater<double>());
    for (double& v : raw) v = std::max(v, 0.0);
    Spectrum s;
    s.values = std::move(raw);
    s.dims = dims;
    s.normalized = std::abs(s.sum() - 1.0) <= tol.norm_eps;
    return s;
}

bool majorizes(const Vec& x, const Vec& y, const Tolerance& tol) {
    if (x.size() != y.size())
        throw DimensionMismatch("majorizes: length mismatch");
    Vec xs = sorted_desc(x);
    Vec ys = sorted_desc(y);
    double sx = std::accumulate(xs.begin(), xs.end(), 0.0);
    double sy = std::accumulate(ys.begin(), ys.end(), 0.0);
    const double ref = std::max({1.0, std::abs(sx), std::abs(sy)});
    if (std::abs(sx - sy) > tol.norm_eps * ref)
        throw SumMismatch("majorizes: totals differ beyond tolerance");
    double px = 0.0, py = 0.0;
    const double slack = tol.eq_eps * ref;
    for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
        px += xs[k];
        py += ys[k];
        if (px < py - slack) return false;
    }
    return true;
}

bool majorizes(const Spectrum& x, const Spectrum& y, const Tolerance& tol) {
    return majorizes(x.values, y.values, tol);
}

BallResult purity_in_maximal_ball(const Spectrum& s, const Tolerance& tol) {
    if (!s.normalized)
        throw NotNormalized("purity_in_maximal_ball: spectrum must be normalized");
    const double bound = 1.0 / (s.dims.total() - 1);
    BallResult r;
    r.margin = bound - s.purity();
    r.inside = r.margin >= -tol.eq_eps;
    return r;
}

Spectrum subspectrum(const Spectrum& s, const std::vector<int>& indices,
                     SystemDims sub_dims) {
    if (static_cast<int>(indices.size()) != sub_dims.total())
        throw DimensionMismatch("subspectrum: index count does not match sub dims");
    Vec sel;
    sel.reserve(indices.size());
    for (int i : indices) {
        if (i < 0 || i >= static_cast<int>(s.size()))
            throw IndexOutOfRange("subspectrum: index " + std::to_string(i));
        sel.push_back(s.values[i]);
    }
    Spectrum out;
    out.values = sorted_desc(std::move(sel));
    out.dims = sub_dims;
    out.normalized = false;
    return out;
}

Vec compress_2n(const Spectrum& s) {
    if (s.dims.m != 2)
        throw WrongDims("compress_2n: dims.m must be 2");
    const int n2 = s.dims.total();
    return {s.values[0], s.values[n2 - 3], s.values[n2 - 2], s.values[n2 - 1]};
}

Vec compress_3n(const Spectrum& s) {
    if (s.dims.m != 3 || s.dims.n < 3)
        throw WrongDims("compress_3n: dims must be 3xn with n >= 3");
    const int n3 = s.dims.total();
    Vec out = {s.values[0], s.values[1], s.values[2]};
    for (int i = n3 - 6; i < n3; ++i) out.push_back(s.values[i]);
    return out;
}

} // namespace abssep
