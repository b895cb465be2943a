// spectra.hpp — eigenvalue spectra: canonical form, majorization, purity,
// subspectrum selection and the 2xn / 3xn index compressions.

#pragma once

#include "abssep/errors.hpp"

#include <cstddef>
#include <vector>

namespace abssep {

using Vec = std::vector<double>;

struct Tolerance {
    double eq_eps = 1e-9;    // equality / margin threshold
    double rank_eps = 1e-9;  // relative singular value threshold
    double norm_eps = 1e-12; // normalization threshold

    void validate() const;
};

struct SystemDims {
    int m = 2;
    int n = 2;

    SystemDims() = default;
    SystemDims(int m_, int n_);
    int total() const { return m * n; }
    bool operator==(const SystemDims&) const = default;
};

/// Non-increasing, clamped-nonnegative eigenvalue vector of an m x n state.
/// `normalized` is true iff the entries sum to 1 within norm_eps.
struct Spectrum {
    Vec values;
    SystemDims dims;
    bool normalized = false;

    std::size_t size() const { return values.size(); }
    double operator[](std::size_t i) const { return values[i]; }
    double sum() const;
    double purity() const; // sum of squares

    /// Comparison scale: 1 for normalized spectra, lambda_1 otherwise.
    double scale() const;

    /// Number of distinct values under eq_eps grouping (relative to lambda_1).
    int distinct_count(double eq_eps = 1e-9) const;

    /// Group index per entry (0-based, increasing); equal-within-tolerance
    /// entries share a group.
    std::vector<int> equality_groups(double eq_eps = 1e-9) const;
};

Spectrum make_spectrum(Vec raw, SystemDims dims, const Tolerance& tol = {});

/// True iff x majorizes y: partial sums of x dominate those of y and the
/// totals agree. Inputs are re-sorted internally.
bool majorizes(const Vec& x, const Vec& y, const Tolerance& tol = {});
bool majorizes(const Spectrum& x, const Spectrum& y, const Tolerance& tol = {});

struct BallResult {
    bool inside = false;
    double margin = 0.0; // 1/(mn-1) - purity
};

/// Maximal-ball test: purity <= 1/(mn-1) guarantees absolute separability.
BallResult purity_in_maximal_ball(const Spectrum& s, const Tolerance& tol = {});

/// Principal subspectrum: picks `indices` (0-based) and re-sorts descending.
/// Result carries sub_dims and normalized = false.
Spectrum subspectrum(const Spectrum& s, const std::vector<int>& indices,
                     SystemDims sub_dims);

/// (lambda_1, lambda_{2n-2}, lambda_{2n-1}, lambda_{2n}) for dims (2,n).
Vec compress_2n(const Spectrum& s);

/// (lambda_1, lambda_2, lambda_3, lambda_{3n-5}, ..., lambda_{3n}) for (3,n).
Vec compress_3n(const Spectrum& s);

// small helpers shared across modules
Vec sorted_desc(Vec v);
Vec sorted_asc(Vec v);

} // namespace abssep
