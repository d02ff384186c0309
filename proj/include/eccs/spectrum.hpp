#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "errors.hpp"

namespace eccs {

inline constexpr double kGroupTol = 1e-6;  // eigenvalue grouping width

struct EigGroup {
    double value;  // mean of the grouped eigenvalues
    int multiplicity;
};

struct Inertia {
    int positive = 0;
    int negative = 0;
    int zero = 0;
    bool operator==(const Inertia& o) const {
        return positive == o.positive && negative == o.negative && zero == o.zero;
    }
};

// Real spectrum: eigenvalues descending plus multiplicity groups.
class Spectrum {
public:
    Spectrum() = default;

    explicit Spectrum(std::vector<double> vals, double trace_residual = 0.0)
        : vals_(std::move(vals)), trace_residual_(trace_residual) {
        std::sort(vals_.begin(), vals_.end(), std::greater<double>());
        for (double v : vals_) {
            if (!groups_.empty() && std::fabs(groups_.back().value - v) <= kGroupTol) {
                auto& gr = groups_.back();
                gr.value = (gr.value * gr.multiplicity + v) / (gr.multiplicity + 1);
                ++gr.multiplicity;
            } else {
                groups_.push_back({v, 1});
            }
        }
    }

    const std::vector<double>& values() const { return vals_; }  // descending
    const std::vector<EigGroup>& groups() const { return groups_; }
    int size() const { return static_cast<int>(vals_.size()); }
    double trace_residual() const { return trace_residual_; }

    double max_abs() const {
        double m = 0;
        for (double v : vals_) m = std::max(m, std::fabs(v));
        return m;
    }

private:
    std::vector<double> vals_;
    std::vector<EigGroup> groups_;
    double trace_residual_ = 0.0;
};

inline double energy(const Spectrum& s) {
    double e = 0;
    for (double v : s.values()) e += std::fabs(v);
    return e;
}

inline double spectral_radius(const Spectrum& s) { return s.max_abs(); }

inline double default_zero_tol(const Spectrum& s) {
    return 1e-6 * std::max(1.0, s.max_abs());
}

inline Inertia inertia(const Spectrum& s, double zero_tol = -1.0) {
    if (zero_tol < 0) zero_tol = default_zero_tol(s);
    Inertia in;
    for (double v : s.values()) {
        if (v > zero_tol)
            ++in.positive;
        else if (v < -zero_tol)
            ++in.negative;
        else
            ++in.zero;
    }
    return in;
}

// Multiset comparison via sorted elementwise distance; sizes must agree.
inline bool spectra_equal(const Spectrum& a, const Spectrum& b, double tol) {
    if (a.size() != b.size()) return false;
    for (int i = 0; i < a.size(); ++i)
        if (std::fabs(a.values()[i] - b.values()[i]) > tol) return false;
    return true;
}

inline double spectra_distance(const Spectrum& a, const Spectrum& b) {
    if (a.size() != b.size()) throw DimensionMismatch("spectra of different sizes");
    double d = 0;
    for (int i = 0; i < a.size(); ++i)
        d = std::max(d, std::fabs(a.values()[i] - b.values()[i]));
    return d;
}

}  // namespace eccs
