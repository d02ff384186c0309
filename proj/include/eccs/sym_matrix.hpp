#pragma once

#include <cmath>
#include <vector>

#include "graph.hpp"

namespace eccs {

// Dense symmetric matrix, full row-major storage. set() writes both mirror
// entries, so symmetry is bitwise by construction.
class SymMatrix {
public:
    explicit SymMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, 0.0) {
        if (n < 1) throw DimensionMismatch("matrix needs order >= 1");
    }

    static SymMatrix from_rows(const std::vector<std::vector<double>>& rows) {
        const int n = static_cast<int>(rows.size());
        SymMatrix m(n);
        for (int i = 0; i < n; ++i) {
            if (static_cast<int>(rows[i].size()) != n)
                throw DimensionMismatch("ragged rows");
            for (int j = 0; j <= i; ++j) {
                if (rows[i][j] != rows[j][i])
                    throw DimensionMismatch("input rows not symmetric");
                if (!std::isfinite(rows[i][j]))
                    throw DimensionMismatch("non-finite entry");
                m.set(i, j, rows[i][j]);
            }
        }
        return m;
    }

    int size() const { return n_; }
    double at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
    void set(int i, int j, double v) {
        a_[static_cast<size_t>(i) * n_ + j] = v;
        a_[static_cast<size_t>(j) * n_ + i] = v;
    }

    double trace() const {
        double t = 0;
        for (int i = 0; i < n_; ++i) t += at(i, i);
        return t;
    }

    double frobenius() const {
        double s = 0;
        for (double v : a_) s += v * v;
        return std::sqrt(s);
    }

    double max_abs() const {
        double m = 0;
        for (double v : a_) m = std::max(m, std::fabs(v));
        return m;
    }

    // Internal mutable access for the eigensolver.
    std::vector<double>& data() { return a_; }
    const std::vector<double>& data() const { return a_; }

private:
    int n_;
    std::vector<double> a_;
};

inline SymMatrix adjacency_matrix(const Graph& g) {
    SymMatrix m(g.order());
    for (const auto& [u, v] : g.edges()) m.set(u, v, 1.0);
    return m;
}

}  // namespace eccs
