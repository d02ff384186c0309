#pragma once

#include <cmath>
#include <vector>

#include "jacobi.hpp"

namespace eccs {

using Partition = std::vector<std::vector<int>>;

struct QuotientResult {
    std::vector<std::vector<double>> q;  // block row sums, one row per block
    std::vector<int> sizes;
    bool equitable = false;
};

// Quotient of a symmetric matrix under a vertex partition. q[a][b] is the
// row sum of block (a,b) for a representative row; the partition is
// equitable when every row of a block yields the same block row sums
// (compared exactly, which is meaningful for integer matrices).
inline QuotientResult quotient(const SymMatrix& m, const Partition& parts) {
    const int n = m.size();
    const int k = static_cast<int>(parts.size());
    if (k == 0) throw DimensionMismatch("empty partition");
    std::vector<int> owner(n, -1);
    for (int b = 0; b < k; ++b) {
        if (parts[b].empty()) throw DimensionMismatch("empty partition block");
        for (int v : parts[b]) {
            if (v < 0 || v >= n) throw DimensionMismatch("partition index out of range");
            if (owner[v] != -1) throw DimensionMismatch("partition blocks overlap");
            owner[v] = b;
        }
    }
    for (int v = 0; v < n; ++v)
        if (owner[v] == -1) throw DimensionMismatch("partition does not cover all indices");

    QuotientResult res;
    res.sizes.reserve(k);
    for (const auto& blk : parts) res.sizes.push_back(static_cast<int>(blk.size()));
    res.equitable = true;
    res.q.assign(k, std::vector<double>(k, 0.0));
    for (int a = 0; a < k; ++a) {
        bool first = true;
        std::vector<double> sums(k);
        for (int row : parts[a]) {
            std::fill(sums.begin(), sums.end(), 0.0);
            for (int j = 0; j < n; ++j) sums[owner[j]] += m.at(row, j);
            if (first) {
                res.q[a] = sums;
                first = false;
            } else if (sums != res.q[a]) {
                res.equitable = false;
            }
        }
    }
    return res;
}

// Eigenvalues of a quotient matrix that arises from a symmetric matrix under
// an equitable partition: D^{1/2} Q D^{-1/2} is symmetric (D = block sizes),
// so the spectrum is real and can go through the symmetric eigensolver.
inline Spectrum quotient_eigenvalues(const std::vector<std::vector<double>>& q,
                                     const std::vector<int>& sizes) {
    const int k = static_cast<int>(q.size());
    if (static_cast<int>(sizes.size()) != k) throw DimensionMismatch("sizes/matrix mismatch");
    SymMatrix s(k);
    double scale = 0;
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) scale = std::max(scale, std::fabs(q[a][b]));
    for (int a = 0; a < k; ++a) {
        for (int b = a; b < k; ++b) {
            const double f = std::sqrt(static_cast<double>(sizes[a]) / sizes[b]);
            const double ab = q[a][b] * f;
            const double ba = q[b][a] / f;
            if (std::fabs(ab - ba) > 1e-9 * std::max(1.0, scale))
                throw NotEquitable("quotient matrix is not symmetrizable by block sizes");
            s.set(a, b, 0.5 * (ab + ba));
        }
    }
    return eig_sym(s);
}

// One-call form: quotient then eigenvalues; demands equitability.
inline Spectrum quotient_spectrum(const SymMatrix& m, const Partition& parts) {
    auto res = quotient(m, parts);
    if (!res.equitable) throw NotEquitable("partition is not equitable for this matrix");
    return quotient_eigenvalues(res.q, res.sizes);
}

}  // namespace eccs
