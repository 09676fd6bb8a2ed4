#include "dicke/matrix.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace dicke {

OperatorMatrix OperatorMatrix::identity(int dimension, std::string tag) {
    OperatorMatrix m(dimension, std::move(tag), true);
    for (int i = 0; i < dimension; ++i) m(i, i) = 1.0;
    return m;
}

OperatorMatrix transpose(const OperatorMatrix& m) {
    OperatorMatrix out(m.dim, m.basis_tag, m.symmetric);
    for (int i = 0; i < m.dim; ++i)
        for (int j = 0; j < m.dim; ++j) out(j, i) = m(i, j);
    return out;
}

OperatorMatrix multiply(const OperatorMatrix& a, const OperatorMatrix& b) {
    if (a.dim != b.dim) throw std::invalid_argument("multiply: dimension mismatch");
    // A product of symmetric matrices is generally not symmetric, so the
    // flag is dropped; callers re-tag when they know better.
    OperatorMatrix out(a.dim, a.basis_tag, false);
    const int n = a.dim;
    for (int i = 0; i < n; ++i) {
        const double* arow = &a.entries[static_cast<std::size_t>(i) * n];
        double* orow = &out.entries[static_cast<std::size_t>(i) * n];
        for (int k = 0; k < n; ++k) {
            const double aik = arow[k];
            if (aik == 0.0) continue;
            const double* brow = &b.entries[static_cast<std::size_t>(k) * n];
            for (int j = 0; j < n; ++j) orow[j] += aik * brow[j];
        }
    }
    return out;
}

OperatorMatrix linear_combination(double alpha, const OperatorMatrix& a, double beta,
                                  const OperatorMatrix& b) {
    if (a.dim != b.dim) throw std::invalid_argument("linear_combination: dimension mismatch");
    if (a.basis_tag != b.basis_tag)
        throw std::invalid_argument("linear_combination: basis tags differ ('" + a.basis_tag +
                                    "' vs '" + b.basis_tag + "')");
    OperatorMatrix out(a.dim, a.basis_tag, a.symmetric && b.symmetric);
    for (std::size_t i = 0; i < out.entries.size(); ++i)
        out.entries[i] = alpha * a.entries[i] + beta * b.entries[i];
    return out;
}

std::vector<double> apply(const OperatorMatrix& m, const std::vector<double>& x) {
    if (static_cast<int>(x.size()) != m.dim) throw std::invalid_argument("apply: dimension mismatch");
    std::vector<double> y(x.size(), 0.0);
    const int n = m.dim;
    for (int i = 0; i < n; ++i) {
        const double* row = &m.entries[static_cast<std::size_t>(i) * n];
        double s = 0.0;
        for (int j = 0; j < n; ++j) s += row[j] * x[j];
        y[i] = s;
    }
    return y;
}

double max_abs_difference(const OperatorMatrix& a, const OperatorMatrix& b) {
    if (a.dim != b.dim) throw std::invalid_argument("max_abs_difference: dimension mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.entries.size(); ++i)
        m = std::max(m, std::fabs(a.entries[i] - b.entries[i]));
    return m;
}

}  // namespace dicke
