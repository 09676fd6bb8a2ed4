#pragma once

#include <string>
#include <vector>

namespace dicke {

// Dense real square matrix tagged with the basis it acts on. Symmetric
// matrices are built symmetric entry-by-entry (both (i,j) and (j,i) assigned
// from the same value), so the flag certifies exact equality, not a
// tolerance check.
struct OperatorMatrix {
    int dim = 0;
    std::vector<double> entries;  // row-major, dim*dim
    std::string basis_tag;
    bool symmetric = false;

    OperatorMatrix() = default;
    OperatorMatrix(int dimension, std::string tag, bool sym)
        : dim(dimension), entries(static_cast<std::size_t>(dimension) * dimension, 0.0),
          basis_tag(std::move(tag)), symmetric(sym) {}

    double& operator()(int i, int j) { return entries[static_cast<std::size_t>(i) * dim + j]; }
    double operator()(int i, int j) const { return entries[static_cast<std::size_t>(i) * dim + j]; }

    static OperatorMatrix identity(int dimension, std::string tag);
};

OperatorMatrix transpose(const OperatorMatrix& m);
OperatorMatrix multiply(const OperatorMatrix& a, const OperatorMatrix& b);

// alpha*a + beta*b; the operands must share a basis tag.
OperatorMatrix linear_combination(double alpha, const OperatorMatrix& a,
                                  double beta, const OperatorMatrix& b);

// y = m * x
std::vector<double> apply(const OperatorMatrix& m, const std::vector<double>& x);

double max_abs_difference(const OperatorMatrix& a, const OperatorMatrix& b);

}  // namespace dicke
