#include "dicke/eigensolve.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numeric>

namespace dicke {
namespace {

constexpr int kMaxQlIterations = 50;

// Householder reduction of a symmetric matrix to tridiagonal form.
// Processes rows from the bottom up; after step i the reflector vector v_i
// lives in row i of `work` (positions 0..i-1) with its scale in betas[i], so
// eigenvectors of the tridiagonal matrix can be transformed back cheaply.
struct Reduction {
    int n = 0;
    std::vector<double> work;   // reflectors (row i holds v_i)
    std::vector<double> betas;  // betas[i] pairs with row i; 0 marks a skipped step
    std::vector<double> d;      // diagonal of T
    std::vector<double> e;      // e[i] couples i-1 and i; e[0] = 0
};

Reduction householder_tridiagonalize(const OperatorMatrix& h) {
    const int n = h.dim;
    Reduction r;
    r.n = n;
    r.work = h.entries;  // copy; reduced in place
    r.betas.assign(n, 0.0);
    r.d.assign(n, 0.0);
    r.e.assign(n, 0.0);
    auto at = [&](int i, int j) -> double& { return r.work[static_cast<std::size_t>(i) * n + j]; };

    std::vector<double> v(n), p(n), q(n);
    for (int i = n - 1; i >= 1; --i) {
        const int l = i - 1;  // subdiagonal position to keep
        if (i == 1) {
            r.e[1] = at(1, 0);
            continue;
        }
        double norm_sq = 0.0;
        for (int k = 0; k <= l; ++k) {
            v[k] = at(i, k);
            norm_sq += v[k] * v[k];
        }
        const double norm = std::sqrt(norm_sq);
        if (norm == 0.0) {
            r.e[i] = 0.0;
            continue;
        }
        // Reflect x onto alpha*e_l with the sign chosen against x[l] to
        // avoid cancellation in v[l] = x[l] - alpha.
        const double alpha = (v[l] >= 0.0) ? -norm : norm;
        const double beta = 1.0 / (norm_sq - alpha * v[l]);
        r.e[i] = alpha;
        v[l] -= alpha;

        // Symmetric rank-2 update of the leading i x i block:
        // A <- A - q v^T - v q^T with p = beta*A*v, q = p - (beta v.p/2) v.
        for (int j = 0; j < i; ++j) {
            const double* row = &r.work[static_cast<std::size_t>(j) * n];
            double s = 0.0;
            for (int k = 0; k < i; ++k) s += row[k] * v[k];
            p[j] = beta * s;
        }
        double vp = 0.0;
        for (int j = 0; j < i; ++j) vp += v[j] * p[j];
        const double kappa = 0.5 * beta * vp;
        for (int j = 0; j < i; ++j) q[j] = p[j] - kappa * v[j];
        for (int j = 0; j < i; ++j) {
            double* row = &r.work[static_cast<std::size_t>(j) * n];
            const double qj = q[j];
            const double vj = v[j];
            for (int k = 0; k < i; ++k) row[k] -= qj * v[k] + vj * q[k];
        }

        // Stash the reflector where the eliminated entries used to be.
        for (int k = 0; k <= l; ++k) at(i, k) = v[k];
        r.betas[i] = beta;
    }
    for (int j = 0; j < n; ++j) r.d[j] = at(j, j);
    return r;
}

// Apply the accumulated reflectors to z (a vector in tridiagonal
// coordinates), producing the corresponding vector of the original matrix.
void back_transform(const Reduction& r, std::vector<double>& z) {
    const int n = r.n;
    for (int i = 2; i <= n - 1; ++i) {
        if (r.betas[i] == 0.0) continue;
        const double* v = &r.work[static_cast<std::size_t>(i) * n];
        double s = 0.0;
        for (int k = 0; k < i; ++k) s += v[k] * z[k];
        s *= r.betas[i];
        for (int k = 0; k < i; ++k) z[k] -= s * v[k];
    }
}

// Implicit-shift QL iteration. d/e use the coupling convention e[i] pairs
// (i, i+1) here; zcols, when present, is a row-major (n x n) matrix whose
// columns are co-rotated. Throws after kMaxQlIterations sweeps on one
// eigenvalue rather than returning unverified values.
void ql_implicit(std::vector<double>& d, std::vector<double>& e, std::vector<double>* zcols,
                 int n) {
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        while (true) {
            int m = l;
            for (; m < n - 1; ++m) {
                const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= DBL_EPSILON * dd) break;
            }
            if (m == l) break;
            if (++iter > kMaxQlIterations)
                throw NonConvergenceError("QL iteration exceeded " +
                                          std::to_string(kMaxQlIterations) +
                                          " sweeps on one eigenvalue");
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double rr = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(rr, g));
            double s = 1.0, c = 1.0, p = 0.0;
            bool underflow = false;
            for (int i = m - 1; i >= l; --i) {
                double f = s * e[i];
                const double b = c * e[i];
                rr = std::hypot(f, g);
                e[i + 1] = rr;
                if (rr == 0.0) {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / rr;
                c = g / rr;
                g = d[i + 1] - p;
                rr = (d[i] - g) * s + 2.0 * c * b;
                p = s * rr;
                d[i + 1] = g + p;
                g = c * rr - b;
                if (zcols) {
                    double* z = zcols->data();
                    for (int k = 0; k < n; ++k) {
                        const std::size_t row = static_cast<std::size_t>(k) * n;
                        f = z[row + i + 1];
                        z[row + i + 1] = s * z[row + i] + c * f;
                        z[row + i] = c * z[row + i] - s * f;
                    }
                }
            }
            if (underflow) continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
}

// Eigenvalues (and optional co-rotated columns) of the tridiagonal matrix in
// the e[i]-couples-(i-1,i) layout used elsewhere in this file.
std::vector<double> tridiagonal_values(std::vector<double> d, std::vector<double> e,
                                       std::vector<double>* zcols) {
    const int n = static_cast<int>(d.size());
    if (n == 0) return {};
    // shift to the e[i]-couples-(i,i+1) layout QL wants
    for (int i = 0; i + 1 < n; ++i) e[i] = e[i + 1];
    e[n - 1] = 0.0;
    ql_implicit(d, e, zcols, n);
    return d;
}

double tridiagonal_scale(const std::vector<double>& d, const std::vector<double>& e) {
    double s = 0.0;
    for (double x : d) s = std::max(s, std::fabs(x));
    for (double x : e) s = std::max(s, std::fabs(x));
    return s;
}

// One inverse-iteration solve (T - mu I) x = b by Gaussian elimination with
// partial pivoting on the tridiagonal; near-zero pivots are floored to keep
// the solve finite (the standard inverse-iteration device).
void shifted_tridiagonal_solve(const std::vector<double>& d, const std::vector<double>& e,
                               double mu, double pivot_floor, std::vector<double>& x) {
    const int n = static_cast<int>(d.size());
    std::vector<double> diag(n), sup1(n, 0.0), sup2(n, 0.0), sub(n, 0.0);
    for (int i = 0; i < n; ++i) diag[i] = d[i] - mu;
    for (int i = 1; i < n; ++i) {
        sup1[i - 1] = e[i];
        sub[i] = e[i];
    }
    // forward elimination with row swaps between adjacent rows
    for (int i = 0; i < n - 1; ++i) {
        if (std::fabs(sub[i + 1]) > std::fabs(diag[i])) {
            std::swap(diag[i], sub[i + 1]);
            std::swap(sup1[i], diag[i + 1]);
            if (i + 2 < n) std::swap(sup2[i], sup1[i + 1]);
            std::swap(x[i], x[i + 1]);
        }
        if (std::fabs(diag[i]) < pivot_floor) diag[i] = std::copysign(pivot_floor, diag[i]);
        const double m = sub[i + 1] / diag[i];
        diag[i + 1] -= m * sup1[i];
        if (i + 2 < n) sup1[i + 1] -= m * sup2[i];
        x[i + 1] -= m * x[i];
    }
    if (std::fabs(diag[n - 1]) < pivot_floor)
        diag[n - 1] = std::copysign(pivot_floor, diag[n - 1]);
    // back substitution
    x[n - 1] /= diag[n - 1];
    if (n >= 2) x[n - 2] = (x[n - 2] - sup1[n - 2] * x[n - 1]) / diag[n - 2];
    for (int i = n - 3; i >= 0; --i)
        x[i] = (x[i] - sup1[i] * x[i + 1] - sup2[i] * x[i + 2]) / diag[i];
}

void normalize(std::vector<double>& x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    s = std::sqrt(s);
    if (s > 0.0)
        for (double& v : x) v /= s;
}

// Deterministic pseudo-random start vector (no RNG dependency; identical on
// every run).
std::vector<double> start_vector(int n) {
    std::vector<double> x(n);
    std::uint32_t state = 0x9e3779b9u;
    for (int i = 0; i < n; ++i) {
        state = state * 1103515245u + 12345u;
        x[i] = (static_cast<double>(state) / 4294967296.0) - 0.5;
    }
    normalize(x);
    return x;
}

void orthogonalize_against(std::vector<double>& x,
                           const std::vector<std::vector<double>>& previous) {
    for (const auto& u : previous) {
        double s = 0.0;
        for (std::size_t k = 0; k < x.size(); ++k) s += u[k] * x[k];
        for (std::size_t k = 0; k < x.size(); ++k) x[k] -= s * u[k];
    }
}

// Eigenvector of T for the (already computed) eigenvalue mu, orthogonalized
// against previously found vectors so that clustered eigenvalues come out as
// an orthonormal basis of their joint eigenspace.
std::vector<double> inverse_iteration(const std::vector<double>& d, const std::vector<double>& e,
                                      double mu, double shift_nudge,
                                      const std::vector<std::vector<double>>& previous) {
    const int n = static_cast<int>(d.size());
    const double scale = std::max(tridiagonal_scale(d, e), 1.0);
    const double pivot_floor = DBL_EPSILON * scale;
    std::vector<double> x = start_vector(n);
    orthogonalize_against(x, previous);
    normalize(x);
    for (int sweep = 0; sweep < 6; ++sweep) {
        shifted_tridiagonal_solve(d, e, mu + shift_nudge, pivot_floor, x);
        orthogonalize_against(x, previous);
        normalize(x);
    }
    return x;
}

void fix_sign(std::vector<double>& v) {
    std::size_t imax = 0;
    double best = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (std::fabs(v[i]) > best) {
            best = std::fabs(v[i]);
            imax = i;
        }
    if (v[imax] < 0.0)
        for (double& x : v) x = -x;
}

double residual_norm(const OperatorMatrix& h, const std::vector<double>& v, double ev) {
    const int n = h.dim;
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
        const double* row = &h.entries[static_cast<std::size_t>(i) * n];
        double hv = 0.0;
        for (int j = 0; j < n; ++j) hv += row[j] * v[j];
        const double r = hv - ev * v[i];
        s += r * r;
    }
    return std::sqrt(s);
}

void require_symmetric(const OperatorMatrix& h) {
    if (h.dim < 1) throw std::invalid_argument("eigh: empty matrix");
    if (!h.symmetric)
        throw std::invalid_argument("eigh: input is not flagged symmetric; refusing to guess");
}

}  // namespace

std::vector<double> symmetric_eigenvalues(const OperatorMatrix& h) {
    require_symmetric(h);
    Reduction r = householder_tridiagonalize(h);
    std::vector<double> w = tridiagonal_values(std::move(r.d), std::move(r.e), nullptr);
    std::sort(w.begin(), w.end());
    return w;
}

EigenDecomposition eigh(const OperatorMatrix& h) {
    require_symmetric(h);
    const int n = h.dim;
    Reduction r = householder_tridiagonalize(h);

    // Accumulate the full Householder transform by back-transforming the
    // identity, then co-rotate its columns through the QL sweeps.
    std::vector<double> zcols(static_cast<std::size_t>(n) * n, 0.0);
    {
        std::vector<double> col(n);
        for (int j = 0; j < n; ++j) {
            std::fill(col.begin(), col.end(), 0.0);
            col[j] = 1.0;
            back_transform(r, col);
            for (int i = 0; i < n; ++i) zcols[static_cast<std::size_t>(i) * n + j] = col[i];
        }
    }
    std::vector<double> w = tridiagonal_values(r.d, r.e, &zcols);

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return w[a] < w[b]; });

    EigenDecomposition out;
    out.eigenvalues.resize(n);
    out.eigenvectors.assign(n, std::vector<double>(n));
    for (int j = 0; j < n; ++j) {
        out.eigenvalues[j] = w[order[j]];
        for (int i = 0; i < n; ++i)
            out.eigenvectors[j][i] = zcols[static_cast<std::size_t>(i) * n + order[j]];
        normalize(out.eigenvectors[j]);
        fix_sign(out.eigenvectors[j]);
    }
    double rb = 0.0;
    for (int j = 0; j < n; ++j)
        rb = std::max(rb, residual_norm(h, out.eigenvectors[j], out.eigenvalues[j]));
    out.residual_bound = rb;
    return out;
}

EigenDecomposition eigh(const OperatorMatrix& h, int k_lowest) {
    require_symmetric(h);
    const int n = h.dim;
    if (k_lowest < 1 || k_lowest > n)
        throw std::invalid_argument("eigh: k_lowest must be in [1, dim]");
    if (k_lowest == n) return eigh(h);

    Reduction r = householder_tridiagonalize(h);
    std::vector<double> w = tridiagonal_values(r.d, r.e, nullptr);
    std::sort(w.begin(), w.end());

    const double scale = std::max(tridiagonal_scale(r.d, r.e), 1.0);
    double max_abs_ev = std::max(std::fabs(w.front()), std::fabs(w.back()));
    const double allowed = 1e-8 * (1.0 + max_abs_ev);

    EigenDecomposition out;
    out.eigenvalues = w;  // the whole spectrum is known; vectors only for k_lowest
    out.eigenvectors.reserve(k_lowest);

    std::vector<std::vector<double>> tri_vectors;
    int cluster_rank = 0;
    for (int j = 0; j < k_lowest; ++j) {
        // Members of a near-degenerate cluster get a nudged shift so their
        // solves differ; the orthogonalization inside the iteration then
        // selects an orthonormal basis of the joint eigenspace.
        if (j > 0 && out.eigenvalues[j] - out.eigenvalues[j - 1] <= 1e3 * DBL_EPSILON * scale)
            ++cluster_rank;
        else
            cluster_rank = 0;
        const double nudge = cluster_rank * 10.0 * DBL_EPSILON * scale;

        std::vector<double> best;
        double best_res = HUGE_VAL;
        for (int attempt = 0; attempt < 3; ++attempt) {
            const double shift_nudge = nudge + attempt * 16.0 * DBL_EPSILON * scale;
            std::vector<double> x =
                inverse_iteration(r.d, r.e, out.eigenvalues[j], shift_nudge, tri_vectors);
            std::vector<double> full = x;
            back_transform(r, full);
            normalize(full);
            const double res = residual_norm(h, full, out.eigenvalues[j]);
            if (res < best_res) {
                best_res = res;
                tri_vectors.resize(static_cast<std::size_t>(j));
                tri_vectors.push_back(std::move(x));
                best = std::move(full);
            }
            if (best_res <= allowed) break;
        }
        if (best_res > allowed)
            throw NonConvergenceError("inverse iteration failed residual certificate: " +
                                      std::to_string(best_res) + " > " + std::to_string(allowed));
        fix_sign(best);
        out.eigenvectors.push_back(std::move(best));
        out.residual_bound = std::max(out.residual_bound, best_res);
    }
    return out;
}

namespace detail {

std::vector<double> tridiagonal_eigenvalues(std::vector<double> d, std::vector<double> e) {
    std::vector<double> w = tridiagonal_values(std::move(d), std::move(e), nullptr);
    std::sort(w.begin(), w.end());
    return w;
}

std::vector<double> tridiagonal_eigenvector(const std::vector<double>& d,
                                            const std::vector<double>& e, double eigenvalue) {
    std::vector<double> x = inverse_iteration(d, e, eigenvalue, 0.0, {});
    fix_sign(x);
    return x;
}

}  // namespace detail

}  // namespace dicke
