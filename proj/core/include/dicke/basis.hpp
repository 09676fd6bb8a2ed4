#pragma once

#include <stdexcept>
#include <string>

namespace dicke {

// Truncated photon-number basis |0>, |1>, ..., |n_max>.
struct FockBasis {
    int cutoff;  // maximum photon number n_max; dimension is n_max + 1

    explicit FockBasis(int n_max) : cutoff(n_max) {
        if (n_max < 1) throw std::invalid_argument("FockBasis: cutoff must be >= 1");
    }
    int dim() const { return cutoff + 1; }
    std::string tag() const { return "fock(" + std::to_string(cutoff) + ")"; }
};

// Collective-spin basis restricted to the maximal sector j = N/2, the sector
// that contains the non-interacting ground state. States are indexed
// mi = 0..N corresponding to m = mi - j in increasing order.
struct SpinBasis {
    int n_atoms;  // N >= 1; dimension is N + 1

    explicit SpinBasis(int n) : n_atoms(n) {
        if (n < 1) throw std::invalid_argument("SpinBasis: n_atoms must be >= 1");
    }
    double j() const { return 0.5 * n_atoms; }
    int dim() const { return n_atoms + 1; }
    std::string tag() const { return "spin(" + std::to_string(n_atoms) + ")"; }
};

}  // namespace dicke
