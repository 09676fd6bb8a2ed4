#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace dicke {

// All physical inputs, in units of the photon frequency (omega_photon = 1).
// beta = +infinity means zero temperature.
struct ModelParams {
    double lambda = 0.0;    // light-matter coupling, >= 0
    double epsilon = 1.0;   // atomic splitting, > 0 (resonance: epsilon = 1)
    double beta = std::numeric_limits<double>::infinity();  // inverse temperature, > 0
    int n_atoms = 32;       // N >= 1
    int cutoff = 16;        // Fock cutoff n_max >= 1; seeds auto-cutoff searches

    void validate() const {
        if (!(lambda >= 0.0)) throw std::invalid_argument("ModelParams: lambda must be >= 0");
        if (!(epsilon > 0.0)) throw std::invalid_argument("ModelParams: epsilon must be > 0");
        if (!(beta > 0.0)) throw std::invalid_argument("ModelParams: beta must be > 0");
        if (n_atoms < 1) throw std::invalid_argument("ModelParams: n_atoms must be >= 1");
        if (cutoff < 1) throw std::invalid_argument("ModelParams: cutoff must be >= 1");
    }

    bool zero_temperature() const { return std::isinf(beta); }
};

}  // namespace dicke
