#pragma once

// Floating-point polynomial roots via Aberth-Ehrlich iteration.  Advisory
// only: exact classification never depends on this path.

#include "bohemian/poly.hpp"

#include <complex>
#include <stdexcept>
#include <vector>

namespace bohemian {

struct RootRadius {
    double max_modulus = 0.0;
    double max_real = 0.0;
    double error_bound = 0.0;
    int iterations = 0;
    std::vector<std::complex<double>> roots;
};

struct RootSolveError : std::runtime_error {
    RootRadius partial;
    RootSolveError(const std::string& what, RootRadius p) : std::runtime_error(what), partial(std::move(p)) {}
};

// throws RootSolveError (carrying partial results) if the iteration cap is hit
RootRadius numeric_root_radius(const Poly& p);

}  // namespace bohemian
