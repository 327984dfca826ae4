#pragma once

#include "esnlens/types.hpp"

namespace esnlens {

struct SpectralOptions {
    double tolerance = 1e-8;
    int max_iterations = 10000;
};

struct SpectralEstimate {
    double value = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// Largest absolute eigenvalue of a square matrix, estimated by subspace
/// (block) power iteration with a two-dimensional block. The two-column
/// block makes the iteration converge for complex conjugate dominant pairs,
/// where plain power iteration oscillates. A zero matrix yields 0.
///
/// `warm_block`, when non-null, is used as the starting block and receives
/// the final block; callers that evaluate the radius of a slowly changing
/// family of matrices (the init-time rescaling loop) reuse it.
SpectralEstimate spectral_radius_estimate(const Matrix& m, const SpectralOptions& opts,
                                          Matrix* warm_block = nullptr);

/// As above with default options; throws NumericError (carrying the best
/// estimate) if the iteration does not converge.
double spectral_radius(const Matrix& m);

}  // namespace esnlens
