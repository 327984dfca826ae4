#include "esnlens/spectral.hpp"

#include "esnlens/errors.hpp"
#include "esnlens/rng.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace esnlens {

namespace {

// Largest eigenvalue modulus of a 2x2 matrix. For a complex pair the
// squared modulus equals the determinant.
double dominant_modulus_2x2(const Eigen::Matrix2d& h) {
    const double tr = h(0, 0) + h(1, 1);
    const double det = h(0, 0) * h(1, 1) - h(0, 1) * h(1, 0);
    const double disc = 0.25 * tr * tr - det;
    if (disc >= 0.0) {
        const double root = std::sqrt(disc);
        return std::max(std::abs(0.5 * tr + root), std::abs(0.5 * tr - root));
    }
    return std::sqrt(det);
}

}  // namespace

SpectralEstimate spectral_radius_estimate(const Matrix& m, const SpectralOptions& opts,
                                          Matrix* warm_block) {
    if (m.rows() != m.cols())
        throw ShapeError("spectral_radius: matrix is " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ", expected square");
    if (!m.allFinite()) throw NumericError("spectral_radius: matrix has non-finite entries");

    const Index n = m.rows();
    if (n == 0) return {0.0, 0, true};
    if (n == 1) return {std::abs(m(0, 0)), 0, true};

    Matrix block(n, 2);
    if (warm_block != nullptr && warm_block->rows() == n && warm_block->cols() == 2 &&
        warm_block->allFinite() && warm_block->norm() > 0.0) {
        block = *warm_block;
    } else {
        rng::Stream stream(rng::derive(0x5eed5eedULL, {static_cast<std::uint64_t>(n)}));
        for (Index i = 0; i < n; ++i) {
            block(i, 0) = stream.uniform(-1.0, 1.0);
            block(i, 1) = stream.uniform(-1.0, 1.0);
        }
    }

    const double scale = m.cwiseAbs().maxCoeff();
    if (scale == 0.0) return {0.0, 0, true};
    const double tiny = scale * 1e-300;

    auto orthonormalize = [&](Matrix& v) -> bool {
        double n0 = v.col(0).norm();
        if (n0 <= tiny) return false;
        v.col(0) /= n0;
        v.col(1) -= v.col(0) * (v.col(0).dot(v.col(1)));
        double n1 = v.col(1).norm();
        if (n1 <= tiny * 1e3) {
            // Degenerate second direction: reseed it orthogonal to col 0.
            Index k;
            v.col(0).cwiseAbs().minCoeff(&k);
            v.col(1).setZero();
            v(k, 1) = 1.0;
            v.col(1) -= v.col(0) * (v.col(0).dot(v.col(1)));
            n1 = v.col(1).norm();
            if (n1 <= tiny) return false;
        }
        v.col(1) /= n1;
        return true;
    };

    if (!orthonormalize(block)) return {0.0, 0, true};

    double estimate = 0.0;
    double previous = -1.0;
    int stable = 0;
    Matrix image(n, 2);
    Eigen::Matrix2d h;

    for (int iter = 1; iter <= opts.max_iterations; ++iter) {
        image.noalias() = m * block;
        if (image.norm() <= tiny) {
            // The block fell into the kernel; dominant eigenvalue is 0
            // (e.g. nilpotent matrices).
            if (warm_block != nullptr) *warm_block = block;
            return {0.0, iter, true};
        }
        h.noalias() = block.transpose() * image;
        estimate = dominant_modulus_2x2(h);

        if (previous >= 0.0) {
            const double change = std::abs(estimate - previous);
            if (change <= opts.tolerance * std::max(estimate, 1e-30))
                ++stable;
            else
                stable = 0;
            if (stable >= 3) {
                block = image;
                orthonormalize(block);
                if (warm_block != nullptr) *warm_block = block;
                return {estimate, iter, true};
            }
        }
        previous = estimate;

        block = image;
        if (!orthonormalize(block)) return {0.0, iter, true};
    }

    if (warm_block != nullptr) *warm_block = block;
    return {estimate, opts.max_iterations, false};
}

double spectral_radius(const Matrix& m) {
    const SpectralEstimate est = spectral_radius_estimate(m, SpectralOptions{});
    if (!est.converged)
        throw NumericError("spectral_radius: no convergence after " +
                               std::to_string(est.iterations) +
                               " iterations (best estimate " + std::to_string(est.value) + ")",
                           est.value);
    return est.value;
}

}  // namespace esnlens
