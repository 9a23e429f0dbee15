#pragma once

#include <cstdint>

#include "noethops/diffop.hpp"
#include "noethops/dual_space.hpp"
#include "noethops/ideal.hpp"

namespace noethops {

struct SamplerConfig {
    enum class Mode { BuiltinSlice, UserPoints };
    Mode mode = Mode::BuiltinSlice;
    uint64_t rng_seed = 12345;
    double newton_tolerance = 1e-10;
    int max_newton_iters = 50;
    double residual_tol = 1e-8;
    int max_slice_retries = 5;
    std::vector<std::vector<Complex>> user_points;
};

// n approximate points on V(I): random affine-linear slices, exact solve of
// the sliced system through multiplication-matrix eigenvectors, then a
// Gauss-Newton polish on the squared-up slice system.  A fixed seed yields
// an identical point sequence.
std::vector<std::vector<Complex>> sample_points(const Ideal& I, int n, const SamplerConfig& cfg);

// One interpolation target: samples of a specialized coefficient indexed by
// the independent coordinates of the sample points.
struct InterpolationState {
    RingPtr tring; // ring of the independent variables
    std::vector<std::vector<Complex>> sample_coords;
    std::vector<Complex> sample_values;
    size_t validation_count = 2;
    int numerator_degree = 0;
    int denominator_degree = 0;
    int max_total_degree = 10;
    double validation_tol = 1e-6;
    double fit_tol = 1e-8;
};

// Thrown internally when the current degree pair needs more samples than
// provided; the driver samples more points and retries.
struct NeedMoreSamples {
    size_t needed;
};

// Least-squares fit of value*den - num over the degree schedule
// (0,0),(1,0),(0,1),(1,1),(2,1),... with rationalized coefficients,
// accepted only when every held-out validation sample matches to the
// relative tolerance.
RationalFunction interpolate_rational(InterpolationState& state);

struct NumericalOptions {
    SamplerConfig sampler;
    DualOptions dual;
    int initial_points = 8;
    int max_points = 60;
    int support_retries = 3;
};

// Interpolated Noetherian operators: specialized operators at sampled
// points, support fixed at the first general point, each non-pivot
// coefficient recovered as a rational function of the independent
// variables.
std::vector<InterpolatedDiffOp> numerical_noetherian_operators(const Ideal& I,
                                                               const std::vector<int>& dependent,
                                                               const NumericalOptions& opts = {});

} // namespace noethops
