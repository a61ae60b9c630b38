/*
 * norms.hpp — the module operator norm ⫴T⫴, the numerical radius ω_o(T),
 * and the numerical range W_o(T), plus Monte-Carlo oracles that sample the
 * defining suprema directly.
 *
 * Analytic reduction used throughout: for block-diagonal T over the finite
 * Gelfand model, φ_i(|Tx|) = ‖T_i x_i‖ and φ_i(|x|) = ‖x_i‖, so
 *
 *   ⫴T⫴   = max_i ‖T_i‖            (largest singular value per block)
 *   ω_o(T) = max_i ω(T_i)           (classical numerical radius per block)
 *
 * ω(B) is computed by the rotated-Hermitian-part sweep
 *   ω(B) = max_θ λ_max( (e^{iθ}B + e^{-iθ}B*) / 2 )
 * on a uniform θ grid followed by golden-section refinement around the best
 * grid cell. Every result carries a witness at which the defining expression
 * re-evaluates to the reported value.
 *
 * Numerical-range points are evaluated in the classical orientation
 * z = x_i* T_i x_i for unit witnesses x_i, so the n = 1 case reduces exactly
 * to the classical field of values and affine identities act as z ↦ αz + β.
 */
#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <vector>

#include "modrange/operators.hpp"

namespace modrange {

inline constexpr int kDefaultThetaSteps = 720;
inline constexpr double kDefaultRefineTol = 1e-12;

/// Largest singular value of a complex square block, 1e-10 relative accuracy.
double block_operator_norm(const Eigen::MatrixXcd& B);

struct BlockRadiusResult {
    double value = 0.0;            // ω(B)
    double theta = 0.0;            // maximizing rotation angle in [0, 2π)
    Eigen::VectorXcd vector;       // unit top eigenvector of the rotated part
};

/// Classical numerical radius of one block via θ-sweep + refinement.
/// Each grid evaluation is exact for its θ, so the result is a certified
/// lower bound converging to ω(B). Requires theta_steps >= 8.
BlockRadiusResult block_numerical_radius(const Eigen::MatrixXcd& B,
                                         int theta_steps = kDefaultThetaSteps,
                                         double refine_tol = kDefaultRefineTol);

/// Evidence-carrying supremum: value, attaining character, and a module
/// vector witness with unit fiber norm at that character.
struct SupWitness {
    double value = 0.0;
    std::size_t character = 0;
    ModuleVector vector;
    std::optional<ModuleVector> pair;   // second vector for the bilinear form
    std::optional<double> theta;        // rotation angle for radius witnesses
};

/// ⫴T⫴ = max_i ‖T_i‖. Witness: top right singular vector embedded in the
/// attaining fiber, zeros elsewhere. Ties break to the smallest character.
SupWitness module_norm(const ModuleOperator& T);

/// Same value as module_norm (bilinear characterization); the witness is a
/// pair (x, y) with y the normalized image direction. When the image is zero
/// the y-normalization is skipped and the candidate contributes value 0.
SupWitness module_norm_bilinear(const ModuleOperator& T);

/// ω_o(T) = max_i ω(T_i). Witness: maximizing eigenvector embedded in the
/// attaining fiber. Ties break to the smallest character.
SupWitness module_numerical_radius(const ModuleOperator& T,
                                   int theta_steps = kDefaultThetaSteps,
                                   double refine_tol = kDefaultRefineTol);

struct RangePoint {
    std::size_t character = 0;
    std::optional<double> theta;    // set for boundary-traced points
    Complex value;                  // = witness* T_i witness
    Eigen::VectorXcd witness;       // unit vector in fiber `character`
};

struct RangeSample {
    std::vector<RangePoint> points;
    int theta_steps = 0;
    int interior_samples = 0;       // per character
    std::uint64_t seed = 0;
};

/// Samples W_o(T): per character, boundary points from top eigenvectors of
/// the rotated Hermitian part at each grid θ, plus `interior_samples` random
/// unit-vector points. Every emitted point is a genuine member of W_o(T).
RangeSample sample_numerical_range(const ModuleOperator& T,
                                   int theta_steps = kDefaultThetaSteps,
                                   int interior_samples = 2000,
                                   std::uint64_t seed = 0);

enum class SupQuantity { Norm, Bilinear, Radius };

/// Rejection-free sampling oracle for the defining suprema: draw random
/// vectors, normalize per character, evaluate φ_i(|Tx|), |φ_i(⟨Tx,y⟩)| or
/// |φ_i(⟨Tx,x⟩)|, keep the max. Always a valid lower bound on the analytic
/// value; deterministic given the seed; per-trial seeds derive from
/// (seed, trial index) so the max is order-insensitive.
double monte_carlo_sup(const ModuleOperator& T, SupQuantity quantity,
                       int trials, std::uint64_t seed);

}  // namespace modrange
