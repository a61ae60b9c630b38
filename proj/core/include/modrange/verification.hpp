/*
 * verification.hpp — every proved inequality and structural identity of the
 * norm/range/radius theory as an executable check, plus a seeded fuzz
 * campaign over generated operator classes.
 *
 * A failing check is a bug certificate: each CheckResult records the compared
 * values, the margin, and enough metrics to replay the instance.
 */
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "modrange/norms.hpp"

namespace modrange {

// Tolerance ladder: algebraic identities / reductions vs. analytic values /
// sampled set comparisons.
inline constexpr double kTolAlgebraic = 1e-12;
inline constexpr double kTolAnalytic = 1e-9;
inline constexpr double kTolSampledSets = 1e-6;

struct CheckResult {
    std::string name;
    bool passed = false;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;                    // rhs - lhs or as appropriate
    std::map<std::string, double> metrics;  // ratios, Hausdorff distances, ...
    std::string detail;
    std::optional<SupWitness> witness;
};

/// Triangle inequality, absolute homogeneity, and definiteness of ⫴·⫴.
std::vector<CheckResult> check_norm_axioms(const ModuleOperator& T, const ModuleOperator& S,
                                           Complex alpha, double tol = kTolAnalytic);

/// ⫴T⫴ = ω_o(T) for self-adjoint T. Throws std::invalid_argument otherwise.
CheckResult check_self_adjoint_equality(const ModuleOperator& T, double tol = 1e-8);

/// ω_o(T) ≤ ⫴T⫴ ≤ 2ω_o(T); metric "ratio" is ⫴T⫴/ω_o(T) for nonzero T.
CheckResult check_equivalence(const ModuleOperator& T, double tol = kTolAnalytic);

/// ¼⫴T*T+TT*⫴ ≤ ω_o(T)² ≤ ½⫴T*T+TT*⫴; metrics carry both margins.
CheckResult check_kittaneh(const ModuleOperator& T, double tol = kTolAnalytic);

/// |φ_i(⟨Tx,x⟩)| ≤ φ_i(|x|²)·ω_o(T) per character, for arbitrary x.
CheckResult check_lemma_bound(const ModuleOperator& T, const ModuleVector& x,
                              double tol = kTolAnalytic);

struct RangePropertyOptions {
    int theta_steps = kDefaultThetaSteps;
    int interior_samples = 200;
    std::uint64_t seed = 0;
    double tol = kTolSampledSets;
};

/// Numerical-range identities:
///   conjugation      W_o(T*)        = conj(W_o(T))
///   affine           W_o(αT + βI)   = α·W_o(T) + β
///   unitary          W_o(UTU*)      = W_o(T)
///   reality          W_o(T) ⊆ R     iff T self-adjoint
///   subadditivity    W_o(T+S)       ⊆ W_o(T) + W_o(S)
/// The first three are verified twice: by transforming witnesses (membership
/// exact, tolerance tol·(1+scale)) and by symmetric Hausdorff distance against
/// an independently sampled set (tolerance widened by a grid/sampling term).
/// Subadditivity is verified exactly by witness sharing.
/// Throws std::invalid_argument when U is not unitary.
std::vector<CheckResult> check_range_properties(const ModuleOperator& T, const ModuleOperator& S,
                                                const ModuleOperator& U, Complex alpha,
                                                Complex beta, const RangePropertyOptions& opts);

enum class OperatorClass { Generic, SelfAdjoint, Unitary, Nilpotent, Normal };

std::string operator_class_name(OperatorClass cls);

/// Seeded random operator of the given structural class. Nilpotent instances
/// require every fiber dimension >= 2 (a 1×1 nilpotent block is zero).
ModuleOperator random_operator(const ModuleShape& shape, OperatorClass cls, std::uint64_t seed);

struct FuzzConfig {
    int trials = 100;               // number of generated instances
    std::uint64_t seed = 42;
    double tol = kTolAnalytic;
    std::vector<OperatorClass> classes = {OperatorClass::Generic, OperatorClass::SelfAdjoint,
                                          OperatorClass::Unitary, OperatorClass::Nilpotent,
                                          OperatorClass::Normal};
    std::size_t max_characters = 3;
    int max_dim = 4;
    int theta_steps = kDefaultThetaSteps;
    int mc_trials = 2000;           // Monte-Carlo oracle trials per instance
    int range_stride = 20;          // run range-property checks every k-th instance
    int range_interior_samples = 200;
};

struct InstanceResult {
    std::size_t index = 0;
    OperatorClass cls = OperatorClass::Generic;
    ModuleShape shape;
    std::uint64_t seed = 0;           // per-instance seed, replayable
    std::uint64_t operator_hash = 0;  // FNV-1a over the block entries
    std::vector<CheckResult> results;
    bool passed = false;
};

struct VerificationReport {
    std::uint64_t seed = 0;
    std::vector<InstanceResult> instances;
    std::size_t checks_run = 0;
    std::size_t failures = 0;
    bool overall = false;
};

/// Deterministic fuzz campaign: runs every applicable check on every
/// generated instance; per-instance seeds derive from (seed, index) so the
/// report is independent of scheduling.
VerificationReport fuzz_suite(const FuzzConfig& config);

std::uint64_t operator_hash(const ModuleOperator& T);

}  // namespace modrange
