#include "modrange/verification.hpp"

#include <Eigen/QR>
#include <algorithm>
#include <cmath>
#include <cstring>
#include <functional>
#include <limits>
#include <random>
#include <stdexcept>

#include "modrange/seeding.hpp"

namespace modrange {

namespace {

double hausdorff_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    if (a.empty() || b.empty()) return a.empty() == b.empty() ? 0.0 : std::numeric_limits<double>::infinity();
    const auto directed = [](const std::vector<Complex>& from, const std::vector<Complex>& to) {
        double worst = 0.0;
        for (const Complex& p : from) {
            double nearest = std::numeric_limits<double>::infinity();
            for (const Complex& q : to) nearest = std::min(nearest, std::abs(p - q));
            worst = std::max(worst, nearest);
        }
        return worst;
    };
    return std::max(directed(a, b), directed(b, a));
}

std::vector<Complex> sample_values(const RangeSample& s) {
    std::vector<Complex> out;
    out.reserve(s.points.size());
    for (const auto& p : s.points) out.push_back(p.value);
    return out;
}

Complex quadratic_form(const Eigen::MatrixXcd& B, const Eigen::VectorXcd& v) {
    return v.dot(B * v);  // v* B v
}

Complex random_complex(std::mt19937_64& gen) {
    std::normal_distribution<double> normal(0.0, 1.0);
    const double re = normal(gen);
    const double im = normal(gen);
    return {re, im};
}

}  // namespace

std::uint64_t operator_hash(const ModuleOperator& T) {
    std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
    const auto feed = [&h](double x) {
        std::uint64_t bits;
        std::memcpy(&bits, &x, sizeof(bits));
        for (int k = 0; k < 8; ++k) {
            h ^= (bits >> (8 * k)) & 0xffULL;
            h *= 0x100000001b3ULL;
        }
    };
    for (const auto& B : T.blocks)
        for (Eigen::Index c = 0; c < B.cols(); ++c)
            for (Eigen::Index r = 0; r < B.rows(); ++r) {
                feed(B(r, c).real());
                feed(B(r, c).imag());
            }
    return h;
}

std::vector<CheckResult> check_norm_axioms(const ModuleOperator& T, const ModuleOperator& S,
                                           Complex alpha, double tol) {
    if (!(T.shape == S.shape))
        throw std::invalid_argument("check_norm_axioms: mismatched module shapes");

    std::vector<CheckResult> results;

    const double norm_t = module_norm(T).value;
    const double norm_s = module_norm(S).value;
    const double norm_sum = module_norm(op_add(T, S)).value;
    CheckResult triangle;
    triangle.name = "norm_triangle";
    triangle.lhs = norm_sum;
    triangle.rhs = norm_t + norm_s;
    triangle.margin = triangle.rhs - triangle.lhs;
    triangle.passed = triangle.lhs <= triangle.rhs + tol;
    results.push_back(std::move(triangle));

    const double norm_scaled = module_norm(op_scale(alpha, T)).value;
    CheckResult homogeneity;
    homogeneity.name = "norm_homogeneity";
    homogeneity.lhs = norm_scaled;
    homogeneity.rhs = std::abs(alpha) * norm_t;
    homogeneity.margin = std::abs(homogeneity.rhs - homogeneity.lhs);
    homogeneity.passed = homogeneity.margin <= tol * (1.0 + homogeneity.rhs);
    results.push_back(std::move(homogeneity));

    CheckResult definite;
    definite.name = "norm_definiteness";
    definite.lhs = norm_t;
    double max_entry = 0.0;
    for (const auto& B : T.blocks)
        if (B.size() > 0) max_entry = std::max(max_entry, B.cwiseAbs().maxCoeff());
    definite.rhs = max_entry;
    definite.passed = norm_t > tol || max_entry <= tol;
    definite.margin = norm_t > tol ? norm_t : tol - max_entry;
    results.push_back(std::move(definite));

    return results;
}

CheckResult check_self_adjoint_equality(const ModuleOperator& T, double tol) {
    if (!is_self_adjoint(T, 1e-8))
        throw std::invalid_argument("check_self_adjoint_equality: operator is not self-adjoint");
    const SupWitness nrm = module_norm(T);
    const SupWitness rad = module_numerical_radius(T);
    CheckResult result;
    result.name = "self_adjoint_norm_equals_radius";
    result.lhs = rad.value;
    result.rhs = nrm.value;
    result.margin = std::abs(nrm.value - rad.value);
    result.passed = result.margin <= tol * (1.0 + nrm.value);
    result.witness = rad;
    return result;
}

CheckResult check_equivalence(const ModuleOperator& T, double tol) {
    const SupWitness nrm = module_norm(T);
    const SupWitness rad = module_numerical_radius(T);
    CheckResult result;
    result.name = "equivalence_radius_norm";
    result.lhs = rad.value;
    result.rhs = nrm.value;
    const double lower_margin = nrm.value - rad.value;        // ω ≤ ⫴T⫴
    const double upper_margin = 2.0 * rad.value - nrm.value;  // ⫴T⫴ ≤ 2ω
    result.margin = std::min(lower_margin, upper_margin);
    result.passed = lower_margin >= -tol && upper_margin >= -tol;
    result.metrics["lower_margin"] = lower_margin;
    result.metrics["upper_margin"] = upper_margin;
    if (rad.value > 0.0) result.metrics["ratio"] = nrm.value / rad.value;
    result.witness = rad;
    return result;
}

CheckResult check_kittaneh(const ModuleOperator& T, double tol) {
    const ModuleOperator combo = op_add(op_compose(adjoint(T), T), op_compose(T, adjoint(T)));
    const double k = module_norm(combo).value;
    const SupWitness rad = module_numerical_radius(T);
    const double omega_sq = rad.value * rad.value;
    CheckResult result;
    result.name = "kittaneh_bounds";
    result.lhs = 0.25 * k;
    result.rhs = 0.5 * k;
    const double lower_margin = omega_sq - 0.25 * k;
    const double upper_margin = 0.5 * k - omega_sq;
    result.margin = std::min(lower_margin, upper_margin);
    result.passed = lower_margin >= -tol && upper_margin >= -tol;
    result.metrics["omega_squared"] = omega_sq;
    result.metrics["lower_margin"] = lower_margin;
    result.metrics["upper_margin"] = upper_margin;
    result.witness = rad;
    return result;
}

CheckResult check_lemma_bound(const ModuleOperator& T, const ModuleVector& x, double tol) {
    if (!(T.shape == x.shape))
        throw std::invalid_argument("check_lemma_bound: mismatched module shapes");
    const double omega = module_numerical_radius(T).value;
    CheckResult result;
    result.name = "lemma_quadratic_bound";
    double worst_margin = std::numeric_limits<double>::infinity();
    bool ok = true;
    for (std::size_t i = 0; i < T.blocks.size(); ++i) {
        const double lhs = std::abs(quadratic_form(T.blocks[i], x.fibers[i]));
        const double rhs = x.fibers[i].squaredNorm() * omega;
        worst_margin = std::min(worst_margin, rhs - lhs);
        if (lhs > rhs + tol) ok = false;
        if (rhs - lhs < worst_margin + 1e-300) {
            result.lhs = lhs;
            result.rhs = rhs;
        }
    }
    result.margin = worst_margin;
    result.passed = ok;
    result.metrics["omega"] = omega;
    return result;
}

namespace {

// One witness-transported identity check plus an independent-sample Hausdorff
// coverage check. `transform` maps a source point value to its image under the
// identity; `reevaluate` evaluates the defining expression of the transformed
// operator at the transported witness.
void push_identity_checks(std::vector<CheckResult>& out, const std::string& name,
                          const RangeSample& source, const ModuleOperator& transformed,
                          const std::function<Complex(const Complex&)>& transform,
                          const std::function<Complex(std::size_t, const Eigen::VectorXcd&)>& reevaluate,
                          double scale, const RangePropertyOptions& opts) {
    double worst = 0.0;
    std::vector<Complex> transported;
    transported.reserve(source.points.size());
    for (const auto& p : source.points) {
        const Complex expected = transform(p.value);
        const Complex actual = reevaluate(p.character, p.witness);
        worst = std::max(worst, std::abs(expected - actual));
        transported.push_back(expected);
    }
    CheckResult witness_check;
    witness_check.name = name + "_witness";
    witness_check.lhs = worst;
    witness_check.rhs = opts.tol * (1.0 + scale);
    witness_check.margin = witness_check.rhs - witness_check.lhs;
    witness_check.passed = worst <= witness_check.rhs;
    witness_check.metrics["hausdorff"] = worst;
    out.push_back(std::move(witness_check));

    const RangeSample independent = sample_numerical_range(transformed, opts.theta_steps,
                                                           opts.interior_samples, opts.seed);
    const double dist = hausdorff_distance(transported, sample_values(independent));
    // Coverage tolerance: membership term + boundary grid term + interior
    // nearest-neighbour sampling term.
    const double cov_tol = opts.tol * (1.0 + scale) + scale * (8.0 / opts.theta_steps) +
                           3.0 * scale / std::sqrt(double(std::max(opts.interior_samples, 1)));
    CheckResult coverage;
    coverage.name = name + "_hausdorff";
    coverage.lhs = dist;
    coverage.rhs = cov_tol;
    coverage.margin = cov_tol - dist;
    coverage.passed = dist <= cov_tol;
    coverage.metrics["hausdorff"] = dist;
    out.push_back(std::move(coverage));
}

}  // namespace

std::vector<CheckResult> check_range_properties(const ModuleOperator& T, const ModuleOperator& S,
                                                const ModuleOperator& U, Complex alpha,
                                                Complex beta, const RangePropertyOptions& opts) {
    if (!(T.shape == S.shape) || !(T.shape == U.shape))
        throw std::invalid_argument("check_range_properties: mismatched module shapes");
    if (!is_unitary(U, 1e-8))
        throw std::invalid_argument("check_range_properties: U is not unitary");

    std::vector<CheckResult> results;
    const double norm_t = module_norm(T).value;
    const RangeSample source =
        sample_numerical_range(T, opts.theta_steps, opts.interior_samples, opts.seed);

    // (i) W_o(T*) = conj(W_o(T)); same witness x re-evaluated on T*.
    const ModuleOperator t_star = adjoint(T);
    push_identity_checks(
        results, "range_adjoint", source, t_star,
        [](const Complex& z) { return std::conj(z); },
        [&t_star](std::size_t i, const Eigen::VectorXcd& w) {
            return quadratic_form(t_star.blocks[i], w);
        },
        norm_t, opts);

    // (ii) W_o(αT + βI) = α·W_o(T) + β; same witness on the affine operator.
    const ModuleOperator affine = op_add(op_scale(alpha, T), op_scale(beta, identity_operator(T.shape)));
    const double affine_scale = std::abs(alpha) * norm_t + std::abs(beta);
    push_identity_checks(
        results, "range_affine", source, affine,
        [alpha, beta](const Complex& z) { return alpha * z + beta; },
        [&affine](std::size_t i, const Eigen::VectorXcd& w) {
            return quadratic_form(affine.blocks[i], w);
        },
        affine_scale, opts);

    // (iii) W_o(UTU*) = W_o(T); witness transported as x ↦ Ux.
    const ModuleOperator conjugated = op_compose(op_compose(U, T), adjoint(U));
    push_identity_checks(
        results, "range_unitary", source, conjugated,
        [](const Complex& z) { return z; },
        [&conjugated, &U](std::size_t i, const Eigen::VectorXcd& w) {
            const Eigen::VectorXcd uw = U.blocks[i] * w;
            return quadratic_form(conjugated.blocks[i], uw);
        },
        norm_t, opts);

    // (iv) reality of sampled points iff self-adjoint.
    {
        double max_im = 0.0;
        for (const auto& p : source.points) max_im = std::max(max_im, std::abs(p.value.imag()));
        const bool self_adjoint = is_self_adjoint(T, 1e-8);
        const double reality_tol = kTolAnalytic * (1.0 + norm_t);
        CheckResult reality;
        reality.name = "range_reality";
        reality.lhs = max_im;
        reality.rhs = reality_tol;
        reality.margin = reality_tol - max_im;
        reality.passed = self_adjoint ? max_im <= reality_tol : true;
        reality.metrics["max_imag"] = max_im;
        reality.metrics["self_adjoint"] = self_adjoint ? 1.0 : 0.0;
        results.push_back(std::move(reality));
    }

    // (v) W_o(T+S) ⊆ W_o(T) + W_o(S), exact witness sharing: every sampled
    // point of the sum splits as the sum of the two quadratic forms at the
    // same witness, each a member of its range by construction.
    {
        const ModuleOperator sum = op_add(T, S);
        const RangeSample sum_sample =
            sample_numerical_range(sum, opts.theta_steps, opts.interior_samples, opts.seed);
        const double scale = norm_t + module_norm(S).value;
        double worst = 0.0;
        for (const auto& p : sum_sample.points) {
            const Complex t_part = quadratic_form(T.blocks[p.character], p.witness);
            const Complex s_part = quadratic_form(S.blocks[p.character], p.witness);
            worst = std::max(worst, std::abs(p.value - (t_part + s_part)));
        }
        CheckResult subadd;
        subadd.name = "range_subadditivity";
        subadd.lhs = worst;
        subadd.rhs = kTolAlgebraic * (1.0 + scale);
        subadd.margin = subadd.rhs - subadd.lhs;
        subadd.passed = worst <= subadd.rhs;
        results.push_back(std::move(subadd));
    }

    return results;
}

std::string operator_class_name(OperatorClass cls) {
    switch (cls) {
        case OperatorClass::Generic: return "generic";
        case OperatorClass::SelfAdjoint: return "self-adjoint";
        case OperatorClass::Unitary: return "unitary";
        case OperatorClass::Nilpotent: return "nilpotent";
        case OperatorClass::Normal: return "normal";
    }
    return "unknown";
}

ModuleOperator random_operator(const ModuleShape& shape, OperatorClass cls, std::uint64_t seed) {
    std::vector<Eigen::MatrixXcd> blocks;
    blocks.reserve(shape.dims.size());
    for (std::size_t i = 0; i < shape.dims.size(); ++i) {
        const int d = shape.dims[i];
        std::mt19937_64 gen(mix_seed(seed, i));
        Eigen::MatrixXcd A(d, d);
        for (int c = 0; c < d; ++c)
            for (int r = 0; r < d; ++r) A(r, c) = random_complex(gen);

        switch (cls) {
            case OperatorClass::Generic:
                blocks.push_back(A);
                break;
            case OperatorClass::SelfAdjoint:
                blocks.push_back(0.5 * (A + A.adjoint()).eval());
                break;
            case OperatorClass::Unitary: {
                Eigen::HouseholderQR<Eigen::MatrixXcd> qr(A);
                blocks.push_back(Eigen::MatrixXcd(qr.householderQ()));
                break;
            }
            case OperatorClass::Nilpotent: {
                // Alternate between a scaled Jordan block and a random strictly
                // upper-triangular matrix; both hit the ratio-2 extreme family.
                Eigen::MatrixXcd N = Eigen::MatrixXcd::Zero(d, d);
                if (mix_seed(seed, i + 1000) % 2 == 0) {
                    const double scale = 0.25 + std::abs(random_complex(gen));
                    for (int k = 0; k + 1 < d; ++k) N(k, k + 1) = scale;
                } else {
                    for (int c = 0; c < d; ++c)
                        for (int r = 0; r < c; ++r) N(r, c) = random_complex(gen);
                    if (d > 1 && N.cwiseAbs().maxCoeff() == 0.0) N(0, 1) = Complex{1.0, 0.0};
                }
                blocks.push_back(std::move(N));
                break;
            }
            case OperatorClass::Normal: {
                Eigen::HouseholderQR<Eigen::MatrixXcd> qr(A);
                const Eigen::MatrixXcd Q = qr.householderQ();
                Eigen::VectorXcd lambda(d);
                for (int k = 0; k < d; ++k) lambda[k] = random_complex(gen);
                blocks.push_back(Q * lambda.asDiagonal() * Q.adjoint());
                break;
            }
        }
    }
    return {shape, std::move(blocks)};
}

namespace {

ModuleShape random_shape(std::mt19937_64& gen, std::size_t max_characters, int max_dim, int min_dim) {
    std::uniform_int_distribution<std::size_t> n_dist(1, max_characters);
    const std::size_t n = n_dist(gen);
    std::uniform_int_distribution<int> d_dist(min_dim, std::max(min_dim, max_dim));
    std::vector<int> dims(n);
    for (auto& d : dims) d = d_dist(gen);
    return {CharacterSpace{n}, std::move(dims)};
}

}  // namespace

VerificationReport fuzz_suite(const FuzzConfig& config) {
    if (config.trials < 1) throw std::invalid_argument("fuzz_suite: trials must be >= 1");
    if (config.classes.empty()) throw std::invalid_argument("fuzz_suite: classes must be non-empty");

    VerificationReport report;
    report.seed = config.seed;
    report.instances.reserve(config.trials);

    for (int t = 0; t < config.trials; ++t) {
        const std::uint64_t inst_seed = mix_seed(config.seed, std::uint64_t(t));
        std::mt19937_64 gen(inst_seed);
        const OperatorClass cls = config.classes[t % config.classes.size()];

        // A 1×1 nilpotent block is zero; that class needs room to act.
        const int min_dim = cls == OperatorClass::Nilpotent ? 2 : 1;
        const ModuleShape shape = random_shape(gen, config.max_characters, config.max_dim, min_dim);

        const ModuleOperator T = random_operator(shape, cls, mix_seed(inst_seed, 1));
        const ModuleOperator S = random_operator(shape, OperatorClass::Generic, mix_seed(inst_seed, 2));
        const ModuleOperator U = random_operator(shape, OperatorClass::Unitary, mix_seed(inst_seed, 3));
        const Complex alpha = random_complex(gen);
        const Complex beta = random_complex(gen);

        InstanceResult inst;
        inst.index = std::size_t(t);
        inst.cls = cls;
        inst.shape = shape;
        inst.seed = inst_seed;
        inst.operator_hash = operator_hash(T);

        for (auto& r : check_norm_axioms(T, S, alpha, config.tol)) inst.results.push_back(std::move(r));
        inst.results.push_back(check_equivalence(T, config.tol));
        inst.results.push_back(check_kittaneh(T, config.tol));

        ModuleVector x = random_vector(shape, mix_seed(inst_seed, 4));
        if (t % 3 == 0) x.fibers[0].setZero();  // exercise the zero-fiber case
        inst.results.push_back(check_lemma_bound(T, x, config.tol));

        if (is_self_adjoint(T, 1e-8))
            inst.results.push_back(check_self_adjoint_equality(T, 1e-8));

        // Oracle soundness: the sampling oracle never exceeds the analytic value.
        {
            const double analytic_norm = module_norm(T).value;
            const double analytic_radius = module_numerical_radius(T).value;
            const struct {
                const char* name;
                SupQuantity quantity;
                double analytic;
            } oracles[] = {
                {"oracle_soundness_norm", SupQuantity::Norm, analytic_norm},
                {"oracle_soundness_bilinear", SupQuantity::Bilinear, analytic_norm},
                {"oracle_soundness_radius", SupQuantity::Radius, analytic_radius},
            };
            for (const auto& o : oracles) {
                const double mc = monte_carlo_sup(T, o.quantity, config.mc_trials, mix_seed(inst_seed, 5));
                CheckResult r;
                r.name = o.name;
                r.lhs = mc;
                r.rhs = o.analytic;
                r.margin = o.analytic - mc;
                r.passed = mc <= o.analytic + kTolAnalytic;
                inst.results.push_back(std::move(r));
            }
        }

        if (config.range_stride > 0 && t % config.range_stride == 0) {
            RangePropertyOptions opts;
            opts.theta_steps = config.theta_steps;
            opts.interior_samples = config.range_interior_samples;
            opts.seed = mix_seed(inst_seed, 6);
            for (auto& r : check_range_properties(T, S, U, alpha, beta, opts))
                inst.results.push_back(std::move(r));
        }

        inst.passed = std::all_of(inst.results.begin(), inst.results.end(),
                                  [](const CheckResult& r) { return r.passed; });
        report.checks_run += inst.results.size();
        for (const auto& r : inst.results)
            if (!r.passed) ++report.failures;
        report.instances.push_back(std::move(inst));
    }

    report.overall = report.failures == 0;
    return report;
}

}  // namespace modrange
