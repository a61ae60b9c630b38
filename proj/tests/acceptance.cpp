// Acceptance gate: one pass/fail line per criterion, exit 0 iff all pass.
//
// Every tolerance is pinned here rather than shared with the library so that a
// library-side tolerance change cannot silently weaken the gate.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "modrange/cx_model.hpp"
#include "modrange/instance_io.hpp"
#include "modrange/seeding.hpp"
#include "modrange/verification.hpp"

using namespace modrange;

namespace {

int g_failures = 0;

void report(const std::string& name, bool passed, const std::string& detail) {
    std::printf("[%s] %s — %s\n", passed ? "PASS" : "FAIL", name.c_str(), detail.c_str());
    if (!passed) ++g_failures;
}

ModuleOperator single(const Eigen::MatrixXcd& B) {
    return {{CharacterSpace{1}, {int(B.rows())}}, {B}};
}

Eigen::MatrixXcd jordan2() {
    Eigen::MatrixXcd j = Eigen::MatrixXcd::Zero(2, 2);
    j(0, 1) = Complex{1, 0};
    return j;
}

// fuzzed shapes/classes mirroring the campaign envelope: n <= 3, d_i <= 4
ModuleShape fuzz_shape(std::uint64_t seed, int min_dim) {
    std::mt19937_64 gen(mix_seed(seed, 901));
    std::uniform_int_distribution<int> nchars(1, 3);
    std::uniform_int_distribution<int> dim(min_dim, 4);
    const int n = nchars(gen);
    std::vector<int> dims(n);
    for (auto& d : dims) d = dim(gen);
    return {CharacterSpace{std::size_t(n)}, dims};
}

constexpr std::array<OperatorClass, 5> kClasses = {
    OperatorClass::Generic, OperatorClass::SelfAdjoint, OperatorClass::Unitary,
    OperatorClass::Nilpotent, OperatorClass::Normal};

ModuleOperator fuzz_operator(std::uint64_t seed) {
    const OperatorClass cls = kClasses[seed % kClasses.size()];
    const int min_dim = cls == OperatorClass::Nilpotent ? 2 : 1;
    return random_operator(fuzz_shape(seed, min_dim), cls, mix_seed(seed, 902));
}

struct CliRun {
    int exit_code = -1;
    std::string output;
};

CliRun run_cli(const std::string& args) {
    const std::string cmd = std::string(MODRANGE_CLI_PATH) + " " + args + " 2>/dev/null";
    CliRun result;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return result;
    std::array<char, 4096> buffer{};
    std::size_t n = 0;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), n);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), format, a, b, c);
    return buf;
}

}  // namespace

int main() {
    // ---- 1. equivalence over the 1000-instance campaign, under 30 s -------
    FuzzConfig config;
    config.trials = 1000;
    config.seed = 42;
    config.theta_steps = 720;
    // The soundness invariant is separately stressed below with 2000-trial
    // oracles; inside the campaign 500 trials per quantity keep the 1000
    // instances inside the time budget.
    config.mc_trials = 500;

    const auto t0 = std::chrono::steady_clock::now();
    const VerificationReport campaign = fuzz_suite(config);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    std::size_t equivalence_checks = 0, equivalence_failures = 0;
    std::size_t soundness_checks = 0, soundness_failures = 0;
    for (const auto& inst : campaign.instances)
        for (const auto& r : inst.results) {
            if (r.name == "equivalence_radius_norm") {
                ++equivalence_checks;
                if (!r.passed) ++equivalence_failures;
            }
            if (r.name.rfind("oracle_soundness", 0) == 0) {
                ++soundness_checks;
                if (!r.passed) ++soundness_failures;
            }
        }
    report("equivalence_campaign",
           campaign.instances.size() == 1000 && equivalence_checks == 1000 &&
               equivalence_failures == 0 && elapsed < 30.0,
           fmt("1000 instances, %g violations, %.2f s (< 30 s)", double(equivalence_failures),
               elapsed));

    // ---- 2. sharpness of both equivalence extremes -------------------------
    {
        const ModuleOperator J = single(jordan2());
        const double ratio = module_norm(J).value / module_numerical_radius(J).value;
        bool ok = std::abs(ratio - 2.0) <= 1e-6;
        double worst_sa = 0.0;
        for (std::uint64_t seed = 0; seed < 25; ++seed) {
            const ModuleShape shape = fuzz_shape(seed, 1);
            const ModuleOperator H = random_operator(shape, OperatorClass::SelfAdjoint, seed);
            const double n = module_norm(H).value;
            const double w = module_numerical_radius(H).value;
            worst_sa = std::max(worst_sa, std::abs(n / w - 1.0));
        }
        ok = ok && worst_sa <= 1e-8;
        report("sharpness_extremes", ok,
               fmt("Jordan ratio %.9f (2 ± 1e-6), max self-adjoint |ratio-1| %.2e (<= 1e-8)",
                   ratio, worst_sa));
    }

    // ---- 3. Kittaneh bounds: campaign + both attainments -------------------
    {
        std::size_t kittaneh_checks = 0, kittaneh_failures = 0;
        for (const auto& inst : campaign.instances)
            for (const auto& r : inst.results)
                if (r.name == "kittaneh_bounds") {
                    ++kittaneh_checks;
                    if (!r.passed) ++kittaneh_failures;
                }

        const CheckResult jlow = check_kittaneh(single(jordan2()));
        const double lower_margin = jlow.metrics.at("lower_margin");

        Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(2, 2);
        d(0, 0) = Complex{1, 0};
        d(1, 1) = Complex{0, 1};
        const CheckResult dup = check_kittaneh(single(d));
        const double upper_margin = dup.metrics.at("upper_margin");

        report("kittaneh_bounds",
               kittaneh_checks == 1000 && kittaneh_failures == 0 && std::abs(lower_margin) < 1e-9 &&
                   std::abs(upper_margin) < 1e-9,
               fmt("%g campaign violations, Jordan lower margin %.2e, diag(1,i) upper margin "
                   "%.2e (both < 1e-9)",
                   double(kittaneh_failures), lower_margin, upper_margin));
    }

    // ---- 4. bilinear characterization --------------------------------------
    {
        double worst_gap = 0.0;
        for (std::uint64_t t = 0; t < 200; ++t) {
            const ModuleOperator T = fuzz_operator(mix_seed(42, t));
            worst_gap = std::max(worst_gap,
                                 std::abs(module_norm_bilinear(T).value - module_norm(T).value));
        }
        double worst_rel = 0.0;
        for (std::uint64_t t = 0; t < 5; ++t) {
            const ModuleOperator T = fuzz_operator(mix_seed(7, t));
            const double analytic = module_norm(T).value;
            if (analytic == 0.0) continue;
            const double mc = monte_carlo_sup(T, SupQuantity::Bilinear, 100000, t);
            worst_rel = std::max(worst_rel, (analytic - mc) / analytic);
        }
        report("bilinear_characterization", worst_gap <= 1e-9 && worst_rel <= 0.05,
               fmt("max |bilinear - norm| %.2e (<= 1e-9), 1e5-trial oracle gap %.2f%% (<= 5%%)",
                   worst_gap, 100.0 * worst_rel));
    }

    // ---- 5. Hilbert-space reduction (n = 1) ---------------------------------
    {
        double worst = 0.0;
        std::mt19937_64 gen(123);
        std::uniform_int_distribution<int> dim(1, 8);
        for (int t = 0; t < 100; ++t) {
            const int d = dim(gen);
            const ModuleShape shape{CharacterSpace{1}, {d}};
            const ModuleOperator T = random_operator(shape, OperatorClass::Generic, 500 + t);
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(T.blocks[0].adjoint() *
                                                                T.blocks[0]);
            const double sigma = std::sqrt(std::max(eig.eigenvalues().maxCoeff(), 0.0));
            worst = std::max(worst, std::abs(module_norm(T).value - sigma) / (1.0 + sigma));
        }
        report("hilbert_reduction", worst <= 1e-10,
               fmt("max relative deviation %.2e over 100 matrices up to 8x8 (<= 1e-10)", worst));
    }

    // ---- 6. oracle soundness (hard invariant) -------------------------------
    {
        double worst_excess = -1.0;
        for (std::uint64_t t = 0; t < 100; ++t) {
            const ModuleOperator T = fuzz_operator(mix_seed(11, t));
            const double nrm = module_norm(T).value;
            const double rad = module_numerical_radius(T).value;
            worst_excess = std::max(
                {worst_excess, monte_carlo_sup(T, SupQuantity::Norm, 2000, t) - nrm,
                 monte_carlo_sup(T, SupQuantity::Bilinear, 2000, t) - nrm,
                 monte_carlo_sup(T, SupQuantity::Radius, 2000, t) - rad});
        }
        report("oracle_soundness",
               soundness_checks >= 1000 && soundness_failures == 0 && worst_excess <= 1e-9,
               fmt("%g campaign violations, max oracle excess %.2e (<= 1e-9)",
                   double(soundness_failures), worst_excess));
    }

    // ---- 7. numerical-range properties (i)-(v) ------------------------------
    {
        std::size_t property_failures = 0;
        std::size_t checks = 0;
        std::mt19937_64 gen(321);
        std::normal_distribution<double> normal(0.0, 1.0);
        for (std::uint64_t t = 0; t < 25; ++t) {
            const ModuleOperator T = fuzz_operator(mix_seed(77, t));
            const ModuleOperator S =
                random_operator(T.shape, OperatorClass::Generic, mix_seed(77, 1000 + t));
            const ModuleOperator U =
                random_operator(T.shape, OperatorClass::Unitary, mix_seed(77, 2000 + t));
            RangePropertyOptions opts;
            opts.theta_steps = 720;
            opts.interior_samples = 200;
            opts.seed = t;
            const auto results = check_range_properties(
                T, S, U, Complex{normal(gen), normal(gen)}, Complex{normal(gen), normal(gen)},
                opts);
            for (const auto& r : results) {
                ++checks;
                if (!r.passed) ++property_failures;
            }
        }

        // (iv) non-reality for every nilpotent instance
        std::size_t reality_misses = 0;
        for (std::uint64_t t = 0; t < 100; ++t) {
            const ModuleOperator N =
                random_operator(fuzz_shape(t, 2), OperatorClass::Nilpotent, mix_seed(88, t));
            const RangeSample sample = sample_numerical_range(N, 90, 50, t);
            double max_imag = 0.0;
            for (const auto& p : sample.points)
                max_imag = std::max(max_imag, std::abs(p.value.imag()));
            if (max_imag <= 1e-9 * (1.0 + module_norm(N).value)) ++reality_misses;
        }

        report("range_properties",
               property_failures == 0 && reality_misses == 0,
               fmt("%g/%g property checks failed at theta-steps 720, %g/100 nilpotent "
                   "instances with real range",
                   double(property_failures), double(checks), double(reality_misses)));
    }

    // ---- 8. lemma bound on 10^4 (T, x) pairs --------------------------------
    {
        std::size_t violations = 0;
        for (std::uint64_t t = 0; t < 100; ++t) {
            const ModuleOperator T = fuzz_operator(mix_seed(55, t));
            const double omega = module_numerical_radius(T).value;
            for (std::uint64_t k = 0; k < 100; ++k) {
                ModuleVector x = random_vector(T.shape, mix_seed(mix_seed(55, t), k));
                if (k % 10 == 3) x.fibers[0].setZero();            // zero-fiber x
                if (k % 10 == 7) x = vec_scale(Complex{37, 0}, x); // far from normalized
                const AlgebraElement form = inner_product(apply(T, x), x);
                const AlgebraElement sq = modulus(x);
                for (std::size_t i = 0; i < T.shape.space.size; ++i) {
                    const double lhs = std::abs(form.values[i]);
                    const double rhs =
                        sq.values[i].real() * sq.values[i].real() * omega;
                    if (lhs > rhs + 1e-9 * (1.0 + rhs)) ++violations;
                }
            }
        }
        report("lemma_bound", violations == 0,
               fmt("%g violations over 10^4 pairs at tol 1e-9", double(violations)));
    }

    // ---- 9. C(X) example ----------------------------------------------------
    {
        const MultiplicationOperator M = build_multiplication(
            make_interval(101), [](double x) { return Complex{x, 0}; });
        const double norm = module_norm(M.op).value;
        const double radius = module_numerical_radius(M.op).value;
        bool monotone = true;
        double previous = 0.0;
        for (int level = 1; level <= 8; ++level) {
            const MultiplicationOperator refined = build_multiplication(
                make_interval((1 << level) + 1), [](double x) { return Complex{x, 0}; });
            const double value = module_norm(refined.op).value;
            if (value < previous) monotone = false;
            previous = value;
        }
        report("cx_example",
               std::abs(norm - 1.0) <= 1e-9 && std::abs(radius - 1.0) <= 1e-9 && monotone,
               fmt("m=101: norm %.12f, radius %.12f (1 ± 1e-9); nested meshes monotone: ",
                   norm, radius) +
                   (monotone ? "yes" : "no"));
    }

    // ---- 10. determinism of the verify command ------------------------------
    {
        const std::string args = "verify --fuzz --trials 50 --seed 42 --theta-steps 360";
        const CliRun a = run_cli(args);
        const CliRun b = run_cli(args);
        const bool ok = a.exit_code == 0 && b.exit_code == 0 && !a.output.empty() &&
                        a.output == b.output;
        report("verify_determinism", ok,
               fmt("two runs, exit codes %g/%g, byte-identical: ", double(a.exit_code),
                   double(b.exit_code)) +
                   (a.output == b.output ? "yes" : "no"));
    }

    if (g_failures == 0) {
        std::printf("acceptance: all criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", g_failures);
    return 1;
}
