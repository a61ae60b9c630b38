#include "modrange/norms.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "modrange/seeding.hpp"

namespace modrange {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Eigen::MatrixXcd rotated_hermitian_part(const Eigen::MatrixXcd& B, double theta) {
    const Complex phase = std::polar(1.0, theta);
    return 0.5 * (phase * B + std::conj(phase) * B.adjoint());
}

// λ_max of a Hermitian block. The θ-sweep calls this hundreds of times per
// radius computation, so the small sizes dominating fuzz campaigns get
// closed-form / fixed-size paths instead of the dynamic solver.
double top_eigenvalue(const Eigen::MatrixXcd& H) {
    switch (H.rows()) {
        case 1:
            return H(0, 0).real();
        case 2: {
            const double a = H(0, 0).real();
            const double c = H(1, 1).real();
            const double mid = 0.5 * (a - c);
            return 0.5 * (a + c) + std::hypot(mid, std::abs(H(0, 1)));
        }
        case 3: {
            Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> solver(Eigen::Matrix3cd(H),
                                                                   Eigen::EigenvaluesOnly);
            return solver.eigenvalues().maxCoeff();
        }
        case 4: {
            Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(Eigen::Matrix4cd(H),
                                                                   Eigen::EigenvaluesOnly);
            return solver.eigenvalues().maxCoeff();
        }
        default: {
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(H, Eigen::EigenvaluesOnly);
            return solver.eigenvalues().maxCoeff();
        }
    }
}

Eigen::VectorXcd top_eigenvector(const Eigen::MatrixXcd& H) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(H);
    Eigen::Index best = 0;
    solver.eigenvalues().maxCoeff(&best);
    return solver.eigenvectors().col(best);
}

// Embeds a unit fiber vector at character i, zeros elsewhere.
ModuleVector embed_fiber(const ModuleShape& shape, std::size_t i, const Eigen::VectorXcd& fiber) {
    ModuleVector x = zero_vector(shape);
    x.fibers[i] = fiber;
    return x;
}

Eigen::VectorXcd random_unit_fiber(int dim, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::VectorXcd f(dim);
    for (int k = 0; k < dim; ++k) {
        const double re = normal(gen);
        const double im = normal(gen);
        f[k] = Complex{re, im};
    }
    const double n = f.norm();
    if (n == 0.0) f[0] = Complex{1.0, 0.0};
    else f /= n;
    return f;
}

}  // namespace

double block_operator_norm(const Eigen::MatrixXcd& B) {
    if (B.size() == 0) return 0.0;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(B);
    return svd.singularValues()(0);
}

BlockRadiusResult block_numerical_radius(const Eigen::MatrixXcd& B, int theta_steps,
                                         double refine_tol) {
    if (theta_steps < 8)
        throw std::invalid_argument("block_numerical_radius: theta_steps must be >= 8");

    const Eigen::MatrixXcd Bstar = B.adjoint();
    Eigen::MatrixXcd H(B.rows(), B.cols());
    const auto f = [&](double theta) {
        const Complex phase = std::polar(1.0, theta);
        H.noalias() = 0.5 * phase * B;
        H.noalias() += 0.5 * std::conj(phase) * Bstar;
        return top_eigenvalue(H);
    };

    double best_value = -std::numeric_limits<double>::infinity();
    int best_k = 0;
    for (int k = 0; k < theta_steps; ++k) {
        const double theta = kTwoPi * k / theta_steps;
        const double value = f(theta);
        if (value > best_value) {
            best_value = value;
            best_k = k;
        }
    }

    // Golden-section refinement on the two grid cells around the best sample.
    double a = kTwoPi * (best_k - 1) / theta_steps;
    double b = kTwoPi * (best_k + 1) / theta_steps;
    constexpr double inv_phi = 0.6180339887498949;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > refine_tol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }

    double theta_star = 0.5 * (a + b);
    double value_star = f(theta_star);
    if (best_value > value_star) {  // refinement never loses the grid certificate
        theta_star = kTwoPi * best_k / theta_steps;
        value_star = best_value;
    }
    theta_star = std::fmod(theta_star + kTwoPi, kTwoPi);

    BlockRadiusResult result;
    result.value = value_star;
    result.theta = theta_star;
    result.vector = top_eigenvector(rotated_hermitian_part(B, theta_star));
    return result;
}

SupWitness module_norm(const ModuleOperator& T) {
    SupWitness best;
    best.value = -1.0;
    for (std::size_t i = 0; i < T.blocks.size(); ++i) {
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(T.blocks[i], Eigen::ComputeFullU | Eigen::ComputeFullV);
        const double value = svd.singularValues()(0);
        if (value > best.value) {
            best.value = value;
            best.character = i;
            best.vector = embed_fiber(T.shape, i, svd.matrixV().col(0));
        }
    }
    if (best.value < 0.0) best.value = 0.0;
    return best;
}

SupWitness module_norm_bilinear(const ModuleOperator& T) {
    SupWitness best;
    best.value = -1.0;
    for (std::size_t i = 0; i < T.blocks.size(); ++i) {
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(T.blocks[i], Eigen::ComputeFullU | Eigen::ComputeFullV);
        const double value = svd.singularValues()(0);
        if (value > best.value) {
            best.value = value;
            best.character = i;
            const Eigen::VectorXcd x_fiber = svd.matrixV().col(0);
            best.vector = embed_fiber(T.shape, i, x_fiber);
            // y is the normalized image direction; when the image is zero the
            // candidate keeps value 0 and any unit y is a valid partner.
            Eigen::VectorXcd image = T.blocks[i] * x_fiber;
            const double image_norm = image.norm();
            if (image_norm > 0.0) {
                image /= image_norm;
            } else {
                image = Eigen::VectorXcd::Zero(T.shape.dims[i]);
                image[0] = Complex{1.0, 0.0};
            }
            best.pair = embed_fiber(T.shape, i, image);
        }
    }
    if (best.value < 0.0) best.value = 0.0;
    return best;
}

SupWitness module_numerical_radius(const ModuleOperator& T, int theta_steps, double refine_tol) {
    SupWitness best;
    best.value = -1.0;
    for (std::size_t i = 0; i < T.blocks.size(); ++i) {
        const BlockRadiusResult r = block_numerical_radius(T.blocks[i], theta_steps, refine_tol);
        if (r.value > best.value) {
            best.value = r.value;
            best.character = i;
            best.vector = embed_fiber(T.shape, i, r.vector);
            best.theta = r.theta;
        }
    }
    if (best.value < 0.0) best.value = 0.0;
    return best;
}

RangeSample sample_numerical_range(const ModuleOperator& T, int theta_steps, int interior_samples,
                                   std::uint64_t seed) {
    if (theta_steps < 8)
        throw std::invalid_argument("sample_numerical_range: theta_steps must be >= 8");

    RangeSample sample;
    sample.theta_steps = theta_steps;
    sample.interior_samples = interior_samples;
    sample.seed = seed;
    sample.points.reserve(T.blocks.size() * (theta_steps + std::max(interior_samples, 0)));

    for (std::size_t i = 0; i < T.blocks.size(); ++i) {
        const Eigen::MatrixXcd& B = T.blocks[i];
        for (int k = 0; k < theta_steps; ++k) {
            const double theta = kTwoPi * k / theta_steps;
            const Eigen::VectorXcd v = top_eigenvector(rotated_hermitian_part(B, theta));
            RangePoint p;
            p.character = i;
            p.theta = theta;
            p.witness = v;
            p.value = v.dot(B * v);  // conjugates the first factor: v* B v
            sample.points.push_back(std::move(p));
        }
        for (int s = 0; s < interior_samples; ++s) {
            const Eigen::VectorXcd v =
                random_unit_fiber(T.shape.dims[i], mix_seed(seed, (i << 32) ^ std::uint64_t(s)));
            RangePoint p;
            p.character = i;
            p.witness = v;
            p.value = v.dot(B * v);
            sample.points.push_back(std::move(p));
        }
    }
    return sample;
}

double monte_carlo_sup(const ModuleOperator& T, SupQuantity quantity, int trials,
                       std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("monte_carlo_sup: trials must be >= 1");

    const std::size_t n = T.blocks.size();
    // Buffers reused across trials; draws follow the random_vector stream
    // (ComplexGaussian) so the oracle stays deterministic per (seed, trial).
    std::vector<Eigen::VectorXcd> x(n), y(n), image(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i].resize(T.shape.dims[i]);
        y[i].resize(T.shape.dims[i]);
        image[i].resize(T.shape.dims[i]);
    }
    const auto fill = [&](std::vector<Eigen::VectorXcd>& out, std::uint64_t trial_seed) {
        std::mt19937_64 gen(trial_seed);
        std::normal_distribution<double> normal(0.0, 1.0);
        for (std::size_t i = 0; i < n; ++i)
            for (Eigen::Index k = 0; k < out[i].size(); ++k) {
                const double re = normal(gen);
                const double im = normal(gen);
                out[i][k] = Complex{re, im};
            }
    };

    double best = 0.0;
    for (int t = 0; t < trials; ++t) {
        fill(x, mix_seed(seed, std::uint64_t(t) * 2));
        if (quantity == SupQuantity::Bilinear)
            fill(y, mix_seed(seed, std::uint64_t(t) * 2 + 1));

        for (std::size_t i = 0; i < n; ++i) {
            const double nx = x[i].norm();
            if (nx == 0.0) continue;
            image[i].noalias() = T.blocks[i] * x[i];
            switch (quantity) {
                case SupQuantity::Norm:
                    best = std::max(best, image[i].norm() / nx);
                    break;
                case SupQuantity::Radius:
                    best = std::max(best, std::abs(x[i].dot(image[i])) / (nx * nx));
                    break;
                case SupQuantity::Bilinear: {
                    const double ny = y[i].norm();
                    if (ny > 0.0)
                        best = std::max(best, std::abs(image[i].dot(y[i])) / (nx * ny));
                    // Image-aligned partner: |⟨Tx, Tx/‖Tx‖⟩| = ‖Tx‖. Random
                    // independent pairs alone concentrate too far below the
                    // supremum to be a sharp oracle at fiber dimension 4.
                    best = std::max(best, image[i].norm() / nx);
                    break;
                }
            }
        }
    }
    return best;
}

}  // namespace modrange
