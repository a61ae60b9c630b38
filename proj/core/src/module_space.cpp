#include "modrange/module_space.hpp"

#include <random>
#include <stdexcept>

namespace modrange {

ModuleShape::ModuleShape(CharacterSpace character_space, std::vector<int> fiber_dims)
    : space(std::move(character_space)), dims(std::move(fiber_dims)) {
    if (dims.size() != space.size)
        throw std::invalid_argument("ModuleShape: dims must have one entry per character");
    for (int d : dims)
        if (d < 1) throw std::invalid_argument("ModuleShape: every fiber dimension must be >= 1");
}

ModuleVector::ModuleVector(ModuleShape vector_shape, std::vector<Eigen::VectorXcd> vector_fibers)
    : shape(std::move(vector_shape)), fibers(std::move(vector_fibers)) {
    if (fibers.size() != shape.dims.size())
        throw std::invalid_argument("ModuleVector: fiber count must match shape");
    for (std::size_t i = 0; i < fibers.size(); ++i)
        if (fibers[i].size() != shape.dims[i])
            throw std::invalid_argument("ModuleVector: fiber length must match dims");
}

ModuleVector zero_vector(const ModuleShape& shape) {
    std::vector<Eigen::VectorXcd> fibers;
    fibers.reserve(shape.dims.size());
    for (int d : shape.dims) fibers.push_back(Eigen::VectorXcd::Zero(d));
    return {shape, std::move(fibers)};
}

namespace {
void require_same_shape(const ModuleVector& x, const ModuleVector& y, const char* op) {
    if (!(x.shape == y.shape))
        throw std::invalid_argument(std::string(op) + ": mismatched module shapes");
}
}  // namespace

AlgebraElement inner_product(const ModuleVector& x, const ModuleVector& y) {
    require_same_shape(x, y, "inner_product");
    std::vector<Complex> out(x.fibers.size());
    for (std::size_t i = 0; i < x.fibers.size(); ++i)
        out[i] = x.fibers[i].dot(y.fibers[i]);  // Eigen dot conjugates the first factor
    return {x.shape.space, std::move(out)};
}

ModuleVector module_action(const ModuleVector& x, const AlgebraElement& a) {
    if (!(x.shape.space == a.space))
        throw std::invalid_argument("module_action: mismatched character spaces");
    std::vector<Eigen::VectorXcd> fibers(x.fibers.size());
    for (std::size_t i = 0; i < x.fibers.size(); ++i) fibers[i] = a.values[i] * x.fibers[i];
    return {x.shape, std::move(fibers)};
}

AlgebraElement modulus(const ModuleVector& x) {
    std::vector<Complex> out(x.fibers.size());
    for (std::size_t i = 0; i < x.fibers.size(); ++i) out[i] = Complex{x.fibers[i].norm(), 0.0};
    return {x.shape.space, std::move(out)};
}

ModuleVector normalize_at(const ModuleVector& x, std::size_t i) {
    if (i >= x.fibers.size()) throw std::invalid_argument("normalize_at: index out of range");
    const double norm_i = x.fibers[i].norm();
    if (norm_i == 0.0) throw std::domain_error("normalize_at: zero fiber norm at character");
    return vec_scale(Complex{1.0 / norm_i, 0.0}, x);
}

ModuleVector vec_add(const ModuleVector& x, const ModuleVector& y) {
    require_same_shape(x, y, "vec_add");
    std::vector<Eigen::VectorXcd> fibers(x.fibers.size());
    for (std::size_t i = 0; i < fibers.size(); ++i) fibers[i] = x.fibers[i] + y.fibers[i];
    return {x.shape, std::move(fibers)};
}

ModuleVector vec_sub(const ModuleVector& x, const ModuleVector& y) {
    require_same_shape(x, y, "vec_sub");
    std::vector<Eigen::VectorXcd> fibers(x.fibers.size());
    for (std::size_t i = 0; i < fibers.size(); ++i) fibers[i] = x.fibers[i] - y.fibers[i];
    return {x.shape, std::move(fibers)};
}

ModuleVector vec_scale(Complex alpha, const ModuleVector& x) {
    std::vector<Eigen::VectorXcd> fibers(x.fibers.size());
    for (std::size_t i = 0; i < fibers.size(); ++i) fibers[i] = alpha * x.fibers[i];
    return {x.shape, std::move(fibers)};
}

ModuleVector random_vector(const ModuleShape& shape, std::uint64_t seed, RandomDistribution dist) {
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::uniform_real_distribution<double> uniform(-1.0, 1.0);
    std::vector<Eigen::VectorXcd> fibers;
    fibers.reserve(shape.dims.size());
    for (int d : shape.dims) {
        Eigen::VectorXcd f(d);
        for (int k = 0; k < d; ++k) {
            if (dist == RandomDistribution::ComplexGaussian) {
                const double re = normal(gen);
                const double im = normal(gen);
                f[k] = Complex{re, im};
            } else {
                const double re = uniform(gen);
                const double im = uniform(gen);
                f[k] = Complex{re, im};
            }
        }
        fibers.push_back(std::move(f));
    }
    return {shape, std::move(fibers)};
}

}  // namespace modrange
