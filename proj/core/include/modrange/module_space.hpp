/*
 * module_space.hpp — the Hilbert module E = ⊕_i C^{d_i} over the finite
 * Gelfand model.
 *
 * A module vector holds one complex coordinate vector ("fiber") per character.
 * The algebra-valued inner product is computed fiberwise and is
 * conjugate-linear in the FIRST argument, linear in the second. The modulus
 * |x| is the algebra element whose value at character i is the Euclidean norm
 * of fiber i.
 */
#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "modrange/gelfand.hpp"

namespace modrange {

/// Shape of the module: the character space plus one fiber dimension per character.
struct ModuleShape {
    CharacterSpace space;
    std::vector<int> dims;  // every entry >= 1

    ModuleShape() = default;
    ModuleShape(CharacterSpace character_space, std::vector<int> fiber_dims);

    friend bool operator==(const ModuleShape& a, const ModuleShape& b) {
        return a.space == b.space && a.dims == b.dims;
    }
};

struct ModuleVector {
    ModuleShape shape;
    std::vector<Eigen::VectorXcd> fibers;

    ModuleVector() = default;
    ModuleVector(ModuleShape vector_shape, std::vector<Eigen::VectorXcd> vector_fibers);
};

ModuleVector zero_vector(const ModuleShape& shape);

/// ⟨x,y⟩ with component i = Σ_k conj(x_i[k])·y_i[k].
AlgebraElement inner_product(const ModuleVector& x, const ModuleVector& y);

/// Right module action: fiber i of x·a is a_i·x_i.
ModuleVector module_action(const ModuleVector& x, const AlgebraElement& a);

/// |x| = ⟨x,x⟩^{1/2}: component i is the Euclidean norm of fiber i.
AlgebraElement modulus(const ModuleVector& x);

/// x scaled by 1/|x|_i, so the result has unit fiber norm at character i.
/// Throws std::domain_error when fiber i has zero norm.
ModuleVector normalize_at(const ModuleVector& x, std::size_t i);

ModuleVector vec_add(const ModuleVector& x, const ModuleVector& y);
ModuleVector vec_sub(const ModuleVector& x, const ModuleVector& y);
ModuleVector vec_scale(Complex alpha, const ModuleVector& x);

enum class RandomDistribution { ComplexGaussian, UniformEntries };

/// Deterministic pseudo-random vector; complex standard normal entries by default.
ModuleVector random_vector(const ModuleShape& shape, std::uint64_t seed,
                           RandomDistribution dist = RandomDistribution::ComplexGaussian);

}  // namespace modrange
