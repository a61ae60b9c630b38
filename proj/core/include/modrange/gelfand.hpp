/*
 * gelfand.hpp — finite Gelfand model of an abelian C*-algebra.
 *
 * The algebra is represented through its character set only: an element is a
 * complex-valued function on a finite set of characters, and every character
 * acts as evaluation at one coordinate. Products, sums and the involution are
 * pointwise, which makes every character a *-homomorphism by construction.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace modrange {

using Complex = std::complex<double>;

// Absolute tolerance used when deciding positivity of algebra elements.
// Inner products of floating-point vectors leave tiny negative/imaginary dust.
inline constexpr double kPositivityTol = 1e-10;

/// Finite Gelfand spectrum: `size` characters, optionally labelled for reports.
struct CharacterSpace {
    std::size_t size = 1;
    std::vector<std::string> labels;  // empty, or exactly `size` entries

    CharacterSpace() = default;
    explicit CharacterSpace(std::size_t n, std::vector<std::string> character_labels = {});

    // Two spaces are compatible when they index the same number of characters.
    friend bool operator==(const CharacterSpace& a, const CharacterSpace& b) {
        return a.size == b.size;
    }
};

/// Element of the abelian algebra as a function on the character set.
struct AlgebraElement {
    CharacterSpace space;
    std::vector<Complex> values;

    AlgebraElement() = default;
    AlgebraElement(CharacterSpace character_space, std::vector<Complex> character_values);
};

AlgebraElement unit_element(const CharacterSpace& space);
AlgebraElement zero_element(const CharacterSpace& space);

/// Evaluation of `a` under character `i`. Multiplicative and *-preserving.
Complex apply_character(const AlgebraElement& a, std::size_t i);

AlgebraElement algebra_add(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement algebra_mul(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement algebra_star(const AlgebraElement& a);

/// True iff every value has |Im| <= tol and Re >= -tol.
bool is_positive(const AlgebraElement& a, double tol = kPositivityTol);

/// Pointwise nonnegative square root of a positive element.
/// Imaginary dust is clamped to zero. Throws std::domain_error otherwise.
AlgebraElement sqrt_positive(const AlgebraElement& a, double tol = kPositivityTol);

}  // namespace modrange
