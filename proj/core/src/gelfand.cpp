#include "modrange/gelfand.hpp"

#include <cmath>
#include <stdexcept>

namespace modrange {

CharacterSpace::CharacterSpace(std::size_t n, std::vector<std::string> character_labels)
    : size(n), labels(std::move(character_labels)) {
    if (size < 1) throw std::invalid_argument("CharacterSpace: size must be >= 1");
    if (!labels.empty() && labels.size() != size)
        throw std::invalid_argument("CharacterSpace: labels must match size");
}

AlgebraElement::AlgebraElement(CharacterSpace character_space, std::vector<Complex> character_values)
    : space(std::move(character_space)), values(std::move(character_values)) {
    if (values.size() != space.size)
        throw std::invalid_argument("AlgebraElement: values must have one entry per character");
}

AlgebraElement unit_element(const CharacterSpace& space) {
    return {space, std::vector<Complex>(space.size, Complex{1.0, 0.0})};
}

AlgebraElement zero_element(const CharacterSpace& space) {
    return {space, std::vector<Complex>(space.size, Complex{0.0, 0.0})};
}

Complex apply_character(const AlgebraElement& a, std::size_t i) {
    if (i >= a.space.size) throw std::invalid_argument("apply_character: index out of range");
    return a.values[i];
}

namespace {
void require_same_space(const AlgebraElement& a, const AlgebraElement& b, const char* op) {
    if (!(a.space == b.space))
        throw std::invalid_argument(std::string(op) + ": mismatched character spaces");
}
}  // namespace

AlgebraElement algebra_add(const AlgebraElement& a, const AlgebraElement& b) {
    require_same_space(a, b, "algebra_add");
    std::vector<Complex> out(a.values.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.values[i] + b.values[i];
    return {a.space, std::move(out)};
}

AlgebraElement algebra_mul(const AlgebraElement& a, const AlgebraElement& b) {
    require_same_space(a, b, "algebra_mul");
    std::vector<Complex> out(a.values.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.values[i] * b.values[i];
    return {a.space, std::move(out)};
}

AlgebraElement algebra_star(const AlgebraElement& a) {
    std::vector<Complex> out(a.values.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::conj(a.values[i]);
    return {a.space, std::move(out)};
}

bool is_positive(const AlgebraElement& a, double tol) {
    if (tol < 0) throw std::invalid_argument("is_positive: tol must be >= 0");
    for (const Complex& v : a.values) {
        if (std::abs(v.imag()) > tol || v.real() < -tol) return false;
    }
    return true;
}

AlgebraElement sqrt_positive(const AlgebraElement& a, double tol) {
    if (!is_positive(a, tol)) throw std::domain_error("sqrt_positive: element is not positive");
    std::vector<Complex> out(a.values.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double re = std::max(a.values[i].real(), 0.0);
        out[i] = Complex{std::sqrt(re), 0.0};
    }
    return {a.space, std::move(out)};
}

}  // namespace modrange
