#include "modrange/cx_model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace modrange {

namespace {

ModuleShape shape_for(std::size_t m) {
    return {CharacterSpace{m}, std::vector<int>(m, 1)};
}

}  // namespace

DiscretizedSpace make_interval(int m) {
    if (m < 1) throw std::invalid_argument("make_interval: m must be >= 1");
    DiscretizedSpace space;
    space.kind = SpaceKind::Interval;
    space.points.reserve(m);
    for (int j = 0; j < m; ++j) space.points.push_back(m == 1 ? 0.0 : double(j) / (m - 1));
    space.shape = shape_for(std::size_t(m));
    return space;
}

DiscretizedSpace make_circle(int m) {
    if (m < 1) throw std::invalid_argument("make_circle: m must be >= 1");
    DiscretizedSpace space;
    space.kind = SpaceKind::Circle;
    space.points.reserve(m);
    for (int j = 0; j < m; ++j) space.points.push_back(2.0 * std::numbers::pi * j / m);
    space.shape = shape_for(std::size_t(m));
    return space;
}

DiscretizedSpace make_custom(std::vector<double> points) {
    if (points.empty()) throw std::invalid_argument("make_custom: points must be non-empty");
    DiscretizedSpace space;
    space.kind = SpaceKind::Custom;
    space.shape = shape_for(points.size());
    space.points = std::move(points);
    return space;
}

MultiplicationOperator build_multiplication(const DiscretizedSpace& space,
                                            const std::function<Complex(double)>& g) {
    if (!g) throw std::invalid_argument("build_multiplication: symbol function is empty");
    std::vector<Complex> values;
    values.reserve(space.points.size());
    for (double x : space.points) values.push_back(g(x));
    return build_multiplication(space, std::move(values));
}

MultiplicationOperator build_multiplication(const DiscretizedSpace& space,
                                            std::vector<Complex> values) {
    if (values.size() != space.points.size())
        throw std::invalid_argument("build_multiplication: one symbol value per sample point required");
    std::vector<Eigen::MatrixXcd> blocks;
    blocks.reserve(values.size());
    for (const Complex& v : values) {
        Eigen::MatrixXcd b(1, 1);
        b(0, 0) = v;
        blocks.push_back(std::move(b));
    }
    MultiplicationOperator M;
    M.symbol = std::move(values);
    M.op = ModuleOperator{space.shape, std::move(blocks)};
    return M;
}

std::vector<CheckResult> check_cx_identities(const MultiplicationOperator& M, double tol) {
    std::vector<CheckResult> results;

    double sup_symbol = 0.0;
    double max_imag = 0.0;
    for (const Complex& v : M.symbol) {
        sup_symbol = std::max(sup_symbol, std::abs(v));
        max_imag = std::max(max_imag, std::abs(v.imag()));
    }

    const double norm = module_norm(M.op).value;
    CheckResult norm_check;
    norm_check.name = "cx_norm_equals_sup_symbol";
    norm_check.lhs = norm;
    norm_check.rhs = sup_symbol;
    norm_check.margin = std::abs(norm - sup_symbol);
    norm_check.passed = norm_check.margin <= tol * (1.0 + sup_symbol);
    results.push_back(std::move(norm_check));

    if (max_imag <= tol) {  // real symbol: the operator is self-adjoint
        const double radius = module_numerical_radius(M.op).value;
        CheckResult radius_check;
        radius_check.name = "cx_radius_equals_norm";
        radius_check.lhs = radius;
        radius_check.rhs = norm;
        radius_check.margin = std::abs(radius - norm);
        radius_check.passed = radius_check.margin <= tol * (1.0 + norm);
        results.push_back(std::move(radius_check));
    }

    return results;
}

}  // namespace modrange
