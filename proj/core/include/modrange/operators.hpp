/*
 * operators.hpp — adjointable operators on the finite module model.
 *
 * Over an algebra of functions on n points acting componentwise, algebra
 * linearity against the n indicator idempotents forces every adjointable map
 * to preserve each fiber. Operators are therefore stored as block-diagonal
 * families {T_i}, one d_i×d_i complex block per character; block-diagonality
 * is a theorem of the model, not a restriction.
 */
#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "modrange/module_space.hpp"

namespace modrange {

// Default absolute entry tolerance for structural predicates.
inline constexpr double kPredicateTol = 1e-10;

struct ModuleOperator {
    ModuleShape shape;
    std::vector<Eigen::MatrixXcd> blocks;  // block i is d_i × d_i

    ModuleOperator() = default;
    ModuleOperator(ModuleShape operator_shape, std::vector<Eigen::MatrixXcd> operator_blocks);
};

ModuleOperator identity_operator(const ModuleShape& shape);
ModuleOperator zero_operator(const ModuleShape& shape);

/// Fiber i of Tx is T_i·x_i.
ModuleVector apply(const ModuleOperator& T, const ModuleVector& x);

/// Blockwise conjugate transpose; satisfies ⟨Tx,y⟩ = ⟨x,T*y⟩ exactly.
ModuleOperator adjoint(const ModuleOperator& T);

ModuleOperator op_add(const ModuleOperator& T, const ModuleOperator& S);
ModuleOperator op_scale(Complex alpha, const ModuleOperator& T);
ModuleOperator op_compose(const ModuleOperator& T, const ModuleOperator& S);

bool is_self_adjoint(const ModuleOperator& T, double tol = kPredicateTol);
bool is_unitary(const ModuleOperator& T, double tol = kPredicateTol);

/// Cartesian decomposition T = M + iN with M = (T+T*)/2, N = (T-T*)/(2i),
/// both self-adjoint. Satisfies T*T + TT* = 2(M² + N²).
std::pair<ModuleOperator, ModuleOperator> cartesian_parts(const ModuleOperator& T);

}  // namespace modrange
