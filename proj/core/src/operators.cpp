#include "modrange/operators.hpp"

#include <stdexcept>

namespace modrange {

ModuleOperator::ModuleOperator(ModuleShape operator_shape, std::vector<Eigen::MatrixXcd> operator_blocks)
    : shape(std::move(operator_shape)), blocks(std::move(operator_blocks)) {
    if (blocks.size() != shape.dims.size())
        throw std::invalid_argument("ModuleOperator: block count must match shape");
    for (std::size_t i = 0; i < blocks.size(); ++i)
        if (blocks[i].rows() != shape.dims[i] || blocks[i].cols() != shape.dims[i])
            throw std::invalid_argument("ModuleOperator: block i must be d_i x d_i");
}

ModuleOperator identity_operator(const ModuleShape& shape) {
    std::vector<Eigen::MatrixXcd> blocks;
    blocks.reserve(shape.dims.size());
    for (int d : shape.dims) blocks.push_back(Eigen::MatrixXcd::Identity(d, d));
    return {shape, std::move(blocks)};
}

ModuleOperator zero_operator(const ModuleShape& shape) {
    std::vector<Eigen::MatrixXcd> blocks;
    blocks.reserve(shape.dims.size());
    for (int d : shape.dims) blocks.push_back(Eigen::MatrixXcd::Zero(d, d));
    return {shape, std::move(blocks)};
}

namespace {
void require_same_shape(const ModuleOperator& T, const ModuleOperator& S, const char* op) {
    if (!(T.shape == S.shape))
        throw std::invalid_argument(std::string(op) + ": mismatched module shapes");
}
}  // namespace

ModuleVector apply(const ModuleOperator& T, const ModuleVector& x) {
    if (!(T.shape == x.shape)) throw std::invalid_argument("apply: mismatched module shapes");
    std::vector<Eigen::VectorXcd> fibers(x.fibers.size());
    for (std::size_t i = 0; i < fibers.size(); ++i) fibers[i] = T.blocks[i] * x.fibers[i];
    return {x.shape, std::move(fibers)};
}

ModuleOperator adjoint(const ModuleOperator& T) {
    std::vector<Eigen::MatrixXcd> blocks(T.blocks.size());
    for (std::size_t i = 0; i < blocks.size(); ++i) blocks[i] = T.blocks[i].adjoint();
    return {T.shape, std::move(blocks)};
}

ModuleOperator op_add(const ModuleOperator& T, const ModuleOperator& S) {
    require_same_shape(T, S, "op_add");
    std::vector<Eigen::MatrixXcd> blocks(T.blocks.size());
    for (std::size_t i = 0; i < blocks.size(); ++i) blocks[i] = T.blocks[i] + S.blocks[i];
    return {T.shape, std::move(blocks)};
}

ModuleOperator op_scale(Complex alpha, const ModuleOperator& T) {
    std::vector<Eigen::MatrixXcd> blocks(T.blocks.size());
    for (std::size_t i = 0; i < blocks.size(); ++i) blocks[i] = alpha * T.blocks[i];
    return {T.shape, std::move(blocks)};
}

ModuleOperator op_compose(const ModuleOperator& T, const ModuleOperator& S) {
    require_same_shape(T, S, "op_compose");
    std::vector<Eigen::MatrixXcd> blocks(T.blocks.size());
    for (std::size_t i = 0; i < blocks.size(); ++i) blocks[i] = T.blocks[i] * S.blocks[i];
    return {T.shape, std::move(blocks)};
}

bool is_self_adjoint(const ModuleOperator& T, double tol) {
    for (const auto& B : T.blocks)
        if ((B - B.adjoint()).cwiseAbs().maxCoeff() > tol) return false;
    return true;
}

bool is_unitary(const ModuleOperator& T, double tol) {
    for (const auto& B : T.blocks) {
        const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(B.rows(), B.cols());
        if ((B.adjoint() * B - I).cwiseAbs().maxCoeff() > tol) return false;
        if ((B * B.adjoint() - I).cwiseAbs().maxCoeff() > tol) return false;
    }
    return true;
}

std::pair<ModuleOperator, ModuleOperator> cartesian_parts(const ModuleOperator& T) {
    std::vector<Eigen::MatrixXcd> m_blocks(T.blocks.size());
    std::vector<Eigen::MatrixXcd> n_blocks(T.blocks.size());
    const Complex half{0.5, 0.0};
    const Complex half_over_i{0.0, -0.5};  // 1/(2i)
    for (std::size_t i = 0; i < T.blocks.size(); ++i) {
        const Eigen::MatrixXcd adj = T.blocks[i].adjoint();
        m_blocks[i] = half * (T.blocks[i] + adj);
        n_blocks[i] = half_over_i * (T.blocks[i] - adj);
    }
    return {ModuleOperator{T.shape, std::move(m_blocks)}, ModuleOperator{T.shape, std::move(n_blocks)}};
}

}  // namespace modrange
