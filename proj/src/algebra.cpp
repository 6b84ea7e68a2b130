#include "zinbiel/algebra.hpp"

namespace zinbiel {

namespace {
const Scalar kZero{};
}

void AlgebraTable::check_index(std::size_t i, std::size_t j, std::size_t k) const {
    if (i < 1 || i > n_ || j < 1 || j > n_ || k < 1 || k > n_)
        throw Error(ErrorCode::DimensionMismatch, "structure constant index out of range");
}

void AlgebraTable::add(std::size_t i, std::size_t j, std::size_t k, const Scalar& c) {
    check_index(i, j, k);
    if (c.is_zero()) return;
    auto& block = products_[{i, j}];
    auto it = block.find(k);
    if (it == block.end()) {
        block.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) block.erase(it);
    }
    if (block.empty()) products_.erase({i, j});
}

void AlgebraTable::set(std::size_t i, std::size_t j, std::size_t k, const Scalar& c) {
    check_index(i, j, k);
    auto& block = products_[{i, j}];
    if (c.is_zero()) {
        block.erase(k);
        if (block.empty()) products_.erase({i, j});
    } else {
        block[k] = c;
    }
}

const Scalar& AlgebraTable::constant(std::size_t i, std::size_t j, std::size_t k) const {
    check_index(i, j, k);
    auto it = products_.find({i, j});
    if (it == products_.end()) return kZero;
    auto kt = it->second.find(k);
    return kt == it->second.end() ? kZero : kt->second;
}

Vector AlgebraTable::basis_product(std::size_t i, std::size_t j) const {
    check_index(i, j, 1);
    Vector out = zero_vector(n_);
    auto it = products_.find({i, j});
    if (it != products_.end())
        for (const auto& [k, c] : it->second) out[k - 1] = c;
    return out;
}

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector basis_vector(std::size_t n, std::size_t i) {
    Vector v(n);
    v[i - 1] = Scalar(1);
    return v;
}

bool is_zero_vector(const Vector& v) {
    for (const auto& c : v)
        if (!c.is_zero()) return false;
    return true;
}

Vector multiply(const AlgebraTable& A, const Vector& u, const Vector& v) {
    if (u.size() != A.dim() || v.size() != A.dim())
        throw Error(ErrorCode::DimensionMismatch, "vector/table dimension mismatch");
    Vector out = zero_vector(A.dim());
    for (const auto& [ij, block] : A.products()) {
        const Scalar& ui = u[ij.first - 1];
        if (ui.is_zero()) continue;
        const Scalar& vj = v[ij.second - 1];
        if (vj.is_zero()) continue;
        Scalar uv = ui * vj;
        for (const auto& [k, c] : block) out[k - 1] += uv * c;
    }
    return out;
}

Vector zinbiel_defect(const AlgebraTable& A, const Vector& a, const Vector& b,
                      const Vector& c) {
    Vector ab_c = multiply(A, multiply(A, a, b), c);
    Vector a_bc = multiply(A, a, multiply(A, b, c));
    Vector a_cb = multiply(A, a, multiply(A, c, b));
    Vector out = zero_vector(A.dim());
    for (std::size_t t = 0; t < A.dim(); ++t)
        out[t] = ab_c[t] - a_bc[t] - a_cb[t];
    return out;
}

ZinbielVerdict is_zinbiel(const AlgebraTable& A) {
    const std::size_t n = A.dim();
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            for (std::size_t k = 1; k <= n; ++k) {
                Vector d = zinbiel_defect(A, basis_vector(n, i), basis_vector(n, j),
                                          basis_vector(n, k));
                if (!is_zero_vector(d)) return {false, i, j, k, std::move(d)};
            }
    return {};
}

} // namespace zinbiel
