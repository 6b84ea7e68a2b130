#include "zinbiel/morphism.hpp"

#include <sstream>

namespace zinbiel {

LinearMap::LinearMap(std::size_t n, std::vector<Vector> rows)
    : n_(n), rows_(std::move(rows)), det_(determinant(rows_)) {}

LinearMap LinearMap::from_columns(const std::vector<Vector>& columns) {
    const std::size_t n = columns.size();
    std::vector<Vector> rows(n, Vector(n));
    for (std::size_t j = 0; j < n; ++j) {
        if (columns[j].size() != n)
            throw Error(ErrorCode::DimensionMismatch, "column length mismatch");
        for (std::size_t i = 0; i < n; ++i) rows[i][j] = columns[j][i];
    }
    return LinearMap(n, std::move(rows));
}

LinearMap LinearMap::identity(std::size_t n) {
    std::vector<Vector> rows(n, Vector(n));
    for (std::size_t i = 0; i < n; ++i) rows[i][i] = Scalar(1);
    return LinearMap(n, std::move(rows));
}

LinearMap LinearMap::diagonal(const Vector& entries) {
    const std::size_t n = entries.size();
    std::vector<Vector> rows(n, Vector(n));
    for (std::size_t i = 0; i < n; ++i) rows[i][i] = entries[i];
    return LinearMap(n, std::move(rows));
}

Vector LinearMap::apply(const Vector& v) const {
    if (v.size() != n_)
        throw Error(ErrorCode::DimensionMismatch, "vector/map dimension mismatch");
    Vector out(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            if (!v[j].is_zero() && !rows_[i][j].is_zero()) out[i] += rows_[i][j] * v[j];
    return out;
}

Vector LinearMap::column(std::size_t j) const {
    Vector out(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i] = rows_[i][j - 1];
    return out;
}

LinearMap LinearMap::compose(const LinearMap& inner) const {
    if (inner.n_ != n_)
        throw Error(ErrorCode::DimensionMismatch, "map composition dimension mismatch");
    std::vector<Vector> rows(n_, Vector(n_));
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            for (std::size_t k = 0; k < n_; ++k)
                if (!rows_[i][k].is_zero() && !inner.rows_[k][j].is_zero())
                    rows[i][j] += rows_[i][k] * inner.rows_[k][j];
    return LinearMap(n_, std::move(rows));
}

AlgebraTable transport(const AlgebraTable& A, const LinearMap& M) {
    const std::size_t n = A.dim();
    if (M.dim() != n)
        throw Error(ErrorCode::DimensionMismatch, "map/table dimension mismatch");
    if (!M.invertible())
        throw Error(ErrorCode::SingularMap, "basis change matrix is singular");
    std::vector<Vector> inv = invert_matrix(M.matrix());
    auto inv_column = [&](std::size_t j) {
        Vector out(n);
        for (std::size_t i = 0; i < n; ++i) out[i] = inv[i][j - 1];
        return out;
    };

    AlgebraTable B(n, A.params(), A.labels());
    for (std::size_t i = 1; i <= n; ++i) {
        Vector fi = inv_column(i);
        for (std::size_t j = 1; j <= n; ++j) {
            Vector p = multiply(A, fi, inv_column(j));
            if (is_zero_vector(p)) continue;
            Vector image = M.apply(p);
            for (std::size_t k = 1; k <= n; ++k)
                if (!image[k - 1].is_zero()) B.set(i, j, k, image[k - 1]);
        }
    }
    return B;
}

IsoVerdict is_isomorphism(const AlgebraTable& A, const AlgebraTable& B, const LinearMap& M) {
    const std::size_t n = A.dim();
    if (B.dim() != n || M.dim() != n)
        throw Error(ErrorCode::DimensionMismatch, "isomorphism check dimension mismatch");
    if (!M.invertible()) return {false, 0, 0, "map is singular"};
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
            Vector lhs = M.apply(A.basis_product(i, j));
            Vector rhs = multiply(B, M.column(i), M.column(j));
            for (std::size_t k = 0; k < n; ++k)
                if (lhs[k] != rhs[k]) {
                    std::ostringstream msg;
                    msg << "M(e_" << i << " o e_" << j << ") != M(e_" << i
                        << ") o M(e_" << j << ")";
                    return {false, i, j, msg.str()};
                }
        }
    return {};
}

std::optional<NonIsoCertificate> noniso_certificate(const AlgebraTable& A,
                                                    const AlgebraTable& B) {
    Fingerprint fa = fingerprint(A);
    Fingerprint fb = fingerprint(B);
    auto diff = Fingerprint::first_difference(fa, fb);
    if (!diff) return std::nullopt;
    return NonIsoCertificate{*diff, std::move(fa), std::move(fb)};
}

} // namespace zinbiel
