#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zinbiel/scalar.hpp"

namespace zinbiel {

/// Coordinate vector over the scalar fraction field.
using Vector = std::vector<Scalar>;

/// Algebra given by structure constants: e_i o e_j = sum_k c[i][j][k] e_k.
/// Indices are 1-based; absent entries are zero.
class AlgebraTable {
public:
    AlgebraTable(std::size_t n, std::vector<std::string> params = {},
                 std::vector<std::string> labels = {})
        : n_(n), params_(std::move(params)), labels_(std::move(labels)) {}

    std::size_t dim() const { return n_; }
    const std::vector<std::string>& params() const { return params_; }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Adds c to the e_k component of e_i o e_j.
    void add(std::size_t i, std::size_t j, std::size_t k, const Scalar& c);
    /// Overwrites the e_k component of e_i o e_j.
    void set(std::size_t i, std::size_t j, std::size_t k, const Scalar& c);

    const Scalar& constant(std::size_t i, std::size_t j, std::size_t k) const;
    /// e_i o e_j as a coordinate vector.
    Vector basis_product(std::size_t i, std::size_t j) const;

    /// Nonzero (i, j) -> {k -> coeff} blocks in lexicographic order.
    const std::map<std::pair<std::size_t, std::size_t>, std::map<std::size_t, Scalar>>&
    products() const { return products_; }

    bool operator==(const AlgebraTable& o) const {
        return n_ == o.n_ && products_ == o.products_;
    }

private:
    void check_index(std::size_t i, std::size_t j, std::size_t k) const;

    std::size_t n_;
    std::vector<std::string> params_;
    std::vector<std::string> labels_;
    std::map<std::pair<std::size_t, std::size_t>, std::map<std::size_t, Scalar>> products_;
};

Vector zero_vector(std::size_t n);
Vector basis_vector(std::size_t n, std::size_t i); // 1-based
bool is_zero_vector(const Vector& v);

/// Bilinear extension of the table: (u o v)_k = sum u_i v_j c[i][j][k].
Vector multiply(const AlgebraTable& A, const Vector& u, const Vector& v);

/// Z(a,b,c) = (a o b) o c - a o (b o c) - a o (c o b).
Vector zinbiel_defect(const AlgebraTable& A, const Vector& a, const Vector& b,
                      const Vector& c);

struct ZinbielVerdict {
    bool holds = true;
    std::size_t i = 0, j = 0, k = 0; // first failing basis triple
    Vector defect;
};

/// Checks Z(e_i, e_j, e_k) = 0 for all n^3 basis triples, symbolically in
/// the parameters; by trilinearity this decides the identity for all
/// vectors and all parameter values.
ZinbielVerdict is_zinbiel(const AlgebraTable& A);

} // namespace zinbiel
