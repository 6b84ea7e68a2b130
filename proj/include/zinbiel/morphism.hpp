#pragma once

#include <optional>
#include <string>

#include "zinbiel/structure.hpp"

namespace zinbiel {

/// Basis change: column j holds the image of basis vector e_j in the
/// target coordinates.  Invertibility means det != 0 as a rational
/// function, i.e. for generic parameter values.
class LinearMap {
public:
    /// columns[j] = image of e_{j+1}.
    static LinearMap from_columns(const std::vector<Vector>& columns);
    static LinearMap identity(std::size_t n);
    static LinearMap diagonal(const Vector& entries);

    std::size_t dim() const { return n_; }
    const std::vector<Vector>& matrix() const { return rows_; } // row-major
    const Scalar& det() const { return det_; }
    bool invertible() const { return !det_.is_zero(); }

    Vector apply(const Vector& v) const;
    Vector column(std::size_t j) const; // 1-based

    LinearMap compose(const LinearMap& inner) const; // this . inner

private:
    LinearMap(std::size_t n, std::vector<Vector> rows);

    std::size_t n_;
    std::vector<Vector> rows_;
    Scalar det_;
};

/// Push-forward of the product along M: the unique table B with
/// M(x o_A y) = M(x) o_B M(y), i.e. M is an isomorphism A -> B.
/// transport(A, identity) = A and transport(A, N.compose(M)) =
/// transport(transport(A, M), N).
AlgebraTable transport(const AlgebraTable& A, const LinearMap& M);

struct IsoVerdict {
    bool yes = true;
    std::size_t i = 0, j = 0; // first failing basis pair
    std::string detail;
};

/// Yes iff M is invertible and M(e_i o_A e_j) = M(e_i) o_B M(e_j) for all
/// basis pairs, i.e. M : A -> B is an algebra isomorphism.
IsoVerdict is_isomorphism(const AlgebraTable& A, const AlgebraTable& B, const LinearMap& M);

struct NonIsoCertificate {
    std::string invariant; // first differing fingerprint component
    Fingerprint fp_a, fp_b;
};

/// Distinguishing invariant when fingerprints differ; nothing when they
/// agree (inconclusive, not a proof of isomorphism).
std::optional<NonIsoCertificate> noniso_certificate(const AlgebraTable& A,
                                                    const AlgebraTable& B);

} // namespace zinbiel
