#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zinbiel/algebra.hpp"

namespace zinbiel {

/// Canonical subspace: reduced row-echelon basis over the scalar fraction
/// field.  Pivots are 1, pivot columns are strictly increasing and clear
/// elsewhere; rank = number of rows.
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}
    Subspace(std::size_t ambient_dim, std::vector<Vector> rref_rows,
             std::vector<std::size_t> pivots)
        : ambient_(ambient_dim), rows_(std::move(rref_rows)), pivots_(std::move(pivots)) {}

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<Vector>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; } // 0-based columns

    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && rows_ == o.rows_;
    }

private:
    std::size_t ambient_;
    std::vector<Vector> rows_;
    std::vector<std::size_t> pivots_;
};

/// Canonical reduced echelon basis of the span; fraction-free (Bareiss)
/// forward elimination, then pivot normalization.  Rank is generic rank in
/// the parameters.
Subspace echelonize(std::size_t ambient_dim, const std::vector<Vector>& vectors);

/// Reduced row-echelon form of an arbitrary matrix, with pivot columns.
struct RrefResult {
    std::vector<Vector> rows; // nonzero rows only
    std::vector<std::size_t> pivots;
};
RrefResult rref(std::vector<Vector> rows);

/// Right kernel {x : M x = 0} of the matrix with the given rows, as a
/// canonical subspace of the column space.
Subspace kernel(std::size_t ncols, const std::vector<Vector>& rows);

/// Exact determinant of a square Scalar matrix.
Scalar determinant(std::vector<Vector> rows);

/// Exact inverse; throws SingularMap when the generic determinant is zero.
std::vector<Vector> invert_matrix(const std::vector<Vector>& rows);

/// span{u o v : u in basis(U), v in basis(V)}.
Subspace subspace_product(const AlgebraTable& A, const Subspace& U, const Subspace& V);

/// A^1 = A, A^{k+1} = A o A^k, down to the zero subspace (inclusive).
/// Throws NotNilpotentWithinBound if the series stabilizes at nonzero rank
/// within n+2 steps.
std::vector<Subspace> lower_central_series(const AlgebraTable& A);

std::vector<std::size_t> series_dims(const std::vector<Subspace>& series);

/// Minimal s with A^s = 0.
std::size_t nilindex(const AlgebraTable& A);

enum class FiliformClass { zero_filiform, filiform, quasi_filiform, other };
const char* filiform_class_name(FiliformClass c);

FiliformClass classify_filiformity(const AlgebraTable& A);

Subspace left_annihilator(const AlgebraTable& A);
Subspace right_annihilator(const AlgebraTable& A);

/// Ranks of span{e_i o e_j + e_j o e_i} and span{e_i o e_j - e_j o e_i}.
std::pair<std::size_t, std::size_t> sym_antisym_ranks(const AlgebraTable& A);

/// Degree of each basis vector in an adapted grading; degrees cover 1..m.
struct GradingWitness {
    std::vector<std::size_t> degrees; // degrees[i] = degree of e_{i+1}

    std::size_t max_degree() const;
};

struct GradingVerdict {
    bool valid = true;
    std::string violation; // empty when valid
};

/// Valid iff every product e_i o e_j lands in the degree deg(i)+deg(j)
/// slot and, for each k, #{i : deg(e_i) >= k} = dim A^k.
GradingVerdict check_grading_witness(const AlgebraTable& A, const GradingWitness& w);

/// Degree of the designated extra basis vector under a valid witness.
std::size_t detect_type_r(const AlgebraTable& A, const GradingWitness& w,
                          std::size_t extra_index);

/// Associated graded algebra on echelon complements of A^{k+1} in A^k,
/// with standard-basis representatives where possible.  The returned
/// table always passes check_grading_witness with the returned witness.
std::pair<AlgebraTable, GradingWitness> graded_algebra(const AlgebraTable& A);

struct Fingerprint {
    std::size_t dim = 0;
    std::vector<std::size_t> lcs_dims;
    std::size_t nilindex = 0;
    std::size_t left_ann_dim = 0;
    std::size_t right_ann_dim = 0;
    std::size_t sym_rank = 0;
    std::size_t antisym_rank = 0;

    bool operator==(const Fingerprint&) const = default;
    std::string str() const;

    /// Name and both values of the first differing component, if any.
    static std::optional<std::string> first_difference(const Fingerprint& a,
                                                       const Fingerprint& b);
};

Fingerprint fingerprint(const AlgebraTable& A);

} // namespace zinbiel
