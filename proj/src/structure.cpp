#include "zinbiel/structure.hpp"

#include <algorithm>
#include <sstream>

namespace zinbiel {

namespace {

Polynomial poly_lcm(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    return divexact(a * b, poly_gcd(a, b));
}

// Clears denominators: scales the row by the lcm of its denominators.
std::vector<Polynomial> to_poly_row(const Vector& row) {
    Polynomial l(1);
    for (const Scalar& s : row)
        if (!s.den().is_one()) l = poly_lcm(l, s.den());
    std::vector<Polynomial> out;
    out.reserve(row.size());
    for (const Scalar& s : row)
        out.push_back(s.num() * divexact(l, s.den()));
    return out;
}

} // namespace

RrefResult rref(std::vector<Vector> input) {
    const std::size_t m = input.size();
    const std::size_t n = m ? input[0].size() : 0;
    for (const Vector& r : input)
        if (r.size() != n)
            throw Error(ErrorCode::DimensionMismatch, "ragged matrix");

    std::vector<std::vector<Polynomial>> rows;
    rows.reserve(m);
    for (const Vector& r : input) rows.push_back(to_poly_row(r));

    // Fraction-free Gauss-Jordan (Bareiss) with row pivoting: clearing
    // above and below in one pass keeps every intermediate entry a minor
    // of the input, so divisions stay exact and no gcd cascade builds up.
    std::vector<std::size_t> pivots;
    Polynomial prev(1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < m; ++col) {
        std::size_t p = rank;
        while (p < m && rows[p][col].is_zero()) ++p;
        if (p == m) continue;
        std::swap(rows[rank], rows[p]);
        const Polynomial piv = rows[rank][col];
        for (std::size_t r = 0; r < m; ++r) {
            if (r == rank) continue;
            const Polynomial factor = rows[r][col];
            for (std::size_t c = 0; c < n; ++c) {
                if (c == col) continue;
                if (factor.is_zero()) {
                    if (!rows[r][c].is_zero())
                        rows[r][c] = divexact(piv * rows[r][c], prev);
                } else {
                    rows[r][c] =
                        divexact(piv * rows[r][c] - factor * rows[rank][c], prev);
                }
            }
            rows[r][col] = Polynomial();
        }
        prev = piv;
        pivots.push_back(col);
        ++rank;
    }

    // Every pivot entry now equals the final pivot minor; one exact
    // division per entry normalizes pivots to 1.
    Scalar denom = Scalar(prev);
    std::vector<Vector> out(rank, Vector());
    for (std::size_t r = 0; r < rank; ++r) {
        Vector row(n);
        for (std::size_t c = 0; c < n; ++c)
            if (!rows[r][c].is_zero()) row[c] = Scalar(rows[r][c]) / denom;
        out[r] = std::move(row);
    }
    return {std::move(out), std::move(pivots)};
}

Subspace echelonize(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
    for (const Vector& v : vectors)
        if (v.size() != ambient_dim)
            throw Error(ErrorCode::DimensionMismatch, "vector does not match ambient dimension");
    if (vectors.empty()) return Subspace(ambient_dim);
    RrefResult r = rref(vectors);
    return Subspace(ambient_dim, std::move(r.rows), std::move(r.pivots));
}

bool Subspace::contains(const Vector& v) const {
    if (v.size() != ambient_)
        throw Error(ErrorCode::DimensionMismatch, "vector does not match ambient dimension");
    Vector rem = v;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        Scalar factor = rem[pivots_[r]];
        if (factor.is_zero()) continue;
        for (std::size_t c = 0; c < ambient_; ++c) rem[c] -= factor * rows_[r][c];
    }
    return is_zero_vector(rem);
}

bool Subspace::contains(const Subspace& other) const {
    for (const Vector& row : other.rows())
        if (!contains(row)) return false;
    return true;
}

Subspace kernel(std::size_t ncols, const std::vector<Vector>& rows) {
    if (rows.empty()) {
        std::vector<Vector> basis;
        for (std::size_t j = 1; j <= ncols; ++j) basis.push_back(basis_vector(ncols, j));
        return echelonize(ncols, basis);
    }
    RrefResult r = rref(rows);
    std::vector<bool> is_pivot(ncols, false);
    for (std::size_t p : r.pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        Vector x(ncols);
        x[f] = Scalar(1);
        for (std::size_t pr = 0; pr < r.pivots.size(); ++pr)
            x[r.pivots[pr]] = -r.rows[pr][f];
        basis.push_back(std::move(x));
    }
    return echelonize(ncols, basis);
}

Scalar determinant(std::vector<Vector> input) {
    const std::size_t n = input.size();
    for (const Vector& r : input)
        if (r.size() != n)
            throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
    // Gaussian elimination over the fraction field, tracking row swaps.
    Scalar det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && input[p][col].is_zero()) ++p;
        if (p == n) return Scalar(0);
        if (p != col) {
            std::swap(input[p], input[col]);
            det = -det;
        }
        det *= input[col][col];
        Scalar inv = input[col][col].inverse();
        for (std::size_t r = col + 1; r < n; ++r) {
            Scalar factor = input[r][col] * inv;
            if (factor.is_zero()) continue;
            for (std::size_t c = col; c < n; ++c)
                input[r][c] -= factor * input[col][c];
        }
    }
    return det;
}

std::vector<Vector> invert_matrix(const std::vector<Vector>& input) {
    const std::size_t n = input.size();
    std::vector<Vector> aug;
    aug.reserve(n);
    for (std::size_t r = 0; r < n; ++r) {
        if (input[r].size() != n)
            throw Error(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
        Vector row(2 * n);
        for (std::size_t c = 0; c < n; ++c) row[c] = input[r][c];
        row[n + r] = Scalar(1);
        aug.push_back(std::move(row));
    }
    RrefResult r = rref(aug);
    if (r.pivots.size() != n || r.pivots.back() != n - 1)
        throw Error(ErrorCode::SingularMap, "matrix is singular");
    std::vector<Vector> out(n, Vector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i][j] = r.rows[i][n + j];
    return out;
}

Subspace subspace_product(const AlgebraTable& A, const Subspace& U, const Subspace& V) {
    if (U.ambient_dim() != A.dim() || V.ambient_dim() != A.dim())
        throw Error(ErrorCode::DimensionMismatch, "subspace/table dimension mismatch");
    std::vector<Vector> prods;
    for (const Vector& u : U.rows())
        for (const Vector& v : V.rows()) prods.push_back(multiply(A, u, v));
    return echelonize(A.dim(), prods);
}

std::vector<Subspace> lower_central_series(const AlgebraTable& A) {
    const std::size_t n = A.dim();
    std::vector<Vector> all;
    for (std::size_t i = 1; i <= n; ++i) all.push_back(basis_vector(n, i));
    Subspace full = echelonize(n, all);

    std::vector<Subspace> series{full};
    for (std::size_t k = 1; k <= n + 1; ++k) {
        Subspace next = subspace_product(A, full, series.back());
        if (next.rank() == series.back().rank())
            throw Error(ErrorCode::NotNilpotentWithinBound,
                        "lower central series stabilized at rank " +
                            std::to_string(next.rank()));
        series.push_back(std::move(next));
        if (series.back().rank() == 0) return series;
    }
    throw Error(ErrorCode::NotNilpotentWithinBound,
                "lower central series did not reach zero within n+2 steps");
}

std::vector<std::size_t> series_dims(const std::vector<Subspace>& series) {
    std::vector<std::size_t> dims;
    dims.reserve(series.size());
    for (const Subspace& s : series) dims.push_back(s.rank());
    return dims;
}

std::size_t nilindex(const AlgebraTable& A) {
    return lower_central_series(A).size();
}

const char* filiform_class_name(FiliformClass c) {
    switch (c) {
    case FiliformClass::zero_filiform: return "zero_filiform";
    case FiliformClass::filiform: return "filiform";
    case FiliformClass::quasi_filiform: return "quasi_filiform";
    case FiliformClass::other: return "other";
    }
    return "other";
}

FiliformClass classify_filiformity(const AlgebraTable& A) {
    const std::size_t n = A.dim();
    std::vector<std::size_t> dims = series_dims(lower_central_series(A));
    auto dim_at = [&](std::size_t i) { return i <= dims.size() ? dims[i - 1] : 0; };

    bool zero_fil = true;
    for (std::size_t i = 1; i <= n + 1; ++i)
        if (dim_at(i) != n + 1 - i) { zero_fil = false; break; }
    if (zero_fil) return FiliformClass::zero_filiform;

    bool fil = n >= 2;
    for (std::size_t i = 2; i <= n && fil; ++i)
        if (dim_at(i) != n - i) fil = false;
    if (fil) return FiliformClass::filiform;

    if (n >= 3 && dim_at(n - 2) != 0 && dim_at(n - 1) == 0)
        return FiliformClass::quasi_filiform;
    return FiliformClass::other;
}

namespace {

Subspace annihilator(const AlgebraTable& A, bool right) {
    const std::size_t n = A.dim();
    std::vector<Vector> rows;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t k = 1; k <= n; ++k) {
            Vector row(n);
            bool nonzero = false;
            for (std::size_t j = 1; j <= n; ++j) {
                const Scalar& c = right ? A.constant(i, j, k) : A.constant(j, i, k);
                if (!c.is_zero()) nonzero = true;
                row[j - 1] = c;
            }
            if (nonzero) rows.push_back(std::move(row));
        }
    return kernel(n, rows);
}

} // namespace

Subspace left_annihilator(const AlgebraTable& A) { return annihilator(A, false); }
Subspace right_annihilator(const AlgebraTable& A) { return annihilator(A, true); }

std::pair<std::size_t, std::size_t> sym_antisym_ranks(const AlgebraTable& A) {
    const std::size_t n = A.dim();
    std::vector<Vector> sym, antisym;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i; j <= n; ++j) {
            Vector pij = A.basis_product(i, j);
            Vector pji = A.basis_product(j, i);
            Vector s(n), d(n);
            for (std::size_t k = 0; k < n; ++k) {
                s[k] = pij[k] + pji[k];
                d[k] = pij[k] - pji[k];
            }
            sym.push_back(std::move(s));
            if (i != j) antisym.push_back(std::move(d));
        }
    return {echelonize(n, sym).rank(), echelonize(n, antisym).rank()};
}

std::size_t GradingWitness::max_degree() const {
    std::size_t m = 0;
    for (std::size_t d : degrees) m = std::max(m, d);
    return m;
}

GradingVerdict check_grading_witness(const AlgebraTable& A, const GradingWitness& w) {
    const std::size_t n = A.dim();
    if (w.degrees.size() != n)
        throw Error(ErrorCode::IncompleteWitness, "witness must assign a degree to every basis index");
    for (std::size_t d : w.degrees)
        if (d == 0)
            throw Error(ErrorCode::IncompleteWitness, "degrees must be positive");

    for (const auto& [ij, block] : A.products()) {
        std::size_t d = w.degrees[ij.first - 1] + w.degrees[ij.second - 1];
        for (const auto& [k, c] : block) {
            if (w.degrees[k - 1] != d) {
                std::ostringstream msg;
                msg << "product e_" << ij.first << "*e_" << ij.second
                    << " has a component on e_" << k << " of degree " << w.degrees[k - 1]
                    << ", expected degree " << d;
                return {false, msg.str()};
            }
        }
    }

    std::vector<std::size_t> dims = series_dims(lower_central_series(A));
    std::size_t depth = std::max(w.max_degree(), dims.size());
    for (std::size_t k = 1; k <= depth; ++k) {
        std::size_t count = 0;
        for (std::size_t d : w.degrees)
            if (d >= k) ++count;
        std::size_t expect = k <= dims.size() ? dims[k - 1] : 0;
        if (count != expect) {
            std::ostringstream msg;
            msg << "degree slot " << k << ": " << count
                << " basis vectors of degree >= " << k << " but dim A^" << k
                << " = " << expect;
            return {false, msg.str()};
        }
    }
    return {};
}

std::size_t detect_type_r(const AlgebraTable& A, const GradingWitness& w,
                          std::size_t extra_index) {
    if (extra_index < 1 || extra_index > A.dim())
        throw Error(ErrorCode::InvalidWitness, "extra index out of range");
    GradingVerdict v = check_grading_witness(A, w);
    if (!v.valid)
        throw Error(ErrorCode::InvalidWitness, "witness invalid: " + v.violation);
    return w.degrees[extra_index - 1];
}

std::pair<AlgebraTable, GradingWitness> graded_algebra(const AlgebraTable& A) {
    const std::size_t n = A.dim();
    std::vector<Subspace> series = lower_central_series(A);
    const std::size_t s = series.size(); // A^s = 0

    // Echelon complement of A^{k+1} inside A^k, preferring standard basis
    // representatives.
    std::vector<Vector> new_basis;
    std::vector<std::size_t> degrees;
    for (std::size_t k = 1; k + 1 <= s; ++k) {
        const Subspace& upper = series[k - 1];
        const Subspace& lower = series[k];
        std::size_t want = upper.rank();
        std::vector<Vector> chosen(lower.rows().begin(), lower.rows().end());
        std::size_t have = lower.rank();

        auto try_add = [&](const Vector& cand) {
            if (have == want) return;
            std::vector<Vector> probe = chosen;
            probe.push_back(cand);
            if (echelonize(n, probe).rank() > have) {
                chosen.push_back(cand);
                ++have;
                new_basis.push_back(cand);
                degrees.push_back(k);
            }
        };
        for (std::size_t j = 1; j <= n && have < want; ++j) {
            Vector e = basis_vector(n, j);
            if (upper.contains(e)) try_add(e);
        }
        for (std::size_t r = 0; r < upper.rows().size() && have < want; ++r)
            try_add(upper.rows()[r]);
    }

    // Change of basis: columns of M are the new basis vectors.
    std::vector<Vector> M(n, Vector(n));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) M[i][j] = new_basis[j][i];
    std::vector<Vector> Minv = invert_matrix(M);

    AlgebraTable G(n, A.params());
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
            Vector p = multiply(A, new_basis[i - 1], new_basis[j - 1]);
            if (is_zero_vector(p)) continue;
            std::size_t target = degrees[i - 1] + degrees[j - 1];
            for (std::size_t k = 1; k <= n; ++k) {
                if (degrees[k - 1] != target) continue;
                Scalar coord(0);
                for (std::size_t c = 0; c < n; ++c) coord += Minv[k - 1][c] * p[c];
                if (!coord.is_zero()) G.set(i, j, k, coord);
            }
        }
    return {std::move(G), GradingWitness{std::move(degrees)}};
}

std::string Fingerprint::str() const {
    std::ostringstream out;
    out << "dim=" << dim << " lcs=[";
    for (std::size_t i = 0; i < lcs_dims.size(); ++i)
        out << (i ? "," : "") << lcs_dims[i];
    out << "] nilindex=" << nilindex << " dimL=" << left_ann_dim
        << " dimR=" << right_ann_dim << " sym_rank=" << sym_rank
        << " antisym_rank=" << antisym_rank;
    return out.str();
}

std::optional<std::string> Fingerprint::first_difference(const Fingerprint& a,
                                                         const Fingerprint& b) {
    auto fmt = [](const std::string& name, std::size_t x, std::size_t y) {
        return name + ": " + std::to_string(x) + " vs " + std::to_string(y);
    };
    if (a.dim != b.dim) return fmt("dim", a.dim, b.dim);
    if (a.lcs_dims != b.lcs_dims) {
        std::ostringstream out;
        out << "lcs_dims: [";
        for (std::size_t i = 0; i < a.lcs_dims.size(); ++i) out << (i ? "," : "") << a.lcs_dims[i];
        out << "] vs [";
        for (std::size_t i = 0; i < b.lcs_dims.size(); ++i) out << (i ? "," : "") << b.lcs_dims[i];
        out << "]";
        return out.str();
    }
    if (a.nilindex != b.nilindex) return fmt("nilindex", a.nilindex, b.nilindex);
    if (a.left_ann_dim != b.left_ann_dim) return fmt("left_ann_dim", a.left_ann_dim, b.left_ann_dim);
    if (a.right_ann_dim != b.right_ann_dim)
        return fmt("right_ann_dim", a.right_ann_dim, b.right_ann_dim);
    if (a.sym_rank != b.sym_rank) return fmt("sym_rank", a.sym_rank, b.sym_rank);
    if (a.antisym_rank != b.antisym_rank) return fmt("antisym_rank", a.antisym_rank, b.antisym_rank);
    return std::nullopt;
}

Fingerprint fingerprint(const AlgebraTable& A) {
    Fingerprint f;
    f.dim = A.dim();
    std::vector<Subspace> series = lower_central_series(A);
    f.lcs_dims = series_dims(series);
    f.nilindex = series.size();
    f.left_ann_dim = left_annihilator(A).rank();
    f.right_ann_dim = right_annihilator(A).rank();
    auto [sym, antisym] = sym_antisym_ranks(A);
    f.sym_rank = sym;
    f.antisym_rank = antisym;
    return f;
}

} // namespace zinbiel
