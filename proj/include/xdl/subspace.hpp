#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "xdl/errors.hpp"
#include "xdl/linalg.hpp"

namespace xdl {

namespace detail {

/// In-place reduced row echelon form (leftmost pivots, unit pivots, zeros
/// above and below). Returns the rank; rows[0..rank) hold the echelon basis.
inline std::size_t rref(std::vector<std::vector<Rational>>& rows) {
    const std::size_t ncols = rows.empty() ? 0 : rows[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        const Rational inv = rows[rank][col];
        for (std::size_t c = col; c < ncols; ++c) rows[rank][c] /= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            const Rational f = rows[r][col];
            for (std::size_t c = col; c < ncols; ++c) rows[r][c] -= f * rows[rank][c];
        }
        ++rank;
    }
    return rank;
}

inline std::vector<std::vector<Rational>> to_rows(const std::vector<RVector>& vectors) {
    std::vector<std::vector<Rational>> rows;
    rows.reserve(vectors.size());
    for (const auto& v : vectors) rows.push_back(v.entries());
    return rows;
}

} // namespace detail

/// Exact rank of a list of vectors sharing one ambient dimension.
inline std::size_t rank_of(const std::vector<RVector>& vectors) {
    if (vectors.empty()) return 0;
    for (const auto& v : vectors)
        if (v.dim() != vectors[0].dim())
            throw dimension_error("rank_of: vectors have mixed dimensions");
    auto rows = detail::to_rows(vectors);
    return detail::rref(rows);
}

/// A subspace of V_ambient, held as a reduced-echelon basis so that equal
/// subspaces have identical representations.
class Subspace {
public:
    Subspace() = default;
    Subspace(std::size_t ambient, std::vector<RVector> echelon_basis)
        : ambient_(ambient), basis_(std::move(echelon_basis)) {}

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<RVector>& basis() const { return basis_; }

    friend bool operator==(const Subspace&, const Subspace&) = default;

private:
    std::size_t ambient_ = 0;
    std::vector<RVector> basis_;
};

/// Canonicalizes a spanning list into a Subspace.
inline Subspace make_subspace(const std::vector<RVector>& vectors, std::size_t ambient) {
    for (const auto& v : vectors)
        if (v.dim() != ambient)
            throw dimension_error("make_subspace: vector dimension differs from ambient");
    auto rows = detail::to_rows(vectors);
    const std::size_t rank = detail::rref(rows);
    std::vector<RVector> basis;
    basis.reserve(rank);
    for (std::size_t i = 0; i < rank; ++i) basis.emplace_back(std::move(rows[i]));
    return Subspace(ambient, std::move(basis));
}

/// If target lies in the span, returns coefficients c with sum c_i·v_i = target.
inline std::optional<std::vector<Rational>> span_coefficients(const std::vector<RVector>& vectors,
                                                              const RVector& target) {
    const std::size_t n = target.dim();
    for (const auto& v : vectors)
        if (v.dim() != n) throw dimension_error("span_coefficients: dimension mismatch");
    // Augmented system [v_1 ... v_k | target], vectors as columns.
    std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(vectors.size() + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < vectors.size(); ++j) rows[i][j] = vectors[j][i];
        rows[i][vectors.size()] = target[i];
    }
    detail::rref(rows);
    std::vector<Rational> coeffs(vectors.size());
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t lead = 0;
        while (lead <= vectors.size() && rows[i][lead] == 0) ++lead;
        if (lead > vectors.size()) break;              // zero row, done
        if (lead == vectors.size()) return std::nullopt; // pivot in target column
        coeffs[lead] = rows[i][vectors.size()];
    }
    return coeffs;
}

struct ReachVerdict {
    bool reachable = false;
    std::optional<std::size_t> time;
    std::size_t rank_with = 0;
    std::size_t rank_without = 0;
    std::string diagnostic;
};

/// t-step reachable subspace R_t = span{A^t ⋉→ δ_p^i : i = 1..p}; t = 0
/// yields the full initial space V_p.
inline Subspace reach_basis(const RMatrix& A, std::size_t p, std::size_t t) {
    if (p == 0) throw std::invalid_argument("reach_basis: p must be positive");
    std::vector<RVector> generators;
    generators.reserve(p);
    for (std::size_t i = 0; i < p; ++i)
        generators.push_back(power_vprod(A, t, unit_vector(p, i)));
    return make_subspace(generators, generators[0].dim());
}

/// Rank test: x belongs to S iff appending x does not raise the rank.
/// A dimension mismatch is a negative verdict, not an error.
inline ReachVerdict is_member(const Subspace& S, const RVector& x) {
    ReachVerdict v;
    v.rank_without = S.dim();
    if (x.dim() != S.ambient()) {
        v.rank_with = S.dim() + 1;
        v.diagnostic = "dimension mismatch: vector has dim " + std::to_string(x.dim()) +
                       ", subspace is in V_" + std::to_string(S.ambient());
        return v;
    }
    std::vector<RVector> augmented = S.basis();
    augmented.push_back(x);
    v.rank_with = rank_of(augmented);
    v.reachable = (v.rank_with == v.rank_without);
    return v;
}

/// All t <= t_max at which x is t-step reachable.
inline std::set<std::size_t> scan_reachability(const RMatrix& A, std::size_t p, const RVector& x,
                                               std::size_t t_max) {
    std::set<std::size_t> times;
    for (std::size_t t = 0; t <= t_max; ++t) {
        const Subspace S = reach_basis(A, p, t);
        if (x.dim() != S.ambient()) continue;
        if (is_member(S, x).reachable) times.insert(t);
    }
    return times;
}

/// The linear action of A on an A-invariant space V_r as an ordinary r×r
/// matrix; column i is A ⋉→ δ_r^i.
inline RMatrix induced_matrix(const RMatrix& A, std::size_t r) {
    RMatrix M(r, r);
    for (std::size_t i = 0; i < r; ++i) {
        const RVector col = vprod(A, unit_vector(r, i));
        if (col.dim() != r)
            throw precondition_error("induced_matrix: V_" + std::to_string(r) +
                                     " is not A-invariant (column " + std::to_string(i + 1) +
                                     " maps to dim " + std::to_string(col.dim()) + ")");
        for (std::size_t row = 0; row < r; ++row) M(row, i) = col[row];
    }
    return M;
}

enum class SubspaceRelation { Equal, FirstInSecond, SecondInFirst, Incomparable };

struct RelationReport {
    SubspaceRelation relation = SubspaceRelation::Incomparable;
    std::size_t sum_dim = 0;
    std::size_t intersection_dim = 0;
};

/// Inclusion via ranks of stacked bases; intersection dimension from
/// dim(S1) + dim(S2) - dim(S1 + S2).
inline RelationReport subspace_relate(const Subspace& S1, const Subspace& S2) {
    if (S1.ambient() != S2.ambient())
        throw dimension_error("subspace_relate: ambient dimensions differ");
    std::vector<RVector> stacked = S1.basis();
    stacked.insert(stacked.end(), S2.basis().begin(), S2.basis().end());
    RelationReport rep;
    rep.sum_dim = stacked.empty() ? 0 : rank_of(stacked);
    rep.intersection_dim = S1.dim() + S2.dim() - rep.sum_dim;
    const bool one_in_two = rep.sum_dim == S2.dim();
    const bool two_in_one = rep.sum_dim == S1.dim();
    if (one_in_two && two_in_one) rep.relation = SubspaceRelation::Equal;
    else if (one_in_two) rep.relation = SubspaceRelation::FirstInSecond;
    else if (two_in_one) rep.relation = SubspaceRelation::SecondInFirst;
    else rep.relation = SubspaceRelation::Incomparable;
    return rep;
}

} // namespace xdl
