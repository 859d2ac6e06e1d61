#pragma once

#include <vector>

#include "xdl/dimension.hpp"
#include "xdl/errors.hpp"
#include "xdl/linalg.hpp"
#include "xdl/polynomial.hpp"
#include "xdl/subspace.hpp"

namespace xdl {

/// q(A) ⋉→ x = A^n ⋉→ x ⊞ c_{n-1} A^{n-1} ⋉→ x ⊞ ... ⊞ c_0 x, with every
/// term lifted to the common lcm dimension.
inline RVector eval_on_vector(const Poly& q, const RMatrix& A, const RVector& x) {
    if (q.is_zero()) throw std::invalid_argument("eval_on_vector: zero polynomial");
    std::vector<RVector> terms;
    terms.reserve(q.degree() + 1);
    RVector iterate = x;
    terms.push_back(iterate);
    for (std::size_t j = 1; j <= q.degree(); ++j) {
        iterate = vprod(A, iterate);
        terms.push_back(iterate);
    }
    return vsum(terms, q.coeffs());
}

inline bool is_annihilator(const Poly& q, const RMatrix& A, const RVector& x) {
    return eval_on_vector(q, A, x).is_zero();
}

namespace detail {

inline void require_dimension_bounded(const RMatrix& A, const char* who) {
    if (A.rows() == 0 || A.cols() % A.rows() != 0)
        throw precondition_error(std::string(who) +
                                 ": operator is not dimension-bounded (rows do not divide columns)");
}

} // namespace detail

/// Minimal monic A-annihilator of x, by extending the chain x, A ⋉→ x, ...
/// and testing, after lifting all iterates to their common lcm dimension,
/// whether the newest iterate depends on the previous ones. The first
/// dependence gives the coefficients. Requires a dimension-bounded A so the
/// chain enters an invariant space and the loop terminates.
inline Poly min_annihilator_vector(const RMatrix& A, const RVector& x) {
    detail::require_dimension_bounded(A, "min_annihilator_vector");
    if (x.dim() == 0) throw std::invalid_argument("min_annihilator_vector: empty vector");
    if (x.is_zero()) return Poly::one();

    const std::uint64_t m = A.rows();
    const std::uint64_t k = A.cols() / A.rows();
    const DimensionProfile prof = build_profile(m, k, x.dim());
    const std::size_t max_steps = prof.t_star_bound + static_cast<std::size_t>(prof.r_star) + 2;

    std::vector<RVector> iterates{x};
    std::size_t common_dim = x.dim();
    for (std::size_t i = 1; i <= max_steps; ++i) {
        iterates.push_back(vprod(A, iterates.back()));
        common_dim = lcm_size(common_dim, iterates.back().dim());
        std::vector<RVector> lifted;
        lifted.reserve(i);
        for (std::size_t j = 0; j < i; ++j) lifted.push_back(lift(iterates[j], common_dim));
        const auto coeffs = span_coefficients(lifted, lift(iterates[i], common_dim));
        if (!coeffs) continue;
        // x_i = sum c_j x_j  =>  q(z) = z^i - sum c_j z^j
        std::vector<Rational> q(i + 1);
        for (std::size_t j = 0; j < i; ++j) q[j] = -(*coeffs)[j];
        q[i] = 1;
        return Poly(std::move(q));
    }
    throw std::logic_error("min_annihilator_vector: no dependence found within the invariant bound");
}

/// Minimal A-annihilator of span{vectors}: lcm of the per-vector minimal
/// annihilators.
inline Poly min_annihilator_span(const RMatrix& A, const std::vector<RVector>& vectors) {
    if (vectors.empty()) throw std::invalid_argument("min_annihilator_span: empty vector list");
    Poly q = Poly::one();
    for (const auto& v : vectors) q = poly_lcm(q, min_annihilator_vector(A, v));
    return q;
}

/// Minimal A-annihilator of the full space V_n (lcm over the standard basis).
/// For square A this is the classical minimal polynomial.
inline Poly min_annihilator_space(const RMatrix& A, std::size_t n) {
    if (n == 0) throw std::invalid_argument("min_annihilator_space: n must be positive");
    std::vector<RVector> basis;
    basis.reserve(n);
    for (std::size_t i = 0; i < n; ++i) basis.push_back(unit_vector(n, i));
    return min_annihilator_span(A, basis);
}

/// Minimal A-annihilator of the reachable union ⋃_{t>=t*} R_t, via the
/// minimal annihilators of A^{t*} ⋉→ δ_p^i at the minimal invariant time t*.
inline Poly min_annihilator_union(const RMatrix& A, std::size_t p) {
    detail::require_dimension_bounded(A, "min_annihilator_union");
    const std::uint64_t m = A.rows();
    const std::uint64_t k = A.cols() / A.rows();
    const unsigned t_star = minimal_invariant_time(m, k, p);
    Poly q = Poly::one();
    for (std::size_t i = 0; i < p; ++i)
        q = poly_lcm(q, min_annihilator_vector(A, power_vprod(A, t_star, unit_vector(p, i))));
    return q;
}

enum class UnionVerdict { ProperSubset, Inconclusive };

/// Sufficient test for ⋃_{t>=t*} R_t ≠ V_{r*}: the two minimal annihilators
/// differ. When they agree nothing is concluded.
inline UnionVerdict union_proper_test(const RMatrix& A, std::size_t p) {
    detail::require_dimension_bounded(A, "union_proper_test");
    const std::uint64_t m = A.rows();
    const std::uint64_t k = A.cols() / A.rows();
    const DimensionProfile prof = build_profile(m, k, p);
    const Poly q = min_annihilator_union(A, p);
    const Poly f = min_annihilator_space(A, static_cast<std::size_t>(prof.r_star));
    return q == f ? UnionVerdict::Inconclusive : UnionVerdict::ProperSubset;
}

enum class FilterVerdict { Pass, Fail };

/// Necessary-condition filter for membership in ⋃_{t>=t*} R_t: the minimal
/// annihilator of any reachable x must divide the union's minimal
/// annihilator. Fail certifies x is not reachable after t*.
inline FilterVerdict necessary_reach_filter(const RMatrix& A, std::size_t p, const RVector& x) {
    detail::require_dimension_bounded(A, "necessary_reach_filter");
    const std::uint64_t m = A.rows();
    const std::uint64_t k = A.cols() / A.rows();
    const DimensionProfile prof = build_profile(m, k, p);
    if (x.dim() != prof.r_star)
        throw std::invalid_argument("necessary_reach_filter: vector dimension differs from r*");
    const Poly qx = min_annihilator_vector(A, x);
    const Poly q = min_annihilator_union(A, p);
    return poly_divides(qx, q) ? FilterVerdict::Pass : FilterVerdict::Fail;
}

} // namespace xdl
