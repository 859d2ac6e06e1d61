#pragma once

#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <utility>
#include <vector>

#include "xdl/errors.hpp"
#include "xdl/rational.hpp"

namespace xdl {

/// Dense exact column vector.
class RVector {
public:
    RVector() = default;
    explicit RVector(std::size_t dim) : entries_(dim) {}
    explicit RVector(std::vector<Rational> entries) : entries_(std::move(entries)) {}
    RVector(std::initializer_list<Rational> entries) : entries_(entries) {}

    std::size_t dim() const { return entries_.size(); }

    const Rational& operator[](std::size_t i) const { return entries_[i]; }
    Rational& operator[](std::size_t i) { return entries_[i]; }

    const std::vector<Rational>& entries() const { return entries_; }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (e != 0) return false;
        return true;
    }

    friend bool operator==(const RVector&, const RVector&) = default;

private:
    std::vector<Rational> entries_;
};

/// Dense exact matrix, row-major.
class RMatrix {
public:
    RMatrix() = default;
    RMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
    RMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != rows_ * cols_)
            throw dimension_error("entry count does not match rows*cols");
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    const std::vector<Rational>& entries() const { return entries_; }

    friend bool operator==(const RMatrix&, const RMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

inline RMatrix identity(std::size_t n) {
    RMatrix I(n, n);
    for (std::size_t i = 0; i < n; ++i) I(i, i) = 1;
    return I;
}

/// i-th standard basis vector of V_n, 0-based index.
inline RVector unit_vector(std::size_t n, std::size_t i) {
    RVector e(n);
    e[i] = 1;
    return e;
}

inline RVector zero_vector(std::size_t n) { return RVector(n); }

inline std::size_t lcm_size(std::size_t a, std::size_t b) { return std::lcm(a, b); }

/// Kronecker product A ⊗ B.
inline RMatrix kron(const RMatrix& A, const RMatrix& B) {
    RMatrix R(A.rows() * B.rows(), A.cols() * B.cols());
    for (std::size_t a = 0; a < A.rows(); ++a)
        for (std::size_t c = 0; c < A.cols(); ++c) {
            const Rational& s = A(a, c);
            if (s == 0) continue;
            for (std::size_t b = 0; b < B.rows(); ++b)
                for (std::size_t d = 0; d < B.cols(); ++d)
                    R(a * B.rows() + b, c * B.cols() + d) = s * B(b, d);
        }
    return R;
}

inline RMatrix matmul(const RMatrix& A, const RMatrix& B) {
    if (A.cols() != B.rows()) throw dimension_error("matmul: inner dimensions differ");
    RMatrix R(A.rows(), B.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t k = 0; k < A.cols(); ++k) {
            const Rational& s = A(i, k);
            if (s == 0) continue;
            for (std::size_t j = 0; j < B.cols(); ++j)
                R(i, j) += s * B(k, j);
        }
    return R;
}

/// Semi-tensor product P ⋉ Q = (P ⊗ I_{t/n})(Q ⊗ I_{t/p}), t = lcm(n, p).
/// Defined for all shapes; degenerates to P·Q when P.cols = Q.rows.
inline RMatrix stp(const RMatrix& P, const RMatrix& Q) {
    const std::size_t t = lcm_size(P.cols(), Q.rows());
    if (t == P.cols() && t == Q.rows()) return matmul(P, Q);
    return matmul(kron(P, identity(t / P.cols())), kron(Q, identity(t / Q.rows())));
}

/// Embeds x into V_s as x ⊗ 1_{s/dim}: each entry repeated s/dim times.
inline RVector lift(const RVector& x, std::size_t s) {
    if (x.dim() == 0 || s % x.dim() != 0)
        throw dimension_error("lift: target dimension is not a multiple of the source dimension");
    const std::size_t rep = s / x.dim();
    RVector y(s);
    for (std::size_t i = 0; i < x.dim(); ++i)
        for (std::size_t j = 0; j < rep; ++j)
            y[i * rep + j] = x[i];
    return y;
}

/// V-product A ⋉→ x = (A ⊗ I_{s/n})(x ⊗ 1_{s/r}), s = lcm(n, r).
/// Computed entrywise without materializing A ⊗ I.
inline RVector vprod(const RMatrix& A, const RVector& x) {
    const std::size_t n = A.cols();
    const std::size_t s = lcm_size(n, x.dim());
    const std::size_t block = s / n;
    const RVector xx = lift(x, s);
    RVector y(A.rows() * block);
    for (std::size_t a = 0; a < A.rows(); ++a)
        for (std::size_t c = 0; c < n; ++c) {
            const Rational& s_ac = A(a, c);
            if (s_ac == 0) continue;
            for (std::size_t b = 0; b < block; ++b)
                y[a * block + b] += s_ac * xx[c * block + b];
        }
    return y;
}

/// V-addition x ⊞ y: both operands lifted to lcm(dims), then added.
inline RVector vadd(const RVector& x, const RVector& y) {
    const std::size_t s = lcm_size(x.dim(), y.dim());
    RVector xs = lift(x, s);
    const RVector ys = lift(y, s);
    for (std::size_t i = 0; i < s; ++i) xs[i] += ys[i];
    return xs;
}

/// n-ary weighted V-addition: all operands lifted to the global lcm at once.
/// Lift composition makes this equal to any parenthesization of binary ⊞.
inline RVector vsum(const std::vector<RVector>& xs, const std::vector<Rational>& coeffs) {
    if (xs.empty()) throw std::invalid_argument("vsum: empty operand list");
    if (xs.size() != coeffs.size()) throw std::invalid_argument("vsum: operand/coefficient count mismatch");
    std::size_t s = 1;
    for (const auto& x : xs) s = lcm_size(s, x.dim());
    RVector acc(s);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const RVector lifted = lift(xs[i], s);
        for (std::size_t j = 0; j < s; ++j) acc[j] += coeffs[i] * lifted[j];
    }
    return acc;
}

/// A^i ⋉→ x as the i-fold nested V-product; i = 0 returns x.
inline RVector power_vprod(const RMatrix& A, std::size_t i, RVector x) {
    for (std::size_t step = 0; step < i; ++step) x = vprod(A, x);
    return x;
}

inline RVector scale(const RVector& x, const Rational& a) {
    RVector y(x.dim());
    for (std::size_t i = 0; i < x.dim(); ++i) y[i] = a * x[i];
    return y;
}

} // namespace xdl
