#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "xdl/errors.hpp"

namespace xdl {

/// Largest integer accepted by factorize(); trial division stays fast below it.
inline constexpr std::uint64_t kFactorizeLimit = 1'000'000'000'000ULL;

struct Factorization {
    std::map<std::uint64_t, unsigned> factors; // prime -> exponent
    std::uint64_t value = 1;

    unsigned exponent_of(std::uint64_t prime) const {
        auto it = factors.find(prime);
        return it == factors.end() ? 0u : it->second;
    }
};

/// Exact prime factorization by trial division; n = 1 yields an empty map.
inline Factorization factorize(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("factorize: argument must be positive");
    if (n > kFactorizeLimit)
        throw std::invalid_argument("factorize: argument exceeds the supported limit of 10^12");
    Factorization f;
    f.value = n;
    for (std::uint64_t q = 2; q * q <= n; q += (q == 2 ? 1 : 2)) {
        while (n % q == 0) {
            ++f.factors[q];
            n /= q;
        }
    }
    if (n > 1) ++f.factors[n];
    return f;
}

namespace detail {

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    if (p > UINT64_MAX) throw std::overflow_error("dimension computation overflows 64 bits");
    return static_cast<std::uint64_t>(p);
}

inline std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
    return checked_mul(a / std::gcd(a, b), b);
}

inline std::uint64_t pow_u64(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    while (exp--) r = checked_mul(r, base);
    return r;
}

} // namespace detail

/// One step of the dimension recursion: dim of A ⋉→ x for A ∈ M_{m×km},
/// x ∈ V_r, namely lcm(km, r)/k.
inline std::uint64_t step_dim(std::uint64_t m, std::uint64_t k, std::uint64_t r) {
    if (m == 0 || k == 0 || r == 0) throw std::invalid_argument("step_dim: arguments must be positive");
    return detail::lcm_u64(detail::checked_mul(k, m), r) / k;
}

struct DimTrajectory {
    std::uint64_t m = 1, k = 1, p = 1;
    std::vector<std::uint64_t> dims; // dims[t] = r(t), dims[0] = p
};

/// r(0..T) by the recursion r(t+1) = lcm(km, r(t))/k.
inline DimTrajectory dim_trajectory(std::uint64_t m, std::uint64_t k, std::uint64_t p, std::size_t T) {
    DimTrajectory traj{m, k, p, {}};
    traj.dims.reserve(T + 1);
    traj.dims.push_back(p);
    for (std::size_t t = 0; t < T; ++t) traj.dims.push_back(step_dim(m, k, traj.dims.back()));
    return traj;
}

struct KPrimeEntry {
    std::uint64_t prime = 0; // k_i
    unsigned mu = 0;         // exponent of k_i in k
    unsigned beta = 0;       // exponent of k_i in p / k^alpha
    unsigned tau = 0;        // floor(beta / mu)
    unsigned eta = 0;        // beta mod mu
};

struct MPrimeEntry {
    std::uint64_t prime = 0; // m_j, coprime to k
    unsigned nu = 0;         // exponent of m_j in m
    unsigned theta = 0;      // exponent of m_j in the residual p''
};

/// Factorization decomposition of (m, k, p) for A ∈ M_{m×km} with initial
/// space V_p: p = k^alpha · ∏ k_i^beta_i · ∏ m_j^theta_j · p1. Primes of m
/// that k shares stay inside the leading factor m of the dimension formulas;
/// m_primes lists only primes of m coprime to k.
struct DimensionProfile {
    std::uint64_t m = 1, k = 1, p = 1;
    unsigned alpha = 0;                  // maximal power with k^alpha | p
    std::vector<KPrimeEntry> k_primes;   // sorted by tau ascending
    unsigned d = 0;                      // count of entries with tau = 0
    std::vector<MPrimeEntry> m_primes;
    std::uint64_t p1 = 1;                // residual cofactor, coprime to k·m
    std::uint64_t r_star = 1;            // invariant dimension
    unsigned t_star_bound = 1;           // alpha + tau_max + 1

    Factorization fm, fk, fp; // kept for the closed-form evaluation
};

inline DimensionProfile build_profile(std::uint64_t m, std::uint64_t k, std::uint64_t p) {
    if (m == 0 || k == 0 || p == 0)
        throw std::invalid_argument("build_profile: m, k, p must be positive");
    DimensionProfile prof;
    prof.m = m;
    prof.k = k;
    prof.p = p;
    prof.fm = factorize(m);
    prof.fk = factorize(k);
    prof.fp = factorize(p);

    // alpha = min over primes of k of floor(e_p / e_k)
    if (k >= 2) {
        unsigned alpha = UINT32_MAX;
        for (const auto& [q, mu] : prof.fk.factors)
            alpha = std::min(alpha, prof.fp.exponent_of(q) / mu);
        prof.alpha = alpha;
        for (const auto& [q, mu] : prof.fk.factors) {
            KPrimeEntry e;
            e.prime = q;
            e.mu = mu;
            e.beta = prof.fp.exponent_of(q) - prof.alpha * mu;
            e.tau = e.beta / mu;
            e.eta = e.beta % mu;
            prof.k_primes.push_back(e);
        }
        std::sort(prof.k_primes.begin(), prof.k_primes.end(),
                  [](const KPrimeEntry& a, const KPrimeEntry& b) {
                      return a.tau != b.tau ? a.tau < b.tau : a.prime < b.prime;
                  });
        for (const auto& e : prof.k_primes)
            if (e.tau == 0) ++prof.d;
    }

    // Primes of m coprime to k, with their exponents in the residual of p.
    for (const auto& [q, nu] : prof.fm.factors) {
        if (prof.fk.exponent_of(q) > 0) continue;
        MPrimeEntry e;
        e.prime = q;
        e.nu = nu;
        e.theta = prof.fp.exponent_of(q);
        prof.m_primes.push_back(e);
    }

    // p1: part of p coprime to k·m.
    prof.p1 = 1;
    for (const auto& [q, ep] : prof.fp.factors)
        if (prof.fk.exponent_of(q) == 0 && prof.fm.exponent_of(q) == 0)
            prof.p1 = detail::checked_mul(prof.p1, detail::pow_u64(q, ep));

    prof.r_star = m;
    for (const auto& e : prof.m_primes)
        if (e.theta >= e.nu)
            prof.r_star = detail::checked_mul(prof.r_star, detail::pow_u64(e.prime, e.theta - e.nu));
    prof.r_star = detail::checked_mul(prof.r_star, prof.p1);

    unsigned tau_max = 0;
    for (const auto& e : prof.k_primes) tau_max = std::max(tau_max, e.tau);
    prof.t_star_bound = prof.alpha + tau_max + 1;
    return prof;
}

/// r(t) for t >= 1, directly from the factorizations, prime by prime:
///   q | k:      exponent = max(e_q(p) - t·e_q(k), e_q(m))
///   q coprime:  exponent = max(e_q(m), e_q(p))
/// This agrees with the step recursion for every t >= 1 (r(0) = p is not
/// covered; use the profile's p directly).
inline std::uint64_t closed_form_dim(const DimensionProfile& prof, std::uint64_t t) {
    if (t == 0) throw std::invalid_argument("closed_form_dim: defined for t >= 1; r(0) = p");
    const long long tt = static_cast<long long>(std::min<std::uint64_t>(t, 64)); // exponents fit in 64 steps
    std::uint64_t r = 1;
    std::set<std::uint64_t> primes;
    for (const auto& [q, e] : prof.fk.factors) primes.insert(q);
    for (const auto& [q, e] : prof.fm.factors) primes.insert(q);
    for (const auto& [q, e] : prof.fp.factors) primes.insert(q);
    for (std::uint64_t q : primes) {
        const long long ek = prof.fk.exponent_of(q);
        const long long em = prof.fm.exponent_of(q);
        const long long ep = prof.fp.exponent_of(q);
        const long long e = ek > 0 ? std::max(ep - tt * ek, em) : std::max(em, ep);
        r = detail::checked_mul(r, detail::pow_u64(q, static_cast<unsigned>(e)));
    }
    return r;
}

/// r*: the stabilized state dimension; a fixed point of step_dim.
inline std::uint64_t invariant_dim(const DimensionProfile& prof) { return prof.r_star; }

/// Upper bound alpha + tau_max + 1 on the invariant time point. The minimal
/// invariant time can be strictly smaller; see minimal_invariant_time.
inline unsigned invariant_time_bound(const DimensionProfile& prof) { return prof.t_star_bound; }

/// Smallest t with r(t) = r*, found by scanning the recursion. Always at most
/// invariant_time_bound. Returns 0 when p = r* already.
inline unsigned minimal_invariant_time(std::uint64_t m, std::uint64_t k, std::uint64_t p) {
    const DimensionProfile prof = build_profile(m, k, p);
    std::uint64_t r = p;
    for (unsigned t = 0; t <= prof.t_star_bound; ++t) {
        if (r == prof.r_star) return t;
        r = step_dim(m, k, r);
    }
    return prof.t_star_bound; // unreachable: the bound guarantees stabilization
}

struct ReachDimVerdict {
    bool reachable = false;
    std::set<unsigned> witness_times;  // t in [0, t_star_bound] with r(t) = r
    bool includes_time_zero = false;   // r = p counts as a witness at t = 0
    bool is_invariant_dim = false;     // r = r*: every t >= min_invariant_time works
    unsigned min_invariant_time = 0;
};

/// Which times (if any) realize r as a state dimension. Implemented by
/// enumerating the trajectory up to the invariant-time bound.
inline ReachDimVerdict is_reachable_dim(std::uint64_t m, std::uint64_t k, std::uint64_t p,
                                        std::uint64_t r) {
    if (r == 0) throw std::invalid_argument("is_reachable_dim: r must be positive");
    const DimensionProfile prof = build_profile(m, k, p);
    ReachDimVerdict v;
    v.is_invariant_dim = (r == prof.r_star);
    v.min_invariant_time = minimal_invariant_time(m, k, p);
    const DimTrajectory traj = dim_trajectory(m, k, p, prof.t_star_bound);
    for (unsigned t = 0; t < traj.dims.size(); ++t)
        if (traj.dims[t] == r) v.witness_times.insert(t);
    v.includes_time_zero = v.witness_times.count(0) > 0;
    v.reachable = !v.witness_times.empty();
    return v;
}

} // namespace xdl
