#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "xdl/dimension.hpp"

using namespace xdl;

TEST_CASE("factorize") {
    const auto f = factorize(68040);
    CHECK(f.factors == std::map<std::uint64_t, unsigned>{{2, 3}, {3, 5}, {5, 1}, {7, 1}});
    CHECK(f.value == 68040);

    CHECK(factorize(1).factors.empty());
    CHECK(factorize(1715).factors == std::map<std::uint64_t, unsigned>{{5, 1}, {7, 3}});

    CHECK_THROWS_AS(factorize(0), std::invalid_argument);
    CHECK_THROWS_AS(factorize(kFactorizeLimit + 1), std::invalid_argument);

    // trial-division oracle on random values
    std::mt19937_64 gen(21);
    for (int it = 0; it < 200; ++it) {
        const std::uint64_t n = std::uniform_int_distribution<std::uint64_t>(1, 100000)(gen);
        const auto fact = factorize(n);
        std::uint64_t prod = 1;
        for (const auto& [q, e] : fact.factors) {
            for (std::uint64_t d = 2; d < q && d * d <= q; ++d) CHECK(q % d != 0);
            for (unsigned i = 0; i < e; ++i) prod *= q;
        }
        CHECK(prod == n);
    }
}

TEST_CASE("step_dim") {
    CHECK(step_dim(2, 3, 18) == 6);
    CHECK(step_dim(10, 6, 68040) == 11340);
    CHECK(step_dim(7, 5, 35) == 7); // r = km is a fixed point source: lcm(km,km)/k = m
    CHECK(step_dim(4, 9, 36) == 4);
    CHECK_THROWS_AS(step_dim(0, 1, 1), std::invalid_argument);
}

TEST_CASE("dim_trajectory reproduces the three reference columns") {
    CHECK(dim_trajectory(10, 6, 68040, 7).dims ==
          std::vector<std::uint64_t>{68040, 11340, 1890, 630, 210, 70, 70, 70});
    CHECK(dim_trajectory(6, 20, 30, 3).dims == std::vector<std::uint64_t>{30, 6, 6, 6});
    CHECK(dim_trajectory(48, 1715, 18900, 4).dims ==
          std::vector<std::uint64_t>{18900, 2160, 432, 432, 432});
}

TEST_CASE("build_profile fixtures") {
    SUBCASE("(10, 6, 68040)") {
        const auto prof = build_profile(10, 6, 68040);
        CHECK(prof.alpha == 3);
        REQUIRE(prof.k_primes.size() == 2);
        CHECK(prof.k_primes[0].prime == 2);
        CHECK(prof.k_primes[0].mu == 1);
        CHECK(prof.k_primes[0].beta == 0);
        CHECK(prof.k_primes[0].tau == 0);
        CHECK(prof.k_primes[1].prime == 3);
        CHECK(prof.k_primes[1].beta == 2);
        CHECK(prof.k_primes[1].tau == 2);
        CHECK(prof.d == 1);
        REQUIRE(prof.m_primes.size() == 1);
        CHECK(prof.m_primes[0].prime == 5);
        CHECK(prof.m_primes[0].nu == 1);
        CHECK(prof.m_primes[0].theta == 1);
        CHECK(prof.p1 == 7);
        CHECK(prof.r_star == 70);
        CHECK(prof.t_star_bound == 6);
    }
    SUBCASE("(2, 3, 5)") {
        const auto prof = build_profile(2, 3, 5);
        CHECK(prof.alpha == 0);
        REQUIRE(prof.k_primes.size() == 1);
        CHECK(prof.k_primes[0].prime == 3);
        CHECK(prof.k_primes[0].beta == 0);
        REQUIRE(prof.m_primes.size() == 1);
        CHECK(prof.m_primes[0].prime == 2);
        CHECK(prof.m_primes[0].nu == 1);
        CHECK(prof.m_primes[0].theta == 0);
        CHECK(prof.p1 == 5);
        CHECK(prof.r_star == 10);
        CHECK(prof.t_star_bound == 1);
    }
    SUBCASE("(48, 1715, 18900)") {
        const auto prof = build_profile(48, 1715, 18900);
        CHECK(prof.alpha == 0);
        REQUIRE(prof.k_primes.size() == 2);
        CHECK(prof.k_primes[0].prime == 7); // tau = 0 sorts first
        CHECK(prof.k_primes[0].mu == 3);
        CHECK(prof.k_primes[0].beta == 1);
        CHECK(prof.k_primes[0].tau == 0);
        CHECK(prof.k_primes[0].eta == 1);
        CHECK(prof.k_primes[1].prime == 5);
        CHECK(prof.k_primes[1].mu == 1);
        CHECK(prof.k_primes[1].beta == 2);
        CHECK(prof.k_primes[1].tau == 2);
        CHECK(prof.k_primes[1].eta == 0);
        CHECK(prof.d == 1);
        REQUIRE(prof.m_primes.size() == 2);
        CHECK(prof.m_primes[0].prime == 2);
        CHECK(prof.m_primes[0].nu == 4);
        CHECK(prof.m_primes[0].theta == 2);
        CHECK(prof.m_primes[1].prime == 3);
        CHECK(prof.m_primes[1].nu == 1);
        CHECK(prof.m_primes[1].theta == 3);
        CHECK(prof.p1 == 1);
        CHECK(prof.r_star == 432);
        CHECK(prof.t_star_bound == 3);
    }
    SUBCASE("k = 1 degenerates") {
        const auto prof = build_profile(6, 1, 35);
        CHECK(prof.alpha == 0);
        CHECK(prof.k_primes.empty());
        CHECK(prof.t_star_bound == 1);
        CHECK(prof.r_star == step_dim(6, 1, 35));
    }
}

TEST_CASE("closed_form_dim") {
    const auto prof1 = build_profile(10, 6, 68040);
    CHECK(closed_form_dim(prof1, 4) == 210);
    CHECK_THROWS_AS(closed_form_dim(prof1, 0), std::invalid_argument);

    const auto prof3 = build_profile(48, 1715, 18900);
    CHECK(closed_form_dim(prof3, 1) == 2160);

    for (std::uint64_t t = prof1.t_star_bound; t < prof1.t_star_bound + 5; ++t)
        CHECK(closed_form_dim(prof1, t) == prof1.r_star);
}

TEST_CASE("invariant_dim and times") {
    CHECK(invariant_dim(build_profile(10, 6, 68040)) == 70);
    CHECK(invariant_dim(build_profile(6, 20, 30)) == 6);
    CHECK(invariant_dim(build_profile(2, 2, 3)) == 6);

    CHECK(invariant_time_bound(build_profile(10, 6, 68040)) == 6);
    CHECK(invariant_time_bound(build_profile(2, 2, 3)) == 1);
    // Remark-1 formula bound; the minimal time below is 2 (see scan).
    CHECK(invariant_time_bound(build_profile(2, 3, 18)) == 3);

    CHECK(minimal_invariant_time(2, 3, 18) == 2);
    CHECK(minimal_invariant_time(2, 3, 5) == 1);
    CHECK(minimal_invariant_time(48, 1715, 18900) == 2);

    // r* is a fixed point of the step recursion.
    const auto prof = build_profile(10, 6, 68040);
    CHECK(step_dim(10, 6, prof.r_star) == prof.r_star);
}

TEST_CASE("is_reachable_dim") {
    const auto v630 = is_reachable_dim(10, 6, 68040, 630);
    CHECK(v630.reachable);
    CHECK(v630.witness_times == std::set<unsigned>{3});
    CHECK_FALSE(v630.is_invariant_dim);

    const auto v70 = is_reachable_dim(10, 6, 68040, 70);
    CHECK(v70.reachable);
    CHECK(v70.is_invariant_dim);
    CHECK(v70.min_invariant_time == 5);

    const auto v100 = is_reachable_dim(10, 6, 68040, 100);
    CHECK_FALSE(v100.reachable);
    CHECK(v100.witness_times.empty());

    const auto v0 = is_reachable_dim(10, 6, 68040, 68040);
    CHECK(v0.includes_time_zero); // r = p counts as a t = 0 witness

    CHECK_THROWS_AS(is_reachable_dim(2, 3, 6, 0), std::invalid_argument);
}

TEST_CASE("closed form agrees with the recursion on random instances") {
    std::mt19937_64 gen(22);
    auto rand = [&](std::uint64_t lo, std::uint64_t hi) {
        return std::uniform_int_distribution<std::uint64_t>(lo, hi)(gen);
    };
    for (int it = 0; it < 1000; ++it) {
        const std::uint64_t m = rand(1, 50), k = rand(2, 50), p = rand(1, 1000000);
        const auto prof = build_profile(m, k, p);
        const std::size_t t_hi = prof.t_star_bound + 3;
        const auto traj = dim_trajectory(m, k, p, t_hi);
        for (std::size_t t = 1; t <= t_hi; ++t) {
            CHECK(closed_form_dim(prof, t) == traj.dims[t]);
            CHECK(traj.dims[t] % m == 0);
        }
        // invariance after the bound, and bound dominates the minimal time
        for (std::size_t t = prof.t_star_bound; t <= t_hi; ++t)
            CHECK(traj.dims[t] == prof.r_star);
        CHECK(minimal_invariant_time(m, k, p) <= prof.t_star_bound);
        CHECK(step_dim(m, k, prof.r_star) == prof.r_star);

        // profile reconstruction multiplies back to p
        unsigned __int128 back = 1;
        for (unsigned i = 0; i < prof.alpha; ++i) back *= k;
        for (const auto& e : prof.k_primes)
            for (unsigned i = 0; i < e.beta; ++i) back *= e.prime;
        for (const auto& e : prof.m_primes)
            for (unsigned i = 0; i < e.theta; ++i) back *= e.prime;
        back *= prof.p1;
        CHECK(back == p);
    }
}
