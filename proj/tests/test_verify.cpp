#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "graphscat/errors.hpp"
#include "graphscat/verify.hpp"
#include "test_helpers.hpp"

using namespace graphscat;
using testutil::make_spec;

TEST_CASE("reduce_degenerate peels the bare unit coupling to m=0") {
    const GraphSpec s = make_spec(0.0, {1.0}, {{0.0}});
    const GraphSpec r = reduce_degenerate(s);
    CHECK(r.m() == 0);
    CHECK(r.a == doctest::Approx(0.0));
}

TEST_CASE("non-degenerate instances pass through untouched") {
    const GraphSpec s = make_spec(0.5, {1.0}, {{0.0}});
    const GraphSpec r = reduce_degenerate(s);
    CHECK(r.m() == 1);
    CHECK(r.a == 0.5);
    CHECK(r.b[0] == cplx(1.0, 0.0));
}

TEST_CASE("hand-worked Householder reduction of the symmetric pair") {
    const double s2 = 1.0 / std::sqrt(2.0);
    const GraphSpec s = make_spec(0.0, {s2, s2}, {{0.0, 1.0}, {1.0, 0.0}});
    const GraphSpec r = reduce_degenerate(s);
    REQUIRE(r.m() == 1);
    CHECK(r.a == doctest::Approx(1.0));
    CHECK(std::abs(r.b[0]) <= 1e-12);
    CHECK(r.D(0, 0).real() == doctest::Approx(-1.0));
    // the reduced instance satisfies the identity
    CHECK(verify(r).holds);
}

TEST_CASE("multi-peel: zero-diagonal unit chain reduces all the way down") {
    // b = e1, D tridiagonal with unit hops: every peel reproduces the family
    const std::size_t m = 4;
    GraphSpec s;
    s.a = 0.0;
    s.b.assign(m, cplx(0.0));
    s.b[0] = 1.0;
    s.D = CMatrix(m, m);
    for (std::size_t i = 0; i + 1 < m; ++i) {
        s.D(i, i + 1) = 1.0;
        s.D(i + 1, i) = 1.0;
    }
    const GraphSpec r = reduce_degenerate(s);
    CHECK(r.m() == 0);
    const VerificationReport rep = verify(s);
    CHECK(rep.reduced);
    CHECK(rep.holds);
    CHECK(rep.census.m == 0);
}

TEST_CASE("classify canonical instances") {
    const BoundStateCensus c1 = classify(make_spec(2.0, {}, {}));
    CHECK(c1.m == 0);
    CHECK(c1.n_b == 1);
    CHECK(c1.n_h == 0);
    CHECK(c1.n_c == 0);

    const BoundStateCensus c2 =
        classify(make_spec(0.0, {2.0, 0.0}, {{0.0, 0.0}, {0.0, 5.0}}));
    CHECK(c2.m == 2);
    CHECK(c2.n_b == 2);
    CHECK(c2.n_h == 0);
    CHECK(c2.n_c == 1);

    const BoundStateCensus c3 = classify(make_spec(0.5, {1.0}, {{0.0}}));
    CHECK(c3.m == 1);
    CHECK(c3.n_b == 0);
    CHECK(c3.n_h == 1);
    CHECK(c3.n_c == 0);
}

TEST_CASE("verify canonical instances") {
    const VerificationReport r1 = verify(make_spec(2.0, {}, {}));
    CHECK(r1.holds);
    CHECK(r1.w_phase == -2);
    CHECK(r1.w_roots == -2);
    CHECK(r1.rhs.equals(-2));

    const VerificationReport r2 = verify(make_spec(0.5, {1.0}, {{0.0}}));
    CHECK(r2.holds);
    CHECK(r2.w_phase == 1);
    CHECK(r2.rhs.equals(1));

    const VerificationReport r3 =
        verify(make_spec(0.0, {2.0, 0.0}, {{0.0, 0.0}, {0.0, 5.0}}));
    CHECK(r3.holds);
    CHECK(r3.w_phase == -2);
    CHECK(r3.rhs.equals(-2));
}

TEST_CASE("random_instance is deterministic and respects forcing options") {
    const GraphSpec bare = random_instance(55, 0);
    CHECK(bare.m() == 0); // self-loop weight only

    const GraphSpec a = random_instance(1234, 4);
    const GraphSpec b = random_instance(1234, 4);
    CHECK(a.a == b.a);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(a.b[i] == b.b[i]);
        for (std::size_t j = 0; j < 4; ++j) CHECK(a.D(i, j) == b.D(i, j));
    }

    RandomOptions hb;
    hb.force_half_bound = true;
    for (std::uint64_t seed : {11u, 22u, 33u}) {
        const GraphSpec s = random_instance(seed, 3, hb);
        const SpectralData sd = spectral_decompose(s);
        CHECK(std::abs(eval_Q(s, sd, 1.0)) <= 1e-10);
    }

    RandomOptions fc;
    fc.force_confined = true;
    for (std::uint64_t seed : {5u, 6u, 7u}) {
        const GraphSpec s = random_instance(seed, 4, fc);
        const SpectralData sd = spectral_decompose(s);
        CHECK(sd.n_confined() >= 1);
    }
}

TEST_CASE("forced half-bound with the canonical family recovers a = 1/2") {
    // C(1) = |b|^2 / 2 for D = 0, so the forced a is 1 - 1/2
    GraphSpec s = make_spec(0.0, {1.0}, {{0.0}});
    const SpectralData sd = spectral_decompose(s);
    double c1 = 0.0;
    for (const auto& line : sd.lines)
        if (line.coupled) c1 += line.weight / (2.0 - line.lambda);
    CHECK(1.0 - c1 == doctest::Approx(0.5));
}

TEST_CASE("truncated oracle reproduces the closed-form energies") {
    const auto ev1 = truncated_oracle(make_spec(2.0, {}, {}), 40);
    double best = 1e9;
    for (double e : ev1) best = std::min(best, std::abs(e - 2.5));
    CHECK(best <= 1e-9);

    const auto ev2 = truncated_oracle(make_spec(0.0, {2.0}, {{0.0}}), 50);
    const double target = 4.0 / std::sqrt(3.0);
    double bp = 1e9, bm = 1e9;
    for (double e : ev2) {
        bp = std::min(bp, std::abs(e - target));
        bm = std::min(bm, std::abs(e + target));
    }
    CHECK(bp <= 1e-6);
    CHECK(bm <= 1e-6);

    const auto ev3 = truncated_oracle(make_spec(0.0, {2.0, 0.0}, {{0.0, 0.0}, {0.0, 5.0}}), 30);
    double b5 = 1e9;
    for (double e : ev3) b5 = std::min(b5, std::abs(e - 5.0));
    CHECK(b5 <= 1e-9);
}

TEST_CASE("small generic fuzz batch holds") {
    FuzzOptions opts;
    opts.count = 40;
    opts.seed = 3;
    opts.max_m = 5;
    const FuzzSummary sum = run_fuzz(opts);
    CHECK(sum.held == sum.count);
    CHECK(sum.violated == 0);
    CHECK(sum.flagged == 0);
}

TEST_CASE("fuzz loop is deterministic in the seed") {
    FuzzOptions opts;
    opts.count = 6;
    opts.seed = 99;
    opts.max_m = 4;
    std::size_t m1 = 0, m2 = 0;
    const GraphSpec a = fuzz_instance(opts, 3, &m1);
    const GraphSpec b = fuzz_instance(opts, 3, &m2);
    CHECK(m1 == m2);
    CHECK(a.a == b.a);
}
