#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "graphscat/errors.hpp"
#include "graphscat/phase_winding.hpp"
#include "test_helpers.hpp"

using namespace graphscat;
using testutil::make_spec;

namespace {

PhaseTrace track(const GraphSpec& spec, int n = 512) {
    const SpectralData sd = spectral_decompose(spec);
    const QRational q = build_Q_rational(spec, sd);
    return winding_by_phase_tracking(spec, sd, q, n);
}

} // namespace

TEST_CASE("constant R = -1 gives winding 0") {
    const PhaseTrace t = track(make_spec(0.0, {}, {}));
    CHECK(t.winding == 0);
    CHECK(std::abs(t.total_change) <= 1e-9);
}

TEST_CASE("R = 1/z traverses e^{-ik}: winding -1") {
    const PhaseTrace t = track(make_spec(1.0, {}, {}));
    CHECK(t.winding == -1);
    CHECK(t.total_change == doctest::Approx(-2.0 * std::numbers::pi));
}

TEST_CASE("half-bound canonical instance winds +1") {
    const PhaseTrace t = track(make_spec(0.5, {1.0}, {{0.0}}));
    CHECK(t.winding == +1);
}

TEST_CASE("m=0, a=2 winds -2") {
    CHECK(track(make_spec(2.0, {}, {})).winding == -2);
}

TEST_CASE("trace samples are unimodular and phase steps resolved") {
    const PhaseTrace t = track(make_spec(2.0, {0.5, -1.0}, {{1.0, 0.5}, {0.5, -1.0}}));
    for (std::size_t i = 0; i < t.samples.size(); ++i) {
        CHECK(std::abs(std::abs(t.samples[i].r) - 1.0) <= 1e-10);
        if (i > 0) {
            const double step = t.samples[i].theta - t.samples[i - 1].theta;
            CHECK(std::abs(step) < std::numbers::pi / 2);
            CHECK(t.samples[i].k > t.samples[i - 1].k);
        }
    }
    CHECK(std::abs(t.total_change / (2 * std::numbers::pi) - t.winding) <= 1e-6);
}

TEST_CASE("winding is grid-independent and matches the argument principle") {
    testutil::Rng rng(9001);
    int checked = 0;
    while (checked < 30) {
        const GraphSpec s = testutil::random_valid_spec(rng, 1 + checked % 5);
        const SpectralData sd = spectral_decompose(s);
        QRational q;
        try {
            q = build_Q_rational(s, sd);
        } catch (const Error&) {
            continue;
        }
        int w_roots = 0, w_phase = 0, w_phase2 = 0;
        try {
            w_roots = winding_by_argument_principle(s, sd, q).winding;
            w_phase = winding_by_phase_tracking(s, sd, q, 64).winding;
            w_phase2 = winding_by_phase_tracking(s, sd, q, 128).winding;
        } catch (const BoundaryAmbiguity&) {
            continue;
        } catch (const RefinementExhausted&) {
            continue;
        }
        CHECK(w_phase == w_roots);
        CHECK(w_phase2 == w_phase);
        ++checked;
    }
}

TEST_CASE("n_initial is clamped to at least 16") {
    const PhaseTrace t = track(make_spec(1.0, {}, {}), 2);
    int initial = 0;
    for (const auto& s : t.samples) initial += s.on_initial_grid ? 1 : 0;
    CHECK(initial >= 17); // 16 intervals plus the closing endpoint
    CHECK(t.winding == -1);
}
