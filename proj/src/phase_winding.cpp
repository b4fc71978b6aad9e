#include "graphscat/phase_winding.hpp"

#include <cmath>
#include <numbers>

#include "graphscat/errors.hpp"
#include "graphscat/tolerances.hpp"

namespace graphscat {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap_to_pi(double d) {
    while (d > kPi) d -= 2.0 * kPi;
    while (d < -kPi) d += 2.0 * kPi;
    return d;
}

// On the circle R(e^{ik}) = c * e^{ik(s+g)} * conj(J_r)/J_r with |c| = 1 and
// g = deg J_r, so the phase of R moves as (s+g) k - 2 arg J_r(e^{ik}). A
// wrapped-delta test on R alone can alias: a reciprocal zero/pole pair of R
// near the circle swings R by a full 2 pi inside one interval while the
// endpoints barely move. The same pair is a single root of J_r, which turns
// arg J_r by at most ~pi, so refining on J_r's wrapped delta at threshold
// pi/4 cannot lose turns.
struct Node {
    double k;
    cplx r; // R(e^{ik})
    cplx j; // J_r(e^{ik})
};

struct Tracker {
    const ReflectionRational& rr;
    std::vector<Node> out;

    Node sample(double k) const {
        const cplx z = std::polar(1.0, k);
        return {k, rr.eval(z), rr.den_reduced.eval(z)};
    }

    static bool needs_split(const Node& a, const Node& b) {
        if (std::abs(wrap_to_pi(std::arg(b.r) - std::arg(a.r))) >= kPi / 2.0) return true;
        return std::abs(wrap_to_pi(std::arg(b.j) - std::arg(a.j))) >= kPi / 4.0;
    }

    void refine(const Node& n0, const Node& n1, int depth) {
        if (!needs_split(n0, n1)) {
            out.push_back(n1);
            return;
        }
        if (depth >= tol::refine_depth_cap)
            throw RefinementExhausted("phase step not resolved at depth cap");
        const Node mid = sample(0.5 * (n0.k + n1.k));
        refine(n0, mid, depth + 1);
        refine(mid, n1, depth + 1);
    }
};

} // namespace

PhaseTrace winding_by_phase_tracking(const ReflectionRational& rr, int n_initial) {
    if (n_initial < 16) n_initial = 16;

    Tracker tracker{rr, {}};
    std::vector<bool> initial_flag;
    Node prev = tracker.sample(-kPi);
    tracker.out.push_back(prev);
    initial_flag.push_back(true);
    for (int j = 1; j <= n_initial; ++j) {
        const Node next = tracker.sample(-kPi + 2.0 * kPi * j / n_initial);
        tracker.refine(prev, next, 0);
        while (initial_flag.size() < tracker.out.size()) initial_flag.push_back(false);
        initial_flag.back() = true;
        prev = next;
    }

    PhaseTrace trace;
    trace.samples.resize(tracker.out.size());
    double theta = std::arg(tracker.out.front().r);
    for (std::size_t i = 0; i < tracker.out.size(); ++i) {
        if (i > 0)
            theta += wrap_to_pi(std::arg(tracker.out[i].r) - std::arg(tracker.out[i - 1].r));
        trace.samples[i] = {tracker.out[i].k, theta, tracker.out[i].r, initial_flag[i]};
    }
    trace.total_change = trace.samples.back().theta - trace.samples.front().theta;

    const double turns = trace.total_change / (2.0 * kPi);
    const double nearest = std::round(turns);
    if (std::abs(turns - nearest) > tol::winding_integer)
        throw NonIntegerWinding("closed-loop phase change is not a 2 pi multiple");
    trace.winding = static_cast<int>(nearest);
    return trace;
}

PhaseTrace winding_by_phase_tracking(const GraphSpec& spec, const SpectralData& sd,
                                     const QRational& q, int n_initial) {
    const ReflectionRational rr = build_R_rational(spec, sd, q);
    return winding_by_phase_tracking(rr, n_initial);
}

} // namespace graphscat
