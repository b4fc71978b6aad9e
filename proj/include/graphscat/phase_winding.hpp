#pragma once

#include <vector>

#include "graphscat/qrational.hpp"

namespace graphscat {

struct PhaseSample {
    double k = 0.0;     // momentum in [-pi, pi]
    double theta = 0.0; // unwrapped phase of R(e^{ik})
    cplx r;
    bool on_initial_grid = false;
};

struct PhaseTrace {
    std::vector<PhaseSample> samples; // ascending k, closed loop [-pi, pi]
    double total_change = 0.0;
    int winding = 0;
};

/// Winding of R around the unit circle by adaptive phase tracking on the
/// reduced rational form. Intervals with a wrapped phase step >= pi/2 are
/// bisected up to the depth cap; the unwrapped total must land on an
/// integer multiple of 2 pi. Throws RefinementExhausted at the depth cap
/// and NonIntegerWinding if the closed-loop total is not an integer.
PhaseTrace winding_by_phase_tracking(const ReflectionRational& rr, int n_initial);

PhaseTrace winding_by_phase_tracking(const GraphSpec& spec, const SpectralData& sd,
                                     const QRational& q, int n_initial);

} // namespace graphscat
