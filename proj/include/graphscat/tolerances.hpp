#pragma once

namespace graphscat::tol {

// Evaluators refuse within this distance of a pole of C.
inline constexpr double pole = 1e-12;

// Pairing roots of rev(J) and J at +-1 for half-bound cancellation.
inline constexpr double root_match = 1e-7;

// Unpaired roots this close to |z|=1 trigger BoundaryAmbiguity.
inline constexpr double boundary_margin = 1e-6;

// Relative threshold on |J(+-1)| deciding a half-bound state.
inline constexpr double half_bound_rel = 1e-8;

// Both |Q(z)| and |Q(1/z)| below this switches eval_R to the reduced form.
inline constexpr double eval_zero = 1e-8;

// a ~ 0 and ||b|| ~ 1 detection for the degenerate reduction.
inline constexpr double degenerate = 1e-10;

// Coefficient pruning factor (relative to max |coeff|).
inline constexpr double drop_rel = 1e-12;

// |total_phase/2pi - nearest integer| above this is NonIntegerWinding.
inline constexpr double winding_integer = 1e-6;

// Adaptive phase-tracking bisection depth cap (~1e-7 relative width).
inline constexpr int refine_depth_cap = 24;

inline double hermiticity(double max_abs) { return 1e-9 * (1.0 + max_abs); }
inline double cluster(double spectral_radius) { return 1e-8 * (1.0 + spectral_radius); }
inline double coupling(double b_norm) { return 1e-9 * (1.0 + b_norm); }

} // namespace graphscat::tol
