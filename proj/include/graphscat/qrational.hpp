#pragma once

#include <vector>

#include "graphscat/polynomial.hpp"
#include "graphscat/spectral.hpp"

namespace graphscat {

/// Q(z) as an exact reduced rational: numerator J over the product of
/// z^2 - lambda z + 1 for the coupled distinct eigenvalues only (the
/// uncoupled factors cancel).
struct QRational {
    Polynomial J;
    std::vector<double> denominator_lambdas; // coupled lines, ascending
    int m_bar_coupled = 0;

    cplx eval_denominator(cplx z) const;
    cplx eval_denominator_derivative(cplx z) const;
    /// Q(z) = J(z) / prod(z^2 - lambda z + 1).
    cplx eval(cplx z) const;
};

/// Builds J by polynomial convolution and asserts the degree invariant
/// deg J = 2*m_bar_coupled + [a != 0]. Throws PreconditionViolated on the
/// degenerate family a = 0, ||b|| = 1 and DegreeMismatch if the structural
/// leading coefficient disagrees with the convolution.
QRational build_Q_rational(const GraphSpec& spec, const SpectralData& sd);

/// Whether J vanishes at +1 / -1 (relative to its l1 norm); these are the
/// half-bound points shared by numerator and denominator of R.
struct UnitRootFlags {
    bool at_plus_one = false;
    bool at_minus_one = false;
    int count() const { return (at_plus_one ? 1 : 0) + (at_minus_one ? 1 : 0); }
};
UnitRootFlags detect_unit_roots(const Polynomial& j);

/// R(z) = -z^s * num(z)/den(z) with num = rev(J), den = J and
/// s = 2*m_bar_coupled - deg J (s = -1 iff a != 0). The *_reduced pair has
/// the shared half-bound factors (z -+ 1) divided out, so evaluation on
/// the unit circle is pole-free whenever the boundary margin holds.
struct ReflectionRational {
    Polynomial num;
    Polynomial den;
    int monomial_exponent = 0;
    UnitRootFlags half_bound;
    Polynomial num_reduced;
    Polynomial den_reduced;

    cplx eval(cplx z) const;
    /// eval at z = e^{ik}.
    cplx eval_unit(double k) const;
};

/// Assembles the reflection rational and cross-checks it pointwise against
/// the resolvent-based eval_R at 20 deterministic sample points; throws
/// ConsistencyFailure on disagreement.
ReflectionRational build_R_rational(const GraphSpec& spec, const SpectralData& sd,
                                    const QRational& q);

struct WindingResult {
    int winding = 0;
    int zeros_inside = 0;
    int poles_inside = 0;
    double min_boundary_margin = 0.0; // min |1 - |root|| over unpaired roots
};

/// Winding of R around the unit circle by the argument principle:
/// zeros of rev(J) inside minus zeros of J inside minus the simple pole at
/// z=0 when a != 0. Half-bound roots at +-1 are cancelled pairwise; any
/// other root within the boundary margin of the circle throws
/// BoundaryAmbiguity rather than being silently classified.
WindingResult winding_by_argument_principle(const GraphSpec& spec, const SpectralData& sd,
                                            const QRational& q);

} // namespace graphscat
