#pragma once

#include <vector>

#include "graphscat/qrational.hpp"

namespace graphscat {

/// Normalizable eigenstate decaying as (sign e^{-kappa})^x along the tail.
struct EvanescentState {
    int sign = +1;          // tail alternation
    double kappa = 0.0;     // decay rate, > 0
    double z = 0.0;         // sign * e^{-kappa}, the root of Q
    double energy = 0.0;    // sign * 2 cosh(kappa)
    std::vector<cplx> psi;  // internal amplitudes
};

struct HalfBoundFlags {
    bool at_plus_one = false;
    bool at_minus_one = false;
    int n_h() const { return (at_plus_one ? 1 : 0) + (at_minus_one ? 1 : 0); }
};

/// Eigenstate with zero amplitude on the whole tail: an eigenvector of D
/// orthogonal to b.
struct ConfinedState {
    double lambda = 0.0;
    std::vector<cplx> psi; // unit norm
};

struct BoundStateCensus {
    std::size_t m = 0;
    int n_b = 0;
    int n_h = 0;
    int n_c = 0;
    std::vector<EvanescentState> evanescent;
    HalfBoundFlags half_bound;
    std::vector<ConfinedState> confined;
};

/// Evanescent states from the inside-disk roots of J, cross-checked against
/// an independent sign-change bisection census of x Q(x) on the real
/// subintervals delimited by the poles of C. Throws OracleDisagreement if
/// the two enumerations differ and BoundaryAmbiguity near |z| = 1.
std::vector<EvanescentState> find_evanescent(const GraphSpec& spec, const SpectralData& sd,
                                             const QRational& q);

HalfBoundFlags detect_half_bound(const GraphSpec& spec, const SpectralData& sd);
HalfBoundFlags detect_half_bound(const QRational& q);

/// One orthonormal confined state per confined dimension: whole clusters
/// when uncoupled, the orthogonal complement of P_lambda b inside coupled
/// clusters.
std::vector<ConfinedState> count_confined(const SpectralData& sd);

/// Internal amplitudes psi = e^{-kappa} (2 cosh kappa -+ D)^{-1} b of the
/// evanescent state, solved in the coupled subspace.
std::vector<cplx> bound_amplitudes(const GraphSpec& spec, const SpectralData& sd,
                                   int sign, double kappa);

struct ScatteringSolution {
    cplx R;
    std::vector<cplx> psi;
};

/// Reflection coefficient and internal amplitudes at momentum k.
/// Throws DegenerateMomentum for k in pi*Z and AtPole when 2 cos k hits a
/// coupled eigenvalue.
ScatteringSolution scattering_amplitudes(const GraphSpec& spec, const SpectralData& sd,
                                         double k);

/// Dense (m+1+L)-dimensional Hamiltonian: the graph block plus an L-vertex
/// unit-weight tail.
CMatrix truncated_hamiltonian(const GraphSpec& spec, int tail_len);

/// Max eigen-equation residual |(H s - E s)_v| over every vertex except the
/// outermost tail vertex. `amps` is laid out [attachment, internal x m,
/// tail x=2..L+1].
double eigen_residual(const GraphSpec& spec, const std::vector<cplx>& amps, double energy);

// Assembled states for residual checks (layout as eigen_residual expects).
std::vector<cplx> assemble_evanescent(const GraphSpec& spec, const EvanescentState& st,
                                      int tail_len);
std::vector<cplx> assemble_scattering(const GraphSpec& spec, const ScatteringSolution& sol,
                                      double k, int tail_len);
std::vector<cplx> assemble_confined(const GraphSpec& spec, const ConfinedState& st,
                                    int tail_len);

} // namespace graphscat
