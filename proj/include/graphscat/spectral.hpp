#pragma once

#include <vector>

#include "graphscat/graph_spec.hpp"

namespace graphscat {

/// One distinct eigenvalue of D after clustering, with the data the
/// coupling resolvent C(z) = sum_lambda |P_lambda b|^2 / (z + 1/z - lambda)
/// and the confined-state count need.
struct SpectralLine {
    double lambda = 0.0;    // cluster representative (mean)
    int multiplicity = 0;
    double weight = 0.0;
    bool coupled = false;
    int confined_dim = 0;

    std::vector<double> raw_eigenvalues; // per eigenvector, before clustering
    std::vector<std::vector<cplx>> basis; // orthonormal eigenvectors of the cluster
    std::vector<cplx> b_coeffs;           // <v_i, b> per basis vector
};

struct SpectralData {
    std::vector<SpectralLine> lines; // ascending lambda
    std::size_t m = 0;
    double b_norm = 0.0;
    double spectral_radius = 0.0;

    int m_bar() const { return static_cast<int>(lines.size()); }
    int m_bar_coupled() const;
    int n_confined() const;
};

/// Eigendecompose D, cluster degenerate eigenvalues, and attach coupling
/// weights |P_lambda b|^2 and confined-subspace dimensions.
SpectralData spectral_decompose(const GraphSpec& spec);

/// C(z) = b^H (z + 1/z - D)^{-1} b via the spectral lines.
/// Throws ZeroArgument at z=0 and AtPole near a coupled eigenvalue.
cplx eval_C(const SpectralData& sd, cplx z);

/// Q(z) = 1 - z (a + C(z)); Q(0) = 1 exactly.
cplx eval_Q(const GraphSpec& spec, const SpectralData& sd, cplx z);

/// R(z) = -Q(1/z)/Q(z); at the removable half-bound points (z near +-1,
/// both Q values vanish) the reduced rational form is used instead.
cplx eval_R(const GraphSpec& spec, const SpectralData& sd, cplx z);

} // namespace graphscat
