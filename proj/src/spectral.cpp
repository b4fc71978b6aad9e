#include "graphscat/spectral.hpp"

#include <cmath>
#include <sstream>

#include "graphscat/errors.hpp"
#include "graphscat/tolerances.hpp"

namespace graphscat {

int SpectralData::m_bar_coupled() const {
    int n = 0;
    for (const auto& l : lines) n += l.coupled ? 1 : 0;
    return n;
}

int SpectralData::n_confined() const {
    int n = 0;
    for (const auto& l : lines) n += l.confined_dim;
    return n;
}

SpectralData spectral_decompose(const GraphSpec& spec) {
    SpectralData sd;
    sd.m = spec.m();
    sd.b_norm = spec.b_norm();
    if (sd.m == 0) return sd;

    const Eigensystem es = hermitian_eigensystem(spec.D);
    sd.spectral_radius =
        std::max(std::abs(es.values.front()), std::abs(es.values.back()));
    const double ctol = tol::cluster(sd.spectral_radius);
    const double wtol = tol::coupling(sd.b_norm);

    std::size_t i = 0;
    while (i < sd.m) {
        std::size_t j = i + 1;
        while (j < sd.m && es.values[j] - es.values[j - 1] <= ctol) ++j;

        SpectralLine line;
        line.multiplicity = static_cast<int>(j - i);
        double sum = 0.0;
        for (std::size_t k = i; k < j; ++k) {
            sum += es.values[k];
            line.raw_eigenvalues.push_back(es.values[k]);
            std::vector<cplx> v = es.vectors.column(k);
            const cplx coef = inner(v, spec.b);
            line.weight += std::norm(coef);
            line.b_coeffs.push_back(coef);
            line.basis.push_back(std::move(v));
        }
        line.lambda = sum / line.multiplicity;
        line.coupled = line.weight > wtol;
        line.confined_dim = line.coupled ? line.multiplicity - 1 : line.multiplicity;
        sd.lines.push_back(std::move(line));
        i = j;
    }
    return sd;
}

cplx eval_C(const SpectralData& sd, cplx z) {
    if (z == cplx(0.0)) throw ZeroArgument("C(z) undefined at z=0");
    const cplx e = z + 1.0 / z;
    cplx c = 0.0;
    for (const auto& line : sd.lines) {
        if (!line.coupled) continue;
        const cplx d = e - line.lambda;
        if (std::abs(d) <= tol::pole) {
            std::ostringstream os;
            os << "z + 1/z within pole tolerance of coupled eigenvalue " << line.lambda;
            throw AtPole(os.str());
        }
        c += line.weight / d;
    }
    return c;
}

cplx eval_Q(const GraphSpec& spec, const SpectralData& sd, cplx z) {
    if (z == cplx(0.0)) return 1.0;
    return 1.0 - z * (spec.a + eval_C(sd, z));
}

// eval_R lives in reflection.cpp; it needs the reduced rational form.

} // namespace graphscat
