#include <cmath>

#include "graphscat/qrational.hpp"
#include "graphscat/spectral.hpp"
#include "graphscat/tolerances.hpp"
#include "graphscat/errors.hpp"

namespace graphscat {

cplx eval_R(const GraphSpec& spec, const SpectralData& sd, cplx z) {
    if (z == cplx(0.0)) throw ZeroArgument("R(z) undefined at z=0");
    try {
        const cplx qz = eval_Q(spec, sd, z);
        const cplx qinv = eval_Q(spec, sd, 1.0 / z);
        if (std::abs(qz) > tol::eval_zero || std::abs(qinv) > tol::eval_zero)
            return -qinv / qz;
    } catch (const AtPole&) {
        // a pole of C is not a pole of R; fall through to the continuation
    }
    // Removable singularity (half-bound point near z = +-1, or z + 1/z on a
    // coupled eigenvalue): the reduced rational form evaluates it exactly.
    const QRational q = build_Q_rational(spec, sd);
    const ReflectionRational rr = build_R_rational(spec, sd, q);
    return rr.eval(z);
}

} // namespace graphscat
