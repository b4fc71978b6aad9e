#include "graphscat/qrational.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "graphscat/errors.hpp"
#include "graphscat/rng.hpp"
#include "graphscat/tolerances.hpp"

namespace graphscat {

namespace {

Polynomial quadratic_factor(double lambda) {
    return Polynomial({1.0, -lambda, 1.0}); // z^2 - lambda z + 1
}

} // namespace

cplx QRational::eval_denominator(cplx z) const {
    cplx p = 1.0;
    for (double lam : denominator_lambdas) p *= (z * z - lam * z + 1.0);
    return p;
}

cplx QRational::eval_denominator_derivative(cplx z) const {
    // product rule over the quadratic factors
    cplx d = 0.0;
    for (std::size_t i = 0; i < denominator_lambdas.size(); ++i) {
        cplx term = 2.0 * z - denominator_lambdas[i];
        for (std::size_t j = 0; j < denominator_lambdas.size(); ++j)
            if (j != i) term *= (z * z - denominator_lambdas[j] * z + 1.0);
        d += term;
    }
    return d;
}

cplx QRational::eval(cplx z) const {
    return J.eval(z) / eval_denominator(z);
}

QRational build_Q_rational(const GraphSpec& spec, const SpectralData& sd) {
    if (std::abs(spec.a) <= tol::degenerate &&
        std::abs(sd.b_norm - 1.0) <= tol::degenerate)
        throw PreconditionViolated("a = 0 and ||b|| = 1: reduce the instance first");

    std::vector<double> lambdas;
    std::vector<double> weights;
    for (const auto& line : sd.lines) {
        if (!line.coupled) continue;
        lambdas.push_back(line.lambda);
        weights.push_back(line.weight);
    }
    const int mbc = static_cast<int>(lambdas.size());

    // prefix/suffix products of the quadratic factors
    std::vector<Polynomial> prefix(mbc + 1, Polynomial::constant(1.0));
    std::vector<Polynomial> suffix(mbc + 1, Polynomial::constant(1.0));
    for (int i = 0; i < mbc; ++i) prefix[i + 1] = prefix[i] * quadratic_factor(lambdas[i]);
    for (int i = mbc; i-- > 0;) suffix[i] = quadratic_factor(lambdas[i]) * suffix[i + 1];

    const bool a_nonzero = spec.a != 0.0;
    Polynomial j = a_nonzero ? Polynomial({1.0, -spec.a}) * prefix[mbc] : prefix[mbc];
    for (int i = 0; i < mbc; ++i) {
        Polynomial term = prefix[i] * suffix[i + 1];                 // product without i
        j = j - Polynomial({0.0, 0.0, weights[i]}) * term;           // minus w z^2 * term
    }

    const int expected_degree = 2 * mbc + (a_nonzero ? 1 : 0);
    if (j.degree() != expected_degree)
        throw DegreeMismatch("J degree does not match 2*m_bar_coupled + [a != 0]");
    const double expected_lead = a_nonzero ? -spec.a : 1.0 - sd.b_norm * sd.b_norm;
    const double lead = j.coeffs().back();
    if (std::abs(lead - expected_lead) > 1e-9 * (1.0 + j.max_abs_coeff()))
        throw DegreeMismatch("leading coefficient of J deviates from its closed form");
    if (j[0] != 1.0) {
        // constant term is an exact product of ones minus nothing
        if (std::abs(j[0] - 1.0) > 1e-12)
            throw DegreeMismatch("J(0) != 1");
    }

    QRational q;
    q.J = std::move(j);
    q.denominator_lambdas = std::move(lambdas);
    q.m_bar_coupled = mbc;
    return q;
}

UnitRootFlags detect_unit_roots(const Polynomial& j) {
    const double scale = tol::half_bound_rel * j.l1_norm();
    UnitRootFlags f;
    f.at_plus_one = std::abs(j.eval(1.0)) <= scale;
    f.at_minus_one = std::abs(j.eval(-1.0)) <= scale;
    return f;
}

cplx ReflectionRational::eval(cplx z) const {
    if (z == cplx(0.0) && monomial_exponent < 0)
        throw AtTruePole("R has a pole at z = 0");
    const cplx den = den_reduced.eval(z);
    if (std::abs(den) < 1e-300) throw AtTruePole("reduced denominator vanishes");
    cplx r = -num_reduced.eval(z) / den;
    if (monomial_exponent == -1)
        r /= z;
    else
        for (int i = 0; i < monomial_exponent; ++i) r *= z;
    return r;
}

cplx ReflectionRational::eval_unit(double k) const {
    return eval(std::polar(1.0, k));
}

ReflectionRational build_R_rational(const GraphSpec& spec, const SpectralData& sd,
                                    const QRational& q) {
    ReflectionRational rr;
    rr.den = q.J;
    rr.num = q.J.reversed();
    rr.monomial_exponent = 2 * q.m_bar_coupled - q.J.degree();

    rr.half_bound = detect_unit_roots(q.J);
    rr.num_reduced = rr.num;
    rr.den_reduced = rr.den;
    if (rr.half_bound.at_plus_one) {
        rr.num_reduced = rr.num_reduced.deflate_real_root(1.0);
        rr.den_reduced = rr.den_reduced.deflate_real_root(1.0);
    }
    if (rr.half_bound.at_minus_one) {
        rr.num_reduced = rr.num_reduced.deflate_real_root(-1.0);
        rr.den_reduced = rr.den_reduced.deflate_real_root(-1.0);
    }

    // pointwise agreement with the resolvent route
    Rng rng(0x5eedbeefULL);
    int checked = 0;
    int attempts = 0;
    while (checked < 20 && attempts < 400) {
        ++attempts;
        const double rad = rng.uniform(0.5, 2.0);
        const double ang = rng.uniform(-3.14, 3.14);
        const cplx z = std::polar(rad, ang);
        cplx direct;
        try {
            const cplx qz = eval_Q(spec, sd, z);
            const cplx qi = eval_Q(spec, sd, 1.0 / z);
            if (std::abs(qz) < 1e-3) continue; // too near a zero for a fair compare
            direct = -qi / qz;
        } catch (const AtPole&) {
            continue;
        }
        const cplx rational = rr.eval(z);
        if (std::abs(rational - direct) > 1e-8 * (1.0 + std::abs(direct))) {
            std::ostringstream os;
            os << "rational form of R deviates from resolvent evaluation at z = ("
               << z.real() << ", " << z.imag() << ")";
            throw ConsistencyFailure(os.str());
        }
        ++checked;
    }
    return rr;
}

WindingResult winding_by_argument_principle(const GraphSpec& spec, const SpectralData& sd,
                                            const QRational& q) {
    const ReflectionRational rr = build_R_rational(spec, sd, q);

    std::vector<cplx> den_roots = poly_roots(rr.den);
    std::vector<cplx> num_roots = poly_roots(rr.num);

    // Cancel the half-bound pairs: a root of J at +-1 always has a mirror
    // root of rev(J) there.
    auto remove_near = [](std::vector<cplx>& roots, double at) {
        for (auto it = roots.begin(); it != roots.end(); ++it)
            if (std::abs(*it - at) <= tol::root_match) {
                roots.erase(it);
                return true;
            }
        return false;
    };
    for (double at : {1.0, -1.0}) {
        const bool flagged = (at > 0) ? rr.half_bound.at_plus_one : rr.half_bound.at_minus_one;
        if (!flagged) continue;
        const bool a = remove_near(den_roots, at);
        const bool b = remove_near(num_roots, at);
        if (!a || !b)
            throw BoundaryAmbiguity("half-bound flag without a matching root pair");
    }

    WindingResult res;
    res.min_boundary_margin = std::numeric_limits<double>::infinity();
    auto count_inside = [&res](const std::vector<cplx>& roots) {
        int inside = 0;
        for (const cplx& r : roots) {
            const double margin = std::abs(1.0 - std::abs(r));
            res.min_boundary_margin = std::min(res.min_boundary_margin, margin);
            if (margin <= tol::boundary_margin) {
                std::ostringstream os;
                os << "root at (" << r.real() << ", " << r.imag()
                   << ") lies within " << margin << " of the unit circle";
                throw BoundaryAmbiguity(os.str());
            }
            if (std::abs(r) < 1.0) ++inside;
        }
        return inside;
    };
    res.zeros_inside = count_inside(num_roots);
    res.poles_inside = count_inside(den_roots);
    if (rr.monomial_exponent == -1) ++res.poles_inside; // simple pole at z = 0
    res.winding = res.zeros_inside - res.poles_inside;
    return res;
}

} // namespace graphscat
