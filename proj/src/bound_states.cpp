#include "graphscat/bound_states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "graphscat/errors.hpp"
#include "graphscat/tolerances.hpp"

namespace graphscat {

namespace {

// x * Q(x) written without the 1/x in C: finite at x = 0 and polynomial-
// ratio smooth between the real poles mu of C, which makes it the natural
// bisection target on (-1,0) u (0,1).
double xq(const GraphSpec& spec, const SpectralData& sd, double x) {
    double v = x - spec.a * x * x;
    for (const auto& line : sd.lines) {
        if (!line.coupled) continue;
        v -= line.weight * x * x * x / (x * x - line.lambda * x + 1.0);
    }
    return v;
}

// Real poles of C strictly inside the unit interval windows: the inside
// root of z^2 - lambda z + 1 for each coupled |lambda| > 2.
std::vector<double> inside_pole_positions(const SpectralData& sd) {
    std::vector<double> poles;
    for (const auto& line : sd.lines) {
        if (!line.coupled) continue;
        const double lam = line.lambda;
        if (std::abs(lam) <= 2.0) continue;
        const double half = lam / 2.0;
        const double root = std::sqrt(half * half - 1.0);
        poles.push_back(lam > 0 ? half - root : half + root);
    }
    std::sort(poles.begin(), poles.end());
    return poles;
}

// Sign-change bisection census over one window (lo, hi), poles given in
// ascending order. At most one root of Q lives between consecutive poles
// because dQ/dx has a strict sign at every root.
std::vector<double> bisect_window(const GraphSpec& spec, const SpectralData& sd,
                                  double lo, double hi, const std::vector<double>& poles) {
    std::vector<double> cuts{lo};
    for (double p : poles)
        if (p > lo && p < hi) cuts.push_back(p);
    cuts.push_back(hi);

    std::vector<double> found;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double width = cuts[i + 1] - cuts[i];
        double u = cuts[i] + 1e-9 * width;
        double v = cuts[i + 1] - 1e-9 * width;
        double fu = xq(spec, sd, u);
        double fv = xq(spec, sd, v);
        if (fu == 0.0) { found.push_back(u); continue; }
        if (fv == 0.0) { found.push_back(v); continue; }
        if ((fu < 0.0) == (fv < 0.0)) continue;
        for (int it = 0; it < 200 && (v - u) > 1e-15; ++it) {
            const double mid = 0.5 * (u + v);
            const double fm = xq(spec, sd, mid);
            if (fm == 0.0) { u = v = mid; break; }
            if ((fm < 0.0) == (fu < 0.0)) {
                u = mid;
                fu = fm;
            } else {
                v = mid;
            }
        }
        found.push_back(0.5 * (u + v));
    }
    return found;
}

std::vector<cplx> resolvent_apply(const SpectralData& sd, const std::vector<cplx>& b,
                                  double energy) {
    // (E - D)^{-1} b restricted to the coupled subspace; uncoupled clusters
    // carry no component of b and stay dynamically disconnected.
    std::vector<cplx> out(sd.m, cplx(0.0));
    for (const auto& line : sd.lines) {
        if (!line.coupled) continue;
        for (std::size_t i = 0; i < line.basis.size(); ++i) {
            const double lam = line.raw_eigenvalues[i];
            const cplx coef = inner(line.basis[i], b);
            if (std::abs(coef) == 0.0) continue;
            const double gap = energy - lam;
            if (std::abs(gap) <= 1e-12 * (1.0 + std::abs(lam)))
                throw SingularSolve("energy collides with a coupled eigenvalue");
            const cplx scale = coef / gap;
            for (std::size_t r = 0; r < sd.m; ++r) out[r] += scale * line.basis[i][r];
        }
    }
    return out;
}

} // namespace

std::vector<EvanescentState> find_evanescent(const GraphSpec& spec, const SpectralData& sd,
                                             const QRational& q) {
    const double margin = tol::boundary_margin;
    std::vector<double> xs;
    for (const cplx& r : poly_roots(q.J)) {
        if (std::abs(r.imag()) > 1e-8) continue;
        const double x = r.real();
        if (std::abs(x) <= margin || std::abs(x) >= 1.0 - margin) continue;
        // polish on the real line
        double px = x;
        const Polynomial dj = q.J.derivative();
        for (int it = 0; it < 8; ++it) {
            const double f = q.J.eval(px);
            const double df = dj.eval(px);
            if (df == 0.0) break;
            const double step = f / df;
            if (std::abs(step) > 0.1) break;
            px -= step;
            if (std::abs(step) < 1e-16 * (1.0 + std::abs(px))) break;
        }
        xs.push_back(px);
    }
    std::sort(xs.begin(), xs.end());

    // independent census by bisection between the poles of C
    const std::vector<double> poles = inside_pole_positions(sd);
    std::vector<double> oracle = bisect_window(spec, sd, -1.0 + margin, -margin, poles);
    std::vector<double> pos = bisect_window(spec, sd, margin, 1.0 - margin, poles);
    oracle.insert(oracle.end(), pos.begin(), pos.end());
    std::sort(oracle.begin(), oracle.end());

    if (oracle.size() != xs.size()) {
        std::ostringstream os;
        os << "root census " << xs.size() << " vs bisection census " << oracle.size();
        throw OracleDisagreement(os.str());
    }
    for (std::size_t i = 0; i < xs.size(); ++i)
        if (std::abs(xs[i] - oracle[i]) > tol::root_match)
            throw OracleDisagreement("bisection census found a different root location");

    std::vector<EvanescentState> states;
    for (double x : xs) {
        EvanescentState st;
        st.sign = x > 0 ? +1 : -1;
        st.kappa = -std::log(std::abs(x));
        st.z = x;
        st.energy = st.sign * 2.0 * std::cosh(st.kappa);
        st.psi = bound_amplitudes(spec, sd, st.sign, st.kappa);
        states.push_back(std::move(st));
    }
    return states;
}

HalfBoundFlags detect_half_bound(const QRational& q) {
    const UnitRootFlags f = detect_unit_roots(q.J);
    return HalfBoundFlags{f.at_plus_one, f.at_minus_one};
}

HalfBoundFlags detect_half_bound(const GraphSpec& spec, const SpectralData& sd) {
    return detect_half_bound(build_Q_rational(spec, sd));
}

std::vector<ConfinedState> count_confined(const SpectralData& sd) {
    std::vector<ConfinedState> states;
    for (const auto& line : sd.lines) {
        if (line.confined_dim == 0) continue;
        const std::size_t mult = line.basis.size();
        if (!line.coupled) {
            for (std::size_t i = 0; i < mult; ++i)
                states.push_back(ConfinedState{line.raw_eigenvalues[i], line.basis[i]});
            continue;
        }
        // Orthonormal complement of the b-coupled direction, built in the
        // cluster's coefficient space by Gram-Schmidt against chat = c/|c|.
        std::vector<cplx> chat = line.b_coeffs;
        const double cn = norm2(chat);
        for (auto& v : chat) v /= cn;
        std::vector<std::vector<cplx>> kept{chat};
        for (std::size_t j = 0; j < mult && kept.size() < mult; ++j) {
            std::vector<cplx> w(mult, cplx(0.0));
            w[j] = 1.0;
            for (int pass = 0; pass < 2; ++pass)
                for (const auto& u : kept) {
                    const cplx proj = inner(u, w);
                    for (std::size_t i = 0; i < mult; ++i) w[i] -= proj * u[i];
                }
            const double wn = norm2(w);
            if (wn < 1e-8) continue;
            for (auto& v : w) v /= wn;

            ConfinedState st;
            st.lambda = line.lambda;
            st.psi.assign(sd.m, cplx(0.0));
            for (std::size_t i = 0; i < mult; ++i)
                for (std::size_t r = 0; r < sd.m; ++r) st.psi[r] += w[i] * line.basis[i][r];
            states.push_back(std::move(st));
            kept.push_back(std::move(w));
        }
    }
    return states;
}

std::vector<cplx> bound_amplitudes(const GraphSpec& spec, const SpectralData& sd,
                                   int sign, double kappa) {
    const double energy = sign * 2.0 * std::cosh(kappa);
    const double z = sign * std::exp(-kappa);
    std::vector<cplx> psi = resolvent_apply(sd, spec.b, energy);
    for (auto& v : psi) v *= z;
    return psi;
}

ScatteringSolution scattering_amplitudes(const GraphSpec& spec, const SpectralData& sd,
                                         double k) {
    if (std::abs(std::remainder(k, std::numbers::pi)) < 1e-12)
        throw DegenerateMomentum("momentum in pi Z has no scattering state");
    const cplx z = std::polar(1.0, k);
    const double energy = 2.0 * std::cos(k);
    for (const auto& line : sd.lines)
        if (line.coupled && std::abs(energy - line.lambda) <= tol::pole)
            throw AtPole("2 cos k collides with a coupled eigenvalue");

    ScatteringSolution sol;
    sol.R = eval_R(spec, sd, z);
    const cplx phi1 = std::conj(z) + sol.R * z; // e^{-ik} + R e^{ik}
    sol.psi = resolvent_apply(sd, spec.b, energy);
    for (auto& v : sol.psi) v *= phi1;
    return sol;
}

CMatrix truncated_hamiltonian(const GraphSpec& spec, int tail_len) {
    const std::size_t m = spec.m();
    const std::size_t n = m + 1 + static_cast<std::size_t>(tail_len);
    CMatrix h(n, n);
    h(0, 0) = spec.a;
    for (std::size_t i = 0; i < m; ++i) {
        h(i + 1, 0) = spec.b[i];
        h(0, i + 1) = std::conj(spec.b[i]);
        for (std::size_t j = 0; j < m; ++j) h(i + 1, j + 1) = spec.D(i, j);
    }
    if (tail_len > 0) {
        h(0, m + 1) = 1.0;
        h(m + 1, 0) = 1.0;
        for (std::size_t t = m + 1; t + 1 < n; ++t) {
            h(t, t + 1) = 1.0;
            h(t + 1, t) = 1.0;
        }
    }
    return h;
}

double eigen_residual(const GraphSpec& spec, const std::vector<cplx>& amps, double energy) {
    const std::size_t m = spec.m();
    if (amps.size() < m + 1 + 3) throw Error("eigen_residual needs a tail of length >= 3");
    const int tail_len = static_cast<int>(amps.size() - m - 1);
    const CMatrix h = truncated_hamiltonian(spec, tail_len);
    const std::size_t n = amps.size();
    double worst = 0.0;
    for (std::size_t v = 0; v + 1 < n; ++v) { // outermost tail vertex excluded
        cplx hv = 0.0;
        for (std::size_t w = 0; w < n; ++w) hv += h(v, w) * amps[w];
        worst = std::max(worst, std::abs(hv - energy * amps[v]));
    }
    return worst;
}

std::vector<cplx> assemble_evanescent(const GraphSpec& spec, const EvanescentState& st,
                                      int tail_len) {
    const std::size_t m = spec.m();
    std::vector<cplx> amps(m + 1 + tail_len);
    amps[0] = st.z; // tail position x = 1
    for (std::size_t i = 0; i < m; ++i) amps[1 + i] = st.psi[i];
    for (int x = 2; x <= tail_len + 1; ++x)
        amps[m + x - 1] = std::pow(cplx(st.z), x);
    return amps;
}

std::vector<cplx> assemble_scattering(const GraphSpec& spec, const ScatteringSolution& sol,
                                      double k, int tail_len) {
    const std::size_t m = spec.m();
    std::vector<cplx> amps(m + 1 + tail_len);
    auto tail_amp = [&](int x) {
        return std::polar(1.0, -k * x) + sol.R * std::polar(1.0, k * x);
    };
    amps[0] = tail_amp(1);
    for (std::size_t i = 0; i < m; ++i) amps[1 + i] = sol.psi[i];
    for (int x = 2; x <= tail_len + 1; ++x) amps[m + x - 1] = tail_amp(x);
    return amps;
}

std::vector<cplx> assemble_confined(const GraphSpec& spec, const ConfinedState& st,
                                    int tail_len) {
    const std::size_t m = spec.m();
    std::vector<cplx> amps(m + 1 + tail_len, cplx(0.0));
    for (std::size_t i = 0; i < m; ++i) amps[1 + i] = st.psi[i];
    return amps;
}

} // namespace graphscat
