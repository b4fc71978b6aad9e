#include "graphscat/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "graphscat/errors.hpp"
#include "graphscat/rng.hpp"
#include "graphscat/tolerances.hpp"

namespace graphscat {

namespace {

bool is_degenerate(const GraphSpec& spec) {
    return spec.m() >= 1 && std::abs(spec.a) <= tol::degenerate &&
           std::abs(spec.b_norm() - 1.0) <= tol::degenerate;
}

// Unitary with U b = e_1 for unit b: a Householder reflection onto
// e^{i phi} e_1 (phi = arg b_1) followed by the phase rotation that lands
// exactly on e_1.
CMatrix householder_to_e1(const std::vector<cplx>& b) {
    const std::size_t m = b.size();
    const double phi = std::abs(b[0]) > 1e-14 ? std::arg(b[0]) : 0.0;
    const cplx target_phase = std::polar(1.0, phi);

    std::vector<cplx> u(m);
    u[0] = b[0] - target_phase;
    for (std::size_t i = 1; i < m; ++i) u[i] = b[i];
    const double un = norm2(u);

    CMatrix h = CMatrix::identity(m);
    if (un > 1e-14) {
        for (auto& v : u) v /= un;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) h(i, j) -= 2.0 * u[i] * std::conj(u[j]);
    }
    // rotate the residual phase off the first row
    for (std::size_t j = 0; j < m; ++j) h(0, j) *= std::conj(target_phase);
    return h;
}

} // namespace

GraphSpec reduce_degenerate(const GraphSpec& spec) {
    GraphSpec cur = spec;
    while (is_degenerate(cur)) {
        const std::size_t m = cur.m();
        std::vector<cplx> bhat = cur.b;
        const double bn = norm2(bhat);
        for (auto& v : bhat) v /= bn;
        const CMatrix u = householder_to_e1(bhat);

        // D' = U D U^H
        CMatrix ud(m, m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                cplx s = 0.0;
                for (std::size_t k = 0; k < m; ++k) s += u(i, k) * cur.D(k, j);
                ud(i, j) = s;
            }
        CMatrix dprime(m, m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                cplx s = 0.0;
                for (std::size_t k = 0; k < m; ++k) s += ud(i, k) * std::conj(u(j, k));
                dprime(i, j) = s;
            }

        GraphSpec next;
        next.a = dprime(0, 0).real();
        next.b.resize(m - 1);
        next.D = CMatrix(m - 1, m - 1);
        for (std::size_t i = 1; i < m; ++i) {
            next.b[i - 1] = dprime(i, 0);
            for (std::size_t j = 1; j < m; ++j) next.D(i - 1, j - 1) = dprime(i, j);
        }
        cur = std::move(next);
    }
    return cur;
}

BoundStateCensus classify(const GraphSpec& spec) {
    const SpectralData sd = spectral_decompose(spec);
    const QRational q = build_Q_rational(spec, sd);

    BoundStateCensus census;
    census.m = spec.m();
    census.evanescent = find_evanescent(spec, sd, q);
    census.half_bound = detect_half_bound(q);
    census.confined = count_confined(sd);
    census.n_b = static_cast<int>(census.evanescent.size());
    census.n_h = census.half_bound.n_h();
    census.n_c = static_cast<int>(census.confined.size());
    return census;
}

VerificationReport verify(const GraphSpec& spec, int n_initial_phase_grid) {
    VerificationReport rep;
    GraphSpec work = spec;
    if (is_degenerate(work)) {
        work = reduce_degenerate(work);
        rep.reduced = true;
    }

    bool have_census = false, have_roots = false, have_phase = false;
    try {
        const SpectralData sd = spectral_decompose(work);
        const QRational q = build_Q_rational(work, sd);

        try {
            rep.census = classify(work);
            have_census = true;
        } catch (const Error& e) {
            rep.diagnostics.push_back(std::string("census: ") + e.what());
        }
        try {
            rep.w_roots = winding_by_argument_principle(work, sd, q).winding;
            have_roots = true;
        } catch (const Error& e) {
            rep.diagnostics.push_back(std::string("argument principle: ") + e.what());
        }
        try {
            rep.w_phase = winding_by_phase_tracking(work, sd, q, n_initial_phase_grid).winding;
            have_phase = true;
        } catch (const Error& e) {
            rep.diagnostics.push_back(std::string("phase tracking: ") + e.what());
        }
    } catch (const Error& e) {
        rep.diagnostics.push_back(e.what());
    }

    if (have_census) {
        const long long m = static_cast<long long>(work.m());
        rep.rhs = Rational{4 * (m - rep.census.n_b - rep.census.n_c) - 2 * rep.census.n_h, 2};
        if (rep.rhs.num % rep.rhs.den == 0) rep.rhs = Rational{rep.rhs.num / rep.rhs.den, 1};
    }

    rep.holds = have_census && have_roots && have_phase && rep.diagnostics.empty() &&
                rep.rhs.is_integer() && rep.w_phase == rep.w_roots &&
                rep.rhs.equals(rep.w_phase);
    return rep;
}

GraphSpec random_instance(std::uint64_t seed, std::size_t m, const RandomOptions& opts) {
    Rng rng(seed);
    const long long w = std::max<long long>(1, std::llround(opts.weight_scale));
    auto backbone = [&]() {
        return static_cast<double>(rng.randint(-w, w)) + 0.01 * rng.uniform(-1.0, 1.0);
    };

    GraphSpec spec;
    spec.a = backbone();
    spec.b.resize(m);
    for (auto& v : spec.b) v = cplx(backbone(), backbone());
    spec.D = CMatrix(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        spec.D(i, i) = backbone();
        for (std::size_t j = i + 1; j < m; ++j) {
            spec.D(i, j) = cplx(backbone(), backbone());
            spec.D(j, i) = std::conj(spec.D(i, j));
        }
    }

    if (opts.force_confined && m >= 1) {
        if (m == 1) {
            spec.b[0] = 0.0; // the only way a 1-dim eigenvector avoids b
        } else {
            // Rotate D so one eigenvector lands orthogonal to b: pick a unit
            // target t with <t, b> = 0, reflect the first eigenvector of D
            // onto t, and conjugate.
            std::vector<cplx> bhat = spec.b;
            const double bn = norm2(bhat);
            for (auto& x : bhat) x /= bn;
            std::vector<cplx> t;
            while (true) {
                t.assign(m, cplx(0.0));
                for (auto& x : t) x = cplx(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
                for (int pass = 0; pass < 2; ++pass) {
                    const cplx proj = inner(bhat, t);
                    for (std::size_t i = 0; i < m; ++i) t[i] -= proj * bhat[i];
                }
                const double tn = norm2(t);
                if (tn > 1e-6) {
                    for (auto& x : t) x /= tn;
                    break;
                }
            }

            const Eigensystem es = hermitian_eigensystem(spec.D);
            std::vector<cplx> v = es.vectors.column(0);
            // phase-align the target so <t', v> is real non-negative
            const cplx tv = inner(t, v);
            const cplx phase = std::abs(tv) > 1e-14 ? tv / std::abs(tv) : cplx(1.0);
            std::vector<cplx> u(m);
            for (std::size_t i = 0; i < m; ++i) u[i] = v[i] - phase * t[i];
            const double un = norm2(u);
            if (un > 1e-12) {
                for (auto& x : u) x /= un;
                // D <- H D H with H = I - 2 u u^H (Hermitian involution)
                CMatrix h = CMatrix::identity(m);
                for (std::size_t i = 0; i < m; ++i)
                    for (std::size_t j = 0; j < m; ++j)
                        h(i, j) -= 2.0 * u[i] * std::conj(u[j]);
                CMatrix hd(m, m);
                for (std::size_t i = 0; i < m; ++i)
                    for (std::size_t j = 0; j < m; ++j) {
                        cplx s = 0.0;
                        for (std::size_t k = 0; k < m; ++k) s += h(i, k) * spec.D(k, j);
                        hd(i, j) = s;
                    }
                CMatrix rotated(m, m);
                for (std::size_t i = 0; i < m; ++i)
                    for (std::size_t j = 0; j < m; ++j) {
                        cplx s = 0.0;
                        for (std::size_t k = 0; k < m; ++k)
                            s += hd(i, k) * std::conj(h(j, k));
                        rotated(i, j) = s;
                    }
                for (std::size_t i = 0; i < m; ++i) rotated(i, i) = rotated(i, i).real();
                spec.D = std::move(rotated);
            }
        }
    }

    if (opts.force_half_bound) {
        // a := 1 - C(1) forces Q(1) = 0; resample draws whose spectrum sits
        // on the z = 1 pole or that land on the degenerate family.
        for (int attempt = 0; attempt < 64; ++attempt) {
            SpectralData sd = spectral_decompose(spec);
            bool near_pole = false;
            double c1 = 0.0;
            for (const auto& line : sd.lines) {
                if (!line.coupled) continue;
                if (std::abs(2.0 - line.lambda) < 0.05) {
                    near_pole = true;
                    break;
                }
                c1 += line.weight / (2.0 - line.lambda);
            }
            const double forced_a = 1.0 - c1;
            const bool degenerate = std::abs(forced_a) <= tol::degenerate &&
                                    std::abs(sd.b_norm - 1.0) <= tol::degenerate;
            if (!near_pole && !degenerate) {
                spec.a = forced_a;
                break;
            }
            for (auto& v : spec.b) v = cplx(backbone(), backbone());
            for (std::size_t i = 0; i < m; ++i) {
                spec.D(i, i) = backbone();
                for (std::size_t j = i + 1; j < m; ++j) {
                    spec.D(i, j) = cplx(backbone(), backbone());
                    spec.D(j, i) = std::conj(spec.D(i, j));
                }
            }
        }
    }
    return spec;
}

std::vector<double> truncated_oracle(const GraphSpec& spec, int tail_len) {
    return hermitian_eigenvalues(truncated_hamiltonian(spec, tail_len));
}

GraphSpec fuzz_instance(const FuzzOptions& opts, int index, std::size_t* m_out) {
    const std::uint64_t inst_seed = Rng::mix(opts.seed, static_cast<std::uint64_t>(index));
    Rng pick(inst_seed);
    const std::size_t lo = opts.force_confined ? 2 : 1;
    const std::size_t hi = std::max(lo, opts.max_m);
    const std::size_t m = static_cast<std::size_t>(
        pick.randint(static_cast<std::int64_t>(lo), static_cast<std::int64_t>(hi)));
    if (m_out) *m_out = m;
    RandomOptions ropts;
    ropts.force_half_bound = opts.force_half_bound;
    ropts.force_confined = opts.force_confined;
    ropts.weight_scale = opts.weight_scale;
    return random_instance(Rng::mix(inst_seed, 1), m, ropts);
}

FuzzSummary run_fuzz(const FuzzOptions& opts) {
    FuzzSummary sum;
    sum.count = opts.count;
    for (int i = 0; i < opts.count; ++i) {
        std::size_t m = 0;
        const GraphSpec spec = fuzz_instance(opts, i, &m);
        VerificationReport rep = verify(spec, opts.n_initial_phase_grid);
        if (rep.holds) {
            ++sum.held;
        } else {
            if (rep.flagged())
                ++sum.flagged;
            else
                ++sum.violated;
            sum.failures.push_back({Rng::mix(opts.seed, static_cast<std::uint64_t>(i)), m,
                                    std::move(rep)});
        }
    }
    return sum;
}

} // namespace graphscat
