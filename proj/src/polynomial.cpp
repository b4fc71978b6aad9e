#include "graphscat/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "graphscat/errors.hpp"
#include "graphscat/tolerances.hpp"

namespace graphscat {

Polynomial::Polynomial(std::vector<double> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) c_ = {0.0};
}

double Polynomial::eval(double x) const {
    double r = 0.0;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

cplx Polynomial::eval(cplx z) const {
    cplx r = 0.0;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * z + c_[i];
    return r;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return Polynomial::constant(0.0);
    std::vector<double> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<double>(i);
    return Polynomial(std::move(d));
}

Polynomial Polynomial::reversed() const {
    std::vector<double> r(c_.rbegin(), c_.rend());
    return Polynomial(std::move(r));
}

Polynomial Polynomial::trimmed() const {
    const double drop = tol::drop_rel * max_abs_coeff();
    std::size_t n = c_.size();
    while (n > 1 && std::abs(c_[n - 1]) <= drop) --n;
    return Polynomial(std::vector<double>(c_.begin(), c_.begin() + n));
}

Polynomial Polynomial::deflate_real_root(double r, double* remainder) const {
    const int d = degree();
    if (d < 1) {
        if (remainder) *remainder = c_[0];
        return Polynomial::constant(0.0);
    }
    std::vector<double> q(d);
    double acc = c_[d];
    for (int i = d - 1; i >= 1; --i) {
        q[i] = acc;
        acc = acc * r + c_[i];
    }
    q[0] = acc;
    if (remainder) *remainder = acc * r + c_[0];
    return Polynomial(std::move(q));
}

double Polynomial::max_abs_coeff() const {
    double m = 0.0;
    for (double c : c_) m = std::max(m, std::abs(c));
    return m;
}

double Polynomial::l1_norm() const {
    double s = 0.0;
    for (double c : c_) s += std::abs(c);
    return s;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    std::vector<double> r(a.c_.size() + b.c_.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(r));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<double> r(std::max(a.c_.size(), b.c_.size()), 0.0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] + b[i];
    return Polynomial(std::move(r));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<double> r(std::max(a.c_.size(), b.c_.size()), 0.0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] - b[i];
    return Polynomial(std::move(r));
}

Polynomial operator*(double s, const Polynomial& p) {
    std::vector<double> r = p.c_;
    for (double& c : r) c *= s;
    return Polynomial(std::move(r));
}

namespace {

// |p|(|z|): evaluation error scale for the stopping test.
double abs_eval(const std::vector<double>& c, double az) {
    double r = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) r = r * az + std::abs(c[i]);
    return r;
}

std::vector<cplx> quadratic_roots(double c0, double c1, double c2) {
    const double disc = c1 * c1 - 4.0 * c2 * c0;
    if (disc >= 0.0) {
        // stable form: no cancellation in the smaller root
        const double sq = std::sqrt(disc);
        const double q = -0.5 * (c1 + (c1 >= 0.0 ? sq : -sq));
        double r1 = q / c2;
        double r2 = (q != 0.0) ? c0 / q : -c1 / c2 - r1;
        return {cplx(r1, 0.0), cplx(r2, 0.0)};
    }
    const double re = -c1 / (2.0 * c2);
    const double im = std::sqrt(-disc) / (2.0 * c2);
    return {cplx(re, im), cplx(re, -im)};
}

void enforce_conjugate_symmetry(std::vector<cplx>& roots) {
    const std::size_t n = roots.size();
    std::vector<bool> done(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (done[i]) continue;
        const double im_scale = 1e-9 * (1.0 + std::abs(roots[i]));
        if (std::abs(roots[i].imag()) <= im_scale) {
            roots[i] = cplx(roots[i].real(), 0.0);
            done[i] = true;
            continue;
        }
        // nearest unmatched conjugate partner
        std::size_t best = n;
        double best_d = std::numeric_limits<double>::max();
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i || done[j]) continue;
            const double d = std::abs(roots[j] - std::conj(roots[i]));
            if (d < best_d) {
                best_d = d;
                best = j;
            }
        }
        if (best < n && best_d <= 1e-6 * (1.0 + std::abs(roots[i]))) {
            const cplx avg = 0.5 * (roots[i] + std::conj(roots[best]));
            roots[i] = avg;
            roots[best] = std::conj(avg);
            done[i] = done[best] = true;
        } else {
            done[i] = true; // leave as computed; contract check decides
        }
    }
}

} // namespace

std::vector<cplx> poly_roots(const Polynomial& poly) {
    const Polynomial p = poly.trimmed();
    std::vector<double> c = p.coeffs();
    const int d = p.degree();
    if (d <= 0) return {};

    std::vector<cplx> roots;
    // factor out exact roots at the origin
    std::size_t lead_zero = 0;
    const double drop = tol::drop_rel * p.max_abs_coeff();
    while (lead_zero < c.size() - 1 && std::abs(c[lead_zero]) <= drop) ++lead_zero;
    for (std::size_t i = 0; i < lead_zero; ++i) roots.push_back(0.0);
    c.erase(c.begin(), c.begin() + lead_zero);

    const int dd = static_cast<int>(c.size()) - 1;
    if (dd == 1) {
        roots.push_back(cplx(-c[0] / c[1], 0.0));
    } else if (dd == 2) {
        const auto qr = quadratic_roots(c[0], c[1], c[2]);
        roots.insert(roots.end(), qr.begin(), qr.end());
    } else if (dd >= 3) {
        // Fujiwara bound for the initial circle
        double radius = 0.0;
        for (int i = 0; i < dd; ++i) {
            const double base = std::abs(c[i] / c[dd]) * (i == 0 ? 0.5 : 1.0);
            radius = std::max(radius, std::pow(base, 1.0 / (dd - i)));
        }
        radius *= 2.0;
        if (radius == 0.0) radius = 1.0;

        std::vector<cplx> z(dd);
        for (int j = 0; j < dd; ++j) {
            const double ang = 2.0 * std::numbers::pi * j / dd + 0.4;
            z[j] = radius * (0.8 + 0.4 * j / std::max(1, dd - 1)) * std::polar(1.0, ang);
        }

        const Polynomial pc{std::vector<double>(c)};
        const Polynomial pd = pc.derivative();
        constexpr int max_iters = 400;
        bool converged = false;
        for (int iter = 0; iter < max_iters && !converged; ++iter) {
            converged = true;
            for (int j = 0; j < dd; ++j) {
                const cplx pz = pc.eval(z[j]);
                const double err = 8.0 * dd * 1e-16 * abs_eval(c, std::abs(z[j]));
                if (std::abs(pz) <= err) continue;
                cplx dz = pd.eval(z[j]);
                if (dz == cplx(0.0)) dz = 1e-30;
                const cplx newton = pz / dz;
                cplx sum = 0.0;
                for (int i = 0; i < dd; ++i)
                    if (i != j) sum += 1.0 / (z[j] - z[i]);
                cplx denom = 1.0 - newton * sum;
                if (denom == cplx(0.0)) denom = 1e-30;
                const cplx w = newton / denom;
                z[j] -= w;
                if (std::abs(w) > 1e-14 * (1.0 + std::abs(z[j]))) converged = false;
            }
        }
        if (!converged) throw ConvergenceFailure("Aberth iteration did not settle");

        // Newton polishing, a few quadratic steps per root
        for (int j = 0; j < dd; ++j) {
            for (int it = 0; it < 6; ++it) {
                const cplx pz = pc.eval(z[j]);
                const cplx dz = pd.eval(z[j]);
                if (dz == cplx(0.0)) break;
                const cplx step = pz / dz;
                if (std::abs(step) > 0.1 * (1.0 + std::abs(z[j]))) break;
                z[j] -= step;
                if (std::abs(step) <= 1e-16 * (1.0 + std::abs(z[j]))) break;
            }
        }
        roots.insert(roots.end(), z.begin(), z.end());
    }

    enforce_conjugate_symmetry(roots);

    const double norm = p.max_abs_coeff();
    for (const cplx& r : roots) {
        const double bound = 1e-8 * norm * std::pow(std::max(1.0, std::abs(r)), d);
        if (std::abs(p.eval(r)) > bound)
            throw ConvergenceFailure("root residual exceeds contract bound");
    }
    std::sort(roots.begin(), roots.end(), [](const cplx& a, const cplx& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return roots;
}

} // namespace graphscat
