#include "graphscat/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "graphscat/errors.hpp"
#include "graphscat/tolerances.hpp"

namespace graphscat {

namespace {

double off_diag_max(const CMatrix& a) {
    const std::size_t n = a.rows();
    double m = 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q)
            m = std::max(m, std::abs(a(p, q)));
    return m;
}

// One cyclic Jacobi sweep over the upper triangle. For each pivot (p,q)
// the 2x2 Hermitian block is diagonalized by U = P^H G P with
// P = diag(1, e^{i phi}), phi = arg A_pq, and G the classical real
// rotation with theta = atan2(2|A_pq|, A_pp - A_qq)/2.
void jacobi_sweep(CMatrix& a, CMatrix* v, double skip_threshold) {
    const std::size_t n = a.rows();
    for (std::size_t p = 0; p + 1 < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            const cplx apq = a(p, q);
            const double b = std::abs(apq);
            if (b <= skip_threshold) continue;

            const double phi = std::arg(apq);
            const double app = a(p, p).real();
            const double aqq = a(q, q).real();
            const double theta = 0.5 * std::atan2(2.0 * b, app - aqq);
            const double c = std::cos(theta);
            const double s = std::sin(theta);
            const cplx se_pos = s * std::polar(1.0, phi);  // s e^{i phi}
            const cplx se_neg = std::conj(se_pos);         // s e^{-i phi}

            // columns: A <- A U with U = [[c, -s e^{i phi}], [s e^{-i phi}, c]]
            for (std::size_t i = 0; i < n; ++i) {
                const cplx aip = a(i, p), aiq = a(i, q);
                a(i, p) = c * aip + se_neg * aiq;
                a(i, q) = -se_pos * aip + c * aiq;
            }
            // rows: A <- U^H A
            for (std::size_t j = 0; j < n; ++j) {
                const cplx apj = a(p, j), aqj = a(q, j);
                a(p, j) = c * apj + se_pos * aqj;
                a(q, j) = -se_neg * apj + c * aqj;
            }
            // exact by construction; clears rounding residue
            a(p, q) = 0.0;
            a(q, p) = 0.0;
            a(p, p) = a(p, p).real();
            a(q, q) = a(q, q).real();

            if (v) {
                for (std::size_t i = 0; i < n; ++i) {
                    const cplx vip = (*v)(i, p), viq = (*v)(i, q);
                    (*v)(i, p) = c * vip + se_neg * viq;
                    (*v)(i, q) = -se_pos * vip + c * viq;
                }
            }
        }
    }
}

void check_square_hermitian(const CMatrix& m) {
    if (m.rows() != m.cols()) throw NonHermitian("matrix is not square");
    const double tol = tol::hermiticity(m.max_abs());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i; j < m.cols(); ++j) {
            const double asym = std::abs(m(i, j) - std::conj(m(j, i)));
            if (asym > tol) {
                std::ostringstream os;
                os << "asymmetry " << asym << " at (" << i << "," << j << ")";
                throw NonHermitian(os.str());
            }
            if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag()))
                throw NonFinite("non-finite matrix entry");
        }
}

std::vector<double> jacobi_diagonalize(CMatrix& a, CMatrix* v) {
    check_square_hermitian(a);
    const std::size_t n = a.rows();
    // symmetrize exactly so row/col updates see conjugate-consistent data
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = a(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) a(j, i) = std::conj(a(i, j));
    }
    const double scale = std::max(1.0, a.max_abs());
    const double target = 1e-15 * scale;
    constexpr int max_sweeps = 100;
    int sweep = 0;
    while (off_diag_max(a) > target) {
        if (++sweep > max_sweeps)
            throw ConvergenceFailure("Jacobi eigensolver exceeded sweep cap");
        // threshold sweeps: skip already-small pivots early on
        const double skip = (sweep <= 3) ? target * 1e3 : target * 1e-2;
        jacobi_sweep(a, v, std::min(skip, off_diag_max(a) * 0.1));
    }
    std::vector<double> vals(n);
    for (std::size_t i = 0; i < n; ++i) vals[i] = a(i, i).real();
    return vals;
}

} // namespace

Eigensystem hermitian_eigensystem(const CMatrix& m) {
    CMatrix a = m;
    CMatrix v = CMatrix::identity(m.rows());
    std::vector<double> vals = jacobi_diagonalize(a, &v);
    const std::size_t n = vals.size();

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return vals[i] < vals[j]; });

    Eigensystem es;
    es.values.resize(n);
    es.vectors = CMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t src = order[j];
        es.values[j] = vals[src];
        // phase-fix: first component above noise becomes positive real
        cplx phase = 1.0;
        for (std::size_t i = 0; i < n; ++i) {
            const cplx vi = v(i, src);
            if (std::abs(vi) > 1e-10) {
                phase = std::conj(vi) / std::abs(vi);
                break;
            }
        }
        for (std::size_t i = 0; i < n; ++i) es.vectors(i, j) = v(i, src) * phase;
    }
    return es;
}

std::vector<double> hermitian_eigenvalues(const CMatrix& m) {
    CMatrix a = m;
    std::vector<double> vals = jacobi_diagonalize(a, nullptr);
    std::sort(vals.begin(), vals.end());
    return vals;
}

std::vector<cplx> solve_linear(CMatrix a, std::vector<cplx> rhs) {
    const std::size_t n = a.rows();
    if (a.cols() != n || rhs.size() != n) throw SingularSolve("shape mismatch");
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
        if (std::abs(a(piv, col)) < 1e-300) throw SingularSolve("singular matrix");
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
            std::swap(rhs[piv], rhs[col]);
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            const cplx f = a(r, col) / a(col, col);
            if (f == cplx(0.0)) continue;
            for (std::size_t j = col; j < n; ++j) a(r, j) -= f * a(col, j);
            rhs[r] -= f * rhs[col];
        }
    }
    std::vector<cplx> x(n);
    for (std::size_t i = n; i-- > 0;) {
        cplx s = rhs[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= a(i, j) * x[j];
        x[i] = s / a(i, i);
    }
    return x;
}

} // namespace graphscat
