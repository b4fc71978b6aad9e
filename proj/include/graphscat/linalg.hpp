#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace graphscat {

using cplx = std::complex<double>;

/// Dense column-accessible complex matrix (row-major storage).
class CMatrix {
public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, cplx(0.0, 0.0)) {}

    static CMatrix identity(std::size_t n) {
        CMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cplx& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<cplx> column(std::size_t j) const {
        std::vector<cplx> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& v : a_) m = std::max(m, std::abs(v));
        return m;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<cplx> a_;
};

struct Eigensystem {
    std::vector<double> values; // ascending
    CMatrix vectors;            // column j pairs with values[j]
};

/// Full eigensystem of a Hermitian matrix by cyclic Jacobi rotations.
/// Eigenvalues ascend; each eigenvector's first nonzero component is
/// phase-fixed to the positive real axis, so the output is deterministic.
/// Throws ConvergenceFailure past the sweep cap and NonHermitian if the
/// input asymmetry exceeds the hermiticity tolerance.
Eigensystem hermitian_eigensystem(const CMatrix& m);

/// Eigenvalues only (ascending); skips accumulating the rotations.
std::vector<double> hermitian_eigenvalues(const CMatrix& m);

/// Solve A x = rhs by partial-pivot elimination. Throws SingularSolve.
std::vector<cplx> solve_linear(CMatrix a, std::vector<cplx> rhs);

inline double norm2(const std::vector<cplx>& v) {
    double s = 0.0;
    for (const auto& x : v) s += std::norm(x);
    return std::sqrt(s);
}

inline cplx inner(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    cplx s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

} // namespace graphscat
