#pragma once

#include <vector>

#include "graphscat/linalg.hpp"

namespace graphscat {

/// Real-coefficient polynomial, coefficients ascending in degree.
/// All the defining data of Q's numerator (a, eigenvalues, weights) is
/// real, so complex coefficients are never needed.
class Polynomial {
public:
    Polynomial() : c_{0.0} {}
    explicit Polynomial(std::vector<double> coeffs);
    static Polynomial constant(double v) { return Polynomial({v}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<double>& coeffs() const { return c_; }
    double operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0.0; }

    double eval(double x) const;
    cplx eval(cplx z) const;

    Polynomial derivative() const;
    /// Coefficient reversal: rev(p)(z) = z^deg * p(1/z).
    Polynomial reversed() const;
    /// Drop leading coefficients with |c| <= drop_rel * max|c|.
    Polynomial trimmed() const;
    /// Exact-division quotient by (z - r); the remainder p(r) is discarded
    /// and returned through *remainder when requested.
    Polynomial deflate_real_root(double r, double* remainder = nullptr) const;

    double max_abs_coeff() const;
    double l1_norm() const;

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(double s, const Polynomial& p);
    bool operator==(const Polynomial& o) const { return c_ == o.c_; }

private:
    std::vector<double> c_;
};

/// All complex roots with multiplicity, Aberth-Ehrlich simultaneous
/// iteration followed by Newton polishing. Conjugate symmetry is enforced
/// on the output. Throws ConvergenceFailure if the residual contract
/// |p(r)| <= 1e-8 * max|c| * max(1,|r|)^deg cannot be met.
std::vector<cplx> poly_roots(const Polynomial& p);

} // namespace graphscat
