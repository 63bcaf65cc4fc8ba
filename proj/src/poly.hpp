#ifndef HOLOFLOW_POLY_HPP
#define HOLOFLOW_POLY_HPP

#include <complex>
#include <utility>
#include <vector>

namespace holoflow {

using cplx = std::complex<double>;

/// Dense univariate polynomial f(z) = sum a_k z^k with complex coefficients,
/// stored in ascending degree. Immutable after construction. Trailing
/// coefficients with modulus below 1e-14 * max|a_k| are dropped so that
/// round-off in derived polynomials does not inflate the degree.
class ComplexPoly {
public:
    ComplexPoly() : coeffs_{cplx(0.0, 0.0)} {}
    explicit ComplexPoly(std::vector<cplx> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<cplx>& coeffs() const { return coeffs_; }
    cplx coeff(int k) const;
    bool is_zero() const;

    /// Horner evaluation.
    cplx operator()(cplx z) const;

    ComplexPoly derivative() const;

    /// All roots, via the companion-matrix eigenvalues followed by a few
    /// Newton polishing steps. Empty for constants.
    std::vector<cplx> roots() const;

private:
    std::vector<cplx> coeffs_;
};

/// (xi_k, eta_k) with (x+iy)^k = xi_k(x,y) + i eta_k(x,y), computed from the
/// binomial expansions
///   xi_k  = sum_l C(k,2l)   (-1)^l x^{k-2l}   y^{2l}
///   eta_k = sum_l C(k,2l+1) (-1)^l x^{k-2l-1} y^{2l+1}.
std::pair<double, double> xi_eta(int k, double x, double y);

/// Bivariate real polynomial in (x, y), dense triangular storage indexed by
/// (i, j) with i + j <= degree.
class RealPoly2 {
public:
    RealPoly2() : deg_(0), c_(1, 0.0) {}
    explicit RealPoly2(int degree);

    int degree() const { return deg_; }
    double coeff(int i, int j) const { return c_[index(i, j)]; }
    void add_coeff(int i, int j, double v) { c_[index(i, j)] += v; }

    double eval(double x, double y) const;

    /// Evaluation restricted to the terms of total degree exactly k.
    double eval_homogeneous(int k, double x, double y) const;

    /// Partial derivatives as polynomials.
    RealPoly2 dx() const;
    RealPoly2 dy() const;

    /// g(b, g) = g^d * P(1/g, b/g): each monomial x^i y^j becomes
    /// b^j g^{d-i-j}. Exact; this is how the tangent-chart fields avoid
    /// negative powers.
    RealPoly2 chart_substitute() const;

    bool near_zero(double tol) const;

private:
    std::size_t index(int i, int j) const;

    int deg_;
    std::vector<double> c_;
};

/// The planar system x' = P(x,y), y' = Q(x,y) equivalent to z' = f(z) under
/// z = x + iy, with homogeneous parts P_k = a_k xi_k - b_k eta_k and
/// Q_k = a_k eta_k + b_k xi_k for f = sum (a_k + i b_k) z^k. Also accepts
/// arbitrary (P, Q) pairs; the holomorphic flag records the provenance.
class RealPlanarField {
public:
    static RealPlanarField from_poly(const ComplexPoly& f);
    RealPlanarField(RealPoly2 p, RealPoly2 q, bool holomorphic = false);

    int degree() const { return deg_; }
    bool holomorphic() const { return holomorphic_; }
    const ComplexPoly* source_poly() const { return has_src_ ? &src_ : nullptr; }

    const RealPoly2& P() const { return p_; }
    const RealPoly2& Q() const { return q_; }

    std::pair<double, double> eval(double x, double y) const;
    std::pair<double, double> eval_homogeneous(int k, double x, double y) const;

private:
    RealPoly2 p_, q_;
    int deg_;
    bool holomorphic_;
    bool has_src_ = false;
    ComplexPoly src_;
};

} // namespace holoflow

#endif
