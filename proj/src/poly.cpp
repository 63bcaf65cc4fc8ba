#include "poly.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "errors.hpp"

namespace holoflow {

namespace {

constexpr double kDegreeTrimRel = 1e-14;

std::vector<cplx> trim(std::vector<cplx> c) {
    if (c.empty()) c.push_back(cplx(0.0, 0.0));
    double maxmod = 0.0;
    for (const cplx& a : c) maxmod = std::max(maxmod, std::abs(a));
    const double tol = kDegreeTrimRel * maxmod;
    while (c.size() > 1 && std::abs(c.back()) <= tol) c.pop_back();
    return c;
}

// Row k of Pascal's triangle in doubles (exact up to k = 56).
std::vector<double> binomial_row(int k) {
    std::vector<double> row(static_cast<std::size_t>(k) + 1, 1.0);
    for (int j = 1; j <= k; ++j)
        row[static_cast<std::size_t>(j)] =
            row[static_cast<std::size_t>(j - 1)] * double(k - j + 1) / double(j);
    return row;
}

} // namespace

ComplexPoly::ComplexPoly(std::vector<cplx> coeffs) : coeffs_(trim(std::move(coeffs))) {}

cplx ComplexPoly::coeff(int k) const {
    if (k < 0 || k > degree()) return cplx(0.0, 0.0);
    return coeffs_[static_cast<std::size_t>(k)];
}

bool ComplexPoly::is_zero() const {
    return coeffs_.size() == 1 && coeffs_[0] == cplx(0.0, 0.0);
}

cplx ComplexPoly::operator()(cplx z) const {
    cplx acc(0.0, 0.0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

ComplexPoly ComplexPoly::derivative() const {
    if (degree() == 0) return ComplexPoly();
    std::vector<cplx> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        d[k - 1] = double(k) * coeffs_[k];
    return ComplexPoly(std::move(d));
}

std::vector<cplx> ComplexPoly::roots() const {
    const int d = degree();
    if (d < 1) return {};
    const cplx lead = coeffs_.back();
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 1; i < d; ++i) companion(i, i - 1) = cplx(1.0, 0.0);
    for (int i = 0; i < d; ++i) companion(i, d - 1) = -coeffs_[static_cast<std::size_t>(i)] / lead;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    if (solver.info() != Eigen::Success)
        fail(ErrorCode::numeric_failure, "companion eigensolver failed");

    const ComplexPoly df = derivative();
    std::vector<cplx> out;
    out.reserve(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        cplx r = solver.eigenvalues()(i);
        for (int it = 0; it < 16; ++it) {
            const cplx fv = (*this)(r);
            const cplx dv = df(r);
            if (std::abs(dv) == 0.0) break;
            const cplx step = fv / dv;
            r -= step;
            if (std::abs(step) < 1e-14 * (1.0 + std::abs(r))) break;
        }
        out.push_back(r);
    }
    std::sort(out.begin(), out.end(), [](cplx a, cplx b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return out;
}

std::pair<double, double> xi_eta(int k, double x, double y) {
    if (k < 0) fail(ErrorCode::invalid_argument, "xi_eta: k must be >= 0");
    if (k == 0) return {1.0, 0.0};
    const std::vector<double> binom = binomial_row(k);

    // Powers of x and y up to k.
    std::vector<double> xp(static_cast<std::size_t>(k) + 1, 1.0);
    std::vector<double> yp(static_cast<std::size_t>(k) + 1, 1.0);
    for (int i = 1; i <= k; ++i) {
        xp[static_cast<std::size_t>(i)] = xp[static_cast<std::size_t>(i - 1)] * x;
        yp[static_cast<std::size_t>(i)] = yp[static_cast<std::size_t>(i - 1)] * y;
    }

    double xi = 0.0, eta = 0.0;
    double sign = 1.0;
    for (int l = 0; 2 * l <= k; ++l) {
        xi += sign * binom[static_cast<std::size_t>(2 * l)] *
              xp[static_cast<std::size_t>(k - 2 * l)] * yp[static_cast<std::size_t>(2 * l)];
        if (2 * l + 1 <= k)
            eta += sign * binom[static_cast<std::size_t>(2 * l + 1)] *
                   xp[static_cast<std::size_t>(k - 2 * l - 1)] *
                   yp[static_cast<std::size_t>(2 * l + 1)];
        sign = -sign;
    }
    return {xi, eta};
}

RealPoly2::RealPoly2(int degree) : deg_(degree) {
    if (degree < 0) fail(ErrorCode::invalid_argument, "RealPoly2: negative degree");
    c_.assign(static_cast<std::size_t>((degree + 1) * (degree + 2) / 2), 0.0);
}

std::size_t RealPoly2::index(int i, int j) const {
    const int k = i + j;
    if (i < 0 || j < 0 || k > deg_) fail(ErrorCode::invalid_argument, "RealPoly2: index out of range");
    // Coefficients grouped by total degree k, then by j ascending.
    return static_cast<std::size_t>(k * (k + 1) / 2 + j);
}

double RealPoly2::eval(double x, double y) const {
    double total = 0.0;
    for (int k = deg_; k >= 0; --k) total += eval_homogeneous(k, x, y);
    return total;
}

double RealPoly2::eval_homogeneous(int k, double x, double y) const {
    if (k < 0 || k > deg_) return 0.0;
    // Horner in y/... not applicable on the triangular slice; plain sum with
    // running powers. Degrees are small throughout.
    double acc = 0.0;
    double ypow = 1.0;
    for (int j = 0; j <= k; ++j) {
        const double cij = c_[static_cast<std::size_t>(k * (k + 1) / 2 + j)];
        if (cij != 0.0) {
            double xpow = 1.0;
            for (int t = 0; t < k - j; ++t) xpow *= x;
            acc += cij * xpow * ypow;
        }
        ypow *= y;
    }
    return acc;
}

RealPoly2 RealPoly2::dx() const {
    RealPoly2 out(std::max(0, deg_ - 1));
    for (int k = 0; k <= deg_; ++k)
        for (int j = 0; j <= k; ++j) {
            const int i = k - j;
            const double cij = c_[static_cast<std::size_t>(k * (k + 1) / 2 + j)];
            if (i >= 1 && cij != 0.0) out.add_coeff(i - 1, j, double(i) * cij);
        }
    return out;
}

RealPoly2 RealPoly2::dy() const {
    RealPoly2 out(std::max(0, deg_ - 1));
    for (int k = 0; k <= deg_; ++k)
        for (int j = 0; j <= k; ++j) {
            const int i = k - j;
            const double cij = c_[static_cast<std::size_t>(k * (k + 1) / 2 + j)];
            if (j >= 1 && cij != 0.0) out.add_coeff(i, j - 1, double(j) * cij);
        }
    return out;
}

RealPoly2 RealPoly2::chart_substitute() const {
    RealPoly2 out(deg_);
    for (int k = 0; k <= deg_; ++k)
        for (int j = 0; j <= k; ++j) {
            const double cij = c_[static_cast<std::size_t>(k * (k + 1) / 2 + j)];
            if (cij != 0.0) out.add_coeff(deg_ - k, j, cij); // b^j g^{d-i-j}, stored as (i', j') = (g-part split below)
        }
    return out;
}

bool RealPoly2::near_zero(double tol) const {
    for (double v : c_)
        if (std::abs(v) > tol) return false;
    return true;
}

RealPlanarField RealPlanarField::from_poly(const ComplexPoly& f) {
    const int d = f.degree();
    RealPoly2 p(d), q(d);
    for (int k = 0; k <= d; ++k) {
        const double ak = f.coeff(k).real();
        const double bk = f.coeff(k).imag();
        if (ak == 0.0 && bk == 0.0) continue;
        const std::vector<double> binom = binomial_row(k);
        // xi_k contributes C(k,2l)(-1)^l to monomial x^{k-2l} y^{2l},
        // eta_k contributes C(k,2l+1)(-1)^l to x^{k-2l-1} y^{2l+1}.
        double sign = 1.0;
        for (int l = 0; 2 * l <= k; ++l) {
            const double cxi = sign * binom[static_cast<std::size_t>(2 * l)];
            p.add_coeff(k - 2 * l, 2 * l, ak * cxi);
            q.add_coeff(k - 2 * l, 2 * l, bk * cxi);
            if (2 * l + 1 <= k) {
                const double ceta = sign * binom[static_cast<std::size_t>(2 * l + 1)];
                p.add_coeff(k - 2 * l - 1, 2 * l + 1, -bk * ceta);
                q.add_coeff(k - 2 * l - 1, 2 * l + 1, ak * ceta);
            }
            sign = -sign;
        }
    }
    RealPlanarField field(std::move(p), std::move(q), true);
    field.has_src_ = true;
    field.src_ = f;
    return field;
}

RealPlanarField::RealPlanarField(RealPoly2 p, RealPoly2 q, bool holomorphic)
    : p_(std::move(p)), q_(std::move(q)),
      deg_(std::max(p_.degree(), q_.degree())),
      holomorphic_(holomorphic) {}

std::pair<double, double> RealPlanarField::eval(double x, double y) const {
    return {p_.eval(x, y), q_.eval(x, y)};
}

std::pair<double, double> RealPlanarField::eval_homogeneous(int k, double x, double y) const {
    return {p_.eval_homogeneous(k, x, y), q_.eval_homogeneous(k, x, y)};
}

} // namespace holoflow
