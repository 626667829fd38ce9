#include "laurent/core.hpp"

#include <algorithm>
#include <cmath>

namespace laurent {

bool is_finite(const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

Complex make_complex(double re, double im) {
    Complex z{re, im};
    if (!is_finite(z)) throw DomainError("non-finite complex component");
    return z;
}

Matrix2C::Matrix2C(Complex g11, Complex g12, Complex g21, Complex g22) : entries_{g11, g12, g21, g22} {
    for (const auto& e : entries_) {
        if (!is_finite(e)) throw DomainError("non-finite matrix entry");
    }
}

Matrix2C Matrix2C::canonical(double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return {c, s, s, c};
}

Matrix2C Matrix2C::canonical(double theta, Complex phase) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return {c, phase * s, std::conj(phase) * s, c};
}

Matrix2C Matrix2C::adjoint() const {
    return {std::conj(entries_[0]), std::conj(entries_[2]), std::conj(entries_[1]), std::conj(entries_[3])};
}

double Matrix2C::max_abs() const {
    double m = 0.0;
    for (const auto& e : entries_) m = std::max(m, std::abs(e));
    return m;
}

Matrix2C operator*(const Matrix2C& a, const Matrix2C& b) {
    return {a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0), a(0, 0) * b(0, 1) + a(0, 1) * b(1, 1),
            a(1, 0) * b(0, 0) + a(1, 1) * b(1, 0), a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1)};
}

Matrix2C operator+(const Matrix2C& a, const Matrix2C& b) {
    return {a(0, 0) + b(0, 0), a(0, 1) + b(0, 1), a(1, 0) + b(1, 0), a(1, 1) + b(1, 1)};
}

Matrix2C operator-(const Matrix2C& a, const Matrix2C& b) {
    return {a(0, 0) - b(0, 0), a(0, 1) - b(0, 1), a(1, 0) - b(1, 0), a(1, 1) - b(1, 1)};
}

Matrix2C operator*(Complex s, const Matrix2C& m) {
    return {s * m(0, 0), s * m(0, 1), s * m(1, 0), s * m(1, 1)};
}

LaurentPoly::LaurentPoly(int n) : n_(n) {
    if (n < 0) throw UsageError("negative Laurent degree bound");
    coeffs_.assign(static_cast<std::size_t>(2 * n + 1), Complex{});
}

LaurentPoly::LaurentPoly(std::vector<Complex> coeffs) : n_(0), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() % 2 == 0) throw UsageError("Laurent coefficient vector must have odd length 2n+1");
    n_ = static_cast<int>(coeffs_.size() / 2);
    for (const auto& c : coeffs_) {
        if (!is_finite(c)) throw DomainError("non-finite Laurent coefficient");
    }
}

Complex LaurentPoly::coeff(int k) const {
    if (k < -n_ || k > n_) return {};
    return coeffs_[slot(k)];
}

void LaurentPoly::set_coeff(int k, Complex value) {
    if (k < -n_ || k > n_) throw UsageError("exponent " + std::to_string(k) + " outside degree bound");
    coeffs_[slot(k)] = value;
}

void LaurentPoly::add_to_coeff(int k, Complex value) {
    if (k < -n_ || k > n_) throw UsageError("exponent " + std::to_string(k) + " outside degree bound");
    coeffs_[slot(k)] += value;
}

double LaurentPoly::max_abs() const {
    double m = 0.0;
    for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

LaurentPoly LaurentPoly::with_bound(int n) const {
    LaurentPoly out(n);
    for (int k = -n_; k <= n_; ++k) {
        const Complex c = coeffs_[slot(k)];
        if (k < -n || k > n) {
            if (c != Complex{}) throw UsageError("nonzero coefficient outside requested bound");
            continue;
        }
        out.coeffs_[out.slot(k)] = c;
    }
    return out;
}

LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q) {
    LaurentPoly out = p.with_bound(std::max(p.n_, q.n_));
    for (int k = -q.n_; k <= q.n_; ++k) out.coeffs_[out.slot(k)] += q.coeffs_[q.slot(k)];
    return out;
}

LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q) { return p + Complex{-1.0} * q; }

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
    LaurentPoly out(p.n_ + q.n_);
    for (int i = -p.n_; i <= p.n_; ++i) {
        const Complex a = p.coeffs_[p.slot(i)];
        if (a == Complex{}) continue;
        for (int j = -q.n_; j <= q.n_; ++j) out.coeffs_[out.slot(i + j)] += a * q.coeffs_[q.slot(j)];
    }
    return out;
}

LaurentPoly operator*(Complex s, const LaurentPoly& p) {
    LaurentPoly out = p;
    for (auto& c : out.coeffs_) c *= s;
    return out;
}

Complex eval_laurent(const LaurentPoly& p, Complex z) {
    if (z == Complex{}) throw DomainError("Laurent evaluation at zero");
    const int n = p.degree_bound();

    Complex positive{};
    for (int k = n; k >= 0; --k) positive = positive * z + p.coeff(k);

    const Complex w = 1.0 / z;
    Complex negative{};
    for (int k = n; k >= 1; --k) negative = (negative + p.coeff(-k)) * w;

    return positive + negative;
}

double max_coeff_diff(const LaurentPoly& p, const LaurentPoly& q) {
    const int n = std::max(p.degree_bound(), q.degree_bound());
    double d = 0.0;
    for (int k = -n; k <= n; ++k) d = std::max(d, std::abs(p.coeff(k) - q.coeff(k)));
    return d;
}

bool laurent_close(const LaurentPoly& p, const LaurentPoly& q, double tol) {
    if (p.degree_bound() != q.degree_bound()) throw UsageError("laurent_close: mismatched degree bounds");
    if (!(tol > 0.0)) throw UsageError("laurent_close: tolerance must be positive");
    return max_coeff_diff(p, q) <= tol * (1.0 + p.max_abs());
}

}  // namespace laurent
