#include "laurent/normal_form.hpp"

#include <algorithm>
#include <cmath>

namespace laurent {
namespace {

constexpr double kGammaSlack = 1e-12;
constexpr double kUnitColumnTol = 1e-9;
constexpr double kPsdTol = 1e-10;

ColumnNorms raw_column_norms(const Matrix2C& g) {
    return {std::hypot(std::abs(g(0, 0)), std::abs(g(1, 0))), std::hypot(std::abs(g(0, 1)), std::abs(g(1, 1)))};
}

Complex unit_phase(Complex gamma) {
    const double m = std::abs(gamma);
    return m > 0.0 ? gamma / m : Complex{1.0};
}

double checked_gamma_modulus(Complex gamma) {
    const double m = std::abs(gamma);
    if (!(m <= 1.0 + kGammaSlack)) throw DomainError("|gamma| exceeds 1");
    return std::min(m, 1.0);
}

}  // namespace

bool is_generic(const Matrix2C& g) {
    const auto norms = raw_column_norms(g);
    return norms.first > kGenericityFloor && norms.second > kGenericityFloor;
}

ColumnNorms column_norms(const Matrix2C& g) {
    if (!is_generic(g)) throw DomainError("non-generic matrix");
    return raw_column_norms(g);
}

NormalizedMatrix normalize(const Matrix2C& g) {
    const auto [r1, r2] = column_norms(g);
    const Matrix2C h{g(0, 0) / r1, g(0, 1) / r2, g(1, 0) / r1, g(1, 1) / r2};
    return {h, r1 * r2, r1 / r2};
}

Complex gram_offdiag(const Matrix2C& h) {
    const auto [c1, c2] = raw_column_norms(h);
    if (std::abs(c1 - 1.0) > kUnitColumnTol || std::abs(c2 - 1.0) > kUnitColumnTol) {
        throw UsageError("gram_offdiag: matrix columns are not normalized");
    }
    return std::conj(h(0, 0)) * h(0, 1) + std::conj(h(1, 0)) * h(1, 1);
}

Matrix2C psd_sqrt(const Matrix2C& m) {
    const double scale = std::max(1.0, m.max_abs());
    const double tol = kPsdTol * scale;
    if (std::abs(m(0, 0).imag()) > tol || std::abs(m(1, 1).imag()) > tol ||
        std::abs(m(0, 1) - std::conj(m(1, 0))) > tol) {
        throw DomainError("not PSD: matrix is not Hermitian");
    }

    const double a = m(0, 0).real();
    const double d = m(1, 1).real();
    const Complex b = 0.5 * (m(0, 1) + std::conj(m(1, 0)));

    // Eigenvalues (a + d)/2 ± sqrt(((a - d)/2)^2 + |b|^2).
    const double mid = 0.5 * (a + d);
    const double radius = std::hypot(0.5 * (a - d), std::abs(b));
    if (mid - radius < -tol) throw DomainError("not PSD: negative eigenvalue");

    // sqrt(M) = (M + sqrt(det M)·I) / sqrt(tr M + 2 sqrt(det M)).
    const double det = std::max(0.0, (mid - radius) * (mid + radius));
    const double root_det = std::sqrt(det);
    const double denom_sq = a + d + 2.0 * root_det;
    if (denom_sq <= 0.0) return Matrix2C{0.0, 0.0, 0.0, 0.0};
    const double denom = std::sqrt(denom_sq);
    return {(a + root_det) / denom, b / denom, std::conj(b) / denom, (d + root_det) / denom};
}

ThetaPhase theta_from_gamma(Complex gamma) {
    const double m = checked_gamma_modulus(gamma);
    return {0.5 * std::asin(m), unit_phase(gamma)};
}

ThetaPhase theta_from_gamma(Complex gamma, double abs_det) {
    const double m = checked_gamma_modulus(gamma);
    return {0.5 * std::atan2(m, std::max(0.0, abs_det)), unit_phase(gamma)};
}

NormalForm normal_form(const Matrix2C& g) {
    const auto normalized = normalize(g);
    const Complex gamma = gram_offdiag(normalized.h);
    const auto [theta, phase] = theta_from_gamma(gamma, std::abs(normalized.h.det()));
    return {normalized.scale, normalized.dilation, theta, phase};
}

}  // namespace laurent
