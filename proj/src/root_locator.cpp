#include "laurent/root_locator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "laurent/chebyshev.hpp"
#include "laurent/laurent_engine.hpp"
#include "laurent/normal_form.hpp"

namespace laurent {
namespace {

constexpr double kRankOneMargin = 1e-9;

void require_theta_open(double theta) {
    if (!(theta >= 0.0 && theta < kQuarterPi)) throw DomainError("theta must lie in [0, pi/4)");
}

double min_gap(const std::vector<Complex>& pts) {
    double gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) gap = std::min(gap, std::abs(pts[i] - pts[j]));
    }
    return pts.size() < 2 ? 0.0 : gap;
}

void sort_by_arg(std::vector<Complex>& pts) {
    std::sort(pts.begin(), pts.end(), [](Complex a, Complex b) { return std::arg(a) < std::arg(b); });
}

}  // namespace

std::string_view to_string(ArcClass c) {
    switch (c) {
        case ArcClass::open_plus: return "open_plus";
        case ArcClass::open_minus: return "open_minus";
        case ArcClass::boundary: return "boundary";
        case ArcClass::outside: return "outside";
    }
    return "outside";
}

ArcSet::ArcSet(double theta) : theta_(theta) { require_theta_open(theta); }

ArcClass ArcSet::classify(Complex z) const {
    if (z == Complex{}) throw DomainError("arc classification at zero");
    if (std::abs(std::abs(z) - 1.0) > kArcTol) return ArcClass::outside;

    const double phi = std::arg(z);
    const double mag = std::abs(phi);
    const double lo = lower_arg();
    const double hi = upper_arg();
    if (std::abs(mag - lo) <= kArcTol || std::abs(mag - hi) <= kArcTol) return ArcClass::boundary;
    if (mag > lo && mag < hi) return phi > 0.0 ? ArcClass::open_plus : ArcClass::open_minus;
    return ArcClass::outside;
}

Complex psi(Complex z, double theta) {
    if (z == Complex{}) throw DomainError("psi is undefined at zero");
    require_theta_open(theta);
    return (z + 1.0 / z) / (2.0 * std::cos(2.0 * theta));
}

std::pair<Complex, Complex> psi_preimage(Complex w, double theta) {
    require_theta_open(theta);
    // z² - 2bz + 1 = 0 with b = w cos 2θ.
    const Complex b = w * std::cos(2.0 * theta);
    if (b.imag() == 0.0 && std::abs(b.real()) <= 1.0) {
        const double x = b.real();
        const double y = std::sqrt((1.0 - x) * (1.0 + x));
        return {Complex{x, y}, Complex{x, -y}};
    }
    const Complex root = std::sqrt(b * b - 1.0);
    const Complex big = std::abs(b + root) >= std::abs(b - root) ? b + root : b - root;
    return {big, 1.0 / big};
}

ArcClass arc_membership(Complex z, double theta) { return ArcSet(theta).classify(z); }

RootReport roots_F_theta(int n, double theta) {
    if (n < 1) throw UsageError("degree n must be >= 1");
    if (!(theta >= 0.0 && theta < kQuarterPi)) {
        throw DomainError("theta must lie in [0, pi/4): at pi/4 the roots collapse to +-i with multiplicity n");
    }

    RootReport report;
    report.roots.reserve(static_cast<std::size_t>(2 * n));
    for (double zeta : cheb_roots(ChebDegree(n))) {
        const auto [upper, lower] = psi_preimage(zeta, theta);
        report.roots.push_back(upper);
        report.roots.push_back(lower);
    }
    sort_by_arg(report.roots);

    for (const Complex& r : report.roots) report.residuals.push_back(std::abs(closed_form_eval(n, theta, r)));
    report.min_pairwise_gap = min_gap(report.roots);
    return report;
}

RootReport roots_general(int n, const Matrix2C& g) {
    if (n < 1) throw UsageError("degree n must be >= 1");
    const NormalForm form = normal_form(g);
    if (form.theta >= kQuarterPi - kRankOneMargin) {
        throw UnsupportedCaseError(
            "theta = pi/4 (rank-one matrix): roots collapse onto +-i/rho with multiplicity n; not supported");
    }

    RootReport base = roots_F_theta(n, form.theta);
    const LaurentPoly coeffs = trace_power_coeffs(n, g);

    RootReport report;
    for (const Complex& r : base.roots) report.roots.push_back(r / form.dilation);
    for (const Complex& r : report.roots) report.residuals.push_back(std::abs(eval_laurent(coeffs, r)));
    report.min_pairwise_gap = min_gap(report.roots);
    return report;
}

}  // namespace laurent
