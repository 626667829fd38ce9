#include "laurent/trig_comb.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <string>

#include "laurent/chebyshev.hpp"
#include "laurent/laurent_engine.hpp"

namespace laurent {
namespace {

void require_theta_open(double theta) {
    if (!(theta >= 0.0 && theta < kQuarterPi)) throw DomainError("theta must lie in [0, pi/4)");
}

void require_degree(int n) {
    if (n < 1) throw UsageError("degree n must be >= 1, got " + std::to_string(n));
}

// Pull ζ in [-1, 1] back to t in [2θ, π - 2θ] through Φ_θ.
double pull_back(double zeta, double cos2) { return std::acos(std::clamp(cos2 * zeta, -1.0, 1.0)); }

}  // namespace

TrigPoly::TrigPoly(int n, std::vector<double> cos_coeffs) : n_(n), cos_coeffs_(std::move(cos_coeffs)) {
    if (n < 0 || cos_coeffs_.size() != static_cast<std::size_t>(n + 1)) {
        throw UsageError("TrigPoly needs exactly n + 1 cosine coefficients");
    }
}

Complex TrigPoly::eval(Complex t) const {
    Complex sum{};
    for (int k = n_; k >= 0; --k) sum += cos_coeffs_[static_cast<std::size_t>(k)] * std::cos(double(k) * t);
    return sum;
}

IntervalSystem::IntervalSystem(double theta, int p_min, int p_max) : theta_(theta), p_min_(p_min), p_max_(p_max) {
    require_theta_open(theta);
    if (p_min > p_max) throw UsageError("interval window needs p_min <= p_max");
}

Interval IntervalSystem::interval(int p) const {
    return {p * kPi + 2.0 * theta_, (p + 1) * kPi - 2.0 * theta_};
}

std::vector<Interval> IntervalSystem::intervals() const {
    std::vector<Interval> out;
    for (int p = p_min_; p <= p_max_; ++p) out.push_back(interval(p));
    return out;
}

double IntervalSystem::offset_in_period(double t) const { return t - kPi * std::floor(t / kPi); }

bool IntervalSystem::contains(double t, double tol) const {
    const double r = offset_in_period(t);
    const double lo = 2.0 * theta_ - tol;
    const double hi = kPi - 2.0 * theta_ + tol;
    // r near π belongs to the next period's left end as well.
    return (r >= lo && r <= hi) || (r - kPi >= lo);
}

bool IntervalSystem::contains_interior(double t, double tol) const {
    const double r = offset_in_period(t);
    return r > 2.0 * theta_ + tol && r < kPi - 2.0 * theta_ - tol;
}

Complex phi(Complex t, double theta) {
    require_theta_open(theta);
    return std::cos(t) / std::cos(2.0 * theta);
}

Complex tau_eval(int n, double theta, Complex t) {
    require_degree(n);
    return cheb_eval(ChebDegree(n), phi(t, theta));
}

Complex tau_eval_via_laurent(int n, double theta, Complex t) {
    require_degree(n);
    require_theta_open(theta);
    const LaurentPoly coeffs = trace_power_coeffs(n, Matrix2C::canonical(theta));
    const Complex z = std::exp(Complex{0.0, 1.0} * t);
    return eval_laurent(coeffs, z) / (2.0 * std::pow(std::cos(2.0 * theta), n));
}

TrigPoly tau_coeffs(int n, double theta) {
    require_degree(n);
    require_theta_open(theta);
    const LaurentPoly p = closed_form_coeffs(n, theta);
    const double norm = std::pow(std::cos(2.0 * theta), n);
    std::vector<double> out(static_cast<std::size_t>(n + 1), 0.0);
    out[0] = p.coeff(0).real() / (2.0 * norm);
    for (int k = 1; k <= n; ++k) out[static_cast<std::size_t>(k)] = p.coeff(k).real() / norm;
    return TrigPoly(n, std::move(out));
}

IntervalSystem interval_system(double theta, int p_min, int p_max) { return IntervalSystem(theta, p_min, p_max); }

std::vector<double> tau_roots(int n, double theta) {
    require_degree(n);
    require_theta_open(theta);
    const double cos2 = std::cos(2.0 * theta);
    std::vector<double> out;
    for (double zeta : cheb_roots(ChebDegree(n))) out.push_back(pull_back(zeta, cos2));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<LevelRoot> tau_pm1_roots(int n, double theta) {
    require_degree(n);
    require_theta_open(theta);
    const double cos2 = std::cos(2.0 * theta);
    std::vector<LevelRoot> out;
    for (int level : {+1, -1}) {
        for (const auto& pt : cheb_preimage(ChebDegree(n), level)) {
            out.push_back({pull_back(pt.root, cos2), level, pt.multiplicity});
        }
    }
    std::sort(out.begin(), out.end(), [](const LevelRoot& a, const LevelRoot& b) { return a.t < b.t; });
    return out;
}

double comb_height(double theta) {
    require_theta_open(theta);
    return std::acosh(1.0 / std::cos(2.0 * theta));
}

Complex comb_map(Complex t, double theta) {
    require_theta_open(theta);
    if (t.imag() < 0.0) throw DomainError("comb map is defined on the closed upper half-plane");

    const Complex i{0.0, 1.0};
    Complex u;
    if (t.imag() == 0.0) {
        const double f = std::cos(t.real()) / std::cos(2.0 * theta);
        if (f > 1.0) {
            u = i * std::acosh(f);
        } else if (f < -1.0) {
            u = Complex{-kPi, std::acosh(-f)};
        } else {
            u = -std::acos(f);
        }
    } else {
        const Complex f = phi(t, theta);
        u = i * std::log(f + std::sqrt(f - 1.0) * std::sqrt(f + 1.0));
    }
    assert(std::abs(std::cos(u) - phi(t, theta)) <= 1e-8 * (1.0 + std::abs(phi(t, theta))));
    return u;
}

}  // namespace laurent
