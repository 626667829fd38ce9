#include "laurent/laurent_engine.hpp"

#include "laurent/chebyshev.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <string>

namespace laurent {
namespace {

constexpr double kQuarterPiCosFloor = 1e-9;

void require_degree(int n) {
    if (n < 1) throw UsageError("degree n must be >= 1, got " + std::to_string(n));
}

void require_theta_closed(double theta) {
    if (!(theta >= 0.0 && theta <= kQuarterPi)) throw DomainError("theta must lie in [0, pi/4]");
}

void require_nonzero(Complex z) {
    if (z == Complex{}) throw DomainError("z must be nonzero");
}

// 2×2 matrix with Laurent-polynomial entries, row-major.
using PolyMatrix = std::array<LaurentPoly, 4>;

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

// (z + s/z)^power with s = ±1: binomial coefficients with alternating sign when s = -1.
LaurentPoly binomial_power(int power, int sign) {
    LaurentPoly out(power);
    double c = 1.0;
    for (int i = 0; i <= power; ++i) {
        // term C(power, i) z^(power - i) (s/z)^i
        const double signed_c = (sign < 0 && i % 2 == 1) ? -c : c;
        out.set_coeff(power - 2 * i, signed_c);
        c = c * (power - i) / (i + 1);
    }
    return out;
}

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double c = 1.0;
    for (int i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
    return std::round(c);
}

void zero_parity_slots(LaurentPoly& p, int n) {
    for (int k = -n; k <= n; ++k) {
        if ((k - n) % 2 != 0) p.set_coeff(k, 0.0);
    }
}

}  // namespace

SignSequence::SignSequence(int n, std::uint32_t mask) {
    if (n < 1 || n > 32) throw UsageError("sign sequence length must be in [1, 32]");
    signs_.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) signs_.push_back(((mask >> k) & 1u) != 0 ? 1 : -1);
}

int SignSequence::plus_count() const {
    int count = 0;
    for (int s : signs_) count += s > 0 ? 1 : 0;
    return count;
}

Matrix2C transfer_matrix(Complex z, const Matrix2C& g) {
    require_nonzero(z);
    return g * Matrix2C::diagonal(z, 1.0 / z) * g.adjoint();
}

Matrix2C column_projector_plus(const Matrix2C& g) {
    const Complex a = g(0, 0);
    const Complex b = g(1, 0);
    return {a * std::conj(a), a * std::conj(b), b * std::conj(a), b * std::conj(b)};
}

Matrix2C column_projector_minus(const Matrix2C& g) {
    const Complex a = g(0, 1);
    const Complex b = g(1, 1);
    return {a * std::conj(a), a * std::conj(b), b * std::conj(a), b * std::conj(b)};
}

LaurentPoly trace_power_coeffs(int n, const Matrix2C& g) {
    require_degree(n);
    const Matrix2C plus = column_projector_plus(g);
    const Matrix2C minus = column_projector_minus(g);

    PolyMatrix s{LaurentPoly(1), LaurentPoly(1), LaurentPoly(1), LaurentPoly(1)};
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            auto& entry = s[static_cast<std::size_t>(2 * r + c)];
            entry.set_coeff(1, plus(r, c));
            entry.set_coeff(-1, minus(r, c));
        }
    }

    PolyMatrix power = s;
    for (int k = 1; k < n; ++k) power = multiply(power, s);
    return (power[0] + power[3]).with_bound(n);
}

LaurentPoly brute_force_coeffs(int n, const Matrix2C& g) {
    require_degree(n);
    if (n > kBruteForceMaxDegree) throw ResourceError("oracle degree cap");

    const std::array<Matrix2C, 2> projectors{column_projector_plus(g), column_projector_minus(g)};
    LaurentPoly out(n);

    // Depth-first over ε, extending the prefix product P_ε1···P_εd by one factor per level.
    // Leaves are visited in a fixed order, so the summation order is deterministic.
    std::function<void(int, const Matrix2C&, int)> visit = [&](int depth, const Matrix2C& prefix, int plus) {
        if (depth == n) {
            out.add_to_coeff(2 * plus - n, prefix.trace());
            return;
        }
        visit(depth + 1, prefix * projectors[0], plus + 1);
        visit(depth + 1, prefix * projectors[1], plus);
    };
    visit(1, projectors[0], 1);
    visit(1, projectors[1], 0);
    return out;
}

std::vector<std::uint64_t> sign_sequence_histogram(int n) {
    require_degree(n);
    if (n > kBruteForceMaxDegree) throw ResourceError("oracle degree cap");
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(2 * n + 1), 0);
    const std::uint32_t total = std::uint32_t{1} << n;
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        const SignSequence eps(n, mask);
        ++counts[static_cast<std::size_t>(eps.exponent() + n)];
    }
    return counts;
}

Complex closed_form_eval(int n, double theta, Complex z) {
    require_degree(n);
    require_nonzero(z);
    require_theta_closed(theta);
    const Complex joukowski_sum = z + 1.0 / z;
    const double c = std::cos(2.0 * theta);
    if (c < kQuarterPiCosFloor) return std::pow(joukowski_sum, n);
    return 2.0 * std::pow(c, n) * cheb_eval(ChebDegree(n), joukowski_sum / (2.0 * c));
}

LaurentPoly closed_form_coeffs(int n, double theta) {
    require_degree(n);
    require_theta_closed(theta);

    // L_n = 2^(1-n) Σ_j C(n,2j) (z+1/z)^(n-2j) ((z-1/z)^2 + u)^j,  u = 4 sin^2 2θ.
    // Expanding the inner power in u keeps every table entry an integer, so the
    // θ-independent parts cancel exactly and small-θ coefficients stay accurate.
    const int max_j = n / 2;
    std::vector<LaurentPoly> by_power(static_cast<std::size_t>(max_j + 1), LaurentPoly(n));
    for (int j = 0; j <= max_j; ++j) {
        const LaurentPoly outer = binomial_power(n - 2 * j, +1);
        for (int m = 0; m <= j; ++m) {
            const LaurentPoly inner = binomial_power(2 * (j - m), -1);
            const double weight = binomial(n, 2 * j) * binomial(j, m);
            by_power[static_cast<std::size_t>(m)] =
                by_power[static_cast<std::size_t>(m)] + (Complex{weight} * (outer * inner)).with_bound(n);
        }
    }

    const double sin2 = std::sin(2.0 * theta);
    const double u = 4.0 * sin2 * sin2;
    LaurentPoly out(n);
    for (int m = max_j; m >= 0; --m) out = Complex{u} * out + by_power[static_cast<std::size_t>(m)];
    out = Complex{std::ldexp(1.0, 1 - n)} * out;
    zero_parity_slots(out, n);
    return out;
}

LaurentPoly closed_form_coeffs(int n, const NormalForm& form) {
    LaurentPoly out = closed_form_coeffs(n, form.theta);
    const double scale_n = std::pow(form.scale, n);
    for (int k = -n; k <= n; ++k) out.set_coeff(k, scale_n * std::pow(form.dilation, k) * out.coeff(k));
    return out;
}

EigenPair eigen_split(Complex z, double theta) {
    require_nonzero(z);
    require_theta_closed(theta);
    const Complex w = 0.5 * (z + 1.0 / z);
    const double c = std::cos(2.0 * theta);
    const double c2 = c * c;
    const Complex root = std::sqrt(w * w - c2);
    const Complex plus = w + root;
    const Complex minus = w - root;
    // The smaller-modulus eigenvalue comes from the product c², not the cancelling difference.
    if (std::abs(plus) >= std::abs(minus)) {
        return {plus, plus == Complex{} ? Complex{} : c2 / plus};
    }
    return {c2 / minus, minus};
}

}  // namespace laurent
