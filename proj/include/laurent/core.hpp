#ifndef LAURENT_CORE_HPP
#define LAURENT_CORE_HPP

#include <array>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace laurent {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kQuarterPi = std::numbers::pi / 4.0;

/// Input outside the mathematical domain of an operation (z = 0, θ out of range, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Caller violated an API precondition that is not a domain restriction.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Request exceeds a hard resource cap (e.g. the 2^n enumeration oracle).
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Builds a complex scalar, rejecting NaN/Inf components.
Complex make_complex(double re, double im = 0.0);

bool is_finite(const Complex& z);

/// 2×2 matrix of complex scalars, row-major. All entries are finite.
class Matrix2C {
public:
    Matrix2C() = default;
    Matrix2C(Complex g11, Complex g12, Complex g21, Complex g22);

    static Matrix2C identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Matrix2C diagonal(Complex d1, Complex d2) { return {d1, 0.0, 0.0, d2}; }

    /// F_θ = [[cos θ, sin θ], [sin θ, cos θ]].
    static Matrix2C canonical(double theta);

    /// F_{θ,a} = [[cos θ, a sin θ], [conj(a) sin θ, cos θ]].
    static Matrix2C canonical(double theta, Complex phase);

    /// Zero-based (row, col) access.
    const Complex& operator()(int row, int col) const { return entries_[index(row, col)]; }

    Complex trace() const { return entries_[0] + entries_[3]; }
    Complex det() const { return entries_[0] * entries_[3] - entries_[1] * entries_[2]; }
    Matrix2C adjoint() const;

    /// Largest entrywise modulus.
    double max_abs() const;

    friend Matrix2C operator*(const Matrix2C& a, const Matrix2C& b);
    friend Matrix2C operator+(const Matrix2C& a, const Matrix2C& b);
    friend Matrix2C operator-(const Matrix2C& a, const Matrix2C& b);
    friend Matrix2C operator*(Complex s, const Matrix2C& m);

private:
    static constexpr std::size_t index(int row, int col) { return static_cast<std::size_t>(2 * row + col); }

    std::array<Complex, 4> entries_{};
};

/// Laurent polynomial with exponents in [-n, n], stored densely from -n.
class LaurentPoly {
public:
    /// Zero polynomial with degree bound n >= 0.
    explicit LaurentPoly(int n);

    /// Takes coefficients for exponents -n..n; size must be odd.
    explicit LaurentPoly(std::vector<Complex> coeffs);

    int degree_bound() const { return n_; }

    /// Coefficient at exponent k; zero outside [-n, n].
    Complex coeff(int k) const;
    void set_coeff(int k, Complex value);
    void add_to_coeff(int k, Complex value);

    /// Coefficients ordered by ascending exponent -n..n.
    const std::vector<Complex>& coeffs() const { return coeffs_; }

    /// Max coefficient modulus.
    double max_abs() const;

    /// Same polynomial with a different degree bound. Shrinking drops only zero slots;
    /// a nonzero coefficient outside the new bound is a UsageError.
    LaurentPoly with_bound(int n) const;

    friend LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q);
    friend LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q);
    friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);
    friend LaurentPoly operator*(Complex s, const LaurentPoly& p);

private:
    std::size_t slot(int k) const { return static_cast<std::size_t>(k + n_); }

    int n_;
    std::vector<Complex> coeffs_;
};

/// Σ c_k z^k via two Horner passes (z and 1/z), stable for |z| near 1.
Complex eval_laurent(const LaurentPoly& p, Complex z);

/// max_k |p_k - q_k| <= tol * (1 + max_k |p_k|). Degree bounds must match.
bool laurent_close(const LaurentPoly& p, const LaurentPoly& q, double tol);

/// max_k |p_k - q_k|, over the union of supports.
double max_coeff_diff(const LaurentPoly& p, const LaurentPoly& q);

}  // namespace laurent

#endif  // LAURENT_CORE_HPP
