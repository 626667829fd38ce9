#ifndef LAURENT_LAURENT_ENGINE_HPP
#define LAURENT_LAURENT_ENGINE_HPP

#include <cstdint>
#include <vector>

#include "laurent/core.hpp"
#include "laurent/normal_form.hpp"

namespace laurent {

/// Largest n accepted by the 2^n enumeration oracle.
inline constexpr int kBruteForceMaxDegree = 24;

/// One term index ε = (ε1, ..., εn), εk = ±1, of the expansion of (P1 z + P-1 z^-1)^n.
class SignSequence {
public:
    /// Bit k of `mask` set means εk = +1.
    SignSequence(int n, std::uint32_t mask);

    int length() const { return static_cast<int>(signs_.size()); }
    int sign(int k) const { return signs_[static_cast<std::size_t>(k)]; }
    const std::vector<int>& signs() const { return signs_; }

    /// ν(ε) = Σ εk, the exponent of z this term contributes to.
    int exponent() const { return plus_count() - minus_count(); }
    int plus_count() const;
    int minus_count() const { return length() - plus_count(); }

private:
    std::vector<int> signs_;
};

struct EigenPair {
    Complex first;
    Complex second;
};

/// S(z, G) = G · diag(z, 1/z) · G*.
Matrix2C transfer_matrix(Complex z, const Matrix2C& g);

/// Rank-one pieces with S(z, G) = P1·z + P-1·z^-1 (outer products of the columns).
Matrix2C column_projector_plus(const Matrix2C& g);
Matrix2C column_projector_minus(const Matrix2C& g);

/// Coefficients of L_n(z, G) = tr S(z, G)^n via a polynomial-matrix power.
LaurentPoly trace_power_coeffs(int n, const Matrix2C& g);

/// Coefficients of L_n(z, G) by summing tr(P_ε1 ··· P_εn) z^ν(ε) over all 2^n sign sequences.
LaurentPoly brute_force_coeffs(int n, const Matrix2C& g);

/// Number of sign sequences per exponent, indexed by k + n (enumerated, not from binomials).
std::vector<std::uint64_t> sign_sequence_histogram(int n);

/// L_n(z, F_θ) = 2 cos^n 2θ · T_n((z + 1/z)/(2 cos 2θ)); (z + 1/z)^n when cos 2θ < 1e-9.
Complex closed_form_eval(int n, double theta, Complex z);

/// Coefficients of L_n(z, F_θ) from the binomial expansion of the Chebyshev form.
LaurentPoly closed_form_coeffs(int n, double theta);

/// Coefficients of R^n · L_n(ρz, F_θ): the closed form carried through a normal form.
LaurentPoly closed_form_coeffs(int n, const NormalForm& form);

/// Eigenvalues of S(z, F_θ): w ± sqrt(w² - cos² 2θ), w = (z + 1/z)/2.
EigenPair eigen_split(Complex z, double theta);

}  // namespace laurent

#endif  // LAURENT_LAURENT_ENGINE_HPP
