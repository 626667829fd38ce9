#ifndef LAURENT_TRIG_COMB_HPP
#define LAURENT_TRIG_COMB_HPP

#include <vector>

#include "laurent/core.hpp"

namespace laurent {

/// Even trigonometric polynomial Σ_{k=0}^{n} a_k cos(kt).
class TrigPoly {
public:
    TrigPoly(int n, std::vector<double> cos_coeffs);

    int degree() const { return n_; }
    double coeff(int k) const { return cos_coeffs_.at(static_cast<std::size_t>(k)); }
    const std::vector<double>& cos_coeffs() const { return cos_coeffs_; }

    Complex eval(Complex t) const;

private:
    int n_;
    std::vector<double> cos_coeffs_;
};

struct Interval {
    double lo;
    double hi;
};

/// The π-periodic union of [pπ + 2θ, (p+1)π - 2θ] (closed) and its interior.
/// Membership is over the whole line; `intervals()` lists the window p_min..p_max.
class IntervalSystem {
public:
    IntervalSystem(double theta, int p_min, int p_max);

    double theta() const { return theta_; }
    int p_min() const { return p_min_; }
    int p_max() const { return p_max_; }

    Interval interval(int p) const;
    std::vector<Interval> intervals() const;

    /// t in the closed system, the band widened by `tol` on both ends.
    bool contains(double t, double tol = 0.0) const;
    /// t in the open system, the band narrowed by `tol` on both ends.
    bool contains_interior(double t, double tol = 0.0) const;

private:
    double offset_in_period(double t) const;

    double theta_;
    int p_min_;
    int p_max_;
};

struct LevelRoot {
    double t;
    int level;  ///< +1 or -1
    int multiplicity;
};

/// Φ_θ(t) = cos t / cos 2θ.
Complex phi(Complex t, double theta);

/// τ_{n,θ}(t) = T_n(cos t / cos 2θ).
Complex tau_eval(int n, double theta, Complex t);

/// τ_{n,θ}(t) = L_n(e^{it}, F_θ) / (2 cos^n 2θ), evaluated from the trace-power coefficients.
Complex tau_eval_via_laurent(int n, double theta, Complex t);

/// Cosine coefficients of τ_{n,θ}.
TrigPoly tau_coeffs(int n, double theta);

IntervalSystem interval_system(double theta, int p_min, int p_max);

/// The n roots of τ_{n,θ} in [2θ, π - 2θ], ascending.
std::vector<double> tau_roots(int n, double theta);

/// Roots of τ_{n,θ} = ±1 in [2θ, π - 2θ], ascending in t.
std::vector<LevelRoot> tau_pm1_roots(int n, double theta);

/// h >= 0 with cosh h = 1/cos 2θ.
double comb_height(double theta);

/// u_θ(t) = i ln(Φ + sqrt(Φ² - 1)), Φ = Φ_θ(t), for Im t >= 0.
///
/// Real t in the open interval system gives u = -arccos Φ. Real t in the gaps
/// gives u = i·arccosh Φ (Φ > 1) or u = -π + i·arccosh(-Φ) (Φ < -1), so u(0) = ih.
/// For Im t > 0 the root is sqrt(Φ - 1)·sqrt(Φ + 1) (positive on Φ > 1) with the
/// principal logarithm, so Im u >= 0 and u(t)/t → 1 as t → i∞.
Complex comb_map(Complex t, double theta);

}  // namespace laurent

#endif  // LAURENT_TRIG_COMB_HPP
