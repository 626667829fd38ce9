#include "laurent/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace laurent {
namespace {

constexpr double kClusterTol = 1e-9;

}  // namespace

ChebDegree::ChebDegree(int n) : n_(n) {
    if (n < 1) throw UsageError("Chebyshev degree must be >= 1, got " + std::to_string(n));
}

namespace detail {

Complex cheb_eval_recurrence(ChebDegree n, Complex zeta) {
    Complex prev{1.0};
    Complex curr = zeta;
    for (int k = 1; k < n.value(); ++k) {
        const Complex next = 2.0 * zeta * curr - prev;
        prev = curr;
        curr = next;
    }
    return curr;
}

Complex cheb_eval_mu(ChebDegree n, Complex zeta) {
    const Complex root = std::sqrt(zeta * zeta - 1.0);
    const Complex mu1 = zeta + root;
    const Complex mu2 = zeta - root;
    return 0.5 * (std::pow(mu1, n.value()) + std::pow(mu2, n.value()));
}

}  // namespace detail

double cheb_eval(ChebDegree n, double x) {
    if (x >= -1.0 && x <= 1.0) return std::cos(n.value() * std::acos(x));
    return detail::cheb_eval_recurrence(n, Complex{x}).real();
}

Complex cheb_eval(ChebDegree n, Complex zeta) {
    if (zeta.imag() == 0.0) return cheb_eval(n, zeta.real());
    return detail::cheb_eval_recurrence(n, zeta);
}

std::vector<double> cheb_roots(ChebDegree n) {
    // cos((2j-1)π/(2n)) written as sin((n-2j+1)π/(2n)): exact zero in the middle
    // and exact antisymmetry, ascending as j runs from n down to 1.
    const int deg = n.value();
    std::vector<double> roots;
    roots.reserve(static_cast<std::size_t>(deg));
    for (int j = deg; j >= 1; --j) roots.push_back(std::sin((deg - 2 * j + 1) * kPi / (2.0 * deg)));
    return roots;
}

std::vector<PreimagePoint> cheb_preimage(ChebDegree n, double s) {
    if (!(s >= -1.0 && s <= 1.0)) throw DomainError("Chebyshev preimage requires s in [-1, 1]");
    const int deg = n.value();
    const double alpha = std::acos(s);

    std::vector<double> raw;
    raw.reserve(static_cast<std::size_t>(deg));
    for (int j = 0; j < deg; ++j) raw.push_back(std::cos((alpha + 2.0 * kPi * j) / deg));
    std::sort(raw.begin(), raw.end());

    std::vector<PreimagePoint> out;
    for (double x : raw) {
        x = std::clamp(x, -1.0, 1.0);
        if (!out.empty() && x - out.back().root <= kClusterTol) {
            ++out.back().multiplicity;
        } else {
            out.push_back({x, 1});
        }
    }
    return out;
}

}  // namespace laurent
