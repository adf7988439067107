#include "qsearch/params.hpp"

#include <cmath>
#include <string>

#include "qsearch/errors.hpp"

namespace qsearch {

double normalize_angle(double a) {
    if (!std::isfinite(a)) throw ParameterError("angle is not finite");
    const double two_pi = 2.0 * M_PI;
    double r = std::remainder(a, two_pi);  // lands in [-pi, pi]
    if (r <= -M_PI) r += two_pi;
    return r;
}

namespace {

void check_beta(double beta) {
    if (!(beta > 0.0 && beta < M_PI / 2.0)) {
        throw ParameterError("beta must lie in (0, pi/2), got " + std::to_string(beta));
    }
}

}  // namespace

SearchParams SearchParams::from_beta(double theta, double phi, double beta, double xi) {
    check_beta(beta);
    return SearchParams{normalize_angle(theta), normalize_angle(phi), beta, normalize_angle(xi), {}};
}

SearchParams SearchParams::from_size(double theta, double phi, std::int64_t n, double xi) {
    if (n < 2) throw ParameterError("database size n must be >= 2, got " + std::to_string(n));
    const double beta = std::asin(1.0 / std::sqrt(static_cast<double>(n)));
    SearchParams p = from_beta(theta, phi, beta, xi);
    p.n = n;
    return p;
}

SearchParams SearchParams::from_beta_and_size(double theta, double phi, double beta,
                                              std::int64_t n, double xi) {
    SearchParams p = from_size(theta, phi, n, xi);
    if (std::abs(std::sin(beta) - 1.0 / std::sqrt(static_cast<double>(n))) >= 1e-12) {
        throw ParameterError("beta disagrees with arcsin(1/sqrt(n))");
    }
    return p;
}

bool SearchParams::matched(double tol) const {
    return std::abs(theta - phi) < tol;
}

}  // namespace qsearch
