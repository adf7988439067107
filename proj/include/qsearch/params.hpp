#pragma once

#include <cstdint>
#include <optional>

namespace qsearch {

/// Normalize an angle to (-pi, pi].
double normalize_angle(double a);

/// Parameter set defining one generalized-search instance: phase rotations
/// theta (attached to the prepared state) and phi (attached to the marked
/// state), overlap angle beta with |U_tg| = sin(beta), phase xi of U_tg,
/// and optionally the database size n with sin(beta) = 1/sqrt(n).
struct SearchParams {
    double theta = 0.0;
    double phi = 0.0;
    double beta = 0.0;
    double xi = 0.0;
    std::optional<std::int64_t> n;

    /// Construct from an explicit overlap angle. Angles are normalized to
    /// (-pi, pi]; beta must lie in the open interval (0, pi/2).
    static SearchParams from_beta(double theta, double phi, double beta, double xi = 0.0);

    /// Construct from a database size n >= 2; beta = arcsin(1/sqrt(n)).
    static SearchParams from_size(double theta, double phi, std::int64_t n, double xi = 0.0);

    /// Construct with both beta and n; they must agree to 1e-12.
    static SearchParams from_beta_and_size(double theta, double phi, double beta,
                                           std::int64_t n, double xi = 0.0);

    bool matched(double tol = 1e-12) const;
};

}  // namespace qsearch
