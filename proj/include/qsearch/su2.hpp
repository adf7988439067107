#pragma once

#include <complex>
#include <vector>

#include "qsearch/params.hpp"

namespace qsearch {

using Complex = std::complex<double>;

/// Normalized 2-component state in the reduced search basis
/// {|1> = U^-1|tau>, |2>}; |a1|^2 is the marked-state probability.
struct Spinor2 {
    Complex a1;
    Complex a2;
};

/// 2x2 complex matrix with unit determinant.
struct Unitary2 {
    Complex q11, q12;
    Complex q21, q22;
};

double norm(const Spinor2& s);
Complex det(const Unitary2& u);
bool is_unitary(const Unitary2& u, double tol = 1e-12);
Unitary2 mul(const Unitary2& a, const Unitary2& b);
Unitary2 adjoint(const Unitary2& u);

/// Closed-form SU(2) matrix of one generalized search iteration in the
/// two-dimensional invariant subspace:
///
///   [ -e^{-i phi/2}(cos t/2 + i cos 2b sin t/2)   -i e^{-i phi/2} sin 2b sin t/2 ]
///   [ -i e^{i phi/2} sin 2b sin t/2               -e^{i phi/2}(cos t/2 - i cos 2b sin t/2) ]
///
/// with t = theta, b = beta. Unit determinant by construction.
Unitary2 build_grover_operator(const SearchParams& params);

/// The one-step operator that reproduces the full-dimensional iteration
/// -Ig U^-1 It U. Convention note (established against the full-state
/// simulator, which is the arbiter):
///
///   * In the reduced basis {U^-1|tau>, -(|g> - U_tg U^-1|tau>)/cos b} the
///     operator product equals e^{i(theta+phi)/2} Z Q^dag Z^dag, where Q is
///     build_grover_operator's matrix and Z = diag(e^{i xi/2}, e^{-i xi/2}).
///     The closed form is thus the Hermitian adjoint of the product, up to a
///     neglected global phase and a diagonal phase carrying xi.
///   * Absorbing the xi phase into |1> and dropping the sign on |2> (the
///     basis in which the initial state is (sin b, cos b) with both entries
///     non-negative), the product becomes e^{i(theta+phi)/2} sz Q^dag sz,
///     i.e. Q with its diagonal conjugated.
///
/// This function returns sz Q^dag sz. The global phase is dropped: it is
/// invisible to probabilities and to the SO(3) image. All trajectory and
/// planning code advances states with this operator; the adjoint image of
/// the closed form differs from the trajectory rotation exactly by
/// conjugation with diag(-1,-1,1) plus a transpose (see so3.hpp).
Unitary2 step_operator(const SearchParams& params);

Spinor2 apply(const Unitary2& op, const Spinor2& s);

/// The evenly distributed initial state (sin b, cos b); equals
/// (1/sqrt(N), sqrt(N-1)/sqrt(N)) when beta comes from a database size.
Spinor2 initial_spinor(const SearchParams& params);

/// P = |a1|^2, equal to (z+1)/2 for the Bloch image of s.
double marked_probability(const Spinor2& s);

/// Iterates of the search step: element 0 is initial_spinor(params),
/// element j+1 = apply(step_operator(params), element j). Length steps+1.
std::vector<Spinor2> iterate(const SearchParams& params, int steps);

}  // namespace qsearch
