#pragma once

#include <cstddef>

#include "gap/appell.hpp"
#include "gap/hypergeom.hpp"
#include "gap/polynomial.hpp"
#include "gap/rational.hpp"

namespace gap {

// Gauss-Appell polynomials  2F1A_n(a,b;c;x) = sum_k C(n,k) phi_k A_{n-k} x^k,
// with phi_k = (a)_k (b)_k / (c)_k and A_k the Appell numbers of the family.
// The three constructions below are independent and agree exactly.

/// Direct sum over the power of x.
Polynomial gap_explicit(const AppellFamily& family, const HypergeomParams& params, unsigned n);

/// Same sum indexed by the Appell number: coefficient of x^{n-k} is
/// C(n,k) phi_{n-k} A_k.
Polynomial gap_explicit_flipped(const AppellFamily& family, const HypergeomParams& params, unsigned n);

/// Coefficient of t^n/n! in A(t) * 2F1(a,b;c;x t), with x kept formal.
Polynomial gap_from_generating(const AppellFamily& family, const HypergeomParams& params, unsigned n);

/// Pure recurrence
///   2F1A_{k+1} = (ab/c) x 2F1A_k(a+1,b+1;c+1;x) + sum_j C(k,j) beta_j 2F1A_{k-j},
/// built bottom-up from 2F1A_0 = A_0. The shifted-parameter term comes from
/// gap_explicit. Throws Errc::not_strict_appell when A_0 = 0.
Polynomial gap_by_recurrence(const AppellFamily& family, const HypergeomParams& params, unsigned n);

inline Rational gap_evaluate(const Polynomial& p, const Rational& x) { return p.evaluate(x); }

inline Polynomial gap_x_derivative(const Polynomial& p) { return p.derivative(); }

/// 2F1A_n(x+y) == sum_k C(n,k) (1 + x/y)^k phi_k y^k A_{n-k}, both sides exact.
/// Throws Errc::zero_shift_base when y = 0.
bool gap_argument_shift_check(const AppellFamily& family, const HypergeomParams& params, unsigned n,
                              const Rational& x, const Rational& y);

/// d/dx 2F1A_n(a,b;c;x) == n (ab/c) 2F1A_{n-1}(a+1,b+1;c+1;x). Requires n >= 1.
bool derivative_identity_check(const AppellFamily& family, const HypergeomParams& params, unsigned n);

/// chi^m (x chi + a)^n applied to the vacua, i.e. sum_k C(n,k) phi_{k+m}
/// A_{n-k} x^k, equals phi_m 2F1A_n(a+m,b+m;c+m;x).
bool chi_shift_identity_check(const AppellFamily& family, const HypergeomParams& params, unsigned n,
                              unsigned m);

/// Coefficient of t^n/n! in A(t) e^{x t} 2F1(a,b;c;y t^2), with x and y formal.
BivariatePolynomial bivariate_gap(const AppellFamily& family, const HypergeomParams& params, unsigned n);

}  // namespace gap
