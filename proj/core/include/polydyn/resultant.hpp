#pragma once

#include <optional>

#include "polydyn/poly.hpp"

namespace polydyn {

// Res_x(P, Q) in the Sylvester convention:
//   Res(P, Q) = lc(P)^deg Q * prod P(beta_j) over roots beta_j of Q
//             = (-1)^(deg P * deg Q) Res(Q, P).
// CRT over word primes with a Hadamard-style bound. Throws BothZero when both
// inputs vanish; a single zero input gives 0.
Int resultant(const IntPoly& P, const IntPoly& Q);
Rat resultant(const RatPoly& P, const RatPoly& Q);

// disc(P) = (-1)^(m(m-1)/2) Res(P, P') / lc(P), m = deg P >= 1.
Rat discriminant(const RatPoly& P);
Int discriminant(const IntPoly& P);

// Bivariate resultant in the main variable by evaluation at integer t-points
// and Newton interpolation, with one extra consistency point. degree_bound
// caps deg_t of the result when the caller knows it.
RatPoly resultant_bivar(const Bivar& P, const Bivar& Q,
                        std::optional<int> degree_bound = std::nullopt);
RatPoly discriminant_bivar(const Bivar& P,
                           std::optional<int> degree_bound = std::nullopt);

// Two-sided evaluation of the discriminant transport identity for the
// substitution x = -B(y)/A(y). The bare form
//   disc_y Q = (disc_x P)^{deg_y R} Res_x(P, disc_y R)
// holds only when every leading coefficient in sight is a unit; in general
// the transported side carries lc powers. For constant A (m = deg_x P,
// n = deg B, W = disc_y R):
//   disc_y Q = lc(P)^{2n-2-deg W} lc(B)^{mn(m-1)} (disc_x P)^n Res_x(P, W),
// which on the tower step P = Phi_n, B = -phi reproduces exactly the
// a_d^{(m-1)(dm+1)} factor of the discriminant recursion. Both sides are
// returned so a caller can show the mismatch if there ever is one.
struct SimonCheck {
  bool equal = false;
  RatPoly lhs;  // disc_y Q(y)
  RatPoly rhs;  // transported side, lc corrections included
  int deg_y_R = 0;
};

// Q(y) = (-1)^m A(y)^m P(-B(y)/A(y)) for P over Q[t] of x-degree m >= 1.
// Requires Res(A, B) to be a unit; throws ResultantNotUnit otherwise.
SimonCheck simon_identity_check(const Bivar& P, const RatPoly& A,
                                const RatPoly& B);

}  // namespace polydyn
