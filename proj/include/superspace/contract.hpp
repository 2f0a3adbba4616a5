#pragma once

#include <array>
#include <string>

#include "superspace/expression.hpp"
#include "superspace/pauli.hpp"

namespace superspace {

// Two-component spinor of expressions; slot [0] is index 1, slot [1] is
// index 2. Whether indices sit up or down (dotted or not) is part of each
// helper's contract, mirroring how the contractions are written.
using Spinor = std::array<Expression, 2>;

inline Spinor theta_up() {
  return {Expression::generator(Generator::theta(1)),
          Expression::generator(Generator::theta(2))};
}
inline Spinor theta_bar_up() {
  return {Expression::generator(Generator::theta_bar(1)),
          Expression::generator(Generator::theta_bar(2))};
}
inline Spinor zeta_up() {
  return {Expression::generator(Generator::zeta(1)),
          Expression::generator(Generator::zeta(2))};
}
inline Spinor zeta_bar_up() {
  return {Expression::generator(Generator::zeta_bar(1)),
          Expression::generator(Generator::zeta_bar(2))};
}
inline Spinor aux_up(const std::string& name, bool dotted) {
  return {Expression::generator(Generator::aux(name, dotted, 1)),
          Expression::generator(Generator::aux(name, dotted, 2))};
}
// component fields carry lower spinor indices in the multiplet expansion
inline Spinor field_lo(FieldSymbol s, bool conj = false) {
  return {Expression::atom(FieldAtom::spinor_field(s, 1, conj)),
          Expression::atom(FieldAtom::spinor_field(s, 2, conj))};
}

// psi^a = eps^{ab} psi_b
inline Spinor raise_sp(const Spinor& lo) {
  return {lo[1], Scalar(-1) * lo[0]};
}
// psi_b = psi^a eps_{ab}
inline Spinor lower_sp(const Spinor& up) {
  return {Scalar(-1) * up[1], up[0]};
}

inline Spinor add_sp(const Spinor& a, const Spinor& b) {
  return {a[0] + b[0], a[1] + b[1]};
}
inline Spinor scale_sp(const Scalar& c, const Spinor& s) {
  return {c * s[0], c * s[1]};
}
inline Spinor derive_sp(const Spinor& s, int mu) {
  return {s[0].spacetime_derive(mu), s[1].spacetime_derive(mu)};
}

// box = eta^{mu nu} d_mu d_nu
inline Expression box(const Expression& e) {
  Expression r;
  for (int mu = 0; mu < 4; ++mu) {
    Scalar c(PauliTables::eta(mu, mu));
    r += c * e.spacetime_derive(mu).spacetime_derive(mu);
  }
  return r;
}
inline Spinor box_sp(const Spinor& s) { return {box(s[0]), box(s[1])}; }

// (M s)_a = M_a{}^b s_b and friends; scalar entries, so only the explicit
// expression order of the final products carries grading.
inline Spinor apply_left(const Mat2& M, const Spinor& s) {
  Spinor r;
  for (int a = 1; a <= 2; ++a) {
    r[a - 1] = M.at(a, 1) * s[0] + M.at(a, 2) * s[1];
  }
  return r;
}
inline Spinor apply_right(const Spinor& s, const Mat2& M) {
  Spinor r;
  for (int b = 1; b <= 2; ++b) {
    r[b - 1] = M.at(1, b) * s[0] + M.at(2, b) * s[1];
  }
  return r;
}

// psi.chi = psi^a chi_a, undotted; factors multiplied in written order
inline Expression dot_undotted(const Spinor& u_up, const Spinor& v_lo) {
  return u_up[0] * v_lo[0] + u_up[1] * v_lo[1];
}
// psibar.chibar = psibar_ad chibar^ad, dotted
inline Expression dot_dotted(const Spinor& u_lo, const Spinor& v_up) {
  return u_lo[0] * v_up[0] + u_lo[1] * v_up[1];
}

// u.sigma^mu.v = u^a sigma^mu_{a ad} v^ad
inline Expression sandwich_up(const Spinor& u_up, int mu, const Spinor& v_up,
                              const PauliTables& t) {
  Expression r;
  for (int a = 1; a <= 2; ++a) {
    for (int ad = 1; ad <= 2; ++ad) {
      r += t.sigma_up(mu, a, ad) * (u_up[a - 1] * v_up[ad - 1]);
    }
  }
  return r;
}
// u.sigma_mu.v with the lower vector index
inline Expression sandwich_lo(const Spinor& u_up, int mu, const Spinor& v_up,
                              const PauliTables& t) {
  Expression r;
  for (int a = 1; a <= 2; ++a) {
    for (int ad = 1; ad <= 2; ++ad) {
      r += t.sigma_lo(mu, a, ad) * (u_up[a - 1] * v_up[ad - 1]);
    }
  }
  return r;
}
// ubar.sigbar^mu.v = ubar_ad sigbar^{mu ad a} v_a
inline Expression bar_sandwich_up(const Spinor& u_lo, int mu,
                                  const Spinor& v_lo, const PauliTables& t) {
  Expression r;
  for (int ad = 1; ad <= 2; ++ad) {
    for (int a = 1; a <= 2; ++a) {
      r += t.sigma_bar_up(mu, ad, a) * (u_lo[ad - 1] * v_lo[a - 1]);
    }
  }
  return r;
}
inline Expression bar_sandwich_lo(const Spinor& u_lo, int mu,
                                  const Spinor& v_lo, const PauliTables& t) {
  Expression r;
  for (int ad = 1; ad <= 2; ++ad) {
    for (int a = 1; a <= 2; ++a) {
      r += t.sigma_bar_lo(mu, ad, a) * (u_lo[ad - 1] * v_lo[a - 1]);
    }
  }
  return r;
}

// theta.theta, thetabar.thetabar and the zeta analogues
inline Expression theta_sq() {
  Spinor t = theta_up();
  return dot_undotted(t, lower_sp(t));
}
inline Expression theta_bar_sq() {
  Spinor t = theta_bar_up();
  return dot_dotted(lower_sp(t), t);
}
inline Expression zeta_sq() {
  Spinor z = zeta_up();
  return dot_undotted(z, lower_sp(z));
}
inline Expression zeta_bar_sq() {
  Spinor z = zeta_bar_up();
  return dot_dotted(lower_sp(z), z);
}

}  // namespace superspace
