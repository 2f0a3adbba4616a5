#pragma once

#include <array>
#include <cassert>

#include "superspace/scalar.hpp"

namespace superspace {

// 2x2 matrix of exact scalars. All sigma-algebra objects are at most this
// size, so exhaustive loops beat a tensor engine.
struct Mat2 {
  std::array<std::array<Scalar, 2>, 2> m{};

  // 1-based accessors matching spinor index numerals
  Scalar& at(int r, int c) { return m[r - 1][c - 1]; }
  const Scalar& at(int r, int c) const { return m[r - 1][c - 1]; }

  friend Mat2 operator*(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (int i = 1; i <= 2; ++i) {
      for (int j = 1; j <= 2; ++j) {
        r.at(i, j) = a.at(i, 1) * b.at(1, j) + a.at(i, 2) * b.at(2, j);
      }
    }
    return r;
  }
  friend Mat2 operator+(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (int i = 1; i <= 2; ++i) {
      for (int j = 1; j <= 2; ++j) r.at(i, j) = a.at(i, j) + b.at(i, j);
    }
    return r;
  }
  friend Mat2 operator-(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (int i = 1; i <= 2; ++i) {
      for (int j = 1; j <= 2; ++j) r.at(i, j) = a.at(i, j) - b.at(i, j);
    }
    return r;
  }
  friend Mat2 operator*(const Scalar& c, const Mat2& a) {
    Mat2 r;
    for (int i = 1; i <= 2; ++i) {
      for (int j = 1; j <= 2; ++j) r.at(i, j) = c * a.at(i, j);
    }
    return r;
  }
  friend bool operator==(const Mat2& a, const Mat2& b) { return a.m == b.m; }

  Scalar trace() const { return at(1, 1) + at(2, 2); }
};

inline int perm_parity4(int a, int b, int c, int d) {
  int v[4] = {a, b, c, d};
  int inv = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (v[i] == v[j]) return 0;
      if (v[i] > v[j]) ++inv;
    }
  }
  return (inv % 2 == 0) ? 1 : -1;
}

// Concrete tables: eta = diag(-1,+1,+1,+1), Pauli matrices with lower
// spinor indices, their conjugates sigma_bar with upper spinor indices
// obtained by raising with the epsilon spinors, and the epsilon tables
// normalized to eps^{12} = eps_{12} = +1 (dotted alike). The sign of the
// four-index symbol eps_{0123} is a runtime choice.
class PauliTables {
 public:
  explicit PauliTables(int eps4_sign = +1) : eps4_(eps4_sign) {
    assert(eps4_sign == 1 || eps4_sign == -1);
    const Scalar I = Scalar::i();
    sigma_[0] = Mat2{{{{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)}}}};
    sigma_[1] = Mat2{{{{Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0)}}}};
    sigma_[2] = Mat2{{{{Scalar(0), -I}, {I, Scalar(0)}}}};
    sigma_[3] = Mat2{{{{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(-1)}}}};
    // sigma_bar_mu^{ad a} = eps^{ad bd} eps^{a b} sigma_mu_{b bd}
    for (int mu = 0; mu < 4; ++mu) {
      for (int ad = 1; ad <= 2; ++ad) {
        for (int a = 1; a <= 2; ++a) {
          Scalar v(0);
          for (int bd = 1; bd <= 2; ++bd) {
            for (int b = 1; b <= 2; ++b) {
              v += eps_upper(ad, bd) * eps_upper(a, b) * sigma_[mu].at(b, bd);
            }
          }
          sigma_bar_[mu].at(ad, a) = v;
        }
      }
    }
  }

  static const PauliTables& standard(int eps4_sign = +1) {
    static const PauliTables plus(+1);
    static const PauliTables minus(-1);
    return eps4_sign == +1 ? plus : minus;
  }

  int eps4_sign() const { return eps4_; }

  static int eta(int mu, int nu) {
    if (mu != nu) return 0;
    return mu == 0 ? -1 : 1;
  }
  static Scalar eta_s(int mu, int nu) { return Scalar(eta(mu, nu)); }

  static Scalar eps_upper(int a, int b) {
    if (a == 1 && b == 2) return Scalar(1);
    if (a == 2 && b == 1) return Scalar(-1);
    return Scalar(0);
  }
  static Scalar eps_lower(int a, int b) { return eps_upper(a, b); }

  Scalar eps4_lower(int a, int b, int c, int d) const {
    return Scalar(eps4_ * perm_parity4(a, b, c, d));
  }
  // raising all four indices with eta multiplies by det(eta) = -1
  Scalar eps4_upper(int a, int b, int c, int d) const {
    return Scalar(-eps4_ * perm_parity4(a, b, c, d));
  }

  // sigma_mu_{a ad}: lower vector index, lower spinor indices
  const Scalar& sigma_lo(int mu, int a, int ad) const {
    return sigma_[mu].at(a, ad);
  }
  // sigma^mu = eta^{mu nu} sigma_nu
  Scalar sigma_up(int mu, int a, int ad) const {
    return (mu == 0 ? -sigma_[0].at(a, ad) : sigma_[mu].at(a, ad));
  }
  // sigma_bar_mu^{ad a}: lower vector index, upper spinor indices
  const Scalar& sigma_bar_lo(int mu, int ad, int a) const {
    return sigma_bar_[mu].at(ad, a);
  }
  Scalar sigma_bar_up(int mu, int ad, int a) const {
    return (mu == 0 ? -sigma_bar_[mu].at(ad, a) : sigma_bar_[mu].at(ad, a));
  }

  // matrix views; vector index lower unless stated
  const Mat2& sig(int mu) const { return sigma_[mu]; }          // rows a, cols ad
  const Mat2& sigbar(int mu) const { return sigma_bar_[mu]; }   // rows ad, cols a
  Mat2 sig_up(int mu) const {
    return mu == 0 ? Scalar(-1) * sigma_[0] : sigma_[mu];
  }
  Mat2 sigbar_up(int mu) const {
    return mu == 0 ? Scalar(-1) * sigma_bar_[0] : sigma_bar_[mu];
  }

  // Lorentz generators: S_{mu nu} = (i/4)(sigma_mu sigbar_nu - sigma_nu
  // sigbar_mu), rows lower undotted, cols upper undotted; barred variant
  // rows upper dotted, cols lower dotted.
  Mat2 S(int mu, int nu) const {
    return Scalar::imag_ratio(1, 4) *
           (sigma_[mu] * sigma_bar_[nu] - sigma_[nu] * sigma_bar_[mu]);
  }
  Mat2 Sbar(int mu, int nu) const {
    return Scalar::imag_ratio(1, 4) *
           (sigma_bar_[mu] * sigma_[nu] - sigma_bar_[nu] * sigma_[mu]);
  }

 private:
  std::array<Mat2, 4> sigma_;
  std::array<Mat2, 4> sigma_bar_;
  int eps4_;
};

// psi^a = eps^{ab} psi_b; the dotted table is numerically identical.
inline std::array<Scalar, 2> raise_index(const std::array<Scalar, 2>& lower,
                                         bool /*dotted*/ = false) {
  return {PauliTables::eps_upper(1, 2) * lower[1],
          PauliTables::eps_upper(2, 1) * lower[0]};
}

// psi_b = psi^a eps_{ab}
inline std::array<Scalar, 2> lower_index(const std::array<Scalar, 2>& upper,
                                         bool /*dotted*/ = false) {
  return {upper[1] * PauliTables::eps_lower(2, 1),
          upper[0] * PauliTables::eps_lower(1, 2)};
}

}  // namespace superspace
