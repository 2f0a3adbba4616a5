#pragma once

#include <compare>
#include <string>
#include <tuple>

namespace superspace {

// Anticommuting coordinate or parameter. theta/theta_bar span the
// superspace fibre, zeta/zeta_bar are translation parameters, aux names
// free abstract spinors used in identity checks.
enum class GenKind { Theta, ThetaBar, Zeta, ZetaBar, Aux };

struct Generator {
  GenKind kind = GenKind::Theta;
  int index = 1;  // spinor index, 1 or 2
  bool dotted = false;
  std::string aux_name;  // nonempty iff kind == Aux

  static Generator theta(int a) { return {GenKind::Theta, a, false, {}}; }
  static Generator theta_bar(int a) { return {GenKind::ThetaBar, a, true, {}}; }
  static Generator zeta(int a) { return {GenKind::Zeta, a, false, {}}; }
  static Generator zeta_bar(int a) { return {GenKind::ZetaBar, a, true, {}}; }
  static Generator aux(std::string name, bool dotted, int a) {
    return {GenKind::Aux, a, dotted, std::move(name)};
  }

  // Conjugation swaps the families and the dottedness; index numeral kept.
  Generator conj() const {
    switch (kind) {
      case GenKind::Theta: return theta_bar(index);
      case GenKind::ThetaBar: return theta(index);
      case GenKind::Zeta: return zeta_bar(index);
      case GenKind::ZetaBar: return zeta(index);
      case GenKind::Aux: return aux(aux_name, !dotted, index);
    }
    return *this;
  }

  // Global order: th1 < th2 < tb1 < tb2 < z1 < z2 < zb1 < zb2 < aux (by
  // name, dottedness, index). Fixing it makes normal forms deterministic.
  std::tuple<int, const std::string&, bool, int> key() const {
    return {static_cast<int>(kind), aux_name, dotted, index};
  }
  friend bool operator<(const Generator& a, const Generator& b) {
    return a.key() < b.key();
  }
  friend bool operator==(const Generator& a, const Generator& b) {
    return a.key() == b.key();
  }
  friend bool operator!=(const Generator& a, const Generator& b) {
    return !(a == b);
  }

  std::string str() const {
    switch (kind) {
      case GenKind::Theta: return "th" + std::to_string(index);
      case GenKind::ThetaBar: return "tb" + std::to_string(index);
      case GenKind::Zeta: return "z" + std::to_string(index);
      case GenKind::ZetaBar: return "zb" + std::to_string(index);
      case GenKind::Aux:
        return aux_name + ":" + std::to_string(index) + (dotted ? "d" : "");
    }
    return "?";
  }
};

}  // namespace superspace
