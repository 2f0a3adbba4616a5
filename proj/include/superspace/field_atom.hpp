#pragma once

#include <algorithm>
#include <string>
#include <tuple>
#include <vector>

namespace superspace {

// Component fields of the linear and chiral multiplets, the spacetime
// coordinate, and free-form formal symbols for identity checks.
enum class FieldSymbol {
  Phi,
  Psi,
  ChiBar,
  A,
  M,
  N,
  Kappa,
  LambdaBar,
  D,
  F,
  X,       // spacetime coordinate x_mu; consumed by spacetime derivatives
  Formal,  // named abstract field, parity chosen at construction
};

// One component field occurrence: symbol, optional spinor/vector index and
// a sorted multiset of spacetime derivative indices.
struct FieldAtom {
  FieldSymbol symbol = FieldSymbol::Phi;
  bool conjugated = false;
  bool odd_formal = false;   // parity of Formal symbols
  bool dotted = false;       // spinor symbols only
  int spinor_index = 0;      // 1..2, 0 when absent
  int vector_index = -1;     // 0..3 for A and X, -1 when absent
  std::vector<int> derivs;   // sorted multiset over 0..3
  std::string name;          // Formal symbols only

  static FieldAtom scalar_field(FieldSymbol s, bool conj = false) {
    FieldAtom a;
    a.symbol = s;
    a.conjugated = conj;
    return a;
  }
  // psi/kappa carry an undotted index, chibar/lambdabar a dotted one;
  // conjugation flips the dottedness.
  static FieldAtom spinor_field(FieldSymbol s, int alpha, bool conj = false) {
    FieldAtom a;
    a.symbol = s;
    a.conjugated = conj;
    a.spinor_index = alpha;
    bool base_dotted = (s == FieldSymbol::ChiBar || s == FieldSymbol::LambdaBar);
    a.dotted = conj ? !base_dotted : base_dotted;
    return a;
  }
  static FieldAtom vector_field(int mu, bool conj = false) {
    FieldAtom a;
    a.symbol = FieldSymbol::A;
    a.conjugated = conj;
    a.vector_index = mu;
    return a;
  }
  static FieldAtom coordinate(int mu) {
    FieldAtom a;
    a.symbol = FieldSymbol::X;
    a.vector_index = mu;
    return a;
  }
  static FieldAtom formal(std::string name, bool odd = false, bool conj = false) {
    FieldAtom a;
    a.symbol = FieldSymbol::Formal;
    a.name = std::move(name);
    a.odd_formal = odd;
    a.conjugated = conj;
    return a;
  }

  bool is_odd() const {
    switch (symbol) {
      case FieldSymbol::Psi:
      case FieldSymbol::ChiBar:
      case FieldSymbol::Kappa:
      case FieldSymbol::LambdaBar:
        return true;
      case FieldSymbol::Formal:
        return odd_formal;
      default:
        return false;
    }
  }

  bool is_spinor() const {
    return symbol == FieldSymbol::Psi || symbol == FieldSymbol::ChiBar ||
           symbol == FieldSymbol::Kappa || symbol == FieldSymbol::LambdaBar;
  }

  FieldAtom with_deriv(int mu) const {
    FieldAtom a = *this;
    a.derivs.insert(std::upper_bound(a.derivs.begin(), a.derivs.end(), mu), mu);
    return a;
  }

  // (f)^* : toggles the dagger, flips spinor dottedness, keeps derivatives.
  // The coordinate is real.
  FieldAtom conj() const {
    if (symbol == FieldSymbol::X) return *this;
    FieldAtom a = *this;
    a.conjugated = !conjugated;
    if (is_spinor()) a.dotted = !dotted;
    return a;
  }

  std::tuple<int, std::string, bool, bool, int, bool, int, std::vector<int>> key() const {
    return {static_cast<int>(symbol), name,     odd_formal, conjugated,
            spinor_index,             dotted,   vector_index, derivs};
  }
  friend bool operator<(const FieldAtom& a, const FieldAtom& b) {
    return a.key() < b.key();
  }
  friend bool operator==(const FieldAtom& a, const FieldAtom& b) {
    return a.key() == b.key();
  }
  friend bool operator!=(const FieldAtom& a, const FieldAtom& b) {
    return !(a == b);
  }

  std::string str() const {
    std::string s;
    for (int mu : derivs) s += "d" + std::to_string(mu);
    s += base_str();
    if (spinor_index != 0) {
      s += "_" + std::to_string(spinor_index) + (dotted ? "d" : "");
    }
    if (vector_index >= 0) s += "_" + std::to_string(vector_index);
    return s;
  }

 private:
  std::string base_str() const {
    switch (symbol) {
      case FieldSymbol::Phi: return conjugated ? "phi+" : "phi";
      case FieldSymbol::Psi: return conjugated ? "psibar" : "psi";
      case FieldSymbol::ChiBar: return conjugated ? "chi" : "chibar";
      case FieldSymbol::A: return conjugated ? "A+" : "A";
      case FieldSymbol::M: return conjugated ? "M+" : "M";
      case FieldSymbol::N: return conjugated ? "N+" : "N";
      case FieldSymbol::Kappa: return conjugated ? "kappabar" : "kappa";
      case FieldSymbol::LambdaBar: return conjugated ? "lambda" : "lambdabar";
      case FieldSymbol::D: return conjugated ? "D+" : "D";
      case FieldSymbol::F: return conjugated ? "F+" : "F";
      case FieldSymbol::X: return "x";
      case FieldSymbol::Formal: return conjugated ? name + "+" : name;
    }
    return "?";
  }
};

}  // namespace superspace
