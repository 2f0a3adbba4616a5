#pragma once

#include <cassert>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "superspace/field_atom.hpp"
#include "superspace/generator.hpp"
#include "superspace/scalar.hpp"

namespace superspace {

// Element of the graded word of one term. Generators sort before odd field
// atoms; even atoms never enter sign bookkeeping.
struct OddElem {
  bool is_atom = false;
  Generator gen;
  FieldAtom atom;

  static OddElem of(Generator g) { return {false, std::move(g), {}}; }
  static OddElem of(FieldAtom a) { return {true, {}, std::move(a)}; }

  friend bool operator<(const OddElem& x, const OddElem& y) {
    if (x.is_atom != y.is_atom) return !x.is_atom;
    if (x.is_atom) return x.atom < y.atom;
    return x.gen < y.gen;
  }
  friend bool operator==(const OddElem& x, const OddElem& y) {
    if (x.is_atom != y.is_atom) return false;
    return x.is_atom ? x.atom == y.atom : x.gen == y.gen;
  }
};

// Sorts a graded word in place and returns the permutation parity, or 0
// when an odd element repeats (nilpotency). Parity of a permutation of
// distinct elements equals the parity of its inversion count.
inline int canonical_sign(std::vector<OddElem>& word) {
  long inversions = 0;
  for (size_t i = 0; i < word.size(); ++i) {
    for (size_t j = i + 1; j < word.size(); ++j) {
      if (word[j] < word[i]) {
        ++inversions;
      } else if (word[i] == word[j]) {
        return 0;
      }
    }
  }
  std::sort(word.begin(), word.end());
  return (inversions % 2 == 0) ? 1 : -1;
}

// Canonical key of one term: the Grassmann monomial and the field multiset.
// Odd atoms are stored in ascending order; the sign absorbed while sorting
// lives in the owning coefficient. Map order doubles as serialization order.
struct TermKey {
  std::vector<Generator> gens;
  std::vector<FieldAtom> atoms;

  friend bool operator<(const TermKey& a, const TermKey& b) {
    if (a.gens != b.gens) {
      return std::lexicographical_compare(a.gens.begin(), a.gens.end(),
                                          b.gens.begin(), b.gens.end());
    }
    return std::lexicographical_compare(a.atoms.begin(), a.atoms.end(),
                                        b.atoms.begin(), b.atoms.end());
  }
  friend bool operator==(const TermKey& a, const TermKey& b) {
    return a.gens == b.gens && a.atoms == b.atoms;
  }

  int odd_count() const {
    int n = static_cast<int>(gens.size());
    for (const auto& a : atoms) {
      if (a.is_odd()) ++n;
    }
    return n;
  }
  int parity() const { return odd_count() % 2; }

  std::string str() const {
    std::string s;
    for (const auto& g : gens) {
      s += " ";
      s += g.str();
    }
    for (const auto& a : atoms) {
      s += " ";
      s += a.str();
    }
    return s;
  }
};

// Finite sum of terms in normal form: a coefficient map with zero entries
// absent. Two expressions are equal iff their maps are identical.
class Expression {
 public:
  using TermMap = std::map<TermKey, Scalar>;
  using AtomFn = std::function<std::optional<Expression>(const FieldAtom&)>;
  using GenFn = std::function<std::optional<Expression>(const Generator&)>;
  using ConjFn = std::function<FieldAtom(const FieldAtom&)>;

  Expression() = default;

  static Expression zero() { return {}; }
  static Expression scalar(Scalar c) {
    Expression e;
    e.add_term({}, std::move(c));
    return e;
  }
  static Expression one() { return scalar(Scalar(1)); }
  static Expression generator(const Generator& g) {
    Expression e;
    e.add_term({{g}, {}}, Scalar(1));
    return e;
  }
  static Expression atom(const FieldAtom& a) {
    Expression e;
    e.add_term({{}, {a}}, Scalar(1));
    return e;
  }

  // Accepts the word in its semantic order; canonicalizes and folds the sign.
  static Expression term(Scalar coeff, const std::vector<OddElem>& word,
                         std::vector<FieldAtom> even_atoms = {}) {
    Expression e;
    e.add_word(std::move(coeff), word, std::move(even_atoms));
    return e;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  // Parity of a homogeneous expression; nullopt when mixed or zero.
  std::optional<int> parity() const {
    std::optional<int> p;
    for (const auto& [k, c] : terms_) {
      int q = k.parity();
      if (p && *p != q) return std::nullopt;
      p = q;
    }
    return p;
  }

  const Scalar* coefficient(const TermKey& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? nullptr : &it->second;
  }

  friend Expression operator+(const Expression& a, const Expression& b) {
    Expression r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(k, c);
    return r;
  }
  friend Expression operator-(const Expression& a, const Expression& b) {
    Expression r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(k, -c);
    return r;
  }
  Expression operator-() const {
    Expression r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
  }
  Expression& operator+=(const Expression& o) { return *this = *this + o; }
  Expression& operator-=(const Expression& o) { return *this = *this - o; }

  friend Expression operator*(const Scalar& c, const Expression& e) {
    Expression r;
    if (c.is_zero()) return r;
    for (const auto& [k, v] : e.terms_) r.terms_.emplace(k, c * v);
    return r;
  }

  // Graded product: concatenate graded words and canonicalize.
  friend Expression operator*(const Expression& a, const Expression& b) {
    Expression r;
    for (const auto& [ka, ca] : a.terms_) {
      for (const auto& [kb, cb] : b.terms_) {
        std::vector<OddElem> word;
        std::vector<FieldAtom> evens;
        split_term(ka, word, evens);
        split_term(kb, word, evens);
        r.add_word(ca * cb, word, std::move(evens));
      }
    }
    return r;
  }
  Expression& operator*=(const Expression& o) { return *this = *this * o; }

  friend bool operator==(const Expression& a, const Expression& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const Expression& a, const Expression& b) {
    return !(a == b);
  }

  // Left Grassmann derivative with respect to generator g: remove g with the
  // sign (-1)^(number of odd elements left of g in the canonical word).
  // Generators precede odd atoms in that word, so only generators count.
  Expression grassmann_derive(const Generator& g) const {
    assert(g.kind != GenKind::Aux);
    Expression r;
    for (const auto& [k, c] : terms_) {
      for (size_t i = 0; i < k.gens.size(); ++i) {
        if (k.gens[i] == g) {
          TermKey nk = k;
          nk.gens.erase(nk.gens.begin() + static_cast<long>(i));
          r.add_term(nk, (i % 2 == 0) ? c : -c);
          break;
        }
      }
    }
    return r;
  }

  // Leibniz rule over field atoms; generators are constants. The coordinate
  // atom obeys d_nu x_mu = eta_{mu nu}.
  Expression spacetime_derive(int mu) const {
    Expression r;
    for (const auto& [k, c] : terms_) {
      for (size_t i = 0; i < k.atoms.size(); ++i) {
        if (k.atoms[i].symbol == FieldSymbol::X) {
          if (k.atoms[i].vector_index != mu) continue;
          TermKey nk = k;
          nk.atoms.erase(nk.atoms.begin() + static_cast<long>(i));
          r.add_term(nk, (mu == 0) ? -c : c);
          continue;
        }
        // Changing the derivative multiset can reorder odd atoms; rebuild
        // the word to keep the sign honest.
        std::vector<OddElem> word;
        std::vector<FieldAtom> evens;
        TermKey nk = k;
        nk.atoms[i] = nk.atoms[i].with_deriv(mu);
        split_term(nk, word, evens);
        r.add_word(c, word, std::move(evens));
      }
    }
    return r;
  }

  // Conjugation: conjugate coefficients, reverse each graded word, map
  // theta <-> theta_bar and zeta <-> zeta_bar, send atoms through conj_atom.
  Expression conjugate(const ConjFn& conj_atom = default_conj) const {
    Expression r;
    for (const auto& [k, c] : terms_) {
      std::vector<OddElem> word;
      std::vector<FieldAtom> evens;
      split_term(k, word, evens);
      std::vector<OddElem> rev;
      rev.reserve(word.size());
      for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (it->is_atom) {
          rev.push_back(OddElem::of(conj_atom(it->atom)));
        } else {
          rev.push_back(OddElem::of(it->gen.conj()));
        }
      }
      for (auto& a : evens) a = conj_atom(a);
      r.add_word(c.conj(), rev, std::move(evens));
    }
    return r;
  }

  // Simultaneous linear substitution. Unmapped elements stay themselves.
  // Each replacement must be parity-homogeneous matching what it replaces.
  Expression substitute(const GenFn& gen_fn, const AtomFn& atom_fn) const {
    Expression r;
    for (const auto& [k, c] : terms_) {
      Expression acc = Expression::scalar(c);
      for (const auto& g : k.gens) {
        std::optional<Expression> m = gen_fn ? gen_fn(g) : std::nullopt;
        acc = acc * (m ? *m : Expression::generator(g));
      }
      for (const auto& a : k.atoms) {
        std::optional<Expression> m = atom_fn ? atom_fn(a) : std::nullopt;
        acc = acc * (m ? *m : Expression::atom(a));
      }
      r += acc;
    }
    return r;
  }

  Expression substitute_generators(const GenFn& gen_fn) const {
    return substitute(gen_fn, nullptr);
  }
  Expression substitute_atoms(const AtomFn& atom_fn) const {
    return substitute(nullptr, atom_fn);
  }

  // Terms passing the predicate, unchanged.
  Expression filter(const std::function<bool(const TermKey&)>& pred) const {
    Expression r;
    for (const auto& [k, c] : terms_) {
      if (pred(k)) r.terms_.emplace(k, c);
    }
    return r;
  }

  bool contains_kind(GenKind kind) const {
    for (const auto& [k, c] : terms_) {
      for (const auto& g : k.gens) {
        if (g.kind == kind) return true;
      }
    }
    return false;
  }
  bool contains_symbol(FieldSymbol s) const {
    for (const auto& [k, c] : terms_) {
      for (const auto& a : k.atoms) {
        if (a.symbol == s) return true;
      }
    }
    return false;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [k, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + c.str() + ")";
      s += k.str();
    }
    return s;
  }

  static FieldAtom default_conj(const FieldAtom& a) { return a.conj(); }

 private:
  static void split_term(const TermKey& k, std::vector<OddElem>& word,
                         std::vector<FieldAtom>& evens) {
    for (const auto& g : k.gens) word.push_back(OddElem::of(g));
    for (const auto& a : k.atoms) {
      if (a.is_odd()) {
        word.push_back(OddElem::of(a));
      } else {
        evens.push_back(a);
      }
    }
  }

  void add_term(TermKey k, Scalar c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(std::move(k), std::move(c));
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void add_word(Scalar coeff, std::vector<OddElem> word,
                std::vector<FieldAtom> evens) {
    if (coeff.is_zero()) return;
    int sign = canonical_sign(word);
    if (sign == 0) return;
    TermKey k;
    for (auto& e : word) {
      if (e.is_atom) {
        k.atoms.push_back(std::move(e.atom));
      } else {
        k.gens.push_back(std::move(e.gen));
      }
    }
    // Merge the (sorted) odd atoms with the even ones into one multiset.
    std::sort(evens.begin(), evens.end());
    std::vector<FieldAtom> merged;
    merged.reserve(k.atoms.size() + evens.size());
    std::merge(k.atoms.begin(), k.atoms.end(), evens.begin(), evens.end(),
               std::back_inserter(merged));
    k.atoms = std::move(merged);
    add_term(std::move(k), sign == 1 ? std::move(coeff) : -coeff);
  }

  TermMap terms_;
};

// Table-backed conjugation map for restricted multiplets. Lookup failures
// throw: a symbol the map does not know cannot be conjugated silently.
class FieldConjTable {
 public:
  // self-conjugate entries keep (symbol, conjugated) fixed
  void add_self(FieldSymbol s) { self_.push_back(s); }
  FieldAtom operator()(const FieldAtom& a) const {
    for (FieldSymbol s : self_) {
      if (a.symbol == s) {
        // spinor dottedness still flips under conjugation
        FieldAtom r = a;
        if (a.is_spinor()) r.dotted = !r.dotted;
        return r;
      }
    }
    if (!allow_default_) {
      throw std::out_of_range("conjugation map has no entry for " + a.str());
    }
    return a.conj();
  }
  void set_allow_default(bool v) { allow_default_ = v; }

 private:
  std::vector<FieldSymbol> self_;
  bool allow_default_ = true;
};

}  // namespace superspace
