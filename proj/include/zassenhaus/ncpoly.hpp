#pragma once

#include <limits>
#include <map>

#include "zassenhaus/rational.hpp"
#include "zassenhaus/word.hpp"

namespace zassenhaus {

/// Element of the free associative algebra on {A, B}: a finitely supported
/// map from words to exact rationals. The map never holds a zero coefficient,
/// so two polynomials are equal iff their term maps are equal. All operations
/// return canonical values; nothing here mutates shared state.
class NCPoly {
public:
  /// Sentinel returned by degree() for the zero polynomial. Never do
  /// arithmetic with it; branch on is_zero() instead.
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  NCPoly() = default; // zero polynomial
  explicit NCPoly(const Word &w, const Rational &c = Rational(1)) {
    add_term(w, c);
  }

  static NCPoly unit() { return NCPoly(Word{}); }
  static NCPoly generator(Gen g) { return NCPoly(Word{g}); }

  bool is_zero() const { return terms_.empty(); }

  int degree() const {
    if (terms_.empty())
      return kZeroDegree;
    return terms_.rbegin()->first.degree(); // deglex: last key has max degree
  }

  const std::map<Word, Rational> &terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  Rational coefficient(const Word &w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Canonicalizing insert: accumulates into the coefficient of w and drops
  /// the entry if it cancels to zero.
  void add_term(const Word &w, const Rational &c) {
    if (c.is_zero())
      return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero())
        terms_.erase(it);
    }
  }

  NCPoly &operator+=(const NCPoly &o) {
    for (const auto &[w, c] : o.terms_)
      add_term(w, c);
    return *this;
  }

  NCPoly &operator-=(const NCPoly &o) {
    for (const auto &[w, c] : o.terms_)
      add_term(w, -c);
    return *this;
  }

  NCPoly &operator*=(const Rational &c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto &[w, coeff] : terms_)
      coeff *= c;
    return *this;
  }

  NCPoly operator-() const {
    NCPoly r = *this;
    for (auto &[w, c] : r.terms_)
      c = -c;
    return r;
  }

  friend NCPoly operator+(NCPoly a, const NCPoly &b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly &b) { return a -= b; }

  friend NCPoly operator*(const NCPoly &a, const NCPoly &b) {
    NCPoly r;
    for (const auto &[wa, ca] : a.terms_)
      for (const auto &[wb, cb] : b.terms_)
        r.add_term(wa.concat(wb), ca * cb);
    return r;
  }

  friend NCPoly operator*(const Rational &c, NCPoly p) { return p *= c; }
  friend NCPoly operator*(NCPoly p, const Rational &c) { return p *= c; }

  NCPoly &operator*=(const NCPoly &o) { return *this = *this * o; }

  friend bool operator==(const NCPoly &a, const NCPoly &b) = default;

private:
  std::map<Word, Rational> terms_;
};

/// p·q − q·p.
NCPoly commutator(const NCPoly &p, const NCPoly &q);

/// k-fold iterated commutator [base,[base,...,[base,arg]]]; k = 0 is arg.
NCPoly ad_power(const NCPoly &base, const NCPoly &arg, int k);

/// The reversal anti-automorphism: every word's letters reversed,
/// coefficients unchanged. reversed(p·q) = reversed(q)·reversed(p).
NCPoly reversed(const NCPoly &p);

/// Homogeneous component of total degree d.
NCPoly grade(const NCPoly &p, int d);

/// Sum of the homogeneous components of degree <= max_degree.
NCPoly truncated(const NCPoly &p, int max_degree);

/// p^k in the free algebra; k = 0 gives the unit.
NCPoly pow(const NCPoly &p, int k);

} // namespace zassenhaus
