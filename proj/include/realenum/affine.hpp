#pragma once

#include <compare>
#include <map>
#include <string>

#include "realenum/numeric.hpp"

namespace realenum {

// A named unknown, e.g. theta(4,1,2) for the base cell sigma=1, s=2 of the
// plane degree-4 grid. Ordering is lexicographic on the canonical name, which
// keeps every downstream elimination and rendering deterministic.
struct UnknownSymbol {
  std::string name;
  std::string display;  // chi[tag,s] for sigma = 0, theta[tag,sigma,s] otherwise

  static UnknownSymbol theta(const std::string& tag, long long sigma, long long s);

  std::strong_ordering operator<=>(const UnknownSymbol& o) const { return name <=> o.name; }
  bool operator==(const UnknownSymbol& o) const { return name == o.name; }
};

// Exact integer-coefficient affine form over named unknowns. Zero coefficients
// are never stored; all arithmetic is arbitrary precision.
class AffineExpr {
 public:
  AffineExpr() = default;  // zero
  explicit AffineExpr(Integer constant) : constant_(std::move(constant)) {}
  explicit AffineExpr(const UnknownSymbol& sym) { terms_.emplace(sym, 1); }
  AffineExpr(const UnknownSymbol& sym, Integer coeff);

  static AffineExpr zero() { return AffineExpr(); }

  const Integer& constant() const { return constant_; }
  const std::map<UnknownSymbol, Integer>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty() && constant_ == 0; }
  bool is_constant() const { return terms_.empty(); }

  AffineExpr& operator+=(const AffineExpr& o);
  AffineExpr& operator-=(const AffineExpr& o);
  friend AffineExpr operator+(AffineExpr a, const AffineExpr& b) { return a += b; }
  friend AffineExpr operator-(AffineExpr a, const AffineExpr& b) { return a -= b; }
  friend AffineExpr operator*(const Integer& k, const AffineExpr& a);
  AffineExpr operator-() const { return Integer(-1) * *this; }

  bool operator==(const AffineExpr& o) const {
    return constant_ == o.constant_ && terms_ == o.terms_;
  }

  // Exact substitution value; the assignment must cover every unknown of the
  // expression (throws std::invalid_argument otherwise).
  Integer eval(const std::map<UnknownSymbol, Integer>& assignment) const;

  // Replaces each listed unknown by an affine expression; unknowns not listed
  // are kept.
  AffineExpr substitute(const std::map<UnknownSymbol, AffineExpr>& repl) const;

  // Canonical text: terms in symbol order, unit coefficients bare, constant
  // last, e.g. "chi[4,1] + 6*theta[4,1,2] + 12*theta[4,2,3] + 8".
  std::string render() const;

 private:
  Integer constant_ = 0;
  std::map<UnknownSymbol, Integer> terms_;
};

}  // namespace realenum
