#include "realenum/affine.hpp"

#include <stdexcept>

namespace realenum {

UnknownSymbol UnknownSymbol::theta(const std::string& tag, long long sigma, long long s) {
  UnknownSymbol sym;
  const std::string sig = std::to_string(sigma);
  const std::string ss = std::to_string(s);
  sym.name = "theta(" + tag + "," + sig + "," + ss + ")";
  sym.display = sigma == 0 ? "chi[" + tag + "," + ss + "]"
                           : "theta[" + tag + "," + sig + "," + ss + "]";
  return sym;
}

AffineExpr::AffineExpr(const UnknownSymbol& sym, Integer coeff) {
  if (coeff != 0) terms_.emplace(sym, std::move(coeff));
}

AffineExpr& AffineExpr::operator+=(const AffineExpr& o) {
  constant_ += o.constant_;
  for (const auto& [sym, coeff] : o.terms_) {
    auto it = terms_.find(sym);
    if (it == terms_.end()) {
      terms_.emplace(sym, coeff);
    } else {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

AffineExpr& AffineExpr::operator-=(const AffineExpr& o) { return *this += Integer(-1) * o; }

AffineExpr operator*(const Integer& k, const AffineExpr& a) {
  AffineExpr out;
  if (k == 0) return out;
  out.constant_ = k * a.constant_;
  for (const auto& [sym, coeff] : a.terms_) out.terms_.emplace(sym, k * coeff);
  return out;
}

Integer AffineExpr::eval(const std::map<UnknownSymbol, Integer>& assignment) const {
  Integer value = constant_;
  for (const auto& [sym, coeff] : terms_) {
    auto it = assignment.find(sym);
    if (it == assignment.end())
      throw std::invalid_argument("eval: missing symbol " + sym.name);
    value += coeff * it->second;
  }
  return value;
}

AffineExpr AffineExpr::substitute(const std::map<UnknownSymbol, AffineExpr>& repl) const {
  AffineExpr out(constant_);
  for (const auto& [sym, coeff] : terms_) {
    auto it = repl.find(sym);
    if (it == repl.end())
      out += AffineExpr(sym, coeff);
    else
      out += coeff * it->second;
  }
  return out;
}

std::string AffineExpr::render() const {
  std::string out;
  auto append = [&out](bool negative, const std::string& piece) {
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += piece;
  };
  for (const auto& [sym, coeff] : terms_) {
    const Integer mag = abs(coeff);
    append(coeff < 0, mag == 1 ? sym.display : mag.str() + "*" + sym.display);
  }
  if (constant_ != 0 || out.empty()) append(constant_ < 0, abs(constant_).str());
  return out;
}

}  // namespace realenum
