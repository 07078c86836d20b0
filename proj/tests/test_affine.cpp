#include "doctest.h"

#include "realenum/affine.hpp"
#include "realenum/rng.hpp"

using namespace realenum;

namespace {

const UnknownSymbol x = UnknownSymbol::theta("t", 0, 1);
const UnknownSymbol y = UnknownSymbol::theta("t", 1, 2);

AffineExpr random_expr(SplitMix64& rng) {
  static const UnknownSymbol syms[] = {
      UnknownSymbol::theta("t", 0, 0), UnknownSymbol::theta("t", 1, 1),
      UnknownSymbol::theta("t", 2, 2), UnknownSymbol::theta("t", 3, 3),
      UnknownSymbol::theta("t", 4, 4), UnknownSymbol::theta("t", 5, 5)};
  AffineExpr e{Integer(rng.range(-1000000, 1000000))};
  for (const auto& sym : syms)
    if (rng.below(2)) e += AffineExpr(sym, Integer(rng.range(-1000000, 1000000)));
  return e;
}

}  // namespace

TEST_CASE("addition") {
  const AffineExpr a = AffineExpr(x) + AffineExpr(Integer(1));
  const AffineExpr b = AffineExpr(x, 2) + AffineExpr(Integer(-1));
  CHECK(a + b == AffineExpr(x, 3));
  CHECK(AffineExpr() + a == a);
  const AffineExpr c = AffineExpr(y, 2) + AffineExpr(Integer(448));
  CHECK(c + AffineExpr(y, -2) == AffineExpr(Integer(448)));
}

TEST_CASE("scaling") {
  const AffineExpr a = AffineExpr(x) + AffineExpr(Integer(1));
  CHECK(Integer(2) * a == AffineExpr(x, 2) + AffineExpr(Integer(2)));
  CHECK((Integer(0) * a).is_zero());
  const AffineExpr b = AffineExpr(x) - AffineExpr(Integer(3));
  CHECK(Integer(-1) * b == AffineExpr(x, -1) + AffineExpr(Integer(3)));
}

TEST_CASE("evaluation") {
  const AffineExpr e = AffineExpr(x) + AffineExpr(y, 2);
  CHECK(e.eval({{x, 0}, {y, 0}}) == 0);
  const UnknownSymbol z = UnknownSymbol::theta("t", 2, 3);
  const AffineExpr f =
      AffineExpr(x) + AffineExpr(y, 6) + AffineExpr(z, 12) + AffineExpr(Integer(8));
  CHECK(f.eval({{x, 0}, {y, 0}, {z, 0}}) == 8);
  CHECK(AffineExpr(Integer(448)).eval({}) == 448);
  CHECK_THROWS_AS(e.eval({{x, 1}}), std::invalid_argument);
}

TEST_CASE("module axioms over random expressions") {
  SplitMix64 rng(31337);
  for (int trial = 0; trial < 300; ++trial) {
    const AffineExpr a = random_expr(rng);
    const AffineExpr b = random_expr(rng);
    const AffineExpr c = random_expr(rng);
    const Integer k(rng.range(-1000000, 1000000));
    const Integer l(rng.range(-1000000, 1000000));
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(k * (a + b) == k * a + k * b);
    CHECK((k + l) * a == k * a + l * a);
    CHECK(k * (l * a) == (k * l) * a);
  }
}

TEST_CASE("evaluation is a homomorphism") {
  SplitMix64 rng(98);
  for (int trial = 0; trial < 200; ++trial) {
    const AffineExpr a = random_expr(rng);
    const AffineExpr b = random_expr(rng);
    const Integer k(rng.range(-50, 50));
    std::map<UnknownSymbol, Integer> assignment;
    for (long long i = 0; i < 6; ++i)
      assignment[UnknownSymbol::theta("t", i, i)] = Integer(rng.range(-100, 100));
    CHECK((a + b).eval(assignment) == a.eval(assignment) + b.eval(assignment));
    CHECK((k * a).eval(assignment) == k * a.eval(assignment));
  }
}

TEST_CASE("no zero coefficients are stored") {
  SplitMix64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const AffineExpr a = random_expr(rng);
    const AffineExpr diff = a - a;
    CHECK(diff.terms().empty());
    CHECK(diff.is_zero());
    for (const auto& [sym, coeff] : (a + a).terms()) CHECK(coeff != 0);
  }
}

TEST_CASE("canonical rendering") {
  CHECK(AffineExpr().render() == "0");
  CHECK(AffineExpr(x).render() == "chi[t,1]");
  CHECK((AffineExpr(x, 2) + AffineExpr(Integer(2))).render() == "2*chi[t,1] + 2");
  CHECK((AffineExpr(x, -1) + AffineExpr(Integer(3))).render() == "-chi[t,1] + 3");
  CHECK((AffineExpr(x) - AffineExpr(Integer(3))).render() == "chi[t,1] - 3");
  CHECK((AffineExpr(x) + AffineExpr(y, 6)).render() == "chi[t,1] + 6*theta[t,1,2]");
}

TEST_CASE("substitution") {
  const AffineExpr e = AffineExpr(x, 2) + AffineExpr(y) + AffineExpr(Integer(5));
  const AffineExpr sub = e.substitute({{x, AffineExpr(y, 3) + AffineExpr(Integer(-1))}});
  CHECK(sub == AffineExpr(y, 7) + AffineExpr(Integer(3)));
}
