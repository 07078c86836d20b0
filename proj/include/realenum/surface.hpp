#pragma once

#include <compare>
#include <string>

namespace realenum {

// A real rational surface together with a homology class, reduced to the two
// pairing integers every formula in this toolkit consumes: c1(X).d and d.d.
// The ambient manifold is never modeled geometrically.
class SurfaceClass {
 public:
  // Throws std::invalid_argument unless c1d >= 1 and dd - c1d + 2 is an even
  // nonnegative integer (so that delta() is a nonnegative integer).
  SurfaceClass(long long c1d, long long dd, std::string label);
  SurfaceClass(long long c1d, long long dd, std::string label, std::string tag);

  // The plane with its standard real structure; degree d gives (3d, d^2).
  static SurfaceClass cp2(int degree);

  long long c1d() const { return c1d_; }
  long long dd() const { return dd_; }
  const std::string& label() const { return label_; }

  // Short token embedded in unknown names, e.g. "4" for plane degree 4.
  const std::string& tag() const { return tag_; }

  // Node count of an irreducible rational nodal curve in the class
  // (adjunction): (d.d - c1(X).d + 2) / 2.
  long long delta() const { return (dd_ - c1d_ + 2) / 2; }

  // Number of point constraints, c1(X).d - 1.
  long long point_budget() const { return c1d_ - 1; }

  // chi_r is supported only on r with the parity of c1(X).d - 1.
  // Throws std::out_of_range unless 0 <= r <= point_budget().
  bool chi_parity_admissible(long long r) const;

  bool operator==(const SurfaceClass& o) const {
    return c1d_ == o.c1d_ && dd_ == o.dd_ && label_ == o.label_;
  }

 private:
  long long c1d_;
  long long dd_;
  std::string label_;
  std::string tag_;
};

// Cell address in the triangular array: sigma prescribed nodes, s real points.
struct LatticeIndex {
  long long sigma = 0;
  long long s = 0;
  auto operator<=>(const LatticeIndex&) const = default;
};

enum class CellDomain {
  Valid,
  ParityZero,      // s has the wrong parity (conjugate points come in pairs)
  NodeBudgetZero,  // sigma exceeds delta: no curve in the class has that many nodes
  OutOfDomain,     // index bounds fail: 0 <= 2*sigma <= c1d-1, sigma <= s <= c1d-1-sigma
};

// Total classification of a cell; never throws.
CellDomain theta_domain(const SurfaceClass& cls, const LatticeIndex& idx);

const char* to_string(CellDomain d);

}  // namespace realenum
