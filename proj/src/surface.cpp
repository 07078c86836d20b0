#include "realenum/surface.hpp"

#include <stdexcept>

namespace realenum {

namespace {

std::string default_tag(long long c1d, long long dd) {
  return "c" + std::to_string(c1d) + "d" + std::to_string(dd);
}

}  // namespace

SurfaceClass::SurfaceClass(long long c1d, long long dd, std::string label)
    : SurfaceClass(c1d, dd, std::move(label), default_tag(c1d, dd)) {}

SurfaceClass::SurfaceClass(long long c1d, long long dd, std::string label, std::string tag)
    : c1d_(c1d), dd_(dd), label_(std::move(label)), tag_(std::move(tag)) {
  if (c1d_ < 1)
    throw std::invalid_argument("invalid class '" + label_ + "': c1d must be >= 1");
  const long long twice_delta = dd_ - c1d_ + 2;
  if (twice_delta < 0 || twice_delta % 2 != 0)
    throw std::invalid_argument("invalid class '" + label_ +
                                "': dd - c1d + 2 must be even and nonnegative");
}

SurfaceClass SurfaceClass::cp2(int degree) {
  if (degree < 1) throw std::invalid_argument("cp2 degree must be >= 1");
  return SurfaceClass(3LL * degree, 1LL * degree * degree,
                      "CP2 degree " + std::to_string(degree), std::to_string(degree));
}

bool SurfaceClass::chi_parity_admissible(long long r) const {
  if (r < 0 || r > point_budget())
    throw std::out_of_range("r = " + std::to_string(r) + " outside [0, " +
                            std::to_string(point_budget()) + "]");
  return (r - (c1d_ - 1)) % 2 == 0;
}

CellDomain theta_domain(const SurfaceClass& cls, const LatticeIndex& idx) {
  if (idx.sigma < 0 || 2 * idx.sigma > cls.c1d() - 1) return CellDomain::OutOfDomain;
  if (idx.s < idx.sigma || idx.s > cls.c1d() - 1 - idx.sigma) return CellDomain::OutOfDomain;
  if (idx.sigma > cls.delta()) return CellDomain::NodeBudgetZero;
  if ((idx.s - (cls.c1d() - 1 - idx.sigma)) % 2 != 0) return CellDomain::ParityZero;
  return CellDomain::Valid;
}

const char* to_string(CellDomain d) {
  switch (d) {
    case CellDomain::Valid: return "Valid";
    case CellDomain::ParityZero: return "ParityZero";
    case CellDomain::NodeBudgetZero: return "NodeBudgetZero";
    case CellDomain::OutOfDomain: return "OutOfDomain";
  }
  return "?";
}

}  // namespace realenum
