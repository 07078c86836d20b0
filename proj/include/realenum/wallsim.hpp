#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "realenum/surface.hpp"

namespace realenum {

enum class MarkedNode { None, Isolated, NonIsolated };

// One real curve in a fiber: its mass (number of isolated real nodes) and,
// when a node is marked, the marked node's type.
struct CurveRecord {
  long long mass = 0;
  MarkedNode marked = MarkedNode::None;
  auto operator<=>(const CurveRecord&) const = default;
};

class IllegalMoveError : public std::runtime_error {
 public:
  explicit IllegalMoveError(const std::string& what) : std::runtime_error(what) {}
};

class UnmarkedRecordError : public std::runtime_error {
 public:
  explicit UnmarkedRecordError(const std::string& what) : std::runtime_error(what) {}
};

// Multiset of curve records over a fixed class: the discrete stand-in for the
// set of real curves through a configuration at one parameter value.
class CurveWorld {
 public:
  explicit CurveWorld(SurfaceClass cls) : cls_(std::move(cls)) {}

  const SurfaceClass& cls() const { return cls_; }
  const std::map<CurveRecord, long long>& records() const { return records_; }

  // Throws std::invalid_argument unless 0 <= mass <= delta.
  void add(const CurveRecord& r, long long n = 1);
  // Throws IllegalMoveError when fewer than n copies are present.
  void remove(const CurveRecord& r, long long n = 1);

  long long count(const CurveRecord& r) const;
  long long size() const;
  bool fully_marked() const;

  bool operator==(const CurveWorld& o) const {
    return cls_ == o.cls_ && records_ == o.records_;
  }

 private:
  SurfaceClass cls_;
  std::map<CurveRecord, long long> records_;
};

// sum of (-1)^mass over the multiset
long long chi_of(const CurveWorld& w);

// sum of (-1)^mass * (+1 non-isolated / -1 isolated); throws
// UnmarkedRecordError if any record is unmarked.
long long theta_of(const CurveWorld& w);

// Wall-crossing moves. Creation/annihilation swaps a cancelling mass pair
// (m, m+1) in and out; the tacnode, triple-point and reducible walls carry the
// multiset through unchanged (each smoothed real node joins two real branches,
// so masses persist); a marked cusp flip either does nothing or toggles the
// marked node type together with the mass parity.
struct CuspPairCreate {
  long long mass = 0;
  MarkedNode marked = MarkedNode::None;
};
struct CuspPairAnnihilate {
  long long mass = 0;
  MarkedNode marked = MarkedNode::None;
};
struct TacnodeOrTriple {};
struct ReducibleWall {
  long long real_count = 0;
};
struct MarkedCuspFlip {
  CurveRecord record;
  int mass_delta = 0;  // -1, 0, +1
};
struct MarkedTacnode {};

using WallMove = std::variant<CuspPairCreate, CuspPairAnnihilate, TacnodeOrTriple, ReducibleWall,
                              MarkedCuspFlip, MarkedTacnode>;

bool move_legal(const CurveWorld& w, const WallMove& m);

// Throws IllegalMoveError when the move is not legal on this world.
CurveWorld apply_move(const CurveWorld& w, const WallMove& m);

std::string move_name(const WallMove& m);

struct TraceEntry {
  long long step = 0;
  std::string move;
  long long chi = 0;
  std::optional<long long> theta;
};

// Deterministic pseudo-random legal move sequence (splitmix64 over the seed);
// entry 0 records the initial world. Marked walks carry theta alongside chi.
std::vector<TraceEntry> random_walk(std::uint64_t seed, long long steps, const SurfaceClass& cls,
                                    bool marked);

// "step<TAB>move<TAB>chi=..<TAB>theta=.." per line
std::string render_trace(const std::vector<TraceEntry>& trace);

// The two signed counts on either side of a tangency collision, from the mass
// lists of the tangent curves and of the nodal curves with non-isolated (plus)
// and isolated (minus) marked node:
//
//   chi_plus  = chi~ + 2 * sum (-1)^m over node_plus
//   chi_minus = chi~ + 2 * sum (-1)^m over node_minus
//   theta_diff = (chi_plus - chi_minus) / 2
struct CollisionIdentity {
  long long chi_plus = 0;
  long long chi_minus = 0;
  long long theta_diff = 0;
};

CollisionIdentity collision_identity(const std::vector<long long>& tangent_masses,
                                     const std::vector<long long>& node_plus_masses,
                                     const std::vector<long long>& node_minus_masses);

}  // namespace realenum
