#include "realenum/wallsim.hpp"

#include <sstream>

#include "realenum/rng.hpp"

namespace realenum {

namespace {

long long sign_of_mass(long long mass) { return mass % 2 == 0 ? 1 : -1; }

long long node_sign(MarkedNode n) { return n == MarkedNode::NonIsolated ? 1 : -1; }

MarkedNode toggled(MarkedNode n) {
  return n == MarkedNode::Isolated ? MarkedNode::NonIsolated : MarkedNode::Isolated;
}

long long signed_sum(const std::vector<long long>& masses) {
  long long total = 0;
  for (const long long m : masses) total += sign_of_mass(m);
  return total;
}

}  // namespace

void CurveWorld::add(const CurveRecord& r, long long n) {
  if (n <= 0) return;
  if (r.mass < 0 || r.mass > cls_.delta())
    throw std::invalid_argument("record mass " + std::to_string(r.mass) + " outside [0, " +
                                std::to_string(cls_.delta()) + "]");
  records_[r] += n;
}

void CurveWorld::remove(const CurveRecord& r, long long n) {
  if (n <= 0) return;
  auto it = records_.find(r);
  if (it == records_.end() || it->second < n)
    throw IllegalMoveError("record to remove is not present");
  it->second -= n;
  if (it->second == 0) records_.erase(it);
}

long long CurveWorld::count(const CurveRecord& r) const {
  auto it = records_.find(r);
  return it == records_.end() ? 0 : it->second;
}

long long CurveWorld::size() const {
  long long total = 0;
  for (const auto& [record, n] : records_) total += n;
  return total;
}

bool CurveWorld::fully_marked() const {
  for (const auto& [record, n] : records_)
    if (record.marked == MarkedNode::None) return false;
  return true;
}

long long chi_of(const CurveWorld& w) {
  long long total = 0;
  for (const auto& [record, n] : w.records()) total += n * sign_of_mass(record.mass);
  return total;
}

long long theta_of(const CurveWorld& w) {
  long long total = 0;
  for (const auto& [record, n] : w.records()) {
    if (record.marked == MarkedNode::None)
      throw UnmarkedRecordError("theta needs every record to carry a marked node");
    total += n * sign_of_mass(record.mass) * node_sign(record.marked);
  }
  return total;
}

bool move_legal(const CurveWorld& w, const WallMove& m) {
  const long long delta = w.cls().delta();
  return std::visit(
      [&](const auto& move) -> bool {
        using T = std::decay_t<decltype(move)>;
        if constexpr (std::is_same_v<T, CuspPairCreate>) {
          return move.mass >= 0 && move.mass + 1 <= delta;
        } else if constexpr (std::is_same_v<T, CuspPairAnnihilate>) {
          return w.count({move.mass, move.marked}) >= 1 &&
                 w.count({move.mass + 1, move.marked}) >= 1;
        } else if constexpr (std::is_same_v<T, TacnodeOrTriple>) {
          return true;
        } else if constexpr (std::is_same_v<T, ReducibleWall>) {
          return move.real_count >= 0 && move.real_count <= w.size();
        } else if constexpr (std::is_same_v<T, MarkedCuspFlip>) {
          if (move.record.marked == MarkedNode::None) return false;
          if (w.count(move.record) < 1) return false;
          if (move.mass_delta == 0) return true;
          if (move.mass_delta != 1 && move.mass_delta != -1) return false;
          const long long mass = move.record.mass + move.mass_delta;
          return mass >= 0 && mass <= delta;
        } else {
          static_assert(std::is_same_v<T, MarkedTacnode>);
          return true;
        }
      },
      m);
}

CurveWorld apply_move(const CurveWorld& w, const WallMove& m) {
  if (!move_legal(w, m)) throw IllegalMoveError("illegal move: " + move_name(m));
  CurveWorld next = w;
  std::visit(
      [&](const auto& move) {
        using T = std::decay_t<decltype(move)>;
        if constexpr (std::is_same_v<T, CuspPairCreate>) {
          next.add({move.mass, move.marked});
          next.add({move.mass + 1, move.marked});
        } else if constexpr (std::is_same_v<T, CuspPairAnnihilate>) {
          next.remove({move.mass, move.marked});
          next.remove({move.mass + 1, move.marked});
        } else if constexpr (std::is_same_v<T, MarkedCuspFlip>) {
          if (move.mass_delta != 0) {
            next.remove(move.record);
            next.add({move.record.mass + move.mass_delta, toggled(move.record.marked)});
          }
        }
        // TacnodeOrTriple, ReducibleWall and MarkedTacnode carry the multiset
        // through unchanged.
      },
      m);
  return next;
}

std::string move_name(const WallMove& m) {
  return std::visit(
      [](const auto& move) -> std::string {
        using T = std::decay_t<decltype(move)>;
        if constexpr (std::is_same_v<T, CuspPairCreate>) {
          return "cusp_pair_create(m=" + std::to_string(move.mass) + ")";
        } else if constexpr (std::is_same_v<T, CuspPairAnnihilate>) {
          return "cusp_pair_annihilate(m=" + std::to_string(move.mass) + ")";
        } else if constexpr (std::is_same_v<T, TacnodeOrTriple>) {
          return "tacnode_or_triple";
        } else if constexpr (std::is_same_v<T, ReducibleWall>) {
          return "reducible_wall(R=" + std::to_string(move.real_count) + ")";
        } else if constexpr (std::is_same_v<T, MarkedCuspFlip>) {
          return "marked_cusp_flip(m=" + std::to_string(move.record.mass) +
                 ",dm=" + std::to_string(move.mass_delta) + ")";
        } else {
          static_assert(std::is_same_v<T, MarkedTacnode>);
          return "marked_tacnode";
        }
      },
      m);
}

namespace {

MarkedNode random_marked(SplitMix64& rng) {
  return rng.below(2) == 0 ? MarkedNode::Isolated : MarkedNode::NonIsolated;
}

CurveRecord random_record(SplitMix64& rng, const CurveWorld& w) {
  long long pick = static_cast<long long>(rng.below(static_cast<std::uint64_t>(w.size())));
  for (const auto& [record, n] : w.records()) {
    if (pick < n) return record;
    pick -= n;
  }
  return w.records().begin()->first;  // unreachable for nonempty worlds
}

WallMove propose_move(SplitMix64& rng, const CurveWorld& w, bool marked) {
  const long long delta = w.cls().delta();
  for (int attempt = 0; attempt < 64; ++attempt) {
    WallMove candidate;
    switch (rng.below(6)) {
      case 0:
        candidate = CuspPairCreate{delta > 0 ? rng.range(0, delta - 1) : 0,
                                   marked ? random_marked(rng) : MarkedNode::None};
        break;
      case 1:
        candidate = CuspPairAnnihilate{delta > 0 ? rng.range(0, delta - 1) : 0,
                                       marked ? random_marked(rng) : MarkedNode::None};
        break;
      case 2: candidate = TacnodeOrTriple{}; break;
      case 3:
        candidate = ReducibleWall{static_cast<long long>(
            rng.below(static_cast<std::uint64_t>(w.size()) + 1))};
        break;
      case 4: {
        if (!marked || w.size() == 0) continue;
        candidate = MarkedCuspFlip{random_record(rng, w), static_cast<int>(rng.range(-1, 1))};
        break;
      }
      default: candidate = MarkedTacnode{}; break;
    }
    if (move_legal(w, candidate)) return candidate;
  }
  return TacnodeOrTriple{};
}

}  // namespace

std::vector<TraceEntry> random_walk(std::uint64_t seed, long long steps, const SurfaceClass& cls,
                                    bool marked) {
  SplitMix64 rng(seed);
  CurveWorld world(cls);
  const long long initial = static_cast<long long>(rng.below(6));
  for (long long i = 0; i < initial; ++i) {
    const long long mass = static_cast<long long>(
        rng.below(static_cast<std::uint64_t>(cls.delta()) + 1));
    world.add({mass, marked ? random_marked(rng) : MarkedNode::None});
  }

  std::vector<TraceEntry> trace;
  auto record = [&](long long step, const std::string& name) {
    TraceEntry entry{step, name, chi_of(world), std::nullopt};
    if (marked) entry.theta = theta_of(world);
    trace.push_back(std::move(entry));
  };
  record(0, "init");
  for (long long step = 1; step <= steps; ++step) {
    const WallMove move = propose_move(rng, world, marked);
    world = apply_move(world, move);
    record(step, move_name(move));
  }
  return trace;
}

std::string render_trace(const std::vector<TraceEntry>& trace) {
  std::ostringstream os;
  for (const auto& entry : trace) {
    os << entry.step << "\t" << entry.move << "\tchi=" << entry.chi;
    if (entry.theta) os << "\ttheta=" << *entry.theta;
    os << "\n";
  }
  return os.str();
}

CollisionIdentity collision_identity(const std::vector<long long>& tangent_masses,
                                     const std::vector<long long>& node_plus_masses,
                                     const std::vector<long long>& node_minus_masses) {
  const long long tangent = signed_sum(tangent_masses);
  const long long plus = signed_sum(node_plus_masses);
  const long long minus = signed_sum(node_minus_masses);
  CollisionIdentity id{tangent + 2 * plus, tangent + 2 * minus, 0};
  id.theta_diff = (id.chi_plus - id.chi_minus) / 2;
  if (id.theta_diff != plus - minus)
    throw std::logic_error("collision identity failed to close");
  return id;
}

}  // namespace realenum
