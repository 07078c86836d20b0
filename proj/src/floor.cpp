#include "realenum/floor.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace realenum {

namespace {

int dsu_find(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

// An open edge slot during enumeration: the upper endpoint is fixed, the lower
// endpoint is still to be chosen among the remaining floors. Slots with equal
// (upper, weight) are interchangeable, so they are kept as counted groups.
struct OpenGroup {
  int upper = 0;
  int weight = 0;
  int count = 0;
};

struct EnumState {
  std::vector<OpenGroup> open;       // sorted by (upper, weight)
  std::vector<int> parent;           // DSU over floors 1..d
  std::vector<BoundedEdge> edges;
  std::vector<int> unbounded_count;  // per floor
  int open_weight = 0;
};

void add_open_group(EnumState& st, int upper, int weight) {
  auto it = std::find_if(st.open.begin(), st.open.end(), [&](const OpenGroup& g) {
    return g.upper == upper && g.weight == weight;
  });
  if (it != st.open.end()) {
    ++it->count;
  } else {
    auto pos = std::find_if(st.open.begin(), st.open.end(), [&](const OpenGroup& g) {
      return std::pair(g.upper, g.weight) > std::pair(upper, weight);
    });
    st.open.insert(pos, OpenGroup{upper, weight, 1});
  }
  st.open_weight += weight;
}

class Enumerator {
 public:
  Enumerator(int degree, std::function<void(const FloorDiagram&)> visit, int task_floor,
             std::vector<std::pair<int, EnumState>>* tasks)
      : degree_(degree), visit_(std::move(visit)), task_floor_(task_floor), tasks_(tasks) {}

  void run() {
    EnumState st;
    st.parent.resize(degree_ + 1);
    for (int v = 0; v <= degree_; ++v) st.parent[v] = v;
    st.unbounded_count.assign(degree_ + 1, 0);
    process_floor(degree_, st);
  }

  void resume(int floor, const EnumState& st) { process_floor(floor, st); }

 private:
  // Processes floor j: pick which open slots end here (at most one per
  // component, or a cycle would close), then the multiset of weights of the
  // new edges entering j from below. The divergence rule fixes the number of
  // unbounded edges at j.
  void process_floor(int j, const EnumState& st) {
    if (tasks_ && j == task_floor_) {
      tasks_->emplace_back(j, st);
      return;
    }

    // components of the processed floors, each with the open slots it owns
    std::vector<int> roots;
    std::vector<std::vector<std::size_t>> groups_of_root;
    {
      std::vector<int> parent = st.parent;
      for (int v = j + 1; v <= degree_; ++v) {
        const int r = dsu_find(parent, v);
        if (std::find(roots.begin(), roots.end(), r) == roots.end()) {
          roots.push_back(r);
          groups_of_root.emplace_back();
        }
      }
      for (std::size_t g = 0; g < st.open.size(); ++g) {
        const int r = dsu_find(parent, st.open[g].upper);
        const auto at = std::find(roots.begin(), roots.end(), r);
        groups_of_root[static_cast<std::size_t>(at - roots.begin())].push_back(g);
      }
    }

    std::vector<std::ptrdiff_t> selection(roots.size(), -1);
    select_closing(j, st, roots, groups_of_root, 0, selection);
  }

  void select_closing(int j, const EnumState& st, const std::vector<int>& roots,
                      const std::vector<std::vector<std::size_t>>& groups_of_root,
                      std::size_t comp, std::vector<std::ptrdiff_t>& selection) {
    if (comp == roots.size()) {
      apply_selection(j, st, selection);
      return;
    }
    selection[comp] = -1;
    select_closing(j, st, roots, groups_of_root, comp + 1, selection);
    for (const std::size_t g : groups_of_root[comp]) {
      selection[comp] = static_cast<std::ptrdiff_t>(g);
      select_closing(j, st, roots, groups_of_root, comp + 1, selection);
    }
    selection[comp] = -1;
  }

  void apply_selection(int j, const EnumState& st, const std::vector<std::ptrdiff_t>& selection) {
    int out_w = 0;
    for (const auto g : selection)
      if (g >= 0) out_w += st.open[static_cast<std::size_t>(g)].weight;

    const int remaining = st.open_weight - out_w;
    const int in_min = std::max(0, out_w - 1);
    const int in_max = (j - 1) - remaining;
    if (in_max < in_min) return;

    std::vector<int> parts;
    emit_partitions(in_max, in_min, in_max, parts, 0, [&](const std::vector<int>& weights) {
      EnumState child = st;
      child.open_weight = remaining;
      // close the selected slots at floor j
      for (const auto g : selection) {
        if (g < 0) continue;
        OpenGroup& grp = child.open[static_cast<std::size_t>(g)];
        child.edges.push_back(BoundedEdge{j, grp.upper, grp.weight});
        const int ra = dsu_find(child.parent, j);
        const int rb = dsu_find(child.parent, grp.upper);
        child.parent[rb] = ra;
        --grp.count;
      }
      std::erase_if(child.open, [](const OpenGroup& g) { return g.count == 0; });
      int in_total = 0;
      for (const int w : weights) {
        add_open_group(child, j, w);
        in_total += w;
      }
      child.unbounded_count[j] = 1 + in_total - out_w;

      if (j == 1) {
        finalize(child);
        return;
      }
      // every component must keep a way down, or it can never join the tree
      std::vector<int> parent = child.parent;
      std::set<int> open_roots;
      for (const auto& g : child.open) open_roots.insert(dsu_find(parent, g.upper));
      for (int v = j; v <= degree_; ++v)
        if (!open_roots.contains(dsu_find(parent, v))) return;
      process_floor(j - 1, child);
    });
  }

  // non-increasing part lists with sum in [lo, hi]
  template <typename F>
  void emit_partitions(int max_part, int lo, int hi, std::vector<int>& parts, int sum,
                       const F& yield) {
    if (sum >= lo) yield(parts);
    for (int p = std::min(max_part, hi - sum); p >= 1; --p) {
      parts.push_back(p);
      emit_partitions(p, lo, hi, parts, sum + p, yield);
      parts.pop_back();
    }
  }

  void finalize(EnumState& st) {
    std::vector<int> parent = st.parent;
    const int root = dsu_find(parent, 1);
    for (int v = 2; v <= degree_; ++v)
      if (dsu_find(parent, v) != root) return;

    FloorDiagram diagram;
    diagram.degree = degree_;
    diagram.bounded = st.edges;
    std::sort(diagram.bounded.begin(), diagram.bounded.end());
    for (int v = 1; v <= degree_; ++v)
      diagram.unbounded.insert(diagram.unbounded.end(),
                               static_cast<std::size_t>(st.unbounded_count[v]), v);
    diagram.validate();
    visit_(diagram);
  }

  int degree_;
  std::function<void(const FloorDiagram&)> visit_;
  int task_floor_;
  std::vector<std::pair<int, EnumState>>* tasks_;
};

struct Fold {
  Integer n_complex = 0;
  Integer w_real = 0;
  std::vector<CensusRow> census;
};

void fold_diagram(Fold& fold, const FloorDiagram& diagram, bool keep_census) {
  const Integer nu = count_markings(diagram);
  const Multiplicities mu = multiplicities(diagram);
  fold.n_complex += nu * mu.mu_complex;
  fold.w_real += nu * Integer(mu.mu_real);
  if (keep_census) fold.census.push_back(CensusRow{diagram, nu, mu.mu_complex, mu.mu_real});
}

void check_degree(int degree) {
  if (degree < 1 || degree > kMaxDegree)
    throw std::out_of_range("degree " + std::to_string(degree) + " outside [1, " +
                            std::to_string(kMaxDegree) + "]");
}

}  // namespace

void FloorDiagram::validate() const {
  if (degree < 1) throw std::invalid_argument("diagram: degree must be >= 1");
  if (static_cast<int>(bounded.size()) != degree - 1)
    throw std::invalid_argument("diagram: a tree on " + std::to_string(degree) +
                                " floors needs " + std::to_string(degree - 1) + " bounded edges");
  if (static_cast<int>(unbounded.size()) != degree)
    throw std::invalid_argument("diagram: expected exactly degree unbounded edges");

  std::vector<int> parent(static_cast<std::size_t>(degree) + 1);
  for (int v = 0; v <= degree; ++v) parent[static_cast<std::size_t>(v)] = v;
  std::vector<int> out_w(static_cast<std::size_t>(degree) + 1, 0);
  std::vector<int> in_w(static_cast<std::size_t>(degree) + 1, 0);
  for (const auto& e : bounded) {
    if (e.lower < 1 || e.upper > degree || e.lower >= e.upper)
      throw std::invalid_argument("diagram: bounded edges must go to a strictly higher floor");
    if (e.weight < 1) throw std::invalid_argument("diagram: edge weights must be >= 1");
    const int ra = dsu_find(parent, e.lower);
    const int rb = dsu_find(parent, e.upper);
    if (ra == rb) throw std::invalid_argument("diagram: bounded edges close a cycle");
    parent[static_cast<std::size_t>(rb)] = ra;
    out_w[static_cast<std::size_t>(e.lower)] += e.weight;
    in_w[static_cast<std::size_t>(e.upper)] += e.weight;
  }
  for (const int f : unbounded) {
    if (f < 1 || f > degree) throw std::invalid_argument("diagram: unbounded edge off the floors");
    out_w[static_cast<std::size_t>(f)] += 1;  // unbounded edges have weight one
  }
  for (int v = 1; v <= degree; ++v)
    if (out_w[static_cast<std::size_t>(v)] - in_w[static_cast<std::size_t>(v)] != 1)
      throw std::invalid_argument("diagram: floor " + std::to_string(v) +
                                  " violates the divergence rule");
}

std::string FloorDiagram::canonical_key() const {
  std::ostringstream os;
  for (const auto& e : bounded) os << "(" << e.lower << ">" << e.upper << ":" << e.weight << ")";
  os << "[";
  for (std::size_t i = 0; i < unbounded.size(); ++i) {
    if (i) os << ",";
    os << unbounded[i];
  }
  os << "]";
  return os.str();
}

Multiplicities multiplicities(const FloorDiagram& diagram) {
  Multiplicities mu{Integer(1), 1};
  long long half_turns = 0;
  for (const auto& e : diagram.bounded) {
    mu.mu_complex *= Integer(e.weight) * Integer(e.weight);
    if (e.weight % 2 == 0) mu.mu_real = 0;
    half_turns += (e.weight - 1) / 2;
  }
  if (mu.mu_real != 0) mu.mu_real = half_turns % 2 == 0 ? 1 : -1;
  return mu;
}

Integer automorphism_order(const FloorDiagram& diagram) {
  Integer order = 1;
  std::map<BoundedEdge, long long> parallel;
  for (const auto& e : diagram.bounded) ++parallel[e];
  for (const auto& [edge, mult] : parallel) order *= factorial(mult);
  std::map<int, long long> unb;
  for (const int f : diagram.unbounded) ++unb[f];
  for (const auto& [floor, mult] : unb) order *= factorial(mult);
  return order;
}

Integer count_markings(const FloorDiagram& diagram) {
  const int d = diagram.degree;
  // Each non-floor element lives in a gap between consecutive floors: a
  // bounded edge in one of the gaps lower..upper-1, an unbounded edge in one
  // of floor..d. Elements sharing a gap are mutually unordered, so the raw
  // count is sum over gap assignments of the product of per-gap factorials.
  std::vector<std::vector<int>> activate(static_cast<std::size_t>(d) + 1,
                                         std::vector<int>(static_cast<std::size_t>(d) + 1, 0));
  for (const auto& e : diagram.bounded)
    ++activate[static_cast<std::size_t>(e.lower)][static_cast<std::size_t>(e.upper - 1)];
  for (const int f : diagram.unbounded)
    ++activate[static_cast<std::size_t>(f)][static_cast<std::size_t>(d)];

  std::map<std::pair<int, std::vector<int>>, Integer> memo;

  // counts[h] = active elements whose latest allowed gap is h
  auto rec = [&](auto&& self, int gap, std::vector<int> counts) -> Integer {
    for (int h = gap; h <= d; ++h)
      counts[static_cast<std::size_t>(h)] += activate[static_cast<std::size_t>(gap)]
                                                     [static_cast<std::size_t>(h)];
    if (gap == d) {
      long long total = 0;
      for (const int c : counts) total += c;
      return factorial(total);
    }
    const auto key = std::make_pair(gap, counts);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const long long forced = counts[static_cast<std::size_t>(gap)];
    std::vector<int> deadlines;
    for (int h = gap + 1; h <= d; ++h)
      if (counts[static_cast<std::size_t>(h)] > 0) deadlines.push_back(h);

    Integer total = 0;
    std::vector<int> take(deadlines.size(), 0);
    auto choose = [&](auto&& inner, std::size_t i, Integer picks, long long placed) -> void {
      if (i == deadlines.size()) {
        std::vector<int> child = counts;
        child[static_cast<std::size_t>(gap)] = 0;
        for (std::size_t k = 0; k < deadlines.size(); ++k)
          child[static_cast<std::size_t>(deadlines[k])] -= take[k];
        total += picks * factorial(forced + placed) * self(self, gap + 1, std::move(child));
        return;
      }
      const int avail = counts[static_cast<std::size_t>(deadlines[i])];
      for (int k = 0; k <= avail; ++k) {
        take[i] = k;
        inner(inner, i + 1, picks * binomial(avail, k), placed + k);
      }
      take[i] = 0;
    };
    choose(choose, 0, Integer(1), 0);
    memo.emplace(key, total);
    return total;
  };

  const Integer raw = rec(rec, 1, std::vector<int>(static_cast<std::size_t>(d) + 1, 0));
  const Integer aut = automorphism_order(diagram);
  Integer q, r;
  divide_qr(raw, aut, q, r);
  if (r != 0) throw std::logic_error("marking count not divisible by the automorphism order");
  return q;
}

void for_each_diagram(int degree, const std::function<void(const FloorDiagram&)>& visit) {
  check_degree(degree);
  Enumerator e(degree, visit, /*task_floor=*/0, /*tasks=*/nullptr);
  e.run();
}

std::vector<FloorDiagram> enumerate_diagrams(int degree) {
  std::vector<FloorDiagram> out;
  for_each_diagram(degree, [&](const FloorDiagram& d) { out.push_back(d); });
  std::sort(out.begin(), out.end(), [](const FloorDiagram& a, const FloorDiagram& b) {
    return a.canonical_key() < b.canonical_key();
  });
  return out;
}

DiagramCount count_degree(int degree, const CountOptions& opts) {
  check_degree(degree);
  const bool keep_census = opts.census.value_or(degree <= kCensusDegreeCap);
  const int jobs = std::max(1, opts.jobs);

  Fold total;
  if (jobs == 1 || degree <= 2) {
    for_each_diagram(degree, [&](const FloorDiagram& d) { fold_diagram(total, d, keep_census); });
  } else {
    // partition: floors degree and degree-1 are expanded up front, the
    // suspended states below them are the tasks
    std::vector<std::pair<int, EnumState>> tasks;
    {
      Enumerator splitter(degree, [](const FloorDiagram&) {}, degree - 2, &tasks);
      splitter.run();
    }
    std::vector<Fold> partial(static_cast<std::size_t>(jobs));
    std::atomic<std::size_t> cursor{0};
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        Fold& fold = partial[static_cast<std::size_t>(w)];
        Enumerator runner(
            degree, [&](const FloorDiagram& d) { fold_diagram(fold, d, keep_census); },
            /*task_floor=*/0, nullptr);
        for (;;) {
          const std::size_t i = cursor.fetch_add(1);
          if (i >= tasks.size()) break;
          runner.resume(tasks[i].first, tasks[i].second);
        }
      });
    }
    for (auto& t : workers) t.join();
    for (const auto& fold : partial) {
      total.n_complex += fold.n_complex;
      total.w_real += fold.w_real;
      total.census.insert(total.census.end(), fold.census.begin(), fold.census.end());
    }
  }

  std::sort(total.census.begin(), total.census.end(), [](const CensusRow& a, const CensusRow& b) {
    return a.diagram.canonical_key() < b.diagram.canonical_key();
  });
  return DiagramCount{degree, std::move(total.n_complex), std::move(total.w_real),
                      std::move(total.census)};
}

std::string census_table(const DiagramCount& count) {
  std::ostringstream os;
  for (const auto& row : count.census) {
    os << row.diagram.canonical_key() << " nu=" << row.nu << " muC=" << row.mu_complex
       << " muR=" << row.mu_real << "\n";
  }
  return os.str();
}

}  // namespace realenum
