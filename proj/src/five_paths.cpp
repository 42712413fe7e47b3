#include "simembed/mapped.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <random>
#include <thread>

#include "simembed/error.hpp"

namespace simembed {

namespace {

constexpr int kVertices = 5;

bool has_edge(const PathOrder& p, const Edge& e) {
  for (std::size_t i = 1; i < p.order.size(); ++i) {
    const Vertex a = p.order[i - 1], b = p.order[i];
    if ((a == e.u && b == e.v) || (a == e.v && b == e.u)) return true;
  }
  return false;
}

void require_five_vertex_path(const PathOrder& p) {
  auto sorted = p.order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::vector<Vertex>{0, 1, 2, 3, 4}) {
    throw InputMismatchError("five-vertex paths must each visit vertices 1..5 exactly once");
  }
}

// A pair of path edges whose four endpoints are all placed once `depth` is.
struct PendingCheck {
  Edge a;
  Edge b;
};

struct Plan {
  std::array<std::vector<PendingCheck>, kVertices> at_depth;
};

Plan make_plan(const std::vector<PathOrder>& paths) {
  Plan plan;
  for (const auto& p : paths) {
    const auto edges = path_edges(p);
    for (std::size_t i = 0; i < edges.size(); ++i)
      for (std::size_t j = i + 1; j < edges.size(); ++j) {
        const Edge a = edges[i], b = edges[j];
        if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) continue;
        const int last = std::max({a.u, a.v, b.u, b.v});
        plan.at_depth[last].push_back({a, b});
      }
  }
  return plan;
}

using Placement = std::array<GridPoint, kVertices>;

// Vertex `depth` was just placed: reject collinearity and completed conflicts.
bool extend_ok(const Placement& pl, int depth, const Plan& plan) {
  for (int i = 0; i < depth; ++i)
    for (int j = i + 1; j < depth; ++j)
      if (orient(pl[i], pl[j], pl[depth]) == 0) return false;
  for (const auto& c : plan.at_depth[depth]) {
    if (segments_conflict({pl[c.a.u], pl[c.a.v]}, {pl[c.b.u], pl[c.b.v]})) return false;
  }
  return true;
}

struct SliceSearch {
  const std::vector<GridPoint>& grid;
  const Plan& plan;
  Placement pl{};
  std::vector<char> used;
  std::uint64_t nodes = 0;

  bool descend(int depth) {
    if (depth == kVertices) return true;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      if (used[i]) continue;
      pl[depth] = grid[i];
      ++nodes;
      if (!extend_ok(pl, depth, plan)) continue;
      used[i] = 1;
      const bool found = descend(depth + 1);
      used[i] = 0;
      if (found) return true;
    }
    return false;
  }
};

bool grid_has_general_position_five(const std::vector<GridPoint>& grid) {
  std::array<std::size_t, kVertices> pick{};
  auto rec = [&](auto&& self, int depth, std::size_t from) -> bool {
    if (depth == kVertices) return true;
    for (std::size_t i = from; i < grid.size(); ++i) {
      bool ok = true;
      for (int a = 0; a < depth && ok; ++a)
        for (int b = a + 1; b < depth && ok; ++b) ok = orient(grid[pick[a]], grid[pick[b]], grid[i]) != 0;
      if (!ok) continue;
      pick[depth] = i;
      if (self(self, depth + 1, i + 1)) return true;
    }
    return false;
  };
  return rec(rec, 0, 0);
}

}  // namespace

std::string to_string(const EdgePair& pair) {
  auto d = [](Vertex v) { return char('1' + v); };
  return std::string{d(pair.a.u), d(pair.a.v), '-', d(pair.b.u), d(pair.b.v)};
}

std::array<EdgePair, 15> k5_disjoint_pairs() {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < kVertices; ++u)
    for (Vertex v = u + 1; v < kVertices; ++v) edges.push_back({u, v});
  std::array<EdgePair, 15> out{};
  std::size_t k = 0;
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const Edge a = edges[i], b = edges[j];
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) continue;
      out[k++] = {a, b};
    }
  return out;
}

bool PairCoverage::all_covered() const { return covered_count() == 15; }

int PairCoverage::covered_count() const {
  return static_cast<int>(std::count_if(covered_by.begin(), covered_by.end(), [](const auto& v) { return !v.empty(); }));
}

std::vector<int> PairCoverage::pairs_of(int path) const {
  std::vector<int> out;
  for (int i = 0; i < 15; ++i)
    if (std::find(covered_by[i].begin(), covered_by[i].end(), path) != covered_by[i].end()) out.push_back(i);
  return out;
}

PairCoverage five_path_pair_coverage(const std::vector<PathOrder>& paths) {
  for (const auto& p : paths) require_five_vertex_path(p);
  PairCoverage cov;
  cov.pairs = k5_disjoint_pairs();
  for (std::size_t i = 0; i < cov.pairs.size(); ++i)
    for (std::size_t p = 0; p < paths.size(); ++p)
      if (has_edge(paths[p], cov.pairs[i].a) && has_edge(paths[p], cov.pairs[i].b)) {
        cov.covered_by[i].push_back(static_cast<int>(p));
      }
  return cov;
}

PathOrder path_from_digits(const std::string& digits) {
  PathOrder p;
  for (char ch : digits) {
    if (ch < '1' || ch > '9') throw InputMismatchError("path digits must be 1-9, got '" + digits + "'");
    p.order.push_back(ch - '1');
  }
  return p;
}

std::vector<PathOrder> standard_five_paths() {
  std::vector<PathOrder> out;
  for (const char* d : {"12345", "13542", "25134", "32415", "35214"}) out.push_back(path_from_digits(d));
  return out;
}

FivePointVerdict exhaustive_five_point_check(const std::vector<PathOrder>& paths, const FivePointSearch& search) {
  if (search.grid_width < 1 || search.grid_height < 1) throw InputMismatchError("grid must be at least 1x1");
  for (const auto& p : paths) require_five_vertex_path(p);

  std::vector<GridPoint> grid;
  for (Coord x = 0; x < search.grid_width; ++x)
    for (Coord y = 0; y < search.grid_height; ++y) grid.push_back({x, y});

  const Plan plan = make_plan(paths);
  FivePointVerdict verdict;
  verdict.general_position_exists = grid_has_general_position_five(grid);
  if (!verdict.general_position_exists) return verdict;

  const bool exhaustive = search.grid_width <= kExhaustiveGridLimit && search.grid_height <= kExhaustiveGridLimit;
  if (!exhaustive) {
    if (search.samples == 0) {
      throw BudgetExceededError("grids beyond " + std::to_string(kExhaustiveGridLimit) +
                                " need a sample count for the randomized check");
    }
    verdict.exhaustive = false;
    std::mt19937_64 rng(search.seed);
    std::uniform_int_distribution<std::size_t> pick(0, grid.size() - 1);
    for (std::uint64_t s = 0; s < search.samples; ++s) {
      Placement pl{};
      std::array<std::size_t, kVertices> idx{};
      for (int v = 0; v < kVertices; ++v) {
        do idx[v] = pick(rng);
        while (std::find(idx.begin(), idx.begin() + v, idx[v]) != idx.begin() + v);
        pl[v] = grid[idx[v]];
      }
      ++verdict.nodes;
      bool ok = true;
      for (int d = 0; d < kVertices && ok; ++d) ok = extend_ok(pl, d, plan);
      if (ok) {
        verdict.counterexample = pl;
        break;
      }
    }
    return verdict;
  }

  // Slices = choice of point for vertex 1; the lowest slice with a
  // counterexample wins, so the answer does not depend on scheduling.
  const std::size_t slices = grid.size();
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
  std::atomic<std::uint64_t> nodes{0};
  std::mutex mu;
  std::vector<std::optional<Placement>> found(slices);

  auto worker = [&] {
    SliceSearch s{grid, plan, {}, std::vector<char>(grid.size(), 0)};
    for (std::size_t slice = next++; slice < slices; slice = next++) {
      if (slice > best.load()) continue;
      s.pl[0] = grid[slice];
      s.used[slice] = 1;
      ++s.nodes;
      const bool hit = extend_ok(s.pl, 0, plan) && s.descend(1);
      s.used[slice] = 0;
      if (hit) {
        std::lock_guard lock(mu);
        found[slice] = s.pl;
        std::size_t cur = best.load();
        while (slice < cur && !best.compare_exchange_weak(cur, slice)) {
        }
      }
    }
    nodes += s.nodes;
  };

  int threads = search.threads > 0 ? search.threads : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(1, threads);
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  verdict.nodes = nodes.load();
  if (best.load() < slices) verdict.counterexample = found[best.load()];
  return verdict;
}

}  // namespace simembed
