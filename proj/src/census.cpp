#include "torelli/census.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

#include "torelli/error.hpp"

namespace torelli {

std::vector<std::vector<int>> connected_normal_curves(const Surface& s, int max_weight) {
  const int ne = s.num_edges(), nt = s.num_triangles();
  // Edges in order of first appearance; each triangle is checked once its last edge is set.
  std::vector<int> order, pos(ne, -1);
  for (int t = 0; t < nt; ++t)
    for (int k = 0; k < 3; ++k) {
      int e = s.edge_of(3 * t + k);
      if (pos[e] < 0) {
        pos[e] = static_cast<int>(order.size());
        order.push_back(e);
      }
    }
  std::vector<std::vector<int>> checks(ne);
  for (int t = 0; t < nt; ++t) {
    int last = 0;
    for (int k = 0; k < 3; ++k) last = std::max(last, pos[s.edge_of(3 * t + k)]);
    checks[last].push_back(t);
  }
  std::vector<int> x(ne, 0);
  std::vector<std::vector<int>> out;
  auto ok_triangle = [&](int t) {
    int a = x[s.edge_of(3 * t)], b = x[s.edge_of(3 * t + 1)], c = x[s.edge_of(3 * t + 2)];
    return (a + b + c) % 2 == 0 && a <= b + c && b <= a + c && c <= a + b;
  };
  auto rec = [&](auto&& self, int i, int budget) -> void {
    if (i == ne) {
      bool any = false;
      for (int v : x) any = any || v > 0;
      if (!any || is_vertex_link(x)) return;
      if (trace_single(s, x).length() != std::accumulate(x.begin(), x.end(), 0)) return;
      out.push_back(x);
      return;
    }
    const int e = order[i];
    for (int v = 0; v <= budget; ++v) {
      x[e] = v;
      bool ok = true;
      for (int t : checks[i]) ok = ok && ok_triangle(t);
      if (ok) self(self, i + 1, budget - v);
    }
    x[e] = 0;
  };
  rec(rec, 0, max_weight);
  return out;
}

std::vector<CurveClass> census_where(const SurfacePtr& s, int max_weight,
                                      const std::function<bool(const TracedCurve&)>& keep) {
  require(max_weight >= 0, "census weight bound must be non-negative");
  std::vector<CurveClass> out;
  for (const auto& x : connected_normal_curves(*s, max_weight)) {
    if (s->geometry().cached(x)) {
      if (!keep || keep(trace_single(*s, x))) out.push_back(adopt_canonical(s, x));
      continue;
    }
    TracedCurve t = trace_single(*s, x);
    if (keep && !keep(t)) continue;
    auto g = s->geometry().straighten(t.exits);
    if (!g || g->coords != x) continue;
    ensure(g->simple, "straightened simple curve is not simple");
    s->geometry().store(align_to_trace(*s, std::move(*g), nullptr));
    out.push_back(adopt_canonical(s, x));
  }
  std::sort(out.begin(), out.end(), [](const CurveClass& a, const CurveClass& b) {
    int wa = a.weight(), wb = b.weight();
    return wa != wb ? wa < wb : a.coords() < b.coords();
  });
  return out;
}

namespace {

const std::vector<CurveClass>& cached_census(const SurfacePtr& s, int max_weight, bool separating) {
  static std::mutex mu;
  static std::map<std::tuple<const Surface*, int, bool>, std::vector<CurveClass>> cache;
  const auto key = std::make_tuple(s.get(), max_weight, separating);
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  std::function<bool(const TracedCurve&)> keep;
  if (separating)
    keep = [&](const TracedCurve& t) {
      auto h = homology_of_path(*s, t.exits);
      return std::all_of(h.begin(), h.end(), [](int v) { return v == 0; });
    };
  auto out = census_where(s, max_weight, keep);
  std::lock_guard<std::mutex> lk(mu);
  return cache.emplace(key, std::move(out)).first->second;
}

}  // namespace

const std::vector<CurveClass>& census(const SurfacePtr& s, int max_weight) {
  return cached_census(s, max_weight, false);
}

const std::vector<CurveClass>& separating_census(const SurfacePtr& s, int max_weight) {
  return cached_census(s, max_weight, true);
}

}  // namespace torelli
