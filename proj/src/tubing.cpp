#include "torelli/tubing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "torelli/error.hpp"

namespace torelli {

Diagram::Input reversed_input(const Surface& s, const Diagram::Input& in) {
  Diagram::Input r;
  r.exits = reverse_path(s, in.exits);
  r.keys.assign(in.keys.rbegin(), in.keys.rend());
  return r;
}

Diagram::Input geodesic_input(const OrientedCurve& c) {
  auto g = geodesic(c.curve);
  Diagram::Input in{g->half_edges, g->params};
  return c.direction > 0 ? in : reversed_input(c.curve.surface(), in);
}

EdgePath rotate_loop(const Surface& s, const EdgePath& loop, int start, int direction) {
  const int n = static_cast<int>(loop.size());
  EdgePath out;
  out.reserve(n);
  if (direction > 0) {
    for (int k = 0; k < n; ++k) out.push_back(loop[(start + k) % n]);
  } else {
    for (int k = 1; k <= n; ++k) out.push_back(s.partner(loop[((start - k) % n + n) % n]));
  }
  return out;
}

namespace {

int step_on(const Diagram& d, int x, int c) {
  const auto& X = d.crossings()[x];
  return X.curve[0] == c ? X.step[0] : X.step[1];
}

// Exit indices of curve c from crossing x to crossing y.
std::vector<int> arc_indices(const Diagram& d, int c, int x, int y) {
  const int n = d.length(c);
  const int cnt = static_cast<int>(d.arc_path(c, x, y).size());
  std::vector<int> idx;
  for (int k = 0; k < cnt; ++k) idx.push_back((step_on(d, x, c) + k) % n);
  return idx;
}

// Crossings of c with `other` in order along c.
std::vector<int> crossings_with(const Diagram& d, int c, int other) {
  std::vector<int> out;
  for (int x : d.along(c)) {
    const auto& X = d.crossings()[x];
    if ((X.curve[0] == c && X.curve[1] == other) || (X.curve[1] == c && X.curve[0] == other)) out.push_back(x);
  }
  return out;
}

// +1 when curve `by` crosses curve `c` from right to left at crossing x.
int crossing_sign(const Diagram& d, int x, int c) {
  const auto& X = d.crossings()[x];
  return X.curve[0] == c ? X.sign : -X.sign;
}

}  // namespace

std::vector<std::pair<int, int>> left_arcs(const Diagram& d, int cx, int cy) {
  std::vector<int> on_y = crossings_with(d, cy, cx);
  std::vector<int> on_x = crossings_with(d, cx, cy);
  const int m = static_cast<int>(on_y.size());
  std::vector<int> pos_x(d.crossings().size(), -1);
  for (int i = 0; i < static_cast<int>(on_x.size()); ++i) pos_x[on_x[i]] = i;
  struct Cand {
    int cost, order, from, to;
  };
  std::vector<Cand> c;
  for (int i = 0; i < m; ++i) {
    int x = on_y[i], y = on_y[(i + 1) % m];
    if (crossing_sign(d, x, cx) != 1) continue;
    int gap = ((pos_x[y] - pos_x[x]) % m + m) % m;
    int inner = std::min(gap - 1, m - gap - 1);
    c.push_back({inner, i, x, y});
  }
  std::sort(c.begin(), c.end(), [](const Cand& a, const Cand& b) {
    return a.cost != b.cost ? a.cost < b.cost : a.order < b.order;
  });
  std::vector<std::pair<int, int>> out;
  for (auto& k : c) out.push_back({k.from, k.to});
  return out;
}

ArcSurgery surger_along(const Diagram& d, const std::vector<Diagram::Input>& inputs, int cx, int cy, int from,
                        int to) {
  const Surface& S = d.surface();
  require(crossing_sign(d, from, cx) == 1, "surgery arc must leave the curve to its left");
  // Offsets well below the spacing of existing points on every edge.
  std::vector<std::vector<double>> on_edge(S.num_edges(), std::vector<double>{0.0, 1.0});
  for (const auto& in : inputs)
    for (size_t k = 0; k < in.exits.size(); ++k) on_edge[S.edge_of(in.exits[k])].push_back(in.keys[k]);
  std::vector<double> delta(S.num_edges(), 0.0);
  for (int e = 0; e < S.num_edges(); ++e) {
    auto& v = on_edge[e];
    std::sort(v.begin(), v.end());
    double gap = 1.0;
    for (size_t k = 1; k < v.size(); ++k) gap = std::min(gap, v[k] - v[k - 1]);
    ensure(gap > 0.0, "coincident points on an edge");
    delta[e] = gap / 8.0;
  }
  struct Seg {
    int curve;
    std::vector<int> idx;
    bool backward;
  };
  auto pushoff = [&](const std::vector<Seg>& segs) {
    Diagram::Input out;
    for (const auto& sg : segs) {
      const auto& in = inputs[sg.curve];
      auto emit = [&](int i, bool back) {
        int h = back ? S.partner(in.exits[i]) : in.exits[i];
        double side = S.is_lower(h) ? 1.0 : -1.0;
        out.exits.push_back(h);
        out.keys.push_back(in.keys[i] + side * delta[S.edge_of(h)]);
      };
      if (!sg.backward)
        for (int i : sg.idx) emit(i, false);
      else
        for (auto it = sg.idx.rbegin(); it != sg.idx.rend(); ++it) emit(*it, true);
    }
    return out;
  };
  auto x_fwd_yx = arc_indices(d, cx, to, from);
  auto x_fwd_xy = arc_indices(d, cx, from, to);
  auto j = arc_indices(d, cy, from, to);
  ArcSurgery r;
  r.inputs = inputs;
  r.first = static_cast<int>(r.inputs.size());
  r.inputs.push_back(pushoff({{cx, x_fwd_yx, false}, {cy, j, false}}));
  r.second = static_cast<int>(r.inputs.size());
  r.inputs.push_back(pushoff({{cx, x_fwd_xy, false}, {cy, j, true}}));
  r.first_path = r.inputs[r.first].exits;
  r.second_path = r.inputs[r.second].exits;
  return r;
}

std::optional<OrientedCurve> band_sum(const SurfacePtr& s, const BandQuery& q,
                                      const std::function<bool(const OrientedCurve&)>& accept) {
  const Surface& S = *s;
  Diagram d(s, q.inputs);
  const int nc = d.num_curves();
  auto chord_of_cell = [&](int c) {
    std::map<int, int> m;
    for (int j = 0; j < d.length(c); ++j)
      for (size_t p = 0; p < d.chord_crossings(c, j).size() + 1; ++p) {
        const auto& P = d.portals()[d.piece_portal(c, j, static_cast<int>(p))];
        m.emplace(P.cell[0], j);
        m.emplace(P.cell[1], j);
      }
    return m;
  };
  auto starts = chord_of_cell(q.first);
  auto ends = chord_of_cell(q.second);
  WalkQuery wq;
  wq.blocking.assign(nc, 0);
  for (int c = 0; c < static_cast<int>(q.blocking.size()) && c < nc; ++c) wq.blocking[c] = q.blocking[c];
  wq.blocking[q.first] = 1;
  wq.blocking[q.second] = 1;
  for (int c : q.crossings) {
    wq.blocking[c] = 1;
    std::vector<int> ps;
    for (size_t p = 0; p < d.portals().size(); ++p) {
      const auto& P = d.portals()[p];
      if (P.kind == Diagram::PortalKind::piece && P.curve == c) ps.push_back(static_cast<int>(p));
    }
    wq.stages.push_back(std::move(ps));
  }
  wq.closed = false;
  for (auto& [cell, j] : ends) wq.end_cells.push_back(cell);
  int tried = 0;
  for (auto& [c1, j1] : starts) {
    if (tried >= q.max_candidates) break;
    wq.start_cells = {c1};
    auto w = find_walk(d, wq);
    if (!w) continue;
    int c2 = c1;
    for (auto [portal, dir] : w->steps) c2 = d.other_cell(portal, c2);
    auto it = ends.find(c2);
    ensure(it != ends.end(), "band walk ended away from the second curve");
    EdgePath k = walk_path(d, *w);
    for (int eps : {1, -1}) {
      ++tried;
      EdgePath p = rotate_loop(S, q.inputs[q.first].exits, j1, 1);
      p.insert(p.end(), k.begin(), k.end());
      EdgePath l2 = rotate_loop(S, q.inputs[q.second].exits, it->second, eps);
      p.insert(p.end(), l2.begin(), l2.end());
      EdgePath kr = reverse_path(S, k);
      p.insert(p.end(), kr.begin(), kr.end());
      p = reduce_path(S, p, true);
      if (p.empty() || !is_essential(S, p)) continue;
      auto oc = simple_oriented_class(s, p);
      if (oc && accept(*oc)) return oc;
    }
  }
  return std::nullopt;
}

std::optional<OrientedCurve> tube(const SurfacePtr& s, const ArcSurgery& surgery, int cx,
                                  const std::vector<char>& blocking,
                                  const std::function<bool(const OrientedCurve&)>& accept) {
  BandQuery q;
  q.inputs = surgery.inputs;
  q.first = surgery.first;
  q.second = surgery.second;
  q.crossings = {cx, cx};
  q.blocking = blocking;
  return band_sum(s, q, accept);
}

}  // namespace torelli
