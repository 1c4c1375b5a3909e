#include "torelli/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "torelli/error.hpp"

namespace torelli {

namespace {

struct ChordEnd {
  int side;
  int along;      // rank along the side's direction
  double u;       // position along the side's direction, in (0, 1)
};

struct Pt {
  double x, y;
};

Pt on_circle(const ChordEnd& e) {
  const double th = 2.0 * M_PI * (e.side + e.u) / 3.0;
  return {std::cos(th), std::sin(th)};
}

// Parameter along segment p->q where it meets segment r->s.
double meet(Pt p, Pt q, Pt r, Pt s) {
  double dx = q.x - p.x, dy = q.y - p.y, ex = s.x - r.x, ey = s.y - r.y;
  double den = dx * ey - dy * ex;
  return ((r.x - p.x) * ey - (r.y - p.y) * ex) / den;
}

int boundary_key(const ChordEnd& e) { return e.side * (1 << 24) + e.along; }

bool in_ccw(int from, int to, int x) { return from < to ? (x > from && x < to) : (x > from || x < to); }

}  // namespace

Diagram::Diagram(SurfacePtr s, std::vector<Input> curves) : s_(std::move(s)) {
  const Surface& S = *s_;
  const int nc = static_cast<int>(curves.size());
  for (auto& c : curves) {
    require(!c.exits.empty() && is_valid_edge_path(S, c.exits), "diagram curve is not a closed edge path");
    require(c.keys.size() == c.exits.size(), "diagram curve keys mismatch");
    exits_.push_back(c.exits);
  }

  // Ranks of points along each edge.
  std::vector<std::vector<std::pair<double, std::pair<int, int>>>> on_edge(S.num_edges());
  for (int c = 0; c < nc; ++c)
    for (int j = 0; j < length(c); ++j) on_edge[S.edge_of(exits_[c][j])].push_back({curves[c].keys[j], {c, j}});
  std::vector<std::vector<int>> rank(nc);
  for (int c = 0; c < nc; ++c) rank[c].assign(length(c), -1);
  std::vector<int> count(S.num_edges());
  for (int e = 0; e < S.num_edges(); ++e) {
    auto& v = on_edge[e];
    std::sort(v.begin(), v.end());
    for (size_t r = 0; r < v.size(); ++r) {
      if (r > 0) ensure(v[r].first - v[r - 1].first > 1e-13, "coincident points in diagram");
      rank[v[r].second.first][v[r].second.second] = static_cast<int>(r);
    }
    count[e] = static_cast<int>(v.size());
  }
  auto end_of = [&](int h, int c, int j) {
    int e = S.edge_of(h);
    ChordEnd ce;
    ce.side = Surface::side_of(h);
    bool low = S.is_lower(h);
    ce.along = low ? rank[c][j] : count[e] - 1 - rank[c][j];
    ce.u = low ? curves[c].keys[j] : 1.0 - curves[c].keys[j];
    return ce;
  };

  // Chords and crossings.
  struct Chord {
    int c, j;
    ChordEnd in, out;
  };
  const int nt = S.num_triangles();
  std::vector<std::vector<Chord>> per(nt);
  for (int c = 0; c < nc; ++c) {
    const int n = length(c);
    for (int j = 0; j < n; ++j) {
      int prev = (j + n - 1) % n;
      int hin = S.partner(exits_[c][prev]);
      per[Surface::triangle_of(exits_[c][j])].push_back({c, j, end_of(hin, c, prev), end_of(exits_[c][j], c, j)});
    }
  }
  chord_x_.resize(nc);
  for (int c = 0; c < nc; ++c) chord_x_[c].assign(length(c), {});
  std::map<std::pair<int, int>, std::vector<std::pair<double, int>>> on_chord;
  for (int t = 0; t < nt; ++t) {
    auto& v = per[t];
    for (size_t a = 0; a < v.size(); ++a)
      for (size_t b = a + 1; b < v.size(); ++b) {
        int pa = boundary_key(v[a].in), qa = boundary_key(v[a].out);
        int pb = boundary_key(v[b].in), qb = boundary_key(v[b].out);
        bool i1 = in_ccw(pa, qa, pb), i2 = in_ccw(pa, qa, qb);
        if (i1 == i2) continue;
        require(v[a].c != v[b].c, "diagram curve is not embedded");
        Crossing x;
        x.curve[0] = v[a].c;
        x.step[0] = v[a].j;
        x.curve[1] = v[b].c;
        x.step[1] = v[b].j;
        x.sign = i1 ? 1 : -1;
        x.triangle = t;
        int id = static_cast<int>(crossings_.size());
        crossings_.push_back(x);
        Pt P = on_circle(v[a].in), Q = on_circle(v[a].out), R = on_circle(v[b].in), T = on_circle(v[b].out);
        on_chord[{v[a].c, v[a].j}].push_back({meet(P, Q, R, T), id});
        on_chord[{v[b].c, v[b].j}].push_back({meet(R, T, P, Q), id});
      }
  }
  for (auto& [key, v] : on_chord) {
    std::sort(v.begin(), v.end());
    for (size_t k = 1; k < v.size(); ++k) ensure(v[k].first - v[k - 1].first > 1e-11, "concurrent chords in diagram");
    for (auto& pr : v) chord_x_[key.first][key.second].push_back(pr.second);
  }
  along_.assign(nc, {});
  along_idx_.assign(crossings_.size(), {-1, -1});
  for (int c = 0; c < nc; ++c)
    for (int j = 0; j < length(c); ++j)
      for (int x : chord_x_[c][j]) {
        int k = crossings_[x].curve[0] == c ? 0 : 1;
        along_idx_[x][k] = static_cast<int>(along_[c].size());
        along_[c].push_back(x);
      }

  // Cells: faces of the planar map inside each triangle.
  piece_portal_.resize(nc);
  for (int c = 0; c < nc; ++c) {
    piece_portal_[c].resize(length(c));
    for (int j = 0; j < length(c); ++j) piece_portal_[c][j].assign(chord_x_[c][j].size() + 1, -1);
  }
  std::vector<std::array<std::vector<int>, 3>> seg_cell(nt);
  struct PieceCells {
    int left = -1, right = -1;
  };
  std::vector<std::vector<std::vector<PieceCells>>> piece_cells(nc);
  for (int c = 0; c < nc; ++c) {
    piece_cells[c].resize(length(c));
    for (int j = 0; j < length(c); ++j) piece_cells[c][j].resize(chord_x_[c][j].size() + 1);
  }

  for (int t = 0; t < nt; ++t) {
    enum Kind { bd_ccw, bd_cw, fwd, bwd };
    struct Dart {
      int from, to;
      Kind kind;
      int a, b, p;  // boundary: side, segment; piece: curve, step, piece
    };
    std::vector<Dart> darts;
    std::vector<std::vector<int>> rot;
    std::vector<char> is_corner;
    auto add_vertex = [&](bool corner) {
      rot.emplace_back();
      is_corner.push_back(corner);
      return static_cast<int>(rot.size()) - 1;
    };
    auto add_pair = [&](int u, int v, Kind k, Kind kt, int a, int b, int p) {
      darts.push_back({u, v, k, a, b, p});
      darts.push_back({v, u, kt, a, b, p});
      return static_cast<int>(darts.size()) - 2;
    };

    // Boundary vertices in counterclockwise order.
    struct BPoint {
      int along;
      int c, j;
      bool is_entry;
    };
    std::array<std::vector<BPoint>, 3> side_pts;
    for (auto& ch : per[t]) {
      side_pts[ch.in.side].push_back({ch.in.along, ch.c, ch.j, true});
      side_pts[ch.out.side].push_back({ch.out.along, ch.c, ch.j, false});
    }
    for (auto& sp : side_pts) std::sort(sp.begin(), sp.end(), [](auto& x, auto& y) { return x.along < y.along; });
    std::vector<int> bverts;
    std::vector<std::pair<int, int>> bseg;  // segment label leaving each boundary vertex ccw
    std::map<std::pair<int, int>, int> entry_vertex, exit_vertex;
    std::map<int, std::pair<std::pair<int, int>, bool>> vinfo;
    for (int sd = 0; sd < 3; ++sd) {
      bverts.push_back(add_vertex(true));
      bseg.push_back({sd, 0});
      for (size_t i = 0; i < side_pts[sd].size(); ++i) {
        int v = add_vertex(false);
        bverts.push_back(v);
        bseg.push_back({sd, static_cast<int>(i) + 1});
        auto& bp = side_pts[sd][i];
        (bp.is_entry ? entry_vertex : exit_vertex)[{bp.c, bp.j}] = v;
        vinfo[v] = {{bp.c, bp.j}, bp.is_entry};
      }
      seg_cell[t][sd].assign(side_pts[sd].size() + 1, -1);
    }
    const int nb = static_cast<int>(bverts.size());
    std::vector<int> ccw_out(nb), cw_out(nb);
    for (int i = 0; i < nb; ++i) {
      int d = add_pair(bverts[i], bverts[(i + 1) % nb], bd_ccw, bd_cw, bseg[i].first, bseg[i].second, 0);
      ccw_out[i] = d;
      cw_out[(i + 1) % nb] = d + 1;
    }

    // Crossing vertices and chord pieces.
    std::map<int, int> xvert;
    for (auto& ch : per[t])
      for (int x : chord_x_[ch.c][ch.j])
        if (!xvert.count(x)) xvert[x] = add_vertex(false);
    std::map<std::pair<int, int>, int> inward;  // chord -> dart leaving its entry vertex
    std::map<std::pair<int, int>, int> outward; // chord -> dart leaving its exit vertex (backward)
    std::map<std::pair<int, int>, std::pair<int, int>> around;  // (crossing, curve slot) -> (fwd out, bwd out)
    for (auto& ch : per[t]) {
      const auto& xs = chord_x_[ch.c][ch.j];
      std::vector<int> path{entry_vertex.at({ch.c, ch.j})};
      for (int x : xs) path.push_back(xvert.at(x));
      path.push_back(exit_vertex.at({ch.c, ch.j}));
      std::vector<int> pd;
      for (size_t p = 0; p + 1 < path.size(); ++p)
        pd.push_back(add_pair(path[p], path[p + 1], fwd, bwd, ch.c, ch.j, static_cast<int>(p)));
      inward[{ch.c, ch.j}] = pd.front();
      outward[{ch.c, ch.j}] = pd.back() + 1;
      for (size_t k = 0; k < xs.size(); ++k) {
        int slot = crossings_[xs[k]].curve[0] == ch.c && crossings_[xs[k]].step[0] == ch.j ? 0 : 1;
        around[{xs[k], slot}] = {pd[k + 1], pd[k] + 1};
      }
    }
    for (int i = 0; i < nb; ++i) {
      int v = bverts[i];
      if (is_corner[v]) {
        rot[v] = {ccw_out[i], cw_out[i]};
      } else {
        auto [key, entry] = vinfo.at(v);
        int chord_dart = entry ? inward.at(key) : outward.at(key);
        rot[v] = {ccw_out[i], chord_dart, cw_out[i]};
      }
    }
    for (auto& [x, v] : xvert) {
      auto [f0, b0] = around.at({x, 0});
      auto [f1, b1] = around.at({x, 1});
      if (crossings_[x].sign > 0)
        rot[v] = {f0, f1, b0, b1};
      else
        rot[v] = {f0, b1, b0, f1};
    }

    // Trace faces keeping each face on the left.
    std::vector<int> face(darts.size(), -1);
    for (size_t d0 = 0; d0 < darts.size(); ++d0) {
      if (face[d0] >= 0 || darts[d0].kind == bd_cw) continue;
      int cell = static_cast<int>(cells_.size());
      cells_.push_back(Cell{t, false, {}});
      int d = static_cast<int>(d0);
      do {
        ensure(darts[d].kind != bd_cw, "inner face reached the outside");
        face[d] = cell;
        if (is_corner[darts[d].from]) cells_[cell].has_corner = true;
        const Dart& D = darts[d];
        if (D.kind == bd_ccw) {
          seg_cell[t][D.a][D.b] = cell;
        } else if (D.kind == fwd) {
          piece_cells[D.a][D.b][D.p].left = cell;
        } else if (D.kind == bwd) {
          piece_cells[D.a][D.b][D.p].right = cell;
        }
        int v = D.to;
        int twin = d ^ 1;
        auto& r = rot[v];
        int pos = static_cast<int>(std::find(r.begin(), r.end(), twin) - r.begin());
        ensure(pos < static_cast<int>(r.size()), "rotation system is inconsistent");
        d = r[(pos + r.size() - 1) % r.size()];
      } while (d != static_cast<int>(d0));
    }
  }

  // Portals.
  for (int e = 0; e < S.num_edges(); ++e) {
    int h = S.lower_half(e), hp = S.partner(h);
    int t = Surface::triangle_of(h), sd = Surface::side_of(h);
    int tp = Surface::triangle_of(hp), sp = Surface::side_of(hp);
    const int m = count[e];
    for (int i = 0; i <= m; ++i) {
      Portal p{PortalKind::side, {seg_cell[t][sd][i], seg_cell[tp][sp][m - i]}, h, -1, -1, -1};
      ensure(p.cell[0] >= 0 && p.cell[1] >= 0, "side segment without a cell");
      int id = static_cast<int>(portals_.size());
      portals_.push_back(p);
      cells_[p.cell[0]].portals.push_back(id);
      if (p.cell[1] != p.cell[0]) cells_[p.cell[1]].portals.push_back(id);
    }
  }
  for (int c = 0; c < nc; ++c)
    for (int j = 0; j < length(c); ++j)
      for (size_t p = 0; p < piece_cells[c][j].size(); ++p) {
        auto pc = piece_cells[c][j][p];
        ensure(pc.left >= 0 && pc.right >= 0, "chord piece without cells");
        Portal pt{PortalKind::piece, {pc.left, pc.right}, -1, c, j, static_cast<int>(p)};
        int id = static_cast<int>(portals_.size());
        portals_.push_back(pt);
        piece_portal_[c][j][p] = id;
        cells_[pc.left].portals.push_back(id);
        if (pc.right != pc.left) cells_[pc.right].portals.push_back(id);
      }
}

Diagram Diagram::from_classes(const std::vector<CurveClass>& curves) {
  require(!curves.empty(), "no curves");
  SurfacePtr s = curves[0].surface_ptr();
  std::vector<Input> in;
  for (size_t i = 0; i < curves.size(); ++i) {
    require(curves[i].surface_ptr() == s, "curves on different surfaces");
    for (size_t j = 0; j < i; ++j) require(!(curves[i] == curves[j]), "repeated curve in diagram");
    auto g = geodesic(curves[i]);
    in.push_back({g->half_edges, g->params});
  }
  return Diagram(s, std::move(in));
}

Diagram Diagram::from_traced(SurfacePtr s, const std::vector<TracedCurve>& curves) {
  std::vector<Input> in;
  for (size_t i = 0; i < curves.size(); ++i) {
    const TracedCurve& t = curves[i];
    Input x;
    x.exits = t.exits;
    for (int k = 0; k < t.length(); ++k) {
      int h = t.exits[k];
      int n = t.frame[s->edge_of(h)];
      int p = s->is_lower(h) ? t.exit_pos[k] : n - 1 - t.exit_pos[k];
      x.keys.push_back((p + 0.5) / n + 1e-9 * static_cast<double>(i));
    }
    in.push_back(std::move(x));
  }
  return Diagram(std::move(s), std::move(in));
}

int Diagram::other_cell(int portal, int cell) const {
  const Portal& p = portals_[portal];
  return p.cell[0] == cell ? p.cell[1] : p.cell[0];
}

EdgePath Diagram::step_path(int c, int s0, int s1) const {
  const int n = length(c);
  int cnt = ((s1 - s0) % n + n) % n;
  EdgePath p;
  for (int k = 0; k < cnt; ++k) p.push_back(exits_[c][(s0 + k) % n]);
  return p;
}

EdgePath Diagram::arc_path(int c, int x, int y) const {
  const int n = length(c);
  int kx = crossings_[x].curve[0] == c ? 0 : 1;
  int ky = crossings_[y].curve[0] == c ? 0 : 1;
  int sx = crossings_[x].step[kx], sy = crossings_[y].step[ky];
  int cnt = ((sy - sx) % n + n) % n;
  if (cnt == 0) {
    const auto& xs = chord_x_[c][sx];
    auto ix = std::find(xs.begin(), xs.end(), x) - xs.begin();
    auto iy = std::find(xs.begin(), xs.end(), y) - xs.begin();
    if (x == y || iy < ix) cnt = n;
  }
  EdgePath p;
  for (int k = 0; k < cnt; ++k) p.push_back(exits_[c][(sx + k) % n]);
  return p;
}

std::vector<int> Diagram::components(const std::vector<char>& cut, int* count) const {
  std::vector<int> parent(cells_.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Portal& p : portals_) {
    if (p.kind == PortalKind::piece && cut[p.curve]) continue;
    parent[find(p.cell[0])] = find(p.cell[1]);
  }
  std::vector<int> comp(cells_.size(), -1), label(cells_.size(), -1);
  int k = 0;
  for (size_t c = 0; c < cells_.size(); ++c) {
    int r = find(static_cast<int>(c));
    if (label[r] < 0) label[r] = k++;
    comp[c] = label[r];
  }
  if (count) *count = k;
  return comp;
}

int Diagram::crossing_count(int c1, int c2) const {
  int n = 0;
  for (auto& x : crossings_)
    if ((x.curve[0] == c1 && x.curve[1] == c2) || (x.curve[0] == c2 && x.curve[1] == c1)) ++n;
  return n;
}

EdgePath walk_path(const Diagram& d, const CellWalk& w) {
  EdgePath p;
  for (auto [portal, dir] : w.steps) {
    const auto& pt = d.portals()[portal];
    if (pt.kind != Diagram::PortalKind::side) continue;
    p.push_back(dir == 0 ? pt.half_edge : d.surface().partner(pt.half_edge));
  }
  return p;
}

std::optional<CellWalk> find_walk(const Diagram& d, const WalkQuery& q) {
  const int nc = static_cast<int>(d.cells().size());
  const int ns = static_cast<int>(q.stages.size());
  std::vector<std::vector<char>> in_stage(ns, std::vector<char>(d.portals().size(), 0));
  for (int s = 0; s < ns; ++s)
    for (int p : q.stages[s]) in_stage[s][p] = 1;
  auto allowed = [&](int c) { return q.allowed_cells.empty() || q.allowed_cells[c]; };
  auto free_portal = [&](const Diagram::Portal& p) {
    return p.kind == Diagram::PortalKind::side || !q.blocking[p.curve];
  };
  const int layers = ns + 1;
  auto run = [&](const std::vector<int>& sources, const std::vector<char>& target) -> std::optional<CellWalk> {
    std::vector<int> prev(static_cast<size_t>(nc) * layers, -2), via(static_cast<size_t>(nc) * layers, -1);
    std::deque<int> dq;
    for (int c : sources) {
      if (!allowed(c)) continue;
      int st = c * layers;
      if (prev[st] != -2) continue;
      prev[st] = -1;
      dq.push_back(st);
    }
    int hit = -1;
    while (!dq.empty() && hit < 0) {
      int st = dq.front();
      dq.pop_front();
      int c = st / layers, s = st % layers;
      for (int pid : d.cells()[c].portals) {
        const auto& p = d.portals()[pid];
        int o = d.other_cell(pid, c);
        if (!allowed(o)) continue;
        auto push = [&](int ns2) {
          int nst = o * layers + ns2;
          if (prev[nst] != -2) return;
          prev[nst] = st;
          via[nst] = pid;
          if (ns2 == ns && target[o]) hit = nst;
          dq.push_back(nst);
        };
        if (s < ns && in_stage[s][pid]) push(s + 1);
        if (free_portal(p)) push(s);
        if (hit >= 0) break;
      }
    }
    if (hit < 0) return std::nullopt;
    CellWalk w;
    std::vector<std::pair<int, int>> rev;
    int st = hit;
    while (prev[st] >= 0) {
      int from = prev[st];
      int pid = via[st];
      int c = from / layers;
      rev.push_back({pid, d.portals()[pid].cell[0] == c ? 0 : 1});
      st = from;
    }
    w.start_cell = st / layers;
    w.steps.assign(rev.rbegin(), rev.rend());
    return w;
  };
  if (!q.closed) {
    std::vector<char> target(nc, 0);
    for (int c : q.end_cells) target[c] = 1;
    // A walk with no stages may be empty.
    if (ns == 0)
      for (int c : q.start_cells)
        if (target[c] && allowed(c)) return CellWalk{c, {}};
    return run(q.start_cells, target);
  }
  std::optional<CellWalk> best;
  for (int c : q.start_cells) {
    std::vector<char> target(nc, 0);
    target[c] = 1;
    auto w = run({c}, target);
    if (w && (!best || w->steps.size() < best->steps.size())) best = w;
  }
  return best;
}

Ribbon ribbon_boundaries(const Diagram& d, const std::vector<int>& curves) {
  Ribbon rb;
  std::vector<char> in(d.num_curves(), 0);
  for (int c : curves) in[c] = 1;
  auto is_vertex = [&](int x) {
    const auto& X = d.crossings()[x];
    return in[X.curve[0]] && in[X.curve[1]];
  };
  // out_arc[x][k]: arc leaving crossing x along curve slot k; in_arc: arc arriving.
  std::map<std::pair<int, int>, int> out_arc, in_arc;
  for (int c : curves) {
    std::vector<int> vs;
    for (int x : d.along(c))
      if (is_vertex(x)) vs.push_back(x);
    if (vs.empty()) {
      int id = static_cast<int>(rb.arcs.size());
      rb.arcs.push_back({c, -1, -1});
      EdgePath p = d.exits(c);
      rb.boundaries.push_back({p, {{id, 1}}});
      rb.boundaries.push_back({reverse_path(d.surface(), p), {{id, -1}}});
      continue;
    }
    for (size_t i = 0; i < vs.size(); ++i) {
      int x = vs[i], y = vs[(i + 1) % vs.size()];
      int id = static_cast<int>(rb.arcs.size());
      rb.arcs.push_back({c, x, y});
      out_arc[{x, d.crossings()[x].curve[0] == c ? 0 : 1}] = id;
      in_arc[{y, d.crossings()[y].curve[0] == c ? 0 : 1}] = id;
    }
  }
  std::set<int> verts;
  for (auto& [k, v] : out_arc) verts.insert(k.first);
  rb.vertices = static_cast<int>(verts.size());

  // Half-edge at a vertex: (arc, +1) leaves along the arc, (arc, -1) leaves backwards.
  auto rotation = [&](int x) {
    const auto& X = d.crossings()[x];
    std::pair<int, int> f0{out_arc.at({x, 0}), 1}, b0{in_arc.at({x, 0}), -1};
    std::pair<int, int> f1{out_arc.at({x, 1}), 1}, b1{in_arc.at({x, 1}), -1};
    if (X.sign > 0) return std::vector<std::pair<int, int>>{f0, f1, b0, b1};
    return std::vector<std::pair<int, int>>{f0, b1, b0, f1};
  };
  std::set<std::pair<int, int>> used;
  for (size_t a = 0; a < rb.arcs.size(); ++a) {
    if (rb.arcs[a].from < 0) continue;
    for (int dir0 : {1, -1}) {
      std::pair<int, int> cur{static_cast<int>(a), dir0};
      if (used.count(cur)) continue;
      RibbonBoundary b;
      while (!used.count(cur)) {
        used.insert(cur);
        b.arcs.push_back(cur);
        const RibbonArc& A = rb.arcs[cur.first];
        EdgePath p = d.arc_path(A.curve, A.from, A.to);
        if (cur.second < 0) p = reverse_path(d.surface(), p);
        b.path.insert(b.path.end(), p.begin(), p.end());
        int w = cur.second > 0 ? A.to : A.from;
        std::pair<int, int> arrival{cur.first, -cur.second};
        auto r = rotation(w);
        auto it = std::find(r.begin(), r.end(), arrival);
        ensure(it != r.end(), "ribbon rotation is inconsistent");
        size_t pos = it - r.begin();
        cur = r[(pos + r.size() - 1) % r.size()];
      }
      ensure(cur == b.arcs.front(), "ribbon boundary did not close");
      rb.boundaries.push_back(std::move(b));
    }
  }
  return rb;
}

}  // namespace torelli
