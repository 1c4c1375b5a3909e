#include "torelli/normal.hpp"

#include <algorithm>

#include "torelli/error.hpp"

namespace torelli {

std::vector<int> TracedCurve::coords(const Surface& s) const {
  std::vector<int> c(s.num_edges(), 0);
  for (int h : exits) c[s.edge_of(h)]++;
  return c;
}

bool is_normal(const Surface& s, const std::vector<int>& x) {
  if (static_cast<int>(x.size()) != s.num_edges()) return false;
  for (int v : x)
    if (v < 0) return false;
  for (int t = 0; t < s.num_triangles(); ++t) {
    int a = x[s.edge_of(3 * t)], b = x[s.edge_of(3 * t + 1)], c = x[s.edge_of(3 * t + 2)];
    if ((a + b + c) % 2) return false;
    if (a > b + c || b > a + c || c > a + b) return false;
  }
  return true;
}

std::vector<int> corner_counts(const Surface& s, const std::vector<int>& x) {
  std::vector<int> n(s.num_half_edges());
  for (int t = 0; t < s.num_triangles(); ++t)
    for (int k = 0; k < 3; ++k) {
      int prev = x[s.edge_of(Surface::half_edge(t, k - 1))];
      int cur = x[s.edge_of(Surface::half_edge(t, k))];
      int next = x[s.edge_of(Surface::half_edge(t, k + 1))];
      n[3 * t + k] = (prev + cur - next) / 2;
    }
  return n;
}

namespace {

struct Stepper {
  const Surface& s;
  const std::vector<int>& x;
  std::vector<int> n;

  // Enter triangle through h_in at position p; returns exit half-edge and position.
  void step(int h_in, int p, Strand& st, int& h_out, int& p_out) const {
    const int t = Surface::triangle_of(h_in), i = Surface::side_of(h_in);
    const int xi = x[s.edge_of(h_in)];
    const int ni = n[3 * t + i];
    st.triangle = t;
    if (p < ni) {
      st.corner = i;
      st.depth = p;
      h_out = Surface::half_edge(t, i - 1);
      p_out = x[s.edge_of(h_out)] - 1 - p;
    } else {
      st.corner = (i + 1) % 3;
      st.depth = xi - 1 - p;
      h_out = Surface::half_edge(t, i + 1);
      p_out = st.depth;
    }
  }
};

}  // namespace

TracedCurve trace_through(const Surface& s, const std::vector<int>& frame, int h0, int pos0) {
  require(is_normal(s, frame), "frame is not a normal coordinate vector");
  require(pos0 >= 0 && pos0 < frame[s.edge_of(h0)], "start point outside frame");
  Stepper st{s, frame, corner_counts(s, frame)};
  TracedCurve c;
  c.frame = frame;
  int h = s.partner(h0);
  int p = frame[s.edge_of(h0)] - 1 - pos0;
  const int total = [&] {
    int t = 0;
    for (int v : frame) t += v;
    return t;
  }();
  while (true) {
    Strand sd;
    int ho, po;
    st.step(h, p, sd, ho, po);
    c.steps.push_back(sd);
    c.exits.push_back(ho);
    c.exit_pos.push_back(po);
    if (ho == h0 && po == pos0) break;
    ensure(static_cast<int>(c.exits.size()) <= total, "normal trace did not close");
    h = s.partner(ho);
    p = frame[s.edge_of(ho)] - 1 - po;
  }
  // Start with the step that leaves through the given point.
  std::rotate(c.steps.begin(), c.steps.end() - 1, c.steps.end());
  std::rotate(c.exits.begin(), c.exits.end() - 1, c.exits.end());
  std::rotate(c.exit_pos.begin(), c.exit_pos.end() - 1, c.exit_pos.end());
  return c;
}

TracedCurve trace_single(const Surface& s, const std::vector<int>& coords) {
  for (int e = 0; e < s.num_edges(); ++e)
    if (coords[e] > 0) return trace_through(s, coords, s.lower_half(e), 0);
  throw PreconditionError("empty normal curve");
}

std::vector<TracedCurve> trace_components(const Surface& s, const std::vector<int>& coords) {
  require(is_normal(s, coords), "not a normal coordinate vector");
  std::vector<std::vector<char>> seen(s.num_edges());
  for (int e = 0; e < s.num_edges(); ++e) seen[e].assign(coords[e], 0);
  std::vector<TracedCurve> out;
  for (int e = 0; e < s.num_edges(); ++e) {
    int h = s.lower_half(e);
    for (int p = 0; p < coords[e]; ++p) {
      if (seen[e][p]) continue;
      TracedCurve c = trace_through(s, coords, h, p);
      for (int k = 0; k < c.length(); ++k) {
        int hk = c.exits[k];
        int pk = s.is_lower(hk) ? c.exit_pos[k] : coords[s.edge_of(hk)] - 1 - c.exit_pos[k];
        seen[s.edge_of(hk)][pk] = 1;
      }
      out.push_back(std::move(c));
    }
  }
  return out;
}

bool is_vertex_link(const std::vector<int>& coords) {
  return std::all_of(coords.begin(), coords.end(), [](int v) { return v == 2; });
}

Geodesic align_to_trace(const Surface& s, Geodesic g, int* dir) {
  TracedCurve t = trace_single(s, g.coords);
  const size_t n = t.exits.size();
  ensure(g.half_edges.size() == n, "geodesic length differs from its coordinates");
  auto find_rotation = [&](const EdgePath& seq) -> int {
    for (size_t r = 0; r < n; ++r) {
      bool ok = true;
      for (size_t k = 0; k < n && ok; ++k) ok = seq[(k + r) % n] == t.exits[k];
      if (ok) return static_cast<int>(r);
    }
    return -1;
  };
  int d = 1;
  int r = find_rotation(g.half_edges);
  if (r < 0) {
    d = -1;
    EdgePath rev;
    std::vector<double> rp;
    for (size_t k = 0; k < n; ++k) {
      rev.push_back(s.partner(g.half_edges[n - 1 - k]));
      rp.push_back(g.params[n - 1 - k]);
    }
    g.half_edges = rev;
    g.params = rp;
    r = find_rotation(g.half_edges);
  }
  ensure(r >= 0, "geodesic is not normally isotopic to its trace");
  std::rotate(g.half_edges.begin(), g.half_edges.begin() + r, g.half_edges.end());
  std::rotate(g.params.begin(), g.params.begin() + r, g.params.end());
  if (dir) *dir = d;
  return g;
}

std::vector<int> generator_counts(const Surface& s, const EdgePath& p) {
  std::vector<int> z(2 * s.genus(), 0);
  for (int h : p) {
    Letter x = s.letter(h);
    if (x > 0) z[x - 1]++;
    if (x < 0) z[-x - 1]--;
  }
  return z;
}

int algebraic_intersection(const Surface& s, const EdgePath& a, const EdgePath& b) {
  // Points on each edge: a's in order, then b's, positions in the canonical direction.
  std::vector<int> cnt(s.num_edges(), 0);
  auto place = [&](const EdgePath& p) {
    std::vector<int> r(p.size());
    for (size_t k = 0; k < p.size(); ++k) r[k] = cnt[s.edge_of(p[k])]++;
    return r;
  };
  std::vector<int> ra = place(a), rb = place(b);
  auto key = [&](int h, int rank) {
    int n = cnt[s.edge_of(h)];
    int along = s.is_lower(h) ? rank : n - 1 - rank;
    return Surface::side_of(h) * 1000000 + along;
  };
  struct Chord {
    int t, p, q;
  };
  auto chords = [&](const EdgePath& path, const std::vector<int>& r) {
    std::vector<Chord> ch;
    const size_t m = path.size();
    for (size_t k = 0; k < m; ++k) {
      size_t prev = (k + m - 1) % m;
      int hin = s.partner(path[prev]);
      ch.push_back({Surface::triangle_of(path[k]), key(hin, r[prev]), key(path[k], r[k])});
    }
    return ch;
  };
  auto ca = chords(a, ra), cb = chords(b, rb);
  auto in_ccw = [](int from, int to, int x) {
    return from < to ? (x > from && x < to) : (x > from || x < to);
  };
  int total = 0;
  for (const auto& x : ca)
    for (const auto& y : cb) {
      if (x.t != y.t) continue;
      bool i1 = in_ccw(x.p, x.q, y.p), i2 = in_ccw(x.p, x.q, y.q);
      if (i1 == i2) continue;
      total += i1 ? 1 : -1;
    }
  return total;
}

}  // namespace torelli
