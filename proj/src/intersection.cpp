#include "torelli/intersection.hpp"

#include <algorithm>

#include "torelli/error.hpp"

namespace torelli {

namespace {

struct Reducer {
  const Diagram& d;
  const SurfaceGroup& grp;
  int ca, cb;
  std::vector<int> na, pa, nb, pb;
  std::vector<Word> wa, wb;  // word from a point to its successor
  std::vector<char> alive;
  int count = 0;

  Reducer(const Diagram& dg, int a, int b) : d(dg), grp(dg.surface().group()), ca(a), cb(b) {
    const int nx = static_cast<int>(d.crossings().size());
    na.assign(nx, -1);
    pa = nb = pb = na;
    wa.assign(nx, {});
    wb.assign(nx, {});
    alive.assign(nx, 0);
    auto is_ab = [&](int x) {
      const auto& X = d.crossings()[x];
      return (X.curve[0] == ca && X.curve[1] == cb) || (X.curve[0] == cb && X.curve[1] == ca);
    };
    auto link = [&](int c, std::vector<int>& nx_, std::vector<int>& px_, std::vector<Word>& w) {
      std::vector<int> seq;
      for (int x : d.along(c))
        if (is_ab(x)) seq.push_back(x);
      for (size_t i = 0; i < seq.size(); ++i) {
        int x = seq[i], y = seq[(i + 1) % seq.size()];
        nx_[x] = y;
        px_[y] = x;
        w[x] = grp.reduce(d.surface().word_of(d.arc_path(c, x, y)));
      }
      return seq;
    };
    auto s = link(ca, na, pa, wa);
    link(cb, nb, pb, wb);
    for (int x : s) alive[x] = 1;
    count = static_cast<int>(s.size());
  }

  int sign(int x) const {
    const auto& X = d.crossings()[x];
    return X.curve[0] == ca ? X.sign : -X.sign;
  }

  // Candidate bigon with corners p and q = next along a.
  bool is_bigon(int p, int& q, bool& b_forward) const {
    q = na[p];
    if (q == p) return false;
    if (nb[p] == q && grp.is_trivial_loop(concat(wa[p], inverse(wb[p])))) {
      b_forward = true;
      return true;
    }
    if (pb[p] == q && grp.is_trivial_loop(concat(wa[p], wb[q]))) {
      b_forward = false;
      return true;
    }
    return false;
  }

  static void unlink(std::vector<int>& nx, std::vector<int>& px, std::vector<Word>& w, const SurfaceGroup& g,
                     int first, int second) {
    // first -> second consecutive; splice out both.
    int before = px[first], after = nx[second];
    if (before == second) return;  // only these two points
    w[before] = g.reduce(concat(concat(w[before], w[first]), w[second]));
    nx[before] = after;
    px[after] = before;
  }

  void remove(int p, int q, bool b_forward) {
    if (count == 2) {
      alive[p] = alive[q] = 0;
      count = 0;
      return;
    }
    unlink(na, pa, wa, grp, p, q);
    if (b_forward)
      unlink(nb, pb, wb, grp, p, q);
    else
      unlink(nb, pb, wb, grp, q, p);
    alive[p] = alive[q] = 0;
    count -= 2;
  }

  std::optional<Bigon> next() const {
    std::vector<int> order;
    for (size_t x = 0; x < alive.size(); ++x)
      if (alive[x]) order.push_back(static_cast<int>(x));
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
      return d.crossings()[x].triangle < d.crossings()[y].triangle;
    });
    for (int p : order) {
      int q = -1;
      bool fwd = false;
      if (is_bigon(p, q, fwd)) return Bigon{p, q, d.crossings()[p].triangle};
    }
    return std::nullopt;
  }
};

}  // namespace

BigonReduction reduce_bigons(const Diagram& d, int ca, int cb) {
  Reducer r(d, ca, cb);
  BigonReduction out;
  for (size_t x = 0; x < r.alive.size(); ++x)
    if (r.alive[x]) out.algebraic += r.sign(static_cast<int>(x));
  while (auto b = r.next()) {
    int q = -1;
    bool fwd = false;
    r.is_bigon(b->p, q, fwd);
    ensure(r.sign(b->p) == -r.sign(q), "bigon corners with equal signs");
    r.remove(b->p, q, fwd);
    out.removed.push_back(*b);
  }
  out.remaining = r.count;
  ensure((out.remaining - std::abs(out.algebraic)) % 2 == 0 && out.remaining >= std::abs(out.algebraic),
         "bigon reduction broke the parity invariant");
  return out;
}

std::optional<Bigon> find_bigon(const Diagram& d, int ca, int cb) { return Reducer(d, ca, cb).next(); }

int intersection_number(const CurveClass& a, const CurveClass& b) {
  require(a.surface_ptr() == b.surface_ptr(), "curves on different surfaces");
  if (a == b) return 0;
  if (are_disjoint(a, b)) return 0;
  Diagram d = Diagram::from_traced(a.surface_ptr(), {trace(a), trace(b)});
  return reduce_bigons(d, 0, 1).remaining;
}

int geodesic_crossings(const CurveClass& a, const CurveClass& b) {
  if (a == b) return 0;
  return Diagram::from_classes({a, b}).crossing_count(0, 1);
}

bool are_disjoint(const CurveClass& a, const CurveClass& b) {
  require(a.surface_ptr() == b.surface_ptr(), "curves on different surfaces");
  if (a == b) return true;
  std::vector<int> sum(a.coords().size());
  for (size_t i = 0; i < sum.size(); ++i) sum[i] = a.coords()[i] + b.coords()[i];
  auto comps = trace_components(a.surface(), sum);
  if (comps.size() != 2) return false;
  auto c0 = comps[0].coords(a.surface()), c1 = comps[1].coords(a.surface());
  return (c0 == a.coords() && c1 == b.coords()) || (c0 == b.coords() && c1 == a.coords());
}

int algebraic_intersection(const OrientedCurve& a, const OrientedCurve& b) {
  return symplectic_pairing(homology_class(a), homology_class(b));
}

}  // namespace torelli
