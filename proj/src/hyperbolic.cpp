#include "torelli/hyperbolic.hpp"

#include <array>
#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <cmath>
#include <random>
#include <sstream>
#include <string>

#include "torelli/error.hpp"

namespace torelli {

namespace mp = boost::multiprecision;

namespace {

using R1 = mp::number<mp::mpfr_float_backend<40, mp::allocate_stack>, mp::et_off>;
using R2 = mp::number<mp::mpfr_float_backend<80, mp::allocate_stack>, mp::et_off>;
using R3 = mp::number<mp::mpfr_float_backend<160>, mp::et_off>;
using R4 = mp::number<mp::mpfr_float_backend<320>, mp::et_off>;
using R5 = mp::number<mp::mpfr_float_backend<640>, mp::et_off>;
using Top = mp::number<mp::mpfr_float_backend<700>, mp::et_off>;

constexpr int kTierDigits[] = {40, 80, 160, 320, 640};

template <class T>
using V3 = std::array<T, 3>;
template <class T>
using M3 = std::array<T, 9>;

template <class T>
T dot(const V3<T>& x, const V3<T>& y) {
  return x[0] * y[0] + x[1] * y[1] - x[2] * y[2];
}

// Lorentz cross product: orthogonal to both arguments for the form above.
template <class T>
V3<T> lcross(const V3<T>& x, const V3<T>& y) {
  return {x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], -(x[0] * y[1] - x[1] * y[0])};
}

template <class T>
V3<T> scale(const V3<T>& x, const T& s) {
  return {x[0] * s, x[1] * s, x[2] * s};
}

template <class T>
V3<T> spacelike_unit(const V3<T>& x) {
  return scale(x, T(1) / sqrt(dot(x, x)));
}

template <class T>
V3<T> timelike_unit(V3<T> x) {
  T n = sqrt(-dot(x, x));
  if (x[2] < 0) n = -n;
  return scale(x, T(1) / n);
}

template <class T>
V3<T> act(const M3<T>& m, const V3<T>& v) {
  return {m[0] * v[0] + m[1] * v[1] + m[2] * v[2], m[3] * v[0] + m[4] * v[1] + m[5] * v[2],
          m[6] * v[0] + m[7] * v[1] + m[8] * v[2]};
}

template <class T>
M3<T> mul(const M3<T>& a, const M3<T>& b) {
  M3<T> c;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) c[3 * i + j] = a[3 * i] * b[j] + a[3 * i + 1] * b[3 + j] + a[3 * i + 2] * b[6 + j];
  return c;
}

template <class T>
M3<T> lorentz_inverse(const M3<T>& m) {
  // eta * m^T * eta
  M3<T> r;
  const int sg[3] = {1, 1, -1};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      T v = m[3 * j + i];
      if (sg[i] * sg[j] < 0) v = -v;
      r[3 * i + j] = v;
    }
  return r;
}

template <class T>
M3<T> identity() {
  M3<T> m;
  for (int i = 0; i < 9; ++i) m[i] = T(i % 4 == 0 ? 1 : 0);
  return m;
}

template <class T>
T det(const M3<T>& m) {
  return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) + m[2] * (m[3] * m[7] - m[4] * m[6]);
}

// Columns [T, U, P]: maps the origin to P and the +x direction to the tangent toward Q.
template <class T>
M3<T> frame(const V3<T>& p, const V3<T>& q) {
  V3<T> t = q;
  T c = dot(p, q);
  for (int i = 0; i < 3; ++i) t[i] += c * p[i];
  t = spacelike_unit(t);
  V3<T> u = spacelike_unit(lcross(p, t));
  M3<T> f = {t[0], u[0], p[0], t[1], u[1], p[1], t[2], u[2], p[2]};
  if (det(f) < 0) {
    for (int i = 0; i < 3; ++i) f[3 * i + 1] = -f[3 * i + 1];
  }
  return f;
}

template <class T>
T corner_angle(const T& opposite, const T& b, const T& c) {
  T num = cosh(b) * cosh(c) - cosh(opposite);
  T den = sinh(b) * sinh(c);
  return acos(num / den);
}

template <class T>
struct Frames {
  std::vector<std::array<V3<T>, 3>> vert;   // per triangle
  std::vector<std::array<V3<T>, 3>> side;   // unit normals, interior on the positive side
  std::vector<M3<T>> g;                     // partner frame -> own frame
  std::vector<M3<T>> ginv;
  std::vector<T> len;                       // per half-edge
};

}  // namespace

struct Hyperbolic::Impl {
  const Surface* s = nullptr;
  std::vector<std::string> lengths;  // per edge, decimal at top precision
  std::vector<double> lengths_d;

  std::once_flag once[5];
  std::unique_ptr<Frames<R1>> f1;
  std::unique_ptr<Frames<R2>> f2;
  std::unique_ptr<Frames<R3>> f3;
  std::unique_ptr<Frames<R4>> f4;
  std::unique_ptr<Frames<R5>> f5;

  template <class T>
  std::unique_ptr<Frames<T>> build_frames() const {
    auto fr = std::make_unique<Frames<T>>();
    const int nt = s->num_triangles();
    const int nh = s->num_half_edges();
    fr->len.resize(nh);
    for (int h = 0; h < nh; ++h) fr->len[h] = T(lengths[s->edge_of(h)]);
    fr->vert.resize(nt);
    fr->side.resize(nt);
    for (int t = 0; t < nt; ++t) {
      const T& c = fr->len[3 * t];
      const T& a = fr->len[3 * t + 1];
      const T& b = fr->len[3 * t + 2];
      T th = corner_angle(a, b, c);
      fr->vert[t][0] = {T(0), T(0), T(1)};
      fr->vert[t][1] = {sinh(c), T(0), cosh(c)};
      fr->vert[t][2] = {sinh(b) * cos(th), sinh(b) * sin(th), cosh(b)};
      for (int k = 0; k < 3; ++k) {
        V3<T> e = spacelike_unit(lcross(fr->vert[t][k], fr->vert[t][(k + 1) % 3]));
        if (dot(e, fr->vert[t][(k + 2) % 3]) < 0) e = scale(e, T(-1));
        fr->side[t][k] = e;
      }
    }
    fr->g.resize(nh);
    fr->ginv.resize(nh);
    for (int h = 0; h < nh; ++h) {
      int t = h / 3, i = h % 3;
      int hp = s->partner(h);
      int tp = hp / 3, j = hp % 3;
      M3<T> a = frame(fr->vert[t][i], fr->vert[t][(i + 1) % 3]);
      M3<T> b = frame(fr->vert[tp][(j + 1) % 3], fr->vert[tp][j]);
      fr->g[h] = mul(a, lorentz_inverse(b));
      fr->ginv[h] = lorentz_inverse(fr->g[h]);
    }
    return fr;
  }

  const Frames<R1>& frames(R1*) {
    std::call_once(once[0], [&] { f1 = build_frames<R1>(); });
    return *f1;
  }
  const Frames<R2>& frames(R2*) {
    std::call_once(once[1], [&] { f2 = build_frames<R2>(); });
    return *f2;
  }
  const Frames<R3>& frames(R3*) {
    std::call_once(once[2], [&] { f3 = build_frames<R3>(); });
    return *f3;
  }
  const Frames<R4>& frames(R4*) {
    std::call_once(once[3], [&] { f4 = build_frames<R4>(); });
    return *f4;
  }
  const Frames<R5>& frames(R5*) {
    std::call_once(once[4], [&] { f5 = build_frames<R5>(); });
    return *f5;
  }

  enum class Outcome { ok, trivial, imprecise };

  template <class T>
  Outcome trace(const EdgePath& path, int digits, Geodesic& out);
};

namespace {

struct Degenerate {};

template <class T>
int sign_checked(const T& v, const T& tol) {
  if (abs(v) < tol) throw Degenerate{};
  return v > 0 ? 1 : -1;
}

}  // namespace

template <class T>
Hyperbolic::Impl::Outcome Hyperbolic::Impl::trace(const EdgePath& path, int digits, Geodesic& out) {
  const Frames<T>& fr = frames(static_cast<T*>(nullptr));
  const T tol = pow(T(10), -digits / 3);
  const int n = static_cast<int>(path.size());
  const int t0 = Surface::triangle_of(path[0]);
  try {
    M3<T> m = identity<T>();
    for (int h : path) m = mul(m, fr.g[h]);
    T tr = m[0] + m[4] + m[8];
    if (tr < T(3) + tol) return Outcome::trivial;

    // Axis: kernel of m - I, Minkowski-unit spacelike.
    M3<T> a = m;
    a[0] -= 1;
    a[4] -= 1;
    a[8] -= 1;
    V3<T> best;
    T bestn = -1;
    for (int r = 0; r < 3; ++r) {
      int r2 = (r + 1) % 3;
      V3<T> x = {a[3 * r], a[3 * r + 1], a[3 * r + 2]};
      V3<T> y = {a[3 * r2], a[3 * r2 + 1], a[3 * r2 + 2]};
      V3<T> c = {x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]};
      T nn = c[0] * c[0] + c[1] * c[1] + c[2] * c[2];
      if (nn > bestn) {
        bestn = nn;
        best = c;
      }
    }
    V3<T> axis = spacelike_unit(best);

    // Foot of the perpendicular from the start triangle's centroid to the axis.
    const auto& v0 = fr.vert[t0];
    V3<T> cen = timelike_unit(V3<T>{v0[0][0] + v0[1][0] + v0[2][0], v0[0][1] + v0[1][1] + v0[2][1],
                                    v0[0][2] + v0[1][2] + v0[2][2]});
    V3<T> foot = cen;
    T d = dot(cen, axis);
    for (int i = 0; i < 3; ++i) foot[i] -= d * axis[i];
    foot = timelike_unit(foot);
    // Orient the axis along the translation (left side positive).
    if (dot(lcross(foot, act(m, foot)), axis) < 0) axis = scale(axis, T(-1));

    auto inside = [&](int t, const V3<T>& x) {
      for (int k = 0; k < 3; ++k)
        if (dot(fr.side[t][k], x) <= 0) return false;
      return true;
    };

    int t = t0;
    const int bound = 40 * n + 400;
    if (abs(dot(cen, axis)) > tol) {
      V3<T> seg = spacelike_unit(lcross(cen, foot));
      int entry = -1;
      int steps = 0;
      while (!inside(t, foot)) {
        if (++steps > bound) throw Degenerate{};
        int pick = -1;
        T pickd = 0;
        for (int k = 0; k < 3; ++k) {
          if (k == entry) continue;
          int s1 = sign_checked(dot(fr.vert[t][k], seg), tol);
          int s2 = sign_checked(dot(fr.vert[t][(k + 1) % 3], seg), tol);
          if (s1 == s2) continue;
          V3<T> y = timelike_unit(lcross(seg, fr.side[t][k]));
          T dd = -dot(y, foot);
          if (pick < 0 || dd < pickd) {
            pick = k;
            pickd = dd;
          }
        }
        if (pick < 0) throw Degenerate{};
        int h = Surface::half_edge(t, pick);
        foot = act(fr.ginv[h], foot);
        seg = act(fr.ginv[h], seg);
        axis = act(fr.ginv[h], axis);
        int hp = s->partner(h);
        t = Surface::triangle_of(hp);
        entry = Surface::side_of(hp);
      }
    }

    // Walk along the axis for one period.
    const int tstart = t;
    const V3<T> nstart = axis;
    V3<T> nc = axis;
    out.half_edges.clear();
    out.params.clear();
    int expected_entry = -1;
    for (int steps = 0;; ++steps) {
      if (steps > bound) throw Degenerate{};
      if (steps > 0 && t == tstart) {
        T diff = abs(nc[0] - nstart[0]) + abs(nc[1] - nstart[1]) + abs(nc[2] - nstart[2]);
        if (diff < tol) break;
      }
      int sg[3];
      for (int k = 0; k < 3; ++k) sg[k] = sign_checked(dot(fr.vert[t][k], nc), tol);
      int lone = -1;
      for (int k = 0; k < 3; ++k)
        if (sg[k] != sg[(k + 1) % 3] && sg[k] != sg[(k + 2) % 3]) lone = k;
      if (lone < 0) throw Degenerate{};
      int exit_side = sg[lone] > 0 ? (lone + 2) % 3 : lone;
      int entry_side = sg[lone] > 0 ? lone : (lone + 2) % 3;
      if (expected_entry >= 0 && entry_side != expected_entry) throw Degenerate{};
      int h = Surface::half_edge(t, exit_side);
      V3<T> y = timelike_unit(lcross(nc, fr.side[t][exit_side]));
      T sdist = acosh(-dot(fr.vert[t][exit_side], y));
      T u = sdist / fr.len[h];
      if (u <= 0 || u >= 1) throw Degenerate{};
      double ud = static_cast<double>(u);
      if (!s->is_lower(h)) ud = 1.0 - ud;
      out.half_edges.push_back(h);
      out.params.push_back(ud);
      nc = act(fr.ginv[h], nc);
      int hp = s->partner(h);
      t = Surface::triangle_of(hp);
      expected_entry = Surface::side_of(hp);
    }

    // Primitive iff the traced period has the full translation length.
    M3<T> m2 = identity<T>();
    for (int h : out.half_edges) m2 = mul(m2, fr.g[h]);
    T tr2 = m2[0] + m2[4] + m2[8];
    bool primitive = abs(tr2 - tr) < tol * (abs(tr) + 1);
    T len = acosh((tr - 1) / 2);
    out.length = static_cast<double>(len);
    out.precision_digits = digits;
    out.coords.assign(s->num_edges(), 0);
    for (int h : out.half_edges) out.coords[s->edge_of(h)]++;

    // Embedded iff no two chords inside a triangle interleave.
    bool embedded = true;
    {
      const int m = static_cast<int>(out.half_edges.size());
      struct Ch {
        double a, b;
      };
      std::vector<std::vector<Ch>> per(s->num_triangles());
      for (int k = 0; k < m; ++k) {
        int hin = s->partner(out.half_edges[(k + m - 1) % m]);
        int hout = out.half_edges[k];
        double pin = out.params[(k + m - 1) % m];
        double pout = out.params[k];
        auto along = [&](int h, double canon) { return s->is_lower(h) ? canon : 1.0 - canon; };
        double a = Surface::side_of(hin) + along(hin, pin);
        double b = Surface::side_of(hout) + along(hout, pout);
        if (a > b) std::swap(a, b);
        per[Surface::triangle_of(hout)].push_back({a, b});
      }
      for (auto& v : per)
        for (size_t i = 0; i < v.size() && embedded; ++i)
          for (size_t j = i + 1; j < v.size(); ++j) {
            bool in1 = v[j].a > v[i].a && v[j].a < v[i].b;
            bool in2 = v[j].b > v[i].a && v[j].b < v[i].b;
            if (in1 != in2) {
              embedded = false;
              break;
            }
          }
    }
    out.simple = embedded && primitive;
    return Outcome::ok;
  } catch (const Degenerate&) {
    return Outcome::imprecise;
  } catch (const std::domain_error&) {
    return Outcome::imprecise;
  }
}

Hyperbolic::Hyperbolic(const Surface& s, unsigned seed) : impl_(std::make_unique<Impl>()) {
  impl_->s = &s;
  const int ne = s.num_edges();
  std::mt19937 rng(seed);
  std::vector<long long> num(ne);
  // Ratios 1 + k / 2^22 with k < 2^20 are exact in every precision.
  for (int e = 0; e < ne; ++e) num[e] = static_cast<long long>(rng() >> 12);

  auto ratio = [&](int e) { return Top(1) + Top(num[e]) / Top(4194304); };
  const Top two_pi = 2 * boost::math::constants::pi<Top>();
  auto total_angle = [&](const Top& sc) {
    Top sum = 0;
    for (int t = 0; t < s.num_triangles(); ++t) {
      Top l[3];
      for (int k = 0; k < 3; ++k) l[k] = sc * ratio(s.edge_of(3 * t + k));
      // Corner k sits between sides k - 1 and k and faces side k + 1.
      for (int k = 0; k < 3; ++k) sum += corner_angle(l[(k + 1) % 3], l[(k + 2) % 3], l[k]);
    }
    return sum - two_pi;
  };
  // Angle sum decreases from pi * F to 0 as the scale grows.
  double lo = 1e-3, hi = 50.0;
  for (int it = 0; it < 80; ++it) {
    double mid = 0.5 * (lo + hi);
    if (static_cast<double>(total_angle(Top(mid))) > 0)
      lo = mid;
    else
      hi = mid;
  }
  Top x0 = Top(lo), x1 = Top(hi);
  Top f0 = total_angle(x0), f1 = total_angle(x1);
  const Top eps = pow(Top(10), -690);
  for (int it = 0; it < 60 && abs(f1) > eps; ++it) {
    Top x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
    x0 = x1;
    f0 = f1;
    x1 = x2;
    f1 = total_angle(x1);
  }
  ensure(abs(f1) < pow(Top(10), -600), "cone angle solve did not converge");
  impl_->lengths.resize(ne);
  impl_->lengths_d.resize(ne);
  for (int e = 0; e < ne; ++e) {
    Top l = x1 * ratio(e);
    impl_->lengths[e] = l.str(700, std::ios_base::scientific);
    impl_->lengths_d[e] = static_cast<double>(l);
  }
}

Hyperbolic::~Hyperbolic() = default;

double Hyperbolic::edge_length(int e) const { return impl_->lengths_d[e]; }

double Hyperbolic::holonomy_trace(const EdgePath& path) const {
  const auto& fr = impl_->frames(static_cast<R1*>(nullptr));
  M3<R1> m = identity<R1>();
  for (int h : path) m = mul(m, fr.g[h]);
  return static_cast<double>(m[0] + m[4] + m[8]);
}

std::optional<Geodesic> Hyperbolic::straighten(const EdgePath& input) const {
  const Surface& s = *impl_->s;
  EdgePath path = reduce_path(s, input, true);
  if (path.empty()) return std::nullopt;
  if (s.group().is_trivial_loop(s.word_of(path))) return std::nullopt;

  // Precision from the growth of the developing map, measured in long double.
  long double maxlog = 0;
  {
    const auto& fr = impl_->frames(static_cast<R1*>(nullptr));
    std::array<long double, 9> m{}, g{};
    for (int i = 0; i < 9; ++i) m[i] = (i % 4 == 0) ? 1 : 0;
    for (int h : path) {
      for (int i = 0; i < 9; ++i) g[i] = static_cast<long double>(fr.g[h][i]);
      std::array<long double, 9> c{};
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          c[3 * i + j] = m[3 * i] * g[j] + m[3 * i + 1] * g[3 + j] + m[3 * i + 2] * g[6 + j];
      m = c;
      long double nrm = 0;
      for (auto v : m) nrm = std::max(nrm, std::fabs(v));
      maxlog = std::max(maxlog, std::log10(nrm));
    }
  }
  const int need = static_cast<int>(4 * maxlog) + 30;
  Geodesic g;
  for (int tier = 0; tier < 5; ++tier) {
    const int digits = kTierDigits[tier];
    if (digits < need && tier < 4) continue;
    Impl::Outcome r;
    switch (tier) {
      case 0: r = impl_->trace<R1>(path, digits, g); break;
      case 1: r = impl_->trace<R2>(path, digits, g); break;
      case 2: r = impl_->trace<R3>(path, digits, g); break;
      case 3: r = impl_->trace<R4>(path, digits, g); break;
      default: r = impl_->trace<R5>(path, digits, g); break;
    }
    if (r == Impl::Outcome::ok) return g;
    ensure(r != Impl::Outcome::trivial, "non-trivial loop with non-hyperbolic holonomy");
  }
  throw InvariantViolation("geodesic straightening failed at maximum precision");
}

std::shared_ptr<const Geodesic> Hyperbolic::cached(const std::vector<int>& coords) const {
  std::lock_guard<std::mutex> lk(mu_);
  auto it = cache_.find(coords);
  if (it == cache_.end()) return nullptr;
  return it->second;
}

std::shared_ptr<const Geodesic> Hyperbolic::store(Geodesic g) const {
  std::lock_guard<std::mutex> lk(mu_);
  auto it = cache_.find(g.coords);
  if (it != cache_.end()) return it->second;
  auto p = std::make_shared<const Geodesic>(std::move(g));
  cache_.emplace(p->coords, p);
  return p;
}

}  // namespace torelli
