#include "torelli/surface.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "torelli/error.hpp"
#include "torelli/hyperbolic.hpp"
#include "torelli/normal.hpp"

namespace torelli {

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

Surface::~Surface() = default;

std::shared_ptr<const Surface> Surface::build(int genus) {
  require(genus >= 2 && genus <= 12, "genus must be between 2 and 12");
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const Surface>> built;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = built[genus];
  if (!slot) slot = construct(genus);
  return slot;
}

std::shared_ptr<const Surface> Surface::construct(int genus) {
  std::shared_ptr<Surface> s(new Surface());
  s->genus_ = genus;
  const int n = 4 * genus;
  const int nt = n - 2;
  s->gluing_.assign(3 * nt, -1);
  s->letter_.assign(3 * nt, 0);

  auto polygon_half = [&](int k) {
    if (k == 0) return half_edge(0, 0);
    if (k == n - 1) return half_edge(nt - 1, 2);
    return half_edge(k - 1, 1);
  };
  auto glue = [&](int h1, int h2) {
    s->gluing_[h1] = h2;
    s->gluing_[h2] = h1;
  };
  for (int t = 0; t + 1 < nt; ++t) glue(half_edge(t, 2), half_edge(t + 1, 0));
  for (int i = 0; i < genus; ++i) {
    int ha = polygon_half(4 * i), hb = polygon_half(4 * i + 1);
    int ha2 = polygon_half(4 * i + 2), hb2 = polygon_half(4 * i + 3);
    glue(ha, ha2);
    glue(hb, hb2);
    s->letter_[ha] = 2 * i + 1;
    s->letter_[ha2] = -(2 * i + 1);
    s->letter_[hb] = 2 * i + 2;
    s->letter_[hb2] = -(2 * i + 2);
  }
  s->finish_combinatorics();
  s->geometry_ = std::make_unique<Hyperbolic>(*s, 0x5eed0000u + static_cast<unsigned>(genus));
  s->compute_basis();
  std::ostringstream key;
  key << "torelli-surface/1;g=" << genus << ";gluing=";
  for (int h : s->gluing_) key << h << ',';
  s->hash_ = fnv1a_hex(key.str());
  return s;
}

void Surface::finish_combinatorics() {
  const int nh = num_half_edges();
  edge_.assign(nh, -1);
  lower_.clear();
  for (int h = 0; h < nh; ++h) {
    ensure(gluing_[h] >= 0 && gluing_[h] != h && gluing_[gluing_[h]] == h, "gluing is not an involution");
    if (edge_[h] >= 0) continue;
    edge_[h] = edge_[gluing_[h]] = static_cast<int>(lower_.size());
    lower_.push_back(h);
  }
  // One vertex: all corners glue into a single class.
  {
    std::vector<int> parent(nh);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (int h = 0; h < nh; ++h) {
      int hp = gluing_[h];
      int start = h, end = half_edge(triangle_of(h), side_of(h) + 1);
      int pstart = hp, pend = half_edge(triangle_of(hp), side_of(hp) + 1);
      parent[find(start)] = find(pend);
      parent[find(end)] = find(pstart);
    }
    int classes = 0;
    for (int h = 0; h < nh; ++h) classes += find(h) == h;
    ensure(classes == 1, "triangulation has more than one vertex");
  }
  ensure(num_edges() == 6 * genus_ - 3 && num_triangles() == 4 * genus_ - 2, "Euler characteristic mismatch");

  // Vertex link read in the generators is the relator.
  Word rel;
  int h = 0;
  for (int k = 0; k < nh; ++k) {
    if (letter_[h] != 0) rel.push_back(letter_[h]);
    int hp = gluing_[h];
    h = half_edge(triangle_of(hp), side_of(hp) + 1);
  }
  ensure(h == 0, "vertex link did not close");
  ensure(static_cast<int>(rel.size()) == 4 * genus_, "relator has wrong length");
  group_ = SurfaceGroup(2 * genus_, rel);
}

Word Surface::word_of(const std::vector<int>& half_edges) const {
  Word w;
  for (int h : half_edges)
    if (letter_[h] != 0) w.push_back(letter_[h]);
  return w;
}

std::vector<int> Surface::symplectic_coordinates(const std::vector<int>& z) const {
  const int n = 2 * genus_;
  std::vector<int> out(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i] += to_symplectic_[i][j] * z[j];
  return out;
}

namespace {

// Path of exit half-edges inside the dual tree from triangle a to triangle b.
EdgePath tree_path(const Surface& s, int a, int b) {
  const int nt = s.num_triangles();
  std::vector<int> via(nt, -2);
  via[a] = -1;
  std::deque<int> q{a};
  while (!q.empty()) {
    int t = q.front();
    q.pop_front();
    for (int k = 0; k < 3; ++k) {
      int h = Surface::half_edge(t, k);
      if (!s.is_tree_edge(s.edge_of(h))) continue;
      int u = Surface::triangle_of(s.partner(h));
      if (via[u] != -2) continue;
      via[u] = h;
      q.push_back(u);
    }
  }
  EdgePath p;
  for (int t = b; t != a;) {
    int h = via[t];
    p.push_back(h);
    t = Surface::triangle_of(h);
  }
  std::reverse(p.begin(), p.end());
  return p;
}

}  // namespace

void Surface::compute_basis() {
  const int n = 2 * genus_;
  std::vector<EdgePath> loops(n);
  for (int h = 0; h < num_half_edges(); ++h) {
    Letter x = letter_[h];
    if (x <= 0) continue;
    EdgePath p{h};
    EdgePath back = tree_path(*this, triangle_of(gluing_[h]), triangle_of(h));
    p.insert(p.end(), back.begin(), back.end());
    loops[x - 1] = p;
  }
  gen_form_.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gen_form_[i][j] = algebraic_intersection(*this, loops[i], loops[j]);

  // Symplectic basis among signed generator loops: pair each unused loop with a unit partner.
  std::vector<int> used(n, 0);
  std::vector<std::pair<int, int>> order;  // (generator, sign)
  for (int i = 0; i < n; ++i) {
    if (used[i]) continue;
    int partner = -1;
    for (int j = 0; j < n; ++j)
      if (!used[j] && j != i && std::abs(gen_form_[i][j]) == 1) {
        bool clean = true;
        for (auto [k, sg] : order) clean = clean && gen_form_[i][k] == 0 && gen_form_[j][k] == 0;
        if (clean) {
          partner = j;
          break;
        }
      }
    ensure(partner >= 0, "generator loops do not form a symplectic basis");
    used[i] = used[partner] = 1;
    order.push_back({i, 1});
    order.push_back({partner, gen_form_[i][partner]});
  }
  // Basis vector b_m = sign_m * gamma_{gen_m}; coordinates invert the signed permutation.
  to_symplectic_.assign(n, std::vector<int>(n, 0));
  for (int m = 0; m < n; ++m) to_symplectic_[m][order[m].first] = order[m].second;
  for (int m = 0; m < n; ++m)
    for (int l = 0; l < n; ++l) {
      int want = (l == (m ^ 1)) ? (m % 2 == 0 ? 1 : -1) : 0;
      int got = order[m].second * order[l].second * gen_form_[order[m].first][order[l].first];
      ensure(got == want, "symplectic basis check failed");
    }

  basis_coords_.clear();
  basis_dirs_.clear();
  for (int m = 0; m < n; ++m) {
    auto g = geometry_->straighten(loops[order[m].first]);
    ensure(g && g->simple, "basis loop is not simple");
    geometry_->store(align_to_trace(*this, *g, nullptr));
    TracedCurve c = trace_single(*this, g->coords);
    std::vector<int> z = generator_counts(*this, c.exits);
    std::vector<int> sym = symplectic_coordinates(z);
    int dir = 0;
    for (int l = 0; l < n; ++l) {
      if (l == m) {
        dir = sym[l];
      } else {
        ensure(sym[l] == 0, "basis curve has unexpected homology");
      }
    }
    ensure(dir == 1 || dir == -1, "basis curve is not primitive");
    basis_coords_.push_back(g->coords);
    basis_dirs_.push_back(dir);
  }
}

bool is_valid_edge_path(const Surface& s, const EdgePath& p) {
  if (p.empty()) return true;
  for (size_t k = 0; k < p.size(); ++k) {
    int h = p[k], nxt = p[(k + 1) % p.size()];
    if (h < 0 || h >= s.num_half_edges()) return false;
    if (Surface::triangle_of(s.partner(h)) != Surface::triangle_of(nxt)) return false;
  }
  return true;
}

EdgePath reverse_path(const Surface& s, const EdgePath& p) {
  EdgePath r;
  for (auto it = p.rbegin(); it != p.rend(); ++it) r.push_back(s.partner(*it));
  return r;
}

EdgePath reduce_path(const Surface& s, const EdgePath& p, bool cyclic) {
  EdgePath out;
  for (int h : p) {
    if (!out.empty() && out.back() == s.partner(h))
      out.pop_back();
    else
      out.push_back(h);
  }
  if (cyclic) {
    size_t lo = 0, hi = out.size();
    while (hi - lo >= 2 && out[hi - 1] == s.partner(out[lo])) {
      ++lo;
      --hi;
    }
    out = EdgePath(out.begin() + lo, out.begin() + hi);
  }
  return out;
}

}  // namespace torelli
