// Acceptance suite. Prints one PASS/FAIL line per criterion.
//
// Exit status: 0 when every criterion has its pinned expected outcome (see kExpectedFail),
// 1 otherwise, 2 on a harness error. Criterion 8 is expected to fail: order (w,x,y,z)
// 4-joints occur in the genus-3 census.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "torelli/classification.hpp"
#include "torelli/error.hpp"
#include "torelli/homology.hpp"
#include "torelli/joints.hpp"
#include "torelli/paths.hpp"
#include "torelli/serialization.hpp"

using namespace torelli;

namespace {

// Census bounds and sample sizes.
constexpr int kJointWeightG3 = 28;
constexpr int kSepWeightG3 = 24;
constexpr int kSepWeightG4 = 28;
constexpr int kMinSurgerPairs = 200;
constexpr int kSepPathPairs = 120;   // criterion asks for >= 100
constexpr int kRefinePaths = 60;     // >= 50
constexpr int kBpTriples = 300;      // >= 100
constexpr int kMaxBpK = 10;
constexpr int kOraclePairs = 1000;
constexpr int kOracleOrders = 2;     // random bigon orders per pair
constexpr unsigned kSeed = 20240601;

const std::set<int> kExpectedFail = {8};

struct Result {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... xs) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, xs...);
  return buf;
}

const std::vector<Joint>& g3_joints() {
  static auto j = joint_census(fixtures::g3(), kJointWeightG3);
  return j;
}

bool zero(const HomologyVector& h) {
  for (int x : h)
    if (x) return false;
  return true;
}

Result parity() {
  std::map<int, int> by_k;
  int odd = 0;
  for (const auto& j : g3_joints()) {
    ++by_k[j.k];
    odd += j.k % 2 != 0;
  }
  std::ostringstream os;
  os << g3_joints().size() << " joints, odd " << odd << ", by k:";
  for (auto [k, n] : by_k) os << " " << k << ":" << n;
  return {odd == 0 && !g3_joints().empty(), os.str()};
}

Result separation_agrees() {
  int n = 0, bad = 0, sep = 0;
  for (const auto& s : {fixtures::g3(), fixtures::g4()}) {
    const auto& cs = census(s, s->genus() == 3 ? kJointWeightG3 : 20);
    for (const auto& c : cs) {
      // cut_along counts components; homology is an independent integer computation.
      bool topo = cut_along({c}).size() == 2;
      bool hom = zero(homology_class({c, 1}));
      bad += topo != hom || classify_curve(c).separating != topo;
      sep += topo;
      ++n;
    }
  }
  return {bad == 0, fmt("%d curves (genus 3 and 4), %d separating, %d disagreements", n, sep, bad)};
}

std::vector<std::pair<CurveClass, CurveClass>> sep_pairs(int lo, int hi) {
  const auto& cs = separating_census(fixtures::g3(), kSepWeightG3);
  std::vector<std::pair<CurveClass, CurveClass>> out;
  for (size_t i = 0; i < cs.size(); ++i)
    for (size_t k = 0; k < cs.size(); ++k) {
      if (i == k) continue;
      int n = intersection_number(cs[i], cs[k]);
      if (n >= lo && n <= hi) out.push_back({cs[i], cs[k]});
    }
  return out;
}

Result surger_contract() {
  auto pairs = sep_pairs(6, 12);
  std::mt19937_64 rng(kSeed);
  int bad = 0;
  for (const auto& [a, b] : pairs) {
    int iab = intersection_number(a, b);
    CurveClass c;
    try {
      c = surger_once(a, b);
    } catch (const std::exception& e) {
      ++bad;
      continue;
    }
    int iac = oracle::random_order_intersection(a, c, rng);
    int icb = oracle::random_order_intersection(c, b, rng);
    bool ok = iac <= 4 && icb < iab && cut_along({c}).size() == 2 && zero(homology_class({c, 1})) &&
              is_essential(*c.surface_ptr(), trace(c));
    bad += !ok;
  }
  int n = static_cast<int>(pairs.size());
  return {n >= kMinSurgerPairs && bad == 0, fmt("%d ordered pairs with 6 <= i <= 12, %d violations", n, bad)};
}

Result sep_path_end_to_end() {
  const auto& cs = separating_census(fixtures::g3(), kSepWeightG3);
  std::mt19937_64 rng(kSeed + 1);
  std::uniform_int_distribution<size_t> pick(0, cs.size() - 1);
  int bad = 0, too_long = 0, max_i = 0;
  for (int t = 0; t < kSepPathPairs; ++t) {
    const auto& a = cs[pick(rng)];
    const auto& b = cs[pick(rng)];
    int i = intersection_number(a, b);
    max_i = std::max(max_i, i);
    try {
      Json cert = Json::parse(sep_path_to_json(sep_path(a, b)).dump());
      bad += !verify_certificate(cert).empty();
      bool ends = cert["vertices"].front()["coords"] == a.coords() && cert["vertices"].back()["coords"] == b.coords();
      bad += !ends;
      too_long += static_cast<int>(cert["vertices"].size()) - 1 > 2 + i / 2;
    } catch (const std::exception&) {
      ++bad;
    }
  }
  return {bad == 0 && too_long == 0,
          fmt("%d random pairs (max i = %d), %d failed verification, %d over 2 + i/2 edges", kSepPathPairs, max_i, bad,
              too_long)};
}

Result refine_genus1() {
  auto s = fixtures::g4();
  const auto& cs = separating_census(s, kSepWeightG4);
  const int n = static_cast<int>(cs.size());
  std::vector<int> genus(n);
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i) genus[i] = min_side_genus(cs[i]);
  for (int i = 0; i < n; ++i)
    for (int k = i + 1; k < n; ++k)
      if (are_disjoint(cs[i], cs[k])) adj[i].push_back(k), adj[k].push_back(i);
  std::vector<int> high;
  for (int i = 0; i < n; ++i)
    if (genus[i] > 1 && !adj[i].empty()) high.push_back(i);
  if (high.empty()) return {false, "no genus-2 census curve with a disjoint neighbour"};

  std::mt19937_64 rng(kSeed + 2);
  auto rnd = [&](size_t m) { return std::uniform_int_distribution<size_t>(0, m - 1)(rng); };
  // Random walk from v until it reaches a genus-1 curve.
  auto walk_out = [&](int v, std::vector<int>& w) {
    for (int step = 0; step < 12; ++step) {
      v = adj[v][rnd(adj[v].size())];
      w.push_back(v);
      if (genus[v] == 1) return true;
    }
    return false;
  };

  int built = 0, bad = 0, not_decreasing = 0, high_total = 0;
  for (int attempt = 0; built < kRefinePaths && attempt < 50 * kRefinePaths; ++attempt) {
    int m = high[rnd(high.size())];
    std::vector<int> left, right;
    if (!walk_out(m, left) || !walk_out(m, right)) continue;
    SepPathCert p;
    for (auto it = left.rbegin(); it != left.rend(); ++it) p.vertices.push_back(cs[*it]);
    p.vertices.push_back(cs[m]);
    for (int v : right) p.vertices.push_back(cs[v]);
    p.steps.assign(p.vertices.size() - 1, 0);
    if (!check_sep_path(p).empty()) continue;
    ++built;
    try {
      std::vector<int> counts;
      SepPathCert q = genus1_refine(p, &counts);
      high_total += counts.front();
      bool ok = check_sep_path(q).empty() && q.vertices.front() == p.vertices.front() &&
                q.vertices.back() == p.vertices.back();
      for (const auto& v : q.vertices) ok = ok && min_side_genus(v) == 1;
      bad += !ok;
      for (size_t k = 1; k < counts.size(); ++k) not_decreasing += counts[k] >= counts[k - 1];
      not_decreasing += counts.back() != 0;
    } catch (const std::exception&) {
      ++bad;
    }
  }
  return {built >= 50 && bad == 0 && not_decreasing == 0,
          fmt("%d genus-4 paths through %d genus-2 vertices, %d bad outputs, %d non-decreasing iterations", built,
              high_total, bad, not_decreasing)};
}

Result bp_paths() {
  std::vector<const Joint*> pool;
  for (const auto& j : g3_joints())
    if (j.k <= kMaxBpK) pool.push_back(&j);
  std::shuffle(pool.begin(), pool.end(), std::mt19937_64(kSeed + 3));
  if (pool.size() > kBpTriples) pool.resize(kBpTriples);
  int bad = 0, bad_step = 0;
  for (const Joint* j : pool) {
    try {
      BpPathCert p = bp_short_path(j->base, j->arms[0], j->arms[1]);
      Json cert = Json::parse(bp_path_to_json(p).dump());
      bad += !verify_certificate(cert).empty();
      for (size_t k = 0; k + 1 < p.vertices.size(); ++k) {
        int st = intersection_number(p.vertices[k], p.vertices[k + 1]);
        bad_step += st != 0 && st != 2 && st != 4;
      }
    } catch (const std::exception&) {
      ++bad;
    }
  }
  int n = static_cast<int>(pool.size());
  return {n >= 100 && bad == 0 && bad_step == 0,
          fmt("%d triples with i(b,c) <= %d, %d failed verification, %d steps outside {0,2,4}", n, kMaxBpK, bad, bad_step)};
}

Result two_joints() {
  int n = 0, bad = 0;
  for (const auto& j : g3_joints()) {
    if (j.k != 2) continue;
    ++n;
    try {
      JointReport r = analyze_two_joint(j);
      bool ok = r.boundaries.size() == 4 && r.neighborhood.genus == 0;
      for (const auto& b : r.boundaries) ok = ok && b.circle.essential && b.circle.curve;
      const auto& d11 = r.boundary("D11").circle;
      ok = ok && d11.curve && zero(homology_class(*d11.curve)) && check_joint_report(r).empty();
      bad += !ok;
    } catch (const std::exception&) {
      ++bad;
    }
  }
  return {n > 0 && bad == 0, fmt("%d census 2-joints, %d violations", n, bad)};
}

Result four_joints() {
  int n = 0, type1 = 0, type2 = 0, bad = 0;
  for (const auto& j : g3_joints()) {
    if (j.k != 4) continue;
    ++n;
    try {
      JointReport r = analyze_four_joint(j);
      if (r.boundaries.size() != 6) {
        ++bad;
      } else if (r.order_type == 1) {
        ++type1;
      } else {
        ++type2;
        HomologyVector h4(2 * j.base.surface().genus(), 0), h5 = h4;
        for (const auto& b : r.boundaries) {
          if (!b.circle.curve) continue;
          if (b.label == "D4") h4 = homology_class(*b.circle.curve);
          if (b.label == "D5") h5 = homology_class(*b.circle.curve);
        }
        bad += !zero(h4) || !zero(h5) || !check_joint_report(r).empty();
      }
    } catch (const std::exception&) {
      ++bad;
    }
  }
  return {n > 0 && type1 == 0 && bad == 0,
          fmt("%d census 4-joints: %d of order (w,x,y,z), %d of order (w,z,y,x), %d other violations", n, type1, type2,
              bad)};
}

Result torelli_matrices() {
  auto s = fixtures::g3();
  int sep = 0, bp = 0, nonsep = 0, bad = 0;
  for (const auto& c : separating_census(s, kSepWeightG3)) {
    ++sep;
    bad += !word_matrix({{{{c, 1}, 1}}}, 3).is_identity();
  }
  for (const auto& base : basis_curves(s))
    for (const auto& c : bounding_pair_arms(base.curve, kJointWeightG3)) {
      ++bp;
      SymplecticMatrix m = word_matrix(bounding_pair_map(base.curve, c), 3);
      bad += !m.is_identity() || !is_symplectic(m);
    }
  for (const auto& c : census(s, 20)) {
    if (is_null_homologous(c)) continue;
    ++nonsep;
    SymplecticMatrix m = word_matrix({{{{c, 1}, 1}}}, 3);
    bad += m.is_identity() || !is_symplectic(m);
  }
  return {bad == 0 && sep > 0 && bp > 0 && nonsep > 0,
          fmt("%d separating twists, %d bounding-pair maps, %d nonseparating twists, %d wrong", sep, bp, nonsep, bad)};
}

Result oracle_equivalence() {
  const auto& cs = census(fixtures::g3(), 24);
  std::mt19937_64 rng(kSeed + 4);
  std::uniform_int_distribution<size_t> pick(0, cs.size() - 1);
  int bad = 0, reduced = 0;
  for (int t = 0; t < kOraclePairs; ++t) {
    const auto& a = cs[pick(rng)];
    const auto& b = cs[pick(rng)];
    int i = intersection_number(a, b);
    for (int k = 0; k < kOracleOrders; ++k) bad += oracle::random_order_intersection(a, b, rng) != i;
    if (!(a == b)) reduced += Diagram::from_traced(a.surface_ptr(), {trace(a), trace(b)}).crossing_count(0, 1) > i;
  }
  return {bad == 0, fmt("%d census pairs x %d random orders, %d disagreements (%d pairs needed bigon removal)",
                        kOraclePairs, kOracleOrders, bad, reduced)};
}

}  // namespace

int main() {
  std::vector<std::pair<int, Result (*)()>> criteria = {
      {1, parity},       {2, separation_agrees}, {3, surger_contract}, {4, sep_path_end_to_end},
      {5, refine_genus1}, {6, bp_paths},          {7, two_joints},      {8, four_joints},
      {9, torelli_matrices}, {10, oracle_equivalence},
  };
  int unexpected = 0;
  auto start = std::chrono::steady_clock::now();
  for (auto [id, f] : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Result r;
    try {
      r = f();
    } catch (const std::exception& e) {
      std::printf("criterion %d: harness error: %s\n", id, e.what());
      return 2;
    }
    double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool expected_fail = kExpectedFail.count(id) > 0;
    std::printf("criterion %d: %s  %s  [%.1f s]%s\n", id, r.pass ? "PASS" : "FAIL", r.detail.c_str(), sec,
                !r.pass && expected_fail ? "  (expected)" : "");
    std::fflush(stdout);
    unexpected += r.pass == expected_fail;
  }
  double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("total %.1f s, %d unexpected outcomes\n", total, unexpected);
  return unexpected ? 1 : 0;
}
