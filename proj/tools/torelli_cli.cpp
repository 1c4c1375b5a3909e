// Command-line front end. Every invocation prints one JSON document on stdout:
//   {"status": ..., "payload": ..., "error": ..., "timing_ms": ...}
// and exits 0 iff the status is "ok".

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "torelli/census.hpp"
#include "torelli/error.hpp"
#include "torelli/homology.hpp"
#include "torelli/intersection.hpp"
#include "torelli/joints.hpp"
#include "torelli/paths.hpp"
#include "torelli/serialization.hpp"

using namespace torelli;

namespace {

struct Options {
  int genus = 3;
  std::string surface, from, to, base, cert, out, check = "parity";
  int max_weight = 12;
  unsigned long long seed = 1;
  int sample = 0;
};

// Raised by commands that produce a payload but must report a non-ok status.
struct Failure {
  std::string status, error;
  Json payload;
};

Json read_json(const std::string& path, const char* flag) {
  if (path.empty()) throw PreconditionError(std::string("missing required flag --") + flag);
  std::ifstream in(path);
  if (!in) throw PreconditionError(std::string("--") + flag + ": cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw PreconditionError(std::string("--") + flag + ": " + path + ": " + e.what());
  }
}

// Prefixes a parse error with the flag and file it came from.
template <class F>
auto located(const std::string& path, const char* flag, F&& f) {
  try {
    return f(read_json(path, flag));
  } catch (const PreconditionError& e) {
    std::string msg = e.what();
    if (msg.rfind("--", 0) == 0) throw;
    throw PreconditionError(std::string("--") + flag + ": " + path + ": " + msg);
  }
}

SurfacePtr load_surface(const Options& o) {
  return located(o.surface, "surface", [](const Json& j) { return surface_from_json(j); });
}

CurveClass load_curve(const SurfacePtr& s, const std::string& path, const char* flag) {
  return located(path, flag, [&](const Json& j) { return curve_from_json(s, j); });
}

OrientedCurve load_oriented(const SurfacePtr& s, const std::string& path, const char* flag) {
  return located(path, flag, [&](const Json& j) { return oriented_from_json(s, j); });
}

// status=ok payloads must pass the standalone verifier before they are emitted.
Json verified(Json cert) {
  std::string msg = verify_certificate(cert);
  if (!msg.empty()) throw Failure{"invariant-violation", msg, cert};
  return cert;
}

Json side_genera(const SeparationReport& r) {
  return r.side_genera ? Json{r.side_genera->first, r.side_genera->second} : Json(nullptr);
}

Json cmd_gen_surface(const Options& o) { return surface_to_json(*Surface::build(o.genus)); }

Json cmd_classify(const Options& o) {
  auto s = load_surface(o);
  auto c = load_curve(s, o.from, "from");
  auto r = classify_curve(c);
  return {{"curve", curve_to_json(c)},
          {"weight", c.weight()},
          {"separating", r.separating},
          {"null_homologous", is_null_homologous(c)},
          {"homology", homology_class({c, 1})},
          {"side_genera", side_genera(r)}};
}

Json cmd_intersect(const Options& o) {
  auto s = load_surface(o);
  auto a = load_oriented(s, o.from, "from");
  auto b = load_oriented(s, o.to, "to");
  return {{"geometric", intersection_number(a.curve, b.curve)}, {"algebraic", algebraic_intersection(a, b)}};
}

Json cmd_bp_check(const Options& o) {
  auto s = load_surface(o);
  auto a = load_curve(s, o.from, "from");
  auto b = load_curve(s, o.to, "to");
  auto bp = is_bounding_pair(a, b);
  Json j = {{"bounding_pair", bp.has_value()}};
  if (bp) j["pair"] = bounding_pair_to_json(*bp);
  return j;
}

Json cmd_joint(const Options& o) {
  auto s = load_surface(o);
  auto a = load_curve(s, o.base, "base");
  auto b = load_curve(s, o.from, "from");
  auto c = load_curve(s, o.to, "to");
  Joint j = classify_joint(a, b, c);
  return {{"k", j.k}, {"base", curve_to_json(a)}, {"arms", {curve_to_json(b), curve_to_json(c)}}};
}

Json cmd_sep_path(const Options& o) {
  auto s = load_surface(o);
  auto a = load_curve(s, o.from, "from");
  auto b = load_curve(s, o.to, "to");
  return verified(sep_path_to_json(sep_path(a, b)));
}

Json cmd_bp_path(const Options& o) {
  auto s = load_surface(o);
  auto a = load_curve(s, o.base, "base");
  auto b = load_curve(s, o.from, "from");
  auto c = load_curve(s, o.to, "to");
  return verified(bp_path_to_json(bp_short_path(a, b, c)));
}

Json cmd_refine_genus1(const Options& o) {
  SepPathCert p;
  if (!o.cert.empty()) {
    Json j = read_json(o.cert, "cert");
    int g = j.value("genus", 0);
    if (g < 2 || g > 12) throw PreconditionError("--cert: field 'genus' must be between 2 and 12");
    p = located(o.cert, "cert", [&](const Json& d) { return sep_path_from_json(Surface::build(g), d); });
    std::string msg = check_sep_path(p);
    if (!msg.empty()) throw Failure{"invariant-violation", "input path: " + msg, j};
  } else {
    auto s = load_surface(o);
    p = sep_path(load_curve(s, o.from, "from"), load_curve(s, o.to, "to"));
  }
  std::vector<int> counts;
  Json cert = verified(sep_path_to_json(genus1_refine(p, &counts)));
  cert["high_genus_counts"] = counts;
  return cert;
}

Json cmd_analyze_joint(const Options& o) {
  auto s = load_surface(o);
  auto a = load_curve(s, o.base, "base");
  auto b = load_curve(s, o.from, "from");
  auto c = load_curve(s, o.to, "to");
  JointReport r = analyze_joint(classify_joint(a, b, c));
  Json cert = joint_report_to_json(r);
  if (r.outcome == JointOutcome::forbidden_configuration)
    throw Failure{"invariant-violation", check_joint_report(r), cert};
  return verified(cert);
}

Json cmd_enclose(const Options& o) {
  auto s = load_surface(o);
  auto a = load_curve(s, o.from, "from");
  std::vector<CurveClass> avoid;
  if (!o.to.empty()) avoid.push_back(load_curve(s, o.to, "to"));
  CurveClass e = find_enclosing_torus(a, avoid);
  return {{"curve", curve_to_json(e)}, {"side_genera", side_genera(classify_curve(e))}};
}

Json cmd_twist_matrix(const Options& o) {
  auto s = load_surface(o);
  Json j = read_json(o.from, "from");
  TwistWord w;
  if (j.contains("letters")) {
    w = located(o.from, "from", [&](const Json& d) { return twist_word_from_json(s, d); });
  } else if (!o.to.empty()) {
    w = bounding_pair_map(load_curve(s, o.from, "from"), load_curve(s, o.to, "to"));
  } else {
    w.letters.push_back({load_oriented(s, o.from, "from"), 1});
  }
  SymplecticMatrix m = word_matrix(w, s->genus());
  return {{"word", twist_word_to_json(w)},
          {"matrix", matrix_to_json(m)},
          {"symplectic", is_symplectic(m)},
          {"torelli", m.is_identity()}};
}

Json cmd_census(const Options& o) {
  auto s = load_surface(o);
  if (o.max_weight < 1) throw PreconditionError("--max-weight must be positive");
  std::mt19937_64 rng(o.seed);
  Json out = {{"check", o.check}, {"max_weight", o.max_weight}};
  if (o.check == "parity") {
    auto joints = joint_census(s, o.max_weight);
    if (o.sample > 0 && o.sample < static_cast<int>(joints.size())) {
      std::shuffle(joints.begin(), joints.end(), rng);
      joints.resize(o.sample);
    }
    std::map<int, int> by_k;
    int odd = 0;
    for (const auto& j : joints) {
      ++by_k[j.k];
      odd += j.k % 2 != 0;
    }
    Json counts = Json::object();
    for (auto [k, n] : by_k) counts[std::to_string(k)] = n;
    out["joints"] = joints.size();
    out["counts_by_k"] = counts;
    out["odd"] = odd;
    if (odd) throw Failure{"invariant-violation", "joints with odd intersection number", out};
  } else if (o.check == "separation") {
    const auto& cs = census(s, o.max_weight);
    int sep = 0, disagree = 0;
    for (const auto& c : cs) {
      bool topo = classify_curve(c).separating;
      sep += topo;
      disagree += topo != is_null_homologous(c);
    }
    out["curves"] = cs.size();
    out["separating"] = sep;
    out["disagreements"] = disagree;
    if (disagree) throw Failure{"invariant-violation", "separation and null-homology disagree", out};
  } else if (o.check == "list" || o.check == "list-separating") {
    auto cs = o.check == "list" ? census(s, o.max_weight) : separating_census(s, o.max_weight);
    if (o.sample > 0 && o.sample < static_cast<int>(cs.size())) {
      std::shuffle(cs.begin(), cs.end(), rng);
      cs.resize(o.sample);
    }
    Json list = Json::array();
    for (const auto& c : cs) list.push_back(curve_to_json(c));
    out["curves"] = list;
  } else {
    throw PreconditionError("--check must be parity, separation, list or list-separating");
  }
  return out;
}

Json cmd_verify(const Options& o) {
  Json cert = read_json(o.cert, "cert");
  std::string msg = verify_certificate(cert);
  if (!msg.empty()) throw Failure{"invariant-violation", msg, cert};
  return {{"kind", cert["kind"]}, {"valid", true}};
}

int emit(const std::string& status, const Json& payload, const std::string& error, double ms,
         const std::string& out_path) {
  Json doc = {{"status", status}, {"payload", payload}, {"timing_ms", ms}};
  if (!error.empty()) doc["error"] = error;
  std::cout << doc.dump(2) << "\n";
  if (!out_path.empty() && !payload.is_null()) {
    std::ofstream f(out_path);
    if (!f) {
      std::cerr << "cannot write " << out_path << "\n";
      return 1;
    }
    f << payload.dump(2) << "\n";
  }
  return status == "ok" ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Curves, separating paths and joint analyses on closed surfaces"};
  app.require_subcommand(1);
  Options o;

  using Command = Json (*)(const Options&);
  std::vector<std::pair<CLI::App*, Command>> commands;
  auto add = [&](const char* name, const char* help, Command f) {
    CLI::App* sub = app.add_subcommand(name, help);
    commands.emplace_back(sub, f);
    return sub;
  };
  auto surface = [&](CLI::App* sub) { sub->add_option("--surface", o.surface, "surface JSON file"); };
  auto from = [&](CLI::App* sub) { sub->add_option("--from", o.from, "curve JSON file"); };
  auto to = [&](CLI::App* sub) { sub->add_option("--to", o.to, "curve JSON file"); };
  auto base = [&](CLI::App* sub) { sub->add_option("--base", o.base, "base curve JSON file"); };

  auto* gen = add("gen-surface", "emit the standard triangulated surface", cmd_gen_surface);
  gen->add_option("--genus", o.genus, "genus (2..12)")->check(CLI::Range(2, 12));

  auto* cls = add("classify", "separation type and side genera of a curve", cmd_classify);
  surface(cls), from(cls);
  auto* isect = add("intersect", "geometric and algebraic intersection numbers", cmd_intersect);
  surface(isect), from(isect), to(isect);
  auto* bp = add("bp-check", "bounding pair test", cmd_bp_check);
  surface(bp), from(bp), to(bp);
  auto* jt = add("joint", "classify a joint (base, from, to)", cmd_joint);
  surface(jt), base(jt), from(jt), to(jt);
  auto* sp = add("sep-path", "path of separating curves between two separating curves", cmd_sep_path);
  surface(sp), from(sp), to(sp);
  auto* bpp = add("bp-path", "short-step path of bounding-pair partners of the base", cmd_bp_path);
  surface(bpp), base(bpp), from(bpp), to(bpp);
  auto* rg = add("refine-genus1", "reduce a separating path to genus-1 vertices", cmd_refine_genus1);
  surface(rg), from(rg), to(rg);
  rg->add_option("--cert", o.cert, "sep_path certificate to refine");
  auto* aj = add("analyze-joint", "neighbourhood analysis of a 2- or 4-joint", cmd_analyze_joint);
  surface(aj), base(aj), from(aj), to(aj);
  auto* en = add("enclose", "separating curve cutting off a torus around a curve", cmd_enclose);
  surface(en), from(en);
  en->add_option("--to", o.to, "curve the torus must avoid");
  auto* tw = add("twist-matrix", "action of a twist word on homology", cmd_twist_matrix);
  surface(tw), from(tw), to(tw);
  auto* cen = add("census", "batch checks over the curve census", cmd_census);
  surface(cen);
  cen->add_option("--max-weight", o.max_weight, "census weight bound");
  cen->add_option("--check", o.check, "parity | separation | list | list-separating");
  cen->add_option("--seed", o.seed, "seed for --sample");
  cen->add_option("--sample", o.sample, "random subset size");
  auto* ver = add("verify", "standalone certificate check", cmd_verify);
  ver->add_option("--cert", o.cert, "certificate JSON file");

  for (auto& [sub, f] : commands) sub->add_option("--out", o.out, "also write the payload to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return emit("precondition-failure", nullptr, std::string("invocation: ") + e.what(), 0, "");
  }

  Command run = nullptr;
  for (auto& [sub, f] : commands)
    if (sub->parsed()) run = f;

  auto t0 = std::chrono::steady_clock::now();
  auto ms = [&] { return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count(); };
  try {
    Json payload = run(o);
    return emit("ok", payload, "", ms(), o.out);
  } catch (const Failure& f) {
    std::cerr << f.status << ": " << f.error << "\n";
    return emit(f.status, f.payload, f.error, ms(), o.out);
  } catch (const PreconditionError& e) {
    std::cerr << "precondition-failure: " << e.what() << "\n";
    return emit("precondition-failure", nullptr, e.what(), ms(), "");
  } catch (const SearchExhausted& e) {
    std::cerr << "search-exhausted: " << e.what() << "\n";
    return emit("search-exhausted", nullptr, e.what(), ms(), "");
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant-violation: " << e.what() << "\n";
    return emit("invariant-violation", nullptr, e.what(), ms(), "");
  }
}
