#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gaunt/acceptance.hpp"
#include "gaunt/constructions.hpp"
#include "gaunt/fibers.hpp"
#include "gaunt/io.hpp"
#include "gaunt/nerve.hpp"
#include "gaunt/obstruction.hpp"
#include "gaunt/truncation.hpp"
#include "gaunt/validate.hpp"

using namespace gaunt;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kUnsaturated = 3 };

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  int cap = -1;  // verb default when negative
  int dim = -1;
  int n = 0;
  int m = 0;
  bool m_given = false;
  std::string basepoint;
  std::string format = "json";
  std::string over;
  std::string assign;
  std::string map_file;
  std::string objects;
  bool lax = false;
  bool rewriting = false;
  std::uint64_t seed = 0;
  std::vector<std::string> args;
};

int cap_or(const Options& o, int fallback) { return o.cap >= 1 ? o.cap : fallback; }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError("'" + path + "' is not valid JSON: " + e.what());
  }
}

int parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError("expected an integer for " + what + ", got '" + s + "'");
}

// oriental:N | cube:N | disk:N | boundary:N | point | path to a complex JSON file
Complex parse_shape(const std::string& spec) {
  if (spec == "point") return disk(0);
  auto colon = spec.find(':');
  if (colon != std::string::npos) {
    const std::string kind = spec.substr(0, colon);
    const int n = parse_int(spec.substr(colon + 1), spec);
    if (n < 0) throw UsageError("negative dimension in '" + spec + "'");
    if (kind == "oriental") return oriental(n);
    if (kind == "cube") return cube(n);
    if (kind == "disk") return disk(n);
    if (kind == "boundary") return boundary_disk(n);
    throw UsageError("unknown shape kind '" + kind + "'");
  }
  if (spec.ends_with(".json")) {
    try {
      return complex_from_json(read_json_file(spec));
    } catch (const Json::exception& e) {
      throw UsageError("'" + spec + "' is not a complex: " + e.what());
    }
  }
  throw UsageError("cannot read shape '" + spec + "' (expected oriental:N, cube:N, disk:N, boundary:N, point or a .json file)");
}

const std::string& arg(const Options& o, std::size_t i, const char* what) {
  if (o.args.size() <= i) throw UsageError(std::string("missing ") + what);
  return o.args[i];
}

// "a,b" for dimension 0; levels separated by ';' ("0,2;01+12,02")
OrientedBasePoint parse_basepoint(const Complex& x, const std::string& text) {
  OrientedBasePoint z;
  if (text.empty()) return z;
  int k = 0;
  for (const auto& level : split(text, ';')) {
    auto pair = split(level, ',');
    if (pair.size() != 2) throw UsageError("basepoint level '" + level + "' needs two comma-separated chains");
    try {
      z.entries.emplace_back(parse_chain(x, k, pair[0]), parse_chain(x, k, pair[1]));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    ++k;
  }
  try {
    check_table(x, z, false);
  } catch (const InvalidBasepoint& e) {
    throw UsageError(e.what());
  }
  return z;
}

ComplexMap parse_map(const Options& o, std::size_t first) {
  Json images = Json::object();
  ComplexPtr source, target;
  if (!o.map_file.empty()) {
    Json j = read_json_file(o.map_file);
    auto side = [](const Json& s) { return s.is_string() ? parse_shape(s.get<std::string>()) : complex_from_json(s); };
    source = share(side(j.at("source")));
    target = share(side(j.at("target")));
    images = j.at("images");
  } else {
    source = share(parse_shape(arg(o, first, "source shape")));
    target = share(parse_shape(arg(o, first + 1, "target shape")));
    for (const auto& item : split(o.assign, ',')) {
      if (item.empty()) continue;
      auto eq = item.find('=');
      if (eq == std::string::npos) throw UsageError("assignment '" + item + "' needs the form generator=chain");
      images[item.substr(0, eq)] = item.substr(eq + 1);
    }
  }
  MapBuilder b(source, target);
  try {
    for (auto it = images.begin(); it != images.end(); ++it) b.set(it.key(), it.value().get<std::string>());
    auto f = b.build();
    auto diag = validate_map(f);
    if (!diag.ok()) throw UsageError("invalid map: " + diag.summary());
    return f;
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void emit(const Json& j) { std::cout << dump(j); }

int emit_poset(const Options& o, const Poset& p, Json meta) {
  if (o.format == "dot") {
    std::cout << to_dot(p);
    return kOk;
  }
  meta["poset"] = to_json(p);
  meta["saturated"] = true;
  emit(meta);
  return kOk;
}

void require_format(const Options& o, bool dot_allowed) {
  if (o.format != "json" && !(dot_allowed && o.format == "dot"))
    throw UsageError("--format " + o.format + " is not supported here");
}

// verbs

int cmd_build(const Options& o) {
  require_format(o, false);
  const std::string& kind = arg(o, 0, "shape");
  Complex x;
  if (kind == "oriental" || kind == "cube" || kind == "disk" || kind == "boundary") {
    if (o.args.size() != 2) throw UsageError(kind + " takes one dimension");
    x = parse_shape(kind + ":" + o.args[1]);
    emit(to_json(x));
    return kOk;
  }
  std::vector<Complex> rest;
  for (std::size_t i = 1; i < o.args.size(); ++i) rest.push_back(parse_shape(o.args[i]));
  if (kind == "suspend") {
    if (rest.size() != 1) throw UsageError("suspend takes one shape");
    x = suspension(rest[0]);
  } else if (kind == "wedge") {
    if (rest.empty()) throw UsageError("wedge needs at least one shape");
    try {
      x = wedge(rest);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  } else if (kind == "tensor") {
    if (rest.empty()) throw UsageError("tensor needs at least one shape");
    x = rest[0];
    for (std::size_t i = 1; i < rest.size(); ++i) x = gray_tensor(x, rest[i]);
  } else if (kind == "op" || kind == "co") {
    if (rest.size() != 1) throw UsageError(kind + " takes one shape");
    x = kind == "op" ? dual_op(rest[0]) : dual_co(rest[0]);
  } else {
    if (o.args.size() != 1) throw UsageError("unexpected arguments after '" + kind + "'");
    x = parse_shape(kind);
  }
  // construction tolerates invalid input; homotopy verbs reject it
  if (auto d = validate(x); !d.ok()) std::cerr << "warning: " << d.summary() << "\n";
  emit(to_json(x));
  return kOk;
}

int cmd_pi0(const Options& o) {
  require_format(o, true);
  const Complex x = parse_shape(arg(o, 0, "shape"));
  ChainSolver solver(x, cap_or(o, kDefaultCap));
  return emit_poset(o, pi0(solver).poset, {{"complex", x.name()}, {"n", 0}, {"cap", solver.cap()}});
}

int cmd_pi(const Options& o) {
  require_format(o, true);
  const Complex x = parse_shape(arg(o, 0, "shape"));
  ChainSolver solver(x, cap_or(o, kDefaultCap));
  auto z = parse_basepoint(x, o.basepoint);
  if (z.dimension() != o.n - 1)
    throw UsageError("pi --n " + std::to_string(o.n) + " needs a basepoint of dimension " + std::to_string(o.n - 1));
  Json meta{{"complex", x.name()}, {"n", o.n}, {"cap", solver.cap()}, {"basepoint", to_json(x, z)}};
  if (o.rewriting) {
    if (o.n != 1) throw UsageError("--rewriting applies to n = 1");
    meta["method"] = "rewriting";
    return emit_poset(o, pi1_rewriting(solver, z.minus(0).support().at(0), z.plus(0).support().at(0)), meta);
  }
  return emit_poset(o, pi_n(solver, z).poset, meta);
}

int cmd_truncate(const Options& o) {
  require_format(o, o.n == 0);
  const Complex x = parse_shape(arg(o, 0, "shape"));
  ChainSolver solver(x, cap_or(o, kDefaultCap));
  if (o.n == 0) return emit_poset(o, pi0(solver).poset, {{"complex", x.name()}, {"level", 0}, {"cap", solver.cap()}});
  if (o.n != 1) throw UsageError("truncate supports --n 0 and --n 1");
  auto t = truncate1(solver);
  Json j{{"complex", x.name()}, {"level", 1}, {"cap", solver.cap()}, {"objects", t.objects}};
  j["hom"] = Json::array();
  for (std::size_t a = 0; a < t.objects.size(); ++a)
    for (std::size_t b = 0; b < t.objects.size(); ++b)
      j["hom"].push_back({{"source", t.objects[a]}, {"target", t.objects[b]}, {"poset", to_json(t.hom[a][b].poset)}});
  auto laws = t.check_laws();
  j["laws"] = laws;
  j["saturated"] = true;
  emit(j);
  return laws.empty() ? kOk : kCheckFailed;
}

int cmd_check_full(const Options& o) {
  require_format(o, false);
  MapAnalysis a(parse_map(o, 0), cap_or(o, kDefaultCap));
  const int top = std::max(a.map().source().top_degree(), a.map().target().top_degree()) + 1;
  Json j{{"cap", a.cap()}};
  Json rows = Json::array();
  for (int m = -1; m <= top; ++m)
    rows.push_back({{"m", m},
                    {"full", a.is_full(m)},
                    {"faithful", a.is_faithful(m)},
                    {"connected", a.is_connected(m)},
                    {"truncated", a.is_truncated(m)}});
  j["predicates"] = rows;
  j["saturated"] = true;
  bool ok = true;
  if (o.m_given) {
    ok = a.is_full(o.m);
    j["m"] = o.m;
    j["full"] = ok;
  }
  emit(j);
  return ok ? kOk : kCheckFailed;
}

int cmd_check_equivalence(const Options& o) {
  require_format(o, false);
  MapAnalysis a(parse_map(o, 0), cap_or(o, kDefaultCap));
  const bool eq = a.is_equivalence(o.n);
  Json j{{"cap", a.cap()}, {"n", o.n}, {"equivalence", eq}, {"saturated", true}};
  if (!eq) j["failure"] = a.equivalence_failure();
  emit(j);
  return eq ? kOk : kCheckFailed;
}

int cmd_fiber(const Options& o) {
  require_format(o, true);
  if (o.over.empty()) throw UsageError("fiber needs --over <object>");
  MapAnalysis a(parse_map(o, 0), cap_or(o, kDefaultCap));
  FiberPoset fp;
  try {
    fp = oriented_right_fiber_pi0(a, o.over, o.lax ? FiberConvention::Lax : FiberConvention::Oplax);
  } catch (const InvalidObject& e) {
    throw UsageError(e.what());
  }
  return emit_poset(o, fp.poset, {{"cap", a.cap()}, {"over", o.over}, {"convention", o.lax ? "lax" : "oplax"}});
}

int cmd_les_check(const Options& o) {
  require_format(o, false);
  if (o.n != 0) throw UsageError("les-check is implemented for n = 0 only");
  MapAnalysis a(parse_map(o, 0), cap_or(o, kDefaultCap));
  const auto conv = o.lax ? FiberConvention::Lax : FiberConvention::Oplax;
  std::vector<OrientedBasePoint> points;
  if (!o.basepoint.empty()) {
    points.push_back(parse_basepoint(a.map().source(), o.basepoint));
  } else {
    for (int d = 0; d <= 1; ++d)
      for (auto& z : enumerate_basepoints(a.source_solver(), d))
        if (d == 0 || z.is_cell()) points.push_back(z);
  }
  Json reports = Json::array();
  bool ok = true;
  for (const auto& z : points) {
    LesReport r;
    try {
      r = les_exactness_check(a, z, conv);
    } catch (const InvalidBasepoint& e) {
      throw UsageError(e.what());
    }
    Json entries = Json::array();
    for (const auto& e : r.entries)
      entries.push_back({{"item", e.item}, {"element", e.element}, {"in_image", e.in_image}, {"criterion", e.criterion}, {"holds", e.holds()}});
    reports.push_back({{"basepoint", r.basepoint},
                       {"ok", {r.ok(1), r.ok(2), r.ok(3)}},
                       {"skipped", r.skipped},
                       {"entries", entries}});
    ok = ok && r.ok();
  }
  emit({{"cap", a.cap()}, {"reports", reports}, {"ok", ok}, {"saturated", true}});
  return ok ? kOk : kCheckFailed;
}

Json nerve_summary(const StratifiedSimplicialSet& s) {
  Json j{{"dimension", s.dimension()}, {"counts", s.counts()}};
  j["nondegenerate"] = Json::array();
  for (int m = 0; m <= s.dimension(); ++m) {
    auto [thin, nonthin] = s.nondegenerate(m);
    j["nondegenerate"].push_back({{"thin", thin.size()}, {"nonthin", nonthin.size()}});
  }
  return j;
}

int nerve_dimension(const Options& o) { return o.dim >= 0 ? o.dim : 2; }

int cmd_nerve(const Options& o) {
  require_format(o, false);
  const Complex x = parse_shape(arg(o, 0, "shape"));
  Nerve nerve(x, nerve_dimension(o), cap_or(o, 1));
  const auto& s = nerve.simplicial_set();
  Json j = nerve_summary(s);
  j["complex"] = x.name();
  j["cap"] = nerve.cap();
  j["simplices"] = Json::array();
  for (int m = 0; m <= s.dimension(); ++m) {
    Json level = Json::array();
    for (std::size_t k = 0; k < s.count(m); ++k) {
      if (s.degenerate(m, k)) continue;
      level.push_back({{"index", k}, {"thin", s.thin(m, k)}, {"map", nerve.describe(m, k)}});
    }
    j["simplices"].push_back(level);
  }
  j["problems"] = s.check();
  j["saturated"] = true;
  emit(j);
  return s.check().empty() ? kOk : kCheckFailed;
}

int cmd_skeleton(const Options& o) {
  require_format(o, false);
  const Complex x = parse_shape(arg(o, 0, "shape"));
  auto s = stratified_nerve(x, nerve_dimension(o), cap_or(o, 1));
  if (o.n < 0 || o.n > s.dimension()) throw UsageError("--n must lie in 0..--dim");
  Json j = nerve_summary(skeleton(s, o.n));
  j["complex"] = x.name();
  j["n"] = o.n;
  j["cap"] = cap_or(o, 1);
  j["saturated"] = true;
  emit(j);
  return kOk;
}

int cmd_pushout_check(const Options& o) {
  require_format(o, false);
  const Complex x = parse_shape(arg(o, 0, "shape"));
  const int dim = o.dim >= 0 ? o.dim : 4;
  auto s = stratified_nerve(x, dim, cap_or(o, 1));
  Json reports = Json::array();
  bool ok = true;
  for (int n = 0; n <= dim; ++n) {
    auto r = verify_skeletal_pushout(s, n);
    Json rows = Json::array();
    for (const auto& row : r.rows)
      rows.push_back({{"m", row.m},
                      {"new", row.new_total},
                      {"expected", row.expected_total},
                      {"new_thin", row.new_thin},
                      {"expected_thin", row.expected_thin},
                      {"ok", row.ok()}});
    reports.push_back({{"n", n}, {"thin_cells", r.thin_cells}, {"nonthin_cells", r.nonthin_cells}, {"rows", rows}, {"ok", r.ok()}});
    ok = ok && r.ok();
  }
  emit({{"complex", x.name()}, {"cap", cap_or(o, 1)}, {"dimension", dim}, {"reports", reports}, {"ok", ok}, {"saturated", true}});
  return ok ? kOk : kCheckFailed;
}

int cmd_cofiber(const Options& o) {
  require_format(o, false);
  const Complex x = parse_shape(arg(o, 0, "shape"));
  const int dim = o.dim >= 0 ? o.dim : std::max(o.n, 0);
  auto s = stratified_nerve(x, dim, cap_or(o, 1));
  auto [spheres, homotopical] = wedge_cofiber_profile(s, o.n);
  emit({{"complex", x.name()}, {"cap", cap_or(o, 1)}, {"n", o.n}, {"categorical", spheres}, {"homotopical", homotopical}, {"saturated", true}});
  return kOk;
}

int cmd_obstruct(const Options& o) {
  require_format(o, true);
  const int cap = cap_or(o, 1);
  std::optional<SkeletalMap> f;
  try {
    if (!o.objects.empty()) {
      std::map<std::string, std::string> objects;
      for (const auto& item : split(o.objects, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw UsageError("object assignment '" + item + "' needs the form a=b");
        objects[item.substr(0, eq)] = item.substr(eq + 1);
      }
      f.emplace(SkeletalMap::from_objects(parse_shape(arg(o, 0, "source shape")),
                                          parse_shape(arg(o, 1, "target shape")), objects, cap));
    } else {
      f.emplace(SkeletalMap::from_map(parse_map(o, 0), o.n, cap));
    }
  } catch (const IncompatibleF& e) {
    throw UsageError(e.what());
  }
  std::vector<ObstructionFactor> factors;
  Poset formula = obstruction_poset(*f, &factors);
  Poset brute = brute_force_extensions(*f);
  const bool agree = bool(poset_iso(formula, brute));
  if (o.format == "dot") {
    std::cout << to_dot(formula, "obstruction");
    return agree ? kOk : kCheckFailed;
  }
  Json fj = Json::array();
  for (const auto& fac : factors) fj.push_back({{"cell", fac.cell}, {"thin", fac.thin}, {"poset", to_json(fac.poset)}});
  emit({{"cap", cap}, {"n", f->n()}, {"factors", fj}, {"formula", to_json(formula)}, {"brute_force", to_json(brute)}, {"agree", agree}, {"saturated", true}});
  return agree ? kOk : kCheckFailed;
}

int cmd_acceptance(const Options&) {
  auto results = run_acceptance();
  bool ok = true;
  for (const auto& r : results) {
    std::cout << format_result(r) << "\n";
    ok = ok && r.pass;
  }
  std::size_t passed = 0;
  for (const auto& r : results) passed += r.pass;
  std::cout << passed << "/" << results.size() << " criteria passed\n";
  return ok ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Steiner complexes: homotopy posets, truncations, fibers and skeleta"};
  app.require_subcommand(1);
  Options o;
  int (*selected)(const Options&) = nullptr;

  auto add = [&](const std::string& name, const std::string& help, int (*fn)(const Options&)) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("args", o.args, "shapes and arguments");
    sub->add_option("--cap", o.cap, "coefficient cap for enumeration")->check(CLI::Range(1, 1000000));
    sub->add_option("--format", o.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
    sub->add_option("--seed", o.seed, "accepted for interface stability; every computation is deterministic");
    sub->callback([fn, &selected]() { selected = fn; });
    return sub;
  };
  auto map_options = [&](CLI::App* sub) {
    sub->add_option("--assign", o.assign, "generator images, 'g=chain,h=chain'");
    sub->add_option("--map", o.map_file, "JSON file with source, target and images");
  };

  add("build", "build a shape: oriental|cube|disk|boundary N, suspend, wedge, tensor, op, co, or a shape spec", cmd_build);
  add("pi0", "homotopy poset of objects", cmd_pi0);
  auto* pi = add("pi", "homotopy poset pi_n at a basepoint", cmd_pi);
  pi->add_option("--n", o.n, "degree")->required();
  pi->add_option("--basepoint", o.basepoint, "levels 'a,b;u,v' of minus,plus chains");
  pi->add_flag("--rewriting", o.rewriting, "compute pi_1 by path rewriting");
  auto* tr = add("truncate", "0- or 1-truncation", cmd_truncate);
  tr->add_option("--n", o.n, "truncation level (0 or 1)");
  auto* full = add("check-full", "full/faithful/connected/truncated verdicts of a map", cmd_check_full);
  map_options(full);
  auto* m_option = full->add_option("--m", o.m, "exit 1 unless the map is m-full");
  auto* eq = add("check-equivalence", "whether a map induces isomorphisms on pi_m for m <= n", cmd_check_equivalence);
  map_options(eq);
  eq->add_option("--n", o.n, "degree bound");
  auto* fib = add("fiber", "pi0 of the oriented right fiber", cmd_fiber);
  map_options(fib);
  fib->add_option("--over", o.over, "target object");
  fib->add_flag("--lax", o.lax, "use the transposed convention");
  auto* les = add("les-check", "exactness of the oriented sequence at n = 0", cmd_les_check);
  map_options(les);
  les->add_option("--n", o.n, "degree of the sequence (only 0 is implemented)")->check(CLI::Range(0, 1));
  les->add_option("--basepoint", o.basepoint, "source basepoint (all of dimension 0 and 1 by default)");
  les->add_flag("--lax", o.lax, "use the transposed fiber convention");
  auto* nv = add("nerve", "bounded stratified nerve", cmd_nerve);
  nv->add_option("--dim", o.dim, "dimension bound (default 2)");
  auto* sk = add("skeleton", "n-skeleton of the bounded nerve", cmd_skeleton);
  sk->add_option("--dim", o.dim, "dimension bound (default 2)");
  sk->add_option("--n", o.n, "skeleton level");
  auto* po = add("pushout-check", "skeletal pushout counts for every n", cmd_pushout_check);
  po->add_option("--dim", o.dim, "dimension bound (default 4)");
  auto* cf = add("cofiber", "wedge multiplicities of sk_n / sk_{n-1}", cmd_cofiber);
  cf->add_option("--n", o.n, "level");
  cf->add_option("--dim", o.dim, "dimension bound (default n)");
  auto* ob = add("obstruct", "extensions from sk_n to sk_{n+1}: formula vs brute force", cmd_obstruct);
  map_options(ob);
  ob->add_option("--objects", o.objects, "n = 0 data 'a=x,b=y'");
  ob->add_option("--n", o.n, "skeleton level of the given map");
  add("acceptance", "run the acceptance suite", cmd_acceptance);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  o.m_given = m_option->count() > 0;
  try {
    return selected(o);
  } catch (const UnsaturatedEnumeration& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUnsaturated;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
}
