#include "commands.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "brylawski.hpp"
#include "density.hpp"
#include "eqsys.hpp"
#include "error.hpp"
#include "flock.hpp"
#include "json_io.hpp"
#include "matroid.hpp"
#include "primes.hpp"

namespace mcs {

namespace {

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

mpz_class mpz_arg(const std::string& s, const std::string& what) {
  if (s.empty()) fail("malformed_input", what + " is required");
  mpz_class z;
  if (mpz_set_str(z.get_mpz_t(), s.c_str(), 10) != 0)
    fail("malformed_input", what + ": bad integer '" + s + "'");
  return z;
}

unsigned long ulong_arg(const std::string& s, const std::string& what) {
  mpz_class z = mpz_arg(s, what);
  if (z < 0 || !z.fits_ulong_p())
    fail("malformed_input", what + " out of range");
  return z.get_ui();
}

long long_arg(const std::string& s, const std::string& what) {
  mpz_class z = mpz_arg(s, what);
  if (!z.fits_slong_p()) fail("malformed_input", what + " out of range");
  return z.get_si();
}

std::vector<mpz_class> csv_mpz(const std::string& s, const std::string& what) {
  auto parts = split_csv(s);
  if (parts.empty()) fail("malformed_input", what + " is required");
  std::vector<mpz_class> out;
  for (const auto& p : parts) out.push_back(mpz_arg(p, what));
  return out;
}

std::vector<long> csv_long(const std::string& s, const std::string& what) {
  auto parts = split_csv(s);
  if (parts.empty()) fail("malformed_input", what + " is required");
  std::vector<long> out;
  for (const auto& p : parts) out.push_back(long_arg(p, what));
  return out;
}

// Accepts "a/b", plain integers, and decimal literals like "0.5".
Rat rat_arg(const std::string& s, const std::string& what) {
  if (s.empty()) fail("malformed_input", what + " is required");
  if (s.find('/') != std::string::npos) return parse_rat(s);
  auto dot = s.find('.');
  if (dot == std::string::npos) return Rat(mpz_arg(s, what));
  std::string sign;
  std::string body = s;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    if (body[0] == '-') sign = "-";
    body = body.substr(1);
    dot = body.find('.');
  }
  std::string ip = body.substr(0, dot);
  std::string fp = body.substr(dot + 1);
  if (fp.empty() && ip.empty())
    fail("malformed_input", what + ": bad decimal '" + s + "'");
  for (char c : ip + fp)
    if (c < '0' || c > '9')
      fail("malformed_input", what + ": bad decimal '" + s + "'");
  mpz_class num = mpz_arg(sign + (ip.empty() ? "0" : ip) + fp, what);
  mpz_class den = 1;
  for (size_t i = 0; i < fp.size(); ++i) den *= 10;
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Json load_payload(const std::string& path) {
  Json j = parse_json_file(path);
  return unwrap_payload(j);
}

// Payloads wrap their object under a named key; accept the bare object too.
Json wrapped(const Json& j, const std::string& key) {
  if (j.is_object() && j.contains(key)) return j.at(key);
  return j;
}

const char* kind_name(FlockKind k) {
  switch (k) {
    case FlockKind::Valuation: return "valuation";
    case FlockKind::Stretched: return "stretched";
    case FlockKind::Dual: return "dual";
    case FlockKind::Explicit: return "explicit";
  }
  return "unknown";
}

Json flock_payload(const FlockPtr& f) {
  Json j;
  j["flock"] = flock_json(f);
  j["kind"] = kind_name(f->kind());
  j["ground"] = f->ground();
  j["dim"] = f->dim();
  j["autom_exp"] = f->autom_exp();
  j["field"] = field_json(f->field());
  return j;
}

FlockPtr load_flock(const std::string& path) {
  return flock_from_json(wrapped(load_payload(path), "flock"));
}

Matroid load_matroid(const std::string& path) {
  return matroid_from_json(wrapped(load_payload(path), "matroid"));
}

// A labeled matrix file is either a rational matrix ("field": "Q") or a
// subspace over a finite field.
bool matrix_is_rational(const Json& j) {
  return j.is_object() && j.contains("field") && j.at("field").is_string();
}

struct Ctx {
  bool ran = false;
  std::string status = "ok";
  Json payload;
  // Global flags, bound as text so values can exceed machine integers.
  std::string out_file;
  bool pretty = false;
  std::string threads;
  std::string seed;

  unsigned long seed_value() const {
    return seed.empty() ? 0 : ulong_arg(seed, "--seed");
  }

  unsigned thread_count() const {
    std::string t = threads;
    if (t.empty()) {
      const char* env = std::getenv("MATROID_CHARSET_THREADS");
      if (env) t = env;
    }
    if (t.empty()) return 1;
    mpz_class z;
    if (mpz_set_str(z.get_mpz_t(), t.c_str(), 10) != 0 || z < 1 ||
        !z.fits_ulong_p())
      return 1;
    unsigned long v = z.get_ui();
    return v > 256 ? 256u : static_cast<unsigned>(v);
  }
};

// Option values shared across verbs; each leaf binds the fields it uses.
struct Opts {
  std::string primes;
  std::string start;
  std::string count;
  std::string size;
  std::string below;
  std::string limit = "1000000";
  std::string windows;
  std::string mod;
  std::string family;
  std::string system_file;
  std::string n;
  std::string p;
  std::string m;
  std::string alpha;
  std::string eps;
  std::string assignment_file;
  std::string kind;
  std::string matrix_file;
  std::string flock_file;
  std::string window_file;
  std::string lo = "-2";
  std::string hi = "2";
  std::string samples = "4";
  std::string max_points = "10000";
  std::string factor;
  std::string del;
  std::string contract;
  std::string left_file;
  std::string right_file;
  std::string set;
  std::string matroid_file;
  std::string moduli;
  bool consecutive = false;
  std::string consecutive_from;
};

EquationSystem system_from_opts(const Opts& o) {
  if (!o.system_file.empty())
    return system_from_json(wrapped(load_payload(o.system_file), "system"));
  if (o.family.empty())
    fail("malformed_input", "need --family or --system");
  if (o.family == "phi_n") return build_phi_n(ulong_arg(o.n, "--n"));
  if (o.family == "finite")
    return build_finite(csv_mpz(o.primes, "--primes"));
  if (o.family == "cofinite")
    return build_cofinite(csv_mpz(o.primes, "--primes"));
  if (o.family == "cofinite_cofinite")
    return build_cofinite_cofinite(csv_mpz(o.primes, "--primes"));
  if (o.family == "finite_all")
    return build_finite_all(csv_mpz(o.primes, "--primes"));
  if (o.family == "root_of_unity")
    return build_root_of_unity(ulong_arg(o.n, "--n"));
  fail("malformed_input", "unknown family '" + o.family + "'");
}

Window window_from_opts(const Opts& o, size_t coords) {
  if (!o.window_file.empty())
    return window_from_json(wrapped(load_payload(o.window_file), "window"));
  return cube_window(coords, long_arg(o.lo, "--lo"), long_arg(o.hi, "--hi"));
}

int exit_for_code(const std::string& code) {
  if (code == "malformed_json" || code == "malformed_input" ||
      code == "io_error" || code == "unknown_verb" || code == "usage")
    return 2;
  return 1;
}

const CLI::App* deepest_parsed(const CLI::App* app) {
  for (;;) {
    auto subs = app->get_subcommands();
    if (subs.empty()) return app;
    app = subs[0];
  }
}

void add_gb(CLI::App& root, Ctx& ctx, Opts& o) {
  auto* gb = root.add_subcommand("gb", "Gordon-Brylawski prime set checks");
  gb->require_subcommand(1);
  gb->fallthrough();

  auto* check = gb->add_subcommand(
      "check", "decide the pairwise congruence predicate for a prime set");
  check->fallthrough();
  check->add_option("--primes", o.primes, "comma separated primes");
  check->add_flag("--consecutive", o.consecutive,
                  "take consecutive primes from --start instead");
  check->add_option("--start", o.start, "first prime of the consecutive run");
  check->add_option("--count", o.count, "length of the consecutive run");
  check->callback([&ctx, &o] {
    ctx.ran = true;
    GBReport rep;
    bool confirmed = false;
    if (o.consecutive) {
      if (!o.primes.empty())
        fail("malformed_input", "--consecutive excludes --primes");
      auto primes = consecutive_primes(mpz_arg(o.start, "--start"),
                                       ulong_arg(o.count, "--count"));
      confirmed = true;
      rep = is_gordon_brylawski(primes);
    } else {
      rep = is_gordon_brylawski(csv_mpz(o.primes, "--primes"));
    }
    ctx.payload = report_json(rep);
    if (o.consecutive) ctx.payload["consecutive_confirmed"] = confirmed;
  });

  auto* search = gb->add_subcommand(
      "search", "enumerate prime sets satisfying the predicate");
  search->fallthrough();
  search->add_option("--size", o.size, "primes per candidate set");
  search->add_option("--below", o.below, "subset mode: primes drawn below N");
  search->add_option("--limit", o.limit, "subset mode: candidate cap");
  search->add_option("--consecutive-from", o.consecutive_from,
                     "window mode: first window starts at this prime");
  search->add_option("--windows", o.windows, "window mode: window count");
  search->callback([&ctx, &o] {
    ctx.ran = true;
    unsigned long size = ulong_arg(o.size, "--size");
    if (!o.consecutive_from.empty() && !o.below.empty())
      fail("malformed_input", "--consecutive-from excludes --below");
    GBSearchResult res;
    if (!o.consecutive_from.empty()) {
      res = gb_search_windows(mpz_arg(o.consecutive_from, "--consecutive-from"),
                              size, ulong_arg(o.windows, "--windows"),
                              ctx.thread_count());
    } else {
      res = gb_search_subsets(size, ulong_arg(o.below, "--below"),
                              ulong_arg(o.limit, "--limit"));
    }
    ctx.payload = report_json(res);
  });
}

void add_brylawski(CLI::App& root, Ctx& ctx, Opts& o) {
  auto* br = root.add_subcommand("brylawski", "doubling matrix and rigidity");
  br->require_subcommand(1);
  br->fallthrough();

  auto* matrix = br->add_subcommand("matrix", "emit the doubling matrix");
  matrix->fallthrough();
  matrix->add_option("--primes", o.primes, "comma separated primes");
  matrix->callback([&ctx, &o] {
    ctx.ran = true;
    auto bm = brylawski_matrix(csv_mpz(o.primes, "--primes"));
    ctx.payload = report_json(bm);
    ctx.payload["b"] = mpz_list_json(b_sequence(bm.n).b);
  });

  auto* verify = br->add_subcommand(
      "verify", "check circuits and minors of the matrix over GF(p)");
  verify->fallthrough();
  verify->add_option("--primes", o.primes, "comma separated primes");
  verify->add_option("--mod", o.mod, "member prime to reduce by");
  verify->callback([&ctx, &o] {
    ctx.ran = true;
    auto rep = verify_brylawski_rigidity(csv_mpz(o.primes, "--primes"),
                                         mpz_arg(o.mod, "--mod"));
    ctx.payload = report_json(rep);
    if (!rep.all_pass) ctx.status = "violation-report";
  });
}

void add_eqsys(CLI::App& root, Ctx& ctx, Opts& o) {
  auto* eq = root.add_subcommand("eqsys", "equation system families");
  eq->require_subcommand(1);
  eq->fallthrough();

  auto add_source = [&o](CLI::App* verb) {
    verb->add_option("--family", o.family,
                     "phi_n, finite, cofinite, cofinite_cofinite, finite_all, "
                     "root_of_unity");
    verb->add_option("--n", o.n, "tower parameter for phi_n / root_of_unity");
    verb->add_option("--primes", o.primes, "primes for the product families");
    verb->add_option("--system", o.system_file, "system JSON file");
  };

  auto* build = eq->add_subcommand("build", "emit a system");
  build->fallthrough();
  add_source(build);
  build->callback([&ctx, &o] {
    ctx.ran = true;
    auto s = system_from_opts(o);
    ctx.payload["system"] = system_json(s);
    Json frees = Json::array();
    for (int i : s.free_vars()) frees.push_back(s.vars()[i]);
    ctx.payload["free_vars"] = std::move(frees);
    ctx.payload["equations"] = s.equations().size();
    ctx.payload["propagation_defect"] = s.propagation_defect();
  });

  auto* validate = eq->add_subcommand("validate", "grammar side conditions");
  validate->fallthrough();
  add_source(validate);
  validate->callback([&ctx, &o] {
    ctx.ran = true;
    auto s = system_from_opts(o);
    auto findings = validate_system(s);
    ctx.payload["findings"] = report_json(findings);
    ctx.payload["count"] = findings.size();
    if (!findings.empty()) ctx.status = "violation-report";
  });

  auto* propagate =
      eq->add_subcommand("propagate", "push y1 = t through the definitions");
  propagate->fallthrough();
  add_source(propagate);
  propagate->callback([&ctx, &o] {
    ctx.ran = true;
    auto s = system_from_opts(o);
    auto vals = propagate_symbolic(s);
    Json values = Json::object();
    for (const auto& [name, poly] : vals) {
      Json e;
      e["coeffs"] = intpoly_json(poly);
      e["text"] = poly.to_string();
      values[name] = std::move(e);
    }
    ctx.payload["values"] = std::move(values);
  });

  auto* badset = eq->add_subcommand(
      "badset", "bound the specializations that collide variables");
  badset->fallthrough();
  add_source(badset);
  badset->add_option("--mod-primes", o.mod,
                     "primes to certify nonvanishing against");
  badset->callback([&ctx, &o] {
    ctx.ran = true;
    auto s = system_from_opts(o);
    auto rep = bad_set_certificate(s, csv_mpz(o.mod, "--mod-primes"));
    ctx.payload = report_json(rep);
  });

  auto* verify = eq->add_subcommand("verify", "check an assignment");
  verify->fallthrough();
  add_source(verify);
  verify->add_option("--assignment", o.assignment_file,
                     "ring-tagged assignment JSON file");
  verify->callback([&ctx, &o] {
    ctx.ran = true;
    auto s = system_from_opts(o);
    if (o.assignment_file.empty())
      fail("malformed_input", "--assignment is required");
    Json aj = wrapped(load_payload(o.assignment_file), "assignment");
    std::string ring = jstr(aj, "ring");
    VerificationReport rep;
    if (ring == "gf") {
      FieldPtr f;
      auto a = gf_assignment_from_json(aj, f);
      rep = verify_assignment(s, GFRing{f}, a);
    } else if (ring == "skew") {
      FieldPtr f;
      auto a = skew_assignment_from_json(aj, f);
      rep = verify_assignment(s, SkewRing{f}, a);
    } else if (ring == "intpoly") {
      rep = verify_assignment(s, IntPolyRing{}, intpoly_assignment_from_json(aj));
    } else if (ring == "rat") {
      rep = verify_assignment(s, RatRing{}, rat_assignment_from_json(aj));
    } else {
      fail("malformed_input", "unknown ring tag '" + ring + "'");
    }
    ctx.payload = report_json(rep);
    ctx.payload["ring"] = ring;
    if (!rep.accepted) ctx.status = "violation-report";
  });

  auto* search = eq->add_subcommand(
      "search", "exhaust the free variables over a finite field");
  search->fallthrough();
  add_source(search);
  search->add_option("--p", o.p, "field characteristic");
  search->add_option("--m", o.m, "field extension degree");
  search->add_option("--limit", o.limit, "assignment cap");
  search->callback([&ctx, &o] {
    ctx.ran = true;
    auto s = system_from_opts(o);
    auto f = Field::make(mpz_arg(o.p, "--p"),
                         static_cast<unsigned>(ulong_arg(o.m, "--m")));
    auto res = search_solutions(s, f, ulong_arg(o.limit, "--limit"));
    ctx.payload["field"] = field_json(f);
    ctx.payload["assignments_tried"] = res.assignments_tried;
    ctx.payload["count"] = res.solutions.size();
    Json sols = Json::array();
    for (const auto& a : res.solutions)
      sols.push_back(gf_assignment_json(f, a));
    ctx.payload["solutions"] = std::move(sols);
  });

  auto* witness = eq->add_subcommand(
      "witness", "construct a skew polynomial solution");
  witness->fallthrough();
  witness->add_option("--kind", o.kind, "finite_all or root_of_unity");
  witness->add_option("--primes", o.primes, "finite_all: member primes");
  witness->add_option("--p", o.p, "field characteristic");
  witness->add_option("--m", o.m, "finite_all: extension degree for alpha");
  witness->add_option("--n", o.n, "root_of_unity: the order parameter");
  witness->add_option("--alpha", o.alpha,
                      "finite_all: alpha coefficients, little-endian csv");
  witness->callback([&ctx, &o] {
    ctx.ran = true;
    SkewWitness w;
    if (o.kind == "finite_all") {
      auto primes = csv_mpz(o.primes, "--primes");
      auto f = Field::make(mpz_arg(o.p, "--p"),
                           static_cast<unsigned>(ulong_arg(o.m, "--m")));
      FieldElement alpha;
      if (!o.alpha.empty()) {
        alpha = FieldElement(f, csv_mpz(o.alpha, "--alpha"));
      } else {
        mpz_class n = 1;
        for (const auto& q : primes) n *= q;
        if (!n.fits_ulong_p()) fail("bad_input", "prime product too large");
        alpha = default_witness_alpha(f, n.get_ui());
      }
      w = witness_finite_all(primes, alpha);
    } else if (o.kind == "root_of_unity") {
      w = witness_root_of_unity(ulong_arg(o.n, "--n"), mpz_arg(o.p, "--p"));
    } else {
      fail("malformed_input", "unknown witness kind '" + o.kind + "'");
    }
    ctx.payload["kind"] = o.kind;
    ctx.payload["field"] = field_json(w.field);
    ctx.payload["assignment"] = skew_assignment_json(w.field, w.assignment);
    ctx.payload["report"] = report_json(w.report);
    if (!w.report.accepted) ctx.status = "violation-report";
  });
}

void add_flock(CLI::App& root, Ctx& ctx, Opts& o) {
  auto* fl = root.add_subcommand("flock", "subspace families over Z^E");
  fl->require_subcommand(1);
  fl->fallthrough();

  auto* build = fl->add_subcommand(
      "build", "valuation flock from a rational matrix");
  build->fallthrough();
  build->add_option("--matrix", o.matrix_file, "rational matrix JSON file");
  build->add_option("--p", o.p, "reduction prime");
  build->callback([&ctx, &o] {
    ctx.ran = true;
    if (o.matrix_file.empty()) fail("malformed_input", "--matrix is required");
    Json mj = wrapped(load_payload(o.matrix_file), "matrix");
    QMatrix rows;
    std::vector<std::string> ground;
    qspace_from_json(mj, rows, ground);
    auto f = Flock::valuation(std::move(rows), std::move(ground),
                              mpz_arg(o.p, "--p"));
    ctx.payload = flock_payload(f);
  });

  auto* at = fl->add_subcommand("at", "evaluate the family at one point");
  at->fallthrough();
  at->add_option("--flock", o.flock_file, "flock descriptor JSON file");
  at->add_option("--alpha", o.alpha, "integer vector, csv");
  at->callback([&ctx, &o] {
    ctx.ran = true;
    auto f = load_flock(o.flock_file);
    auto alpha = csv_long(o.alpha, "--alpha");
    auto V = flock_at(f, alpha);
    ctx.payload["alpha"] = Json(alpha);
    ctx.payload["subspace"] = subspace_json(V);
  });

  auto* stretch = fl->add_subcommand("stretch", "factor-m refinement");
  stretch->fallthrough();
  stretch->add_option("--flock", o.flock_file, "flock descriptor JSON file");
  stretch->add_option("--factor", o.factor, "stretch factor m");
  stretch->callback([&ctx, &o] {
    ctx.ran = true;
    auto f = stretch_flock(load_flock(o.flock_file),
                           ulong_arg(o.factor, "--factor"));
    ctx.payload = flock_payload(f);
  });

  auto* dual = fl->add_subcommand("dual", "pointwise orthogonal dual");
  dual->fallthrough();
  dual->add_option("--flock", o.flock_file, "flock descriptor JSON file");
  dual->callback([&ctx, &o] {
    ctx.ran = true;
    ctx.payload = flock_payload(dual_flock(load_flock(o.flock_file)));
  });

  auto add_window_flags = [&o](CLI::App* verb) {
    verb->add_option("--flock", o.flock_file, "flock descriptor JSON file");
    verb->add_option("--window", o.window_file, "window JSON file");
    verb->add_option("--lo", o.lo, "cube window lower bound");
    verb->add_option("--hi", o.hi, "cube window upper bound");
    verb->add_option("--max-points", o.max_points, "window size cap");
  };

  auto* check = fl->add_subcommand("check", "axioms on a window");
  check->fallthrough();
  add_window_flags(check);
  check->add_option("--samples", o.samples, "sampled subsets per point");
  check->callback([&ctx, &o] {
    ctx.ran = true;
    auto f = load_flock(o.flock_file);
    auto w = window_from_opts(o, f->ground().size());
    auto rep = check_axioms(
        f, w, static_cast<unsigned>(ulong_arg(o.samples, "--samples")),
        ctx.seed_value(), ulong_arg(o.max_points, "--max-points"));
    ctx.payload = report_json(rep);
    if (!rep.ok()) ctx.status = "violation-report";
  });

  auto* support = fl->add_subcommand(
      "support", "window report and union support matroid");
  support->fallthrough();
  add_window_flags(support);
  support->callback([&ctx, &o] {
    ctx.ran = true;
    auto f = load_flock(o.flock_file);
    auto w = window_from_opts(o, f->ground().size());
    auto m =
        support_matroid(f, w, ulong_arg(o.max_points, "--max-points"));
    ctx.payload["window"] = window_json(w);
    ctx.payload["matroid"] = matroid_json(m);
    Json points = Json::array();
    for_each_point(w, [&](const std::vector<long>& alpha) {
      auto V = flock_at(f, alpha);
      Json e;
      e["alpha"] = Json(alpha);
      Json rows = Json::array();
      for (const auto& r : V.rows) {
        Json row = Json::array();
        for (const auto& x : r) row.push_back(element_json(x));
        rows.push_back(std::move(row));
      }
      e["rows"] = std::move(rows);
      Json bases = Json::array();
      for (const auto& b : matroid_from_subspace(V).basis_labels())
        bases.push_back(b);
      e["bases"] = std::move(bases);
      points.push_back(std::move(e));
    });
    ctx.payload["points"] = std::move(points);
  });
}

void add_matroid(CLI::App& root, Ctx& ctx, Opts& o) {
  auto* ma = root.add_subcommand("matroid", "basis family operations");
  ma->require_subcommand(1);
  ma->fallthrough();

  auto* from = ma->add_subcommand(
      "from-matrix", "column matroid of a labeled matrix");
  from->fallthrough();
  from->add_option("--matrix", o.matrix_file, "matrix JSON file (GF or Q)");
  from->callback([&ctx, &o] {
    ctx.ran = true;
    Json mj = wrapped(wrapped(load_payload(o.matrix_file), "matrix"),
                      "subspace");
    Matroid m = [&] {
      if (matrix_is_rational(mj)) {
        QMatrix rows;
        std::vector<std::string> ground;
        qspace_from_json(mj, rows, ground);
        return matroid_from_subspace(
            make_subspace(QDom{}, std::move(ground), std::move(rows)));
      }
      return matroid_from_subspace(subspace_from_json(mj));
    }();
    ctx.payload["matroid"] = matroid_json(m);
  });

  auto* dual = ma->add_subcommand("dual", "basis complements");
  dual->fallthrough();
  dual->add_option("--matroid", o.matroid_file, "matroid JSON file");
  dual->callback([&ctx, &o] {
    ctx.ran = true;
    ctx.payload["matroid"] =
        matroid_json(matroid_dual(load_matroid(o.matroid_file)));
  });

  auto* minor = ma->add_subcommand("minor", "delete and contract");
  minor->fallthrough();
  minor->add_option("--matroid", o.matroid_file, "matroid JSON file");
  minor->add_option("--delete", o.del, "labels to delete, csv");
  minor->add_option("--contract", o.contract, "labels to contract, csv");
  minor->callback([&ctx, &o] {
    ctx.ran = true;
    ctx.payload["matroid"] = matroid_json(
        matroid_minor(load_matroid(o.matroid_file), split_csv(o.del),
                      split_csv(o.contract)));
  });

  auto* circ = ma->add_subcommand("circuits", "minimal dependent sets");
  circ->fallthrough();
  circ->add_option("--matroid", o.matroid_file, "matroid JSON file");
  circ->callback([&ctx, &o] {
    ctx.ran = true;
    auto cs = circuits(load_matroid(o.matroid_file));
    Json arr = Json::array();
    for (const auto& c : cs) arr.push_back(c);
    ctx.payload["circuits"] = std::move(arr);
    ctx.payload["count"] = cs.size();
  });

  auto* dsum = ma->add_subcommand("direct-sum", "disjoint union of matroids");
  dsum->fallthrough();
  dsum->add_option("--left", o.left_file, "matroid JSON file");
  dsum->add_option("--right", o.right_file, "matroid JSON file");
  dsum->callback([&ctx, &o] {
    ctx.ran = true;
    ctx.payload["matroid"] = matroid_json(matroid_direct_sum(
        load_matroid(o.left_file), load_matroid(o.right_file)));
  });

  auto* isc = ma->add_subcommand(
      "is-circuit", "test a label set against matrix columns");
  isc->fallthrough();
  isc->add_option("--matrix", o.matrix_file, "matrix JSON file (GF or Q)");
  isc->add_option("--set", o.set, "labels, csv");
  isc->callback([&ctx, &o] {
    ctx.ran = true;
    Json mj = wrapped(wrapped(load_payload(o.matrix_file), "matrix"),
                      "subspace");
    auto labels = split_csv(o.set);
    bool b;
    if (matrix_is_rational(mj)) {
      QMatrix rows;
      std::vector<std::string> ground;
      qspace_from_json(mj, rows, ground);
      b = is_circuit(make_subspace(QDom{}, std::move(ground), std::move(rows)),
                     labels);
    } else {
      b = is_circuit(subspace_from_json(mj), labels);
    }
    ctx.payload["set"] = labels;
    ctx.payload["is_circuit"] = b;
  });
}

void add_density(CLI::App& root, Ctx& ctx, Opts& o) {
  auto* de = root.add_subcommand("density", "prime densities of member sets");
  de->require_subcommand(1);
  de->fallthrough();

  auto* emp = de->add_subcommand("empirical", "count members below a limit");
  emp->fallthrough();
  emp->add_option("--moduli", o.moduli, "comma separated odd primes");
  emp->add_option("--limit", o.limit, "sieve bound");
  emp->callback([&ctx, &o] {
    ctx.ran = true;
    ctx.payload = report_json(empirical_density(
        csv_mpz(o.moduli, "--moduli"), ulong_arg(o.limit, "--limit")));
  });

  auto* theo = de->add_subcommand("theoretical", "exact product density");
  theo->fallthrough();
  theo->add_option("--moduli", o.moduli, "comma separated odd primes");
  theo->callback([&ctx, &o] {
    ctx.ran = true;
    auto moduli = csv_mpz(o.moduli, "--moduli");
    Rat d = theoretical_density(moduli);
    ctx.payload["moduli"] = mpz_list_json(moduli);
    ctx.payload["theoretical"] = rat_json(d);
    ctx.payload["theoretical_decimal"] = rat_decimal(d);
  });

  auto* greedy = de->add_subcommand(
      "greedy", "consecutive prime set with density near alpha");
  greedy->fallthrough();
  greedy->add_option("--alpha", o.alpha, "target density");
  greedy->add_option("--eps", o.eps, "tolerance");
  greedy->callback([&ctx, &o] {
    ctx.ran = true;
    ctx.payload = report_json(greedy_density_set(
        rat_arg(o.alpha, "--alpha"), rat_arg(o.eps, "--eps")));
  });
}

}  // namespace

CommandOutcome run_command(const std::vector<std::string>& argv) {
  CommandOutcome out;
  Ctx ctx;
  Opts opts;

  CLI::App app{"exact tools for matroid characteristic sets", "mcs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  app.add_option("--out", ctx.out_file,
                 "write the result envelope to FILE instead of stdout");
  app.add_flag("--pretty", ctx.pretty, "indent JSON output");
  app.add_option("--threads", ctx.threads,
                 "worker cap (fallback: MATROID_CHARSET_THREADS)");
  app.add_option("--seed", ctx.seed, "seed for sampled checks");

  add_gb(app, ctx, opts);
  add_brylawski(app, ctx, opts);
  add_eqsys(app, ctx, opts);
  add_flock(app, ctx, opts);
  add_matroid(app, ctx, opts);
  add_density(app, ctx, opts);

  std::vector<const char*> cargv;
  cargv.push_back("mcs");
  for (const auto& a : argv) cargv.push_back(a.c_str());

  std::string error_code;
  std::string error_message;
  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
    if (!ctx.ran) fail("unknown_verb", "no command given");
  } catch (const CLI::CallForHelp&) {
    out.exit_code = 0;
    out.status = "ok";
    out.text = deepest_parsed(&app)->help();
    return out;
  } catch (const CLI::CallForAllHelp&) {
    out.exit_code = 0;
    out.status = "ok";
    out.text = app.help("", CLI::AppFormatMode::All);
    return out;
  } catch (const CLI::CallForVersion&) {
    out.exit_code = 0;
    out.status = "ok";
    out.text = std::string(kVersion) + "\n";
    return out;
  } catch (const CLI::ParseError& e) {
    error_code = "usage";
    error_message = e.what();
  } catch (const Error& e) {
    error_code = e.code;
    error_message = e.what();
  } catch (const std::exception& e) {
    error_code = "internal";
    error_message = e.what();
  }

  Json envelope;
  envelope["schema_version"] = "1";
  envelope["command"] = argv;
  if (!error_code.empty()) {
    ctx.status = "error";
    ctx.payload = Json::object();
    ctx.payload["code"] = error_code;
    ctx.payload["message"] = error_message;
    out.exit_code = exit_for_code(error_code);
  } else {
    out.exit_code = ctx.status == "ok" ? 0 : 1;
  }
  envelope["status"] = ctx.status;
  envelope["payload"] = ctx.payload;
  out.status = ctx.status;
  out.text = envelope.dump(ctx.pretty ? 2 : -1) + "\n";

  if (!ctx.out_file.empty() && error_code.empty()) {
    std::ofstream f(ctx.out_file);
    if (!f || !(f << out.text)) {
      Json err;
      err["schema_version"] = "1";
      err["command"] = argv;
      err["status"] = "error";
      err["payload"] =
          Json{{"code", "io_error"}, {"message", "cannot write " + ctx.out_file}};
      out.exit_code = 2;
      out.status = "error";
      out.text = err.dump(ctx.pretty ? 2 : -1) + "\n";
      return out;
    }
    out.out_path = ctx.out_file;
    out.text.clear();
  }
  return out;
}

}  // namespace mcs
