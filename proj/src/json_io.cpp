#include "json_io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>
#include <utility>

#include "error.hpp"

namespace mcs {

Json parse_json_text(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) fail("malformed_json", "input is not valid JSON");
  return j;
}

Json parse_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("io_error", "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str());
}

const Json& unwrap_payload(const Json& j) {
  if (j.is_object() && j.contains("schema_version") && j.contains("payload"))
    return j.at("payload");
  return j;
}

const Json& jget(const Json& j, const std::string& key) {
  if (!j.is_object() || !j.contains(key))
    fail("malformed_input", "missing key '" + key + "'");
  return j.at(key);
}

std::string jstr(const Json& j, const std::string& key) {
  const Json& v = jget(j, key);
  if (!v.is_string()) fail("malformed_input", "'" + key + "' must be a string");
  return v.get<std::string>();
}

unsigned long julong(const Json& j, const std::string& key) {
  const Json& v = jget(j, key);
  if (v.is_number_unsigned()) return v.get<unsigned long>();
  if (v.is_number_integer() && v.get<long long>() >= 0)
    return static_cast<unsigned long>(v.get<long long>());
  fail("malformed_input", "'" + key + "' must be a nonnegative integer");
}

long jlong_at(const Json& j, size_t i) {
  if (!j.is_array() || i >= j.size() || !j.at(i).is_number_integer())
    fail("malformed_input", "expected an integer array entry");
  return static_cast<long>(j.at(i).get<long long>());
}

namespace {

const Json& jarr(const Json& j, const std::string& key) {
  const Json& v = jget(j, key);
  if (!v.is_array()) fail("malformed_input", "'" + key + "' must be an array");
  return v;
}

std::vector<std::string> labels_from_json(const Json& j,
                                          const std::string& key) {
  const Json& v = jarr(j, key);
  std::vector<std::string> out;
  for (const auto& e : v) {
    if (!e.is_string())
      fail("malformed_input", "'" + key + "' must hold strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::vector<long> longs_from_json(const Json& v, const std::string& what) {
  if (!v.is_array()) fail("malformed_input", what + " must be an array");
  std::vector<long> out;
  for (size_t i = 0; i < v.size(); ++i) out.push_back(jlong_at(v, i));
  return out;
}

Json longs_json(const std::vector<long>& v) {
  Json out = Json::array();
  for (long x : v) out.push_back(x);
  return out;
}

}  // namespace

Json mpz_json(const mpz_class& z) { return z.get_str(); }

mpz_class mpz_from_json(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return mpz_class(j.get<unsigned long>());
    std::ostringstream os;
    os << j.get<long long>();
    return mpz_class(os.str());
  }
  if (j.is_string()) {
    mpz_class z;
    if (mpz_set_str(z.get_mpz_t(), j.get<std::string>().c_str(), 10) != 0)
      fail("malformed_input", "bad integer '" + j.get<std::string>() + "'");
    return z;
  }
  fail("malformed_input", "expected an integer or a decimal string");
}

Json mpz_list_json(const std::vector<mpz_class>& v) {
  Json out = Json::array();
  for (const auto& z : v) out.push_back(mpz_json(z));
  return out;
}

std::vector<mpz_class> mpz_list_from_json(const Json& j) {
  if (!j.is_array()) fail("malformed_input", "expected an array of integers");
  std::vector<mpz_class> out;
  for (const auto& e : j) out.push_back(mpz_from_json(e));
  return out;
}

Json rat_json(const Rat& r) { return rat_to_string(r); }

std::string rat_decimal(const Rat& r, unsigned digits) {
  mpz_class num = r.get_num();
  mpz_class den = r.get_den();
  std::string sign;
  if (num < 0) {
    sign = "-";
    num = -num;
  }
  mpz_class ip = num / den;
  mpz_class rem = num % den;
  std::string frac;
  for (unsigned i = 0; i < digits && rem != 0; ++i) {
    rem *= 10;
    mpz_class d = rem / den;
    frac += d.get_str();
    rem %= den;
  }
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  std::string out = sign + ip.get_str();
  if (!frac.empty()) out += "." + frac;
  return out;
}

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(mpz_from_json(j));
  if (j.is_string()) return parse_rat(j.get<std::string>());
  fail("malformed_input", "expected a rational string");
}

Json field_json(const FieldPtr& f) {
  Json j;
  j["p"] = mpz_json(f->characteristic());
  j["m"] = f->degree();
  j["modulus"] = mpz_list_json(f->modulus());
  return j;
}

FieldPtr field_from_json(const Json& j) {
  mpz_class p = mpz_from_json(jget(j, "p"));
  unsigned long m = julong(j, "m");
  if (m == 0 || m > 4096) fail("malformed_input", "field degree out of range");
  if (j.contains("modulus"))
    return Field::with_modulus(p, static_cast<unsigned>(m),
                               mpz_list_from_json(j.at("modulus")));
  return Field::make(p, static_cast<unsigned>(m));
}

Json element_json(const FieldElement& x) { return mpz_list_json(x.coeffs()); }

FieldElement element_from_json(const FieldPtr& f, const Json& j) {
  auto c = mpz_list_from_json(j);
  if (c.size() > f->degree())
    fail("malformed_input", "element has more coefficients than the degree");
  return FieldElement(f, std::move(c));
}

Json intpoly_json(const IntPoly& f) { return mpz_list_json(f.coeffs()); }

IntPoly intpoly_from_json(const Json& j) {
  auto c = mpz_list_from_json(j);
  IntPoly out;
  for (size_t i = c.size(); i-- > 0;)
    out = out * IntPoly::t() + IntPoly::constant(c[i]);
  return out;
}

Json skewpoly_json(const SkewPoly& f) {
  Json out = Json::array();
  for (const auto& a : f.coeffs()) out.push_back(element_json(a));
  return out;
}

SkewPoly skewpoly_from_json(const FieldPtr& f, const Json& j) {
  if (!j.is_array()) fail("malformed_input", "expected an array of elements");
  SkewPoly out = SkewPoly::zero(f);
  for (size_t k = 0; k < j.size(); ++k) {
    FieldElement a = element_from_json(f, j.at(k));
    if (!a.is_zero())
      out = out + SkewPoly::monomial(a, static_cast<unsigned>(k));
  }
  return out;
}

Json subspace_json(const Subspace& V) {
  Json j;
  j["field"] = field_json(V.dom.F);
  j["ground"] = V.ground;
  Json rows = Json::array();
  for (const auto& r : V.rows) {
    Json row = Json::array();
    for (const auto& x : r) row.push_back(element_json(x));
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

Subspace subspace_from_json(const Json& j) {
  FieldPtr f = field_from_json(jget(j, "field"));
  auto ground = labels_from_json(j, "ground");
  const Json& rows = jarr(j, "rows");
  Mat<GFDom> m;
  for (const auto& r : rows) {
    if (!r.is_array()) fail("malformed_input", "rows must be arrays");
    std::vector<FieldElement> row;
    for (const auto& e : r) row.push_back(element_from_json(f, e));
    m.push_back(std::move(row));
  }
  return make_subspace(GFDom{f}, std::move(ground), std::move(m));
}

Json qspace_json(const QMatrix& rows, const std::vector<std::string>& ground) {
  Json j;
  j["field"] = "Q";
  j["ground"] = ground;
  Json out = Json::array();
  for (const auto& r : rows) {
    Json row = Json::array();
    for (const auto& x : r) row.push_back(rat_json(x));
    out.push_back(std::move(row));
  }
  j["rows"] = std::move(out);
  return j;
}

void qspace_from_json(const Json& j, QMatrix& rows,
                      std::vector<std::string>& ground) {
  if (j.contains("field") && !(j.at("field").is_string() &&
                               j.at("field").get<std::string>() == "Q"))
    fail("malformed_input", "expected a rational matrix (field \"Q\")");
  ground = labels_from_json(j, "ground");
  rows.clear();
  for (const auto& r : jarr(j, "rows")) {
    if (!r.is_array()) fail("malformed_input", "rows must be arrays");
    std::vector<Rat> row;
    for (const auto& e : r) row.push_back(rat_from_json(e));
    rows.push_back(std::move(row));
  }
}

Json matroid_json(const Matroid& m) {
  Json j;
  j["ground"] = m.ground();
  j["rank"] = m.rank();
  Json bases = Json::array();
  for (const auto& b : m.basis_labels()) bases.push_back(b);
  j["bases"] = std::move(bases);
  return j;
}

Matroid matroid_from_json(const Json& j) {
  auto ground = labels_from_json(j, "ground");
  std::vector<uint64_t> masks;
  for (const auto& b : jarr(j, "bases")) {
    if (!b.is_array()) fail("malformed_input", "bases must be label arrays");
    std::vector<std::string> labels;
    for (const auto& e : b) {
      if (!e.is_string()) fail("malformed_input", "basis labels must be strings");
      labels.push_back(e.get<std::string>());
    }
    auto idx = resolve_labels(ground, labels);
    uint64_t mask = 0;
    for (auto i : idx) mask |= uint64_t(1) << i;
    masks.push_back(mask);
  }
  return Matroid(std::move(ground), std::move(masks));
}

Json window_json(const Window& w) {
  Json j;
  j["lo"] = longs_json(w.lo);
  j["hi"] = longs_json(w.hi);
  return j;
}

Window window_from_json(const Json& j) {
  Window w;
  w.lo = longs_from_json(jget(j, "lo"), "'lo'");
  w.hi = longs_from_json(jget(j, "hi"), "'hi'");
  return w;
}

Json system_json(const EquationSystem& s) {
  Json j;
  j["vars"] = s.vars();
  Json eqs = Json::array();
  for (const auto& e : s.equations()) {
    Json q;
    q["kind"] = e.kind == EqKind::Sum ? "sum" : "product";
    q["target"] = s.vars()[e.target];
    q["left"] = s.vars()[e.left];
    q["right"] = s.vars()[e.right];
    eqs.push_back(std::move(q));
  }
  j["equations"] = std::move(eqs);
  return j;
}

EquationSystem system_from_json(const Json& j) {
  auto vars = labels_from_json(j, "vars");
  std::map<std::string, int> index;
  for (size_t i = 0; i < vars.size(); ++i) {
    if (!index.emplace(vars[i], static_cast<int>(i)).second)
      fail("malformed_input", "duplicate variable '" + vars[i] + "'");
  }
  auto resolve = [&](const Json& q, const char* key) {
    std::string name = jstr(q, key);
    auto it = index.find(name);
    if (it == index.end())
      fail("malformed_input", "unknown variable '" + name + "'");
    return it->second;
  };
  std::vector<Equation> eqs;
  for (const auto& q : jarr(j, "equations")) {
    std::string kind = jstr(q, "kind");
    if (kind != "sum" && kind != "product")
      fail("malformed_input", "equation kind must be 'sum' or 'product'");
    eqs.push_back({kind == "sum" ? EqKind::Sum : EqKind::Product,
                   resolve(q, "target"), resolve(q, "left"),
                   resolve(q, "right")});
  }
  return EquationSystem(std::move(vars), std::move(eqs));
}

Json gf_assignment_json(const FieldPtr& f, const Assignment<GFRing>& a) {
  Json j;
  j["ring"] = "gf";
  j["field"] = field_json(f);
  Json vals = Json::object();
  for (const auto& [name, x] : a) vals[name] = element_json(x);
  j["values"] = std::move(vals);
  return j;
}

Json skew_assignment_json(const FieldPtr& f, const Assignment<SkewRing>& a) {
  Json j;
  j["ring"] = "skew";
  j["field"] = field_json(f);
  Json vals = Json::object();
  for (const auto& [name, x] : a) vals[name] = skewpoly_json(x);
  j["values"] = std::move(vals);
  return j;
}

Json intpoly_assignment_json(const Assignment<IntPolyRing>& a) {
  Json j;
  j["ring"] = "intpoly";
  Json vals = Json::object();
  for (const auto& [name, x] : a) vals[name] = intpoly_json(x);
  j["values"] = std::move(vals);
  return j;
}

Json rat_assignment_json(const Assignment<RatRing>& a) {
  Json j;
  j["ring"] = "rat";
  Json vals = Json::object();
  for (const auto& [name, x] : a) vals[name] = rat_json(x);
  j["values"] = std::move(vals);
  return j;
}

namespace {

const Json& assignment_values(const Json& j) {
  const Json& v = jget(j, "values");
  if (!v.is_object()) fail("malformed_input", "'values' must be an object");
  return v;
}

}  // namespace

Assignment<GFRing> gf_assignment_from_json(const Json& j, FieldPtr& f_out) {
  f_out = field_from_json(jget(j, "field"));
  Assignment<GFRing> a;
  for (const auto& [name, v] : assignment_values(j).items())
    a.emplace(name, element_from_json(f_out, v));
  return a;
}

Assignment<SkewRing> skew_assignment_from_json(const Json& j, FieldPtr& f_out) {
  f_out = field_from_json(jget(j, "field"));
  Assignment<SkewRing> a;
  for (const auto& [name, v] : assignment_values(j).items())
    a.emplace(name, skewpoly_from_json(f_out, v));
  return a;
}

Assignment<IntPolyRing> intpoly_assignment_from_json(const Json& j) {
  Assignment<IntPolyRing> a;
  for (const auto& [name, v] : assignment_values(j).items())
    a.emplace(name, intpoly_from_json(v));
  return a;
}

Assignment<RatRing> rat_assignment_from_json(const Json& j) {
  Assignment<RatRing> a;
  for (const auto& [name, v] : assignment_values(j).items())
    a.emplace(name, rat_from_json(v));
  return a;
}

Json flock_json(const FlockPtr& f) {
  Json j;
  switch (f->kind()) {
    case FlockKind::Valuation:
      j["kind"] = "valuation";
      j["p"] = mpz_json(f->prime());
      j["ground"] = f->ground();
      {
        Json rows = Json::array();
        for (const auto& r : f->matrix()) {
          Json row = Json::array();
          for (const auto& x : r) row.push_back(rat_json(x));
          rows.push_back(std::move(row));
        }
        j["matrix"] = std::move(rows);
      }
      break;
    case FlockKind::Stretched:
      j["kind"] = "stretched";
      j["factor"] = f->stretch_factor();
      j["inner"] = flock_json(f->inner());
      break;
    case FlockKind::Dual:
      j["kind"] = "dual";
      j["inner"] = flock_json(f->inner());
      break;
    case FlockKind::Explicit: {
      j["kind"] = "explicit";
      j["ground"] = f->ground();
      j["field"] = field_json(f->field());
      j["autom_exp"] = f->autom_exp();
      j["box"] = window_json(f->box());
      Json table = Json::array();
      for (const auto& [alpha, V] : f->table()) {
        Json entry;
        entry["alpha"] = longs_json(alpha);
        Json rows = Json::array();
        for (const auto& r : V.rows) {
          Json row = Json::array();
          for (const auto& x : r) row.push_back(element_json(x));
          rows.push_back(std::move(row));
        }
        entry["rows"] = std::move(rows);
        table.push_back(std::move(entry));
      }
      j["table"] = std::move(table);
      break;
    }
  }
  return j;
}

FlockPtr flock_from_json(const Json& j) {
  std::string kind = jstr(j, "kind");
  if (kind == "valuation") {
    auto ground = labels_from_json(j, "ground");
    QMatrix rows;
    for (const auto& r : jarr(j, "matrix")) {
      if (!r.is_array()) fail("malformed_input", "matrix rows must be arrays");
      std::vector<Rat> row;
      for (const auto& e : r) row.push_back(rat_from_json(e));
      rows.push_back(std::move(row));
    }
    return Flock::valuation(std::move(rows), std::move(ground),
                            mpz_from_json(jget(j, "p")));
  }
  if (kind == "stretched")
    return stretch_flock(flock_from_json(jget(j, "inner")),
                         julong(j, "factor"));
  if (kind == "dual") return dual_flock(flock_from_json(jget(j, "inner")));
  if (kind == "explicit") {
    auto ground = labels_from_json(j, "ground");
    FieldPtr f = field_from_json(jget(j, "field"));
    const Json& ev = jget(j, "autom_exp");
    if (!ev.is_number_integer())
      fail("malformed_input", "'autom_exp' must be an integer");
    Window box = window_from_json(jget(j, "box"));
    std::map<std::vector<long>, Subspace> table;
    for (const auto& entry : jarr(j, "table")) {
      auto alpha = longs_from_json(jget(entry, "alpha"), "'alpha'");
      Mat<GFDom> rows;
      for (const auto& r : jarr(entry, "rows")) {
        if (!r.is_array()) fail("malformed_input", "rows must be arrays");
        std::vector<FieldElement> row;
        for (const auto& e : r) row.push_back(element_from_json(f, e));
        rows.push_back(std::move(row));
      }
      table.emplace(std::move(alpha),
                    make_subspace(GFDom{f}, ground, std::move(rows)));
    }
    return Flock::explicit_window(std::move(ground), f,
                                  static_cast<long>(ev.get<long long>()),
                                  std::move(box), std::move(table));
  }
  fail("malformed_input", "unknown flock kind '" + kind + "'");
}

Json report_json(const BSequence& r) {
  Json j;
  j["n"] = mpz_json(r.n);
  j["s"] = r.s;
  j["b"] = mpz_list_json(r.b);
  return j;
}

Json report_json(const BrylawskiMatrix& r) {
  Json j;
  j["n"] = mpz_json(r.n);
  j["s"] = r.s;
  j["labels"] = r.labels;
  Json cols = Json::array();
  for (const auto& c : r.columns) cols.push_back(mpz_list_json(c));
  j["columns"] = std::move(cols);
  return j;
}

Json report_json(const GBReport& r) {
  Json j;
  j["primes"] = mpz_list_json(r.primes);
  j["n"] = mpz_json(r.n);
  j["s"] = r.s;
  j["verdict"] = r.verdict;
  Json w = Json::array();
  for (const auto& x : r.witness) {
    Json e;
    e["i"] = x.i;
    e["j"] = x.j;
    e["prime"] = mpz_json(x.prime);
    e["residue"] = x.residue;
    w.push_back(std::move(e));
  }
  j["witness"] = std::move(w);
  return j;
}

Json report_json(const GBSearchResult& r) {
  Json j;
  j["sets_checked"] = r.sets_checked;
  Json f = Json::array();
  for (const auto& rep : r.found) f.push_back(report_json(rep));
  j["found"] = std::move(f);
  return j;
}

Json report_json(const RigidityReport& r) {
  Json j;
  j["primes"] = mpz_list_json(r.primes);
  j["p"] = mpz_json(r.p);
  j["n"] = mpz_json(r.n);
  j["s"] = r.s;
  j["parity_degenerate"] = r.parity_degenerate;
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json e;
    e["name"] = c.name;
    e["pass"] = c.pass;
    e["detail"] = c.detail;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  j["all_pass"] = r.all_pass;
  return j;
}

Json report_json(const DensityReport& r) {
  Json j;
  j["moduli"] = mpz_list_json(r.moduli);
  j["limit"] = r.limit;
  j["primes_below"] = r.primes_below;
  j["members_below"] = r.members_below;
  j["empirical"] = rat_json(r.empirical);
  j["empirical_decimal"] = rat_decimal(r.empirical);
  j["theoretical"] = rat_json(r.theoretical);
  j["theoretical_decimal"] = rat_decimal(r.theoretical);
  return j;
}

Json report_json(const GreedyReport& r) {
  Json j;
  j["alpha"] = rat_json(r.alpha);
  j["eps"] = rat_json(r.eps);
  j["primes"] = mpz_list_json(r.primes);
  j["product"] = rat_json(r.product);
  j["product_decimal"] = rat_decimal(r.product);
  j["error"] = rat_json(r.error);
  j["error_decimal"] = rat_decimal(r.error);
  return j;
}

namespace {

Json pair_list_json(const std::vector<std::pair<std::string, std::string>>& v) {
  Json out = Json::array();
  for (const auto& [a, b] : v) out.push_back(Json::array({a, b}));
  return out;
}

}  // namespace

Json report_json(const BadSetReport& r) {
  Json j;
  j["degree_bound"] = mpz_json(r.degree_bound);
  j["has_identical_pair"] = r.has_identical_pair;
  j["identical_pairs"] = pair_list_json(r.identical_pairs);
  Json pp = Json::array();
  for (const auto& pr : r.per_prime) {
    Json e;
    e["p"] = mpz_json(pr.p);
    e["all_nonzero"] = pr.all_nonzero;
    e["vanishing"] = pair_list_json(pr.vanishing);
    pp.push_back(std::move(e));
  }
  j["per_prime"] = std::move(pp);
  return j;
}

Json report_json(const VerificationReport& r) {
  Json j;
  j["accepted"] = r.accepted;
  Json v = Json::array();
  for (const auto& x : r.violated) {
    Json e;
    if (x.equation == SIZE_MAX)
      e["equation"] = nullptr;
    else
      e["equation"] = x.equation;
    e["text"] = x.text;
    v.push_back(std::move(e));
  }
  j["violated"] = std::move(v);
  Json c = Json::array();
  for (const auto& x : r.collisions) {
    Json e;
    e["a"] = x.a;
    e["b"] = x.b;
    e["value"] = x.value;
    c.push_back(std::move(e));
  }
  j["collisions"] = std::move(c);
  return j;
}

Json report_json(const AxiomReport& r) {
  Json j;
  j["window"] = window_json(r.window);
  j["points"] = r.points;
  j["checks"] = r.checks;
  Json v = Json::array();
  for (const auto& x : r.violations) {
    Json e;
    e["axiom"] = x.axiom;
    e["alpha"] = longs_json(x.alpha);
    e["detail"] = x.detail;
    v.push_back(std::move(e));
  }
  j["violations"] = std::move(v);
  j["ok"] = r.ok();
  return j;
}

Json report_json(const std::vector<ValidationFinding>& r) {
  Json out = Json::array();
  for (const auto& f : r) {
    Json e;
    e["equation"] = f.equation;
    e["message"] = f.message;
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace mcs
