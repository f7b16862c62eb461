#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "brylawski.hpp"
#include "density.hpp"
#include "eqsys.hpp"
#include "flock.hpp"
#include "matroid.hpp"

namespace mcs {

using Json = nlohmann::json;

// Parses text, reporting malformed input as Error("malformed_json").
Json parse_json_text(const std::string& text);
Json parse_json_file(const std::string& path);

// Accepts either a bare payload or a full result envelope; in the latter
// case returns the "payload" member, so emitted results feed back into
// consuming commands unchanged.
const Json& unwrap_payload(const Json& j);

// Checked member access with stable error codes.
const Json& jget(const Json& j, const std::string& key);
std::string jstr(const Json& j, const std::string& key);
unsigned long julong(const Json& j, const std::string& key);
long jlong_at(const Json& j, size_t i);

// Big integers travel as decimal strings; plain JSON integers are accepted
// on input.
Json mpz_json(const mpz_class& z);
mpz_class mpz_from_json(const Json& j);
Json mpz_list_json(const std::vector<mpz_class>& v);
std::vector<mpz_class> mpz_list_from_json(const Json& j);

// Rationals travel as "a" or "a/b" strings.
Json rat_json(const Rat& r);
Rat rat_from_json(const Json& j);
// Truncated decimal rendering, trailing zeros trimmed.
std::string rat_decimal(const Rat& r, unsigned digits = 12);

Json field_json(const FieldPtr& f);
FieldPtr field_from_json(const Json& j);

// Field elements are little-endian coefficient arrays.
Json element_json(const FieldElement& x);
FieldElement element_from_json(const FieldPtr& f, const Json& j);

Json intpoly_json(const IntPoly& f);
IntPoly intpoly_from_json(const Json& j);
Json skewpoly_json(const SkewPoly& f);
SkewPoly skewpoly_from_json(const FieldPtr& f, const Json& j);

// {"field": descriptor, "ground": [...], "rows": [[element...]...]}
Json subspace_json(const Subspace& V);
Subspace subspace_from_json(const Json& j);

// {"field": "Q", "ground": [...], "rows": [["a/b"...]...]}
Json qspace_json(const QMatrix& rows, const std::vector<std::string>& ground);
void qspace_from_json(const Json& j, QMatrix& rows,
                      std::vector<std::string>& ground);

Json matroid_json(const Matroid& m);
Matroid matroid_from_json(const Json& j);

Json window_json(const Window& w);
Window window_from_json(const Json& j);

Json system_json(const EquationSystem& s);
EquationSystem system_from_json(const Json& j);

// Ring-tagged assignments: {"ring": tag, "field": ..., "values": {...}}.
// Tags: "gf", "skew", "intpoly", "rat"; gf and skew carry a field.
Json gf_assignment_json(const FieldPtr& f, const Assignment<GFRing>& a);
Json skew_assignment_json(const FieldPtr& f, const Assignment<SkewRing>& a);
Json intpoly_assignment_json(const Assignment<IntPolyRing>& a);
Json rat_assignment_json(const Assignment<RatRing>& a);
Assignment<GFRing> gf_assignment_from_json(const Json& j, FieldPtr& f_out);
Assignment<SkewRing> skew_assignment_from_json(const Json& j, FieldPtr& f_out);
Assignment<IntPolyRing> intpoly_assignment_from_json(const Json& j);
Assignment<RatRing> rat_assignment_from_json(const Json& j);

// Flock descriptors round-trip construction: valuation and explicit carry
// their data, stretched and dual carry factor/inner recursively.
Json flock_json(const FlockPtr& f);
FlockPtr flock_from_json(const Json& j);

Json report_json(const BSequence& r);
Json report_json(const BrylawskiMatrix& r);
Json report_json(const GBReport& r);
Json report_json(const GBSearchResult& r);
Json report_json(const RigidityReport& r);
Json report_json(const DensityReport& r);
Json report_json(const GreedyReport& r);
Json report_json(const BadSetReport& r);
Json report_json(const VerificationReport& r);
Json report_json(const AxiomReport& r);
Json report_json(const std::vector<ValidationFinding>& r);

}  // namespace mcs
