#include "secoh/problem.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <set>

#include "secoh/errors.hpp"
#include "secoh/oracle.hpp"
#include "secoh/transforms.hpp"

namespace secoh {

using nlohmann::json;

namespace {

constexpr std::int64_t kExactJsonLimit = std::int64_t{1} << 53;

[[noreturn]] void fail(const std::string& field, const std::string& msg) { throw ValidationError(field + ": " + msg); }

Integer parse_integer(const json& v, const std::string& field) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return Integer(v.get<std::uint64_t>());
    return Integer(v.get<std::int64_t>());
  }
  if (v.is_string()) {
    try {
      return Integer::parse(v.get<std::string>());
    } catch (const std::exception&) {
      fail(field, "not an integer: \"" + v.get<std::string>() + "\"");
    }
  }
  fail(field, "expected an integer");
}

std::int64_t parse_small(const json& v, const std::string& field, std::int64_t lo, std::int64_t hi) {
  Integer x = parse_integer(v, field);
  if (!x.fits_int64() || x.to_int64() < lo || x.to_int64() > hi) {
    fail(field, "value " + x.str() + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return x.to_int64();
}

const json* member(const json& obj, const char* key) {
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

void only_keys(const json& obj, const std::string& field, std::initializer_list<const char*> allowed) {
  for (const auto& [k, v] : obj.items()) {
    (void)v;
    bool ok = false;
    for (const char* a : allowed) ok = ok || k == a;
    if (!ok) fail(field.empty() ? k : field + "." + k, "unknown field");
  }
}

FiniteGroup parse_group(const json* g) {
  if (!g) fail("G", "required for this variant");
  if (!g->is_object()) fail("G", "expected an object");
  only_keys(*g, "G", {"order", "table", "identity", "name"});
  const json* order_j = member(*g, "order");
  if (!order_j) fail("G.order", "missing");
  const auto order = static_cast<std::size_t>(parse_small(*order_j, "G.order", 1, 256));
  const json* table_j = member(*g, "table");
  if (!table_j || !table_j->is_array()) fail("G.table", "expected an array");
  std::vector<Elem> table;
  auto push = [&](const json& v, const std::string& where) {
    table.push_back(static_cast<Elem>(parse_small(v, where, 0, static_cast<std::int64_t>(order) - 1)));
  };
  if (!table_j->empty() && (*table_j)[0].is_array()) {
    if (table_j->size() != order) fail("G.table", "expected " + std::to_string(order) + " rows");
    for (std::size_t i = 0; i < order; ++i) {
      const json& row = (*table_j)[i];
      if (!row.is_array() || row.size() != order) fail("G.table[" + std::to_string(i) + "]", "expected a row of length " + std::to_string(order));
      for (std::size_t j = 0; j < order; ++j) push(row[j], "G.table[" + std::to_string(i) + "][" + std::to_string(j) + "]");
    }
  } else {
    if (table_j->size() != order * order) fail("G.table", "expected " + std::to_string(order * order) + " entries");
    for (std::size_t i = 0; i < table_j->size(); ++i) push((*table_j)[i], "G.table[" + std::to_string(i) + "]");
  }
  std::optional<Elem> identity;
  if (const json* e = member(*g, "identity")) {
    identity = static_cast<Elem>(parse_small(*e, "G.identity", 0, static_cast<std::int64_t>(order) - 1));
  }
  try {
    return FiniteGroup::validate(order, std::move(table), identity);
  } catch (const ValidationError& err) {
    fail("G", err.what());
  }
}

FgAbGroup parse_invariants(const json& m, const std::string& field) {
  const json* inv = member(m, "invariants");
  if (!inv || !inv->is_array()) fail(field + ".invariants", "expected an array");
  std::vector<Integer> d;
  for (std::size_t i = 0; i < inv->size(); ++i) {
    d.push_back(parse_integer((*inv)[i], field + ".invariants[" + std::to_string(i) + "]"));
  }
  try {
    return FgAbGroup(std::move(d));
  } catch (const std::invalid_argument& err) {
    fail(field + ".invariants", std::string(err.what()) + " (write the group in invariant-factor form)");
  }
}

GAction parse_module(const json* m, const std::string& field, const FiniteGroup& g) {
  if (!m) fail(field, "required for this variant");
  if (!m->is_object()) fail(field, "expected an object");
  only_keys(*m, field, {"invariants", "action", "name"});
  const FgAbGroup module = parse_invariants(*m, field);
  const json* act = member(*m, "action");
  if (!act || act->is_null()) return GAction::trivial(g, module);
  if (!act->is_array() || act->size() != g.order()) {
    fail(field + ".action", "expected one matrix per group element (" + std::to_string(g.order()) + ")");
  }
  const std::size_t r = module.rank();
  std::vector<IntMatrix> mats;
  for (std::size_t x = 0; x < g.order(); ++x) {
    const std::string where = field + ".action[" + std::to_string(x) + "]";
    const json& e = (*act)[x];
    IntMatrix mat(r, r);
    if (!e.is_array()) {
      Integer s = parse_integer(e, where);
      for (std::size_t t = 0; t < r; ++t) mat.set(t, t, s);
    } else {
      if (e.size() != r) fail(where, "expected " + std::to_string(r) + " rows");
      for (std::size_t i = 0; i < r; ++i) {
        if (!e[i].is_array() || e[i].size() != r) fail(where, "expected a " + std::to_string(r) + "x" + std::to_string(r) + " matrix");
        for (std::size_t j = 0; j < r; ++j) {
          mat.set(i, j, parse_integer(e[i][j], where + "[" + std::to_string(i) + "][" + std::to_string(j) + "]"));
        }
      }
    }
    mats.push_back(std::move(mat));
  }
  try {
    return validate_action(g, module, std::move(mats));
  } catch (const ValidationError& err) {
    fail(field + ".action", err.what());
  }
}

std::vector<GroupElement> parse_values(const json* obj, const std::string& field, const FgAbGroup& module,
                                       std::size_t expected) {
  if (!obj->is_object()) fail(field, "expected an object with a values array");
  only_keys(*obj, field, {"values"});
  const json* vals = member(*obj, "values");
  if (!vals || !vals->is_array()) fail(field + ".values", "expected an array");
  if (vals->size() != expected) {
    fail(field + ".values", "expected " + std::to_string(expected) + " entries, got " + std::to_string(vals->size()));
  }
  std::vector<GroupElement> out;
  for (std::size_t i = 0; i < vals->size(); ++i) {
    const std::string where = field + ".values[" + std::to_string(i) + "]";
    const json& v = (*vals)[i];
    GroupElement x = module.zero();
    if (v.is_array()) {
      if (v.size() != module.rank()) fail(where, "expected " + std::to_string(module.rank()) + " coordinates");
      for (std::size_t t = 0; t < v.size(); ++t) x.coeffs[t] = parse_integer(v[t], where);
    } else {
      if (module.rank() != 1) fail(where, "expected a coordinate array");
      x.coeffs[0] = parse_integer(v, where);
    }
    out.push_back(module.reduce(std::move(x)));
  }
  return out;
}

json int_json(const Integer& v) {
  if (v.fits_int64() && v.to_int64() < kExactJsonLimit && v.to_int64() > -kExactJsonLimit) return v.to_int64();
  return v.str();
}

json uint_json(std::uint64_t v) {
  if (v < static_cast<std::uint64_t>(kExactJsonLimit)) return v;
  return std::to_string(v);
}

json tuple_json(const Tuple& t) { return json{{"degree", t.degree}, {"g", t.g}, {"a", t.a}}; }

json group_json(const FgAbGroup& g) {
  json inv = json::array();
  for (const auto& d : g.torsion()) inv.push_back(int_json(d));
  return json{{"invariant_factors", inv}, {"free_rank", g.free_rank()}, {"group", g.str()}};
}

json check_json(const std::string& name, int degree, bool pass, json witness) {
  json c{{"name", name}, {"pass", pass}, {"witness", pass ? json(nullptr) : std::move(witness)}};
  if (degree >= 0) c["degree"] = degree;
  return c;
}

json point_check(const std::string& name, int degree, const PointCheck& pc) {
  json c = check_json(name, degree, pc.pass, pc.witness ? tuple_json(*pc.witness) : json(nullptr));
  c["samples"] = pc.checked;
  return c;
}

json base_document(const ProblemSpec& spec, const char* mode) {
  json doc{{"input_hash", spec.input_hash}, {"variant", std::string(variant_name(spec.variant))}, {"mode", mode}};
  if (!spec.name.empty()) doc["name"] = spec.name;
  doc["results"] = json::array();
  doc["checks"] = json::array();
  return doc;
}

std::int64_t millis_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ComplexData ProblemSpec::complex_data() const {
  switch (variant) {
    case Variant::abelian:
      return ComplexData::abelian(action_a.module(), action_b.module());
    case Variant::triple:
      return ComplexData::triple(action_a, action_b, kappa);
    case Variant::classical:
      return ComplexData::classical(action_b);
  }
  throw std::logic_error("unknown variant");
}

ProblemSpec parse_problem(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    std::string msg = e.what();
    auto pos = msg.find("parse error");
    throw ValidationError("syntax error: " + (pos == std::string::npos ? msg : msg.substr(pos)));
  }
  if (!doc.is_object()) throw ValidationError("document: expected a JSON object");
  only_keys(doc, "", {"variant", "name", "description", "G", "A", "B", "kappa", "u", "degrees", "mode"});

  ProblemSpec spec;
  const json* variant = member(doc, "variant");
  if (!variant || !variant->is_string()) fail("variant", "expected \"abelian\", \"triple\" or \"classical\"");
  const std::string v = variant->get<std::string>();
  if (v == "abelian") {
    spec.variant = Variant::abelian;
  } else if (v == "triple") {
    spec.variant = Variant::triple;
  } else if (v == "classical") {
    spec.variant = Variant::classical;
  } else {
    fail("variant", "unknown variant \"" + v + "\"");
  }
  if (const json* n = member(doc, "name")) {
    if (!n->is_string()) fail("name", "expected a string");
    spec.name = n->get<std::string>();
  }

  FiniteGroup g = FiniteGroup::trivial();
  if (spec.variant == Variant::abelian) {
    if (member(doc, "G")) fail("G", "not used by the abelian variant");
  } else {
    g = parse_group(member(doc, "G"));
  }
  if (spec.variant == Variant::classical) {
    if (member(doc, "A")) fail("A", "not used by the classical variant");
    spec.action_a = GAction::trivial(g, FgAbGroup());
  } else {
    spec.action_a = parse_module(member(doc, "A"), "A", g);
    if (!spec.action_a.module().is_finite()) fail("A.invariants", "A must be finite");
  }
  spec.action_b = parse_module(member(doc, "B"), "B", g);

  const std::size_t n = g.order();
  spec.kappa = Cocycle3::zero(spec.action_a);
  if (const json* k = member(doc, "kappa")) {
    if (spec.variant != Variant::triple) fail("kappa", "only the triple variant takes a cocycle");
    auto values = parse_values(k, "kappa", spec.action_a.module(), n * n * n);
    try {
      spec.kappa = make_cocycle3(spec.action_a, std::move(values));
    } catch (const ValidationError& err) {
      fail("kappa", err.what());
    }
  }
  if (const json* u = member(doc, "u")) {
    if (spec.variant != Variant::triple) fail("u", "only the triple variant takes u");
    spec.u = make_cochain2(spec.action_a, parse_values(u, "u", spec.action_a.module(), n * n));
  }

  const json* degrees = member(doc, "degrees");
  if (!degrees || !degrees->is_array() || degrees->empty()) fail("degrees", "expected a non-empty array");
  for (std::size_t i = 0; i < degrees->size(); ++i) {
    spec.degrees.push_back(static_cast<int>(parse_small((*degrees)[i], "degrees[" + std::to_string(i) + "]", 0, 16)));
  }

  if (const json* m = member(doc, "mode")) {
    if (!m->is_string()) fail("mode", "expected a string");
    const std::string s = m->get<std::string>();
    if (s == "cohomology") {
      spec.mode = Mode::cohomology;
    } else if (s == "verify") {
      spec.mode = Mode::verify;
    } else if (s == "oracle") {
      spec.mode = Mode::oracle;
    } else if (s == "faces-dump") {
      spec.mode = Mode::faces;
    } else {
      fail("mode", "unknown mode \"" + s + "\"");
    }
  }
  spec.input_hash = fnv1a_hex(doc.dump());
  return spec;
}

json run_cohomology(const ProblemSpec& spec, const RunOptions& opts) {
  const CochainComplex c(spec.complex_data());
  json doc = base_document(spec, "cohomology");
  for (int n : spec.degrees) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto rec = c.cohomology(n, opts.ceiling);
    json r = group_json(rec.group);
    r["degree"] = n;
    r["source_rank"] = uint_json(rec.source_rank);
    r["target_rank"] = uint_json(rec.target_rank);
    r["millis"] = millis_since(t0);
    doc["results"].push_back(std::move(r));
  }
  return doc;
}

json run_verify(const ProblemSpec& spec, const RunOptions& opts) {
  const CochainComplex c(spec.complex_data());
  json doc = base_document(spec, "verify");
  json skipped = json::array();
  json observations = json::array();
  std::mt19937_64 rng(opts.seed);
  const std::size_t samples = opts.samples;

  if (spec.variant == Variant::triple) {
    const auto k = verify_cocycle3(spec.kappa);
    doc["checks"].push_back(check_json("kappa_cocycle", -1, k.ok, json{{"quadruple", k.witness}}));
  }
  if (spec.variant != Variant::classical) {
    const FgAbGroup& a = c.a();
    const std::uint64_t na = a.element_count();
    const bool exhaustive = na <= 10;
    const auto t = ternary_check(a, exhaustive ? 0 : samples, opts.seed);
    json w = t.witness ? json(*t.witness) : json(nullptr);
    doc["checks"].push_back(check_json("ternary_associativity", -1, t.holds, json{{"tuple", w}}));
  }

  std::optional<CochainComplex> classical, plain, shifted;
  std::optional<PhiContext> phi;
  if (spec.variant == Variant::triple) {
    classical.emplace(ComplexData::classical(spec.action_b));
    plain.emplace(ComplexData::abelian(c.a(), c.b()));
    if (spec.u) {
      phi = PhiContext::from_u(spec.kappa, *spec.u);
      shifted.emplace(ComplexData::triple(spec.action_a, spec.action_b, phi->kappa_prime));
    }
  }

  for (int n : spec.degrees) {
    doc["checks"].push_back(point_check("delta_squared_pointwise", n, check_delta_squared(c, n, samples, rng)));
    if (n >= 1) {
      try {
        const auto s = c.slice(n, opts.ceiling);
        doc["checks"].push_back(check_json("delta_squared_matrix", n, s.composite_vanishes(), json(nullptr)));
      } catch (const ScaleError& e) {
        skipped.push_back(json{{"name", "delta_squared_matrix"}, {"degree", n}, {"reason", e.what()}});
      }
    }
    if (c.tuple_count(n) <= (1u << 16) && c.tuple_count(n + 1) <= (1u << 16)) {
      doc["checks"].push_back(point_check("matrix_matches_pointwise", n, check_matrix_matches_pointwise(c, n, rng, opts.ceiling)));
    } else {
      skipped.push_back(json{{"name", "matrix_matches_pointwise"}, {"degree", n}, {"reason", "tuple space too large"}});
    }
    if (n >= 1 && spec.variant != Variant::triple) {
      doc["checks"].push_back(point_check("simplicial_identity", n, check_simplicial_identity(c, n, samples, rng)));
    }
    if (spec.variant == Variant::triple) {
      doc["checks"].push_back(point_check("iota_chain_map", n, check_iota_chain_map(*classical, c, n, samples, rng)));
      doc["checks"].push_back(point_check("rho_chain_map", n, check_rho_chain_map(c, *plain, n, samples, rng)));
      const auto obs = observe_exactness(c, n);
      observations.push_back(json{{"name", "ker_rho_equals_im_iota"},
                                  {"degree", n},
                                  {"evaluated", obs.evaluated},
                                  {"image_in_kernel", obs.image_in_kernel},
                                  {"kernel_in_image", obs.kernel_in_image}});
    }
    if (phi) {
      doc["checks"].push_back(point_check("phi_chain_map", n, check_phi_chain_map(c, *shifted, phi->u, n, samples, rng)));
      doc["checks"].push_back(point_check("phi_composition", n, check_phi_composition(c, phi->u, phi->u, n, samples, rng)));
      // Phi_u Phi_{-u} is the identity: compare with Phi_0.
      doc["checks"].push_back(point_check(
          "phi_inverse", n,
          check_phi_composition(c, phi->u, negate_cochain(phi->u), n, samples, rng)));
      try {
        const auto h = c.cohomology(n, opts.ceiling).group;
        const auto hp = shifted->cohomology(n, opts.ceiling).group;
        doc["checks"].push_back(check_json("phi_cohomology_invariance", n, h == hp,
                                           json{{"kappa", h.str()}, {"kappa_prime", hp.str()}}));
      } catch (const ScaleError& e) {
        skipped.push_back(json{{"name", "phi_cohomology_invariance"}, {"degree", n}, {"reason", e.what()}});
      }
    }
  }
  doc["skipped"] = std::move(skipped);
  doc["observations"] = std::move(observations);
  return doc;
}

json run_oracle(const ProblemSpec& spec, const RunOptions& opts) {
  const CochainComplex c(spec.complex_data());
  json doc = base_document(spec, "oracle");
  for (int n : spec.degrees) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto brute = brute_cohomology_summary(c, n);
    const auto rec = c.cohomology(n, opts.ceiling);
    json r = group_json(rec.group);
    r["degree"] = n;
    r["source_rank"] = uint_json(rec.source_rank);
    r["target_rank"] = uint_json(rec.target_rank);
    r["oracle"] = json{{"cochains", brute.cochains},         {"cocycles", brute.cocycles},
                       {"coboundaries", brute.coboundaries}, {"image_next", brute.image_next},
                       {"order", brute.order},               {"exponent", brute.exponent}};
    r["millis"] = millis_since(t0);
    const bool finite = rec.group.is_finite();
    const Integer order = finite ? rec.group.order() : Integer(0);
    const Integer exponent = rec.group.exponent();
    const bool agree = finite && order == Integer(brute.order) && exponent == Integer(brute.exponent);
    doc["checks"].push_back(check_json("oracle_agreement", n, agree,
                                       json{{"pipeline_order", finite ? int_json(order) : json("infinite")},
                                            {"pipeline_exponent", int_json(exponent)},
                                            {"oracle_order", brute.order},
                                            {"oracle_exponent", brute.exponent}}));
    doc["checks"].push_back(check_json("first_isomorphism", n, brute.cochains == brute.cocycles * brute.image_next,
                                       json{{"cochains", brute.cochains},
                                            {"cocycles", brute.cocycles},
                                            {"image_next", brute.image_next}}));
    doc["results"].push_back(std::move(r));
  }
  return doc;
}

json run_faces(const ProblemSpec& spec, const RunOptions& opts) {
  const CochainComplex c(spec.complex_data());
  const int n = opts.faces_degree >= 0 ? opts.faces_degree : spec.degrees.front();
  const std::uint64_t count = c.tuple_count(n + 1);
  constexpr std::uint64_t kLimit = 4096;
  if (count > kLimit) {
    throw ScaleError("faces of degree " + std::to_string(n) + " cover " + std::to_string(count) + " tuples", count,
                     kLimit);
  }
  json doc = base_document(spec, "faces-dump");
  json a_elems = json::array();
  for (std::size_t i = 0; i < c.a_order(); ++i) {
    json coords = json::array();
    for (const auto& x : c.a_element(static_cast<Elem>(i)).coeffs) coords.push_back(int_json(x));
    a_elems.push_back(std::move(coords));
  }
  doc["degree"] = n;
  doc["a_elements"] = std::move(a_elems);
  json faces = json::array();
  for (std::uint64_t i = 0; i < count; ++i) {
    const Tuple t = c.decode(n + 1, i);
    json f = json::array();
    for (int k = 0; k <= n + 1; ++k) f.push_back(c.encode(c.face(n, k, t)));
    faces.push_back(json{{"index", i}, {"g", t.g}, {"a", t.a}, {"faces", std::move(f)}});
  }
  doc["faces"] = std::move(faces);
  return doc;
}

json run(const ProblemSpec& spec, const RunOptions& opts) {
  switch (spec.mode) {
    case Mode::cohomology:
      return run_cohomology(spec, opts);
    case Mode::verify:
      return run_verify(spec, opts);
    case Mode::oracle:
      return run_oracle(spec, opts);
    case Mode::faces:
      return run_faces(spec, opts);
  }
  throw std::logic_error("unknown mode");
}

bool all_checks_pass(const json& doc) {
  auto it = doc.find("checks");
  if (it == doc.end()) return true;
  for (const auto& c : *it) {
    if (!c.value("pass", false)) return false;
  }
  return true;
}

}  // namespace secoh
