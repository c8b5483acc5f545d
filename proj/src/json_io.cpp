#include "convexa/json_io.hpp"

#include "convexa/errors.hpp"

namespace convexa {

Json to_json(NeuronSet s) { return Json(s.labels()); }

Json to_json(const std::vector<NeuronSet>& words) {
  Json out = Json::array();
  for (NeuronSet s : words) out.push_back(to_json(s));
  return out;
}

Json to_json(const NeuralCode& code) {
  Json out;
  out["n"] = code.n();
  out["codewords"] = to_json(code.codewords());
  return out;
}

Json to_json(const PseudoMonomial& pm) {
  Json out;
  out["sigma"] = to_json(pm.sigma);
  out["tau"] = to_json(pm.tau);
  return out;
}

Json to_json(const CanonicalForm& cf) {
  Json out = Json::array();
  for (const auto& pm : cf) out.push_back(to_json(pm));
  return out;
}

Json to_json(const std::vector<RFRelation>& rels) {
  Json out = Json::array();
  for (const auto& r : rels) {
    Json e;
    e["sigma"] = to_json(r.sigma);
    e["tau"] = to_json(r.tau);
    e["kind"] = to_string(r.kind);
    e["text"] = to_string(r);
    out.push_back(e);
  }
  return out;
}

Json to_json(const LinearOrdering& ord) {
  Json out;
  out["kind"] = ord.kind == OrderingKind::Path ? "path" : "cycle";
  out["sequence"] = to_json(ord.sequence);
  return out;
}

Json to_json(const ContainmentGraph& g) {
  Json out;
  out["vertices"] = to_json(g.vertices());
  Json adj = Json::array();
  for (std::size_t v = 0; v < g.size(); ++v) adj.push_back(g.neighbors(v));
  out["adjacency"] = adj;
  return out;
}

Json to_json(const RigidWitness& w) {
  Json out;
  out["support"] = to_json(w.support);
  out["mode"] = to_string(w.mode);
  if (w.mode == RigidMode::Union) {
    out["restricted_to"] = to_json(w.restricted_to);
    if (w.path) out["path"] = to_json(w.path->sequence);
  } else {
    out["certificate"] = "automatic";
  }
  return out;
}

Json to_json(const ObstructionCertificate& cert) {
  Json out;
  out["kind"] = to_string(cert.kind);
  if (cert.kind == CertificateKind::RFTuple) {
    const RFTuple& t = *cert.tuple;
    out["tuple"] = {{"i", t.i}, {"j", t.j}, {"k", t.k}, {"l", t.l}, {"m", t.m}};
    out["rows"] = cert.rows.rows;
    return out;
  }
  Json ws = Json::array();
  for (const auto& w : cert.witnesses) ws.push_back(to_json(w));
  out["witnesses"] = ws;
  out["subcode"] = to_json(cert.subcode);
  out["components"] = Json::array({to_json(cert.components[0]), to_json(cert.components[1])});
  if (cert.kind == CertificateKind::Cycle) {
    out["cycle"] = to_json(cert.cycle->sequence);
    out["chosen_r"] = to_json(cert.chosen_r);
  }
  return out;
}

Json to_json(const std::vector<RFMatch>& matches) {
  Json tuples = Json::array();
  for (const auto& m : matches) {
    Json t;
    t["i"] = m.tuple.i;
    t["j"] = m.tuple.j;
    t["k"] = m.tuple.k;
    t["l"] = m.tuple.l;
    t["m"] = m.tuple.m;
    t["rows"] = m.check.rows;
    tuples.push_back(t);
  }
  Json out;
  out["tuples"] = tuples;
  return out;
}

Json to_json(const Realization& r) {
  Json out;
  out["dim"] = r.dim;
  out["mode"] = to_string(r.mode);
  Json bodies = Json::array();
  for (const auto& b : r.bodies) {
    Json cs = Json::array();
    for (const auto& c : b.constraints) {
      Json normal = Json::array();
      for (const auto& a : c.normal) normal.push_back(format_rational(a));
      cs.push_back({{"normal", normal}, {"offset", format_rational(c.offset)}, {"rel", to_string(c.rel)}});
    }
    bodies.push_back({{"constraints", cs}});
  }
  out["bodies"] = bodies;
  return out;
}

namespace {

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) fail(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_float()) fail("floating-point numbers are not exact; quote rationals as \"p/q\"");
  fail("expected a rational");
}

}  // namespace

NeuronSet neuron_set_from_json(const Json& j) {
  if (!j.is_array()) fail("neuron set must be an array of labels");
  NeuronSet s;
  for (const auto& l : j) {
    if (!l.is_number_integer()) fail("labels must be integers");
    const int label = l.get<int>();
    if (label < 1 || label > kMaxNeurons) fail("label " + std::to_string(label) + " outside 1..64");
    s = s.with(label);
  }
  return s;
}

PseudoMonomial pseudo_monomial_from_json(const Json& j) {
  PseudoMonomial pm{neuron_set_from_json(field(j, "sigma")), neuron_set_from_json(field(j, "tau"))};
  if (pm.sigma.intersects(pm.tau)) fail("sigma and tau overlap");
  return pm;
}

LinearOrdering ordering_from_json(const Json& j) {
  LinearOrdering ord;
  const std::string kind = field(j, "kind").get<std::string>();
  if (kind != "path" && kind != "cycle") fail("ordering kind must be path or cycle");
  ord.kind = kind == "path" ? OrderingKind::Path : OrderingKind::Cycle;
  for (const auto& s : field(j, "sequence")) ord.sequence.push_back(neuron_set_from_json(s));
  return ord;
}

RigidWitness witness_from_json(const Json& j) {
  RigidWitness w;
  w.support = neuron_set_from_json(field(j, "support"));
  const std::string mode = field(j, "mode").get<std::string>();
  if (mode == "union") {
    w.mode = RigidMode::Union;
    w.restricted_to = neuron_set_from_json(field(j, "restricted_to"));
    LinearOrdering path;
    for (const auto& s : field(j, "path")) path.sequence.push_back(neuron_set_from_json(s));
    w.path = path;
  } else if (mode == "intersection") {
    w.mode = RigidMode::Intersection;
  } else {
    fail("witness mode must be union or intersection");
  }
  return w;
}

ObstructionCertificate certificate_from_json(const Json& j) {
  ObstructionCertificate cert;
  const std::string kind = field(j, "kind").get<std::string>();
  auto words = [](const Json& arr) {
    std::vector<NeuronSet> out;
    for (const auto& s : arr) out.push_back(neuron_set_from_json(s));
    return out;
  };
  if (kind == "rf-tuple") {
    cert.kind = CertificateKind::RFTuple;
    const Json& t = field(j, "tuple");
    cert.tuple = RFTuple{field(t, "i").get<int>(), field(t, "j").get<int>(), field(t, "k").get<int>(),
                         field(t, "l").get<int>(), field(t, "m").get<int>()};
    const Json& rows = field(j, "rows");
    if (!rows.is_array() || rows.size() != 7) fail("rows must hold seven booleans");
    for (std::size_t r = 0; r < 7; ++r) cert.rows.rows[r] = rows[r].get<bool>();
    return cert;
  }
  if (kind == "rigid-pair") {
    cert.kind = CertificateKind::RigidPair;
  } else if (kind == "cycle") {
    cert.kind = CertificateKind::Cycle;
    cert.cycle = LinearOrdering{words(field(j, "cycle")), OrderingKind::Cycle};
    cert.chosen_r = neuron_set_from_json(field(j, "chosen_r"));
  } else {
    fail("unknown certificate kind \"" + kind + "\"");
  }
  for (const auto& w : field(j, "witnesses")) cert.witnesses.push_back(witness_from_json(w));
  cert.subcode = words(field(j, "subcode"));
  const Json& comps = field(j, "components");
  if (!comps.is_array() || comps.size() != 2) fail("components must hold two codeword lists");
  cert.components[0] = words(comps[0]);
  cert.components[1] = words(comps[1]);
  return cert;
}

Realization realization_from_json(const Json& j) {
  Realization r;
  const Json& dim = field(j, "dim");
  if (!dim.is_number_integer() || dim.get<long long>() < 1 || dim.get<long long>() > 64) fail("dim must be 1..64");
  r.dim = dim.get<std::size_t>();
  const std::string mode = j.contains("mode") ? j.at("mode").get<std::string>() : std::string("closed");
  if (mode == "closed") {
    r.mode = RealizationMode::Closed;
  } else if (mode == "open") {
    r.mode = RealizationMode::Open;
  } else {
    fail("mode must be closed or open");
  }
  for (const auto& b : field(j, "bodies")) {
    HalfspaceBody body;
    for (const auto& c : field(b, "constraints")) {
      Constraint con;
      for (const auto& a : field(c, "normal")) con.normal.push_back(rational_from_json(a));
      if (con.normal.size() != r.dim) fail("constraint normal length differs from dim");
      con.offset = rational_from_json(field(c, "offset"));
      const std::string rel =
          c.contains("rel") ? c.at("rel").get<std::string>() : (r.mode == RealizationMode::Closed ? "<=" : "<");
      con.rel = parse_relation(rel);
      body.constraints.push_back(std::move(con));
    }
    r.bodies.push_back(std::move(body));
  }
  try {
    return normalized(r);
  } catch (const InvalidArgument& e) {
    fail(e.what());
  }
}

Realization parse_realization(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(std::string("invalid realization JSON: ") + e.what());
  }
  return realization_from_json(j);
}

}  // namespace convexa
