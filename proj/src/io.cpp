#include "simembed/io.hpp"

#include <initializer_list>
#include <json.hpp>

namespace simembed {

namespace {

using nlohmann::json;

void only_fields(const json& j, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) throw ParseError(where.empty() ? "$" : where, "expected an object");
  for (const auto& [k, _] : j.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || k == a;
    if (!known) throw ParseError(where.empty() ? k : where + "." + k, "unknown field");
  }
}

const json& required(const json& j, const std::string& where, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where.empty() ? key : where + "." + key, "missing field");
  return *it;
}

long long integer(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where, "expected an integer");
  return j.get<long long>();
}

std::vector<int> int_list(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where, "expected an array");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(static_cast<int>(integer(j[i], where + "[" + std::to_string(i) + "]")));
  return out;
}

std::optional<LayerClass> class_from(const std::string& s) {
  for (auto c : {LayerClass::kPath, LayerClass::kCaterpillar, LayerClass::kOuterplanar, LayerClass::kPlanar})
    if (s == to_string(c)) return c;
  return std::nullopt;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), e.what());
  }
}

Layer parse_layer(const json& j, const std::string& where) {
  only_fields(j, where, {"class", "edges", "rotation", "outer_cycle"});
  Layer layer;
  const json& cls = required(j, where, "class");
  if (!cls.is_string() || !class_from(cls.get<std::string>())) {
    throw ParseError(where + ".class", "expected one of path, caterpillar, outerplanar, planar");
  }
  layer.clazz = *class_from(cls.get<std::string>());

  const json& edges = required(j, where, "edges");
  if (!edges.is_array()) throw ParseError(where + ".edges", "expected an array");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string at = where + ".edges[" + std::to_string(i) + "]";
    const auto pair = int_list(edges[i], at);
    if (pair.size() != 2) throw ParseError(at, "an edge has exactly two endpoints");
    layer.edges.push_back({pair[0], pair[1]});
  }
  if (auto it = j.find("rotation"); it != j.end()) {
    if (!it->is_array()) throw ParseError(where + ".rotation", "expected an array");
    Rotation rot;
    for (std::size_t v = 0; v < it->size(); ++v) rot.push_back(int_list((*it)[v], where + ".rotation[" + std::to_string(v) + "]"));
    layer.rotation = std::move(rot);
  }
  if (auto it = j.find("outer_cycle"); it != j.end()) layer.outer_cycle = int_list(*it, where + ".outer_cycle");
  return layer;
}

json point_json(const GridPoint& p) { return json::array({p.x, p.y}); }

}  // namespace

LayeredInstance parse_instance(std::string_view text) {
  const json j = parse_json(text);
  only_fields(j, "", {"n", "mapping", "layers", "labels"});
  LayeredInstance inst;
  const long long n = integer(required(j, "", "n"), "n");
  if (n < 0 || n > (1 << 24)) throw ParseError("n", "vertex count out of range");
  inst.n = static_cast<int>(n);

  const json& mapping = required(j, "", "mapping");
  if (mapping == "given") inst.mapping = MappingMode::kGiven;
  else if (mapping == "free") inst.mapping = MappingMode::kFree;
  else throw ParseError("mapping", "expected \"given\" or \"free\"");

  const json& layers = required(j, "", "layers");
  if (!layers.is_array()) throw ParseError("layers", "expected an array");
  for (std::size_t i = 0; i < layers.size(); ++i) inst.layers.push_back(parse_layer(layers[i], "layers[" + std::to_string(i) + "]"));

  if (auto it = j.find("labels"); it != j.end()) {
    if (!it->is_array()) throw ParseError("labels", "expected an array of strings");
    for (std::size_t i = 0; i < it->size(); ++i) {
      if (!(*it)[i].is_string()) throw ParseError("labels[" + std::to_string(i) + "]", "expected a string");
      inst.vertex_labels.push_back((*it)[i].get<std::string>());
    }
  }

  for (std::size_t i = 0; i < inst.layers.size(); ++i) {
    try {
      validate_layer(inst.layers[i], inst.n);
    } catch (const GraphError& e) {
      throw ParseError("layers[" + std::to_string(i) + "]", e.what());
    }
  }
  try {
    validate_instance(inst);
  } catch (const GraphError& e) {
    throw ParseError("$", e.what());
  }
  return inst;
}

std::string serialize_instance(const LayeredInstance& inst) {
  json j;
  j["n"] = inst.n;
  j["mapping"] = to_string(inst.mapping);
  j["layers"] = json::array();
  for (const auto& layer : inst.layers) {
    json l;
    l["class"] = to_string(layer.clazz);
    l["edges"] = json::array();
    for (const auto& e : layer.edges) l["edges"].push_back({e.u, e.v});
    if (layer.rotation) l["rotation"] = *layer.rotation;
    if (layer.outer_cycle) l["outer_cycle"] = *layer.outer_cycle;
    j["layers"].push_back(std::move(l));
  }
  if (!inst.vertex_labels.empty()) j["labels"] = inst.vertex_labels;
  return j.dump() + "\n";
}

ResultDocument make_result(const SimultaneousEmbedding& e, const CertificateReport& cert) {
  return {e.coords, e.width, e.height, e.assignments, cert};
}

SimultaneousEmbedding to_embedding(const ResultDocument& doc, const LayeredInstance& inst) {
  SimultaneousEmbedding e;
  e.coords = doc.coords;
  e.width = doc.width;
  e.height = doc.height;
  e.assignments = doc.assignments;
  for (const auto& l : inst.layers) e.layers.push_back(l.edges);
  return e;
}

std::string serialize_result(const ResultDocument& doc) {
  json j;
  j["coords"] = json::array();
  for (const auto& p : doc.coords) j["coords"].push_back(point_json(p));
  j["width"] = doc.width;
  j["height"] = doc.height;
  if (doc.assignments) j["assignments"] = *doc.assignments;
  json cert;
  cert["ok"] = doc.certificate.ok;
  cert["violations"] = json::array();
  for (const auto& v : doc.certificate.violations) {
    cert["violations"].push_back({{"kind", to_string(v.kind)}, {"witness", v.witness}});
  }
  j["certificate"] = std::move(cert);
  return j.dump() + "\n";
}

ResultDocument parse_result(std::string_view text) {
  const json j = parse_json(text);
  only_fields(j, "", {"coords", "width", "height", "assignments", "certificate"});
  ResultDocument doc;
  const json& coords = required(j, "", "coords");
  if (!coords.is_array()) throw ParseError("coords", "expected an array");
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const std::string at = "coords[" + std::to_string(i) + "]";
    if (!coords[i].is_array() || coords[i].size() != 2) throw ParseError(at, "expected [x, y]");
    doc.coords.push_back({integer(coords[i][0], at + "[0]"), integer(coords[i][1], at + "[1]")});
  }
  doc.width = integer(required(j, "", "width"), "width");
  doc.height = integer(required(j, "", "height"), "height");
  if (auto it = j.find("assignments"); it != j.end()) {
    if (!it->is_array()) throw ParseError("assignments", "expected an array");
    PointAssignment a;
    for (std::size_t i = 0; i < it->size(); ++i) a.push_back(int_list((*it)[i], "assignments[" + std::to_string(i) + "]"));
    doc.assignments = std::move(a);
  }
  const json& cert = required(j, "", "certificate");
  only_fields(cert, "certificate", {"ok", "violations"});
  const json& ok = required(cert, "certificate", "ok");
  if (!ok.is_boolean()) throw ParseError("certificate.ok", "expected a boolean");
  const json& vs = required(cert, "certificate", "violations");
  if (!vs.is_array()) throw ParseError("certificate.violations", "expected an array");
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const std::string at = "certificate.violations[" + std::to_string(i) + "]";
    only_fields(vs[i], at, {"kind", "witness"});
    const json& kind = required(vs[i], at, "kind");
    auto k = kind.is_string() ? violation_kind_from_string(kind.get<std::string>()) : std::nullopt;
    if (!k) throw ParseError(at + ".kind", "unknown violation kind");
    const json& w = required(vs[i], at, "witness");
    if (!w.is_array()) throw ParseError(at + ".witness", "expected an array");
    Violation v{*k, {}};
    for (std::size_t t = 0; t < w.size(); ++t) v.witness.push_back(integer(w[t], at + ".witness[" + std::to_string(t) + "]"));
    doc.certificate.violations.push_back(std::move(v));
  }
  doc.certificate.ok = ok.get<bool>();
  if (doc.certificate.ok != doc.certificate.violations.empty()) {
    throw ParseError("certificate.ok", "must be true exactly when there are no violations");
  }
  return doc;
}

}  // namespace simembed
