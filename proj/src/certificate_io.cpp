#include "pathcover/certificate_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pathcover/errors.hpp"

namespace pathcover {
namespace {

using nlohmann::json;

json set_json(VertexSet s) { return s.to_vector(); }

VertexSet set_from(const json& j) {
  VertexSet s;
  for (const auto& v : j) {
    const int x = v.get<int>();
    if (x < 0 || x >= kMaxVertices) throw PreconditionError("certificate: vertex id out of range");
    if (s.contains(x)) throw PreconditionError("certificate: repeated vertex in set");
    s.insert(x);
  }
  return s;
}

std::vector<Vertex> seq_from(const json& j) {
  std::vector<Vertex> out;
  for (const auto& v : j) {
    const int x = v.get<int>();
    if (x < 0 || x >= kMaxVertices) throw PreconditionError("certificate: vertex id out of range");
    out.push_back(x);
  }
  return out;
}

}  // namespace

std::string certificate_to_json(const CertificateDocument& doc) {
  const CoverCertificate& c = doc.cert;
  json j;
  j["shape"] = {{"kind", to_string(c.shape.kind)}, {"k", c.shape.k}, {"gap", c.shape.gap}, {"n", c.shape.n}};
  j["red_paths"] = json::array();
  for (const auto& p : c.red_paths) j["red_paths"].push_back(p.vertices);
  if (c.red_tree) {
    json edges = json::array();
    for (const auto& [a, b] : c.red_tree->edges) edges.push_back({a, b});
    j["red_tree"] = {{"vertices", set_json(c.red_tree->vertices)}, {"edges", edges}};
  } else {
    j["red_tree"] = nullptr;
  }
  j["parts"] = json::array();
  for (VertexSet p : c.witness.parts) j["parts"].push_back(set_json(p));
  if (c.power) {
    j["power"] = {{"vertices", c.power->vertices},
                  {"exponent", c.power->exponent},
                  {"colour", c.power->colour == Colour::Red ? "red" : "blue"}};
  } else {
    j["power"] = nullptr;
  }
  j["valid"] = doc.valid;
  j["error"] = doc.error;
  j["state"] = doc.state;
  return j.dump(2) + "\n";
}

CertificateDocument parse_certificate(const std::string& text) {
  CertificateDocument doc;
  try {
    const json j = json::parse(text);
    CoverCertificate& c = doc.cert;
    const json& shape = j.at("shape");
    c.shape.kind = shape_kind_from_string(shape.at("kind").get<std::string>());
    c.shape.k = shape.at("k").get<int>();
    c.shape.gap = shape.value("gap", 0);
    c.shape.n = shape.value("n", 0);
    for (const auto& p : j.at("red_paths")) c.red_paths.push_back({seq_from(p), Colour::Red});
    if (const json& t = j.at("red_tree"); !t.is_null()) {
      std::vector<Edge> edges;
      for (const auto& e : t.at("edges")) {
        const auto ab = seq_from(e);
        if (ab.size() != 2) throw PreconditionError("certificate: tree edge must have two ends");
        edges.emplace_back(ab[0], ab[1]);
      }
      c.red_tree = TreeCover::from_edges(set_from(t.at("vertices")), std::move(edges));
    }
    for (const auto& p : j.at("parts")) c.witness.parts.push_back(set_from(p));
    if (const json& w = j.at("power"); !w.is_null()) {
      PowerWitness pw;
      pw.vertices = seq_from(w.at("vertices"));
      pw.exponent = w.at("exponent").get<int>();
      const std::string colour = w.value("colour", "blue");
      if (colour != "red" && colour != "blue") throw PreconditionError("certificate: unknown power colour");
      pw.colour = colour == "red" ? Colour::Red : Colour::Blue;
      c.power = std::move(pw);
    }
    doc.valid = j.value("valid", true);
    doc.error = j.value("error", "");
    doc.state = j.value("state", "");
  } catch (const json::exception& e) {
    throw PreconditionError(std::string("certificate: malformed JSON: ") + e.what());
  }
  return doc;
}

CertificateDocument read_certificate(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open certificate file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_certificate(ss.str());
}

void write_certificate(const std::string& path, const CertificateDocument& doc) {
  std::ofstream out(path);
  if (!out) throw PreconditionError("cannot write certificate file: " + path);
  out << certificate_to_json(doc);
}

}  // namespace pathcover
