#include "braess/document.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <fmt/format.h>

#include "braess/errors.hpp"

namespace braess {

using nlohmann::json;

namespace {

double number(const json& j, const std::string& where) {
  if (!j.is_number()) throw ParseError(fmt::format("{} must be a number", where));
  const double v = j.get<double>();
  if (!std::isfinite(v) || v < 0.0) throw ParseError(fmt::format("{} must be finite and >= 0 (got {})", where, v));
  return v;
}

std::string text(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key) || !obj.at(key).is_string())
    throw ParseError(fmt::format("{}.{} must be a string", where, key));
  return obj.at(key).get<std::string>();
}

FourNodeInput parse_four_node(const json& obj, const std::string& where) {
  if (!obj.contains("alpha") || !obj.contains("beta")) throw ParseError(where + " needs \"alpha\" and \"beta\"");
  FourNodeInput in;
  bool bc_null = false;
  for (const char* key : {"alpha", "beta"}) {
    const json& arr = obj.at(key);
    if (!arr.is_array() || (arr.size() != 5 && arr.size() != 4))
      throw ParseError(fmt::format("{}.{} must be an array of 5 entries (4 without the bridge)", where, key));
    auto& dst = std::string_view(key) == "alpha" ? in.config.alpha : in.config.beta;
    // Four entries list links 1, 2, 4, 5.
    const bool short_form = arr.size() == 4;
    for (std::size_t i = 0, j = 0; i < 5; ++i) {
      if (i == 2 && (short_form || arr[j].is_null())) {
        bc_null = true;
        if (!short_form) ++j;
        continue;
      }
      dst[i] = number(arr[j], fmt::format("{}.{}[{}]", where, key, j));
      ++j;
    }
  }
  in.has_bc = !bc_null;
  if (obj.contains("has_bc")) {
    if (!obj.at("has_bc").is_boolean()) throw ParseError(where + ".has_bc must be a boolean");
    if (obj.at("has_bc").get<bool>() && bc_null) throw ParseError(where + ": has_bc is true but link 3 is null");
    in.has_bc = obj.at("has_bc").get<bool>();
  }
  if (!in.has_bc) {
    in.config.alpha[2] = 0.0;
    in.config.beta[2] = 0.0;
  }
  return in;
}

GeneralNetwork parse_general(const json& doc) {
  GeneralNetwork net;
  if (!doc.at("nodes").is_array()) throw ParseError("\"nodes\" must be an array");
  for (const auto& n : doc.at("nodes")) {
    if (!n.is_string()) throw ParseError("node ids must be strings");
    net.nodes.push_back(n.get<std::string>());
  }
  net.origin = text(doc, "origin", "document");
  net.destination = text(doc, "destination", "document");
  if (!doc.contains("links") || !doc.at("links").is_array()) throw ParseError("\"links\" must be an array");
  std::size_t i = 0;
  for (const auto& l : doc.at("links")) {
    const std::string where = fmt::format("links[{}]", i++);
    if (!l.is_object()) throw ParseError(where + " must be an object");
    Link link;
    link.from = text(l, "from", where);
    link.to = text(l, "to", where);
    if (!l.contains("alpha") || !l.contains("beta")) throw ParseError(where + " needs \"alpha\" and \"beta\"");
    link.alpha = number(l.at("alpha"), where + ".alpha");
    link.beta = number(l.at("beta"), where + ".beta");
    if (l.contains("external_flow")) link.external_flow = number(l.at("external_flow"), where + ".external_flow");
    const std::string role = text(l, "role", where);
    const auto parsed = parse_role(role);
    if (!parsed) throw ParseError(fmt::format("{}.role '{}' is not one of AB, BD, AC, CD, BC", where, role));
    link.role = *parsed;
    net.links.push_back(std::move(link));
  }
  return net;
}

}  // namespace

NetworkDocument parse_document(const json& doc) try {
  if (!doc.is_object()) throw ParseError("document must be a JSON object");
  if (doc.contains("four_node")) {
    if (!doc.at("four_node").is_object()) throw ParseError("\"four_node\" must be an object");
    return parse_four_node(doc.at("four_node"), "four_node");
  }
  if (doc.contains("nodes")) return parse_general(doc);
  if (doc.contains("alpha")) return parse_four_node(doc, "document");
  throw ParseError("document has neither \"nodes\" nor \"four_node\"");
} catch (const json::exception& e) {
  throw ParseError(fmt::format("invalid document: {}", e.what()));
}

NetworkDocument parse_document_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(fmt::format("malformed JSON: {}", e.what()));
  }
  return parse_document(doc);
}

NetworkDocument load_document(const std::string& path) {
  std::string content;
  if (path == "-") {
    content.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(fmt::format("cannot open '{}'", path));
    std::ostringstream ss;
    ss << in.rdbuf();
    content = ss.str();
  }
  return parse_document_text(content);
}

FourNodeInput resolve(const NetworkDocument& doc) {
  if (const auto* in = std::get_if<FourNodeInput>(&doc)) return *in;
  const ReducedNetwork r = reduce_network(std::get<GeneralNetwork>(doc));
  return {r.config, r.has_bc};
}

}  // namespace braess
