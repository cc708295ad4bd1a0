#pragma once

#include <string>
#include <string_view>
#include <variant>

#include <nlohmann/json.hpp>

#include "braess/core.hpp"
#include "braess/reduction.hpp"

namespace braess {

/// A configuration given directly in four-node form.
struct FourNodeInput {
  FourNodeConfig config;
  bool has_bc = true;
};

/// Either a general network with role-annotated links or a pre-reduced
/// four-node configuration.
using NetworkDocument = std::variant<GeneralNetwork, FourNodeInput>;

/// Accepted shapes:
///   {"nodes": [...], "links": [{"from","to","alpha","beta","external_flow"?,"role"}],
///    "origin": ..., "destination": ...}
///   {"four_node": {"alpha": [5], "beta": [5]}}
///   {"alpha": [5], "beta": [5], "has_bc"?: bool}   (the output of `reduce`)
/// In the four-node forms the third entries (link b->c) may be null, or the
/// arrays may hold only links 1, 2, 4, 5; both model the network without the
/// bridge. Throws ParseError.
NetworkDocument parse_document(const nlohmann::json& doc);
NetworkDocument parse_document_text(std::string_view text);
/// Reads a file, or stdin when path is "-".
NetworkDocument load_document(const std::string& path);

/// Four-node view of a document, reducing general networks.
FourNodeInput resolve(const NetworkDocument& doc);

}  // namespace braess
