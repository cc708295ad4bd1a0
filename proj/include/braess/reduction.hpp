#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "braess/core.hpp"

namespace braess {

/// Which canonical link a path of the general network collapses into.
enum class Role { AB, BD, AC, CD, BC };

std::string_view to_string(Role role);
std::optional<Role> parse_role(std::string_view text);

/// Canonical link index (1..5) a role reduces to.
int link_index(Role role);

struct Link {
  std::string from;
  std::string to;
  double alpha = 0.0;
  double beta = 0.0;
  double external_flow = 0.0;  // fixed traffic entering and leaving on this link
  Role role = Role::AB;
};

/// A Braess network whose five canonical links are replaced by paths of
/// arbitrary length. Every link carries an explicit role.
struct GeneralNetwork {
  std::vector<std::string> nodes;
  std::vector<Link> links;
  std::string origin;
  std::string destination;
};

/// A link of one role after external flow has been folded into alpha.
struct PathSegment {
  std::string from;
  std::string to;
  double alpha = 0.0;
  double beta = 0.0;
};

struct PathParams {
  double alpha = 0.0;
  double beta = 0.0;
};

/// alpha + beta * external_flow: fixed external traffic only shifts the
/// free-flow time seen by the internal flow.
double absorb_external_flow(double alpha, double beta, double external_flow);

/// Collapses an ordered path into one link by summing alpha and beta.
/// Throws BrokenPath when consecutive segments do not chain head-to-tail,
/// when the path is empty or when it revisits a node.
PathParams contract_path(std::span<const PathSegment> path, std::string_view role = {});

struct ReducedNetwork {
  FourNodeConfig config;  // link 3 is zero when has_bc is false
  bool has_bc = false;
  std::string b;  // node where AB ends
  std::string c;  // node where AC ends
};

/// Absorbs external flows, orders and contracts each role path, and checks
/// that the five paths meet at consistent endpoints. Throws TopologyError
/// naming the offending role and InvalidConfig for negative parameters.
ReducedNetwork reduce_network(const GeneralNetwork& net);

}  // namespace braess
