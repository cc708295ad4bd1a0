#include "braess/reduction.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <set>

#include <fmt/format.h>

#include "braess/errors.hpp"

namespace braess {

namespace {

constexpr std::array<Role, 5> kRoles = {Role::AB, Role::BD, Role::AC, Role::CD, Role::BC};

std::string role_name(Role role) { return std::string(to_string(role)); }

// Orders the links of one role into a simple path.
std::vector<const Link*> order_role_path(Role role, const std::vector<const Link*>& links) {
  const std::string name = role_name(role);
  std::map<std::string, const Link*> by_tail;
  std::set<std::string> heads;
  for (const Link* l : links) {
    if (!by_tail.emplace(l->from, l).second)
      throw TopologyError(name, fmt::format("role {}: node '{}' has two outgoing links", name, l->from));
    if (!heads.insert(l->to).second)
      throw TopologyError(name, fmt::format("role {}: node '{}' has two incoming links", name, l->to));
  }
  const Link* start = nullptr;
  for (const Link* l : links) {
    if (!heads.contains(l->from)) {
      if (start != nullptr)
        throw TopologyError(name, fmt::format("role {}: links do not form a single path", name));
      start = l;
    }
  }
  if (start == nullptr) throw TopologyError(name, fmt::format("role {}: links form a cycle", name));

  std::vector<const Link*> ordered;
  for (const Link* cur = start; cur != nullptr;) {
    ordered.push_back(cur);
    auto next = by_tail.find(cur->to);
    cur = next == by_tail.end() ? nullptr : next->second;
    if (ordered.size() > links.size())
      throw TopologyError(name, fmt::format("role {}: links form a cycle", name));
  }
  if (ordered.size() != links.size())
    throw TopologyError(name, fmt::format("role {}: links do not form a single path", name));
  return ordered;
}

void check_link_values(const Link& l) {
  const auto check = [&](double v, const char* what) {
    if (!std::isfinite(v) || v < 0.0)
      throw InvalidConfig(fmt::format("link {}->{}: {} must be finite and >= 0 (got {})", l.from, l.to, what, v));
  };
  check(l.alpha, "alpha");
  check(l.beta, "beta");
  check(l.external_flow, "external_flow");
}

}  // namespace

std::string_view to_string(Role role) {
  switch (role) {
    case Role::AB: return "AB";
    case Role::BD: return "BD";
    case Role::AC: return "AC";
    case Role::CD: return "CD";
    case Role::BC: return "BC";
  }
  return "?";
}

std::optional<Role> parse_role(std::string_view text) {
  for (Role r : kRoles)
    if (to_string(r) == text) return r;
  return std::nullopt;
}

int link_index(Role role) {
  switch (role) {
    case Role::AB: return 1;
    case Role::BD: return 2;
    case Role::BC: return 3;
    case Role::AC: return 4;
    case Role::CD: return 5;
  }
  return 0;
}

double absorb_external_flow(double alpha, double beta, double external_flow) {
  return alpha + beta * external_flow;
}

PathParams contract_path(std::span<const PathSegment> path, std::string_view role) {
  const std::string name(role);
  if (path.empty()) throw BrokenPath(name, fmt::format("role {}: empty path", name));
  std::set<std::string> visited{path.front().from};
  PathParams out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i > 0 && path[i - 1].to != path[i].from)
      throw BrokenPath(name, fmt::format("role {}: link {}->{} does not continue from '{}'", name,
                                         path[i].from, path[i].to, path[i - 1].to));
    if (!visited.insert(path[i].to).second)
      throw BrokenPath(name, fmt::format("role {}: path revisits node '{}'", name, path[i].to));
    out.alpha += path[i].alpha;
    out.beta += path[i].beta;
  }
  return out;
}

ReducedNetwork reduce_network(const GeneralNetwork& net) {
  std::set<std::string> nodes;
  for (const auto& n : net.nodes)
    if (!nodes.insert(n).second) throw TopologyError("", fmt::format("duplicate node '{}'", n));
  if (!nodes.contains(net.origin)) throw TopologyError("", fmt::format("unknown origin '{}'", net.origin));
  if (!nodes.contains(net.destination))
    throw TopologyError("", fmt::format("unknown destination '{}'", net.destination));
  if (net.origin == net.destination) throw TopologyError("", "origin and destination coincide");

  std::map<Role, std::vector<const Link*>> by_role;
  for (const auto& l : net.links) {
    check_link_values(l);
    if (!nodes.contains(l.from) || !nodes.contains(l.to))
      throw TopologyError(role_name(l.role), fmt::format("role {}: link {}->{} references an unknown node",
                                                         role_name(l.role), l.from, l.to));
    by_role[l.role].push_back(&l);
  }

  struct Contracted {
    std::string head;
    std::string tail;
    PathParams params;
  };
  std::map<Role, Contracted> paths;
  for (Role role : kRoles) {
    auto it = by_role.find(role);
    if (it == by_role.end()) {
      if (role == Role::BC) continue;
      throw TopologyError(role_name(role), fmt::format("role {} is missing", role_name(role)));
    }
    const auto ordered = order_role_path(role, it->second);
    std::vector<PathSegment> segments;
    segments.reserve(ordered.size());
    for (const Link* l : ordered)
      segments.push_back({l->from, l->to, absorb_external_flow(l->alpha, l->beta, l->external_flow), l->beta});
    paths[role] = {segments.front().from, segments.back().to, contract_path(segments, role_name(role))};
  }

  const auto expect = [&](Role role, const std::string& actual, const std::string& wanted, const char* end) {
    if (actual != wanted)
      throw TopologyError(role_name(role), fmt::format("role {}: {} node is '{}', expected '{}'", role_name(role),
                                                       end, actual, wanted));
  };
  const std::string b = paths[Role::AB].tail;
  const std::string c = paths[Role::AC].tail;
  expect(Role::AB, paths[Role::AB].head, net.origin, "start");
  expect(Role::AC, paths[Role::AC].head, net.origin, "start");
  expect(Role::BD, paths[Role::BD].head, b, "start");
  expect(Role::BD, paths[Role::BD].tail, net.destination, "end");
  expect(Role::CD, paths[Role::CD].head, c, "start");
  expect(Role::CD, paths[Role::CD].tail, net.destination, "end");
  if (b == c) throw TopologyError("AC", fmt::format("roles AB and AC both end at '{}'", b));

  ReducedNetwork out;
  out.b = b;
  out.c = c;
  out.has_bc = paths.contains(Role::BC);
  if (out.has_bc) {
    expect(Role::BC, paths[Role::BC].head, b, "start");
    expect(Role::BC, paths[Role::BC].tail, c, "end");
  }
  for (const auto& [role, path] : paths) {
    const auto idx = static_cast<std::size_t>(link_index(role) - 1);
    out.config.alpha[idx] = path.params.alpha;
    out.config.beta[idx] = path.params.beta;
  }
  return out;
}

}  // namespace braess
