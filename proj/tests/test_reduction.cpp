#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "braess/errors.hpp"
#include "braess/reduction.hpp"
#include "fixtures.hpp"

using namespace braess;

namespace {

// Appends a chain of unit links through `via` for one role.
void chain(GeneralNetwork& net, Role role, const std::vector<std::string>& via, double alpha = 1.0, double beta = 1.0,
           double external = 0.0) {
  for (std::size_t i = 0; i + 1 < via.size(); ++i) net.links.push_back({via[i], via[i + 1], alpha, beta, external, role});
}

GeneralNetwork two_link_paths() {
  GeneralNetwork net;
  net.nodes = {"a", "b", "c", "d", "x1", "x2", "x3", "x4", "x5", "x6"};
  net.origin = "a";
  net.destination = "d";
  chain(net, Role::AB, {"a", "x1", "b"});
  chain(net, Role::BD, {"b", "x2", "d"}, 1.0, 1.0, 2.0);
  chain(net, Role::BC, {"b", "x3", "x4", "c"});
  chain(net, Role::AC, {"a", "x5", "c"});
  chain(net, Role::CD, {"c", "x6", "d"});
  return net;
}

GeneralNetwork single_links(const FourNodeConfig& c, bool with_bc) {
  GeneralNetwork net;
  net.nodes = {"a", "b", "c", "d"};
  net.origin = "a";
  net.destination = "d";
  net.links.push_back({"a", "b", c.alpha[0], c.beta[0], 0.0, Role::AB});
  net.links.push_back({"b", "d", c.alpha[1], c.beta[1], 0.0, Role::BD});
  if (with_bc) net.links.push_back({"b", "c", c.alpha[2], c.beta[2], 0.0, Role::BC});
  net.links.push_back({"a", "c", c.alpha[3], c.beta[3], 0.0, Role::AC});
  net.links.push_back({"c", "d", c.alpha[4], c.beta[4], 0.0, Role::CD});
  return net;
}

std::string role_of_error(const GeneralNetwork& net) {
  try {
    reduce_network(net);
  } catch (const TopologyError& e) {
    return e.role();
  }
  return "";
}

}  // namespace

TEST(AbsorbExternalFlow, Examples) {
  EXPECT_EQ(absorb_external_flow(5, 2, 3), 11);
  EXPECT_EQ(absorb_external_flow(5, 2, 0), 5);
  EXPECT_EQ(absorb_external_flow(0, 0.5, 4), 2);
}

TEST(ContractPath, Examples) {
  const std::vector<PathSegment> two{{"u", "v", 1, 2}, {"v", "w", 3, 4}};
  auto p = contract_path(two);
  EXPECT_EQ(p.alpha, 4);
  EXPECT_EQ(p.beta, 6);

  const std::vector<PathSegment> one{{"u", "v", 7, 1}};
  p = contract_path(one);
  EXPECT_EQ(p.alpha, 7);
  EXPECT_EQ(p.beta, 1);

  const std::vector<PathSegment> three{{"u", "v", 11, 2}, {"v", "w", 2, 0.5}, {"w", "z", 0, 1}};
  double alpha = 0.0;
  double beta = 0.0;
  for (const auto& s : three) alpha += s.alpha, beta += s.beta;
  p = contract_path(three);
  EXPECT_EQ(p.alpha, alpha);
  EXPECT_EQ(p.beta, beta);
  EXPECT_EQ(p.alpha, 13);
  EXPECT_EQ(p.beta, 3.5);
}

TEST(ContractPath, BrokenChains) {
  const std::vector<PathSegment> gap{{"u", "v", 1, 1}, {"w", "z", 1, 1}};
  EXPECT_THROW(contract_path(gap, "AB"), BrokenPath);
  EXPECT_THROW(contract_path({}, "AB"), BrokenPath);
  const std::vector<PathSegment> loop{{"u", "v", 1, 1}, {"v", "u", 1, 1}};
  EXPECT_THROW(contract_path(loop, "AB"), BrokenPath);
}

TEST(ReduceNetwork, MultiLinkPathsWithExternalFlow) {
  const auto net = two_link_paths();
  const auto r = reduce_network(net);
  ASSERT_TRUE(r.has_bc);
  EXPECT_EQ(r.b, "b");
  EXPECT_EQ(r.c, "c");

  // Absorb then contract, role by role.
  std::array<double, 5> alpha{};
  std::array<double, 5> beta{};
  for (const auto& l : net.links) {
    const auto k = static_cast<std::size_t>(link_index(l.role) - 1);
    alpha[k] += l.alpha + l.beta * l.external_flow;
    beta[k] += l.beta;
  }
  EXPECT_EQ(r.config.alpha, alpha);
  EXPECT_EQ(r.config.beta, beta);
  EXPECT_EQ(r.config.alpha, (std::array<double, 5>{2, 6, 3, 2, 2}));
  EXPECT_EQ(r.config.beta, (std::array<double, 5>{2, 2, 3, 2, 2}));
}

TEST(ReduceNetwork, SingleLinksAreIdentity) {
  const auto c = braess::testing::worked_example();
  const auto r = reduce_network(single_links(c, true));
  EXPECT_EQ(r.config, c);
  EXPECT_TRUE(r.has_bc);
}

TEST(ReduceNetwork, WithoutBridge) {
  const auto r = reduce_network(single_links(braess::testing::worked_example(), false));
  EXPECT_FALSE(r.has_bc);
  EXPECT_EQ(r.config.alpha[2], 0.0);
  EXPECT_EQ(r.config.beta[2], 0.0);
}

TEST(ReduceNetwork, TopologyErrorsNameTheRole) {
  auto net = single_links(braess::testing::worked_example(), true);
  std::erase_if(net.links, [](const Link& l) { return l.role == Role::CD; });
  EXPECT_EQ(role_of_error(net), "CD");

  net = single_links(braess::testing::worked_example(), true);
  net.links[2].from = "a";  // BC must leave b
  EXPECT_EQ(role_of_error(net), "BC");

  net = two_link_paths();
  net.links.push_back({"x2", "x3", 1, 1, 0, Role::BD});  // BD branches
  EXPECT_EQ(role_of_error(net), "BD");

  net = single_links(braess::testing::worked_example(), true);
  net.links[0].to = "q";
  EXPECT_THROW(reduce_network(net), TopologyError);
}

TEST(ReduceNetwork, NegativeParametersRejected) {
  auto net = single_links(braess::testing::worked_example(), true);
  net.links[1].external_flow = -1.0;
  EXPECT_THROW(reduce_network(net), InvalidConfig);
}

TEST(ReduceNetwork, AbsorptionCommutesWithContraction) {
  braess::testing::ConfigGen gen(21);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<PathSegment> raw;
    std::vector<PathSegment> absorbed;
    double shift = 0.0;
    const int len = gen.integer(1, 6);
    for (int i = 0; i < len; ++i) {
      const double a = gen.uniform(0, 10);
      const double b = gen.uniform(0, 5);
      const double f = gen.uniform(0, 3);
      const std::string from = "n" + std::to_string(i);
      const std::string to = "n" + std::to_string(i + 1);
      raw.push_back({from, to, a, b});
      absorbed.push_back({from, to, absorb_external_flow(a, b, f), b});
      shift += b * f;
    }
    const auto lhs = contract_path(absorbed);
    const auto rhs = contract_path(raw);
    ASSERT_NEAR(lhs.alpha, rhs.alpha + shift, 1e-12 * (1 + lhs.alpha));
    ASSERT_EQ(lhs.beta, rhs.beta);

    // Path travel time at internal flow q is the contracted affine function.
    const double q = gen.uniform(0, 20);
    double walked = 0.0;
    for (const auto& s : absorbed) walked += s.alpha + s.beta * q;
    ASSERT_NEAR(walked, lhs.alpha + lhs.beta * q, 1e-12 * (1 + walked));
  }
}

TEST(Roles, RoundTrip) {
  for (Role r : {Role::AB, Role::BD, Role::AC, Role::CD, Role::BC}) EXPECT_EQ(parse_role(to_string(r)), r);
  EXPECT_FALSE(parse_role("XY").has_value());
  EXPECT_EQ(link_index(Role::BC), 3);
  EXPECT_EQ(link_index(Role::AC), 4);
}
