#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "quivgr/cli.hpp"
#include "quivgr/error.hpp"
#include "support.hpp"

using namespace quivgr;
using nlohmann::json;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = run(args, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ParseQuiver) {
  const auto a2 = parse_quiver("A2:F");
  EXPECT_EQ(a2.vertex_count(), 2);
  EXPECT_EQ(a2.edge(1), Orientation::Forward);
  const auto fb = parse_quiver("A3:FB");
  EXPECT_EQ(fb.edge(1), Orientation::Forward);
  EXPECT_EQ(fb.edge(2), Orientation::Backward);
  EXPECT_EQ(parse_quiver("A1").vertex_count(), 1);
  EXPECT_EQ(parse_quiver("A1:").vertex_count(), 1);
  EXPECT_THROW(parse_quiver("A3:FFF"), ParseError);
  EXPECT_THROW(parse_quiver("A0"), ParseError);
  EXPECT_THROW(parse_quiver("B2:F"), ParseError);
  try {
    parse_quiver("A3:FX");
    FAIL();
  } catch (const ParseError& ex) {
    EXPECT_EQ(ex.position(), 4u);
  }
}

TEST(Cli, ParseRep) {
  const auto a2 = parse_quiver("A2:F");
  EXPECT_EQ(parse_rep("[1,2]x2,[1,1]", a2), (RepClass{{{1, 2}, 2}, {{1, 1}, 1}}));
  EXPECT_THROW(parse_rep("[1,4]", parse_quiver("A3:FF")), ParseError);
  EXPECT_TRUE(parse_rep("", a2).empty());
  EXPECT_THROW(parse_rep("[1,2]x0", a2), ParseError);
  EXPECT_THROW(parse_rep("[1,2]x-1", a2), ParseError);
  EXPECT_THROW(parse_rep("[2,1]", a2), ParseError);
  EXPECT_THROW(parse_rep("[1,2],", a2), ParseError);
}

TEST(Cli, ParseDim) {
  const auto a3 = parse_quiver("A3:FB");
  EXPECT_EQ(parse_dim("1,0,2", a3), (DimVector{1, 0, 2}));
  EXPECT_THROW(parse_dim("1,2", a3), ParseError);
  EXPECT_THROW(parse_dim("1,-2,0", a3), ParseError);
}

TEST(Cli, RepRoundTrip) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& q : TypeAQuiver::all_orientations(n))
      for (const auto& d : oracle::dims_up_to(n, 4))
        for (const auto& m : enumerate_rep_classes(q, d)) {
          EXPECT_EQ(parse_rep(m.to_string(), q), m);
          EXPECT_EQ(parse_quiver(q.to_string()), q);
          EXPECT_EQ(parse_dim(d.to_string(), q), d);
        }
}

TEST(Cli, VerifyA2) {
  const auto r = invoke({"verify", "--quiver", "A2:F", "--dim", "1,1"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto j = json::parse(r.out);
  for (const char* key : {"quiver", "dim", "sub", "covers", "checks", "failures"}) EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["covers"].size(), 1u);
  EXPECT_EQ(j["checks"].size(), 4u);
  EXPECT_EQ(j["failures"], 0);
}

TEST(Cli, VerifyOutputIsDeterministic) {
  const auto a = invoke({"verify", "--quiver", "A3:BF", "--dim", "1,2,1", "--jobs", "1"});
  const auto b = invoke({"verify", "--quiver", "A3:BF", "--dim", "1,2,1", "--jobs", "3"});
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, Betti) {
  const auto r = invoke({"betti", "--quiver", "A2:F", "--rep", "[1,2]x3", "--sub", "1,2", "--method", "both"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["poincare"]["pretty"], "1 + 2q + 2q^2 + q^3");
  EXPECT_EQ(j["poincare"]["coefficients"], json({1, 2, 2, 1}));
  EXPECT_TRUE(j["agree"].get<bool>());

  const auto text = invoke({"--format", "text", "betti", "--quiver", "A2:F", "--rep", "[1,2]x3", "--sub", "1,2"});
  EXPECT_NE(text.out.find("1 + 2q + 2q^2 + q^3"), std::string::npos);
}

TEST(Cli, Pbw) {
  const auto r = invoke({"pbw", "--n", "2", "--i", "1"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["kernel"]["pretty"], "q^2");
  EXPECT_EQ(j["sub"], json({1, 2}));
  EXPECT_EQ(j["euler_characteristic"], 7);
}

TEST(Cli, Strata) {
  const auto r = invoke({"strata", "--quiver", "A2:F", "--m", "[1,2]", "--n", "[1,1],[2,2]", "--sub", "1,0"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["kernel"]["pretty"], "1");
  EXPECT_TRUE(j["identity_ok"].get<bool>());
  EXPECT_EQ(j["strata"].size(), 4u);  // f in {0, e}, i in {0, 1}
}

TEST(Cli, PosetJsonAndDot) {
  const auto r = invoke({"poset", "--quiver", "A3:FF", "--dim", "1,1,1"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["nodes"].size(), 4u);
  EXPECT_EQ(j["covers"].size(), 4u);

  const auto dot = invoke({"poset", "--quiver", "A2:F", "--dim", "1,1", "--format", "text"});
  EXPECT_NE(dot.out.find("digraph"), std::string::npos);
  EXPECT_NE(dot.out.find("label=\"[1,2]\""), std::string::npos);
  EXPECT_NE(dot.out.find("([2,2],[1,1])"), std::string::npos);
}

TEST(Cli, ErrorsAreMachineReadable) {
  const auto bad_quiver = invoke({"verify", "--quiver", "A3:FFF", "--dim", "1,1,1"});
  EXPECT_EQ(bad_quiver.status, 2);
  const auto j = json::parse(bad_quiver.err);
  EXPECT_EQ(j["error"]["type"], "parse");
  EXPECT_TRUE(j["error"].contains("position"));

  const auto not_cover = invoke({"strata", "--quiver", "A3:FF", "--m", "[1,3]", "--n", "[1,1],[2,2],[3,3]", "--sub", "1,0,0"});
  EXPECT_EQ(not_cover.status, 2);
  EXPECT_EQ(json::parse(not_cover.err)["error"]["type"], "invalid_argument");

  const auto usage = invoke({"frobnicate"});
  EXPECT_EQ(usage.status, 2);
  EXPECT_EQ(json::parse(usage.err)["error"]["type"], "usage");
}
