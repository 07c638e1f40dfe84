#include <gtest/gtest.h>

#include "curvegraph/audit.hpp"
#include "curvegraph/chains.hpp"
#include "curvegraph/error.hpp"
#include "curvegraph/io.hpp"
#include "support.hpp"

using namespace curvegraph;

TEST(Io, ParsesGraphWithIntegerAndStringValues) {
  const auto g = parse_graph(R"({"vertices":[{"id":"a","m":2},{"id":1,"m":"1/2"}],
                                 "edges":[{"u":"a","v":"1","b":"3/4"}]})");
  EXPECT_EQ(g.size(), 2u);
  EXPECT_EQ(g.measure(g.index("a")), Rational(2));
  EXPECT_EQ(g.weight(0, 1), rational(3, 4));
}

TEST(Io, DetectsFormat) {
  EXPECT_TRUE(std::holds_alternative<BirthDeathChain>(parse_document(R"({"m":["1","2"],"b":["1"]})")));
  EXPECT_TRUE(std::holds_alternative<WeightedGraph>(
      parse_document(R"({"vertices":[{"id":"a","m":"1"}],"edges":[]})")));
  EXPECT_ERROR_KIND(parse_document(R"({"x":1})"), ErrorKind::parse_error);
}

TEST(Io, RejectsFloatsAndReportsPosition) {
  try {
    parse_graph(R"({"vertices":[{"id":"a","m":1.5}],"edges":[]})", "in.json");
    FAIL() << "accepted a float";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::parse_error);
    const std::string msg = e.what();
    EXPECT_NE(msg.find("in.json"), std::string::npos) << msg;
    EXPECT_NE(msg.find("/vertices/0/m"), std::string::npos) << msg;
  }
  try {
    parse_graph("{\"vertices\": [", "cut.json");
    FAIL() << "accepted truncated JSON";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::parse_error);
    EXPECT_NE(std::string(e.what()).find("cut.json"), std::string::npos);
  }
}

TEST(Io, ChainValidation) {
  EXPECT_ERROR_KIND(parse_chain(R"({"m":["1"],"b":["1"]})"), ErrorKind::invalid_chain);
  EXPECT_ERROR_KIND(parse_chain(R"({"m":["1","0"],"b":["1"]})"), ErrorKind::non_positive_entry);
}

TEST(Io, GraphRoundTrip) {
  audit::Rng rng(11);
  for (int i = 0; i < 25; ++i) {
    const auto g = audit::random_graph(rng, 1, 30);
    EXPECT_EQ(parse_graph(to_json(g)), g);
  }
  const auto fig = make_figure1();
  EXPECT_EQ(parse_graph(to_json(fig)), fig);
}

TEST(Io, ChainRoundTrip) {
  audit::Rng rng(12);
  for (int i = 0; i < 25; ++i) {
    const auto c = audit::random_chain(rng, 1, 10);
    EXPECT_EQ(parse_chain(to_json(c)), c);
  }
}

TEST(Io, OutputUsesCanonicalRationals) {
  const auto json = to_json(make_example_gprime(2));
  EXPECT_NE(json.find("\"1/4\""), std::string::npos);
  EXPECT_NE(json.find("\"3/1\""), std::string::npos);
  EXPECT_EQ(json.find('.'), std::string::npos);
}
