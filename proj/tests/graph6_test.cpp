#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "extraconn/generators.hpp"
#include "extraconn/graph6.hpp"

#ifndef EXTRACONN_TEST_DATA
#define EXTRACONN_TEST_DATA "tests/data"
#endif

namespace extraconn {
namespace {

TEST(Graph6, HandPackedExamples) {
  // K2: 'A' = 63+2, bit x(0,1)=1 -> 100000b = 32 -> '_' (95).
  EXPECT_EQ(decode_graph6("A_"), gen_named("complete:2"));
  // K3: 'B' = 63+3, bits 111 -> 111000b = 56 -> 'w' (119).
  EXPECT_EQ(decode_graph6("Bw"), gen_named("complete:3"));
  EXPECT_EQ(encode_graph6(gen_named("complete:2")), "A_");
  EXPECT_EQ(encode_graph6(gen_named("complete:3")), "Bw");
  EXPECT_EQ(encode_graph6(Graph{}), "?");
  EXPECT_EQ(decode_graph6("?").order(), 0);
}

TEST(Graph6, RoundTripPath) {
  const Graph p4 = gen_named("path:4");
  EXPECT_EQ(decode_graph6(encode_graph6(p4)), p4);
}

// Every line of the fixture was written by networkx's graph6 writer.
TEST(Graph6, MatchesReferenceImplementation) {
  std::ifstream in(EXTRACONN_TEST_DATA "/graph6_reference.txt");
  ASSERT_TRUE(in) << "missing reference fixture";
  std::string line;
  int checked = 0;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string code;
    int n = 0;
    row >> code >> n;
    std::vector<Edge> edges;
    for (std::string pair; row >> pair;) {
      const auto dash = pair.find('-');
      edges.emplace_back(std::stoi(pair.substr(0, dash)), std::stoi(pair.substr(dash + 1)));
    }
    const Graph expected = build_graph(n, edges);
    EXPECT_EQ(encode_graph6(expected), code) << line;
    EXPECT_EQ(decode_graph6(code), expected) << line;
    ++checked;
  }
  EXPECT_GT(checked, 40);
}

TEST(Graph6, RoundTripProperty) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const int n = static_cast<int>(seed % 75);
    const Graph g = gen_random(n, 0.4, seed);
    const std::string code = encode_graph6(g);
    EXPECT_EQ(decode_graph6(code), g);
    EXPECT_EQ(encode_graph6(decode_graph6(code)), code);
  }
}

TEST(Graph6, RejectsMalformedInput) {
  EXPECT_THROW(decode_graph6(""), Graph6Error);
  EXPECT_THROW(decode_graph6("A"), Graph6Error);      // missing body byte
  EXPECT_THROW(decode_graph6("A_?"), Graph6Error);    // trailing garbage
  EXPECT_THROW(decode_graph6("A "), Graph6Error);     // byte below 63
  EXPECT_THROW(decode_graph6("A`"), Graph6Error);     // padding bit set
  try {
    decode_graph6("Bw!");
    FAIL() << "expected Graph6Error";
  } catch (const Graph6Error& e) {
    EXPECT_EQ(e.position(), 3u);
  }
}

TEST(Graph6Stream, Examples) {
  std::istringstream two("A_\nBw\n");
  const auto graphs = read_graph6_stream(two);
  ASSERT_EQ(graphs.size(), 2u);
  EXPECT_EQ(graphs[0], gen_named("complete:2"));
  EXPECT_EQ(graphs[1], gen_named("complete:3"));

  std::istringstream empty("");
  EXPECT_TRUE(read_graph6_stream(empty).empty());

  std::istringstream header(">>graph6<<A_\n");
  ASSERT_EQ(read_graph6_stream(header).size(), 1u);

  std::istringstream crlf("A_\r\nBw\r\n");
  EXPECT_EQ(read_graph6_stream(crlf).size(), 2u);
}

TEST(Graph6Stream, ReportsLineNumber) {
  std::istringstream bad("A_\nBw\nB#\n");
  try {
    read_graph6_stream(bad);
    FAIL() << "expected Graph6Error";
  } catch (const Graph6Error& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

TEST(EdgeList, RoundTripAndErrors) {
  const Graph pet = gen_named("petersen");
  std::istringstream in(to_edge_list(pet));
  EXPECT_EQ(read_edge_list(in), pet);

  std::istringstream short_list("3 2\n0 1\n");
  EXPECT_THROW(read_edge_list(short_list), InputError);
  std::istringstream out_of_range("3 1\n0 3\n");
  EXPECT_THROW(read_edge_list(out_of_range), InputError);
  std::istringstream trailing("2 1\n0 1\n5\n");
  EXPECT_THROW(read_edge_list(trailing), InputError);
  std::istringstream loop("2 1\n1 1\n");
  EXPECT_THROW(read_edge_list(loop), InputError);
}

}  // namespace
}  // namespace extraconn
