#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "latkit/cli.hpp"

namespace latkit {
namespace {

std::string data(const std::string& name) { return std::string(LATKIT_DATA_DIR) + "/" + name; }

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

TEST(Cli, CheckDistributiveOnM3CitesWitnessTriple) {
  auto r = run({"check", "distributive", data("m3.lat")});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(contains(r.out, "distributive: no (witness: a, b, c)")) << r.out;
  EXPECT_TRUE(r.err.empty());
  EXPECT_EQ(run({"check", "distributive", data("boolean3.lat")}).code, 0);
  EXPECT_EQ(run({"check", "modular", data("m3.lat")}).code, 0);
  EXPECT_EQ(run({"check", "modular", data("n5.lat")}).code, 1);
  EXPECT_EQ(run({"check", "boolean", data("boolean2.lat")}).code, 0);
  EXPECT_EQ(run({"check", "lattice", data("n5.lat")}).code, 0);
  auto f = run({"check", "no-forbidden-sublattice", data("m3_over_chain.lat")});
  EXPECT_EQ(f.code, 1);
  EXPECT_TRUE(contains(f.out, "(M3: m, a, b, c, 1)")) << f.out;
}

TEST(Cli, GenFd) {
  auto r = run({"gen-fd", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "18 elements\n");
  auto two = run({"gen-fd", "2"});
  EXPECT_EQ(two.code, 0);
  EXPECT_TRUE(two.out.starts_with("4 elements\n"));
  EXPECT_TRUE(contains(two.out, "42"));
  auto six = run({"gen-fd", "6"});
  EXPECT_EQ(six.code, 2);
  EXPECT_TRUE(contains(six.err, "--flag-n6"));
  auto counted = run({"gen-fd", "6", "--flag-n6"});
  EXPECT_EQ(counted.code, 0);
  EXPECT_TRUE(counted.out.starts_with("7828352 elements"));
  EXPECT_EQ(run({"gen-fd", "0"}).code, 2);
  EXPECT_EQ(run({"gen-fd", "7"}).code, 2);
  EXPECT_EQ(run({"gen-fd", "4", "--budget", "10"}).code, 2);
}

TEST(Cli, GenFdWritesLatticeAndDot) {
  const auto dir = std::filesystem::temp_directory_path();
  const auto lat = (dir / "latkit_cli_fd3.lat").string(), dot = (dir / "latkit_cli_fd3.dot").string();
  ASSERT_EQ(run({"gen-fd", "3", "--out", lat}).code, 0);
  ASSERT_EQ(run({"gen-fd", "3", "--out", dot}).code, 0);
  EXPECT_EQ(parse_lattice_file(lat).lattice.size(), 18u);
  EXPECT_TRUE(read_file(dot).starts_with("digraph \"FD3\""));
  std::filesystem::remove(lat);
  std::filesystem::remove(dot);
}

TEST(Cli, GenFm3) {
  auto r = run({"gen-fm3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.starts_with("28 elements\nmodular: yes\ndistributive: no")) << r.out;
  EXPECT_TRUE(contains(r.out, "interval [u, v]: 5 elements, isomorphic to M3"));
  EXPECT_TRUE(contains(r.out, "collapse to 2-chain evaluations: 18 elements, isomorphic to FD(3)"));
}

TEST(Cli, ExtendShowsSoleComplement) {
  auto r = run({"extend", data("chain3.lat"), "--element", "m", "--depth", "3"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "complemented pairs: 2\n  0 | 1\n  m | u\n")) << r.out;
  EXPECT_TRUE(contains(r.out, "complements of u: m\n"));
  EXPECT_EQ(run({"extend", data("chain3.lat"), "--element", "q"}).code, 2);
  EXPECT_EQ(run({"extend", data("chain3.lat"), "--element", "m", "--depth", "x"}).code, 2);
  EXPECT_EQ(run({"extend", data("chain3.lat")}).code, 2);
  const auto dot = (std::filesystem::temp_directory_path() / "latkit_cli_fq.dot").string();
  ASSERT_EQ(run({"extend", data("chain3.lat"), "--element", "m", "--out", dot}).code, 0);
  const auto text = read_file(dot);
  EXPECT_EQ(std::count(text.begin(), text.end(), '>'), 4);
  std::filesystem::remove(dot);
}

TEST(Cli, ComplementsAndClassify) {
  auto r = run({"complements", data("m3.lat"), "a"});
  EXPECT_EQ(r.out, "complements of a: {b, c}\n");
  auto all = run({"complements", data("n5.lat")});
  EXPECT_TRUE(contains(all.out, "y: {x, z}\n")) << all.out;
  auto c = run({"classify", data("n5.lat")});
  EXPECT_EQ(c.code, 0);
  EXPECT_TRUE(c.out.starts_with("lattice N5\nsize: 5\n"));
  EXPECT_TRUE(contains(c.out, "forbidden-sublattice: N5"));
  auto kv = run({"classify", data("n5.lat"), "--kv"});
  EXPECT_TRUE(contains(kv.out, "distributive=false\n"));
  EXPECT_EQ(c.out, run({"classify", data("n5.lat")}).out);
}

TEST(Cli, FreeTerms) {
  auto r = run({"free-leq", "x1 ^ (x2 v x3)", "(x1 ^ x2) v (x1 ^ x3)"});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(contains(r.out, "relation: s > t"));
  EXPECT_EQ(run({"free-leq", "(x1 ^ x2) v (x1 ^ x3)", "x1 ^ (x2 v x3)"}).code, 0);
  EXPECT_EQ(run({"free-canon", "x1 v (x1 ^ x2)"}).out, "x1\n");
  EXPECT_EQ(run({"free-leq", "x1 ^", "x2"}).code, 2);
}

TEST(Cli, InsertAndDot) {
  auto r = run({"insert", data("chain3.lat"), "0", "m", data("m3.lat")});
  EXPECT_EQ(r.code, 0) << r.err;
  auto l = parse_lattice(r.out).lattice;
  EXPECT_EQ(l.size(), 6u);
  EXPECT_EQ(run({"insert", data("chain3.lat"), "0", "1", data("m3.lat")}).code, 2);
  auto d = run({"dot", data("m3.lat")});
  EXPECT_TRUE(d.out.starts_with("digraph \"M3\" {"));
  EXPECT_EQ(std::count(d.out.begin(), d.out.end(), '>'), 6);
}

TEST(Cli, EnumAndHarness) {
  auto e = run({"enum", "6"});
  EXPECT_EQ(e.code, 0);
  EXPECT_TRUE(contains(e.out, "size 6: 15\n"));
  EXPECT_EQ(run({"enum", "9"}).code, 2);
  const auto path = (std::filesystem::temp_directory_path() / "latkit_cli_corpus.txt").string();
  ASSERT_EQ(run({"enum", "5", "--out", path}).code, 0);
  auto h = run({"harness", "T4.1", "S6.11", "--corpus", path});
  EXPECT_EQ(h.code, 0);
  EXPECT_TRUE(h.out.starts_with("T4.1 confirmed counterexamples=0 applicable=")) << h.out;
  EXPECT_TRUE(contains(h.out, "S6.11 vacuous"));
  std::filesystem::remove(path);
  EXPECT_EQ(run({"harness", "T9.9", "--bound", "3"}).code, 2);
  EXPECT_EQ(run({"harness", "--corpus", "/nonexistent/corpus"}).code, 2);
}

TEST(Cli, EveryErrorPathExitsTwoWithMessage) {
  const std::vector<std::vector<std::string>> bad = {
      {},
      {"bogus"},
      {"check", "distributive"},
      {"check", "no-such-property", data("m3.lat")},
      {"check", "distributive", data("missing.lat")},
      {"check", "distributive", data("cycle.lat")},
      {"classify", data("nojoin.lat")},
      {"gen-fd", "x"},
      {"dot", data("m3.lat"), "--out", "/nonexistent/dir/m3.dot"},
      {"enum", "0"},
  };
  for (const auto& args : bad) {
    auto r = run(args);
    EXPECT_EQ(r.code, 2) << (args.empty() ? "" : args[0]);
    EXPECT_FALSE(r.err.empty());
    EXPECT_TRUE(r.err.starts_with("error: "));
  }
  auto cyc = run({"dot", data("cycle.lat")});
  EXPECT_TRUE(contains(cyc.err, "line 5")) << cyc.err;
  EXPECT_EQ(run({"bogus"}).err, "error: unknown verb 'bogus'\n");
}

TEST(Cli, HelpExitsZero) {
  auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "gen-fd"));
}

}  // namespace
}  // namespace latkit
