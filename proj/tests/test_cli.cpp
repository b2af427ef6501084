#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "catalan/cli.hpp"

using namespace catalan;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "catalan_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

void spit(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

Json json_of(const CliResult& r) { return Json::parse(r.out); }

}  // namespace

TEST(Cli, GoldenTables) {
  const auto we = run_cli({"we", "--max", "15"});
  EXPECT_EQ(we.code, 0);
  EXPECT_EQ(we.out, slurp(fs::path(CATALAN_DATA_DIR) / "table1_we.txt"));
  EXPECT_NE(we.err.find("wall time"), std::string::npos);
  const auto ch = run_cli({"coat-hanger", "--max", "14"});
  EXPECT_EQ(ch.code, 0);
  EXPECT_EQ(ch.out, slurp(fs::path(CATALAN_DATA_DIR) / "table2_coat_hanger.txt"));
}

TEST(Cli, SequenceJson) {
  const auto r = run_cli({"we", "--max", "6", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto s = sequence_from_json(json_of(r));
  EXPECT_EQ(s.first_index, 1);
  EXPECT_EQ(s.values.back(), 6);
  EXPECT_EQ(run_cli({"--format", "json", "we", "--max", "6"}).out, r.out);
  const auto ch = run_cli({"coat-hanger", "--max", "9", "--cross-check", "--format", "json"});
  EXPECT_EQ(ch.code, 0);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"we"}).code, 2);
  EXPECT_EQ(run_cli({"we", "--max", "0"}).code, 2);
  EXPECT_EQ(run_cli({"we", "--max", "3", "--format", "xml"}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({"classify", "--n", "10"}).code, 2);
  EXPECT_EQ(run_cli({"verify", "--suite", "nope"}).code, 2);
  EXPECT_EQ(run_cli({"verify", "--suite", "duality", "--max-n", "50"}).code, 2);
  EXPECT_EQ(run_cli({"verify", "--suite", "all", "--case", "x"}).code, 2);
  EXPECT_EQ(run_cli({"probe", "catalan-forms", "--n", "9"}).code, 2);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(Cli, MalformedInput) {
  EXPECT_EQ(run_cli({"fan", "--perm", "1a3"}).code, 3);
  EXPECT_EQ(run_cli({"fan", "--perm", "1134"}).code, 3);
  EXPECT_EQ(run_cli({"bip", "--v", "2431", "--w", "1243"}).code, 3);
  EXPECT_EQ(run_cli({"bip", "--v", "123", "--w", "2134"}).code, 3);
  EXPECT_EQ(run_cli({"bip", "--v", "1234", "--w", "4321", "--decompose"}).code, 3);
  const auto bad = scratch("bad.json");
  spit(bad, "{\"n\": 3, \"diagonals\": [[1,3]]");
  EXPECT_EQ(run_cli({"fan", "--triangulation", bad.string()}).code, 3);
  spit(bad, "{\"n\": 3, \"diagonals\": [[1,3],[2,4]]}");  // crossing
  EXPECT_EQ(run_cli({"fan", "--triangulation", bad.string()}).code, 3);
  EXPECT_EQ(run_cli({"fan", "--triangulation", scratch("missing.json").string()}).code, 3);
  EXPECT_EQ(run_cli({"verify", "--suite", "relations", "--case", "not json"}).code, 3);
}

TEST(Cli, FanJsonMatchesLibrary) {
  const auto r = run_cli({"fan", "--perm", "132", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json_of(r);
  const auto t = triangulation_of_tree(psi(Permutation::parse("132")));
  EXPECT_EQ(triangulation_from_json(j.at("triangulation")), t);
  const auto doc = fan_from_json(j.at("fan"));
  const auto f = build_fan(t).rays;
  EXPECT_EQ(doc.fan.rays_v(), f.rays_v());
  EXPECT_EQ(doc.fan.rays_w(), f.rays_w());
  EXPECT_EQ(doc.relations, primitive_relations(f));
  EXPECT_TRUE(j.at("smooth").get<bool>());
  EXPECT_TRUE(j.at("fano").at("fano").get<bool>());

  const auto tri = scratch("tri.json");
  spit(tri, triangulation_to_json(t).dump());
  const auto again = run_cli({"fan", "--triangulation", tri.string(), "--format", "json"});
  EXPECT_EQ(again.out, r.out);
}

TEST(Cli, InputFanIsChecked) {
  const auto f = build_fan(triangulation_of_tree(psi(Permutation::parse("2413"))));
  auto doc = fan_to_json(f.rays);
  const auto path = scratch("fan.json");
  spit(path, doc.dump());
  const auto ok = run_cli({"fan", "--input-fan", path.string(), "--format", "json"});
  ASSERT_EQ(ok.code, 0) << ok.err;
  EXPECT_TRUE(json_of(ok).at("relations_match_input").get<bool>());
  // claim every relation is zero
  for (auto& r : doc["relations"]) r["rhs"] = "zero";
  spit(path, doc.dump());
  const auto wrong = run_cli({"fan", "--input-fan", path.string()});
  EXPECT_EQ(wrong.code, 1);
  EXPECT_NE(wrong.out.find("relations match input: no"), std::string::npos);
}

TEST(Cli, ClassifyCounts) {
  const auto r = run_cli({"classify", "--n", "5", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = json_of(r);
  EXPECT_EQ(j.at("class_count").get<int>(), 6);
  EXPECT_EQ(j.at("expected").get<std::string>(), "6");
  EXPECT_EQ(j.at("classes").size(), 6u);
  EXPECT_EQ(run_cli({"classify", "--n", "3"}).code, 0);
}

TEST(Cli, BipReports) {
  const auto r = run_cli({"bip", "--v", "1243", "--w", "2431", "--check-cube", "--normal-fan", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json_of(r);
  EXPECT_EQ(j.at("interval_size").get<int>(), 8);
  EXPECT_EQ(j.at("affine_dim").get<int>(), 3);
  EXPECT_EQ(j.at("facets").size(), 6u);
  EXPECT_EQ(j.at("edge_count").get<int>(), 12);
  EXPECT_TRUE(j.at("certificate").at("valid").get<bool>());
  EXPECT_TRUE(j.at("toric").get<bool>());

  const auto d = run_cli({"bip", "--v", "173254689", "--w", "715326894", "--decompose", "--format", "json"});
  ASSERT_EQ(d.code, 0) << d.err;
  const auto dj = json_of(d);
  ASSERT_EQ(dj.at("factors").size(), 3u);
  EXPECT_EQ(permutation_from_json(dj.at("factors")[2].at("w")), Permutation::parse("2341"));
  EXPECT_TRUE(dj.at("product_check").at("counts_match").get<bool>());
  EXPECT_TRUE(dj.at("product_check").at("normals_match").get<bool>());
}

TEST(Cli, IntervalCapFromEnvironment) {
  ::setenv("CATALAN_MAX_INTERVAL", "10", 1);
  EXPECT_EQ(run_cli({"bip", "--v", "1234", "--w", "4321"}).code, 3);
  ::setenv("CATALAN_MAX_INTERVAL", "ten", 1);
  EXPECT_EQ(run_cli({"bip", "--v", "1234", "--w", "4321"}).code, 2);
  ::unsetenv("CATALAN_MAX_INTERVAL");
  EXPECT_EQ(run_cli({"bip", "--v", "1234", "--w", "4321"}).code, 0);
}

TEST(Cli, VerifyCaseCountsAndDeterminism) {
  const auto nf = run_cli({"verify", "--suite", "normalfan", "--max-n", "4", "--format", "json"});
  ASSERT_EQ(nf.code, 0) << nf.out;
  EXPECT_EQ(json_of(nf).at("cases").get<int>(), 1 + 2 + 6 + 24);
  const auto one = run_cli({"verify", "--suite", "duality", "--max-n", "1", "--format", "json"});
  EXPECT_EQ(json_of(one).at("cases").get<int>(), 1);
  EXPECT_NE(one.err.find("verify duality"), std::string::npos);

  const auto a = run_cli({"verify", "--suite", "relations", "--max-n", "5", "--jobs", "1", "--format", "json"});
  const auto b = run_cli({"verify", "--suite", "relations", "--max-n", "5", "--jobs", "3", "--format", "json"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, SingleCaseRerun) {
  const auto id = triangulation_id(triangulation_of_tree(psi(Permutation::parse("31687524"))));
  const auto r = run_cli({"verify", "--suite", "relations", "--case", id, "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_EQ(json_of(r).at("cases").get<int>(), 1);
  EXPECT_EQ(run_cli({"verify", "--suite", "atoms", "--case", "2413"}).code, 0);
  EXPECT_EQ(run_cli({"verify", "--suite", "tables"}).code, 0);
}

TEST(Cli, TableVerifyDetectsDrift) {
  const auto dir = scratch("golden");
  fs::create_directories(dir);
  spit(dir / "table1_we.txt", "wrong\n");
  fs::copy_file(fs::path(CATALAN_DATA_DIR) / "table2_coat_hanger.txt", dir / "table2_coat_hanger.txt",
                fs::copy_options::overwrite_existing);
  const auto r = run_cli({"verify", "--suite", "tables", "--data-dir", dir.string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("table1_we"), std::string::npos);
}

TEST(Cli, OutputFile) {
  const auto path = scratch("we.txt");
  fs::remove(path);
  const auto r = run_cli({"--output", path.string(), "we", "--max", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(slurp(path), run_cli({"we", "--max", "5"}).out);
}

TEST(Cli, Probes) {
  EXPECT_EQ(run_cli({"probe", "catalan-forms", "--n", "2"}).code, 0);
  EXPECT_EQ(run_cli({"probe", "fano-products", "--m", "3", "--format", "json"}).code, 0);
}

#ifdef CATALAN_CLI_BINARY
TEST(Cli, BinaryMatchesLibrary) {
  const std::string cmd = std::string(CATALAN_CLI_BINARY) + " we --max 10 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  std::string out;
  char buf[256];
  while (std::fgets(buf, sizeof buf, pipe)) out += buf;
  EXPECT_EQ(::pclose(pipe), 0);
  EXPECT_EQ(out, run_cli({"we", "--max", "10"}).out);
}
#endif
