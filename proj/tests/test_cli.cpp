#include "doctest.h"

#include <sstream>

#include "json.hpp"
#include "walkmat/bigmatrix.hpp"
#include "walkmat/cli.hpp"
#include "walkmat/graph.hpp"
#include "walkmat/walk.hpp"

using namespace walkmat;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string walk_d5_text() { return format_matrix(walk_matrix(adjacency_matrix(build_dynkin_d(5)))); }

}  // namespace

TEST_CASE("gen-dn formats") {
  const Result edges = run_cli({"gen-dn", "--n", "5"});
  CHECK(edges.code == 0);
  CHECK(edges.out == "5\n1 3\n2 3\n3 4\n4 5\n");
  const Result g6 = run_cli({"gen-dn", "--n", "5", "--format", "graph6"});
  CHECK(g6.code == 0);
  CHECK(parse_graph6(g6.out) == build_dynkin_d(5));
  const Result m = run_cli({"gen-dn", "--n", "4", "--format", "matrix"});
  CHECK(parse_matrix(m.out) == adjacency_matrix(build_dynkin_d(4)));
  CHECK(run_cli({"gen-dn", "--n", "3"}).code == 2);
  CHECK(run_cli({"gen-dn"}).code == 2);
}

TEST_CASE("walk subcommand") {
  const Result w = run_cli({"walk", "--n", "5"});
  CHECK(w.code == 0);
  CHECK(w.out == walk_d5_text());
  const Result h = run_cli({"walk", "--n", "5", "--hat"});
  CHECK(h.out == "4 4\n1 1 3 4\n1 3 4 10\n1 2 4 6\n1 1 2 4\n");
  const Result from_edges = run_cli({"walk", "--input", "-"}, "5\n1 3\n2 3\n3 4\n4 5\n");
  CHECK(from_edges.out == walk_d5_text());
  const Result main = run_cli({"walk", "--n", "8", "--main", "--json"});
  CHECK(main.code == 0);
  const auto j = nlohmann::json::parse(main.out);
  CHECK(j["exact"] == 6);
  CHECK(j["numeric"] == 6);
  const Result js = run_cli({"walk", "--n", "5", "--json"});
  CHECK(nlohmann::json::parse(js.out)["entries"][2][4] == "14");
}

TEST_CASE("snf from standard input") {
  const Result r = run_cli({"snf", "--input", "-"}, walk_d5_text());
  CHECK(r.code == 0);
  CHECK(r.out == "1 1 1 2 0\n");
  const Result j = run_cli({"snf", "--input", "-", "--json"}, walk_d5_text());
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["certificate"] == true);
  CHECK(doc["diag"] == nlohmann::json({"1", "1", "1", "2", "0"}));
  CHECK(doc["left"]["rows"] == 5);
}

TEST_CASE("rank subcommand") {
  CHECK(run_cli({"rank", "--input", "-"}, walk_d5_text()).out == "4\n");
  const Result m2 = run_cli({"rank", "--input", "-", "--mod2"}, walk_d5_text());
  CHECK(m2.code == 0);
  CHECK(std::stoul(m2.out) <= 3);
}

TEST_CASE("divisor subcommand") {
  const Result d = run_cli({"divisor", "--n", "5"});
  CHECK(d.code == 0);
  CHECK(d.out == "4 4\n0 1 0 0\n2 0 1 0\n0 1 0 1\n0 0 1 0\n");
  const Result mirror = run_cli({"divisor", "--input", "-", "--partition", "1,4;2,3"}, "4\n1 2\n2 3\n3 4\n");
  CHECK(mirror.code == 0);
  CHECK(mirror.out == "2 2\n0 1\n1 1\n");
  const Result bad = run_cli({"divisor", "--input", "-", "--partition", "1,2;3,4"}, "4\n1 2\n2 3\n3 4\n");
  CHECK(bad.code == 2);
  CHECK(bad.err.find("equitable") != std::string::npos);
}

TEST_CASE("cheb subcommand") {
  const Result t3 = run_cli({"cheb", "--n", "3"});
  CHECK(t3.code == 0);
  CHECK(t3.out.find("T_3 = 4x^3 - 3x") != std::string::npos);
  CHECK(t3.out.find("432") != std::string::npos);
  const Result range = run_cli({"cheb", "--from", "1", "--to", "30", "--json"});
  CHECK(range.code == 0);
  const auto j = nlohmann::json::parse(range.out);
  CHECK(j.size() == 30 * 5 + 29);
  for (const auto& c : j) CHECK(c["pass"] == true);
}

TEST_CASE("verify subcommand") {
  const Result r = run_cli({"verify", "--from", "4", "--to", "12", "--json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 9);
  for (std::size_t i = 0; i < j.size(); ++i) {
    CHECK(j[i]["n"] == 4 + i);
    CHECK(j[i]["pass"] == true);
  }
  CHECK(r.out == run_cli({"verify", "--from", "4", "--to", "12", "--json", "--threads", "1"}).out);
  const Result table = run_cli({"verify", "--from", "5", "--to", "6"});
  CHECK(table.code == 0);
  CHECK(table.out.find("1^3 2^1 0^1") != std::string::npos);
  CHECK(run_cli({"verify", "--from", "3"}).code == 2);
}

TEST_CASE("corpus subcommand") {
  const Result r = run_cli({"corpus", "--count", "200", "--n", "12", "--json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["random_checked"] == 200);
  CHECK(j["dynkin_checked"] == 9);
  CHECK(j["violations"].empty());
}

TEST_CASE("usage and input errors") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"gen-dn", "--n", "5", "--bogus"}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"gen-dn", "--n", "5", "--format", "dot"}).code == 2);
  const Result bad = run_cli({"snf", "--input", "-"}, "2 2\n1 2\n3 x\n");
  CHECK(bad.code == 2);
  CHECK(bad.err.find("parse error") != std::string::npos);
  CHECK(run_cli({"walk", "--input", "-", "--format", "graph6"}, "DQd").code == 2);
  CHECK(run_cli({"rank", "--input", "/nonexistent/file"}).code == 2);
  CHECK(run_cli({"walk"}).code == 2);
  const Result help = run_cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("verify") != std::string::npos);
}
