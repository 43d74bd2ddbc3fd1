#include <doctest.h>

#include <json.hpp>

#include "cominq/cli.hpp"

using cominq::cli::CommandOutcome;
using cominq::cli::run;

TEST_CASE("qk mult basis products") {
  CommandOutcome r = run({"qk", "mult", "O1", "O1"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "O2\n");

  r = run({"qk", "mult", "O2", "O16"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "q O6\n");

  r = run({"qk", "mult", "O16", "O16"});
  CHECK(r.out == "q^2 O8''\n");

  r = run({"qk", "mult", "O1 + O2", "O16"});
  CHECK(r.out == "q O5 + q O6\n");
}

TEST_CASE("gamma reproduces the degree-1 neighborhood words") {
  CommandOutcome r =
      run({"gamma", "--space", "E7", "--word", "7", "--d", "1"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1,3,4,2,5,4,3,1,7,6,5,4,2,3,4,5,6,7\n");

  r = run({"gamma", "--space", "E7", "--word", "7", "--d", "0"});
  CHECK(r.out == "7\n");

  r = run({"gamma", "--space", "Gr(2,4)", "--word", "2", "--d", "1"});
  CHECK(r.out == "2,1,3,2\n");
}

TEST_CASE("dist and chain") {
  CommandOutcome r = run({"dist", "--space", "E6", "--word",
                          "6,5,4,2,3,4,5,6"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "min_rep 6,5,4,2,3,4,5,6\ndeg_dist 2\n");

  r = run({"chain", "--space", "E6", "--word", "6,5,4,2,3,4,5,6"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "e\n6\n6,5,4,2,3,4,5,6\n");
}

TEST_CASE("verification subcommands") {
  CHECK(run({"verify", "dx3", "--space", "Gr(2,5)"}).exit_code == 0);
  CHECK(run({"verify", "all", "--space", "Q(5)"}).exit_code == 0);
  CHECK(run({"qk", "verify"}).exit_code == 0);
  CHECK(run({"cancel", "--d", "6", "--dmax", "3", "--seed", "1", "--trials",
             "10"}).exit_code == 0);
  CHECK(run({"assemble", "--basis", "3", "--dmax", "3", "--seed", "5"})
            .exit_code == 0);
}

TEST_CASE("usage and parse errors exit with 2") {
  CHECK(run({"roots", "--space", "XX(3)"}).exit_code == 2);
  CHECK(run({"frobnicate"}).exit_code == 2);
  CHECK(run({"roots"}).exit_code == 2);  // missing required option
  CHECK(run({"dist", "--space", "E6", "--word", "9"}).exit_code == 2);
  CHECK(run({"qk", "mult", "--table", "data/qk_e6p6.tbl", "O17", "O1"})
            .exit_code == 2);
  CHECK(run({"qk", "verify", "--table", "/nonexistent"}).exit_code == 1);
}

TEST_CASE("json output carries the documented schema") {
  CommandOutcome r = run({"roots", "--space", "E7", "--json"});
  CHECK(r.exit_code == 0);
  nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc["command"] == "roots");
  CHECK(doc["inputs"]["space"] == "E7");
  CHECK(doc["pass"] == true);
  CHECK(doc["results"]["positive_roots"] == 63);
  CHECK(doc["results"]["cominuscule_nodes"] == nlohmann::json::array({7}));

  r = run({"verify", "dx3", "--space", "E6", "--json"});
  doc = nlohmann::json::parse(r.out);
  CHECK(doc["pass"] == true);
  CHECK(doc["results"].is_array());
  for (const auto& entry : doc["results"]) {
    CHECK(entry.contains("check"));
    CHECK(entry.contains("pass"));
    CHECK(entry.contains("detail"));
  }
}

TEST_CASE("output is deterministic") {
  for (const std::vector<std::string> args :
       {std::vector<std::string>{"wp", "--space", "E6", "--list"},
        std::vector<std::string>{"qk", "verify", "--json"},
        std::vector<std::string>{"cancel", "--d", "4", "--dmax", "2",
                                 "--seed", "9", "--trials", "3"}}) {
    CommandOutcome a = run(args);
    CommandOutcome b = run(args);
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("wp listing") {
  CommandOutcome r = run({"wp", "--space", "Gr(2,4)", "--list"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("size 6") != std::string::npos);
  CHECK(r.out.find("rep len 0 word e") != std::string::npos);
  CHECK(r.out.find("rep len 4 word 2,1,3,2") != std::string::npos);
}

TEST_CASE("COMINQ_TABLE provides the fallback table path") {
  setenv("COMINQ_TABLE", "/nonexistent/qk.tbl", 1);
  CommandOutcome r = run({"qk", "mult", "O1", "O1"});
  CHECK(r.exit_code != 0);  // the env path was actually consulted
  r = run({"qk", "mult", "--table", "data/qk_e6p6.tbl", "O1", "O1"});
  CHECK(r.exit_code == 0);  // an explicit flag overrides it
  CHECK(r.out == "O2\n");
  setenv("COMINQ_TABLE", "data/qk_e6p6.tbl", 1);
  r = run({"qk", "mult", "O1", "O1"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "O2\n");
  unsetenv("COMINQ_TABLE");
}
