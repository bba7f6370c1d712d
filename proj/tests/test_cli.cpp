#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct run_result {
  int exit_code = -1;
  std::string out;
  std::string err;
};

run_result run_cli(const std::string& args) {
  const std::string err_path = "cli_stderr.txt";
  std::string cmd = std::string(STRATHOM_CLI_PATH) + " " + args + " 2>" + err_path;
  run_result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream err(err_path);
  r.err.assign(std::istreambuf_iterator<char>(err), std::istreambuf_iterator<char>());
  return r;
}

const char* trefoil = "'X(4,2,5,1) X(6,4,1,3) X(2,6,3,5)'";
const char* figure8 = "'X(4,2,5,1) X(6,3,7,4) X(8,6,1,5) X(2,7,3,8)'";

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path);
  out << body;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("invariant prints certificate json") {
  run_result r = run_cli("invariant " + std::string(trefoil) + " --quotients 3");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "\"alexander\":[1,-1,1]"));
  CHECK(contains(r.out, "\"target\":\"S3\""));
  CHECK(contains(r.out, "\"count\":12"));
}

TEST_CASE("invariant accepts gauss and dt input") {
  run_result dt = run_cli("invariant '4 6 2' --format dt --quotients 1");
  CHECK(dt.exit_code == 0);
  CHECK(contains(dt.out, "\"alexander\":[1,-1,1]"));

  run_result gauss = run_cli(
      "invariant 'O1- U2- O3- U1- O2- U3-' --format gauss --quotients 1");
  CHECK(gauss.exit_code == 0);
  CHECK(contains(gauss.out, "\"alexander\":[1,-1,1]"));
}

TEST_CASE("invariant writes to a file on request") {
  std::remove("cli_out.json");
  run_result r = run_cli("invariant " + std::string(trefoil) +
                         " --quotients 1 --out cli_out.json");
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  std::ifstream in("cli_out.json");
  std::string body((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  CHECK(contains(body, "\"alexander\":[1,-1,1]"));
  std::remove("cli_out.json");
}

TEST_CASE("bad input exits with code two") {
  run_result r = run_cli("invariant 'X(1,1,1,1)'");
  CHECK(r.exit_code == 2);
  CHECK(contains(r.err, "input error:"));

  run_result garbage = run_cli("invariant 'X(1,2'");
  CHECK(garbage.exit_code == 2);

  run_result flag = run_cli("invariant " + std::string(trefoil) +
                            " --format nonsense");
  CHECK(flag.exit_code == 2);

  run_result range = run_cli("invariant " + std::string(trefoil) +
                             " --quotients 9");
  CHECK(range.exit_code == 2);

  run_result none = run_cli("");
  CHECK(none.exit_code == 2);
}

TEST_CASE("compare separates and matches") {
  run_result d = run_cli("compare " + std::string(trefoil) + " " +
                         std::string(figure8) + " --quotients 3");
  CHECK(d.exit_code == 3);
  CHECK(d.out == "Distinct(alexander)\n");

  // same knot, rotated arc labels
  run_result s = run_cli("compare " + std::string(trefoil) +
                         " 'X(6,4,1,3) X(2,6,3,5) X(4,2,5,1)' --quotients 3");
  CHECK(s.exit_code == 0);
  CHECK(s.out == "Indistinguishable(alexander,S3)\n");
}

TEST_CASE("table command certifies a custom table") {
  write_file("cli_mini_table.txt",
             "u: \n"
             "t: X(4,2,5,1) X(6,4,1,3) X(2,6,3,5)\n"
             "f: X(4,2,5,1) X(6,3,7,4) X(8,6,1,5) X(2,7,3,8)\n");
  run_result r = run_cli("table --table cli_mini_table.txt --quotients 3");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "u vs t: Distinct(alexander)"));
  CHECK(contains(r.out, "u vs f: Distinct(alexander)"));
  CHECK(contains(r.out, "t vs f: Distinct(alexander)"));
  CHECK(contains(r.out, "separated 3 of 3 pairs"));
  std::remove("cli_mini_table.txt");
}

TEST_CASE("table separates the bundled knots") {
  run_result s3 = run_cli("table --quotients 3");
  CHECK(s3.exit_code == 0);
  CHECK(contains(s3.out, "3_1 vs 4_1: Distinct(alexander)"));
  CHECK(contains(s3.out, "8_20 vs granny: Distinct(quotient_count:S3)"));
  CHECK(contains(s3.out, "granny vs square: Indistinguishable(alexander,S3)"));
  CHECK(contains(s3.out, "separated 702 of 703 pairs"));

  // the one stubborn pair has isomorphic groups; only the peripheral
  // signature resolves it
  run_result s5 = run_cli("table --quotients 5");
  CHECK(s5.exit_code == 0);
  CHECK(contains(s5.out, "granny vs square: Distinct(peripheral_signature:S5)"));
  CHECK(contains(s5.out, "separated 703 of 703 pairs"));
}

TEST_CASE("table honors the environment override") {
  write_file("cli_env_table.txt",
             "a: \n"
             "b: X(4,2,5,1) X(6,4,1,3) X(2,6,3,5)\n");
  setenv("STRATHOM_TABLE", "cli_env_table.txt", 1);
  run_result r = run_cli("table --quotients 1");
  unsetenv("STRATHOM_TABLE");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "a vs b: Distinct(alexander)"));
  CHECK(contains(r.out, "separated 1 of 1 pairs"));
  std::remove("cli_env_table.txt");
}

TEST_CASE("mirror pair stays indistinguishable") {
  run_result r = run_cli("compare 'X(4,2,5,1) X(6,4,1,3) X(2,6,3,5)' "
                         "'X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)' --quotients 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "Indistinguishable(alexander)\n");
}

TEST_CASE("empty table is an input error") {
  write_file("cli_empty_table.txt", "# nothing\n");
  run_result r = run_cli("table --table cli_empty_table.txt");
  CHECK(r.exit_code == 2);
  CHECK(contains(r.err, "input error:"));
  std::remove("cli_empty_table.txt");

  run_result missing = run_cli("table --table does_not_exist.txt");
  CHECK(missing.exit_code == 2);
}

TEST_CASE("fuzz is deterministic per seed") {
  std::string args = "fuzz " + std::string(trefoil) + " --fuzz 12 --seed 5";
  run_result a = run_cli(args);
  run_result b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.err == b.err);
  CHECK(!a.out.empty());
  // stderr carries one move name per line
  int lines = 0;
  for (char ch : a.err)
    if (ch == '\n') ++lines;
  CHECK(lines == 12);

  run_result c = run_cli("fuzz " + std::string(trefoil) + " --fuzz 12 --seed 6");
  CHECK(c.exit_code == 0);
  CHECK(a.out != c.out);
}

TEST_CASE("fuzz output feeds back into invariant") {
  run_result f = run_cli("fuzz " + std::string(trefoil) + " --seed 3");
  CHECK(f.exit_code == 0);
  std::string pd = f.out.substr(0, f.out.find('\n'));
  run_result inv = run_cli("invariant '" + pd + "' --quotients 3");
  CHECK(inv.exit_code == 0);
  CHECK(contains(inv.out, "\"alexander\":[1,-1,1]"));
  CHECK(contains(inv.out, "\"count\":12"));
}
