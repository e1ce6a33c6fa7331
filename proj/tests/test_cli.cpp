// exercises the built command-line binary end to end
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string cli_path() { return REACHLIE_CLI_PATH; }

int run_cli(const std::string& args)
{
  std::string cmd = cli_path() + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path)
{
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace

TEST_CASE("exit codes")
{
  CHECK(run_cli("reachable --type G2") == 0);
  CHECK(run_cli("verify-tables --type G2") == 0);
  // bad flags
  CHECK(run_cli("") == 2);
  CHECK(run_cli("reachable") == 2);
  CHECK(run_cli("reachable --type G2 --format yaml") == 2);
  CHECK(run_cli("frobnicate --type G2") == 2);
  CHECK(run_cli("reachable --type X9") == 2);
  // no catalog for classical types
  CHECK(run_cli("reachable --type A2") == 3);
}

TEST_CASE("json reports are byte-identical for identical inputs")
{
  std::string f1 = "/tmp/reachlie_cli_1.json", f2 = "/tmp/reachlie_cli_2.json";
  REQUIRE(run_cli("orbits --type G2 --format json --seed 3 --output " + f1) == 0);
  REQUIRE(run_cli("orbits --type G2 --format json --seed 3 --output " + f2) == 0);
  std::string a = slurp(f1), b = slurp(f2);
  CHECK(!a.empty());
  CHECK(a == b);
}

TEST_CASE("reachable table for G2 names the single orbit")
{
  std::string f = "/tmp/reachlie_cli_g2.txt";
  REQUIRE(run_cli("reachable --type G2 --output " + f) == 0);
  std::string body = slurp(f);
  CHECK(body.find("A1~") != std::string::npos);
  CHECK(body.find("1 0") != std::string::npos);
}

TEST_CASE("panyushev summary line")
{
  std::string f = "/tmp/reachlie_cli_pany.txt";
  REQUIRE(run_cli("panyushev --type G2 --output " + f) == 0);
  CHECK(slurp(f).find("property holds: true") != std::string::npos);
}

TEST_CASE("E6 record counts")
{
  std::string f = "/tmp/reachlie_cli_e6.json";
  REQUIRE(run_cli("reachable --type E6 --format json --output " + f) == 0);
  std::string body = slurp(f);
  std::size_t labels = 0;
  for (std::size_t p = body.find("\"label\""); p != std::string::npos;
       p = body.find("\"label\"", p + 1))
    ++labels;
  CHECK(labels == 6);

  REQUIRE(run_cli("strong --type E6 --output " + f) == 0);
  std::string table = slurp(f);
  std::size_t rows = 0;
  for (char c : table)
    rows += (c == '\n');
  CHECK(rows == 4); // header plus three strongly reachable orbits
}
