#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(ZL_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("eval") {
  auto r = run("eval pi 100");
  CHECK(r.code == 0);
  CHECK(r.out == "25\n");
  CHECK(run("eval psi 100").out == "94.045311229357395\n");
  CHECK(run("eval li 2").out.rfind("1.04516378011749", 0) == 0);
  CHECK(run("eval zeta 1").code == 2);
  CHECK(run("eval nope 1").code == 2);
}

TEST_CASE("check") {
  auto r = run("check C9 --max 100000");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"verdict\": \"pass\"") != std::string::npos);
  CHECK(run("check C99").code == 2);
  CHECK(run("check").code == 2);
  CHECK(run("check M2").code == 0);
}

TEST_CASE("scan exit codes and file output") {
  const auto dir = std::filesystem::temp_directory_path() / "zl_cli_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  const auto file = dir / "b2.csv";
  auto r = run("scan B2 --from 2 --to 100000 --mode every-integer --format csv --out " + file.string());
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  const auto text = slurp(file);
  CHECK(text.rfind("x,lhs,rhs,margin,pass\n", 0) == 0);
  // Standard output is byte-identical to the file.
  CHECK(run("scan B2 --from 2 --to 100000 --format csv").out == text);
  CHECK(run("--format csv scan B2 --from 2 --to 100000").out == text);

  CHECK(run("scan B4 --from 90 --to 110 --li-convention li").code == 1);
  CHECK(run("scan B4 --from 90 --to 110").code == 0);
  CHECK(run("scan B2 --from 2 --to 1e10").code == 2);
  CHECK(run("scan B2 --mode sideways").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("laplace zeta1 --s 1.5,2").code == 0);
  CHECK(run("laplace nope").code == 2);
  std::filesystem::remove_all(dir);
}

TEST_CASE("thread count does not change output") {
  CHECK(run("--threads 1 scan B3 --from 1 --to 200000").out == run("--threads 3 scan B3 --from 1 --to 200000").out);
  CHECK(run("check C3 --max 50 --threads 2").code == 0);
  CHECK(std::system((std::string("ZL_THREADS=0 ") + ZL_CLI_PATH + " eval pi 10 >/dev/null 2>&1").c_str()) != 0);
}
