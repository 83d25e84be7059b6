#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const char* exe = std::getenv("P8VERIFY");
  REQUIRE(exe != nullptr);
  const std::string cmd = std::string(exe) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), p)) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run("verify table1").code == 0);
  CHECK(run("verify pproj").code == 0);
  CHECK(run("verify diagram D4_3").code == 0);
  CHECK(run("verify diagram P8_Z3 --chi conj").code == 0);
  CHECK(run("verify group C3_24").code == 0);
  CHECK(run("verify diagram P8divZ6").code == 1);
  CHECK(run("verify diagram bogus").code == 2);
  CHECK(run("verify group bogus").code == 2);
  CHECK(run("verify nonsense").code == 2);
  CHECK(run("verify diagram").code == 2);
  CHECK(run("show diagram bogus").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("verify table1 --chi sideways").code == 2);
}

TEST_CASE("seed-free flag takes no value") {
  CHECK(run("verify table1 --seed-free").code == 0);
  CHECK(run("verify table1 --seed-free=1").code == 2);
}

TEST_CASE("group report includes the linear order") {
  const Run r = run("verify group K25 --max-words 12 --json -");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == "1");
  bool found = false;
  for (const auto& rep : j["reports"])
    for (const auto& c : rep["checks"])
      if (c["claim_id"] == "linear.order" && c["witness"]["order"] == 648) found = true;
  CHECK(found);
}

TEST_CASE("show outputs") {
  const Run d = run("show diagram D4_3");
  CHECK(d.code == 0);
  const auto j = nlohmann::json::parse(d.out);
  CHECK(j["gram"].size() == 4);
  CHECK(j["gram"][1][0] == "1 - w");
  const Run g = run("show group K3_6");
  CHECK(g.code == 0);
  const auto k = nlohmann::json::parse(g.out);
  CHECK(k["generators"][0]["source"]["matrix"][0][0] == "-conj(w)");
  CHECK(k["lattice_basis"] == nlohmann::json::array({{"1"}, {"w"}}));
}

TEST_CASE("JSON reports are byte-stable and timing is opt-in") {
  const Run a = run("verify diagram C3_33 --json -"), b = run("verify diagram C3_33 --json -");
  CHECK(a.out == b.out);
  CHECK(a.out.find("timing_seconds") == std::string::npos);
  CHECK(run("verify diagram C3_33 --json - --timing").out.find("timing_seconds") != std::string::npos);
}

TEST_CASE("--json writes a file") {
  const std::string path = "p8verify_test_report.json";
  CHECK(run("verify table1 --json " + path).code == 0);
  std::ifstream in(path);
  REQUIRE(in.good());
  const auto j = nlohmann::json::parse(in);
  CHECK(j["verdict"] == "pass");
  in.close();
  std::remove(path.c_str());
}
