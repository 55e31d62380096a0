#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int code;
  std::string out;
};

Run pq_run(const std::string& args) {
  const std::string cmd = std::string(PQ_BINARY) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 512> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("bracket") {
  CHECK(pq_run("bracket 3 --p 2 --q 1").out == "7\n");
  CHECK(pq_run("bracket 0 --p 3/2 --q 1/2").out == "0\n");
  const auto r = pq_run("bracket 2.5 --p 2 --q 1 --json");
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["value"].get<double>() == doctest::Approx(4.656854249492380));
}

TEST_CASE("derive") {
  CHECK(pq_run("derive 0,0,1 --p 2 --q 1").out == "0,3\n");
  CHECK(pq_run("derive 5").out == "0\n");
  const auto r = pq_run("derive 'pqpow(a=1,n=3)' --k 2 --p 2 --q 1/2 --json");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  // p^{C(2,2)} [3][2] = 2 * (21/4) * (5/2)
  CHECK(j["coeff"] == "105/4");
  CHECK(j["expr"] == "pqpow(a=1, n=1, gamma=4)");
}

TEST_CASE("taylor") {
  const auto r = pq_run("taylor 0,0,0,1 0 --p 2 --q 1/2 --json");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["coeffs"] == nlohmann::json({"0", "0", "0", "1/8"}));
  CHECK(j["exact"] == true);
  CHECK(pq_run("taylor 4 1").out.find("\"coeffs\":[\"4\"]") != std::string::npos);
}

TEST_CASE("integrate") {
  auto j = nlohmann::json::parse(pq_run("integrate poly:0,1 0 1 --p 1 --q 1/2").out);
  CHECK(j["value"].get<double>() == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
  CHECK(j["status"] == "converged");
  j = nlohmann::json::parse(pq_run("integrate poly:0 0 5").out);
  CHECK(j["value"].get<double>() == 0.0);
  j = nlohmann::json::parse(pq_run("integrate recip 0 1 --p 2 --q 1").out);
  CHECK(j["status"] == "divergent");
  j = nlohmann::json::parse(pq_run("integrate powneg:3 1 --to-inf --p 1 --q 1/2").out);
  CHECK(j["value"].get<double>() == doctest::Approx(1.0 / 6.0).epsilon(1e-10));
}

TEST_CASE("identities") {
  const auto ok = pq_run("identities --trials 5");
  CHECK(ok.code == 0);
  CHECK(ok.out.find("PASS additive-law") != std::string::npos);
  CHECK(pq_run("identities --trials 2 --self-test-fail").code == 1);
  const auto heine = pq_run("identities --only heine");
  CHECK(heine.code == 0);
  CHECK(heine.out.find("MISMATCH") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(pq_run("bracket 3 --p 2 --q 2").code == 2);
  CHECK(pq_run("bracket").code == 2);
  CHECK(pq_run("derive 1,,2").code == 2);
  CHECK(pq_run("integrate poly:1 2 1").code == 2);
  CHECK(pq_run("nosuch").code == 2);
  CHECK(pq_run("--help").code == 0);
}
