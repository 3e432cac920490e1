#include "doctest.h"

#include "json.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string &args) {
  const std::string cmd = std::string(QUASINV_BIN) + " " + args + " 2>/dev/null";
  FILE *pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = ::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = ::pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path temp_dir(const std::string &tag) {
  const fs::path p = fs::temp_directory_path() / ("quasinv_test_" + tag);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

} // namespace

TEST_CASE("verify exit codes and formats") {
  const RunResult ok = run_cli("verify --N 2 --m 1 --output json");
  CHECK(ok.exit_code == 0);
  const auto j = nlohmann::json::parse(ok.out);
  CHECK(j.at("N") == 2);
  CHECK(j.at("checks").size() == 13);

  const RunResult text = run_cli("verify --N 3 --m 1 --output text");
  CHECK(text.exit_code == 0);
  CHECK(text.out.find("✓") != std::string::npos);
  CHECK(text.out.find("all checks passed") != std::string::npos);

  // Invalid configuration is a usage error.
  CHECK(run_cli("verify --N 1 --m 0").exit_code == 1);
  CHECK(run_cli("verify --N 2").exit_code == 1);
  CHECK(run_cli("nonsense").exit_code == 1);
}

TEST_CASE("verify cache returns byte-identical reports") {
  const fs::path dir = temp_dir("cache");
  const std::string args = "verify --N 2 --m 1 --output json --cache-dir " + dir.string();
  const RunResult first = run_cli(args);
  REQUIRE(first.exit_code == 0);
  CHECK(fs::exists(dir / "verify_N2_m1.json"));
  const RunResult second = run_cli(args);
  CHECK(second.exit_code == 0);
  CHECK(second.out == first.out);
}

TEST_CASE("QUASINV_CACHE overrides the flag") {
  const fs::path env_dir = temp_dir("cache_env");
  const fs::path flag_dir = temp_dir("cache_flag");
  const std::string cmd = "QUASINV_CACHE=" + env_dir.string() + " " +
                          std::string(QUASINV_BIN) +
                          " verify --N 2 --m 0 --output json --cache-dir " +
                          flag_dir.string() + " >/dev/null 2>&1";
  REQUIRE(std::system(cmd.c_str()) == 0);
  CHECK(fs::exists(env_dir / "verify_N2_m0.json"));
  CHECK(!fs::exists(flag_dir / "verify_N2_m0.json"));
}

TEST_CASE("basis output") {
  const RunResult quasi = run_cli("basis --kind quasi --N 2 --m 1");
  CHECK(quasi.exit_code == 0);
  CHECK(quasi.out.find("deg 0: 1") != std::string::npos);
  CHECK(quasi.out.find("z^3 + 3*z*zb^2") != std::string::npos);
  CHECK(quasi.out.find("3*z^2*zb + zb^3") != std::string::npos);
  CHECK(quasi.out.find("z^6 + -3*z^4*zb^2 + 3*z^2*zb^4 + -zb^6") != std::string::npos);

  const RunResult harm = run_cli("basis --kind harmonic --N 2 --m 0 --output json");
  CHECK(harm.exit_code == 0);
  const auto j = nlohmann::json::parse(harm.out);
  CHECK(j.at("total_dim") == 4);

  const RunResult quasi31 = run_cli("basis --kind quasi --N 3 --m 1 --output json");
  const auto j31 = nlohmann::json::parse(quasi31.out);
  CHECK(j31.at("total_dim") == 6);
  CHECK(j31.at("components").at("4").size() == 2);
  CHECK(j31.at("components").at("5").size() == 2);
  CHECK(j31.at("components").at("9").size() == 1);

  CHECK(run_cli("basis --N 2 --m 1").exit_code == 1); // --kind required
}

TEST_CASE("poincare output") {
  const RunResult r = run_cli("poincare --N 2 --m 1 --output json");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("all_match") == true);
  const auto &rows = j.at("rows");
  const std::vector<int> head{1, 0, 2, 2, 3, 4, 5, 6};
  for (std::size_t d = 0; d < head.size(); ++d) {
    CHECK(rows.at(d).at("computed") == head[d]);
    CHECK(rows.at(d).at("closed") == head[d]);
    CHECK(rows.at(d).at("match") == true);
  }
  CHECK(j.at("harmonic_poincare") == nlohmann::json({1, 0, 0, 2, 0, 0, 1}));

  const RunResult m0 = run_cli("poincare --N 4 --m 0 --max-degree 6 --output json");
  const auto j0 = nlohmann::json::parse(m0.out);
  for (int d = 0; d <= 6; ++d) CHECK(j0.at("rows").at(d).at("computed") == d + 1);
}

TEST_CASE("apply command") {
  const fs::path dir = temp_dir("apply");

  // q = sigma1 acts as the full operator L.
  {
    std::ofstream f(dir / "in1.txt");
    f << "z*zb\n";
    f << "z*zb\n";
  }
  RunResult r = run_cli("apply --N 2 --m 1 --input " + (dir / "in1.txt").string() +
                        " --output json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("numerator") == "-4"); // L(sigma1) = 4(1 - mN) = -4
  CHECK(j.at("delta_power") == 0);

  // q = 1 is the identity.
  {
    std::ofstream f(dir / "in2.txt");
    f << "1\n";
    f << "z^2 + 7*zb\n";
  }
  r = run_cli("apply --N 3 --m 2 --input " + (dir / "in2.txt").string());
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("numerator = 7*zb + z^2") != std::string::npos);
  CHECK(r.out.find("delta_power = 0") != std::string::npos);

  // JSON input form.
  {
    std::ofstream f(dir / "in3.json");
    f << R"({"q": "z*zb", "p": "z^2*zb^2"})";
  }
  r = run_cli("apply --N 2 --m 1 --input " + (dir / "in3.json").string() +
              " --output json");
  CHECK(r.exit_code == 0);

  // Non-quasiinvariant q is rejected with the violated condition cited.
  {
    std::ofstream f(dir / "bad.txt");
    f << "z\n";
    f << "1\n";
  }
  const std::string cmd = std::string(QUASINV_BIN) + " apply --N 2 --m 1 --input " +
                          (dir / "bad.txt").string() + " 2>" +
                          (dir / "err.txt").string();
  const int status = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(status) == 1);
  std::ifstream err(dir / "err.txt");
  std::string err_text((std::istreambuf_iterator<char>(err)),
                       std::istreambuf_iterator<char>());
  CHECK(err_text.find("moment condition violated") != std::string::npos);
  CHECK(err_text.find("residue") != std::string::npos);

  // Parse errors are usage errors.
  {
    std::ofstream f(dir / "parse.txt");
    f << "z^-1\n";
    f << "1\n";
  }
  CHECK(run_cli("apply --N 2 --m 1 --input " + (dir / "parse.txt").string()).exit_code ==
        1);
}

TEST_CASE("sweep") {
  const fs::path dir = temp_dir("sweep");
  const RunResult r = run_cli("sweep --N-list 2,3 --m-list 0,1 --jobs 2 --cache-dir " +
                              dir.string());
  CHECK(r.exit_code == 0);
  for (const std::string cell : {"N=2 m=0", "N=2 m=1", "N=3 m=0", "N=3 m=1"})
    CHECK(r.out.find(cell + ": pass") != std::string::npos);
  CHECK(fs::exists(dir / "verify_N3_m1.json"));
}
