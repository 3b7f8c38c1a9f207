#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("lprg_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  // Runs the tool, returning its exit status; stdout goes to out.txt.
  int run(const std::string& args) {
    const std::string cmd = std::string(LPRG_BINARY) + " " + args + " > " + path("out.txt") +
                            " 2> " + path("err.txt");
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  std::string read(const std::string& name) const {
    std::ifstream in(path(name), std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  fs::path dir_;
};

const std::string kChallenge = "challenge --n 16 --k 2 --m 64 --pred xormaj:1,1 --seed 5";

}  // namespace

TEST_F(Cli, ChallengeIsByteDeterministic) {
  ASSERT_EQ(run(kChallenge + " --out " + path("a.json")), 0);
  ASSERT_EQ(run(kChallenge + " --out " + path("b.json")), 0);
  EXPECT_EQ(read("a.json"), read("b.json"));
  ASSERT_EQ(run("challenge --n 16 --k 2 --m 64 --pred xormaj:1,1 --seed 6 --out " + path("c.json")),
            0);
  EXPECT_NE(read("a.json"), read("c.json"));
  const json j = json::parse(read("a.json"));
  EXPECT_EQ(j["labels"].size(), 64u);
  EXPECT_EQ(j["truth"]["mode"], "pseudorandom");
}

TEST_F(Cli, BlindChallengeHidesTheSeed) {
  ASSERT_EQ(run(kChallenge + " --out " + path("open.json")), 0);
  ASSERT_EQ(run(kChallenge + " --blind --out " + path("blind.json")), 0);
  const json open = json::parse(read("open.json"));
  const json blind = json::parse(read("blind.json"));
  EXPECT_EQ(blind["truth"], "hidden");
  EXPECT_EQ(blind["labels"], open["labels"]);
  EXPECT_FALSE(blind["meta"].contains("seed"));
  const std::string seed_hex = open["truth"]["seed_hex"];
  EXPECT_EQ(read("blind.json").find(seed_hex), std::string::npos);
}

TEST_F(Cli, SampleIsByteDeterministic) {
  const std::string args =
      "sample --oracle bernoulli --n 8 --k 2 --m 400 --d 32 --pred xormaj:1,1 --seed 3 --count 50";
  ASSERT_EQ(run(args + " --out " + path("a.jsonl")), 0);
  ASSERT_EQ(run(args + " --out " + path("b.jsonl")), 0);
  EXPECT_EQ(read("a.jsonl"), read("b.jsonl"));
  std::istringstream lines(read("a.jsonl"));
  std::string line;
  std::size_t count = 0;
  while (std::getline(lines, line)) ++count;
  EXPECT_EQ(count, 51u);
}

TEST_F(Cli, ExperimentCsvIsByteDeterministic) {
  const std::string args =
      "experiment --oracle plain --n 16 --k 2 --m 256 --pred xormaj:1,1 --learner cheat "
      "--train 128 --test 128 --trials 20 --seed 9";
  ASSERT_EQ(run(args + " --csv " + path("a.csv") + " --summary " + path("a.json")), 0);
  ASSERT_EQ(run(args + " --csv " + path("b.csv")), 0);
  EXPECT_EQ(read("a.csv"), read("b.csv"));
  EXPECT_EQ(read("a.csv").rfind("# {", 0), 0u);
  const json s = json::parse(read("a.json"));
  EXPECT_EQ(s["advantage"], 1.0);
  EXPECT_EQ(run(args + " --black-box"), 2);
}

TEST_F(Cli, VerifyAcceptsRealizersAndRejectsTampering) {
  ASSERT_EQ(run("realize dnf --n 4 --k 2 --pred xormaj:1,1 --x 5 --out " + path("h.json")), 0);
  EXPECT_EQ(run("verify --hypothesis " + path("h.json")), 0);
  EXPECT_NE(read("out.txt").find("mismatches=0"), std::string::npos);
  EXPECT_EQ(run("verify dnf --n 4 --k 2 --pred xormaj:1,1 --all-seeds"), 0);

  json h = json::parse(read("h.json"));
  auto& terms = h["hypothesis"]["payload"]["terms"];
  ASSERT_FALSE(terms.empty());
  terms.erase(terms.begin());
  std::ofstream(path("bad.json")) << h.dump(2);
  EXPECT_EQ(run("verify --hypothesis " + path("bad.json")), 1);
}

TEST_F(Cli, UsageAndConfigErrorsExitTwo) {
  EXPECT_EQ(run("--help"), 0);
  EXPECT_EQ(run("challenge --n 16"), 2);
  EXPECT_EQ(run("challenge --n 4 --k 5 --m 3 --pred xormaj:1,4 --seed 1"), 2);
  EXPECT_EQ(run("realize nope --n 4 --k 2 --pred xormaj:1,1"), 2);
  EXPECT_EQ(run("verify nn3 --n 8 --k 2 --pred xormaj:1,1 --x 03"), 2);
  EXPECT_EQ(run("verify --hypothesis " + path("missing.json")), 2);
  std::ofstream(path("garbage.json")) << "{";
  EXPECT_EQ(run("verify --hypothesis " + path("garbage.json")), 2);
  // 100 pairs cannot feed 64 + 64 examples.
  EXPECT_EQ(run("experiment --oracle plain --n 16 --k 2 --m 100 --pred xormaj:1,1 --learner "
                "constant0 --train 64 --test 64 --trials 2 --seed 1"),
            2);
}

TEST_F(Cli, Nn3VerifiesUnderMonteCarlo) {
  EXPECT_EQ(run("verify nn3 --n 8 --k 2 --pred xormaj:1,1 --x 03 --monte-carlo --samples 2000"), 0);
  EXPECT_NE(read("out.txt").find("checked=2000 mismatches=0"), std::string::npos);
}
