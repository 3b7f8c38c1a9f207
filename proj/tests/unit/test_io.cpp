#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <limits>

#include "lprg/gaussian_networks.hpp"
#include "lprg/io.hpp"
#include "lprg/realizers.hpp"
#include "support.hpp"

using namespace lprg;
using namespace lprg::testing;

namespace {

Input random_input(const Hypothesis& h, Rng& rng) {
  if (h.domain() == Domain::Boolean) return random_bits(h.dim(), rng);
  RealVector z(h.dim());
  for (Eigen::Index i = 0; i < z.size(); ++i) z(i) = rng.normal() - 1.0;
  return z;
}

void expect_round_trip(const Hypothesis& h) {
  const json j = hypothesis_to_json(h);
  const Hypothesis back = hypothesis_from_json(json::parse(dump(j)));
  EXPECT_EQ(back.kind(), h.kind());
  EXPECT_EQ(back.dim(), h.dim());
  EXPECT_EQ(back.domain(), h.domain());
  EXPECT_EQ(back.range(), h.range());
  EXPECT_EQ(dump(hypothesis_to_json(back)), dump(j)) << h.kind();
  Rng rng(99);
  for (int rep = 0; rep < 500; ++rep) {
    const Input in = random_input(h, rng);
    ASSERT_EQ(back(in), h(in)) << h.kind();
  }
}

}  // namespace

TEST(PredicateSpec, ParsesAndPrints) {
  EXPECT_EQ(parse_predicate_spec("xormaj:1,2"), make_xormaj(1, 2));
  const Predicate p = make_xormaj(2, 3);
  EXPECT_EQ(parse_predicate_spec(predicate_spec(p)), p);
  EXPECT_EQ(predicate_spec(make_parity(2)), "table:" + bits_to_hex(make_parity(2).table()) + ":2");
  EXPECT_EQ(predicate_from_json(predicate_to_json(p)), p);
  for (const char* bad : {"", "xormaj:", "xormaj:0,0", "xormaj:1", "table:6:3", "table:zz:2",
                          "table:6:0", "maj:3", "xormaj:1,2,3"}) {
    EXPECT_ANY_THROW(parse_predicate_spec(bad)) << bad;
  }
}

TEST(Doubles, ExactRoundTrip) {
  Rng rng(1);
  for (int rep = 0; rep < 1000; ++rep) {
    const double v = rng.normal() * std::pow(10.0, static_cast<double>(rng.below(40)) - 20);
    ASSERT_EQ(parse_double(format_double(v)), v);
  }
  for (double v : {0.1, -0.0, 1e-300, std::numeric_limits<double>::max(), gaussian_threshold(8)}) {
    EXPECT_EQ(parse_double(format_double(v)), v);
  }
  EXPECT_THROW(parse_double("1.5x"), InvalidInput);
  EXPECT_THROW(parse_double(""), InvalidInput);
}

TEST(HypothesisJson, EveryKindRoundTrips) {
  const Predicate p = make_xormaj(1, 1);
  const BitVector x = bits({1, 0, 1, 1});
  expect_round_trip(Hypothesis(dnf_combined(p, x, 4, 12)));
  expect_round_trip(Hypothesis(circuit_from_predicate(p, x, 4, 6)));
  expect_round_trip(Hypothesis(intersection_from_xormaj(bits({1, 0, 1, 1, 0}), 5, 2, 1)));
  expect_round_trip(Hypothesis(nn2_from_dnf(p, x, 4)));
  expect_round_trip(Hypothesis(dfa_full(p, x, 4, 2), 2 * multi_slice_width(4, 2, MultiFlavor::Long)));
  expect_round_trip(Hypothesis(gf2_from_dnf(dnf_from_predicate(p, x, 4))));
  const auto nets = nn3_gaussian<double>(p, x, 4, gaussian_threshold(4), 10);
  expect_round_trip(Hypothesis(nets.ntilde));
  const Hypothesis opaque(OpaqueHypothesis{"f", [](const Input&) { return 0.0; }}, 3,
                          Domain::Boolean, Range::Bit);
  EXPECT_THROW(hypothesis_to_json(opaque), InvalidInput);
}

TEST(HypothesisJson, MalformedPayloadsAreRejected) {
  json j = hypothesis_to_json(Hypothesis(dnf_from_predicate(make_parity(2), bits({1, 0, 1}), 3)));
  json bad = j;
  bad["kind"] = "forest";
  EXPECT_ANY_THROW(hypothesis_from_json(bad));
  bad = j;
  bad["payload"]["terms"][0][0][0] = 99;  // coordinate outside dim
  EXPECT_ANY_THROW(hypothesis_from_json(bad));
  bad = j;
  bad.erase("payload");
  EXPECT_ANY_THROW(hypothesis_from_json(bad));
}

TEST(ChallengeJson, RoundTripAndBlindExport) {
  Rng rng(2);
  const Predicate p = make_xormaj(1, 1);
  auto g = sample_hypergraph(8, 30, 2, rng);
  const auto c = make_challenge(p, std::move(g), ChallengeMode::Pseudorandom, rng);
  const json meta = make_meta("challenge", 7, json{{"n", 8}});
  EXPECT_EQ(meta["tool"], "lprg");
  const json open = challenge_to_json(c, p, meta, false);
  const auto back = challenge_from_json(json::parse(dump(open)));
  EXPECT_EQ(back.graph.edges, c.graph.edges);
  EXPECT_EQ(back.labels, c.labels);
  EXPECT_EQ(back.mode, ChallengeMode::Pseudorandom);
  ASSERT_TRUE(back.seed);
  EXPECT_EQ(*back.seed, *c.seed);
  EXPECT_TRUE(back.consistent_with(p));

  const json blind = challenge_to_json(c, p, meta, true);
  EXPECT_EQ(blind["truth"], "hidden");
  EXPECT_EQ(dump(blind).find(bits_to_hex(*c.seed)), std::string::npos);
  const auto hidden = challenge_from_json(blind);
  EXPECT_FALSE(hidden.seed);
  EXPECT_EQ(hidden.labels, c.labels);

  json corrupt = open;
  corrupt["labels"][0] = 2;
  EXPECT_ANY_THROW(challenge_from_json(corrupt));
  corrupt = open;
  corrupt["edges"][0] = json::array({3, 3});
  EXPECT_ANY_THROW(challenge_from_json(corrupt));
}

TEST(ExampleJson, BitsAndReals) {
  const Example b{BitVector(bits({1, 0, 0, 1, 1})), 1.0};
  const Example back = example_from_json(json::parse(example_to_json(b).dump()), 5);
  EXPECT_EQ(std::get<BitVector>(back.input), std::get<BitVector>(b.input));
  EXPECT_EQ(back.label, 1.0);
  RealVector z(3);
  z << -1.0 / 3, 2.5e-7, gaussian_threshold(16);
  const Example r{z, 0.1};
  const Example rb = example_from_json(json::parse(example_to_json(r).dump()), 3);
  EXPECT_EQ(std::get<RealVector>(rb.input), z);
  EXPECT_EQ(rb.label, 0.1);
  EXPECT_ANY_THROW(example_from_json(example_to_json(r), 4));
}

TEST(Files, ReadWriteAndErrors) {
  const auto dir = std::filesystem::temp_directory_path() / "lprg_test_io";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "a.json").string();
  write_text_file(path, dump(json{{"b", 1}, {"a", 2}}));
  EXPECT_EQ(read_json_file(path)["a"], 2);
  write_text_file(path, "{not json");
  EXPECT_THROW(read_json_file(path), InvalidInput);
  EXPECT_THROW(read_json_file((dir / "missing.json").string()), ConfigError);
  std::filesystem::remove_all(dir);
}
