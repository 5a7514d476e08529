#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "state4/category/category_io.hpp"
#include "state4/category/gauge.hpp"
#include "state4/category/generators.hpp"
#include "state4/category/identities.hpp"
#include "state4/category/pachner.hpp"
#include "state4/errors.hpp"
#include "state4/simplicial/bistellar.hpp"

using namespace state4;
using nlohmann::json;

namespace {

Cyclotomic q(long a, long b = 1) { return Cyclotomic(Rational(a, b)); }

Fusion2CatData dw(const char* g, std::uint64_t twist_seed = 0) {
  auto grp = GroupPresentation::preset(g);
  if (!twist_seed) return gen_twisted_dw(grp, CochainTable::trivial(grp, 4));
  Rng rng(twist_seed);
  return gen_twisted_dw(grp, coboundary(random_cochain(grp, 3, 2, rng)));
}

Fusion2CatData pointed(const char* p) { return gen_pointed_braided(BraidedData::preset(p)); }

Fusion2CatData yetter(const char* g, const char* a) {
  return gen_yetter_2group(GroupPresentation::preset(g), GroupPresentation::preset(a));
}

}  // namespace

TEST(Identities, GlobalDimensionValues) {
  auto check = [](const Fusion2CatData& cat, const Cyclotomic& want) {
    auto rep = check_dimension_identities(cat);
    EXPECT_TRUE(rep.pass);
    const auto* g = rep.find("global dimension");
    ASSERT_NE(g, nullptr);
    EXPECT_EQ(g->status, IdentityStatus::Pass);
    ASSERT_TRUE(g->value);
    EXPECT_EQ(*g->value, want);
    EXPECT_EQ(cat.total_dimension(), want);
  };
  check(dw("Z2"), q(2));
  check(dw("Z3"), q(3));
  check(dw("S3"), q(6));
  check(dw("Z2", 5), q(2));
  for (const char* p : {"boson", "semion", "fermion", "antisemion"}) check(pointed(p), q(1, 2));
  check(pointed("Z3:2"), q(1, 3));
  check(yetter("Z2", "Z2"), q(1));
  check(yetter("Z3", "Z2"), q(3, 2));
  check(trivial_category(), q(1));
}

TEST(Identities, EveryIdentityReported) {
  auto rep = check_dimension_identities(pointed("semion"));
  for (const char* name : {"global dimension", "incoming morphisms", "relative multiplicativity", "additivity",
                           "precompositions", "factorizations", "total factorization"})
    ASSERT_NE(rep.find(name), nullptr) << name;
  EXPECT_EQ(rep.find("incoming morphisms")->status, IdentityStatus::Pass);
  // One object whose self-composite has |A| morphisms: nothing to instantiate.
  EXPECT_EQ(rep.find("relative multiplicativity")->status, IdentityStatus::Skipped);
  EXPECT_EQ(check_dimension_identities(dw("Z3")).find("relative multiplicativity")->status, IdentityStatus::Pass);
  EXPECT_EQ(rep.find("additivity")->status, IdentityStatus::Skipped);
  EXPECT_FALSE(rep.find("additivity")->detail.empty());
}

TEST(Identities, DetectsBrokenDimensions) {
  auto cat = dw("Z2");
  cat.morphisms[1].dim = q(2);
  cat.build();
  EXPECT_FALSE(check_dimension_identities(cat).pass);
}

TEST(CategoryFile, GeneratorRoundTrip) {
  for (auto cat : {dw("Z3"), pointed("semion"), yetter("Z2", "Z2"), trivial_category()}) {
    auto back = parse_category(serialize_category(cat, true));
    EXPECT_TRUE(back == cat);
  }
  auto ref = parse_category(R"j({"generator": "dw", "group": "Z3", "omega": "trivial"})j");
  EXPECT_FALSE(ref.generator.empty());
  auto again = parse_category(serialize_category(ref));
  EXPECT_TRUE(again == ref);
  EXPECT_TRUE(again == dw("Z3"));
}

TEST(CategoryFile, SemionFromBraidingTable) {
  auto cat = parse_category(R"j({"generator": "pointed", "group": "Z2", "R": [["1"], ["1", "zeta(4,1)"]]})j");
  EXPECT_TRUE(cat == pointed("semion"));
  auto fermion = parse_category(R"j({"generator": "pointed", "group": "Z2", "R": [["1"], ["1", "-1"]]})j");
  EXPECT_TRUE(fermion == pointed("fermion"));
}

TEST(CategoryFile, ZeroMorphismDimension) {
  auto j = json::parse(serialize_category(dw("Z2"), true));
  ASSERT_TRUE(j.contains("dim_mor"));
  j["dim_mor"].begin().value() = "0";
  EXPECT_THROW(parse_category(j.dump()), ValidationError);
}

TEST(CategoryFile, ParseErrorLocations) {
  try {
    parse_category(R"j({"generator": "dw", "group": "Z5x"})j");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.location(), "/group");
  }
  try {
    parse_category(R"j({"generator": "pointed", "group": "Z2", "R": [["1"], ["1", "q"]]})j");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.location(), "/R/1/1");
  }
  EXPECT_THROW(parse_category("{"), ParseError);
  EXPECT_THROW(parse_category(R"j({"generator": "nope"})j"), ParseError);
}

TEST(CategoryFile, CocycleCheckCanBeSkipped) {
  auto g = GroupPresentation::preset("Z2");
  auto omega = CochainTable::trivial(g, 4);
  omega.values[3] = q(-1);
  json j{{"generator", "dw"}, {"group", "Z2"}, {"omega", {{"table", json::array()}}}};
  for (const auto& v : omega.values) j["omega"]["table"].push_back(v.to_string());
  EXPECT_THROW(parse_category(j.dump()), InvalidCocycle);
  auto broken = parse_category(j.dump(), false);
  EXPECT_FALSE(check_pachner_exhaustive(broken, 3).pass);
}

TEST(Gauge, PachnerInvariantUnderRescaling) {
  for (auto cat : {pointed("semion"), dw("Z3", 7)}) {
    auto moved = gauge_transform(cat, random_rescaling(cat, 3));
    EXPECT_FALSE(moved.canonical_bases);
    for (int p : {3, 2, 1}) EXPECT_TRUE(check_pachner_exhaustive(moved, p).pass) << p;
    auto broken = gauge_transform(cat, random_rescaling(cat, 3), true);
    bool any_fail = false;
    for (int p : {3, 2, 1}) any_fail = any_fail || !check_pachner_exhaustive(broken, p).pass;
    EXPECT_TRUE(any_fail);
  }
}
