#include <gtest/gtest.h>

#include "state4/category/generators.hpp"
#include "state4/category/pachner.hpp"
#include "state4/errors.hpp"
#include "state4/simplicial/bistellar.hpp"

using namespace state4;

namespace {

Fusion2CatData pointed(const char* preset) { return gen_pointed_braided(BraidedData::preset(preset)); }

void expect_all_moves(const Fusion2CatData& cat, const std::string& name) {
  for (int p : {3, 2, 1}) {
    auto rep = check_pachner_exhaustive(cat, p);
    EXPECT_TRUE(rep.pass) << name << " " << rep.check << ": " << rep.witness;
    EXPECT_TRUE(rep.complete);
    EXPECT_GT(rep.labelings, 0);
  }
}

}  // namespace

TEST(PachnerShapes, BoundarySizes) {
  // (3,3): every edge and all triangles but 135 and 024.
  EXPECT_EQ(pachner_boundary(3).size(), 15u + 18u);
  // (1,5): the boundary of the facet 01235.
  EXPECT_EQ(pachner_boundary(1).size(), 10u + 10u);
}

TEST(Pachner, TrivialDijkgraafWitten) {
  auto g = GroupPresentation::preset("Z2");
  expect_all_moves(gen_twisted_dw(g, CochainTable::trivial(g, 4)), "dw_z2");
}

TEST(Pachner, TwistedDijkgraafWitten) {
  Rng rng(5);
  for (const char* gname : {"Z2", "Z3"}) {
    auto g = GroupPresentation::preset(gname);
    auto omega = coboundary(random_cochain(g, 3, 6, rng));
    expect_all_moves(gen_twisted_dw(g, omega), std::string("dw_") + gname);
  }
}

TEST(Pachner, NonabelianDijkgraafWitten) {
  auto g = GroupPresentation::preset("S3");
  Rng rng(8);
  auto omega = coboundary(random_cochain(g, 3, 2, rng));
  auto cat = gen_twisted_dw(g, omega);
  for (int p : {3, 2, 1}) {
    auto rep = check_pachner_exhaustive(cat, p);
    EXPECT_TRUE(rep.pass) << rep.check << ": " << rep.witness;
  }
}

TEST(Pachner, PointedZ2Presets) {
  for (const char* p : {"boson", "semion", "fermion", "antisemion"}) expect_all_moves(pointed(p), p);
}

TEST(Pachner, PointedZ3AndZ4) {
  for (const char* p : {"Z3:2", "Z3:4", "Z4:1", "Z4:2"}) expect_all_moves(pointed(p), p);
}

TEST(Pachner, PointedZ2xZ2) {
  // Toric-code style braiding R((a,b),(c,d)) = (-1)^{ad}, trivial F.
  auto v4 = GroupPresentation::preset("Z2xZ2");
  auto data = BraidedData::trivial(v4);
  auto comp = [&](int x, int k) { return (v4.name(x)[k] == '1') ? 1 : 0; };
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) data.R[x * 4 + y] = Cyclotomic(comp(x, 0) * comp(y, 1) ? -1 : 1);
  validate_braided(data);
  expect_all_moves(gen_pointed_braided(data), "toric");
}

TEST(Pachner, PointedSignedDimensionsNeedMatching10j) {
  // dims(1) = -1 with the unsigned 10j product is not a consistent spherical
  // structure; the validators must reject it.
  auto cat = gen_pointed_braided(BraidedData::preset("fermion"), {Cyclotomic(1), Cyclotomic(-1)});
  auto rep = check_pachner_exhaustive(cat, 2);
  EXPECT_FALSE(rep.pass);
  EXPECT_TRUE(rep.failing.has_value());
}

TEST(Pachner, Yetter) {
  auto z2 = GroupPresentation::preset("Z2");
  expect_all_moves(gen_yetter_2group(z2, z2), "yetter");
  YetterTwist twist;
  twist.braiding = BraidedData::preset("semion");
  Rng rng(2);
  twist.omega = coboundary(random_cochain(z2, 3, 4, rng));
  expect_all_moves(gen_yetter_2group(z2, z2, twist), "yetter_twisted");
}

TEST(Pachner, CorruptedCocycleFails) {
  auto g = GroupPresentation::preset("Z2");
  auto cat = gen_twisted_dw(g, CochainTable::trivial(g, 4));
  // Flip one ω value after generation, bypassing the cocycle check.
  TenJKey target{};
  for (const auto& [key, entry] : cat.ten_j) {
    bool all_nontrivial = true;
    for (int m : key) all_nontrivial = all_nontrivial && cat.morphisms[m].left != 0 && cat.morphisms[m].right != 0;
    if (all_nontrivial) target = key;
  }
  auto& e = cat.ten_j.at(target);
  e.plus[0] = -e.plus[0];
  e.minus[0] = -e.minus[0];
  auto rep = check_pachner_exhaustive(cat, 3);
  EXPECT_FALSE(rep.pass);
  ASSERT_TRUE(rep.failing.has_value());
  EXPECT_NE(rep.witness.find("Z_I"), std::string::npos);
  // The same boundary labeling fails on its own.
  EXPECT_FALSE(check_pachner_33(cat, *rep.failing).pass);
}

TEST(Pachner, CorruptedPointedEntryFails) {
  auto cat = pointed("semion");
  auto it = cat.ten_j.begin();
  std::advance(it, 7);
  it->second.plus[0] = it->second.plus[0] * Cyclotomic::zeta(4, 1);
  bool failed = false;
  for (int p : {3, 2, 1}) failed = failed || !check_pachner_exhaustive(cat, p).pass;
  EXPECT_TRUE(failed);
}

TEST(Pachner, SingleLabelingApi) {
  auto cat = pointed("semion");
  BoundaryLabeling b;
  for (const auto& s : pachner_boundary(2)) b[s] = s.size() == 2 ? 0 : cat.morphism_index("0");
  auto rep = check_pachner_24(cat, b);
  EXPECT_TRUE(rep.pass) << rep.witness;
  EXPECT_EQ(rep.labelings, 1);
  b.erase(b.begin());
  EXPECT_THROW(check_pachner_24(cat, b), ValidationError);
}
