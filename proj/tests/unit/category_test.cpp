#include <gtest/gtest.h>

#include "state4/category/generators.hpp"
#include "state4/category/pachner.hpp"
#include "state4/errors.hpp"
#include "state4/simplicial/bistellar.hpp"

using namespace state4;

namespace {

Cyclotomic q(long a, long b = 1) { return Cyclotomic(Rational(a, b)); }
Cyclotomic z(int n, long k = 1) { return Cyclotomic::zeta(n, k); }

}  // namespace

TEST(Group, Presets) {
  auto z3 = GroupPresentation::preset("Z3");
  EXPECT_EQ(z3.order(), 3);
  EXPECT_EQ(z3.mul(2, 2), 1);
  EXPECT_EQ(z3.inv(1), 2);
  EXPECT_EQ(z3.prime_exponent(), 3);
  auto v4 = GroupPresentation::preset("Z2xZ2");
  EXPECT_EQ(v4.prime_exponent(), 2);
  auto s3 = GroupPresentation::preset("S3");
  EXPECT_EQ(s3.order(), 6);
  EXPECT_FALSE(s3.is_abelian());
  EXPECT_FALSE(s3.prime_exponent());
  EXPECT_FALSE(GroupPresentation::preset("Z4").prime_exponent());
  EXPECT_THROW(GroupPresentation::preset("Q8"), ValidationError);
  EXPECT_THROW(GroupPresentation({"a", "b"}, {{0, 1}, {1, 1}}), ValidationError);
}

TEST(Cochain, CocycleValidation) {
  auto g = GroupPresentation::preset("Z2");
  EXPECT_TRUE(validate_cocycle(CochainTable::trivial(g, 4)).pass);
  Rng rng(3);
  for (int t = 0; t < 5; ++t) {
    auto nu = random_cochain(g, 3, 2, rng);
    EXPECT_TRUE(validate_cocycle(coboundary(nu)).pass);
  }
  auto bad = CochainTable::trivial(g, 4);
  bad.at(std::vector<int>{1, 0, 1, 1}) = q(-1);
  auto rep = validate_cocycle(bad);
  EXPECT_FALSE(rep.pass);
  ASSERT_FALSE(rep.violations.empty());
  // Every violating 5-tuple contains the perturbed 4-tuple as a face.
  for (const auto& v : rep.violations) EXPECT_EQ(v.size(), 5u);
}

TEST(Tensor, CopairingInvertsPairing) {
  Matrix p{{1 + z(4), q(2)}, {z(4, 3), q(1, 3) - z(4)}};
  Matrix c = invert(p);
  EXPECT_EQ(matmul(p, c), identity_matrix(2));
  EXPECT_EQ(matmul(c, p), identity_matrix(2));
  EXPECT_THROW(invert(Matrix{{q(1), q(2)}, {q(2), q(4)}}), SingularPairing);
}

TEST(Tensor, ContractMatchesMatrixProduct) {
  Tensor a{{0, 1}, {2, 3}, {q(1), q(2), q(3), q(4), q(5), q(6)}};
  Tensor b{{1, 2}, {3, 1}, {q(1), z(4), q(-1)}};
  Tensor c = contract(a, b);
  EXPECT_EQ(c.axes, (std::vector<int>{0, 2}));
  EXPECT_EQ(c.data[0], 1 + 2 * z(4) - 3);
  EXPECT_EQ(c.data[1], 4 + 5 * z(4) - 6);
  Tensor bad{{1}, {2}, {q(1), q(1)}};
  EXPECT_THROW(contract(a, bad), IndexMismatch);
}

TEST(Braided, PresetsSatisfyHexagons) {
  for (const char* name : {"boson", "semion", "fermion", "antisemion", "Z3:2", "Z3:4", "Z4:1", "Z4:3"})
    EXPECT_NO_THROW(validate_braided(BraidedData::preset(name))) << name;
  auto s = BraidedData::preset("semion");
  EXPECT_EQ(s.r(1, 1), z(4));
  EXPECT_EQ(BraidedData::preset("fermion").r(1, 1), q(-1));
  // R(1,1) = i with trivial F breaks the hexagons.
  auto broken = BraidedData::trivial(GroupPresentation::preset("Z2"));
  broken.R[3] = z(4);
  EXPECT_THROW(validate_braided(broken), HexagonViolation);
  auto pent = BraidedData::preset("semion");
  pent.F.at(std::vector<int>{1, 1, 0}) = q(-1);
  ASSERT_FALSE(validate_cocycle(pent.F).pass);
  EXPECT_THROW(validate_braided(pent), PentagonViolation);
}

TEST(Generators, DijkgraafWittenStructure) {
  auto g = GroupPresentation::preset("Z3");
  auto cat = gen_twisted_dw(g, CochainTable::trivial(g, 4));
  EXPECT_EQ(cat.num_objects(), 3);
  EXPECT_EQ(cat.morphisms.size(), 9u);
  EXPECT_EQ(cat.total_dimension(), q(3));
  EXPECT_TRUE(validate_category(cat).pass);
  EXPECT_TRUE(cat.scalar_spaces());
  for (int a = 0; a < 3; ++a) EXPECT_EQ(cat.d(a), q(1));
  auto bad = CochainTable::trivial(g, 4);
  bad.at(std::vector<int>{1, 2, 1, 1}) = z(3);
  EXPECT_THROW(gen_twisted_dw(g, bad), InvalidCocycle);
}

TEST(Generators, PointedStructure) {
  auto cat = gen_pointed_braided(BraidedData::preset("semion"));
  EXPECT_EQ(cat.num_objects(), 1);
  EXPECT_EQ(cat.total_dimension(), q(1, 2));
  EXPECT_EQ(cat.d(0), q(2));
  EXPECT_TRUE(validate_category(cat).pass);
  EXPECT_THROW(gen_pointed_braided(BraidedData::preset("semion"), {q(1), q(2)}), ValidationError);
  auto z3 = gen_pointed_braided(BraidedData::preset("Z3:2"));
  EXPECT_EQ(z3.total_dimension(), q(1, 3));
}

TEST(Generators, YetterStructure) {
  auto z2 = GroupPresentation::preset("Z2");
  auto cat = gen_yetter_2group(z2, z2);
  EXPECT_EQ(cat.total_dimension(), q(1));
  EXPECT_TRUE(validate_category(cat).pass);
  YetterTwist twist;
  twist.action = true;
  EXPECT_THROW(gen_yetter_2group(z2, z2, twist), UnsupportedTwist);
  twist.action = false;
  twist.postnikov = true;
  EXPECT_THROW(gen_yetter_2group(z2, z2, twist), UnsupportedTwist);
}

TEST(Generators, Degenerations) {
  auto trivial = GroupPresentation::preset("1");
  for (const char* gname : {"Z2", "Z3", "S3"}) {
    auto g = GroupPresentation::preset(gname);
    EXPECT_TRUE(same_data_ignoring_names(gen_yetter_2group(g, trivial), gen_twisted_dw(g, CochainTable::trivial(g, 4))))
        << gname;
  }
  for (const char* aname : {"Z2", "Z3"}) {
    auto a = GroupPresentation::preset(aname);
    EXPECT_TRUE(same_data_ignoring_names(gen_yetter_2group(trivial, a), gen_pointed_braided(BraidedData::trivial(a))))
        << aname;
  }
  EXPECT_TRUE(same_data_ignoring_names(trivial_category(), gen_twisted_dw(trivial, CochainTable::trivial(trivial, 4))));
}

TEST(ZMaps, TrivialDijkgraafWittenIsIdentity) {
  auto g = GroupPresentation::preset("Z2");
  auto cat = gen_twisted_dw(g, CochainTable::trivial(g, 4));
  for (const auto& [key, entry] : cat.ten_j) {
    EXPECT_EQ(z_plus(cat, key), identity_matrix(1));
    EXPECT_EQ(z_minus(cat, key), identity_matrix(1));
  }
}

TEST(ZMaps, InadmissibleLabelsGiveZeroMap) {
  auto cat = gen_pointed_braided(BraidedData::preset("semion"));
  // a012 = 1 with every other triangle 0 violates the tetrahedron condition.
  TenJKey m{};
  m[0] = cat.morphism_index("1");
  for (int i = 1; i < 10; ++i) m[i] = cat.morphism_index("0");
  for (const auto& mat : {z_plus(cat, m), z_minus(cat, m)})
    for (const auto& row : mat)
      for (const auto& v : row) EXPECT_TRUE(v.is_zero());
}

TEST(ZMaps, SectionIdentity) {
  auto g2 = GroupPresentation::preset("Z2");
  Rng rng(17);
  std::vector<std::pair<std::string, Fusion2CatData>> cats;
  cats.emplace_back("dw_z2", gen_twisted_dw(g2, coboundary(random_cochain(g2, 3, 4, rng))));
  cats.emplace_back("dw_s3", gen_twisted_dw(GroupPresentation::preset("S3"),
                                            CochainTable::trivial(GroupPresentation::preset("S3"), 4)));
  for (const char* p : {"semion", "fermion", "Z3:2", "Z4:1"})
    cats.emplace_back(p, gen_pointed_braided(BraidedData::preset(p)));
  cats.emplace_back("yetter", gen_yetter_2group(g2, g2));
  for (const auto& [name, cat] : cats) {
    auto rep = check_section(cat);
    EXPECT_TRUE(rep.pass) << name << ": " << rep.witness;
    EXPECT_GT(rep.labelings, 0) << name;
  }
}
