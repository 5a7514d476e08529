#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "state4/category/cochain.hpp"
#include "state4/category/fusion2cat.hpp"

namespace state4 {

/// Abelian 3-cocycle (F, R) on an abelian group A: the braided data of a
/// pointed braided fusion category.
struct BraidedData {
  CochainTable F;               // degree 3 on A
  std::vector<Cyclotomic> R;    // R(x, y) at x * |A| + y

  const GroupPresentation& group() const { return F.group; }
  const Cyclotomic& r(int x, int y) const { return R[x * F.group.order() + y]; }

  static BraidedData trivial(const GroupPresentation& a);
  /// Z_n with R(x,y) = ζ_{2n}^{pxy} and F(x,y,z) = (-1)^{p x c(y,z)}, where
  /// c(y,z) = 1 if y + z ≥ n. Its quadratic form is q(x) = ζ_{2n}^{px²}.
  static BraidedData quadratic(int n, int p);
  /// "boson", "semion", "fermion", "antisemion" (Z2 with p = 0..3), or
  /// "Z<n>:<p>" for quadratic(n, p). Throws ValidationError.
  static BraidedData preset(std::string_view name);
};

/// Pentagon F(x,y,z)F(w,x+y,z)F(w,x,y) = F(w+x,y,z)F(w,x,y+z) and the
/// hexagons
///   F(x,y,z) R(x,y+z) F(y,z,x) = R(x,y) F(y,x,z) R(x,z),
///   F(x,y,z)⁻¹ R(x+y,z) F(z,x,y)⁻¹ = R(y,z) F(x,z,y)⁻¹ R(x,z).
/// Throws PentagonViolation or HexagonViolation naming the first failure.
void validate_braided(const BraidedData& data);

/// Scalar 10j of the pointed delooping on a labeled 4-simplex (A-labels in
/// TenJKey triangle order, closed under the tetrahedron condition), ε = +1:
///   R(a012,a234) F(a012,a023,a034) F(a012,a234,a024)⁻¹ F(a123,a013,a034)⁻¹
///   F(a123,a134,a014) F(a234,a012,a024) F(a234,a124,a014)⁻¹.
/// ε = -1 gives the inverse.
Cyclotomic pointed_ten_j(const BraidedData& data, const std::array<int, 10>& a);

/// Endotrivial category 2Vect^ω(G). Throws InvalidCocycle unless
/// `check_cocycle` is false, which builds the tables from any ω so that
/// broken data can be inspected by the Pachner checks.
Fusion2CatData gen_twisted_dw(const GroupPresentation& g, const CochainTable& omega, bool check_cocycle = true);

/// Delooping of the pointed braided category (A, F, R) with pivotal
/// dimensions `dims` (default all 1, each ±1). Throws PentagonViolation,
/// HexagonViolation, ValidationError.
Fusion2CatData gen_pointed_braided(const BraidedData& data, std::vector<Cyclotomic> dims = {});

/// Twist of a split 2-group category: a 4-cocycle on G times a braided
/// abelian 3-cocycle on A. Nontrivial action or Postnikov class is not
/// supported.
struct YetterTwist {
  std::optional<CochainTable> omega;
  std::optional<BraidedData> braiding;
  bool action = false;
  bool postnikov = false;
};

/// 2Vect^ω(G, A) for the split 2-group with trivial action. Throws
/// UnsupportedTwist, InvalidCocycle, PentagonViolation, HexagonViolation.
Fusion2CatData gen_yetter_2group(const GroupPresentation& g, const GroupPresentation& a, const YetterTwist& twist = {});

/// The trivial category: one object, one morphism, every value 1.
Fusion2CatData trivial_category();

}  // namespace state4
