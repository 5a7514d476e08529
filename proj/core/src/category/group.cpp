#include "state4/category/group.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <numeric>

#include "state4/errors.hpp"

namespace state4 {

GroupPresentation::GroupPresentation() : names_{"0"}, mul_{{0}}, inv_{0}, unit_(0), preset_("1") {}

GroupPresentation::GroupPresentation(std::vector<std::string> names, std::vector<std::vector<int>> mul)
    : names_(std::move(names)), mul_(std::move(mul)) {
  const int n = order();
  if (n == 0) throw ValidationError("group must have at least one element");
  if (static_cast<int>(mul_.size()) != n) throw ValidationError("multiplication table must be square");
  for (const auto& row : mul_) {
    if (static_cast<int>(row.size()) != n) throw ValidationError("multiplication table must be square");
    for (int v : row)
      if (v < 0 || v >= n) throw ValidationError("multiplication table entry out of range");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]])
          throw ValidationError("multiplication is not associative at (" + names_[a] + "," + names_[b] + "," +
                                names_[c] + ")");
  unit_ = -1;
  for (int e = 0; e < n && unit_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = mul_[e][a] == a && mul_[a][e] == a;
    if (ok) unit_ = e;
  }
  if (unit_ < 0) throw ValidationError("group has no unit");
  inv_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (mul_[a][b] == unit_ && mul_[b][a] == unit_) inv_[a] = b;
  for (int a = 0; a < n; ++a)
    if (inv_[a] < 0) throw ValidationError("element " + names_[a] + " has no inverse");
  std::vector<std::string> sorted = names_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw ValidationError("group element names must be distinct");
}

namespace {

GroupPresentation cyclic(int n) {
  std::vector<std::string> names;
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    names.push_back(std::to_string(a));
    for (int b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
  }
  return GroupPresentation(std::move(names), std::move(mul));
}

GroupPresentation klein() {
  std::vector<std::string> names{"00", "10", "01", "11"};
  std::vector<std::vector<int>> mul(4, std::vector<int>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) mul[a][b] = a ^ b;
  return GroupPresentation(std::move(names), std::move(mul));
}

GroupPresentation symmetric3() {
  // Permutations of {1,2,3} as images of (1,2,3); (στ)(x) = σ(τ(x)).
  const std::vector<std::array<int, 3>> perms{{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  const std::vector<std::string> names{"()", "(12)", "(13)", "(23)", "(123)", "(132)"};
  std::vector<std::vector<int>> mul(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
      mul[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return GroupPresentation(names, std::move(mul));
}

}  // namespace

GroupPresentation GroupPresentation::preset(std::string_view name) {
  GroupPresentation g;
  if (name == "1" || name == "trivial") {
    g = GroupPresentation();
  } else if (name == "Z2xZ2") {
    g = klein();
  } else if (name == "S3") {
    g = symmetric3();
  } else if (name.size() > 1 && name[0] == 'Z') {
    int n = 0;
    auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), n);
    if (ec != std::errc() || ptr != name.data() + name.size() || n < 1 || n > 64)
      throw ValidationError("unknown group preset '" + std::string(name) + "'");
    g = cyclic(n);
  } else {
    throw ValidationError("unknown group preset '" + std::string(name) + "'");
  }
  g.preset_ = std::string(name == "trivial" ? "1" : name);
  return g;
}

int GroupPresentation::index(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

bool GroupPresentation::is_abelian() const {
  for (int a = 0; a < order(); ++a)
    for (int b = 0; b < a; ++b)
      if (mul_[a][b] != mul_[b][a]) return false;
  return true;
}

std::optional<int> GroupPresentation::prime_exponent() const {
  if (order() == 1) return 1;
  if (!is_abelian()) return std::nullopt;
  int n = order(), p = 2;
  while (n % p) ++p;
  for (int a = 0; a < order(); ++a) {
    int x = unit_;
    for (int i = 0; i < p; ++i) x = mul_[x][a];
    if (x != unit_) return std::nullopt;
  }
  return p;
}

}  // namespace state4
