#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace state4 {

/// Finite group given by its Cayley table. Element 0 need not be the unit.
class GroupPresentation {
 public:
  /// The trivial group with one element "0".
  GroupPresentation();
  /// Validates closure, associativity, unit and inverses; throws
  /// ValidationError.
  GroupPresentation(std::vector<std::string> names, std::vector<std::vector<int>> mul);

  /// "1" (trivial), "Z<n>", "Z2xZ2", "S3". Throws ValidationError for
  /// unknown names. Cyclic elements are named "0".."n-1".
  static GroupPresentation preset(std::string_view name);

  int order() const { return static_cast<int>(names_.size()); }
  int mul(int a, int b) const { return mul_[a][b]; }
  int unit() const { return unit_; }
  int inv(int a) const { return inv_[a]; }
  const std::string& name(int a) const { return names_[a]; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::vector<int>>& table() const { return mul_; }
  int index(std::string_view name) const;  // -1 if absent

  bool is_abelian() const;
  /// p when the group is elementary abelian of exponent p, 1 for the
  /// trivial group, nullopt otherwise.
  std::optional<int> prime_exponent() const;
  /// Preset name the group was built from, empty for custom tables.
  const std::string& preset_name() const { return preset_; }

  friend bool operator==(const GroupPresentation& a, const GroupPresentation& b) {
    return a.names_ == b.names_ && a.mul_ == b.mul_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<int>> mul_;
  std::vector<int> inv_;
  int unit_ = 0;
  std::string preset_;
};

}  // namespace state4
