#pragma once

#include <string>

#include "state4/category/fusion2cat.hpp"

namespace state4 {

/// Reads a category file: either a generator reference
///   {"generator": "dw" | "pointed" | "yetter" | "trivial", ...}
/// or explicit tables (objects, components, dim_obj, dim_end, fusion,
/// dim_mor, tetra, ten_j). Generator references are kept in
/// Fusion2CatData::generator. Throws ParseError with a JSON pointer,
/// ValidationError listing violated invariants, and the generator errors.
/// With `check_cocycles` false a dw generator accepts any ω.
Fusion2CatData parse_category(const std::string& text, bool check_cocycles = true);
Fusion2CatData load_category(const std::string& path, bool check_cocycles = true);

/// Writes the generator reference when the data has one and `tables` is
/// false, and the explicit tables otherwise.
std::string serialize_category(const Fusion2CatData& cat, bool tables = false);
void save_category(const Fusion2CatData& cat, const std::string& path, bool tables = false);

}  // namespace state4
