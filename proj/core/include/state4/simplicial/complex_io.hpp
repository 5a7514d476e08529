#pragma once

#include <optional>
#include <string>
#include <vector>

#include "state4/simplicial/bistellar.hpp"

namespace state4 {

/// Triangulation file contents:
/// {"vertices": [...], "facets": [[...5 names...], ...], "order": [...],
///  "signs": [...]} where "order" and "signs" (one per listed facet) are optional.
struct ComplexFile {
  SimplicialComplex complex;  // vertex order as listed under "vertices"
  std::optional<std::vector<std::string>> order;
  std::optional<std::vector<int>> signs;  // aligned with complex.facets()
};

/// Throws ParseError (with a JSON location) or MalformedFacet.
ComplexFile parse_complex(const std::string& json_text);
ComplexFile read_complex_file(const std::string& path);

/// Orders and orients a parsed file, keeping stored signs when present.
OrderedOrientedComplex to_oriented(const ComplexFile& f);
OrderedOrientedComplex load_oriented_complex(const std::string& path);

/// Canonical serialization: vertices in order, facets sorted, signs
/// included. `moves` adds a provenance log.
std::string serialize_complex(const OrderedOrientedComplex& k, const std::vector<MoveRecord>* moves = nullptr,
                              std::optional<std::uint64_t> seed = std::nullopt);
std::string serialize_complex(const SimplicialComplex& c);

}  // namespace state4
