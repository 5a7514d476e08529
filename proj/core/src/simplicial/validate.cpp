#include "state4/simplicial/validate.hpp"

#include <map>

namespace state4 {
namespace {

bool connected(const SimplicialComplex& c) {
  int n = 0;
  c.vertex_components(&n);
  return n == 1;
}

// Every codimension-one face lies in exactly two facets.
bool closed_pseudomanifold(const SimplicialComplex& c, int dim) {
  if (c.dimension() != dim || !c.is_pure()) return false;
  std::map<Simplex, int> incidence;
  for (const auto& f : c.facets())
    for (size_t i = 0; i < f.size(); ++i) {
      Simplex face = f;
      face.erase(face.begin() + i);
      ++incidence[face];
    }
  for (const auto& [face, n] : incidence)
    if (n != 2) return false;
  return true;
}

}  // namespace

bool is_cycle(const SimplicialComplex& c) {
  return c.num_vertices() >= 3 && closed_pseudomanifold(c, 1) && connected(c);
}

bool is_2sphere(const SimplicialComplex& c) {
  return closed_pseudomanifold(c, 2) && connected(c) && c.euler_characteristic() == 2;
}

ManifoldReport validate_singular_4manifold(const SimplicialComplex& c) {
  ManifoldReport r;
  auto fail = [&](std::string check, const Simplex& s, std::string detail) {
    r.pass = false;
    r.failures.push_back({std::move(check), c.format(s), std::move(detail)});
  };
  if (c.num_vertices() == 0) return r;
  for (const auto& f : c.facets())
    if (f.size() != 5) fail("pure", f, "maximal simplex of dimension " + std::to_string(f.size() - 1));
  if (!r.pass) return r;

  std::map<Simplex, int> incidence;
  for (const auto& f : c.facets())
    for (size_t i = 0; i < 5; ++i) {
      Simplex face = f;
      face.erase(face.begin() + i);
      ++incidence[face];
    }
  for (const auto& [face, n] : incidence)
    if (n != 2) fail("closed", face, "tetrahedron lies in " + std::to_string(n) + " facet(s)");

  for (const auto& t : c.simplices(2))
    if (!is_cycle(link(c, t))) fail("triangle-link", t, "link is not a single cycle");

  for (const auto& e : c.simplices(1)) {
    auto l = link(c, e);
    if (!is_2sphere(l))
      fail("edge-link", e, "link is not a 2-sphere (chi=" + std::to_string(l.euler_characteristic()) + ")");
  }

  for (const auto& v : c.simplices(0)) {
    auto l = link(c, v);
    if (!closed_pseudomanifold(l, 3)) {
      fail("vertex-link", v, "link is not a closed 3-pseudomanifold");
      continue;
    }
    for (const auto& w : l.simplices(0))
      if (!is_2sphere(link(l, w))) {
        fail("vertex-link", v, "link is not a 3-manifold at " + l.format(w));
        break;
      }
  }
  return r;
}

}  // namespace state4
