#include "state4/category/generators.hpp"

#include <charconv>
#include <string>

#include "state4/errors.hpp"

namespace state4 {

namespace {

std::string tuple_text(const GroupPresentation& g, std::initializer_list<int> xs) {
  std::string s = "(";
  bool first = true;
  for (int x : xs) {
    if (!first) s += ",";
    s += g.name(x);
    first = false;
  }
  return s + ")";
}

// Admissible A-labels of a 4-simplex from the six labels on triangles
// through vertex 0: a_ijk = a_0jk - a_0ik + a_0ij.
std::array<int, 10> close_labels(const GroupPresentation& a, int a012, int a013, int a014, int a023, int a024,
                                 int a034) {
  auto sub = [&](int x, int y) { return a.mul(x, a.inv(y)); };
  auto tri = [&](int ij, int ik, int jk) { return a.mul(sub(jk, ik), ij); };
  return {a012, a013, a014, a023, a024, a034, tri(a012, a013, a023), tri(a012, a014, a024), tri(a013, a014, a034),
          tri(a023, a024, a034)};
}

}  // namespace

BraidedData BraidedData::trivial(const GroupPresentation& a) {
  return BraidedData{CochainTable::trivial(a, 3),
                     std::vector<Cyclotomic>(static_cast<size_t>(a.order()) * a.order(), Cyclotomic(1))};
}

BraidedData BraidedData::quadratic(int n, int p) {
  auto g = GroupPresentation::preset("Z" + std::to_string(n));
  BraidedData d = trivial(g);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      d.R[x * n + y] = Cyclotomic::zeta(2 * n, static_cast<long>(p) * x * y);
      for (int z = 0; z < n; ++z)
        if (y + z >= n && (p * x) % 2) d.F.at(std::vector<int>{x, y, z}) = Cyclotomic(-1);
    }
  return d;
}

BraidedData BraidedData::preset(std::string_view name) {
  if (name == "boson") return quadratic(2, 0);
  if (name == "semion") return quadratic(2, 1);
  if (name == "fermion") return quadratic(2, 2);
  if (name == "antisemion") return quadratic(2, 3);
  auto colon = name.find(':');
  if (name.size() > 1 && name[0] == 'Z' && colon != std::string_view::npos) {
    int n = 0, p = 0;
    auto r1 = std::from_chars(name.data() + 1, name.data() + colon, n);
    auto r2 = std::from_chars(name.data() + colon + 1, name.data() + name.size(), p);
    if (r1.ec == std::errc() && r2.ec == std::errc() && r1.ptr == name.data() + colon &&
        r2.ptr == name.data() + name.size() && n >= 1 && n <= 64 && p >= 0)
      return quadratic(n, p);
  }
  throw ValidationError("unknown braided preset '" + std::string(name) + "'");
}

void validate_braided(const BraidedData& data) {
  const auto& a = data.group();
  const int n = a.order();
  if (!a.is_abelian()) throw ValidationError("braided data needs an abelian group");
  if (data.F.degree != 3 || static_cast<int>(data.R.size()) != n * n)
    throw ValidationError("F must be a degree-3 table and R an |A|×|A| table");
  for (const auto& v : data.F.values)
    if (v.is_zero()) throw PentagonViolation("F has a zero entry");
  for (const auto& v : data.R)
    if (v.is_zero()) throw HexagonViolation("R has a zero entry");
  auto pent = validate_cocycle(data.F, 1);
  if (!pent.pass) {
    const auto& t = pent.violations.front();
    throw PentagonViolation("pentagon fails at " + tuple_text(a, {t[0], t[1], t[2], t[3]}));
  }
  const auto& F = data.F;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        int yz = a.mul(y, z), xy = a.mul(x, y);
        if (!(F({x, y, z}) * data.r(x, yz) * F({y, z, x}) == data.r(x, y) * F({y, x, z}) * data.r(x, z)))
          throw HexagonViolation("first hexagon fails at " + tuple_text(a, {x, y, z}));
        if (!(data.r(xy, z) * F({x, z, y}) == F({x, y, z}) * F({z, x, y}) * data.r(y, z) * data.r(x, z)))
          throw HexagonViolation("second hexagon fails at " + tuple_text(a, {x, y, z}));
      }
}

Cyclotomic pointed_ten_j(const BraidedData& d, const std::array<int, 10>& a) {
  enum { t012, t013, t014, t023, t024, t034, t123, t124, t134, t234 };
  const auto& F = d.F;
  Cyclotomic num = d.r(a[t012], a[t234]) * F({a[t012], a[t023], a[t034]}) * F({a[t123], a[t134], a[t014]}) *
                   F({a[t234], a[t012], a[t024]});
  Cyclotomic den = F({a[t012], a[t234], a[t024]}) * F({a[t123], a[t013], a[t034]}) * F({a[t234], a[t124], a[t014]});
  return num / den;
}

Fusion2CatData gen_twisted_dw(const GroupPresentation& g, const CochainTable& omega, bool check_cocycle) {
  if (!(omega.group == g) || omega.degree != 4) throw InvalidCocycle("ω must be a degree-4 table on G");
  auto rep = check_cocycle ? validate_cocycle(omega, 1) : CocycleReport{};
  if (!rep.pass) {
    const auto& t = rep.violations.front();
    throw InvalidCocycle("dω ≠ 1 at " + tuple_text(g, {t[0], t[1], t[2], t[3], t[4]}));
  }
  const int n = g.order();
  Fusion2CatData cat;
  cat.objects = g.names();
  for (int x = 0; x < n; ++x) cat.components.push_back({x});
  cat.dim_obj.assign(n, Cyclotomic(1));
  cat.dim_end.assign(n, Cyclotomic(1));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) cat.morphisms.push_back({g.name(x) + "," + g.name(y), x, y, g.mul(x, y), Cyclotomic(1)});
  auto m = [n](int x, int y) { return x * n + y; };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        cat.tetra[{m(x, y), m(x, g.mul(y, z)), m(g.mul(x, y), z), m(y, z)}] = TetraBlock{1, {{Cyclotomic(1)}}, {}};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int e = 0; e < n; ++e) {
          // Vertex holonomies from vertex 0: h0 = 1, h1 = a, h2 = ab, ...
          int h[5] = {g.unit(), a, g.mul(a, b), g.mul(g.mul(a, b), c), g.mul(g.mul(g.mul(a, b), c), e)};
          auto edge = [&](int i, int j) { return g.mul(g.inv(h[i]), h[j]); };
          TenJKey key{};
          int idx = 0;
          for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j)
              for (int k = j + 1; k < 5; ++k) key[idx++] = m(edge(i, j), edge(j, k));
          const Cyclotomic& w = omega({a, b, c, e});
          cat.ten_j[key] = TenJEntry{{w}, {w.inverse()}};
        }
  cat.unit = g.unit();
  std::vector<int> grades(n);
  for (int x = 0; x < n; ++x) grades[x] = x;
  cat.labels = GroupLabels{g, GroupPresentation(), grades, std::vector<int>(cat.morphisms.size(), 0)};
  cat.canonical_bases = true;
  cat.build();
  return cat;
}

Fusion2CatData gen_pointed_braided(const BraidedData& data, std::vector<Cyclotomic> dims) {
  validate_braided(data);
  const auto& a = data.group();
  const int n = a.order();
  if (dims.empty()) dims.assign(n, Cyclotomic(1));
  if (static_cast<int>(dims.size()) != n) throw ValidationError("dims needs one entry per element of A");
  for (const auto& x : dims)
    if (!(x == Cyclotomic(1)) && !(x == Cyclotomic(-1))) throw ValidationError("pivotal dimensions must be ±1");
  Fusion2CatData cat;
  cat.objects = {"*"};
  cat.components = {{0}};
  cat.dim_obj = {Cyclotomic(1)};
  Cyclotomic end;
  for (const auto& x : dims) end += x * x;
  cat.dim_end = {end};
  for (int x = 0; x < n; ++x) cat.morphisms.push_back({a.name(x), 0, 0, 0, dims[x]});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        // x = a012, y = a013, z = a023; a123 = x + z - y.
        int w = a.mul(a.mul(x, z), a.inv(y));
        cat.tetra[{x, y, z, w}] = TetraBlock{1, {{dims[x] * dims[z]}}, {}};
      }
  std::array<int, 6> f{};
  long total = 1;
  for (int i = 0; i < 6; ++i) total *= n;
  for (long idx = 0; idx < total; ++idx) {
    long r = idx;
    for (int i = 5; i >= 0; --i) {
      f[i] = static_cast<int>(r % n);
      r /= n;
    }
    auto key = close_labels(a, f[0], f[1], f[2], f[3], f[4], f[5]);
    Cyclotomic w = pointed_ten_j(data, key);
    cat.ten_j[key] = TenJEntry{{w}, {w.inverse()}};
  }
  cat.unit = 0;
  std::vector<int> labels(n);
  for (int x = 0; x < n; ++x) labels[x] = x;
  cat.labels = GroupLabels{GroupPresentation(), a, {0}, labels};
  cat.canonical_bases = true;
  cat.build();
  return cat;
}

Fusion2CatData gen_yetter_2group(const GroupPresentation& g, const GroupPresentation& a, const YetterTwist& twist) {
  if (twist.action) throw UnsupportedTwist("nontrivial action of G on A is not supported");
  if (twist.postnikov) throw UnsupportedTwist("nontrivial Postnikov class is not supported");
  if (!a.is_abelian()) throw ValidationError("A must be abelian");
  CochainTable omega = twist.omega ? *twist.omega : CochainTable::trivial(g, 4);
  if (!(omega.group == g) || omega.degree != 4) throw InvalidCocycle("ω must be a degree-4 table on G");
  auto rep = validate_cocycle(omega, 1);
  if (!rep.pass) {
    const auto& t = rep.violations.front();
    throw InvalidCocycle("dω ≠ 1 at " + tuple_text(g, {t[0], t[1], t[2], t[3], t[4]}));
  }
  if (twist.braiding) {
    if (!(twist.braiding->group() == a)) throw ValidationError("braided data must live on A");
    validate_braided(*twist.braiding);
  }
  const int n = g.order(), na = a.order();
  Fusion2CatData cat;
  cat.objects = g.names();
  for (int x = 0; x < n; ++x) cat.components.push_back({x});
  cat.dim_obj.assign(n, Cyclotomic(1));
  cat.dim_end.assign(n, Cyclotomic(na));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int s = 0; s < na; ++s)
        cat.morphisms.push_back({g.name(x) + "," + g.name(y) + ":" + a.name(s), x, y, g.mul(x, y), Cyclotomic(1)});
  auto m = [n, na](int x, int y, int s) { return (x * n + y) * na + s; };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int s012 = 0; s012 < na; ++s012)
          for (int s013 = 0; s013 < na; ++s013)
            for (int s023 = 0; s023 < na; ++s023) {
              int s123 = a.mul(a.mul(s012, s023), a.inv(s013));
              cat.tetra[{m(x, y, s012), m(x, g.mul(y, z), s013), m(g.mul(x, y), z, s023), m(y, z, s123)}] =
                  TetraBlock{1, {{Cyclotomic(1)}}, {}};
            }
  long total = 1;
  for (int i = 0; i < 6; ++i) total *= na;
  std::vector<std::array<int, 10>> a_labels;
  std::vector<Cyclotomic> a_values;
  for (long idx = 0; idx < total; ++idx) {
    std::array<int, 6> f{};
    long r = idx;
    for (int i = 5; i >= 0; --i) {
      f[i] = static_cast<int>(r % na);
      r /= na;
    }
    a_labels.push_back(close_labels(a, f[0], f[1], f[2], f[3], f[4], f[5]));
    a_values.push_back(twist.braiding ? pointed_ten_j(*twist.braiding, a_labels.back()) : Cyclotomic(1));
  }
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          int h[5] = {g.unit(), p, g.mul(p, q), g.mul(g.mul(p, q), r), g.mul(g.mul(g.mul(p, q), r), s)};
          auto edge = [&](int i, int j) { return g.mul(g.inv(h[i]), h[j]); };
          const Cyclotomic& w = omega({p, q, r, s});
          for (size_t ai = 0; ai < a_labels.size(); ++ai) {
            TenJKey key{};
            int idx = 0;
            for (int i = 0; i < 5; ++i)
              for (int j = i + 1; j < 5; ++j)
                for (int k = j + 1; k < 5; ++k, ++idx) key[idx] = m(edge(i, j), edge(j, k), a_labels[ai][idx]);
            Cyclotomic v = w * a_values[ai];
            cat.ten_j[key] = TenJEntry{{v}, {v.inverse()}};
          }
        }
  cat.unit = g.unit();
  std::vector<int> grades(n), labels;
  for (int x = 0; x < n; ++x) grades[x] = x;
  for (size_t i = 0; i < cat.morphisms.size(); ++i) labels.push_back(static_cast<int>(i % na));
  cat.labels = GroupLabels{g, a, grades, labels};
  cat.canonical_bases = true;
  cat.build();
  return cat;
}

Fusion2CatData trivial_category() {
  Fusion2CatData cat = gen_twisted_dw(GroupPresentation(), CochainTable::trivial(GroupPresentation(), 4));
  return cat;
}

}  // namespace state4
