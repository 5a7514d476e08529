#include "state4/category/cochain.hpp"

#include <algorithm>

#include "state4/errors.hpp"
#include "state4/simplicial/bistellar.hpp"

namespace state4 {

namespace {

size_t ipow(size_t b, int e) {
  size_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Decodes a flat index into a tuple.
std::vector<int> decode(size_t idx, int n, int degree) {
  std::vector<int> t(degree);
  for (int i = degree - 1; i >= 0; --i) {
    t[i] = static_cast<int>(idx % n);
    idx /= n;
  }
  return t;
}

}  // namespace

CochainTable CochainTable::trivial(const GroupPresentation& g, int degree) {
  return CochainTable{g, degree, std::vector<Cyclotomic>(ipow(g.order(), degree), Cyclotomic(1))};
}

size_t CochainTable::offset(std::span<const int> args) const {
  if (static_cast<int>(args.size()) != degree) throw IndexOutOfRange("cochain arity mismatch");
  size_t idx = 0;
  for (int a : args) {
    if (a < 0 || a >= group.order()) throw IndexOutOfRange("cochain argument out of range");
    idx = idx * group.order() + a;
  }
  return idx;
}

CochainTable coboundary(const CochainTable& nu) {
  const auto& g = nu.group;
  const int k = nu.degree, n = g.order();
  CochainTable out{g, k + 1, {}};
  const size_t total = ipow(n, k + 1);
  out.values.reserve(total);
  std::vector<int> args(k);
  for (size_t idx = 0; idx < total; ++idx) {
    auto t = decode(idx, n, k + 1);
    std::copy(t.begin() + 1, t.end(), args.begin());
    Cyclotomic num = nu.at(args), den(1);
    for (int i = 1; i <= k; ++i) {
      // Merge positions i-1 and i (1-based g_i g_{i+1}).
      for (int j = 0, s = 0; j < k; ++j, ++s) {
        if (s == i - 1) {
          args[j] = g.mul(t[s], t[s + 1]);
          ++s;
        } else {
          args[j] = t[s];
        }
      }
      (i % 2 ? den : num) *= nu.at(args);
    }
    std::copy(t.begin(), t.begin() + k, args.begin());
    ((k + 1) % 2 ? den : num) *= nu.at(args);
    out.values.push_back(num / den);
  }
  return out;
}

CochainTable operator*(const CochainTable& a, const CochainTable& b) {
  if (!(a.group == b.group) || a.degree != b.degree) throw ValidationError("cochain shapes differ");
  CochainTable out = a;
  for (size_t i = 0; i < out.values.size(); ++i) out.values[i] *= b.values[i];
  return out;
}

CocycleReport validate_cocycle(const CochainTable& table, size_t limit) {
  CocycleReport report;
  if (table.values.size() != ipow(table.group.order(), table.degree)) {
    report.pass = false;
    return report;
  }
  auto d = coboundary(table);
  for (size_t idx = 0; idx < d.values.size(); ++idx)
    if (!d.values[idx].is_one()) {
      report.pass = false;
      if (report.violations.size() < limit) report.violations.push_back(decode(idx, table.group.order(), d.degree));
    }
  return report;
}

CochainTable random_cochain(const GroupPresentation& g, int degree, int order, Rng& rng) {
  CochainTable out = CochainTable::trivial(g, degree);
  for (size_t idx = 0; idx < out.values.size(); ++idx) {
    auto t = decode(idx, g.order(), degree);
    if (std::find(t.begin(), t.end(), g.unit()) != t.end()) continue;
    out.values[idx] = Cyclotomic::zeta(order, static_cast<long>(rng.below(order)));
  }
  return out;
}

}  // namespace state4
