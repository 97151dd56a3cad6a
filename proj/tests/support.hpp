#pragma once

// Shared fixtures and brute-force oracles for the test binaries. The oracles
// deliberately avoid the library's own algorithms: they work on raw
// permutations, full pair scans and floating-point evaluation.

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "gvz/char_table.hpp"
#include "gvz/constructions.hpp"
#include "gvz/group.hpp"

namespace testing {

struct ZooEntry {
  std::string name;
  gvz::GroupPtr group;
};

inline std::vector<ZooEntry> zoo() {
  using namespace gvz;
  std::vector<ZooEntry> out{{"trivial", cyclic(1)}};
  for (int m = 2; m <= 6; ++m) out.push_back({"c" + std::to_string(m), cyclic(m)});
  out.push_back({"e3^2", elementary_abelian(3, 2)});
  for (std::string n : {"s3", "d4", "q8", "d5", "heis3", "heis5"}) out.push_back({n, named(n)});
  out.push_back({"gn(3,2)", gn(3, 2)});
  out.push_back({"heis3xc3", direct_product(heisenberg(3), cyclic(3))});
  out.push_back({"c3wrc3", named("c3wrc3")});
  return out;
}

inline std::vector<ZooEntry> nonabelian_zoo() {
  std::vector<ZooEntry> out;
  for (auto& e : zoo()) {
    if (!e.group->is_abelian()) out.push_back(e);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Permutation oracles (0-based images, left factor applied first)

using Perm = std::vector<int>;

inline Perm compose(const Perm& a, const Perm& b) {
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[a[i]];
  return out;
}

inline Perm from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  Perm p(static_cast<std::size_t>(degree));
  std::iota(p.begin(), p.end(), 0);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) p[c[i] - 1] = c[(i + 1) % c.size()] - 1;
  }
  return p;
}

/// Closure by repeatedly multiplying every known element by every generator until nothing new appears.
inline std::set<Perm> naive_closure(int degree, const std::vector<Perm>& gens) {
  Perm id(static_cast<std::size_t>(degree));
  std::iota(id.begin(), id.end(), 0);
  std::set<Perm> all{id};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Perm> snapshot(all.begin(), all.end());
    for (const auto& x : snapshot) {
      for (const auto& g : gens) grew = all.insert(compose(x, g)).second || grew;
    }
  }
  return all;
}

// ---------------------------------------------------------------------------
// Group oracles that only use multiply/inverse via full scans

inline std::vector<gvz::Element> brute_center(const gvz::GroupPtr& g) {
  std::vector<gvz::Element> out;
  for (int z = 0; z < g->order(); ++z) {
    bool central = true;
    for (int x = 0; x < g->order() && central; ++x) central = g->multiply(z, x) == g->multiply(x, z);
    if (central) out.push_back(z);
  }
  return out;
}

/// Closure of a set under multiplication (finite, so this is the generated subgroup).
inline std::vector<gvz::Element> brute_closure(const gvz::GroupPtr& g, std::set<gvz::Element> s) {
  s.insert(g->identity());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<gvz::Element> snapshot(s.begin(), s.end());
    for (int x : snapshot) {
      for (int y : snapshot) grew = s.insert(g->multiply(x, y)).second || grew;
    }
  }
  return {s.begin(), s.end()};
}

inline gvz::Element raw_commutator(const gvz::GroupPtr& g, int h, int k) {
  return g->multiply(g->multiply(g->inverse(h), g->inverse(k)), g->multiply(h, k));
}

inline std::vector<gvz::Element> brute_commutator(const gvz::GroupPtr& g, const std::vector<gvz::Element>& h,
                                                  const std::vector<gvz::Element>& k) {
  std::set<gvz::Element> s;
  for (int x : h) {
    for (int y : k) s.insert(raw_commutator(g, x, y));
  }
  return brute_closure(g, s);
}

inline std::vector<gvz::Element> all_elements(const gvz::GroupPtr& g) {
  std::vector<gvz::Element> out(static_cast<std::size_t>(g->order()));
  std::iota(out.begin(), out.end(), 0);
  return out;
}

inline std::vector<gvz::Element> brute_derived(const gvz::GroupPtr& g) {
  const auto all = all_elements(g);
  return brute_commutator(g, all, all);
}

/// Conjugacy class of x by conjugating with every element.
inline std::vector<gvz::Element> brute_class(const gvz::GroupPtr& g, int x) {
  std::set<gvz::Element> s;
  for (int y = 0; y < g->order(); ++y) s.insert(g->multiply(g->multiply(g->inverse(y), x), y));
  return {s.begin(), s.end()};
}

inline std::multiset<int> brute_class_sizes(const gvz::GroupPtr& g) {
  std::vector<bool> done(static_cast<std::size_t>(g->order()), false);
  std::multiset<int> sizes;
  for (int x = 0; x < g->order(); ++x) {
    if (done[x]) continue;
    const auto cls = brute_class(g, x);
    for (int y : cls) done[y] = true;
    sizes.insert(static_cast<int>(cls.size()));
  }
  return sizes;
}

/// Lower central series length by brute force (0 for the trivial group); -1 when it stalls above the trivial group.
inline int brute_nilpotency_class(const gvz::GroupPtr& g) {
  auto current = all_elements(g);
  const auto all = current;
  int length = 0;
  while (current.size() > 1) {
    auto next = brute_commutator(g, current, all);
    if (next.size() == current.size()) return -1;
    current = std::move(next);
    ++length;
  }
  return length;
}

// ---------------------------------------------------------------------------
// Numerical character oracles

inline double modulus(const gvz::Cyclotomic& v) { return std::abs(v.approximate()); }

/// Z(chi) evaluated numerically as {g : |chi(g)| = chi(1)}.
inline std::vector<gvz::Element> numeric_centre(const gvz::Character& chi) {
  const double d = std::real(chi.at(0).approximate());
  std::vector<gvz::Element> out;
  for (int g = 0; g < chi.group()->order(); ++g) {
    if (std::fabs(modulus(chi.at(g)) - d) < 1e-9) out.push_back(g);
  }
  return out;
}

inline bool numeric_vanishes_off(const gvz::Character& chi, const std::vector<gvz::Element>& members) {
  const std::set<gvz::Element> in(members.begin(), members.end());
  for (int g = 0; g < chi.group()->order(); ++g) {
    if (!in.contains(g) && modulus(chi.at(g)) > 1e-9) return false;
  }
  return true;
}

inline bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace testing
