#include "gvz/constructions.hpp"

#include <algorithm>
#include <sstream>

#include "gvz/errors.hpp"

namespace gvz {

Label PcElement::to_label() const {
  Label out = x;
  out.push_back(a);
  out.insert(out.end(), y.begin(), y.end());
  return out;
}

PcElement PcElement::from_label(const Label& label, int n) {
  PcElement e;
  e.x.assign(label.begin(), label.begin() + n);
  e.a = label[n];
  e.y.assign(label.begin() + n + 1, label.end());
  return e;
}

Label GnRepresentation::multiply(const Label& u, const Label& v) const {
  // alpha^a alpha_i^x = alpha_i^x alpha^a beta_i^(-a x), from alpha_i alpha = alpha alpha_i beta_i.
  Label out(u.size());
  const int a = u[n_];
  for (int i = 0; i < n_; ++i) out[i] = (u[i] + v[i]) % p_;
  out[n_] = (a + v[n_]) % p_;
  for (int i = 0; i < n_; ++i) {
    const int k = n_ + 1 + i;
    const int correction = (a * v[i]) % p_;
    out[k] = ((u[k] + v[k] - correction) % p_ + p_) % p_;
  }
  return out;
}

Label GnRepresentation::identity() const { return Label(static_cast<std::size_t>(2 * n_ + 1), 0); }

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

long long checked_power(long long base, int exp, std::size_t cap) {
  long long out = 1;
  for (int i = 0; i < exp; ++i) {
    out *= base;
    if (out > static_cast<long long>(cap)) {
      std::ostringstream msg;
      msg << "group order " << base << "^" << exp << " exceeds the configured cap of " << cap;
      throw ResourceError(msg.str());
    }
  }
  return out;
}

class AbelianRepresentation final : public Representation {
 public:
  explicit AbelianRepresentation(std::vector<int> moduli) : moduli_(std::move(moduli)) {}
  Label multiply(const Label& u, const Label& v) const override {
    Label out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) out[i] = (u[i] + v[i]) % moduli_[i];
    return out;
  }
  Label identity() const override { return Label(moduli_.size(), 0); }

 private:
  std::vector<int> moduli_;
};

class ProductRepresentation final : public Representation {
 public:
  ProductRepresentation(GroupPtr a, GroupPtr b) : a_(std::move(a)), b_(std::move(b)) {}
  Label multiply(const Label& u, const Label& v) const override {
    return {a_->multiply(u[0], v[0]), b_->multiply(u[1], v[1])};
  }
  Label identity() const override { return {0, 0}; }

 private:
  GroupPtr a_;
  GroupPtr b_;
};

GroupPtr permutation_group(int degree, const std::vector<std::vector<std::vector<int>>>& gens,
                           const EnumerationOptions& options) {
  std::vector<Permutation> perms;
  for (const auto& cycles : gens) perms.push_back(permutation_from_cycles(degree, cycles));
  return enumerate_from_permutations(degree, perms, options);
}

}  // namespace

GroupPtr gn(int p, int n, const EnumerationOptions& options) {
  if (p == 2 || !is_prime(p)) throw InputError("G_n needs an odd prime p, got " + std::to_string(p));
  if (n < 1) throw InputError("G_n needs n >= 1");
  const long long expected = checked_power(p, 2 * n + 1, options.max_order);

  auto rep = std::make_shared<GnRepresentation>(p, n);
  std::vector<Label> gens;
  std::vector<std::string> names;
  const auto unit = [&](int position) {
    Label l = rep->identity();
    l[static_cast<std::size_t>(position)] = 1;
    return l;
  };
  gens.push_back(unit(n));
  names.emplace_back("a");
  for (int i = 0; i < n; ++i) {
    gens.push_back(unit(i));
    names.push_back("a" + std::to_string(i + 1));
  }
  for (int i = 0; i < n; ++i) {
    gens.push_back(unit(n + 1 + i));
    names.push_back("b" + std::to_string(i + 1));
  }
  GroupPtr group = Group::enumerate(rep, std::move(gens), std::move(names), options);

  if (group->order() != expected) throw InternalError("G_n enumeration has the wrong order");
  const auto& g = group->generators();
  const Element alpha = g[0];
  for (Element x : g) {
    if (group->element_order(x) != p) throw InternalError("a G_n generator does not have order p");
  }
  for (int i = 0; i < n; ++i) {
    const Element alpha_i = g[1 + i];
    const Element beta_i = g[1 + n + i];
    if (group->commutator(alpha_i, alpha) != beta_i) {
      throw InternalError("relation [alpha_i, alpha] = beta_i fails in the constructed G_n");
    }
    for (Element other : g) {
      if (group->multiply(beta_i, other) != group->multiply(other, beta_i)) {
        throw InternalError("beta_i is not central in the constructed G_n");
      }
    }
    for (int j = 0; j < n; ++j) {
      if (group->commutator(alpha_i, g[1 + j]) != 0) {
        throw InternalError("alpha_i and alpha_j do not commute in the constructed G_n");
      }
    }
  }
  return group;
}

GroupPtr heisenberg(int p, const EnumerationOptions& options) { return gn(p, 1, options); }

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b, const EnumerationOptions& options) {
  checked_power(static_cast<long long>(a->order()) * b->order(), 1, options.max_order);
  std::vector<Label> gens;
  std::vector<std::string> names;
  for (std::size_t k = 0; k < a->generators().size(); ++k) {
    gens.push_back({a->generators()[k], 0});
    names.push_back(a->generator_names()[k]);
  }
  for (std::size_t k = 0; k < b->generators().size(); ++k) {
    gens.push_back({0, b->generators()[k]});
    std::string name = b->generator_names()[k];
    while (std::find(names.begin(), names.end(), name) != names.end()) name += "'";
    names.push_back(std::move(name));
  }
  return Group::enumerate(std::make_shared<ProductRepresentation>(a, b), std::move(gens),
                          std::move(names), options);
}

GroupPtr cyclic(int m, const EnumerationOptions& options) {
  if (m < 1) throw InputError("cyclic group order must be positive");
  checked_power(m, 1, options.max_order);
  std::vector<Label> gens;
  std::vector<std::string> names;
  if (m > 1) {
    gens.push_back({1});
    names.emplace_back("c");
  }
  return Group::enumerate(std::make_shared<AbelianRepresentation>(std::vector<int>{m}),
                          std::move(gens), std::move(names), options);
}

GroupPtr elementary_abelian(int p, int k, const EnumerationOptions& options) {
  if (!is_prime(p)) throw InputError("elementary abelian group needs a prime");
  if (k < 0) throw InputError("elementary abelian rank must be nonnegative");
  checked_power(p, k, options.max_order);
  if (k == 0) return cyclic(1, options);
  std::vector<Label> gens;
  std::vector<std::string> names;
  for (int i = 0; i < k; ++i) {
    Label l(static_cast<std::size_t>(k), 0);
    l[i] = 1;
    gens.push_back(std::move(l));
    names.push_back("e" + std::to_string(i + 1));
  }
  return Group::enumerate(std::make_shared<AbelianRepresentation>(std::vector<int>(k, p)),
                          std::move(gens), std::move(names), options);
}

const std::vector<std::string>& named_catalog() {
  static const std::vector<std::string> names{"s3",     "d4",    "q8",    "d5",
                                              "c3wrc3", "heis3", "heis5", "phi4_15_p3"};
  return names;
}

GroupPtr named(const std::string& name, const EnumerationOptions& options) {
  // Symmetric group of degree 3.
  if (name == "s3") return permutation_group(3, {{{1, 2, 3}}, {{1, 2}}}, options);
  // Dihedral group of order 8, symmetries of a square.
  if (name == "d4") return permutation_group(4, {{{1, 2, 3, 4}}, {{1, 3}}}, options);
  // Quaternion group in its regular action on 8 points.
  if (name == "q8") {
    return permutation_group(8, {{{1, 2, 4, 7}, {3, 6, 8, 5}}, {{1, 3, 4, 8}, {2, 5, 7, 6}}},
                             options);
  }
  // Dihedral group of order 10, symmetries of a pentagon.
  if (name == "d5") return permutation_group(5, {{{1, 2, 3, 4, 5}}, {{2, 5}, {3, 4}}}, options);
  // Wreath product C3 wr C3: three 3-cycles permuted cyclically, order 81.
  if (name == "c3wrc3") {
    return permutation_group(
        9, {{{1, 2, 3}}, {{4, 5, 6}}, {{7, 8, 9}}, {{1, 4, 7}, {2, 5, 8}, {3, 6, 9}}}, options);
  }
  if (name == "heis3") return heisenberg(3, options);
  if (name == "heis5") return heisenberg(5, options);
  if (name == "phi4_15_p3") return gn(3, 2, options);

  std::ostringstream msg;
  msg << "unknown group name '" << name << "'; catalog:";
  for (const auto& n : named_catalog()) msg << " " << n;
  throw InputError(msg.str());
}

namespace {

void require_gn_shape(const GroupPtr& group, int n) {
  const auto& names = group->generator_names();
  bool ok = static_cast<int>(names.size()) == 2 * n + 1 && names[0] == "a";
  for (int i = 0; ok && i < n; ++i) {
    ok = names[1 + i] == "a" + std::to_string(i + 1) && names[1 + n + i] == "b" + std::to_string(i + 1);
  }
  if (!ok) throw InputError("group was not built by gn(p, " + std::to_string(n) + ")");
}

}  // namespace

Subgroup gn_beta_subgroup(const GroupPtr& group, int n) {
  require_gn_shape(group, n);
  const auto& g = group->generators();
  std::vector<Element> betas(g.begin() + 1 + n, g.end());
  return generated_by(group, betas);
}

std::vector<Subgroup> gn_listed_centres(const GroupPtr& group, int n) {
  require_gn_shape(group, n);
  const auto& g = group->generators();
  std::vector<Subgroup> out;
  // Each (n-1)-subset of the alpha_i is the complement of one omitted alpha_j.
  for (int omit = 0; omit < n; ++omit) {
    std::vector<Element> gens;
    for (int i = 0; i < n; ++i) {
      if (i != omit) gens.push_back(g[1 + i]);
    }
    for (int i = 0; i < n; ++i) gens.push_back(g[1 + n + i]);
    out.push_back(generated_by(group, gens));
  }
  return out;
}

}  // namespace gvz
