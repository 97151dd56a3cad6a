#pragma once

#include <string>
#include <vector>

#include "gvz/group.hpp"

namespace gvz {

/// Element (prod alpha_i^x_i) * alpha^a * (prod beta_i^y_i) of G_n, all entries mod p.
struct PcElement {
  std::vector<int> x;
  int a = 0;
  std::vector<int> y;

  Label to_label() const;
  static PcElement from_label(const Label& label, int n);
};

/// Collected multiplication for G_n = <alpha, alpha_i, beta_i | [alpha_i, alpha] = beta_i,
/// alpha^p = alpha_i^p = beta_i^p = 1>, with beta_i central and the alpha_i commuting.
class GnRepresentation final : public Representation {
 public:
  GnRepresentation(int p, int n) : p_(p), n_(n) {}
  Label multiply(const Label& u, const Label& v) const override;
  Label identity() const override;
  int prime() const { return p_; }
  int rank() const { return n_; }

 private:
  int p_;
  int n_;
};

/// Group of order p^(2n+1). Generators in order alpha, alpha_1..alpha_n, beta_1..beta_n,
/// named "a", "a1".."an", "b1".."bn". The defining relations are asserted on construction.
GroupPtr gn(int p, int n, const EnumerationOptions& options = {});
GroupPtr heisenberg(int p, const EnumerationOptions& options = {});

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b, const EnumerationOptions& options = {});
GroupPtr cyclic(int m, const EnumerationOptions& options = {});
GroupPtr elementary_abelian(int p, int k, const EnumerationOptions& options = {});

const std::vector<std::string>& named_catalog();
GroupPtr named(const std::string& name, const EnumerationOptions& options = {});

/// Subgroups <alpha_S, beta_1..beta_n> for every (n-1)-subset S of {alpha_1..alpha_n}.
/// The group must come from gn(p, n).
std::vector<Subgroup> gn_listed_centres(const GroupPtr& group, int n);
/// <beta_1, ..., beta_n>
Subgroup gn_beta_subgroup(const GroupPtr& group, int n);

}  // namespace gvz
