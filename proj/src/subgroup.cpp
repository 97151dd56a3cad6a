#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "gvz/errors.hpp"
#include "gvz/group.hpp"

namespace gvz {

namespace detail {
Subgroup trusted_subgroup(GroupPtr parent, std::vector<Element> members) {
  return Subgroup(std::move(parent), std::move(members), Subgroup::Trusted{});
}
}  // namespace detail

namespace {

std::vector<Element> members_of(const std::vector<bool>& flags) {
  std::vector<Element> out;
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (flags[i]) out.push_back(static_cast<Element>(i));
  }
  return out;
}

}  // namespace

Subgroup::Subgroup(GroupPtr parent, std::vector<Element> members, Trusted)
    : parent_(std::move(parent)), members_(std::move(members)) {
  membership_.assign(static_cast<std::size_t>(parent_->order()), false);
  for (Element x : members_) membership_[x] = true;
}

Subgroup::Subgroup(GroupPtr parent, std::vector<Element> members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  if (!parent_) throw InputError("subgroup needs a parent group");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  membership_.assign(static_cast<std::size_t>(parent_->order()), false);
  for (Element x : members_) {
    if (x < 0 || x >= parent_->order()) throw InputError("subgroup member outside the parent group");
    membership_[x] = true;
  }
  if (members_.empty() || members_.front() != 0) throw InputError("subgroup must contain the identity");
  for (Element a : members_) {
    if (!membership_[parent_->inverse(a)]) throw InputError("subset is not closed under inverses");
    for (Element b : members_) {
      if (!membership_[parent_->multiply(a, b)]) {
        throw InputError("subset is not closed under multiplication");
      }
    }
  }
}

Subgroup Subgroup::trivial(GroupPtr parent) {
  return Subgroup(std::move(parent), {0}, Trusted{});
}

Subgroup Subgroup::whole(GroupPtr parent) {
  std::vector<Element> all(static_cast<std::size_t>(parent->order()));
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(std::move(parent), std::move(all), Trusted{});
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  if (other.parent_ != parent_) return false;
  return std::all_of(members_.begin(), members_.end(), [&](Element x) { return other.contains(x); });
}

Subgroup generated_by(const GroupPtr& group, std::span<const Element> elements) {
  std::vector<bool> in(static_cast<std::size_t>(group->order()), false);
  std::vector<Element> members{0};
  in[0] = true;
  std::vector<Element> gens;
  for (Element s : elements) {
    if (s < 0 || s >= group->order()) throw InputError("element outside the group");
    if (in[s]) continue;
    gens.push_back(s);
    // Re-close under right multiplication by every generator collected so far.
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (Element g : gens) {
        const Element y = group->multiply(members[head], g);
        if (!in[y]) {
          in[y] = true;
          members.push_back(y);
        }
      }
    }
  }
  return detail::trusted_subgroup(group, members_of(in));
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  if (a.parent() != b.parent()) throw InputError("intersection of subgroups of different groups");
  std::vector<Element> common;
  std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(),
                        b.members().end(), std::back_inserter(common));
  return detail::trusted_subgroup(a.parent(), std::move(common));
}

std::vector<Element> coset(const GroupPtr& group, Element x, const Subgroup& n) {
  std::vector<Element> out;
  out.reserve(n.members().size());
  for (Element m : n.members()) out.push_back(group->multiply(x, m));
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::pair<Element, Element>> normality_witness(const GroupPtr& group,
                                                             const Subgroup& h) {
  if (h.parent() != group) throw InputError("subgroup belongs to a different group");
  for (Element g : group->generators()) {
    for (Element x : h.members()) {
      if (!h.contains(group->conjugate(x, g))) return std::make_pair(g, x);
    }
  }
  return std::nullopt;
}

bool is_normal(const GroupPtr& group, const Subgroup& h) {
  return !normality_witness(group, h).has_value();
}

Subgroup center(const GroupPtr& group) {
  std::vector<Element> out;
  for (Element z = 0; z < group->order(); ++z) {
    const bool central = std::all_of(group->generators().begin(), group->generators().end(),
                                     [&](Element g) {
                                       return group->multiply(z, g) == group->multiply(g, z);
                                     });
    if (central) out.push_back(z);
  }
  return detail::trusted_subgroup(group, std::move(out));
}

Subgroup centralizer(const GroupPtr& group, Element x) {
  std::vector<Element> out;
  for (Element g = 0; g < group->order(); ++g) {
    if (group->multiply(g, x) == group->multiply(x, g)) out.push_back(g);
  }
  return detail::trusted_subgroup(group, std::move(out));
}

Subgroup commutator_subgroup(const Subgroup& h, const Subgroup& k) {
  if (h.parent() != k.parent()) throw InputError("commutator of subgroups of different groups");
  const GroupPtr& group = h.parent();
  std::vector<bool> seen(static_cast<std::size_t>(group->order()), false);
  for (Element a : h.members()) {
    for (Element b : k.members()) seen[group->commutator(a, b)] = true;
  }
  const std::vector<Element> commutators = members_of(seen);
  return generated_by(group, commutators);
}

Subgroup derived_subgroup(const GroupPtr& group) {
  const Subgroup all = Subgroup::whole(group);
  return commutator_subgroup(all, all);
}

std::vector<Subgroup> lower_central_series(const GroupPtr& group) {
  const Subgroup all = Subgroup::whole(group);
  std::vector<Subgroup> series{all};
  while (!series.back().is_trivial()) {
    Subgroup next = commutator_subgroup(series.back(), all);
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::optional<int> nilpotency_class(const GroupPtr& group) {
  const auto series = lower_central_series(group);
  if (!series.back().is_trivial()) return std::nullopt;
  return static_cast<int>(series.size()) - 1;
}

ConjugacyClasses conjugacy_classes(const GroupPtr& group) {
  ConjugacyClasses out;
  out.group = group;
  out.class_of.assign(static_cast<std::size_t>(group->order()), -1);
  for (Element x = 0; x < group->order(); ++x) {
    if (out.class_of[x] >= 0) continue;
    const int id = out.count();
    std::vector<Element> orbit{x};
    out.class_of[x] = id;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (Element g : group->generators()) {
        const Element y = group->conjugate(orbit[head], g);
        if (out.class_of[y] < 0) {
          out.class_of[y] = id;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.representatives.push_back(x);
    out.members.push_back(std::move(orbit));
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

class QuotientRepresentation final : public Representation {
 public:
  QuotientRepresentation(GroupPtr source, std::vector<int> coset_of, std::vector<Element> coset_rep)
      : source_(std::move(source)), coset_of_(std::move(coset_of)), coset_rep_(std::move(coset_rep)) {}

  Label multiply(const Label& a, const Label& b) const override {
    return {coset_of_[source_->multiply(coset_rep_[a[0]], coset_rep_[b[0]])]};
  }
  Label identity() const override { return {0}; }

 private:
  GroupPtr source_;
  std::vector<int> coset_of_;
  std::vector<Element> coset_rep_;
};

class SubgroupRepresentation final : public Representation {
 public:
  explicit SubgroupRepresentation(GroupPtr parent) : parent_(std::move(parent)) {}
  Label multiply(const Label& a, const Label& b) const override {
    return {parent_->multiply(a[0], b[0])};
  }
  Label identity() const override { return {0}; }

 private:
  GroupPtr parent_;
};

}  // namespace

Subgroup QuotientMap::image(const Subgroup& h) const {
  if (h.parent() != source) throw InputError("subgroup is not in the quotient's source group");
  std::vector<Element> out;
  for (Element x : h.members()) out.push_back(projection[x]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return detail::trusted_subgroup(target, std::move(out));
}

Subgroup QuotientMap::preimage(const Subgroup& h) const {
  if (h.parent() != target) throw InputError("subgroup is not in the quotient's target group");
  std::vector<Element> out;
  for (Element x = 0; x < source->order(); ++x) {
    if (h.contains(projection[x])) out.push_back(x);
  }
  return detail::trusted_subgroup(source, std::move(out));
}

QuotientMap quotient(const GroupPtr& group, const Subgroup& n, const EnumerationOptions& options) {
  if (n.parent() != group) throw InputError("normal subgroup belongs to a different group");
  if (auto witness = normality_witness(group, n)) {
    std::ostringstream msg;
    msg << "subgroup is not normal: conjugating " << group->word(witness->second) << " by "
        << group->word(witness->first) << " leaves the subgroup";
    throw InputError(msg.str());
  }
  std::vector<int> coset_of(static_cast<std::size_t>(group->order()), -1);
  std::vector<Element> coset_rep;
  for (Element x = 0; x < group->order(); ++x) {
    if (coset_of[x] >= 0) continue;
    const int id = static_cast<int>(coset_rep.size());
    coset_rep.push_back(x);
    for (Element m : n.members()) coset_of[group->multiply(x, m)] = id;
  }

  std::vector<Label> gens;
  for (Element g : group->generators()) gens.push_back({coset_of[g]});
  auto rep = std::make_shared<QuotientRepresentation>(group, coset_of, coset_rep);
  GroupPtr target = Group::enumerate(rep, std::move(gens), group->generator_names(), options);

  std::vector<Element> projection(static_cast<std::size_t>(group->order()));
  for (Element x = 0; x < group->order(); ++x) projection[x] = *target->find({coset_of[x]});
  return QuotientMap{group, n, std::move(target), std::move(projection)};
}

EmbeddedSubgroup as_group(const Subgroup& h) {
  const GroupPtr& parent = h.parent();
  // Greedy generating set: add members not yet generated, in index order.
  std::vector<Element> chosen;
  Subgroup generated = Subgroup::trivial(parent);
  for (Element x : h.members()) {
    if (generated.contains(x)) continue;
    chosen.push_back(x);
    generated = generated_by(parent, chosen);
  }
  std::vector<Label> gens;
  std::vector<std::string> names;
  for (Element x : chosen) {
    gens.push_back({x});
    names.push_back(parent->word(x));
  }
  GroupPtr group = Group::enumerate(std::make_shared<SubgroupRepresentation>(parent),
                                    std::move(gens), std::move(names));
  std::vector<Element> to_parent(static_cast<std::size_t>(group->order()));
  std::vector<Element> from_parent(static_cast<std::size_t>(parent->order()), -1);
  for (Element y = 0; y < group->order(); ++y) {
    to_parent[y] = group->label(y)[0];
    from_parent[to_parent[y]] = y;
  }
  return EmbeddedSubgroup{h, std::move(group), std::move(to_parent), std::move(from_parent)};
}

}  // namespace gvz
