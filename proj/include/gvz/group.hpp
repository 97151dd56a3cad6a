#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace gvz {

/// Position of an element in its group's canonical order; 0 is the identity.
using Element = int;

/// Concrete data of an element in the underlying representation:
/// permutation images, polycyclic exponent vectors, coset ids, ...
using Label = std::vector<int>;

struct LabelHash {
  std::size_t operator()(const Label& label) const noexcept {
    std::size_t seed = label.size();
    for (int x : label) {
      seed ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    }
    return seed;
  }
};

/// How labels multiply. Implementations must be associative and pure.
class Representation {
 public:
  virtual ~Representation() = default;
  virtual Label multiply(const Label& a, const Label& b) const = 0;
  virtual Label identity() const = 0;
};

struct EnumerationOptions {
  std::size_t max_order = 1'000'000;
  // A dense multiplication table is materialized up to this order.
  std::size_t dense_table_limit = 4096;
};

class Group;
using GroupPtr = std::shared_ptr<const Group>;

/// A finite group with every element enumerated.
///
/// Elements are numbered in breadth-first discovery order from the
/// generators (right multiplication, generators in input order), identity
/// first. Immutable after construction.
class Group {
 public:
  static GroupPtr enumerate(std::shared_ptr<const Representation> rep,
                            std::vector<Label> generators,
                            std::vector<std::string> generator_names,
                            const EnumerationOptions& options = {});

  int order() const { return static_cast<int>(labels_.size()); }
  Element identity() const { return 0; }
  Element multiply(Element a, Element b) const;
  Element inverse(Element a) const { return inverse_[a]; }
  Element power(Element a, long long k) const;
  /// g^-1 x g
  Element conjugate(Element x, Element g) const;
  /// h^-1 k^-1 h k
  Element commutator(Element h, Element k) const;

  const std::vector<Element>& generators() const { return generators_; }
  const std::vector<std::string>& generator_names() const { return generator_names_; }
  int exponent() const { return exponent_; }
  int element_order(Element a) const { return element_order_[a]; }
  bool is_abelian() const;

  const Label& label(Element a) const { return labels_[a]; }
  std::optional<Element> find(const Label& label) const;
  /// Generator word reaching the element in the breadth-first tree; "1" for the identity.
  const std::string& word(Element a) const { return words_[a]; }
  const Representation& representation() const { return *rep_; }
  bool has_dense_table() const { return !table_.empty(); }

 private:
  Group() = default;

  std::shared_ptr<const Representation> rep_;
  std::vector<Label> labels_;
  std::unordered_map<Label, Element, LabelHash> index_;
  std::vector<Element> table_;  // row-major |G| x |G| when dense
  std::vector<Element> inverse_;
  std::vector<int> element_order_;
  std::vector<Element> generators_;
  std::vector<std::string> generator_names_;
  std::vector<std::string> words_;
  int exponent_ = 1;
};

// ---------------------------------------------------------------------------
// Permutation groups

/// Images of 0..degree-1; composition applies the left factor first.
using Permutation = std::vector<int>;

/// Builds a permutation on {1..degree} from 1-based cycles.
Permutation permutation_from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

class PermutationRepresentation final : public Representation {
 public:
  explicit PermutationRepresentation(int degree) : degree_(degree) {}
  Label multiply(const Label& a, const Label& b) const override;
  Label identity() const override;
  int degree() const { return degree_; }

 private:
  int degree_;
};

GroupPtr enumerate_from_permutations(int degree, const std::vector<Permutation>& generators,
                                     const EnumerationOptions& options = {});

// ---------------------------------------------------------------------------
// Subgroups

class Subgroup;

namespace detail {
// Skips the closure check; callers guarantee a sorted, closed member list.
Subgroup trusted_subgroup(GroupPtr parent, std::vector<Element> members);
}  // namespace detail

/// A subgroup of a parent group, stored as a sorted member list.
class Subgroup {
 public:
  /// Checks closure; throws InputError if members do not form a subgroup.
  Subgroup(GroupPtr parent, std::vector<Element> members);

  static Subgroup trivial(GroupPtr parent);
  static Subgroup whole(GroupPtr parent);

  const GroupPtr& parent() const { return parent_; }
  const std::vector<Element>& members() const { return members_; }
  int order() const { return static_cast<int>(members_.size()); }
  int index() const { return parent_->order() / order(); }
  bool contains(Element x) const { return membership_[x]; }
  bool is_subset_of(const Subgroup& other) const;
  bool is_trivial() const { return members_.size() == 1; }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }
  friend bool operator<(const Subgroup& a, const Subgroup& b) { return a.members_ < b.members_; }

 private:
  struct Trusted {};
  Subgroup(GroupPtr parent, std::vector<Element> members, Trusted);

  GroupPtr parent_;
  std::vector<Element> members_;
  std::vector<bool> membership_;

  friend Subgroup detail::trusted_subgroup(GroupPtr, std::vector<Element>);
};

Subgroup generated_by(const GroupPtr& group, std::span<const Element> elements);
Subgroup intersection(const Subgroup& a, const Subgroup& b);

/// Left coset xN as a sorted element list.
std::vector<Element> coset(const GroupPtr& group, Element x, const Subgroup& n);

bool is_normal(const GroupPtr& group, const Subgroup& h);
/// A pair (generator g, member h) with g^-1 h g outside H, if any.
std::optional<std::pair<Element, Element>> normality_witness(const GroupPtr& group,
                                                             const Subgroup& h);

Subgroup center(const GroupPtr& group);
Subgroup centralizer(const GroupPtr& group, Element x);
/// Subgroup generated by all [h, k]; no normal closure is taken.
Subgroup commutator_subgroup(const Subgroup& h, const Subgroup& k);
Subgroup derived_subgroup(const GroupPtr& group);

/// G, [G,G], [[G,G],G], ... down to the trivial group, or until it stalls.
std::vector<Subgroup> lower_central_series(const GroupPtr& group);
/// Length of the lower central series; nullopt when the group is not nilpotent.
std::optional<int> nilpotency_class(const GroupPtr& group);

// ---------------------------------------------------------------------------
// Conjugacy

struct ConjugacyClasses {
  GroupPtr group;
  std::vector<Element> representatives;        // smallest member of each class
  std::vector<std::vector<Element>> members;   // sorted
  std::vector<int> class_of;                   // element -> class index

  int count() const { return static_cast<int>(representatives.size()); }
  int size(int c) const { return static_cast<int>(members[c].size()); }
};

/// Identity class first; remaining classes ordered by smallest member.
ConjugacyClasses conjugacy_classes(const GroupPtr& group);

// ---------------------------------------------------------------------------
// Quotients and subgroups as groups

struct QuotientMap {
  GroupPtr source;
  Subgroup kernel;
  GroupPtr target;
  std::vector<Element> projection;  // source element -> target element

  /// Image of a subgroup of the source.
  Subgroup image(const Subgroup& h) const;
  /// Full preimage of a subgroup of the target.
  Subgroup preimage(const Subgroup& h) const;
};

/// Throws InputError naming a witness pair when N is not normal.
QuotientMap quotient(const GroupPtr& group, const Subgroup& n,
                     const EnumerationOptions& options = {});

/// A subgroup realized as a group in its own right.
struct EmbeddedSubgroup {
  Subgroup subgroup;
  GroupPtr group;
  std::vector<Element> to_parent;    // subgroup-group element -> parent element
  std::vector<Element> from_parent;  // parent element -> subgroup-group element, or -1
};

EmbeddedSubgroup as_group(const Subgroup& h);

}  // namespace gvz
