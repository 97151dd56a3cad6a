#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "gvz/cyclotomic.hpp"
#include "gvz/group.hpp"

namespace gvz {

/// Conjugacy classes plus the per-class data character computations need.
struct ClassData {
  ConjugacyClasses classes;
  std::vector<int> inverse_class;
  /// power_map[c][j] = class of rep_c^j for 0 <= j < exponent.
  std::vector<std::vector<int>> power_map;
  std::vector<int> centralizer_order;

  const GroupPtr& group() const { return classes.group; }
  int count() const { return classes.count(); }
  int size(int c) const { return classes.size(c); }
  int class_of(Element x) const { return classes.class_of[x]; }
};

using ClassDataPtr = std::shared_ptr<const ClassData>;

ClassDataPtr class_data(const GroupPtr& group);

/// A class function: one cyclotomic value per conjugacy class.
///
/// Table characters carry conductor exponent(G). Derived class functions
/// (restrictions, deflations) may carry a multiple of their group's
/// exponent; comparisons embed both sides into a common field.
class Character {
 public:
  Character(ClassDataPtr classes, std::vector<Cyclotomic> values, bool irreducible = false);

  const GroupPtr& group() const { return classes_->group(); }
  const ClassData& classes() const { return *classes_; }
  const ClassDataPtr& class_data_ptr() const { return classes_; }
  const std::vector<Cyclotomic>& values() const { return values_; }
  const Cyclotomic& at_class(int c) const { return values_[c]; }
  const Cyclotomic& at(Element g) const { return values_[classes_->class_of(g)]; }
  int conductor() const { return values_.front().conductor(); }
  bool is_irreducible() const { return irreducible_; }

  /// chi(1); throws InputError unless it is a positive integer.
  int degree() const;
  bool is_linear() const { return degree() == 1; }

  /// Same group and equal values after embedding into a common conductor.
  bool same_values(const Character& other) const;
  Character embedded(int conductor) const;
  Character scaled(const Rational& factor) const;

 private:
  ClassDataPtr classes_;
  std::vector<Cyclotomic> values_;
  bool irreducible_;
};

struct DixonOptions {
  /// Order in which class matrices drive the eigenspace splitting; empty
  /// means class index order. Must be a permutation of the class indices.
  std::vector<int> class_order;
  /// Try one seeded random combination of class matrices before the
  /// deterministic pass.
  bool randomized_split = false;
  std::uint64_t seed = 0;
  int threads = 1;
  long long prime_search_limit = 100'000'000;
};

struct CharacterTable {
  GroupPtr group;
  ClassDataPtr classes;
  /// Sorted by degree, then lexicographically by value coefficients.
  std::vector<Character> irreducibles;
  long long field_prime = 0;
  int exponent = 1;

  int size() const { return static_cast<int>(irreducibles.size()); }
  const Character& operator[](int i) const { return irreducibles[i]; }
  std::vector<int> linear_indices() const;
  std::vector<int> nonlinear_indices() const;
  /// Row whose values equal the class function, if any.
  std::optional<int> find(const Character& chi) const;
};

/// Exact irreducible characters by the Dixon-Schneider method.
CharacterTable character_table(const GroupPtr& group, const DixonOptions& options = {});

/// Smallest prime q = 1 (mod e) with q > 2 sqrt(order).
long long dixon_prime(int order, int exponent, long long search_limit = 100'000'000);

/// |G|^-1 sum_g chi(g) conj(psi(g)).
Rational inner_product(const Character& chi, const Character& psi);

/// Multiplicities <psi, chi_i> against every row of the table.
std::vector<Rational> decompose(const Character& psi, const CharacterTable& table);

/// Induction from H (as a group) to its parent, over a right transversal.
Character induce(const Character& lambda, const EmbeddedSubgroup& h);
Character induce(const Character& lambda, const EmbeddedSubgroup& h, const ClassDataPtr& parent);

Character restrict(const Character& chi, const EmbeddedSubgroup& h);
Character restrict(const Character& chi, const EmbeddedSubgroup& h, const ClassDataPtr& sub);

/// {g : chi(g) = chi(1)}
Subgroup kernel(const Character& chi);
/// {g : |chi(g)| = chi(1)}
Subgroup char_center(const Character& chi);

std::vector<int> degree_set(const CharacterTable& table);

/// Pulls a class function of G/N back along the projection.
Character lift(const Character& chibar, const QuotientMap& qm);
Character lift(const Character& chibar, const QuotientMap& qm, const ClassDataPtr& source);
/// The class function of G/N that lifts to chi; nullopt unless N <= ker chi.
std::optional<Character> deflate(const Character& chi, const QuotientMap& qm);
std::optional<Character> deflate(const Character& chi, const QuotientMap& qm,
                                 const ClassDataPtr& target);
/// Builds the quotient G/N itself.
std::optional<Character> deflate(const Character& chi, const Subgroup& n);

}  // namespace gvz
