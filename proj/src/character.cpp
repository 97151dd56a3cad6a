#include <algorithm>
#include <numeric>
#include <set>

#include "gvz/char_table.hpp"
#include "gvz/errors.hpp"

namespace gvz {

namespace {

int common_conductor(const Character& a, const Character& b) {
  return std::lcm(a.conductor(), b.conductor());
}

Subgroup subgroup_from_classes(const ClassData& cd, const std::vector<bool>& keep_class) {
  std::vector<Element> members;
  for (Element x = 0; x < cd.group()->order(); ++x) {
    if (keep_class[cd.class_of(x)]) members.push_back(x);
  }
  return detail::trusted_subgroup(cd.group(), std::move(members));
}

}  // namespace

Character::Character(ClassDataPtr classes, std::vector<Cyclotomic> values, bool irreducible)
    : classes_(std::move(classes)), values_(std::move(values)), irreducible_(irreducible) {
  if (!classes_ || static_cast<int>(values_.size()) != classes_->count()) {
    throw InputError("a class function needs one value per conjugacy class");
  }
  const int e = values_.front().conductor();
  for (const auto& v : values_) {
    if (v.conductor() != e) throw InputError("class function values must share a conductor");
  }
}

int Character::degree() const {
  const auto value = values_.front().as_rational();
  if (!value || value->get_den() != 1 || *value <= 0 || !value->get_num().fits_sint_p()) {
    throw InputError("class function value at the identity is not a positive integer");
  }
  return static_cast<int>(value->get_num().get_si());
}

bool Character::same_values(const Character& other) const {
  if (group() != other.group()) return false;
  const int e = common_conductor(*this, other);
  for (std::size_t c = 0; c < values_.size(); ++c) {
    if (!(values_[c].embed(e) == other.values_[c].embed(e))) return false;
  }
  return true;
}

Character Character::embedded(int conductor) const {
  std::vector<Cyclotomic> out;
  out.reserve(values_.size());
  for (const auto& v : values_) out.push_back(v.embed(conductor));
  return Character(classes_, std::move(out), irreducible_);
}

Character Character::scaled(const Rational& factor) const {
  std::vector<Cyclotomic> out;
  out.reserve(values_.size());
  for (const auto& v : values_) out.push_back(v * factor);
  return Character(classes_, std::move(out), false);
}

std::vector<int> CharacterTable::linear_indices() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    if (irreducibles[i].degree() == 1) out.push_back(i);
  }
  return out;
}

std::vector<int> CharacterTable::nonlinear_indices() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    if (irreducibles[i].degree() != 1) out.push_back(i);
  }
  return out;
}

std::optional<int> CharacterTable::find(const Character& chi) const {
  for (int i = 0; i < size(); ++i) {
    if (irreducibles[i].same_values(chi)) return i;
  }
  return std::nullopt;
}

Rational inner_product(const Character& chi, const Character& psi) {
  if (chi.group() != psi.group()) throw InputError("inner product of class functions on different groups");
  const int e = common_conductor(chi, psi);
  const ClassData& cd = chi.classes();
  Cyclotomic sum(e);
  for (int c = 0; c < cd.count(); ++c) {
    sum += (chi.at_class(c).embed(e) * psi.at_class(c).embed(e).conj()) * Rational(cd.size(c));
  }
  const auto value = sum.as_rational();
  if (!value) throw InternalError("inner product of class functions is not rational");
  Rational out = *value / chi.group()->order();
  out.canonicalize();
  return out;
}

std::vector<Rational> decompose(const Character& psi, const CharacterTable& table) {
  std::vector<Rational> out;
  out.reserve(table.irreducibles.size());
  for (const auto& chi : table.irreducibles) out.push_back(inner_product(psi, chi));
  return out;
}

Character induce(const Character& lambda, const EmbeddedSubgroup& h) {
  return induce(lambda, h, class_data(h.subgroup.parent()));
}

Character induce(const Character& lambda, const EmbeddedSubgroup& h, const ClassDataPtr& parent) {
  if (lambda.group() != h.group) throw InputError("character does not live on the given subgroup");
  const GroupPtr& g = h.subgroup.parent();
  if (parent->group() != g) throw InputError("class data does not belong to the parent group");

  // Right transversal: one representative t per coset Ht.
  std::vector<bool> covered(static_cast<std::size_t>(g->order()), false);
  std::vector<Element> transversal;
  for (Element x = 0; x < g->order(); ++x) {
    if (covered[x]) continue;
    transversal.push_back(x);
    for (Element m : h.subgroup.members()) covered[g->multiply(m, x)] = true;
  }

  const int e = std::lcm(lambda.conductor(), g->exponent());
  std::vector<Cyclotomic> values;
  values.reserve(static_cast<std::size_t>(parent->count()));
  for (int c = 0; c < parent->count(); ++c) {
    const Element rep = parent->classes.representatives[c];
    Cyclotomic sum(e);
    for (Element t : transversal) {
      const Element conj = g->multiply(g->multiply(t, rep), g->inverse(t));
      const Element local = h.from_parent[conj];
      if (local >= 0) sum += lambda.at(local).embed(e);
    }
    values.push_back(std::move(sum));
  }
  return Character(parent, std::move(values), false);
}

Character restrict(const Character& chi, const EmbeddedSubgroup& h) {
  return restrict(chi, h, class_data(h.group));
}

Character restrict(const Character& chi, const EmbeddedSubgroup& h, const ClassDataPtr& sub) {
  if (chi.group() != h.subgroup.parent()) throw InputError("subgroup is not inside the character's group");
  if (sub->group() != h.group) throw InputError("class data does not belong to the subgroup");
  std::vector<Cyclotomic> values;
  values.reserve(static_cast<std::size_t>(sub->count()));
  for (int c = 0; c < sub->count(); ++c) {
    values.push_back(chi.at(h.to_parent[sub->classes.representatives[c]]));
  }
  return Character(sub, std::move(values), false);
}

Subgroup kernel(const Character& chi) {
  const Cyclotomic degree = Cyclotomic::rational(chi.degree(), chi.conductor());
  std::vector<bool> keep;
  for (const auto& v : chi.values()) keep.push_back(v == degree);
  return subgroup_from_classes(chi.classes(), keep);
}

Subgroup char_center(const Character& chi) {
  const Cyclotomic degree_sq =
      Cyclotomic::rational(Rational(chi.degree()) * chi.degree(), chi.conductor());
  std::vector<bool> keep;
  for (const auto& v : chi.values()) keep.push_back(v.abs_squared() == degree_sq);
  return subgroup_from_classes(chi.classes(), keep);
}

std::vector<int> degree_set(const CharacterTable& table) {
  std::set<int> degrees;
  for (const auto& chi : table.irreducibles) degrees.insert(chi.degree());
  return {degrees.begin(), degrees.end()};
}

Character lift(const Character& chibar, const QuotientMap& qm) {
  return lift(chibar, qm, class_data(qm.source));
}

Character lift(const Character& chibar, const QuotientMap& qm, const ClassDataPtr& source) {
  if (chibar.group() != qm.target) throw InputError("character does not live on the quotient group");
  if (source->group() != qm.source) throw InputError("class data does not belong to the source group");
  const int e = std::lcm(chibar.conductor(), qm.source->exponent());
  std::vector<Cyclotomic> values;
  values.reserve(static_cast<std::size_t>(source->count()));
  for (int c = 0; c < source->count(); ++c) {
    values.push_back(chibar.at(qm.projection[source->classes.representatives[c]]).embed(e));
  }
  return Character(source, std::move(values), chibar.is_irreducible());
}

std::optional<Character> deflate(const Character& chi, const QuotientMap& qm) {
  return deflate(chi, qm, class_data(qm.target));
}

std::optional<Character> deflate(const Character& chi, const QuotientMap& qm,
                                 const ClassDataPtr& target) {
  if (chi.group() != qm.source) throw InputError("character does not live on the quotient's source");
  if (target->group() != qm.target) throw InputError("class data does not belong to the target group");
  if (!qm.kernel.is_subset_of(kernel(chi))) return std::nullopt;
  std::vector<Element> preimage(static_cast<std::size_t>(qm.target->order()), -1);
  for (Element x = 0; x < qm.source->order(); ++x) {
    if (preimage[qm.projection[x]] < 0) preimage[qm.projection[x]] = x;
  }
  std::vector<Cyclotomic> values;
  values.reserve(static_cast<std::size_t>(target->count()));
  for (int c = 0; c < target->count(); ++c) {
    values.push_back(chi.at(preimage[target->classes.representatives[c]]));
  }
  return Character(target, std::move(values), chi.is_irreducible());
}

std::optional<Character> deflate(const Character& chi, const Subgroup& n) {
  if (n.parent() != chi.group()) throw InputError("subgroup is not inside the character's group");
  if (!n.is_subset_of(kernel(chi))) return std::nullopt;
  return deflate(chi, quotient(chi.group(), n));
}

}  // namespace gvz
