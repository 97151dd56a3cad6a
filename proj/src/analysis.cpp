#include <algorithm>
#include <numeric>
#include <sstream>

#include "gvz/analysis.hpp"
#include "gvz/errors.hpp"

namespace gvz {

const char* to_string(Check::Status status) {
  switch (status) {
    case Check::Status::Pass: return "pass";
    case Check::Status::Fail: return "fail";
    case Check::Status::Skip: return "skip";
    case Check::Status::Info: return "info";
  }
  return "?";
}

bool TheoremReport::passed() const { return count(Check::Status::Fail) == 0; }

int TheoremReport::count(Check::Status status) const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(),
                                        [&](const Check& c) { return c.status == status; }));
}

bool GvzReport::criteria_agree() const {
  return std::all_of(characters.begin(), characters.end(), [](const CharacterRecord& r) {
    return r.degree_square_is_index == r.vanishes_off_center;
  });
}

std::optional<long> exact_sqrt(long n) {
  if (n < 0) return std::nullopt;
  long r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  if (r * r != n) return std::nullopt;
  return r;
}

// ---------------------------------------------------------------------------

Analysis::Analysis(const CharacterTable& table, std::string group_id)
    : table_(table),
      group_id_(std::move(group_id)),
      derived_(gvz::derived_subgroup(table.group)),
      center_(gvz::center(table.group)),
      degrees_(degree_set(table)) {
  for (const auto& chi : table_.irreducibles) {
    kernels_.push_back(gvz::kernel(chi));
    centers_.push_back(gvz::char_center(chi));
  }
}

const Subgroup& Analysis::center_commutator(int chi) const {
  const Subgroup& z = centers_[chi];
  auto it = commutators_.find(z.members());
  if (it == commutators_.end()) {
    it = commutators_.emplace(z.members(), commutator_subgroup(z, Subgroup::whole(group()))).first;
  }
  return it->second;
}

const Analysis::QuotientData& Analysis::quotient_by(const Subgroup& n) const {
  auto it = quotients_.find(n.members());
  if (it != quotients_.end()) return *it->second;
  QuotientMap map = quotient(group(), n);
  CharacterTable quotient_table = character_table(map.target);
  std::vector<int> rows;
  for (const auto& chibar : quotient_table.irreducibles) {
    rows.push_back(table_.find(lift(chibar, map, table_.classes)).value_or(-1));
  }
  auto data = std::make_unique<QuotientData>(
      QuotientData{std::move(map), std::move(quotient_table), std::move(rows)});
  return *quotients_.emplace(n.members(), std::move(data)).first->second;
}

const Analysis::SubgroupData& Analysis::subgroup_table(const Subgroup& h) const {
  auto it = subgroups_.find(h.members());
  if (it != subgroups_.end()) return *it->second;
  EmbeddedSubgroup embedded = as_group(h);
  CharacterTable sub_table = character_table(embedded.group);
  auto data = std::make_unique<SubgroupData>(SubgroupData{std::move(embedded), std::move(sub_table)});
  return *subgroups_.emplace(h.members(), std::move(data)).first->second;
}

std::string Analysis::describe(const Subgroup& h) const {
  std::vector<Element> gens;
  Subgroup generated = Subgroup::trivial(group());
  for (Element x : h.members()) {
    if (generated.contains(x)) continue;
    gens.push_back(x);
    generated = generated_by(group(), gens);
  }
  std::ostringstream out;
  out << "order " << h.order() << " <";
  for (std::size_t i = 0; i < gens.size(); ++i) out << (i ? ", " : "") << group()->word(gens[i]);
  out << ">";
  return out.str();
}

std::string Analysis::describe_class(int c) const {
  const auto& cd = *table_.classes;
  std::ostringstream out;
  out << "class of " << group()->word(cd.classes.representatives[c]) << " (size " << cd.size(c) << ")";
  return out.str();
}

std::string Analysis::describe_element(Element x) const { return group()->word(x); }

// ---------------------------------------------------------------------------

namespace {

GvzReport compute_gvz(const Analysis& a) {
  if (!a.nonabelian()) {
    throw HypothesisError("GVZ is defined for non-abelian groups only; this group is abelian");
  }
  GvzReport report;
  report.group_id = a.group_id();
  report.is_nonabelian = true;
  report.degree_set = a.degrees();
  report.is_gvz = true;
  const auto& table = a.table();
  const auto& cd = *table.classes;
  const int order = a.group()->order();
  for (int i = 0; i < table.size(); ++i) {
    const Character& chi = table[i];
    const Subgroup& z = a.char_center(i);
    CharacterRecord rec;
    rec.index = i;
    rec.degree = chi.degree();
    rec.center_order = z.order();
    rec.degree_square_is_index = static_cast<long>(rec.degree) * rec.degree == order / z.order();
    rec.vanishes_off_center = true;
    std::optional<int> offending;
    for (int c = 0; c < cd.count(); ++c) {
      if (z.contains(cd.classes.representatives[c])) continue;
      if (!chi.at_class(c).is_zero()) {
        rec.vanishes_off_center = false;
        if (!offending) offending = c;
      }
    }
    if (!rec.vanishes_off_center && report.is_gvz) {
      std::ostringstream w;
      w << "chi[" << i << "] of degree " << rec.degree << ": chi(1)^2 = "
        << rec.degree * rec.degree << ", |G:Z(chi)| = " << order / z.order() << "; value "
        << chi.at_class(*offending).to_string() << " on " << a.describe_class(*offending)
        << " outside Z(chi)";
      report.witness = w.str();
    }
    report.is_gvz = report.is_gvz && rec.vanishes_off_center;
    report.characters.push_back(rec);
  }
  return report;
}

}  // namespace

const GvzReport& Analysis::gvz() const {
  if (!gvz_) gvz_ = compute_gvz(*this);
  return *gvz_;
}

GvzReport is_gvz(const CharacterTable& table, const std::string& group_id) {
  return Analysis(table, group_id).gvz();
}

GcpResult is_gcp(const Analysis& a, const Subgroup& n) {
  const GroupPtr& g = a.group();
  if (auto w = normality_witness(g, n)) {
    throw InputError("GCP needs a normal subgroup; conjugating " + g->word(w->second) + " by " +
                     g->word(w->first) + " leaves it");
  }
  GcpResult result;
  const auto& table = a.table();
  const auto& cd = *table.classes;

  result.vanishing_criterion = true;
  std::optional<std::string> vanishing_witness;
  for (int i : table.nonlinear_indices()) {
    for (int c = 0; c < cd.count(); ++c) {
      if (n.contains(cd.classes.representatives[c]) || table[i].at_class(c).is_zero()) continue;
      result.vanishing_criterion = false;
      if (!vanishing_witness) {
        vanishing_witness = "chi[" + std::to_string(i) + "] takes value " +
                            table[i].at_class(c).to_string() + " on " + a.describe_class(c) +
                            " outside N";
      }
    }
  }

  result.class_criterion = true;
  std::optional<std::string> class_witness;
  for (Element x = 0; x < g->order(); ++x) {
    if (n.contains(x)) continue;
    const auto& cls = cd.classes.members[cd.class_of(x)];
    if (coset(g, x, a.derived()) != cls) {
      result.class_criterion = false;
      if (!class_witness) {
        class_witness = "element " + g->word(x) + " outside N has class of size " +
                        std::to_string(cls.size()) + " but |xG'| = " +
                        std::to_string(a.derived().order());
      }
    }
  }

  if (result.vanishing_criterion != result.class_criterion) {
    throw InternalError("GCP criteria disagree: " +
                        vanishing_witness.value_or(class_witness.value_or("no witness")));
  }
  result.holds = result.vanishing_criterion;
  if (!result.holds) result.witness = vanishing_witness.value_or("") + "; " + class_witness.value_or("");
  return result;
}

GcpResult is_gcp(const CharacterTable& table, const Subgroup& n) { return is_gcp(Analysis(table), n); }

// ---------------------------------------------------------------------------

FiberCount fiber_count(const Analysis& a, int chi) {
  FiberCount out;
  const Subgroup& z = a.char_center(chi);
  for (int i : a.table().nonlinear_indices()) {
    if (a.char_center(i) == z) ++out.count;
  }
  const Subgroup& comm = a.center_commutator(chi);
  out.formula = Rational(z.order()) * (Rational(1, comm.order()) - Rational(1, a.derived().order()));
  out.formula.canonicalize();
  out.hypothesis_met = a.nonabelian() && a.two_degrees() && a.gvz().is_gvz &&
                       !a.table()[chi].is_linear();
  if (out.hypothesis_met && comm == a.derived()) {
    throw TheoremViolation("nonlinear chi[" + std::to_string(chi) +
                           "] has [Z(chi),G] = G', which forces chi to be linear");
  }
  out.agrees = out.hypothesis_met && out.formula == out.count;
  return out;
}

IrrStar irr_star(const Analysis& a, int chi) {
  if (!a.is_two_degree_gvz()) throw HypothesisError("Irr_* needs a GVZ-group with two character degrees");
  IrrStar star{a.char_center(chi), a.center_commutator(chi), nullptr, {}, false};
  star.derived_in_centre = a.derived().is_subset_of(star.centre);
  star.centre_table = &a.subgroup_table(star.centre);
  const auto& emb = star.centre_table->embedded;
  const auto& sub = star.centre_table->table;
  for (int l = 0; l < sub.size(); ++l) {
    std::vector<bool> in_kernel(static_cast<std::size_t>(a.group()->order()), false);
    const Subgroup ker = kernel(sub[l]);
    for (Element y : ker.members()) in_kernel[emb.to_parent[y]] = true;
    const auto& comm = star.commutator.members();
    const auto& der = a.derived().members();
    const bool comm_in_ker = std::all_of(comm.begin(), comm.end(), [&](Element x) { return in_kernel[x]; });
    const bool derived_in_ker = std::all_of(der.begin(), der.end(), [&](Element x) { return in_kernel[x]; });
    if (comm_in_ker && !derived_in_ker) star.members.push_back(l);
  }
  return star;
}

Constituent unique_nonlinear_constituent(const Analysis& a, const IrrStar& star, int lambda_row) {
  const auto& table = a.table();
  const auto& emb = star.centre_table->embedded;
  const Character& lambda = star.centre_table->table[lambda_row];
  const Character induced = induce(lambda, emb, table.classes);

  Constituent out;
  out.decomposition = decompose(induced, table);
  std::vector<int> nonlinear;
  for (int i = 0; i < table.size(); ++i) {
    if (out.decomposition[i] != 0 && !table[i].is_linear()) nonlinear.push_back(i);
  }
  if (nonlinear.size() != 1) {
    std::ostringstream msg;
    msg << "lambda^G has " << nonlinear.size() << " nonlinear constituents; decomposition:";
    for (int i = 0; i < table.size(); ++i) {
      if (out.decomposition[i] != 0) msg << " " << out.decomposition[i].get_str() << "*chi[" << i << "]";
    }
    throw TheoremViolation(msg.str());
  }
  out.theta = nonlinear.front();
  out.multiplicity = out.decomposition[out.theta];

  const int index = a.group()->order() / star.centre.order();
  const auto root = exact_sqrt(index);
  if (!root) throw TheoremViolation("|G:Z(chi)| = " + std::to_string(index) + " is not a square");
  out.expected_multiplicity = Rational(*root, lambda.degree());
  out.expected_multiplicity.canonicalize();

  const Character& theta = table[out.theta];
  const int e = std::lcm(theta.conductor(), lambda.conductor());
  out.value_formula_holds = true;
  for (Element g = 0; g < a.group()->order(); ++g) {
    const Cyclotomic value = theta.at(g).embed(e);
    if (!star.centre.contains(g)) {
      if (!value.is_zero()) out.value_formula_holds = false;
      continue;
    }
    const Cyclotomic lhs = value * Rational(lambda.degree());
    const Cyclotomic rhs = lambda.at(emb.from_parent[g]).embed(e) * Rational(*root);
    if (!(lhs == rhs)) out.value_formula_holds = false;
  }
  out.centre_matches = a.char_center(out.theta) == star.centre;
  return out;
}

bool class_condition(const Analysis& a, int chi, Element x) {
  const auto& cd = *a.table().classes;
  return coset(a.group(), x, a.center_commutator(chi)) == cd.classes.members[cd.class_of(x)];
}

std::vector<CentreCount> centre_census(const Analysis& a) {
  if (!a.nonabelian()) throw HypothesisError("centre census needs a non-abelian group");
  std::map<std::vector<Element>, CentreCount> by_members;
  for (int i : a.table().nonlinear_indices()) {
    const Subgroup& z = a.char_center(i);
    auto it = by_members.find(z.members());
    if (it == by_members.end()) it = by_members.emplace(z.members(), CentreCount{z, {}}).first;
    it->second.characters.push_back(i);
  }
  std::vector<CentreCount> out;
  for (auto& [members, entry] : by_members) out.push_back(std::move(entry));
  return out;
}

}  // namespace gvz
