#include <algorithm>
#include <set>
#include <sstream>

#include "gvz/analysis.hpp"
#include "gvz/errors.hpp"

namespace gvz {

namespace {

using Status = Check::Status;

std::string str(long v) { return std::to_string(v); }
std::string str(const Rational& v) { return v.get_str(); }
std::string str(bool v) { return v ? "true" : "false"; }

Check check(std::string label, std::string lhs, std::string rhs, bool ok,
            std::vector<std::string> witnesses = {}) {
  return Check{std::move(label), std::move(lhs), std::move(rhs), ok ? Status::Pass : Status::Fail,
               ok ? std::vector<std::string>{} : std::move(witnesses)};
}

Check info(std::string label, std::string lhs, std::string rhs = "") {
  return Check{std::move(label), std::move(lhs), std::move(rhs), Status::Info, {}};
}

Check skip(std::string label, std::string reason) {
  return Check{std::move(label), "hypothesis not met", std::move(reason), Status::Skip, {}};
}

std::string chi_name(int i) { return "chi[" + std::to_string(i) + "]"; }

std::string degree_set_string(const std::vector<int>& degrees) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < degrees.size(); ++i) out << (i ? ", " : "") << degrees[i];
  out << "}";
  return out.str();
}

/// One representative nonlinear character per distinct Z(chi), in census order.
std::vector<int> centre_representatives(const Analysis& a) {
  std::vector<int> reps;
  for (const auto& entry : centre_census(a)) reps.push_back(entry.characters.front());
  return reps;
}

void require_two_degree_gvz(const Analysis& a) {
  if (!a.nonabelian()) throw HypothesisError("hypothesis not met: the group is abelian");
  if (!a.two_degrees()) {
    throw HypothesisError("hypothesis not met: cd(G) = " + degree_set_string(a.degrees()) +
                          " does not have exactly two degrees");
  }
  if (!a.gvz().is_gvz) {
    throw HypothesisError("hypothesis not met: the group is not GVZ (" + a.gvz().witness.value_or("") + ")");
  }
}

bool vanishes_off(const Character& chi, const Subgroup& h) {
  const auto& cd = chi.classes();
  for (int c = 0; c < cd.count(); ++c) {
    if (!h.contains(cd.classes.representatives[c]) && !chi.at_class(c).is_zero()) return false;
  }
  return true;
}

Rational nonlinear_count_formula(const Subgroup& z, const Subgroup& derived) {
  Rational out = Rational(z.order()) - Rational(z.order(), derived.order());
  out.canonicalize();
  return out;
}

/// Rows of `qd.table` with degree > 1.
std::vector<int> nonlinear_rows(const Analysis::QuotientData& qd) { return qd.table.nonlinear_indices(); }

}  // namespace

// ---------------------------------------------------------------------------

TheoremReport verify_thm_1_1(const Analysis& a) {
  require_two_degree_gvz(a);
  TheoremReport report{"thm1.1", a.group_id(), {}};
  const auto& table = a.table();

  {
    std::vector<std::string> bad;
    for (int i : table.nonlinear_indices()) {
      if (!a.derived().is_subset_of(a.char_center(i))) bad.push_back(chi_name(i) + ": Z(chi) = " + a.describe(a.char_center(i)));
    }
    report.checks.push_back(check("G' is contained in Z(chi) for every nonlinear chi",
                                  str(static_cast<long>(table.nonlinear_indices().size() - bad.size())) +
                                      " of " + str(static_cast<long>(table.nonlinear_indices().size())),
                                  str(static_cast<long>(table.nonlinear_indices().size())), bad.empty(), bad));
  }

  long fiber_total = 0;
  for (int chi : centre_representatives(a)) {
    const Subgroup& z = a.char_center(chi);
    const Subgroup& comm = a.center_commutator(chi);
    const std::string prefix = "Z(chi) = " + a.describe(z) + ": ";

    report.checks.push_back(check(prefix + "[Z(chi),G] differs from G' for nonlinear chi",
                                  a.describe(comm), a.describe(a.derived()), !(comm == a.derived())));
    if (comm == a.derived()) continue;

    const FiberCount fc = fiber_count(a, chi);
    fiber_total += fc.count;
    report.checks.push_back(check(prefix + "(i) #{phi in nl(G) : Z(phi) = Z(chi)} = |Z(chi)|(1/|[Z(chi),G]| - 1/|G'|)",
                                  str(static_cast<long>(fc.count)), str(fc.formula), fc.agrees));

    const IrrStar star = irr_star(a, chi);
    const long star_size = static_cast<long>(star.members.size());
    std::vector<int> thetas;
    std::vector<std::string> constituent_failures;
    long failed_lambdas = 0;
    for (int lambda : star.members) {
      const std::size_t failures_before = constituent_failures.size();
      try {
        const Constituent c = unique_nonlinear_constituent(a, star, lambda);
        thetas.push_back(c.theta);
        std::vector<std::string> why;
        if (c.multiplicity != c.expected_multiplicity) {
          why.push_back("multiplicity " + str(c.multiplicity) + " vs " + str(c.expected_multiplicity));
        }
        if (!c.value_formula_holds) why.push_back("value formula fails");
        if (!c.centre_matches) why.push_back("Z(theta) differs from Z(chi)");
        for (const auto& w : why) constituent_failures.push_back("lambda[" + std::to_string(lambda) + "]: " + w);
      } catch (const TheoremViolation& e) {
        thetas.push_back(-1);
        constituent_failures.push_back("lambda[" + std::to_string(lambda) + "]: " + e.what());
      }
      if (constituent_failures.size() != failures_before) ++failed_lambdas;
    }
    report.checks.push_back(check(prefix + "(ii) each lambda in Irr_* induces to exactly one nonlinear constituent theta "
                                           "with theta = |G/Z(chi)|^(1/2)/lambda(1) * lambda on Z(chi) and 0 off it",
                                  str(star_size - failed_lambdas) + " of " + str(star_size),
                                  str(star_size), constituent_failures.empty(), constituent_failures));

    const auto& qd = a.quotient_by(comm);
    const std::vector<int> nl_bar = nonlinear_rows(qd);
    report.checks.push_back(check(prefix + "(iii) |Irr_*| = #nl(G/[Z(chi),G])", str(star_size),
                                  str(static_cast<long>(nl_bar.size())),
                                  star_size == static_cast<long>(nl_bar.size())));

    const std::set<int> distinct_thetas(thetas.begin(), thetas.end());
    const bool injective = distinct_thetas.size() == thetas.size() && !distinct_thetas.contains(-1);
    std::set<int> deflated;
    std::vector<std::string> deflation_failures;
    for (int theta : distinct_thetas) {
      if (theta < 0) continue;
      const auto bar = deflate(table[theta], qd.map, qd.table.classes);
      const auto row = bar ? qd.table.find(*bar) : std::nullopt;
      if (!row) {
        deflation_failures.push_back(chi_name(theta) + " does not deflate to an irreducible of G/[Z(chi),G]");
      } else {
        deflated.insert(*row);
      }
    }
    const bool onto = deflated == std::set<int>(nl_bar.begin(), nl_bar.end());
    if (!injective) deflation_failures.push_back("lambda -> theta is not injective");
    if (!onto) deflation_failures.push_back("deflated images differ from nl(G/[Z(chi),G])");
    report.checks.push_back(check(prefix + "(iii) lambda -> theta is a bijection onto nl(G/[Z(chi),G]) under deflation",
                                  "injective " + str(injective) + ", " + str(static_cast<long>(deflated.size())) +
                                      " deflated images",
                                  str(static_cast<long>(nl_bar.size())) + " nonlinear quotient characters",
                                  deflation_failures.empty(), deflation_failures));

    report.checks.push_back(check(prefix + "(iv) |Irr_*| = #{phi in nl(G) : Z(phi) = Z(chi)}", str(star_size),
                                  str(static_cast<long>(fc.count)), star_size == fc.count));

    std::set<int> fiber;
    for (int i : table.nonlinear_indices()) {
      if (a.char_center(i) == z) fiber.insert(i);
    }
    const bool hits = injective && distinct_thetas == fiber;
    report.checks.push_back(check(prefix + "(iv) lambda -> theta maps Irr_* bijectively onto {phi in nl(G) : Z(phi) = Z(chi)}",
                                  str(static_cast<long>(distinct_thetas.size())) + " images",
                                  str(static_cast<long>(fiber.size())) + " characters", hits,
                                  {"images and fiber differ"}));
  }

  const int any_chi = table.nonlinear_indices().front();
  const Rational t = nonlinear_count_formula(a.char_center(any_chi), a.derived());
  report.checks.push_back(check("sum of fiber counts over distinct centres = |Z(chi)| - |Z(chi)/G'|",
                                str(fiber_total), str(t), Rational(fiber_total) == t));
  return report;
}

// ---------------------------------------------------------------------------

TheoremReport verify_thm_1_2(const Analysis& a) {
  if (!a.nonabelian()) throw HypothesisError("hypothesis not met: the group is abelian");
  if (!a.two_degrees()) {
    throw HypothesisError("hypothesis not met: cd(G) = " + degree_set_string(a.degrees()) +
                          " does not have exactly two degrees");
  }
  TheoremReport report{"thm1.2", a.group_id(), {}};
  const auto& table = a.table();
  const GroupPtr& g = a.group();
  const bool gvz = a.gvz().is_gvz;
  report.checks.push_back(info("(i) G is a GVZ-group", str(gvz)));

  bool condition = true;
  std::optional<std::string> witness;
  std::set<std::vector<Element>> seen;
  for (int chi = 0; chi < table.size(); ++chi) {
    const Subgroup& z = a.char_center(chi);
    if (!seen.insert(z.members()).second) continue;
    const Subgroup& comm = a.center_commutator(chi);

    std::vector<bool> excluded(static_cast<std::size_t>(g->order()), false);
    for (int phi : table.nonlinear_indices()) {
      if (a.char_center(phi) == z) continue;
      for (Element x : a.char_center(phi).members()) excluded[x] = true;
    }
    long admissible = 0;
    long satisfied = 0;
    for (Element x : z.members()) {
      if (excluded[x]) continue;
      ++admissible;
      if (class_condition(a, chi, x)) {
        ++satisfied;
      } else if (!witness) {
        const auto& cd = *table.classes;
        std::ostringstream w;
        w << chi_name(chi) << " (degree " << table[chi].degree() << "), x = " << g->word(x)
          << ": |x[Z(chi),G]| = " << comm.order() << ", |Cl(x)| = " << cd.classes.members[cd.class_of(x)].size();
        witness = w.str();
      }
    }
    condition = condition && satisfied == admissible;
    report.checks.push_back(info("x[Z(chi),G] = Cl(x) for admissible x, Z(chi) = " + a.describe(z) + " (" +
                                     chi_name(chi) + ")",
                                 str(satisfied) + " of " + str(admissible) + " admissible x"));
  }

  report.checks.push_back(info("(ii) class condition holds for every chi and admissible x", str(condition)));
  const std::vector<std::string> witnesses = witness ? std::vector<std::string>{*witness} : std::vector<std::string>{};
  if (gvz) {
    report.checks.push_back(check("(i) implies (ii)", str(condition), "true", condition, witnesses));
  } else {
    Check c = check("not (i) implies not (ii)", str(condition), "false", !condition);
    if (witness) c.witnesses.push_back(*witness);
    report.checks.push_back(std::move(c));
  }
  report.checks.push_back(check("(i) iff (ii)", str(gvz), str(condition), gvz == condition, witnesses));
  return report;
}

// ---------------------------------------------------------------------------

namespace {

void lemma_linear_iff(const Analysis& a, TheoremReport& report) {
  std::vector<std::string> bad;
  for (int i = 0; i < a.table().size(); ++i) {
    const bool linear = a.table()[i].is_linear();
    if (linear != (a.center_commutator(i) == a.derived())) {
      bad.push_back(chi_name(i) + ": linear " + str(linear) + ", [Z(chi),G] = " + a.describe(a.center_commutator(i)));
    }
  }
  report.checks.push_back(check("chi is linear iff [Z(chi),G] = G'",
                                str(static_cast<long>(a.table().size() - bad.size())) + " agree",
                                str(static_cast<long>(a.table().size())), bad.empty(), bad));
}

void lemma_quotient_centre(const Analysis& a, TheoremReport& report) {
  std::vector<std::string> bad;
  std::set<std::vector<Element>> seen;
  int tested = 0;
  for (int i = 0; i < a.table().size(); ++i) {
    const Subgroup& z = a.char_center(i);
    if (!seen.insert(z.members()).second) continue;
    ++tested;
    const auto& qd = a.quotient_by(a.center_commutator(i));
    const Subgroup image = qd.map.image(z);
    const Subgroup centre = center(qd.map.target);
    if (!(image == centre)) {
      bad.push_back("Z(chi) = " + a.describe(z) + ": |Z(chi)/[Z(chi),G]| = " + str(static_cast<long>(image.order())) +
                    ", |Z(G/[Z(chi),G])| = " + str(static_cast<long>(centre.order())));
    }
  }
  report.checks.push_back(check("Z(G/[Z(chi),G]) = Z(chi)/[Z(chi),G]",
                                str(static_cast<long>(tested - static_cast<int>(bad.size()))) + " distinct centres agree",
                                str(static_cast<long>(tested)), bad.empty(), bad));
}

void lemma_restriction(const Analysis& a, TheoremReport& report, bool use_group_centre) {
  std::vector<std::string> bad;
  const auto& table = a.table();
  for (int i = 0; i < table.size(); ++i) {
    const Subgroup& h = use_group_centre ? a.center() : a.char_center(i);
    const auto& sd = a.subgroup_table(h);
    const Character res = restrict(table[i], sd.embedded, sd.table.classes);
    const Rational lhs = inner_product(res, res);
    const Rational rhs = Rational(h.index()) * inner_product(table[i], table[i]);
    const bool vanishes = vanishes_off(table[i], h);
    if (lhs > rhs || (lhs == rhs) != vanishes) {
      bad.push_back(chi_name(i) + ": [chi_H,chi_H] = " + str(lhs) + ", [G:H][chi,chi] = " + str(rhs) +
                    ", vanishes off H " + str(vanishes));
    }
  }
  const std::string h = use_group_centre ? "Z(G)" : "Z(chi)";
  report.checks.push_back(check("[chi_H,chi_H] <= [G:H][chi,chi] with equality iff chi vanishes off H, H = " + h,
                                str(static_cast<long>(table.size() - bad.size())) + " agree",
                                str(static_cast<long>(table.size())), bad.empty(), bad));
}

void lemma_degree_bound(const Analysis& a, TheoremReport& report) {
  std::vector<std::string> bad;
  const auto& table = a.table();
  const int order = a.group()->order();
  for (int i = 0; i < table.size(); ++i) {
    const long d = table[i].degree();
    const long index = order / a.char_center(i).order();
    const bool vanishes = vanishes_off(table[i], a.char_center(i));
    if (d * d > index || (d * d == index) != vanishes) {
      bad.push_back(chi_name(i) + ": chi(1)^2 = " + str(d * d) + ", |G/Z(chi)| = " + str(index) +
                    ", vanishes off Z(chi) " + str(vanishes));
    }
  }
  report.checks.push_back(check("chi(1)^2 <= |G/Z(chi)| with equality iff chi vanishes off Z(chi)",
                                str(static_cast<long>(table.size() - bad.size())) + " agree",
                                str(static_cast<long>(table.size())), bad.empty(), bad));
}

void lemma_abelian_quotient(const Analysis& a, TheoremReport& report) {
  std::vector<std::string> bad;
  int applicable = 0;
  const auto& table = a.table();
  for (int i = 0; i < table.size(); ++i) {
    if (!a.derived().is_subset_of(a.char_center(i))) continue;  // G/Z(chi) is non-abelian
    ++applicable;
    const long d = table[i].degree();
    const long index = a.group()->order() / a.char_center(i).order();
    if (d * d != index) bad.push_back(chi_name(i) + ": chi(1)^2 = " + str(d * d) + ", |G/Z(chi)| = " + str(index));
  }
  report.checks.push_back(check("G/Z(chi) abelian implies chi(1)^2 = |G/Z(chi)|",
                                str(static_cast<long>(applicable - static_cast<int>(bad.size()))) + " of " +
                                    str(static_cast<long>(applicable)) + " applicable characters",
                                str(static_cast<long>(applicable)), bad.empty(), bad));
}

void lemma_kernel_quotient_centre(const Analysis& a, TheoremReport& report) {
  std::vector<std::string> bad;
  const auto& table = a.table();
  for (int i = 0; i < table.size(); ++i) {
    const auto& qd = a.quotient_by(a.kernel(i));
    const Subgroup image = qd.map.image(a.char_center(i));
    const Subgroup centre = center(qd.map.target);
    if (!(image == centre)) {
      bad.push_back(chi_name(i) + ": |Z(chi)/ker chi| = " + str(static_cast<long>(image.order())) +
                    ", |Z(G/ker chi)| = " + str(static_cast<long>(centre.order())));
    }
  }
  report.checks.push_back(check("Z(chi)/ker chi = Z(G/ker chi)",
                                str(static_cast<long>(table.size() - bad.size())) + " agree",
                                str(static_cast<long>(table.size())), bad.empty(), bad));
}

void lemma_quotient_characters(const Analysis& a, TheoremReport& report) {
  const GroupPtr& g = a.group();
  std::vector<Subgroup> family{Subgroup::trivial(g), Subgroup::whole(g), a.center(), a.derived()};
  for (int i = 0; i < a.table().size(); ++i) {
    family.push_back(a.kernel(i));
    family.push_back(a.center_commutator(i));
  }
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());

  std::vector<std::string> bad;
  for (const Subgroup& n : family) {
    const auto& qd = a.quotient_by(n);
    std::set<int> containing;
    for (int i = 0; i < a.table().size(); ++i) {
      if (n.is_subset_of(a.kernel(i))) containing.insert(i);
    }
    std::set<int> lifted;
    bool all_lift = true;
    for (int row : qd.lifted_rows) {
      if (row < 0) all_lift = false;
      else lifted.insert(row);
    }
    bool all_deflate = true;
    for (int i : containing) {
      const auto bar = deflate(a.table()[i], qd.map, qd.table.classes);
      if (!bar || !qd.table.find(*bar)) all_deflate = false;
    }
    if (!all_lift || !all_deflate || lifted != containing) {
      bad.push_back("N = " + a.describe(n) + ": " + str(static_cast<long>(containing.size())) +
                    " characters with N in ker, |Irr(G/N)| = " + str(static_cast<long>(qd.table.size())));
    }
  }
  report.checks.push_back(check("chi in Irr(G/N) iff N is contained in ker chi",
                                str(static_cast<long>(family.size() - bad.size())) + " normal subgroups agree",
                                str(static_cast<long>(family.size())), bad.empty(), bad));
}

void cor_commutator_in_kernel(const Analysis& a, TheoremReport& report) {
  std::vector<std::string> bad;
  for (int i = 0; i < a.table().size(); ++i) {
    if (!a.center_commutator(i).is_subset_of(a.kernel(i))) bad.push_back(chi_name(i));
  }
  report.checks.push_back(check("[Z(chi),G] is contained in ker chi",
                                str(static_cast<long>(a.table().size() - bad.size())) + " agree",
                                str(static_cast<long>(a.table().size())), bad.empty(), bad));
}

void lemma_equal_centres(const Analysis& a, TheoremReport& report) {
  const std::string label = "for nonlinear chi, phi: Z(chi) = Z(phi) iff phi in nl(G/[Z(chi),G])";
  if (!a.is_two_degree_gvz()) {
    report.checks.push_back(skip(label, "needs a GVZ-group with two character degrees"));
    return;
  }
  std::vector<std::string> bad;
  long pairs = 0;
  const auto nl = a.table().nonlinear_indices();
  for (int chi : nl) {
    const auto& qd = a.quotient_by(a.center_commutator(chi));
    std::set<int> from_quotient;
    for (int r : nonlinear_rows(qd)) from_quotient.insert(qd.lifted_rows[r]);
    for (int phi : nl) {
      ++pairs;
      const bool same = a.char_center(chi) == a.char_center(phi);
      if (same != from_quotient.contains(phi)) bad.push_back("(" + chi_name(chi) + ", " + chi_name(phi) + ")");
    }
  }
  report.checks.push_back(check(label, str(pairs - static_cast<long>(bad.size())) + " pairs agree", str(pairs),
                                bad.empty(), bad));
}

void cor_centre_containment(const Analysis& a, TheoremReport& report) {
  const std::string label = "for nonlinear chi and any phi: Z(chi) in Z(phi) iff phi in Irr(G/[Z(chi),G])";
  const auto nl = a.table().nonlinear_indices();
  if (nl.empty()) {
    report.checks.push_back(skip(label, "needs a nonlinear character"));
    return;
  }
  std::vector<std::string> bad;
  long pairs = 0;
  for (int chi : nl) {
    const auto& qd = a.quotient_by(a.center_commutator(chi));
    const std::set<int> from_quotient(qd.lifted_rows.begin(), qd.lifted_rows.end());
    for (int phi = 0; phi < a.table().size(); ++phi) {
      ++pairs;
      const bool contained = a.char_center(chi).is_subset_of(a.char_center(phi));
      if (contained != from_quotient.contains(phi)) bad.push_back("(" + chi_name(chi) + ", " + chi_name(phi) + ")");
    }
  }
  report.checks.push_back(check(label, str(pairs - static_cast<long>(bad.size())) + " pairs agree", str(pairs),
                                bad.empty(), bad));
}

void lemma_single_centre_count(const Analysis& a, TheoremReport& report) {
  const std::string label = "all nonlinear centres equal: #nl(G) = |Z(G)| - |Z(G)/G'|";
  if (!a.is_two_degree_gvz()) {
    report.checks.push_back(skip(label, "needs a GVZ-group with two character degrees"));
    return;
  }
  if (centre_census(a).size() != 1) {
    report.checks.push_back(skip(label, "nonlinear characters have several distinct centres"));
    return;
  }
  const auto count = static_cast<long>(a.table().nonlinear_indices().size());
  const Rational formula = nonlinear_count_formula(a.center(), a.derived());
  report.checks.push_back(check(label, str(count), str(formula), Rational(count) == formula));
}

void lemma_two_degree_counts(const Analysis& a, TheoremReport& report) {
  const std::string degrees_label = "cd(G) = {1, |G/Z(chi)|^(1/2)} for every nonlinear chi";
  const std::string count_label = "#nl(G) = |Z(chi)| - |Z(chi)/G'| for every nonlinear chi";
  if (!a.is_two_degree_gvz()) {
    report.checks.push_back(skip(degrees_label, "needs a GVZ-group with two character degrees"));
    report.checks.push_back(skip(count_label, "needs a GVZ-group with two character degrees"));
    return;
  }
  const auto nl = a.table().nonlinear_indices();
  const auto count = static_cast<long>(nl.size());
  std::vector<std::string> bad_degrees;
  std::vector<std::string> bad_counts;
  for (int chi : nl) {
    const auto root = exact_sqrt(a.group()->order() / a.char_center(chi).order());
    if (!root || a.degrees() != std::vector<int>{1, static_cast<int>(*root)}) {
      bad_degrees.push_back(chi_name(chi) + ": |G/Z(chi)| = " +
                            str(static_cast<long>(a.group()->order() / a.char_center(chi).order())));
    }
    const Rational formula = nonlinear_count_formula(a.char_center(chi), a.derived());
    if (Rational(count) != formula) bad_counts.push_back(chi_name(chi) + ": formula gives " + str(formula));
  }
  const int any = nl.front();
  const auto root = exact_sqrt(a.group()->order() / a.char_center(any).order());
  report.checks.push_back(check(degrees_label, degree_set_string(a.degrees()),
                                "{1, " + (root ? str(*root) : std::string("non-square")) + "}", bad_degrees.empty(),
                                bad_degrees));
  report.checks.push_back(check(count_label, str(count), str(nonlinear_count_formula(a.char_center(any), a.derived())),
                                bad_counts.empty(), bad_counts));
}

void gcp_count_theorem(const Analysis& a, TheoremReport& report) {
  const std::string degrees_label = "(G, Z(G)) GCP: cd(G) = {1, |G/Z(G)|^(1/2)}";
  const std::string count_label = "(G, Z(G)) GCP: #nl(G) = |Z(G)| - |Z(G)/G'|";
  const GcpResult gcp = is_gcp(a, a.center());
  if (!gcp.holds) {
    report.checks.push_back(skip(degrees_label, "(G, Z(G)) is not a generalized Camina pair"));
    report.checks.push_back(skip(count_label, "(G, Z(G)) is not a generalized Camina pair"));
    return;
  }
  const auto root = exact_sqrt(a.center().index());
  std::vector<int> expected{1};
  if (root && *root != 1) expected.push_back(static_cast<int>(*root));
  report.checks.push_back(check(degrees_label, degree_set_string(a.degrees()),
                                root ? degree_set_string(expected) : "non-square index",
                                root && a.degrees() == expected));
  const auto count = static_cast<long>(a.table().nonlinear_indices().size());
  const Rational formula = nonlinear_count_formula(a.center(), a.derived());
  report.checks.push_back(check(count_label, str(count), str(formula), Rational(count) == formula));
}

}  // namespace

TheoremReport verify_lemma_suite(const Analysis& a) {
  TheoremReport report{"lemmas", a.group_id(), {}};
  lemma_linear_iff(a, report);
  lemma_quotient_centre(a, report);
  lemma_restriction(a, report, false);
  lemma_restriction(a, report, true);
  lemma_degree_bound(a, report);
  lemma_abelian_quotient(a, report);
  lemma_kernel_quotient_centre(a, report);
  lemma_quotient_characters(a, report);
  cor_commutator_in_kernel(a, report);
  lemma_equal_centres(a, report);
  cor_centre_containment(a, report);
  lemma_single_centre_count(a, report);
  lemma_two_degree_counts(a, report);
  gcp_count_theorem(a, report);
  return report;
}

// ---------------------------------------------------------------------------

TheoremReport verify_prop_2_11(const Analysis& a) {
  const int order = a.group()->order();
  int prime = 0;
  for (int p = 2; static_cast<long>(p) * p * p * p <= order; ++p) {
    if (static_cast<long>(p) * p * p * p == order) prime = p;
  }
  bool is_prime = prime > 1;
  for (int d = 2; is_prime && d * d <= prime; ++d) is_prime = prime % d != 0;
  if (!is_prime) {
    throw HypothesisError("hypothesis not met: |G| = " + std::to_string(order) + " is not p^4 for a prime p");
  }
  if (!a.nonabelian()) throw HypothesisError("hypothesis not met: the group is abelian");

  TheoremReport report{"prop2.11", a.group_id(), {}};
  const GcpResult gcp = is_gcp(a, a.center());
  const auto cls = nilpotency_class(a.group());
  report.checks.push_back(info("|G| = p^4", str(static_cast<long>(order)), "p = " + std::to_string(prime)));
  Check gcp_line = info("(G, Z(G)) is a generalized Camina pair", str(gcp.holds));
  if (gcp.witness) gcp_line.witnesses.push_back(*gcp.witness);
  report.checks.push_back(std::move(gcp_line));
  report.checks.push_back(info("nilpotency class", cls ? str(static_cast<long>(*cls)) : "not nilpotent"));
  const bool class_two = cls && *cls == 2;
  report.checks.push_back(check("(G, Z(G)) is GCP iff the nilpotency class is 2", str(gcp.holds), str(class_two),
                                gcp.holds == class_two));
  return report;
}

TheoremReport verify_centres(const Analysis& a, const std::optional<std::vector<Subgroup>>& listed) {
  const auto census = centre_census(a);
  TheoremReport report{"centres", a.group_id(), {}};
  long total = 0;
  for (const auto& entry : census) {
    total += static_cast<long>(entry.characters.size());
    report.checks.push_back(info("centre " + a.describe(entry.centre),
                                 str(static_cast<long>(entry.characters.size())) + " nonlinear characters"));
  }
  const auto nl = static_cast<long>(a.table().nonlinear_indices().size());
  report.checks.push_back(check("census total = #nl(G)", str(total), str(nl), total == nl));

  if (a.is_two_degree_gvz()) {
    for (const auto& entry : census) {
      const FiberCount fc = fiber_count(a, entry.characters.front());
      report.checks.push_back(check("fiber count formula at centre " + a.describe(entry.centre),
                                    str(static_cast<long>(fc.count)), str(fc.formula), fc.agrees));
    }
    const Rational t = nonlinear_count_formula(census.front().centre, a.derived());
    report.checks.push_back(check("census total = |Z(chi)| - |Z(chi)/G'|", str(total), str(t), Rational(total) == t));
  } else {
    report.checks.push_back(skip("fiber count formula per centre", "needs a GVZ-group with two character degrees"));
  }

  if (listed) {
    std::set<std::vector<Element>> listed_members;
    for (const Subgroup& s : *listed) {
      listed_members.insert(s.members());
      const auto it = std::find_if(census.begin(), census.end(),
                                   [&](const CentreCount& c) { return c.centre == s; });
      const long count = it == census.end() ? 0 : static_cast<long>(it->characters.size());
      report.checks.push_back(check("listed centre " + a.describe(s) + " occurs",
                                    it == census.end() ? "absent" : "present, " + str(count) + " characters",
                                    "present", it != census.end()));
    }
    Check extras = info("computed centres outside the listed family", "0");
    long outside = 0;
    for (const auto& entry : census) {
      if (listed_members.contains(entry.centre.members())) continue;
      ++outside;
      extras.witnesses.push_back(a.describe(entry.centre) + " with " +
                                 str(static_cast<long>(entry.characters.size())) + " characters");
    }
    extras.lhs = str(outside);
    extras.rhs = outside == 0 ? "the listed family is complete" : "the listed family is incomplete";
    report.checks.push_back(std::move(extras));
  }
  return report;
}

}  // namespace gvz
