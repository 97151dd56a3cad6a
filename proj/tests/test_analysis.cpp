#include "doctest.h"
#include "gvz/analysis.hpp"
#include "gvz/errors.hpp"
#include "support.hpp"

using namespace gvz;

namespace {

GroupPtr s4() {
  return enumerate_from_permutations(4, {permutation_from_cycles(4, {{1, 2, 3, 4}}),
                                         permutation_from_cycles(4, {{1, 2}})});
}

/// Every irreducible vanishes off its numerically computed centre.
bool numeric_gvz(const CharacterTable& t) {
  for (const auto& chi : t.irreducibles) {
    if (!testing::numeric_vanishes_off(chi, testing::numeric_centre(chi))) return false;
  }
  return true;
}

/// (G, N) is a Camina pair iff every g outside N has class gG'; checked by full conjugation.
bool brute_gcp(const GroupPtr& g, const std::vector<Element>& n) {
  const std::set<Element> in(n.begin(), n.end());
  const auto derived = testing::brute_derived(g);
  for (int x = 0; x < g->order(); ++x) {
    if (in.contains(x)) continue;
    std::set<Element> coset;
    for (int d : derived) coset.insert(g->multiply(x, d));
    const auto cls = testing::brute_class(g, x);
    if (std::set<Element>(cls.begin(), cls.end()) != coset) return false;
  }
  return true;
}

Subgroup brute_subgroup(const GroupPtr& g, const std::vector<Element>& members) {
  return generated_by(g, members);
}

}  // namespace

TEST_SUITE("analysis") {
  TEST_CASE("GVZ verdicts") {
    for (std::string name : {"heis3", "heis5", "d4", "q8", "phi4_15_p3"}) {
      CAPTURE(name);
      const auto r = is_gvz(character_table(named(name)), name);
      CHECK(r.is_gvz);
      CHECK(r.criteria_agree());
      CHECK_FALSE(r.witness.has_value());
    }
    const auto s3 = is_gvz(character_table(named("s3")), "s3");
    CHECK_FALSE(s3.is_gvz);
    REQUIRE(s3.witness.has_value());
    CHECK(s3.witness->find("4") != std::string::npos);
    CHECK(s3.witness->find("6") != std::string::npos);
    CHECK(s3.degree_set == std::vector<int>{1, 2});
    CHECK_THROWS_AS(is_gvz(character_table(cyclic(6))), HypothesisError);
  }

  TEST_CASE("GVZ verdicts match the numerical oracle") {
    auto groups = testing::nonabelian_zoo();
    groups.push_back({"s4", s4()});
    groups.push_back({"d4xc2", direct_product(named("d4"), cyclic(2))});
    for (const auto& [name, g] : groups) {
      CAPTURE(name);
      const auto t = character_table(g);
      const auto r = is_gvz(t, name);
      CHECK(r.is_gvz == numeric_gvz(t));
      CHECK(r.criteria_agree());
      for (const auto& rec : r.characters) {
        CHECK(rec.degree_square_is_index == rec.vanishes_off_center);
        CHECK(rec.center_order == static_cast<int>(testing::numeric_centre(t[rec.index]).size()));
      }
    }
  }

  TEST_CASE("Camina pairs against a brute-force class oracle") {
    auto groups = testing::nonabelian_zoo();
    groups.push_back({"s4", s4()});
    for (const auto& [name, g] : groups) {
      CAPTURE(name);
      const auto t = character_table(g);
      const Analysis a(t, name);
      std::vector<Subgroup> normals{center(g), derived_subgroup(g), Subgroup::whole(g)};
      for (int i = 0; i < t.size(); ++i) normals.push_back(a.kernel(i));
      for (const auto& n : normals) {
        const auto r = is_gcp(a, n);
        CHECK(r.holds == brute_gcp(g, n.members()));
        CHECK(r.vanishing_criterion == r.class_criterion);
        CHECK(r.holds != r.witness.has_value());
      }
    }
    const auto heis3 = named("heis3");
    CHECK(is_gcp(character_table(heis3), center(heis3)).holds);
    const auto s3 = named("s3");
    CHECK(is_gcp(character_table(s3), derived_subgroup(s3)).holds);
    const auto wreath = named("c3wrc3");
    CHECK_FALSE(is_gcp(character_table(wreath), center(wreath)).holds);
    CHECK_THROWS_AS(is_gcp(character_table(s3), center(named("s3"))), InputError);
    const Subgroup not_normal = brute_subgroup(s3, {s3->generators()[1]});
    CHECK_THROWS_AS(is_gcp(character_table(s3), not_normal), InputError);
  }

  TEST_CASE("fibre counts, Irr_* and induced constituents") {
    const std::map<std::string, std::pair<int, int>> expected{
        {"heis3", {2, 2}}, {"heis5", {4, 4}}, {"phi4_15_p3", {6, 6}}};
    for (const auto& [name, counts] : expected) {
      CAPTURE(name);
      const auto g = named(name);
      const auto t = character_table(g);
      const Analysis a(t, name);
      REQUIRE(a.is_two_degree_gvz());
      for (int i : t.nonlinear_indices()) {
        const auto f = fiber_count(a, i);
        CHECK(f.hypothesis_met);
        CHECK(f.agrees);
        CHECK(f.count == counts.first);
        const auto star = irr_star(a, i);
        CHECK(static_cast<int>(star.members.size()) == counts.second);
        CHECK(star.derived_in_centre);
        const long root = *exact_sqrt(star.centre.index());
        for (int l : star.members) {
          const auto c = unique_nonlinear_constituent(a, star, l);
          CHECK(c.multiplicity == c.expected_multiplicity);
          CHECK(c.multiplicity == Rational(root));
          CHECK(c.value_formula_holds);
          CHECK(c.centre_matches);
          CHECK(t[c.theta].degree() == root);
        }
      }
      for (int i : t.linear_indices()) CHECK(irr_star(a, i).members.empty());
    }
    const Analysis not_gvz(character_table(named("s3")));
    CHECK_THROWS_AS(irr_star(not_gvz, not_gvz.table().nonlinear_indices().front()), HypothesisError);
  }

  TEST_CASE("class condition matches conjugation by every element") {
    for (std::string name : {"heis3", "d4", "q8", "phi4_15_p3", "s3", "c3wrc3"}) {
      CAPTURE(name);
      const auto g = named(name);
      const auto t = character_table(g);
      const Analysis a(t, name);
      for (int i : t.nonlinear_indices()) {
        const auto comm = testing::brute_commutator(g, testing::numeric_centre(t[i]), testing::all_elements(g));
        for (int x = 0; x < g->order(); ++x) {
          std::set<Element> coset;
          for (int c : comm) coset.insert(g->multiply(x, c));
          const auto cls = testing::brute_class(g, x);
          CHECK(class_condition(a, i, x) == (coset == std::set<Element>(cls.begin(), cls.end())));
        }
      }
    }
  }

  TEST_CASE("character centre census") {
    const auto g = gn(3, 2);
    const Analysis a(character_table(g), "gn(3,2)");
    const auto census = centre_census(a);
    CHECK(census.size() == 4);
    std::size_t total = 0;
    for (const auto& c : census) {
      CHECK(c.characters.size() == 6);
      CHECK(c.centre.order() == 27);
      total += c.characters.size();
    }
    CHECK(total == a.table().nonlinear_indices().size());
    for (const auto& listed : gn_listed_centres(g, 2)) {
      CHECK(std::any_of(census.begin(), census.end(),
                        [&](const CentreCount& c) { return c.centre.members() == listed.members(); }));
    }
    const Analysis heis(character_table(named("heis3")));
    const auto one = centre_census(heis);
    REQUIRE(one.size() == 1);
    CHECK(one[0].centre.members() == center(heis.group()).members());
    CHECK_THROWS_AS(centre_census(Analysis(character_table(cyclic(4)))), HypothesisError);
  }

  TEST_CASE("verifiers pass or report an unmet hypothesis across the zoo") {
    auto groups = testing::nonabelian_zoo();
    groups.push_back({"s4", s4()});
    groups.push_back({"d4xc2", direct_product(named("d4"), cyclic(2))});
    for (const auto& [name, g] : groups) {
      CAPTURE(name);
      const Analysis a(character_table(g), name);
      for (auto verify : {verify_thm_1_1, verify_thm_1_2, verify_lemma_suite, verify_prop_2_11}) {
        try {
          const auto r = verify(a);
          CHECK(r.passed());
          CHECK(r.count(Check::Status::Fail) == 0);
        } catch (const HypothesisError&) {
        }
      }
      CHECK(verify_centres(a).passed());
      CHECK(verify_lemma_suite(a).count(Check::Status::Pass) > 0);
    }
  }

  TEST_CASE("verifier hypotheses") {
    const Analysis sym4(character_table(s4()));
    CHECK(sym4.degrees() == std::vector<int>{1, 2, 3});
    CHECK_THROWS_AS(verify_thm_1_2(sym4), HypothesisError);
    CHECK_THROWS_AS(verify_thm_1_1(sym4), HypothesisError);
    CHECK_THROWS_AS(verify_prop_2_11(Analysis(character_table(gn(3, 1)))), HypothesisError);
    CHECK_THROWS_AS(verify_prop_2_11(Analysis(character_table(elementary_abelian(3, 4)))), HypothesisError);
    const auto r = verify_prop_2_11(Analysis(character_table(direct_product(named("d4"), cyclic(2)))));
    CHECK(r.passed());
    const auto s3 = verify_thm_1_2(Analysis(character_table(named("s3"))));
    CHECK(s3.passed());
  }

  TEST_CASE("listed centres versus computed centres for G_n") {
    const auto g = gn(3, 2);
    const Analysis a(character_table(g));
    const auto r = verify_centres(a, gn_listed_centres(g, 2));
    CHECK(r.passed());
    bool reported_extras = false;
    for (const auto& c : r.checks) {
      if (c.label.find("outside the listed family") != std::string::npos) {
        reported_extras = true;
        CHECK(c.witnesses.size() == 2);
      }
    }
    CHECK(reported_extras);
  }

  TEST_CASE("exact square roots") {
    CHECK(exact_sqrt(0) == 0);
    CHECK(exact_sqrt(1) == 1);
    CHECK(exact_sqrt(81) == 9);
    CHECK_FALSE(exact_sqrt(80).has_value());
    CHECK_FALSE(exact_sqrt(-4).has_value());
    for (long k = 0; k < 2000; ++k) CHECK(exact_sqrt(k * k) == k);
  }
}
