#include <random>
#include <sstream>

#include "doctest.h"
#include "gvz/errors.hpp"
#include "support.hpp"

using namespace gvz;
using testing::from_cycles;

TEST_SUITE("group enumeration") {
  TEST_CASE("permutation closure matches a naive fixed-point closure") {
    struct Case {
      int degree;
      std::vector<std::vector<std::vector<int>>> gens;
      std::size_t expected;
    };
    const std::vector<Case> cases{
        {3, {{{1, 2, 3}}, {{1, 2}}}, 6},
        {1, {}, 1},
        {9, {{{1, 2, 3}}, {{4, 5, 6}}, {{7, 8, 9}}, {{1, 4, 7}, {2, 5, 8}, {3, 6, 9}}}, 81},
        {4, {{{1, 2, 3, 4}}, {{1, 2}}}, 24},
    };
    for (const auto& c : cases) {
      std::vector<Permutation> gens;
      std::vector<testing::Perm> raw;
      for (const auto& cycles : c.gens) {
        gens.push_back(permutation_from_cycles(c.degree, cycles));
        raw.push_back(from_cycles(c.degree, cycles));
      }
      const auto g = enumerate_from_permutations(c.degree, gens);
      const auto oracle = testing::naive_closure(c.degree, raw);
      CHECK(oracle.size() == c.expected);
      REQUIRE(g->order() == static_cast<int>(oracle.size()));
      std::set<testing::Perm> labels;
      for (int x = 0; x < g->order(); ++x) labels.insert(g->label(x));
      CHECK(labels == oracle);
    }
  }

  TEST_CASE("identity comes first and every element has a unique inverse") {
    for (const auto& [name, g] : testing::zoo()) {
      CAPTURE(name);
      for (int x = 0; x < g->order(); ++x) {
        CHECK(g->multiply(0, x) == x);
        CHECK(g->multiply(x, 0) == x);
        CHECK(g->multiply(x, g->inverse(x)) == 0);
        CHECK(g->multiply(g->inverse(x), x) == 0);
      }
      std::set<int> inverses;
      for (int x = 0; x < g->order(); ++x) inverses.insert(g->inverse(x));
      CHECK(static_cast<int>(inverses.size()) == g->order());
    }
  }

  TEST_CASE("multiplication is closed and associative") {
    std::mt19937 rng(20240601);
    for (const auto& [name, g] : testing::zoo()) {
      CAPTURE(name);
      const int n = g->order();
      if (n <= 200) {
        for (int a = 0; a < n; ++a) {
          for (int b = 0; b < n; ++b) {
            const int ab = g->multiply(a, b);
            REQUIRE(ab >= 0);
            REQUIRE(ab < n);
            for (int c = 0; c < n; ++c) {
              REQUIRE(g->multiply(ab, c) == g->multiply(a, g->multiply(b, c)));
            }
          }
        }
      } else {
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int t = 0; t < 100000; ++t) {
          const int a = pick(rng), b = pick(rng), c = pick(rng);
          REQUIRE(g->multiply(g->multiply(a, b), c) == g->multiply(a, g->multiply(b, c)));
        }
      }
    }
  }

  TEST_CASE("exponent kills every element and is the lcm of element orders") {
    for (const auto& [name, g] : testing::zoo()) {
      CAPTURE(name);
      int lcm = 1;
      for (int x = 0; x < g->order(); ++x) {
        int order = 1;
        for (int y = x; y != 0; y = g->multiply(y, x)) ++order;
        if (x == 0) order = 1;
        CHECK(g->element_order(x) == order);
        lcm = std::lcm(lcm, order);
        CHECK(g->power(x, g->exponent()) == 0);
      }
      CHECK(g->exponent() == lcm);
    }
  }

  TEST_CASE("large groups multiply through the representation without a dense table") {
    const auto g = gn(3, 2, EnumerationOptions{1'000'000, 100});
    CHECK_FALSE(g->has_dense_table());
    const auto dense = gn(3, 2);
    CHECK(dense->has_dense_table());
    for (int a = 0; a < g->order(); a += 7) {
      for (int b = 0; b < g->order(); b += 5) {
        CHECK(g->label(g->multiply(a, b)) == dense->label(dense->multiply(*dense->find(g->label(a)),
                                                                          *dense->find(g->label(b)))));
      }
    }
  }

  TEST_CASE("enumeration errors") {
    const auto s3 = std::vector<Permutation>{permutation_from_cycles(3, {{1, 2, 3}}), permutation_from_cycles(3, {{1, 2}})};
    CHECK_THROWS_AS(enumerate_from_permutations(3, s3, EnumerationOptions{5, 4096}), ResourceError);
    CHECK_THROWS_AS(enumerate_from_permutations(3, {Permutation{0, 0, 1}}), InputError);
    CHECK_THROWS_AS(permutation_from_cycles(3, {{1, 4}}), InputError);
    CHECK_THROWS_AS(permutation_from_cycles(3, {{1, 2}, {2, 3}}), InputError);
  }

  TEST_CASE("words name elements by generator products") {
    const auto g = named("heis3");
    CHECK(g->word(0) == "1");
    for (int x = 0; x < g->order(); ++x) {
      Element y = 0;
      if (g->word(x) != "1") {
        std::stringstream ss(g->word(x));
        std::string name;
        while (std::getline(ss, name, '*')) {
          const auto& names = g->generator_names();
          const auto it = std::find(names.begin(), names.end(), name);
          REQUIRE(it != names.end());
          y = g->multiply(y, g->generators()[static_cast<std::size_t>(it - names.begin())]);
        }
      }
      CHECK(y == x);
    }
  }
}

TEST_SUITE("conjugacy and subgroups") {
  TEST_CASE("class partitions agree with brute-force conjugation") {
    for (const auto& [name, g] : testing::zoo()) {
      CAPTURE(name);
      const auto cc = conjugacy_classes(g);
      CHECK(cc.members[0] == std::vector<Element>{0});
      std::multiset<int> sizes;
      int total = 0;
      for (int c = 0; c < cc.count(); ++c) {
        sizes.insert(cc.size(c));
        total += cc.size(c);
        for (int x : cc.members[c]) CHECK(cc.class_of[x] == c);
        CHECK(cc.members[c] == testing::brute_class(g, cc.representatives[c]));
      }
      CHECK(total == g->order());
      CHECK(sizes == testing::brute_class_sizes(g));
      for (int x = 0; x < g->order(); ++x) {
        CHECK(centralizer(g, x).order() * cc.size(cc.class_of[x]) == g->order());
      }
    }
  }

  TEST_CASE("class counts of small groups") {
    const auto s3 = conjugacy_classes(named("s3"));
    CHECK(s3.count() == 3);
    std::multiset<int> s3_sizes;
    for (int c = 0; c < s3.count(); ++c) s3_sizes.insert(s3.size(c));
    CHECK(s3_sizes == std::multiset<int>{1, 2, 3});

    const auto h = conjugacy_classes(named("heis3"));
    CHECK(h.count() == 11);
    int singletons = 0, triples = 0;
    for (int c = 0; c < h.count(); ++c) {
      singletons += h.size(c) == 1;
      triples += h.size(c) == 3;
    }
    CHECK(singletons == 3);
    CHECK(triples == 8);

    const auto c6 = conjugacy_classes(cyclic(6));
    CHECK(c6.count() == 6);
  }

  TEST_CASE("centre matches a full commutation scan and the generator centralizers") {
    for (const auto& [name, g] : testing::zoo()) {
      CAPTURE(name);
      const Subgroup z = center(g);
      CHECK(z.members() == testing::brute_center(g));
      Subgroup meet = Subgroup::whole(g);
      for (Element s : g->generators()) meet = intersection(meet, centralizer(g, s));
      CHECK(meet == z);
      if (g->is_abelian()) CHECK(z.order() == g->order());
    }
    CHECK(center(named("s3")).is_trivial());
    const auto h = named("heis3");
    CHECK(center(h) == generated_by(h, std::vector<Element>{h->generators()[2]}));
  }

  TEST_CASE("centralizers") {
    const auto s3 = named("s3");
    CHECK(centralizer(s3, 0).order() == 6);
    const Element transposition = s3->generators()[1];
    CHECK(centralizer(s3, transposition).order() == 2);
    const auto h = named("heis3");
    const auto z = center(h);
    for (int x = 0; x < h->order(); ++x) CHECK(centralizer(h, x).order() == (z.contains(x) ? 27 : 9));
  }

  TEST_CASE("commutator subgroups agree with brute-force generation") {
    for (const auto& [name, g] : testing::zoo()) {
      CAPTURE(name);
      const Subgroup d = derived_subgroup(g);
      CHECK(d.members() == testing::brute_derived(g));
      CHECK(is_normal(g, d));
      CHECK(g->order() % d.order() == 0);
      const auto q = quotient(g, d);
      CHECK(q.target->is_abelian());
      const Subgroup zg = commutator_subgroup(center(g), Subgroup::whole(g));
      CHECK(zg.is_trivial());
    }
    CHECK(derived_subgroup(cyclic(6)).is_trivial());
    const auto h = named("heis3");
    CHECK(derived_subgroup(h) == center(h));
    CHECK_THROWS_AS(commutator_subgroup(center(h), Subgroup::whole(named("s3"))), InputError);
  }

  TEST_CASE("subgroup construction checks closure and Lagrange") {
    const auto s3 = named("s3");
    CHECK_THROWS_AS(Subgroup(s3, {0, s3->generators()[0]}), InputError);
    for (const auto& [name, g] : testing::zoo()) {
      for (Element x = 0; x < g->order(); x += std::max(1, g->order() / 10)) {
        const Subgroup c = generated_by(g, std::vector<Element>{x});
        CHECK(c.order() == g->element_order(x));
        CHECK(g->order() % c.order() == 0);
      }
    }
  }

  TEST_CASE("normality with a witness") {
    const auto s3 = named("s3");
    const Subgroup t = generated_by(s3, std::vector<Element>{s3->generators()[1]});
    CHECK_FALSE(is_normal(s3, t));
    const auto w = normality_witness(s3, t);
    REQUIRE(w.has_value());
    CHECK_FALSE(t.contains(s3->conjugate(w->second, w->first)));
    CHECK(is_normal(s3, derived_subgroup(s3)));
  }

  TEST_CASE("cosets") {
    const auto s3 = named("s3");
    const auto a3 = derived_subgroup(s3);
    const auto c = coset(s3, s3->generators()[1], a3);
    CHECK(c.size() == 3);
    for (Element x : c) CHECK_FALSE(a3.contains(x));
    CHECK(coset(s3, 0, a3) == a3.members());
  }

  TEST_CASE("nilpotency class against a brute-force lower central series") {
    for (const auto& [name, g] : testing::zoo()) {
      CAPTURE(name);
      const int expected = testing::brute_nilpotency_class(g);
      const auto cls = nilpotency_class(g);
      if (expected < 0) {
        CHECK_FALSE(cls.has_value());
      } else {
        REQUIRE(cls.has_value());
        CHECK(*cls == expected);
      }
    }
    CHECK(*nilpotency_class(cyclic(5)) == 1);
    CHECK(*nilpotency_class(named("heis3")) == 2);
    CHECK(*nilpotency_class(named("c3wrc3")) == 3);
    CHECK_FALSE(nilpotency_class(named("s3")).has_value());
    CHECK_FALSE(nilpotency_class(named("d5")).has_value());
  }
}

TEST_SUITE("quotients") {
  TEST_CASE("projection is a surjective homomorphism with the right fibre") {
    std::mt19937 rng(7);
    for (const auto& [name, g] : testing::zoo()) {
      CAPTURE(name);
      std::vector<Subgroup> normals{Subgroup::trivial(g), Subgroup::whole(g), center(g), derived_subgroup(g)};
      for (const auto& n : normals) {
        const auto q = quotient(g, n);
        CHECK(q.target->order() * n.order() == g->order());
        std::vector<Element> fibre;
        std::set<Element> image;
        for (int x = 0; x < g->order(); ++x) {
          if (q.projection[x] == 0) fibre.push_back(x);
          image.insert(q.projection[x]);
        }
        CHECK(fibre == n.members());
        CHECK(static_cast<int>(image.size()) == q.target->order());
        if (g->order() <= 300) {
          for (int x = 0; x < g->order(); ++x) {
            for (int y = 0; y < g->order(); ++y) {
              REQUIRE(q.projection[g->multiply(x, y)] == q.target->multiply(q.projection[x], q.projection[y]));
            }
          }
        } else {
          std::uniform_int_distribution<int> pick(0, g->order() - 1);
          for (int t = 0; t < 20000; ++t) {
            const int x = pick(rng), y = pick(rng);
            REQUIRE(q.projection[g->multiply(x, y)] == q.target->multiply(q.projection[x], q.projection[y]));
          }
        }
      }
    }
  }

  TEST_CASE("quotient of the rank-two family by one central generator") {
    const auto g = gn(3, 2);
    const Element b1 = g->generators()[3];
    const auto q = quotient(g, generated_by(g, std::vector<Element>{b1}));
    CHECK(q.target->order() == 81);
    CHECK(center(q.target).order() == 9);
    // The centre of the quotient is the image of <a1, b1, b2>.
    const Subgroup k = generated_by(g, std::vector<Element>{g->generators()[1], b1, g->generators()[4]});
    CHECK(q.image(k) == center(q.target));
    CHECK(q.preimage(center(q.target)) == k);
  }

  TEST_CASE("non-normal kernel is rejected") {
    const auto s3 = named("s3");
    const Subgroup t = generated_by(s3, std::vector<Element>{s3->generators()[1]});
    CHECK_THROWS_AS(quotient(s3, t), InputError);
  }

  TEST_CASE("trivial kernel gives a bijective projection") {
    const auto g = named("d4");
    const auto q = quotient(g, Subgroup::trivial(g));
    std::set<Element> image(q.projection.begin(), q.projection.end());
    CHECK(image.size() == 8);
  }

  TEST_CASE("subgroups as groups keep their multiplication") {
    const auto g = gn(3, 2);
    const auto d = derived_subgroup(g);
    const auto e = as_group(Subgroup::whole(g));
    CHECK(e.group->order() == 243);
    const auto z = as_group(center(g));
    CHECK(z.group->order() == d.order());
    for (int x = 0; x < z.group->order(); ++x) {
      CHECK(z.from_parent[z.to_parent[x]] == x);
      for (int y = 0; y < z.group->order(); ++y) {
        CHECK(z.to_parent[z.group->multiply(x, y)] == g->multiply(z.to_parent[x], z.to_parent[y]));
      }
    }
  }
}
