#include <catch_amalgamated.hpp>

#include "retword/error.hpp"
#include "retword/fingroup.hpp"

using namespace retword;

namespace {
  alphabet const abc({"a", "b", "c"});
}

TEST_CASE("permutations compose as functions", "[fingroup]") {
  auto p = finite_element::permutation({1, 2, 0});  // (1 2 3)
  auto q = finite_element::permutation({1, 0, 2});  // (1 2)
  CHECK(p.render() == "(1 2 3)");
  CHECK(q.render() == "(1 2)");
  // (p q)(x) = p(q(x)): 1 -> 2 -> 3, 2 -> 1 -> 2, 3 -> 3 -> 1.
  CHECK((p * q).render() == "(1 3)");
  CHECK((q * p).render() == "(2 3)");
  CHECK((p * p * p).is_identity());
  CHECK((p * p.inverse()).is_identity());
  CHECK(finite_element::identity(backend::permutation, 3, 0).render() == "id");
}

TEST_CASE("modular vectors", "[fingroup]") {
  auto x = finite_element::modular({1, 2}, 3);
  auto y = finite_element::modular({2, 2}, 3);
  CHECK((x * y).render() == "[0,1]");
  CHECK((x * x.inverse()).is_identity());
}

TEST_CASE("parsing morphisms", "[fingroup]") {
  auto phi = parse_finite_morphism("perm: a -> (1 2 3); b -> (1 2); c -> (1 2 3)", abc);
  CHECK(phi.kind() == backend::permutation);
  CHECK(phi.evaluate(parse_group_word("ab", abc)).render() == "(1 3)");
  CHECK(phi.evaluate(parse_group_word("aa'", abc)).is_identity());
  CHECK(target_group(phi).size() == 6);

  auto triv = parse_finite_morphism("perm: a -> id; b -> ; c -> id", abc);
  CHECK(target_group(triv).size() == 1);

  auto ab2 = parse_finite_morphism("mod 2: a -> [1,0,0]; b -> [0,1,0]; c -> [0,0,1]", abc);
  CHECK(target_group(ab2).size() == 8);
  CHECK(finite_morphism::abelian_mod(abc, 2).evaluate(parse_group_word("abc", abc))
        == ab2.evaluate(parse_group_word("abc", abc)));

  CHECK_THROWS_AS(parse_finite_morphism("perm: a -> (1 2)", abc), error);
  CHECK_THROWS_AS(parse_finite_morphism("foo: a -> (1 2)", abc), error);
}

TEST_CASE("closures and conjugacy of subgroups", "[fingroup]") {
  auto phi = parse_finite_morphism("perm: a -> (1 2 3); b -> (1 2); c -> (1 2 3)", abc);
  auto s3  = target_group(phi);
  auto t   = closure({finite_element::permutation({0, 2, 1})}, phi.identity());
  CHECK(t.size() == 2);
  CHECK(render_subgroup(t) == "{id, (2 3)}");
  auto u = closure({finite_element::permutation({1, 0, 2})}, phi.identity());
  CHECK(conjugate_subgroups(t, u, s3));
  auto a3 = closure({finite_element::permutation({1, 2, 0})}, phi.identity());
  CHECK_FALSE(conjugate_subgroups(t, a3, s3));
  CHECK(is_full(s3, phi));
  CHECK_FALSE(is_full(t, phi));
  CHECK_THROWS_AS(closure({finite_element::permutation({1, 2, 3, 4, 5, 6, 7, 8, 0}),
                           finite_element::permutation({1, 0, 2, 3, 4, 5, 6, 7, 8})},
                          finite_element::identity(backend::permutation, 9, 0), 1000),
                  error);
}
