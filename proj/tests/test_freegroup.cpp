#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "retword/error.hpp"
#include "retword/freegroup.hpp"

using namespace retword;

namespace {
  alphabet const abc({"a", "b", "c"});

  group_word g(std::string const& text) {
    return parse_group_word(text, abc);
  }

  core_graph sub(std::vector<std::string> const& gens) {
    std::vector<group_word> ws;
    for (auto const& t : gens) {
      ws.push_back(g(t));
    }
    return core_graph(abc.size(), ws);
  }
}  // namespace

TEST_CASE("free reduction and rendering", "[freegroup]") {
  CHECK(g("abb'a'").empty());
  CHECK(g("ab'").render(abc) == "ab'");
  CHECK((g("ab") * g("b'c")).render(abc) == "ac");
  CHECK(g("abc").inverse().render(abc) == "c'b'a'");
  CHECK(g("b").conjugate(g("a")).render(abc) == "a'ba");
  CHECK(g("abc").is_positive());
  CHECK_FALSE(g("ab'").is_positive());
  CHECK_THROWS_AS(g("ad"), error);
}

TEST_CASE("morphisms of free groups", "[freegroup]") {
  free_morphism phi(abc, abc, {g("ab"), g("ac"), g("a")});
  CHECK(phi(g("a'b")).render(abc) == "b'c");
}

TEST_CASE("core graphs", "[freegroup]") {
  auto h = sub({"baa", "ba", "baca"});
  CHECK(h.rank() == 3);
  CHECK(h.is_full());
  CHECK(subgroup_equal(h, core_graph::full(3)));

  auto k = sub({"aa", "ab", "ac", "ba", "ca"});
  CHECK(k.contains(g("bb")));
  CHECK(k.contains(g("bc'")));
  CHECK_FALSE(k.contains(g("a")));
  CHECK(k.is_finite_index());
  CHECK(k.vertex_count() == 2);
  CHECK(k.rank() == 5);
  CHECK_FALSE(sub({"aa", "ab", "ba"}).is_finite_index());

  auto single = sub({"abab'"});
  CHECK(single.rank() == 1);
  CHECK(single.vertex_count() == 4);
  CHECK(sub({}).vertex_count() == 1);
  CHECK(sub({}).rank() == 0);
}

TEST_CASE("generators regenerate the subgroup", "[freegroup]") {
  for (auto gens : std::vector<std::vector<std::string>>{
           {"aab", "ba'c", "cc"}, {"abc", "bca"}, {"a'b'ab"}, {"aabaab", "bb"}}) {
    auto h = sub(gens);
    CHECK(core_graph(abc.size(), h.generators()) == h);
    CHECK(h.generators().size() == h.rank());
  }
}

TEST_CASE("subgroup order and conjugacy", "[freegroup]") {
  auto h = sub({"ab"});
  auto k = sub({"ba"});
  CHECK(is_conjugate(h, k));
  CHECK_FALSE(subgroup_equal(h, k));
  CHECK(subgroup_leq(sub({"abab"}), h));
  CHECK(is_proper(sub({"abab"}), h));
  CHECK_FALSE(is_conjugate(sub({"ab"}), sub({"abab"})));
  CHECK(is_conjugate(sub({"a", "bcb'"}), sub({"b'ab", "c"})));
}

TEST_CASE("images and injectivity", "[freegroup]") {
  free_morphism phi(abc, abc, {g("ab"), g("ab"), g("c")});
  auto          h = sub({"a", "b"});
  CHECK(morphism_image(phi, h).rank() == 1);
  CHECK_FALSE(injective_on(phi, h));
  CHECK(injective_on(phi, sub({"a", "c"})));
}

TEST_CASE("the non-free family of return words", "[freegroup]") {
  alphabet abcd({"a", "b", "c", "d"});
  auto     lhs = parse_group_word("baa", abcd).inverse() * parse_group_word("baaca", abcd);
  auto     rhs = parse_group_word("badacd", abcd).inverse() * parse_group_word("badacdca", abcd);
  CHECK(lhs == rhs);
  CHECK((lhs * rhs.inverse()).empty());
  CHECK(lhs.render(abcd) == "ca");
}

TEST_CASE("membership agrees with naive folding", "[freegroup]") {
  std::vector<std::vector<std::string>> families{
      {"aB", "ba", "cc"}, {"abc", "Bca", "aa"}, {"ab", "ba"}, {"aab", "bAc"}};
  std::vector<std::string> letters{"a", "b", "c", "A", "B", "C"};
  for (auto const& gens : families) {
    std::vector<std::string> lib;
    for (auto const& x : gens) {
      lib.push_back(oracle::to_library(x));
    }
    auto               h = sub(lib);
    oracle::naive_graph naive(gens);
    std::vector<std::string> words{""};
    for (int len = 0; len < 4; ++len) {
      std::vector<std::string> next;
      for (auto const& w : words) {
        for (auto const& l : letters) {
          next.push_back(w + l);
        }
      }
      for (auto const& w : next) {
        CHECK(h.contains(g(oracle::to_library(w))) == naive.contains(w));
      }
      words = std::move(next);
    }
  }
}

TEST_CASE("abelianization", "[freegroup]") {
  CHECK(abelianize(g("abb'a'c"), 3) == std::vector<long long>{0, 0, 1});
  CHECK(abelianize(g("ab'c'"), 3) == std::vector<long long>{1, -1, -1});
  CHECK(abelianize_mod(g("ab'c'"), 3, 4) == std::vector<long long>{1, 3, 3});
}

TEST_CASE("lattices", "[freegroup]") {
  auto l = abelian_lattice::from_words({g("ab"), g("aba"), g("abac")}, 3);
  CHECK(l.is_full());
  CHECK(l.index() == 1);

  abelian_lattice m(2, {{2, 0}, {0, 3}});
  CHECK(m.index() == 6);
  CHECK(m.elementary_divisors() == std::vector<big_int>{1, 6});
  CHECK(m.contains({4, 9}));
  CHECK_FALSE(m.contains({1, 0}));

  abelian_lattice d(2, {{1, 1}, {2, 2}});
  CHECK(d.rank() == 1);
  CHECK_FALSE(d.is_full());
  CHECK(d.index() == 0);

  CHECK(determinant({{1, 1, 0}, {2, 1, 1}, {2, 1, 0}}) == 1);
  CHECK(determinant({{1, 2}, {2, 4}}) == 0);
  auto img = lattice_image({{1, 1}, {0, 1}}, abelian_lattice(2, {{1, 0}, {0, 2}}));
  CHECK(img.index() == 2);
}
