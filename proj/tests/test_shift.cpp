#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "retword/error.hpp"
#include "retword/shift.hpp"

using namespace retword;

namespace {
  char const* const tribonacci = "a->ab;b->ac;c->a";
  char const* const ex44       = "a->aab;b->acb;c->ba";
  char const* const p52        = "a->baa;b->ca;c->bad;d->acd";
  char const* const thue_morse = "0->01;1->10";

  std::vector<std::string> rendered(alphabet const& a, std::vector<word> const& ws) {
    std::vector<std::string> out;
    for (auto const& w : ws) {
      out.push_back(a.render(w));
    }
    return out;
  }

  std::vector<std::string> returns_of(language_oracle const& x, std::string const& u) {
    return rendered(x.letters(), return_words(x, x.letters().parse(u)).returns);
  }
}  // namespace

TEST_CASE("return words of the Tribonacci shift", "[shift]") {
  language_oracle x(parse_substitution(tribonacci));
  CHECK(returns_of(x, "aba") == std::vector<std::string>{"ab", "aba", "abac"});
  CHECK(returns_of(x, "a") == std::vector<std::string>{"a", "ab", "ac"});
  CHECK(returns_of(x, "") == std::vector<std::string>{"a", "b", "c"});
  CHECK_THROWS_AS(return_words(x, x.letters().parse("cc")), error);
  CHECK(return_group(x, x.letters().parse("aba")).is_full());
}

TEST_CASE("Thue-Morse returns to 0", "[shift]") {
  language_oracle x(parse_substitution(thue_morse));
  CHECK(returns_of(x, "0") == std::vector<std::string>{"0", "01", "011"});
}

TEST_CASE("return words agree with brute force", "[shift]") {
  for (auto text : {tribonacci, ex44, p52, thue_morse}) {
    language_oracle x(parse_substitution(text));
    auto            r    = oracle::parse(text);
    char            a    = r.begin()->first;
    auto            long1 = oracle::iterate(r, a, 200000);
    auto            long2 = oracle::iterate(r, a, 200000, 2);
    for (std::size_t n = 1; n <= 6; ++n) {
      for (auto const& u : rendered(x.letters(), x.language(n))) {
        auto brute = oracle::sorted(oracle::returns(long1, u));
        REQUIRE(brute == oracle::sorted(oracle::returns(long2, u)));
        CHECK(returns_of(x, u) == brute);
      }
    }
  }
}

TEST_CASE("return words to a factor code", "[shift]") {
  language_oracle x(parse_substitution(tribonacci));
  auto const&     a = x.letters();
  auto            r = return_words_to_set(x, {a.parse("b"), a.parse("c")});
  auto            brute_x = oracle::iterate(oracle::parse(tribonacci), 'a', 100000);
  std::set<std::string> brute;
  std::size_t           prev = std::string::npos;
  for (std::size_t i = 0; i < brute_x.size(); ++i) {
    if (brute_x[i] == 'b' || brute_x[i] == 'c') {
      if (prev != std::string::npos) {
        brute.insert(brute_x.substr(prev, i - prev));
      }
      prev = i;
    }
  }
  CHECK(rendered(a, r.returns) == oracle::sorted(brute));
  CHECK_THROWS_AS(return_words_to_set(x, {a.parse("a"), a.parse("ab")}), error);
  CHECK_THROWS_AS(return_words_to_set(x, {}), error);
}

TEST_CASE("Rauzy graph and Rauzy group of ba", "[shift]") {
  language_oracle x(parse_substitution(tribonacci));
  auto const&     a = x.letters();
  auto            g = build_rauzy_graph(x, 2);
  CHECK(g.vertices.size() == 5);
  CHECK(g.edges.size() == 7);
  CHECK(g.is_strongly_connected());
  auto gr = rauzy_group(x, a.parse("ba"));
  CHECK(gr.rank() == 3);
  CHECK(subgroup_equal(gr, core_graph(3, {parse_group_word("baa", a), parse_group_word("ba", a),
                                          parse_group_word("baca", a)})));
}

TEST_CASE("extension graphs", "[shift]") {
  language_oracle x(parse_substitution(tribonacci));
  auto const&     a = x.letters();
  auto            e = build_extension_graph(x, a.parse("b"), 2);
  std::set<std::pair<std::string, std::string>> edges;
  for (auto const& [l, r] : e.edges) {
    edges.emplace(a.render(e.left[l]), a.render(e.right[r]));
  }
  CHECK(edges == std::set<std::pair<std::string, std::string>>{
                     {"aa", "ac"}, {"ba", "ac"}, {"ca", "aa"}, {"ca", "ab"}, {"ca", "ac"}});
  for (std::size_t n = 0; n <= 5; ++n) {
    for (auto const& u : x.language(n)) {
      CHECK(is_dendric(x, u));
      CHECK(is_suffix_connected(x, u));
    }
  }
  language_oracle tm(parse_substitution(thue_morse));
  CHECK_FALSE(is_dendric(tm, tm.letters().parse("01")));
}

TEST_CASE("occurrence prefixes", "[shift]") {
  language_oracle x(parse_substitution(tribonacci));
  auto const&     a = x.letters();
  auto            s = occurrence_prefixes(x, a.parse("ba"), 20);
  CHECK(a.render(s.point.substr(0, 13)) == "abacabaabacab");
  CHECK(s.positions == std::vector<std::size_t>{1, 5, 8, 12, 14, 18});
  CHECK(s.member(1).render(a) == "abaca");
}

TEST_CASE("welldoc saturation scans", "[shift]") {
  language_oracle x(parse_substitution(tribonacci));
  auto const&     a   = x.letters();
  auto            ab2 = finite_morphism::abelian_mod(a, 2);
  for (auto const& w : x.language(3)) {
    auto s = welldoc_saturates(x, w, ab2);
    CHECK(s.saturated == tristate::yes);
    CHECK(s.images == 8);
  }
  language_oracle y(parse_substitution(ex44));
  auto phi = parse_finite_morphism("perm: a->(1 2 3); b->(1 2); c->(1 2 3)", y.letters());
  auto s   = welldoc_saturates(y, y.letters().parse("aabaa"), phi, 1 << 14);
  CHECK(s.saturated == tristate::undetermined);
  CHECK(s.images <= 2);
}
