#include <catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "retword/fingroup.hpp"
#include "retword/freegroup.hpp"
#include "retword/shift.hpp"

using namespace retword;
using namespace Catch::Generators;

namespace {
  alphabet const abc({"a", "b", "c"});

  constexpr std::size_t cases = 200;

  // Reduced word over a, b, c and inverses A, B, C.
  std::string random_reduced(std::mt19937& rng, std::size_t min_len, std::size_t max_len) {
    static char const letters[] = "abcABC";
    std::uniform_int_distribution<std::size_t> len(min_len, max_len);
    std::uniform_int_distribution<int>         pick(0, 5);
    std::size_t                                n = len(rng);
    std::string                                w;
    while (w.size() < n) {
      char c = letters[pick(rng)];
      if (w.empty() || w.back() != oracle::inv(c)) {
        w.push_back(c);
      }
    }
    return w;
  }

  group_word g(std::string const& w) {
    return parse_group_word(oracle::to_library(w), abc);
  }

  std::vector<std::string> random_gens(std::mt19937& rng, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> count(1, 3);
    std::vector<std::string>                   out;
    for (std::size_t i = count(rng); i > 0; --i) {
      out.push_back(random_reduced(rng, 1, max_len));
    }
    return out;
  }

  core_graph graph_of(std::vector<std::string> const& gens) {
    std::vector<group_word> ws;
    for (auto const& w : gens) {
      ws.push_back(g(w));
    }
    return core_graph(abc.size(), ws);
  }

  std::mt19937 seeded() {
    auto seed = GENERATE(take(cases, random(0, 1 << 30)));
    return std::mt19937(static_cast<std::mt19937::result_type>(seed));
  }

  std::vector<group_word> as_group(std::vector<word> const& ws) {
    std::vector<group_word> out;
    for (auto const& w : ws) {
      out.push_back(group_word::from_word(w));
    }
    return out;
  }

  // A factor of the point of length n, starting at a random position.
  word random_factor(std::mt19937& rng, word const& point, std::size_t n) {
    std::uniform_int_distribution<std::size_t> at(0, point.size() - n);
    return point.substr(at(rng), n);
  }
}  // namespace

TEST_CASE("folding is confluent", "[property]") {
  auto rng  = seeded();
  auto gens = random_gens(rng, 5);
  auto h    = graph_of(gens);

  auto shuffled = gens;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  CHECK(graph_of(shuffled) == h);

  // Nielsen moves keep the subgroup
  auto moved = gens;
  std::uniform_int_distribution<std::size_t> pick(0, moved.size() - 1);
  for (int t = 0; t < 3; ++t) {
    auto i = pick(rng);
    auto j = pick(rng);
    if (i == j) {
      moved[i] = oracle::inverse(moved[i]);
    } else {
      moved[i] = oracle::reduce(moved[i] + (rng() % 2 ? moved[j] : oracle::inverse(moved[j])));
    }
  }
  CHECK(graph_of(moved) == h);

  oracle::naive_graph naive(gens);
  CHECK(h.vertex_count() == naive.vertex_count());
  CHECK(h.edge_count() == naive.edge_count());
}

TEST_CASE("membership agrees with brute force", "[property]") {
  auto rng  = seeded();
  auto gens = random_gens(rng, 3);
  auto h    = graph_of(gens);

  std::vector<std::string> signed_gens;
  for (auto const& x : gens) {
    signed_gens.push_back(x);
    signed_gens.push_back(oracle::inverse(x));
  }
  std::vector<std::string> products{""};
  std::vector<std::string> frontier{""};
  for (int len = 0; len < 3; ++len) {
    std::vector<std::string> next;
    for (auto const& p : frontier) {
      for (auto const& x : signed_gens) {
        next.push_back(oracle::reduce(p + x));
      }
    }
    products.insert(products.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  for (auto const& p : products) {
    CHECK(h.contains(g(p)));
  }

  oracle::naive_graph naive(gens);
  for (int t = 0; t < 20; ++t) {
    auto w = random_reduced(rng, 0, 6);
    CHECK(h.contains(g(w)) == naive.contains(w));
  }
}

TEST_CASE("return groups of extensions are conjugate subgroups", "[property]") {
  static language_oracle const trib(parse_substitution("a->ab;b->ac;c->a"));
  static language_oracle const ex(parse_substitution("a->aab;b->acb;c->ba"));
  static word const            trib_point = trib.point_prefix(2000);
  static word const            ex_point   = ex.point_prefix(2000);
  static finite_morphism const s3 =
      parse_finite_morphism("perm: a->(1 2 3); b->(1 2); c->(1 2 3)", ex.letters());

  auto rng      = seeded();
  bool use_trib = rng() % 2 == 0;
  auto const& x     = use_trib ? trib : ex;
  auto const& point = use_trib ? trib_point : ex_point;

  std::uniform_int_distribution<std::size_t> len(1, 8);
  auto u = random_factor(rng, point, len(rng));
  std::uniform_int_distribution<std::size_t> cut(0, u.size());
  auto i = cut(rng);
  auto j = cut(rng);
  if (i > j) {
    std::swap(i, j);
  }
  auto p = u.substr(0, i);
  auto w = u.substr(i, j - i);

  auto ru = return_words(x, u).returns;
  auto rw = core_graph(3, as_group(return_words(x, w).returns));
  auto gp = group_word::from_word(p);
  for (auto const& r : ru) {
    CHECK(rw.contains(gp.inverse() * group_word::from_word(r) * gp));
  }

  if (!use_trib) {
    std::vector<finite_element> img_w;
    for (auto const& r : return_words(x, w).returns) {
      img_w.push_back(s3.evaluate(r));
    }
    auto hw = closure(img_w, s3.identity());
    auto fp = s3.evaluate(p);
    for (auto const& r : ru) {
      auto e = fp.inverse() * s3.evaluate(r) * fp;
      CHECK(std::find(hw.begin(), hw.end(), e) != hw.end());
    }
  }
}

TEST_CASE("Rauzy groups and return groups agree beyond the threshold", "[property]") {
  static language_oracle const trib(parse_substitution("a->ab;b->ac;c->a"));
  static language_oracle const ex(parse_substitution("a->aab;b->acb;c->ba"));
  static word const            trib_point = trib.point_prefix(4000);
  static word const            ex_point   = ex.point_prefix(4000);

  auto rng      = seeded();
  bool use_trib = rng() % 2 == 0;
  auto const& x     = use_trib ? trib : ex;
  auto const& point = use_trib ? trib_point : ex_point;

  std::uniform_int_distribution<std::size_t> len(1, 4);
  auto        w  = random_factor(rng, point, len(rng));
  auto        rw = return_words(x, w).returns;
  std::size_t kw = 0;
  for (auto const& r : rw) {
    kw = std::max(kw, r.size() + w.size());
  }
  // an extension of w of length at least K_w
  auto occ = occurrences(point.substr(0, point.size() - kw - 4), w);
  REQUIRE_FALSE(occ.empty());
  std::uniform_int_distribution<std::size_t> which(0, occ.size() - 1);
  std::uniform_int_distribution<std::size_t> extra(0, 3);
  auto u = point.substr(occ[which(rng)], kw + extra(rng));

  auto gr = rauzy_group(x, u);
  auto ru = core_graph(3, as_group(return_words(x, u).returns));
  CHECK(subgroup_leq(ru, gr));
  CHECK(subgroup_leq(gr, core_graph(3, as_group(rw))));
  if (use_trib) {
    CHECK(subgroup_equal(gr, ru));
    CHECK(ru.is_full());
  }
}

TEST_CASE("Hopfian rank law", "[property]") {
  auto rng  = seeded();
  auto gens = random_gens(rng, 4);
  auto h    = graph_of(gens);
  std::vector<group_word> images;
  for (int i = 0; i < 3; ++i) {
    images.push_back(g(random_reduced(rng, 0, 3)));
  }
  free_morphism phi(abc, abc, images);
  auto          image = morphism_image(phi, h);
  if (injective_on(phi, h)) {
    CHECK(image.rank() == h.rank());
  } else {
    CHECK(image.rank() < h.rank());
  }
}
