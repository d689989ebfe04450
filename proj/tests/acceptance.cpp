// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "retword/derive.hpp"
#include "retword/error.hpp"
#include "retword/shift.hpp"
#include "retword/stability.hpp"

using namespace retword;

namespace {

  char const* const tribonacci = "a->ab;b->ac;c->a";
  char const* const ex44       = "a->aab;b->acb;c->ba";
  char const* const p52        = "a->baa;b->ca;c->bad;d->acd";
  char const* const thue_morse = "0->01;1->10";
  char const* const s3_phi     = "perm: a->(1 2 3); b->(1 2); c->(1 2 3)";

  struct failure {
    std::string what;
  };

  void expect(bool ok, std::string const& what) {
    if (!ok) {
      throw failure{what};
    }
  }

  std::vector<std::string> rendered(alphabet const& a, std::vector<word> const& ws) {
    std::vector<std::string> out;
    for (auto const& w : ws) {
      out.push_back(a.render(w));
    }
    return out;
  }

  std::vector<group_word> as_group(std::vector<word> const& ws) {
    std::vector<group_word> out;
    for (auto const& w : ws) {
      out.push_back(group_word::from_word(w));
    }
    return out;
  }

  using strings = std::vector<std::string>;

  void tribonacci_basics() {
    language_oracle x(parse_substitution(tribonacci));
    auto const&     a = x.letters();
    expect(rendered(a, x.language(2)) == strings{"aa", "ab", "ac", "ba", "ca"}, "L2");
    expect(rendered(a, x.language(3)) == strings{"aab", "aba", "aca", "baa", "bab", "bac", "cab"},
           "L3");
    expect(rendered(a, return_words(x, a.parse("aba")).returns) == strings{"ab", "aba", "abac"},
           "R(aba)");
    auto gr  = rauzy_group(x, a.parse("ba"));
    auto ref = core_graph(3, {parse_group_word("baa", a), parse_group_word("ba", a),
                              parse_group_word("baca", a)});
    expect(gr.rank() == 3, "rank Gr(ba)");
    expect(subgroup_equal(gr, ref), "Gr(ba) = <baa, ba, baca>");
    auto e = build_extension_graph(x, a.parse("b"), 2);
    std::set<std::pair<std::string, std::string>> edges;
    for (auto const& [l, r] : e.edges) {
      edges.emplace(a.render(e.left[l]), a.render(e.right[r]));
    }
    expect(e.edges.size() == 5, "E2(b) edge count");
    expect(edges
               == std::set<std::pair<std::string, std::string>>{
                   {"aa", "ac"}, {"ba", "ac"}, {"ca", "aa"}, {"ca", "ab"}, {"ca", "ac"}},
           "E2(b) edges");
  }

  void durand_cycle() {
    language_oracle x(parse_substitution(ex44));
    auto            rec = derivation_cycle(x, 2);
    expect(rec.steps.size() == 4, "four steps");
    expect(rec.steps[0].theta.to_string() == "1->a; 2->b; 3->c", "theta0");
    expect(rec.steps[1].theta.to_string() == "1->1; 2->12; 3->132; 4->122", "theta1");
    expect(rec.steps[2].theta.to_string() == "1->12; 2->123; 3->14; 4->13; 5->1233", "theta2");
    expect(rec.steps[3].theta.to_string() == "1->12; 2->1234; 3->15; 4->134; 5->123434",
           "theta3");
    expect(rec.i == 2 && rec.j == 3, "repetition at (2, 3)");
    expect(rec.steps[2].sigma == rec.steps[3].sigma, "sigma_v2 = sigma_v3");
    expect(rec.psi.to_string() == "1->aab; 2->aabacb; 3->aabb; 4->aacb; 5->aabacbacb", "psi");
    expect(rec.alpha.to_string() == "1->12; 2->1234; 3->15; 4->134; 5->123434", "alpha");
    for (std::size_t n = 0; n <= 2; ++n) {
      expect(verify_cycle(x, rec, n), "R(u(n)) = psi alpha^n (C), n = " + std::to_string(n));
    }
  }

  void finite_example() {
    language_oracle x(parse_substitution(ex44));
    auto            phi = parse_finite_morphism(s3_phi, x.letters());
    auto            rep = decide_finite(x, phi);
    expect(rep.evidence["phi_psi"] == json::array({"(2 3)", "id", "(1 3 2)", "(1 2)", "(2 3)"}),
           "phi psi");
    expect(rep.evidence["phi_psi_alpha"] == json::array({"(2 3)", "id", "id", "id", "(2 3)"}),
           "phi psi alpha");
    expect(rep.evidence["repeat"] == json::array({1, 8}), "phi psi alpha = phi psi alpha^8");
    expect(rep.stabilizer_elements.size() == 2, "stabilizer of order 2");
    expect(rep.stabilizer == "{id, (2 3)}", "stabilizer generated by (2 3)");
    expect(rep.result != verdict::stable, "not phi-stable");
  }

  void bifix_counterexample() {
    language_oracle x(parse_substitution(ex44));
    auto const&     a    = x.letters();
    auto            sync = synchronizing_constant(x);
    expect(sync.L == 4, "L = 4");
    expect(sync.cuts.size() == 13, "13 synchronized words");
    auto k = preservation_constant(x);
    expect(k.M == 6 && k.K == 6, "M = K = 6");
    auto r = return_words(x, a.parse("aabaab")).returns;
    expect(rendered(a, r)
               == strings{"aabaabacb", "aabaabbaacb", "aabaabacbacb", "aabaabacbaabbaacb",
                          "aabaabacbaabbaacbaabbaacb"},
           "R(aabaab)");
    free_morphism sigma(*x.generator());
    auto          h     = core_graph(3, as_group(r));
    auto          image = morphism_image(sigma, h);
    expect(!image.contains(group_word::from_word(a.parse("aabaabbaacb"))),
           "aabaabbaacb outside sigma<R(aabaab)>");
    auto rep = decide_free_bifix(x);
    expect(rep.result == verdict::not_eventually_stable, "not eventually stable");
    expect(rep.chain && rep.chain->witness.size() == 3, "three-step witness");
    auto level = as_group(r);
    for (std::size_t n = 0; n < 3; ++n) {
      std::vector<group_word> next;
      for (auto const& g : level) {
        next.push_back(sigma(g));
      }
      core_graph here(3, level);
      core_graph there(3, next);
      auto const& step = rep.chain->witness[n];
      expect(step.n == n && here.contains(step.escapee) && !there.contains(step.escapee),
             "witness step " + std::to_string(n));
      level = std::move(next);
    }
  }

  void four_letter_bifix() {
    language_oracle x(parse_substitution(p52));
    auto const&     a   = x.letters();
    auto            rep = decide_free_bifix(x);
    expect(rep.constants && rep.constants->K == 10, "K = 10");
    expect(rep.result == verdict::stable, "stable");
    for (auto const& u : x.language(10)) {
      expect(return_group(x, u).is_full(), "R(" + a.render(u) + ") generates F4");
    }
    auto d = derive_prefix(x, a.parse("b"), seed_for_prefix(x, a.parse("b")));
    expect(d.sigma.to_string()
               == "1->123334; 2->123232533; 3->123233; 4->12333632734; "
                  "5->12323232736533; 6->12333632736533; 7->12323232734",
           "sigma_b");
    language_oracle db(d.sigma);
    auto            dr = decide_free_derivating(db, word(single_letter(0)));
    expect(dr.result == verdict::not_eventually_stable, "D_b not eventually stable");
    free_morphism phi(d.sigma);
    std::vector<group_word> images;
    for (auto const& w : d.sigma.images()) {
      images.push_back(group_word::from_word(w));
    }
    core_graph h(d.sigma.domain().size(), images);
    expect(injective_on(phi, h), "sigma_b injective on <sigma_b(B)>");
    expect(is_proper(morphism_image(phi, h), h), "sigma_b(H) < H");
    auto lhs = parse_group_word("baa", a).inverse() * parse_group_word("baaca", a);
    auto rhs = parse_group_word("badacd", a).inverse() * parse_group_word("badacdca", a);
    expect((lhs * rhs.inverse()).empty(), "relation reduces to the empty word");
  }

  void abelian_suite() {
    language_oracle trib(parse_substitution(tribonacci));
    auto            l = abelian_lattice::from_words(
        as_group(return_words(trib, trib.letters().parse("aba")).returns), 3);
    auto det = determinant(l.basis());
    expect(l.is_full() && (det == 1 || det == -1), "ab R(aba) unimodular");

    language_oracle x(parse_substitution(ex44));
    expect(decide_abelian(x).result == verdict::stable, "ab-stable");
    expect(decide_free_bifix(x).result == verdict::not_eventually_stable, "free verdict");

    for (auto text : {tribonacci, ex44, p52, thue_morse, "a->ab;b->abbb"}) {
      language_oracle y(parse_substitution(text));
      bool            all = true;
      for (int k = 2; k <= 6; ++k) {
        all = all
              && decide_finite(y, finite_morphism::abelian_mod(y.letters(), k)).result
                     == verdict::stable;
      }
      expect((decide_abelian(y).result == verdict::stable) == all,
             std::string("coherence for ") + text);
    }
  }

  void welldoc_coherence() {
    language_oracle trib(parse_substitution(tribonacci));
    language_oracle x(parse_substitution(ex44));
    language_oracle tm(parse_substitution(thue_morse));
    std::vector<std::pair<language_oracle const*, finite_morphism>> pairs;
    for (int k = 2; k <= 4; ++k) {
      pairs.emplace_back(&trib, finite_morphism::abelian_mod(trib.letters(), k));
    }
    pairs.emplace_back(&x, parse_finite_morphism(s3_phi, x.letters()));
    pairs.emplace_back(&x, parse_finite_morphism("perm: a->(); b->(); c->()", x.letters()));
    pairs.emplace_back(&tm, finite_morphism::abelian_mod(tm.letters(), 2));
    for (auto const& [oracle, phi] : pairs) {
      auto w = decide_welldoc(*oracle, phi);
      auto f = decide_finite(*oracle, phi);
      expect(w.result == f.result, "welldoc verdict for " + phi.to_string());
      expect(w.evidence["consistent"] == true, "saturation scans for " + phi.to_string());
    }
  }

  void automatic_descent() {
    language_oracle tm(parse_substitution(thue_morse));
    auto const&     a     = tm.letters();
    auto            brute = oracle::returns(oracle::iterate(oracle::parse(thue_morse), '0', 100000),
                                            "0");
    expect(rendered(a, return_words(tm, a.parse("0")).returns) == oracle::sorted(brute)
               && oracle::sorted(brute) == strings{"0", "01", "011"},
           "R(0)");
    std::size_t previous = 0;
    for (std::size_t n = 1; n <= 2; ++n) {
      auto d = automatic_divisibility(tm, n);
      expect(d.threshold > previous, "threshold grows");
      expect(d.short_return.size() % d.modulus != 0, "short witness");
      expect(!d.long_returns.empty(), "long witness");
      for (auto const& r : d.long_returns) {
        expect(r.size() % d.modulus == 0, "long returns divisible");
      }
      previous = d.threshold;
    }
  }

  void property_suites() {
    std::string cmd = std::string(RETWORD_PROPERTIES_BIN) + " --rng-seed 20261016 > /dev/null";
    expect(std::system(cmd.c_str()) == 0, "property suites");
  }

  struct criterion {
    int                   id;
    std::string           name;
    double                limit;  // seconds
    std::function<void()> run;
  };

}  // namespace

int main() {
  std::vector<criterion> all{
      {1, "Tribonacci basics", 1, tribonacci_basics},
      {2, "derivation cycle", 10, durand_cycle},
      {3, "finite stabilizer", 10, finite_example},
      {4, "bifix non-stability", 30, bifix_counterexample},
      {5, "stable shift with unstable derived shift", 300, four_letter_bifix},
      {6, "abelian suite", 60, abelian_suite},
      {7, "welldoc coherence", 120, welldoc_coherence},
      {8, "automatic descent", 60, automatic_descent},
      {9, "property suites", 300, property_suites},
  };
  int failed = 0;
  for (auto const& c : all) {
    std::string detail;
    auto        start = std::chrono::steady_clock::now();
    bool        ok    = true;
    try {
      c.run();
    } catch (failure const& f) {
      ok     = false;
      detail = f.what;
    } catch (std::exception const& e) {
      ok     = false;
      detail = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && secs > c.limit) {
      ok     = false;
      detail = "over the time limit";
    }
    std::ostringstream line;
    line << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " ("
         << secs << " s, limit " << c.limit << " s)";
    if (!ok) {
      line << ": " << detail;
      ++failed;
    }
    std::cout << line.str() << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
