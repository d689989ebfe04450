#include "retword/stability.hpp"

#include <algorithm>
#include <map>

#include "retword/error.hpp"
#include "retword/shift.hpp"

namespace retword {

  namespace {
    substitution const& pure_generator(language_oracle const& oracle,
                                       char const*            what) {
      if (!oracle.is_pure()) {
        throw error(error_kind::incompatible,
                    std::string(what) + " needs a shift generated by a "
                                        "substitution without cover");
      }
      return *oracle.generator();
    }

    std::size_t ceil_div(std::size_t a, std::size_t b) {
      return (a + b - 1) / b;
    }

    std::vector<group_word> as_group_words(std::vector<word> const& ws) {
      std::vector<group_word> out;
      out.reserve(ws.size());
      for (auto const& w : ws) {
        out.push_back(group_word::from_word(w));
      }
      return out;
    }

    json render_words(alphabet const& a, std::vector<word> const& ws) {
      json out = json::array();
      for (auto const& w : ws) {
        out.push_back(a.render(w));
      }
      return out;
    }

    std::string describe(alphabet const& a, core_graph const& h) {
      if (h.is_full()) {
        return "F(" + std::to_string(a.size()) + ")";
      }
      std::string out = "<";
      bool        first = true;
      for (auto const& g : h.generators()) {
        if (!first) {
          out += ", ";
        }
        first = false;
        out += g.render(a);
      }
      return out + ">";
    }

    // First word of length at most `up_to` whose return group is proper.
    std::optional<word> first_non_full(language_oracle const& oracle,
                                       std::size_t            from,
                                       std::size_t            up_to) {
      for (std::size_t n = from; n <= up_to; ++n) {
        for (auto const& u : oracle.language(n)) {
          if (!return_group(oracle, u).is_full()) {
            return u;
          }
        }
      }
      return std::nullopt;
    }

    json chain_json(alphabet const& a, descent_chain const& chain) {
      json out;
      json ranks = json::array();
      for (auto const& h : chain.groups) {
        ranks.push_back(h.rank());
      }
      out["ranks"]      = ranks;
      out["k_prime"]    = chain.k_prime;
      out["contained"]  = chain.contained;
      out["stabilizes"] = chain.stabilizes;
      json witness      = json::array();
      for (auto const& step : chain.witness) {
        json s;
        s["n"]       = step.n;
        s["escapee"] = step.escapee.render(a);
        witness.push_back(s);
      }
      out["witness"] = witness;
      return out;
    }

    // Shared tail of the free-group routes: the verdict from the descent of
    // <phi^n(S)>.
    void conclude_descent(stability_report&    report,
                          alphabet const&      a,
                          descent_chain const& chain) {
      report.evidence["chain"] = chain_json(a, chain);
      if (chain.stabilizes) {
        auto const& h           = chain.groups[chain.k_prime];
        report.stabilizer_graph = h;
        report.stabilizer       = describe(a, h);
        report.result = h.is_full() ? verdict::stable : verdict::eventually_stable;
      } else {
        report.result = verdict::not_eventually_stable;
      }
      report.chain = chain;
    }

    // phi psi alpha^n on the letters of C, iterated until it repeats.
    struct finite_analysis {
      derivation_record                        record;
      std::vector<std::vector<finite_element>> values;
      std::size_t                              first = 0;
      std::size_t                              period = 0;
      std::vector<finite_element>              h;
      std::vector<finite_element>              g;
    };

    constexpr std::size_t finite_iteration_cap = std::size_t(1) << 20;

    finite_analysis analyse_finite(language_oracle const& oracle,
                                   finite_morphism const& phi) {
      if (!(phi.domain() == oracle.letters())) {
        throw error(error_kind::incompatible,
                    "the morphism is not defined on the letters of the shift");
      }
      finite_analysis out;
      out.record = derivation_cycle(oracle, 1);
      auto const& rec = out.record;

      std::vector<finite_element> f;
      for (auto const& image : rec.psi.images()) {
        f.push_back(phi.evaluate(image));
      }
      std::map<std::vector<finite_element>, std::size_t> seen;
      while (true) {
        auto [it, inserted] = seen.emplace(f, out.values.size());
        if (!inserted) {
          out.first  = it->second;
          out.period = out.values.size() - it->second;
          break;
        }
        if (out.values.size() >= finite_iteration_cap) {
          throw error(error_kind::cap_exceeded,
                      "phi psi alpha^n does not repeat within the cap");
        }
        out.values.push_back(f);
        std::vector<finite_element> next;
        for (auto const& image : rec.alpha.images()) {
          auto x = phi.identity();
          for (char c : image) {
            x = x * f[static_cast<letter_type>(c)];
          }
          next.push_back(std::move(x));
        }
        f = std::move(next);
      }
      out.h = closure(out.values[out.first], phi.identity());
      out.g = target_group(phi);
      return out;
    }

    json elements_json(std::vector<finite_element> const& xs) {
      json out = json::array();
      for (auto const& x : xs) {
        out.push_back(x.render());
      }
      return out;
    }

    stability_report finite_report(finite_analysis const& fa, std::string route) {
      stability_report report;
      report.route               = std::move(route);
      report.stabilizer_elements = fa.h;
      report.stabilizer          = render_subgroup(fa.h);
      if (fa.h.size() == fa.g.size()) {
        report.result          = verdict::stable;
        report.threshold_bound = 0;
      } else {
        report.result = verdict::eventually_stable;
      }
      auto const& rec = fa.record;
      json        cyc;
      cyc["i"]     = rec.i;
      cyc["j"]     = rec.j;
      cyc["psi"]   = rec.psi.to_string();
      cyc["alpha"] = rec.alpha.to_string();
      cyc["verified_up_to"] = rec.verified_up_to;
      report.evidence["cycle"]           = cyc;
      report.evidence["phi_psi"]         = elements_json(fa.values[0]);
      if (fa.values.size() > 1) {
        report.evidence["phi_psi_alpha"] = elements_json(fa.values[1]);
      }
      report.evidence["repeat"] = json::array({fa.first, fa.first + fa.period});
      report.evidence["stabilizer_order"] = fa.h.size();
      report.evidence["group_order"]      = fa.g.size();
      return report;
    }

    std::vector<big_int> abelian_row(word const& w, std::size_t d) {
      std::vector<big_int> row(d, 0);
      for (char c : w) {
        row[static_cast<letter_type>(c)] += 1;
      }
      return row;
    }

    std::vector<std::size_t> prime_divisors(big_int n) {
      if (n < 0) {
        n = -n;
      }
      std::vector<std::size_t> out;
      for (std::size_t p = 2; big_int(p) * p <= n; ++p) {
        if (n % p == 0) {
          out.push_back(p);
          while (n % p == 0) {
            n /= p;
          }
        }
      }
      if (n > 1) {
        if (n > big_int(1) << 30) {
          throw error(error_kind::cap_exceeded,
                      "determinant has a prime factor too large for a finite "
                      "group check");
        }
        out.push_back(static_cast<std::size_t>(n));
      }
      return out;
    }

    bool derivates(substitution const&    sigma,
                   language_oracle const& oracle,
                   word const&            u) {
      auto returns = return_words(oracle, u).returns;
      auto images  = sigma.images();
      sort_words(images);
      if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
        return false;
      }
      return images == returns;
    }
  }  // namespace

  std::string_view to_string(verdict v) noexcept {
    switch (v) {
      case verdict::stable:
        return "stable";
      case verdict::eventually_stable:
        return "eventually-stable";
      case verdict::not_stable:
        return "not-stable";
      case verdict::not_eventually_stable:
        return "not-eventually-stable";
      case verdict::undetermined:
        return "undetermined";
    }
    return "undetermined";
  }

  ////////////////////////////////////////////////////////////////////////
  // constants
  ////////////////////////////////////////////////////////////////////////

  std::vector<std::size_t> synchronizing_cuts(language_oracle const& oracle,
                                              word const&            u) {
    auto const& sigma = pure_generator(oracle, "synchronization");
    std::size_t const m = ceil_div(u.size(), sigma.min_length()) + 2;
    std::vector<bool> allowed(u.size() + 1, true);
    for (auto const& w : oracle.language(m)) {
      word              image;
      std::vector<bool> cut(1, true);
      for (char c : w) {
        auto const& piece = sigma.image(static_cast<letter_type>(c));
        image += piece;
        cut.resize(image.size() + 1, false);
        cut[image.size()] = true;
      }
      for (auto pos : occurrences(image, u)) {
        for (std::size_t c = 0; c <= u.size(); ++c) {
          if (!cut[pos + c]) {
            allowed[c] = false;
          }
        }
      }
    }
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c <= u.size(); ++c) {
      if (allowed[c]) {
        out.push_back(c);
      }
    }
    return out;
  }

  synchronization synchronizing_constant(language_oracle const& oracle,
                                         std::size_t            cap) {
    pure_generator(oracle, "synchronization");
    if (oracle.is_periodic().periodic) {
      throw error(error_kind::periodic_input,
                  "a periodic shift has no synchronizing constant");
    }
    for (std::size_t l = 1; l <= cap; ++l) {
      synchronization s;
      s.L       = l;
      bool good = true;
      for (auto const& u : oracle.language(l)) {
        auto cuts = synchronizing_cuts(oracle, u);
        if (cuts.empty()) {
          good = false;
          break;
        }
        s.cuts.emplace_back(u, std::move(cuts));
      }
      if (good) {
        return s;
      }
    }
    throw error(error_kind::cap_exceeded,
                "no synchronizing constant up to " + std::to_string(cap));
  }

  std::size_t shortest_return(language_oracle const& oracle, std::size_t n) {
    std::size_t best = static_cast<std::size_t>(-1);
    for (auto const& u : oracle.language(n)) {
      for (auto const& r : return_words(oracle, u).returns) {
        best = std::min(best, r.size());
      }
    }
    return best;
  }

  std::size_t return_length_constant(language_oracle const& oracle,
                                     std::size_t            L,
                                     std::size_t            cap) {
    auto const& sigma = pure_generator(oracle, "the return length constant");
    std::size_t const target = sigma.max_length() * ceil_div(L, sigma.min_length());
    for (std::size_t n = 0; n <= cap; ++n) {
      if (shortest_return(oracle, n) >= target) {
        return n;
      }
    }
    throw error(error_kind::cap_exceeded,
                "return words stay shorter than " + std::to_string(target)
                    + " up to length " + std::to_string(cap));
  }

  sync_constants preservation_constant(language_oracle const& oracle) {
    auto const&    sigma = pure_generator(oracle, "the preservation constant");
    sync_constants c;
    c.L             = synchronizing_constant(oracle).L;
    c.return_length = sigma.max_length() * ceil_div(c.L, sigma.min_length());
    c.M             = return_length_constant(oracle, c.L);
    c.K             = std::max(c.M, 2 * ceil_div(c.L, sigma.min_length()));
    return c;
  }

  ////////////////////////////////////////////////////////////////////////
  // descending chains in free groups
  ////////////////////////////////////////////////////////////////////////

  descent_chain examine_descent(free_morphism const&           phi,
                                std::vector<group_word> const& s,
                                std::size_t                    witness_steps) {
    descent_chain chain;
    chain.groups.emplace_back(phi.codomain().size(), s);
    while (true) {
      auto next = morphism_image(phi, chain.groups.back());
      if (chain.groups.size() == 1) {
        chain.contained = subgroup_leq(next, chain.groups.front());
      }
      bool const same_rank = next.rank() == chain.groups.back().rank();
      chain.groups.push_back(std::move(next));
      if (same_rank) {
        break;
      }
    }
    chain.k_prime = chain.groups.size() - 2;
    chain.stabilizes =
        subgroup_equal(chain.groups[chain.k_prime], chain.groups.back());
    if (chain.stabilizes || !chain.contained) {
      return chain;
    }
    // phi^n(S), so that escapees are images of the given words when possible
    std::vector<group_word> images = s;
    for (std::size_t n = 0; n < chain.k_prime; ++n) {
      for (auto& g : images) {
        g = phi(g);
      }
    }
    for (std::size_t t = 0; t < witness_steps; ++t) {
      std::size_t const n = chain.k_prime + t;
      while (chain.groups.size() < n + 2) {
        chain.groups.push_back(morphism_image(phi, chain.groups.back()));
      }
      auto const& h  = chain.groups[n];
      auto const& h1 = chain.groups[n + 1];
      if (!subgroup_leq(h1, h)) {
        break;
      }
      auto candidates = images;
      auto basis      = h.generators();
      candidates.insert(candidates.end(), basis.begin(), basis.end());
      for (auto const& g : candidates) {
        if (!h1.contains(g)) {
          chain.witness.push_back({n, g});
          break;
        }
      }
      for (auto& g : images) {
        g = phi(g);
      }
      if (chain.witness.size() != t + 1) {
        break;
      }
    }
    return chain;
  }

  ////////////////////////////////////////////////////////////////////////
  // free-group routes
  ////////////////////////////////////////////////////////////////////////

  stability_report decide_free_bifix(language_oracle const& oracle) {
    auto const& sigma = pure_generator(oracle, "the bifix route");
    if (!is_bifix(sigma)) {
      throw error(error_kind::not_bifix, "'" + sigma.to_string() + "' is not bifix");
    }
    auto const&      a = oracle.letters();
    stability_report report;
    report.route = "bifix";

    auto per = oracle.is_periodic();
    if (per.periodic) {
      core_graph h(a.size(), {group_word::from_word(per.period_word)});
      report.stabilizer_graph       = h;
      report.stabilizer             = describe(a, h);
      report.evidence["periodic"]   = true;
      report.evidence["period_word"] = a.render(per.period_word);
      if (a.size() == 1) {
        report.result          = verdict::stable;
        report.threshold_bound = 0;
      } else {
        report.result          = verdict::eventually_stable;
        report.threshold_bound = per.period;
      }
      return report;
    }

    auto constants   = preservation_constant(oracle);
    report.constants = constants;
    auto s           = find_seed_letter(sigma);
    auto u           = fixed_point_prefix(sigma, s.letter, s.power, constants.K);
    auto returns     = return_words(oracle, u).returns;
    free_morphism phi(sigma.power(s.power));
    auto chain = examine_descent(phi, as_group_words(returns));

    report.evidence["periodic"] = false;
    report.evidence["seed"]     = json::array({a.render(single_letter(s.letter)), s.power});
    report.evidence["prefix"]   = a.render(u);
    report.evidence["returns"]  = render_words(a, returns);
    conclude_descent(report, a, chain);

    bool const invertible =
        core_graph(a.size(), free_morphism(sigma).images()).is_full();
    report.evidence["invertible"] = invertible;
    if (invertible) {
      auto bad = first_non_full(oracle, constants.K, constants.K);
      report.evidence["length_K_returns_full"] = !bad.has_value();
    }
    if (report.result == verdict::stable) {
      auto bad = first_non_full(oracle, 0, constants.K);
      json scan;
      scan["up_to"]    = constants.K;
      scan["all_full"] = !bad.has_value();
      if (bad) {
        scan["first_proper"] = a.render(*bad);
        report.result        = verdict::eventually_stable;
      } else {
        report.threshold_bound = 0;
      }
      report.evidence["short_word_scan"] = scan;
    }
    return report;
  }

  stability_report decide_free_derivating(language_oracle const& oracle,
                                          std::optional<word>    u,
                                          std::size_t            detect_bound) {
    auto const&      sigma = pure_generator(oracle, "the derivating route");
    auto const&      a     = oracle.letters();
    stability_report report;
    report.route = "derivating";
    if (u) {
      if (!derivates(sigma, oracle, *u)) {
        throw error(error_kind::not_derivating,
                    "'" + sigma.to_string() + "' is not derivating for '"
                        + a.render(*u) + "'");
      }
    } else {
      std::size_t const bound =
          detect_bound ? detect_bound : 4 * sigma.max_length() * a.size();
      auto point = oracle.point_prefix(bound);
      for (std::size_t n = 1; n <= bound; ++n) {
        if (derivates(sigma, oracle, point.substr(0, n))) {
          u = point.substr(0, n);
          break;
        }
      }
      if (!u) {
        report.evidence["derivating"] = "not-detected";
        report.evidence["scanned_up_to"] = bound;
        return report;
      }
    }
    report.evidence["base"] = a.render(*u);
    std::vector<group_word> letters;
    for (std::size_t i = 0; i < a.size(); ++i) {
      letters.push_back(group_word::from_word(single_letter(static_cast<letter_type>(i))));
    }
    conclude_descent(report, a, examine_descent(free_morphism(sigma), letters));
    if (report.result == verdict::stable) {
      report.threshold_bound = 0;
    }
    return report;
  }

  stability_report decide_auto(language_oracle const& oracle) {
    auto const& sigma = pure_generator(oracle, "automatic route selection");
    stability_report report;
    if (is_bifix(sigma)) {
      report = decide_free_bifix(oracle);
    } else {
      report = decide_free_derivating(oracle);
    }
    report.route = "auto/" + report.route;
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // finite and abelian targets
  ////////////////////////////////////////////////////////////////////////

  stability_report decide_finite(language_oracle const& oracle,
                                 finite_morphism const& phi) {
    return finite_report(analyse_finite(oracle, phi), "finite");
  }

  stability_report decide_abelian(language_oracle const& oracle) {
    auto const&       a   = oracle.letters();
    std::size_t const d   = a.size();
    auto              rec = derivation_cycle(oracle, 1);
    std::size_t const c   = rec.c.size();

    std::vector<std::vector<big_int>> m_psi, m_alpha;
    for (auto const& image : rec.psi.images()) {
      m_psi.push_back(abelian_row(image, d));
    }
    for (auto const& image : rec.alpha.images()) {
      m_alpha.push_back(abelian_row(image, c));
    }
    stability_report report;
    report.route = "abelian";
    json cyc;
    cyc["i"]     = rec.i;
    cyc["j"]     = rec.j;
    cyc["psi"]   = rec.psi.to_string();
    cyc["alpha"] = rec.alpha.to_string();
    report.evidence["cycle"] = cyc;

    // L_n is spanned by the rows of M_alpha^n M_psi and decreases with n.
    // Modulo any prime the row spaces of M_alpha^n stop shrinking after #C
    // steps, so every L_n is full exactly when L_#C is.
    auto        rows     = m_psi;
    json        indices  = json::array();
    bool        full     = true;
    std::size_t n        = 0;
    while (true) {
      abelian_lattice l(d, rows);
      indices.push_back(l.index().str());
      if (!l.is_full()) {
        full = false;
        break;
      }
      if (n == c) {
        break;
      }
      std::vector<std::vector<big_int>> next;
      for (std::size_t x = 0; x < c; ++x) {
        std::vector<big_int> row(d, 0);
        for (std::size_t y = 0; y < c; ++y) {
          if (m_alpha[x][y] != 0) {
            for (std::size_t k = 0; k < d; ++k) {
              row[k] += m_alpha[x][y] * rows[y][k];
            }
          }
        }
        next.push_back(std::move(row));
      }
      rows = std::move(next);
      ++n;
    }
    report.evidence["lattice_indices"] = indices;

    auto det = determinant(m_alpha);
    report.evidence["det_alpha"] = det.str();
    if (det != 0 && det != 1 && det != -1 && !indices.empty()
        && indices.front() == "1") {
      json checks = json::array();
      bool all    = true;
      for (auto p : prime_divisors(det)) {
        auto phi = finite_morphism::abelian_mod(a, static_cast<int>(p));
        auto fa  = analyse_finite(oracle, phi);
        bool ok  = fa.h.size() == fa.g.size();
        checks.push_back(json{{"p", p}, {"stable", ok}});
        all = all && ok;
      }
      report.evidence["prime_checks"]        = checks;
      report.evidence["prime_route_agrees"] = all == full;
    }
    if (full) {
      report.result             = verdict::stable;
      report.threshold_bound    = 0;
      report.stabilizer_lattice = abelian_lattice(d, rows);
      report.stabilizer         = "Z^" + std::to_string(d);
    } else {
      report.result                = verdict::not_stable;
      report.evidence["proper_at"] = n;
    }
    return report;
  }

  stability_report decide_welldoc(language_oracle const& oracle,
                                  finite_morphism const& phi,
                                  std::size_t            sample_length) {
    auto const& a      = oracle.letters();
    auto        fa     = analyse_finite(oracle, phi);
    auto        report = finite_report(fa, "welldoc");
    bool        consistent = true;
    json        samples    = json::array();
    if (report.result == verdict::stable) {
      for (std::size_t n = 1; n <= sample_length; ++n) {
        for (auto const& w : oracle.language(n)) {
          auto s = welldoc_saturates(oracle, w, phi);
          if (s.saturated == tristate::no) {
            consistent = false;
          }
          samples.push_back(json{{"word", a.render(w)},
                                 {"saturated", s.saturated == tristate::yes},
                                 {"images", s.images}});
        }
      }
    } else {
      // Prefixes at occurrences of u(n) lie in phi<R(u(n))>.
      for (std::size_t n = fa.first; n <= fa.first + 1; ++n) {
        auto w = fa.record.u(n);
        if (w.size() > 4096) {
          break;
        }
        auto s     = welldoc_saturates(oracle, w, phi);
        auto bound = closure(fa.values[n < fa.values.size() ? n : fa.first],
                             phi.identity())
                         .size();
        if (s.saturated == tristate::yes || s.images > bound) {
          consistent = false;
        }
        samples.push_back(json{{"word", a.render(w)},
                               {"saturated", s.saturated == tristate::yes},
                               {"images", s.images},
                               {"bound", bound}});
      }
    }
    report.evidence["welldoc_samples"] = samples;
    report.evidence["consistent"]      = consistent;
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // automatic shifts
  ////////////////////////////////////////////////////////////////////////

  divisibility_report automatic_divisibility(language_oracle const& oracle,
                                             std::size_t            n,
                                             std::size_t            bound) {
    if (!oracle.generator()) {
      throw error(error_kind::incompatible,
                  "divisibility needs a shift generated by a substitution");
    }
    auto const& sigma = *oracle.generator();
    if (!is_constant_length(sigma)) {
      throw error(error_kind::not_constant_length,
                  "'" + sigma.to_string() + "' is not of constant length");
    }
    if (oracle.is_periodic().periodic) {
      throw error(error_kind::periodic_input, "the shift is periodic");
    }
    divisibility_report out;
    out.modulus = 1;
    for (std::size_t t = 0; t < n; ++t) {
      out.modulus *= sigma.max_length();
    }
    std::optional<std::pair<word, word>> last_bad;
    for (std::size_t l = 0; l <= bound; ++l) {
      std::optional<std::pair<word, word>> bad;
      for (auto const& u : oracle.language(l)) {
        for (auto const& r : return_words(oracle, u).returns) {
          if (r.size() % out.modulus != 0) {
            bad.emplace(u, r);
            break;
          }
        }
        if (bad) {
          break;
        }
      }
      if (!bad) {
        out.threshold = l;
        if (last_bad) {
          out.short_word   = last_bad->first;
          out.short_return = last_bad->second;
        }
        out.long_word    = oracle.language(l).front();
        out.long_returns = return_words(oracle, out.long_word).returns;
        return out;
      }
      last_bad = bad;
    }
    throw error(error_kind::cap_exceeded,
                "returns are not all multiples of " + std::to_string(out.modulus)
                    + " up to length " + std::to_string(bound));
  }

  ////////////////////////////////////////////////////////////////////////
  // closure properties
  ////////////////////////////////////////////////////////////////////////

  json check_derivation_closure(language_oracle const& oracle,
                                word const&            u,
                                std::size_t            scan_length) {
    auto const& a = oracle.letters();
    auto        s = seed_for_prefix(oracle, u);
    if (!s) {
      throw error(error_kind::not_a_prefix,
                  "'" + a.render(u) + "' is not a prefix of a fixed point of a power");
    }
    auto            data = derive_prefix(oracle, u, s);
    language_oracle derived(data.sigma);
    auto const&     b = derived.letters();

    json out;
    out["base"]              = a.render(u);
    out["theta"]             = data.theta.to_string();
    out["return_substitution"] = data.sigma.to_string();

    auto returns = return_words(oracle, u).returns;
    auto rank    = core_graph(a.size(), as_group_words(returns)).rank();
    out["returns"]       = render_words(a, returns);
    out["returns_rank"]  = rank;
    out["returns_free"]  = rank == returns.size();

    auto bad_x = first_non_full(oracle, 0, scan_length);
    out["shift_scan_full"] = !bad_x.has_value();

    bool        identity_holds = true;
    std::size_t full_count     = 0;
    std::size_t total          = 0;
    for (std::size_t n = 0; n <= scan_length; ++n) {
      for (auto const& w : derived.language(n)) {
        auto rd = return_words(derived, w).returns;
        std::vector<word> lifted;
        for (auto const& r : rd) {
          lifted.push_back(data.theta(r));
        }
        sort_words(lifted);
        if (lifted != return_words(oracle, data.theta(w) + u).returns) {
          identity_holds = false;
        }
        ++total;
        if (core_graph(b.size(), as_group_words(rd)).is_full()) {
          ++full_count;
        }
      }
    }
    out["lift_identity"]      = identity_holds;
    out["derived_scanned"]    = total;
    out["derived_full_count"] = full_count;
    return out;
  }

  json check_substitution_closure(language_oracle const& oracle,
                                  substitution const&    tau,
                                  std::size_t            scan_length) {
    auto image      = language_oracle::image(tau, oracle);
    auto const& c   = image.letters();
    bool surjective = core_graph(c.size(), free_morphism(tau).images()).is_full();

    json out;
    out["substitution"]    = tau.to_string();
    out["surjective"]      = surjective;
    auto bad_x             = first_non_full(oracle, 0, scan_length);
    out["shift_scan_full"] = !bad_x.has_value();

    json        proper = json::array();
    std::size_t total  = 0;
    for (std::size_t n = 1; n <= scan_length; ++n) {
      for (auto const& v : image.language(n)) {
        ++total;
        auto returns = return_words(image, v).returns;
        if (!core_graph(c.size(), as_group_words(returns)).is_full()) {
          proper.push_back(json{{"word", c.render(v)},
                                {"returns", render_words(c, returns)}});
        }
      }
    }
    out["image_scanned"] = total;
    out["image_proper"]  = proper;
    out["image_scan_full"] = proper.empty();
    return out;
  }

}  // namespace retword
