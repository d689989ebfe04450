#include "retword/shift.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

#include "retword/error.hpp"

namespace retword {

  namespace {
    constexpr std::size_t window_cap = std::size_t(1) << 22;

    struct occurrence {
      std::size_t position;
      std::size_t length;
    };

    // Occurrences of the elements of a factor code, by position.
    std::vector<occurrence> code_occurrences(word const&              w,
                                             std::vector<word> const& code) {
      std::vector<occurrence> out;
      for (auto const& s : code) {
        for (auto p : occurrences(w, s)) {
          out.push_back({p, s.size()});
        }
      }
      std::sort(out.begin(), out.end(), [](auto const& x, auto const& y) {
        return x.position < y.position;
      });
      return out;
    }

    // Gaps between consecutive occurrences, with the certification check.
    return_set scan_returns(language_oracle const&   oracle,
                            std::vector<word> const& code,
                            word const&              base) {
      std::size_t longest = 0;
      for (auto const& s : code) {
        longest = std::max(longest, s.size());
      }
      std::size_t window = 2 * longest + 2;
      while (true) {
        if (window > window_cap) {
          throw error(error_kind::cap_exceeded,
                      "return words are longer than the window cap");
        }
        std::set<word> found;
        bool           certified = true;
        bool           any       = false;
        for (auto const& w : oracle.cover_words(window)) {
          auto occ = code_occurrences(w, code);
          any      = any || !occ.empty();
          for (std::size_t i = 0; i < occ.size(); ++i) {
            if (i + 1 < occ.size()) {
              found.insert(w.substr(occ[i].position,
                                    occ[i + 1].position - occ[i].position));
            }
            if (occ[i].position + window <= w.size()) {
              if (i + 1 == occ.size()
                  || occ[i + 1].position + occ[i + 1].length
                         > occ[i].position + window) {
                certified = false;
              }
            }
          }
        }
        if (!any) {
          throw error(error_kind::not_a_factor,
                      "no element of the code occurs in the shift");
        }
        if (certified) {
          return_set r;
          r.base = base;
          r.returns.assign(found.begin(), found.end());
          sort_words(r.returns);
          r.window = window;
          return r;
        }
        window *= 2;
      }
    }
  }  // namespace

  void sort_words(std::vector<word>& ws) {
    std::sort(ws.begin(), ws.end(), [](word const& x, word const& y) {
      return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
  }

  return_set return_words(language_oracle const& oracle, word const& u) {
    if (u.empty()) {
      return_set r;
      r.returns = oracle.language(1);
      r.window  = 1;
      return r;
    }
    if (!oracle.contains(u)) {
      throw error(error_kind::not_a_factor,
                  "'" + oracle.letters().render(u) + "' is not in the language");
    }
    return scan_returns(oracle, {u}, u);
  }

  return_set return_words_to_set(language_oracle const&   oracle,
                                 std::vector<word> const& code) {
    if (code.empty()) {
      throw error(error_kind::not_a_factor_code, "a factor code is nonempty");
    }
    for (std::size_t i = 0; i < code.size(); ++i) {
      if (code[i].empty()) {
        throw error(error_kind::not_a_factor_code,
                    "a factor code has no empty word");
      }
      for (std::size_t j = 0; j < code.size(); ++j) {
        if (i != j && is_factor(code[j], code[i])) {
          throw error(error_kind::not_a_factor_code,
                      "'" + oracle.letters().render(code[i])
                          + "' is a factor of '"
                          + oracle.letters().render(code[j]) + "'");
        }
      }
    }
    return scan_returns(oracle, code, word());
  }

  core_graph return_group(language_oracle const& oracle, word const& u) {
    std::vector<group_word> gens;
    for (auto const& r : return_words(oracle, u).returns) {
      gens.push_back(group_word::from_word(r));
    }
    return core_graph(oracle.letters().size(), gens);
  }

  core_graph return_group_image(language_oracle const& oracle,
                                word const&            u,
                                free_morphism const&   phi) {
    std::vector<group_word> gens;
    for (auto const& r : return_words(oracle, u).returns) {
      gens.push_back(group_word::from_word(r));
    }
    return morphism_image(phi, gens);
  }

  std::vector<finite_element> return_group_image(language_oracle const& oracle,
                                                 word const&            u,
                                                 finite_morphism const& phi) {
    std::vector<finite_element> images;
    for (auto const& r : return_words(oracle, u).returns) {
      images.push_back(phi.evaluate(r));
    }
    return closure(images, phi.identity());
  }

  ////////////////////////////////////////////////////////////////////////
  // Rauzy graphs
  ////////////////////////////////////////////////////////////////////////

  bool rauzy_graph::is_strongly_connected() const {
    std::size_t const n = vertices.size();
    if (n == 0) {
      return true;
    }
    std::vector<std::vector<std::size_t>> fwd(n), bwd(n);
    for (auto const& [u, a, v] : edges) {
      fwd[u].push_back(v);
      bwd[v].push_back(u);
    }
    auto reaches_all = [n](std::vector<std::vector<std::size_t>> const& adj) {
      std::vector<bool>        seen(n, false);
      std::vector<std::size_t> stack{0};
      seen[0]           = true;
      std::size_t count = 1;
      while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (auto t : adj[v]) {
          if (!seen[t]) {
            seen[t] = true;
            ++count;
            stack.push_back(t);
          }
        }
      }
      return count == n;
    };
    return reaches_all(fwd) && reaches_all(bwd);
  }

  rauzy_graph build_rauzy_graph(language_oracle const& oracle, std::size_t n) {
    rauzy_graph g;
    g.order    = n;
    g.vertices = oracle.language(n);
    auto index = [&g](word const& w) {
      return static_cast<std::size_t>(
          std::lower_bound(g.vertices.begin(), g.vertices.end(), w)
          - g.vertices.begin());
    };
    for (auto const& w : oracle.language(n + 1)) {
      g.edges.emplace_back(index(w.substr(0, n)), letter_at(w, 0),
                           index(w.substr(1, n)));
    }
    return g;
  }

  core_graph rauzy_group(language_oracle const& oracle, word const& u) {
    auto g  = build_rauzy_graph(oracle, u.size());
    auto it = std::lower_bound(g.vertices.begin(), g.vertices.end(), u);
    if (it == g.vertices.end() || *it != u) {
      throw error(error_kind::not_a_factor,
                  "'" + oracle.letters().render(u) + "' is not in the language");
    }
    return core_graph::from_graph(oracle.letters().size(), g.vertices.size(),
                                  g.edges,
                                  static_cast<std::size_t>(it - g.vertices.begin()));
  }

  ////////////////////////////////////////////////////////////////////////
  // extension graphs
  ////////////////////////////////////////////////////////////////////////

  std::vector<std::size_t> extension_graph::components() const {
    std::size_t const        nl = left.size();
    std::vector<std::size_t> parent(nl + right.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](std::size_t x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x         = parent[x];
      }
      return x;
    };
    for (auto const& [l, r] : edges) {
      auto x = find(l);
      auto y = find(nl + r);
      if (x != y) {
        parent[std::max(x, y)] = std::min(x, y);
      }
    }
    std::vector<std::size_t> out(parent.size());
    for (std::size_t i = 0; i < parent.size(); ++i) {
      out[i] = find(i);
    }
    return out;
  }

  std::size_t extension_graph::component_count() const {
    auto comps = components();
    std::sort(comps.begin(), comps.end());
    return static_cast<std::size_t>(
        std::unique(comps.begin(), comps.end()) - comps.begin());
  }

  bool extension_graph::is_tree() const {
    return component_count() == 1
           && edges.size() + 1 == left.size() + right.size();
  }

  extension_graph build_extension_graph(language_oracle const& oracle,
                                        word const&            u,
                                        std::size_t            d) {
    if (!oracle.contains(u)) {
      throw error(error_kind::not_a_factor,
                  "'" + oracle.letters().render(u) + "' is not in the language");
    }
    extension_graph g;
    g.center = u;
    g.order  = d;
    std::vector<std::pair<word, word>> pairs;
    for (auto const& w : oracle.language(u.size() + 2 * d)) {
      if (w.compare(d, u.size(), u) == 0) {
        pairs.emplace_back(w.substr(0, d), w.substr(d + u.size()));
      }
    }
    for (auto const& [l, r] : pairs) {
      g.left.push_back(l);
      g.right.push_back(r);
    }
    for (auto* side : {&g.left, &g.right}) {
      std::sort(side->begin(), side->end());
      side->erase(std::unique(side->begin(), side->end()), side->end());
    }
    auto index = [](std::vector<word> const& side, word const& w) {
      return static_cast<std::size_t>(
          std::lower_bound(side.begin(), side.end(), w) - side.begin());
    };
    for (auto const& [l, r] : pairs) {
      g.edges.emplace_back(index(g.left, l), index(g.right, r));
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
  }

  bool is_dendric(language_oracle const& oracle, word const& u) {
    return build_extension_graph(oracle, u, 1).is_tree();
  }

  bool is_suffix_connected(language_oracle const& oracle, word const& u) {
    auto letters = build_extension_graph(oracle, u, 1).left;
    for (std::size_t d = 1; d <= u.size() + 1; ++d) {
      word prefix = u.substr(0, d - 1);
      word suffix = u.substr(d - 1);
      auto g      = build_extension_graph(oracle, suffix, d);
      auto comps  = g.components();
      std::set<std::size_t> seen;
      for (auto const& a : letters) {
        auto v  = a + prefix;
        auto it = std::lower_bound(g.left.begin(), g.left.end(), v);
        seen.insert(comps[static_cast<std::size_t>(it - g.left.begin())]);
      }
      if (seen.size() <= 1) {
        return true;
      }
    }
    return false;
  }

  ////////////////////////////////////////////////////////////////////////
  // occurrence prefixes
  ////////////////////////////////////////////////////////////////////////

  occurrence_prefix_set occurrence_prefixes(language_oracle const& oracle,
                                            word const&            w,
                                            std::size_t            window) {
    occurrence_prefix_set s;
    s.target = w;
    s.window = window;
    s.point  = oracle.point_prefix(window + w.size());
    for (std::size_t m = 0; m < window; ++m) {
      if (s.point.compare(m, w.size(), w) == 0) {
        s.positions.push_back(m);
      }
    }
    return s;
  }

  saturation_result welldoc_saturates(language_oracle const& oracle,
                                      word const&            w,
                                      finite_morphism const& phi,
                                      std::size_t            cap) {
    saturation_result result;
    result.group_order = target_group(phi).size();
    std::unordered_set<finite_element, finite_element_hash> images;
    std::size_t window = 1024;
    std::size_t m      = 0;
    finite_element prefix_image = phi.identity();
    while (true) {
      window    = std::min(window, cap);
      auto point = oracle.point_prefix(window + w.size());
      for (; m < window; ++m) {
        if (point.compare(m, w.size(), w) == 0) {
          images.insert(prefix_image);
          if (images.size() == result.group_order) {
            result.saturated = tristate::yes;
            result.window    = m + 1;
            result.images    = images.size();
            return result;
          }
        }
        prefix_image = prefix_image * phi.images()[letter_at(point, m)];
      }
      if (window >= cap) {
        result.window = window;
        result.images = images.size();
        return result;
      }
      window *= 2;
    }
  }

}  // namespace retword
