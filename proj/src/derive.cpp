#include "retword/derive.hpp"

#include <algorithm>
#include <map>

#include "retword/error.hpp"
#include "retword/shift.hpp"

namespace retword {

  namespace {
    constexpr std::size_t point_cap = std::size_t(1) << 24;

    substitution const& pure_generator(language_oracle const& oracle) {
      if (!oracle.is_pure()) {
        throw error(error_kind::incompatible,
                    "derivation needs a shift generated by a substitution "
                    "without cover");
      }
      return *oracle.generator();
    }

    word point_of(substitution const& sigma, seed s, std::size_t n) {
      return fixed_point_prefix(sigma, s.letter, s.power, n);
    }

    // Splits the point at occurrences of u and numbers the pieces in order of
    // first appearance.  Stops once `stop` returns true.
    template <typename Stop>
    std::vector<word> decode(substitution const& sigma,
                             seed                s,
                             word const&         u,
                             Stop&&              stop,
                             std::size_t         start) {
      std::size_t n = std::max<std::size_t>(start, 64);
      while (true) {
        if (n > point_cap) {
          throw error(error_kind::cap_exceeded,
                      "the point prefix needed for decoding exceeds the cap");
        }
        auto              x   = point_of(sigma, s, n);
        auto              occ = occurrences(x, u);
        std::vector<word> pieces;
        for (std::size_t i = 0; i + 1 < occ.size(); ++i) {
          pieces.push_back(x.substr(occ[i], occ[i + 1] - occ[i]));
          if (stop(pieces)) {
            return pieces;
          }
        }
        n *= 2;
      }
    }
  }  // namespace

  std::optional<seed> seed_for_prefix(language_oracle const& oracle,
                                      word const&            u) {
    auto const& sigma = pure_generator(oracle);
    auto        canon = find_seed_letter(sigma);
    if (point_of(sigma, canon, u.size()) == u) {
      return canon;
    }
    std::size_t const d = sigma.domain().size();
    for (std::size_t k = 1; k <= d; ++k) {
      auto power = sigma.power(k);
      for (std::size_t b = 0; b < d; ++b) {
        auto const& im = power.image(static_cast<letter_type>(b));
        if (im.size() < 2 || letter_at(im, 0) != b) {
          continue;
        }
        seed s{static_cast<letter_type>(b), k};
        if (point_of(sigma, s, u.size()) == u) {
          return s;
        }
      }
    }
    return std::nullopt;
  }

  derived_data derive_prefix(language_oracle const& oracle,
                             word const&            u,
                             std::optional<seed>    point_seed) {
    auto const& sigma = pure_generator(oracle);
    seed        s     = point_seed ? *point_seed : find_seed_letter(sigma);
    if (point_of(sigma, s, u.size()) != u) {
      throw error(error_kind::not_a_prefix,
                  "'" + oracle.letters().render(u)
                      + "' is not a prefix of the point");
    }
    auto returns = return_words(oracle, u).returns;
    std::size_t longest = 0;
    for (auto const& r : returns) {
      longest = std::max(longest, r.size());
    }
    std::vector<word> ordered;
    decode(
        sigma, s, u,
        [&](std::vector<word> const& pieces) {
          auto const& r = pieces.back();
          if (std::find(ordered.begin(), ordered.end(), r) == ordered.end()) {
            ordered.push_back(r);
          }
          return ordered.size() == returns.size();
        },
        4 * (longest + u.size()));
    if (ordered.size() != returns.size()) {
      throw error(error_kind::decomposition_failure,
                  "the point does not show every return word");
    }

    std::map<word, letter_type> number;
    for (std::size_t i = 0; i < ordered.size(); ++i) {
      number.emplace(ordered[i], static_cast<letter_type>(i));
    }
    auto const power = sigma.power(s.power);
    std::vector<word> images;
    for (auto const& r : ordered) {
      auto        block = power(r);
      word        w     = block + u;
      auto        occ   = occurrences(w, u);
      word        image;
      std::size_t prev = 0;
      if (occ.empty() || occ.front() != 0) {
        throw error(error_kind::decomposition_failure,
                    "image of a return word does not start with the prefix");
      }
      for (std::size_t q : occ) {
        if (q == 0) {
          continue;
        }
        if (q > block.size()) {
          break;
        }
        auto it = number.find(w.substr(prev, q - prev));
        if (it == number.end()) {
          throw error(error_kind::decomposition_failure,
                      "a piece of an image is not a return word");
        }
        image.push_back(static_cast<char>(it->second));
        prev = q;
      }
      if (prev != block.size()) {
        throw error(error_kind::decomposition_failure,
                    "image of a return word does not end at an occurrence");
      }
      images.push_back(std::move(image));
    }
    auto letters = alphabet::numbered(ordered.size());

    derived_data data;
    data.prefix     = u;
    data.point_seed = s;
    data.theta      = substitution(letters, oracle.letters(), ordered);
    data.sigma      = substitution(letters, std::move(images));
    return data;
  }

  word derived_point_prefix(language_oracle const& oracle,
                            derived_data const&    data,
                            std::size_t            m) {
    auto const& sigma = pure_generator(oracle);
    if (m == 0) {
      return {};
    }
    auto pieces = decode(
        sigma, data.point_seed, data.prefix,
        [m](std::vector<word> const& p) { return p.size() >= m; },
        4 * (data.theta.max_length() + data.prefix.size()) * m);
    word out;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t a = 0; a < data.theta.images().size(); ++a) {
        if (data.theta.images()[a] == pieces[i]) {
          out.push_back(static_cast<char>(a));
          break;
        }
      }
    }
    return out;
  }

  language_oracle derived_oracle(language_oracle const& oracle, word const& u) {
    auto s = seed_for_prefix(oracle, u);
    if (!s) {
      throw error(error_kind::not_a_prefix,
                  "'" + oracle.letters().render(u)
                      + "' is not a prefix of a fixed point of a power");
    }
    return language_oracle(derive_prefix(oracle, u, s).sigma);
  }

  ////////////////////////////////////////////////////////////////////////
  // derivation chain
  ////////////////////////////////////////////////////////////////////////

  substitution const& derivation_record::theta(std::size_t m) const {
    if (m < steps.size()) {
      return steps[m].theta;
    }
    std::size_t const p = j - i;
    return steps[i + 1 + (m - i - 1) % p].theta;
  }

  word derivation_record::v(std::size_t m) const {
    if (m < steps.size()) {
      return steps[m].prefix;
    }
    auto cumulative = steps.back().cumulative;
    auto prefix     = steps.back().prefix;
    for (std::size_t t = steps.size(); t <= m; ++t) {
      prefix     = cumulative(single_letter(0)) + prefix;
      cumulative = cumulative.compose(theta(t));
    }
    return prefix;
  }

  word derivation_record::u(std::size_t n) const {
    return v(i + n * (j - i));
  }

  bool verify_cycle(language_oracle const&   oracle,
                    derivation_record const& record,
                    std::size_t              n) {
    auto returns = return_words(oracle, record.u(n)).returns;
    std::vector<word> images;
    for (std::size_t c = 0; c < record.c.size(); ++c) {
      word w = single_letter(static_cast<letter_type>(c));
      for (std::size_t t = 0; t < n; ++t) {
        w = record.alpha(w);
      }
      images.push_back(record.psi(w));
    }
    sort_words(images);
    return std::adjacent_find(images.begin(), images.end()) == images.end()
           && images == returns;
  }

  derivation_record derivation_cycle(language_oracle const& oracle,
                                     std::size_t            verify,
                                     std::size_t            cap) {
    derivation_record record;
    {
      auto            d0 = derive_prefix(oracle, word());
      derivation_step step;
      step.theta      = d0.theta;
      step.cumulative = d0.theta;
      step.sigma      = d0.sigma;
      record.steps.push_back(std::move(step));
    }
    while (true) {
      auto const& last  = record.steps.back();
      std::size_t n     = record.steps.size() - 1;
      bool        found = false;
      for (std::size_t i = 0; i < n; ++i) {
        if (record.steps[i].sigma == last.sigma) {
          record.i = i;
          record.j = n;
          found    = true;
          break;
        }
      }
      if (found) {
        break;
      }
      if (n + 1 >= cap) {
        throw error(error_kind::cap_exceeded,
                    "no repeated return substitution within "
                        + std::to_string(cap) + " derivation steps");
      }
      language_oracle derived(last.sigma);
      auto            d = derive_prefix(derived, single_letter(0), seed{0, 1});
      derivation_step step;
      step.prefix     = last.cumulative(single_letter(0)) + last.prefix;
      step.theta      = d.theta;
      step.cumulative = last.cumulative.compose(d.theta);
      step.sigma      = d.sigma;
      record.steps.push_back(std::move(step));
    }
    record.psi   = record.steps[record.i].cumulative;
    record.alpha = record.steps[record.i + 1].theta;
    for (std::size_t m = record.i + 2; m <= record.j; ++m) {
      record.alpha = record.alpha.compose(record.steps[m].theta);
    }
    record.c = record.steps[record.j].sigma.domain();
    for (std::size_t n = 0; n <= verify; ++n) {
      if (!verify_cycle(oracle, record, n)) {
        throw error(error_kind::decomposition_failure,
                    "return words to u(" + std::to_string(n)
                        + ") differ from psi alpha^n(C)");
      }
      record.verified_up_to = n;
    }
    return record;
  }

}  // namespace retword
