#include "retword/language.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <unordered_set>

#include "retword/error.hpp"

namespace retword {

  namespace {
    constexpr std::size_t cover_cap = std::size_t(1) << 28;

    // Reorders the rules of s so that its domain is `letters`.
    substitution align_domain(substitution const& s, alphabet const& letters) {
      if (s.domain() == letters) {
        return s;
      }
      if (s.domain().size() != letters.size()) {
        throw error(error_kind::incompatible,
                    "expected one rule for each of the "
                        + std::to_string(letters.size()) + " letters");
      }
      std::vector<word> images;
      for (auto const& name : letters.names()) {
        auto a = s.domain().find(name);
        if (!a) {
          throw error(error_kind::unknown_symbol,
                      "no rule for letter '" + name + "'");
        }
        images.push_back(s.image(*a));
      }
      return substitution(letters, s.codomain(), std::move(images));
    }

    // Generalized suffix automaton, used to count distinct factors by length.
    class factor_automaton {
     public:
      explicit factor_automaton(std::size_t d) : _d(d) {
        new_state(0);
      }

      void add(word const& w) {
        int last = 0;
        for (char ch : w) {
          last = extend(last, static_cast<letter_type>(ch));
        }
      }

      // counts[n] = number of distinct factors of length n, n <= bound.
      std::vector<std::size_t> counts(std::size_t bound) const {
        std::vector<long long> diff(bound + 2, 0);
        for (std::size_t v = 1; v < _len.size(); ++v) {
          std::size_t lo = static_cast<std::size_t>(_len[_link[v]]) + 1;
          std::size_t hi = std::min<std::size_t>(_len[v], bound);
          if (lo <= hi) {
            diff[lo] += 1;
            diff[hi + 1] -= 1;
          }
        }
        std::vector<std::size_t> out(bound + 1, 0);
        long long                run = 0;
        for (std::size_t n = 1; n <= bound; ++n) {
          run += diff[n];
          out[n] = static_cast<std::size_t>(run);
        }
        out[0] = 1;
        return out;
      }

     private:
      int new_state(int len) {
        _len.push_back(len);
        _link.push_back(-1);
        _next.resize(_next.size() + _d, -1);
        return static_cast<int>(_len.size()) - 1;
      }

      int& next(int v, letter_type c) {
        return _next[static_cast<std::size_t>(v) * _d + c];
      }

      int clone(int q, int len) {
        int c = new_state(len);
        _link[c] = _link[q];
        for (std::size_t x = 0; x < _d; ++x) {
          _next[static_cast<std::size_t>(c) * _d + x]
              = _next[static_cast<std::size_t>(q) * _d + x];
        }
        return c;
      }

      int extend(int last, letter_type c) {
        if (next(last, c) != -1) {
          int q = next(last, c);
          if (_len[last] + 1 == _len[q]) {
            return q;
          }
          int cl   = clone(q, _len[last] + 1);
          _link[q] = cl;
          for (int p = last; p != -1 && next(p, c) == q; p = _link[p]) {
            next(p, c) = cl;
          }
          return cl;
        }
        int cur = new_state(_len[last] + 1);
        int p   = last;
        while (p != -1 && next(p, c) == -1) {
          next(p, c) = cur;
          p          = _link[p];
        }
        if (p == -1) {
          _link[cur] = 0;
        } else {
          int q = next(p, c);
          if (_len[p] + 1 == _len[q]) {
            _link[cur] = q;
          } else {
            int cl = clone(q, _len[p] + 1);
            while (p != -1 && next(p, c) == q) {
              next(p, c) = cl;
              p          = _link[p];
            }
            _link[q]   = cl;
            _link[cur] = cl;
          }
        }
        return cur;
      }

      std::size_t      _d;
      std::vector<int> _len;
      std::vector<int> _link;
      std::vector<int> _next;
    };
  }  // namespace

  struct language_oracle::impl {
    alphabet                    letters;
    std::optional<substitution> sigma;
    std::optional<substitution> tau;
    std::optional<substitution> phi;
    std::shared_ptr<impl const> base;

    std::vector<word> two_factors;  // over the domain of sigma

    mutable std::recursive_mutex                          mutex;
    mutable std::map<std::size_t, std::vector<word>>      covers;
    mutable std::map<std::size_t, std::vector<word>>      languages;
    mutable std::optional<word>                           point;

    std::vector<word> cover_words(std::size_t n) const;
    std::vector<word> language(std::size_t n) const;
    word              point_prefix(std::size_t n) const;
    std::size_t       default_bound() const;
  };

  std::vector<word> language_oracle::impl::cover_words(std::size_t n) const {
    std::lock_guard<std::recursive_mutex> lock(mutex);
    if (sigma) {
      std::size_t k = 0;
      while (true) {
        auto lengths = sigma->power_lengths(k);
        if (*std::min_element(lengths.begin(), lengths.end()) + 1 >= n) {
          break;
        }
        ++k;
      }
      auto it = covers.find(k);
      if (it != covers.end()) {
        return it->second;
      }
      auto        lengths = sigma->power_lengths(k);
      std::size_t total   = 0;
      for (auto const& ab : two_factors) {
        total += lengths[letter_at(ab, 0)] + lengths[letter_at(ab, 1)];
        if (total > cover_cap) {
          throw error(error_kind::cap_exceeded,
                      "factors of length " + std::to_string(n)
                          + " need covering words beyond the size cap");
        }
      }
      std::vector<word> out;
      for (auto const& ab : two_factors) {
        word w = ab;
        for (std::size_t i = 0; i < k; ++i) {
          w = (*sigma)(w);
        }
        if (tau) {
          w = (*tau)(w);
        }
        out.push_back(std::move(w));
      }
      covers.emplace(k, out);
      return out;
    }
    std::size_t shortest = phi->min_length();
    std::size_t m        = (n + shortest - 1) / shortest + 2;
    auto        it       = covers.find(m);
    if (it != covers.end()) {
      return it->second;
    }
    std::vector<word> out;
    std::size_t       total = 0;
    for (auto const& w : base->cover_words(m)) {
      out.push_back((*phi)(w));
      total += out.back().size();
      if (total > cover_cap) {
        throw error(error_kind::cap_exceeded,
                    "image covering words exceed the size cap");
      }
    }
    covers.emplace(m, out);
    return out;
  }

  std::vector<word> language_oracle::impl::language(std::size_t n) const {
    if (n == 0) {
      return {word()};
    }
    std::lock_guard<std::recursive_mutex> lock(mutex);
    auto                                  it = languages.find(n);
    if (it != languages.end()) {
      return it->second;
    }
    std::unordered_set<word> found;
    for (auto const& w : cover_words(n)) {
      for (std::size_t i = 0; i + n <= w.size(); ++i) {
        found.insert(w.substr(i, n));
      }
    }
    std::vector<word> out(found.begin(), found.end());
    std::sort(out.begin(), out.end());
    languages.emplace(n, out);
    return out;
  }

  word language_oracle::impl::point_prefix(std::size_t n) const {
    std::lock_guard<std::recursive_mutex> lock(mutex);
    if (point && point->size() >= n) {
      return point->substr(0, n);
    }
    word w;
    if (sigma) {
      auto s = find_seed_letter(*sigma);
      w      = fixed_point_prefix(*sigma, s.letter, s.power, n);
      if (tau) {
        w = (*tau)(w);
      }
    } else {
      w = (*phi)(base->point_prefix(n));
      w.resize(n);
    }
    point = w;
    return w;
  }

  std::size_t language_oracle::impl::default_bound() const {
    if (sigma) {
      std::size_t total = 0;
      for (auto const& im : sigma->images()) {
        total += im.size();
      }
      return total * total;
    }
    std::size_t total = 0;
    for (auto const& im : phi->images()) {
      total += im.size();
    }
    return std::max(total * total, base->default_bound() * phi->max_length());
  }

  ////////////////////////////////////////////////////////////////////////
  // language_oracle
  ////////////////////////////////////////////////////////////////////////

  language_oracle::language_oracle(substitution                sigma,
                                   std::optional<substitution> cover)
      : _impl(std::make_shared<impl>()) {
    if (!sigma.is_endomorphism()) {
      throw error(error_kind::incompatible,
                  "the generating substitution must be an endomorphism");
    }
    if (!is_primitive(sigma)) {
      throw error(error_kind::not_primitive,
                  "the substitution " + sigma.to_string()
                      + " is not primitive");
    }
    std::size_t const d       = sigma.domain().size();
    auto              lengths = sigma.power_lengths((d - 1) * (d - 1) + 1);
    if (*std::min_element(lengths.begin(), lengths.end()) < 2) {
      throw error(error_kind::non_growing,
                  "the substitution " + sigma.to_string()
                      + " does not generate an infinite word");
    }
    if (cover) {
      auto tau = align_domain(*cover, sigma.domain());
      if (tau.max_length() != 1) {
        throw error(error_kind::incompatible,
                    "the cover must be letter-to-letter");
      }
      _impl->letters = tau.codomain();
      _impl->tau     = std::move(tau);
    } else {
      _impl->letters = sigma.domain();
    }

    std::set<word>    seen;
    std::vector<word> todo;
    auto              visit = [&](word const& w) {
      for (std::size_t i = 0; i + 2 <= w.size(); ++i) {
        auto ab = w.substr(i, 2);
        if (seen.insert(ab).second) {
          todo.push_back(ab);
        }
      }
    };
    for (auto const& im : sigma.images()) {
      visit(im);
    }
    while (!todo.empty()) {
      auto ab = todo.back();
      todo.pop_back();
      visit(sigma(ab));
    }
    _impl->two_factors.assign(seen.begin(), seen.end());
    _impl->sigma = std::move(sigma);
  }

  language_oracle language_oracle::image(substitution const&    phi,
                                         language_oracle const& base) {
    auto p    = std::make_shared<impl>();
    p->phi    = align_domain(phi, base.letters());
    p->letters = p->phi->codomain();
    p->base   = base._impl;
    return language_oracle(std::move(p));
  }

  alphabet const& language_oracle::letters() const {
    return _impl->letters;
  }

  std::optional<substitution> const& language_oracle::generator() const {
    return _impl->sigma;
  }

  std::optional<substitution> const& language_oracle::cover() const {
    return _impl->tau;
  }

  bool language_oracle::is_pure() const {
    return _impl->sigma.has_value() && !_impl->tau.has_value();
  }

  std::vector<word> language_oracle::language(std::size_t n) const {
    return _impl->language(n);
  }

  bool language_oracle::contains(word const& w) const {
    auto lang = _impl->language(w.size());
    return std::binary_search(lang.begin(), lang.end(), w);
  }

  std::size_t language_oracle::complexity(std::size_t n) const {
    return _impl->language(n).size();
  }

  std::vector<std::size_t>
  language_oracle::complexity_profile(std::size_t n) const {
    factor_automaton automaton(_impl->letters.size());
    for (auto const& w : _impl->cover_words(n)) {
      automaton.add(w);
    }
    return automaton.counts(n);
  }

  std::size_t language_oracle::default_periodicity_bound() const {
    return _impl->default_bound();
  }

  periodicity language_oracle::is_periodic(std::size_t bound) const {
    if (bound == 0) {
      bound = _impl->default_bound();
    }
    periodicity result;
    std::size_t n = std::min<std::size_t>(16, bound + 1);
    while (true) {
      auto profile         = complexity_profile(n);
      result.checked_up_to = n;
      for (std::size_t i = 0; i < n; ++i) {
        if (profile[i + 1] == profile[i]) {
          result.periodic    = true;
          result.period      = profile[i];
          result.period_word = point_prefix(profile[i]);
          return result;
        }
      }
      if (n >= bound + 1) {
        return result;
      }
      n = std::min(2 * n, bound + 1);
    }
  }

  std::vector<word> language_oracle::cover_words(std::size_t n) const {
    return _impl->cover_words(n);
  }

  word language_oracle::point_prefix(std::size_t n) const {
    return _impl->point_prefix(n);
  }

}  // namespace retword
