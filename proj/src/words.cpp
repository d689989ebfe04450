#include "retword/words.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>

#include "retword/error.hpp"

namespace retword {

  namespace {
    std::string strip_spaces(std::string_view text) {
      std::string out;
      out.reserve(text.size());
      for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
          out.push_back(c);
        }
      }
      return out;
    }

    std::vector<std::string_view> split(std::string_view text, char sep) {
      std::vector<std::string_view> parts;
      std::size_t                   start = 0;
      while (true) {
        auto pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos - start));
        if (pos == std::string_view::npos) {
          break;
        }
        start = pos + 1;
      }
      return parts;
    }

    std::size_t saturating_add(std::size_t x, std::size_t y) {
      constexpr auto top = std::numeric_limits<std::size_t>::max();
      return x > top - y ? top : x + y;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // alphabet
  ////////////////////////////////////////////////////////////////////////

  alphabet::alphabet(std::vector<std::string> names) : _names(std::move(names)) {
    if (_names.size() > max_size) {
      throw error(error_kind::size_exceeded,
                  "alphabets are limited to " + std::to_string(max_size)
                      + " letters");
    }
    for (std::size_t i = 0; i < _names.size(); ++i) {
      if (_names[i].empty()) {
        throw error(error_kind::parse_error, "empty letter name");
      }
      if (!_index.emplace(_names[i], static_cast<letter_type>(i)).second) {
        throw error(error_kind::duplicate_rule,
                    "duplicate letter '" + _names[i] + "' in alphabet");
      }
      _single_char = _single_char && _names[i].size() == 1;
    }
  }

  alphabet alphabet::numbered(std::size_t n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) {
      names.push_back(std::to_string(i));
    }
    return alphabet(std::move(names));
  }

  std::optional<letter_type> alphabet::find(std::string_view symbol) const {
    auto it = _index.find(std::string(symbol));
    if (it == _index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  letter_type alphabet::index(std::string_view symbol) const {
    auto a = find(symbol);
    if (!a) {
      throw error(error_kind::unknown_symbol,
                  "symbol '" + std::string(symbol) + "' is not in the alphabet");
    }
    return *a;
  }

  std::string alphabet::render(word const& w) const {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!_single_char && i != 0) {
        out.push_back(' ');
      }
      out += name(letter_at(w, i));
    }
    return out;
  }

  word alphabet::parse(std::string_view text) const {
    word w;
    bool spaced = std::any_of(text.begin(), text.end(), [](char c) {
      return std::isspace(static_cast<unsigned char>(c));
    });
    if (spaced || !_single_char) {
      std::size_t i = 0;
      while (i < text.size()) {
        while (i < text.size()
               && std::isspace(static_cast<unsigned char>(text[i]))) {
          ++i;
        }
        std::size_t j = i;
        while (j < text.size()
               && !std::isspace(static_cast<unsigned char>(text[j]))) {
          ++j;
        }
        if (j > i) {
          auto token = text.substr(i, j - i);
          if (_single_char && token.size() > 1) {
            for (char c : token) {
              w.push_back(static_cast<char>(index(std::string_view(&c, 1))));
            }
          } else {
            w.push_back(static_cast<char>(index(token)));
          }
        }
        i = j;
      }
      return w;
    }
    for (char c : text) {
      w.push_back(static_cast<char>(index(std::string_view(&c, 1))));
    }
    return w;
  }

  ////////////////////////////////////////////////////////////////////////
  // substitution
  ////////////////////////////////////////////////////////////////////////

  substitution::substitution(alphabet          domain,
                             alphabet          codomain,
                             std::vector<word> images)
      : _domain(std::move(domain)),
        _codomain(std::move(codomain)),
        _images(std::move(images)) {
    if (_images.size() != _domain.size()) {
      throw error(error_kind::incompatible,
                  "a substitution needs exactly one image per domain letter");
    }
    for (std::size_t a = 0; a < _images.size(); ++a) {
      if (_images[a].empty()) {
        throw error(error_kind::empty_image,
                    "the image of '" + _domain.name(a) + "' is empty");
      }
      for (char c : _images[a]) {
        if (static_cast<std::size_t>(static_cast<letter_type>(c))
            >= _codomain.size()) {
          throw error(error_kind::letter_outside_domain,
                      "image letter outside the codomain");
        }
      }
    }
  }

  substitution substitution::identity(alphabet const& letters) {
    std::vector<word> images;
    for (std::size_t a = 0; a < letters.size(); ++a) {
      images.push_back(single_letter(static_cast<letter_type>(a)));
    }
    return substitution(letters, std::move(images));
  }

  std::size_t substitution::max_length() const {
    std::size_t best = 0;
    for (auto const& im : _images) {
      best = std::max(best, im.size());
    }
    return best;
  }

  std::size_t substitution::min_length() const {
    if (_images.empty()) {
      return 0;
    }
    std::size_t best = _images[0].size();
    for (auto const& im : _images) {
      best = std::min(best, im.size());
    }
    return best;
  }

  word substitution::operator()(word const& w) const {
    word out;
    std::size_t total = 0;
    for (char c : w) {
      auto a = static_cast<letter_type>(c);
      if (a >= _images.size()) {
        throw error(error_kind::letter_outside_domain,
                    "letter outside the domain of the substitution");
      }
      total += _images[a].size();
    }
    out.reserve(total);
    for (char c : w) {
      out += _images[static_cast<letter_type>(c)];
    }
    return out;
  }

  substitution substitution::compose(substitution const& rhs) const {
    if (!(rhs.codomain() == _domain)) {
      throw error(error_kind::incompatible,
                  "cannot compose substitutions with mismatched alphabets");
    }
    std::vector<word> images;
    images.reserve(rhs.images().size());
    for (auto const& im : rhs.images()) {
      images.push_back((*this)(im));
    }
    return substitution(rhs.domain(), _codomain, std::move(images));
  }

  substitution substitution::power(std::size_t k) const {
    if (!is_endomorphism()) {
      throw error(error_kind::incompatible,
                  "only endomorphisms have powers");
    }
    substitution result = identity(_domain);
    for (std::size_t i = 0; i < k; ++i) {
      result = compose(result);
    }
    return result;
  }

  std::vector<std::size_t> substitution::power_lengths(std::size_t k) const {
    std::vector<std::size_t> lengths(_domain.size(), 1);
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<std::size_t> next(_domain.size(), 0);
      for (std::size_t a = 0; a < _domain.size(); ++a) {
        for (char c : _images[a]) {
          next[a] = saturating_add(next[a], lengths[static_cast<letter_type>(c)]);
        }
      }
      lengths = std::move(next);
    }
    return lengths;
  }

  std::vector<std::string> substitution::rules() const {
    std::vector<std::string> out;
    for (std::size_t a = 0; a < _images.size(); ++a) {
      out.push_back(_domain.name(a) + "->" + _codomain.render(_images[a]));
    }
    return out;
  }

  std::string substitution::to_string() const {
    std::string out;
    for (auto const& rule : rules()) {
      if (!out.empty()) {
        out += "; ";
      }
      out += rule;
    }
    return out;
  }

  substitution parse_substitution(std::string_view text, bool endomorphism) {
    std::vector<std::string> lhs;
    std::vector<std::string> rhs;
    for (auto part : split(text, ';')) {
      auto rule = strip_spaces(part);
      if (rule.empty()) {
        continue;
      }
      auto arrow = rule.find("->");
      if (arrow == std::string::npos) {
        throw error(error_kind::parse_error,
                    "rule '" + rule + "' lacks '->'");
      }
      auto letter = rule.substr(0, arrow);
      auto image  = rule.substr(arrow + 2);
      if (letter.size() != 1) {
        throw error(error_kind::parse_error,
                    "left-hand side '" + letter + "' is not a single symbol");
      }
      if (image.empty()) {
        throw error(error_kind::empty_image,
                    "the image of '" + letter + "' is empty");
      }
      if (std::find(lhs.begin(), lhs.end(), letter) != lhs.end()) {
        throw error(error_kind::duplicate_rule,
                    "more than one rule for '" + letter + "'");
      }
      lhs.push_back(letter);
      rhs.push_back(image);
    }
    if (lhs.empty()) {
      throw error(error_kind::parse_error, "no rules given");
    }
    alphabet domain(lhs);
    alphabet codomain;
    if (endomorphism) {
      codomain = domain;
    } else {
      std::vector<std::string> seen;
      for (auto const& image : rhs) {
        for (char c : image) {
          std::string symbol(1, c);
          if (std::find(seen.begin(), seen.end(), symbol) == seen.end()) {
            seen.push_back(symbol);
          }
        }
      }
      codomain = alphabet(seen);
    }
    std::vector<word> images;
    for (auto const& image : rhs) {
      word w;
      for (char c : image) {
        auto a = codomain.find(std::string_view(&c, 1));
        if (!a) {
          throw error(error_kind::unknown_symbol,
                      "symbol '" + std::string(1, c) + "' has no rule");
        }
        w.push_back(static_cast<char>(*a));
      }
      images.push_back(std::move(w));
    }
    return substitution(std::move(domain), std::move(codomain), std::move(images));
  }

  ////////////////////////////////////////////////////////////////////////
  // predicates
  ////////////////////////////////////////////////////////////////////////

  bool is_primitive(substitution const& s) {
    if (!s.is_endomorphism()) {
      return false;
    }
    std::size_t const d = s.domain().size();
    using matrix        = std::vector<std::vector<bool>>;
    matrix incidence(d, std::vector<bool>(d, false));
    for (std::size_t a = 0; a < d; ++a) {
      for (char c : s.image(a)) {
        incidence[a][static_cast<letter_type>(c)] = true;
      }
    }
    auto multiply = [d](matrix const& x, matrix const& y) {
      matrix z(d, std::vector<bool>(d, false));
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t k = 0; k < d; ++k) {
          if (x[i][k]) {
            for (std::size_t j = 0; j < d; ++j) {
              if (y[k][j]) {
                z[i][j] = true;
              }
            }
          }
        }
      }
      return z;
    };
    auto positive = [](matrix const& x) {
      return std::all_of(x.begin(), x.end(), [](auto const& row) {
        return std::all_of(row.begin(), row.end(), [](bool b) { return b; });
      });
    };
    std::size_t const bound = (d - 1) * (d - 1) + 1;
    matrix            power = incidence;
    for (std::size_t k = 1; k <= bound; ++k) {
      if (positive(power)) {
        return true;
      }
      power = multiply(power, incidence);
    }
    return false;
  }

  bool is_bifix(substitution const& s) {
    auto const& im = s.images();
    for (std::size_t a = 0; a < im.size(); ++a) {
      for (std::size_t b = 0; b < im.size(); ++b) {
        if (a == b || im[a].size() > im[b].size()) {
          continue;
        }
        auto const& small = im[a];
        auto const& big   = im[b];
        if (big.compare(0, small.size(), small) == 0
            || big.compare(big.size() - small.size(), small.size(), small)
                   == 0) {
          return false;
        }
      }
    }
    return true;
  }

  std::optional<std::size_t> is_constant_length(substitution const& s) {
    if (s.images().empty() || s.max_length() != s.min_length()) {
      return std::nullopt;
    }
    return s.max_length();
  }

  seed find_seed_letter(substitution const& s) {
    if (!s.is_endomorphism()) {
      throw error(error_kind::incompatible,
                  "fixed points need an endomorphism");
    }
    std::size_t const d = s.domain().size();
    // Only first letters and lengths matter, so track those.
    std::vector<letter_type> first(d);
    std::vector<std::size_t> length(d, 1);
    for (std::size_t a = 0; a < d; ++a) {
      first[a] = static_cast<letter_type>(a);
    }
    for (std::size_t k = 1; k <= d; ++k) {
      auto lengths = s.power_lengths(k);
      for (std::size_t a = 0; a < d; ++a) {
        first[a] = letter_at(s.image(first[a]), 0);
      }
      for (std::size_t a = 0; a < d; ++a) {
        if (first[a] == a && lengths[a] >= 2) {
          return {static_cast<letter_type>(a), k};
        }
      }
    }
    throw error(error_kind::not_found,
                "no letter a and power k <= #A with sigma^k(a) in aA+");
  }

  word fixed_point_prefix(substitution const& s,
                          letter_type         a,
                          std::size_t         k,
                          std::size_t         n) {
    if (n == 0) {
      return {};
    }
    word w = single_letter(a);
    while (w.size() < n) {
      word next = w;
      for (std::size_t j = 0; j < k; ++j) {
        next = s(next);
        if (next.size() > n) {
          next.resize(n);
        }
      }
      if (next.empty() || letter_at(next, 0) != a) {
        throw error(error_kind::not_found,
                    "sigma^k(a) does not start with a");
      }
      if (next.size() <= w.size()) {
        throw error(error_kind::non_growing,
                    "the seed letter does not generate an infinite word");
      }
      w = std::move(next);
    }
    w.resize(n);
    return w;
  }

  std::vector<std::size_t> occurrences(word const& w, word const& u) {
    std::vector<std::size_t> out;
    if (u.empty()) {
      out.resize(w.size() + 1);
      std::iota(out.begin(), out.end(), 0);
      return out;
    }
    for (auto pos = w.find(u); pos != word::npos; pos = w.find(u, pos + 1)) {
      out.push_back(pos);
    }
    return out;
  }

  bool is_factor(word const& w, word const& u) {
    return w.find(u) != word::npos;
  }

}  // namespace retword
