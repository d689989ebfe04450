#include "retword/fingroup.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <unordered_set>

#include "retword/error.hpp"

namespace retword {

  namespace {
    std::string_view trim(std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
      }
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
      }
      return s;
    }

    int parse_int(std::string_view s) {
      s = trim(s);
      if (s.empty()) {
        throw error(error_kind::parse_error, "expected an integer");
      }
      bool negative = s.front() == '-';
      if (negative) {
        s.remove_prefix(1);
      }
      if (s.empty() || s.size() > 9) {
        throw error(error_kind::parse_error, "bad integer");
      }
      int value = 0;
      for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
          throw error(error_kind::parse_error,
                      "bad integer '" + std::string(s) + "'");
        }
        value = 10 * value + (c - '0');
      }
      return negative ? -value : value;
    }

    // Cycles as lists of 1-based points.
    std::vector<std::vector<int>> parse_cycles(std::string_view text) {
      text = trim(text);
      std::vector<std::vector<int>> cycles;
      if (text == "id" || text.empty()) {
        return cycles;
      }
      std::size_t i = 0;
      while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
          ++i;
          continue;
        }
        if (text[i] != '(') {
          throw error(error_kind::parse_error,
                      "expected '(' in '" + std::string(text) + "'");
        }
        auto close = text.find(')', i);
        if (close == std::string_view::npos) {
          throw error(error_kind::parse_error, "unbalanced parenthesis");
        }
        std::vector<int> cycle;
        auto             inner = text.substr(i + 1, close - i - 1);
        std::size_t      j     = 0;
        while (j < inner.size()) {
          while (j < inner.size()
                 && (std::isspace(static_cast<unsigned char>(inner[j]))
                     || inner[j] == ',')) {
            ++j;
          }
          std::size_t k = j;
          while (k < inner.size()
                 && !std::isspace(static_cast<unsigned char>(inner[k]))
                 && inner[k] != ',') {
            ++k;
          }
          if (k > j) {
            int p = parse_int(inner.substr(j, k - j));
            if (p < 1) {
              throw error(error_kind::parse_error, "points are 1-based");
            }
            cycle.push_back(p);
          }
          j = k;
        }
        cycles.push_back(std::move(cycle));
        i = close + 1;
      }
      return cycles;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // finite_element
  ////////////////////////////////////////////////////////////////////////

  finite_element finite_element::permutation(std::vector<int> images) {
    std::vector<bool> hit(images.size(), false);
    for (int x : images) {
      if (x < 0 || static_cast<std::size_t>(x) >= images.size() || hit[x]) {
        throw error(error_kind::parse_error, "not a permutation");
      }
      hit[x] = true;
    }
    finite_element e;
    e._kind = backend::permutation;
    e._data = std::move(images);
    return e;
  }

  finite_element finite_element::modular(std::vector<int> entries, int modulus) {
    if (modulus < 1) {
      throw error(error_kind::parse_error, "the modulus must be positive");
    }
    for (auto& x : entries) {
      x = ((x % modulus) + modulus) % modulus;
    }
    finite_element e;
    e._kind    = backend::modular;
    e._modulus = modulus;
    e._data    = std::move(entries);
    return e;
  }

  finite_element finite_element::identity(backend kind, std::size_t size, int modulus) {
    if (kind == backend::permutation) {
      std::vector<int> images(size);
      for (std::size_t i = 0; i < size; ++i) {
        images[i] = static_cast<int>(i);
      }
      return permutation(std::move(images));
    }
    return modular(std::vector<int>(size, 0), modulus);
  }

  bool finite_element::is_identity() const {
    for (std::size_t i = 0; i < _data.size(); ++i) {
      if (_data[i] != (_kind == backend::permutation ? static_cast<int>(i) : 0)) {
        return false;
      }
    }
    return true;
  }

  finite_element finite_element::operator*(finite_element const& rhs) const {
    if (_kind != rhs._kind || _data.size() != rhs._data.size()
        || _modulus != rhs._modulus) {
      throw error(error_kind::incompatible, "elements of different groups");
    }
    finite_element e = *this;
    if (_kind == backend::permutation) {
      for (std::size_t i = 0; i < _data.size(); ++i) {
        e._data[i] = _data[rhs._data[i]];
      }
    } else {
      for (std::size_t i = 0; i < _data.size(); ++i) {
        e._data[i] = (_data[i] + rhs._data[i]) % _modulus;
      }
    }
    return e;
  }

  finite_element finite_element::inverse() const {
    finite_element e = *this;
    if (_kind == backend::permutation) {
      for (std::size_t i = 0; i < _data.size(); ++i) {
        e._data[_data[i]] = static_cast<int>(i);
      }
    } else {
      for (std::size_t i = 0; i < _data.size(); ++i) {
        e._data[i] = (_modulus - _data[i]) % _modulus;
      }
    }
    return e;
  }

  std::string finite_element::render() const {
    std::string out;
    if (_kind == backend::modular) {
      out = "[";
      for (std::size_t i = 0; i < _data.size(); ++i) {
        if (i != 0) {
          out += ",";
        }
        out += std::to_string(_data[i]);
      }
      return out + "]";
    }
    std::vector<bool> seen(_data.size(), false);
    for (std::size_t i = 0; i < _data.size(); ++i) {
      if (seen[i] || _data[i] == static_cast<int>(i)) {
        continue;
      }
      out += "(";
      std::size_t j = i;
      bool        first = true;
      while (!seen[j]) {
        seen[j] = true;
        if (!first) {
          out += " ";
        }
        first = false;
        out += std::to_string(j + 1);
        j = static_cast<std::size_t>(_data[j]);
      }
      out += ")";
    }
    return out.empty() ? "id" : out;
  }

  std::size_t finite_element_hash::operator()(finite_element const& x) const noexcept {
    std::size_t h = static_cast<std::size_t>(x.modulus()) * 0x9e3779b97f4a7c15ULL;
    for (int v : x.data()) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

  ////////////////////////////////////////////////////////////////////////
  // finite_morphism
  ////////////////////////////////////////////////////////////////////////

  finite_morphism::finite_morphism(alphabet domain, std::vector<finite_element> images)
      : _domain(std::move(domain)), _images(std::move(images)) {
    if (_images.size() != _domain.size() || _images.empty()) {
      throw error(error_kind::incompatible,
                  "a finite morphism needs one image per letter");
    }
    auto const& first = _images.front();
    _identity         = finite_element::identity(first.kind(), first.data().size(),
                                         first.modulus());
    for (auto const& x : _images) {
      // Multiplying checks compatibility.
      (void) (x * _identity);
    }
  }

  finite_morphism finite_morphism::abelian_mod(alphabet const& a, int k) {
    std::vector<finite_element> images;
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::vector<int> v(a.size(), 0);
      v[i] = 1;
      images.push_back(finite_element::modular(std::move(v), k));
    }
    return finite_morphism(a, std::move(images));
  }

  finite_element finite_morphism::evaluate(group_word const& g) const {
    finite_element result = _identity;
    for (auto x : g.letters()) {
      auto a = static_cast<std::size_t>(std::abs(x) - 1);
      if (a >= _images.size()) {
        throw error(error_kind::letter_outside_domain,
                    "letter outside the domain of the morphism");
      }
      result = result * (x > 0 ? _images[a] : _images[a].inverse());
    }
    return result;
  }

  finite_element finite_morphism::evaluate(word const& w) const {
    finite_element result = _identity;
    for (std::size_t i = 0; i < w.size(); ++i) {
      result = result * _images.at(letter_at(w, i));
    }
    return result;
  }

  std::string finite_morphism::to_string() const {
    std::string out = kind() == backend::permutation
                          ? "perm: "
                          : "mod " + std::to_string(_identity.modulus()) + ": ";
    for (std::size_t a = 0; a < _images.size(); ++a) {
      if (a != 0) {
        out += "; ";
      }
      out += _domain.name(static_cast<letter_type>(a)) + "->" + _images[a].render();
    }
    return out;
  }

  finite_morphism parse_finite_morphism(std::string_view text,
                                        alphabet const&  letters) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos) {
      throw error(error_kind::parse_error,
                  "a morphism starts with 'perm:' or 'mod k:'");
    }
    auto    head = trim(text.substr(0, colon));
    backend kind;
    int     modulus = 0;
    if (head == "perm") {
      kind = backend::permutation;
    } else if (head.substr(0, 3) == "mod") {
      kind    = backend::modular;
      modulus = parse_int(head.substr(3));
      if (modulus < 1) {
        throw error(error_kind::parse_error, "the modulus must be positive");
      }
    } else {
      throw error(error_kind::parse_error,
                  "unknown morphism kind '" + std::string(head) + "'");
    }
    std::map<letter_type, std::string> rules;
    auto                               body = text.substr(colon + 1);
    std::size_t                        start = 0;
    while (start <= body.size()) {
      auto end  = body.find(';', start);
      auto rule = trim(body.substr(start, end == std::string_view::npos
                                              ? std::string_view::npos
                                              : end - start));
      if (!rule.empty()) {
        auto arrow = rule.find("->");
        if (arrow == std::string_view::npos) {
          throw error(error_kind::parse_error,
                      "rule '" + std::string(rule) + "' lacks '->'");
        }
        auto a = letters.index(trim(rule.substr(0, arrow)));
        if (!rules.emplace(a, std::string(trim(rule.substr(arrow + 2)))).second) {
          throw error(error_kind::duplicate_rule,
                      "more than one rule for '" + letters.name(a) + "'");
        }
      }
      if (end == std::string_view::npos) {
        break;
      }
      start = end + 1;
    }
    for (std::size_t a = 0; a < letters.size(); ++a) {
      if (!rules.count(static_cast<letter_type>(a))) {
        throw error(error_kind::parse_error,
                    "no image for letter '" + letters.name(a) + "'");
      }
    }
    std::vector<finite_element> images;
    if (kind == backend::permutation) {
      std::vector<std::vector<std::vector<int>>> all;
      int                                        degree = 1;
      for (auto const& [a, rhs] : rules) {
        all.push_back(parse_cycles(rhs));
        for (auto const& cycle : all.back()) {
          for (int p : cycle) {
            degree = std::max(degree, p);
          }
        }
      }
      for (auto const& cycles : all) {
        std::vector<int>  images_of(degree);
        std::vector<bool> used(degree, false);
        for (int i = 0; i < degree; ++i) {
          images_of[i] = i;
        }
        for (auto const& cycle : cycles) {
          for (std::size_t i = 0; i < cycle.size(); ++i) {
            int p = cycle[i] - 1;
            if (used[p]) {
              throw error(error_kind::parse_error, "cycles are not disjoint");
            }
            used[p]      = true;
            images_of[p] = cycle[(i + 1) % cycle.size()] - 1;
          }
        }
        images.push_back(finite_element::permutation(std::move(images_of)));
      }
    } else {
      std::size_t dim = 0;
      for (auto const& [a, rhs] : rules) {
        std::string_view v = trim(rhs);
        if (v.size() < 2 || v.front() != '[' || v.back() != ']') {
          throw error(error_kind::parse_error,
                      "expected a vector such as [1,0], got '" + rhs + "'");
        }
        v = v.substr(1, v.size() - 2);
        std::vector<int> entries;
        std::size_t      s = 0;
        while (true) {
          auto e = v.find(',', s);
          entries.push_back(parse_int(v.substr(
              s, e == std::string_view::npos ? std::string_view::npos : e - s)));
          if (e == std::string_view::npos) {
            break;
          }
          s = e + 1;
        }
        if (dim != 0 && entries.size() != dim) {
          throw error(error_kind::parse_error, "vectors of different lengths");
        }
        dim = entries.size();
        images.push_back(finite_element::modular(std::move(entries), modulus));
      }
    }
    return finite_morphism(letters, std::move(images));
  }

  ////////////////////////////////////////////////////////////////////////
  // subgroups
  ////////////////////////////////////////////////////////////////////////

  std::vector<finite_element> closure(std::vector<finite_element> const& gens,
                                      finite_element const&              identity,
                                      std::size_t                        cap) {
    std::unordered_set<finite_element, finite_element_hash> seen{identity};
    std::vector<finite_element>                             order{identity};
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (auto const& g : gens) {
        auto y = order[i] * g;
        if (seen.insert(y).second) {
          if (seen.size() > cap) {
            throw error(error_kind::size_exceeded,
                        "the generated subgroup has more than "
                            + std::to_string(cap) + " elements");
          }
          order.push_back(std::move(y));
        }
      }
    }
    std::sort(order.begin(), order.end());
    return order;
  }

  std::vector<finite_element> target_group(finite_morphism const& phi,
                                           std::size_t            cap) {
    return closure(phi.images(), phi.identity(), cap);
  }

  bool is_full(std::vector<finite_element> const& sub, finite_morphism const& phi) {
    return closure(sub, phi.identity()).size() == target_group(phi).size();
  }

  bool conjugate_subgroups(std::vector<finite_element> const& s1,
                           std::vector<finite_element> const& s2,
                           std::vector<finite_element> const& g) {
    if (s1.size() != s2.size()) {
      return false;
    }
    auto target = s2;
    std::sort(target.begin(), target.end());
    for (auto const& x : g) {
      auto                        xi = x.inverse();
      std::vector<finite_element> conj;
      conj.reserve(s1.size());
      for (auto const& s : s1) {
        conj.push_back(xi * s * x);
      }
      std::sort(conj.begin(), conj.end());
      if (conj == target) {
        return true;
      }
    }
    return false;
  }

  std::string render_subgroup(std::vector<finite_element> const& sub) {
    std::string out = "{";
    for (std::size_t i = 0; i < sub.size(); ++i) {
      if (i != 0) {
        out += ", ";
      }
      out += sub[i].render();
    }
    return out + "}";
  }

}  // namespace retword
