#ifndef RETWORD_WORDS_HPP_
#define RETWORD_WORDS_HPP_

// Alphabets, finite words and substitutions (monoid morphisms between free
// monoids), together with the classification predicates used throughout:
// primitivity, bifixity, constant length, and seeds of fixed points.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace retword {

  // A letter is the index of a symbol in its alphabet.
  using letter_type = std::uint8_t;

  // A finite word: one byte per letter, each byte being a letter index.  This
  // makes hashing, slicing and searching as cheap as for std::string.
  using word = std::string;

  inline letter_type letter_at(word const& w, std::size_t i) {
    return static_cast<letter_type>(w[i]);
  }

  inline word single_letter(letter_type a) {
    return word(1, static_cast<char>(a));
  }

  class alphabet {
   public:
    static constexpr std::size_t max_size = 127;

    alphabet() = default;
    explicit alphabet(std::vector<std::string> names);

    // The alphabet {1, ..., n}, used for return alphabets.
    static alphabet numbered(std::size_t n);

    std::size_t size() const noexcept {
      return _names.size();
    }

    std::string const& name(letter_type a) const {
      return _names.at(a);
    }

    std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    std::optional<letter_type> find(std::string_view symbol) const;
    letter_type index(std::string_view symbol) const;

    // True when every symbol is a single character; words then render as
    // plain strings, otherwise letters are separated by spaces.
    bool single_char() const noexcept {
      return _single_char;
    }

    std::string render(word const& w) const;
    word parse(std::string_view text) const;

    bool operator==(alphabet const& that) const {
      return _names == that._names;
    }

   private:
    std::vector<std::string>                     _names;
    std::unordered_map<std::string, letter_type> _index;
    bool                                         _single_char = true;
  };

  class substitution {
   public:
    substitution() = default;
    substitution(alphabet domain, alphabet codomain, std::vector<word> images);

    // An endomorphism of `letters`.
    substitution(alphabet letters, std::vector<word> images)
        : substitution(letters, letters, std::move(images)) {}

    static substitution identity(alphabet const& letters);

    alphabet const& domain() const noexcept {
      return _domain;
    }
    alphabet const& codomain() const noexcept {
      return _codomain;
    }
    std::vector<word> const& images() const noexcept {
      return _images;
    }
    word const& image(letter_type a) const {
      return _images.at(a);
    }

    bool is_endomorphism() const {
      return _domain == _codomain;
    }

    // |σ| and ⟨σ⟩: the longest and shortest image lengths.
    std::size_t max_length() const;
    std::size_t min_length() const;

    word operator()(word const& w) const;
    word apply(word const& w) const {
      return (*this)(w);
    }

    // (*this ∘ rhs)(w) = (*this)(rhs(w)).
    substitution compose(substitution const& rhs) const;
    substitution power(std::size_t k) const;

    // Image lengths of σ^k on each letter, without materialising the words.
    std::vector<std::size_t> power_lengths(std::size_t k) const;

    // Rules such as "a->ab", one per domain letter.
    std::vector<std::string> rules() const;
    std::string              to_string() const;

    bool operator==(substitution const& that) const {
      return _domain == that._domain && _codomain == that._codomain
             && _images == that._images;
    }

   private:
    alphabet          _domain;
    alphabet          _codomain;
    std::vector<word> _images;
  };

  // Parses "a->ab; b->ac; c->a".  The domain lists letters in rule order.  With
  // `endomorphism` set, every right-hand side symbol must have a rule and the
  // codomain equals the domain; otherwise the codomain lists the right-hand
  // side symbols in order of first appearance.
  substitution parse_substitution(std::string_view text,
                                  bool             endomorphism = true);

  bool                       is_primitive(substitution const& s);
  bool                       is_bifix(substitution const& s);
  std::optional<std::size_t> is_constant_length(substitution const& s);

  struct seed {
    letter_type letter;
    std::size_t power;
  };

  // The least power k ≤ #A, and then the first letter a, with σ^k(a) ∈ aA⁺.
  seed find_seed_letter(substitution const& s);

  // Length-n prefix of lim σ^{km}(a); requires σ^k(a) ∈ aA⁺.
  word fixed_point_prefix(substitution const& s,
                          letter_type         a,
                          std::size_t         k,
                          std::size_t         n);

  // Positions of all (possibly overlapping) occurrences of u in w.
  std::vector<std::size_t> occurrences(word const& w, word const& u);

  bool is_factor(word const& w, word const& u);

}  // namespace retword

#endif  // RETWORD_WORDS_HPP_
