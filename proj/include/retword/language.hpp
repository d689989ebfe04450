#ifndef RETWORD_LANGUAGE_HPP_
#define RETWORD_LANGUAGE_HPP_

// Exact factor languages of shifts generated by primitive substitutions,
// possibly followed by a letter-to-letter cover, and of images of such shifts
// under further substitutions.

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "retword/words.hpp"

namespace retword {

  struct periodicity {
    bool        periodic = false;
    // Largest n for which p(n) was computed.
    std::size_t checked_up_to = 0;
    // Number of points in the orbit and a word generating it, when periodic.
    std::size_t period = 0;
    word        period_word;
  };

  class language_oracle {
   public:
    // The shift generated by sigma, seen through the letter-to-letter cover
    // tau when one is given.  Throws NotPrimitive or NonGrowing.
    explicit language_oracle(substitution                sigma,
                             std::optional<substitution> cover = std::nullopt);

    // The shift closure of phi applied to the shift of `base`.
    static language_oracle image(substitution const&    phi,
                                 language_oracle const& base);

    alphabet const& letters() const;

    // Set for substitution-based oracles, absent for images.
    std::optional<substitution> const& generator() const;
    std::optional<substitution> const& cover() const;
    bool                               is_pure() const;

    // Sorted by letter index.  Thread safe.
    std::vector<word> language(std::size_t n) const;
    bool              contains(word const& w) const;
    std::size_t       complexity(std::size_t n) const;
    // p(0), ..., p(n).
    std::vector<std::size_t> complexity_profile(std::size_t n) const;

    // A bound of 0 selects the default (sum of image lengths) squared.
    periodicity is_periodic(std::size_t bound = 0) const;

    // Words of the language such that every word of length at most n is a
    // factor of one of them.
    std::vector<word> cover_words(std::size_t n) const;

    // Prefix of a fixed point based element, the same for every call.
    word point_prefix(std::size_t n) const;

    std::size_t default_periodicity_bound() const;

   private:
    struct impl;
    explicit language_oracle(std::shared_ptr<impl> p) : _impl(std::move(p)) {}
    std::shared_ptr<impl> _impl;
  };

}  // namespace retword

#endif  // RETWORD_LANGUAGE_HPP_
