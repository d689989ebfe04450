#ifndef RETWORD_DERIVE_HPP_
#define RETWORD_DERIVE_HPP_

// Derivation of purely substitutive sequences along prefixes: derivating
// substitutions, return substitutions, and the eventually periodic chain of
// return substitutions along the prefixes v(0) = empty, v(n+1) = T_n(1) v(n).

#include <cstddef>
#include <optional>
#include <vector>

#include "retword/language.hpp"
#include "retword/words.hpp"

namespace retword {

  struct derived_data {
    word prefix;
    // The point whose prefix is derived: lim sigma^(k m)(letter).
    seed point_seed{};
    // theta: {1..m} -> letters, i-th return word in order of first appearance.
    substitution theta;
    // sigma_u on {1..m}, with theta o sigma_u = sigma^k o theta.
    substitution sigma;
  };

  // Throws NotAPrefix when u is not a prefix of the point.  Without an
  // explicit seed the point is the canonical one of the oracle.
  derived_data derive_prefix(language_oracle const& oracle,
                             word const&            u,
                             std::optional<seed>    point_seed = std::nullopt);

  // A seed whose point starts with u, searching letters and powers up to
  // the alphabet size.
  std::optional<seed> seed_for_prefix(language_oracle const& oracle,
                                      word const&            u);

  // Length-m prefix of the decoding of the point over the return words.
  word derived_point_prefix(language_oracle const& oracle,
                            derived_data const&    data,
                            std::size_t            m);

  // The shift generated by the return substitution of u.
  language_oracle derived_oracle(language_oracle const& oracle, word const& u);

  struct derivation_step {
    word         prefix;      // v(n)
    substitution theta;       // theta_n, into the previous return alphabet
    substitution cumulative;  // theta_0 ... theta_n, into the letters of X
    substitution sigma;       // return substitution of v(n)
  };

  inline constexpr std::size_t default_chain_cap = 64;

  struct derivation_record {
    std::vector<derivation_step> steps;
    std::size_t                  i = 0;
    std::size_t                  j = 0;
    substitution                 psi;
    substitution                 alpha;
    alphabet                     c;
    // psi alpha^n (C) equals the return set of u(n) for every n up to this.
    std::size_t verified_up_to = 0;

    // theta_m for every m, following the cycle beyond j.
    substitution const& theta(std::size_t m) const;
    // u(n) = v(i + n (j - i)).
    word u(std::size_t n) const;
    // v(m) for every m.
    word v(std::size_t m) const;
  };

  // Throws CapExceeded when no repetition appears within `cap` steps.
  derivation_record derivation_cycle(language_oracle const& oracle,
                                     std::size_t            verify = 1,
                                     std::size_t            cap    = default_chain_cap);

  // Checks psi alpha^n (C) against directly computed return words.
  bool verify_cycle(language_oracle const&   oracle,
                    derivation_record const& record,
                    std::size_t              n);

}  // namespace retword

#endif  // RETWORD_DERIVE_HPP_
