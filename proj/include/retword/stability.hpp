#ifndef RETWORD_STABILITY_HPP_
#define RETWORD_STABILITY_HPP_

// Deciders for (eventual) stability of return groups of substitutive shifts:
// in free groups (bifix and derivating routes), in finite groups, in the
// abelianization, and through the welldoc property.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "retword/derive.hpp"
#include "retword/fingroup.hpp"
#include "retword/freegroup.hpp"
#include "retword/language.hpp"
#include "retword/words.hpp"

namespace retword {

  using json = nlohmann::ordered_json;

  enum class verdict {
    stable,
    eventually_stable,
    // Not stable, with eventual stability left open by the route used.
    not_stable,
    not_eventually_stable,
    undetermined
  };

  std::string_view to_string(verdict v) noexcept;

  struct sync_constants {
    std::size_t L = 0;
    std::size_t M = 0;
    std::size_t K = 0;
    // |sigma| * ceil(L / <sigma>), the return length that defines M.
    std::size_t return_length = 0;
  };

  struct synchronization {
    std::size_t L = 0;
    // For each word of length L, the cut positions every interpretation
    // passes through.
    std::vector<std::pair<word, std::vector<std::size_t>>> cuts;
  };

  // Cut positions in [0, |u|] shared by every interpretation of u.
  std::vector<std::size_t> synchronizing_cuts(language_oracle const& oracle,
                                              word const&            u);

  // Throws PeriodicInput or CapExceeded.
  synchronization synchronizing_constant(language_oracle const& oracle,
                                         std::size_t            cap = 64);
  std::size_t     return_length_constant(language_oracle const& oracle,
                                         std::size_t            L,
                                         std::size_t            cap = 256);
  sync_constants  preservation_constant(language_oracle const& oracle);

  // Smallest return length over the words of length n.
  std::size_t shortest_return(language_oracle const& oracle, std::size_t n);

  struct descent_step {
    std::size_t n = 0;
    // A generator of phi^n(S) outside phi^(n+1)(S).
    group_word escapee;
  };

  // The sequence <phi^n(S)> examined until phi is injective on a term.
  struct descent_chain {
    std::vector<core_graph>   groups;
    std::size_t               k_prime = 0;
    bool                      contained = true;  // <phi(S)> <= <S>
    bool                      stabilizes = false;
    std::vector<descent_step> witness;
  };

  descent_chain examine_descent(free_morphism const&           phi,
                                std::vector<group_word> const& s,
                                std::size_t                    witness_steps = 3);

  struct stability_report {
    verdict                    result = verdict::undetermined;
    std::string                route;
    std::optional<std::size_t> threshold_bound;
    std::string                stabilizer;
    std::optional<core_graph>  stabilizer_graph;
    std::vector<finite_element> stabilizer_elements;
    std::optional<abelian_lattice> stabilizer_lattice;
    std::optional<sync_constants>  constants;
    std::optional<descent_chain>   chain;
    json                           evidence = json::object();
  };

  // Throws NotBifix.
  stability_report decide_free_bifix(language_oracle const& oracle);

  // With no base word, prefixes of the point are scanned up to
  // 4 |sigma| #A (or `detect_bound` when nonzero).  Throws NotDerivating
  // when an explicit base word does not qualify.
  stability_report decide_free_derivating(language_oracle const& oracle,
                                          std::optional<word>    u = std::nullopt,
                                          std::size_t detect_bound = 0);

  stability_report decide_finite(language_oracle const& oracle,
                                 finite_morphism const& phi);

  // Not stable as soon as some L_n = ab<psi alpha^n (C)> is proper; every
  // L_n is full iff L_#C is.
  stability_report decide_abelian(language_oracle const& oracle);

  stability_report decide_welldoc(language_oracle const& oracle,
                                  finite_morphism const& phi,
                                  std::size_t            sample_length = 3);

  // Picks bifix, then derivating, else reports undetermined.
  stability_report decide_auto(language_oracle const& oracle);

  struct divisibility_report {
    std::size_t modulus = 0;  // k^n
    // Least l such that every return to every word of length l is a
    // multiple of the modulus.
    std::size_t threshold = 0;
    word        short_word;
    word        short_return;
    word        long_word;
    std::vector<word> long_returns;
  };

  // Throws NotConstantLength, PeriodicInput or CapExceeded.
  divisibility_report automatic_divisibility(language_oracle const& oracle,
                                             std::size_t            n,
                                             std::size_t            bound = 64);

  // Empirical checks of the closure properties under derivation and under
  // substitution.  Never overrides a decider.
  json check_derivation_closure(language_oracle const& oracle,
                                word const&            u,
                                std::size_t            scan_length = 3);
  json check_substitution_closure(language_oracle const& oracle,
                                  substitution const&    tau,
                                  std::size_t            scan_length = 3);

}  // namespace retword

#endif  // RETWORD_STABILITY_HPP_
