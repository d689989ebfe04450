#ifndef RETWORD_SHIFT_HPP_
#define RETWORD_SHIFT_HPP_

// Return words, return groups, Rauzy graphs, extension graphs and occurrence
// prefix sets of shifts given by a language oracle.

#include <cstddef>
#include <tuple>
#include <utility>
#include <vector>

#include "retword/fingroup.hpp"
#include "retword/freegroup.hpp"
#include "retword/language.hpp"
#include "retword/words.hpp"

namespace retword {

  // Sorts by length, then by letter index.
  void sort_words(std::vector<word>& ws);

  struct return_set {
    word              base;
    std::vector<word> returns;
    // Length of the factors that were checked to contain a second occurrence.
    std::size_t window = 0;
  };

  // Throws NotAFactor when u is not in the language.
  return_set return_words(language_oracle const& oracle, word const& u);

  // Returns to a factor code.  Throws NotAFactorCode.
  return_set return_words_to_set(language_oracle const&   oracle,
                                 std::vector<word> const& code);

  core_graph return_group(language_oracle const& oracle, word const& u);
  core_graph return_group_image(language_oracle const& oracle,
                                word const&            u,
                                free_morphism const&   phi);
  std::vector<finite_element> return_group_image(language_oracle const& oracle,
                                                 word const&            u,
                                                 finite_morphism const& phi);

  struct rauzy_graph {
    std::size_t       order = 0;
    std::vector<word> vertices;
    // (source, label, target), the label being the first letter of the source.
    std::vector<std::tuple<std::size_t, letter_type, std::size_t>> edges;

    bool is_strongly_connected() const;
  };

  rauzy_graph build_rauzy_graph(language_oracle const& oracle, std::size_t n);
  core_graph  rauzy_group(language_oracle const& oracle, word const& u);

  struct extension_graph {
    word                                             center;
    std::size_t                                      order = 0;
    std::vector<word>                                left;
    std::vector<word>                                right;
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    // Component label of every left vertex followed by every right vertex.
    std::vector<std::size_t> components() const;
    std::size_t              component_count() const;
    bool                     is_tree() const;
  };

  extension_graph build_extension_graph(language_oracle const& oracle,
                                        word const&            u,
                                        std::size_t            d);
  bool            is_dendric(language_oracle const& oracle, word const& u);
  bool            is_suffix_connected(language_oracle const& oracle, word const& u);

  struct occurrence_prefix_set {
    word                     target;
    std::size_t              window = 0;
    word                     point;
    // Each m stands for the prefix point[0, m).
    std::vector<std::size_t> positions;

    group_word member(std::size_t i) const {
      return group_word::from_word(point.substr(0, positions.at(i)));
    }
  };

  occurrence_prefix_set occurrence_prefixes(language_oracle const& oracle,
                                            word const&            w,
                                            std::size_t            window);

  enum class tristate { yes, no, undetermined };

  struct saturation_result {
    tristate    saturated = tristate::undetermined;
    // Window length scanned before stopping.
    std::size_t window = 0;
    // Distinct images reached and the order of the target group.
    std::size_t images = 0;
    std::size_t group_order = 0;
  };

  inline constexpr std::size_t default_saturation_cap = std::size_t(1) << 18;

  // Scans prefixes at occurrences of w until their images cover the target
  // group.  A scan never certifies "no".
  saturation_result welldoc_saturates(language_oracle const& oracle,
                                      word const&            w,
                                      finite_morphism const& phi,
                                      std::size_t cap = default_saturation_cap);

}  // namespace retword

#endif  // RETWORD_SHIFT_HPP_
