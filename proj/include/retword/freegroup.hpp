#ifndef RETWORD_FREEGROUP_HPP_
#define RETWORD_FREEGROUP_HPP_

// Free groups: reduced words, morphisms, Stallings core graphs of finitely
// generated subgroups, and lattices of abelianized words.

#include <cstddef>
#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "retword/words.hpp"

namespace retword {

  // Letter i is stored as i + 1 and its inverse as -(i + 1).
  using signed_letter = int;

  class group_word {
   public:
    group_word() = default;
    // Reduces the input.
    explicit group_word(std::vector<signed_letter> raw);

    static group_word from_word(word const& w);

    std::vector<signed_letter> const& letters() const noexcept {
      return _letters;
    }
    std::size_t size() const noexcept {
      return _letters.size();
    }
    bool empty() const noexcept {
      return _letters.empty();
    }

    group_word inverse() const;
    group_word operator*(group_word const& rhs) const;
    // p^-1 * this * p.
    group_word conjugate(group_word const& p) const;

    // True when every letter is positive.
    bool       is_positive() const;
    std::string render(alphabet const& a) const;

    bool operator==(group_word const& that) const {
      return _letters == that._letters;
    }
    bool operator<(group_word const& that) const {
      return std::tie(_letters) < std::tie(that._letters);
    }

   private:
    std::vector<signed_letter> _letters;
  };

  group_word reduce(std::vector<signed_letter> const& raw);

  // Parses words such as "ab'c" where ' marks an inverse letter.
  group_word parse_group_word(std::string_view text, alphabet const& a);

  class free_morphism {
   public:
    free_morphism() = default;
    free_morphism(alphabet domain, alphabet codomain,
                  std::vector<group_word> images);
    explicit free_morphism(substitution const& s);

    static free_morphism identity(alphabet const& a);

    alphabet const& domain() const noexcept {
      return _domain;
    }
    alphabet const& codomain() const noexcept {
      return _codomain;
    }
    std::vector<group_word> const& images() const noexcept {
      return _images;
    }

    group_word operator()(group_word const& g) const;

   private:
    alphabet                _domain;
    alphabet                _codomain;
    std::vector<group_word> _images;
  };

  // A folded core graph with base vertex 0.  Vertices are numbered by a
  // breadth-first traversal from the base that visits the 2d edge slots of
  // each vertex in order a, a^-1, b, b^-1, ..., so equal subgroups have equal
  // tables.
  class core_graph {
   public:
    core_graph() = default;
    core_graph(std::size_t rank, std::vector<group_word> const& gens);

    // Folds an arbitrary labelled graph; edges are (source, letter, target).
    static core_graph
    from_graph(std::size_t                                                  rank,
               std::size_t                                                  vertices,
               std::vector<std::tuple<std::size_t, letter_type, std::size_t>> const& edges,
               std::size_t base);

    // The free group on `rank` letters.
    static core_graph full(std::size_t rank);

    std::size_t alphabet_size() const noexcept {
      return _d;
    }
    std::size_t vertex_count() const noexcept {
      return _n;
    }
    std::size_t edge_count() const;
    std::size_t rank() const;

    // -1 when the vertex has no edge in that slot.
    int target(std::size_t v, std::size_t slot) const {
      return _table[v * 2 * _d + slot];
    }
    std::vector<int> const& table() const noexcept {
      return _table;
    }

    bool contains(group_word const& g) const;

    // Spanning-tree loop basis, deterministic.
    std::vector<group_word> generators() const;

    // Every vertex has all 2d edges.
    bool is_finite_index() const;
    bool is_full() const;

    // Positive edges (source, letter, target).
    std::vector<std::tuple<std::size_t, letter_type, std::size_t>>
    edges() const;

    bool operator==(core_graph const& that) const {
      return _d == that._d && _n == that._n && _table == that._table;
    }

   private:
    friend class folder;
    std::size_t      _d = 0;
    std::size_t      _n = 1;
    std::vector<int> _table;
  };

  bool subgroup_leq(core_graph const& h1, core_graph const& h2);
  bool subgroup_equal(core_graph const& h1, core_graph const& h2);
  bool is_proper(core_graph const& h1, core_graph const& h2);
  bool is_conjugate(core_graph const& h1, core_graph const& h2);

  core_graph morphism_image(free_morphism const& phi, core_graph const& h);
  core_graph morphism_image(free_morphism const&           phi,
                            std::vector<group_word> const& gens);
  bool       injective_on(free_morphism const& phi, core_graph const& h);

  std::vector<long long> abelianize(group_word const& g, std::size_t d);
  std::vector<long long> abelianize_mod(group_word const& g, std::size_t d,
                                        long long k);

  using big_int = boost::multiprecision::cpp_int;

  class abelian_lattice {
   public:
    explicit abelian_lattice(std::size_t dim = 0) : _dim(dim) {}
    abelian_lattice(std::size_t dim, std::vector<std::vector<big_int>> vectors);

    static abelian_lattice from_words(std::vector<group_word> const& words,
                                      std::size_t                    d);

    std::size_t dimension() const noexcept {
      return _dim;
    }
    // Nonzero rows of the Hermite normal form, in echelon order.
    std::vector<std::vector<big_int>> const& basis() const noexcept {
      return _hnf;
    }
    std::size_t rank() const noexcept {
      return _hnf.size();
    }
    std::vector<big_int> elementary_divisors() const;
    bool                 is_full() const;
    // Index in Z^d for full-rank lattices, 0 otherwise.
    big_int index() const;
    bool    contains(std::vector<big_int> const& v) const;

    bool operator==(abelian_lattice const& that) const {
      return _dim == that._dim && _hnf == that._hnf;
    }

   private:
    std::size_t                       _dim;
    std::vector<std::vector<big_int>> _hnf;
  };

  // Image of the lattice under v -> m v, with m a dim-by-dim matrix.
  abelian_lattice lattice_image(std::vector<std::vector<big_int>> const& m,
                                abelian_lattice const&                   l);

  big_int determinant(std::vector<std::vector<big_int>> m);

}  // namespace retword

#endif  // RETWORD_FREEGROUP_HPP_
