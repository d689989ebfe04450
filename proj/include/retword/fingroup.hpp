#ifndef RETWORD_FINGROUP_HPP_
#define RETWORD_FINGROUP_HPP_

// Finite groups as targets of morphisms from free groups: permutations of
// {1, ..., n} and vectors modulo k.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "retword/freegroup.hpp"
#include "retword/words.hpp"

namespace retword {

  enum class backend { permutation, modular };

  class finite_element {
   public:
    finite_element() = default;

    // 0-based images of a permutation of {0, ..., n-1}.
    static finite_element permutation(std::vector<int> images);
    static finite_element modular(std::vector<int> entries, int modulus);
    static finite_element identity(backend kind, std::size_t size, int modulus);

    backend kind() const noexcept {
      return _kind;
    }
    std::vector<int> const& data() const noexcept {
      return _data;
    }
    int modulus() const noexcept {
      return _modulus;
    }

    bool is_identity() const;

    // Permutations compose as functions: (p * q)(x) = p(q(x)).
    finite_element operator*(finite_element const& rhs) const;
    finite_element inverse() const;

    // Disjoint cycles such as "(1 2 3)", "id" for the identity, or "[1,0]".
    std::string render() const;

    bool operator==(finite_element const& that) const {
      return _kind == that._kind && _modulus == that._modulus
             && _data == that._data;
    }
    bool operator<(finite_element const& that) const {
      return _data < that._data;
    }

   private:
    backend          _kind    = backend::permutation;
    int              _modulus = 0;
    std::vector<int> _data;
  };

  struct finite_element_hash {
    std::size_t operator()(finite_element const& x) const noexcept;
  };

  class finite_morphism {
   public:
    finite_morphism() = default;
    finite_morphism(alphabet domain, std::vector<finite_element> images);

    // ab_k on the given alphabet.
    static finite_morphism abelian_mod(alphabet const& a, int k);

    alphabet const& domain() const noexcept {
      return _domain;
    }
    std::vector<finite_element> const& images() const noexcept {
      return _images;
    }
    backend kind() const noexcept {
      return _identity.kind();
    }
    finite_element const& identity() const noexcept {
      return _identity;
    }

    finite_element evaluate(group_word const& g) const;
    finite_element evaluate(word const& w) const;

    std::string to_string() const;

   private:
    alphabet                    _domain;
    std::vector<finite_element> _images;
    finite_element              _identity;
  };

  // "perm: a -> (1 2 3); b -> (1 2)" or "mod k: a -> [1,0]; b -> [0,1]".
  // Rules are matched to the letters of `letters` by name.
  finite_morphism parse_finite_morphism(std::string_view text,
                                        alphabet const&  letters);

  inline constexpr std::size_t default_closure_cap = 1'000'000;

  // Sorted elements of the generated subgroup.  Throws SizeExceeded.
  std::vector<finite_element>
  closure(std::vector<finite_element> const& gens,
          finite_element const&              identity,
          std::size_t                        cap = default_closure_cap);

  // The image of the whole free group.
  std::vector<finite_element> target_group(finite_morphism const& phi,
                                           std::size_t cap = default_closure_cap);

  bool is_full(std::vector<finite_element> const& sub, finite_morphism const& phi);

  bool conjugate_subgroups(std::vector<finite_element> const& s1,
                           std::vector<finite_element> const& s2,
                           std::vector<finite_element> const& g);

  std::string render_subgroup(std::vector<finite_element> const& sub);

}  // namespace retword

#endif  // RETWORD_FINGROUP_HPP_
