#ifndef RETWORD_ERROR_HPP_
#define RETWORD_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace retword {

  // Every failure raised by the library carries one of these kinds, so that
  // front ends (CLI exit codes, Python exceptions) can dispatch on it.
  enum class error_kind {
    parse_error,
    duplicate_rule,
    empty_image,
    unknown_symbol,
    letter_outside_domain,
    not_primitive,
    non_growing,
    not_found,
    not_a_factor,
    not_a_factor_code,
    not_a_prefix,
    periodic_input,
    not_bifix,
    not_derivating,
    not_constant_length,
    size_exceeded,
    cap_exceeded,
    decomposition_failure,
    incompatible
  };

  std::string_view to_string(error_kind kind) noexcept;

  class error : public std::runtime_error {
   public:
    error(error_kind kind, std::string const& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what),
          _kind(kind) {}

    error_kind kind() const noexcept {
      return _kind;
    }

   private:
    error_kind _kind;
  };

}  // namespace retword

#endif  // RETWORD_ERROR_HPP_
