#include "retword/error.hpp"

namespace retword {

  std::string_view to_string(error_kind kind) noexcept {
    switch (kind) {
      case error_kind::parse_error:
        return "ParseError";
      case error_kind::duplicate_rule:
        return "DuplicateRule";
      case error_kind::empty_image:
        return "EmptyImage";
      case error_kind::unknown_symbol:
        return "UnknownSymbol";
      case error_kind::letter_outside_domain:
        return "LetterOutsideDomain";
      case error_kind::not_primitive:
        return "NotPrimitive";
      case error_kind::non_growing:
        return "NonGrowing";
      case error_kind::not_found:
        return "NotFound";
      case error_kind::not_a_factor:
        return "NotAFactor";
      case error_kind::not_a_factor_code:
        return "NotAFactorCode";
      case error_kind::not_a_prefix:
        return "NotAPrefix";
      case error_kind::periodic_input:
        return "PeriodicInput";
      case error_kind::not_bifix:
        return "NotBifix";
      case error_kind::not_derivating:
        return "NotDerivating";
      case error_kind::not_constant_length:
        return "NotConstantLength";
      case error_kind::size_exceeded:
        return "SizeExceeded";
      case error_kind::cap_exceeded:
        return "CapExceeded";
      case error_kind::decomposition_failure:
        return "DecompositionFailure";
      case error_kind::incompatible:
        return "Incompatible";
    }
    return "Unknown";
  }

}  // namespace retword
