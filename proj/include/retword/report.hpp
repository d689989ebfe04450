#ifndef RETWORD_REPORT_HPP_
#define RETWORD_REPORT_HPP_

// JSON report documents and DOT renderings.

#include <optional>
#include <string>

#include "retword/shift.hpp"
#include "retword/stability.hpp"

namespace retword {

  inline constexpr char const* report_schema = "retword-report/1";

  // {schema, input, command, result, evidence, constants}
  json make_document(std::string const& command,
                     json               input,
                     json               result,
                     json               evidence  = json::object(),
                     json               constants = json::object());

  json input_json(substitution const&                sigma,
                  std::optional<substitution> const& cover,
                  std::optional<std::string> const&  morphism = std::nullopt);

  // Verdict, route, threshold and stabilizer.  Evidence and constants are
  // kept separate for make_document.
  json result_json(stability_report const& r, alphabet const& letters);
  json constants_json(stability_report const& r);

  std::string to_dot(core_graph const& g, alphabet const& letters);
  std::string to_dot(rauzy_graph const& g, alphabet const& letters);
  std::string to_dot(extension_graph const& g, alphabet const& letters);

}  // namespace retword

#endif  // RETWORD_REPORT_HPP_
