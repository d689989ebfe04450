#include "retword/report.hpp"

#include <sstream>

namespace retword {

  namespace {
    std::string quoted(std::string const& s) {
      std::string out = "\"";
      for (char c : s) {
        if (c == '"' || c == '\\') {
          out += '\\';
        }
        out += c;
      }
      return out + "\"";
    }
  }  // namespace

  json make_document(std::string const& command,
                     json               input,
                     json               result,
                     json               evidence,
                     json               constants) {
    json doc;
    doc["schema"]    = report_schema;
    doc["input"]     = std::move(input);
    doc["command"]   = command;
    doc["result"]    = std::move(result);
    doc["evidence"]  = std::move(evidence);
    doc["constants"] = std::move(constants);
    return doc;
  }

  json input_json(substitution const&                sigma,
                  std::optional<substitution> const& cover,
                  std::optional<std::string> const&  morphism) {
    json in;
    in["substitution"] = sigma.to_string();
    if (cover) {
      in["cover"] = cover->to_string();
    }
    if (morphism) {
      in["morphism"] = *morphism;
    }
    return in;
  }

  json result_json(stability_report const& r, alphabet const& letters) {
    json out;
    out["verdict"] = std::string(to_string(r.result));
    out["route"]   = r.route;
    if (r.threshold_bound) {
      out["threshold_bound"] = *r.threshold_bound;
    } else {
      out["threshold_bound"] = nullptr;
    }
    if (!r.stabilizer.empty()) {
      out["stabilizer"] = r.stabilizer;
    }
    if (r.stabilizer_graph) {
      json gens = json::array();
      for (auto const& g : r.stabilizer_graph->generators()) {
        gens.push_back(g.render(letters));
      }
      out["stabilizer_generators"] = gens;
      out["stabilizer_rank"]       = r.stabilizer_graph->rank();
    }
    if (!r.stabilizer_elements.empty()) {
      out["stabilizer_order"] = r.stabilizer_elements.size();
    }
    if (r.stabilizer_lattice) {
      json rows = json::array();
      for (auto const& row : r.stabilizer_lattice->basis()) {
        json v = json::array();
        for (auto const& x : row) {
          v.push_back(x.str());
        }
        rows.push_back(v);
      }
      out["stabilizer_basis"] = rows;
    }
    return out;
  }

  json constants_json(stability_report const& r) {
    json out = json::object();
    if (r.constants) {
      out["L"] = r.constants->L;
      out["M"] = r.constants->M;
      out["K"] = r.constants->K;
    }
    return out;
  }

  std::string to_dot(core_graph const& g, alphabet const& letters) {
    std::ostringstream os;
    os << "digraph core {\n  rankdir=LR;\n";
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      os << "  " << v << " [shape=" << (v == 0 ? "doublecircle" : "circle")
         << "];\n";
    }
    for (auto const& [u, a, v] : g.edges()) {
      os << "  " << u << " -> " << v << " [label="
         << quoted(letters.render(single_letter(a))) << "];\n";
    }
    os << "}\n";
    return os.str();
  }

  std::string to_dot(rauzy_graph const& g, alphabet const& letters) {
    std::ostringstream os;
    os << "digraph rauzy {\n";
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
      os << "  " << v << " [label=" << quoted(letters.render(g.vertices[v]))
         << "];\n";
    }
    for (auto const& [u, a, v] : g.edges) {
      os << "  " << u << " -> " << v << " [label="
         << quoted(letters.render(single_letter(a))) << "];\n";
    }
    os << "}\n";
    return os.str();
  }

  std::string to_dot(extension_graph const& g, alphabet const& letters) {
    std::ostringstream os;
    os << "graph extension {\n  rankdir=LR;\n";
    for (std::size_t i = 0; i < g.left.size(); ++i) {
      os << "  L" << i << " [label=" << quoted(letters.render(g.left[i]))
         << "];\n";
    }
    for (std::size_t i = 0; i < g.right.size(); ++i) {
      os << "  R" << i << " [label=" << quoted(letters.render(g.right[i]))
         << "];\n";
    }
    for (auto const& [l, r] : g.edges) {
      os << "  L" << l << " -- R" << r << ";\n";
    }
    os << "}\n";
    return os.str();
  }

}  // namespace retword
