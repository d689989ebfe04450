// retword: command-line front end.
//
// Exit codes: 0 computed, 1 negative answer to a yes/no query,
// 2 undetermined, 3 input error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "retword/derive.hpp"
#include "retword/error.hpp"
#include "retword/report.hpp"
#include "retword/shift.hpp"
#include "retword/stability.hpp"

using namespace retword;

namespace {

  struct options {
    std::string sub;
    std::string sub_file;
    std::string cover;
    std::string morphism;
    std::string word_text;
    bool        word_given = false;
    std::size_t length     = 0;
    std::size_t order      = 0;
    std::string route      = "auto";
    std::size_t bound      = 0;
    std::string json_path;
    std::string dot_path;
  };

  struct context {
    substitution                sigma;
    std::optional<substitution> cover;
    std::optional<language_oracle> oracle;
  };

  std::string read_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw error(error_kind::parse_error, "cannot read '" + path + "'");
    }
    return std::string(std::istreambuf_iterator<char>(in), {});
  }

  context load(options const& o) {
    std::string text = o.sub;
    if (!o.sub_file.empty()) {
      text = read_file(o.sub_file);
    }
    if (text.empty()) {
      throw error(error_kind::parse_error, "a substitution is required (--sub)");
    }
    context c;
    c.sigma = parse_substitution(text);
    if (!o.cover.empty()) {
      c.cover = parse_substitution(o.cover, false);
    }
    c.oracle.emplace(c.sigma, c.cover);
    return c;
  }

  void write_text(std::string const& path, std::string const& text) {
    std::ofstream out(path);
    if (!out) {
      throw error(error_kind::parse_error, "cannot write '" + path + "'");
    }
    out << text;
  }

  int emit(options const& o, json const& doc, int code) {
    auto text = doc.dump(2) + "\n";
    std::cout << text;
    if (!o.json_path.empty()) {
      write_text(o.json_path, text);
    }
    return code;
  }

  void emit_dot(options const& o, std::string const& dot) {
    if (!o.dot_path.empty()) {
      write_text(o.dot_path, dot);
    }
  }

  json words_json(alphabet const& a, std::vector<word> const& ws) {
    json out = json::array();
    for (auto const& w : ws) {
      out.push_back(a.render(w));
    }
    return out;
  }

  int verdict_code(verdict v) {
    switch (v) {
      case verdict::stable:
        return 0;
      case verdict::undetermined:
        return 2;
      default:
        return 1;
    }
  }

  ////////////////////////////////////////////////////////////////////////

  int cmd_lang(options const& o) {
    auto        c = load(o);
    auto const& a = c.oracle->letters();
    auto        words = c.oracle->language(o.length);
    json        r;
    r["length"]     = o.length;
    r["complexity"] = words.size();
    r["words"]      = words_json(a, words);
    auto per        = c.oracle->is_periodic(o.bound);
    json ev;
    if (per.periodic) {
      ev["periodicity"] = "periodic";
      ev["period"]      = per.period;
      ev["period_word"] = a.render(per.period_word);
    } else {
      ev["periodicity"] = "aperiodic up to bound";
    }
    ev["checked_up_to"] = per.checked_up_to;
    return emit(o, make_document("lang", input_json(c.sigma, c.cover), r, ev), 0);
  }

  int cmd_returns(options const& o) {
    auto        c = load(o);
    auto const& a = c.oracle->letters();
    auto        u = a.parse(o.word_text);
    auto        rs = return_words(*c.oracle, u);
    auto        g  = return_group(*c.oracle, u);
    json        r;
    r["word"]    = a.render(u);
    r["returns"] = words_json(a, rs.returns);
    r["rank"]    = g.rank();
    r["full"]    = g.is_full();
    json ev;
    ev["window"] = rs.window;
    emit_dot(o, to_dot(g, a));
    return emit(o, make_document("returns", input_json(c.sigma, c.cover), r, ev), 0);
  }

  int cmd_rauzy(options const& o) {
    auto        c = load(o);
    auto const& a = c.oracle->letters();
    auto        g = build_rauzy_graph(*c.oracle, o.order);
    json        r;
    r["order"]              = o.order;
    r["vertices"]           = words_json(a, g.vertices);
    r["edge_count"]         = g.edges.size();
    r["strongly_connected"] = g.is_strongly_connected();
    if (o.word_given) {
      auto u  = a.parse(o.word_text);
      auto gr = rauzy_group(*c.oracle, u);
      json gens = json::array();
      for (auto const& x : gr.generators()) {
        gens.push_back(x.render(a));
      }
      r["word"]             = a.render(u);
      r["group_generators"] = gens;
      r["group_rank"]       = gr.rank();
    }
    emit_dot(o, to_dot(g, a));
    return emit(o, make_document("rauzy", input_json(c.sigma, c.cover), r), 0);
  }

  int cmd_extension(options const& o) {
    auto        c = load(o);
    auto const& a = c.oracle->letters();
    auto        u = a.parse(o.word_text);
    std::size_t d = o.order ? o.order : 1;
    auto        g = build_extension_graph(*c.oracle, u, d);
    json        r;
    r["word"]  = a.render(u);
    r["order"] = d;
    json edges = json::array();
    for (auto const& [l, rr] : g.edges) {
      edges.push_back(json::array({a.render(g.left[l]), a.render(g.right[rr])}));
    }
    r["edges"]      = edges;
    r["components"] = g.component_count();
    r["tree"]       = g.is_tree();
    emit_dot(o, to_dot(g, a));
    return emit(o, make_document("extension", input_json(c.sigma, c.cover), r), 0);
  }

  int cmd_derive(options const& o) {
    auto        c = load(o);
    auto const& a = c.oracle->letters();
    json        r;
    if (o.word_given) {
      auto u = a.parse(o.word_text);
      auto s = seed_for_prefix(*c.oracle, u);
      if (!s) {
        throw error(error_kind::not_a_prefix,
                    "'" + a.render(u) + "' is not a prefix of a fixed point of a power");
      }
      auto d = derive_prefix(*c.oracle, u, s);
      r["word"]                = a.render(u);
      r["seed"]                = json::array({a.render(single_letter(s->letter)), s->power});
      r["theta"]               = d.theta.to_string();
      r["return_substitution"] = d.sigma.to_string();
    } else {
      auto rec   = derivation_cycle(*c.oracle, o.bound ? o.bound : 1);
      json steps = json::array();
      for (std::size_t n = 0; n < rec.steps.size(); ++n) {
        auto const& st = rec.steps[n];
        steps.push_back(json{{"n", n},
                             {"prefix", a.render(st.prefix)},
                             {"theta", st.theta.to_string()},
                             {"return_substitution", st.sigma.to_string()}});
      }
      r["steps"]          = steps;
      r["i"]              = rec.i;
      r["j"]              = rec.j;
      r["psi"]            = rec.psi.to_string();
      r["alpha"]          = rec.alpha.to_string();
      r["verified_up_to"] = rec.verified_up_to;
    }
    return emit(o, make_document("derive", input_json(c.sigma, c.cover), r), 0);
  }

  finite_morphism load_morphism(options const& o, context const& c) {
    if (o.morphism.empty()) {
      throw error(error_kind::parse_error, "this route needs --morphism");
    }
    return parse_finite_morphism(o.morphism, c.oracle->letters());
  }

  int report_stability(options const&          o,
                       context const&          c,
                       std::string const&      command,
                       stability_report const& rep,
                       std::optional<std::string> morphism) {
    auto const& a = c.oracle->letters();
    if (rep.stabilizer_graph) {
      emit_dot(o, to_dot(*rep.stabilizer_graph, a));
    }
    auto doc = make_document(command, input_json(c.sigma, c.cover, morphism),
                             result_json(rep, a), rep.evidence, constants_json(rep));
    return emit(o, doc, verdict_code(rep.result));
  }

  int cmd_stability(options const& o) {
    auto c = load(o);
    auto const& a = c.oracle->letters();
    stability_report           rep;
    std::optional<std::string> morphism;
    if (o.route == "bifix") {
      rep = decide_free_bifix(*c.oracle);
    } else if (o.route == "derivating") {
      std::optional<word> u;
      if (o.word_given) {
        u = a.parse(o.word_text);
      }
      rep = decide_free_derivating(*c.oracle, u, o.bound);
    } else if (o.route == "finite") {
      auto phi = load_morphism(o, c);
      morphism = phi.to_string();
      rep      = decide_finite(*c.oracle, phi);
    } else if (o.route == "abelian") {
      rep = decide_abelian(*c.oracle);
    } else if (o.route == "welldoc") {
      auto phi = load_morphism(o, c);
      morphism = phi.to_string();
      rep      = decide_welldoc(*c.oracle, phi);
    } else {
      rep = decide_auto(*c.oracle);
    }
    return report_stability(o, c, "stability", rep, morphism);
  }

  int cmd_welldoc(options const& o) {
    auto c   = load(o);
    auto phi = load_morphism(o, c);
    auto rep = decide_welldoc(*c.oracle, phi, o.length ? o.length : 3);
    return report_stability(o, c, "welldoc", rep, phi.to_string());
  }

  int cmd_automatic(options const& o) {
    auto        c = load(o);
    auto const& a = c.oracle->letters();
    std::size_t n = o.order ? o.order : 1;
    auto        d = o.bound ? automatic_divisibility(*c.oracle, n, o.bound)
                            : automatic_divisibility(*c.oracle, n);
    json r;
    r["level"]        = n;
    r["modulus"]      = d.modulus;
    r["threshold"]    = d.threshold;
    json ev;
    ev["short_word"]   = a.render(d.short_word);
    ev["short_return"] = a.render(d.short_return);
    ev["long_word"]    = a.render(d.long_word);
    ev["long_returns"] = words_json(a, d.long_returns);
    return emit(o, make_document("automatic", input_json(c.sigma, c.cover), r, ev), 0);
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Return words and stability of return groups of substitutive shifts"};
  app.require_subcommand(1);
  options o;

  auto common = [&o](CLI::App* sub) {
    sub->add_option("--sub", o.sub, "Substitution, e.g. \"a->ab;b->a\"");
    sub->add_option("--sub-file", o.sub_file, "File holding the substitution");
    sub->add_option("--cover", o.cover, "Letter-to-letter coding of the fixed point");
    sub->add_option("--json", o.json_path, "Also write the report to this path");
  };
  auto word_opt = [&o](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--word", o.word_text, "Factor or prefix");
    if (required) {
      opt->required();
    }
  };
  auto positive = CLI::PositiveNumber;

  auto* lang = app.add_subcommand("lang", "Words of a given length");
  common(lang);
  lang->add_option("--length", o.length, "Word length")->required();
  lang->add_option("--bound", o.bound, "Complexity bound for the periodicity check")
      ->check(positive);

  auto* returns = app.add_subcommand("returns", "Return words and return group");
  common(returns);
  word_opt(returns, true);
  returns->add_option("--dot", o.dot_path, "Write the core graph as DOT");

  auto* rauzy = app.add_subcommand("rauzy", "Rauzy graph and Rauzy group");
  common(rauzy);
  rauzy->add_option("--order", o.order, "Order of the graph")->required();
  word_opt(rauzy, false);
  rauzy->add_option("--dot", o.dot_path, "Write the graph as DOT");

  auto* extension = app.add_subcommand("extension", "Extension graph");
  common(extension);
  word_opt(extension, true);
  extension->add_option("--order", o.order, "Extension length")->check(positive);
  extension->add_option("--dot", o.dot_path, "Write the graph as DOT");

  auto* derive = app.add_subcommand("derive", "Return substitutions and the derivation cycle");
  common(derive);
  word_opt(derive, false);
  derive->add_option("--bound", o.bound, "Cycle verification depth")->check(positive);

  auto* stability = app.add_subcommand("stability", "Decide stability of return groups");
  common(stability);
  stability->add_option("--route", o.route, "Decision route")
      ->check(CLI::IsMember({"bifix", "derivating", "finite", "abelian", "welldoc", "auto"}));
  stability->add_option("--morphism", o.morphism, "Finite morphism");
  word_opt(stability, false);
  stability->add_option("--bound", o.bound, "Scan bound")->check(positive);
  stability->add_option("--dot", o.dot_path, "Write the stabilizer core graph as DOT");

  auto* welldoc = app.add_subcommand("welldoc", "Welldoc decision with saturation scans");
  common(welldoc);
  welldoc->add_option("--morphism", o.morphism, "Finite morphism")->required();
  welldoc->add_option("--length", o.length, "Sample word length")->check(positive);

  auto* automatic = app.add_subcommand("automatic", "Divisibility of return lengths");
  common(automatic);
  automatic->add_option("--order", o.order, "Level n of the modulus k^n")->check(positive);
  automatic->add_option("--bound", o.bound, "Largest word length scanned")->check(positive);

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return 3;
  }
  for (auto* sub : {returns, rauzy, extension, derive, stability}) {
    if (sub->parsed() && sub->count("--word") > 0) {
      o.word_given = true;
    }
  }

  try {
    if (*lang) return cmd_lang(o);
    if (*returns) return cmd_returns(o);
    if (*rauzy) return cmd_rauzy(o);
    if (*extension) return cmd_extension(o);
    if (*derive) return cmd_derive(o);
    if (*stability) return cmd_stability(o);
    if (*welldoc) return cmd_welldoc(o);
    if (*automatic) return cmd_automatic(o);
  } catch (error const& e) {
    std::cerr << "retword: " << e.what() << "\n";
    return 3;
  }
  return 3;
}
