#include <optional>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "retword/derive.hpp"
#include "retword/error.hpp"
#include "retword/report.hpp"
#include "retword/shift.hpp"
#include "retword/stability.hpp"

namespace py = pybind11;
using namespace retword;

namespace {

  class shift {
   public:
    explicit shift(std::string const& sub, std::optional<std::string> const& cover)
        : _sigma(parse_substitution(sub)),
          _cover(cover ? std::optional(parse_substitution(*cover, false)) : std::nullopt),
          _oracle(_sigma, _cover) {}

    std::string substitution_text() const {
      return _sigma.to_string();
    }

    std::vector<std::string> language(std::size_t n) const {
      return render(_oracle.language(n));
    }

    std::vector<std::string> returns(std::string const& u) const {
      return render(return_words(_oracle, parse(u)).returns);
    }

    std::vector<std::string> return_group_generators(std::string const& u) const {
      std::vector<std::string> out;
      for (auto const& g : return_group(_oracle, parse(u)).generators()) {
        out.push_back(g.render(letters()));
      }
      return out;
    }

    std::size_t return_group_rank(std::string const& u) const {
      return return_group(_oracle, parse(u)).rank();
    }

    bool is_periodic() const {
      return _oracle.is_periodic().periodic;
    }

    std::string point_prefix(std::size_t n) const {
      return letters().render(_oracle.point_prefix(n));
    }

    std::string derive(std::optional<std::string> const& u) const {
      json r;
      if (u) {
        auto w = parse(*u);
        auto s = seed_for_prefix(_oracle, w);
        if (!s) {
          throw error(error_kind::not_a_prefix, "'" + *u + "' is not a prefix of a fixed point");
        }
        auto d = derive_prefix(_oracle, w, s);
        r["theta"]               = d.theta.to_string();
        r["return_substitution"] = d.sigma.to_string();
      } else {
        auto rec = derivation_cycle(_oracle, 1);
        r["i"]     = rec.i;
        r["j"]     = rec.j;
        r["psi"]   = rec.psi.to_string();
        r["alpha"] = rec.alpha.to_string();
      }
      return r.dump();
    }

    std::string constants() const {
      auto c = preservation_constant(_oracle);
      json r;
      r["L"] = c.L;
      r["M"] = c.M;
      r["K"] = c.K;
      return r.dump();
    }

    std::string stability(std::string const&                route,
                          std::optional<std::string> const& morphism,
                          std::optional<std::string> const& u) const {
      stability_report rep;
      if (route == "bifix") {
        rep = decide_free_bifix(_oracle);
      } else if (route == "derivating") {
        std::optional<word> w;
        if (u) {
          w = parse(*u);
        }
        rep = decide_free_derivating(_oracle, w);
      } else if (route == "finite" || route == "welldoc") {
        if (!morphism) {
          throw error(error_kind::parse_error, "this route needs a morphism");
        }
        auto phi = parse_finite_morphism(*morphism, letters());
        rep = route == "finite" ? decide_finite(_oracle, phi) : decide_welldoc(_oracle, phi);
      } else if (route == "abelian") {
        rep = decide_abelian(_oracle);
      } else if (route == "auto") {
        rep = decide_auto(_oracle);
      } else {
        throw error(error_kind::parse_error, "unknown route '" + route + "'");
      }
      return make_document("stability", input_json(_sigma, _cover, morphism),
                           result_json(rep, letters()), rep.evidence, constants_json(rep))
          .dump();
    }

    std::string automatic(std::size_t n) const {
      auto d = automatic_divisibility(_oracle, n);
      json r;
      r["modulus"]      = d.modulus;
      r["threshold"]    = d.threshold;
      r["short_word"]   = letters().render(d.short_word);
      r["short_return"] = letters().render(d.short_return);
      r["long_word"]    = letters().render(d.long_word);
      r["long_returns"] = render(d.long_returns);
      return r.dump();
    }

   private:
    alphabet const& letters() const {
      return _oracle.letters();
    }
    word parse(std::string const& u) const {
      return letters().parse(u);
    }
    std::vector<std::string> render(std::vector<word> const& ws) const {
      std::vector<std::string> out;
      for (auto const& w : ws) {
        out.push_back(letters().render(w));
      }
      return out;
    }

    substitution                _sigma;
    std::optional<substitution> _cover;
    language_oracle             _oracle;
  };

  alphabet letters_of(std::string const& names) {
    std::vector<std::string> v;
    for (char c : names) {
      v.emplace_back(1, c);
    }
    return alphabet(v);
  }

  std::vector<group_word> parse_all(std::vector<std::string> const& ws, alphabet const& a) {
    std::vector<group_word> out;
    for (auto const& w : ws) {
      out.push_back(parse_group_word(w, a));
    }
    return out;
  }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Return words and stability of return groups";

  static py::exception<error> exc(m, "RetwordError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) {
        std::rethrow_exception(p);
      }
    } catch (error const& e) {
      py::set_error(exc, e.what());
    }
  });

  py::class_<shift>(m, "Shift")
      .def(py::init<std::string const&, std::optional<std::string> const&>(),
           py::arg("substitution"), py::arg("cover") = std::nullopt)
      .def_property_readonly("substitution", &shift::substitution_text)
      .def("language", &shift::language, py::arg("n"))
      .def("returns", &shift::returns, py::arg("word"))
      .def("return_group_generators", &shift::return_group_generators, py::arg("word"))
      .def("return_group_rank", &shift::return_group_rank, py::arg("word"))
      .def("is_periodic", &shift::is_periodic)
      .def("point_prefix", &shift::point_prefix, py::arg("n"))
      .def("_derive", &shift::derive, py::arg("word") = std::nullopt)
      .def("_constants", &shift::constants)
      .def("_stability", &shift::stability, py::arg("route"),
           py::arg("morphism") = std::nullopt, py::arg("word") = std::nullopt)
      .def("_automatic", &shift::automatic, py::arg("level"));

  m.def(
      "reduce",
      [](std::string const& w, std::string const& names) {
        auto a = letters_of(names);
        return parse_group_word(w, a).render(a);
      },
      py::arg("word"), py::arg("letters"));
  m.def(
      "subgroup_equal",
      [](std::vector<std::string> const& g1, std::vector<std::string> const& g2,
         std::string const& names) {
        auto a = letters_of(names);
        return subgroup_equal(core_graph(a.size(), parse_all(g1, a)),
                              core_graph(a.size(), parse_all(g2, a)));
      },
      py::arg("gens1"), py::arg("gens2"), py::arg("letters"));
  m.def(
      "contains",
      [](std::vector<std::string> const& gens, std::string const& w,
         std::string const& names) {
        auto a = letters_of(names);
        return core_graph(a.size(), parse_all(gens, a)).contains(parse_group_word(w, a));
      },
      py::arg("gens"), py::arg("word"), py::arg("letters"));
  m.def(
      "rank",
      [](std::vector<std::string> const& gens, std::string const& names) {
        auto a = letters_of(names);
        return core_graph(a.size(), parse_all(gens, a)).rank();
      },
      py::arg("gens"), py::arg("letters"));
}
