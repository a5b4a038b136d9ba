#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "equicat/corpus.hpp"
#include "equicat/crossed.hpp"
#include "equicat/fincat.hpp"
#include "equicat/group.hpp"
#include "equicat/models.hpp"
#include "equicat/nerve.hpp"
#include "equicat/skew.hpp"

namespace py = pybind11;
using namespace equicat;

namespace {

py::object to_py(const nlohmann::json& j) {
  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      py::dict d;
      for (auto& [k, v] : j.items()) d[py::str(k)] = to_py(v);
      return d;
    }
    case nlohmann::json::value_t::array: {
      py::list l;
      for (auto& v : j) l.append(to_py(v));
      return l;
    }
    case nlohmann::json::value_t::string:
      return py::str(j.get<std::string>());
    case nlohmann::json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer:
      return py::int_(j.get<long>());
    case nlohmann::json::value_t::number_unsigned:
      return py::int_(j.get<unsigned long>());
    case nlohmann::json::value_t::number_float:
      return py::float_(j.get<double>());
    default:
      return py::none();
  }
}

py::object report_py(const VerifyReport& r) {
  return to_py(r.to_json());
}

GroupAction resolve_action(GroupPtr g, GroupPtr pi, const std::string& name) {
  return action_by_name(g, pi, name);
}

using MutableGroupPtr = std::shared_ptr<FiniteGroup>;

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "finite models of equivariant classifying categories";

  py::class_<FiniteGroup, MutableGroupPtr>(m, "FiniteGroup")
      .def_readonly("order", &FiniteGroup::order)
      .def_readonly("name", &FiniteGroup::name)
      .def_readonly("identity", &FiniteGroup::identity)
      .def_readonly("labels", &FiniteGroup::labels)
      .def("mul", [](const FiniteGroup& g, int a, int b) { return g.mul(a, b); })
      .def("inverse", [](const FiniteGroup& g, int a) { return g.inv.at(a); })
      .def("element_order", &FiniteGroup::element_order)
      .def("is_abelian", &FiniteGroup::is_abelian)
      .def("__repr__", [](const FiniteGroup& g) {
        return "<FiniteGroup " + (g.name.empty() ? "?" : g.name) + " of order " +
               std::to_string(g.order) + ">";
      });

  m.def("make_named", [](const std::string& spec) {
    return std::const_pointer_cast<FiniteGroup>(make_named(spec));
  });
  m.def("isomorphic",
        [](MutableGroupPtr a, MutableGroupPtr b) { return isomorphic(*a, *b); });
  m.def("subgroup_count", [](MutableGroupPtr g) { return subgroups(g).size(); });
  m.def("conjugacy_class_count",
        [](MutableGroupPtr g) { return conjugacy_classes(*g).size(); });
  m.def("corpus_group_names", [] { return corpus_group_names(); });

  m.def(
      "h1_table",
      [](const std::string& g, const std::string& pi, const std::string& action) {
        auto gp = make_named(g);
        auto pp = make_named(pi);
        auto table = h1(gp, pp, resolve_action(gp, pp, action), full_subgroup(gp));
        return to_py(table.to_json());
      },
      py::arg("g"), py::arg("pi"), py::arg("action") = "trivial");

  m.def(
      "verify_h1_lambda_bijection",
      [](const std::string& g, const std::string& pi, const std::string& action) {
        auto gp = make_named(g);
        auto pp = make_named(pi);
        return report_py(verify_h1_lambda_bijection(gp, pp, resolve_action(gp, pp, action)));
      },
      py::arg("g"), py::arg("pi"), py::arg("action") = "trivial");

  m.def(
      "fixed_decomposition",
      [](const std::string& g, const std::string& pi, const std::string& action) {
        auto gp = make_named(g);
        auto pp = make_named(pi);
        auto fd = fixed_decomposition(gp, pp, resolve_action(gp, pp, action), full_subgroup(gp));
        return to_py(fd.to_json());
      },
      py::arg("g"), py::arg("pi"), py::arg("action") = "trivial");

  m.def(
      "verify_fixed_decomposition",
      [](const std::string& g, const std::string& pi, const std::string& action) {
        auto gp = make_named(g);
        auto pp = make_named(pi);
        return report_py(
            verify_fixed_decomposition(gp, pp, resolve_action(gp, pp, action), full_subgroup(gp)));
      },
      py::arg("g"), py::arg("pi"), py::arg("action") = "trivial");

  m.def("hilbert90", [](int p, int k, int n) { return to_py(hilbert90(p, k, n).to_json()); });

  m.def("verify_module_correspondence",
        [](int p, int k, int n) { return report_py(verify_module_correspondence(p, k, n)); });

  m.def(
      "verify_classifying_diagram",
      [](int x, const std::string& pi) {
        return report_py(verify_classifying_diagram(x, make_named(pi)));
      },
      py::arg("x"), py::arg("pi"));

  m.def(
      "orbit_compare",
      [](const std::string& g, int q) {
        return to_py(compare_orbit_nerve(conjugation_one_object(make_named(g)), q).to_json());
      },
      py::arg("g"), py::arg("q") = 2);

  m.def(
      "nerve_levels",
      [](const std::string& g, int q) {
        auto nd = nerve(one_object(make_named(g)), q);
        return nd.s.level_size;
      },
      py::arg("g"), py::arg("q") = 3);

  m.def("verify_chaotic_contraction",
        [](int x, int q) { return report_py(verify_chaotic_contraction(x, q)); });

  m.def(
      "sigma_model_report",
      [](const std::string& g, int n, int copies) {
        auto gp = make_named(g);
        if (copies <= 0) copies = std::max(n, 1);
        auto mod = sigma_model(gp, n, build_universe(gp, copies));
        nlohmann::json j;
        j["objects"] = mod.objects.size();
        j["action"] = verify_sigma_action(mod).to_json();
        j["freeness"] = verify_sigma_freeness(mod).to_json();
        j["fixed_objects"] = verify_sigma_fixed_objects(mod).to_json();
        return to_py(j);
      },
      py::arg("g"), py::arg("n"), py::arg("copies") = 0);

  m.def(
      "gl_model_report",
      [](int p, int k, int n, int copies) {
        auto r = galois_field(p, k);
        auto mod = gl_model(n, r, build_universe(r.group, copies));
        nlohmann::json j;
        j["objects"] = mod.objects.size();
        j["freeness"] = verify_gl_freeness(mod).to_json();
        j["fixed_objects"] = verify_gl_fixed_objects(mod).to_json();
        j["orbit"] = verify_gl_orbit_description(mod).to_json();
        return to_py(j);
      },
      py::arg("p"), py::arg("k"), py::arg("n"), py::arg("copies") = 1);

  m.attr("__version__") = "1.0.0";
}
