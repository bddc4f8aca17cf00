#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "besselpow/bpoly.hpp"
#include "besselpow/commands.hpp"
#include "besselpow/sequences.hpp"
#include "besselpow/serialize.hpp"
#include "besselpow/verify.hpp"
#include "besselpow/zeta.hpp"

namespace py = pybind11;
using namespace besselpow;

namespace {

std::optional<Rational> opt_nu(const std::string& text) { return parse_nu_flag("nu", text); }

FieldValue field(const std::string& text) {
  auto nu = opt_nu(text);
  if (nu && is_integer(*nu) && *nu <= -1) throw py::value_error("pole at nu = " + text);
  return nu ? FieldValue(*nu) : FieldValue::symbolic_nu();
}

RouteId route(const std::string& name) {
  auto id = parse_route(name);
  if (!id) throw py::value_error("unknown route '" + name + "'");
  return *id;
}

// Payloads cross as JSON text in the documented wire format.
std::string zeta(const std::string& nu, unsigned n_max) {
  ZetaTable table(field(nu));
  Json out = Json::array();
  for (unsigned n = 1; n <= n_max; ++n) out.push_back(to_json(table.get(n)));
  return out.dump();
}

std::string bpoly(const std::string& name, const std::string& nu, unsigned n_max, bool tilde) {
  const FieldValue v = field(nu);
  auto polys = b_polys(route(name), v, n_max);
  Json out = Json::array();
  for (unsigned n = 0; n <= n_max; ++n) {
    out.push_back(to_json(tilde ? normalize_tilde(polys[n], v, n) : polys[n]));
  }
  return out.dump();
}

std::string b_value(const std::string& name, const std::string& nu, unsigned n,
                    const std::string& r) {
  const FieldValue v = field(nu);
  auto rv = opt_nu(r);
  if (!rv) throw py::value_error("r must be an exact rational");
  return to_json(b_polys(route(name), v, n)[n](v.constant(*rv))).dump();
}

std::vector<std::string> rayleigh(unsigned n) {
  std::vector<std::string> out;
  const NuPoly phi = rayleigh_phi(n);
  for (const auto& c : phi.coeffs()) out.push_back(to_string(c));
  return out;
}

std::vector<std::pair<unsigned, std::string>> sequence(const std::string& name, unsigned max,
                                                       const std::string& nu) {
  SeqName id;
  try {
    id = parse_seq_name(name);
  } catch (const std::invalid_argument& e) {
    throw py::value_error(e.what());
  }
  std::vector<std::pair<unsigned, std::string>> out;
  for (const auto& rec : sequence_records(id, max, field(nu))) {
    out.emplace_back(rec.index, to_json(rec.value).dump());
  }
  return out;
}

std::string verify(unsigned max_n, const std::vector<std::string>& nus, bool mutate) {
  VerifyConfig c;
  if (!nus.empty()) {
    c.nus.clear();
    for (const auto& s : nus) c.nus.push_back(opt_nu(s));
  }
  c.max_n = max_n;
  c.flip_zeta_sign = mutate;
  return run_verify(c).to_json().dump();
}

py::tuple cli(const std::vector<std::string>& args) {
  CommandResult r = run_cli(args);
  return py::make_tuple(r.exit_code, r.out, r.err);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact B_n^(nu)(r) polynomials, Bessel zeta values and related sequences";
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

  m.def("zeta", &zeta, py::arg("nu"), py::arg("n_max"));
  m.def("bpoly", &bpoly, py::arg("route"), py::arg("nu"), py::arg("n_max"),
        py::arg("tilde") = false);
  m.def("b_value", &b_value, py::arg("route"), py::arg("nu"), py::arg("n"), py::arg("r"));
  m.def("rayleigh_phi", &rayleigh, py::arg("n"));
  m.def("rayleigh_degree", &rayleigh_degree, py::arg("n"));
  m.def("sequence", &sequence, py::arg("name"), py::arg("max"), py::arg("nu") = "0");
  m.def("walk_moment", [](unsigned n, unsigned s) { return to_string(walk_moment(n, s)); },
        py::arg("n"), py::arg("s"));
  m.def("verify", &verify, py::arg("max_n") = 8, py::arg("nus") = std::vector<std::string>{},
        py::arg("mutate_zeta_sign") = false);
  m.def("run_cli", &cli, py::arg("args"));
  m.attr("routes") = [] {
    std::vector<std::string> names;
    for (RouteId id : all_routes()) names.emplace_back(route_name(id));
    return names;
  }();
}
