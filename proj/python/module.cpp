#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>
#include <sstream>

#include "skeintorus/center.hpp"
#include "skeintorus/chebyshev.hpp"
#include "skeintorus/cli.hpp"
#include "skeintorus/exprparse.hpp"
#include "skeintorus/frobenius.hpp"
#include "skeintorus/surgery.hpp"
#include "skeintorus/verify.hpp"

namespace py = pybind11;
using namespace skeintorus;

namespace {

ContextPtr ctx_for(long mod) { return mod == 0 ? nullptr : make_context(mod); }

struct PySurface {
  MarkedSurfaceSpec surface;
  Quasitriangulation q;

  static PySurface from_builtin(const std::string& name) {
    auto [s, t] = builtin(name);
    return {s, t};
  }
  static PySurface from_text(const std::string& text) {
    auto [s, t] = parse_surface(text);
    return {s, t};
  }
  static PySurface from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_text(buf.str());
  }

  std::vector<Label> edges() const { return q.edge_labels(); }
  long genus() const { return surface.genus; }

  std::pair<std::vector<Label>, std::vector<std::vector<long>>> vmatrix() const {
    CommutationMatrix p = vertex_matrix(q);
    return {p.labels(), p.entries()};
  }

  std::map<std::string, std::vector<Label>> classify() const {
    EdgeClassification c = validate(surface, q).classes;
    auto tolist = [](const std::set<Label>& s) {
      return std::vector<Label>(s.begin(), s.end());
    };
    return {{"boundary", tolist(c.boundary)},
            {"inner", tolist(c.inner)},
            {"monogon", tolist(c.monogon)},
            {"essential", tolist(c.essential)}};
  }

  std::vector<std::pair<std::string, std::vector<Label>>> faces() const {
    std::vector<std::pair<std::string, std::vector<Label>>> out;
    for (const Face& f : validate(surface, q).faces) {
      std::string kind = f.kind == Face::Kind::Triangle     ? "triangle"
                         : f.kind == Face::Kind::HoledMonogon ? "holed-monogon"
                                                              : "boundary";
      out.emplace_back(kind, f.edges);
    }
    return out;
  }

  py::dict center() const {
    CenterReport rep = verify_center(surface, q);
    py::dict d;
    d["nullity"] = rep.nullity;
    d["marked_components"] = rep.marked_components;
    d["ok"] = rep.ok();
    d["failures"] = rep.failures;
    return d;
  }

  std::pair<PySurface, py::dict> do_flip(const Label& edge) const {
    FlipResult f = flip(surface, q, edge);
    py::dict info;
    info["case"] = f.kase == FlipCase::One ? 1 : 2;
    info["new_edge"] = f.a_star;
    info["b"] = f.b;
    info["c"] = f.c;
    if (f.kase == FlipCase::One) {
      info["d"] = f.d;
      info["e"] = f.e;
    } else {
      info["beta"] = f.beta;
    }
    return {{surface, f.q}, info};
  }

  std::string do_transfer(const Label& edge, const std::string& expr, long mod) const {
    TransferMap theta(surface, q, edge, ctx_for(mod));
    return print_element(theta.apply(parse_expression(expr, theta.source(), ctx_for(mod))));
  }

  std::string parse_print(const std::string& expr, long mod) const {
    TorusPtr t = std::make_shared<const CommutationMatrix>(x_matrix(surface, q));
    return print_element(parse_expression(expr, t, ctx_for(mod)));
  }

  std::string frobenius_image(const std::string& expr, long n, long mod) const {
    TorusPtr target = std::make_shared<const CommutationMatrix>(x_matrix(surface, q));
    TorusPtr source = std::make_shared<const CommutationMatrix>(target->scaled(n * n));
    return print_element(frobenius(parse_expression(expr, source, ctx_for(mod)), n, target));
  }

  std::string surgery_mul(const std::string& lhs, const std::string& rhs, long mod) const {
    SurgeryCtxPtr ctx = make_surgery_context(surface, q, ctx_for(mod));
    return print_element(parse_surgery_expression(lhs, ctx) *
                         parse_surgery_expression(rhs, ctx));
  }

  std::string text() const { return print_surface(surface, q); }
};

}  // namespace

PYBIND11_MODULE(_skeintorus, m) {
  m.doc() = "exact quantum-torus computations for skein coordinates of marked surfaces";

  py::register_exception<Error>(m, "SkeintorusError");

  py::class_<PySurface>(m, "Surface")
      .def_static("builtin", &PySurface::from_builtin, py::arg("name"))
      .def_static("from_text", &PySurface::from_text, py::arg("text"))
      .def_static("from_file", &PySurface::from_file, py::arg("path"))
      .def_property_readonly("edges", &PySurface::edges)
      .def_property_readonly("genus", &PySurface::genus)
      .def("vertex_matrix", &PySurface::vmatrix)
      .def("classify_edges", &PySurface::classify)
      .def("faces", &PySurface::faces)
      .def("center", &PySurface::center)
      .def("flip", &PySurface::do_flip, py::arg("edge"))
      .def("transfer", &PySurface::do_transfer, py::arg("edge"), py::arg("expr"),
           py::arg("mod") = 0)
      .def("parse", &PySurface::parse_print, py::arg("expr"), py::arg("mod") = 0)
      .def("frobenius", &PySurface::frobenius_image, py::arg("expr"), py::arg("n"),
           py::arg("mod") = 0)
      .def("surgery_mul", &PySurface::surgery_mul, py::arg("lhs"), py::arg("rhs"),
           py::arg("mod") = 0)
      .def("text", &PySurface::text);

  m.def("builtin_names", &builtin_names);
  m.def(
      "quantum_integer",
      [](long n, long mod) { return print_scalar(quantum_integer(n, ctx_for(mod))); },
      py::arg("n"), py::arg("mod") = 0);
  m.def(
      "quantum_binomial",
      [](long n, long k, long mod) {
        return print_scalar(quantum_binomial(n, k, ctx_for(mod)));
      },
      py::arg("n"), py::arg("k"), py::arg("mod") = 0);
  m.def(
      "chebyshev_coefficient",
      [](long n, long r, long j, long mod) {
        return print_scalar(chebyshev_coefficient(n, r, j, ctx_for(mod)));
      },
      py::arg("n"), py::arg("r"), py::arg("j"), py::arg("mod") = 0);
  m.def(
      "gauss_binomial",
      [](long n, long k, long base, long mod) {
        return print_scalar(gauss_binomial(n, k, base, ctx_for(mod)));
      },
      py::arg("n"), py::arg("k"), py::arg("base") = 8, py::arg("mod") = 0);
  m.def("root_data", [](long m) {
    RootData rd = root_data(m);
    py::dict d;
    d["m"] = rd.m;
    d["N"] = rd.N;
    d["epsilon_v_exponent"] = rd.epsilon_v_exponent;
    d["sign_xi_2N"] = rd.sign_xi_2N;
    return d;
  });
  m.def(
      "cheb_expand",
      [](long n, long mod) { return print_element(cheb_closed_form(n, ctx_for(mod))); },
      py::arg("n"), py::arg("mod") = 0);
  m.def(
      "verify",
      [](long mod, unsigned long long seed, const std::string& suite) {
        VerifyOptions options;
        options.mod = mod;
        options.seed = seed;
        options.suite = suite;
        std::vector<py::dict> out;
        for (const CheckResult& r : run_verification(options)) {
          py::dict d;
          d["id"] = r.id;
          d["title"] = r.title;
          d["pass"] = r.pass;
          d["detail"] = r.detail;
          out.push_back(std::move(d));
        }
        return out;
      },
      py::arg("mod") = 0, py::arg("seed") = 20250809ULL, py::arg("suite") = "");
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
