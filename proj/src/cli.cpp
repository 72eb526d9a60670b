#include "skeintorus/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "skeintorus/center.hpp"
#include "skeintorus/chebyshev.hpp"
#include "skeintorus/exprparse.hpp"
#include "skeintorus/frobenius.hpp"
#include "skeintorus/surgery.hpp"
#include "skeintorus/verify.hpp"

namespace skeintorus::cli {

namespace {

std::pair<MarkedSurfaceSpec, Quasitriangulation> load_surface(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SyntaxError("cannot open surface file " + path, 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_surface(buf.str());
}

ContextPtr context_for(long mod) { return mod == 0 ? nullptr : make_context(mod); }

void print_matrix(std::ostream& out, const CommutationMatrix& p) {
  out << "edges:";
  for (const Label& l : p.labels()) out << " " << l;
  out << "\n";
  for (std::size_t i = 0; i < p.labels().size(); ++i) {
    out << p.labels()[i] << ":";
    for (long x : p.entries()[i]) out << " " << std::setw(3) << x;
    out << "\n";
  }
}

int run_impl(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact quantum-torus computations for skein coordinates of marked surfaces"};
  app.require_subcommand(1);

  std::string file, edge, expr, lhs, rhs, hole, suite, fixtures;
  long mod = 0, n = 1;
  unsigned long long seed = 20250809;

  auto* vmatrix = app.add_subcommand("vmatrix", "print the vertex matrix of a surface file");
  vmatrix->add_option("file", file)->required();

  auto* center = app.add_subcommand("center", "verify the center description for a surface");
  center->add_option("file", file)->required();

  auto* flipc = app.add_subcommand("flip", "flip a quasitriangulation at an inner edge");
  flipc->add_option("file", file)->required();
  flipc->add_option("--edge", edge)->required();

  auto* transferc = app.add_subcommand("transfer", "transfer an element through a flip");
  transferc->add_option("file", file)->required();
  transferc->add_option("--edge", edge)->required();
  transferc->add_option("--expr", expr)->required();
  transferc->add_option("--mod", mod);

  auto* cheb = app.add_subcommand("cheb", "Chebyshev computations");
  auto* expand = cheb->add_subcommand("expand", "closed form of T_n(K + K^-1 + E)");
  expand->add_option("--n", n)->required();
  expand->add_option("--mod", mod);

  auto* frob = app.add_subcommand("frobenius", "apply F_N over a surface's quantum torus");
  frob->add_option("--file", file)->required();
  frob->add_option("--n", n)->required();
  frob->add_option("--expr", expr)->required();
  frob->add_option("--mod", mod);

  auto* surgery = app.add_subcommand("surgery", "surgery algebra computations");
  auto* mul = surgery->add_subcommand("mul", "multiply two elements of Z(Delta)");
  mul->add_option("file", file)->required();
  mul->add_option("--lhs", lhs)->required();
  mul->add_option("--rhs", rhs)->required();
  mul->add_option("--mod", mod);
  auto* plug = surgery->add_subcommand("plug", "plug an unmarked boundary component");
  plug->add_option("file", file)->required();
  plug->add_option("--hole", hole)->required();
  plug->add_option("--expr", expr);
  plug->add_option("--mod", mod);
  auto* addpoint = surgery->add_subcommand("addpoint", "add a marked point");
  addpoint->add_option("file", file)->required();
  addpoint->add_option("--edge", edge);
  addpoint->add_option("--hole", hole);
  addpoint->add_option("--expr", expr);
  addpoint->add_option("--mod", mod);

  auto* verify = app.add_subcommand("verify", "run the identity verification suite");
  verify->add_option("--mod", mod);
  verify->add_option("--suite", suite);
  verify->add_option("--seed", seed);
  verify->add_option("--fixtures", fixtures);

  std::vector<const char*> argv;
  argv.push_back("skeintorus");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  if (vmatrix->parsed()) {
    auto [s, q] = load_surface(file);
    print_matrix(out, vertex_matrix(q));
    return 0;
  }

  if (center->parsed()) {
    auto [s, q] = load_surface(file);
    CenterReport rep = verify_center(s, q);
    out << "nullity: " << rep.nullity << "\n";
    out << "marked components: " << rep.marked_components << "\n";
    for (const auto& [comp, k] : boundary_vectors(s, q)) {
      out << "k_" << comp << ":";
      for (const auto& [l, e] : k.entries()) out << " " << l;
      out << "\n";
    }
    out << (rep.ok() ? "PASS" : "FAIL") << " center = R[H][z_beta]\n";
    for (const auto& f : rep.failures) err << "  " << f << "\n";
    return rep.ok() ? 0 : 1;
  }

  if (flipc->parsed()) {
    auto [s, q] = load_surface(file);
    FlipResult f = flip(s, q, edge);
    out << "case: " << (f.kase == FlipCase::One ? 1 : 2) << "\n";
    out << "new edge: " << f.a_star << "\n";
    if (f.kase == FlipCase::One)
      out << "labels: b=" << f.b << " c=" << f.c << " d=" << f.d << " e=" << f.e << "\n";
    else
      out << "labels: b=" << f.b << " c=" << f.c << " beta=" << f.beta << "\n";
    out << print_surface(s, f.q);
    return 0;
  }

  if (transferc->parsed()) {
    auto [s, q] = load_surface(file);
    TransferMap theta(s, q, edge, context_for(mod));
    TorusElement x = parse_expression(expr, theta.source(), context_for(mod));
    out << print_element(theta.apply(x)) << "\n";
    return 0;
  }

  if (expand->parsed()) {
    out << print_element(cheb_closed_form(n, context_for(mod))) << "\n";
    return 0;
  }

  if (frob->parsed()) {
    auto [s, q] = load_surface(file);
    TorusPtr target = std::make_shared<const CommutationMatrix>(x_matrix(s, q));
    TorusPtr source = std::make_shared<const CommutationMatrix>(target->scaled(n * n));
    TorusElement x = parse_expression(expr, source, context_for(mod));
    out << print_element(frobenius(x, n, target)) << "\n";
    return 0;
  }

  if (mul->parsed()) {
    auto [s, q] = load_surface(file);
    SurgeryCtxPtr ctx = make_surgery_context(s, q, context_for(mod));
    SurgeryElement a = parse_surgery_expression(lhs, ctx);
    SurgeryElement b = parse_surgery_expression(rhs, ctx);
    out << print_element(a * b) << "\n";
    return 0;
  }

  if (plug->parsed()) {
    auto [s, q] = load_surface(file);
    SurgeryCtxPtr ctx = make_surgery_context(s, q, context_for(mod));
    SurgeryHom psi = psi_plug_hole(ctx, hole);
    out << "removed: " << psi.named.at("a") << " " << psi.named.at("b") << "\n";
    out << print_surface(psi.target->surface(), psi.target->triangulation());
    if (!expr.empty())
      out << print_element(psi.apply(parse_surgery_expression(expr, ctx))) << "\n";
    return 0;
  }

  if (addpoint->parsed()) {
    if (edge.empty() == hole.empty())
      throw SyntaxError("addpoint needs exactly one of --edge or --hole", 0);
    auto [s, q] = load_surface(file);
    SurgeryCtxPtr ctx = make_surgery_context(s, q, context_for(mod));
    SurgeryHom psi = edge.empty() ? psi_add_point_unmarked(ctx, hole)
                                  : psi_add_point_boundary(ctx, edge);
    out << "new point: " << psi.named.at("point") << "\n";
    out << print_surface(psi.target->surface(), psi.target->triangulation());
    if (!expr.empty())
      out << print_element(psi.apply(parse_surgery_expression(expr, ctx))) << "\n";
    return 0;
  }

  if (verify->parsed()) {
    VerifyOptions options;
    options.mod = mod;
    options.seed = seed;
    options.suite = suite;
    options.fixture_dir = fixtures;
    bool all = true;
    for (const CheckResult& r : run_verification(options)) {
      out << (r.pass ? "PASS" : "FAIL") << "  " << r.title << "  (" << r.id << ")\n";
      if (!r.pass) {
        all = false;
        if (!r.detail.empty()) err << "  " << r.detail << "\n";
      }
    }
    return all ? 0 : 1;
  }

  return 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return run_impl(args, out, err);
  } catch (const SyntaxError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const EmptySurface& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const UnknownGenerator& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidQuasitriangulation& e) {
    err << "invalid surface: " << e.what() << "\n";
    return 2;
  } catch (const MissingLabel& e) {
    err << "unknown name: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace skeintorus::cli
