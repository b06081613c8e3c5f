#include <cstdint>
#include <functional>
#include <iostream>
#include <iterator>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "staralg/certify.hpp"
#include "staralg/element.hpp"
#include "staralg/errors.hpp"
#include "staralg/parse.hpp"
#include "staralg/poly.hpp"
#include "staralg/scalars.hpp"
#include "staralg/serialize.hpp"
#include "staralg/states.hpp"
#include "staralg/weyl.hpp"

using namespace staralg;

namespace {

/// Flag-level problems: reported on stderr, exit 2. Malformed expression
/// or JSON payloads are domain errors instead (machine-readable, exit 1).
struct UsageError {
  std::string msg;
};

struct Ctx {
  std::string algebra;
  int dim = -1;
  int n = -1;
  int s = -1;
  std::string mu;
  std::string output = "text";
  bool use_stdin = false;
  std::uint64_t seed = 0;
  int count = 100;
  double tol = 0.0;
  std::vector<std::string> exprs;
  std::string state, element, a, b, target, cert, gens, point, matrix;
};

ElaborationConfig config(const Ctx& ctx) {
  if (ctx.algebra == "weyl") {
    if (ctx.dim < 1) throw UsageError{"--dim is required with --algebra weyl"};
    return ElaborationConfig{true, ctx.dim};
  }
  if (ctx.algebra == "poly") {
    if (ctx.n < 1) throw UsageError{"--n is required with --algebra poly"};
    return ElaborationConfig{false, ctx.n};
  }
  throw UsageError{"--algebra is required"};
}

std::vector<AlgebraElement> input_elements(const Ctx& ctx, std::size_t want) {
  if (ctx.use_stdin) {
    std::string text(std::istreambuf_iterator<char>(std::cin), {});
    Json j = json_parse(text);
    std::vector<AlgebraElement> out;
    if (j.is_array())
      for (const Json& e : j) out.push_back(element_from_json(e));
    else
      out.push_back(element_from_json(j));
    if (out.size() != want)
      throw UsageError{"expected " + std::to_string(want) +
                       " element(s) on standard input"};
    return out;
  }
  if (ctx.exprs.size() != want)
    throw UsageError{"expected " + std::to_string(want) + " expression(s)"};
  ElaborationConfig cfg = config(ctx);
  std::vector<AlgebraElement> out;
  for (const std::string& text : ctx.exprs) out.push_back(parse_element(text, cfg));
  return out;
}

WeylElement input_weyl(const Ctx& ctx) {
  AlgebraElement x = std::move(input_elements(ctx, 1)[0]);
  if (!std::holds_alternative<WeylElement>(x))
    throw StarError(ErrorCode::AlgebraMismatch, "expected a weyl element");
  return std::get<WeylElement>(std::move(x));
}

PolyElement input_poly(const Ctx& ctx) {
  AlgebraElement x = std::move(input_elements(ctx, 1)[0]);
  if (!std::holds_alternative<PolyElement>(x))
    throw StarError(ErrorCode::AlgebraMismatch, "expected a poly element");
  return std::get<PolyElement>(std::move(x));
}

GaussianRational mu_value(const Ctx& ctx) {
  if (ctx.mu.empty()) throw UsageError{"--mu is required"};
  return GaussianRational(rational_from_string(ctx.mu));
}

Signature sig_value(const Ctx& ctx, int n) {
  if (ctx.s < 0) throw UsageError{"--s is required"};
  return Signature(n, ctx.s);
}

int n_value(const Ctx& ctx) {
  if (ctx.n < 1) throw UsageError{"--n is required"};
  return ctx.n;
}

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

/// Reduced elements drop coordinate 0, so their own labels start at q0.
/// Text output keeps the original coordinate names instead.
WeylElement relabel_up(const WeylElement& a) {
  WeylElement out(a.dim() + 1);
  for (const auto& [m, c] : a.terms()) {
    WeylMonomial shifted{std::vector<unsigned>(a.dim() + 1, 0),
                         std::vector<unsigned>(a.dim() + 1, 0)};
    for (int j = 0; j < a.dim(); ++j) {
      shifted.k[j + 1] = m.k[j];
      shifted.l[j + 1] = m.l[j];
    }
    out.add_term(shifted, c);
  }
  return out;
}

void emit_element(const Ctx& ctx, const AlgebraElement& x) {
  if (ctx.output == "json")
    emit(element_to_json(x));
  else
    std::cout << render_element(x) << "\n";
}

void emit_reduced(const Ctx& ctx, const WeylElement& a) {
  if (ctx.output == "json")
    emit(weyl_to_json(a));
  else
    std::cout << render_weyl(relabel_up(a)) << "\n";
}

void emit_value(const Ctx& ctx, const StateValue& v) {
  if (ctx.output == "json") {
    emit(Json{{"value", state_value_to_json(v)}});
    return;
  }
  if (state_value_is_exact(v))
    std::cout << state_value_exact(v).str() << "\n";
  else
    std::cout << state_value_to_json(v).dump() << "\n";
}

StatePtr input_state(const Ctx& ctx) {
  if (ctx.state.empty()) throw UsageError{"--state is required"};
  return state_from_json(json_parse(ctx.state));
}

AlgebraElement state_element(const StateSpec& omega, const std::string& text) {
  ElaborationConfig cfg{state_algebra(omega) == StateAlgebra::Weyl,
                        state_dim(omega)};
  return parse_element(text, cfg);
}

ProjPoint input_point(const Ctx& ctx) {
  if (ctx.point.empty()) throw UsageError{"--point is required"};
  return projpoint_from_json(json_parse(ctx.point));
}

std::vector<AlgebraElement> input_gens(const Ctx& ctx) {
  std::vector<AlgebraElement> out;
  if (ctx.gens.empty()) return out;
  Json j = json_parse(ctx.gens);
  if (!j.is_array())
    throw StarError(ErrorCode::SyntaxError, "--gens must be a JSON array");
  for (const Json& e : j) out.push_back(element_from_json(e));
  return out;
}

Json point_json(const ComplexPoint& w) {
  Json out = Json::array();
  for (const auto& c : w) out.push_back(Json::array({c.real(), c.imag()}));
  return out;
}

void check_state_dims(const Ctx& ctx, const StateSpec& omega) {
  bool weyl = state_algebra(omega) == StateAlgebra::Weyl;
  if (!ctx.algebra.empty() && (ctx.algebra == "weyl") != weyl)
    throw UsageError{"--algebra does not match the state"};
  if (weyl && ctx.dim > 0 && ctx.dim != state_dim(omega))
    throw UsageError{"--dim does not match the state"};
  if (!weyl && ctx.n > 0 && ctx.n != state_dim(omega))
    throw UsageError{"--n does not match the state"};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact symmetry reduction for the Weyl algebra W(R^(1+n)) and the\n"
      "polynomial *-algebra P(C^(1+n)): reduction, compression, averaging,\n"
      "states, and positivity certificates. Elements are written in a small\n"
      "expression grammar: generators q0,p0,... (weyl) or z0,zb0,... (poly),\n"
      "exact rationals, 'i', operators + - * ^, and a postfix ' for the\n"
      "star adjoint, e.g. \"(q0 + i*p0)'\". Output is text by default;\n"
      "--output json switches to the documented JSON schemas."};
  app.require_subcommand(1);

  Ctx ctx;
  std::vector<std::pair<CLI::App*, std::function<void()>>> actions;

  auto add_common = [&](CLI::App* sub, const char* algebras) {
    sub->add_option("--output", ctx.output, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    if (std::string(algebras) == "weyl") {
      sub->add_option("--algebra", ctx.algebra, "algebra tag")
          ->check(CLI::IsMember({"weyl"}));
      sub->add_option("--dim", ctx.dim, "weyl coordinate count");
      sub->parse_complete_callback([&ctx] { ctx.algebra = "weyl"; });
    } else if (std::string(algebras) == "poly") {
      sub->add_option("--algebra", ctx.algebra, "algebra tag")
          ->check(CLI::IsMember({"poly"}));
      sub->add_option("--n", ctx.n, "poly index bound n");
      sub->parse_complete_callback([&ctx] { ctx.algebra = "poly"; });
    } else {
      sub->add_option("--algebra", ctx.algebra, "weyl or poly")
          ->check(CLI::IsMember({"weyl", "poly"}));
      sub->add_option("--dim", ctx.dim, "weyl coordinate count");
      sub->add_option("--n", ctx.n, "poly index bound n");
    }
    return sub;
  };
  auto add_exprs = [&](CLI::App* sub, int count) {
    sub->add_option("expr", ctx.exprs, "element expression(s)")
        ->expected(0, count);
    sub->add_flag("--stdin", ctx.use_stdin, "read element JSON from stdin");
  };
  auto act = [&](CLI::App* sub, std::function<void()> fn) {
    actions.emplace_back(sub, std::move(fn));
  };

  {
    CLI::App* sub = add_common(app.add_subcommand("mul", "product of two elements"), "any");
    add_exprs(sub, 2);
    act(sub, [&] {
      auto xs = input_elements(ctx, 2);
      emit_element(ctx, element_mul(xs[0], xs[1]));
    });
  }
  {
    CLI::App* sub = add_common(app.add_subcommand("star", "adjoint of an element"), "any");
    add_exprs(sub, 1);
    act(sub, [&] { emit_element(ctx, element_star(input_elements(ctx, 1)[0])); });
  }
  {
    CLI::App* sub = add_common(
        app.add_subcommand("poisson", "Poisson bracket of two elements"), "any");
    add_exprs(sub, 2);
    sub->add_option("--s", ctx.s, "signature split (poly)");
    act(sub, [&] {
      auto xs = input_elements(ctx, 2);
      if (std::holds_alternative<WeylElement>(xs[0])) {
        if (!std::holds_alternative<WeylElement>(xs[1]))
          throw StarError(ErrorCode::AlgebraMismatch, "mixed operands");
        emit_element(ctx, weyl_poisson(std::get<WeylElement>(xs[0]),
                                       std::get<WeylElement>(xs[1])));
        return;
      }
      const PolyElement& f = std::get<PolyElement>(xs[0]);
      if (!std::holds_alternative<PolyElement>(xs[1]))
        throw StarError(ErrorCode::AlgebraMismatch, "mixed operands");
      emit_element(ctx, poly_poisson(f, std::get<PolyElement>(xs[1]),
                                     sig_value(ctx, f.n())));
    });
  }
  {
    CLI::App* sub = add_common(
        app.add_subcommand("invariant", "test invariance under the flow"), "any");
    add_exprs(sub, 1);
    act(sub, [&] {
      AlgebraElement x = input_elements(ctx, 1)[0];
      bool inv = std::holds_alternative<WeylElement>(x)
                     ? weyl_is_invariant(std::get<WeylElement>(x))
                     : poly_is_invariant(std::get<PolyElement>(x));
      emit(Json{{"invariant", inv}});
    });
  }
  {
    CLI::App* sub = add_common(
        app.add_subcommand("reduce", "reduce an invariant weyl element at level mu"),
        "weyl");
    add_exprs(sub, 1);
    sub->add_option("--mu", ctx.mu, "level (rational)");
    act(sub, [&] { emit_reduced(ctx, weyl_reduce(input_weyl(ctx), mu_value(ctx))); });
  }
  {
    CLI::App* sub = add_common(
        app.add_subcommand("decompose",
                           "split into ideal part, cofactor, and complement"),
        "weyl");
    add_exprs(sub, 1);
    sub->add_option("--mu", ctx.mu, "level (rational)");
    act(sub, [&] {
      WeylDecomposition d = weyl_decompose(input_weyl(ctx), mu_value(ctx));
      if (ctx.output == "json") {
        emit(Json{{"ideal_part", weyl_to_json(d.ideal_part)},
                  {"cofactor", weyl_to_json(d.cofactor)},
                  {"complement", weyl_to_json(d.complement)}});
      } else {
        std::cout << "ideal_part: " << render_weyl(d.ideal_part) << "\n"
                  << "cofactor: " << render_weyl(d.cofactor) << "\n"
                  << "complement: " << render_weyl(d.complement) << "\n";
      }
    });
  }
  {
    CLI::App* sub = add_common(
        app.add_subcommand("compress",
                           "expectation compression through the coherent family"),
        "weyl");
    add_exprs(sub, 1);
    sub->add_option("--mu", ctx.mu, "level (rational)");
    act(sub, [&] {
      CompressedWeyl c = weyl_compress(input_weyl(ctx), mu_value(ctx));
      if (ctx.output == "json") {
        emit(compressed_to_json(c));
        return;
      }
      if (c.terms.empty()) {
        std::cout << "0\n";
        return;
      }
      for (const auto& [m, sym] : c.terms) {
        WeylElement label(c.dim + 1);
        WeylMonomial shifted{std::vector<unsigned>(c.dim + 1, 0),
                             std::vector<unsigned>(c.dim + 1, 0)};
        for (int j = 0; j < c.dim; ++j) {
          shifted.k[j + 1] = m.k[j];
          shifted.l[j + 1] = m.l[j];
        }
        label.add_term(shifted, GaussianRational(1));
        std::cout << render_weyl(label) << ": " << sym.str() << "\n";
      }
    });
  }
  {
    CLI::App* sub = add_common(
        app.add_subcommand("compress-limit",
                           "wide-width limit of the compression"),
        "weyl");
    add_exprs(sub, 1);
    sub->add_option("--mu", ctx.mu, "level (rational)");
    act(sub, [&] {
      emit_reduced(ctx, weyl_compress_limit(input_weyl(ctx), mu_value(ctx)));
    });
  }
  {
    CLI::App* sub = add_common(
        app.add_subcommand("average", "orbit average (diagonal projection)"),
        "poly");
    add_exprs(sub, 1);
    act(sub, [&] { emit_element(ctx, poly_average(input_poly(ctx))); });
  }
  {
    CLI::App* sub = add_common(
        app.add_subcommand("homogenize",
                           "J-homogenization and its ideal cofactor"),
        "poly");
    add_exprs(sub, 1);
    sub->add_option("--s", ctx.s, "signature split");
    sub->add_option("--mu", ctx.mu, "level (rational)");
    act(sub, [&] {
      PolyElement f = input_poly(ctx);
      Homogenization h = poly_homogenize(f, sig_value(ctx, f.n()), mu_value(ctx));
      if (ctx.output == "json") {
        emit(Json{{"fh", poly_to_json(h.fh)}, {"cofactor", poly_to_json(h.cofactor)}});
      } else {
        std::cout << "fh: " << render_poly(h.fh) << "\n"
                  << "cofactor: " << render_poly(h.cofactor) << "\n";
      }
    });
  }
  {
    CLI::App* sub = add_common(
        app.add_subcommand("ideal-member", "membership in the ideal <J - mu>"),
        "poly");
    add_exprs(sub, 1);
    sub->add_option("--s", ctx.s, "signature split");
    sub->add_option("--mu", ctx.mu, "level (rational)");
    act(sub, [&] {
      PolyElement f = input_poly(ctx);
      IdealMembership m = poly_ideal_member(f, sig_value(ctx, f.n()), mu_value(ctx));
      emit(Json{{"member", m.member}, {"witness", poly_to_json(m.witness)}});
    });
  }
  {
    CLI::App* sub = add_common(
        app.add_subcommand("reduced-equal", "equality in the reduced algebra"),
        "poly");
    add_exprs(sub, 2);
    sub->add_option("--s", ctx.s, "signature split");
    sub->add_option("--mu", ctx.mu, "level (rational)");
    act(sub, [&] {
      auto xs = input_elements(ctx, 2);
      const PolyElement& f = std::get<PolyElement>(xs[0]);
      const PolyElement& g = std::get<PolyElement>(xs[1]);
      emit(Json{{"equal",
                 poly_reduced_equal(f, g, sig_value(ctx, f.n()), mu_value(ctx))}});
    });
  }
  {
    CLI::App* sub = add_common(
        app.add_subcommand("eval", "evaluate at a point of C^(1+n)"), "poly");
    add_exprs(sub, 1);
    sub->add_option("--point", ctx.point, "point as a JSON scalar array");
    act(sub, [&] {
      PolyElement f = input_poly(ctx);
      emit_value(ctx, StateValue(poly_evaluate(f, input_point(ctx).w)));
    });
  }
  {
    CLI::App* sub = add_common(
        app.add_subcommand("reduced-eval",
                           "evaluate the reduced class at a projective point"),
        "poly");
    add_exprs(sub, 1);
    sub->add_option("--point", ctx.point, "point as a JSON scalar array");
    sub->add_option("--s", ctx.s, "signature split");
    sub->add_option("--mu", ctx.mu, "level (rational)");
    act(sub, [&] {
      PolyElement f = input_poly(ctx);
      GaussianRational v = poly_reduced_evaluate(
          f, input_point(ctx), sig_value(ctx, f.n()), mu_value(ctx));
      emit_value(ctx, StateValue(v));
    });
  }
  {
    CLI::App* sub = app.add_subcommand(
        "hom-matrix", "normalized rank-one matrix of a projective point");
    sub->add_option("--point", ctx.point, "point as a JSON scalar array");
    sub->add_option("--s", ctx.s, "signature split");
    sub->add_option("--output", ctx.output, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    act(sub, [&] {
      ProjPoint w = input_point(ctx);
      int n = static_cast<int>(w.w.size()) - 1;
      emit(hommatrix_to_json(poly_hom_matrix(w, sig_value(ctx, n))));
    });
  }
  {
    CLI::App* sub = app.add_subcommand(
        "reconstruct", "recover the projective point of a hom matrix");
    sub->add_option("--matrix", ctx.matrix, "row-major JSON matrix");
    sub->add_option("--s", ctx.s, "signature split");
    sub->add_option("--output", ctx.output, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    act(sub, [&] {
      if (ctx.matrix.empty()) throw UsageError{"--matrix is required"};
      HomMatrix X = hommatrix_from_json(json_parse(ctx.matrix));
      int n = X.dim() - 1;
      emit(projpoint_to_json(poly_reconstruct_point(X, sig_value(ctx, n))));
    });
  }
  {
    CLI::App* sub = app.add_subcommand(
        "classify", "locate a point relative to the reduced phase space");
    sub->add_option("--point", ctx.point, "point as a JSON scalar array");
    sub->add_option("--s", ctx.s, "signature split");
    sub->add_option("--output", ctx.output, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    act(sub, [&] {
      ProjPoint w = input_point(ctx);
      int n = static_cast<int>(w.w.size()) - 1;
      HomClass c = poly_classify_hom(w, sig_value(ctx, n));
      emit(Json{{"class", c == HomClass::InsideMred ? "inside" : "outside"}});
    });
  }
  {
    CLI::App* sub = add_common(
        app.add_subcommand("expect", "expectation value of an element"), "any");
    sub->add_option("--state", ctx.state, "state JSON");
    sub->add_option("--element", ctx.element, "element expression");
    sub->add_option("--s", ctx.s, "signature split (unused, accepted)");
    act(sub, [&] {
      StatePtr omega = input_state(ctx);
      check_state_dims(ctx, *omega);
      if (ctx.element.empty()) throw UsageError{"--element is required"};
      emit_value(ctx, state_expect(*omega, state_element(*omega, ctx.element)));
    });
  }
  {
    CLI::App* sub = add_common(
        app.add_subcommand("eigenstate", "test omega(a*a) = |omega(a)|^2"), "any");
    sub->add_option("--state", ctx.state, "state JSON");
    sub->add_option("--element", ctx.element, "element expression");
    sub->add_option("--s", ctx.s, "signature split (unused, accepted)");
    sub->add_option("--tol", ctx.tol, "tolerance for float states");
    act(sub, [&] {
      StatePtr omega = input_state(ctx);
      check_state_dims(ctx, *omega);
      if (ctx.element.empty()) throw UsageError{"--element is required"};
      EigenstateResult r =
          eigenstate_check(*omega, state_element(*omega, ctx.element), ctx.tol);
      emit(Json{{"eigenstate", r.is_eigenstate},
                {"eigenvalue", state_value_to_json(r.eigenvalue)}});
    });
  }
  {
    CLI::App* sub = add_common(
        app.add_subcommand("cs-check", "Cauchy-Schwarz inequality check"), "any");
    sub->add_option("--state", ctx.state, "state JSON");
    sub->add_option("--a", ctx.a, "first element expression");
    sub->add_option("--b", ctx.b, "second element expression");
    sub->add_option("--s", ctx.s, "signature split (unused, accepted)");
    act(sub, [&] {
      StatePtr omega = input_state(ctx);
      check_state_dims(ctx, *omega);
      if (ctx.a.empty() || ctx.b.empty())
        throw UsageError{"--a and --b are required"};
      emit(Json{{"ok", cauchy_schwarz_check(*omega, state_element(*omega, ctx.a),
                                            state_element(*omega, ctx.b))}});
    });
  }
  {
    CLI::App* sub = app.add_subcommand(
        "reduce-state", "push a levelset-supported state to the reduced algebra");
    sub->add_option("--state", ctx.state, "state JSON");
    sub->add_option("--s", ctx.s, "signature split");
    sub->add_option("--mu", ctx.mu, "level (rational)");
    sub->add_option("--output", ctx.output, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    act(sub, [&] {
      StatePtr omega = input_state(ctx);
      StatePtr reduced = reduce_state(*omega, sig_value(ctx, state_dim(*omega)),
                                      mu_value(ctx));
      emit(state_to_json(*reduced));
    });
  }
  {
    CLI::App* sub = add_common(
        app.add_subcommand("verify-cert", "check a positivity certificate"), "any");
    sub->add_option("--target", ctx.target, "target element expression");
    sub->add_option("--cert", ctx.cert, "certificate JSON");
    sub->add_option("--gens", ctx.gens, "generator list JSON");
    sub->add_option("--s", ctx.s, "signature split (psatz)");
    sub->add_option("--mu", ctx.mu, "level (psatz, rational)");
    act(sub, [&] {
      if (ctx.cert.empty()) throw UsageError{"--cert is required"};
      if (ctx.target.empty()) throw UsageError{"--target is required"};
      Json cj = json_parse(ctx.cert);
      if (!cj.is_object() || !cj.contains("kind") || !cj.at("kind").is_string())
        throw StarError(ErrorCode::SyntaxError, "certificate needs a \"kind\"");
      std::string k = cj.at("kind").get<std::string>();
      AlgebraElement target = parse_element(ctx.target, config(ctx));
      if (k == "qm") {
        emit(Json{{"valid", verify_qm(target, input_gens(ctx), qm_from_json(cj))}});
      } else if (k == "po") {
        emit(Json{{"valid", verify_po(target, input_gens(ctx), po_from_json(cj))}});
      } else if (k == "psatz") {
        if (!std::holds_alternative<PolyElement>(target))
          throw StarError(ErrorCode::AlgebraMismatch, "psatz targets are poly");
        const PolyElement& f = std::get<PolyElement>(target);
        bool ok = verify_positivstellensatz(f, sig_value(ctx, f.n()),
                                            mu_value(ctx), psatz_from_json(cj));
        emit(Json{{"valid", ok},
                  {"note", "membership of p in the quadratic module is assumed"}});
      } else {
        throw StarError(ErrorCode::SyntaxError, "unknown certificate kind '" + k + "'");
      }
    });
  }
  {
    CLI::App* sub = app.add_subcommand(
        "sample", "seeded points on the levelset J = mu");
    sub->add_option("--n", ctx.n, "poly index bound n");
    sub->add_option("--s", ctx.s, "signature split");
    sub->add_option("--mu", ctx.mu, "level (rational)");
    sub->add_option("--count", ctx.count, "number of points");
    sub->add_option("--seed", ctx.seed, "RNG seed")->required();
    sub->add_option("--output", ctx.output, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    act(sub, [&] {
      Signature sig = sig_value(ctx, n_value(ctx));
      double mu = mu_value(ctx).re().get_d();
      Json pts = Json::array();
      for (const ComplexPoint& w : sample_levelset(sig, mu, ctx.count, ctx.seed))
        pts.push_back(point_json(w));
      emit(Json{{"points", std::move(pts)}});
    });
  }
  {
    CLI::App* sub = add_common(
        app.add_subcommand("falsify",
                           "search sampled levelset points for a negative value"),
        "poly");
    add_exprs(sub, 1);
    sub->add_option("--s", ctx.s, "signature split");
    sub->add_option("--mu", ctx.mu, "level (rational)");
    sub->add_option("--count", ctx.count, "number of points");
    sub->add_option("--seed", ctx.seed, "RNG seed")->required();
    act(sub, [&] {
      PolyElement f = input_poly(ctx);
      double mu = mu_value(ctx).re().get_d();
      FalsifyResult r = pointwise_falsify(f, sig_value(ctx, f.n()), mu,
                                          ctx.count, ctx.seed);
      if (r.counterexample)
        emit(Json{{"verdict", "counterexample"},
                  {"w", point_json(r.w)},
                  {"value", r.value}});
      else
        emit(Json{{"verdict", "no-counterexample"}});
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    for (auto& [sub, fn] : actions)
      if (sub->parsed()) {
        fn();
        return 0;
      }
    std::cerr << "no subcommand\n";
    return 2;
  } catch (const UsageError& u) {
    std::cerr << u.msg << "\n";
    return 2;
  } catch (const StarError& e) {
    Json err{{"error", error_name(e.code())}, {"detail", e.detail()}};
    if (e.position() >= 0) err["position"] = e.position();
    emit(err);
    return 1;
  } catch (const std::invalid_argument& e) {
    emit(Json{{"error", "InvalidArgument"}, {"detail", e.what()}});
    return 1;
  }
}
