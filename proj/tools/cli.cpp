#include "cli.hpp"

#include "io.hpp"
#include "toriclab/adjunction.hpp"
#include "toriclab/catalog.hpp"
#include "toriclab/cayley.hpp"
#include "toriclab/cycles.hpp"
#include "toriclab/latticepoints.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace toriclab::cli {

namespace {

using io::json;
using io::to_json;

struct Context {
  std::istream &in;
  std::string input; ///< file path; stdin when empty or "-"
};

json read_input(const Context &ctx) {
  if (ctx.input.empty() || ctx.input == "-")
    return io::read_json(ctx.in);
  std::ifstream file(ctx.input);
  if (!file)
    throw std::invalid_argument("cannot open '" + ctx.input + "'");
  return io::read_json(file);
}

json read_file(const std::string &path) {
  std::ifstream file(path);
  if (!file)
    throw std::invalid_argument("cannot open '" + path + "'");
  return io::read_json(file);
}

/// "simplex:n" or "simplex:n:k" for kΔ_n, otherwise a polytope JSON file.
Polytope polytope_arg(const std::string &arg) {
  const std::string prefix = "simplex:";
  if (arg.rfind(prefix, 0) != 0)
    return io::polytope_from(read_file(arg));
  std::stringstream ss(arg.substr(prefix.size()));
  std::string part;
  std::vector<std::string> parts;
  while (std::getline(ss, part, ':'))
    parts.push_back(part);
  if (parts.empty() || parts.size() > 2)
    throw std::invalid_argument("malformed simplex argument '" + arg + "'");
  const long n = std::stol(parts[0]);
  if (n < 1)
    throw std::invalid_argument("simplex dimension must be positive");
  return simplex(static_cast<std::size_t>(n), parts.size() == 2 ? Integer(parts[1]) : Integer(1));
}

json rays_json(const std::vector<IntVector> &rays) {
  json a = json::array();
  for (const auto &r : rays)
    a.push_back(to_json(r));
  return a;
}

json cone_json(const Cone &c) {
  return {{"ambient", c.ambient}, {"dimension", c.dimension()}, {"extreme_rays", rays_json(c.extreme_rays())}};
}

json fan_info(const Fan &f) {
  json j{{"rank", f.rank()},
         {"rays", f.ray_count()},
         {"max_cones", f.max_cones().size()},
         {"simplicial", is_simplicial(f)},
         {"smooth", is_smooth(f)},
         {"complete", is_complete(f)}};
  if (is_simplicial(f) && is_complete(f)) {
    j["picard_number"] = picard_number(f);
    j["has_ample_class"] = has_ample_class(f);
  }
  return j;
}

json step_json(const MMPStep &s) {
  json j{{"kind", to_string(s.kind)}, {"before", to_json(s.before)}, {"after", to_json(s.after)}};
  if (s.ray) {
    j["ray"] = to_json(*s.ray);
    j["relation"] = to_json(s.relation.coeffs);
  }
  if (s.general_fiber)
    j["general_fiber"] = to_json(*s.general_fiber);
  return j;
}

json census_json(const MMPCensus &c) {
  json ends = json::array();
  for (const auto &e : c.ends) {
    json j{{"kind", to_string(e.kind)}, {"final_fan", to_json(e.final_fan)}, {"steps", e.steps}, {"runs", e.runs}};
    if (e.base)
      j["base"] = to_json(*e.base);
    if (e.general_fiber)
      j["general_fiber"] = to_json(*e.general_fiber);
    if (e.kind == StepKind::fiber_end)
      j["fiber_relation"] = to_json(e.fiber_relation.coeffs);
    ends.push_back(j);
  }
  return {{"runs", c.runs}, {"fiber_ends", c.fiber_ends()}, {"distinct_fibers", c.distinct_fibers()}, {"ends", ends}};
}

json classification_json(const ClassificationResult &r) {
  json factors = json::array();
  for (const auto &p : r.factors)
    factors.push_back(to_json(p));
  json degrees = json::array();
  for (const auto &d : r.degrees)
    degrees.push_back(to_json(d));
  json j{{"label", to_string(r.label)}, {"codegree", to_json(r.codegree)}, {"nef_value", to_json(r.nef_value)},
         {"k", to_json(r.k)},           {"s", to_json(r.s)},               {"factors", factors},
         {"degrees", degrees},          {"notes", r.notes}};
  if (!r.fano_model.empty())
    j["fano_model"] = r.fano_model;
  return j;
}

void render_text(std::ostream &out, const json &j, const std::string &indent = "") {
  auto scalar = [](const json &x) { return x.is_string() ? x.get<std::string>() : x.dump(); };
  auto flat = [&](const json &a) {
    std::string s = "[";
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i)
        s += ", ";
      s += a[i].is_array() ? std::string("[...]") : scalar(a[i]);
    }
    return s + "]";
  };
  auto is_flat = [](const json &a) {
    return std::all_of(a.begin(), a.end(), [](const json &x) { return x.is_primitive(); });
  };
  auto line = [&](const json &a) {
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i)
      s += (i ? " " : "") + (a[i].is_array() ? flat(a[i]) : a[i].is_string() ? a[i].get<std::string>() : a[i].dump());
    return s;
  };
  if (j.is_object()) {
    for (const auto &[k, v] : j.items()) {
      if (v.is_primitive())
        out << indent << k << ": " << scalar(v) << "\n";
      else if (v.is_array() && is_flat(v))
        out << indent << k << ": " << flat(v) << "\n";
      else {
        out << indent << k << ":\n";
        render_text(out, v, indent + "  ");
      }
    }
  } else if (j.is_array()) {
    for (const auto &v : j) {
      if (v.is_object()) {
        out << indent << "-\n";
        render_text(out, v, indent + "  ");
      } else if (v.is_array()) {
        out << indent << line(v) << "\n";
      } else {
        out << indent << scalar(v) << "\n";
      }
    }
  } else {
    out << indent << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

} // namespace

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err) {
  CLI::App app{"Toric geometry toolkit: lattice polytopes, fans, adjunction, Cayley structures, MMP"};
  app.name("toriclab");
  app.require_subcommand(1);

  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  Context ctx{in, ""};
  std::function<json()> action;

  auto leaf = [&](CLI::App *parent, const std::string &name, const std::string &help) {
    CLI::App *sub = parent->add_subcommand(name, help);
    return sub;
  };
  auto with_input = [&](CLI::App *sub) {
    sub->add_option("input", ctx.input, "JSON input file (default: stdin)");
    return sub;
  };

  // ---- poly -----------------------------------------------------------------
  CLI::App *poly = app.add_subcommand("poly", "Lattice polytope invariants");
  poly->require_subcommand(1);
  auto polytope_in = [&] { return io::polytope_from(read_input(ctx)); };

  with_input(leaf(poly, "info", "Vertices, lattice points, degree, volume"))->callback([&] {
    action = [&] {
      Polytope p = polytope_in();
      return json{{"dim", p.dim()},
                  {"vertices", p.vertices().size()},
                  {"facets", p.facets().size()},
                  {"lattice_points", to_json(count_lattice_points(p))},
                  {"interior_points", interior_lattice_points(p).size()},
                  {"codegree", to_json(codegree(p))},
                  {"degree", to_json(degree(p))},
                  {"normalized_volume", to_json(normalized_volume(p))},
                  {"smooth", is_smooth(p)}};
    };
  });

  std::string t_arg;
  CLI::App *adj = with_input(leaf(poly, "adjoint", "Adjoint polytope P^(t)"));
  adj->add_option("--t", t_arg, "Rational parameter t")->required();
  adj->callback([&] {
    action = [&] {
      Polytope p = polytope_in();
      Rational t = parse_rational(t_arg);
      auto q = adjoint_polytope(p, t);
      json j{{"t", to_json(t)}, {"empty", !q.has_value()}};
      if (q)
        j["polytope"] = to_json(*q);
      return j;
    };
  });

  with_input(leaf(poly, "qcodeg", "Q-codegree and sigma"))->callback([&] {
    action = [&] {
      Polytope p = polytope_in();
      return json{{"sigma", to_json(sigma_value(p))}, {"q_codegree", to_json(q_codegree(p))}};
    };
  });

  with_input(leaf(poly, "nefvalue", "Nef value and lambda"))->callback([&] {
    action = [&] {
      Polytope p = polytope_in();
      return json{{"lambda", to_json(lambda_value(p))}, {"nef_value", to_json(nef_value(p))}};
    };
  });

  with_input(leaf(poly, "qnormal", "Q-normality report"))->callback([&] {
    action = [&] {
      auto r = adjunction_report(polytope_in());
      return json{{"sigma", to_json(r.sigma)},
                  {"lambda", to_json(r.lambda)},
                  {"q_codegree", to_json(r.q_codegree)},
                  {"nef_value", to_json(r.nef_value)},
                  {"q_normal", r.is_q_normal},
                  {"codegree", to_json(r.codegree)},
                  {"ceil_check", r.ceil_check},
                  {"lambda_verified", r.lambda_verified}};
    };
  });

  with_input(leaf(poly, "classify", "Classification of smooth Q-normal polytopes of large codegree"))
      ->callback([&] { action = [&] { return classification_json(classify(polytope_in())); }; });

  with_input(leaf(poly, "hstar", "Ehrhart h*-polynomial"))->callback([&] {
    action = [&] {
      Polytope p = polytope_in();
      HStarPolynomial h = h_star(p);
      json c = json::array();
      for (const auto &x : h.coefficients)
        c.push_back(to_json(x));
      return json{{"coefficients", c},
                  {"degree", h.degree()},
                  {"sum", to_json(h.sum())},
                  {"normalized_volume", to_json(normalized_volume(p))}};
    };
  });

  // ---- fan ------------------------------------------------------------------
  CLI::App *fan = app.add_subcommand("fan", "Fan invariants, cones and the MMP");
  fan->require_subcommand(1);
  auto fan_in = [&] { return io::fan_from(read_input(ctx)); };

  with_input(leaf(fan, "info", "Basic properties"))->callback([&] { action = [&] { return fan_info(fan_in()); }; });

  with_input(leaf(fan, "walls", "Walls and their curve classes"))->callback([&] {
    action = [&] {
      Fan f = fan_in();
      json a = json::array();
      for (const auto &w : walls(f))
        a.push_back({{"rays", w.rays}, {"relation", to_json(curve_class(f, w).coeffs)}});
      return a;
    };
  });

  with_input(leaf(fan, "mori", "Mori cone in N_1 coordinates"))->callback([&] {
    action = [&] { return cone_json(mori_cone(fan_in())); };
  });
  with_input(leaf(fan, "nef", "Nef cone in class coordinates"))->callback([&] {
    action = [&] { return cone_json(nef_cone(fan_in())); };
  });

  bool flags = false;
  CLI::App *eff = with_input(leaf(fan, "eff", "Pseudo-effective cone"));
  eff->add_flag("--flags", flags, "Per-ray extremality from minimal relations");
  eff->callback([&] {
    action = [&] {
      Fan f = fan_in();
      json j = cone_json(eff_cone(f));
      if (flags) {
        auto fl = eff_extremal_flags(f);
        j["flags"] = fl;
        j["extremal_count"] = std::count(fl.begin(), fl.end(), true);
      }
      return j;
    };
  });

  with_input(leaf(fan, "mov", "Moving cone and minimal relations"))->callback([&] {
    action = [&] {
      Fan f = fan_in();
      json j = cone_json(mov_cone(f));
      json rels = json::array();
      for (const auto &m : mov_extremal_rays(f))
        rels.push_back({{"support", m.relation.support},
                        {"coeffs", to_json(m.relation.coeffs)},
                        {"n1", to_json(m.n1)},
                        {"fiber", to_json(m.fiber)}});
      j["minimal_relations"] = rels;
      return j;
    };
  });

  bool all_branches = false, k_trivial = false, audit = false;
  CLI::App *mmp = with_input(leaf(fan, "mmp", "Run the MMP"));
  mmp->add_flag("--all-branches", all_branches, "Enumerate every K-negative choice");
  mmp->add_flag("--k-trivial", k_trivial, "With --all-branches: also follow K-trivial rays");
  mmp->add_flag("--audit", audit, "Re-check completeness and simpliciality after each step");
  mmp->callback([&] {
    action = [&] {
      Fan f = fan_in();
      if (all_branches)
        return census_json(mmp_census(f, k_trivial));
      MMPOptions opts;
      opts.audit = audit;
      json steps = json::array();
      for (const auto &s : run_mmp(f, opts).steps)
        steps.push_back(step_json(s));
      return json{{"steps", steps}};
    };
  });

  std::size_t cycle_dim = 1;
  CLI::App *cyc = with_input(leaf(fan, "cycles", "Cohomology ranks and the cone of k-cycles"));
  cyc->add_option("--k", cycle_dim, "Cycle dimension")->required();
  cyc->callback([&] {
    action = [&] {
      ChowRing ring(fan_in());
      if (cycle_dim > ring.dim())
        throw std::invalid_argument("cycle dimension exceeds the variety");
      json j = cone_json(ne_k_cone(ring, cycle_dim));
      j["k"] = cycle_dim;
      j["ranks"] = ring.ranks();
      return j;
    };
  });

  // ---- gen ------------------------------------------------------------------
  CLI::App *gen = app.add_subcommand("gen", "Generators for the example families");
  gen->require_subcommand(1);

  std::size_t gen_n = 0;
  CLI::App *pn = leaf(gen, "pn", "Fan of P^n");
  pn->add_option("n", gen_n)->required()->check(CLI::PositiveNumber);
  pn->callback([&] { action = [&] { return to_json(projective_space(gen_n)); }; });

  std::vector<std::string> twists;
  std::string emit = "fan", s_arg = "1", a_arg = "1";
  CLI::App *bundle = leaf(gen, "bundle", "P_{P^m}(O(a_0) + ... + O(a_k))");
  bundle->add_option("m", gen_n)->required()->check(CLI::PositiveNumber);
  bundle->add_option("twists", twists, "a_0 <= ... <= a_k")->required();
  bundle->add_option("--emit", emit, "fan, divisor (s xi + a H) or L (its polytope)")
      ->check(CLI::IsMember({"fan", "divisor", "L"}));
  bundle->add_option("--s", s_arg, "Coefficient of the tautological divisor");
  bundle->add_option("--a", a_arg, "Coefficient of the pulled-back hyperplane");
  bundle->callback([&] {
    action = [&] {
      std::vector<Integer> tw;
      for (const auto &x : twists)
        tw.push_back(Integer(x));
      Fan f = bundle_over_projective_space(gen_n, tw);
      if (emit == "fan")
        return to_json(f);
      if (emit == "divisor")
        return to_json(f, bundle_polarization(Integer(s_arg), Integer(a_arg), gen_n, tw));
      return to_json(ample_on_bundle(Integer(s_arg), Integer(a_arg), gen_n, tw));
    };
  });

  CLI::App *con = leaf(gen, "contra", "Blowup of P^m x P^1 along H x {o}");
  con->add_option("m", gen_n)->required()->check(CLI::PositiveNumber);
  con->add_option("--emit", emit, "fan, divisor (L) or L (its polytope)")->check(CLI::IsMember({"fan", "divisor", "L"}));
  con->callback([&] {
    action = [&] {
      auto c = contra(gen_n);
      if (emit == "fan")
        return to_json(c.fan);
      if (emit == "divisor")
        return to_json(c.fan, c.polarization);
      auto q = polytope_of_divisor(c.fan, c.polarization);
      auto p = q ? as_lattice(*q) : std::nullopt;
      if (!p)
        throw std::logic_error("polarization polytope is not a lattice polytope");
      return to_json(*p);
    };
  });

  CLI::App *lm = leaf(gen, "losev-manin", "Losev-Manin fan in dimension n");
  lm->add_option("n", gen_n)->required()->check(CLI::PositiveNumber);
  lm->callback([&] { action = [&] { return to_json(losev_manin(gen_n)); }; });

  std::vector<std::string> factor_args;
  CLI::App *cay = leaf(gen, "cayley", "Cayley polytope of order s");
  cay->add_option("--s", s_arg, "Order");
  cay->add_option("factors", factor_args, "Polytope files or simplex:n[:k]")->required();
  cay->callback([&] {
    action = [&] {
      CayleySpec spec{Integer(s_arg), {}};
      for (const auto &a : factor_args)
        spec.factors.push_back(polytope_arg(a));
      return to_json(build_cayley(spec));
    };
  });

  CLI::App *prod = leaf(gen, "product", "Product of two polytopes");
  prod->add_option("factors", factor_args, "Polytope files or simplex:n[:k]")->required()->expected(2);
  prod->callback([&] {
    action = [&] { return to_json(product(polytope_arg(factor_args[0]), polytope_arg(factor_args[1]))); };
  });

  std::string k_arg;
  CLI::App *dil = leaf(gen, "dilate", "k-th dilate of a polytope");
  dil->add_option("k", k_arg)->required();
  dil->add_option("input", ctx.input, "Polytope file or simplex:n[:k] (default: stdin)");
  dil->callback([&] {
    action = [&] {
      Integer k(k_arg);
      if (k < 1)
        throw std::invalid_argument("dilation factor must be positive");
      Polytope p = ctx.input.rfind("simplex:", 0) == 0 ? polytope_arg(ctx.input) : polytope_in();
      return to_json(dilate(p, k));
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n" << app.help();
    return usage;
  }

  try {
    json result = action();
    if (format == "json")
      out << result.dump(2) << "\n";
    else
      render_text(out, result);
    return ok;
  } catch (const HypothesisError &e) {
    err << "hypothesis violated (" << e.hypothesis << "): " << e.what() << "\n";
    return hypothesis_violation;
  } catch (const std::invalid_argument &e) {
    err << "input error: " << e.what() << "\n";
    return input_error;
  } catch (const std::domain_error &e) {
    err << "input error: " << e.what() << "\n";
    return input_error;
  } catch (const json::exception &e) {
    err << "input error: " << e.what() << "\n";
    return input_error;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return failure;
  }
}

} // namespace toriclab::cli
