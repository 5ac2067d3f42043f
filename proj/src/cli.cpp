#include "courant/cli.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <fstream>
#include <iostream>

namespace courant::cli {

namespace {

Sampler sampler(const RunConfig& cfg) { return Sampler(cfg.seed, cfg.max_degree); }

json pair_witness(int trial, const GSec& u, const GSec& v) {
  return {{"trial", trial}, {"u", to_json(u)}, {"v", to_json(v)}};
}

json section_witness(int trial, const GSec& u) { return {{"trial", trial}, {"u", to_json(u)}}; }

bool flat_data(const StdCA& e) { return e.conn.is_trivial() && e.R.is_zero(); }

Dissection random_dissection(const StdCA& e, Sampler& s, bool strict) {
  Dissection d{random_qaut(e.q, s), QForm(e.chart, e.dim(), 1), TForm(e.chart, 2)};
  // closed A on abelian Q keeps the curvature; strict mode also wants closed B
  if (e.q.is_abelian()) {
    for (auto& c : d.A.comp) c = exterior_d(s.form(e.chart, 0));
  } else if (!strict || !flat_data(e)) {
    d.A = s.qform(e.chart, e.dim(), 1);
  }
  d.B = strict ? exterior_d(s.form(e.chart, 1)) : s.form(e.chart, 2);
  return d;
}

std::vector<Aut> parse_auts(const std::vector<json>& js, std::size_t need, const StdCA& e, Sampler& s, json& details) {
  std::vector<Aut> out;
  for (const auto& j : js) out.push_back(aut_from_json(j, e));
  if (out.empty())
    for (std::size_t i = 0; i < need; ++i) {
      out.push_back(fixture_aut(e, s));
      details["drawn"].push_back(to_json(out.back()));
    }
  if (out.size() != need) throw InputError("expected " + std::to_string(need) + " automorphism(s)");
  return out;
}

std::vector<InfAut> parse_infs(const std::vector<json>& js, std::size_t need, const StdCA& e, Sampler& s,
                               json& details) {
  std::vector<InfAut> out;
  for (const auto& j : js) out.push_back(infaut_from_json(j, e));
  if (out.empty())
    for (std::size_t i = 0; i < need; ++i) {
      out.push_back(fixture_infaut(e, s));
      details["drawn"].push_back(to_json(out.back()));
    }
  if (out.size() != need) throw InputError("expected " + std::to_string(need) + " infinitesimal automorphism(s)");
  return out;
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::vector<Rat> constants(const json& params, const char* key, std::size_t m) {
  std::vector<Rat> c(m * m * m);
  if (!params.contains(key)) return c;
  const json& j = params.at(key);
  if (!j.is_array() || j.size() != c.size())
    throw InputError(std::string(key) + " must list m^3 = " + std::to_string(c.size()) + " rationals");
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = rat_from_json(j[i]);
  return c;
}

std::size_t size_param(const json& params, const char* key, std::size_t fallback) {
  if (!params.contains(key)) return fallback;
  const json& j = params.at(key);
  if (!j.is_number_unsigned()) throw InputError(std::string(key) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

}  // namespace

Outcome cmd_validate(const json& instance, const RunConfig& cfg) {
  StdCA e = stdca_from_json(instance);
  Outcome o;
  o.report.merge(validate(e), "validate.");
  Sampler s = sampler(cfg);
  o.report.merge(axiom_suite(e, s, cfg.trials), "axioms.");
  return o;
}

Outcome cmd_transform(const json& instance, const json& delta, bool strict_aut, const RunConfig& cfg) {
  StdCA e = stdca_from_json(instance);
  Sampler s = sampler(cfg);
  Dissection d = delta.is_null() ? random_dissection(e, s, strict_aut) : dissection_from_json(delta, e);
  Outcome o;
  Report& r = o.report;
  r.merge(validate(e), "input.");

  StdCA hat = dissection_change(d, e);
  StdCA composite = transform_data(
      PsiData::of_tau(d.tau), transform_data(PsiData::of_A(d.A), transform_data(PsiData::of_B(d.B), e)));
  r.record("composite", hat == composite, json{{"reason", "closed form differs from the composite of elementary maps"}});
  r.merge(validate(hat), "output.");

  json wb = nullptr, wi = nullptr;
  for (int t = 0; t < cfg.trials; ++t) {
    GSec u = random_section(e, s), v = random_section(e, s);
    GSec du = dissection_apply(d, e, u), dv = dissection_apply(d, e, v);
    if (wb.is_null() && dissection_apply(d, e, bracket(e, u, v)) != bracket(hat, du, dv)) wb = pair_witness(t, u, v);
    if (wi.is_null() && inner(hat, du, dv) != inner(e, u, v)) wi = pair_witness(t, u, v);
  }
  r.record("bracket_intertwined", wb.is_null(), wb);
  r.record("pairing_intertwined", wi.is_null(), wi);

  if (strict_aut) {
    Aut f{FolAffine::identity(e.chart), d.tau, d.A, d.B};
    r.merge(check_aut(f, e, s, cfg.trials), "aut.");
  }
  o.details = json{{"delta", to_json(d)}};
  o.result = to_json(hat);
  return o;
}

Outcome cmd_group(const json& instance, GroupOp op, const std::vector<json>& auts, const json& expect,
                  const RunConfig& cfg) {
  StdCA e = stdca_from_json(instance);
  Sampler s = sampler(cfg);
  Outcome o;
  Report& r = o.report;
  switch (op) {
    case GroupOp::Check: {
      if (!expect.is_null()) throw InputError("--expect is not used by group check");
      Aut f = parse_auts(auts, 1, e, s, o.details)[0];
      r.merge(check_aut(f, e, s, cfg.trials));
      return o;
    }
    case GroupOp::Invert: {
      Aut f = parse_auts(auts, 1, e, s, o.details)[0];
      r.merge(check_aut(f, e, s, cfg.trials), "arg0.");
      Aut g = aut_invert(f);
      Aut id = Aut::identity(e);
      r.record("left_inverse", aut_compose(g, f, e.q) == id, json{{"reason", "inverse o f is not the identity"}});
      r.record("right_inverse", aut_compose(f, g, e.q) == id, json{{"reason", "f o inverse is not the identity"}});
      json w = nullptr;
      for (int t = 0; t < cfg.trials && w.is_null(); ++t) {
        GSec u = random_section(e, s);
        if (aut_apply(g, e, aut_apply(f, e, u)) != u) w = section_witness(t, u);
      }
      r.record("action_inverse", w.is_null(), w);
      o.result = to_json(g);
      break;
    }
    case GroupOp::Compose: {
      std::vector<Aut> fs = parse_auts(auts, 2, e, s, o.details);
      r.merge(check_aut(fs[0], e, s, cfg.trials), "arg0.");
      r.merge(check_aut(fs[1], e, s, cfg.trials), "arg1.");
      Aut h = aut_compose(fs[0], fs[1], e.q);
      json w = nullptr;
      for (int t = 0; t < cfg.trials && w.is_null(); ++t) {
        GSec u = random_section(e, s);
        if (aut_apply(h, e, u) != aut_apply(fs[0], e, aut_apply(fs[1], e, u))) w = section_witness(t, u);
      }
      r.record("action_composition", w.is_null(), w);
      r.merge(check_aut(h, e, s, cfg.trials), "result.");
      o.result = to_json(h);
      break;
    }
  }
  if (!expect.is_null()) {
    Aut want = aut_from_json(expect, e);
    r.record("expect", aut_from_json(o.result, e) == want, json{{"got", o.result}});
  }
  return o;
}

Outcome cmd_inf(const json& instance, InfOp op, const std::vector<json>& elems, const json& expect,
                const RunConfig& cfg) {
  StdCA e = stdca_from_json(instance);
  Sampler s = sampler(cfg);
  Outcome o;
  Report& r = o.report;
  switch (op) {
    case InfOp::Check: {
      if (!expect.is_null()) throw InputError("--expect is not used by inf check");
      InfAut d = parse_infs(elems, 1, e, s, o.details)[0];
      r.merge(check_infaut(d, e, s, cfg.trials));
      return o;
    }
    case InfOp::Bracket: {
      std::vector<InfAut> ds = parse_infs(elems, 2, e, s, o.details);
      r.merge(check_infaut(ds[0], e, s, cfg.trials), "arg0.");
      r.merge(check_infaut(ds[1], e, s, cfg.trials), "arg1.");
      InfAut b = infaut_bracket(ds[0], ds[1], e.q);
      json w = nullptr;
      for (int t = 0; t < cfg.trials && w.is_null(); ++t) {
        GSec u = random_section(e, s);
        GSec comm = infaut_apply(ds[0], e, infaut_apply(ds[1], e, u)) - infaut_apply(ds[1], e, infaut_apply(ds[0], e, u));
        if (infaut_apply(b, e, u) != comm) w = section_witness(t, u);
      }
      r.record("commutator", w.is_null(), w);
      r.merge(check_infaut(b, e, s, cfg.trials), "result.");
      o.result = to_json(b);
      break;
    }
    case InfOp::Linearize: {
      if (elems.size() != 1) throw InputError("linearize takes one gauge pair");
      GaugePair g = gauge_from_json(elems[0], e);
      InfAut d = linearize(g, e);
      InfAut want = InfAut::zero(e);
      want.a = g.A;
      want.b = g.B;
      r.record("gauge_generator", d == want, json{{"got", to_json(d)}});
      o.result = to_json(d);
      break;
    }
  }
  if (!expect.is_null()) {
    InfAut want = infaut_from_json(expect, e);
    r.record("expect", infaut_from_json(o.result, e) == want, json{{"got", o.result}});
  }
  return o;
}

Outcome cmd_gallery(const std::string& family, const json& params, const RunConfig& cfg) {
  (void)cfg;
  if (!params.is_object()) throw InputError("gallery parameters must be an object");
  Outcome o;
  try {
    StdCA e;
    if (family == "dn" || family == "bn") {
      std::size_t n = size_param(params, "n", 3);
      Chart c{n, n};
      TForm H = params.contains("H") ? tform_from_json(params.at("H"), c, 3) : TForm(c, 3);
      e = family == "dn" ? make_dn(n, H) : make_bn(n, H);
    } else if (family == "heterotic_like") {
      StdCA d = stdca_from_json(params);
      e = make_heterotic_like(d.chart, d.q, d.conn, d.R, d.H);
    } else if (family == "heterotic4") {
      e = make_heterotic4();
    } else if (family == "flat_so3") {
      bool adjoint = params.contains("adjoint") && params.at("adjoint").is_boolean() && params.at("adjoint").get<bool>();
      e = make_flat_so3(size_param(params, "n", 3), adjoint);
    } else if (family == "point_manin") {
      std::size_t m = size_param(params, "m", 2);
      QLie q = make_point_manin(m, constants(params, "g", m), constants(params, "cobracket", m));
      o.report.merge(validate_qlie(q), "qlie.");
      e = point_algebroid(q);
    } else {
      throw InputError("unknown family '" + family + "'");
    }
    o.report.merge(validate(e), "validate.");
    o.result = to_json(e);
  } catch (const GalleryError& err) {
    o.report.merge(err.report, "construct.");
  }
  return o;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with standard Courant algebroids"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string format = "json", out_path;
  bool timing = false;
  app.add_option("--seed", cfg.seed, "seed of the random sampler");
  app.add_option("--trials", cfg.trials, "number of random trials")->check(CLI::PositiveNumber);
  app.add_option("--max-degree", cfg.max_degree, "degree bound of sampled polynomials")->check(CLI::NonNegativeNumber);
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"json"}));
  app.add_option("--out", out_path, "write the produced instance or element here");
  app.add_flag("--timing", timing, "add wall-clock time to the report");

  std::string instance_path, delta_path, expect_path, params_path, op, family;
  std::vector<std::string> elem_paths;
  bool strict = false, adjoint = false;
  std::size_t n = 0;

  auto* validate_cmd = app.add_subcommand("validate", "structural checks and the axiom suite");
  validate_cmd->add_option("instance,--instance", instance_path, "instance file")->required();

  auto* transform_cmd = app.add_subcommand("transform", "change of dissection");
  transform_cmd->add_option("instance,--instance", instance_path, "instance file")->required();
  transform_cmd->add_option("--delta", delta_path, "(tau, A, B) file; drawn from the seed if absent");
  transform_cmd->add_flag("--strict-aut", strict, "require the change to be an automorphism");

  auto* group_cmd = app.add_subcommand("group", "automorphism group laws");
  group_cmd->add_option("op", op, "compose | invert | check")->required()->check(CLI::IsMember({"compose", "invert", "check"}));
  group_cmd->add_option("--instance", instance_path, "instance file")->required();
  group_cmd->add_option("--aut", elem_paths, "automorphism file (repeat for compose)");
  group_cmd->add_option("--expect", expect_path, "expected result");

  auto* inf_cmd = app.add_subcommand("inf", "infinitesimal automorphisms");
  inf_cmd->add_option("op", op, "check | bracket | linearize")->required()->check(CLI::IsMember({"check", "bracket", "linearize"}));
  inf_cmd->add_option("--instance", instance_path, "instance file")->required();
  inf_cmd->add_option("--inf", elem_paths, "infinitesimal automorphism file (repeat for bracket)");
  inf_cmd->add_option("--gauge", delta_path, "gauge pair {A, B} for linearize");
  inf_cmd->add_option("--expect", expect_path, "expected result");

  auto* gallery_cmd = app.add_subcommand("gallery", "emit an example instance");
  gallery_cmd->add_option("family", family, "dn | bn | heterotic_like | heterotic4 | flat_so3 | point_manin")->required();
  gallery_cmd->add_option("--params", params_path, "family parameters");
  gallery_cmd->add_option("--n", n, "dimension");
  gallery_cmd->add_flag("--adjoint", adjoint, "flat_so3: use the adjoint flat connection");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInputError;
  }

  auto start = std::chrono::steady_clock::now();
  std::string command;
  Outcome o;
  try {
    json expect = expect_path.empty() ? json() : read_json(expect_path);
    std::vector<json> elems;
    for (const auto& p : elem_paths) elems.push_back(read_json(p));
    if (*validate_cmd) {
      command = "validate";
      o = cmd_validate(read_json(instance_path), cfg);
    } else if (*transform_cmd) {
      command = "transform";
      o = cmd_transform(read_json(instance_path), delta_path.empty() ? json() : read_json(delta_path), strict, cfg);
    } else if (*group_cmd) {
      command = "group " + op;
      GroupOp g = op == "compose" ? GroupOp::Compose : op == "invert" ? GroupOp::Invert : GroupOp::Check;
      o = cmd_group(read_json(instance_path), g, elems, expect, cfg);
    } else if (*inf_cmd) {
      command = "inf " + op;
      InfOp k = op == "bracket" ? InfOp::Bracket : op == "linearize" ? InfOp::Linearize : InfOp::Check;
      if (k == InfOp::Linearize) {
        if (delta_path.empty()) throw InputError("linearize needs --gauge");
        elems = {read_json(delta_path)};
      }
      o = cmd_inf(read_json(instance_path), k, elems, expect, cfg);
    } else {
      command = "gallery " + family;
      json params = params_path.empty() ? json::object() : read_json(params_path);
      if (gallery_cmd->count("--n")) params["n"] = n;
      if (adjoint) params["adjoint"] = true;
      o = cmd_gallery(family, params, cfg);
    }
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::out_of_range& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  }

  json report = {{"command", command},
                 {"seed", cfg.seed},
                 {"trials", cfg.trials},
                 {"max_degree", cfg.max_degree}};
  json body = o.report.to_json();
  report["passed"] = body["passed"];
  report["checks"] = body["checks"];
  if (!o.details.is_null()) report["details"] = o.details;
  if (!o.result.is_null()) {
    if (out_path.empty()) {
      report["result"] = o.result;
    } else {
      std::ofstream f(out_path);
      if (!f) {
        err << "cannot write " << out_path << "\n";
        return kInputError;
      }
      f << o.result.dump(2) << "\n";
    }
  }
  if (timing) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    report["timing_ms"] = ms.count();
  }
  out << report.dump(2) << "\n";
  return o.report.passed() ? kPass : kCheckFailed;
}

}  // namespace courant::cli
