#pragma once

#include <orbitope/bnorbit.hpp>
#include <orbitope/curve.hpp>
#include <orbitope/faces4d.hpp>
#include <orbitope/poly.hpp>
#include <orbitope/secantfit.hpp>
#include <orbitope/toeplitz.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace orbitope::cli {

inline constexpr const char* kVersion = "0.1.0";

using Json = nlohmann::ordered_json;

enum ExitCode { kOk = 0, kUsage = 1, kVerificationFailed = 2 };

struct RunConfig {
  std::string command;
  std::string rep;
  unsigned n = 3;
  std::size_t r = 2;
  unsigned degree = 2;
  std::size_t count = 0;
  std::uint64_t seed = 1;
  std::string mode = "exact";
  std::optional<double> tol;
  std::string out;
  std::string poly_out;
  std::string csv_out;
  // command-specific inputs
  std::string point;
  std::string s, t;
  unsigned polygon = 0;
  std::string poly;
  std::string anchor;
  std::string anchor_value = "1";
  std::int64_t max_den = 1000000;
  double theta = 0;
  std::string params;
  std::size_t grid = 2048;

  Json to_json() const {
    Json j;
    j["command"] = command;
    if (!rep.empty()) j["rep"] = rep;
    j["n"] = n;
    j["r"] = r;
    j["degree"] = degree;
    j["count"] = count;
    j["seed"] = seed;
    j["mode"] = mode;
    if (tol) j["tol"] = *tol;
    if (!point.empty()) j["point"] = point;
    if (!s.empty()) j["s"] = s;
    if (!t.empty()) j["t"] = t;
    if (polygon) j["polygon"] = polygon;
    if (!poly.empty()) j["poly"] = poly;
    if (!anchor.empty()) {
      j["anchor"] = anchor;
      j["anchor_value"] = anchor_value;
    }
    if (command == "rationalize") j["max_den"] = max_den;
    if (command == "bn top-face") j["theta"] = theta;
    if (!params.empty()) j["params"] = params;
    if (command == "bn certify-face") j["grid"] = grid;
    return j;
  }
};

namespace detail {

inline std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t used = 0;
    double x = std::stod(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("malformed number '" + tok + "'");
    v.push_back(x);
  }
  if (v.empty()) throw std::invalid_argument("empty number list");
  return v;
}

inline Exponent parse_exponent(const std::string& text) {
  Exponent e;
  std::stringstream ss(text);
  std::string tok;
  while (ss >> tok) {
    for (char& c : tok)
      if (c == ',') c = ' ';
    std::stringstream inner(tok);
    long k;
    while (inner >> k) {
      if (k < 0) throw std::invalid_argument("negative exponent in anchor");
      e.push_back(static_cast<unsigned>(k));
    }
  }
  if (e.empty()) throw std::invalid_argument("empty anchor exponent");
  return e;
}

inline Json exponent_json(const Exponent& e) {
  Json j = Json::array();
  for (unsigned k : e) j.push_back(k);
  return j;
}

inline Json rational_json(const Rational& q) { return to_string(q); }

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot write " + path);
  os << content;
}

inline std::string read_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::invalid_argument("cannot read " + path);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

inline std::pair<unsigned, unsigned> parse_pq(const std::string& rep) {
  auto r = Representation::parse(rep);
  if (r.size() != 2) throw std::invalid_argument("expected a pair p,q");
  return {r.indices()[0], r.indices()[1]};
}

inline Json face_json(const FaceDescriptor& f) {
  Json j;
  j["kind"] = to_string(f.kind);
  j["dimension"] = f.dimension;
  j["exposed"] = f.exposed;
  Json params = Json::array();
  if (!f.exact_parameters.empty())
    for (const auto& q : f.exact_parameters) params.push_back(rational_json(q));
  else
    for (double v : f.parameters) params.push_back(v);
  j["parameters"] = params;
  return j;
}

inline Json certificate_json(const HyperplaneCertificate& c) {
  Json j;
  j["normal"] = c.normal;
  j["level"] = c.level;
  j["active_params"] = c.active_params;
  j["margin"] = c.margin;
  j["normalized_margin"] = c.normalized_margin;
  j["exclusion_radius"] = c.exclusion_radius;
  j["grid"] = c.grid_size;
  return j;
}

}  // namespace detail

/// Runs one command. The report goes to `out` (and to --out when given);
/// diagnostics go to `err`.
class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(const std::vector<std::string>& args) {
    CLI::App app{"Computations with SO(2)-orbitopes", "orbitope"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    RunConfig cfg;

    auto common = [&](CLI::App* sub) {
      sub->add_option("--out", cfg.out, "write the JSON report to this file");
      sub->add_option("--tol", cfg.tol, "tolerance override");
    };
    auto* curve = app.add_subcommand("curve-info", "degree and singularities of the orbit curve");
    curve->add_option("--rep", cfg.rep, "index set, e.g. 1,3")->required();
    common(curve);

    auto* member = app.add_subcommand("membership", "membership in the universal orbitope C_n");
    member->add_option("--point", cfg.point, "x1,y1,...,xn,yn")->required();
    common(member);

    auto* facedim = app.add_subcommand("face-dim", "dimension of the face of C_n containing a point");
    facedim->add_option("--point", cfg.point, "x1,y1,...,xn,yn")->required();
    common(facedim);

    auto* faces = app.add_subcommand("faces", "face classification of the 4-dimensional orbitope C_pq");
    faces->add_option("--rep", cfg.rep, "the pair p,q")->required();
    faces->add_option("--s", cfg.s, "first curve parameter in [0,1) (edge query)");
    faces->add_option("--t", cfg.t, "second curve parameter, or polygon offset");
    faces->add_option("--polygon", cfg.polygon, "polygon size p or q");
    common(faces);

    auto* boundary = app.add_subcommand("boundary", "components of the algebraic boundary of C_pq");
    boundary->add_option("--rep", cfg.rep, "the pair p,q")->required();
    common(boundary);

    auto* fit = app.add_subcommand("secant-fit", "interpolate the secant hypersurface");
    fit->add_option("--rep", cfg.rep)->required();
    fit->add_option("--r", cfg.r, "number of points spanning a secant");
    fit->add_option("--degree", cfg.degree)->required();
    fit->add_option("--count", cfg.count, "samples (default 2.5 x basis size)");
    fit->add_option("--seed", cfg.seed);
    fit->add_option("--mode", cfg.mode)->check(CLI::IsMember({"exact", "float"}));
    fit->add_option("--anchor", cfg.anchor, "exponent vector used for normalization, e.g. 0,0,4,0");
    fit->add_option("--anchor-value", cfg.anchor_value);
    fit->add_option("--poly-out", cfg.poly_out, "write the generator in text format");
    common(fit);

    auto* verify = app.add_subcommand("verify", "residual of a polynomial on fresh secant samples");
    verify->add_option("--rep", cfg.rep)->required();
    verify->add_option("--r", cfg.r);
    verify->add_option("--poly", cfg.poly, "polynomial file")->required();
    verify->add_option("--count", cfg.count);
    verify->add_option("--seed", cfg.seed);
    common(verify);

    auto* rat = app.add_subcommand("rationalize", "round a float polynomial to rationals");
    rat->add_option("--poly", cfg.poly, "polynomial file with float coefficients")->required();
    rat->add_option("--anchor", cfg.anchor)->required();
    rat->add_option("--anchor-value", cfg.anchor_value);
    rat->add_option("--max-den", cfg.max_den);
    rat->add_option("--poly-out", cfg.poly_out);
    common(rat);

    auto* bn = app.add_subcommand("bn", "Barvinok-Novik orbitopes");
    bn->require_subcommand(1);
    auto* top = bn->add_subcommand("top-face", "top-dimensional simplicial face");
    top->add_option("--n", cfg.n)->required();
    top->add_option("--theta", cfg.theta);
    common(top);
    auto* cert = bn->add_subcommand("certify-face", "search for an exposing functional");
    cert->add_option("--n", cfg.n)->required();
    cert->add_option("--params", cfg.params, "comma-separated angles in radians")->required();
    cert->add_option("--grid", cfg.grid);
    common(cert);
    auto* wit = bn->add_subcommand("witness", "certificate that B_{n+1} is not basic closed");
    wit->add_option("--n", cfg.n)->required();
    common(wit);
    auto* slice = bn->add_subcommand("slice", "the slice w = y = 0 of B_4");
    slice->add_option("--csv-out", cfg.csv_out, "write the plot series as CSV");
    common(slice);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
      app.parse(rev);
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e, out_, err_);
      return code == 0 ? kOk : kUsage;
    }

    try {
      if (*curve) return finish(cfg.command = "curve-info", cfg, curve_info_cmd(cfg));
      if (*member) return finish(cfg.command = "membership", cfg, membership_cmd(cfg));
      if (*facedim) return finish(cfg.command = "face-dim", cfg, face_dim_cmd(cfg));
      if (*faces) return finish(cfg.command = "faces", cfg, faces_cmd(cfg));
      if (*boundary) return finish(cfg.command = "boundary", cfg, boundary_cmd(cfg));
      if (*fit) return finish(cfg.command = "secant-fit", cfg, secant_fit_cmd(cfg));
      if (*verify) return finish(cfg.command = "verify", cfg, verify_cmd(cfg));
      if (*rat) return finish(cfg.command = "rationalize", cfg, rationalize_cmd(cfg));
      if (*top) return finish(cfg.command = "bn top-face", cfg, top_face_cmd(cfg));
      if (*cert) return finish(cfg.command = "bn certify-face", cfg, certify_cmd(cfg));
      if (*wit) return finish(cfg.command = "bn witness", cfg, witness_cmd(cfg));
      if (*slice) return finish(cfg.command = "bn slice", cfg, slice_cmd(cfg));
    } catch (const std::invalid_argument& e) {
      err_ << "error: " << e.what() << '\n';
      return kUsage;
    } catch (const std::exception& e) {
      err_ << "error: " << e.what() << '\n';
      return kVerificationFailed;
    }
    err_ << "error: unknown subcommand\n";
    return kUsage;
  }

 private:
  struct Outcome {
    Json result;
    Json tolerances = Json::object();
    bool verified = true;
  };

  int finish(const std::string&, const RunConfig& cfg, Outcome o) {
    Json report;
    report["tool"] = "orbitope";
    report["version"] = kVersion;
    report["config"] = cfg.to_json();
    report["tolerances"] = o.tolerances;
    report["verified"] = o.verified;
    report["result"] = std::move(o.result);
    const std::string text = report.dump(2) + "\n";
    if (!cfg.out.empty()) detail::write_file(cfg.out, text);
    out_ << text;
    return o.verified ? kOk : kVerificationFailed;
  }

  static Outcome curve_info_cmd(const RunConfig& cfg) {
    auto rep = Representation::parse(cfg.rep);
    auto info = curve_info(rep);
    Outcome o;
    o.result["degree"] = info.degree;
    o.result["smooth"] = info.smooth;
    o.result["ambient_dim"] = info.ambient_dim;
    o.result["reduced"] = reduce(rep).to_string();
    if (info.singular_points) {
      Json pts = Json::array();
      for (const auto* p : {&info.singular_points->first, &info.singular_points->second}) {
        Json coords = Json::array();
        for (const auto& c : *p) coords.push_back({c.real(), c.imag()});
        pts.push_back(coords);
      }
      o.result["singular_points"] = pts;
    }
    return o;
  }

  static Outcome membership_cmd(const RunConfig& cfg) {
    const double tol = cfg.tol.value_or(kDefaultToeplitzTol);
    auto rep = membership_report(detail::parse_doubles(cfg.point), tol);
    Outcome o;
    o.tolerances["eigenvalue"] = tol;
    o.result["verdict"] = to_string(rep.verdict);
    o.result["min_eigenvalue"] = rep.min_eigenvalue;
    o.result["rank"] = rep.rank;
    return o;
  }

  static Outcome face_dim_cmd(const RunConfig& cfg) {
    const double tol = cfg.tol.value_or(kDefaultToeplitzTol);
    auto rep = membership_report(detail::parse_doubles(cfg.point), tol);
    Outcome o;
    o.tolerances["eigenvalue"] = tol;
    o.result["verdict"] = to_string(rep.verdict);
    if (rep.verdict == Membership::Outside) {
      o.result["face_dimension"] = nullptr;
      o.result["error"] = "point lies outside C_n";
      o.verified = false;
    } else {
      o.result["face_dimension"] = rep.face_dimension ? Json(*rep.face_dimension) : Json(nullptr);
    }
    return o;
  }

  static Json pq_json(const PQData& d) {
    Json j;
    j["p"] = d.p;
    j["q"] = d.q;
    j["k"] = d.k;
    j["l"] = d.l;
    j["intervals"] = Json::array({Json::array({detail::rational_json(d.first.lo), detail::rational_json(d.first.hi)}),
                                  Json::array({detail::rational_json(d.second.lo), detail::rational_json(d.second.hi)})});
    j["closure_is_unit_interval"] = d.closure_is_unit_interval();
    return j;
  }

  static Json components_json(unsigned p, unsigned q) {
    Json comps = Json::array();
    for (auto c : boundary_components(p, q)) comps.push_back(to_string(c));
    return comps;
  }

  static Outcome faces_cmd(const RunConfig& cfg) {
    auto [p, q] = detail::parse_pq(cfg.rep);
    const PQData d = pq_data(p, q);
    Outcome o;
    o.tolerances["endpoint"] = kEndpointTol;
    o.result["pq"] = pq_json(d);
    o.result["boundary_components"] = components_json(p, q);
    auto bc = is_basic_closed_4d(p, q);
    o.result["basic_closed"] = bc.basic_closed;
    if (bc.witness_edge)
      o.result["witness_edge"] = {detail::rational_json(bc.witness_edge->first),
                                  detail::rational_json(bc.witness_edge->second)};
    o.result["certificate"] = bc.certificate;
    if (cfg.polygon) {
      const Rational t = cfg.t.empty() ? Rational(0) : parse_rational(cfg.t);
      auto pf = polygon_faces(d, cfg.polygon, t);
      Json q_json = detail::face_json(pf.face);
      Json ne = Json::array();
      for (const auto& e : pf.non_exposed_edges) ne.push_back(detail::face_json(e));
      q_json["non_exposed_edges"] = ne;
      o.result["query"] = q_json;
    } else if (!cfg.s.empty() || !cfg.t.empty()) {
      if (cfg.s.empty() || cfg.t.empty()) throw std::invalid_argument("edge query needs both --s and --t");
      const Rational s = parse_rational(cfg.s), t = parse_rational(cfg.t);
      Json e;
      e["s"] = detail::rational_json(s);
      e["t"] = detail::rational_json(t);
      e["is_edge"] = is_edge(d, s, t);
      o.result["query"] = e;
    }
    return o;
  }

  static Outcome boundary_cmd(const RunConfig& cfg) {
    auto [p, q] = detail::parse_pq(cfg.rep);
    Outcome o;
    o.result["components"] = components_json(p, q);
    return o;
  }

  static Outcome secant_fit_cmd(const RunConfig& cfg) {
    auto rep = Representation::parse(cfg.rep);
    FitOptions opt;
    opt.count = cfg.count;
    opt.seed = cfg.seed;
    opt.mode = cfg.mode == "exact" ? SampleMode::Rational : SampleMode::Float;
    const std::size_t verify_count = 1000;
    const double vtol = cfg.tol.value_or(1e-8);
    Outcome o;
    o.tolerances["rank_threshold"] = opt.rel_threshold;
    o.tolerances["min_gap_ratio"] = opt.min_gap_ratio;
    o.tolerances["residual"] = vtol;
    o.tolerances["max_denominator"] = 1000000;
    FitResult fit;
    try {
      fit = fit_hypersurface(rep, cfg.r, cfg.degree, opt);
    } catch (const NoVanishingPolynomial& e) {
      o.result["nullity"] = 0;
      o.result["error"] = e.what();
      o.verified = false;
      return o;
    }
    const auto& r = fit.report;
    Json rep_json;
    rep_json["method"] = r.method;
    rep_json["basis_size"] = r.basis_size;
    rep_json["sample_count"] = r.sample_count;
    rep_json["nullity"] = r.nullity;
    rep_json["rank"] = r.rank;
    if (opt.mode == SampleMode::Float) {
      rep_json["sigma_max"] = r.sigma_max;
      rep_json["smallest_kept"] = r.smallest_kept;
      rep_json["largest_dropped"] = r.largest_dropped;
      rep_json["gap_ratio"] = r.gap_ratio;
    } else {
      rep_json["primes_used"] = r.primes_used;
    }
    o.result["fit"] = rep_json;

    std::optional<Exponent> anchor;
    if (!cfg.anchor.empty()) anchor = detail::parse_exponent(cfg.anchor);
    Json polys = Json::array();
    std::string text;
    for (std::size_t i = 0; i < r.nullity; ++i) {
      QPoly p(rep.ambient_dim());
      double rounding = 0;
      if (opt.mode == SampleMode::Rational) {
        p = fit.exact[i];
        if (anchor) p = normalize(p, *anchor, parse_rational(cfg.anchor_value));
        else p = primitive_form(p);
      } else {
        if (!anchor) throw std::invalid_argument("float mode needs --anchor to round the fit");
        auto rz = rationalize(fit.approx[i], *anchor, parse_rational(cfg.anchor_value));
        p = rz.poly;
        rounding = rz.max_distance;
      }
      const double residual = verify_vanishing(p, rep, cfg.r, verify_count, cfg.seed + 1);
      Json pj;
      pj["terms"] = p.term_count();
      pj["degree"] = p.degree();
      pj["residual"] = residual;
      if (opt.mode == SampleMode::Float) pj["max_rounding_distance"] = rounding;
      pj["text"] = to_text(p);
      if (residual > vtol) o.verified = false;
      polys.push_back(pj);
      if (i) text += "#\n";
      text += to_text(p);
    }
    o.result["polynomials"] = polys;
    if (!cfg.poly_out.empty()) detail::write_file(cfg.poly_out, text);
    return o;
  }

  /// Integer coefficients with gcd 1 and a positive lowest-order term.
  static QPoly primitive_form(const QPoly& p) {
    Integer l = 1, g = 0;
    for (const auto& [e, c] : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    for (const auto& [e, c] : p.terms()) {
      Integer v = c.get_num() * (l / c.get_den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    Rational scale(l, g);
    scale.canonicalize();
    if (!p.terms().empty() && p.terms().rbegin()->second < 0) scale = -scale;
    return p * scale;
  }

  static Outcome verify_cmd(const RunConfig& cfg) {
    auto rep = Representation::parse(cfg.rep);
    const QPoly p = parse_text<Rational>(detail::read_file(cfg.poly));
    const std::size_t count = cfg.count ? cfg.count : 10000;
    const double tol = cfg.tol.value_or(1e-8);
    Outcome o;
    o.tolerances["residual"] = tol;
    const double residual = verify_vanishing(p, rep, cfg.r, count, cfg.seed);
    o.result["samples"] = count;
    o.result["max_residual"] = residual;
    o.verified = residual <= tol;
    return o;
  }

  static Outcome rationalize_cmd(const RunConfig& cfg) {
    const FPoly p = parse_text<double>(detail::read_file(cfg.poly));
    auto rz = rationalize(p, detail::parse_exponent(cfg.anchor), parse_rational(cfg.anchor_value), cfg.max_den);
    Outcome o;
    o.tolerances["max_denominator"] = cfg.max_den;
    o.result["terms"] = rz.poly.term_count();
    o.result["degree"] = rz.poly.degree();
    o.result["max_rounding_distance"] = rz.max_distance;
    o.result["text"] = to_text(rz.poly);
    if (!cfg.poly_out.empty()) detail::write_file(cfg.poly_out, to_text(rz.poly));
    return o;
  }

  static Outcome top_face_cmd(const RunConfig& cfg) {
    TopFaceOptions opt;
    auto f = top_face(cfg.n, cfg.theta, opt);
    Outcome o;
    o.tolerances["grid"] = opt.grid;
    o.tolerances["exclusion_radius"] = opt.exclusion_radius;
    o.result["face"] = detail::face_json(f);
    o.result["certificate"] = detail::certificate_json(*f.certificate);
    o.verified = f.certificate->margin > 0;
    return o;
  }

  static Outcome certify_cmd(const RunConfig& cfg) {
    CertifyOptions opt;
    opt.grid = cfg.grid;
    if (cfg.tol) opt.tol = *cfg.tol;
    auto res = certify_face(cfg.n, detail::parse_doubles(cfg.params), opt);
    Outcome o;
    o.tolerances["slack"] = opt.tol;
    o.tolerances["grid"] = opt.grid;
    o.tolerances["refine"] = opt.refine;
    o.tolerances["exclusion_radius"] = opt.exclusion_radius;
    o.result["success"] = res.success();
    o.result["normalized_slack"] = res.normalized_slack;
    if (res.success()) o.result["certificate"] = detail::certificate_json(*res.certificate);
    else o.result["reason"] = res.reason;
    // a failed search is a result, not a verification failure
    return o;
  }

  static Outcome witness_cmd(const RunConfig& cfg) {
    auto w = not_basic_witness(cfg.n);
    Outcome o;
    o.tolerances["float_barycenter"] = 1e-12;
    o.tolerances["affine_rank"] = 1e-10;
    Json j;
    j["n"] = w.n;
    j["secant_index"] = w.k;
    Json mid = Json::array();
    for (const auto& v : w.midpoint) mid.push_back(detail::rational_json(v));
    j["midpoint_of_SM0_SMpi"] = mid;
    j["origin_on_secant"] = w.origin_on_secant;
    Json ic;
    ic["points"] = w.interior.vertices.size();
    Json turns = Json::array(), weights = Json::array();
    for (const auto& v : w.interior.vertex_turns) turns.push_back(detail::rational_json(v));
    for (const auto& v : w.interior.barycentric) weights.push_back(detail::rational_json(v));
    ic["vertex_turns"] = turns;
    ic["weights"] = weights;
    ic["exact_identity"] = w.interior.exact_identity;
    ic["float_residual"] = w.interior.float_residual;
    ic["affinely_independent"] = w.interior.vertices_independent;
    j["interior_certificate"] = ic;
    if (w.f_at_origin) j["f_at_origin"] = detail::rational_json(*w.f_at_origin);
    if (w.slice_gradient) {
      Json g = Json::array();
      for (const auto& v : *w.slice_gradient) g.push_back(detail::rational_json(v));
      j["slice_gradient"] = g;
    }
    j["accepted"] = w.accepted;
    o.result = j;
    o.verified = w.accepted && w.interior.float_residual <= 1e-12;
    return o;
  }

  static Outcome slice_cmd(const RunConfig& cfg) {
    SliceOptions opt;
    if (cfg.tol) opt.gauge_tolerance = *cfg.tol;
    auto s = slice_B4(opt);
    Outcome o;
    o.tolerances["gauge"] = opt.gauge_tolerance;
    o.tolerances["gauge_grid"] = opt.gauge_grid;
    o.result["restricted_f"] = to_pretty(s.restricted_f, {"x", "z"});
    o.result["factors"] = {to_pretty(s.line_cubed, {"x", "z"}), to_pretty(s.cubic, {"x", "z"})};
    o.result["f_factorization_exact"] = s.f_factorization;
    o.result["restricted_circle"] = to_pretty(s.restricted_circle, {"x", "z"});
    o.result["circle_factorization_exact"] = s.circle_factorization;
    std::size_t black = 0;
    for (const auto& p : s.series) black += p.on_boundary;
    o.result["series_points"] = s.series.size();
    o.result["boundary_points"] = black;
    if (!cfg.csv_out.empty()) detail::write_file(cfg.csv_out, s.csv());
    o.verified = s.f_factorization && s.circle_factorization;
    return o;
  }

  std::ostream& out_;
  std::ostream& err_;
};

inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  return Runner(out, err).run(args);
}

}  // namespace orbitope::cli
