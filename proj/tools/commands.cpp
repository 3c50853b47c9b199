#include "commands.hpp"

#include "json_io.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace og6::cli {
namespace {

using io::json;
using io::to_json;

struct Options {
  bool json = false;
  std::uint64_t seed = 0;
  std::string scale = "smoke";
  std::int64_t box = 2;
  int depth = 12;
  std::string lattice = "U^3+(-2)^2";
  std::string gram;
  std::string v, w, matrix, word, pic, x, k;
  std::string mode = "kahler";
  std::string group = "sotilde";
  bool tamper = false;
  bool timings = false;
};

json load(const std::string& arg, const std::string& what) {
  require(!arg.empty(), ErrorKind::InvalidInput, "missing " + what);
  auto first = arg.find_first_not_of(" \t\n");
  char c = first == std::string::npos ? ' ' : arg[first];
  if (c == '[' || c == '{' || c == '"' || c == '-' || std::isdigit(static_cast<unsigned char>(c)))
    return io::parse_text(arg);
  std::ifstream in(arg);
  require(in.good(), ErrorKind::InvalidInput, "cannot read " + what + " from " + arg);
  std::stringstream buf;
  buf << in.rdbuf();
  return io::parse_text(buf.str());
}

LatticePtr lattice_of(const Options& o) {
  if (!o.gram.empty()) return make_lattice(io::parse_int_matrix(load(o.gram, "--gram")));
  return make_lattice(gram_from_tag(o.lattice), o.lattice);
}

LatticeVector vector_of(const LatticePtr& l, const std::string& arg, const std::string& what) {
  IntVector c = io::parse_int_vector(load(arg, what));
  require(c.size() == l->rank(), ErrorKind::DimensionMismatch,
          what + " has " + std::to_string(c.size()) + " coordinates, lattice rank is " + std::to_string(l->rank()));
  return LatticeVector(l, c);
}

Isometry isometry_of(const LatticePtr& l, const Options& o) {
  if (!o.word.empty()) return evaluate(io::parse_word(l, load(o.word, "--word")));
  IntMatrix m = io::parse_int_matrix(load(o.matrix, "--matrix"));
  require(m.rows() == l->rank() && m.cols() == l->rank(), ErrorKind::DimensionMismatch,
          "matrix size differs from the lattice rank");
  return make_isometry(l, m);
}

bool is_og6(const Lattice& l) { return l.rank() == 8 && l.gram() == gram_from_tag("U^3+(-2)^2"); }

// Transvections t(b, u) with b a basis vector of a leading hyperbolic plane
// and u a basis vector orthogonal to b outside its plane.
std::vector<Isometry> unit_transvections(const LatticePtr& l) {
  std::vector<Isometry> out;
  const Index planes = l->leading_hyperbolic_planes();
  require(planes >= 1, ErrorKind::NoU2Decomposition, "lattice records no hyperbolic plane");
  for (Index b = 0; b < 2 * planes; ++b)
    for (Index u = 0; u < l->rank(); ++u) {
      if (u / 2 == b / 2 && u < 2 * planes) continue;
      out.push_back(transvection(LatticeVector(l, unit_vector(l->rank(), b)), LatticeVector(l, unit_vector(l->rank(), u))));
    }
  return out;
}

json lattice_info(const Options& o) {
  LatticePtr l = lattice_of(o);
  Signature s = signature(*l);
  json classes = json::array();
  for (const auto& x : all_elements(l)) classes.push_back(to_json(x));
  json orders = json::array();
  for (const auto& d : l->discriminant().orders) orders.push_back(to_json(d));
  return {{"tag", l->tag()},
          {"rank", l->rank()},
          {"det", to_json(l->det())},
          {"signature", {s.positive, s.negative}},
          {"discriminant_orders", orders},
          {"discriminant", classes}};
}

json vector_invariants(const Options& o) {
  LatticePtr l = lattice_of(o);
  LatticeVector v = vector_of(l, o.v, "--v");
  require(!v.coords.isZero(), ErrorKind::ZeroVector, "vector must be nonzero");
  json out = {{"norm", to_json(norm(v))},
              {"div", to_json(divisibility(v))},
              {"primitive", is_primitive(v)},
              {"primitive_part", to_json(primitive_part(v).coords)}};
  LatticeVector p = primitive_part(v);
  out["disc"] = to_json(disc_class(p));
  return out;
}

json orbit_test(const Options& o) {
  LatticePtr l = lattice_of(o);
  LatticeVector v = vector_of(l, o.v, "--v"), w = vector_of(l, o.w, "--w");
  if (o.group == "oplus") {
    bool same = same_orbit_O_plus_og6(v, w);
    json out = {{"group", "O+"}, {"same_orbit", same}};
    if (same) out["witness"] = to_json(*same_orbit_O_plus_og6_witness(v, w));
    return out;
  }
  require(o.group == "sotilde", ErrorKind::InvalidInput, "group must be sotilde or oplus");
  return {{"group", "SOtilde+"},
          {"same_orbit", same_orbit_SOtilde_plus(v, w)},
          {"invariants_v", to_json(orbit_invariants(v))},
          {"invariants_w", to_json(orbit_invariants(w))}};
}

json orbit_transport(const Options& o) {
  LatticePtr l = lattice_of(o);
  LatticeVector v = vector_of(l, o.v, "--v"), w = vector_of(l, o.w, "--w");
  IsometryWord word = transport(v, w);
  Isometry g = evaluate(word);
  return {{"word", to_json(word)},
          {"length", word.size()},
          {"maps_v_to_w", apply(g, v) == w},
          {"membership", to_json(membership(g))}};
}

json orbit_oracle(const Options& o) {
  LatticePtr l = lattice_of(o);
  LatticeVector v = vector_of(l, o.v, "--v");
  auto orbit = orbit_oracle_bfs(unit_transvections(l), v, o.box);
  return {{"box", o.box}, {"size", orbit.size()}, {"orbit", orbit}};
}

json isometry_check(const Options& o) {
  LatticePtr l = lattice_of(o);
  Isometry g = isometry_of(l, o);
  json out = {{"det", to_json(det(g))}, {"membership", to_json(membership(g))}};
  if (is_og6(*l)) out["is_monodromy"] = is_monodromy(g);
  return out;
}

json isometry_decompose(const Options& o) {
  LatticePtr l = lattice_of(o);
  Isometry g = isometry_of(l, o);
  if (is_og6(*l)) {
    IsometryWord word = decompose_monodromy(g);
    return {{"method", "monodromy"}, {"length", word.size()}, {"word", to_json(word)}};
  }
  require(l->gram() == gram_from_tag("U^2"), ErrorKind::WrongLattice,
          "decomposition is available for U^3+(-2)^2 and U^2");
  U2Decomposition d = decompose_SOplus_U2(g, o.depth);
  json out = {{"method", "bfs"}, {"found", d.found}, {"depth_searched", d.depth_searched}};
  if (d.found) out["word"] = to_json(d.word);
  return out;
}

json divisor_classify(const Options& o) {
  LatticePtr l = lattice_of(o);
  return to_json(classify_divisor(vector_of(l, o.v, "--v")));
}

json cone_query(const Options& o) {
  json p = load(o.pic, "--pic");
  LatticePtr ambient = lattice_of(o);
  if (p.is_object() && p.contains("lattice")) {
    std::string tag = p["lattice"].get<std::string>();
    ambient = make_lattice(gram_from_tag(tag), tag);
  }
  json rows = p.is_object() ? p.value("basis", json()) : p;
  IntMatrix basis = io::parse_int_matrix(rows).transpose();
  PicardData pic = make_picard(ambient, basis);
  RatVector x = io::parse_rat_vector(load(o.x, "--x")), k = io::parse_rat_vector(load(o.k, "--k"));
  ChamberReport r;
  if (o.mode == "kahler") r = kahler_chamber_query(pic, x, k);
  else if (o.mode == "bk") r = birational_kahler_closure_query(pic, x, k);
  else fail(ErrorKind::InvalidInput, "mode must be kahler or bk");
  json out = to_json(r, pic);
  out["mode"] = o.mode;
  return out;
}

json lagrangian_check(const Options& o) {
  LatticePtr l = lattice_of(o);
  return to_json(detect_lagrangian(vector_of(l, o.v, "--v")));
}

json scan_iso_div2(const Options& o) { return to_json(isotropic_div2_scan(o.box)); }

// Nested objects as indented "key: value" lines; arrays of scalars inline.
void render_text(const json& j, std::ostream& out, int indent = 0) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto flat = [](const json& v) {
    if (v.is_primitive()) return true;
    if (!v.is_array()) return false;
    return std::all_of(v.begin(), v.end(), [](const json& e) {
      return e.is_primitive() || (e.is_array() && std::all_of(e.begin(), e.end(), [](const json& f) { return f.is_primitive(); }));
    });
  };
  auto scalar = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (flat(it.value())) out << pad << it.key() << ": " << scalar(it.value()) << "\n";
      else {
        out << pad << it.key() << ":\n";
        render_text(it.value(), out, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto& e : j) {
      if (flat(e)) out << pad << "- " << scalar(e) << "\n";
      else {
        out << pad << "-\n";
        render_text(e, out, indent + 2);
      }
    }
  } else {
    out << pad << scalar(j) << "\n";
  }
}

int verify_claims_command(const Options& o, std::ostream& out) {
  require(o.scale == "smoke" || o.scale == "full", ErrorKind::InvalidInput, "scale must be smoke or full");
  auto scale = o.scale == "full" ? verify::Scale::Full : verify::Scale::Smoke;
  auto results = verify::verify_claims(o.seed, scale, o.tamper);
  int failed = 0;
  for (const auto& r : results) failed += !r.pass;
  if (o.json) {
    json claims = json::array();
    for (const auto& r : results) claims.push_back(to_json(r, o.timings));
    json doc = {{"command", "verify-claims"},
                {"seed", o.seed},
                {"scale", o.scale},
                {"tamper", o.tamper},
                {"passed", results.size() - failed},
                {"failed", failed},
                {"claims", claims}};
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      out << (r.pass ? "pass " : "FAIL ") << r.id;
      if (o.timings) out << " (" << r.seconds << " s)";
      out << ": " << r.detail << "\n";
    }
    out << results.size() - failed << " passed, " << failed << " failed\n";
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact lattice computations for U^3+(-2)^2 and friends", "og6lat"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "machine-readable output");
  app.add_option("--seed", o.seed, "seed for randomized checks");
  app.add_option("--scale", o.scale, "smoke or full");
  app.add_option("--box", o.box, "coordinate bound for scans and oracles");
  app.add_option("--depth", o.depth, "search depth for U^2 decompositions");
  app.add_option("--lattice", o.lattice, "lattice tag such as U^3+(-2)^2");
  app.add_option("--gram", o.gram, "Gram matrix as JSON (or a file)");

  auto lattice = app.add_subcommand("lattice", "lattice data")->require_subcommand(1);
  auto lattice_info_cmd = lattice->add_subcommand("info", "rank, determinant, signature, discriminant form");

  auto vec = app.add_subcommand("vector", "vector data")->require_subcommand(1);
  auto vec_inv = vec->add_subcommand("invariants", "norm, divisibility, discriminant class");
  vec_inv->add_option("--v", o.v, "coordinates as JSON")->required();

  auto orbit = app.add_subcommand("orbit", "orbits of primitive vectors")->require_subcommand(1);
  auto orbit_test_cmd = orbit->add_subcommand("test", "same orbit under SOtilde+ or O+");
  orbit_test_cmd->add_option("--v", o.v)->required();
  orbit_test_cmd->add_option("--w", o.w)->required();
  orbit_test_cmd->add_option("--group", o.group, "sotilde or oplus");
  auto orbit_transport_cmd = orbit->add_subcommand("transport", "transvection word mapping v to w");
  orbit_transport_cmd->add_option("--v", o.v)->required();
  orbit_transport_cmd->add_option("--w", o.w)->required();
  auto orbit_oracle_cmd = orbit->add_subcommand("oracle", "breadth-first orbit inside a box");
  orbit_oracle_cmd->add_option("--v", o.v)->required();

  auto iso = app.add_subcommand("isometry", "isometries")->require_subcommand(1);
  auto iso_check = iso->add_subcommand("check", "determinant and subgroup membership");
  auto iso_decompose = iso->add_subcommand("decompose", "generator words");
  for (auto c : {iso_check, iso_decompose}) {
    c->add_option("--matrix", o.matrix, "matrix as JSON (or a file)");
    c->add_option("--word", o.word, "word as JSON (or a file)");
  }

  auto divisor = app.add_subcommand("divisor", "divisor classes")->require_subcommand(1);
  auto divisor_classify_cmd = divisor->add_subcommand("classify", "wall classification");
  divisor_classify_cmd->add_option("--v", o.v)->required();

  auto cone = app.add_subcommand("cone", "chamber queries")->require_subcommand(1);
  auto cone_query_cmd = cone->add_subcommand("query", "Kahler or birational-Kahler chamber of k");
  cone_query_cmd->add_option("--pic", o.pic, "Picard basis as JSON or a file")->required();
  cone_query_cmd->add_option("--x", o.x)->required();
  cone_query_cmd->add_option("--k", o.k)->required();
  cone_query_cmd->add_option("--mode", o.mode, "kahler or bk");

  auto lag = app.add_subcommand("lagrangian", "lagrangian fibrations")->require_subcommand(1);
  auto lag_check = lag->add_subcommand("check", "isotropic class report");
  lag_check->add_option("--v", o.v)->required();

  auto scan = app.add_subcommand("scan", "exhaustive scans")->require_subcommand(1);
  auto scan_iso = scan->add_subcommand("iso-div2", "norms of divisibility-2 vectors mod 8");

  auto claims = app.add_subcommand("verify-claims", "rerun the verification battery");
  claims->add_flag("--tamper", o.tamper, "negate a Gram entry (negative control)");
  claims->add_flag("--timings", o.timings, "report runtimes");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    if (o.json) {
      json doc = {{"error", {{"kind", "InvalidInput"}, {"message", e.what()}}}};
      out << doc.dump(2) << "\n";
    } else {
      err << "error: " << e.what() << "\n";
    }
    return 2;
  }

  std::string name;
  try {
    if (claims->parsed()) return verify_claims_command(o, out);
    json result;
    if (lattice_info_cmd->parsed()) name = "lattice info", result = lattice_info(o);
    else if (vec_inv->parsed()) name = "vector invariants", result = vector_invariants(o);
    else if (orbit_test_cmd->parsed()) name = "orbit test", result = orbit_test(o);
    else if (orbit_transport_cmd->parsed()) name = "orbit transport", result = orbit_transport(o);
    else if (orbit_oracle_cmd->parsed()) name = "orbit oracle", result = orbit_oracle(o);
    else if (iso_check->parsed()) name = "isometry check", result = isometry_check(o);
    else if (iso_decompose->parsed()) name = "isometry decompose", result = isometry_decompose(o);
    else if (divisor_classify_cmd->parsed()) name = "divisor classify", result = divisor_classify(o);
    else if (cone_query_cmd->parsed()) name = "cone query", result = cone_query(o);
    else if (lag_check->parsed()) name = "lagrangian check", result = lagrangian_check(o);
    else if (scan_iso->parsed()) name = "scan iso-div2", result = scan_iso_div2(o);
    if (o.json) out << json{{"command", name}, {"result", result}}.dump(2) << "\n";
    else render_text(result, out);
    return 0;
  } catch (const Error& e) {
    int code = e.internal() ? 1 : 2;
    if (o.json) {
      json doc = {{"command", name}, {"error", {{"kind", to_string(e.kind())}, {"message", e.what()}}}};
      out << doc.dump(2) << "\n";
    } else {
      err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    }
    return code;
  } catch (const std::exception& e) {
    if (o.json) out << json{{"command", name}, {"error", {{"kind", "Internal"}, {"message", e.what()}}}}.dump(2) << "\n";
    else err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace og6::cli
