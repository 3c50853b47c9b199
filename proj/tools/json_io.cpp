#include "json_io.hpp"

namespace og6::io {
namespace {

json columns(const IntMatrix& basis, const std::vector<IntVector>& ws) {
  json out = json::array();
  for (const auto& w : ws) out.push_back({{"pic", to_json(w)}, {"ambient", to_json(IntVector(basis * w))}});
  return out;
}

}  // namespace

json to_json(const Integer& v) {
  if (auto small = to_int64(v)) return *small;
  return v.str();
}

json to_json(const Rational& v) {
  if (boost::multiprecision::denominator(v) == 1) return to_json(Integer(boost::multiprecision::numerator(v)));
  return to_string(v);
}

json to_json(const IntVector& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

json to_json(const RatVector& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

json to_json(const IntMatrix& m) {
  json out = json::array();
  for (Index i = 0; i < m.rows(); ++i) out.push_back(to_json(IntVector(m.row(i).transpose())));
  return out;
}

json to_json(const DiscriminantElement& x) {
  json coeffs = json::array();
  for (const auto& c : x.coeffs) coeffs.push_back(to_json(c));
  return {{"coeffs", coeffs}, {"q", to_json(q_value(x))}};
}

json to_json(const OrbitInvariants& inv) {
  return {{"norm", to_json(inv.norm)}, {"div", to_json(inv.div)}, {"disc", to_json(inv.disc)}};
}

json to_json(const Membership& m) {
  return {{"in_O_plus", m.in_O_plus},
          {"in_SO", m.in_SO},
          {"in_SO_plus", m.in_SO_plus},
          {"in_Otilde", m.in_Otilde},
          {"in_SOtilde_plus", m.in_SOtilde_plus}};
}

json to_json(const IsometryWord& w) {
  json atoms = json::array();
  for (const Atom& atom : w.atoms) {
    if (auto t = std::get_if<TransvectionAtom>(&atom))
      atoms.push_back({{"type", "transvection"}, {"e", to_json(t->e)}, {"a", to_json(t->a)}});
    else if (auto r = std::get_if<ReflectionAtom>(&atom))
      atoms.push_back({{"type", "reflection"}, {"d", to_json(r->d)}});
    else {
      const auto& o = std::get<OpaqueAtom>(atom);
      atoms.push_back({{"type", "opaque"}, {"label", o.label}, {"matrix", to_json(o.matrix)}});
    }
  }
  return atoms;
}

json to_json(const MukaiVector& x) { return {{"r", to_json(x.r)}, {"c", to_json(x.c)}, {"s", to_json(x.s)}}; }

json to_json(const WallClassification& w) {
  return {{"kind", to_string(w.kind)}, {"norm", to_json(w.norm)}, {"div", to_json(w.div)}, {"witness", w.witness}};
}

json to_json(const ChamberReport& r, const PicardData& pic) {
  return {{"in_chamber", r.in_chamber},
          {"on_boundary", r.on_boundary},
          {"separating_walls", columns(pic.basis, r.separating_walls)},
          {"boundary_walls", columns(pic.basis, r.boundary_walls)}};
}

json to_json(const WallList& w, const PicardData& pic) {
  return {{"separating", columns(pic.basis, w.separating)}, {"through_x", columns(pic.basis, w.through_x)}};
}

json to_json(const LagrangianReport& r) {
  return {{"primitive_part", to_json(r.primitive_part.coords)},
          {"divisibility", to_json(r.divisibility)},
          {"fibration_exists", r.fibration_exists},
          {"base", r.base},
          {"fiber_polarization", r.fiber_polarization}};
}

json to_json(const Div2Scan& s) {
  json residues = json::object();
  for (int r = 0; r < 8; ++r) residues[std::to_string(r)] = s.residues[r];
  return {{"box", s.box},
          {"scanned", s.scanned},
          {"primitive_div2", s.primitive_div2},
          {"isotropic_div2", s.isotropic_div2},
          {"norm_residues_mod8", residues}};
}

json to_json(const verify::ClaimResult& r, bool with_time) {
  json out = {{"id", r.id}, {"status", r.pass ? "pass" : "fail"}, {"detail", r.detail}};
  if (with_time) out["seconds"] = r.seconds;
  return out;
}

Integer parse_integer(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    Rational q;
    try {
      q = parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      fail(ErrorKind::InvalidInput, "not an integer: " + j.dump());
    }
    require(boost::multiprecision::denominator(q) == 1, ErrorKind::InvalidInput, "not an integer: " + j.dump());
    return Integer(boost::multiprecision::numerator(q));
  }
  fail(ErrorKind::InvalidInput, "not an integer: " + j.dump());
}

Rational parse_rational_value(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument&) {
    }
  }
  fail(ErrorKind::InvalidInput, "not a rational number: " + j.dump());
}

IntVector parse_int_vector(const json& j) {
  require(j.is_array() && !j.empty(), ErrorKind::InvalidInput, "expected a nonempty array: " + j.dump());
  IntVector v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Index>(i)) = parse_integer(j[i]);
  return v;
}

RatVector parse_rat_vector(const json& j) {
  require(j.is_array() && !j.empty(), ErrorKind::InvalidInput, "expected a nonempty array: " + j.dump());
  RatVector v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Index>(i)) = parse_rational_value(j[i]);
  return v;
}

IntMatrix parse_int_matrix(const json& j) {
  require(j.is_array() && !j.empty(), ErrorKind::InvalidInput, "expected an array of rows: " + j.dump());
  const Index rows = static_cast<Index>(j.size());
  IntVector first = parse_int_vector(j[0]);
  IntMatrix m(rows, first.size());
  for (Index i = 0; i < rows; ++i) {
    IntVector r = parse_int_vector(j[static_cast<std::size_t>(i)]);
    require(r.size() == first.size(), ErrorKind::DimensionMismatch, "rows of different lengths");
    m.row(i) = r.transpose();
  }
  return m;
}

MukaiVector parse_mukai(const json& j) {
  require(j.is_object() && j.contains("r") && j.contains("c") && j.contains("s"), ErrorKind::InvalidInput,
          "a Mukai vector is {\"r\": int, \"c\": [6 ints], \"s\": int}");
  MukaiVector x{parse_integer(j["r"]), parse_int_vector(j["c"]), parse_integer(j["s"])};
  require(x.c.size() == 6, ErrorKind::DimensionMismatch, "a Mukai vector has six H^2 coordinates");
  return x;
}

IsometryWord parse_word(const LatticePtr& l, const json& j) {
  require(j.is_array(), ErrorKind::InvalidInput, "a word is an array of atoms");
  IsometryWord w{l, {}};
  for (const auto& a : j) {
    require(a.is_object() && a.contains("type"), ErrorKind::InvalidInput, "atom without a type: " + a.dump());
    std::string type = a["type"].get<std::string>();
    if (type == "transvection") w.atoms.push_back(TransvectionAtom{parse_int_vector(a["e"]), parse_int_vector(a["a"])});
    else if (type == "reflection") w.atoms.push_back(ReflectionAtom{parse_int_vector(a["d"])});
    else if (type == "opaque") w.atoms.push_back(OpaqueAtom{parse_int_matrix(a["matrix"]), a.value("label", "")});
    else fail(ErrorKind::InvalidInput, "unknown atom type " + type);
  }
  return w;
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace og6::io
