#include "germsig/json_io.hpp"

#include "germsig/error.hpp"

namespace germsig {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error("ParseError", what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

Json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  if (!j.is_string()) fail("rational must be a string \"p/q\" or an integer");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::exception& e) {
    fail("bad rational '" + j.get<std::string>() + "': " + e.what());
  }
}

Json integer_to_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) != 0) fail("bad integer '" + j.get<std::string>() + "'");
    return z;
  }
  fail("expected an integer");
}

Json angle_to_json(const Angle& a) { return Json{{"num", a.num()}, {"den", a.den()}}; }

Angle angle_from_json(const Json& j) {
  const Json& num = field(j, "num");
  const Json& den = field(j, "den");
  if (!num.is_number_integer() || !den.is_number_integer()) fail("angle num/den must be integers");
  if (den.get<long long>() <= 0) fail("angle denominator must be positive");
  return Angle(num.get<std::int64_t>(), den.get<std::int64_t>());
}

Json algreal_to_json(const AlgReal& x) {
  Json coords = Json::array();
  for (const auto& c : x.coords()) coords.push_back(to_string(c));
  return Json{{"conductor", x.conductor()}, {"coords", coords}};
}

Json matrix_to_json(const SpMatrix& a) {
  Json rows = Json::array();
  const IntMatrix& m = a.matrix();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(integer_to_json(m(r, c)));
    rows.push_back(row);
  }
  return Json{{"g", a.genus()}, {"rows", rows}};
}

SpMatrix matrix_from_json(const Json& j) {
  const Json& rows = field(j, "rows");
  if (!rows.is_array() || rows.empty()) fail("rows must be a nonempty array");
  const std::size_t n = rows.size();
  IntMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!rows[r].is_array() || rows[r].size() != n) fail("matrix must be square");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = integer_from_json(rows[r][c]);
  }
  if (j.contains("g")) {
    const Json& g = j.at("g");
    if (!g.is_number_integer() || 2 * g.get<long long>() != static_cast<long long>(n))
      fail("g does not match the matrix size");
  }
  return check_symplectic(m);
}

namespace {

Json surfaces_to_json(const std::vector<FixedSurface>& ss) {
  Json out = Json::array();
  for (const auto& s : ss)
    out.push_back(Json{{"psi", angle_to_json(s.psi)}, {"e", rational_to_json(s.euler)}});
  return out;
}

std::vector<FixedSurface> surfaces_from_json(const Json& j) {
  if (!j.is_array()) fail("surfaces must be an array");
  std::vector<FixedSurface> out;
  for (const auto& s : j)
    out.push_back(FixedSurface{angle_from_json(field(s, "psi")), rational_from_json(field(s, "e"))});
  return out;
}

Json points_to_json(const std::vector<FixedPoint>& ps) {
  Json out = Json::array();
  for (const auto& p : ps)
    out.push_back(Json{{"phi", angle_to_json(p.phi)}, {"phiPrime", angle_to_json(p.phi_prime)}});
  return out;
}

std::vector<FixedPoint> points_from_json(const Json& j) {
  if (!j.is_array()) fail("points must be an array");
  std::vector<FixedPoint> out;
  for (const auto& p : j)
    out.push_back(FixedPoint{angle_from_json(field(p, "phi")), angle_from_json(field(p, "phiPrime"))});
  return out;
}

int order_from_json(const Json& j) {
  const Json& o = field(j, "order");
  if (!o.is_number_integer() || o.get<long long>() < 1) fail("order must be a positive integer");
  return o.get<int>();
}

}  // namespace

Json fixed_point_data_to_json(const FixedPointData& fp) {
  return Json{{"surfaces", surfaces_to_json(fp.surfaces)}, {"points", points_to_json(fp.points)}};
}

FixedPointData fixed_point_data_from_json(const Json& j) {
  if (!j.is_object()) fail("fixed point data must be an object");
  FixedPointData fp;
  if (j.contains("surfaces")) fp.surfaces = surfaces_from_json(j.at("surfaces"));
  if (j.contains("points")) fp.points = points_from_json(j.at("points"));
  return fp;
}

Json group_action_to_json(const GroupActionData& gd) {
  Json per = Json::object();
  for (const auto& [label, fp] : gd.per_element) per[label] = fixed_point_data_to_json(fp);
  return Json{{"order", gd.order},
              {"signQuotient", integer_to_json(gd.sign_quotient)},
              {"perElement", per}};
}

GroupActionData group_action_from_json(const Json& j) {
  GroupActionData gd;
  gd.order = order_from_json(j);
  gd.sign_quotient = integer_from_json(field(j, "signQuotient"));
  const Json& per = j.contains("perElement") ? j.at("perElement") : Json::object();
  if (!per.is_object()) fail("perElement must be an object");
  for (const auto& [label, fp] : per.items()) gd.per_element[label] = fixed_point_data_from_json(fp);
  return gd;
}

Json germ_to_json(const GermData& g) {
  Json horizontal = Json::array();
  for (const auto& [key, chi] : g.horizontal)
    horizontal.push_back(
        Json{{"h", key.first}, {"psi", angle_to_json(key.second)}, {"chi", rational_to_json(chi)}});
  Json vp = Json::object(), vs = Json::object();
  for (const auto& [h, pts] : g.vertical_points) vp[h] = points_to_json(pts);
  for (const auto& [h, ss] : g.vertical_surfaces) vs[h] = surfaces_to_json(ss);
  return Json{{"order", g.order},
              {"signQuotient", integer_to_json(g.sign_quotient)},
              {"horizontal", horizontal},
              {"verticalPoints", vp},
              {"verticalSurfaces", vs}};
}

GermData germ_from_json(const Json& j) {
  GermData g;
  g.order = order_from_json(j);
  g.sign_quotient = integer_from_json(field(j, "signQuotient"));
  if (j.contains("horizontal")) {
    const Json& hz = j.at("horizontal");
    if (!hz.is_array()) fail("horizontal must be an array");
    for (const auto& e : hz) {
      const Json& h = field(e, "h");
      const std::string label = h.is_string() ? h.get<std::string>() : h.dump();
      const Angle psi = angle_from_json(field(e, "psi"));
      if (!g.horizontal.emplace(std::make_pair(label, psi), rational_from_json(field(e, "chi"))).second)
        fail("duplicate horizontal entry for h=" + label);
    }
  }
  if (j.contains("verticalPoints")) {
    if (!j.at("verticalPoints").is_object()) fail("verticalPoints must be an object");
    for (const auto& [h, pts] : j.at("verticalPoints").items()) g.vertical_points[h] = points_from_json(pts);
  }
  if (j.contains("verticalSurfaces")) {
    if (!j.at("verticalSurfaces").is_object()) fail("verticalSurfaces must be an object");
    for (const auto& [h, ss] : j.at("verticalSurfaces").items())
      g.vertical_surfaces[h] = surfaces_from_json(ss);
  }
  return g;
}

}  // namespace germsig
