#include "finepoly/report.hpp"

#include <algorithm>
#include <sstream>

namespace finepoly {

namespace {

Json rational_array(const RationalVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

Json lattice_array(const LatticeVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

template <class Vec, class F>
Json list(const std::vector<Vec>& vs, F f) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(f(v));
  return a;
}

Json rational_list(const std::vector<RationalVector>& vs) { return list(vs, rational_array); }
Json lattice_list(const std::vector<LatticeVector>& vs) { return list(vs, lattice_array); }

// Reading back.

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("report: missing key '") + key + "'");
  return j.at(key);
}

Rational read_rational(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InputError("report: expected a rational written as a string");
}

Integer read_integer(const Json& j) {
  Rational q = read_rational(j);
  if (q.get_den() != 1) throw InputError("report: expected an integer");
  return q.get_num();
}

RationalVector read_rational_array(const Json& j) {
  if (!j.is_array()) throw InputError("report: expected an array");
  RationalVector v;
  for (const auto& x : j) v.push_back(read_rational(x));
  return v;
}

LatticeVector read_lattice_array(const Json& j) {
  if (!j.is_array()) throw InputError("report: expected an array");
  LatticeVector v;
  for (const auto& x : j) v.push_back(read_integer(x));
  return v;
}

std::vector<RationalVector> read_rational_list(const Json& j) {
  if (!j.is_array()) throw InputError("report: expected an array");
  std::vector<RationalVector> out;
  for (const auto& x : j) out.push_back(read_rational_array(x));
  return out;
}

std::vector<LatticeVector> read_lattice_list(const Json& j) {
  if (!j.is_array()) throw InputError("report: expected an array");
  std::vector<LatticeVector> out;
  for (const auto& x : j) out.push_back(read_lattice_array(x));
  return out;
}

bool read_bool(const Json& j) {
  if (!j.is_boolean()) throw InputError("report: expected a boolean");
  return j.get<bool>();
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

template <class Vec>
std::string points(const std::vector<Vec>& vs) {
  if (vs.empty()) return "-";
  std::vector<std::string> parts;
  for (const auto& v : vs) parts.push_back(to_string(v));
  return join(parts, " ");
}

}  // namespace

Json report_to_json(const AnalysisReport& r) {
  Json j;
  j["name"] = r.name;
  j["dim"] = r.dim;

  Json fine;
  fine["dim"] = r.fine_dim;
  fine["vertices"] = rational_list(r.fine_vertices);
  j["fine_interior"] = fine;
  j["support"] = lattice_list(r.support);

  if (r.fine_dim >= 0) {
    Json hull;
    hull["vertices"] = rational_list(r.hull_vertices);
    hull["extra_vertices"] = rational_list(r.hull_extra_vertices);
    j["canonical_hull"] = hull;
  } else {
    j["canonical_hull"] = nullptr;
  }

  Json flags;
  flags["canonically_closed"] = r.flags.canonically_closed;
  flags["integrally_closed"] = r.flags.integrally_closed;
  flags["reflexive"] = r.flags.reflexive;
  flags["almost_reflexive"] = r.flags.almost_reflexive;
  flags["pseudoreflexive"] = r.flags.pseudoreflexive;
  j["flags"] = flags;

  if (r.kodaira)
    j["kodaira"] = *r.kodaira;
  else
    j["kodaira"] = "-inf";
  j["canonical_degree"] = r.canonical_degree ? Json(to_string(*r.canonical_degree)) : Json(nullptr);

  if (r.surface) {
    Json s;
    s["c1sq"] = to_string(r.surface->c1sq);
    s["chi"] = to_string(r.surface->chi);
    s["c2"] = to_string(r.surface->c2);
    j["surface"] = s;
  } else {
    j["surface"] = nullptr;
  }

  if (r.fibration) {
    Json f;
    f["nf_basis"] = lattice_list(r.fibration->nf_basis);
    f["pf_vertices"] = rational_list(r.fibration->pf_vertices);
    f["phif_vertices"] = rational_list(r.fibration->phif_vertices);
    Json checks;
    checks["fine_image"] = r.fibration->check_a;
    checks["support"] = r.fibration->check_b;
    checks["canonical_fano"] = r.fibration->check_c;
    f["checks"] = checks;
    j["fibration"] = f;
  } else {
    j["fibration"] = nullptr;
  }

  j["codim2_ok"] = r.codim2_ok ? Json(*r.codim2_ok) : Json(nullptr);
  j["lambda0"] = to_string(r.lambda0);
  if (r.lambda_closed_interval) {
    j["lambda_closed_interval"] = Json::array({to_string(r.lambda_closed_interval->first),
                                               to_string(r.lambda_closed_interval->second)});
  } else {
    j["lambda_closed_interval"] = nullptr;
  }

  Json input;
  input["hash"] = r.input_hash;
  input["vertices"] = rational_list(r.input_vertices);
  j["input"] = input;
  return j;
}

AnalysisReport report_from_json(const Json& j) {
  AnalysisReport r;
  const Json& name = field(j, "name");
  if (!name.is_string()) throw InputError("report: name must be a string");
  r.name = name.get<std::string>();
  const Json& dim = field(j, "dim");
  if (!dim.is_number_unsigned()) throw InputError("report: dim must be a positive integer");
  r.dim = dim.get<std::size_t>();

  const Json& fine = field(j, "fine_interior");
  r.fine_dim = field(fine, "dim").get<int>();
  r.fine_vertices = read_rational_list(field(fine, "vertices"));
  r.support = read_lattice_list(field(j, "support"));

  const Json& hull = field(j, "canonical_hull");
  if (!hull.is_null()) {
    r.hull_vertices = read_rational_list(field(hull, "vertices"));
    r.hull_extra_vertices = read_rational_list(field(hull, "extra_vertices"));
  }

  const Json& flags = field(j, "flags");
  r.flags.canonically_closed = read_bool(field(flags, "canonically_closed"));
  r.flags.integrally_closed = read_bool(field(flags, "integrally_closed"));
  r.flags.reflexive = read_bool(field(flags, "reflexive"));
  r.flags.almost_reflexive = read_bool(field(flags, "almost_reflexive"));
  r.flags.pseudoreflexive = read_bool(field(flags, "pseudoreflexive"));
  r.flags.no_fine_interior = r.fine_dim < 0;

  const Json& kod = field(j, "kodaira");
  if (kod.is_number_integer())
    r.kodaira = kod.get<int>();
  else if (!(kod.is_string() && kod.get<std::string>() == "-inf"))
    throw InputError("report: kodaira must be an integer or \"-inf\"");

  const Json& deg = field(j, "canonical_degree");
  if (!deg.is_null()) r.canonical_degree = read_rational(deg);

  const Json& surface = field(j, "surface");
  if (!surface.is_null())
    r.surface = SurfaceInvariants{read_rational(field(surface, "c1sq")), read_integer(field(surface, "chi")),
                                  read_rational(field(surface, "c2"))};

  const Json& fib = field(j, "fibration");
  if (!fib.is_null()) {
    AnalysisReport::Fibration f;
    f.nf_basis = read_lattice_list(field(fib, "nf_basis"));
    f.pf_vertices = read_rational_list(field(fib, "pf_vertices"));
    f.phif_vertices = read_rational_list(field(fib, "phif_vertices"));
    const Json& checks = field(fib, "checks");
    f.check_a = read_bool(field(checks, "fine_image"));
    f.check_b = read_bool(field(checks, "support"));
    f.check_c = read_bool(field(checks, "canonical_fano"));
    r.fibration = std::move(f);
  }

  const Json& codim2 = field(j, "codim2_ok");
  if (!codim2.is_null()) r.codim2_ok = read_bool(codim2);
  r.lambda0 = read_rational(field(j, "lambda0"));
  const Json& interval = field(j, "lambda_closed_interval");
  if (!interval.is_null()) {
    if (!interval.is_array() || interval.size() != 2) throw InputError("report: lambda_closed_interval needs two ends");
    r.lambda_closed_interval = std::make_pair(read_rational(interval[0]), read_rational(interval[1]));
  }

  const Json& input = field(j, "input");
  r.input_hash = field(input, "hash").get<std::string>();
  r.input_vertices = read_rational_list(field(input, "vertices"));
  return r;
}

std::string report_to_text(const AnalysisReport& r) {
  std::vector<std::pair<std::string, std::string>> rows;
  auto yes = [](bool b) { return std::string(b ? "yes" : "no"); };
  rows.emplace_back("name", r.name.empty() ? "-" : r.name);
  rows.emplace_back("input hash", r.input_hash);
  rows.emplace_back("dimension", std::to_string(r.dim));
  rows.emplace_back("vertices", points(r.input_vertices));
  rows.emplace_back("dim F(P)", r.fine_dim < 0 ? "empty" : std::to_string(r.fine_dim));
  rows.emplace_back("F(P) vertices", points(r.fine_vertices));
  rows.emplace_back("S_F(P)", points(r.support));
  if (r.fine_dim >= 0) {
    rows.emplace_back("C(P) vertices", points(r.hull_vertices));
    rows.emplace_back("C(P) new vertices", points(r.hull_extra_vertices));
  }
  rows.emplace_back("canonically closed", yes(r.flags.canonically_closed));
  rows.emplace_back("integrally closed", yes(r.flags.integrally_closed));
  rows.emplace_back("reflexive", yes(r.flags.reflexive));
  rows.emplace_back("almost reflexive", yes(r.flags.almost_reflexive));
  rows.emplace_back("pseudoreflexive", yes(r.flags.pseudoreflexive));
  rows.emplace_back("kodaira dimension", r.kodaira ? std::to_string(*r.kodaira) : "-inf");
  if (r.canonical_degree) rows.emplace_back("K^{d-1}", to_string(*r.canonical_degree));
  if (r.surface) {
    rows.emplace_back("c1^2", to_string(r.surface->c1sq));
    rows.emplace_back("chi(O)", to_string(r.surface->chi));
    rows.emplace_back("c2", to_string(r.surface->c2));
  }
  if (r.fibration) {
    rows.emplace_back("N^F basis", points(r.fibration->nf_basis));
    rows.emplace_back("P^F vertices", points(r.fibration->pf_vertices));
    rows.emplace_back("Phi^F vertices", points(r.fibration->phif_vertices));
    rows.emplace_back("fibration checks", yes(r.fibration->check_a) + " " + yes(r.fibration->check_b) + " " +
                                              yes(r.fibration->check_c));
  }
  if (r.codim2_ok) rows.emplace_back("codim-2 certificate", yes(*r.codim2_ok));
  rows.emplace_back("lambda0", to_string(r.lambda0));
  if (r.lambda_closed_interval)
    rows.emplace_back("lambda closed in",
                      "[" + to_string(r.lambda_closed_interval->first) + ", " + to_string(r.lambda_closed_interval->second) + "]");

  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  std::ostringstream out;
  for (const auto& [k, v] : rows) out << k << std::string(width - k.size() + 2, ' ') << v << '\n';
  return out.str();
}

}  // namespace finepoly
