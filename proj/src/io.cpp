#include "finepoly/io.hpp"

#include <fstream>
#include <sstream>

namespace finepoly {

namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::size_t parse_count(std::string_view token, std::size_t line, const char* what) {
  if (token.empty() || token.find_first_not_of("0123456789") != std::string_view::npos || token.size() > 9)
    throw ParseError(line, std::string("bad ") + what + " '" + std::string(token) + "'");
  return static_cast<std::size_t>(std::stoul(std::string(token)));
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& what)
    : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

InputDocument parse_input(std::string_view text) {
  InputDocument doc;
  bool have_header = false;
  std::size_t expected = 0, line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty()) continue;
    if (line.front() == '#') {
      std::string_view body = trim(line.substr(1));
      if (body.starts_with("name:") && doc.name.empty()) doc.name = std::string(trim(body.substr(5)));
      continue;
    }
    auto tok = tokens(line);
    if (!have_header) {
      if (tok.size() != 3 || (tok[0] != "V" && tok[0] != "H"))
        throw ParseError(line_no, "expected header 'V <d> <n>' or 'H <d> <m>'");
      doc.format = tok[0][0];
      doc.dim = parse_count(tok[1], line_no, "dimension");
      expected = parse_count(tok[2], line_no, "row count");
      if (doc.dim == 0) throw ParseError(line_no, "dimension must be positive");
      have_header = true;
      continue;
    }
    if (doc.rows.size() == expected)
      throw ParseError(line_no, "more rows than the " + std::to_string(expected) + " announced");
    const std::size_t arity = doc.format == 'V' ? doc.dim : doc.dim + 1;
    if (tok.size() != arity)
      throw ParseError(line_no, "expected " + std::to_string(arity) + " entries, got " + std::to_string(tok.size()));
    RationalVector row;
    for (auto t : tok) {
      try {
        row.push_back(parse_rational(t));
      } catch (const InputError&) {
        throw ParseError(line_no, "not a rational number: '" + std::string(t) + "'");
      }
    }
    doc.rows.push_back(std::move(row));
  }
  if (!have_header) throw ParseError(line_no + 1, "missing header");
  if (doc.rows.size() != expected)
    throw ParseError(line_no, "expected " + std::to_string(expected) + " rows, got " + std::to_string(doc.rows.size()));
  return doc;
}

InputDocument read_input_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  InputDocument doc = parse_input(ss.str());
  if (doc.name.empty()) doc.name = path.stem().string();
  return doc;
}

Polytope to_polytope(const InputDocument& doc) {
  if (doc.format == 'V') {
    if (doc.rows.empty()) throw InputError("empty vertex list");
    return Polytope::from_vertices(doc.rows);
  }
  std::vector<HalfSpace> hs;
  for (const auto& row : doc.rows) {
    // scale the row so the normal is integral; a positive factor keeps the
    // direction of the inequality
    RationalVector normal(row.begin(), row.end() - 1);
    Integer l = lcm_of_denominators(normal);
    LatticeVector n;
    for (const auto& c : normal) n.push_back(Rational(c * l).get_num());
    Rational offset = row.back() * l;
    if (is_zero(n)) {
      if (offset > 0) throw EmptyPolyhedronError("inequality 0 >= " + to_string(offset) + " is infeasible");
      continue;
    }
    hs.push_back({std::move(n), offset});
  }
  if (hs.empty()) throw UnboundedError("no inequalities");
  return Polytope::from_halfspaces(hs, doc.dim);
}

std::string format_vertices(const std::vector<RationalVector>& vertices, const std::string& name) {
  std::string out;
  if (!name.empty()) out += "# name: " + name + "\n";
  const std::size_t d = vertices.empty() ? 0 : vertices.front().size();
  out += "V " + std::to_string(d) + " " + std::to_string(vertices.size()) + "\n";
  for (const auto& v : vertices) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ' ';
      out += to_string(v[i]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace finepoly
