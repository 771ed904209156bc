#include "bettisplit/io.hpp"

#include "bettisplit/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace bettisplit {

namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

bool looks_like_json(std::string_view text) {
  text = trim(text);
  return !text.empty() && text.front() == '{';
}

std::string strip_comments(std::string_view text) {
  std::string out;
  bool comment = false;
  for (char ch : text) {
    if (ch == '#')
      comment = true;
    else if (ch == '\n')
      comment = false;
    if (!comment)
      out.push_back(ch);
  }
  return out;
}

std::uint64_t parse_number(std::string_view digits, const char* what) {
  std::uint64_t value = 0;
  const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc() || end != digits.data() + digits.size())
    throw MalformedInput(std::string("malformed ") + what + " '" + std::string(digits) + "'");
  return value;
}

// Reads the header `<keyword> <n>` and returns n plus the remaining text.
std::pair<std::size_t, std::string_view> read_header(std::string_view text, std::string_view keyword) {
  text = trim(text);
  if (text.substr(0, keyword.size()) != keyword)
    throw MalformedInput("expected a '" + std::string(keyword) + " <n>' header");
  text.remove_prefix(keyword.size());
  if (text.empty() || !std::isspace(static_cast<unsigned char>(text.front())))
    throw MalformedInput("expected a '" + std::string(keyword) + " <n>' header");
  text = trim(text);
  std::size_t len = 0;
  while (len < text.size() && std::isdigit(static_cast<unsigned char>(text[len])))
    ++len;
  const std::uint64_t n = parse_number(text.substr(0, len), "variable count");
  return {static_cast<std::size_t>(n), text.substr(len)};
}

Monomial parse_monomial(std::string_view item, std::size_t n) {
  std::vector<Exponent> e(n, 0);
  if (item == "1")
    return Monomial(std::move(e));
  std::size_t pos = 0;
  bool any = false;
  auto skip_separators = [&] {
    while (pos < item.size() && (item[pos] == '*' || std::isspace(static_cast<unsigned char>(item[pos]))))
      ++pos;
  };
  auto digits = [&] {
    const std::size_t start = pos;
    while (pos < item.size() && std::isdigit(static_cast<unsigned char>(item[pos])))
      ++pos;
    return item.substr(start, pos - start);
  };
  skip_separators();
  while (pos < item.size()) {
    if (item[pos] != 'x')
      throw MalformedInput("unexpected '" + std::string(1, item[pos]) + "' in monomial '" + std::string(item) + "'");
    ++pos;
    const std::uint64_t k = parse_number(digits(), "variable index");
    if (k < 1 || k > n)
      throw MalformedInput("variable x" + std::to_string(k) + " outside x1..x" + std::to_string(n));
    std::uint64_t exp = 1;
    if (pos < item.size() && item[pos] == '^') {
      ++pos;
      exp = parse_number(digits(), "exponent");
    }
    const std::uint64_t total = std::uint64_t{e[k - 1]} + exp;
    if (total > std::numeric_limits<Exponent>::max())
      throw MalformedInput("exponent of x" + std::to_string(k) + " too large in '" + std::string(item) + "'");
    e[k - 1] = static_cast<Exponent>(total);
    any = true;
    skip_separators();
  }
  if (!any)
    throw MalformedInput("empty monomial");
  return Monomial(std::move(e));
}

IdealDocument finish_ideal(std::size_t n, std::vector<Monomial> gens) {
  IdealDocument doc;
  const std::size_t given = gens.size();
  doc.ideal = MonomialIdeal(n, std::move(gens));
  if (doc.ideal.size() != given)
    doc.warnings.push_back("input was not minimal: " + std::to_string(given) + " generators reduced to " +
                           std::to_string(doc.ideal.size()));
  return doc;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw MalformedInput(std::string("invalid JSON: ") + e.what());
  }
}

std::size_t json_count(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key) || !doc[key].is_number_unsigned())
    throw MalformedInput(std::string("JSON document needs a non-negative integer \"") + key + "\"");
  return doc[key].get<std::size_t>();
}

const json& json_list(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array())
    throw MalformedInput(std::string("JSON document needs an array \"") + key + "\"");
  return doc[key];
}

IdealDocument parse_ideal_json(std::string_view text) {
  const json doc = parse_json(text);
  const std::size_t n = json_count(doc, "n");
  std::vector<Monomial> gens;
  for (const auto& row : json_list(doc, "gens")) {
    if (!row.is_array() || row.size() != n)
      throw MalformedInput("each exponent vector needs exactly " + std::to_string(n) + " entries");
    std::vector<Exponent> e;
    for (const auto& v : row) {
      if (!v.is_number_unsigned() || v.get<std::uint64_t>() > std::numeric_limits<Exponent>::max())
        throw MalformedInput("malformed exponent " + v.dump());
      e.push_back(v.get<Exponent>());
    }
    gens.emplace_back(std::move(e));
  }
  return finish_ideal(n, std::move(gens));
}

FaceMask vertex_list_mask(const std::vector<std::uint64_t>& vertices, std::size_t n) {
  FaceMask mask = 0;
  for (std::uint64_t v : vertices) {
    if (v < 1 || v > n)
      throw MalformedInput("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
    mask |= FaceMask{1} << (v - 1);
  }
  return mask;
}

ComplexDocument finish_complex(std::size_t n, const std::vector<FaceMask>& given) {
  ComplexDocument doc;
  doc.complex = SimplicialComplex(n, given);
  const auto facets = doc.complex.facets();
  std::set<FaceMask> seen;
  std::size_t dropped = 0;
  for (FaceMask f : given) {
    if (std::find(facets.begin(), facets.end(), f) == facets.end() || !seen.insert(f).second) {
      ++dropped;
      continue;
    }
    doc.facet_order.push_back(f);
  }
  if (dropped != 0)
    doc.warnings.push_back(std::to_string(dropped) + " repeated or non-maximal faces dropped from the facet list");
  return doc;
}

std::string json_row(int i, int j, std::uint64_t beta) {
  return "{\"i\":" + std::to_string(i) + ",\"j\":" + std::to_string(j) + ",\"beta\":" + std::to_string(beta) + "}";
}

std::string render_triangle(const BettiTable& table) {
  const int pd = table.projective_dimension();
  int lo = std::numeric_limits<int>::max();
  int hi = std::numeric_limits<int>::min();
  std::vector<std::uint64_t> totals(pd + 1, 0);
  for (const auto& [key, value] : table.entries()) {
    lo = std::min(lo, key.second - key.first);
    hi = std::max(hi, key.second - key.first);
    totals[key.first] += value;
  }
  // first column holds the row labels, the others the homological degrees
  std::vector<std::vector<std::string>> rows;
  rows.push_back({""});
  rows.push_back({"total:"});
  for (int i = 0; i <= pd; ++i) {
    rows[0].push_back(std::to_string(i));
    rows[1].push_back(std::to_string(totals[i]));
  }
  for (int r = lo; r <= hi; ++r) {
    std::vector<std::string> row{std::to_string(r) + ":"};
    for (int i = 0; i <= pd; ++i) {
      const std::uint64_t v = table(i, i + r);
      row.push_back(v == 0 ? "." : std::to_string(v));
    }
    rows.push_back(std::move(row));
  }
  std::vector<std::size_t> width(pd + 2, 0);
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c)
      width[c] = std::max(width[c], row[c].size());
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c != 0)
        line += ' ';
      line += std::string(width[c] - row[c].size(), ' ') + row[c];
    }
    while (!line.empty() && line.back() == ' ')
      line.pop_back();
    out += line + '\n';
  }
  return out;
}

std::string render_resolution(const BettiTable& table) {
  std::string out = "0";
  for (int i = table.projective_dimension(); i >= 0; --i) {
    std::string module;
    for (const auto& [key, value] : table.entries()) {
      if (key.first != i)
        continue;
      if (!module.empty())
        module += " + ";
      module += "R(" + std::to_string(-key.second) + ")";
      if (value != 1)
        module += "^" + std::to_string(value);
    }
    out += " -> " + (module.empty() ? std::string("0") : module);
  }
  return out + " -> I\n";
}

} // namespace

IdealDocument parse_ideal_document(std::string_view text) {
  if (looks_like_json(text))
    return parse_ideal_json(text);
  const std::string clean = strip_comments(text);
  auto [n, body] = read_header(clean, "ring");
  std::vector<Monomial> gens;
  std::size_t start = 0;
  for (std::size_t pos = 0; pos <= body.size(); ++pos) {
    if (pos == body.size() || body[pos] == ',' || body[pos] == '\n') {
      const std::string_view item = trim(body.substr(start, pos - start));
      if (!item.empty())
        gens.push_back(parse_monomial(item, n));
      else if (pos < body.size() && body[pos] == ',')
        throw MalformedInput("empty generator between commas");
      start = pos + 1;
    }
  }
  return finish_ideal(n, std::move(gens));
}

MonomialIdeal parse_ideal(std::string_view text) { return parse_ideal_document(text).ideal; }

std::string render_ideal(const MonomialIdeal& ideal) {
  std::string out = "ring " + std::to_string(ideal.num_vars()) + "\n";
  for (const auto& g : ideal.generators())
    out += g.to_string() + "\n";
  return out;
}

ComplexDocument parse_complex_document(std::string_view text) {
  if (looks_like_json(text)) {
    const json doc = parse_json(text);
    const std::size_t n = json_count(doc, "n");
    if (n > max_vertices)
      throw MalformedInput("at most " + std::to_string(max_vertices) + " vertices are supported");
    std::vector<FaceMask> facets;
    for (const auto& f : json_list(doc, "facets")) {
      if (!f.is_array())
        throw MalformedInput("each facet must be an array of vertices");
      std::vector<std::uint64_t> vertices;
      for (const auto& v : f) {
        if (!v.is_number_unsigned())
          throw MalformedInput("malformed vertex " + v.dump());
        vertices.push_back(v.get<std::uint64_t>());
      }
      facets.push_back(vertex_list_mask(vertices, n));
    }
    return finish_complex(n, facets);
  }

  const std::string clean = strip_comments(text);
  auto [n, body] = read_header(clean, "vertices");
  if (n > max_vertices)
    throw MalformedInput("at most " + std::to_string(max_vertices) + " vertices are supported");
  std::vector<FaceMask> facets;
  std::size_t pos = 0;
  while (pos < body.size()) {
    const char ch = body[pos];
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
      ++pos;
      continue;
    }
    if (ch != '[')
      throw MalformedInput("expected '[' to open a facet, found '" + std::string(1, ch) + "'");
    const std::size_t close = body.find(']', pos);
    if (close == std::string_view::npos)
      throw MalformedInput("unterminated facet");
    std::vector<std::uint64_t> vertices;
    std::string_view inside = body.substr(pos + 1, close - pos - 1);
    std::size_t start = 0;
    for (std::size_t k = 0; k <= inside.size(); ++k) {
      if (k == inside.size() || inside[k] == ',') {
        const std::string_view item = trim(inside.substr(start, k - start));
        if (!item.empty())
          vertices.push_back(parse_number(item, "vertex"));
        else if (k < inside.size() || !trim(inside).empty())
          throw MalformedInput("empty vertex in facet [" + std::string(inside) + "]");
        start = k + 1;
      }
    }
    facets.push_back(vertex_list_mask(vertices, n));
    pos = close + 1;
  }
  return finish_complex(n, facets);
}

SimplicialComplex parse_complex(std::string_view text) { return parse_complex_document(text).complex; }

std::string render_facets(std::span<const FaceMask> facets, std::size_t n_vertices) {
  std::string out = "vertices " + std::to_string(n_vertices) + "\n";
  for (FaceMask f : facets)
    out += face_to_string(f) + "\n";
  return out;
}

std::string render_complex(const SimplicialComplex& complex) {
  return render_facets(complex.facets(), complex.n_vertices());
}

TableFormat parse_table_format(std::string_view name) {
  if (name == "triangle")
    return TableFormat::triangle;
  if (name == "resolution")
    return TableFormat::resolution;
  if (name == "csv")
    return TableFormat::csv;
  if (name == "json")
    return TableFormat::json;
  throw MalformedInput("unknown table format '" + std::string(name) + "'");
}

std::string render_betti_table(const BettiTable& table, TableFormat format) {
  const std::string sentinel(zero_ideal_sentinel);
  switch (format) {
  case TableFormat::triangle:
    return table.empty() ? sentinel + "\n" : render_triangle(table);
  case TableFormat::resolution:
    return table.empty() ? sentinel + "\n" : render_resolution(table);
  case TableFormat::csv: {
    std::string out = "i,j,beta\n";
    if (table.empty())
      return out + "# " + sentinel + "\n";
    for (const auto& [key, value] : table.entries())
      out += std::to_string(key.first) + "," + std::to_string(key.second) + "," + std::to_string(value) + "\n";
    return out;
  }
  case TableFormat::json: {
    std::string out = "{\"field\":\"" + table.field().name() + "\",\"n\":" + std::to_string(table.num_vars()) +
                      ",\"zero_ideal\":" + (table.empty() ? "true" : "false") + ",\"betti\":[";
    bool first = true;
    for (const auto& [key, value] : table.entries()) {
      out += (first ? "" : ",") + json_row(key.first, key.second, value);
      first = false;
    }
    return out + "]}\n";
  }
  }
  return {};
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw MalformedInput("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

} // namespace bettisplit
