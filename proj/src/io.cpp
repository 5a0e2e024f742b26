#include "wittsig/io.hpp"

#include <fstream>
#include <sstream>

#include "wittsig/error.hpp"

namespace wittsig::io {

using nlohmann::json;

namespace {

mpz_class parse_integer(std::string_view token) {
  std::string s(token);
  const auto b = s.find_first_not_of(" \t\r");
  const auto e = s.find_last_not_of(" \t\r");
  if (b == std::string::npos) throw Error(Errc::Malformed, "empty matrix entry");
  s = s.substr(b, e - b + 1);
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  mpz_class z;
  if (s.empty() || z.set_str(s, 10) != 0)
    throw Error(Errc::Malformed, "not an integer: '" + std::string(token) + "'");
  return z;
}

mpz_class entry_from_json(const json& v) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return mpz_class(v.get<unsigned long>());
    return mpz_class(v.get<long>());
  }
  if (v.is_string()) return parse_integer(v.get<std::string>());
  throw Error(Errc::Malformed, "matrix entries must be integers, got " + v.dump());
}

}  // namespace

Rows parse_matrix_json(std::string_view text, std::string_view key) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::Malformed, std::string("invalid JSON: ") + e.what());
  }
  const std::string k(key);
  if (!doc.is_object() || !doc.contains(k) || !doc[k].is_array())
    throw Error(Errc::Malformed, "expected an object with array field \"" + k + "\"");
  Rows rows;
  for (const auto& row : doc[k]) {
    if (!row.is_array()) throw Error(Errc::Malformed, "matrix rows must be arrays");
    auto& out = rows.emplace_back();
    for (const auto& v : row) out.push_back(entry_from_json(v));
  }
  return rows;
}

Rows parse_matrix_csv(std::string_view text) {
  Rows rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto& row = rows.emplace_back();
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(parse_integer(cell));
  }
  return rows;
}

Rows parse_matrix(std::string_view text, std::string_view key) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_matrix_json(text, key);
  return parse_matrix_csv(text);
}

Rows read_matrix_file(const std::filesystem::path& path, std::string_view key) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Io, "cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_matrix(buffer.str(), key);
}

std::string rational_string(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

json integer_json(const mpz_class& z) {
  if (mpz_fits_slong_p(z.get_mpz_t())) return z.get_si();
  return z.get_str();
}

namespace {

json rational_array(const std::vector<mpq_class>& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(rational_string(q));
  return a;
}

json integer_array(const std::vector<mpz_class>& v) {
  json a = json::array();
  for (const auto& z : v) a.push_back(integer_json(z));
  return a;
}

}  // namespace

json to_json(const FormReport& r) {
  return {{"rank", r.rank},
          {"determinant", integer_json(r.determinant)},
          {"signature", r.signature},
          {"is_even", r.is_even}};
}

json to_json(const DiagonalRationalForm& d) {
  json transition = json::array();
  for (std::size_t i = 0; i < d.transition.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < d.transition.cols(); ++j)
      row.push_back(rational_string(d.transition(i, j)));
    transition.push_back(std::move(row));
  }
  return {{"entries", rational_array(d.entries)},
          {"transition", std::move(transition)},
          {"signature", sign_count(d.entries)}};
}

json to_json(const WittClassQ& c) { return integer_array(c.entries()); }

json to_json(const FiniteWittClass& c) {
  return {{"prime", integer_json(c.prime())},
          {"rank_parity", c.rank_parity()},
          {"disc_square", c.disc_is_square()},
          {"zero", c.zero()}};
}

json to_json(const DiscriminantForm& d) {
  json linking = json::array();
  for (std::size_t i = 0; i < d.rank(); ++i)
    for (std::size_t j = 0; j < d.rank(); ++j)
      linking.push_back({integer_json(d.linking(i, j).get_num()),
                         integer_json(d.linking(i, j).get_den())});
  return {{"orders", integer_array(d.orders)},
          {"linking", std::move(linking)},
          {"quad_diag", rational_array(d.quad_diag)}};
}

json to_json(const Subgroup& h) {
  json gens = json::array();
  for (const auto& g : h.generators) gens.push_back(integer_array(g));
  return {{"order", integer_json(h.order)}, {"generators", std::move(gens)}};
}

json to_json(const GaussSumValue& g) {
  json terms = json::array();
  for (const auto& [r, c] : g.terms) terms.push_back({r, c});
  return {{"denominator", g.denominator}, {"terms", std::move(terms)}};
}

json to_json(const MainTheoremReport& r) {
  return {{"is_even", r.is_even},
          {"det", integer_json(r.det)},
          {"det_odd", r.det_odd},
          {"boundary_zero", r.boundary_zero},
          {"metabolizer_searched", r.metabolizer_searched},
          {"metabolizer", r.metabolizer ? to_json(*r.metabolizer) : json(nullptr)},
          {"signature", r.signature},
          {"signature_mod_8", r.signature_mod_8},
          {"theorem_applies", r.theorem_applies},
          {"conclusion_holds", r.conclusion_holds},
          {"vanishing_disagreement", r.vanishing_disagreement}};
}

json to_json(const KnotReport& r) {
  return {{"signature", r.signature},
          {"determinant", integer_json(r.determinant)},
          {"murasugi_class", r.murasugi_class},
          {"murasugi_holds", r.murasugi_holds},
          {"witt_class", to_json(r.witt_class)},
          {"boundary_zero", r.boundary_zero},
          {"signature_mod_8", r.signature_mod_8 ? json(*r.signature_mod_8) : json(nullptr)}};
}

std::string csv_line(const SolutionRecord& s) {
  std::ostringstream out;
  out << s.p << ',' << s.q << ',' << s.r << ',' << s.m << ',' << s.sign << ','
      << s.p_plus_q_mod_8;
  return out.str();
}

}  // namespace wittsig::io
