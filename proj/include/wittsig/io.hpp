#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "json.hpp"
#include "wittsig/diophantine.hpp"
#include "wittsig/discriminant.hpp"
#include "wittsig/forms.hpp"
#include "wittsig/knots.hpp"
#include "wittsig/witt.hpp"

namespace wittsig::io {

using Rows = std::vector<std::vector<mpz_class>>;

// {"<key>": [[...], ...]} with integer (or decimal-string) entries.
Rows parse_matrix_json(std::string_view text, std::string_view key);
// One row per line, comma-separated integers; blank lines ignored.
Rows parse_matrix_csv(std::string_view text);
// JSON when the first non-blank character is '{', CSV otherwise.
Rows parse_matrix(std::string_view text, std::string_view key);
Rows read_matrix_file(const std::filesystem::path& path, std::string_view key);

std::string rational_string(const mpq_class& q);
// JSON number when the value fits in 64 bits, decimal string otherwise.
nlohmann::json integer_json(const mpz_class& z);

nlohmann::json to_json(const FormReport& r);
nlohmann::json to_json(const DiagonalRationalForm& d);
nlohmann::json to_json(const WittClassQ& c);
nlohmann::json to_json(const FiniteWittClass& c);
nlohmann::json to_json(const DiscriminantForm& d);
nlohmann::json to_json(const Subgroup& h);
nlohmann::json to_json(const GaussSumValue& g);
nlohmann::json to_json(const MainTheoremReport& r);
nlohmann::json to_json(const KnotReport& r);

inline constexpr std::string_view kCsvHeader = "p,q,r,m,sign,p_plus_q_mod_8";
std::string csv_line(const SolutionRecord& s);

}  // namespace wittsig::io
