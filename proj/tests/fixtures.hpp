#pragma once

#include <string>
#include <vector>

#include "wittsig/forms.hpp"
#include "wittsig/io.hpp"
#include "wittsig/knots.hpp"

namespace fixtures {

inline std::string data_path(const std::string& name) {
  return std::string(WITTSIG_TEST_DATA) + "/" + name;
}

inline wittsig::IntegerSymmetricForm gram_file(const std::string& name) {
  return wittsig::form_from_rows(wittsig::io::read_matrix_file(data_path(name), "gram"));
}

inline wittsig::SeifertMatrix seifert_file(const std::string& name) {
  return wittsig::SeifertMatrix::from_rows(
      wittsig::io::read_matrix_file(data_path(name), "seifert"));
}

// 8x8, diagonal -2, every other entry -1.
inline std::vector<std::vector<long>> matrix_a_rows() {
  std::vector<std::vector<long>> rows(8, std::vector<long>(8, -1));
  for (int i = 0; i < 8; ++i) rows[i][i] = -2;
  return rows;
}

inline wittsig::IntegerSymmetricForm matrix_a() { return wittsig::form_from_rows(matrix_a_rows()); }

// -A_8 chain: diagonal -2, +1 on the off-diagonals.
inline wittsig::IntegerSymmetricForm minus_a8() {
  std::vector<std::vector<long>> rows(8, std::vector<long>(8, 0));
  for (int i = 0; i < 8; ++i) {
    rows[i][i] = -2;
    if (i + 1 < 8) rows[i][i + 1] = rows[i + 1][i] = 1;
  }
  return wittsig::form_from_rows(rows);
}

inline wittsig::IntegerSymmetricForm e8() { return gram_file("e8.json"); }

inline wittsig::SeifertMatrix trefoil() {
  return wittsig::SeifertMatrix::from_rows(std::vector<std::vector<long>>{{-1, 1}, {0, -1}});
}

inline wittsig::SeifertMatrix knot_9_1() { return seifert_file("k9_1.json"); }
inline wittsig::SeifertMatrix knot_6_3() {
  return wittsig::SeifertMatrix::from_rows(
      std::vector<std::vector<long>>{{-1, 1, 0, 0}, {0, -1, 0, 0}, {0, 1, 1, 1}, {0, 0, 0, 1}});
}
inline wittsig::SeifertMatrix knot_8_1() {
  return wittsig::SeifertMatrix::from_rows(std::vector<std::vector<long>>{{-1, 1}, {0, 3}});
}

}  // namespace fixtures
