#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gts {

/// Golden rows for the two classification tables.  These ship embedded so
/// `verify` runs without external files; an equivalent JSON fixture can be
/// supplied on the command line instead.
struct TableRow {
  std::vector<std::int64_t> signature;
  std::vector<std::int64_t> weights;  // descending, as printed
  std::int64_t h;
  std::string relation;  // empty for the n = 3 table
};

inline const std::vector<TableRow>& table2_fixture() {
  static const std::vector<TableRow> rows = {
      {{2, 3, 7, 43}, {903, 602, 258, 42}, 1806, "x^2+y^3+z^7+w^{43}"},
      {{2, 3, 7, 44}, {483, 308, 132, 42}, 966, "x^2+w(y^3+z^7+w^{22})"},
      {{2, 3, 7, 45}, {315, 224, 90, 42}, 672, "y^3+w(x^2+z^7+w^{15})"},
      {{2, 3, 7, 49}, {147, 98, 48, 42}, 336, "z^7+w(x^2+y^3+w^7)"},
      {{2, 3, 8, 25}, {375, 200, 150, 24}, 750, "x^2+z(y^3+z^4+w^{25})"},
      {{2, 3, 8, 26}, {207, 104, 78, 24}, 414, "x^2+zw(y^3+z^4+w^{13})"},
      {{2, 3, 9, 19}, {171, 152, 114, 18}, 456, "y^3+z(x^2+z^3+w^{19})"},
      {{2, 3, 9, 21}, {63, 62, 42, 18}, 186, "y^3+zw(x^2+z^3+w^{7})"},
      {{2, 3, 10, 16}, {159, 80, 48, 30}, 318, "x^2+zw(y^3+z^5+w^8)"},
      {{2, 3, 13, 13}, {78, 39, 26, 12}, 156, "w^{13}+x(x+y^2+z^3)"},
      {{2, 4, 5, 21}, {315, 210, 84, 20}, 630, "x^2+y(y^2+z^5+w^{21})"},
      {{2, 4, 5, 22}, {175, 110, 44, 20}, 350, "x^2+yw(y^2+z^5+w^{11})"},
      {{2, 4, 6, 13}, {143, 78, 52, 12}, 286, "x^2+yz(y^2+z^3+w^{13})"},
      {{2, 4, 6, 14}, {83, 42, 28, 12}, 166, "x^2+yzw(y^2+z^3+w^{7})"},
      {{2, 4, 7, 10}, {119, 70, 28, 20}, 238, "x^2+yz(y^2+z^5+w^{7})"},
      {{2, 5, 5, 11}, {110, 55, 44, 10}, 220, "z^5+x(x+y^2+w^{11})"},
      {{2, 5, 5, 15}, {30, 15, 14, 10}, 70, "z^5+xw(x+y^2+w^{3})"},
      {{2, 5, 6, 8}, {95, 40, 30, 24}, 190, "x^2+yz(y^3+z^4+w^{5})"},
      {{2, 5, 7, 7}, {70, 35, 20, 14}, 140, "z^7+x(x+y^2+w^{5})"},
      {{2, 7, 7, 7}, {14, 14, 7, 6}, 42, "w^7+xy(x+y+z^2)"},
      {{3, 3, 4, 13}, {156, 104, 39, 12}, 312, "y^3+x(x+z^4+w^{13})"},
      {{3, 3, 4, 15}, {60, 44, 15, 12}, 132, "y^3+xw(x+z^4+w^{5})"},
      {{3, 3, 5, 8}, {120, 80, 24, 15}, 240, "y^3+x(x+z^5+w^{8})"},
      {{3, 3, 5, 9}, {45, 35, 15, 9}, 105, "y^3+xz(x+z^3+w^{5})"},
      {{3, 3, 6, 7}, {42, 35, 21, 6}, 105, "y^3+xz(x+z^2+w^{7})"},
      {{3, 3, 6, 9}, {18, 17, 9, 6}, 51, "y^3+xzw(x+z^2+w^{3})"},
      {{3, 4, 4, 8}, {24, 15, 12, 8}, 60, "y^4+xz(x+z^2+w^{3})"},
      {{3, 4, 5, 5}, {60, 24, 20, 15}, 120, "y^5+x(x+z^3+w^{4})"},
      {{3, 5, 5, 5}, {15, 15, 9, 5}, 45, "z^5+xy(x+y+w^3)"},
      {{4, 4, 4, 5}, {20, 20, 15, 4}, 60, "z^4+xy(x+y+w^5)"},
      {{4, 4, 4, 8}, {8, 8, 7, 4}, 28, "z^4+xyw(x+y+w^2)"},
      {{5, 5, 5, 5}, {5, 5, 5, 4}, 20, "w^5+xyz(x+y+z)"},
  };
  return rows;
}

inline const std::vector<TableRow>& table1_fixture() {
  static const std::vector<TableRow> rows = {
      {{2, 3, 7}, {21, 14, 6}, 42, ""},
      {{2, 3, 8}, {15, 8, 6}, 30, ""},
      {{2, 3, 9}, {9, 8, 6}, 24, ""},
      {{2, 4, 5}, {15, 10, 4}, 30, ""},
      {{2, 4, 6}, {11, 6, 4}, 22, ""},
      {{2, 4, 7}, {7, 6, 4}, 18, ""},
      {{2, 5, 5}, {10, 5, 4}, 20, ""},
      {{2, 5, 6}, {6, 5, 4}, 16, ""},
      {{3, 3, 4}, {12, 8, 3}, 24, ""},
      {{3, 3, 5}, {9, 5, 3}, 18, ""},
      {{3, 3, 6}, {6, 5, 3}, 15, ""},
      {{3, 4, 4}, {8, 4, 3}, 16, ""},
      {{3, 4, 5}, {5, 4, 3}, 13, ""},
      {{4, 4, 4}, {4, 4, 3}, 12, ""},
  };
  return rows;
}

}  // namespace gts
