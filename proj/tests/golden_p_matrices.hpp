#pragma once

// P matrices as printed in the reference tables, row by row. A few rows lost
// entries in the source text (first row of k=17 and k=19, first and last row
// of k=23); they are kept verbatim and compared as prefixes.

#include <vector>

namespace zhegalkin::golden {

struct PrintedMatrix {
  unsigned k;
  std::vector<std::vector<unsigned>> rows;
};

inline const std::vector<PrintedMatrix>& printed_p_matrices() {
  static const std::vector<PrintedMatrix> kMatrices = {
      {2,
       {
           {1, 0},
           {1, 1},
       }},
      {3,
       {
           {1, 0, 0},
           {0, 2, 1},
           {2, 2, 2},
       }},
      {5,
       {
           {1, 0, 0, 0, 0},
           {0, 4, 2, 3, 1},
           {0, 4, 1, 1, 4},
           {0, 4, 3, 2, 1},
           {4, 4, 4, 4, 4},
       }},
      {7,
       {
           {1, 0, 0, 0, 0, 0, 0},
           {0, 6, 3, 2, 5, 4, 1},
           {0, 6, 5, 3, 3, 5, 6},
           {0, 6, 6, 1, 6, 1, 1},
           {0, 6, 3, 5, 5, 3, 6},
           {0, 6, 5, 4, 3, 2, 1},
           {6, 6, 6, 6, 6, 6, 6},
       }},
      {11,
       {
           {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
           {0, 10, 5, 7, 8, 2, 9, 3, 4, 6, 1},
           {0, 10, 8, 6, 2, 7, 7, 2, 6, 8, 10},
           {0, 10, 4, 2, 6, 8, 3, 5, 9, 7, 1},
           {0, 10, 2, 8, 7, 6, 6, 7, 8, 2, 10},
           {0, 10, 1, 10, 10, 10, 1, 1, 1, 10, 1},
           {0, 10, 6, 7, 8, 2, 2, 8, 7, 6, 10},
           {0, 10, 3, 6, 2, 7, 4, 9, 5, 8, 1},
           {0, 10, 7, 2, 6, 8, 8, 6, 2, 7, 10},
           {0, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1},
           {10, 10, 10, 10, 10, 10, 10, 10, 10, 10, 10},
       }},
      {13,
       {
           {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
           {0, 12, 6, 4, 3, 5, 2, 11, 8, 10, 9, 7, 1},
           {0, 12, 3, 10, 4, 1, 9, 9, 1, 4, 10, 3, 12},
           {0, 12, 8, 12, 1, 8, 8, 5, 5, 12, 1, 5, 1},
           {0, 12, 4, 4, 10, 12, 10, 10, 12, 10, 4, 4, 12},
           {0, 12, 2, 10, 9, 5, 6, 7, 8, 4, 3, 11, 1},
           {0, 12, 1, 12, 12, 1, 1, 1, 1, 12, 12, 1, 12},
           {0, 12, 7, 4, 3, 8, 11, 2, 5, 10, 9, 6, 1},
           {0, 12, 10, 10, 4, 12, 4, 4, 12, 4, 10, 10, 12},
           {0, 12, 5, 12, 1, 5, 5, 8, 8, 12, 1, 8, 1},
           {0, 12, 9, 4, 10, 1, 3, 3, 1, 10, 4, 9, 12},
           {0, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1},
           {12, 12, 12, 12, 12, 12, 12, 12, 12, 12, 12, 12, 12},
       }},
      {17,
       {
           {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
           {0, 16, 8, 11, 4, 10, 14, 12, 2, 15, 5, 3, 7, 13, 6, 9, 1},
           {0, 16, 4, 15, 1, 2, 8, 9, 13, 13, 9, 8, 2, 1, 15, 4, 16},
           {0, 16, 2, 5, 13, 14, 7, 11, 8, 9, 6, 10, 3, 4, 12, 15, 1},
           {0, 16, 1, 13, 16, 13, 4, 4, 1, 1, 4, 4, 13, 16, 13, 1, 16},
           {0, 16, 9, 10, 4, 6, 12, 3, 15, 2, 14, 5, 11, 13, 7, 8, 1},
           {0, 16, 13, 9, 1, 8, 2, 15, 4, 4, 15, 2, 8, 1, 9, 13, 16},
           {0, 16, 15, 3, 13, 5, 6, 7, 9, 8, 10, 11, 12, 4, 14, 2, 1},
           {0, 16, 16, 1, 16, 1, 1, 1, 16, 16, 1, 1, 1, 16, 1, 16, 16},
           {0, 16, 8, 6, 4, 7, 3, 5, 2, 15, 12, 14, 10, 13, 11, 9, 1},
           {0, 16, 4, 2, 1, 15, 9, 8, 13, 13, 8, 9, 15, 1, 2, 4, 16},
           {0, 16, 2, 12, 13, 3, 10, 6, 8, 9, 11, 7, 14, 4, 5, 15, 1},
           {0, 16, 1, 4, 16, 4, 13, 13, 1, 1, 13, 13, 4, 16, 4, 1, 16},
           {0, 16, 9, 7, 4, 11, 5, 14, 15, 2, 3, 12, 6, 13, 10, 8, 1},
           {0, 16, 13, 8, 1, 9, 15, 2, 4, 4, 2, 15, 9, 1, 8, 13, 16},
           {0, 16, 15, 14, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1},
           {16, 16, 16, 16, 16, 16, 16, 16, 16, 16, 16, 16, 16, 16, 16, 16, 16},
       }},
      {19,
       {
           {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
           {0, 18, 9, 6, 14, 15, 3, 8, 7, 2, 17, 12, 11, 16, 4, 5, 13, 10, 1},
           {0, 18, 14, 2, 13, 3, 10, 12, 8, 15, 15, 8, 12, 10, 3, 13, 2, 14, 18},
           {0, 18, 7, 7, 8, 12, 8, 18, 1, 8, 11, 18, 1, 11, 7, 11, 12, 12, 1},
           {0, 18, 13, 15, 2, 10, 14, 8, 12, 3, 3, 12, 8, 14, 10, 2, 15, 13, 18},
           {0, 18, 16, 5, 10, 2, 15, 12, 11, 13, 6, 8, 7, 4, 17, 9, 14, 3, 1},
           {0, 18, 8, 8, 12, 8, 12, 18, 18, 12, 12, 18, 18, 12, 8, 12, 8, 8, 18},
           {0, 18, 4, 9, 3, 13, 2, 8, 7, 14, 5, 12, 11, 17, 6, 16, 10, 15, 1},
           {0, 18, 2, 3, 15, 14, 13, 12, 8, 10, 10, 8, 12, 13, 14, 15, 3, 2, 18},
           {0, 18, 1, 1, 18, 18, 18, 18, 1, 18, 1, 18, 1, 1, 1, 1, 18, 18, 1},
           {0, 18, 10, 13, 14, 15, 3, 8, 12, 2, 2, 12, 8, 3, 15, 14, 13, 10, 18},
           {0, 18, 5, 17, 13, 3, 10, 12, 11, 15, 4, 8, 7, 9, 16, 6, 2, 14, 1},
           {0, 18, 12, 12, 8, 12, 8, 18, 18, 8, 8, 18, 18, 8, 12, 8, 12, 12, 18},
           {0, 18, 6, 4, 2, 10, 14, 8, 7, 3, 16, 12, 11, 5, 9, 17, 15, 13, 1},
           {0, 18, 3, 14, 10, 2, 15, 12, 8, 13, 13, 8, 12, 15, 2, 10, 14, 3, 18},
           {0, 18, 11, 11, 12, 8, 12, 18, 1, 12, 7, 18, 1, 7, 11, 7, 8, 8, 1},
           {0, 18, 15, 10, 3, 13, 2, 8, 12, 14, 14, 12, 8, 2, 13, 3, 10, 15, 18},
           {0, 18, 17, 16, 15, 14, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1},
           {18, 18, 18, 18, 18, 18, 18, 18, 18, 18, 18, 18, 18, 18, 18, 18, 18, 18, 18},
       }},
      {23,
       {
           {1, 0},
           {0, 22, 11, 15, 17, 9, 19, 13, 20, 5, 16, 2, 21, 7, 18, 3, 10, 4, 14, 6, 8, 12, 1},
           {0, 22, 17, 5, 10, 11, 7, 15, 14, 21, 20, 19, 19, 20, 21, 14, 15, 7, 11, 10, 5, 17, 22},
           {0, 22, 20, 17, 14, 16, 5, 12, 19, 10, 2, 8, 15, 21, 13, 4, 11, 18, 7, 9, 6, 3, 1},
           {0, 22, 10, 21, 15, 17, 20, 5, 11, 19, 14, 7, 7, 14, 19, 11, 5, 20, 17, 15, 21, 10, 22},
           {0, 22, 5, 7, 21, 8, 11, 4, 10, 20, 6, 9, 14, 17, 3, 13, 19, 12, 15, 2, 16, 18, 1},
           {0, 22, 14, 10, 11, 20, 21, 17, 7, 15, 19, 5, 5, 19, 15, 7, 17, 21, 20, 11, 10, 14, 22},
           {0, 22, 7, 11, 20, 4, 15, 9, 21, 17, 18, 13, 10, 5, 6, 2, 14, 8, 19, 3, 12, 16, 1},
           {0, 22, 15, 19, 5, 10, 14, 21, 17, 7, 11, 20, 20, 11, 7, 17, 21, 14, 10, 5, 19, 15, 22},
           {0, 22, 19, 14, 7, 2, 10, 3, 5, 11, 8, 6, 17, 15, 12, 18, 20, 13, 21, 16, 9, 4, 1},
           {0, 22, 21, 20, 19, 5, 17, 7, 15, 14, 10, 11, 11, 10, 14, 15, 7, 17, 5, 19, 20, 21, 22},
           {0, 22, 22, 22, 22, 1, 22, 1, 22, 22, 1, 1, 22, 22, 1, 1, 22, 1, 22, 1, 1, 1, 1},
           {0, 22, 11, 15, 17, 14, 19, 10, 20, 5, 7, 21, 21, 7, 5, 20, 10, 19, 14, 17, 15, 11, 22},
           {0, 22, 17, 5, 10, 12, 7, 8, 14, 21, 3, 4, 19, 20, 2, 9, 15, 16, 11, 13, 18, 6, 1},
           {0, 22, 20, 17, 14, 7, 5, 11, 19, 10, 21, 15, 15, 21, 10, 19, 11, 5, 7, 14, 17, 20, 22},
           {0, 22, 10, 21, 15, 6, 20, 18, 11, 19, 9, 16, 7, 14, 4, 12, 5, 3, 17, 8, 2, 13, 1},
           {0, 22, 5, 7, 21, 15, 11, 19, 10, 20, 17, 14, 14, 17, 20, 10, 19, 11, 15, 21, 7, 5, 22},
           {0, 22, 14, 10, 11, 3, 21, 6, 7, 15, 4, 18, 5, 19, 8, 16, 17, 2, 20, 12, 13, 9, 1},
           {0, 22, 7, 11, 20, 19, 15, 14, 21, 17, 5, 10, 10, 5, 17, 21, 14, 15, 19, 20, 11, 7, 22},
           {0, 22, 15, 19, 5, 13, 14, 2, 17, 7, 12, 3, 20, 11, 16, 6, 21, 9, 10, 18, 4, 8, 1},
           {0, 22, 19, 14, 7, 21, 10, 20, 5, 11, 15, 17, 17, 15, 11, 5, 20, 10, 21, 7, 14, 19, 22},
           {0, 22, 21, 20, 19, 18, 17, 16, 15, 14, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1},
           {22, 22},
       }},
  };
  return kMatrices;
}

}  // namespace zhegalkin::golden
