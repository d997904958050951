#pragma once

#include <optional>
#include <vector>

#include "coinv/gf.hpp"

namespace coinv {

// Dense row-major matrix over F_q for the small solves (rank, dependency
// extraction, expressing vectors in a basis). The graded ideal keeps its own
// incremental echelon structure.
struct FqMatrix {
  Field field;
  int rows = 0, cols = 0;
  std::vector<Field::Elem> a;

  FqMatrix(Field f, int r, int c)
      : field(std::move(f)), rows(r), cols(c),
        a(std::size_t(r) * std::size_t(c), 0) {}

  Field::Elem& at(int i, int j) {
    return a[std::size_t(i) * std::size_t(cols) + std::size_t(j)];
  }
  Field::Elem at(int i, int j) const {
    return a[std::size_t(i) * std::size_t(cols) + std::size_t(j)];
  }
};

// In-place reduced row echelon form; returns pivot columns in order.
std::vector<int> rref_in_place(FqMatrix& m);

unsigned rank(FqMatrix m);

// Solves sum_i c_i * row_i = target. Returns nullopt when target is not in
// the row space.
std::optional<std::vector<Field::Elem>> solve_row_combination(
    const FqMatrix& m, const std::vector<Field::Elem>& target);

}  // namespace coinv
