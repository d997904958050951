#include "coinv/linalg.hpp"

namespace coinv {

std::vector<int> rref_in_place(FqMatrix& m) {
  const Field& k = m.field;
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int sel = -1;
    for (int i = row; i < m.rows; ++i)
      if (m.at(i, col) != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != row)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(row, j));
    Field::Elem s = k.inv(m.at(row, col));
    for (int j = 0; j < m.cols; ++j) m.at(row, j) = k.mul(m.at(row, j), s);
    for (int i = 0; i < m.rows; ++i) {
      if (i == row) continue;
      Field::Elem f = m.at(i, col);
      if (f == 0) continue;
      for (int j = 0; j < m.cols; ++j)
        m.at(i, j) = k.sub(m.at(i, j), k.mul(f, m.at(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

unsigned rank(FqMatrix m) { return unsigned(rref_in_place(m).size()); }

std::optional<std::vector<Field::Elem>> solve_row_combination(
    const FqMatrix& m, const std::vector<Field::Elem>& target) {
  const Field& k = m.field;
  // Rows augmented with the identity so the elimination history is kept.
  FqMatrix work(m.field, m.rows, m.cols + m.rows);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) work.at(i, j) = m.at(i, j);
    work.at(i, m.cols + i) = k.one();
  }
  std::vector<std::pair<int, int>> pivot_rows;  // (col, row)
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int sel = -1;
    for (int i = row; i < m.rows; ++i)
      if (work.at(i, col) != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != row)
      for (int j = 0; j < work.cols; ++j)
        std::swap(work.at(sel, j), work.at(row, j));
    Field::Elem s = k.inv(work.at(row, col));
    for (int j = 0; j < work.cols; ++j)
      work.at(row, j) = k.mul(work.at(row, j), s);
    for (int i = 0; i < m.rows; ++i) {
      if (i == row) continue;
      Field::Elem f = work.at(i, col);
      if (f == 0) continue;
      for (int j = 0; j < work.cols; ++j)
        work.at(i, j) = k.sub(work.at(i, j), k.mul(f, work.at(row, j)));
    }
    pivot_rows.push_back({col, row});
    ++row;
  }
  std::vector<Field::Elem> v = target;
  std::vector<Field::Elem> combo(std::size_t(m.rows), 0);
  for (auto [col, prow] : pivot_rows) {
    Field::Elem f = v[std::size_t(col)];
    if (f == 0) continue;
    for (int j = 0; j < m.cols; ++j)
      v[std::size_t(j)] = k.sub(v[std::size_t(j)], k.mul(f, work.at(prow, j)));
    for (int i = 0; i < m.rows; ++i)
      combo[std::size_t(i)] =
          k.add(combo[std::size_t(i)], k.mul(f, work.at(prow, m.cols + i)));
  }
  for (auto e : v)
    if (e != 0) return std::nullopt;
  return combo;
}

}  // namespace coinv
