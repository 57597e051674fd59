#include "mfkit/linsolve.hpp"

#include <algorithm>

namespace mfkit {

RrefResult rref(const ScalarMat& m) {
  RrefResult res;
  res.mat = m;
  ScalarMat& a = res.mat;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols && row < a.rows; ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows && a.at(pivot, col).is_zero()) ++pivot;
    if (pivot == a.rows) continue;
    if (pivot != row)
      for (std::size_t j = 0; j < a.cols; ++j) std::swap(a.at(pivot, j), a.at(row, j));
    CycNum inv = a.at(row, col).inv();
    for (std::size_t j = col; j < a.cols; ++j) a.at(row, j) = inv * a.at(row, j);
    for (std::size_t i = 0; i < a.rows; ++i) {
      if (i == row || a.at(i, col).is_zero()) continue;
      CycNum f = a.at(i, col);
      for (std::size_t j = col; j < a.cols; ++j)
        a.at(i, j) = a.at(i, j) - f * a.at(row, j);
    }
    res.pivot_cols.push_back(col);
    ++row;
  }
  res.rank = row;
  return res;
}

std::optional<std::vector<CycNum>> solve(const ScalarMat& a,
                                         const std::vector<CycNum>& b) {
  if (b.size() != a.rows) throw Error("solve: dimension mismatch");
  ScalarMat aug(a.rows, a.cols + 1);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols) = b[i];
  }
  RrefResult r = rref(aug);
  // Inconsistent iff some pivot sits in the last column.
  for (std::size_t c : r.pivot_cols)
    if (c == a.cols) return std::nullopt;
  std::vector<CycNum> x(a.cols, CycNum(0));
  for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
    x[r.pivot_cols[i]] = r.mat.at(i, a.cols);
  return x;
}

std::vector<std::vector<CycNum>> nullspace(const ScalarMat& a) {
  RrefResult r = rref(a);
  std::vector<bool> is_pivot(a.cols, false);
  for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<CycNum>> basis;
  for (std::size_t free_col = 0; free_col < a.cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<CycNum> v(a.cols, CycNum(0));
    v[free_col] = CycNum(1);
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
      v[r.pivot_cols[i]] = -r.mat.at(i, free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool are_independent_linear_forms(const std::vector<Poly>& forms) {
  if (forms.empty()) return true;
  const VarTablePtr& table = forms.front().table();
  std::size_t n = table->size();
  ScalarMat m(forms.size(), n);
  for (std::size_t i = 0; i < forms.size(); ++i) {
    const Poly& p = forms[i];
    if (p.is_zero() || p.degree() != 1 || !p.is_homogeneous())
      throw Error("are_independent_linear_forms: input is not a linear form");
    for (const auto& [e, c] : p.terms()) {
      for (std::size_t j = 0; j < n; ++j)
        if (e[j] == 1) m.at(i, j) = c;
    }
  }
  return rref(m).rank == forms.size();
}

}  // namespace mfkit
