#include "agt/intmat.hpp"

#include <algorithm>

#include "agt/error.hpp"

namespace agt::intmat {

namespace {

size_t cols_of(const Mat& m) { return m.empty() ? 0 : m[0].size(); }

void check_rect(const Mat& m) {
  for (const auto& r : m)
    internal_check(r.size() == m[0].size(), "ragged matrix");
}

bool is_zero_row(const Row& r) {
  return std::all_of(r.begin(), r.end(), [](const Int& x) { return x == 0; });
}

// Elimination shared by row_hnf and row_hnf_transform. When U is non-null it
// receives the same row operations starting from the identity.
void hnf_inplace(Mat& m, Mat* u) {
  check_rect(m);
  size_t rows = m.size(), cols = cols_of(m);
  if (u) {
    u->assign(rows, Row(rows, 0));
    for (size_t i = 0; i < rows; ++i) (*u)[i][i] = 1;
  }
  auto addmul = [&](size_t dst, size_t src, const Int& f) {
    for (size_t j = 0; j < cols; ++j) m[dst][j] += f * m[src][j];
    if (u)
      for (size_t j = 0; j < rows; ++j) (*u)[dst][j] += f * (*u)[src][j];
  };
  auto swap_rows = [&](size_t a, size_t b) {
    std::swap(m[a], m[b]);
    if (u) std::swap((*u)[a], (*u)[b]);
  };
  auto negate = [&](size_t r) {
    for (auto& x : m[r]) x = -x;
    if (u)
      for (auto& x : (*u)[r]) x = -x;
  };

  size_t top = 0;
  std::vector<size_t> pivot_row, pivot_col;
  for (size_t c = 0; c < cols && top < rows; ++c) {
    // Chain gcd steps in column c until one nonzero entry remains at `top`.
    for (;;) {
      size_t best = rows;
      for (size_t r = top; r < rows; ++r)
        if (m[r][c] != 0 &&
            (best == rows || abs(m[r][c]) < abs(m[best][c])))
          best = r;
      if (best == rows) break;  // column clear below top
      swap_rows(top, best);
      bool again = false;
      for (size_t r = top + 1; r < rows; ++r)
        if (m[r][c] != 0) {
          Int f = -(m[r][c] / m[top][c]);
          addmul(r, top, f);
          if (m[r][c] != 0) again = true;  // remainder survives
        }
      if (!again) break;
    }
    if (top < rows && m[top][c] != 0) {
      if (m[top][c] < 0) negate(top);
      pivot_row.push_back(top);
      pivot_col.push_back(c);
      ++top;
    }
  }
  // Reduce entries above each pivot into [0, pivot).
  for (size_t i = 0; i < pivot_row.size(); ++i) {
    size_t pr = pivot_row[i], pc = pivot_col[i];
    const Int& piv = m[pr][pc];
    for (size_t r = 0; r < pr; ++r) {
      if (m[r][pc] == 0) continue;
      Int f = m[r][pc] / piv;
      if (m[r][pc] - f * piv < 0) f -= 1;  // floor division
      if (f != 0) addmul(r, pr, -f);
    }
  }
}

}  // namespace

Mat stack(const Mat& a, const Mat& b) {
  if (!a.empty() && !b.empty())
    internal_check(a[0].size() == b[0].size(), "stack: column mismatch");
  Mat out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Mat row_hnf(Mat m) {
  hnf_inplace(m, nullptr);
  m.erase(std::remove_if(m.begin(), m.end(), is_zero_row), m.end());
  return m;
}

std::pair<Mat, Mat> row_hnf_transform(Mat m) {
  Mat u;
  hnf_inplace(m, &u);
  return {std::move(m), std::move(u)};
}

Mat left_kernel(const Mat& m) {
  auto [h, u] = row_hnf_transform(m);
  Mat out;
  for (size_t r = 0; r < h.size(); ++r)
    if (is_zero_row(h[r])) out.push_back(u[r]);
  return row_hnf(std::move(out));
}

std::optional<Row> solve_in_hnf(const Row& v, const Mat& hnf) {
  Row w = v;
  Row coeff(hnf.size(), 0);
  size_t col = 0;
  for (size_t i = 0; i < hnf.size(); ++i) {
    const auto& row = hnf[i];
    size_t pc = 0;
    while (pc < row.size() && row[pc] == 0) ++pc;
    internal_check(pc < row.size(), "solve_in_hnf: zero row in HNF");
    // Coordinates before this pivot must already be cleared.
    for (; col < pc; ++col)
      if (w[col] != 0) return std::nullopt;
    if (w[pc] % row[pc] != 0) return std::nullopt;
    Int f = w[pc] / row[pc];
    coeff[i] = f;
    if (f != 0)
      for (size_t j = pc; j < w.size(); ++j) w[j] -= f * row[j];
  }
  if (!is_zero_row(w)) return std::nullopt;
  return coeff;
}

bool member(const Row& v, const Mat& hnf) {
  return solve_in_hnf(v, hnf).has_value();
}

std::vector<Int> snf_diagonal(Mat m) {
  check_rect(m);
  size_t rows = m.size(), cols = cols_of(m);
  std::vector<Int> diag;
  size_t t = 0;
  while (true) {
    // Find the smallest nonzero entry in the remaining block.
    size_t br = rows, bc = cols;
    for (size_t r = t; r < rows; ++r)
      for (size_t c = t; c < cols; ++c)
        if (m[r][c] != 0 &&
            (br == rows || abs(m[r][c]) < abs(m[br][bc])))
          br = r, bc = c;
    if (br == rows) break;
    std::swap(m[t], m[br]);
    for (size_t r = 0; r < rows; ++r) std::swap(m[r][t], m[r][bc]);

    bool clean = true;
    for (size_t r = t + 1; r < rows; ++r)
      if (m[r][t] != 0) {
        Int f = m[r][t] / m[t][t];
        for (size_t c = t; c < cols; ++c) m[r][c] -= f * m[t][c];
        if (m[r][t] != 0) clean = false;
      }
    for (size_t c = t + 1; c < cols; ++c)
      if (m[t][c] != 0) {
        Int f = m[t][c] / m[t][t];
        for (size_t r = t; r < rows; ++r) m[r][c] -= f * m[r][t];
        if (m[t][c] != 0) clean = false;
      }
    if (!clean) continue;  // smaller remainders appeared; redo the block
    // Divisibility fix: pivot must divide every remaining entry.
    bool fixed = false;
    for (size_t r = t + 1; r < rows && !fixed; ++r)
      for (size_t c = t + 1; c < cols && !fixed; ++c)
        if (m[r][c] % m[t][t] != 0) {
          for (size_t cc = t; cc < cols; ++cc) m[t][cc] += m[r][cc];
          fixed = true;
        }
    if (fixed) continue;
    diag.push_back(abs(m[t][t]));
    ++t;
    if (t >= rows || t >= cols) break;
  }
  // Sorted by divisibility already (each pivot divides the rest of its block).
  return diag;
}

Int det_of_hnf(const Mat& hnf) {
  Int d = 1;
  size_t col = 0;
  for (const auto& row : hnf) {
    size_t pc = 0;
    while (pc < row.size() && row[pc] == 0) ++pc;
    internal_check(pc == col, "det_of_hnf: not full rank");
    d *= row[pc];
    ++col;
  }
  internal_check(!hnf.empty() && col == hnf[0].size(),
                 "det_of_hnf: not square staircase");
  return d;
}

std::string to_string(const Mat& m) {
  std::string s = "[";
  for (size_t i = 0; i < m.size(); ++i) {
    if (i) s += ",";
    s += "[";
    for (size_t j = 0; j < m[i].size(); ++j) {
      if (j) s += ",";
      s += m[i][j].str();
    }
    s += "]";
  }
  return s + "]";
}

}  // namespace agt::intmat
