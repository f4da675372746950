#include "ptl/linalg.hpp"

#include <cassert>
#include <sstream>

#include "ptl/errors.hpp"

namespace ptl {

Mat mat_mul(const Field& f, const Mat& x, const Mat& y) {
  if (x.cols != y.rows) fail(errc::degree_mismatch, "matrix shape mismatch");
  Mat out(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      felem v = x.at(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < y.cols; ++j)
        out.at(i, j) = f.add(out.at(i, j), f.mul(v, y.at(k, j)));
    }
  return out;
}

std::vector<felem> mat_apply(const Field& f, const Mat& m, const std::vector<felem>& v) {
  if (m.cols != v.size()) fail(errc::degree_mismatch, "matrix/vector shape mismatch");
  std::vector<felem> out(m.rows, 0);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j)
      if (m.at(i, j) != 0) out[i] = f.add(out[i], f.mul(m.at(i, j), v[j]));
  return out;
}

std::size_t rref(const Field& f, Mat& m, bool trim) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    std::size_t piv = rank;
    while (piv < m.rows && m.at(piv, col) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != rank)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(rank, j));
    felem s = f.inv(m.at(rank, col));
    for (std::size_t j = 0; j < m.cols; ++j) m.at(rank, j) = f.mul(s, m.at(rank, j));
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == rank || m.at(r, col) == 0) continue;
      felem c = m.at(r, col);
      for (std::size_t j = 0; j < m.cols; ++j)
        m.at(r, j) = f.sub(m.at(r, j), f.mul(c, m.at(rank, j)));
    }
    ++rank;
  }
  if (trim) {
    m.a.resize(rank * m.cols);
    m.rows = rank;
  }
  return rank;
}

std::size_t mat_rank(const Field& f, Mat m) { return rref(f, m); }

Mat mat_inverse(const Field& f, const Mat& m) {
  if (m.rows != m.cols) fail(errc::singular, "inverse of non-square matrix");
  std::size_t n = m.rows;
  Mat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  rref(f, aug, false);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (aug.at(i, j) != (i == j ? 1u : 0u)) fail(errc::singular, "singular matrix");
  Mat out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
  return out;
}

felem mat_det(const Field& f, Mat m) {
  assert(m.rows == m.cols);
  std::size_t n = m.rows;
  felem det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m.at(piv, col) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(col, j));
      det = f.neg(det);
    }
    det = f.mul(det, m.at(col, col));
    felem s = f.inv(m.at(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m.at(r, col) == 0) continue;
      felem c = f.mul(s, m.at(r, col));
      for (std::size_t j = col; j < n; ++j)
        m.at(r, j) = f.sub(m.at(r, j), f.mul(c, m.at(col, j)));
    }
  }
  return det;
}

Mat row_space(const Field& f, Mat m) {
  rref(f, m);
  return m;
}

Mat null_space(const Field& f, const Mat& m) {
  Mat r = m;
  std::size_t rank = rref(f, r);
  std::size_t n = m.cols;
  // pivot column of each rref row
  std::vector<std::size_t> pivot(rank);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t i = 0; i < rank; ++i) {
    std::size_t j = 0;
    while (j < n && r.at(i, j) == 0) ++j;
    pivot[i] = j;
    is_pivot[j] = true;
  }
  Mat out(n - rank, n);
  std::size_t row = 0;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    out.at(row, free) = 1;
    for (std::size_t i = 0; i < rank; ++i)
      out.at(row, pivot[i]) = f.neg(r.at(i, free));
    ++row;
  }
  return out;
}

Mat vstack(const Mat& x, const Mat& y) {
  if (x.rows == 0) return y;
  if (y.rows == 0) return x;
  assert(x.cols == y.cols);
  Mat out(x.rows + y.rows, x.cols);
  std::copy(x.a.begin(), x.a.end(), out.a.begin());
  std::copy(y.a.begin(), y.a.end(), out.a.begin() + std::ptrdiff_t(x.a.size()));
  return out;
}

std::string mat_to_string(const Mat& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows; ++i) {
    if (i) out += ";";
    for (std::size_t j = 0; j < m.cols; ++j) {
      if (j) out += ",";
      out += std::to_string(m.at(i, j));
    }
  }
  return out + "]";
}

Mat mat_parse(const std::string& text) {
  std::string body = text;
  if (!body.empty() && body.front() == '[') body = body.substr(1, body.size() - 2);
  std::vector<std::vector<felem>> rows;
  std::stringstream ss(body);
  std::string row;
  while (std::getline(ss, row, ';')) {
    std::vector<felem> vals;
    std::stringstream rs(row);
    std::string cell;
    while (std::getline(rs, cell, ',')) {
      try {
        vals.push_back(felem(std::stoul(cell)));
      } catch (const std::exception&) {
        fail(errc::parse_error, "bad matrix entry '" + cell + "'");
      }
    }
    rows.push_back(std::move(vals));
  }
  if (rows.empty()) fail(errc::parse_error, "empty matrix literal");
  Mat m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols) fail(errc::parse_error, "ragged matrix literal");
    for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

}  // namespace ptl
