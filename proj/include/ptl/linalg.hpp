#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ptl/gf.hpp"

namespace ptl {

/// Dense row-major matrix of field element codes. All arithmetic is exact and
/// takes the field explicitly; a Mat is just data.
struct Mat {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<felem> a;

  Mat() = default;
  Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

  felem& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  felem at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

Mat mat_mul(const Field& f, const Mat& x, const Mat& y);
std::vector<felem> mat_apply(const Field& f, const Mat& m, const std::vector<felem>& v);

/// In-place reduced row echelon form; returns the rank. Zero rows sink to the
/// bottom and are trimmed off when `trim` is set.
std::size_t rref(const Field& f, Mat& m, bool trim = true);

std::size_t mat_rank(const Field& f, Mat m);

/// Throws errc::singular when not invertible.
Mat mat_inverse(const Field& f, const Mat& m);

felem mat_det(const Field& f, Mat m);

/// Rows of `m` spanning its row space, RREF form (canonical: two subspaces are
/// equal iff their RREF bases are byte-equal).
Mat row_space(const Field& f, Mat m);

/// Basis of the null space {v : m v = 0}, one solution per row, RREF-derived
/// deterministic form.
Mat null_space(const Field& f, const Mat& m);

/// Stacks the rows of x on top of the rows of y (equal column counts).
Mat vstack(const Mat& x, const Mat& y);

std::string mat_to_string(const Mat& m);
Mat mat_parse(const std::string& text);  // "a,b,c;d,e,f" rows of integer codes

}  // namespace ptl
