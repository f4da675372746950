#include "ptl/projgeom.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

namespace ptl {

std::uint64_t pg_size(std::uint64_t q, std::uint32_t d) {
  std::uint64_t n = 0, power = 1;
  for (std::uint32_t i = 0; i <= d; ++i) {
    n += power;
    power *= q;
  }
  return n;
}

std::vector<felem> ProjSpace::normalize(const Field& f, std::vector<felem> v) {
  std::size_t lead = 0;
  while (lead < v.size() && v[lead] == 0) ++lead;
  if (lead == v.size()) fail(errc::zero_vector, "cannot normalize the zero vector");
  felem s = f.inv(v[lead]);
  for (auto& x : v) x = f.mul(s, x);
  return v;
}

std::uint64_t ProjSpace::encode(const std::vector<felem>& v) const {
  std::uint64_t key = 0;
  for (felem x : v) key = key * f_->q() + x;
  return key;
}

ProjSpace ProjSpace::make(FieldPtr f, std::uint32_t d, bool allow_line) {
  if (d < 2 && !allow_line) fail(errc::too_large, "projective dimension must be >= 2");
  if (d < 1) fail(errc::too_large, "projective dimension must be >= 1");
  std::uint64_t n = pg_size(f->q(), d);
  if (n > 1000000) fail(errc::too_large, "projective space too large");
  ProjSpace s;
  s.f_ = std::move(f);
  s.d_ = d;
  const Field& fd = *s.f_;
  // one representative per point: first nonzero coordinate equals 1
  std::vector<felem> v(d + 1, 0);
  std::vector<std::vector<felem>> pts;
  for (std::uint32_t lead = 0; lead <= d; ++lead) {
    std::fill(v.begin(), v.end(), 0);
    v[lead] = 1;
    std::uint32_t tail = d - lead;
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < tail; ++i) count *= fd.q();
    for (std::uint64_t k = 0; k < count; ++k) {
      std::uint64_t t = k;
      for (std::uint32_t i = d; i > lead; --i) {
        v[i] = felem(t % fd.q());
        t /= fd.q();
      }
      pts.push_back(v);
    }
  }
  std::sort(pts.begin(), pts.end());
  assert(pts.size() == n);
  s.pts_ = std::move(pts);
  s.index_.reserve(s.pts_.size() * 2);
  for (point_t i = 0; i < s.pts_.size(); ++i) s.index_.emplace(s.encode(s.pts_[i]), i);
  return s;
}

point_t ProjSpace::index_of(const std::vector<felem>& v) const {
  auto norm = normalize(*f_, v);
  auto it = index_.find(encode(norm));
  assert(it != index_.end());
  return it->second;
}

Subspace ProjSpace::span_vectors(const Mat& rows) const {
  Mat m = rows;
  rref(*f_, m);
  return Subspace{std::move(m)};
}

Subspace ProjSpace::span(std::span<const point_t> pts) const {
  Mat m(pts.size(), d_ + 1);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j <= d_; ++j) m.at(i, j) = pts_[pts[i]][j];
  return span_vectors(m);
}

bool ProjSpace::contains(const Subspace& s, point_t p) const {
  if (s.basis.rows == 0) return false;
  Mat m(s.basis.rows + 1, d_ + 1);
  std::copy(s.basis.a.begin(), s.basis.a.end(), m.a.begin());
  for (std::size_t j = 0; j <= d_; ++j) m.at(s.basis.rows, j) = pts_[p][j];
  return mat_rank(*f_, m) == s.basis.rows;
}

Subspace ProjSpace::meet(const Subspace& a, const Subspace& b) const {
  // row space intersection: vectors of a expressible in b as well.
  // Solve [A^T | -B^T] kernel; intersection = {x A : (x,y) in kernel}.
  std::size_t ra = a.basis.rows, rb = b.basis.rows, n = d_ + 1;
  if (ra == 0 || rb == 0) return Subspace{Mat(0, n)};
  Mat sys(n, ra + rb);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < ra; ++i) sys.at(j, i) = a.basis.at(i, j);
    for (std::size_t i = 0; i < rb; ++i) sys.at(j, ra + i) = f_->neg(b.basis.at(i, j));
  }
  Mat ker = null_space(*f_, sys);
  Mat inter(ker.rows, n);
  for (std::size_t r = 0; r < ker.rows; ++r)
    for (std::size_t i = 0; i < ra; ++i) {
      if (ker.at(r, i) == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        inter.at(r, j) = f_->add(inter.at(r, j), f_->mul(ker.at(r, i), a.basis.at(i, j)));
    }
  return span_vectors(inter);
}

Subspace ProjSpace::line_through(point_t p, point_t q) const {
  if (p == q) fail(errc::bad_query, "line through equal points");
  point_t pts[2] = {p, q};
  return span(pts);
}

std::vector<point_t> ProjSpace::points_of(const Subspace& s) const {
  std::vector<point_t> out;
  if (s.basis.rows == 0) return out;
  // enumerate projective combinations of the basis rows
  std::size_t k = s.basis.rows;
  std::vector<felem> coef(k, 0);
  // leading coefficient 1, earlier ones zero: one representative per point
  for (std::size_t lead = 0; lead < k; ++lead) {
    std::fill(coef.begin(), coef.end(), 0);
    coef[lead] = 1;
    std::uint64_t count = 1;
    for (std::size_t i = lead + 1; i < k; ++i) count *= f_->q();
    for (std::uint64_t c = 0; c < count; ++c) {
      std::uint64_t t = c;
      for (std::size_t i = k; i-- > lead + 1;) {
        coef[i] = felem(t % f_->q());
        t /= f_->q();
      }
      std::vector<felem> v(d_ + 1, 0);
      for (std::size_t i = 0; i < k; ++i) {
        if (coef[i] == 0) continue;
        for (std::size_t j = 0; j <= d_; ++j)
          v[j] = f_->add(v[j], f_->mul(coef[i], s.basis.at(i, j)));
      }
      out.push_back(index_of(v));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subspace> ProjSpace::lines() const {
  std::set<std::vector<felem>> seen;
  std::vector<Subspace> out;
  for (point_t p = 0; p < size(); ++p)
    for (point_t q = p + 1; q < size(); ++q) {
      Subspace l = line_through(p, q);
      if (seen.insert(l.basis.a).second) out.push_back(std::move(l));
    }
  return out;
}

std::vector<Subspace> ProjSpace::hyperplanes() const {
  // hyperplanes are kernels of nonzero functionals, one per dual point
  std::vector<Subspace> out;
  for (point_t p = 0; p < size(); ++p) {
    Mat functional(1, d_ + 1);
    for (std::size_t j = 0; j <= d_; ++j) functional.at(0, j) = pts_[p][j];
    Mat ker = null_space(*f_, functional);
    out.push_back(span_vectors(ker));
  }
  std::sort(out.begin(), out.end(),
            [](const Subspace& a, const Subspace& b) { return a.basis.a < b.basis.a; });
  return out;
}

ConfigInfo ProjSpace::config_predicates(const Config& t) const {
  ConfigInfo info;
  std::size_t n = t.size();
  assert(n >= 1);
  Subspace whole = span(t.pts);
  info.collinear = whole.projdim() <= 1;
  // general position: every subset of size <= d+1 is projectively independent,
  // i.e. every min(n, d+2)-point genericity reduces to rank checks on
  // min(n, d+1)-subsets.
  std::size_t k = std::min<std::size_t>(n, d_ + 1);
  info.general = true;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (info.general) {
    std::vector<point_t> sub(k);
    for (std::size_t i = 0; i < k; ++i) sub[i] = t.pts[idx[i]];
    if (std::size_t(span(sub).projdim()) + 1 != k) info.general = false;
    // next combination
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<point_t> rest;
    rest.reserve(n - 1);
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) rest.push_back(t.pts[j]);
    if (!contains(span(rest), t.pts[i])) info.i_disjoint.push_back(i);
  }
  info.disjoint = !info.i_disjoint.empty();
  return info;
}

std::string ProjSpace::point_literal(point_t id) const {
  std::string out = "[";
  const auto& v = pts_[id];
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ":";
    out += std::to_string(v[i]);
  }
  return out + "]";
}

point_t ProjSpace::parse_point(const std::string& text) const {
  std::string body = text;
  if (!body.empty() && body.front() == '[') body = body.substr(1, body.size() - 2);
  std::vector<felem> v;
  std::stringstream ss(body);
  std::string cell;
  while (std::getline(ss, cell, ':')) {
    try {
      v.push_back(felem(std::stoul(cell)));
    } catch (const std::exception&) {
      fail(errc::parse_error, "bad point literal '" + text + "'");
    }
  }
  if (v.size() != d_ + 1)
    fail(errc::parse_error, "point literal has wrong coordinate count");
  bool zero = true;
  for (felem x : v) zero = zero && x == 0;
  if (zero) fail(errc::zero_vector, "zero vector is not a point");
  for (felem x : v)
    if (x >= f_->q()) fail(errc::parse_error, "coordinate out of range");
  return index_of(v);
}

Config ProjSpace::parse_config(const std::string& text) const {
  Config cfg;
  if (text.find('[') != std::string::npos) {
    // comma-separated point literals
    std::size_t pos = 0;
    while (pos < text.size()) {
      auto open = text.find('[', pos);
      if (open == std::string::npos) break;
      auto close = text.find(']', open);
      if (close == std::string::npos) fail(errc::parse_error, "unterminated point literal");
      cfg.pts.push_back(parse_point(text.substr(open, close - open + 1)));
      pos = close + 1;
    }
  } else {
    std::stringstream ss(text);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        unsigned long id = std::stoul(cell);
        if (id >= size()) fail(errc::parse_error, "point id out of range: " + cell);
        cfg.pts.push_back(point_t(id));
      } catch (const error&) {
        throw;
      } catch (const std::exception&) {
        fail(errc::parse_error, "bad point id '" + cell + "'");
      }
    }
  }
  if (cfg.pts.empty()) fail(errc::parse_error, "empty configuration");
  std::set<point_t> uniq(cfg.pts.begin(), cfg.pts.end());
  if (uniq.size() != cfg.pts.size())
    fail(errc::parse_error, "configuration points must be pairwise distinct");
  return cfg;
}

}  // namespace ptl
