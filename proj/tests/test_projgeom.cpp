#include "doctest.h"
#include "ptl/projgeom.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace ptl;

namespace {

ProjSpace fano() { return ProjSpace::make(Field::make(2, 1), 2); }

// Gaussian binomial [n choose k]_q: number of k-dim subspaces of GF(q)^n
std::uint64_t gaussian_binomial(std::uint64_t q, unsigned n, unsigned k) {
  auto bracket = [&](unsigned m) {
    std::uint64_t v = 0, p = 1;
    for (unsigned i = 0; i < m; ++i) {
      v += p;
      p *= q;
    }
    return v;  // (q^m - 1)/(q - 1)
  };
  // product formula with exact division, done via unsigned 128-bit
  unsigned __int128 num = 1, den = 1;
  for (unsigned i = 0; i < k; ++i) {
    num *= bracket(n - i);
    den *= bracket(i + 1);
  }
  return std::uint64_t(num / den);
}

}  // namespace

TEST_CASE("point counts match (q^{d+1}-1)/(q-1)") {
  CHECK(fano().size() == 7);
  CHECK(ProjSpace::make(Field::make(3, 1), 2).size() == 13);
  CHECK(ProjSpace::make(Field::make(2, 1), 3).size() == 15);
  CHECK(ProjSpace::make(Field::make(2, 2), 2).size() == 21);
  CHECK(ProjSpace::make(Field::make(5, 1), 2).size() == 31);
  CHECK_THROWS_AS(ProjSpace::make(Field::make(2, 1), 1), error);
  CHECK(ProjSpace::make(Field::make(3, 1), 1, true).size() == 4);
}

TEST_CASE("normalization scales the first nonzero coordinate to 1") {
  auto f3 = Field::make(3, 1);
  CHECK(ProjSpace::normalize(*f3, {2, 1, 0}) == std::vector<felem>{1, 2, 0});
  auto f2 = Field::make(2, 1);
  CHECK(ProjSpace::normalize(*f2, {0, 1, 1}) == std::vector<felem>{0, 1, 1});
  auto f5 = Field::make(5, 1);
  CHECK(ProjSpace::normalize(*f5, {0, 0, 3}) == std::vector<felem>{0, 0, 1});
  // idempotent
  auto v = ProjSpace::normalize(*f5, {4, 3, 2});
  CHECK(ProjSpace::normalize(*f5, v) == v);
  CHECK_THROWS_AS(ProjSpace::normalize(*f3, {0, 0, 0}), error);
}

TEST_CASE("point order is lexicographic and indices are stable") {
  ProjSpace s = fano();
  for (point_t i = 0; i + 1 < s.size(); ++i) CHECK(s.point(i) < s.point(i + 1));
  for (point_t i = 0; i < s.size(); ++i) {
    CHECK(s.index_of(s.point(i)) == i);
    CHECK(s.parse_point(s.point_literal(i)) == i);
  }
}

TEST_CASE("span basics") {
  ProjSpace s = fano();
  CHECK(s.span({}).projdim() == -1);
  point_t one[] = {0};
  CHECK(s.span(one).projdim() == 0);
  // any two distinct points span a line holding exactly q+1 points
  for (point_t p = 0; p < s.size(); ++p)
    for (point_t q = p + 1; q < s.size(); ++q) {
      Subspace l = s.line_through(p, q);
      CHECK(l.projdim() == 1);
      CHECK(s.points_of(l).size() == 3);
    }
}

TEST_CASE("PG(2,2): three non-collinear points span the whole plane") {
  ProjSpace s = fano();
  // rank oracle: pick triples and compare span projdim with matrix rank
  for (point_t a = 0; a < s.size(); ++a)
    for (point_t b = a + 1; b < s.size(); ++b)
      for (point_t c = b + 1; c < s.size(); ++c) {
        point_t pts[] = {a, b, c};
        Mat m(3, 3);
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) m.at(i, j) = s.point(pts[i])[j];
        std::size_t rank = mat_rank(s.field(), m);
        CHECK(std::size_t(s.span(pts).projdim() + 1) == rank);
      }
}

TEST_CASE("incidence enumeration: Fano plane has 7 lines of 3 points") {
  ProjSpace s = fano();
  auto ls = s.lines();
  CHECK(ls.size() == 7);
  // each point on exactly 3 lines (self-duality)
  for (point_t p = 0; p < s.size(); ++p) {
    int through = 0;
    for (const auto& l : ls)
      if (s.contains(l, p)) ++through;
    CHECK(through == 3);
  }
  auto hs = s.hyperplanes();
  CHECK(hs.size() == 7);  // hyperplanes of a plane are its lines
}

TEST_CASE("PG(2,3): two distinct lines meet in exactly one point") {
  ProjSpace s = ProjSpace::make(Field::make(3, 1), 2);
  auto ls = s.lines();
  CHECK(ls.size() == 13);
  for (std::size_t i = 0; i < ls.size(); ++i) {
    CHECK(s.points_of(ls[i]).size() == 4);
    for (std::size_t j = i + 1; j < ls.size(); ++j) {
      Subspace m = s.meet(ls[i], ls[j]);
      CHECK(m.projdim() == 0);
    }
  }
  // every point of PG(2,q) lies on exactly q+1 lines
  for (point_t p = 0; p < s.size(); ++p) {
    int through = 0;
    for (const auto& l : ls)
      if (s.contains(l, p)) ++through;
    CHECK(through == 4);
  }
}

TEST_CASE("PG(3,2) has 15 hyperplanes and 35 lines") {
  ProjSpace s = ProjSpace::make(Field::make(2, 1), 3);
  CHECK(s.hyperplanes().size() == gaussian_binomial(2, 4, 3));
  CHECK(s.hyperplanes().size() == 15);
  CHECK(s.lines().size() == gaussian_binomial(2, 4, 2));
  CHECK(s.lines().size() == 35);
}

TEST_CASE("span is a closure operator on random point sets") {
  ProjSpace s = ProjSpace::make(Field::make(3, 1), 2);
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<point_t> pts;
    std::size_t n = 1 + rng() % 4;
    std::set<point_t> used;
    while (pts.size() < n) {
      point_t p = point_t(rng() % s.size());
      if (used.insert(p).second) pts.push_back(p);
    }
    Subspace sp = s.span(pts);
    // extensive
    for (point_t p : pts) CHECK(s.contains(sp, p));
    // idempotent
    auto inside = s.points_of(sp);
    CHECK(s.span(inside).basis == sp.basis);
    // monotone: span of a subset is contained in span of the set
    std::vector<point_t> sub(pts.begin(), pts.begin() + 1);
    Subspace sps = s.span(sub);
    for (point_t p : s.points_of(sps)) CHECK(s.contains(sp, p));
  }
}

TEST_CASE("meet with empty and full subspaces") {
  ProjSpace s = fano();
  Subspace empty = s.span({});
  std::vector<point_t> all;
  for (point_t p = 0; p < s.size(); ++p) all.push_back(p);
  Subspace full = s.span(all);
  CHECK(full.projdim() == 2);
  Subspace l = s.line_through(0, 1);
  CHECK(s.meet(l, empty).projdim() == -1);
  CHECK(s.meet(l, full).basis == l.basis);
}

TEST_CASE("config predicates on PG(2,2)") {
  ProjSpace s = fano();
  auto ls = s.lines();
  // three points on one line: collinear, not disjoint
  auto line_pts = s.points_of(ls[0]);
  ConfigInfo on_line = s.config_predicates(Config{{line_pts[0], line_pts[1], line_pts[2]}});
  CHECK(on_line.collinear);
  CHECK_FALSE(on_line.general);
  CHECK_FALSE(on_line.disjoint);
  // a triangle: general, disjoint at every index
  // (lex order puts (0,0,1),(0,1,0),(1,0,0) at ids 0,1,3)
  Config tri{{0, 1, 3}};
  REQUIRE_FALSE(s.contains(s.line_through(0, 1), 3));
  ConfigInfo t = s.config_predicates(tri);
  CHECK(t.general);
  CHECK_FALSE(t.collinear);
  CHECK(t.i_disjoint == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("disjointness matches the brute-force deletion oracle on PG(2,2)") {
  ProjSpace s = fano();
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 1 + rng() % 4;
    std::set<point_t> used;
    std::vector<point_t> pts;
    while (pts.size() < n) {
      point_t p = point_t(rng() % s.size());
      if (used.insert(p).second) pts.push_back(p);
    }
    ConfigInfo info = s.config_predicates(Config{pts});
    std::vector<std::size_t> oracle;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<point_t> rest;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) rest.push_back(pts[j]);
      Mat m(rest.size() + 1, 3);
      for (std::size_t r = 0; r < rest.size(); ++r)
        for (int c = 0; c < 3; ++c) m.at(r, c) = s.point(rest[r])[c];
      for (int c = 0; c < 3; ++c) m.at(rest.size(), c) = s.point(pts[i])[c];
      Mat rest_only(rest.size(), 3);
      for (std::size_t r = 0; r < rest.size(); ++r)
        for (int c = 0; c < 3; ++c) rest_only.at(r, c) = s.point(rest[r])[c];
      if (mat_rank(s.field(), m) > mat_rank(s.field(), rest_only)) oracle.push_back(i);
    }
    CHECK(info.i_disjoint == oracle);
    CHECK(info.disjoint == !oracle.empty());
  }
}

TEST_CASE("PG(2,3): four points with exactly three collinear") {
  ProjSpace s = ProjSpace::make(Field::make(3, 1), 2);
  auto ls = s.lines();
  auto lp = s.points_of(ls[0]);
  point_t off = 0;
  while (s.contains(ls[0], off)) ++off;
  Config cfg{{lp[0], lp[1], lp[2], off}};
  ConfigInfo info = s.config_predicates(cfg);
  CHECK(info.disjoint);
  CHECK(info.i_disjoint == std::vector<std::size_t>{3});
  CHECK_FALSE(info.general);
}

TEST_CASE("config literals parse as ids or point literals") {
  ProjSpace s = fano();
  Config a = s.parse_config("0,1,2");
  CHECK(a.pts == std::vector<point_t>{0, 1, 2});
  std::string lits = s.point_literal(3) + "," + s.point_literal(5);
  Config b = s.parse_config(lits);
  CHECK(b.pts == std::vector<point_t>{3, 5});
  CHECK_THROWS_AS(s.parse_config("0,0"), error);
  CHECK_THROWS_AS(s.parse_config("0,99"), error);
}
