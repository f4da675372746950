#include "doctest.h"
#include "ptl/gf.hpp"
#include "ptl/linalg.hpp"

#include <set>

using namespace ptl;

namespace {

// Independent irreducibility oracle: a monic polynomial over GF(p) given by
// low-to-high coefficients is irreducible iff no monic polynomial of degree
// 1..deg/2 divides it, with all arithmetic done mod p from scratch.
bool oracle_irreducible(std::uint64_t p, const std::vector<felem>& poly) {
  auto deg_of = [](const std::vector<felem>& f) {
    std::size_t n = f.size();
    while (n > 0 && f[n - 1] == 0) --n;
    return n;
  };
  std::size_t e = deg_of(poly) - 1;
  for (std::size_t d = 1; 2 * d <= e; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t k = 0; k < count; ++k) {
      std::vector<felem> div(d + 1, 0);
      std::uint64_t t = k;
      for (std::size_t i = 0; i < d; ++i) {
        div[i] = felem(t % p);
        t /= p;
      }
      div[d] = 1;
      std::vector<felem> r = poly;
      for (std::size_t n = deg_of(r); n >= d + 1 && n > 0; n = deg_of(r)) {
        std::uint64_t c = r[n - 1];
        for (std::size_t i = 0; i <= d; ++i) {
          std::uint64_t sub = c * div[i] % p;
          r[n - 1 - d + i] = felem((r[n - 1 - d + i] + p - sub) % p);
        }
      }
      if (deg_of(r) == 0) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("prime fields") {
  auto f2 = Field::make(2, 1);
  CHECK(f2->q() == 2);
  CHECK(f2->modulus() == std::vector<felem>{0, 1});  // modulus x
  auto f3 = Field::make(3, 1);
  CHECK(f3->q() == 3);
  CHECK(f3->add(1, 2) == 0);
  CHECK(f3->mul(2, 2) == 1);
  CHECK(f3->inv(2) == 2);
}

TEST_CASE("field_make rejects bad input") {
  CHECK_THROWS_AS(Field::make(4, 1), error);
  CHECK_THROWS_AS(Field::make(1, 1), error);
  CHECK_THROWS_AS(Field::make(2, 0), error);
  CHECK_THROWS_AS(Field::make(2, 21), error);  // 2^21 > 2^20
  try {
    Field::make(9, 1);
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::non_prime);
  }
}

TEST_CASE("GF(8): canonical modulus and multiplicative order") {
  auto f8 = Field::make(2, 3);
  CHECK(f8->q() == 8);
  // brute-force scan: x^3+x+1 (codes low-to-high 1,1,0,1) is the least
  // irreducible cubic over GF(2)
  std::vector<std::vector<felem>> cubics;
  for (std::uint64_t k = 0; k < 8; ++k)
    cubics.push_back({felem(k & 1), felem((k >> 1) & 1), felem((k >> 2) & 1), 1});
  std::vector<felem> least;
  for (const auto& c : cubics)
    if (oracle_irreducible(2, c)) {
      least = c;
      break;
    }
  CHECK(least == std::vector<felem>{1, 1, 0, 1});
  CHECK(f8->modulus() == least);
  // multiplicative group of order 7: g^7 = 1 for every nonzero g
  for (felem g = 1; g < 8; ++g) {
    CHECK(f8->pow(g, 7) == 1);
    CHECK(f8->mul(g, f8->inv(g)) == 1);
  }
}

TEST_CASE("canonical modulus matches the oracle for several fields") {
  for (auto [p, e] : {std::pair<std::uint64_t, std::uint32_t>{2, 4},
                      {3, 2},
                      {3, 3},
                      {5, 2},
                      {7, 2}}) {
    auto f = Field::make(p, e);
    CHECK(oracle_irreducible(p, f->modulus()));
    // nothing lexicographically smaller is irreducible
    std::uint64_t code = 0, mult = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
      code += mult * f->modulus()[i];
      mult *= p;
    }
    for (std::uint64_t k = 0; k < code; ++k) {
      std::vector<felem> cand(e + 1, 0);
      std::uint64_t t = k;
      for (std::uint32_t i = 0; i < e; ++i) {
        cand[i] = felem(t % p);
        t /= p;
      }
      cand[e] = 1;
      CHECK_FALSE(oracle_irreducible(p, cand));
    }
  }
}

TEST_CASE("field laws hold exhaustively for q <= 64") {
  for (auto [p, e] : {std::pair<std::uint64_t, std::uint32_t>{2, 1}, {2, 2}, {2, 3},
                      {2, 4}, {2, 5}, {2, 6}, {3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2},
                      {7, 1}, {7, 2}, {11, 1}, {13, 1}, {61, 1}}) {
    auto f = Field::make(p, e);
    std::uint64_t q = f->q();
    for (felem a = 0; a < q; ++a) {
      CHECK(f->add(a, f->neg(a)) == 0);
      if (a != 0) CHECK(f->inv(f->inv(a)) == a);
      // Frobenius is additive
      for (felem b = 0; b < q; ++b) {
        CHECK(f->add(a, b) == f->add(b, a));
        CHECK(f->mul(a, b) == f->mul(b, a));
        CHECK(f->pow(f->add(a, b), (long long)p) ==
              f->add(f->pow(a, (long long)p), f->pow(b, (long long)p)));
        for (felem c = 0; c < q; ++c) {
          CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
          CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
          CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("pow handles negative exponents and zero") {
  auto f = Field::make(3, 2);
  for (felem a = 1; a < 9; ++a) {
    CHECK(f->mul(f->pow(a, -1), a) == 1);
    CHECK(f->pow(a, -3) == f->inv(f->pow(a, 3)));
    CHECK(f->pow(a, 0) == 1);
  }
  CHECK(f->pow(0, 5) == 0);
  CHECK(f->pow(0, 0) == 1);
  CHECK_THROWS_AS(f->pow(0, -1), error);
  CHECK_THROWS_AS(f->inv(0), error);
  CHECK_THROWS_AS(f->div(1, 0), error);
}

TEST_CASE("extension towers: GF(9) over GF(3) has 3-dimensional GF(27) step") {
  auto f3 = Field::make(3, 1);
  auto f27 = Field::extension(f3, 3);
  CHECK(f27->q() == 27);
  CHECK(f27->base() == f3);
  CHECK(f27->degree() == 3);
  // element digits round-trip
  for (felem a = 0; a < 27; ++a) CHECK(f27->from_digits(f27->digits(a)) == a);
  // tower arithmetic agrees with field laws
  for (felem a = 1; a < 27; ++a) CHECK(f27->mul(a, f27->inv(a)) == 1);
  // a non-prime base: GF(4) -> GF(64)
  auto f4 = Field::make(2, 2);
  auto f64 = Field::extension(f4, 3);
  CHECK(f64->q() == 64);
  for (felem a = 1; a < 64; ++a) CHECK(f64->mul(a, f64->inv(a)) == 1);
  for (felem a = 0; a < 64; ++a)
    for (felem b = 0; b < 64; ++b)
      CHECK(f64->mul(a, b) == f64->mul(b, a));
}

TEST_CASE("field spec parsing") {
  CHECK(Field::parse_spec("2^3")->q() == 8);
  CHECK(Field::parse_spec("9")->q() == 9);
  CHECK(Field::parse_spec("7")->q() == 7);
  CHECK_THROWS_AS(Field::parse_spec("6"), error);
  CHECK_THROWS_AS(Field::parse_spec("abc"), error);
}

TEST_CASE("polynomial rendering") {
  auto f8 = Field::make(2, 3);
  CHECK(f8->render(0) == "0");
  CHECK(f8->render(1) == "1");
  CHECK(f8->render(6) == "x^2+x");
  CHECK(f8->render(7) == "x^2+x+1");
  auto f3 = Field::make(3, 1);
  CHECK(f3->render(2) == "2");
}

TEST_CASE("matrix arithmetic over GF(q)") {
  auto f = Field::make(3, 1);
  Mat m(2, 2);
  m.at(0, 0) = 1;
  m.at(0, 1) = 2;
  m.at(1, 0) = 1;
  m.at(1, 1) = 1;
  CHECK(mat_det(*f, m) == 2);  // 1*1 - 2*1 = -1 = 2 mod 3
  Mat mi = mat_inverse(*f, m);
  CHECK(mat_mul(*f, m, mi) == Mat::identity(2));
  CHECK(mat_rank(*f, m) == 2);
  Mat sing(2, 2);
  sing.at(0, 0) = 1;
  sing.at(0, 1) = 2;
  sing.at(1, 0) = 2;
  sing.at(1, 1) = 1;  // row2 = 2*row1
  CHECK(mat_rank(*f, sing) == 1);
  CHECK(mat_det(*f, sing) == 0);
  CHECK_THROWS_AS(mat_inverse(*f, sing), error);
}

TEST_CASE("null space solves the homogeneous system") {
  auto f = Field::make(2, 1);
  Mat m(2, 4);
  // x0 + x1 = 0, x2 + x3 = 0
  m.at(0, 0) = m.at(0, 1) = 1;
  m.at(1, 2) = m.at(1, 3) = 1;
  Mat ns = null_space(*f, m);
  CHECK(ns.rows == 2);
  for (std::size_t r = 0; r < ns.rows; ++r) {
    std::vector<felem> v(ns.cols);
    for (std::size_t j = 0; j < ns.cols; ++j) v[j] = ns.at(r, j);
    for (felem x : mat_apply(*f, m, v)) CHECK(x == 0);
  }
}

TEST_CASE("matrix literal round trip") {
  Mat m = mat_parse("1,0,2;0,1,1");
  CHECK(m.rows == 2);
  CHECK(m.cols == 3);
  CHECK(m.at(0, 2) == 2);
  CHECK(mat_parse(mat_to_string(m)) == m);
  CHECK_THROWS_AS(mat_parse("1,2;3"), error);
}
