#include "ptl/gf.hpp"

#include <algorithm>
#include <cassert>

namespace ptl {

namespace {

constexpr std::uint64_t kMaxQ = 1u << 20;
constexpr std::uint64_t kTableQ = 1u << 16;

// Polynomials over a coefficient field, low-to-high coefficients. Only what
// the modulus scan needs: significant length and remainder by a monic divisor.
using poly = std::vector<felem>;

std::size_t pdeg(const poly& a) {
  std::size_t n = a.size();
  while (n > 0 && a[n - 1] == 0) --n;
  return n;  // number of significant coefficients (degree + 1), 0 for zero
}

// a mod b with b monic nonzero, coefficients in f.
poly pmod(const Field& f, poly a, const poly& b) {
  std::size_t nb = pdeg(b);
  assert(nb > 0);
  for (std::size_t na = pdeg(a); na >= nb && na > 0; na = pdeg(a)) {
    felem c = a[na - 1];
    std::size_t shift = na - nb;
    for (std::size_t i = 0; i < nb; ++i)
      a[shift + i] = f.sub(a[shift + i], f.mul(c, b[i]));
  }
  return a;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool prime_power(std::uint64_t q, std::uint64_t& p, std::uint32_t& e) {
  if (q < 2) return false;
  std::uint64_t b = q;
  for (std::uint64_t d = 2; d * d <= b; ++d) {
    if (b % d == 0) {
      p = d;
      e = 0;
      while (b % d == 0) {
        b /= d;
        ++e;
      }
      return b == 1;
    }
  }
  p = q;
  e = 1;
  return true;
}

std::vector<felem> Field::digits(felem a) const {
  std::vector<felem> ds(deg_);
  std::uint64_t x = a;
  for (std::uint32_t i = 0; i < deg_; ++i) {
    ds[i] = felem(x % base_q_);
    x /= base_q_;
  }
  return ds;
}

felem Field::from_digits(const std::vector<felem>& ds) const {
  std::uint64_t x = 0;
  for (std::size_t i = ds.size(); i-- > 0;) x = x * base_q_ + ds[i];
  assert(x < q_);
  return felem(x);
}

felem Field::add(felem a, felem b) const {
  assert(a < q_ && b < q_);
  if (prime_field()) return felem((std::uint64_t(a) + b) % p_);
  // digit-wise over the base field
  std::uint64_t x = a, y = b, out = 0, mult = 1;
  for (std::uint32_t i = 0; i < deg_; ++i) {
    felem da = felem(x % base_q_), db = felem(y % base_q_);
    felem s = base_ ? base_->add(da, db) : felem((std::uint64_t(da) + db) % p_);
    out += mult * s;
    mult *= base_q_;
    x /= base_q_;
    y /= base_q_;
  }
  return felem(out);
}

felem Field::neg(felem a) const {
  assert(a < q_);
  if (prime_field()) return a == 0 ? 0 : felem(p_ - a);
  std::uint64_t x = a, out = 0, mult = 1;
  for (std::uint32_t i = 0; i < deg_; ++i) {
    felem da = felem(x % base_q_);
    felem s = base_ ? base_->neg(da) : (da == 0 ? 0 : felem(p_ - da));
    out += mult * s;
    mult *= base_q_;
    x /= base_q_;
  }
  return felem(out);
}

felem Field::sub(felem a, felem b) const { return add(a, neg(b)); }

felem Field::mul_generic(felem a, felem b) const {
  if (prime_field()) return felem(std::uint64_t(a) % p_ * (b % p_) % p_);
  const Field* bf = base_.get();
  auto bmul = [&](felem x, felem y) {
    return bf ? bf->mul(x, y) : felem(std::uint64_t(x) * y % p_);
  };
  auto badd = [&](felem x, felem y) {
    return bf ? bf->add(x, y) : felem((std::uint64_t(x) + y) % p_);
  };
  auto bsub = [&](felem x, felem y) {
    return bf ? bf->sub(x, y) : felem((std::uint64_t(x) + p_ - y) % p_);
  };
  std::vector<felem> da = digits(a), db = digits(b);
  std::vector<felem> prod(2 * deg_ - 1, 0);
  for (std::uint32_t i = 0; i < deg_; ++i) {
    if (da[i] == 0) continue;
    for (std::uint32_t j = 0; j < deg_; ++j)
      prod[i + j] = badd(prod[i + j], bmul(da[i], db[j]));
  }
  // reduce by the monic modulus
  for (std::size_t k = prod.size(); k-- > deg_;) {
    felem c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (std::uint32_t i = 0; i < deg_; ++i)
      prod[k - deg_ + i] = bsub(prod[k - deg_ + i], bmul(c, modulus_[i]));
  }
  prod.resize(deg_);
  return from_digits(prod);
}

felem Field::mul(felem a, felem b) const {
  assert(a < q_ && b < q_);
  if (!exp_.empty()) {
    if (a == 0 || b == 0) return 0;
    std::uint64_t s = std::uint64_t(log_[a]) + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
  }
  return mul_generic(a, b);
}

felem Field::inv(felem a) const {
  if (a == 0) fail(errc::division_by_zero, "inverse of zero");
  if (!exp_.empty()) {
    std::uint32_t l = log_[a];
    return exp_[l == 0 ? 0 : q_ - 1 - l];
  }
  return pow(a, static_cast<long long>(q_) - 2);
}

felem Field::div(felem a, felem b) const {
  if (b == 0) fail(errc::division_by_zero, "division by zero");
  return mul(a, inv(b));
}

felem Field::pow(felem a, long long n) const {
  assert(a < q_);
  if (a == 0) {
    if (n > 0) return 0;
    if (n == 0) return 1;
    fail(errc::division_by_zero, "negative power of zero");
  }
  long long m = static_cast<long long>(q_) - 1;
  long long r = n % m;
  if (r < 0) r += m;
  felem result = 1, sq = a;
  while (r > 0) {
    if (r & 1) result = mul(result, sq);
    sq = mul(sq, sq);
    r >>= 1;
  }
  return result;
}

void Field::init_tables() {
  // multiplicative generator: smallest code whose order is q-1
  std::uint64_t m = q_ - 1;
  std::vector<std::uint64_t> primes;
  {
    std::uint64_t t = m;
    for (std::uint64_t d = 2; d * d <= t; ++d)
      if (t % d == 0) {
        primes.push_back(d);
        while (t % d == 0) t /= d;
      }
    if (t > 1) primes.push_back(t);
  }
  auto pow_nolog = [&](felem a, std::uint64_t n) {
    felem result = 1, sq = a;
    while (n > 0) {
      if (n & 1) result = mul_generic(result, sq);
      sq = mul_generic(sq, sq);
      n >>= 1;
    }
    return result;
  };
  for (felem g = 2; g < q_; ++g) {
    bool ok = true;
    for (std::uint64_t pr : primes)
      if (pow_nolog(g, m / pr) == 1) {
        ok = false;
        break;
      }
    if (ok) {
      generator_ = g;
      break;
    }
  }
  if (q_ == 2) generator_ = 1;
  if (q_ > kTableQ) return;
  exp_.resize(m);
  log_.assign(q_, 0);
  felem cur = 1;
  for (std::uint64_t i = 0; i < m; ++i) {
    exp_[i] = cur;
    log_[cur] = std::uint32_t(i);
    cur = mul_generic(cur, generator_);
  }
  assert(cur == 1);
}

FieldPtr Field::make(std::uint64_t p, std::uint32_t e) {
  if (!is_prime(p)) fail(errc::non_prime, "characteristic " + std::to_string(p) + " is not prime");
  if (e < 1) fail(errc::too_large, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxQ) fail(errc::too_large, "field size exceeds 2^20");
  }
  auto f = std::shared_ptr<Field>(new Field());
  f->p_ = p;
  f->q_ = q;
  f->base_q_ = p;
  f->deg_ = e;
  if (e == 1) {
    f->modulus_ = {0, 1};  // x
    f->init_tables();
    return f;
  }
  // lex-least monic irreducible of degree e over GF(p), coefficients
  // compared low-to-high: candidate k encodes (c_0,...,c_{e-1}) base p.
  std::uint64_t pe = 1;
  for (std::uint32_t i = 0; i < e; ++i) pe *= p;
  auto divides = [&](const poly& divisor, const poly& cand) {
    poly r = cand;
    std::size_t nb = pdeg(divisor);
    for (std::size_t na = pdeg(r); na >= nb && na > 0; na = pdeg(r)) {
      std::uint64_t c = r[na - 1];
      std::size_t shift = na - nb;
      for (std::size_t i = 0; i < nb; ++i) {
        std::uint64_t sub = c * divisor[i] % p;
        r[shift + i] = felem((r[shift + i] + p - sub) % p);
      }
    }
    return pdeg(r) == 0;
  };
  for (std::uint64_t k = 0; k < pe; ++k) {
    poly cand(e + 1, 0);
    std::uint64_t t = k;
    for (std::uint32_t i = 0; i < e; ++i) {
      cand[i] = felem(t % p);
      t /= p;
    }
    cand[e] = 1;
    bool irreducible = true;
    // no monic factor of degree 1..e/2
    for (std::uint32_t d = 1; irreducible && 2 * d <= e; ++d) {
      std::uint64_t pd = 1;
      for (std::uint32_t i = 0; i < d; ++i) pd *= p;
      for (std::uint64_t j = 0; j < pd && irreducible; ++j) {
        poly div(d + 1, 0);
        std::uint64_t tt = j;
        for (std::uint32_t i = 0; i < d; ++i) {
          div[i] = felem(tt % p);
          tt /= p;
        }
        div[d] = 1;
        if (divides(div, cand)) irreducible = false;
      }
    }
    if (irreducible) {
      f->modulus_ = cand;
      f->init_tables();
      return f;
    }
  }
  fail(errc::too_large, "no irreducible modulus found");  // unreachable
}

FieldPtr Field::extension(FieldPtr base, std::uint32_t m) {
  if (!base) fail(errc::too_large, "null base field");
  if (m < 1) fail(errc::too_large, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= base->q();
    if (q > kMaxQ) fail(errc::too_large, "field size exceeds 2^20");
  }
  auto f = std::shared_ptr<Field>(new Field());
  f->base_ = base;
  f->p_ = base->p();
  f->q_ = q;
  f->base_q_ = base->q();
  f->deg_ = m;
  if (m == 1) {
    // degenerate tower level; same elements as the base
    f->modulus_ = {0, 1};
    f->init_tables();
    return f;
  }
  const Field& bf = *base;
  auto divides = [&](const poly& divisor, const poly& cand) {
    return pdeg(pmod(bf, cand, divisor)) == 0;
  };
  std::uint64_t qbm = 1;
  for (std::uint32_t i = 0; i < m; ++i) qbm *= bf.q();
  for (std::uint64_t k = 0; k < qbm; ++k) {
    poly cand(m + 1, 0);
    std::uint64_t t = k;
    for (std::uint32_t i = 0; i < m; ++i) {
      cand[i] = felem(t % bf.q());
      t /= bf.q();
    }
    cand[m] = 1;
    bool irreducible = true;
    for (std::uint32_t d = 1; irreducible && 2 * d <= m; ++d) {
      std::uint64_t qd = 1;
      for (std::uint32_t i = 0; i < d; ++i) qd *= bf.q();
      for (std::uint64_t j = 0; j < qd && irreducible; ++j) {
        poly div(d + 1, 0);
        std::uint64_t tt = j;
        for (std::uint32_t i = 0; i < d; ++i) {
          div[i] = felem(tt % bf.q());
          tt /= bf.q();
        }
        div[d] = 1;
        if (divides(div, cand)) irreducible = false;
      }
    }
    if (irreducible) {
      f->modulus_ = cand;
      f->init_tables();
      return f;
    }
  }
  fail(errc::too_large, "no irreducible modulus found");  // unreachable
}

std::string Field::render_poly(const std::vector<felem>& coeffs) {
  std::string out;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(coeffs[i]);
    } else {
      if (coeffs[i] != 1) out += std::to_string(coeffs[i]) + "*";
      out += (i == 1) ? "x" : "x^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

std::string Field::render(felem a) const {
  if (prime_field()) return std::to_string(a);
  return render_poly(digits(a));
}

FieldPtr Field::parse_spec(const std::string& spec) {
  auto caret = spec.find('^');
  try {
    if (caret == std::string::npos) {
      std::uint64_t q = std::stoull(spec);
      std::uint64_t p;
      std::uint32_t e;
      if (!prime_power(q, p, e))
        fail(errc::parse_error, "'" + spec + "' is not a prime power");
      return make(p, e);
    }
    std::uint64_t p = std::stoull(spec.substr(0, caret));
    std::uint32_t e = std::uint32_t(std::stoul(spec.substr(caret + 1)));
    return make(p, e);
  } catch (const error&) {
    throw;
  } catch (const std::exception&) {
    fail(errc::parse_error, "bad field spec '" + spec + "' (want p^e or q)");
  }
}

}  // namespace ptl
