#include "ipath/exact_score.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>

#include "ipath/errors.hpp"

namespace ipath {

namespace {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw PreconditionError("ExactScore exponent overflow");
  return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw PreconditionError("ExactScore exponent overflow");
  return r;
}

// Certified fixed-point bounds for log2(n): returns (lo, hi) with
// lo/2^frac_bits <= log2(n) <= hi/2^frac_bits.  Digit-recurrence (square
// the mantissa, emit a bit, halve) run twice with floor- and ceil-directed
// rounding; guard bits keep the two runs within one output ulp of truth.
std::pair<BigNat, BigNat> log2_bounds_u64(std::uint64_t n, unsigned frac_bits) {
  unsigned ipart = 63;
  while (!(n >> ipart)) --ipart;  // ipart = floor(log2 n)
  if ((n & (n - 1)) == 0) {
    BigNat exact = BigNat(ipart) << frac_bits;
    return {exact, exact};
  }
  const unsigned guard = 2 * frac_bits + 16;
  const BigNat two_g = BigNat(1) << (guard + 1);
  const BigNat ceil_pad = (BigNat(1) << guard) - 1;
  BigNat m_lo = BigNat(n) << (guard - ipart);
  BigNat m_hi = m_lo;
  BigNat acc_lo = BigNat(ipart) << frac_bits;
  BigNat acc_hi = acc_lo;
  for (unsigned j = 1; j <= frac_bits; ++j) {
    const BigNat bit = BigNat(1) << (frac_bits - j);
    m_lo = (m_lo * m_lo) >> guard;
    if (m_lo >= two_g) {
      acc_lo += bit;
      m_lo >>= 1;
    }
    m_hi = (m_hi * m_hi + ceil_pad) >> guard;
    if (m_hi >= two_g) {
      acc_hi += bit;
      m_hi = (m_hi + 1) >> 1;
    }
  }
  acc_hi += 1;  // the discarded tail of the hi run is under one ulp
  return {acc_lo, acc_hi};
}

// Prime log bounds are pure and reused heavily; cache per (prime, precision).
const std::pair<BigNat, BigNat>& cached_log2_bounds(std::uint64_t prime,
                                                    unsigned frac_bits) {
  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, unsigned>, std::pair<BigNat, BigNat>>
      cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(prime, frac_bits);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, log2_bounds_u64(prime, frac_bits)).first;
  return it->second;
}

// Sum of exponent-weighted prime log bounds for a factor map.
std::pair<BigNat, BigNat> score_log2_bounds(const ExactScore::Factors& f,
                                            unsigned frac_bits) {
  BigNat lo = 0, hi = 0;
  for (const auto& [p, e] : f) {
    const auto& [plo, phi] = cached_log2_bounds(p, frac_bits);
    lo += plo * e;
    hi += phi * e;
  }
  return {lo, hi};
}

// Round-half-up of (v / 2^frac_bits) * 10^t as an integer, exact.
BigNat scale_round_nearest(const BigNat& v, unsigned frac_bits, int t) {
  BigNat num = 2 * v;
  BigNat den = BigNat(1) << (frac_bits + 1);
  if (t >= 0)
    num *= boost::multiprecision::pow(BigNat(10), static_cast<unsigned>(t));
  else {
    BigNat p = boost::multiprecision::pow(BigNat(10), static_cast<unsigned>(-t));
    den *= p;
  }
  num += den >> 1;
  return num / den;
}

// Render v/2^frac_bits (>= 1) to `digits` significant digits, half-up.
std::string render_decimal(const BigNat& v, unsigned frac_bits,
                           unsigned digits) {
  int e10 = 0;
  BigNat p10 = 10;
  while (v >= (p10 << frac_bits)) {
    ++e10;
    p10 *= 10;
  }
  BigNat n = scale_round_nearest(v, frac_bits, static_cast<int>(digits) - 1 - e10);
  BigNat cap = boost::multiprecision::pow(BigNat(10), digits);
  if (n >= cap) {  // rounding carried into one more decade
    n /= 10;
    ++e10;
  }
  std::string ds = n.str();
  while (ds.size() < digits) ds.insert(ds.begin(), '0');
  std::string out;
  if (e10 >= 0 && static_cast<unsigned>(e10) < digits) {
    out = ds.substr(0, e10 + 1);
    if (static_cast<unsigned>(e10 + 1) < digits) out += "." + ds.substr(e10 + 1);
  } else {
    out = ds.substr(0, 1);
    if (digits > 1) out += "." + ds.substr(1);
    out += "e+" + std::to_string(e10);
  }
  return out;
}

}  // namespace

ExactScore ExactScore::from_natural(std::uint64_t value) {
  if (value == 0) throw PreconditionError("ExactScore encodes naturals >= 1");
  ExactScore s;
  for (std::uint64_t d = 2; d * d <= value; ++d) {
    if (value % d) continue;
    std::uint64_t e = 0;
    while (value % d == 0) {
      value /= d;
      ++e;
    }
    s.factors_.emplace_back(d, e);
  }
  if (value > 1) s.factors_.emplace_back(value, 1);
  return s;
}

ExactScore ExactScore::prime_power(std::uint64_t prime, std::uint64_t exponent) {
  if (!is_prime_u64(prime))
    throw PreconditionError("prime_power: " + std::to_string(prime) +
                            " is not prime");
  ExactScore s;
  if (exponent > 0) s.factors_.emplace_back(prime, exponent);
  return s;
}

ExactScore ExactScore::factorial(std::uint64_t n) {
  ExactScore s;
  for (std::uint64_t i = 2; i <= n; ++i) s = s * from_natural(i);
  return s;
}

ExactScore ExactScore::operator*(const ExactScore& rhs) const {
  ExactScore out;
  out.factors_.reserve(factors_.size() + rhs.factors_.size());
  auto a = factors_.begin(), b = rhs.factors_.begin();
  while (a != factors_.end() || b != rhs.factors_.end()) {
    if (b == rhs.factors_.end() || (a != factors_.end() && a->first < b->first))
      out.factors_.push_back(*a++);
    else if (a == factors_.end() || b->first < a->first)
      out.factors_.push_back(*b++);
    else {
      out.factors_.emplace_back(a->first, checked_add(a->second, b->second));
      ++a;
      ++b;
    }
  }
  return out;
}

ExactScore ExactScore::pow(std::uint64_t k) const {
  ExactScore out;
  if (k == 0) return out;
  out.factors_.reserve(factors_.size());
  for (const auto& [p, e] : factors_)
    out.factors_.emplace_back(p, checked_mul(e, k));
  return out;
}

BigNat ExactScore::materialize() const {
  BigNat n = 1;
  for (const auto& [p, e] : factors_) {
    if (e > std::numeric_limits<unsigned>::max())
      throw PreconditionError("materialize: exponent too large");
    n *= boost::multiprecision::pow(BigNat(p), static_cast<unsigned>(e));
  }
  return n;
}

std::string ExactScore::factored_string() const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, e] : factors_) {
    if (!first) os << " * ";
    os << p << "^" << e;
    first = false;
  }
  return os.str();
}

ExactScore ExactScore::parse_factored(std::string_view text) {
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError(0, "bad factored score '" + std::string(text) + "': " + why);
  };
  // Strip surrounding blanks.
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text == "1") return ExactScore();
  ExactScore s;
  std::uint64_t last_prime = 0;
  std::size_t pos = 0;
  auto read_u64 = [&]() -> std::uint64_t {
    std::uint64_t v = 0;
    auto [ptr, ec] =
        std::from_chars(text.data() + pos, text.data() + text.size(), v);
    if (ec != std::errc() || ptr == text.data() + pos)
      throw fail("expected a number at offset " + std::to_string(pos));
    pos = static_cast<std::size_t>(ptr - text.data());
    return v;
  };
  auto skip_ws = [&]() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  while (true) {
    std::uint64_t p = read_u64();
    if (pos >= text.size() || text[pos] != '^') throw fail("expected '^'");
    ++pos;
    std::uint64_t e = read_u64();
    if (!is_prime_u64(p)) throw fail(std::to_string(p) + " is not prime");
    if (e == 0) throw fail("exponent must be >= 1");
    if (p <= last_prime) throw fail("primes must be strictly ascending");
    last_prime = p;
    s.factors_.emplace_back(p, e);
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '*') throw fail("expected '*'");
    ++pos;
    skip_ws();
  }
  return s;
}

std::string ExactScore::approx_decimal(unsigned digits) const {
  if (digits == 0) throw PreconditionError("approx_decimal: digits must be >= 1");
  if (factors_.empty()) {
    std::string out = "0";
    if (digits > 1) out += "." + std::string(digits - 1, '0');
    return out;
  }
  // Nonzero scores are >= 1 (value >= 2), so the renderer never sees
  // values below one.  Refine until both bounds round identically.
  for (unsigned frac_bits = 64;; frac_bits *= 2) {
    auto [lo, hi] = score_log2_bounds(factors_, frac_bits);
    std::string a = render_decimal(lo, frac_bits, digits);
    std::string b = render_decimal(hi, frac_bits, digits);
    if (a == b) return a;
    if (frac_bits > (1u << 20))
      throw PreconditionError("approx_decimal: failed to certify digits");
  }
}

std::strong_ordering compare(const ExactScore& a, const ExactScore& b) {
  if (a == b) return std::strong_ordering::equal;
  // Cancel shared prime powers; distinct residual maps cannot encode the
  // same natural, so the residues decide the order.
  ExactScore::Factors ra, rb;
  auto ia = a.factors().begin(), ib = b.factors().begin();
  while (ia != a.factors().end() || ib != b.factors().end()) {
    if (ib == b.factors().end() ||
        (ia != a.factors().end() && ia->first < ib->first))
      ra.push_back(*ia++);
    else if (ia == a.factors().end() || ib->first < ia->first)
      rb.push_back(*ib++);
    else {
      std::uint64_t m = std::min(ia->second, ib->second);
      if (ia->second > m) ra.emplace_back(ia->first, ia->second - m);
      if (ib->second > m) rb.emplace_back(ib->first, ib->second - m);
      ++ia;
      ++ib;
    }
  }
  if (ra.empty() && rb.empty()) return std::strong_ordering::equal;
  if (ra.empty()) return std::strong_ordering::less;
  if (rb.empty()) return std::strong_ordering::greater;
  // Certified integer log bounds separate almost every pair cheaply.
  for (unsigned frac_bits : {32u, 256u, 2048u}) {
    auto [alo, ahi] = score_log2_bounds(ra, frac_bits);
    auto [blo, bhi] = score_log2_bounds(rb, frac_bits);
    if (ahi < blo) return std::strong_ordering::less;
    if (bhi < alo) return std::strong_ordering::greater;
  }
  // Near-tie: decide by materialized integers.
  auto materialize_factors = [](const ExactScore::Factors& f) {
    BigNat n = 1;
    for (const auto& [p, e] : f)
      n *= boost::multiprecision::pow(BigNat(p), static_cast<unsigned>(e));
    return n;
  };
  BigNat na = materialize_factors(ra), nb = materialize_factors(rb);
  if (na < nb) return std::strong_ordering::less;
  if (nb < na) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace ipath
