#ifndef IPATH_EXACT_SCORE_HPP
#define IPATH_EXACT_SCORE_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ipath {

using BigNat = boost::multiprecision::cpp_int;

/// A score held exactly.  The real score s is log2 of a positive natural N;
/// we store N factored as prime -> exponent, so adding scores is multiplying
/// naturals (exponent-wise sums) and score comparison is integer comparison.
/// No operation here ever touches floating point.
///
/// Instances are immutable; all operations return new values.
class ExactScore {
public:
  /// (prime, exponent) with primes strictly ascending, exponents >= 1.
  using Factors = std::vector<std::pair<std::uint64_t, std::uint64_t>>;

  /// Score 0, i.e. the natural 1 (empty factor map).
  ExactScore() = default;

  /// Exact factorization of `value`; value must be >= 1.
  static ExactScore from_natural(std::uint64_t value);

  /// p^e with p prime (checked) and e >= 0 (e == 0 gives score 0).
  static ExactScore prime_power(std::uint64_t prime, std::uint64_t exponent);

  /// n! factored, n >= 0.
  static ExactScore factorial(std::uint64_t n);

  const Factors& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }

  /// Score addition = product of the encoded naturals.
  ExactScore operator*(const ExactScore& rhs) const;

  /// Score scaling = k-th power of the encoded natural.
  ExactScore pow(std::uint64_t k) const;

  /// The encoded natural, materialized.
  BigNat materialize() const;

  /// Canonical rendering: "2^3 * 5^2", or "1" for the empty map.
  std::string factored_string() const;
  static ExactScore parse_factored(std::string_view text);

  /// Decimal rendering of log2(N) to `digits` significant digits.  Working
  /// precision is raised until the rounded digits are provably stable, so
  /// every printed digit is certified.
  std::string approx_decimal(unsigned digits) const;

  /// Structural equality; by unique factorization this is value equality.
  bool operator==(const ExactScore& rhs) const { return factors_ == rhs.factors_; }

private:
  Factors factors_;
};

/// Exact ordering of the encoded scores.  Shared prime powers are cancelled
/// first; the residues are separated by certified integer log bounds where
/// possible and by materialized comparison otherwise.
std::strong_ordering compare(const ExactScore& a, const ExactScore& b);

}  // namespace ipath

#endif
