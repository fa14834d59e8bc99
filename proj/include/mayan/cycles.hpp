#pragma once

// Integer number theory over 64-bit values plus the registry of canonical
// planetary and lunar cycles.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mayan {

using u64 = std::uint64_t;
using i64 = std::int64_t;

/// gcd(0, 0) == 0.
u64 gcd(u64 a, u64 b) noexcept;

/// Least common multiple with a 128-bit intermediate. Throws
/// ArithmeticOverflow if the result does not fit in 64 bits and
/// DomainError when either argument is zero.
u64 lcm(u64 a, u64 b);

/// Order-independent fold of lcm. Throws std::invalid_argument on an empty list.
u64 lcm_all(std::span<const u64> periods);

/// Floor modulo: result in [0, m) for m > 0.
constexpr i64 floor_mod(i64 a, i64 m) noexcept {
  const i64 r = a % m;
  return r < 0 ? r + m : r;
}

constexpr i64 floor_div(i64 a, i64 m) noexcept {
  const i64 q = a / m;
  return (a % m != 0 && ((a < 0) != (m < 0))) ? q - 1 : q;
}

/// Solution x of x ≡ r1 (mod m1), x ≡ r2 (mod m2), for moduli that need
/// not be coprime. Returns the least non-negative solution, which is unique
/// modulo lcm(m1, m2), or nullopt when the system is inconsistent.
std::optional<u64> crt_pair(u64 r1, u64 m1, u64 r2, u64 m2);

struct PrimePower {
  u64 prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Canonical factorization: primes strictly ascending, exponents >= 1.
struct Factorization {
  std::vector<PrimePower> factors;

  u64 product() const;
  /// Renders "2^2*29"; the empty factorization (of 1) renders as "1".
  std::string str() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Trial division up to sqrt(n). factorize(1) is empty; n must be >= 1.
Factorization factorize(u64 n);

enum class CycleCategory { kPlanet, kLunarSemester, kPentalunex };

std::string_view to_string(CycleCategory c);

struct CanonicalCycle {
  std::string name;
  u64 period_days;
  Factorization factorization;
  CycleCategory category;
};

/// The nine canonical cycles in table order: six planets, the two lunar
/// semesters, and the pentalunex.
const std::vector<CanonicalCycle>& registry();

/// Lookup by name (case-sensitive). Throws std::out_of_range.
const CanonicalCycle& cycle(std::string_view name);

/// Periods of every registry entry except the pentalunex.
std::vector<u64> synodic_and_semester_periods();

/// CSV with header "name,period_days,factorization,category".
std::string registry_csv();
/// JSON array of {name, period_days, factorization, category}.
std::string registry_json();

}  // namespace mayan
