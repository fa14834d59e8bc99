#include "mayan/cycles.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "json.hpp"

#include "mayan/errors.hpp"

namespace mayan {

u64 gcd(u64 a, u64 b) noexcept {
  while (b != 0) {
    const u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u64 lcm(u64 a, u64 b) {
  if (a == 0 || b == 0) throw DomainError("lcm requires positive arguments");
  const unsigned __int128 wide = static_cast<unsigned __int128>(a / gcd(a, b)) * b;
  if (wide > std::numeric_limits<u64>::max()) {
    throw ArithmeticOverflow("lcm(" + std::to_string(a) + ", " + std::to_string(b) +
                             ") exceeds 64 bits");
  }
  return static_cast<u64>(wide);
}

u64 lcm_all(std::span<const u64> periods) {
  if (periods.empty()) throw std::invalid_argument("lcm_all of an empty list");
  u64 acc = 1;
  for (u64 p : periods) acc = lcm(acc, p);
  return acc;
}

namespace {

// Modular inverse of a modulo m (gcd(a, m) == 1) by extended Euclid.
u64 inverse_mod(u64 a, u64 m) {
  __int128 t = 0, new_t = 1;
  __int128 r = m, new_r = a % m;
  while (new_r != 0) {
    const __int128 q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += m;
  return static_cast<u64>(t);
}

}  // namespace

std::optional<u64> crt_pair(u64 r1, u64 m1, u64 r2, u64 m2) {
  if (m1 == 0 || m2 == 0) throw DomainError("crt_pair requires positive moduli");
  r1 %= m1;
  r2 %= m2;
  const u64 g = gcd(m1, m2);
  const u64 diff = (r2 + m2 - r1 % m2) % m2;  // (r2 - r1) mod m2
  if (diff % g != 0) return std::nullopt;
  // x = r1 + m1 * k, with (m1/g) * k ≡ diff/g (mod m2/g)
  const u64 m2g = m2 / g;
  const u64 k = m2g == 1 ? 0
                         : static_cast<u64>(static_cast<unsigned __int128>(diff / g) *
                                            inverse_mod((m1 / g) % m2g, m2g) % m2g);
  const unsigned __int128 x = static_cast<unsigned __int128>(r1) + static_cast<unsigned __int128>(m1) * k;
  return static_cast<u64>(x % lcm(m1, m2));
}

u64 Factorization::product() const {
  u64 p = 1;
  for (const auto& f : factors)
    for (unsigned e = 0; e < f.exponent; ++e) p *= f.prime;
  return p;
}

std::string Factorization::str() const {
  if (factors.empty()) return "1";
  std::string out;
  for (const auto& f : factors) {
    if (!out.empty()) out += '*';
    out += std::to_string(f.prime);
    if (f.exponent > 1) out += '^' + std::to_string(f.exponent);
  }
  return out;
}

Factorization factorize(u64 n) {
  if (n == 0) throw DomainError("factorize(0) is undefined");
  Factorization out;
  for (u64 p = 2; p <= n / p; p += (p == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.factors.push_back({p, e});
  }
  if (n > 1) out.factors.push_back({n, 1});
  return out;
}

std::string_view to_string(CycleCategory c) {
  switch (c) {
    case CycleCategory::kPlanet: return "planet";
    case CycleCategory::kLunarSemester: return "lunar_semester";
    case CycleCategory::kPentalunex: return "pentalunex";
  }
  return "unknown";
}

const std::vector<CanonicalCycle>& registry() {
  static const std::vector<CanonicalCycle> cycles = [] {
    struct Row {
      const char* name;
      u64 period;
      CycleCategory category;
    };
    constexpr Row rows[] = {
        {"Mercury", 116, CycleCategory::kPlanet},
        {"Venus", 584, CycleCategory::kPlanet},
        {"Earth", 365, CycleCategory::kPlanet},
        {"Mars", 780, CycleCategory::kPlanet},
        {"Jupiter", 399, CycleCategory::kPlanet},
        {"Saturn", 378, CycleCategory::kPlanet},
        {"Lunar semester 177", 177, CycleCategory::kLunarSemester},
        {"Lunar semester 178", 178, CycleCategory::kLunarSemester},
        {"Pentalunex", 148, CycleCategory::kPentalunex},
    };
    std::vector<CanonicalCycle> v;
    for (const Row& r : rows) v.push_back({r.name, r.period, factorize(r.period), r.category});
    return v;
  }();
  return cycles;
}

const CanonicalCycle& cycle(std::string_view name) {
  const auto& all = registry();
  auto it = std::find_if(all.begin(), all.end(), [&](const auto& c) { return c.name == name; });
  if (it == all.end()) throw std::out_of_range("no canonical cycle named " + std::string(name));
  return *it;
}

std::vector<u64> synodic_and_semester_periods() {
  std::vector<u64> out;
  for (const auto& c : registry())
    if (c.category != CycleCategory::kPentalunex) out.push_back(c.period_days);
  return out;
}

std::string registry_csv() {
  std::string out = "name,period_days,factorization,category\n";
  for (const auto& c : registry()) {
    out += c.name + ',' + std::to_string(c.period_days) + ',' + c.factorization.str() + ',' +
           std::string(to_string(c.category)) + '\n';
  }
  return out;
}

std::string registry_json() {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : registry()) {
    arr.push_back({{"name", c.name},
                   {"period_days", c.period_days},
                   {"factorization", c.factorization.str()},
                   {"category", to_string(c.category)}});
  }
  return arr.dump(2) + "\n";
}

}  // namespace mayan
