#include "hochster/coefficients.hpp"

#include "hochster/errors.hpp"

namespace hochster {

PrimeField::value_type PrimeField::inv(value_type a) const {
  if (a == 0) fail(ErrorCode::invalid_argument, "inverse of zero");
  // Fermat: a^(p-2).
  std::uint64_t result = 1, base = a, e = p - 2;
  while (e != 0) {
    if (e & 1U) result = result * base % p;
    base = base * base % p;
    e >>= 1U;
  }
  return static_cast<value_type>(result);
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Coefficients Coefficients::prime(std::uint32_t p) {
  if (!is_prime(p) || p > (std::uint32_t{1} << 31))
    fail(ErrorCode::invalid_argument, std::to_string(p) + " is not a supported prime");
  return {Kind::prime, p};
}

Coefficients Coefficients::parse(const std::string& spec) {
  if (spec == "z" || spec == "Z") return integers();
  if (spec == "q" || spec == "Q") return rationals();
  if (spec.rfind("fp:", 0) == 0) {
    std::size_t used = 0;
    unsigned long long p = 0;
    try {
      p = std::stoull(spec.substr(3), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != spec.size() - 3 || p > (1ULL << 31))
      fail(ErrorCode::invalid_argument, "malformed coefficient spec '" + spec + "'");
    return prime(static_cast<std::uint32_t>(p));
  }
  fail(ErrorCode::invalid_argument, "coefficient spec must be z, q or fp:P (got '" + spec + "')");
}

std::string Coefficients::to_string() const {
  switch (kind) {
    case Kind::integers: return "z";
    case Kind::rationals: return "q";
    case Kind::prime: return "fp:" + std::to_string(p);
  }
  return "q";
}

}  // namespace hochster
