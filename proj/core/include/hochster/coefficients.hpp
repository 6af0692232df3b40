#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "hochster/rational.hpp"

namespace hochster {

// Coefficient policies. Fields expose inv(); Integers does not.

struct Rationals {
  using value_type = Rational;
  static constexpr bool is_field = true;

  value_type zero() const { return {}; }
  value_type one() const { return 1; }
  value_type from_int(long long v) const { return v; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type inv(const value_type& a) const { return a.inverse(); }
  bool is_zero(const value_type& a) const { return a.is_zero(); }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }
  std::string format(const value_type& a) const { return a.to_string(); }
  std::string name() const { return "Q"; }
  int characteristic() const { return 0; }
};

struct PrimeField {
  using value_type = std::uint32_t;
  static constexpr bool is_field = true;
  std::uint32_t p = 2;

  value_type zero() const { return 0; }
  value_type one() const { return 1 % p; }
  value_type from_int(long long v) const {
    long long r = v % static_cast<long long>(p);
    return static_cast<value_type>(r < 0 ? r + p : r);
  }
  value_type add(value_type a, value_type b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<value_type>(s >= p ? s - p : s);
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : static_cast<value_type>(a + (p - b)); }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(std::uint64_t{a} * b % p);
  }
  value_type neg(value_type a) const { return a == 0 ? 0 : p - a; }
  value_type inv(value_type a) const;
  bool is_zero(value_type a) const { return a == 0; }
  bool equal(value_type a, value_type b) const { return a == b; }
  std::string format(value_type a) const { return std::to_string(a); }
  std::string name() const { return "F" + std::to_string(p); }
  int characteristic() const { return static_cast<int>(p); }
};

struct Integers {
  using value_type = mpz_class;
  static constexpr bool is_field = false;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long long v) const { return mpz_class(static_cast<long>(v)); }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  bool is_zero(const value_type& a) const { return a == 0; }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }
  std::string format(const value_type& a) const { return a.get_str(); }
  std::string name() const { return "Z"; }
  int characteristic() const { return 0; }
};

bool is_prime(std::uint64_t p);

// Runtime coefficient choice: "z", "q" or "fp:P".
struct Coefficients {
  enum class Kind { integers, rationals, prime };
  Kind kind = Kind::rationals;
  std::uint32_t p = 0;

  static Coefficients integers() { return {Kind::integers, 0}; }
  static Coefficients rationals() { return {Kind::rationals, 0}; }
  static Coefficients prime(std::uint32_t p);
  // Throws InvalidArgument for malformed specs or composite P.
  static Coefficients parse(const std::string& spec);

  std::string to_string() const;
  bool is_field() const { return kind != Kind::integers; }
  friend bool operator==(const Coefficients&, const Coefficients&) = default;
};

// Calls f with the matching policy object.
template <class F>
decltype(auto) dispatch(const Coefficients& c, F&& f) {
  switch (c.kind) {
    case Coefficients::Kind::integers: return std::forward<F>(f)(Integers{});
    case Coefficients::Kind::prime: return std::forward<F>(f)(PrimeField{c.p});
    case Coefficients::Kind::rationals: break;
  }
  return std::forward<F>(f)(Rationals{});
}

// Same as dispatch, restricted to fields; Integers is mapped to Rationals.
template <class F>
decltype(auto) dispatch_field(const Coefficients& c, F&& f) {
  if (c.kind == Coefficients::Kind::prime) return std::forward<F>(f)(PrimeField{c.p});
  return std::forward<F>(f)(Rationals{});
}

}  // namespace hochster
