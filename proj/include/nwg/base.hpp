// Shared integer/vector primitives and the error taxonomy used across the library.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace nwg {

using Int = long long;
using Vec = std::vector<Int>;
using BigInt = boost::multiprecision::cpp_int;

// Malformed or out-of-contract user input (CLI exit code 2).
struct input_error : std::runtime_error {
  explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// The framed dimension datum admits no variety: v + alpha_inf is not a root (exit code 3).
struct empty_variety_error : std::runtime_error {
  explicit empty_variety_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Internal consistency failure: computed data contradicts a theorem the code relies on (exit code 4).
struct theorem_error : std::logic_error {
  explicit theorem_error(const std::string& msg) : std::logic_error(msg) {}
};

// Caller violated a documented precondition of a library operation.
struct contract_error : std::logic_error {
  explicit contract_error(const std::string& msg) : std::logic_error(msg) {}
};

inline bool is_zero(const Vec& a) {
  for (Int x : a)
    if (x != 0) return false;
  return true;
}

inline bool all_nonneg(const Vec& a) {
  for (Int x : a)
    if (x < 0) return false;
  return true;
}

inline bool all_nonpos(const Vec& a) {
  for (Int x : a)
    if (x > 0) return false;
  return true;
}

// Componentwise a <= b.
inline bool leq(const Vec& a, const Vec& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Vec add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec scale(Int k, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = k * a[i];
  return r;
}

inline Vec negate(const Vec& a) { return scale(-1, a); }

inline Int dot(const Vec& a, const Vec& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// gcd of all entries; 0 for the zero vector.
inline Int content(const Vec& a) {
  Int g = 0;
  for (Int x : a) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

inline Vec unit_vec(size_t n, size_t i) {
  Vec r(n, 0);
  r[i] = 1;
  return r;
}

inline std::string vec_to_string(const Vec& a) {
  std::string s = "(";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  return s + ")";
}

}  // namespace nwg
