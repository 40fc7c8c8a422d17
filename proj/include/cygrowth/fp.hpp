#pragma once

#include <cstdint>
#include <string>

#include "cygrowth/numeric.hpp"

namespace cygrowth {

/// Arithmetic modulo the Mersenne prime 2^31 - 1. Drop-in scalar for the
/// dimension engine's elimination: ranks over F_p bound the rational ranks
/// from below, so prime-field dimension counts can only over-count.
class Fp31 {
 public:
  static constexpr uint64_t P = 2147483647ull;

  Fp31() = default;
  explicit Fp31(uint64_t v) : v_(v % P) {}
  explicit Fp31(const Rat& r) {
    uint64_t num = mpz_fdiv_ui(r.get_num().get_mpz_t(), P);
    uint64_t den = mpz_fdiv_ui(r.get_den().get_mpz_t(), P);
    v_ = mul(num, inv(den));
  }

  bool operator==(const Fp31& o) const { return v_ == o.v_; }
  bool operator!=(const Fp31& o) const { return v_ != o.v_; }
  bool is_zero() const { return v_ == 0; }

  Fp31 operator+(const Fp31& o) const { return from_raw((v_ + o.v_) % P); }
  Fp31 operator-(const Fp31& o) const { return from_raw((v_ + P - o.v_) % P); }
  Fp31 operator*(const Fp31& o) const { return from_raw(mul(v_, o.v_)); }
  Fp31 operator/(const Fp31& o) const { return from_raw(mul(v_, inv(o.v_))); }
  Fp31 operator-() const { return from_raw(v_ == 0 ? 0 : P - v_); }
  Fp31& operator+=(const Fp31& o) { return *this = *this + o; }
  Fp31& operator-=(const Fp31& o) { return *this = *this - o; }
  Fp31& operator*=(const Fp31& o) { return *this = *this * o; }
  Fp31& operator/=(const Fp31& o) { return *this = *this / o; }

  std::string str() const { return std::to_string(v_); }

 private:
  static Fp31 from_raw(uint64_t v) {
    Fp31 f;
    f.v_ = v;
    return f;
  }
  static uint64_t mul(uint64_t a, uint64_t b) { return (a * b) % P; }
  static uint64_t inv(uint64_t a) {
    // Fermat: a^(P-2). The modulus is prime and a != 0 for valid inputs.
    uint64_t result = 1, base = a % P, e = P - 2;
    while (e) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }

  uint64_t v_ = 0;
};

inline bool scalar_is_zero(const Rat& v) { return v == 0; }
inline bool scalar_is_zero(const Fp31& v) { return v.is_zero(); }
inline std::string scalar_str(const Rat& v) { return rat_str(v); }
inline std::string scalar_str(const Fp31& v) { return v.str(); }

}  // namespace cygrowth
