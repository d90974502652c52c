#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "charbound/integer.hpp"

namespace charbound {

/// Polynomial in the hyperplane class h with exact integer coefficients,
/// truncated above degree `cap`. Models the subring of H^*(X) generated by h
/// when cap == dim X.
///
/// The coefficient vector always has cap + 1 entries. Values are immutable;
/// every operation returns a fresh class.
class TruncatedClass {
 public:
  /// Zero class at the given cap.
  explicit TruncatedClass(std::size_t cap);

  /// Coefficients beyond `cap` are dropped, missing ones are zero.
  TruncatedClass(std::vector<Integer> coeffs, std::size_t cap);

  static TruncatedClass zero(std::size_t cap) { return TruncatedClass(cap); }
  static TruncatedClass one(std::size_t cap);
  /// coefficient * h^degree (zero if degree > cap).
  static TruncatedClass monomial(const Integer& coefficient, std::size_t degree,
                                 std::size_t cap);
  static TruncatedClass hyperplane(std::size_t cap) { return monomial(1, 1, cap); }

  std::size_t cap() const { return coeffs_.size() - 1; }
  const Integer& coeff(std::size_t degree) const;
  std::span<const Integer> coeffs() const { return coeffs_; }
  const Integer& top() const { return coeffs_.back(); }

  bool is_zero() const;
  bool is_one() const;

  /// Drop to a smaller cap. Raising the cap is rejected since the discarded
  /// terms cannot be recovered.
  TruncatedClass truncated(std::size_t new_cap) const;
  TruncatedClass scaled(const Integer& factor) const;
  TruncatedClass negated() const { return scaled(-1); }

  std::string to_string() const;

  friend bool operator==(const TruncatedClass&, const TruncatedClass&) = default;

 private:
  std::vector<Integer> coeffs_;
};

TruncatedClass add(const TruncatedClass& a, const TruncatedClass& b);
TruncatedClass sub(const TruncatedClass& a, const TruncatedClass& b);
TruncatedClass mul(const TruncatedClass& a, const TruncatedClass& b);
TruncatedClass pow(const TruncatedClass& a, std::uint64_t k);

/// Inverse of a class with constant term 1, by the geometric-series
/// recursion b_i = -sum_{j=1..i} a_j b_{i-j}.
TruncatedClass invert_unit(const TruncatedClass& a);

inline TruncatedClass operator+(const TruncatedClass& a, const TruncatedClass& b) {
  return add(a, b);
}
inline TruncatedClass operator-(const TruncatedClass& a, const TruncatedClass& b) {
  return sub(a, b);
}
inline TruncatedClass operator-(const TruncatedClass& a) { return a.negated(); }
inline TruncatedClass operator*(const TruncatedClass& a, const TruncatedClass& b) {
  return mul(a, b);
}

}  // namespace charbound
