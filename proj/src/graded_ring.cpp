#include "charbound/graded_ring.hpp"

#include <sstream>

#include "charbound/errors.hpp"

namespace charbound {

namespace {

void require_same_cap(const TruncatedClass& a, const TruncatedClass& b, const char* op) {
  if (a.cap() != b.cap()) {
    std::ostringstream msg;
    msg << op << ": cap mismatch (" << a.cap() << " vs " << b.cap() << ")";
    throw StructuralError(msg.str());
  }
}

}  // namespace

TruncatedClass::TruncatedClass(std::size_t cap) : coeffs_(cap + 1) {}

TruncatedClass::TruncatedClass(std::vector<Integer> coeffs, std::size_t cap)
    : coeffs_(std::move(coeffs)) {
  coeffs_.resize(cap + 1);
}

TruncatedClass TruncatedClass::one(std::size_t cap) { return monomial(1, 0, cap); }

TruncatedClass TruncatedClass::monomial(const Integer& coefficient, std::size_t degree,
                                        std::size_t cap) {
  TruncatedClass r(cap);
  if (degree <= cap) r.coeffs_[degree] = coefficient;
  return r;
}

const Integer& TruncatedClass::coeff(std::size_t degree) const {
  static const Integer kZero = 0;
  return degree < coeffs_.size() ? coeffs_[degree] : kZero;
}

bool TruncatedClass::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool TruncatedClass::is_one() const {
  if (coeffs_[0] != 1) return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

TruncatedClass TruncatedClass::truncated(std::size_t new_cap) const {
  if (new_cap > cap()) {
    throw StructuralError("truncated: cannot raise cap from " + std::to_string(cap()) +
                          " to " + std::to_string(new_cap));
  }
  return TruncatedClass(std::vector<Integer>(coeffs_.begin(), coeffs_.begin() + new_cap + 1),
                        new_cap);
}

TruncatedClass TruncatedClass::scaled(const Integer& factor) const {
  TruncatedClass r(*this);
  for (auto& c : r.coeffs_) c *= factor;
  return r;
}

std::string TruncatedClass::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    Integer mag = charbound::abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) out << mag;
    if (i >= 1) out << "h";
    if (i >= 2) out << "^" << i;
  }
  if (first) out << "0";
  return out.str();
}

TruncatedClass add(const TruncatedClass& a, const TruncatedClass& b) {
  require_same_cap(a, b, "add");
  std::vector<Integer> c(a.coeffs().begin(), a.coeffs().end());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coeff(i);
  return TruncatedClass(std::move(c), a.cap());
}

TruncatedClass sub(const TruncatedClass& a, const TruncatedClass& b) {
  require_same_cap(a, b, "sub");
  std::vector<Integer> c(a.coeffs().begin(), a.coeffs().end());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coeff(i);
  return TruncatedClass(std::move(c), a.cap());
}

TruncatedClass mul(const TruncatedClass& a, const TruncatedClass& b) {
  require_same_cap(a, b, "mul");
  const std::size_t cap = a.cap();
  std::vector<Integer> c(cap + 1);
  for (std::size_t i = 0; i <= cap; ++i) {
    if (a.coeff(i) == 0) continue;
    for (std::size_t j = 0; i + j <= cap; ++j) {
      if (b.coeff(j) == 0) continue;
      c[i + j] += a.coeff(i) * b.coeff(j);
    }
  }
  return TruncatedClass(std::move(c), cap);
}

TruncatedClass pow(const TruncatedClass& a, std::uint64_t k) {
  TruncatedClass result = TruncatedClass::one(a.cap());
  TruncatedClass base = a;
  while (k != 0) {
    if ((k & 1U) != 0) result = mul(result, base);
    k >>= 1U;
    if (k != 0) base = mul(base, base);
  }
  return result;
}

TruncatedClass invert_unit(const TruncatedClass& a) {
  if (a.coeff(0) != 1) {
    throw NotAUnitError("invert_unit: constant term is " + a.coeff(0).str() + ", expected 1");
  }
  const std::size_t cap = a.cap();
  std::vector<Integer> b(cap + 1);
  b[0] = 1;
  for (std::size_t i = 1; i <= cap; ++i) {
    Integer s = 0;
    for (std::size_t j = 1; j <= i; ++j) s += a.coeff(j) * b[i - j];
    b[i] = -s;
  }
  return TruncatedClass(std::move(b), cap);
}

}  // namespace charbound
