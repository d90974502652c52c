#include "charbound/chern.hpp"

#include <optional>

#include "charbound/detail/determinant.hpp"
#include "charbound/errors.hpp"

namespace charbound {

namespace {

std::size_t cap_of(const CompleteIntersection& ci) {
  return static_cast<std::size_t>(ci.dimension());
}

void require_cap(const CompleteIntersection& ci, std::size_t cap, const char* op) {
  if (cap != cap_of(ci)) {
    throw StructuralError(std::string(op) + ": class cap " + std::to_string(cap) +
                          " does not match dim " + ci.label() + " = " +
                          std::to_string(ci.dimension()));
  }
}

// Splits a total class into its graded pieces c_0..c_rank.
ChernVector from_total_class(const TruncatedClass& total, int rank) {
  std::vector<TruncatedClass> classes;
  classes.reserve(static_cast<std::size_t>(rank) + 1);
  for (int i = 0; i <= rank; ++i) {
    classes.push_back(TruncatedClass::monomial(total.coeff(static_cast<std::size_t>(i)),
                                               static_cast<std::size_t>(i), total.cap()));
  }
  return ChernVector(rank, std::move(classes));
}

void require_squared_degree(const CompleteIntersection& ci, const MultiIndex& j, const char* op) {
  if (j.empty()) return;
  if (4 * j.weight() != ci.dimension()) {
    throw DegreeError(std::string(op) + ": index " + j.to_string() + " has degree " +
                      std::to_string(4 * j.weight()) + " after squaring, variety " +
                      ci.label() + " has dimension " + std::to_string(ci.dimension()));
  }
}

}  // namespace

ChernVector::ChernVector(int rank, std::vector<TruncatedClass> classes)
    : rank_(rank), classes_(std::move(classes)) {
  if (rank_ < 0 || classes_.size() != static_cast<std::size_t>(rank_) + 1) {
    throw StructuralError("ChernVector: expected rank + 1 classes");
  }
  for (const auto& c : classes_) {
    if (c.cap() != classes_.front().cap()) throw StructuralError("ChernVector: mixed caps");
  }
  if (!classes_.front().is_one()) throw StructuralError("ChernVector: c_0 must be 1");
}

TruncatedClass ChernVector::c(int i) const {
  if (i < 0 || i > rank_) return TruncatedClass::zero(cap());
  return classes_[static_cast<std::size_t>(i)];
}

bool ChernVector::is_monomial() const {
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    for (std::size_t k = 0; k <= cap(); ++k) {
      if (k != i && classes_[i].coeff(k) != 0) return false;
    }
  }
  return true;
}

ChernVector tangent_chern(const CompleteIntersection& ci) {
  const std::size_t n = cap_of(ci);
  const TruncatedClass h = TruncatedClass::hyperplane(n);
  const TruncatedClass one = TruncatedClass::one(n);
  TruncatedClass total = pow(one + h, static_cast<std::uint64_t>(ci.ambient_dim() + 1));
  for (int d : ci.multidegree()) total = total * invert_unit(one + h.scaled(d));
  return from_total_class(total, ci.dimension());
}

ChernVector cotangent_chern(const CompleteIntersection& ci) {
  ChernVector t = tangent_chern(ci);
  std::vector<TruncatedClass> classes;
  for (int i = 0; i <= t.rank(); ++i) classes.push_back(i % 2 == 0 ? t.c(i) : -t.c(i));
  return ChernVector(t.rank(), std::move(classes));
}

ChernVector twist_chern(const ChernVector& e, const Integer& t) {
  const int r = e.rank();
  const std::size_t cap = e.cap();
  std::vector<TruncatedClass> classes;
  classes.reserve(static_cast<std::size_t>(r) + 1);
  for (int i = 0; i <= r; ++i) {
    TruncatedClass ci = TruncatedClass::zero(cap);
    for (int j = 0; j <= i; ++j) {
      const Integer coefficient = binomial(r - j, i - j) * ipow(t, static_cast<std::uint64_t>(i - j));
      if (coefficient == 0) continue;
      ci = ci + TruncatedClass::monomial(coefficient, static_cast<std::size_t>(i - j), cap) * e.c(j);
    }
    classes.push_back(std::move(ci));
  }
  return ChernVector(r, std::move(classes));
}

Integer pair_with_fundamental_class(const CompleteIntersection& ci, const TruncatedClass& cls) {
  require_cap(ci, cls.cap(), "pair_with_fundamental_class");
  return cls.top() * ci.degree();
}

Integer chern_number(const CompleteIntersection& ci, const ChernVector& e, const MultiIndex& index) {
  const int n = ci.dimension();
  if (index.weight() > n) {
    throw DegreeError("chern_number: |I| = " + std::to_string(index.weight()) + " exceeds dim " +
                      std::to_string(n) + " of " + ci.label());
  }
  require_cap(ci, e.cap(), "chern_number");
  TruncatedClass product = TruncatedClass::monomial(1, static_cast<std::size_t>(n - index.weight()),
                                                    e.cap());
  for (int i : index.entries) product = product * e.c(i);
  return pair_with_fundamental_class(ci, product);
}

Integer euler_characteristic(const CompleteIntersection& ci) {
  return chern_number(ci, tangent_chern(ci), MultiIndex({ci.dimension()}));
}

Integer canonical_class(const CompleteIntersection& ci) {
  Integer k = -(ci.ambient_dim() + 1);
  for (int d : ci.multidegree()) k += d;
  return k;
}

Integer L_class(const CompleteIntersection& ci) {
  Integer l = canonical_class(ci) + (ci.dimension() + 2);
  if (l < 1) {
    throw InconsistencyError("L_X = " + l.str() + "h on " + ci.label() + " is not ample");
  }
  return l;
}

std::vector<Integer> hL_sequence(const CompleteIntersection& ci) {
  const Integer l = L_class(ci);
  const Integer d = ci.degree();
  std::vector<Integer> out;
  for (int i = 0; i <= ci.dimension(); ++i) out.push_back(ipow(l, static_cast<std::uint64_t>(i)) * d);
  return out;
}

TruncatedClass schur_class(const ChernVector& e, const Partition& lambda) {
  if (!lambda.empty() && lambda.part(0) > e.rank()) {
    throw StructuralError("schur_class: partition " + lambda.to_string() +
                          " has a part larger than rank " + std::to_string(e.rank()));
  }
  const std::size_t r = lambda.length();
  return detail::expand_determinant(
      r, TruncatedClass::one(e.cap()), TruncatedClass::zero(e.cap()),
      [&](const TruncatedClass& acc, std::size_t row, std::size_t col) -> std::optional<TruncatedClass> {
        const int idx = lambda.part(row) - static_cast<int>(row) + static_cast<int>(col);
        if (idx < 0 || idx > e.rank()) return std::nullopt;
        if (idx == 0) return acc;
        return acc * e.c(idx);
      });
}

TruncatedClass gamma_poly(const ChernVector& e, int r, const Integer& t) {
  if (r < 0 || r > e.rank()) {
    throw StructuralError("gamma_poly: r = " + std::to_string(r) + " outside [0, rank]");
  }
  TruncatedClass sum = TruncatedClass::zero(e.cap());
  for (int j = 0; j <= r; ++j) sum = sum + e.c(j).scaled(ipow(t, static_cast<std::uint64_t>(r - j)));
  return sum;
}

Integer gamma_squared_pairing(const CompleteIntersection& ci, const ChernVector& e,
                              const MultiIndex& pontryagin_index, const Integer& t) {
  require_squared_degree(ci, pontryagin_index, "gamma_squared_pairing");
  require_cap(ci, e.cap(), "gamma_squared_pairing");
  TruncatedClass product = TruncatedClass::one(e.cap());
  for (int j : pontryagin_index.entries) {
    const int r = 2 * j;
    if (r > e.rank()) {
      throw StructuralError("gamma_squared_pairing: Gamma_" + std::to_string(r) +
                            " exceeds rank " + std::to_string(e.rank()));
    }
    const TruncatedClass formal = gamma_poly(e, r, t);
    // Move the formal degree-j piece t^{r-j} c_j up to degree r by h^{r-j}.
    TruncatedClass factor = TruncatedClass::zero(e.cap());
    for (int k = 0; k <= r; ++k) {
      factor = factor + TruncatedClass::monomial(1, static_cast<std::size_t>(r - k), e.cap()) *
                            TruncatedClass::monomial(formal.coeff(static_cast<std::size_t>(k)),
                                                     static_cast<std::size_t>(k), e.cap());
    }
    product = product * factor * factor;
  }
  if (pontryagin_index.empty()) {
    product = TruncatedClass::monomial(1, e.cap(), e.cap());
  }
  return pair_with_fundamental_class(ci, product);
}

MultiIndex chern_to_pontryagin_index(const MultiIndex& pontryagin_index) {
  std::vector<int> doubled;
  for (int j : pontryagin_index.entries) doubled.push_back(2 * j);
  return MultiIndex(std::move(doubled));
}

Integer squared_chern_pairing(const CompleteIntersection& ci, const ChernVector& e,
                              const MultiIndex& pontryagin_index) {
  require_squared_degree(ci, pontryagin_index, "squared_chern_pairing");
  require_cap(ci, e.cap(), "squared_chern_pairing");
  if (pontryagin_index.empty()) {
    return pair_with_fundamental_class(ci, TruncatedClass::monomial(1, e.cap(), e.cap()));
  }
  TruncatedClass product = TruncatedClass::one(e.cap());
  for (int k : chern_to_pontryagin_index(pontryagin_index).entries) {
    const TruncatedClass c = e.c(k);
    product = product * c * c;
  }
  return pair_with_fundamental_class(ci, product);
}

}  // namespace charbound
