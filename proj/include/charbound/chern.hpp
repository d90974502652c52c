#pragma once

#include <cstdint>
#include <vector>

#include "charbound/graded_ring.hpp"
#include "charbound/integer.hpp"
#include "charbound/variety.hpp"

namespace charbound {

/// Total Chern class c_0, ..., c_rank of a bundle restricted to a variety,
/// every class truncated at the variety's dimension.
class ChernVector {
 public:
  /// Requires classes.size() == rank + 1, c_0 == 1 and a common cap.
  ChernVector(int rank, std::vector<TruncatedClass> classes);

  int rank() const { return rank_; }
  std::size_t cap() const { return classes_.front().cap(); }
  /// c_i, with c_i = 0 outside [0, rank].
  TruncatedClass c(int i) const;
  const std::vector<TruncatedClass>& classes() const { return classes_; }

  /// Coefficient of h^i in c_i; meaningful when is_monomial().
  const Integer& multiple(int i) const { return classes_.at(static_cast<std::size_t>(i)).coeff(static_cast<std::size_t>(i)); }
  /// True when each c_i is a multiple of h^i alone.
  bool is_monomial() const;

  friend bool operator==(const ChernVector&, const ChernVector&) = default;

 private:
  int rank_;
  std::vector<TruncatedClass> classes_;
};

/// c(T_X) = (1+h)^{m+1} / prod_j (1 + d_j h), truncated at n.
ChernVector tangent_chern(const CompleteIntersection& ci);
/// c_i(Omega_X) = (-1)^i c_i(T_X).
ChernVector cotangent_chern(const CompleteIntersection& ci);

/// Chern classes of E (x) L where c_1(L) = t h, from the splitting principle:
/// c_i(E (x) L) = sum_j C(r-j, i-j) (t h)^{i-j} c_j(E).
ChernVector twist_chern(const ChernVector& e, const Integer& t);

/// <cls, [X]>: the h^n coefficient times deg X. cls must have cap n.
Integer pair_with_fundamental_class(const CompleteIntersection& ci, const TruncatedClass& cls);

/// <c_{i_1} ... c_{i_r} h^{n-|I|}, [X]>. Throws DegreeError when |I| > n.
Integer chern_number(const CompleteIntersection& ci, const ChernVector& e, const MultiIndex& index);

/// chi(X) = <c_n(T_X), [X]>.
Integer euler_characteristic(const CompleteIntersection& ci);

/// K_X = (sum d_j - m - 1) h; returns the multiple of h.
Integer canonical_class(const CompleteIntersection& ci);

/// L_X = K_X + (n + 2) h; returns the multiple of h, always >= 1.
Integer L_class(const CompleteIntersection& ci);

/// h^{n-i} L_X^i paired with [X], for i = 0..n.
std::vector<Integer> hL_sequence(const CompleteIntersection& ci);

/// det(c_{a_i - i + j}) over the parts of lambda, expanded in the truncated
/// ring. Requires lambda's largest part <= rank.
TruncatedClass schur_class(const ChernVector& e, const Partition& lambda);

/// Formal sum sum_{j=0..r} t^{r-j} c_j(E). Degrees are mixed on purpose;
/// pairings only see the top-degree part.
TruncatedClass gamma_poly(const ChernVector& e, int r, const Integer& t);

/// <prod_t Gamma_{2 j_t}(E; t h)^2, [X]> with the twist read as t times the
/// hyperplane class, so each factor is homogeneous of degree 2 j_t.
/// Same degree rule as squared_chern_pairing.
Integer gamma_squared_pairing(const CompleteIntersection& ci, const ChernVector& e,
                              const MultiIndex& pontryagin_index, const Integer& t);

/// (j_1, ..., j_q) -> (2 j_1, ..., 2 j_q): the Chern classes whose squares
/// bound p_{j_1} ... p_{j_q} (p_k of real degree 4k).
MultiIndex chern_to_pontryagin_index(const MultiIndex& pontryagin_index);

/// <prod_t c_{2 j_t}(E)^2, [X]>. The product must have degree exactly n,
/// i.e. 4 |J| == n; the empty index pairs h^n and gives deg X.
Integer squared_chern_pairing(const CompleteIntersection& ci, const ChernVector& e,
                              const MultiIndex& pontryagin_index);

}  // namespace charbound
