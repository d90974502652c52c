#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>

#include "charbound/integer.hpp"
#include "charbound/variety.hpp"

namespace charbound {

/// G_q(C^N): q-planes in C^N. Schubert classes are indexed by partitions in
/// the q x (N - q) box.
struct Grassmannian {
  int q;
  int N;

  int rows() const { return q; }
  int cols() const { return N - q; }
  int dimension() const { return q * (N - q); }
  Partition point_class() const;

  friend bool operator==(const Grassmannian&, const Grassmannian&) = default;
};

/// Validates 1 <= q < N.
Grassmannian make_grassmannian(int q, int N);

/// Integer combination of Schubert classes sigma_lambda. Zero coefficients
/// are never stored, so equality is structural.
class SchubertClass {
 public:
  explicit SchubertClass(Grassmannian g) : grassmannian_(g) {}

  static SchubertClass basis(Grassmannian g, const Partition& lambda);
  static SchubertClass unit(Grassmannian g) { return basis(g, Partition()); }

  const Grassmannian& grassmannian() const { return grassmannian_; }
  const std::map<Partition, Integer>& terms() const { return terms_; }
  Integer coefficient(const Partition& lambda) const;
  bool is_zero() const { return terms_.empty(); }

  /// Codimension shared by every term; nullopt for zero or mixed classes.
  std::optional<int> homogeneous_degree() const;

  void add_term(const Partition& lambda, const Integer& coefficient);
  SchubertClass scaled(const Integer& factor) const;

  /// "σ_{2} + σ_{1,1}"; "0" for the zero class.
  std::string to_string() const;

  friend bool operator==(const SchubertClass&, const SchubertClass&) = default;

 private:
  Grassmannian grassmannian_;
  std::map<Partition, Integer> terms_;
};

SchubertClass operator+(const SchubertClass& a, const SchubertClass& b);
SchubertClass operator-(const SchubertClass& a);

/// s * sigma_k by the Pieri rule: sum over horizontal strips of size k
/// added to each term, staying inside the box. k == 0 is the identity.
SchubertClass pieri(const SchubertClass& s, int k);

/// sigma_lambda as det(sigma_{a_i - i + j}), each monomial in special
/// classes evaluated by iterated Pieri. Equals basis(g, lambda).
SchubertClass giambelli_expand(const Partition& lambda, Grassmannian g);

/// Product of two classes: the second factor is Giambelli-expanded into
/// special classes and applied to the first one by Pieri.
SchubertClass multiply(const SchubertClass& a, const SchubertClass& b);

/// sigma_k^power.
SchubertClass special_power(Grassmannian g, int k, int power);

/// Coefficient of the point class in the product. The classes must be
/// homogeneous with total codimension q (N - q); a zero factor gives 0.
Integer intersection_number(std::span<const SchubertClass> classes);

/// (q(N-q))! prod_{i<q} i! / (N-q+i)!, the degree of G_q(C^N) in the
/// Pluecker embedding.
Integer grassmannian_degree(int q, int N);

}  // namespace charbound
