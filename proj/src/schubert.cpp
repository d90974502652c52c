#include "charbound/schubert.hpp"

#include <sstream>
#include <vector>

#include "charbound/detail/determinant.hpp"
#include "charbound/errors.hpp"

namespace charbound {

namespace {

void require_same_grassmannian(const SchubertClass& a, const SchubertClass& b) {
  if (!(a.grassmannian() == b.grassmannian())) {
    throw StructuralError("Schubert classes live on different Grassmannians");
  }
}

// Appends every mu with mu / lambda a horizontal strip of size k inside
// the box to `out`, with the given coefficient.
void add_horizontal_strips(const Partition& lambda, int k, const Grassmannian& g,
                           const Integer& coefficient, SchubertClass& out) {
  const auto rows = static_cast<std::size_t>(g.rows());
  std::vector<int> mu(rows);
  auto recurse = [&](auto&& self, std::size_t row, int remaining) -> void {
    if (row == rows) {
      if (remaining == 0) out.add_term(Partition(mu), coefficient);
      return;
    }
    const int low = lambda.part(row);
    const int high = row == 0 ? g.cols() : lambda.part(row - 1);
    for (int v = low; v <= high && v - low <= remaining; ++v) {
      mu[row] = v;
      self(self, row + 1, remaining - (v - low));
    }
  };
  recurse(recurse, 0, k);
}

}  // namespace

Partition Grassmannian::point_class() const {
  return Partition(std::vector<int>(static_cast<std::size_t>(q), N - q));
}

Grassmannian make_grassmannian(int q, int N) {
  if (q < 1 || q >= N) {
    throw StructuralError("Grassmannian G_" + std::to_string(q) + "(C^" + std::to_string(N) +
                          ") needs 1 <= q < N");
  }
  return Grassmannian{q, N};
}

SchubertClass SchubertClass::basis(Grassmannian g, const Partition& lambda) {
  if (!lambda.fits_in_box(g.rows(), g.cols())) {
    throw StructuralError("partition " + lambda.to_string() + " does not fit the " +
                          std::to_string(g.rows()) + "x" + std::to_string(g.cols()) + " box");
  }
  SchubertClass s(g);
  s.terms_.emplace(lambda, 1);
  return s;
}

Integer SchubertClass::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Integer(0) : it->second;
}

std::optional<int> SchubertClass::homogeneous_degree() const {
  std::optional<int> degree;
  for (const auto& [lambda, c] : terms_) {
    if (!degree) {
      degree = lambda.size();
    } else if (*degree != lambda.size()) {
      return std::nullopt;
    }
  }
  return degree;
}

void SchubertClass::add_term(const Partition& lambda, const Integer& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.emplace(lambda, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

SchubertClass SchubertClass::scaled(const Integer& factor) const {
  SchubertClass r(grassmannian_);
  for (const auto& [lambda, c] : terms_) r.add_term(lambda, c * factor);
  return r;
}

std::string SchubertClass::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Reverse-lexicographic on parts: σ_{2} before σ_{1,1}.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [lambda, c] = *it;
    Integer mag = charbound::abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1) out << mag;
    out << "σ_{";
    for (std::size_t i = 0; i < lambda.length(); ++i) out << (i ? "," : "") << lambda.part(i);
    if (lambda.empty()) out << "0";
    out << "}";
  }
  return out.str();
}

SchubertClass operator+(const SchubertClass& a, const SchubertClass& b) {
  require_same_grassmannian(a, b);
  SchubertClass r = a;
  for (const auto& [lambda, c] : b.terms()) r.add_term(lambda, c);
  return r;
}

SchubertClass operator-(const SchubertClass& a) { return a.scaled(-1); }

SchubertClass pieri(const SchubertClass& s, int k) {
  const Grassmannian& g = s.grassmannian();
  if (k < 0 || k > g.cols()) {
    throw StructuralError("pieri: special class σ_" + std::to_string(k) +
                          " outside [0, " + std::to_string(g.cols()) + "]");
  }
  if (k == 0) return s;
  SchubertClass out(g);
  for (const auto& [lambda, c] : s.terms()) add_horizontal_strips(lambda, k, g, c, out);
  return out;
}

namespace {

// sum over permutations of sign * s * prod_i sigma_{a_i - i + pi(i)};
// entries outside [0, N - q] vanish in the cohomology of the Grassmannian.
SchubertClass apply_giambelli(const SchubertClass& s, const Partition& lambda) {
  const Grassmannian g = s.grassmannian();
  return detail::expand_determinant(
      lambda.length(), s, SchubertClass(g),
      [&](const SchubertClass& acc, std::size_t row, std::size_t col) -> std::optional<SchubertClass> {
        const int k = lambda.part(row) - static_cast<int>(row) + static_cast<int>(col);
        if (k < 0 || k > g.cols()) return std::nullopt;
        SchubertClass next = pieri(acc, k);
        if (next.is_zero()) return std::nullopt;
        return next;
      });
}

}  // namespace

SchubertClass giambelli_expand(const Partition& lambda, Grassmannian g) {
  if (!lambda.fits_in_box(g.rows(), g.cols())) {
    throw StructuralError("giambelli_expand: " + lambda.to_string() + " outside the box");
  }
  return apply_giambelli(SchubertClass::unit(g), lambda);
}

SchubertClass multiply(const SchubertClass& a, const SchubertClass& b) {
  require_same_grassmannian(a, b);
  SchubertClass out(a.grassmannian());
  for (const auto& [lambda, c] : b.terms()) out = out + apply_giambelli(a, lambda).scaled(c);
  return out;
}

SchubertClass special_power(Grassmannian g, int k, int power) {
  if (power < 0) throw StructuralError("special_power: negative exponent");
  SchubertClass s = SchubertClass::unit(g);
  for (int i = 0; i < power; ++i) s = pieri(s, k);
  return s;
}

Integer intersection_number(std::span<const SchubertClass> classes) {
  if (classes.empty()) throw DegreeError("intersection_number: empty product has codimension 0");
  const Grassmannian g = classes.front().grassmannian();
  int total = 0;
  bool has_zero = false;
  for (const auto& s : classes) {
    if (!(s.grassmannian() == g)) throw StructuralError("intersection_number: mixed Grassmannians");
    if (s.is_zero()) {
      has_zero = true;
      continue;
    }
    auto deg = s.homogeneous_degree();
    if (!deg) throw DegreeError("intersection_number: factor " + s.to_string() + " is not homogeneous");
    total += *deg;
  }
  if (has_zero) return 0;
  if (total != g.dimension()) {
    throw DegreeError("intersection_number: total codimension " + std::to_string(total) +
                      " differs from dim G_" + std::to_string(g.q) + "(C^" + std::to_string(g.N) +
                      ") = " + std::to_string(g.dimension()));
  }
  SchubertClass product = classes.front();
  for (std::size_t i = 1; i < classes.size(); ++i) product = multiply(product, classes[i]);
  return product.coefficient(g.point_class());
}

Integer grassmannian_degree(int q, int N) {
  const Grassmannian g = make_grassmannian(q, N);
  Integer numerator = factorial(g.dimension());
  Integer denominator = 1;
  for (int i = 0; i < q; ++i) {
    numerator *= factorial(i);
    denominator *= factorial(N - q + i);
  }
  if (numerator % denominator != 0) {
    throw InconsistencyError("grassmannian_degree: non-integral quotient");
  }
  return numerator / denominator;
}

}  // namespace charbound
