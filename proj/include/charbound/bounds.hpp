#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "charbound/integer.hpp"
#include "charbound/variety.hpp"

namespace charbound {

enum class ValueSource { computed, supplied };

/// One checked inequality instance: lower <= exact and |exact| <= bound.
struct BoundReport {
  std::string check;
  std::string subject;
  int n = 0;
  Integer d = 0;
  std::string multidegree;
  std::string index;
  std::optional<Integer> exact;
  ValueSource source = ValueSource::computed;
  std::optional<Integer> lower;
  Integer bound = 0;
  bool satisfied = true;
  std::optional<Integer> margin;  // bound - |exact|
  /// (d + n - 2) == 0: the formula collapses to 0 at (n, d) = (1, 1).
  bool degenerate = false;
  /// Which degree the bound formula is stated for: "complex" or "real".
  std::string degree_convention = "complex";
};

/// Fills satisfied and margin from exact, lower and bound.
void settle(BoundReport& report);

// Closed-form bounds. All take n >= 1, d >= 1.

/// 2^{n^2 + 3n} d (d + n - 2)^n; bounds every Pontryagin number of an
/// orientable real algebraic n-manifold of (real) degree d.
Integer pontryagin_bound(int n, const Integer& d);
/// 2^{n^2 + 2} d^{n+1}; bounds the total Betti number.
Integer betti_bound(int n, const Integer& d);
/// Hyperplane recursion b(X) <= 4 b(H) + 2 * 2^{n^2} d^{n+1} started from
/// the plane-curve value 2 + (d-1)(d-2).
Integer betti_bound_recursive(const CompleteIntersection& ci);
/// d (d + n - 2)^{|I|}; bounds c_I(Omega(2)) h^{n-|I|}.
Integer cI_bound(int n, const Integer& d, const MultiIndex& index);
/// 2^{n^2} d (d + n - 2)^{|I|}; bounds |c_I(Omega) h^{n-|I|}|.
Integer cIn_bound(int n, const Integer& d, const MultiIndex& index);

bool is_degenerate(int n, const Integer& d);

/// |3 sigma| <= c_2^2 for a real 4-fold with globally generated cotangent
/// bundle. sigma is real-side input and is reported as supplied.
BoundReport signature_check(const Integer& c2_squared, const Integer& sigma);
/// Same, with c_2^2 computed on the complexification.
BoundReport signature_check(const CompleteIntersection& ci, const Integer& sigma);

/// Euler characteristic after blowing up along a curve C of codimension nu.
/// Complex side: chi(M) + (nu - 1) chi(C). Real side: chi(M) + 2 chi(C_R).
Integer blowup_euler(const Integer& chi_M, const Integer& chi_C, int nu, bool real_side,
                     const Integer& chi_C_real);

enum class Check {
  hl_chain,
  log_concavity,
  twisted_chern,
  chern,
  betti,
  betti_recursive,
  euler,
  schur_positivity,
  pontryagin_chain,
  gamma_chain,
};

std::string_view check_name(Check c);
Check parse_check(std::string_view name);
std::vector<Check> all_checks();

struct GridSpec {
  int max_ambient_dim = 8;
  int max_degree_per_factor = 5;
  /// Factors of degree 1 only re-embed a smaller case, so they are skipped
  /// unless this is lowered to 1.
  int min_degree_per_factor = 2;
  int max_codim = 7;
  std::size_t max_cases = 500;
  std::vector<Check> checks = all_checks();
  /// When set, replaces the enumerated family.
  std::optional<std::vector<CompleteIntersection>> varieties;
};

/// Grid spec JSON: { "max_ambient_dim", "max_degree_per_factor",
/// "max_codim", "checks", "max_cases" } plus the optional
/// "min_degree_per_factor" and "varieties". Missing keys keep defaults.
GridSpec grid_from_json(const nlohmann::json& j);

/// Every complete intersection described by the spec (before the case
/// cap), in canonical order.
std::vector<CompleteIntersection> enumerate_grid(const GridSpec& spec);

struct GridResult {
  std::vector<BoundReport> reports;
  std::size_t varieties_total = 0;
  std::size_t varieties_evaluated = 0;
  bool truncated = false;

  bool all_satisfied() const;
};

/// Reports for one variety, in check order.
std::vector<BoundReport> verify_variety(const CompleteIntersection& ci,
                                        const std::vector<Check>& checks);

/// Runs the checks over the grid, at most spec.max_cases varieties. Work is
/// spread over `threads` workers (0 = hardware concurrency); output order
/// is canonical regardless.
GridResult verify_grid(const GridSpec& spec, unsigned threads = 0);

}  // namespace charbound
