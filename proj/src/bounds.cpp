#include "charbound/bounds.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <thread>

#include "charbound/chern.hpp"
#include "charbound/errors.hpp"
#include "charbound/oracle.hpp"

namespace charbound {

namespace {

void require_nd(int n, const Integer& d, const char* op) {
  if (n < 1 || d < 1) {
    throw StructuralError(std::string(op) + ": need n >= 1 and d >= 1, got n = " +
                          std::to_string(n) + ", d = " + d.str());
  }
}

Integer pow2(std::uint64_t e) { return Integer(1) << e; }

BoundReport base_report(Check check, const CompleteIntersection& ci, std::string index) {
  BoundReport r;
  r.check = std::string(check_name(check));
  r.n = ci.dimension();
  r.d = ci.degree();
  r.multidegree = ci.multidegree_string();
  r.subject = r.check + " " + ci.label();
  if (!index.empty()) r.subject += " " + index;
  r.index = std::move(index);
  r.degenerate = is_degenerate(r.n, r.d);
  return r;
}

BoundReport finished(BoundReport r, Integer exact, Integer bound, std::optional<Integer> lower) {
  r.exact = std::move(exact);
  r.bound = std::move(bound);
  r.lower = std::move(lower);
  settle(r);
  return r;
}

void hl_reports(const CompleteIntersection& ci, std::vector<BoundReport>& out) {
  const auto seq = hL_sequence(ci);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    out.push_back(finished(base_report(Check::hl_chain, ci, "i=" + std::to_string(i)), seq[i],
                           ipow(ci.degree(), i + 1), Integer(1)));
  }
}

void log_concavity_reports(const CompleteIntersection& ci, std::vector<BoundReport>& out) {
  const auto seq = hL_sequence(ci);
  for (std::size_t i = 2; i < seq.size(); ++i) {
    out.push_back(finished(base_report(Check::log_concavity, ci, "i=" + std::to_string(i)),
                           seq[i] * seq[i - 2], seq[i - 1] * seq[i - 1], std::nullopt));
  }
}

void chern_reports(const CompleteIntersection& ci, bool twisted, std::vector<BoundReport>& out) {
  const int n = ci.dimension();
  const Integer d = ci.degree();
  const ChernVector omega = cotangent_chern(ci);
  const ChernVector bundle = twisted ? twist_chern(omega, 2) : omega;
  for (const auto& index : multi_indices_up_to(n)) {
    const Integer value = chern_number(ci, bundle, index);
    if (twisted) {
      out.push_back(finished(base_report(Check::twisted_chern, ci, "I=" + index.to_string()), value,
                             cI_bound(n, d, index), Integer(0)));
    } else {
      out.push_back(finished(base_report(Check::chern, ci, "I=" + index.to_string()), value,
                             cIn_bound(n, d, index), std::nullopt));
    }
  }
}

void betti_reports(const CompleteIntersection& ci, bool recursive, std::vector<BoundReport>& out) {
  const Check check = recursive ? Check::betti_recursive : Check::betti;
  const Integer bound =
      recursive ? betti_bound_recursive(ci) : betti_bound(ci.dimension(), ci.degree());
  out.push_back(finished(base_report(check, ci, ""), total_betti(ci), bound, Integer(0)));
}

void euler_reports(const CompleteIntersection& ci, std::vector<BoundReport>& out) {
  const auto b = exact_betti(ci);
  Integer alternating = 0;
  for (std::size_t i = 0; i < b.size(); ++i) alternating += i % 2 == 0 ? b[i] : Integer(-b[i]);
  // Agreement check: |chi(c_n) - sum (-1)^i b_i| <= 0.
  out.push_back(finished(base_report(Check::euler, ci, ""), euler_characteristic(ci) - alternating,
                         Integer(0), std::nullopt));
}

void schur_reports(const CompleteIntersection& ci, std::vector<BoundReport>& out) {
  const int n = ci.dimension();
  const ChernVector bundle = twist_chern(cotangent_chern(ci), 2);
  for (int size = 1; size <= n; ++size) {
    for (const auto& lambda : partitions_in_box(size, n, n)) {
      TruncatedClass cls = schur_class(bundle, lambda) *
                           TruncatedClass::monomial(1, static_cast<std::size_t>(n - size), bundle.cap());
      std::vector<int> entries(lambda.parts());
      out.push_back(finished(base_report(Check::schur_positivity, ci, "lambda=" + lambda.to_string()),
                             pair_with_fundamental_class(ci, cls),
                             cI_bound(n, ci.degree(), MultiIndex(entries)), Integer(0)));
    }
  }
}

void pontryagin_reports(const CompleteIntersection& ci, bool gamma, std::vector<BoundReport>& out) {
  const int n = ci.dimension();
  if (n % 4 != 0) return;
  const ChernVector omega = cotangent_chern(ci);
  const ChernVector twisted = twist_chern(omega, 2);
  const Integer bound = pontryagin_bound(n, ci.degree());
  for (const auto& lambda : partitions_in_box(n / 4, n / 4, n / 4)) {
    const MultiIndex j(lambda.parts());
    BoundReport r = base_report(gamma ? Check::gamma_chain : Check::pontryagin_chain, ci,
                                "J=" + j.to_string());
    r.degree_convention = "real";
    const Integer value =
        gamma ? gamma_squared_pairing(ci, omega, j, 2) : squared_chern_pairing(ci, twisted, j);
    out.push_back(finished(std::move(r), value, bound, Integer(0)));
  }
}

constexpr std::array<std::pair<Check, std::string_view>, 10> kCheckNames{{
    {Check::hl_chain, "hl-chain"},
    {Check::log_concavity, "log-concavity"},
    {Check::twisted_chern, "twisted-chern"},
    {Check::chern, "chern"},
    {Check::betti, "betti"},
    {Check::betti_recursive, "betti-recursive"},
    {Check::euler, "euler"},
    {Check::schur_positivity, "schur-positivity"},
    {Check::pontryagin_chain, "pontryagin-chain"},
    {Check::gamma_chain, "gamma-chain"},
}};

}  // namespace

void settle(BoundReport& report) {
  if (!report.exact) {
    report.satisfied = true;
    report.margin.reset();
    return;
  }
  const Integer& x = *report.exact;
  report.margin = report.bound - charbound::abs(x);
  report.satisfied = charbound::abs(x) <= report.bound && (!report.lower || *report.lower <= x);
}

bool is_degenerate(int n, const Integer& d) { return d + n - 2 == 0; }

Integer pontryagin_bound(int n, const Integer& d) {
  require_nd(n, d, "pontryagin_bound");
  const auto un = static_cast<std::uint64_t>(n);
  return pow2(un * un + 3 * un) * d * ipow(d + n - 2, un);
}

Integer betti_bound(int n, const Integer& d) {
  require_nd(n, d, "betti_bound");
  const auto un = static_cast<std::uint64_t>(n);
  return pow2(un * un + 2) * ipow(d, un + 1);
}

Integer betti_bound_recursive(const CompleteIntersection& ci) {
  const int n = ci.dimension();
  const Integer d = ci.degree();
  if (n == 1) return 2 + (d - 1) * (d - 2);
  const auto un = static_cast<std::uint64_t>(n);
  return 4 * betti_bound_recursive(ci.hyperplane_section()) + 2 * pow2(un * un) * ipow(d, un + 1);
}

Integer cI_bound(int n, const Integer& d, const MultiIndex& index) {
  require_nd(n, d, "cI_bound");
  if (index.weight() > n) throw DegreeError("cI_bound: |I| > n");
  return d * ipow(d + n - 2, static_cast<std::uint64_t>(index.weight()));
}

Integer cIn_bound(int n, const Integer& d, const MultiIndex& index) {
  const auto un = static_cast<std::uint64_t>(n);
  require_nd(n, d, "cIn_bound");
  if (index.weight() > n) throw DegreeError("cIn_bound: |I| > n");
  return pow2(un * un) * d * ipow(d + n - 2, static_cast<std::uint64_t>(index.weight()));
}

BoundReport signature_check(const Integer& c2_squared, const Integer& sigma) {
  BoundReport r;
  r.check = "signature";
  r.subject = "signature |3 sigma| <= c2^2";
  r.n = 4;
  r.index = "sigma=" + sigma.str();
  r.exact = 3 * sigma;
  r.source = ValueSource::supplied;
  r.bound = c2_squared;
  r.degree_convention = "real";
  settle(r);
  return r;
}

BoundReport signature_check(const CompleteIntersection& ci, const Integer& sigma) {
  const Integer c2_squared = squared_chern_pairing(ci, tangent_chern(ci), MultiIndex({1}));
  BoundReport r = signature_check(c2_squared, sigma);
  r.subject += " " + ci.label();
  r.n = ci.dimension();
  r.d = ci.degree();
  r.multidegree = ci.multidegree_string();
  return r;
}

Integer blowup_euler(const Integer& chi_M, const Integer& chi_C, int nu, bool real_side,
                     const Integer& chi_C_real) {
  if (nu < 2) throw StructuralError("blowup_euler: codimension nu must be >= 2");
  if (real_side) return chi_M + 2 * chi_C_real;
  return chi_M + (nu - 1) * chi_C;
}

std::string_view check_name(Check c) {
  for (const auto& [check, name] : kCheckNames) {
    if (check == c) return name;
  }
  return "unknown";
}

Check parse_check(std::string_view name) {
  for (const auto& [check, n] : kCheckNames) {
    if (n == name) return check;
  }
  throw StructuralError("unknown check '" + std::string(name) + "'");
}

std::vector<Check> all_checks() {
  std::vector<Check> out;
  for (const auto& entry : kCheckNames) out.push_back(entry.first);
  return out;
}

GridSpec grid_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw StructuralError("grid spec must be a JSON object");
  GridSpec spec;
  auto read_int = [&](const char* key, int& field) {
    if (!j.contains(key)) return;
    if (!j.at(key).is_number_integer()) throw StructuralError(std::string("grid spec: ") + key + " must be an integer");
    field = j.at(key).get<int>();
  };
  read_int("max_ambient_dim", spec.max_ambient_dim);
  read_int("max_degree_per_factor", spec.max_degree_per_factor);
  read_int("min_degree_per_factor", spec.min_degree_per_factor);
  read_int("max_codim", spec.max_codim);
  if (j.contains("max_cases")) {
    const auto& v = j.at("max_cases");
    if (!v.is_number_integer() || v.get<long long>() < 0) {
      throw StructuralError("grid spec: max_cases must be a nonnegative integer");
    }
    spec.max_cases = v.get<std::size_t>();
  }
  if (j.contains("checks")) {
    if (!j.at("checks").is_array()) throw StructuralError("grid spec: checks must be an array");
    spec.checks.clear();
    for (const auto& c : j.at("checks")) {
      if (!c.is_string()) throw StructuralError("grid spec: check names must be strings");
      spec.checks.push_back(parse_check(c.get<std::string>()));
    }
  }
  if (j.contains("varieties")) {
    if (!j.at("varieties").is_array()) throw StructuralError("grid spec: varieties must be an array");
    std::vector<CompleteIntersection> list;
    for (const auto& v : j.at("varieties")) list.push_back(variety_from_json(v));
    spec.varieties = std::move(list);
  }
  if (spec.min_degree_per_factor < 1) throw StructuralError("grid spec: min_degree_per_factor must be >= 1");
  return spec;
}

std::vector<CompleteIntersection> enumerate_grid(const GridSpec& spec) {
  if (spec.varieties) {
    auto list = *spec.varieties;
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    return list;
  }
  std::vector<CompleteIntersection> out;
  const int lo = spec.min_degree_per_factor;
  const int hi = spec.max_degree_per_factor;
  if (lo > hi) return out;
  for (int m = 2; m <= spec.max_ambient_dim; ++m) {
    for (int k = 1; k <= std::min(spec.max_codim, m - 1); ++k) {
      std::vector<int> degrees(static_cast<std::size_t>(k), lo);
      // Nondecreasing tuples in [lo, hi]^k, lexicographic.
      while (true) {
        out.emplace_back(m, degrees);
        int pos = k - 1;
        while (pos >= 0 && degrees[static_cast<std::size_t>(pos)] == hi) --pos;
        if (pos < 0) break;
        const int next = degrees[static_cast<std::size_t>(pos)] + 1;
        for (int i = pos; i < k; ++i) degrees[static_cast<std::size_t>(i)] = next;
      }
    }
  }
  return out;
}

bool GridResult::all_satisfied() const {
  return std::all_of(reports.begin(), reports.end(), [](const BoundReport& r) { return r.satisfied; });
}

std::vector<BoundReport> verify_variety(const CompleteIntersection& ci,
                                        const std::vector<Check>& checks) {
  std::vector<BoundReport> out;
  for (Check c : checks) {
    switch (c) {
      case Check::hl_chain: hl_reports(ci, out); break;
      case Check::log_concavity: log_concavity_reports(ci, out); break;
      case Check::twisted_chern: chern_reports(ci, true, out); break;
      case Check::chern: chern_reports(ci, false, out); break;
      case Check::betti: betti_reports(ci, false, out); break;
      case Check::betti_recursive: betti_reports(ci, true, out); break;
      case Check::euler: euler_reports(ci, out); break;
      case Check::schur_positivity: schur_reports(ci, out); break;
      case Check::pontryagin_chain: pontryagin_reports(ci, false, out); break;
      case Check::gamma_chain: pontryagin_reports(ci, true, out); break;
    }
  }
  return out;
}

GridResult verify_grid(const GridSpec& spec, unsigned threads) {
  GridResult result;
  std::vector<CompleteIntersection> family = enumerate_grid(spec);
  result.varieties_total = family.size();
  if (family.size() > spec.max_cases) {
    family.erase(family.begin() + static_cast<std::ptrdiff_t>(spec.max_cases), family.end());
    result.truncated = true;
  }
  result.varieties_evaluated = family.size();

  std::vector<std::vector<BoundReport>> per_variety(family.size());
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(family.size(), 1)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (std::size_t i = next++; i < family.size(); i = next++) {
      try {
        per_variety[i] = verify_variety(family[i], spec.checks);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
        return;
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);

  for (auto& reports : per_variety) {
    std::move(reports.begin(), reports.end(), std::back_inserter(result.reports));
  }
  return result;
}

}  // namespace charbound
