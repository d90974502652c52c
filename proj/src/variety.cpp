#include "charbound/variety.hpp"

#include <algorithm>
#include <sstream>

#include "charbound/errors.hpp"

namespace charbound {

CompleteIntersection::CompleteIntersection(int ambient_dim, std::vector<int> multidegree)
    : ambient_dim_(ambient_dim), multidegree_(std::move(multidegree)) {
  if (ambient_dim_ < 1) {
    throw StructuralError("ambient dimension must be >= 1, got " + std::to_string(ambient_dim_));
  }
  for (int d : multidegree_) {
    if (d < 1) throw StructuralError("multidegree entries must be >= 1, got " + std::to_string(d));
  }
  if (codim() >= ambient_dim_) {
    throw StructuralError("codimension " + std::to_string(codim()) +
                          " leaves no positive-dimensional variety in P^" +
                          std::to_string(ambient_dim_));
  }
  std::sort(multidegree_.begin(), multidegree_.end());
}

Integer CompleteIntersection::degree() const {
  Integer d = 1;
  for (int dj : multidegree_) d *= dj;
  return d;
}

CompleteIntersection CompleteIntersection::hyperplane_section() const {
  if (dimension() < 2) {
    throw DimensionError("hyperplane section of " + label() + " would be zero-dimensional");
  }
  return CompleteIntersection(ambient_dim_ - 1, multidegree_);
}

std::string CompleteIntersection::multidegree_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < multidegree_.size(); ++i) {
    if (i != 0) out << ';';
    out << multidegree_[i];
  }
  return out.str();
}

std::string CompleteIntersection::label() const {
  std::ostringstream out;
  out << "X(" << ambient_dim_;
  for (std::size_t i = 0; i < multidegree_.size(); ++i) out << (i == 0 ? ";" : ",") << multidegree_[i];
  out << ")";
  return out.str();
}

std::strong_ordering operator<=>(const CompleteIntersection& a, const CompleteIntersection& b) {
  if (auto c = a.ambient_dim_ <=> b.ambient_dim_; c != 0) return c;
  if (auto c = a.codim() <=> b.codim(); c != 0) return c;
  return a.multidegree_ <=> b.multidegree_;
}

CompleteIntersection variety_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("ambient_dim") || !j.contains("multidegree")) {
    throw StructuralError("variety JSON needs \"ambient_dim\" and \"multidegree\"");
  }
  const auto& m = j.at("ambient_dim");
  const auto& md = j.at("multidegree");
  if (!m.is_number_integer() || !md.is_array()) {
    throw StructuralError("variety JSON: ambient_dim must be an integer, multidegree an array");
  }
  std::vector<int> degrees;
  for (const auto& d : md) {
    if (!d.is_number_integer()) throw StructuralError("variety JSON: non-integer degree");
    degrees.push_back(d.get<int>());
  }
  return CompleteIntersection(m.get<int>(), std::move(degrees));
}

nlohmann::json to_json(const CompleteIntersection& ci) {
  return {{"ambient_dim", ci.ambient_dim()}, {"multidegree", ci.multidegree()}};
}

MultiIndex::MultiIndex(std::vector<int> e) : entries(std::move(e)) {
  for (int i : entries) {
    if (i < 1) throw StructuralError("multi-index entries must be >= 1");
  }
}

int MultiIndex::weight() const {
  int w = 0;
  for (int i : entries) w += i;
  return w;
}

std::string MultiIndex::to_string() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < entries.size(); ++i) out << (i ? "," : "") << entries[i];
  out << ")";
  return out.str();
}

namespace {

void extend_indices(std::vector<int>& prefix, int remaining, int max_part,
                    std::vector<MultiIndex>& out) {
  out.emplace_back(prefix);
  for (int part = std::min(max_part, remaining); part >= 1; --part) {
    prefix.push_back(part);
    extend_indices(prefix, remaining - part, part, out);
    prefix.pop_back();
  }
}

void extend_box(std::vector<int>& prefix, int remaining, int rows, int max_part,
                std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (static_cast<int>(prefix.size()) == rows) return;
  for (int part = std::min(max_part, remaining); part >= 1; --part) {
    prefix.push_back(part);
    extend_box(prefix, remaining - part, rows, part, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<MultiIndex> multi_indices_up_to(int max_weight) {
  std::vector<MultiIndex> out;
  std::vector<int> prefix;
  if (max_weight >= 0) extend_indices(prefix, max_weight, max_weight, out);
  std::sort(out.begin(), out.end(), [](const MultiIndex& a, const MultiIndex& b) {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    return a.entries > b.entries;
  });
  return out;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw StructuralError("partition parts must be nonnegative");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw StructuralError("partition parts must be weakly decreasing: " + to_string());
    }
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

bool Partition::fits_in_box(int rows, int cols) const {
  return static_cast<int>(parts_.size()) <= rows && (parts_.empty() || parts_.front() <= cols);
}

Partition Partition::complement(int rows, int cols) const {
  if (!fits_in_box(rows, cols)) {
    throw StructuralError("partition " + to_string() + " does not fit the box");
  }
  std::vector<int> c(static_cast<std::size_t>(rows));
  for (int i = 0; i < rows; ++i) c[static_cast<std::size_t>(i)] = cols - part(static_cast<std::size_t>(rows - 1 - i));
  return Partition(std::move(c));
}

std::string Partition::to_string() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) out << (i ? "," : "") << parts_[i];
  out << ")";
  return out.str();
}

std::vector<Partition> partitions_in_box(int size, int rows, int cols) {
  std::vector<Partition> out;
  if (size < 0) return out;
  std::vector<int> prefix;
  extend_box(prefix, size, rows, cols, out);
  return out;
}

std::vector<Partition> all_partitions_in_box(int rows, int cols) {
  std::vector<Partition> out;
  for (int s = 0; s <= rows * cols; ++s) {
    auto part = partitions_in_box(s, rows, cols);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string cleaned;
  for (char ch : text) {
    if (ch == '(' || ch == ')' || ch == '[' || ch == ']' || ch == ' ') continue;
    cleaned.push_back(ch);
  }
  if (cleaned.empty()) return out;
  std::istringstream in(cleaned);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw StructuralError("not an integer list: '" + text + "'");
    }
    if (used != item.size()) throw StructuralError("not an integer list: '" + text + "'");
    out.push_back(value);
  }
  return out;
}

}  // namespace charbound
