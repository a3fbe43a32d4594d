#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace biko {

/// Multi-index alpha in N^d; order() is |alpha|.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
    for (int e : entries_)
      if (e < 0) throw std::invalid_argument("MultiIndex: negative entry");
  }
  MultiIndex(std::initializer_list<int> entries) : MultiIndex(std::vector<int>(entries)) {}

  int dimension() const { return static_cast<int>(entries_.size()); }
  int order() const {
    int s = 0;
    for (int e : entries_) s += e;
    return s;
  }
  int operator[](int i) const { return entries_[i]; }
  const std::vector<int>& entries() const { return entries_; }

  /// alpha +- e_k; lowering below zero is a logic error.
  MultiIndex raised(int k) const {
    auto e = entries_;
    ++e[k];
    return MultiIndex(std::move(e));
  }
  MultiIndex lowered(int k) const {
    auto e = entries_;
    if (e[k] == 0) throw std::logic_error("MultiIndex: lowering a zero entry");
    --e[k];
    return MultiIndex(std::move(e));
  }

  bool operator==(const MultiIndex& o) const { return entries_ == o.entries_; }

  /// Packed key, valid for dimension <= 8 and entries <= 255.
  std::uint64_t packed() const {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < entries_.size(); ++i)
      key |= static_cast<std::uint64_t>(entries_[i] & 0xff) << (8 * i);
    return key;
  }

  std::string to_string() const;

 private:
  std::vector<int> entries_;
};

/// All multi-indices with |alpha| <= max_degree in graded lexicographic
/// order (degree ascending, then lexicographic on the entry tuple). The
/// order is the serialization contract for spectral coefficients.
class MultiIndexSet {
 public:
  MultiIndexSet(int dimension, int max_degree);

  int dimension() const { return dimension_; }
  int max_degree() const { return max_degree_; }
  std::size_t size() const { return indices_.size(); }
  const MultiIndex& operator[](std::size_t rank) const { return indices_[rank]; }
  const std::vector<MultiIndex>& indices() const { return indices_; }

  /// Rank of alpha, or npos when |alpha| > max_degree.
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t find(const MultiIndex& alpha) const;

  /// Shared cached instance.
  static const MultiIndexSet& get(int dimension, int max_degree);

 private:
  int dimension_;
  int max_degree_;
  std::vector<MultiIndex> indices_;
  std::unordered_map<std::uint64_t, std::size_t> rank_;
};

}  // namespace biko
