#include "biko/multi_index.hpp"

#include <map>
#include <mutex>

namespace biko {

std::string MultiIndex::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(entries_[i]);
  }
  s += ")";
  return s;
}

namespace {

void enumerate_degree(int dimension, int degree, std::vector<int>& partial,
                      std::vector<MultiIndex>& out) {
  if (static_cast<int>(partial.size()) == dimension - 1) {
    partial.push_back(degree);
    out.emplace_back(partial);
    partial.pop_back();
    return;
  }
  for (int a = 0; a <= degree; ++a) {
    partial.push_back(a);
    enumerate_degree(dimension, degree - a, partial, out);
    partial.pop_back();
  }
}

}  // namespace

MultiIndexSet::MultiIndexSet(int dimension, int max_degree)
    : dimension_(dimension), max_degree_(max_degree) {
  if (dimension < 1 || dimension > 8)
    throw std::invalid_argument("MultiIndexSet: dimension must be in [1, 8]");
  if (max_degree < 0 || max_degree > 255)
    throw std::invalid_argument("MultiIndexSet: max_degree must be in [0, 255]");
  std::vector<int> partial;
  for (int g = 0; g <= max_degree; ++g) enumerate_degree(dimension, g, partial, indices_);
  rank_.reserve(indices_.size());
  for (std::size_t r = 0; r < indices_.size(); ++r) rank_.emplace(indices_[r].packed(), r);
}

std::size_t MultiIndexSet::find(const MultiIndex& alpha) const {
  if (alpha.dimension() != dimension_) throw std::invalid_argument("MultiIndexSet::find: dimension mismatch");
  auto it = rank_.find(alpha.packed());
  return it == rank_.end() ? npos : it->second;
}

const MultiIndexSet& MultiIndexSet::get(int dimension, int max_degree) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, MultiIndexSet> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(dimension, max_degree);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, MultiIndexSet(dimension, max_degree)).first;
  return it->second;
}

}  // namespace biko
