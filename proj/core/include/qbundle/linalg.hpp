#pragma once

#include <cstddef>
#include <iterator>
#include <map>
#include <utility>
#include <vector>

#include "qbundle/scalar.hpp"

namespace qbundle {

/// Sparse vector over Q; zero entries are never stored.
template <class Key>
using SparseVec = std::map<Key, Scalar>;

template <class Key>
void axpy(SparseVec<Key>& y, const Scalar& a, const SparseVec<Key>& x) {
  for (const auto& [k, v] : x) {
    auto [it, inserted] = y.try_emplace(k, a * v);
    if (!inserted) {
      it->second += a * v;
      if (it->second == 0) y.erase(it);
    }
  }
}

/// Incremental exact Gaussian elimination. Input vectors are numbered by the
/// caller; every echelon row remembers which combination of inputs produced
/// it, so membership tests come with explicit coefficients and dependent
/// inputs yield kernel vectors.
template <class Key>
class Eliminator {
 public:
  struct Reduction {
    /// What is left of the vector after clearing every pivot.
    SparseVec<Key> residual;
    /// v - sum_i combination[i] * input_i == residual.
    SparseVec<std::size_t> combination;
  };

  Reduction reduce(const SparseVec<Key>& v) const {
    Reduction out;
    SparseVec<Key> work = v;
    while (!work.empty()) {
      auto last = std::prev(work.end());
      auto row = rows_.find(last->first);
      if (row == rows_.end()) {
        out.residual.insert(*last);
        work.erase(last);
        continue;
      }
      const Scalar c = last->second;
      axpy(work, -c, row->second.vec);
      axpy(out.combination, c, row->second.combo);
    }
    return out;
  }

  /// Adds input `index`; true when it raised the rank. A dependent input
  /// records the kernel vector e_index - combination.
  bool insert(const SparseVec<Key>& v, std::size_t index) {
    Reduction r = reduce(v);
    SparseVec<std::size_t> combo;
    combo[index] = 1;
    axpy(combo, Scalar(-1), r.combination);
    if (r.residual.empty()) {
      kernel_.push_back(std::move(combo));
      return false;
    }
    const Scalar lead = r.residual.rbegin()->second;
    const Scalar inv = 1 / lead;
    for (auto& [k, c] : r.residual) c *= inv;
    for (auto& [k, c] : combo) c *= inv;
    const Key pivot = r.residual.rbegin()->first;
    rows_.emplace(pivot, Row{std::move(r.residual), std::move(combo)});
    return true;
  }

  bool in_span(const SparseVec<Key>& v) const { return reduce(v).residual.empty(); }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<SparseVec<std::size_t>>& kernel() const { return kernel_; }

 private:
  struct Row {
    SparseVec<Key> vec;
    SparseVec<std::size_t> combo;
  };
  std::map<Key, Row> rows_;
  std::vector<SparseVec<std::size_t>> kernel_;
};

}  // namespace qbundle
