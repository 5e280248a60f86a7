#ifndef ZONOSPLINE_DETAIL_SUBSETS_HPP
#define ZONOSPLINE_DETAIL_SUBSETS_HPP

#include <type_traits>
#include <vector>

namespace zonospline::detail {

// Visits every k-subset of `pool` in lexicographic order. The visitor may
// return void, or bool where false stops the enumeration.
template <class Visit>
void for_each_subset_of(const std::vector<int>& pool, int k, Visit visit) {
  const int n = static_cast<int>(pool.size());
  if (k > n || k < 0) return;
  std::vector<int> idx(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
  std::vector<int> pick(static_cast<size_t>(k));
  while (true) {
    for (int i = 0; i < k; ++i)
      pick[static_cast<size_t>(i)] =
          pool[static_cast<size_t>(idx[static_cast<size_t>(i)])];
    if constexpr (std::is_void_v<decltype(visit(pick))>) {
      visit(pick);
    } else {
      if (!visit(pick)) return;
    }
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<size_t>(pos)] == n - k + pos) --pos;
    if (pos < 0) return;
    ++idx[static_cast<size_t>(pos)];
    for (int j = pos + 1; j < k; ++j)
      idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  }
}

// k-subsets of {0, ..., n-1}.
template <class Visit>
void for_each_subset(int n, int k, Visit visit) {
  std::vector<int> pool(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) pool[static_cast<size_t>(i)] = i;
  for_each_subset_of(pool, k, visit);
}

}  // namespace zonospline::detail

#endif
