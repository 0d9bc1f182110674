#pragma once

// Enumeration of F_p-spans. Codes are stored by generators; every exhaustive
// analysis walks the span with an odometer that adds one generator per digit
// step, so the cost per codeword is amortised O(1) generator additions.

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace hermcodes {

void set_thread_count(unsigned count);
unsigned thread_count();

/// Visits start + Σ d_i gens[i] for every digit vector d ∈ F_p^k, in
/// odometer order (gens[0] is the fastest digit).
template <typename T, typename AddFn, typename Visit>
void enumerate_span(std::uint32_t p, const std::vector<T>& gens, T start, AddFn&& add, Visit&& visit) {
  std::vector<std::uint32_t> digits(gens.size(), 0);
  T state = std::move(start);
  visit(state);
  for (;;) {
    std::size_t i = 0;
    for (; i < gens.size(); ++i) {
      add(state, gens[i]);
      if (++digits[i] < p) break;
      digits[i] = 0;  // p copies of a generator sum to zero
    }
    if (i == gens.size()) return;
    visit(state);
  }
}

/// Splits the span over the top generators into independent chunks, runs
/// `visit(tally, element)` in each chunk and merges chunk tallies in chunk
/// order, so the result does not depend on the thread count.
template <typename T, typename Tally, typename AddFn, typename Visit, typename Merge>
Tally tally_span(std::uint32_t p, const std::vector<T>& gens, const T& zero, AddFn add, const Tally& init,
                 Visit visit, Merge merge) {
  const std::size_t split = std::min<std::size_t>(gens.size(), gens.size() > 6 ? 2 : 0);
  const std::vector<T> inner(gens.begin(), gens.end() - static_cast<std::ptrdiff_t>(split));
  const std::vector<T> outer(gens.end() - static_cast<std::ptrdiff_t>(split), gens.end());

  std::vector<T> starts;
  enumerate_span(p, outer, zero, add, [&](const T& s) { starts.push_back(s); });
  std::vector<Tally> tallies(starts.size(), init);

  auto run_chunk = [&](std::size_t c) {
    Tally& local = tallies[c];
    enumerate_span(p, inner, starts[c], add, [&](const T& v) { visit(local, v); });
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(thread_count(), static_cast<unsigned>(starts.size())));
  if (workers == 1) {
    for (std::size_t c = 0; c < starts.size(); ++c) run_chunk(c);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t c = w; c < starts.size(); c += workers) run_chunk(c);
      });
    for (auto& th : pool) th.join();
  }

  Tally total = init;
  for (auto& t : tallies) merge(total, t);
  return total;
}

}  // namespace hermcodes
