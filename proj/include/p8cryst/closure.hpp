#pragma once

// Breadth-first closure of a finitely generated monoid action.
//
// The frontier expansion (state x generator products) is the hot loop; with
// OpenMP it is computed in parallel and merged serially in frontier order, so
// the discovered sequence is identical to the serial run.

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "p8cryst/linalg.hpp"

namespace p8 {

class ClosureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Exec { serial, parallel };

template <class State>
struct ClosureResult {
  std::vector<State> elements;     // discovery order, seeds first
  std::vector<std::size_t> parent;  // index of predecessor (npos for seeds)
  std::vector<std::size_t> via;     // generator index used to reach it
  std::vector<std::size_t> depth;
  bool complete = true;  // false when the cap was hit

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  // Generator indices of a word reaching element k from its seed, applied left to right.
  std::vector<std::size_t> word(std::size_t k) const {
    std::vector<std::size_t> w;
    while (parent[k] != npos) {
      w.push_back(via[k]);
      k = parent[k];
    }
    return {w.rbegin(), w.rend()};
  }
};

// step(state, gen_index) returns the successor. Stops adding states beyond
// `cap` (complete = false) and does not expand past `max_depth`.
template <class State, class Hash = std::hash<State>, class Eq = std::equal_to<State>, class Step>
ClosureResult<State> bfs_closure(const std::vector<State>& seeds, std::size_t num_gens, Step step,
                                 std::size_t cap, Exec exec = Exec::serial,
                                 std::size_t max_depth = static_cast<std::size_t>(-1)) {
  using R = ClosureResult<State>;
  R res;
  std::unordered_map<State, std::size_t, Hash, Eq> index;
  auto add = [&](State s, std::size_t parent, std::size_t via, std::size_t depth) {
    if (index.count(s)) return false;
    if (res.elements.size() >= cap) {
      res.complete = false;
      return false;
    }
    index.emplace(s, res.elements.size());
    res.elements.push_back(std::move(s));
    res.parent.push_back(parent);
    res.via.push_back(via);
    res.depth.push_back(depth);
    return true;
  };
  std::vector<std::size_t> frontier;
  for (const auto& s : seeds)
    if (add(s, R::npos, 0, 0)) frontier.push_back(res.elements.size() - 1);

  std::size_t depth = 0;
  while (!frontier.empty() && res.complete && depth < max_depth) {
    const std::size_t m = frontier.size() * num_gens;
    std::vector<std::optional<State>> next(m);
    if (exec == Exec::parallel) {
#if defined(P8_HAVE_OPENMP)
#pragma omp parallel for schedule(dynamic, 8)
#endif
      for (long long k = 0; k < static_cast<long long>(m); ++k) {
        const std::size_t uk = static_cast<std::size_t>(k);
        next[uk].emplace(step(res.elements[frontier[uk / num_gens]], uk % num_gens));
      }
    } else {
      for (std::size_t k = 0; k < m; ++k)
        next[k].emplace(step(res.elements[frontier[k / num_gens]], k % num_gens));
    }
    ++depth;
    std::vector<std::size_t> new_frontier;
    for (std::size_t k = 0; k < m && res.complete; ++k) {
      if (add(std::move(*next[k]), frontier[k / num_gens], k % num_gens, depth))
        new_frontier.push_back(res.elements.size() - 1);
    }
    frontier = std::move(new_frontier);
  }
  return res;
}

// Finite matrix group generated by `gens`; throws ClosureError past max_size.
std::vector<Matrix> linear_closure(const std::vector<Matrix>& gens, std::size_t max_size,
                                   Exec exec = Exec::parallel);
std::vector<Matrix> linear_closure_serial(const std::vector<Matrix>& gens, std::size_t max_size);

// Least k <= max with m^k = I; throws ClosureError otherwise.
int operator_order(const Matrix& m, int max = 24);
// Same, returning nullopt instead of throwing.
std::optional<int> try_operator_order(const Matrix& m, int max = 24);

}  // namespace p8

template <>
struct std::hash<p8::Matrix> {
  std::size_t operator()(const p8::Matrix& m) const noexcept { return m.hash(); }
};
