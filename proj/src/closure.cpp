#include "p8cryst/closure.hpp"

namespace p8 {

std::vector<Matrix> linear_closure(const std::vector<Matrix>& gens, std::size_t max_size, Exec exec) {
  if (gens.empty()) throw ClosureError("linear_closure needs at least one generator");
  const std::size_t n = gens[0].rows();
  for (const auto& g : gens)
    if (!g.square() || g.rows() != n) throw ClosureError("generators must be square of equal size");
  auto res = bfs_closure<Matrix>({Matrix::identity(n, gens[0](0, 0).field())}, gens.size(),
                                 [&](const Matrix& a, std::size_t k) { return a * gens[k]; },
                                 max_size, exec);
  if (!res.complete)
    throw ClosureError("group closure exceeded " + std::to_string(max_size) + " elements");
  return std::move(res.elements);
}

std::vector<Matrix> linear_closure_serial(const std::vector<Matrix>& gens, std::size_t max_size) {
  return linear_closure(gens, max_size, Exec::serial);
}

std::optional<int> try_operator_order(const Matrix& m, int max) {
  if (max < 1) throw ClosureError("operator_order bound must be positive");
  Matrix p = m;
  for (int k = 1; k <= max; ++k) {
    if (p.is_identity()) return k;
    p = p * m;
  }
  return std::nullopt;
}

int operator_order(const Matrix& m, int max) {
  if (auto k = try_operator_order(m, max)) return *k;
  throw ClosureError("operator order exceeds " + std::to_string(max));
}

}  // namespace p8
