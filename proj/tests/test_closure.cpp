#include <doctest.h>

#include "oracle.hpp"
#include "p8cryst/closure.hpp"

using namespace p8;

namespace {
Matrix m1(const char* s) { return Matrix::from_rows({Vector{parse_cyclo(s)}}); }
}  // namespace

TEST_CASE("cyclic groups") {
  CHECK(linear_closure({m1("w")}, 10).size() == 3);
  CHECK(linear_closure({m1("i")}, 10).size() == 4);
  CHECK(linear_closure({m1("-conj(w)")}, 10).size() == 6);
  CHECK(linear_closure({m1("w"), m1("i")}, 20).size() == 12);
}

TEST_CASE("closure errors past the limit") {
  CHECK_THROWS_AS(linear_closure({m1("1 + i")}, 50), ClosureError);
  CHECK_THROWS_AS(linear_closure({m1("e9")}, 5), ClosureError);
  CHECK_THROWS_AS(linear_closure({}, 5), ClosureError);
}

TEST_CASE("serial and parallel closures agree element by element") {
  const Matrix a = Matrix::from_rows({Vector{CycloNum(0), CycloNum(1)}, Vector{CycloNum(1), CycloNum(0)}});
  const Matrix b = Matrix::from_rows({Vector{parse_cyclo("w"), CycloNum(0)}, Vector{CycloNum(0), CycloNum(1)}});
  const auto s = linear_closure_serial({a, b}, 100);
  const auto p = linear_closure({a, b}, 100, Exec::parallel);
  CHECK(s.size() == 18);
  CHECK(s == p);
  CHECK(oracle::complex_group_order({oracle::embed(a), oracle::embed(b)}) == 18);
}

TEST_CASE("words reconstruct elements") {
  const std::vector<Matrix> gens{m1("w"), m1("i")};
  auto res = bfs_closure<Matrix>({Matrix::identity(1)}, 2,
                                 [&](const Matrix& x, std::size_t k) { return x * gens[k]; }, 100);
  for (std::size_t k = 0; k < res.elements.size(); ++k) {
    Matrix p = Matrix::identity(1);
    for (auto g : res.word(k)) p = p * gens[g];
    CHECK(p == res.elements[k]);
    CHECK(res.word(k).size() == res.depth[k]);
  }
}

TEST_CASE("cap and depth limits") {
  const std::vector<Matrix> gens{m1("2")};
  auto res = bfs_closure<Matrix>({Matrix::identity(1)}, 1,
                                 [&](const Matrix& x, std::size_t k) { return x * gens[k]; }, 10);
  CHECK_FALSE(res.complete);
  CHECK(res.elements.size() == 10);
  auto shallow = bfs_closure<Matrix>({Matrix::identity(1)}, 1,
                                     [&](const Matrix& x, std::size_t k) { return x * gens[k]; }, 10, Exec::serial, 3);
  CHECK(shallow.complete);
  CHECK(shallow.elements.size() == 4);
}

TEST_CASE("operator order") {
  CHECK(operator_order(m1("-w")) == 6);
  CHECK(operator_order(Matrix::identity(3)) == 1);
  CHECK_FALSE(try_operator_order(m1("1 + i")).has_value());
  CHECK_THROWS_AS(operator_order(m1("e9"), 8), ClosureError);
}
