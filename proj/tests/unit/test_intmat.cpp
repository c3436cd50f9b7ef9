#include "doctest.h"

#include "agt/intmat.hpp"

using namespace agt;
using intmat::Mat;
using intmat::Row;

namespace {
Mat m(std::initializer_list<std::initializer_list<long long>> rows) {
  Mat out;
  for (auto& r : rows) {
    Row row;
    for (long long v : r) row.push_back(Int(v));
    out.push_back(row);
  }
  return out;
}
}  // namespace

TEST_CASE("row hnf canonical forms") {
  CHECK(intmat::row_hnf(m({{2, 0}, {0, 3}})) == m({{2, 0}, {0, 3}}));
  CHECK(intmat::row_hnf(m({{1, 2}, {3, 4}})) == m({{1, 0}, {0, 2}}));
  CHECK(intmat::row_hnf(m({{0, 0}})) == Mat{});
  // Negative generators and redundant rows collapse to the same basis.
  CHECK(intmat::row_hnf(m({{-6}, {4}})) == m({{2}}));
  CHECK(intmat::row_hnf(m({{2, 4}, {2, 4}})) == m({{2, 4}}));
  // Entry above the pivot is reduced into [0, pivot).
  CHECK(intmat::row_hnf(m({{1, 5}, {0, 2}})) == m({{1, 1}, {0, 2}}));
}

TEST_CASE("hnf transform reproduces the input") {
  Mat in = m({{4, 6}, {2, 2}});
  auto [h, u] = intmat::row_hnf_transform(in);
  REQUIRE(u.size() == in.size());
  for (size_t i = 0; i < u.size(); ++i) {
    Row prod(in[0].size(), Int(0));
    for (size_t k = 0; k < in.size(); ++k)
      for (size_t j = 0; j < in[0].size(); ++j) prod[j] += u[i][k] * in[k][j];
    CHECK(prod == h[i]);
  }
}

TEST_CASE("membership and solving") {
  Mat h = intmat::row_hnf(m({{2, 0}, {0, 3}}));
  CHECK(intmat::member(Row{Int(4), Int(9)}, h));
  CHECK(!intmat::member(Row{Int(1), Int(0)}, h));
  auto coef = intmat::solve_in_hnf(Row{Int(4), Int(9)}, h);
  REQUIRE(coef.has_value());
  CHECK((*coef)[0] == Int(2));
  CHECK((*coef)[1] == Int(3));
  CHECK(!intmat::solve_in_hnf(Row{Int(1), Int(1)}, h).has_value());
}

TEST_CASE("left kernel annihilates the matrix") {
  Mat in = m({{2, 4}, {1, 2}, {3, 6}});
  Mat k = intmat::left_kernel(in);
  CHECK(k.size() == 2);  // rank 1, 3 rows
  for (const Row& x : k) {
    for (size_t j = 0; j < in[0].size(); ++j) {
      Int acc = 0;
      for (size_t i = 0; i < in.size(); ++i) acc += x[i] * in[i][j];
      CHECK(acc == Int(0));
    }
  }
}

TEST_CASE("smith invariant factors") {
  CHECK(intmat::snf_diagonal(m({{2, 0}, {0, 3}})) ==
        std::vector<Int>{Int(1), Int(6)});
  CHECK(intmat::snf_diagonal(m({{4}})) == std::vector<Int>{Int(4)});
  CHECK(intmat::snf_diagonal(m({{2, 0}, {0, 4}})) ==
        std::vector<Int>{Int(2), Int(4)});
  CHECK(intmat::snf_diagonal(m({{6, 4}, {4, 6}})) ==
        std::vector<Int>{Int(2), Int(10)});  // det 20, gcd 2
}

TEST_CASE("matrix rendering") {
  CHECK(intmat::to_string(m({{2, 0}, {0, 3}})) == "[[2,0],[0,3]]");
  CHECK(intmat::to_string(Mat{}) == "[]");
  CHECK(intmat::to_string(m({{-1, 7}})) == "[[-1,7]]");
}
