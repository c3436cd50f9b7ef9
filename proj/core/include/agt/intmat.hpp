#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "agt/cardinal.hpp"  // Int

namespace agt::intmat {

// Row-major exact integer matrices; rows are lattice generators.
using Row = std::vector<Int>;
using Mat = std::vector<Row>;

Mat stack(const Mat& a, const Mat& b);

// Canonical row Hermite normal form: staircase of independent rows with
// positive pivots and the entries above each pivot reduced into [0, pivot).
// Zero rows are dropped, so the result is a canonical basis of the row
// lattice: two generating sets span the same lattice iff their HNFs are
// identical.
Mat row_hnf(Mat m);

// Same elimination, also returning a unimodular U with U * input = H;
// H keeps its zero rows so the correspondence with U's rows is positional.
std::pair<Mat, Mat> row_hnf_transform(Mat m);

// Basis of { x : x * m = 0 } as rows.
Mat left_kernel(const Mat& m);

// Is v in the row lattice? hnf must be canonical (row_hnf output).
bool member(const Row& v, const Mat& hnf);

// Integer coefficients x with x * hnf = v, if v lies in the row lattice.
std::optional<Row> solve_in_hnf(const Row& v, const Mat& hnf);

// Invariant factors d1 | d2 | ... | dr (positive, nonzero) of the row
// lattice, i.e. the torsion orders of Z^cols / rowspace together with 1s.
std::vector<Int> snf_diagonal(Mat m);

// Product of pivots of a canonical HNF with full column rank.
Int det_of_hnf(const Mat& hnf);

// Row-list form, e.g. [[2,0],[0,3]]; [] for the empty matrix.
std::string to_string(const Mat& m);

}  // namespace agt::intmat
