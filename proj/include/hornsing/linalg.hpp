#pragma once
#include <vector>

#include "hornsing/rational.hpp"

namespace hornsing {

using RMatrix = std::vector<std::vector<Rational>>;
using RVector = std::vector<Rational>;
using ZMatrix = std::vector<std::vector<Integer>>;

struct Echelon {
    ZMatrix rows;               // first rank() rows are the pivot rows
    std::vector<size_t> pivots; // pivot column of each pivot row
    size_t ncols = 0;
    size_t rank() const { return pivots.size(); }
};

// Rows scaled to primitive integer rows, then fraction-free (Bareiss)
// elimination. The parallel variant splits the row updates of each pivot step
// across OpenMP threads; both produce identical matrices.
Echelon echelon_serial(const RMatrix& a, size_t ncols);
Echelon echelon_parallel(const RMatrix& a, size_t ncols);

// Right nullspace basis, one primitive integer vector per free column.
std::vector<RVector> nullspace(const RMatrix& a, size_t ncols);
std::vector<RVector> nullspace_serial(const RMatrix& a, size_t ncols);
std::vector<RVector> nullspace_of(const Echelon& e);

size_t rank(const RMatrix& a, size_t ncols);

RVector mat_vec(const RMatrix& a, const RVector& v);
RVector primitive_vector(const RVector& v);

}  // namespace hornsing
