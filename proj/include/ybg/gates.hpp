#pragma once

#include <cmath>

#include "ybg/matrix.hpp"
#include "ybg/ybe.hpp"

namespace ybg {

/// Unitary entangling 4x4 R-matrix (real rotation-like gate).
inline DenseMatrix example_c() {
    const double s = 1.0 / std::sqrt(2.0);
    return DenseMatrix::from_rows({{s, 0, 0, s},
                                   {0, s, -s, 0},
                                   {0, s, s, 0},
                                   {-s, 0, 0, s}});
}

/// Invertible non-unitary 4x4 R-matrix.
inline DenseMatrix example_d() {
    return DenseMatrix::from_rows({{2, 0, 0, 0},
                                   {0, 0, 1, 0},
                                   {0, 1, 1.5, 0},
                                   {0, 0, 0, 2}});
}

inline DenseMatrix cnot() {
    return DenseMatrix::from_rows({{1, 0, 0, 0},
                                   {0, 1, 0, 0},
                                   {0, 0, 0, 1},
                                   {0, 0, 1, 0}});
}

/// Permutation R-matrix swapping the two extreme basis states:
/// fixes e2, e3 and exchanges e1 <-> e4.
inline DenseMatrix extreme_swap() {
    return DenseMatrix::from_rows({{0, 0, 0, 1},
                                   {0, 1, 0, 0},
                                   {0, 0, 1, 0},
                                   {1, 0, 0, 0}});
}

}  // namespace ybg
