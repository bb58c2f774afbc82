#pragma once

#include <string>

#include "pencil.hpp"

namespace rim {

/* Read one Matrix Market file (coordinate or array; real, integer,
 * complex or pattern fields; general, symmetric, skew-symmetric or
 * hermitian symmetry). Returns a complex matrix plus a flag telling
 * whether every entry was real. */
struct MatrixMarketData {
  SparseComplexMatrix matrix;
  bool all_real = true;
  bool coordinate = true;
};

MatrixMarketData read_matrix_market(const std::string& path);

/* Build a pencil from two Matrix Market files. The pencil is stored real
 * when both files are real, and the storage hint follows the file format
 * (coordinate -> sparse, array -> dense). */
Pencil load_matrix_market(const std::string& path_a, const std::string& path_b);

/* Write both matrices in coordinate format with full %.17g precision, so
 * save-then-load reproduces entries bit-exactly. */
void save_matrix_market(const Pencil& pencil, const std::string& path_a,
                        const std::string& path_b);

}  // namespace rim
