#ifndef QDECO_LINALG_HPP
#define QDECO_LINALG_HPP

#include <vector>

namespace qdeco {

// Eigenvalues of a dense symmetric n x n matrix (row-major, only the data
// for the full matrix), computed with cyclic Jacobi rotations. Returned in
// ascending order. Intended for the small adjacency matrices the spectral
// bound sees; accuracy is ample for counting eigenvalue signs.
std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n);

} // namespace qdeco

#endif // QDECO_LINALG_HPP
