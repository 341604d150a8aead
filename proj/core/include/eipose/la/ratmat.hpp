#ifndef EIPOSE_LA_RATMAT_HPP
#define EIPOSE_LA_RATMAT_HPP

#include <gmpxx.h>

#include <vector>

namespace eipose {

/// Dense matrix of exact rationals; just enough linear algebra for the
/// offline stage (null spaces of random instances, template closure checks).
class RatMat {
  public:
    RatMat(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    mpq_class &at(int r, int c) { return data_[r * cols_ + c]; }
    const mpq_class &at(int r, int c) const { return data_[r * cols_ + c]; }

    /// In-place reduced row echelon form; returns pivot column indices.
    std::vector<int> rref();

    /// Basis of the right null space, one column vector per basis element.
    std::vector<std::vector<mpq_class>> null_space() const;

    int rank() const;

  private:
    int rows_, cols_;
    std::vector<mpq_class> data_;
};

} // namespace eipose

#endif
