#include "eipose/la/ratmat.hpp"

namespace eipose {

std::vector<int> RatMat::rref() {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
        int pr = -1;
        for (int r = row; r < rows_; ++r) {
            if (at(r, col) != 0) {
                pr = r;
                break;
            }
        }
        if (pr < 0)
            continue;
        if (pr != row)
            for (int c = 0; c < cols_; ++c)
                std::swap(at(pr, c), at(row, c));
        const mpq_class inv = 1 / at(row, col);
        for (int c = col; c < cols_; ++c)
            at(row, c) *= inv;
        for (int r = 0; r < rows_; ++r) {
            if (r == row || at(r, col) == 0)
                continue;
            const mpq_class factor = at(r, col);
            for (int c = col; c < cols_; ++c)
                at(r, c) -= factor * at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::vector<std::vector<mpq_class>> RatMat::null_space() const {
    RatMat m(*this);
    const std::vector<int> pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots)
        is_pivot[c] = true;
    std::vector<std::vector<mpq_class>> basis;
    for (int free = 0; free < cols_; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<mpq_class> v(cols_, mpq_class(0));
        v[free] = 1;
        for (size_t p = 0; p < pivots.size(); ++p)
            v[pivots[p]] = -m.at(static_cast<int>(p), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

int RatMat::rank() const {
    RatMat m(*this);
    return static_cast<int>(m.rref().size());
}

} // namespace eipose
