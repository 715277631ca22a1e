#ifndef PNB_LINALG_HPP
#define PNB_LINALG_HPP

#include "pnb/rational.hpp"

#include <cstddef>
#include <vector>

namespace pnb {

/// Dense matrix over Q with exact Gaussian elimination. Sizes here are tiny
/// (a few hundred rows at most), so no pivoting heuristics are needed.
class QMatrix {
  public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    long rank() const {
        QMatrix m = *this;
        return m.eliminate();
    }

    /// Inverse of a square matrix; throws if singular.
    QMatrix inverse() const {
        if (rows_ != cols_) throw std::invalid_argument("QMatrix::inverse: not square");
        QMatrix aug(rows_, 2 * cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
            aug.at(i, cols_ + i) = 1;
        }
        if (aug.eliminate() != static_cast<long>(rows_))
            throw std::invalid_argument("QMatrix::inverse: singular matrix");
        QMatrix inv(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
        return inv;
    }

    /// Basis of the right nullspace, one column vector per basis element.
    std::vector<std::vector<Rat>> nullspace() const {
        QMatrix m = *this;
        std::vector<std::size_t> pivot_col;
        m.eliminate(&pivot_col);
        std::vector<bool> is_pivot(cols_, false);
        for (std::size_t c : pivot_col) is_pivot[c] = true;

        std::vector<std::vector<Rat>> basis;
        for (std::size_t freec = 0; freec < cols_; ++freec) {
            if (is_pivot[freec]) continue;
            std::vector<Rat> v(cols_, Rat(0));
            v[freec] = 1;
            // back-substitute: row r has pivot 1 at pivot_col[r]
            for (std::size_t r = pivot_col.size(); r-- > 0;) {
                Rat s = 0;
                for (std::size_t c = pivot_col[r] + 1; c < cols_; ++c) s += m.at(r, c) * v[c];
                v[pivot_col[r]] = -s;
            }
            basis.push_back(std::move(v));
        }
        return basis;
    }

  private:
    // Row echelon form in place; returns rank, optionally records pivot columns.
    long eliminate(std::vector<std::size_t>* pivots = nullptr) {
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t p = r;
            while (p < rows_ && at(p, c) == 0) ++p;
            if (p == rows_) continue;
            if (p != r)
                for (std::size_t j = c; j < cols_; ++j) std::swap(at(p, j), at(r, j));
            Rat inv = at(r, c);
            for (std::size_t j = c; j < cols_; ++j) at(r, j) /= inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r || at(i, c) == 0) continue;
                Rat f = at(i, c);
                for (std::size_t j = c; j < cols_; ++j) at(i, j) -= f * at(r, j);
            }
            if (pivots) pivots->push_back(c);
            ++r;
        }
        return static_cast<long>(r);
    }

    std::size_t rows_, cols_;
    std::vector<Rat> a_;
};

} // namespace pnb

#endif
