#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "pagefem/page_array.hpp"

namespace pagefem {

/// Square matrix in compressed sparse row form.
class SparseMatrix {
public:
    SparseMatrix() = default;

    /// Duplicates are summed in input order after a stable sort by (row, col),
    /// so the result does not depend on how the triplets were produced.
    static SparseMatrix from_triplets(std::size_t n, std::span<const Index> rows,
                                      std::span<const Index> cols, std::span<const double> vals);

    std::size_t size() const noexcept { return n_; }
    std::size_t nonzeros() const noexcept { return values_.size(); }
    std::span<const std::size_t> row_ptr() const noexcept { return row_ptr_; }
    std::span<const Index> col_idx() const noexcept { return col_idx_; }
    std::span<const double> values() const noexcept { return values_; }

    /// Stored entry or 0.
    double operator()(Index i, Index j) const;

    /// y = A·x. Rows are processed in parallel; each row sums in column order.
    void multiply(std::span<const double> x, std::span<double> y) const;
    std::vector<double> operator*(std::span<const double> x) const;

    /// xᵀ A x with a fixed summation order.
    double quadratic_form(std::span<const double> x) const;

    std::vector<double> diagonal() const;
    double inf_norm() const;
    /// max |a_ij − a_ji|.
    double asymmetry() const;

    /// Rows and columns listed in `keep` (ascending), renumbered 0..|keep|−1.
    SparseMatrix submatrix(std::span<const Index> keep) const;

    /// Entry-wise sum of two matrices of equal size.
    friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);

    /// Dense column-major copy, for small checks.
    std::vector<double> to_dense() const;

private:
    std::size_t n_ = 0;
    std::vector<std::size_t> row_ptr_{0};
    std::vector<Index> col_idx_;
    std::vector<double> values_;
};

/// A[elems(k,i), elems(k,j)] += local(i, j, k) over all k, i, j.
SparseMatrix scatter_triplets(const PageArray& local, const IndexTable& elems, std::size_t n);

/// MatrixMarket coordinate (real general) and array formats.
void write_matrix_market(std::ostream& os, const SparseMatrix& a);
void write_matrix_market(std::ostream& os, std::span<const double> v);

} // namespace pagefem
