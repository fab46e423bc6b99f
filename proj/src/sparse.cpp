#include "pagefem/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <string>

#include "pagefem/parallel.hpp"

namespace pagefem {

SparseMatrix SparseMatrix::from_triplets(std::size_t n, std::span<const Index> rows,
                                         std::span<const Index> cols,
                                         std::span<const double> vals) {
    if (rows.size() != cols.size() || rows.size() != vals.size())
        throw DimensionError("from_triplets: rows, cols and values differ in length");
    const std::size_t nt = rows.size();
    for (std::size_t t = 0; t < nt; ++t)
        if (rows[t] >= n || cols[t] >= n)
            throw DimensionError("from_triplets: index (" + std::to_string(rows[t]) + ", " +
                                 std::to_string(cols[t]) + ") out of range for size " +
                                 std::to_string(n));

    // Counting sort by row keeps the input order within a row.
    std::vector<std::size_t> start(n + 1, 0);
    for (std::size_t t = 0; t < nt; ++t) ++start[rows[t] + 1];
    std::partial_sum(start.begin(), start.end(), start.begin());
    std::vector<std::size_t> order(nt);
    {
        std::vector<std::size_t> next(start.begin(), start.end() - 1);
        for (std::size_t t = 0; t < nt; ++t) order[next[rows[t]]++] = t;
    }

    SparseMatrix a;
    a.n_ = n;
    a.row_ptr_.assign(n + 1, 0);
    std::vector<std::vector<Index>> row_cols(n);
    std::vector<std::vector<double>> row_vals(n);
    parallel_for(n, [&](std::size_t lo, std::size_t hi) {
        std::vector<std::size_t> seg;
        for (std::size_t r = lo; r < hi; ++r) {
            seg.assign(order.begin() + static_cast<std::ptrdiff_t>(start[r]),
                       order.begin() + static_cast<std::ptrdiff_t>(start[r + 1]));
            std::stable_sort(seg.begin(), seg.end(),
                             [&](std::size_t x, std::size_t y) { return cols[x] < cols[y]; });
            auto& rc = row_cols[r];
            auto& rv = row_vals[r];
            for (std::size_t t : seg) {
                if (!rc.empty() && rc.back() == cols[t]) {
                    rv.back() += vals[t];
                } else {
                    rc.push_back(cols[t]);
                    rv.push_back(vals[t]);
                }
            }
        }
    });
    for (std::size_t r = 0; r < n; ++r) a.row_ptr_[r + 1] = a.row_ptr_[r] + row_cols[r].size();
    a.col_idx_.reserve(a.row_ptr_[n]);
    a.values_.reserve(a.row_ptr_[n]);
    for (std::size_t r = 0; r < n; ++r) {
        a.col_idx_.insert(a.col_idx_.end(), row_cols[r].begin(), row_cols[r].end());
        a.values_.insert(a.values_.end(), row_vals[r].begin(), row_vals[r].end());
    }
    return a;
}

double SparseMatrix::operator()(Index i, Index j) const {
    const auto b = col_idx_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[i]);
    const auto e = col_idx_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[i + 1]);
    const auto it = std::lower_bound(b, e, j);
    return (it != e && *it == j) ? values_[static_cast<std::size_t>(it - col_idx_.begin())] : 0.0;
}

void SparseMatrix::multiply(std::span<const double> x, std::span<double> y) const {
    if (x.size() != n_ || y.size() != n_) throw DimensionError("multiply: vector length mismatch");
    parallel_for(n_, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t r = lo; r < hi; ++r) {
            double s = 0.0;
            for (std::size_t p = row_ptr_[r]; p < row_ptr_[r + 1]; ++p) s += values_[p] * x[col_idx_[p]];
            y[r] = s;
        }
    });
}

std::vector<double> SparseMatrix::operator*(std::span<const double> x) const {
    std::vector<double> y(n_);
    multiply(x, y);
    return y;
}

double SparseMatrix::quadratic_form(std::span<const double> x) const {
    const auto y = *this * x;
    double s = 0.0;
    for (std::size_t i = 0; i < n_; ++i) s += x[i] * y[i];
    return s;
}

std::vector<double> SparseMatrix::diagonal() const {
    std::vector<double> d(n_);
    for (std::size_t i = 0; i < n_; ++i) d[i] = (*this)(i, i);
    return d;
}

double SparseMatrix::inf_norm() const {
    double best = 0.0;
    for (std::size_t r = 0; r < n_; ++r) {
        double s = 0.0;
        for (std::size_t p = row_ptr_[r]; p < row_ptr_[r + 1]; ++p) s += std::abs(values_[p]);
        best = std::max(best, s);
    }
    return best;
}

double SparseMatrix::asymmetry() const {
    double worst = 0.0;
    for (std::size_t r = 0; r < n_; ++r)
        for (std::size_t p = row_ptr_[r]; p < row_ptr_[r + 1]; ++p)
            worst = std::max(worst, std::abs(values_[p] - (*this)(col_idx_[p], r)));
    return worst;
}

SparseMatrix SparseMatrix::submatrix(std::span<const Index> keep) const {
    constexpr Index kDropped = static_cast<Index>(-1);
    std::vector<Index> map(n_, kDropped);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] >= n_) throw DimensionError("submatrix: index out of range");
        map[keep[i]] = i;
    }
    SparseMatrix s;
    s.n_ = keep.size();
    s.row_ptr_.assign(1, 0);
    for (Index r : keep) {
        for (std::size_t p = row_ptr_[r]; p < row_ptr_[r + 1]; ++p)
            if (map[col_idx_[p]] != kDropped) {
                s.col_idx_.push_back(map[col_idx_[p]]);
                s.values_.push_back(values_[p]);
            }
        s.row_ptr_.push_back(s.col_idx_.size());
    }
    return s;
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.n_ != b.n_) throw DimensionError("sparse sum: size mismatch");
    SparseMatrix s;
    s.n_ = a.n_;
    s.row_ptr_.assign(1, 0);
    for (std::size_t r = 0; r < a.n_; ++r) {
        std::size_t p = a.row_ptr_[r], q = b.row_ptr_[r];
        const std::size_t pe = a.row_ptr_[r + 1], qe = b.row_ptr_[r + 1];
        while (p < pe || q < qe) {
            if (q == qe || (p < pe && a.col_idx_[p] < b.col_idx_[q])) {
                s.col_idx_.push_back(a.col_idx_[p]);
                s.values_.push_back(a.values_[p++]);
            } else if (p == pe || b.col_idx_[q] < a.col_idx_[p]) {
                s.col_idx_.push_back(b.col_idx_[q]);
                s.values_.push_back(b.values_[q++]);
            } else {
                s.col_idx_.push_back(a.col_idx_[p]);
                s.values_.push_back(a.values_[p++] + b.values_[q++]);
            }
        }
        s.row_ptr_.push_back(s.col_idx_.size());
    }
    return s;
}

std::vector<double> SparseMatrix::to_dense() const {
    std::vector<double> d(n_ * n_, 0.0);
    for (std::size_t r = 0; r < n_; ++r)
        for (std::size_t p = row_ptr_[r]; p < row_ptr_[r + 1]; ++p) d[col_idx_[p] * n_ + r] = values_[p];
    return d;
}

SparseMatrix scatter_triplets(const PageArray& local, const IndexTable& elems, std::size_t n) {
    const std::size_t nlb = elems.cols(), ne = elems.rows();
    if (local.rows() != nlb || local.cols() != nlb || local.pages() != ne)
        throw DimensionError("scatter_triplets: local pages must be nlb × nlb × ne");
    const std::size_t per = nlb * nlb;
    std::vector<Index> rows(ne * per), cols(ne * per);
    parallel_for(ne, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t k = lo; k < hi; ++k)
            for (std::size_t j = 0; j < nlb; ++j)
                for (std::size_t i = 0; i < nlb; ++i) {
                    rows[k * per + j * nlb + i] = elems(k, i);
                    cols[k * per + j * nlb + i] = elems(k, j);
                }
    });
    return SparseMatrix::from_triplets(n, rows, cols, local.data());
}

void write_matrix_market(std::ostream& os, const SparseMatrix& a) {
    char buf[64];
    os << "%%MatrixMarket matrix coordinate real general\n";
    os << a.size() << ' ' << a.size() << ' ' << a.nonzeros() << '\n';
    const auto rp = a.row_ptr();
    const auto ci = a.col_idx();
    const auto v = a.values();
    for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t p = rp[r]; p < rp[r + 1]; ++p) {
            std::snprintf(buf, sizeof buf, "%.17g", v[p]);
            os << r + 1 << ' ' << ci[p] + 1 << ' ' << buf << '\n';
        }
}

void write_matrix_market(std::ostream& os, std::span<const double> v) {
    char buf[64];
    os << "%%MatrixMarket matrix array real general\n";
    os << v.size() << " 1\n";
    for (double x : v) {
        std::snprintf(buf, sizeof buf, "%.17g", x);
        os << buf << '\n';
    }
}

} // namespace pagefem
