#include "pagefem/page_array.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <string>

namespace pagefem {

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.assign(rows_ * cols_, 0.0);
    std::size_t i = 0;
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionError("Matrix: ragged initializer");
        std::size_t j = 0;
        for (double v : r) (*this)(i, j++) = v;
        ++i;
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t j = 0; j < cols_; ++j)
        for (std::size_t i = 0; i < rows_; ++i) t(j, i) = (*this)(i, j);
    return t;
}

namespace {
void require_positive(std::size_t rows, std::size_t cols, std::size_t pages) {
    if (rows == 0) throw DimensionError("PageArray: rows must be positive");
    if (cols == 0) throw DimensionError("PageArray: cols must be positive");
    if (pages == 0) throw DimensionError("PageArray: pages must be positive");
}
} // namespace

PageArray::PageArray(std::size_t rows, std::size_t cols, std::size_t pages)
    : rows_(rows), cols_(cols), pages_(pages) {
    require_positive(rows, cols, pages);
    data_.assign(rows * cols * pages, 0.0);
}

PageArray::PageArray(std::size_t rows, std::size_t cols, std::size_t pages,
                     std::vector<double> data)
    : rows_(rows), cols_(cols), pages_(pages), data_(std::move(data)) {
    require_positive(rows, cols, pages);
    if (data_.size() != rows * cols * pages)
        throw DimensionError("PageArray: data length " + std::to_string(data_.size()) +
                             " does not equal rows*cols*pages");
}

PageArray PageArray::replicate(const Matrix& m, std::size_t pages) {
    PageArray a(m.rows(), m.cols(), pages);
    for (std::size_t k = 0; k < pages; ++k) std::ranges::copy(m.data(), a.page(k).begin());
    return a;
}

Matrix PageArray::page_matrix(std::size_t k) const {
    Matrix m(rows_, cols_);
    std::ranges::copy(page(k), m.data().begin());
    return m;
}

void PageArray::set_page(std::size_t k, const Matrix& m) {
    if (m.rows() != rows_) throw DimensionError("set_page: rows mismatch");
    if (m.cols() != cols_) throw DimensionError("set_page: cols mismatch");
    std::ranges::copy(m.data(), page(k).begin());
}

PageVector::PageVector(PageArray a) : array_(std::move(a)) {
    if (array_.cols() != 1) throw DimensionError("PageVector: cols must be 1");
}

PageScalars::PageScalars(std::size_t pages, double value) : array_(1, 1, pages) {
    std::ranges::fill(array_.data(), value);
}

PageScalars::PageScalars(std::vector<double> values) {
    const std::size_t n = values.size();
    array_ = PageArray(1, 1, n, std::move(values));
}

PageScalars::PageScalars(PageArray a) : array_(std::move(a)) {
    if (array_.rows() != 1) throw DimensionError("PageScalars: rows must be 1");
    if (array_.cols() != 1) throw DimensionError("PageScalars: cols must be 1");
}

void write_dump(std::ostream& os, const PageArray& a) {
    os << a.rows() << ' ' << a.cols() << ' ' << a.pages() << '\n';
    char buf[32];
    for (double v : a.data()) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        os << buf << '\n';
    }
}

PageArray read_dump(std::istream& is) {
    std::size_t rows = 0, cols = 0, pages = 0;
    if (!(is >> rows >> cols >> pages)) throw DimensionError("read_dump: malformed header");
    std::vector<double> data(rows * cols * pages);
    for (double& v : data) {
        std::string tok;
        if (!(is >> tok)) throw DimensionError("read_dump: truncated data");
        v = std::stod(tok);
    }
    return PageArray(rows, cols, pages, std::move(data));
}

} // namespace pagefem
