#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "pagefem/table.hpp"

namespace pagefem {

/// Dense rank-3 array holding `pages` independent rows × cols matrices.
///
/// Layout is page-major and column-major within a page: element (i, j, k)
/// lives at offset k·rows·cols + j·rows + i. Every kernel relies on this.
/// All extents are positive.
class PageArray {
public:
    PageArray() = default;
    PageArray(std::size_t rows, std::size_t cols, std::size_t pages);
    PageArray(std::size_t rows, std::size_t cols, std::size_t pages, std::vector<double> data);

    /// `pages` copies of a single matrix.
    static PageArray replicate(const Matrix& m, std::size_t pages);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t pages() const noexcept { return pages_; }
    std::size_t page_size() const noexcept { return rows_ * cols_; }
    std::size_t size() const noexcept { return data_.size(); }

    double& operator()(std::size_t i, std::size_t j, std::size_t k) {
        return data_[k * rows_ * cols_ + j * rows_ + i];
    }
    double operator()(std::size_t i, std::size_t j, std::size_t k) const {
        return data_[k * rows_ * cols_ + j * rows_ + i];
    }

    std::span<double> page(std::size_t k) { return {data_.data() + k * page_size(), page_size()}; }
    std::span<const double> page(std::size_t k) const {
        return {data_.data() + k * page_size(), page_size()};
    }
    Matrix page_matrix(std::size_t k) const;
    void set_page(std::size_t k, const Matrix& m);

    std::span<double> data() noexcept { return data_; }
    std::span<const double> data() const noexcept { return data_; }

    friend bool operator==(const PageArray&, const PageArray&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t pages_ = 0;
    std::vector<double> data_;
};

/// One vector per page. Embedded as a PageArray with a single column.
class PageVector {
public:
    PageVector() = default;
    PageVector(std::size_t length, std::size_t pages) : array_(length, 1, pages) {}
    /// Adopts an array with cols == 1.
    explicit PageVector(PageArray a);

    std::size_t length() const noexcept { return array_.rows(); }
    std::size_t pages() const noexcept { return array_.pages(); }

    double& operator()(std::size_t i, std::size_t k) { return array_(i, 0, k); }
    double operator()(std::size_t i, std::size_t k) const { return array_(i, 0, k); }

    const PageArray& array() const noexcept { return array_; }
    PageArray& array() noexcept { return array_; }

    friend bool operator==(const PageVector&, const PageVector&) = default;

private:
    PageArray array_;
};

/// One scalar per page. Embedded as a 1 × 1 PageArray.
class PageScalars {
public:
    PageScalars() = default;
    explicit PageScalars(std::size_t pages, double value = 0.0);
    explicit PageScalars(std::vector<double> values);
    /// Adopts an array with rows == cols == 1.
    explicit PageScalars(PageArray a);

    std::size_t pages() const noexcept { return array_.pages(); }
    double& operator[](std::size_t k) { return array_.data()[k]; }
    double operator[](std::size_t k) const { return array_.data()[k]; }
    std::span<const double> values() const noexcept { return array_.data(); }

    const PageArray& array() const noexcept { return array_; }

    friend bool operator==(const PageScalars&, const PageScalars&) = default;

private:
    PageArray array_;
};

/// Text dump: header line `rows cols pages`, then the data in layout order,
/// one value per line with 17 significant digits.
void write_dump(std::ostream& os, const PageArray& a);
PageArray read_dump(std::istream& is);

} // namespace pagefem
