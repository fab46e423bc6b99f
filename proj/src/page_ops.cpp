#include "pagefem/page_ops.hpp"

#include <cmath>
#include <string>

#include "pagefem/parallel.hpp"

namespace pagefem::pages {

namespace {

void require_equal(std::size_t lhs, std::size_t rhs, const char* op, const char* axis) {
    if (lhs != rhs)
        throw DimensionError(std::string(op) + ": " + axis + " mismatch (" +
                             std::to_string(lhs) + " vs " + std::to_string(rhs) + ")");
}

void require_square(const PageArray& a, const char* op) {
    if (a.rows() != a.cols())
        throw DimensionError(std::string(op) + ": pages are not square (" +
                             std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + ")");
    if (a.rows() > 3)
        throw DimensionError(std::string(op) + ": page size " + std::to_string(a.rows()) +
                             " unsupported (max 3)");
}

template <class Body>
void for_pages(std::size_t pages, Body&& body) {
    parallel_for(pages, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t k = lo; k < hi; ++k) body(k);
    });
}

// Column-major r×c page at p.
inline double at(const double* p, std::size_t rows, std::size_t i, std::size_t j) {
    return p[j * rows + i];
}

double det_page(const double* p, std::size_t n) {
    switch (n) {
    case 1:
        return p[0];
    case 2:
        return p[0] * p[3] - p[2] * p[1];
    default: {
        // Columns: (a0 a1 a2) (a3 a4 a5) (a6 a7 a8).
        return p[0] * (p[4] * p[8] - p[7] * p[5]) - p[3] * (p[1] * p[8] - p[7] * p[2]) +
               p[6] * (p[1] * p[5] - p[4] * p[2]);
    }
    }
}

double inf_norm(const double* p, std::size_t n) {
    double best = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < n; ++j) row += std::abs(at(p, n, i, j));
        best = std::max(best, row);
    }
    return best;
}

void adjugate_inverse(const double* p, std::size_t n, double det, double* out) {
    const double s = 1.0 / det;
    switch (n) {
    case 1:
        out[0] = s;
        return;
    case 2:
        out[0] = p[3] * s;
        out[1] = -p[1] * s;
        out[2] = -p[2] * s;
        out[3] = p[0] * s;
        return;
    default: {
        auto a = [&](std::size_t i, std::size_t j) { return p[j * 3 + i]; };
        auto o = [&](std::size_t i, std::size_t j) -> double& { return out[j * 3 + i]; };
        o(0, 0) = (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) * s;
        o(0, 1) = (a(0, 2) * a(2, 1) - a(0, 1) * a(2, 2)) * s;
        o(0, 2) = (a(0, 1) * a(1, 2) - a(0, 2) * a(1, 1)) * s;
        o(1, 0) = (a(1, 2) * a(2, 0) - a(1, 0) * a(2, 2)) * s;
        o(1, 1) = (a(0, 0) * a(2, 2) - a(0, 2) * a(2, 0)) * s;
        o(1, 2) = (a(0, 2) * a(1, 0) - a(0, 0) * a(1, 2)) * s;
        o(2, 0) = (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0)) * s;
        o(2, 1) = (a(0, 1) * a(2, 0) - a(0, 0) * a(2, 1)) * s;
        o(2, 2) = (a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0)) * s;
        return;
    }
    }
}

} // namespace

PageArray tmul(const PageArray& x, const PageArray& a) {
    require_equal(x.pages(), a.pages(), "tmul", "pages");
    require_equal(x.rows(), a.rows(), "tmul", "rows");
    const std::size_t n = x.rows(), rc = x.cols(), cc = a.cols();
    PageArray out(rc, cc, a.pages());
    for_pages(a.pages(), [&](std::size_t k) {
        const double* px = x.page(k).data();
        const double* pa = a.page(k).data();
        double* po = out.page(k).data();
        for (std::size_t j = 0; j < cc; ++j)
            for (std::size_t i = 0; i < rc; ++i) {
                double s = 0.0;
                for (std::size_t l = 0; l < n; ++l) s += at(px, n, l, i) * at(pa, n, l, j);
                po[j * rc + i] = s;
            }
    });
    return out;
}

PageArray vtmul(const PageVector& v, const PageArray& a) {
    require_equal(v.pages(), a.pages(), "vtmul", "pages");
    require_equal(v.length(), a.rows(), "vtmul", "rows");
    return tmul(v.array(), a);
}

PageScalars dot(const PageVector& a, const PageVector& b) {
    require_equal(a.pages(), b.pages(), "dot", "pages");
    require_equal(a.length(), b.length(), "dot", "rows");
    const std::size_t n = a.length();
    PageScalars out(a.pages());
    for_pages(a.pages(), [&](std::size_t k) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += a(i, k) * b(i, k);
        out[k] = s;
    });
    return out;
}

PageArray scale(const PageScalars& s, const PageArray& a) {
    require_equal(s.pages(), a.pages(), "scale", "pages");
    PageArray out(a.rows(), a.cols(), a.pages());
    const std::size_t ps = a.page_size();
    for_pages(a.pages(), [&](std::size_t k) {
        const double f = s[k];
        const double* pa = a.page(k).data();
        double* po = out.page(k).data();
        for (std::size_t i = 0; i < ps; ++i) po[i] = f * pa[i];
    });
    return out;
}

PageArray mul(const PageArray& a, const PageArray& b) {
    require_equal(a.pages(), b.pages(), "mul", "pages");
    require_equal(a.cols(), b.rows(), "mul", "cols/rows");
    const std::size_t r = a.rows(), n = a.cols(), c = b.cols();
    PageArray out(r, c, a.pages());
    for_pages(a.pages(), [&](std::size_t k) {
        const double* pa = a.page(k).data();
        const double* pb = b.page(k).data();
        double* po = out.page(k).data();
        for (std::size_t j = 0; j < c; ++j)
            for (std::size_t i = 0; i < r; ++i) {
                double s = 0.0;
                for (std::size_t l = 0; l < n; ++l) s += at(pa, r, i, l) * at(pb, n, l, j);
                po[j * r + i] = s;
            }
    });
    return out;
}

PageArray mul(const PageArray& a, const Matrix& m) {
    require_equal(a.cols(), m.rows(), "mul", "cols/rows");
    const std::size_t r = a.rows(), n = a.cols(), c = m.cols();
    const double* pm = m.data().data();
    PageArray out(r, c, a.pages());
    for_pages(a.pages(), [&](std::size_t k) {
        const double* pa = a.page(k).data();
        double* po = out.page(k).data();
        for (std::size_t j = 0; j < c; ++j)
            for (std::size_t i = 0; i < r; ++i) {
                double s = 0.0;
                for (std::size_t l = 0; l < n; ++l) s += at(pa, r, i, l) * at(pm, n, l, j);
                po[j * r + i] = s;
            }
    });
    return out;
}

PageVector mul(const PageArray& a, std::span<const double> v) {
    require_equal(a.cols(), v.size(), "mul", "cols/length");
    const std::size_t r = a.rows(), n = a.cols();
    PageVector out(r, a.pages());
    for_pages(a.pages(), [&](std::size_t k) {
        const double* pa = a.page(k).data();
        for (std::size_t i = 0; i < r; ++i) {
            double s = 0.0;
            for (std::size_t l = 0; l < n; ++l) s += at(pa, r, i, l) * v[l];
            out(i, k) = s;
        }
    });
    return out;
}

PageArray mul_t(const Matrix& m, const PageArray& a) {
    require_equal(m.cols(), a.cols(), "mul_t", "cols");
    const std::size_t r = m.rows(), n = m.cols(), c = a.rows();
    const double* pm = m.data().data();
    PageArray out(r, c, a.pages());
    for_pages(a.pages(), [&](std::size_t k) {
        const double* pa = a.page(k).data();
        double* po = out.page(k).data();
        for (std::size_t j = 0; j < c; ++j)
            for (std::size_t i = 0; i < r; ++i) {
                double s = 0.0;
                for (std::size_t l = 0; l < n; ++l) s += at(pm, r, i, l) * at(pa, c, j, l);
                po[j * r + i] = s;
            }
    });
    return out;
}

PageVector mul_t(std::span<const double> v, const PageArray& a) {
    require_equal(v.size(), a.cols(), "mul_t", "length/cols");
    return mul(a, v);
}

PageArray transpose(const PageArray& a) {
    const std::size_t r = a.rows(), c = a.cols();
    PageArray out(c, r, a.pages());
    for_pages(a.pages(), [&](std::size_t k) {
        const double* pa = a.page(k).data();
        double* po = out.page(k).data();
        for (std::size_t j = 0; j < c; ++j)
            for (std::size_t i = 0; i < r; ++i) po[i * c + j] = pa[j * r + i];
    });
    return out;
}

PageScalars det(const PageArray& a) {
    require_square(a, "det");
    const std::size_t n = a.rows();
    PageScalars out(a.pages());
    for_pages(a.pages(), [&](std::size_t k) { out[k] = det_page(a.page(k).data(), n); });
    return out;
}

InverseResult inverse(const PageArray& a) {
    require_square(a, "inverse");
    const std::size_t n = a.rows();
    PageScalars dets = det(a);
    for (std::size_t k = 0; k < a.pages(); ++k) {
        const double norm = inf_norm(a.page(k).data(), n);
        const double d = std::abs(dets[k]);
        if (!(d > kSingularTolerance * std::pow(norm, static_cast<double>(n))))
            throw SingularPageError(k, d);
    }
    PageArray inv(n, n, a.pages());
    for_pages(a.pages(), [&](std::size_t k) {
        adjugate_inverse(a.page(k).data(), n, dets[k], inv.page(k).data());
    });
    return {std::move(inv), std::move(dets)};
}

PageScalars bilinear(const PageVector& a, const PageArray& m, const PageVector& b) {
    require_equal(a.pages(), m.pages(), "bilinear", "pages");
    require_equal(b.pages(), m.pages(), "bilinear", "pages");
    require_equal(a.length(), m.rows(), "bilinear", "rows");
    require_equal(b.length(), m.cols(), "bilinear", "cols");
    const std::size_t r = m.rows(), c = m.cols();
    PageScalars out(m.pages());
    for_pages(m.pages(), [&](std::size_t k) {
        const double* pm = m.page(k).data();
        double s = 0.0;
        for (std::size_t i = 0; i < r; ++i) {
            double mb = 0.0;
            for (std::size_t j = 0; j < c; ++j) mb += at(pm, r, i, j) * b(j, k);
            s += a(i, k) * mb;
        }
        out[k] = s;
    });
    return out;
}

Matrix squeeze(const PageArray& a, Axis axis) {
    switch (axis) {
    case Axis::Rows: {
        if (a.rows() != 1) throw DimensionError("squeeze: rows extent is not 1");
        Matrix m(a.cols(), a.pages());
        for (std::size_t k = 0; k < a.pages(); ++k)
            for (std::size_t j = 0; j < a.cols(); ++j) m(j, k) = a(0, j, k);
        return m;
    }
    case Axis::Cols: {
        if (a.cols() != 1) throw DimensionError("squeeze: cols extent is not 1");
        Matrix m(a.rows(), a.pages());
        for (std::size_t k = 0; k < a.pages(); ++k)
            for (std::size_t i = 0; i < a.rows(); ++i) m(i, k) = a(i, 0, k);
        return m;
    }
    case Axis::Pages:
        if (a.pages() != 1) throw DimensionError("squeeze: pages extent is not 1");
        return a.page_matrix(0);
    }
    throw DimensionError("squeeze: unknown axis");
}

} // namespace pagefem::pages
