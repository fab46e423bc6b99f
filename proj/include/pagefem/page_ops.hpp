#pragma once

#include <span>

#include "pagefem/page_array.hpp"

/// Page-wise linear algebra. Every function applies an ordinary small-matrix
/// operation independently to each page and is a pure function of its inputs.
/// Shape mismatches throw DimensionError naming the axis.
namespace pagefem::pages {

/// Page k: Xₖᵀ · Aₖ. Result is X.cols × A.cols × pages.
PageArray tmul(const PageArray& x, const PageArray& a);

/// Page k: vₖᵀ · Aₖ as a 1 × A.cols row.
PageArray vtmul(const PageVector& v, const PageArray& a);

/// Page k: aₖ · bₖ.
PageScalars dot(const PageVector& a, const PageVector& b);

/// Page k: sₖ · Aₖ.
PageArray scale(const PageScalars& s, const PageArray& a);

/// Page k: Aₖ · Bₖ.
PageArray mul(const PageArray& a, const PageArray& b);

/// Page k: Aₖ · M for one shared matrix M.
PageArray mul(const PageArray& a, const Matrix& m);

/// Page k: Aₖ · v for one shared vector v.
PageVector mul(const PageArray& a, std::span<const double> v);

/// Page k: M · Aₖᵀ.
PageArray mul_t(const Matrix& m, const PageArray& a);

/// Page k: vᵀ · Aₖᵀ, returned as a column per page (length A.rows).
PageVector mul_t(std::span<const double> v, const PageArray& a);

/// Page k: Aₖᵀ.
PageArray transpose(const PageArray& a);

/// Closed-form determinant of square pages of size 1, 2 or 3.
PageScalars det(const PageArray& a);

struct InverseResult {
    PageArray inverse;
    PageScalars det;
};

/// Adjugate inverse of square pages of size 1, 2 or 3, with their determinants.
///
/// A page is singular when |det| ≤ 1e-14 · ‖page‖∞ⁿ (n the page size, ‖·‖∞
/// the max absolute row sum). The first singular page raises
/// SingularPageError carrying its index and |det|.
InverseResult inverse(const PageArray& a);

/// Page k: aₖᵀ · Mₖ · bₖ.
PageScalars bilinear(const PageVector& a, const PageArray& m, const PageVector& b);

enum class Axis { Rows = 0, Cols = 1, Pages = 2 };

/// Drops an axis of extent 1. The remaining two axes keep their order, so
/// 1×3×5 and 3×1×5 both become 3×5 and 3×4×1 becomes 3×4.
Matrix squeeze(const PageArray& a, Axis axis);

/// Relative singularity threshold used by inverse().
inline constexpr double kSingularTolerance = 1e-14;

} // namespace pagefem::pages
