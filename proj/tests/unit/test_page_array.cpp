#include <doctest.h>

#include <sstream>

#include "pagefem/page_array.hpp"

using namespace pagefem;

TEST_CASE("element (i,j,k) sits at k*r*c + j*r + i") {
    PageArray a(2, 3, 4);
    for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t i = 0; i < 2; ++i) a(i, j, k) = 100.0 * k + 10.0 * j + i;
    for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t i = 0; i < 2; ++i)
                CHECK(a.data()[k * 6 + j * 2 + i] == 100.0 * k + 10.0 * j + i);
    CHECK(a.page(2)[0] == 200.0);
    CHECK(a.page(2).size() == 6);
}

TEST_CASE("extents must be positive and match the data") {
    CHECK_THROWS_AS(PageArray(0, 1, 1), DimensionError);
    CHECK_THROWS_AS(PageArray(1, 0, 1), DimensionError);
    CHECK_THROWS_AS(PageArray(1, 1, 0), DimensionError);
    CHECK_THROWS_AS(PageArray(2, 2, 2, std::vector<double>(7)), DimensionError);
}

TEST_CASE("vectors and scalars are embedded as degenerate arrays") {
    PageVector v(3, 5);
    v(2, 4) = 7.0;
    CHECK(v.array().cols() == 1);
    CHECK(v.array()(2, 0, 4) == 7.0);
    CHECK_THROWS_AS(PageVector(PageArray(3, 2, 1)), DimensionError);

    PageScalars s(std::vector<double>{1, 2, 3});
    CHECK(s.pages() == 3);
    CHECK(s.array().rows() == 1);
    CHECK(s.array().cols() == 1);
    CHECK(s[1] == 2.0);
    CHECK_THROWS_AS(PageScalars(PageArray(1, 2, 3)), DimensionError);
}

TEST_CASE("replicate and page matrices") {
    const Matrix m{{1, 2}, {3, 4}};
    const auto a = PageArray::replicate(m, 3);
    CHECK(a(0, 1, 2) == 2.0);
    CHECK(a(1, 0, 1) == 3.0);
    CHECK(a.page_matrix(1) == m);
    PageArray b(2, 2, 1);
    b.set_page(0, m.transposed());
    CHECK(b(0, 1, 0) == 3.0);
    CHECK_THROWS_AS(b.set_page(0, Matrix(3, 2)), DimensionError);
}

TEST_CASE("dump round trip is lossless") {
    PageArray a(2, 1, 3, {0.1, -2.5e-17, 1.0 / 3.0, 4e300, -0.0, 7.0});
    std::stringstream ss;
    write_dump(ss, a);
    CHECK(ss.str().rfind("2 1 3\n", 0) == 0);
    CHECK(read_dump(ss) == a);
}
