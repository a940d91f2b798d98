#include "quivalg/errors.hpp"
#include "quivalg/linalg.hpp"
#include "quivalg/rational.hpp"

#include <doctest.h>

using namespace quivalg;

TEST_CASE("rational parsing and canonical text") {
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-10/5")) == "-2");
    CHECK(to_string(parse_rational("+7")) == "7");
    CHECK(to_string(parse_rational("0/3")) == "0");
    CHECK_THROWS_AS(parse_rational("1/0"), SchemaViolation);
    CHECK_THROWS_AS(parse_rational("x"), SchemaViolation);
    CHECK_THROWS_AS(parse_rational("1.5"), SchemaViolation);
}

TEST_CASE("rank and nullspace of a rank-2 matrix") {
    Matrix m(3, 4);
    int vals[3][4] = {{1, 2, 0, 1}, {0, 1, 1, 0}, {1, 3, 1, 1}};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 4; ++c) m(r, c) = vals[r][c];
    CHECK(rank(m) == 2);
    auto ns = nullspace(m);
    REQUIRE(ns.size() == 2);
    for (const auto& v : ns) {
        CHECK_FALSE(is_zero(v));
        CHECK(is_zero(m.apply(v)));
    }
    Matrix k = Matrix::from_rows(ns, 4);
    CHECK(rank(k) == 2);
}

TEST_CASE("matrix products, transpose, identity") {
    Matrix a(2, 2);
    a(0, 0) = 1;
    a(0, 1) = Rational(1, 2);
    a(1, 1) = 3;
    CHECK((a * Matrix::identity(2)) == a);
    Matrix p = a * a;
    CHECK(p(0, 1) == Rational(2));
    CHECK(p(1, 1) == 9);
    CHECK(a.transpose()(1, 0) == Rational(1, 2));
    CHECK((a - a).is_zero());
}

TEST_CASE("subspace insertion and coordinates") {
    Subspace s(3);
    CHECK(s.insert({1, 1, 0}));
    CHECK(s.insert({0, 1, 1}));
    CHECK_FALSE(s.insert({1, 2, 1}));
    CHECK(s.dim() == 2);
    CHECK(is_zero(s.reduce({2, 3, 1})));
    CHECK_FALSE(is_zero(s.reduce({0, 0, 1})));

    Coordinates co({{1, 1, 0}, {0, 1, 1}});
    auto x = co.solve({2, 5, 3});
    REQUIRE(x);
    CHECK((*x)[0] == 2);
    CHECK((*x)[1] == 3);
    CHECK_FALSE(co.solve({1, 0, 0}));
    CHECK_THROWS(Coordinates({{1, 0}, {2, 0}}));
}

TEST_CASE("sparse axpy prunes cancellations") {
    SparseVector y{{0, 1}, {2, 5}};
    axpy(y, -1, SparseVector{{0, 1}, {1, 4}});
    CHECK(y.count(0) == 0);
    CHECK(y.at(1) == -4);
    CHECK(y.at(2) == 5);
}
