#include <catch2/catch.hpp>

#include "cohlen/bigint.hpp"
#include "cohlen/matrix.hpp"
#include "cohlen/poly.hpp"
#include "cohlen/poly_matrix.hpp"
#include "cohlen/rng.hpp"

using namespace cohlen;

TEST_CASE("bigint arithmetic round trips through strings")
{
    BigInt a = BigInt::from_string("123456789012345678901234567890");
    BigInt b = BigInt::from_string("-987654321098765432109");
    CHECK((a * b).to_string() == "-121932631137021795226076817523485749121223746380010");
    BigInt q, r;
    BigInt::divrem(a, b, q, r);
    CHECK(q * b + r == a);
    CHECK(BigInt::gcd(BigInt(123456), BigInt(7920)).to_string() == "48");
    CHECK((BigInt(-7) % BigInt(3)).to_string() == "-1");
}

TEST_CASE("rational normalization")
{
    Rational r(BigInt(6), BigInt(-8));
    CHECK(r.to_string() == "-3/4");
    CHECK((r + Rational(1)).to_string() == "1/4");
    CHECK((r * Rational(BigInt(4), BigInt(3))).to_string() == "-1");
    CHECK(Rational::from_string("-3/4") == r);
}

TEST_CASE("field construction and arithmetic")
{
    Field f5 = Field::prime(5);
    CHECK(f5.to_string(f5.from_int(-3)) == "2");
    CHECK(f5.inv(f5.from_int(2)) == f5.from_int(3));

    CHECK_THROWS_AS(Field::prime(6), error);

    // x^2 + 2 is irreducible over F_5: -2 = 3 is not among the squares {0,1,4}
    Field f25 = Field::extension(5, {2, 0, 1});
    FieldElem x = f25.generator();
    CHECK(f25.mul(x, x) == f25.from_int(-2));
    FieldElem xi = f25.inv(x);
    CHECK(f25.mul(x, xi) == f25.one());

    // x^2 - 1 = (x-1)(x+1) must be rejected with a witness
    CHECK_THROWS_WITH(Field::extension(5, {4, 0, 1}), Catch::Contains("reducible"));

    Field q = Field::rationals();
    FieldElem half = q.div(q.one(), q.from_int(2));
    CHECK(q.to_string(half) == "1/2");
}

TEST_CASE("rank: frozen examples")
{
    Field f5 = Field::prime(5);

    Matrix empty(f5, 0, 0);
    CHECK(empty.rank() == 0);

    CHECK(Matrix::identity(f5, 3).rank() == 3);

    // [[1,2],[2,4]] over F_5 reduces to a single nonzero row
    Matrix m(f5, 2, 2);
    m.set(0, 0, f5.from_int(1));
    m.set(0, 1, f5.from_int(2));
    m.set(1, 0, f5.from_int(2));
    m.set(1, 1, f5.from_int(4));
    CHECK(m.rank() == 1);
}

TEST_CASE("kernel basis: frozen examples")
{
    Field f2 = Field::prime(2);
    Field f5 = Field::prime(5);

    CHECK(Matrix::identity(f5, 2).kernel_basis().empty());

    Matrix row(f2, 1, 2);
    row.set(0, 0, f2.one());
    row.set(0, 1, f2.one());
    auto kb = row.kernel_basis();
    REQUIRE(kb.size() == 1);
    CHECK(kb[0] == Vec{f2.one(), f2.one()});
}

TEST_CASE("rank/kernel/transpose properties over random matrices")
{
    Field f5 = Field::prime(5);
    Rng rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        size_t rows = 1 + rng.below(6), cols = 1 + rng.below(6);
        Matrix m = Matrix::random(f5, rows, cols, rng);
        size_t rk = m.rank();
        CHECK(rk == m.transpose().rank());
        auto kb = m.kernel_basis();
        CHECK(rk + kb.size() == cols);
        for (const auto &v : kb) {
            Vec image = m.apply(v);
            for (const auto &x : image)
                CHECK(f5.is_zero(x));
        }
    }
}

TEST_CASE("solve_linear")
{
    Field f5 = Field::prime(5);

    Matrix id2 = Matrix::identity(f5, 2);
    Vec b{f5.from_int(3), f5.from_int(1)};
    auto x = id2.solve(b);
    REQUIRE(x.has_value());
    CHECK(*x == b);

    Matrix zero(f5, 2, 2);
    CHECK_FALSE(zero.solve(b).has_value());

    // x1 + x2 = 2, second row zero
    Matrix m(f5, 2, 2);
    m.set(0, 0, f5.one());
    m.set(0, 1, f5.one());
    Vec rhs{f5.from_int(2), f5.zero()};
    auto sol = m.solve(rhs);
    REQUIRE(sol.has_value());
    CHECK(m.apply(*sol) == rhs);

    CHECK_THROWS_AS(m.solve(Vec{f5.one()}), error);
}

TEST_CASE("linear solver agrees with one-shot solve")
{
    Field f5 = Field::prime(5);
    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        size_t rows = 1 + rng.below(5), cols = 1 + rng.below(5);
        Matrix m = Matrix::random(f5, rows, cols, rng);
        LinearSolver solver(m);
        Vec b(rows, f5.zero());
        for (auto &v : b)
            v = rng.sample(f5);
        auto s1 = solver.solve(b);
        auto s2 = m.solve(b);
        CHECK(s1.has_value() == s2.has_value());
        if (s1)
            CHECK(m.apply(*s1) == b);
    }
}

TEST_CASE("rationals: elimination stays exact")
{
    Field q = Field::rationals();
    Rng rng(11);
    Matrix m = Matrix::random(q, 6, 6, rng);
    CHECK(m.rank() == m.transpose().rank());
    auto kb = m.kernel_basis();
    CHECK(m.rank() + kb.size() == 6);
}

TEST_CASE("poly divmod and gcd")
{
    Field f5 = Field::prime(5);
    Poly a = Poly::from_ints(f5, {1, 0, 1}); // 1 + x^2
    Poly b = Poly::from_ints(f5, {1, 1});    // 1 + x
    auto [quot, rem] = Poly::divmod(a, b);
    CHECK(quot * b + rem == a);
    CHECK(Poly::gcd(a * b, b) == b.monic());
    CHECK(poly_irreducible(Poly::from_ints(f5, {2, 0, 1})));
    CHECK_FALSE(poly_irreducible(Poly::from_ints(f5, {4, 0, 1})));

    auto factors = factor_poly(Poly::from_ints(f5, {0, 4, 0, 1})); // x(x^2+4) = x(x+1)(x-1)... over F_5
    int total_degree = 0;
    for (auto &[g, m] : factors)
        total_degree += g.degree() * m;
    CHECK(total_degree == 3);
}

TEST_CASE("poly matrix rank: frozen examples")
{
    Field f5 = Field::prime(5);

    // diag(x, x-1) has nonzero determinant
    PolyMatrix d(f5, 2, 2);
    d.set(0, 0, Poly::from_ints(f5, {0, 1}));
    d.set(1, 1, Poly::from_ints(f5, {-1, 1}));
    CHECK(d.rank_over_fraction_field() == 2);

    // [[x, x^2],[1, x]] has determinant x^2 - x^2 = 0 and a nonzero row
    PolyMatrix s(f5, 2, 2);
    s.set(0, 0, Poly::from_ints(f5, {0, 1}));
    s.set(0, 1, Poly::from_ints(f5, {0, 0, 1}));
    s.set(1, 0, Poly::from_ints(f5, {1}));
    s.set(1, 1, Poly::from_ints(f5, {0, 1}));
    CHECK(s.rank_over_fraction_field() == 1);

    PolyMatrix e(f5, 0, 4);
    CHECK(e.rank_over_fraction_field() == 0);
}

TEST_CASE("poly matrix rank agrees with evaluation at generic points")
{
    Field f5 = Field::prime(5);
    // degree-8 extension gives plenty of sample points clear of pivot zeros
    Field big = Field::extension(5, {3, 0, 0, 0, 0, 0, 0, 0, 1}); // x^8 + 3, irreducible checked at build
    auto embed = [&](const FieldElem &c) { return big.from_int(std::get<int64_t>(c.v)); };
    Rng rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        size_t rows = 1 + rng.below(4), cols = 1 + rng.below(4);
        PolyMatrix pm(f5, rows, cols);
        for (size_t r = 0; r < rows; ++r)
            for (size_t c = 0; c < cols; ++c) {
                std::vector<int64_t> coeffs;
                for (int i = 0; i <= static_cast<int>(rng.below(3)); ++i)
                    coeffs.push_back(rng.range(0, 4));
                pm.set(r, c, Poly::from_ints(f5, coeffs));
            }
        size_t generic = pm.rank_over_fraction_field();
        size_t best = 0;
        for (int pt = 0; pt < 20; ++pt) {
            FieldElem point = rng.sample(big);
            size_t rk = pm.rank_at(big, point, embed);
            CHECK(rk <= generic);
            best = std::max(best, rk);
        }
        CHECK(best == generic);
    }
}

TEST_CASE("smith invariant factors")
{
    Field f5 = Field::prime(5);
    PolyMatrix m(f5, 2, 2);
    m.set(0, 0, Poly::from_ints(f5, {0, 1}));      // x
    m.set(1, 1, Poly::from_ints(f5, {0, -1, 1}));  // x^2 - x
    auto inv = m.smith_invariant_factors();
    REQUIRE(inv.size() == 2);
    CHECK(inv[0] == Poly::from_ints(f5, {0, 1}));
    CHECK((inv[1] % inv[0]).is_zero());
}
