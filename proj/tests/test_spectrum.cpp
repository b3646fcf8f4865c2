#include <catch2/catch.hpp>

#include "cohlen/spectrum.hpp"

using namespace cohlen;

namespace {
CoeffAlgebra dual5() { return CoeffAlgebra::dual_numbers(Field::prime(5)); }
CoeffAlgebra ring5() { return CoeffAlgebra::poly_ring(Field::prime(5)); }

PerfectComplex cone_of_poly(const CoeffAlgebra &alg, const Poly &f)
{
    AlgMatrix m(alg, 1, 1);
    m.set(0, 0, alg.from_poly(f));
    std::map<int, size_t> ranks{{-1, 1}, {0, 1}};
    return PerfectComplex::from_maps(alg, ranks, {{-1, m}});
}
} // namespace

TEST_CASE("window enumeration: label counts and distinctness")
{
    CoeffAlgebra a = dual5();
    SpectrumWindow w0 = enumerate_sp_dual_numbers(a, 0);
    CHECK(w0.labels.size() == 2);
    SpectrumWindow w3 = enumerate_sp_dual_numbers(a, 3);
    CHECK(w3.labels.size() == 5);
    CHECK(window_labels_distinct(w3));
}

TEST_CASE("basic open membership")
{
    CoeffAlgebra a = dual5();
    CHECK(basic_open_membership(a, SimpleStalkLabel{0}, PerfectComplex::bar(a, 0, 5), 8));
    CHECK_FALSE(basic_open_membership(a, ObjectBarLabel{0, 0}, PerfectComplex::zero(a), 8));
    CHECK(basic_open_membership(a, ObjectBarLabel{0, 0}, PerfectComplex::bar(a, 0, 0), 8));
}

TEST_CASE("isolated points are exactly the string classes")
{
    CoeffAlgebra a = dual5();
    for (int r_max = 0; r_max <= 4; ++r_max) {
        SpectrumWindow w = enumerate_sp_dual_numbers(a, r_max);
        auto iso = isolated_points(w);
        CHECK(iso.size() == static_cast<size_t>(r_max) + 1);
        for (const auto &l : iso)
            CHECK(std::holds_alternative<ObjectBarLabel>(l));
    }
}

TEST_CASE("closure check passes within the window")
{
    CoeffAlgebra a = dual5();
    for (int r_max = 1; r_max <= 3; ++r_max) {
        SpectrumWindow w = enumerate_sp_dual_numbers(a, r_max);
        ClosureReport rep = closure_extra_point_check(w, 2 * r_max + 2);
        CHECK(rep.ok);
    }
}

TEST_CASE("rho validates primes")
{
    CoeffAlgebra r = ring5();
    Field f5 = r.base_field();
    CHECK_NOTHROW(rho(r, PrimeDatum::irreducible(Poly::from_ints(f5, {0, 1}))));
    CHECK_NOTHROW(rho(r, PrimeDatum::zero_ideal(f5)));
    CHECK_THROWS_WITH(rho(r, PrimeDatum::irreducible(Poly::from_ints(f5, {4, 0, 1}))),
                      Catch::Contains("reducible"));
}

TEST_CASE("rho injectivity on a prime sample")
{
    CoeffAlgebra r = ring5();
    Field f5 = r.base_field();
    std::vector<PrimeDatum> primes{
        PrimeDatum::zero_ideal(f5),
        PrimeDatum::irreducible(Poly::from_ints(f5, {0, 1})),
        PrimeDatum::irreducible(Poly::from_ints(f5, {-1, 1})),
        PrimeDatum::irreducible(Poly::from_ints(f5, {-2, 1})),
        PrimeDatum::irreducible(Poly::from_ints(f5, {2, 0, 1})),
        PrimeDatum::irreducible(Poly::from_ints(f5, {3, 0, 1})),
    };
    InjectivityReport rep = rho_injectivity_check(r, primes);
    CHECK(rep.ok);
    CHECK(rep.separations.size() == primes.size() * (primes.size() - 1) / 2);
}

TEST_CASE("support dichotomy: torsion and free examples")
{
    CoeffAlgebra r = ring5();
    Field f5 = r.base_field();
    std::vector<PrimeDatum> primes{
        PrimeDatum::zero_ideal(f5),
        PrimeDatum::irreducible(Poly::from_ints(f5, {0, 1})),
        PrimeDatum::irreducible(Poly::from_ints(f5, {-1, 1})),
        PrimeDatum::irreducible(Poly::from_ints(f5, {-2, 1})),
        PrimeDatum::irreducible(Poly::from_ints(f5, {2, 0, 1})),
    };

    // cone(x): support is exactly {(x)}
    SupportReport t = supp_dichotomy_check(cone_of_poly(r, Poly::from_ints(f5, {0, 1})), primes);
    CHECK(t.ok);
    REQUIRE(t.support.size() == 1);
    CHECK(t.support[0] == "(x)");

    // the free stalk: support everything including the generic point
    SupportReport fr = supp_dichotomy_check(PerfectComplex::free_stalk(r, 0, 1), primes);
    CHECK(fr.ok);
    CHECK(fr.support.size() == primes.size());

    // cone(0) = A (+) Sigma A: also everything
    SupportReport z = supp_dichotomy_check(cone_of_poly(r, Poly(f5)), primes);
    CHECK(z.ok);
    CHECK(z.support.size() == primes.size());
}

TEST_CASE("closed sublevel sets have witnessed complements")
{
    CoeffAlgebra a = dual5();
    SpectrumWindow w = enumerate_sp_dual_numbers(a, 3);
    PerfectComplex x00 = PerfectComplex::bar(a, 0, 0);

    // bound 1: the stalk class (value 1) stays in, X_{0,0} (value 2) is cut out
    ClosedSetReport r1 = closed_length_set_check(w, x00, 1);
    CHECK(r1.ok);
    REQUIRE(r1.witnesses.size() >= 1);

    // bound 0: complement is the whole basic open (X00)
    ClosedSetReport r0 = closed_length_set_check(w, x00, 0);
    CHECK(r0.ok);

    // bound above every value: empty complement
    ClosedSetReport rbig = closed_length_set_check(w, x00, 100);
    CHECK(rbig.ok);
    CHECK(rbig.witnesses.empty());
}

TEST_CASE("sigma-orbit soundness of window tables")
{
    CoeffAlgebra a = dual5();
    SpectrumWindow w = enumerate_sp_dual_numbers(a, 2);
    // evaluating a label against shifted probes reproduces the orbit values
    auto f = CohFunction::for_label_shared(a, w.labels[1]); // X_{0,1}
    for (size_t p = 0; p < w.probes.size(); ++p)
        for (int n = w.shift_lo; n <= w.shift_hi; ++n)
            CHECK(w.table[1][p][static_cast<size_t>(n - w.shift_lo)] ==
                  f->eval(w.probes[p].shift(n)));
}
