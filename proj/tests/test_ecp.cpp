#include <doctest.h>

#include "toric/ecp.hpp"

using namespace toric;

TEST_CASE("inner_product_check: geometric-sum oracle and inverse pairs") {
    auto f = build_field(5, 1);

    // sum over x in F_5* of x = 1+2+3+4 = 10 = 0 mod 5
    std::uint32_t s = 0;
    for (std::uint32_t x = 1; x < 5; ++x) s = f->add(s, x);
    CHECK(s == 0);
    CHECK(inner_product_check(f, {1, 0}, {0, 0}).value() == 0);

    // u = -v: all terms are 1, so the sum is (q-1)^r mod p = 16 mod 5
    CHECK(inner_product_check(f, {1, 2}, {3, 2}).value() == 1);
    CHECK(inner_product_check(f, {0, 0}, {0, 0}).value() == 1);

    auto f16 = build_field(2, 4);
    CHECK(inner_product_check(f16, {0, 0}, {0, 0}).value() == 1);  // 225 mod 2
    CHECK(inner_product_check(f16, {7, 3}, {8, 12}).value() == 1);
    CHECK(inner_product_check(f16, {7, 3}, {8, 11}).value() == 0);
}

TEST_CASE("monomial orthogonality against the dual exponent set, GF(5) and GF(7)") {
    for (std::uint32_t p : {5u, 7u}) {
        auto f = build_field(p, 1);
        ExponentSet U(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 1}});
        auto comp = complement_in_H(U, f->q());
        for (const auto& u : U.points())
            for (const auto& w : comp.points())
                CHECK(inner_product_check(f, u, w).value() == 0);
    }
}

TEST_CASE("toric_pair on the GF(5) configuration") {
    auto f = build_field(5, 1);
    auto C = build_code(f, LatticePolytope::simplex(1));
    auto Ct = build_code(f, LatticePolytope::simplex(2));
    auto tp = toric_pair(C, Ct);

    CHECK(tp.A.k == 6);
    CHECK(tp.sum_code.k == 10);
    CHECK(tp.B.k == 16 - 10);
    CHECK(matmul(tp.sum_code.G, transpose(tp.B.G)).is_zero());

    auto rep = is_ecp(tp.A, tp.B, C, 3);
    CHECK(rep.orth);
    CHECK(rep.dim_a);        // 6 > 3
    CHECK(rep.d_b_perp);     // d(B perp) = d(sum) = 4 > 3
    CHECK(rep.d_sum_gt_n);   // 8 + 12 > 16
    CHECK(rep.all());

    // oracle: brute-force distances agree with what the report used
    CHECK(rep.dA.value == min_distance_bruteforce(tp.A));
    CHECK(rep.dC.value == min_distance_bruteforce(C));
    CHECK(rep.dBperp.value == min_distance_bruteforce(dual_code(tp.B)));
}

TEST_CASE("is_ecp boundary failures") {
    auto f = build_field(5, 1);
    auto C = build_code(f, LatticePolytope::simplex(1));
    auto Ct = build_code(f, LatticePolytope::simplex(2));
    auto tp = toric_pair(C, Ct);

    auto rep = is_ecp(tp.A, tp.B, C, 6);
    CHECK(!rep.dim_a);  // dim A = 6 is not > 6

    // A = C = full space: d(A) + d(C) = 2 is not > n
    auto full = build_code(f, box_h(5, 2));
    auto rep2 = is_ecp(full, full, full, 0);
    CHECK(!rep2.d_sum_gt_n);
    CHECK(!rep2.orth);  // the full space is not self-orthogonal
}

TEST_CASE("repetition helper reduces pair orthogonality to B perp C") {
    auto f = build_field(5, 1);
    auto C = build_code(f, LatticePolytope::simplex(1));
    auto rep_code = build_code(f, LatticePolytope::simplex(0));
    auto tp = toric_pair(C, rep_code);

    // Minkowski sum with a point is C's own polygon, so B is C's dual
    CHECK(tp.sum_code.exponents == C.exponents);
    CHECK(matmul(C.G, transpose(tp.B.G)).is_zero());
    auto rep = is_ecp(tp.A, tp.B, C, 0);
    CHECK(rep.orth);
}

TEST_CASE("toric_pair reproduces the GF(16) example parameters") {
    auto f = build_field(2, 4);
    auto C = build_code(f, LatticePolytope::simplex(4));
    auto Ct = build_code(f, LatticePolytope::simplex(8));
    auto tp = toric_pair(C, Ct);

    CHECK(C.n() == 225);
    CHECK(tp.A.k == 45);
    CHECK(tp.sum_code.k == 91);
    CHECK(tp.B.k == 225 - 91);

    auto rep = is_ecp(tp.A, tp.B, C, 44);
    CHECK(rep.all());
    CHECK(rep.dBperp.value == 45);
    CHECK(rep.dBperp.prov == DistProv::Formula);
    CHECK(rep.dA.value == 105);
    CHECK(rep.dC.value == 165);

    // strictness: t = 45 breaks dim A > t (and d(B perp) > t)
    auto rep45 = is_ecp(tp.A, tp.B, C, 45);
    CHECK(!rep45.dim_a);
    CHECK(!rep45.d_b_perp);
    CHECK(!rep45.all());
}

TEST_CASE("is_ecp validates lengths and fields") {
    auto f = build_field(5, 1);
    auto C = build_code(f, LatticePolytope::simplex(1));
    auto C1 = build_code(f, ExponentSet(1, {{0}, {1}}));  // r = 1, n = 4
    CHECK_THROWS_AS(is_ecp(C, C1, C, 1), LengthMismatch);

    auto g = build_field(5, 1);
    auto Cg = build_code(g, LatticePolytope::simplex(1));
    CHECK_THROWS_AS(is_ecp(C, Cg, C, 1), MismatchedCodes);
}
