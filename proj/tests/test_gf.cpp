#include <doctest.h>

#include <set>

#include "toric/gf.hpp"

using namespace toric;

namespace {

// Independent polynomial arithmetic over GF(2) for the primitivity oracle:
// multiply bit-packed polynomials mod f, no field tables involved.
std::uint32_t gf2_polymod_mul(std::uint32_t a, std::uint32_t b, std::uint32_t f, int deg) {
    std::uint32_t acc = 0;
    while (b) {
        if (b & 1) acc ^= a;
        b >>= 1;
        a <<= 1;
        if (a & (1u << deg)) a ^= f;
    }
    return acc;
}

int gf2_order_of_x(std::uint32_t f, int deg) {
    std::uint32_t b = 2;  // x
    int ord = 1;
    while (b != 1) {
        b = gf2_polymod_mul(b, 2, f, deg);
        ++ord;
        if (ord > (1 << deg)) return -1;  // never returns to 1
    }
    return ord;
}

}  // namespace

TEST_CASE("build_field GF(16) with x^4+x+1") {
    auto f = build_field(2, 4, std::vector<std::uint32_t>{1, 1, 0, 0, 1});
    CHECK(f->q() == 16);
    CHECK(f->generator() == 2);
    // generator has order 15
    CHECK(f->pow(f->generator(), 15) == 1);
    for (int i = 1; i < 15; ++i) CHECK(f->pow(f->generator(), i) != 1);
}

TEST_CASE("build_field GF(16) default polynomial is x^4+x+1") {
    auto f = build_field(2, 4);
    CHECK(f->prim_poly() == std::vector<std::uint32_t>{1, 1, 0, 0, 1});
}

TEST_CASE("build_field GF(5) default is a generator of Z/5*") {
    auto f = build_field(5, 1);
    CHECK(f->q() == 5);
    std::set<std::uint32_t> seen;
    for (std::uint32_t i = 0; i < 4; ++i) seen.insert(f->exp(i));
    CHECK(seen == std::set<std::uint32_t>{1, 2, 3, 4});
    CHECK(f->inv(2) == 3);  // 2*3 = 6 = 1 mod 5
}

TEST_CASE("non-primitive polynomial rejected (oracle: order of x is 5)") {
    // x^4+x^3+x^2+x+1 over GF(2): bit mask 0b11111
    CHECK(gf2_order_of_x(0b11111, 4) == 5);
    CHECK(gf2_order_of_x(0b10011, 4) == 15);  // x^4+x+1 for contrast
    CHECK_THROWS_AS(build_field(2, 4, std::vector<std::uint32_t>{1, 1, 1, 1, 1}), NotPrimitive);
}

TEST_CASE("build_field input validation") {
    CHECK_THROWS_AS(build_field(4, 1), NotPrime);
    CHECK_THROWS_AS(build_field(6, 2), NotPrime);
    CHECK_THROWS_AS(build_field(2, 4, std::vector<std::uint32_t>{1, 1, 0, 1}), DegreeMismatch);
    CHECK_THROWS_AS(build_field(2, 4, std::vector<std::uint32_t>{1, 1, 0, 0, 0}), DegreeMismatch);
    CHECK_THROWS_AS(build_field(2, 0), OutOfRange);
    CHECK_THROWS_AS(build_field(2, 17), OutOfRange);  // 2^17 > 2^16
}

TEST_CASE("characteristic-2 identity a + a = 0") {
    auto f = build_field(2, 4);
    for (std::uint32_t a = 0; a < 16; ++a) CHECK(f->add(a, a) == 0);
}

TEST_CASE("exp/log round-trip and cyclic group, several fields") {
    for (auto [p, m] : {std::pair{2u, 4u}, {5u, 1u}, {7u, 1u}, {3u, 2u}, {2u, 8u}}) {
        auto f = build_field(p, m);
        const std::uint32_t q = f->q();
        std::set<std::uint32_t> seen;
        for (std::uint32_t i = 0; i < q - 1; ++i) {
            const std::uint32_t e = f->exp(i);
            CHECK(e != 0);
            CHECK(f->log(e) == i);
            seen.insert(e);
        }
        CHECK(seen.size() == q - 1);  // every nonzero element exactly once
    }
}

TEST_CASE("field axioms exhaustively on GF(16) and GF(9)") {
    for (auto [p, m] : {std::pair{2u, 4u}, {3u, 2u}}) {
        auto f = build_field(p, m);
        const std::uint32_t q = f->q();
        for (std::uint32_t a = 0; a < q; ++a) {
            CHECK(f->add(a, 0) == a);
            CHECK(f->mul(a, 1) == a);
            CHECK(f->add(a, f->neg(a)) == 0);
            if (a != 0) CHECK(f->mul(a, f->inv(a)) == 1);
            for (std::uint32_t b = 0; b < q; ++b) {
                CHECK(f->add(a, b) == f->add(b, a));
                CHECK(f->mul(a, b) == f->mul(b, a));
                // Frobenius
                CHECK(f->pow(f->add(a, b), p) == f->add(f->pow(a, p), f->pow(b, p)));
            }
        }
        // associativity + distributivity on all triples for GF(9), sampled for GF(16)
        const std::uint32_t step = (q <= 9) ? 1 : 3;
        for (std::uint32_t a = 0; a < q; a += step)
            for (std::uint32_t b = 0; b < q; ++b)
                for (std::uint32_t c = 0; c < q; ++c) {
                    CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
                    CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
                    CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
                }
    }
}

TEST_CASE("pow handles negative exponents and zero base") {
    auto f = build_field(5, 1);
    for (std::uint32_t a = 1; a < 5; ++a) {
        CHECK(f->mul(f->pow(a, -1), a) == 1);
        CHECK(f->pow(a, 4) == 1);   // Fermat
        CHECK(f->pow(a, -3) == f->pow(f->inv(a), 3));
    }
    CHECK(f->pow(0, 0) == 1);
    CHECK(f->pow(0, 7) == 0);
    CHECK_THROWS_AS(f->pow(0, -1), DivisionByZero);
    CHECK_THROWS_AS(f->inv(0), DivisionByZero);
    CHECK_THROWS_AS(f->log(0), DivisionByZero);
}

TEST_CASE("Fe wrapper enforces matching field specs") {
    auto f = build_field(5, 1);
    auto g = build_field(5, 1);  // distinct spec instance
    Fe a(f, 2), b(f, 3), c(g, 1);
    CHECK((a + b).value() == 0);
    CHECK((a * b).value() == 1);
    CHECK((a / a).value() == 1);
    CHECK((-a).value() == 3);
    CHECK_THROWS_AS(a + c, FieldMismatch);
    CHECK_THROWS_AS(Fe(f, 5), OutOfRange);
}

TEST_CASE("torus_points counts and order") {
    auto f16 = build_field(2, 4);
    auto pts16 = torus_points(f16, 2);
    CHECK(pts16.size() == 225);

    auto f5 = build_field(5, 1);
    auto pts5 = torus_points(f5, 2);
    CHECK(pts5.size() == 16);
    CHECK(pts5.front() == TorusPoint{1, 1});
    CHECK(pts5[1] == TorusPoint{1, 2});
    CHECK(pts5.back() == TorusPoint{4, 4});

    auto line = torus_points(f5, 1);
    CHECK(line.size() == 4);

    std::set<TorusPoint> uniq(pts5.begin(), pts5.end());
    CHECK(uniq.size() == pts5.size());  // no duplicates

    CHECK_THROWS_AS(torus_points(f5, 0), OutOfRange);
}
