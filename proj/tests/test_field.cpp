#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "ips/field.hpp"

using namespace ips;

namespace {

std::vector<std::pair<std::uint32_t, std::uint32_t>> odd_prime_powers(std::uint32_t limit) {
    auto prime = [](std::uint32_t n) {
        if (n < 2) return false;
        for (std::uint32_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    };
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (std::uint32_t p = 3; p <= limit; ++p) {
        if (!prime(p)) continue;
        std::uint64_t q = p;
        std::uint32_t r = 1;
        while (q <= limit) {
            out.push_back({p, r});
            q *= p;
            ++r;
        }
    }
    return out;
}

} // namespace

TEST_CASE("prime field squares match brute force") {
    FieldCtx F(7, 1);
    // x^2 mod 7 for x = 0..6 gives {0, 1, 2, 4}
    std::set<Fe> squares;
    for (int x = 0; x < 7; ++x) squares.insert(Fe((x * x) % 7));
    CHECK(squares == std::set<Fe>{0, 1, 2, 4});
    for (Fe a = 0; a < 7; ++a) CHECK(F.is_square(a) == squares.contains(a));
    CHECK(F.is_square(2));
    CHECK_FALSE(F.is_square(3));
    CHECK(F.is_square(0));
}

TEST_CASE("characteristic 2 squares cover the field") {
    FieldCtx F(2, 1);
    CHECK(F.square_count() == 2);
    CHECK(F.is_square(0));
    CHECK(F.is_square(1));
}

TEST_CASE("square counts are (q+1)/2 for odd q") {
    for (auto [p, r] : odd_prime_powers(167)) {
        FieldCtx F(p, r);
        CAPTURE(F.q());
        CHECK(F.square_count() == (F.q() + 1) / 2);
    }
}

TEST_CASE("field construction is deterministic") {
    CHECK(FieldCtx(3, 2).modulus() == std::vector<std::uint32_t>{1, 0, 1});
    CHECK(FieldCtx(5, 2).modulus() == std::vector<std::uint32_t>{2, 0, 1});
    CHECK(FieldCtx(3, 3).modulus() == std::vector<std::uint32_t>{1, 2, 0, 1});
    CHECK(FieldCtx(3, 2).square_count() == 5);
}

TEST_CASE("construction rejects bad parameters") {
    CHECK_THROWS_AS(FieldCtx(6, 1), std::invalid_argument);
    CHECK_THROWS_AS(FieldCtx(7, 0), std::invalid_argument);
    CHECK_THROWS_AS(FieldCtx(2, 17), std::invalid_argument);
}

TEST_CASE("field arithmetic identities") {
    for (auto [p, r] : {std::pair<std::uint32_t, std::uint32_t>{7, 1}, {3, 2}, {3, 3}, {5, 2}}) {
        FieldCtx F(p, r);
        for (Fe a = 0; a < F.q(); ++a) {
            CHECK(F.add(a, F.neg(a)) == 0);
            CHECK(F.mul(a, 1) == a);
            if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
            CHECK(F.frob(a, F.r()) == a);
        }
        for (Fe a = 0; a < F.q(); ++a)
            for (Fe b = 0; b < F.q(); ++b) {
                CHECK(F.add(a, b) == F.add(b, a));
                CHECK(F.frob(F.add(a, b)) == F.add(F.frob(a), F.frob(b)));
                CHECK(F.frob(F.mul(a, b)) == F.mul(F.frob(a), F.frob(b)));
            }
    }
}

TEST_CASE("omega witnesses") {
    CHECK(*FieldCtx(13, 1).omega() == 5); // 5^2 = 25 = -1 mod 13
    CHECK(*FieldCtx(5, 1).omega() == 2);  // 2^2 = 4 = -1 mod 5
    CHECK(*FieldCtx(3, 2).omega() == 3);  // the adjoined root of x^2 + 1
    CHECK_FALSE(FieldCtx(7, 1).omega().has_value());
    CHECK_FALSE(FieldCtx(2, 1).omega().has_value());
    for (auto [p, r] : odd_prime_powers(101)) {
        FieldCtx F(p, r);
        if (F.q_mod4() == 1) {
            REQUIRE(F.omega().has_value());
            CHECK(F.sq(*F.omega()) == F.neg(1));
        } else {
            CHECK_FALSE(F.omega().has_value());
        }
    }
}

TEST_CASE("gauss norm") {
    FieldCtx F7(7, 1);
    CHECK(gnorm(F7, {1, 2}) == 5);
    FieldCtx F13(13, 1);
    CHECK(gnorm(F13, {1, 5}) == 0);

    SUBCASE("multiplicative, exhaustive for small q") {
        for (auto [p, r] : {std::pair<std::uint32_t, std::uint32_t>{7, 1}, {11, 1}, {13, 1}, {3, 2}}) {
            FieldCtx F(p, r);
            for (std::uint32_t i = 0; i < F.q() * F.q(); ++i)
                for (std::uint32_t j = 0; j < F.q() * F.q(); ++j) {
                    Gauss z{i / F.q(), i % F.q()}, w{j / F.q(), j % F.q()};
                    CHECK(gnorm(F, gmul(F, z, w)) == F.mul(gnorm(F, z), gnorm(F, w)));
                }
        }
    }
    SUBCASE("multiplicative, sampled for larger q") {
        for (auto [p, r] : {std::pair<std::uint32_t, std::uint32_t>{17, 1}, {5, 2}, {3, 3}, {41, 1}}) {
            FieldCtx F(p, r);
            std::mt19937 rng(7);
            std::uniform_int_distribution<std::uint32_t> dist(0, F.q() - 1);
            for (int it = 0; it < 1000; ++it) {
                Gauss z{dist(rng), dist(rng)}, w{dist(rng), dist(rng)};
                CHECK(gnorm(F, gmul(F, z, w)) == F.mul(gnorm(F, z), gnorm(F, w)));
            }
        }
    }
}

TEST_CASE("zero divisors") {
    FieldCtx F13(13, 1);
    CHECK(is_zero_divisor(F13, {1, 5}));
    CHECK_FALSE(is_zero_divisor(F13, {0, 0}));
    FieldCtx F7(7, 1);
    for (std::uint32_t c = 1; c < 49; ++c)
        CHECK_FALSE(is_zero_divisor(F7, {c / 7, c % 7}));

    SUBCASE("the zero divisors fill the two ideals") {
        // F_q(omega + i) and F_q(omega - i), each of order q, meeting in 0
        Fe w = *F13.omega();
        std::set<std::uint32_t> ideals;
        for (Fe t = 0; t < 13; ++t) {
            ideals.insert(gauss_code(F13, gscale(F13, t, {w, 1})));
            ideals.insert(gauss_code(F13, gscale(F13, t, {w, F13.neg(1)})));
        }
        std::set<std::uint32_t> divisors;
        for (std::uint32_t c = 0; c < 169; ++c)
            if (is_zero_divisor(F13, {c / 13, c % 13})) divisors.insert(c);
        CHECK(divisors.size() == 24); // 2(q-1)
        std::set<std::uint32_t> expected = ideals;
        expected.erase(0);
        CHECK(divisors == expected);
    }
}

TEST_CASE("unit circle") {
    CHECK(unit_circle(FieldCtx(7, 1)).order() == 8);
    CHECK(unit_circle(FieldCtx(13, 1)).order() == 12);
    CHECK_THROWS_AS(unit_circle(FieldCtx(2, 2)), std::invalid_argument);

    for (auto [p, r] : odd_prime_powers(49)) {
        FieldCtx F(p, r);
        UnitCircle c = unit_circle(F);
        std::size_t expected = F.q_mod4() == 1 ? F.q() - 1 : F.q() + 1;
        REQUIRE(c.order() == expected);
        CHECK(c.elements[0] == Gauss{1, 0});

        std::set<std::uint32_t> codes;
        for (const Gauss& z : c.elements) {
            CHECK(gnorm(F, z) == 1);
            codes.insert(gauss_code(F, z));
        }
        CHECK(codes.size() == c.order());
        // closure under product and inverse (conjugate)
        for (std::size_t i = 0; i < c.order(); i += 3)
            for (std::size_t j = 0; j < c.order(); j += 2) {
                CHECK(codes.contains(gauss_code(F, gmul(F, c.elements[i], c.elements[j]))));
                CHECK(codes.contains(gauss_code(F, gconj(F, c.elements[i]))));
            }
        // generator order equals the circle size
        Gauss acc{1, 0};
        std::size_t ord = 0;
        do {
            acc = gmul(F, acc, c.generator);
            ++ord;
        } while (!(acc == Gauss{1, 0}));
        CHECK(ord == c.order());
    }
}

TEST_CASE("rho parametrises the unit circle") {
    FieldCtx F13(13, 1);
    CHECK(rho(F13, 1) == Gauss{1, 0});
    CHECK(gnorm(F13, rho(F13, 2)) == 1);
    CHECK_THROWS_AS(rho(F13, 0), std::invalid_argument);
    CHECK_THROWS_AS(rho(FieldCtx(7, 1), 1), std::invalid_argument);

    for (auto [p, r] : odd_prime_powers(49)) {
        FieldCtx F(p, r);
        if (F.q_mod4() != 1) continue;
        std::set<std::uint32_t> image;
        for (Fe t = 1; t < F.q(); ++t) {
            Gauss z = rho(F, t);
            CHECK(gnorm(F, z) == 1);
            image.insert(gauss_code(F, z));
        }
        CHECK(image.size() == F.q() - 1); // injective onto N^-1(1)
        for (Fe s = 1; s < F.q(); ++s)
            for (Fe t = 1; t < F.q(); ++t)
                CHECK(rho(F, F.mul(s, t)) == gmul(F, rho(F, s), rho(F, t)));
    }
}
