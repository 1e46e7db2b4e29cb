#include <catch2/catch_amalgamated.hpp>

#include "corpus.hpp"

using namespace knotcert;
using corpus::a_poly;
using corpus::t_poly;

TEST_CASE("addition in canonical form") {
    CHECK((a_poly({{8, 1}}) + a_poly({{8, -1}})).is_zero());
    CHECK(a_poly({{0, 1}}) + a_poly({{8, -1}, {-8, -1}}) ==
          a_poly({{0, 1}, {8, -1}, {-8, -1}}));
    CHECK(t_poly({{4, 1}, {12, 1}}) + t_poly({{16, -1}}) ==
          t_poly({{4, 1}, {12, 1}, {16, -1}}));
    CHECK_THROWS_AS(Laurent::one(Var::A) + Laurent::one(Var::t), std::invalid_argument);
}

TEST_CASE("multiplication") {
    Laurent delta = a_poly({{8, -1}, {-8, -1}});
    CHECK(delta * delta == a_poly({{16, 1}, {0, 2}, {-16, 1}}));
    Laurent p = t_poly({{4, 2}, {-8, 3}, {0, -1}});
    CHECK(p * Laurent::one(Var::t) == p);
    // (1-t^2)(1+t^2-t^3) = 1 - t^3 - t^4 + t^5
    CHECK(t_poly({{0, 1}, {8, -1}}) * t_poly({{0, 1}, {8, 1}, {12, -1}}) ==
          t_poly({{0, 1}, {12, -1}, {16, -1}, {20, 1}}));
}

TEST_CASE("exact division") {
    // (1 - t^3 - t^4 + t^5) / (1 - t^2) = 1 + t^2 - t^3
    CHECK(t_poly({{0, 1}, {12, -1}, {16, -1}, {20, 1}})
              .div_exact(t_poly({{0, 1}, {8, -1}})) == t_poly({{0, 1}, {8, 1}, {12, -1}}));
    Laurent one_plus_t = t_poly({{0, 1}, {4, 1}});
    CHECK(one_plus_t.div_exact(one_plus_t) == Laurent::one(Var::t));
    Laurent p = t_poly({{4, 2}, {-8, 3}});
    CHECK(p.div_exact(Laurent::one(Var::t)) == p);
    CHECK_THROWS_AS(t_poly({{0, 1}, {4, 1}}).div_exact(t_poly({{0, 1}, {8, -1}})),
                    std::domain_error);
    CHECK_THROWS_AS(t_poly({{0, 3}}).div_exact(t_poly({{0, 2}})), std::domain_error);
    CHECK_THROWS_AS(p.div_exact(Laurent::zero(Var::t)), std::domain_error);
}

TEST_CASE("substitution A -> t^(-1/4)") {
    CHECK(a_poly({{-24, 1}}).substitute_A_to_t() == t_poly({{6, 1}}));  // A^-6 -> t^3/2
    CHECK(a_poly({{16, -1}, {-16, -1}}).substitute_A_to_t() ==
          t_poly({{-4, -1}, {4, -1}}));  // -A^4 - A^-4 -> -t^-1 - t
    CHECK(Laurent::one(Var::A).substitute_A_to_t() == Laurent::one(Var::t));
    CHECK_THROWS_AS(Laurent::one(Var::t).substitute_A_to_t(), std::invalid_argument);
    CHECK_THROWS_AS(a_poly({{2, 1}}).substitute_A_to_t(), std::invalid_argument);
}

TEST_CASE("(-A^3)^k") {
    CHECK(neg_cube_A_pow(0) == Laurent::one(Var::A));
    CHECK(neg_cube_A_pow(-2) == a_poly({{-24, 1}}));
    CHECK(neg_cube_A_pow(3) == a_poly({{36, -1}}));
}

TEST_CASE("text rendering") {
    CHECK(t_poly({{4, 1}, {12, 1}, {16, -1}}).to_string() == "t^(1) + t^(3) - t^(4)");
    CHECK(t_poly({{2, -1}, {10, -1}}).to_string() == "-t^(1/2) - t^(5/2)");
    CHECK(Laurent::one(Var::t).to_string() == "1");
    CHECK(Laurent::zero(Var::A).to_string() == "0");
    CHECK(t_poly({{0, 2}, {8, 2}}).to_string() == "2 + 2*t^(2)");
    CHECK(a_poly({{-28, 1}, {-12, -1}, {20, -1}}).to_string() ==
          "A^(-7) - A^(-3) - A^(5)");
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(20240817);
    for (int i = 0; i < 200; ++i) {
        Laurent p = corpus::random_poly(rng, Var::t);
        Laurent q = corpus::random_poly(rng, Var::t);
        Laurent r = corpus::random_poly(rng, Var::t);
        CHECK(p + q == q + p);
        CHECK((p + q) + r == p + (q + r));
        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
    }
}

TEST_CASE("division inverts multiplication") {
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        Laurent p = corpus::random_poly(rng, Var::t);
        Laurent q = corpus::random_poly(rng, Var::t);
        if (q.is_zero()) continue;
        CHECK((p * q).div_exact(q) == p);
    }
}

TEST_CASE("substitution is a ring homomorphism") {
    std::mt19937 rng(99);
    for (int i = 0; i < 100; ++i) {
        Laurent p = corpus::random_poly(rng, Var::A);
        Laurent q = corpus::random_poly(rng, Var::A);
        // restrict to integer powers of A
        auto quantize = [](const Laurent& x) {
            Laurent r(Var::A);
            for (const auto& [e, c] : x.terms())
                r += Laurent::monomial(Var::A, c, 4 * (e % 6));
            return r;
        };
        Laurent pa = quantize(p), qa = quantize(q);
        CHECK((pa * qa).substitute_A_to_t() ==
              pa.substitute_A_to_t() * qa.substitute_A_to_t());
        CHECK((pa + qa).substitute_A_to_t() ==
              pa.substitute_A_to_t() + qa.substitute_A_to_t());
    }
}
