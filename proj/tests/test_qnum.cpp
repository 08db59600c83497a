#include <doctest.h>

#include "cellforge/qnum.hpp"

#include <cmath>

using namespace cellforge;

TEST_CASE("quantum integers at roots of unity") {
    // Independent sine oracle.
    auto oracle = [](int n, int m) { return std::sin(m * M_PI / n) / std::sin(M_PI / n); };

    for (int n : {4, 6, 8, 12, 24}) {
        auto ctx = QContext::root_of_unity(n);
        CHECK(qint(ctx, 0) == 0.0);
        CHECK(qint(ctx, 1) == 1.0);
        for (int m = 2; m <= n; ++m)
            CHECK(qint(ctx, m) == doctest::Approx(oracle(n, m)).epsilon(1e-14));
    }
    CHECK(qint(QContext::root_of_unity(6), 3) == doctest::Approx(2.0).epsilon(1e-15));
    // [6] = [2] at n = 8
    auto c8 = QContext::root_of_unity(8);
    CHECK(qint(c8, 6) == doctest::Approx(1.8477590650225735).epsilon(1e-12));
    CHECK(qint(c8, 6) == qint(c8, 2));
}

TEST_CASE("reflection symmetry is exact") {
    for (int n = 4; n <= 64; ++n) {
        auto ctx = QContext::root_of_unity(n);
        for (int m = 1; m < n; ++m) CHECK(qint(ctx, m) == qint(ctx, n - m));
    }
}

TEST_CASE("positivity below the Coxeter label") {
    for (int n = 4; n <= 64; ++n) {
        auto ctx = QContext::root_of_unity(n);
        for (int m = 1; m < n; ++m) CHECK(qint(ctx, m) > 0.0);
        CHECK(std::fabs(qint(ctx, n)) < 1e-15);
    }
}

TEST_CASE("identity families") {
    for (int n = 4; n <= 64; ++n) {
        auto rep = check_identities(QContext::root_of_unity(n), n - 2);
        CHECK(rep.max_violation() <= 1e-12);
    }
    // [2]^2 - [1][3] = 1 at n = 6: 3 - 2 = 1
    auto c6 = QContext::root_of_unity(6);
    CHECK(qint(c6, 2) * qint(c6, 2) - qint(c6, 1) * qint(c6, 3) == doctest::Approx(1.0));
    // [4][2] = [3] + [5] at n = 12
    auto c12 = QContext::root_of_unity(12);
    CHECK(qint(c12, 4) * qint(c12, 2) ==
          doctest::Approx(qint(c12, 3) + qint(c12, 5)).epsilon(1e-14));
    // the n = 24 relation
    auto c24 = QContext::root_of_unity(24);
    CHECK(qint(c24, 4) * qint(c24, 4) ==
          doctest::Approx(qint(c24, 2) * qint(c24, 10)).epsilon(1e-14));
}

TEST_CASE("generic q") {
    auto ctx = QContext::generic(0.37);
    auto oracle = [](double x, int m) { return std::sinh(m * x) / std::sinh(x); };
    for (int m = 0; m <= 12; ++m)
        CHECK(qint(ctx, m) == doctest::Approx(oracle(0.37, m)).epsilon(1e-14));
    for (int m = 1; m <= 12; ++m) CHECK(qint(ctx, m) > 0.0);
    // Lemma identities that hold at any q
    auto q = [&](int m) { return qint(ctx, m); };
    for (int a = 2; a <= 10; ++a) {
        CHECK(q(a) - q(a - 2) == doctest::Approx(q(2 * a - 2) / q(a - 1)).epsilon(1e-12));
        // absolute error from the q(a)^2 cancellation grows with a
        CHECK(std::fabs(q(a) * q(a) - q(a - 1) * q(a + 1) - 1.0) <= 1e-11 * q(a) * q(a));
    }
}

TEST_CASE("extended precision path") {
    auto ctx53 = QContext::root_of_unity(24, 53);
    auto ctx113 = QContext::root_of_unity(24, 113);
    for (int m = 1; m <= 23; ++m)
        CHECK(qint(ctx53, m) == doctest::Approx(qint(ctx113, m)).epsilon(1e-15));
    // products of five quantum numbers agree between paths
    double p53 = qprod(ctx53, {3, 4, 4, 5, 7});
    double p113 = qprod(ctx113, {3, 4, 4, 5, 7});
    CHECK(std::fabs(p53 - p113) <= 1e-12 * std::fabs(p113));
}

TEST_CASE("context validation") {
    CHECK_THROWS(QContext::root_of_unity(3));
    CHECK_THROWS(QContext::generic(-1.0));
    CHECK_THROWS(QContext::root_of_unity(8, 64));
    CHECK_THROWS(check_identities(QContext::generic(0.5), 4));
    CHECK_THROWS(check_identities(QContext::root_of_unity(8), 7));
}
