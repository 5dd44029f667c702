#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "fenchel/analytic.hpp"
#include "fenchel/conjugate.hpp"

using namespace fenchel;

namespace {

std::vector<double> linspace(double lo, double hi, std::size_t n) {
    std::vector<double> xs(n);
    for (std::size_t i = 0; i < n; ++i)
        xs[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    xs.front() = lo;
    xs.back() = hi;
    return xs;
}

SampledFunction sample(double lo, double hi, std::size_t n, double (*fn)(double)) {
    SampledFunction f;
    f.abscissae = linspace(lo, hi, n);
    f.values.reserve(n);
    for (double x : f.abscissae) f.values.push_back(fn(x));
    return f;
}

double quartic(double v) { return 0.25 * v * v * v * v - 0.5 * v * v; }
double half_square(double x) { return 0.5 * x * x; }
double square(double x) { return x * x; }
double quartic_cubic(double v) {
    return 0.5 * v * v - v * v * v / 3.0 + v * v * v * v / 17.0;
}

// Random strictly-increasing grid with values in [-10, 10].
SampledFunction random_function(std::mt19937& rng) {
    std::uniform_int_distribution<std::size_t> nd(2, 200);
    std::uniform_real_distribution<double> gap(1e-3, 1.0);
    std::uniform_real_distribution<double> val(-10.0, 10.0);
    std::uniform_real_distribution<double> start(-10.0, 0.0);
    const std::size_t n = nd(rng);
    SampledFunction f;
    f.abscissae.resize(n);
    f.values.resize(n);
    double x = start(rng);
    for (std::size_t i = 0; i < n; ++i) {
        f.abscissae[i] = x;
        f.values[i] = val(rng);
        x += gap(rng);
    }
    return f;
}

SlopeGrid random_slopes(std::mt19937& rng) {
    std::uniform_int_distribution<std::size_t> md(1, 200);
    std::uniform_real_distribution<double> gap(1e-3, 0.5);
    std::uniform_real_distribution<double> start(-25.0, 0.0);
    const std::size_t m = md(rng);
    SlopeGrid g;
    g.slopes.resize(m);
    double p = start(rng);
    for (std::size_t j = 0; j < m; ++j) {
        g.slopes[j] = p;
        p += gap(rng);
    }
    return g;
}

bool discretely_convex(const std::vector<double>& xs, const std::vector<double>& ys, double tol) {
    double prev_quot = -1e300;
    bool first = true;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        const double quot = (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]);
        if (!first && quot < prev_quot - tol) return false;
        prev_quot = quot;
        first = false;
    }
    return true;
}

}  // namespace

TEST_CASE("input validation") {
    CHECK_THROWS_AS(validate(SampledFunction{{0.0}, {1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(validate(SampledFunction{{0.0, 0.0}, {1.0, 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(validate(SampledFunction{{0.0, 1.0}, {1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(validate(SampledFunction{{0.0, 1.0}, {1.0, std::nan("")}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate(SlopeGrid{{}}), std::invalid_argument);
    CHECK_THROWS_AS(validate(SlopeGrid{{1.0, 0.5}}), std::invalid_argument);
    CHECK_NOTHROW(validate(SampledFunction{{0.0, 1.0}, {1.0, 2.0}}));
}

TEST_CASE("conjugate_bruteforce on reference inputs") {
    SUBCASE("sampled quartic reproduces the closed-form kink value") {
        const auto f = sample(-3.0, 3.0, 4001, quartic);
        const auto r = conjugate_bruteforce(f, SlopeGrid{{0.0}});
        CHECK(std::abs(r.values[0] - 0.25) <= 1e-6);
        CHECK(r.finite[0]);
    }

    SUBCASE("x^2/2 is its own conjugate") {
        const auto f = sample(-5.0, 5.0, 1001, half_square);
        const auto r = conjugate_bruteforce(f, SlopeGrid{{1.0}});
        CHECK(std::abs(r.values[0] - 0.5) <= 1e-12);  // x = 1 is on the grid
    }

    SUBCASE("sampled quartic at p = 6 approaches the closed form") {
        const auto f = sample(-3.0, 3.0, 4001, quartic);
        const auto r = conjugate_bruteforce(f, SlopeGrid{{6.0}});
        CHECK(std::abs(r.values[0] - 10.0) <= 1e-5);
    }

    SUBCASE("argsup is the smallest maximizing index") {
        // Two exact ties on a line of slope 2: indices 0 and 2.
        const SampledFunction f{{0.0, 1.0, 2.0}, {0.0, 3.0, 4.0}};
        const auto r = conjugate_bruteforce(f, SlopeGrid{{2.0}});
        CHECK(r.values[0] == 0.0);
        CHECK(r.argsup[0] == 0);
    }
}

TEST_CASE("conjugate_fast equals the oracle") {
    SUBCASE("1000 randomized instances") {
        std::mt19937 rng(20140501u);
        for (int trial = 0; trial < 1000; ++trial) {
            const auto f = random_function(rng);
            const auto g = random_slopes(rng);
            const auto fast = conjugate_fast(f, g);
            const auto slow = conjugate_bruteforce(f, g);
            REQUIRE(fast.values.size() == slow.values.size());
            for (std::size_t j = 0; j < fast.values.size(); ++j) {
                CHECK(std::abs(fast.values[j] - slow.values[j]) <= 1e-12);
                CHECK(fast.finite[j] == slow.finite[j]);
            }
        }
    }

    SUBCASE("on the quartic grid") {
        const auto f = sample(-3.0, 3.0, 4001, quartic);
        const SlopeGrid g{linspace(-2.0, 2.0, 4001)};
        const auto fast = conjugate_fast(f, g);
        const auto slow = conjugate_bruteforce(f, g);
        for (std::size_t j = 0; j < g.size(); ++j)
            CHECK(std::abs(fast.values[j] - slow.values[j]) <= 1e-12);
    }

    SUBCASE("all samples on one supporting line") {
        const SampledFunction f{{0.0, 0.5, 1.0}, {0.0, 1.0, 2.0}};
        const auto r = conjugate_fast(f, SlopeGrid{{2.0}});
        CHECK(r.values[0] == 0.0);  // either endpoint witnesses the value
        CHECK((r.argsup[0] == 0 || r.argsup[0] == 2));
    }
}

TEST_CASE("conjugate result structure") {
    std::mt19937 rng(99u);
    for (int trial = 0; trial < 50; ++trial) {
        const auto f = random_function(rng);
        const auto g = random_slopes(rng);
        const auto r = conjugate_fast(f, g);

        // Discrete Fenchel-Young: every sample is dominated.
        for (std::size_t j = 0; j < g.size(); ++j)
            for (std::size_t i = 0; i < f.size(); ++i)
                CHECK(g.slopes[j] * f.abscissae[i] - f.values[i] <= r.values[j] + 1e-12);

        // Convex in p wherever finite.
        CHECK(discretely_convex(r.slopes, r.values, 1e-9));

        // Monotone subgradient selection.
        for (std::size_t j = 1; j < r.argsup.size(); ++j) CHECK(r.argsup[j - 1] <= r.argsup[j]);
    }
}

TEST_CASE("biconjugate is the lower convex hull") {
    SUBCASE("quartic: flat at -1/4 inside, original outside") {
        const auto f = sample(-3.0, 3.0, 6001, quartic);  // contains 0, +-1, +-2 exactly
        const auto hull = biconjugate(f);
        REQUIRE(hull.size() == f.size());
        CHECK(std::abs(hull.values[3000] + 0.25) <= 1e-6);           // v = 0
        CHECK(std::abs(hull.values[5000] - 2.0) <= 1e-12);           // v = 2
        CHECK(std::abs(hull.values[1000] - quartic(-2.0)) <= 1e-12); // v = -2
        for (std::size_t i = 0; i < f.size(); ++i) {
            CHECK(hull.values[i] <= f.values[i] + 1e-12);
            if (std::abs(f.abscissae[i]) >= 1.001)
                CHECK(std::abs(hull.values[i] - f.values[i]) <= 1e-12);
        }
        CHECK(discretely_convex(hull.abscissae, hull.values, 1e-12));
    }

    SUBCASE("a convex input is unchanged") {
        const auto f = sample(-2.0, 2.0, 501, square);
        const auto hull = biconjugate(f);
        for (std::size_t i = 0; i < f.size(); ++i) CHECK(hull.values[i] == f.values[i]);
    }

    SUBCASE("idempotent, bitwise") {
        std::mt19937 rng(7501u);
        for (int trial = 0; trial < 400; ++trial) {
            const auto f = random_function(rng);
            const auto once = biconjugate(f);
            const auto twice = biconjugate(once);
            REQUIRE(once.size() == twice.size());
            for (std::size_t i = 0; i < once.size(); ++i)
                CHECK(once.values[i] == twice.values[i]);
        }
        const auto q = biconjugate(sample(-3.0, 3.0, 4001, quartic));
        const auto qq = biconjugate(q);
        for (std::size_t i = 0; i < q.size(); ++i) CHECK(q.values[i] == qq.values[i]);
    }

    SUBCASE("exactly linear input is its own hull") {
        SampledFunction f;
        f.abscissae = linspace(0.0, 1.0, 101);
        for (double x : f.abscissae) f.values.push_back(2.0 * x);
        const auto hull = biconjugate(f);
        for (std::size_t i = 0; i < f.size(); ++i) CHECK(hull.values[i] == f.values[i]);
    }
}

TEST_CASE("conjugate transform algebra") {
    std::mt19937 rng(314159u);

    SUBCASE("order reversal: f <= h implies conj f >= conj h") {
        std::uniform_real_distribution<double> lift(0.0, 3.0);
        for (int trial = 0; trial < 100; ++trial) {
            const auto f = random_function(rng);
            auto h = f;
            for (double& y : h.values) y += lift(rng);
            const auto g = random_slopes(rng);
            const auto rf = conjugate_fast(f, g);
            const auto rh = conjugate_fast(h, g);
            for (std::size_t j = 0; j < g.size(); ++j)
                CHECK(rf.values[j] >= rh.values[j] - 1e-12);
        }
    }

    SUBCASE("shift rule: conj(f + c) = conj(f) - c") {
        std::uniform_real_distribution<double> cd(-5.0, 5.0);
        for (int trial = 0; trial < 100; ++trial) {
            const auto f = random_function(rng);
            const double c = cd(rng);
            auto shifted = f;
            for (double& y : shifted.values) y += c;
            const auto g = random_slopes(rng);
            const auto r0 = conjugate_fast(f, g);
            const auto r1 = conjugate_fast(shifted, g);
            for (std::size_t j = 0; j < g.size(); ++j)
                CHECK(std::abs(r1.values[j] - (r0.values[j] - c)) <= 1e-12);
        }
    }
}

TEST_CASE("supporting_line") {
    const auto f = sample(-3.0, 3.0, 4001, quartic);

    SUBCASE("p = 0: minimal intercept is the function minimum") {
        const auto [y, idx] = supporting_line(f, 0.0);
        CHECK(std::abs(y + 0.25) <= 1e-6);
        CHECK(std::abs(std::abs(f.abscissae[idx]) - 1.0) <= 2e-3);
    }

    SUBCASE("conjugate value is the sign-flipped intercept") {
        for (double p : {-1.5, -0.2, 0.0, 0.4, 2.0}) {
            const auto [y, idx] = supporting_line(f, p);
            const auto r = conjugate_fast(f, SlopeGrid{{p}});
            CHECK(std::abs(-y - r.values[0]) <= 1e-12);
        }
    }

    SUBCASE("p = 6 touches near v = 2 with intercept -10") {
        const auto [y, idx] = supporting_line(f, 6.0);
        CHECK(std::abs(y + 10.0) <= 1e-5);
        CHECK(std::abs(f.abscissae[idx] - 2.0) <= 2e-3);
    }

    SUBCASE("x^2/2 at p = 0 touches the origin") {
        const auto g = sample(-5.0, 5.0, 1001, half_square);
        const auto [y, idx] = supporting_line(g, 0.0);
        CHECK(y == 0.0);
        CHECK(g.abscissae[idx] == 0.0);
    }
}

TEST_CASE("effective_domain") {
    CHECK(effective_domain(PolynomialLagrangian{{0.0, 0.0, -0.5, 0.0, 0.25}}).kind ==
          DomainKind::AllMomenta);
    const auto lin = effective_domain(PolynomialLagrangian{{0.0, 3.0}});
    CHECK(lin.kind == DomainKind::SinglePoint);
    CHECK(lin.point == 3.0);
    CHECK(lin.contains(3.0));
    CHECK(!lin.contains(2.999));
    CHECK(effective_domain(PolynomialLagrangian{{0.0, 0.0, -1.0}}).kind == DomainKind::Empty);
    CHECK(effective_domain(PolynomialLagrangian{{0.0, 0.0, 0.0, 1.0}}).kind == DomainKind::Empty);
    const auto constant = effective_domain(PolynomialLagrangian{{5.0}});
    CHECK(constant.kind == DomainKind::SinglePoint);
    CHECK(constant.point == 0.0);
}

TEST_CASE("flat_regions") {
    SUBCASE("quartic has the single coexistence interval (-1, 1)") {
        const auto f = sample(-3.0, 3.0, 4001, quartic);
        const auto segs = flat_regions(f);
        REQUIRE(segs.flat_regions.size() == 1);
        const double step = 6.0 / 4000.0;
        CHECK(std::abs(segs.flat_regions[0].first + 1.0) <= 2.0 * step);
        CHECK(std::abs(segs.flat_regions[0].second - 1.0) <= 2.0 * step);
    }

    SUBCASE("convex input has none") {
        const auto f = sample(-2.0, 2.0, 801, square);
        CHECK(flat_regions(f).flat_regions.empty());
    }

    SUBCASE("the quartic-cubic example has a non-trivial hull") {
        const auto f = sample(-2.0, 8.0, 2001, quartic_cubic);
        const auto segs = flat_regions(f);
        CHECK(segs.flat_regions.size() >= 1);
        const auto hull = biconjugate(f);
        for (std::size_t i = 0; i < f.size(); ++i) CHECK(hull.values[i] <= f.values[i] + 1e-12);
        CHECK(discretely_convex(hull.abscissae, hull.values, 1e-12));
    }
}

TEST_CASE("discrete conjugate converges to the closed form") {
    const SlopeGrid g{linspace(-2.0, 2.0, 2001)};
    double err4001 = 0.0, err1e5 = 0.0;
    {
        const auto f = sample(-3.0, 3.0, 4001, quartic);
        const auto r = conjugate_fast(f, g);
        for (std::size_t j = 0; j < g.size(); ++j)
            err4001 = std::max(err4001,
                               std::abs(r.values[j] - hamiltonian_closed_form(g.slopes[j])));
    }
    {
        const auto f = sample(-3.0, 3.0, 100001, quartic);
        const auto r = conjugate_fast(f, g);
        for (std::size_t j = 0; j < g.size(); ++j)
            err1e5 = std::max(err1e5,
                              std::abs(r.values[j] - hamiltonian_closed_form(g.slopes[j])));
    }
    CHECK(err4001 <= 1e-3);
    CHECK(err1e5 <= 1e-6);
    CHECK(err1e5 < err4001);  // refinement must actually help
}
