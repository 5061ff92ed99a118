#include <catch_amalgamated.hpp>

#include <map>

#include "oracles.hpp"
#include "tamap/series.hpp"
#include "tamap/verify.hpp"

using namespace tamap;

TEST_CASE("closed forms", "[series]") {
    const std::vector<int> expected{1, 2, 6, 22, 91, 408, 1938, 9614};
    for (unsigned n = 0; n < expected.size(); ++n) CHECK(closed_form(n) == expected[n]);
    for (int n = 0; n <= 12; ++n) CHECK(closed_form(static_cast<unsigned>(n)) == oracle::closed_form(n));
    CHECK(catalan(0) == 1);
    CHECK(catalan(4) == 14);
    CHECK(catalan(10) == 16796);
    for (int n = 0; n <= 15; ++n) CHECK(catalan(static_cast<unsigned>(n)) == oracle::catalan(n));
    CHECK(closed_form(40) > BigInt(1) << 64);
}

TEST_CASE("series arithmetic", "[series]") {
    BiSeries g(3);
    g.add_to(1, 2, 1);  // x^2 t
    g.add_to(2, 0, 3);  // 3 t^2
    g.add_to(2, 1, -3);
    const BiSeries q = g.divided_difference();
    // (x^2 - 1) / (x - 1) = x + 1, (3 - 3x - 0) / (x - 1) = -3
    CHECK(q.coeff(1, 0) == 1);
    CHECK(q.coeff(1, 1) == 1);
    CHECK(q.coeff(2, 0) == -3);
    CHECK(q.degree_in_x(2) == 0);
    CHECK(g.at_x_one()[1] == 1);
    CHECK(g.at_x_one()[2] == 0);
    const BiSeries sq = BiSeries::xt(3) * BiSeries::xt(3);
    CHECK(sq.coeff(2, 2) == 1);
    CHECK(sq.degree_in_x(1) == -1);
    CHECK((BiSeries::constant(3, 1) + BiSeries::xt(3)).coeff(0, 0) == 1);
    CHECK(BiSeries(2).coeff(5, 5) == 0);
}

TEST_CASE("interval equation", "[series]") {
    const BiSeries f = solve_interval_equation(12);
    CHECK(f.row(1) == std::vector<BigInt>{0, 1});
    CHECK(f.coeff(2, 1) == 1);
    CHECK(f.coeff(2, 2) == 1);
    CHECK(f.at_x_one()[5] == 91);
    CHECK(f.at_x_one()[0] == 0);
    for (std::size_t n = 1; n <= 12; ++n) {
        CHECK(f.at_x_one()[n] == closed_form(static_cast<unsigned>(n - 1)));
        CHECK(f.degree_in_x(n) == static_cast<long>(n));
        CHECK_NOTHROW(f.divided_difference());
    }
    const BiSeries hist = contact_series(7, 7);
    for (std::size_t n = 1; n <= 7; ++n)
        for (std::size_t k = 0; k <= n + 1; ++k) CHECK(f.coeff(n, k) == hist.coeff(n, k));
}

TEST_CASE("map equation", "[series]") {
    const BiSeries m = solve_map_equation(12);
    CHECK(m == solve_interval_equation(12));
    CHECK(m.row(1) == std::vector<BigInt>{0, 1});
    CHECK(m.at_x_one()[3] == 6);
    const BiSeries outer = map_series(5, 5, false), root = map_series(5, 5, true);
    for (std::size_t n = 1; n <= 5; ++n)
        for (std::size_t k = 0; k <= n + 1; ++k) {
            CHECK(m.coeff(n, k) == outer.coeff(n, k));
            CHECK(m.coeff(n, k) == root.coeff(n, k));
        }
}

TEST_CASE("geometric tail", "[series]") {
    // A = x t gives A / (1 - A) = sum x^n t^n
    const BiSeries g = geometric_tail(BiSeries::xt(6));
    for (std::size_t n = 1; n <= 6; ++n) {
        CHECK(g.coeff(n, n) == 1);
        CHECK(g.degree_in_x(n) == static_cast<long>(n));
    }
}

TEST_CASE("TSV output", "[series]") {
    std::ostringstream os;
    write_tsv(os, solve_interval_equation(3));
    CHECK(os.str() == "n\tx^0\tx^1\tx^2\tx^3\n1\t0\t1\t0\t0\n2\t0\t1\t1\t0\n3\t0\t2\t3\t1\n");
}
