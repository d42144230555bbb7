#include <doctest.h>

#include <utility>

#include "k3/arith.hpp"
#include "k3/k3counts.hpp"
#include "support.hpp"

using namespace k3;
using k3::testsupport::load_fixture;
using k3::testsupport::read_file;

TEST_CASE("rational-curve generating series") {
    TruncatedSeries yz = yau_zaslow_series(7);
    CHECK(yz.at(0) == 1);
    CHECK(yz.at(1) == 24);
    CHECK(yz.at(2) == 324);
    CHECK(yz.at(3) == 3200);
    CHECK(yz.at(4) == 25650);
    CHECK(yz.at(5) == 176256);
    CHECK(yz.at(6) == 1073720);
}

TEST_CASE("genus-g count series") {
    GenusSeries f0 = gbl_series(0, 10);
    CHECK(f0.g == 0);
    CHECK(equal_on_window(f0.series, yau_zaslow_series(10), 0, 9));

    GenusSeries f1 = gbl_series(1, 10);
    CHECK(f1.series.at(0) == 0);
    CHECK(f1.series.at(1) == 1);
    CHECK(f1.series.at(2) == 30);
    // Leading term: N_g^g = 1 (first contribution has all weight on one fiber).
    for (long g = 1; g <= 9; ++g) {
        GenusSeries fg = gbl_series(g, g + 1);
        CHECK(fg.series.at(g) == 1);
        if (g >= 2) CHECK(fg.series.at(g - 1) == 0);
    }
    CHECK_THROWS_AS(gbl_series(-1, 5), OutOfRange);
}

TEST_CASE("rational-curve table against fixture") {
    auto fx = load_fixture(std::string(FIXTURE_DIR) + "/table1.tsv");
    CountTable t = table1(18);
    CHECK(t.p_max == 18);
    CHECK(t.cells.size() == 90);
    CHECK(fx.cells.size() == 90);
    for (const auto& [key, value] : fx.cells) {
        REQUIRE(t.cells.count(key) == 1);
        CHECK(t.cells.at(key) == value);
    }
    // Marquee entries.
    CHECK(t.cells.at({5, 5}) == 176256);
    CHECK(t.cells.at({18, 9}) == Integer("303705014550"));
    CHECK(t.cells.at({11, 2}) == 3024);

    CHECK(render_table1_tsv(18) == read_file(std::string(FIXTURE_DIR) + "/table1.tsv"));
    CHECK_THROWS_AS(table1(0), OutOfRange);
    CHECK_THROWS_AS(table1(19), OutOfRange);
}

TEST_CASE("doubled-class genus-1 invariants") {
    CHECK(lee_leung_N12(1) == 3);
    CHECK(lee_leung_N12(2) == 49500);
    CHECK(lee_leung_N12(3) == 84603360);
    CHECK(lee_leung_N12(4) == Integer("40242421800"));
    CHECK_THROWS_AS(lee_leung_N12(0), OutOfRange);
}

TEST_CASE("genus-5 decomposition into 5-nodal and reducible counts") {
    GathmannReport r = gathmann_check();
    CHECK(r.five_nodal_integral == 70956);
    CHECK(r.reducible_pairs == 104652);
    CHECK(r.reducible_pairs == 2 * binomial(324, 2));
    CHECK(r.reducible_double_covers == 648);
    CHECK(r.total == r.five_nodal_integral + r.reducible_pairs + r.reducible_double_covers);
    CHECK(r.total == 176256);
    CHECK(r.n05 == 176256);
    CHECK(r.pass);
}

TEST_CASE("Euler-number fiber counts") {
    CHECK(fiber_count({24, 0, 2}) == 24);
    CHECK(fiber_count({-480, 24, 2}) == -528);
    CHECK(fiber_count({0, 0, 2}) == 0);
}
