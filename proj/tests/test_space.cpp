#include "wco/gallery.hpp"
#include "wco/json_io.hpp"
#include "wco/random_space.hpp"
#include "wco/space.hpp"

#include <doctest.h>

#include "fixtures.hpp"

using namespace wco;

TEST_CASE("build_space validates its input") {
    CHECK_NOTHROW(make_s2());
    CHECK_NOTHROW(make_c3());

    CHECK_THROWS_WITH_AS(build_space({"0", "0"}, {1, 1}, {"0", "0"}, {{1, 0}, {1, 0}}),
                         "duplicate point label: 0", std::invalid_argument);
    CHECK_THROWS_AS(build_space({"0"}, {0.0}, {"0"}, {{1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(build_space({"0"}, {-2.0}, {"0"}, {{1, 0}}), std::invalid_argument);
    // phi: 0 -> 5 with 5 not a point
    CHECK_THROWS_AS(build_space({"0"}, {1.0}, {"5"}, {{1, 0}}), std::invalid_argument);
}

TEST_CASE("fibers of the basic examples") {
    PointSpace s2 = make_s2();
    CHECK(fibers(s2).preimages[0] == std::vector<int>{0, 1});
    CHECK(fibers(s2).preimages[1].empty());

    PointSpace c3 = make_c3();
    for (int x = 0; x < 3; ++x) {
        auto pre = fibers(c3).preimages[x];
        REQUIRE(pre.size() == 1);
        CHECK(pre[0] == (x + 2) % 3);  // phi(y) = x iff y = x - 1 mod 3
    }
}

TEST_CASE("swap map fibers on the window {1..4}") {
    auto fam = gallery::SwapFamily::constant(1.0);
    PointSpace s = fam.truncate({"1", "2", "3", "4"});
    auto pre_of = [&](const char* label) {
        std::vector<std::string> out;
        for (int y : fibers(s).preimages[s.index_of(label)]) out.push_back(s.label(y));
        return out;
    };
    CHECK(pre_of("1") == std::vector<std::string>{"2"});
    CHECK(pre_of("2") == std::vector<std::string>{"1"});
    CHECK(pre_of("3") == std::vector<std::string>{"4"});
    CHECK(pre_of("4") == std::vector<std::string>{"3"});
}

TEST_CASE("fiber index is reproducible from (points, phi)") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 20; ++i) {
        PointSpace s = random_space(rng);
        std::vector<std::string> pts, phi;
        std::vector<double> mass;
        std::vector<Complex> w;
        for (int x = 0; x < s.size(); ++x) {
            pts.push_back(s.label(x));
            phi.push_back(s.label(s.phi(x)));
            mass.push_back(s.mass(x));
            w.push_back(s.weight(x));
        }
        PointSpace rebuilt = build_space(pts, mass, phi, w);
        CHECK(fibers(rebuilt).preimages == fibers(s).preimages);
    }
}

TEST_CASE("mu_w is additive over disjoint point sets") {
    std::mt19937_64 rng(12);
    PointSpace s = random_space(rng);
    double total = 0.0;
    for (int x = 0; x < s.size(); ++x) total += s.mu_w(x);
    double left = 0.0, right = 0.0;
    for (int x = 0; x < s.size(); ++x) (x % 2 ? left : right) += s.mu_w(x);
    CHECK(total == doctest::Approx(left + right).epsilon(1e-14));
}

TEST_CASE("truncate rejects windows that are not phi-closed") {
    auto swap = gallery::SwapFamily::constant(1.0);
    CHECK_THROWS_AS(swap.truncate({"1", "2", "3"}), std::invalid_argument);

    gallery::BilateralShiftFamily no_convention(2.0, 1.0, /*absorb_boundary=*/false);
    CHECK_THROWS_AS(no_convention.truncate({"-3", "-2", "-1", "0", "1", "2", "3"}),
                    std::invalid_argument);

    // with the declared convention the same window is fine
    gallery::BilateralShiftFamily with_convention(2.0);
    CHECK_NOTHROW(with_convention.truncate({"-3", "-2", "-1", "0", "1", "2", "3"}));
}

TEST_CASE("buda window truncation with the chain-top convention") {
    gallery::BudaFamily buda;
    std::vector<std::string> pts;
    for (int j = 0; j <= 5; ++j) pts.push_back(std::to_string(j));
    for (int k = 1; k <= 4; ++k)
        for (int n = 1; n <= 4; ++n) pts.push_back(std::to_string(k) + "," + std::to_string(n));
    PointSpace s = buda.truncate(pts);
    CHECK(s.size() == 6 + 16);
    // phi(5) = 6 is outside; the convention absorbs at the top
    CHECK(s.phi(s.index_of("5")) == s.index_of("5"));
    CHECK(s.phi(s.index_of("1,1")) == s.index_of("0"));
    CHECK(s.phi(s.index_of("2,3")) == s.index_of("2,2"));
}

TEST_CASE("grid-tree windows are exactly phi-closed") {
    auto grid = gallery::GridTreeFamily::harmonic();
    std::vector<std::string> pts;
    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= 3; ++m) pts.push_back(std::to_string(n) + "," + std::to_string(m));
    PointSpace s = grid.truncate(pts);  // no boundary convention needed
    CHECK(s.size() == 9);
    CHECK(s.phi(s.index_of("1,1")) == s.index_of("1,1"));
    CHECK(s.phi(s.index_of("3,1")) == s.index_of("2,1"));
    CHECK(s.phi(s.index_of("2,3")) == s.index_of("2,2"));
}

TEST_CASE("space JSON round trip and validation") {
    PointSpace c3 = make_c3();
    json doc = space_to_json(c3);
    PointSpace back = space_from_json(doc);
    CHECK(back.size() == 3);
    CHECK(back.index_of("2") >= 0);
    CHECK(back.phi(back.index_of("2")) == back.index_of("0"));
    CHECK(back.weight(back.index_of("1")) == Complex(2, 0));

    json bad = doc;
    bad["mass"]["1"] = 0.0;
    CHECK_THROWS_AS(space_from_json(bad), std::invalid_argument);
    json bad2 = doc;
    bad2["w"]["1"] = 3.0;  // not [re, im]
    CHECK_THROWS_AS(space_from_json(bad2), std::invalid_argument);
    json bad3 = doc;
    bad3["mass"]["1"] = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(space_from_json(bad3), std::invalid_argument);
    json bad4 = doc;
    bad4["phi"]["1"] = "7";
    CHECK_THROWS_AS(space_from_json(bad4), std::invalid_argument);
}

TEST_CASE("exact rationals survive the double cache") {
    PointSpace s = build_space_exact(
        {"a", "b"}, {BigRat(1, 3), BigRat(2)}, {"b", "a"},
        {RatComplex(BigRat(1, 7), BigRat(0)), RatComplex(BigRat(0), BigRat(0))});
    CHECK(s.mass_exact(0) == BigRat(1, 3));
    CHECK(s.weight_exact(0).norm2() == BigRat(1, 49));
    CHECK(s.weight_is_zero(1));
    CHECK(!s.weight_is_zero(0));
    CHECK(s.mass(0) == doctest::Approx(1.0 / 3.0));
}
