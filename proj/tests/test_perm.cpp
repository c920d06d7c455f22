#include "doctest.h"
#include "nakayama/homdim.hpp"
#include "nakayama/perm.hpp"

using namespace nakayama;

TEST_CASE("reference permutations") {
    CHECK(permutation(parse("linear:1,2,3,4,3")).cycles() == "(14352)");
    CHECK(permutation(parse("linear:1,2,3,3,3")).map == parse_cycles("(1,3,5)(2,4)", 5));
    CHECK(permutation(parse("cyclic:3,2,3,4")).cycles() == "(143)(2)");
    const char* four[] = {"linear:1,2,3,4", "linear:1,2,3,3", "linear:1,2,3,2", "linear:1,2,2,3", "linear:1,2,2,2"};
    const char* cycles[] = {"(1432)", "(1324)", "(1342)", "(1243)", "(1234)"};
    for (int k = 0; k < 5; ++k) CHECK(permutation(parse(four[k])).cycles() == cycles[k]);
    CHECK(permutation(parse("cyclic:2,2")).cycles() == "(12)");
    CHECK(permutation(parse("cyclic:3,2,3,4")).fixed_points() == 1);
    CHECK(permutation(parse("linear:1")).cycles() == "(1)");
}

TEST_CASE("NS and the closed form") {
    const Algebra c4 = parse("cyclic:3,2,3,4");
    CHECK(ns(c4, 2) == simple(2));
    CHECK(ns(c4, 1) == Module{1, 4});
    for (int v = 1; v <= 2; ++v) CHECK(ns(parse("cyclic:2,2"), v) == injective(parse("cyclic:2,2"), v));
    CHECK(h_closed_form(c4, 2) == 2);
    CHECK(h_closed_form(c4, 1) == 4);
    CHECK(h_closed_form(parse("linear:1,2,3,4,3"), 5) == 2);
    CHECK(h_star(c4, h(c4, 3)) == 3);
}

TEST_CASE("cycle notation") {
    CHECK(cycle_notation({4, 2, 1, 3}) == "(143)(2)");
    CHECK(parse_cycles("(143)(2)", 4) == std::vector<int>{4, 2, 1, 3});
    CHECK(parse_cycles("(1,4,3)", 4) == std::vector<int>{4, 2, 1, 3});
    CHECK(parse_cycles(" (1 4 3) ", 4) == std::vector<int>{4, 2, 1, 3});
    std::vector<int> ten{2, 1, 3, 4, 5, 6, 7, 8, 10, 9};
    CHECK(cycle_notation(ten) == "(1,2)(3)(4)(5)(6)(7)(8)(9,10)");
    CHECK(parse_cycles(cycle_notation(ten), 10) == ten);
    CHECK_THROWS_AS(parse_cycles("(11)", 4), ParseError);
    CHECK_THROWS_AS(parse_cycles("(15)", 4), ParseError);
    CHECK_THROWS_AS(parse_cycles("(12", 4), ParseError);
}

TEST_CASE("ties on the four-vertex cycle") {
    const auto ts = ties(parse("cyclic:3,2,3,4"));
    REQUIRE(ts.size() == 4);
    CHECK(ts[3].z == 1);
    CHECK(ts[3].s == 3);
    CHECK(ts[3].parity == Parity::odd);
    CHECK(ts[0].z == 0);
    REQUIRE(ts[0].peak);
    CHECK(*ts[0].peak == Module{1, 4});
    CHECK(ts[1].z == 3);
    CHECK(ts[1].proj_terminal == Module{1, 2});
    CHECK(ts[1].proj_resolution.size() == 3);
    CHECK(ts[1].inj_terminal == injective(parse("cyclic:3,2,3,4"), 2));
}

TEST_CASE("Dyck words") {
    CHECK(kupisch_to_dyck(parse("linear:1,2,2,2")) == "UDUDUD");
    CHECK(kupisch_to_dyck(parse("linear:1,2,3,4")) == "UUUDDD");
    CHECK(dyck_to_kupisch("UUDDUD").entries() == std::vector<int>{1, 2, 3, 2});
    CHECK(dyck_to_kupisch("").entries() == std::vector<int>{1});
    CHECK_THROWS_AS(dyck_to_kupisch("UUD"), MalformedPath);
    CHECK_THROWS_AS(dyck_to_kupisch("DU"), MalformedPath);
    CHECK_THROWS_AS(dyck_to_kupisch("UXD"), MalformedPath);
    for (int n = 1; n <= 7; ++n)
        for (const Algebra& a : enumerate(n, n, Kind::linear)) {
            const std::string w = kupisch_to_dyck(a);
            CHECK(w.size() == static_cast<std::size_t>(2 * (n - 1)));
            CHECK(dyck_to_kupisch(w).same_labels(a));
        }
}

TEST_CASE("every Dyck word decodes to an admissible series") {
    for (int m = 0; m <= 6; ++m) {
        long count = 0;
        for (int bits = 0; bits < (1 << (2 * m)); ++bits) {
            std::string w;
            int height = 0;
            bool ok = true;
            for (int k = 0; k < 2 * m; ++k) {
                const bool up = (bits >> k) & 1;
                w += up ? 'U' : 'D';
                height += up ? 1 : -1;
                ok = ok && height >= 0;
            }
            if (!ok || height != 0) continue;
            ++count;
            CHECK(kupisch_to_dyck(dyck_to_kupisch(w)) == w);
        }
        CHECK(count == static_cast<long>(enumerate(m + 1, m + 1, Kind::linear).size()));
    }
}

TEST_CASE("linear tables and reconstruction") {
    const long catalan[] = {1, 1, 2, 5, 14, 42};
    for (int n = 1; n <= 6; ++n) CHECK(static_cast<long>(enumerate_linear_with_stats(n).size()) == catalan[n - 1]);
    CHECK(reconstruct_linear_from_h(parse_cycles("(1432)", 4), 4).entries() == std::vector<int>{1, 2, 3, 4});
    CHECK(reconstruct_linear_from_h(parse_cycles("(14352)", 5), 5).entries() == std::vector<int>{1, 2, 3, 4, 3});
    CHECK_THROWS_AS(reconstruct_linear_from_h(parse_cycles("(12)(34)", 4), 4), NotRealizable);
    for (int n = 1; n <= 7; ++n)
        for (const Algebra& a : enumerate(n, n, Kind::linear))
            CHECK(reconstruct_linear_from_h(permutation(a).map, n).same_labels(a));
}

TEST_CASE("permutation checks on a sweep") {
    for (Kind kind : {Kind::cyclic, Kind::linear})
        for (int n = 1; n <= 5; ++n)
            for (const Algebra& a : enumerate(n, kind == Kind::cyclic ? 6 : n, kind)) {
                INFO(serialize(a));
                CHECK(check_permutation(a).ok());
                const auto profiles = dimension_profiles(a);
                const HomPermutation p = permutation(a);
                for (int v = 1; v <= n; ++v) {
                    CHECK(h_closed_form(a, v) == p(v));
                    CHECK(profiles[static_cast<std::size_t>(p(v) - 1)].e_star == profiles[static_cast<std::size_t>(v - 1)].e);
                }
            }
}
