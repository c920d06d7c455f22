#include "doctest.h"
#include "nakayama/homdim.hpp"
#include "nakayama/homext.hpp"

using namespace nakayama;

TEST_CASE("hom dimensions on fixtures") {
    const Algebra si = parse("cyclic:2,2");
    CHECK(hom_dim(si, projective(si, 1), projective(si, 1)) == 1);
    const Algebra c4 = parse("cyclic:3,2,3,4");
    CHECK(hom_dim(c4, simple(1), projective(c4, 2)) == 1);
    CHECK(hom_dim(c4, simple(3), projective(c4, 2)) == 0);
    for (const Algebra& a : {si, c4})
        for (int v = 1; v <= a.n(); ++v) {
            CHECK(hom_dim(a, simple(v), simple(v)) == 1);
            CHECK(oracle_hom_dim(a, simple(v), simple(v)) == 1);
        }
}

TEST_CASE("long modules wrap several times") {
    const Algebra a = parse("cyclic:5,5");
    const Module p = projective(a, 1);
    CHECK(hom_image_lengths(a, p, p) == std::vector<int>{1, 3, 5});
    CHECK(oracle_hom_dim(a, p, p) == 3);
}

TEST_CASE("ext dimensions") {
    const Algebra l5b = parse("linear:1,2,3,3,3");
    CHECK(ext_dim(l5b, simple(4), simple(2), 2) == 0);
    const Algebra c4 = parse("cyclic:3,2,3,4");
    const Module t = simple(2);
    const int z = 3;
    CHECK(ext_dim(c4, t, simple(top(c4, *omega_k(c4, t, z))), z) >= 1);
    for (const Module& v : all_modules(c4))
        for (int d = 1; d <= 3; ++d) CHECK(ext_dim(c4, projective(c4, 2), v, d) == 0);
}

TEST_CASE("oracle equivalence on the fixtures") {
    for (const char* s : {"cyclic:3,2,3,4", "cyclic:3,2,3,4,4", "linear:1,2,3,4,3", "cyclic:2,2"}) {
        const CheckReport r = oracle_equivalence(parse(s));
        INFO(s);
        CHECK(r.ok());
    }
    CHECK_THROWS_AS(oracle_hom_dim(parse("cyclic:70"), simple(1), Module{1, 70}), OracleCapExceeded);
}

TEST_CASE("grade and depth") {
    const Algebra g4 = parse("cyclic:2,3,3,4");
    CHECK(grade(g4, 3) == 2);
    CHECK(delooping(g4, 3) == 3);
    CHECK(depth(g4) == 2);
    for (int v : g4.torsionless_simples()) CHECK(grade(g4, v) == 0);

    const GradeWitness w3 = grade_witness(g4, 3);
    CHECK(w3.n == tau(g4, *syzygy(g4, simple(3))));
    CHECK(w3.id_n == 2);
    CHECK(w3.ext >= 1);
    const GradeWitness w2 = grade_witness(g4, 2);
    CHECK(w2.n == tau(g4, simple(2)));
    CHECK(w2.id_n == 1);
    CHECK_THROWS_AS(grade_witness(g4, g4.torsionless_simples().front()), WitnessFailure);

    CHECK(depth(parse("cyclic:2,3,3,4,4,5,5,6")) == 2);
}

TEST_CASE("grade laws on a sweep") {
    for (Kind kind : {Kind::cyclic, Kind::linear})
        for (int n = 1; n <= 4; ++n)
            for (const Algebra& a : enumerate(n, kind == Kind::cyclic ? 6 : n, kind)) {
                const CheckReport r = check_homext(a);
                INFO(serialize(a));
                CHECK(r.ok());
            }
}

TEST_CASE("oracle equivalence on small algebras") {
    for (Kind kind : {Kind::cyclic, Kind::linear})
        for (int n = 1; n <= 3; ++n)
            for (const Algebra& a : enumerate(n, kind == Kind::cyclic ? 5 : n, kind)) {
                INFO(serialize(a));
                CHECK(oracle_equivalence(a).ok());
            }
}
