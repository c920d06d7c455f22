#include "doctest.h"
#include "nakayama/homdim.hpp"
#include "oracle.hpp"

using namespace nakayama;

namespace {

std::string failures(const CheckReport& r) {
    std::string s;
    for (const auto& f : r.failures()) s += f.name + " [" + f.witness + "]\n";
    return s;
}

}  // namespace

TEST_CASE("psi, gamma and phi on fixtures") {
    const Algebra c4 = parse("cyclic:3,2,3,4");
    const int psi_c4[] = {1, 1, 2, 2};
    for (int v = 1; v <= 4; ++v) CHECK(psi(c4, v) == psi_c4[v - 1]);
    CHECK(gamma(c4, 1) == 2);
    CHECK(phi(c4, 1) == 4);

    const Algebra l5a = parse("linear:1,2,3,4,3");
    CHECK(psi(l5a, 1) == 5);
    CHECK_FALSE(psi(l5a, 5));
    CHECK_FALSE(gamma(l5a, 1));
}

TEST_CASE("psi matches tau^- top IS from the list model") {
    for (Kind kind : {Kind::cyclic, Kind::linear})
        for (int n = 1; n <= 5; ++n)
            for (const Algebra& a : enumerate(n, kind == Kind::cyclic ? 6 : n, kind)) {
                const oracle::Model m{a.entries(), a.cyclic()};
                for (int v = 1; v <= n; ++v) {
                    const auto inj = m.injective(v);
                    const int t = inj.front();
                    const bool top_injective = m.is_injective({t});
                    std::optional<int> expect;
                    if (!top_injective) expect = m.wrap(t + 1LL);
                    CHECK(psi(a, v) == expect);
                    const auto proj = m.projective(v);
                    std::optional<int> g;
                    if (!m.is_projective({proj.back()})) g = m.wrap(proj.back() - 1LL);
                    CHECK(gamma(a, v) == g);
                }
            }
}

TEST_CASE("dimension profiles of fixtures") {
    const Algebra c4 = parse("cyclic:3,2,3,4");
    const auto p = dimension_profiles(c4);
    const int e_c4[] = {0, 3, 0, 1};
    for (int v = 1; v <= 4; ++v) CHECK(p[static_cast<std::size_t>(v - 1)].e == e_c4[v - 1]);
    CHECK(p[1].pd_S == 3);
    CHECK(p[1].pd_IS == 3);

    const Algebra g4 = parse("cyclic:2,3,3,4");
    const auto q = dimension_profiles(g4);
    const int f[] = {0, 1, 3, 0};
    const int fs[] = {0, 0, 3, 0};
    for (int v = 1; v <= 4; ++v) {
        CHECK(q[static_cast<std::size_t>(v - 1)].f == f[v - 1]);
        CHECK(q[static_cast<std::size_t>(v - 1)].f_star == fs[v - 1]);
    }

    for (const auto& s : dimension_profiles(parse("cyclic:2,2"))) CHECK(s.e == 0);
}

TEST_CASE("function quivers") {
    const Algebra c4 = parse("cyclic:3,2,3,4");
    const FunctionQuiver q = function_quiver(c4, QuiverKind::psi);
    CHECK(q.components.size() == 1);
    CHECK(q.cyclic_count() == 1);
    CHECK(q.max_acyclic_depth() == 2);
    CHECK(q.depth[3] == 1);
    CHECK(q.depth[1] == 2);
    CHECK(q.depth[0] == kInf);
    CHECK(function_quiver(c4, QuiverKind::gamma).components.size() == 1);

    const FunctionQuiver si = function_quiver(parse("cyclic:2,2"), QuiverKind::psi);
    CHECK(si.cyclic_count() == 2);
    CHECK(si.max_acyclic_depth() == 0);
}

TEST_CASE("finitistic summaries") {
    const AlgebraSummary c4 = finitistic_summary(parse("cyclic:3,2,3,4"));
    CHECK(c4.finpro == 3);
    CHECK(c4.fininj == 3);
    CHECK(c4.del_A == 3);
    CHECK(c4.des_A == 3);
    CHECK(c4.a_A == 2);
    CHECK(finitistic_summary(opposite(parse("cyclic:3,2,3,4"))).finpro == 3);

    const AlgebraSummary g4 = finitistic_summary(parse("cyclic:2,3,3,4"));
    CHECK(g4.finpro == 3);
    CHECK(g4.gldim == 3);

    const AlgebraSummary si = finitistic_summary(parse("cyclic:2,2"));
    CHECK(si.finpro == 0);
    CHECK(si.selfinjective);
    CHECK(si.gorenstein);
}

TEST_CASE("finitistic dimension equals the largest finite pd over all modules") {
    for (Kind kind : {Kind::cyclic, Kind::linear})
        for (int n = 1; n <= 5; ++n)
            for (const Algebra& a : enumerate(n, kind == Kind::cyclic ? 6 : n, kind)) {
                const oracle::Model m{a.entries(), a.cyclic()};
                int best = 0;
                int best_id = 0;
                for (const auto& x : m.modules()) {
                    best = std::max(best, m.pd(x));
                    best_id = std::max(best_id, m.id(x));
                }
                const AlgebraSummary s = finitistic_summary(a);
                CHECK(s.finpro == best);
                CHECK(s.fininj == best_id);
            }
}

TEST_CASE("delooping levels") {
    const Algebra g4 = parse("cyclic:2,3,3,4");
    CHECK(delooping(g4, 3) == 3);
    CHECK(delooping(g4, 2) == 1);
    for (int v : g4.torsionless_simples()) CHECK(delooping(g4, v) == 0);
    CHECK(delooping_level(g4, simple(3), 2) == std::nullopt);
}

TEST_CASE("delooping level agrees with a direct search in the list model") {
    for (Kind kind : {Kind::cyclic, Kind::linear})
        for (int n = 1; n <= 4; ++n)
            for (const Algebra& a : enumerate(n, kind == Kind::cyclic ? 5 : n, kind)) {
                const oracle::Model m{a.entries(), a.cyclic()};
                const auto mods = m.modules();
                for (const auto& p : dimension_profiles(a)) {
                    std::optional<std::vector<int>> x = std::vector<int>{p.vertex};
                    int found = -1;
                    for (int d = 0; d <= 3 * static_cast<int>(mods.size()) && found < 0; ++d) {
                        if (!x || m.is_projective(*x)) {
                            found = d;
                            break;
                        }
                        for (const auto& nmod : mods) {
                            std::optional<std::vector<int>> y = nmod;
                            for (int k = 0; k <= d && y; ++k) y = m.syzygy(*y);
                            if (y && *y == *x) found = d;
                        }
                        if (found < 0) x = m.syzygy(*x);
                    }
                    CHECK(p.del == found);
                }
            }
}

TEST_CASE("covering lifts") {
    CHECK(covering_lift_check(parse("cyclic:3,2,3,4"), -20, 20).ok());
    const Algebra si = parse("cyclic:2,2");
    for (long long i = -5; i <= 5; ++i) CHECK(psi_lift(si, i) == i + 2);
    const Algebra c5 = parse("cyclic:3,2,3,4,4");
    CHECK(gamma_lift(c5, psi_lift(c5, 0)) >= 0);
}

TEST_CASE("theorem battery on fixtures and a small sweep") {
    for (const char* s : {"cyclic:3,2,3,4", "cyclic:3,2,3,4,4", "cyclic:2,3,3,4", "cyclic:2,2", "linear:1,2,3,4,3",
                          "linear:1,2,3,3,3", "linear:1,2,2,2", "linear:1"}) {
        const CheckReport r = check_theorems(parse(s));
        INFO(s, "\n", failures(r));
        CHECK(r.ok());
    }
    for (Kind kind : {Kind::cyclic, Kind::linear})
        for (int n = 1; n <= 4; ++n)
            for (const Algebra& a : enumerate(n, kind == Kind::cyclic ? 6 : n, kind)) {
                const CheckReport r = check_theorems(a);
                INFO(serialize(a), "\n", failures(r));
                CHECK(r.ok());
            }
}
