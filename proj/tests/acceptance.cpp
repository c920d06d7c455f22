#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "nakayama/epsilon.hpp"
#include "nakayama/homdim.hpp"
#include "nakayama/homext.hpp"
#include "nakayama/perm.hpp"
#include "suites.hpp"

using namespace nakayama;

namespace {

struct Outcome {
    std::vector<std::string> problems;
    void require(bool ok, const std::string& what) {
        if (!ok) problems.push_back(what);
    }
};

bool run(int id, const char* title, const std::function<void(Outcome&)>& body) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.problems.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = out.problems.empty();
    std::printf("%s %d %s (%.2fs)\n", ok ? "PASS" : "FAIL", id, title, secs);
    for (std::size_t k = 0; k < out.problems.size() && k < 20; ++k) std::printf("    %s\n", out.problems[k].c_str());
    if (out.problems.size() > 20) std::printf("    ... %zu more\n", out.problems.size() - 20);
    std::fflush(stdout);
    return ok;
}

std::string cycles_of(const char* kupisch) { return permutation(parse(kupisch)).cycles(); }

void reference_permutations(Outcome& o) {
    o.require(cycles_of("linear:1,2,3,4,3") == "(14352)", "linear:1,2,3,4,3");
    o.require(permutation(parse("linear:1,2,3,3,3")).map == parse_cycles("(1,3,5)(2,4)", 5), "linear:1,2,3,3,3");
    const char* four[] = {"linear:1,2,3,4", "linear:1,2,3,3", "linear:1,2,3,2", "linear:1,2,2,3", "linear:1,2,2,2"};
    const char* want[] = {"(1432)", "(1324)", "(1342)", "(1243)", "(1234)"};
    for (int k = 0; k < 5; ++k) o.require(cycles_of(four[k]) == want[k], four[k]);
    o.require(cycles_of("cyclic:3,2,3,4") == "(143)(2)", "cyclic:3,2,3,4");
}

void reference_dimensions(Outcome& o) {
    const Algebra c4 = parse("cyclic:3,2,3,4");
    const auto pc = dimension_profiles(c4);
    const int e[] = {0, 3, 0, 1};
    for (int v = 1; v <= 4; ++v) o.require(pc[static_cast<std::size_t>(v - 1)].e == e[v - 1], "e(S_" + std::to_string(v) + ")");

    const Algebra g4 = parse("cyclic:2,3,3,4");
    const auto pg = dimension_profiles(g4);
    const int f[] = {0, 1, 3, 0};
    const int fs[] = {0, 0, 3, 0};
    std::vector<int> mf, mfs;
    for (int v = 1; v <= 4; ++v) {
        const auto& p = pg[static_cast<std::size_t>(v - 1)];
        o.require(p.f == f[v - 1], "f(S_" + std::to_string(v) + ")");
        o.require(p.f_star == fs[v - 1], "f*(S_" + std::to_string(v) + ")");
        mf.push_back(p.f);
        mfs.push_back(p.f_star);
    }
    std::sort(mf.begin(), mf.end());
    std::sort(mfs.begin(), mfs.end());
    o.require(mf != mfs, "f and f* multisets differ");
    o.require(grade(g4, 3) == 2, "grade S_3 = 2");
    o.require(delooping(g4, 3) == 3, "del S_3 = 3");
    o.require(pd(g4, simple(3)) == 3, "pd S_3 = 3");
    o.require(depth(g4) == 2, "depth = 2");
    o.require(finitistic_summary(g4).del_A == 3, "del A = 3");

    const Algebra l5b = parse("linear:1,2,3,3,3");
    o.require(ext_dim(l5b, simple(4), simple(2), 2) == 0, "Ext^2(S_4, S_2) = 0");
}

void depth_two_family(Outcome& o) {
    for (int m = 2; m <= 6; ++m) {
        std::vector<int> c{2};
        for (int k = 3; k <= m + 1; ++k) {
            c.push_back(k);
            c.push_back(k);
        }
        c.push_back(m + 2);
        const Algebra a = Algebra::validate(c, Kind::cyclic);
        const std::string name = serialize(a);
        o.require(a.n() == 2 * m, name + ": n = 2m");
        for (int i = 1; 2 * i <= a.n(); ++i) o.require(pd(a, simple(2 * i)) == 1, name + ": pd S_" + std::to_string(2 * i));
        o.require(depth(a) == 2, name + ": depth");
        for (int t = 2; (1 << t) - 3 <= a.n(); ++t)
            o.require(pd(a, simple((1 << t) - 3)) == 2 * t - 2, name + ": pd S_" + std::to_string((1 << t) - 3));
        o.require(finite(finitistic_summary(a).gldim), name + ": gldim finite");
    }
}

void mho_scan(Outcome& o) {
    const Algebra c5 = parse("cyclic:3,2,3,4,4");
    o.require(mho(c5, *syzygy(c5, simple(5))) == MaybeModule(simple(5)), "mho Omega S_5 = S_5");
    const MhoScan s = mho_omega_scan(c5, 5, 12);
    o.require(s.entries.size() == 13, "scan covers t = 0..12");
    for (std::size_t t = 2; t < s.entries.size(); ++t)
        o.require(s.entries[t].module == MaybeModule(Module{3, 3}), "t = " + std::to_string(t) + " gives 3:3");
    for (const ScanEntry& en : s.entries) o.require(!en.torsionless, "t = " + std::to_string(en.t) + " not torsionless");
}

void sweep(Outcome& o) {
    const int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    tools::VerifyOptions cyc;
    cyc.simples_max = 5;
    cyc.len_max = 7;
    cyc.linear = false;
    cyc.suites = {"theorems", "homext", "perm", "epsilon"};
    cyc.jobs = jobs;
    tools::VerifyOptions lin = cyc;
    lin.simples_max = 7;
    lin.cyclic = false;
    lin.linear = true;
    long algebras = 0;
    long checks = 0;
    for (const auto& opt : {cyc, lin})
        for (const auto& r : tools::run_verify(opt)) {
            algebras += r.algebras;
            checks += r.checks;
            for (const auto& c : r.counterexamples)
                o.require(false, r.suite + " " + c.algebra + ": " + c.check + " [" + c.witness + "]");
        }
    std::printf("    %ld algebra runs, %ld checks\n", algebras, checks);
}

void oracle(Outcome& o) {
    for (const char* s : {"cyclic:3,2,3,4", "cyclic:3,2,3,4,4", "linear:1,2,3,4,3", "cyclic:2,2"})
        for (const auto& f : oracle_equivalence(parse(s)).failures())
            o.require(false, std::string(s) + ": " + f.name + " [" + f.witness + "]");
}

void witnesses(Outcome& o) {
    for (const tools::Witness& w : tools::witness_search("", 6, 8)) {
        o.require(w.found, "no witness for " + w.pattern);
        if (w.found) std::printf("    %s: %s %s\n", w.pattern.c_str(), w.algebra.c_str(), w.detail.c_str());
    }
}

void catalan(Outcome& o) {
    const std::size_t counts[] = {1, 1, 2, 5, 14, 42};
    for (int n = 1; n <= 6; ++n) {
        const auto rows = enumerate_linear_with_stats(n);
        o.require(rows.size() == counts[n - 1], "count for n = " + std::to_string(n));
        for (const auto& row : rows) {
            o.require(kupisch_to_dyck(dyck_to_kupisch(row.dyck)) == row.dyck, "dyck round trip " + row.dyck);
            o.require(dyck_to_kupisch(kupisch_to_dyck(row.algebra)).same_labels(row.algebra),
                      "kupisch round trip " + serialize(row.algebra));
        }
    }
    for (int n = 1; n <= 7; ++n)
        for (const Algebra& a : enumerate(n, n, Kind::linear))
            o.require(reconstruct_linear_from_h(permutation(a).map, n).same_labels(a), "reconstruct " + serialize(a));
}

}  // namespace

int main() {
    bool ok = true;
    ok &= run(1, "reference homological permutations", reference_permutations);
    ok &= run(2, "reference dimension data", reference_dimensions);
    ok &= run(3, "depth-two family m = 2..6", depth_two_family);
    ok &= run(4, "mho-Omega scan of S_5 on the five-vertex cycle", mho_scan);
    ok &= run(5, "theorem sweep: cyclic n <= 5, c <= 7 and linear n <= 7", sweep);
    ok &= run(6, "hom and Ext^1 against the linear-algebra oracle", oracle);
    ok &= run(7, "witness searches within n <= 6, c <= 8", witnesses);
    ok &= run(8, "Catalan counts, Dyck round trips and reconstruction from h", catalan);
    return ok ? 0 : 1;
}
