#include "suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <thread>

#include "nakayama/epsilon.hpp"
#include "nakayama/homdim.hpp"
#include "nakayama/homext.hpp"
#include "nakayama/perm.hpp"

namespace nakayama::tools {

namespace {

const std::vector<std::string> kPerAlgebra{"theorems", "homext", "perm", "epsilon", "oracle"};

bool odd(Dim d) { return finite(d) && d % 2 == 1; }
bool even_pos(Dim d) { return finite(d) && d >= 2 && d % 2 == 0; }

long catalan(int m) {
    long c = 1;
    for (int k = 0; k < m; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
    return c;
}

// Visits cyclic series, then linear series, by increasing n, stopping when fn returns true.
void search_space(int simples_max, int len_max, const std::function<bool(const Algebra&)>& fn) {
    bool done = false;
    for (Kind kind : {Kind::cyclic, Kind::linear})
        for (int n = 1; n <= simples_max && !done; ++n)
            for (const Algebra& a : enumerate(n, kind == Kind::linear ? std::min(n, len_max) : len_max, kind))
                if (!done && fn(a)) done = true;
}

std::vector<int> rotation_key(const std::vector<std::optional<int>>& map) {
    const int n = static_cast<int>(map.size());
    std::vector<int> best;
    for (int k = 0; k < n; ++k) {
        std::vector<int> cur;
        for (int v = 0; v < n; ++v) {
            const auto& img = map[static_cast<std::size_t>((v + k) % n)];
            cur.push_back(img ? ((*img - 1 - k) % n + n) % n + 1 : 0);
        }
        if (best.empty() || cur < best) best = cur;
    }
    return best;
}

std::vector<std::optional<int>> psi_successors(const Algebra& a) { return function_quiver(a, QuiverKind::psi).successor; }

std::vector<Witness> search_pd_pairs(int simples_max, int len_max) {
    struct Pattern {
        const char* id;
        std::function<bool(Dim, Dim)> holds;
    };
    const std::vector<Pattern> patterns{
        {"pd-pairs: pd S < pd IS, both odd", [](Dim p, Dim q) { return odd(p) && odd(q) && p < q; }},
        {"pd-pairs: pd S = pd IS, both odd", [](Dim p, Dim q) { return odd(p) && p == q; }},
        {"pd-pairs: pd S odd, pd IS infinite", [](Dim p, Dim q) { return odd(p) && !finite(q); }},
        {"pd-pairs: pd S odd < pd IS even", [](Dim p, Dim q) { return odd(p) && even_pos(q) && p < q; }},
        {"pd-pairs: pd S odd > pd IS even", [](Dim p, Dim q) { return odd(p) && even_pos(q) && p > q; }},
        {"pd-pairs: pd S infinite, pd IS even", [](Dim p, Dim q) { return !finite(p) && even_pos(q); }},
        {"pd-pairs: pd S > pd IS, both even", [](Dim p, Dim q) { return even_pos(p) && even_pos(q) && p > q; }},
        {"pd-pairs: pd S = pd IS, both even", [](Dim p, Dim q) { return even_pos(p) && p == q; }},
    };
    std::vector<Witness> out;
    for (const auto& p : patterns) out.push_back(Witness{p.id, false, {}, {}});
    search_space(simples_max, len_max, [&](const Algebra& a) {
        for (const auto& prof : dimension_profiles(a))
            for (std::size_t k = 0; k < patterns.size(); ++k)
                if (!out[k].found && patterns[k].holds(prof.pd_S, prof.pd_IS)) {
                    out[k].found = true;
                    out[k].algebra = serialize(a);
                    out[k].detail = "S_" + std::to_string(prof.vertex) + " pd S=" + dim_to_string(prof.pd_S) +
                                    " pd IS=" + dim_to_string(prof.pd_IS);
                }
        return std::all_of(out.begin(), out.end(), [](const Witness& w) { return w.found; });
    });
    return out;
}

Witness search_component_sizes(int simples_max, int len_max) {
    Witness w{"component-sizes: psi/gamma component sizes differ", false, {}, {}};
    search_space(simples_max, len_max, [&](const Algebra& a) {
        auto ps = function_quiver(a, QuiverKind::psi).component_sizes();
        auto gs = function_quiver(a, QuiverKind::gamma).component_sizes();
        if (ps == gs) return false;
        auto text = [](const std::vector<int>& xs) {
            std::string s;
            for (int x : xs) s += (s.empty() ? "" : ",") + std::to_string(x);
            return s;
        };
        w.found = true;
        w.algebra = serialize(a);
        w.detail = "psi sizes {" + text(ps) + "} gamma sizes {" + text(gs) + "}";
        return true;
    });
    return w;
}

Witness search_same_psi_quiver(int simples_max, int len_max) {
    Witness w{"same-psi-quiver: same psi-quiver, fin-pro 2 and 1", false, {}, {}};
    std::map<std::vector<int>, std::map<Dim, std::string>> seen;
    for (int n = 1; n <= simples_max && !w.found; ++n)
        for (const Algebra& a : enumerate(n, len_max, Kind::cyclic)) {
            const Dim fp = finitistic_summary(a, false).finpro;
            if (fp != 1 && fp != 2) continue;
            auto& slot = seen[rotation_key(psi_successors(a))];
            slot.emplace(fp, serialize(a));
            if (slot.count(1) && slot.count(2)) {
                w.found = true;
                w.algebra = slot[2];
                w.detail = "fin-pro 2: " + slot[2] + ", fin-pro 1: " + slot[1];
                break;
            }
        }
    return w;
}

std::vector<Witness> search_reflexive_chain(int simples_max, int len_max) {
    std::vector<Witness> out{{"reflexive-chain: R0 proper in Omega^2", false, {}, {}},
                             {"reflexive-chain: Omega^2 proper in F", false, {}, {}},
                             {"reflexive-chain: F proper in R", false, {}, {}}};
    for (int n = 1; n <= simples_max; ++n)
        for (const Algebra& a : enumerate(n, len_max, Kind::cyclic)) {
            const ReflexiveChain c = reflexive_chain(a);
            for (int k = 0; k < 3; ++k)
                if (!out[static_cast<std::size_t>(k)].found && c.proper[k]) {
                    auto& w = out[static_cast<std::size_t>(k)];
                    w.found = true;
                    w.algebra = serialize(a);
                    w.detail = "sizes " + std::to_string(c.r0.size()) + "," + std::to_string(c.omega2.size()) + "," +
                               std::to_string(c.filtered.size()) + "," + std::to_string(c.reflexive.size());
                }
            if (std::all_of(out.begin(), out.end(), [](const Witness& w) { return w.found; })) return out;
        }
    return out;
}

std::vector<Witness> search_fixed_points(int simples_max, int len_max) {
    Witness fixed{"fixed-points: cyclic h with a fixed point", false, {}, {}};
    Witness equal{"fixed-points: distinct cyclic algebras with equal h", false, {}, {}};
    std::map<std::vector<int>, std::string> seen;
    for (int n = 2; n <= simples_max && !(fixed.found && equal.found); ++n)
        for (const Algebra& a : enumerate(n, len_max, Kind::cyclic)) {
            const HomPermutation p = permutation(a);
            if (!fixed.found && p.fixed_points() > 0) {
                fixed.found = true;
                fixed.algebra = serialize(a);
                fixed.detail = "h = " + p.cycles();
            }
            std::vector<std::optional<int>> m(p.map.begin(), p.map.end());
            auto [it, fresh] = seen.emplace(rotation_key(m), serialize(a));
            if (!fresh && !equal.found) {
                equal.found = true;
                equal.algebra = serialize(a);
                equal.detail = it->second + " and " + serialize(a) + " share h = " + p.cycles();
            }
            if (fixed.found && equal.found) break;
        }
    return {fixed, equal};
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"all",          "theorems",       "homext",
                                                "perm",         "epsilon",        "oracle",
                                                "linear-table", "witness-search", "psi-gamma-components"};
    return names;
}

bool is_suite(const std::string& name) {
    const auto& ns = suite_names();
    return std::find(ns.begin(), ns.end(), name) != ns.end();
}

CheckReport run_suite_on(const std::string& suite, const Algebra& a) {
    if (suite == "theorems") {
        CheckReport r = check_theorems(a);
        try {
            finitistic_summary(a, true);
        } catch (const Contradiction& e) {
            r.expect(e.check(), false, e.witness());
        }
        return r;
    }
    if (suite == "homext") return check_homext(a);
    if (suite == "perm") return check_permutation(a);
    if (suite == "epsilon") return check_epsilon(a);
    if (suite == "oracle") return oracle_equivalence(a);
    throw std::invalid_argument("no per-algebra suite \"" + suite + "\"");
}

std::vector<Algebra> sweep_space(const VerifyOptions& opt) {
    std::vector<Algebra> out;
    if (opt.cyclic)
        for (int n = 1; n <= opt.simples_max; ++n)
            for_each_series(n, opt.len_max, Kind::cyclic, [&](const Algebra& a) { out.push_back(a); });
    if (opt.linear)
        for (int n = 1; n <= opt.simples_max; ++n)
            for_each_series(n, std::min(n, opt.len_max), Kind::linear, [&](const Algebra& a) { out.push_back(a); });
    if (opt.seed && opt.samples > 0 && opt.cyclic) {
        std::mt19937_64 rng(*opt.seed);
        std::set<std::vector<int>> have;
        int drawn = 0;
        for (int attempt = 0; drawn < opt.samples && attempt < 100 * opt.samples; ++attempt) {
            const int n = opt.simples_max + 1 + static_cast<int>(rng() % 2);
            std::vector<int> c;
            c.push_back(2 + static_cast<int>(rng() % static_cast<unsigned>(std::max(1, opt.len_max - 1))));
            for (int i = 1; i < n; ++i) {
                const int hi = std::min(opt.len_max, c.back() + 1);
                c.push_back(2 + static_cast<int>(rng() % static_cast<unsigned>(hi - 1)));
            }
            if (c.front() > c.back() + 1) continue;
            c = smallest_rotation(c);
            if (!have.insert(c).second) continue;
            out.push_back(Algebra::validate(c, Kind::cyclic));
            ++drawn;
        }
    }
    return out;
}

std::vector<SuiteResult> run_verify(const VerifyOptions& opt) {
    std::vector<std::string> suites;
    for (const auto& s : opt.suites) {
        if (s == "all") {
            for (const auto& x : kPerAlgebra) suites.push_back(x);
            suites.push_back("linear-table");
        } else {
            suites.push_back(s);
        }
    }

    std::vector<SuiteResult> results;
    std::vector<Algebra> space;
    bool have_space = false;
    for (const auto& suite : suites) {
        SuiteResult res;
        res.suite = suite;
        if (std::find(kPerAlgebra.begin(), kPerAlgebra.end(), suite) != kPerAlgebra.end()) {
            if (!have_space) {
                space = sweep_space(opt);
                have_space = true;
            }
            std::vector<CheckReport> reports(space.size());
            const int jobs = std::max(1, opt.jobs);
            std::vector<std::thread> workers;
            for (int w = 0; w < jobs; ++w)
                workers.emplace_back([&, w] {
                    for (std::size_t i = static_cast<std::size_t>(w); i < space.size(); i += static_cast<std::size_t>(jobs))
                        reports[i] = run_suite_on(suite, space[i]);
                });
            for (auto& t : workers) t.join();
            for (std::size_t i = 0; i < space.size(); ++i) {
                ++res.algebras;
                for (const auto& c : reports[i].results()) {
                    res.checks += c.instances;
                    if (!c.passed) {
                        ++res.failures;
                        res.counterexamples.push_back({suite, serialize(space[i]), c.name, c.witness});
                    }
                }
            }
        } else if (suite == "linear-table") {
            if (opt.linear) {
                for (int n = 1; n <= opt.simples_max; ++n) {
                    auto fail = [&](const std::string& algebra, const std::string& check, const std::string& w) {
                        ++res.failures;
                        res.counterexamples.push_back({suite, algebra, check, w});
                    };
                    std::vector<LinearRow> rows;
                    try {
                        rows = enumerate_linear_with_stats(n);
                    } catch (const Contradiction& e) {
                        fail("linear n=" + std::to_string(n), e.check(), e.witness());
                        continue;
                    }
                    ++res.checks;
                    if (static_cast<long>(rows.size()) != catalan(n - 1))
                        fail("linear n=" + std::to_string(n), "count is Catalan(n-1)", std::to_string(rows.size()));
                    for (const auto& row : rows) {
                        ++res.algebras;
                        res.checks += 3;
                        const std::string name = serialize(row.algebra);
                        try {
                            if (!dyck_to_kupisch(row.dyck).same_labels(row.algebra))
                                fail(name, "dyck round trip", row.dyck);
                            if (kupisch_to_dyck(dyck_to_kupisch(row.dyck)) != row.dyck)
                                fail(name, "dyck round trip", row.dyck);
                        } catch (const MalformedPath& e) {
                            fail(name, "dyck round trip", e.what());
                        }
                        try {
                            if (!reconstruct_linear_from_h(row.h.map, n).same_labels(row.algebra))
                                fail(name, "reconstruction from h", row.h.cycles());
                        } catch (const NotRealizable& e) {
                            fail(name, "reconstruction from h", e.what());
                        }
                    }
                }
            }
        } else if (suite == "witness-search" || suite == "psi-gamma-components") {
            const std::string pattern = suite == "psi-gamma-components" ? "component-sizes" : opt.pattern;
            res.witnesses = witness_search(pattern, opt.simples_max, opt.len_max);
            for (const auto& w : res.witnesses) {
                ++res.checks;
                if (!w.found) {
                    ++res.failures;
                    res.counterexamples.push_back({suite, "-", "witness " + w.pattern, "not found in range"});
                }
            }
        } else {
            throw std::invalid_argument("unknown suite \"" + suite + "\"");
        }
        results.push_back(std::move(res));
    }
    return results;
}

std::vector<Witness> witness_search(const std::string& pattern, int simples_max, int len_max) {
    std::vector<Witness> out;
    bool known = false;
    auto want = [&](const std::string& id) {
        const bool w = pattern.empty() || pattern == id;
        known = known || w;
        return w;
    };
    if (want("pd-pairs"))
        for (auto& w : search_pd_pairs(simples_max, len_max)) out.push_back(w);
    if (want("component-sizes")) out.push_back(search_component_sizes(simples_max, len_max));
    if (want("same-psi-quiver")) out.push_back(search_same_psi_quiver(simples_max, len_max));
    if (want("reflexive-chain"))
        for (auto& w : search_reflexive_chain(simples_max, len_max)) out.push_back(w);
    if (want("fixed-points"))
        for (auto& w : search_fixed_points(simples_max, len_max)) out.push_back(w);
    if (!known) throw std::invalid_argument("unknown witness pattern \"" + pattern + "\"");
    return out;
}

std::string case_file(const Counterexample& c) {
    std::string s;
    s += "suite: " + c.suite + "\n";
    s += "algebra: " + c.algebra + "\n";
    s += "check: " + c.check + "\n";
    s += "witness: " + c.witness + "\n";
    s += "rerun: nakayama analyze --kupisch " + c.algebra + "\n";
    return s;
}

}  // namespace nakayama::tools
