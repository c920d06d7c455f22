#include "nakayama/epsilon.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "nakayama/homdim.hpp"

namespace nakayama {

namespace {

bool contains(const std::vector<int>& xs, int v) { return std::binary_search(xs.begin(), xs.end(), v); }

template <class T>
bool subset(const std::vector<T>& a, const std::vector<T>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

template <class A, class B, class F>
bool bijective(const std::vector<A>& from, const std::vector<B>& to, F&& f) {
    if (from.size() != to.size()) return false;
    std::set<B> hit;
    for (const A& x : from) {
        std::optional<B> y = f(x);
        if (!y || !std::binary_search(to.begin(), to.end(), *y) || !hit.insert(*y).second) return false;
    }
    return true;
}

Module delta_unchecked(const Algebra& a, int t) {
    const Module p = projective(a, t);
    for (int l = 1; l <= p.len; ++l) {
        const Module q = make(a, a.vertex(static_cast<long long>(t) - l + 1), l);
        if (is_torsionless(a, q)) return q;
    }
    return p;
}

}  // namespace

SimpleClasses classify(const Algebra& a) {
    SimpleClasses s;
    s.torsionless = a.torsionless_simples();
    for (int v = 1; v <= a.n(); ++v) {
        if (injdim(a, simple(v)) >= 2) s.id_ge2.push_back(v);
        if (pd(a, simple(v)) >= 2) s.pd_ge2.push_back(v);
    }
    std::set<int> div;
    for (int v = 1; v <= a.n(); ++v) div.insert(top(a, injective(a, v)));
    s.divisible.assign(div.begin(), div.end());
    for (const Module& m : all_modules(a)) {
        const Predicates p = predicates(a, m);
        if (p.peak) s.peaks.push_back(m);
        if (p.valley) s.valleys.push_back(m);
        if (p.minimal_projective) s.minimal_projectives.push_back(m);
        if (p.minimal_injective) s.minimal_injectives.push_back(m);
    }
    for (auto* v : {&s.peaks, &s.valleys, &s.minimal_projectives, &s.minimal_injectives}) std::sort(v->begin(), v->end());
    s.r = static_cast<int>(s.torsionless.size());
    return s;
}

DeltaModule delta(const Algebra& a, int t) {
    t = a.vertex(t);
    if (injdim(a, simple(t)) < 2)
        throw std::invalid_argument("Delta needs id S_" + std::to_string(t) + " >= 2");
    DeltaModule d{t, delta_unchecked(a, t)};
    if (auto u = psi(a, t)) {
        if (omega_k(a, simple(*u), 2) != MaybeModule(d.module))
            throw Contradiction("Delta T = Omega^2 psi T",
                                serialize(a) + " T=" + std::to_string(t) + " Delta=" + to_string(d.module));
    }
    return d;
}

std::vector<DeltaModule> delta_modules(const Algebra& a) {
    std::vector<DeltaModule> out;
    for (int v : classify(a).id_ge2) out.push_back(DeltaModule{v, delta_unchecked(a, v)});
    return out;
}

EpsilonAlgebra epsilon_algebra(const Algebra& a) {
    EpsilonAlgebra eps;
    eps.t_vertices = classify(a).id_ge2;
    std::map<int, Module> deltas;
    for (int t : eps.t_vertices) deltas[t] = delta_unchecked(a, t);
    const std::string name = serialize(a);

    for (int t : eps.t_vertices) {
        Module m = projective(a, t);
        int count = 0;
        while (true) {
            const int top_m = top(a, m);
            auto it = deltas.find(top_m);
            if (it == deltas.end())
                throw FiltrationError(name + ": P(S_" + std::to_string(t) + ") leaves remainder " + to_string(m) +
                                      " whose top has id < 2");
            if (it->second.len > m.len)
                throw FiltrationError(name + ": remainder " + to_string(m) + " is a proper quotient of Delta");
            ++count;
            if (it->second.len == m.len) break;
            m = Module{m.soc, m.len - it->second.len};
        }
        eps.lengths.push_back(count);
    }

    const int r = static_cast<int>(eps.t_vertices.size());
    eps.vertex_map.assign(static_cast<std::size_t>(r), {0, 0});
    if (r == 0) return eps;
    auto len_at = [&](int k) { return eps.lengths[static_cast<std::size_t>(((k % r) + r) % r)]; };

    std::vector<int> starts;
    for (int k = 0; k < r; ++k)
        if (len_at(k) == 1) starts.push_back(k);

    if (starts.empty()) {
        if (!a.cyclic()) throw FiltrationError(name + ": no Delta-module of a linear algebra is projective");
        int best = 0;
        for (int k = 1; k < r; ++k) {
            for (int j = 0; j < r; ++j) {
                if (len_at(k + j) != len_at(best + j)) {
                    if (len_at(k + j) < len_at(best + j)) best = k;
                    break;
                }
            }
        }
        std::vector<int> entries;
        for (int j = 0; j < r; ++j) entries.push_back(len_at(best + j));
        try {
            eps.components.push_back(Algebra::validate(entries, Kind::cyclic));
        } catch (const AdmissibilityError& e) {
            throw FiltrationError(name + ": cyclic eps series inadmissible: " + e.what());
        }
        for (int k = 0; k < r; ++k) eps.vertex_map[static_cast<std::size_t>(k)] = {0, ((k - best) % r + r) % r + 1};
        return eps;
    }

    if (!a.cyclic() && starts.front() != 0)
        throw FiltrationError(name + ": the first Delta-module of a linear algebra is not projective");
    for (std::size_t s = 0; s < starts.size(); ++s) {
        const int from = starts[s];
        const int to = s + 1 < starts.size() ? starts[s + 1] : (a.cyclic() ? starts.front() + r : r);
        std::vector<int> entries;
        for (int k = from; k < to; ++k) {
            entries.push_back(len_at(k));
            eps.vertex_map[static_cast<std::size_t>(k % r)] = {static_cast<int>(s), k - from + 1};
        }
        try {
            eps.components.push_back(Algebra::validate(entries, Kind::linear));
        } catch (const AdmissibilityError& e) {
            throw FiltrationError(name + ": eps component inadmissible: " + e.what());
        }
    }
    return eps;
}

MaybeModule mho(const Algebra& a, const Module& m) {
    const int t = top(a, m);
    std::optional<Module> w;
    for (int l = m.len; l >= 1; --l) {
        const Module q = make(a, a.vertex(static_cast<long long>(t) - l + 1), l);
        if (is_torsionless(a, q)) {
            w = q;
            break;
        }
    }
    if (!w || is_projective(a, *w)) return std::nullopt;
    int best = 0;
    for (int i = 1; i <= a.n(); ++i)
        if (a.proj_socle(i) == w->soc && a.c(i) >= w->len && (best == 0 || a.c(i) < best)) best = a.c(i);
    return Module{a.vertex(static_cast<long long>(w->soc) + w->len), best - w->len};
}

bool is_reflexive(const Algebra& a, const Module& m) {
    if (is_projective(a, m)) return true;
    if (!is_torsionless(a, m)) return false;
    MaybeModule x = mho(a, m);
    return !x || is_torsionless(a, *x);
}

ReflexiveChain reflexive_chain(const Algebra& a) {
    ReflexiveChain c;
    const auto mods = all_modules(a);
    const SimpleClasses cls = classify(a);
    std::set<Module> omega2;
    std::vector<Module> criterion;
    for (const Module& m : mods) {
        if (auto x = omega_k(a, m, 2)) omega2.insert(*x);
        if (is_reflexive(a, m)) {
            criterion.push_back(m);
            if (!is_projective(a, m)) c.r0.push_back(m);
        }
        if (is_torsionless(a, m) && contains(cls.id_ge2, top(a, m))) c.filtered.push_back(m);
    }
    c.omega2.assign(omega2.begin(), omega2.end());
    std::set<Module> refl(omega2.begin(), omega2.end());
    for (const Module& m : mods)
        if (is_projective(a, m)) refl.insert(m);
    c.reflexive.assign(refl.begin(), refl.end());
    std::sort(c.r0.begin(), c.r0.end());
    std::sort(c.filtered.begin(), c.filtered.end());
    std::sort(criterion.begin(), criterion.end());
    c.holds = subset(c.r0, c.omega2) && subset(c.omega2, c.filtered) && subset(c.filtered, c.reflexive);
    c.matches_criterion = criterion == c.reflexive;
    c.proper[0] = c.r0.size() < c.omega2.size();
    c.proper[1] = c.omega2.size() < c.filtered.size();
    c.proper[2] = c.filtered.size() < c.reflexive.size();
    return c;
}

MhoScan mho_omega_scan(const Algebra& a, int v, int t_max) {
    MhoScan scan;
    std::map<MaybeModule, int> first;
    for (int t = 0; t <= t_max; ++t) {
        MaybeModule x = omega_k(a, simple(a.vertex(v)), t);
        for (int k = 0; k < t && x; ++k) x = mho(a, *x);
        ScanEntry e{t, x, !x || is_torsionless(a, *x)};
        scan.entries.push_back(e);
        auto [it, fresh] = first.emplace(x, t);
        if (!fresh && !scan.period) {
            scan.repeat_from = it->second;
            scan.period = t - it->second;
        }
    }
    return scan;
}

CheckReport check_epsilon(const Algebra& a) {
    CheckReport r;
    const std::string name = serialize(a);
    const int n = a.n();
    const SimpleClasses cls = classify(a);

    {
        ReflexiveChain ch = reflexive_chain(a);
        r.expect("reflexive chain R0 in Omega^2 in F in R", ch.holds, name);
        r.expect("reflexives are projectives and second syzygies", ch.matches_criterion, name);
    }

    // del S <= t once mho^t Omega^t S is torsionless.
    {
        const auto profiles = dimension_profiles(a);
        const int t_max = 2 * static_cast<int>(all_modules(a).size()) + 2;
        for (const auto& p : profiles) {
            MhoScan scan = mho_omega_scan(a, p.vertex, t_max);
            for (const auto& e : scan.entries)
                if (e.torsionless) {
                    r.expect_lazy("mho^t Omega^t S torsionless implies del S <= t", p.del <= e.t,
                                  [&] { return name + " S_" + std::to_string(p.vertex); });
                    break;
                }
        }
    }

    if (!a.cyclic()) return r;

    std::vector<DeltaModule> deltas;
    try {
        for (int t : cls.id_ge2) deltas.push_back(delta(a, t));
        r.expect("Delta T = Omega^2 psi T", true);
    } catch (const Contradiction& e) {
        r.expect("Delta T = Omega^2 psi T", false, e.witness());
        return r;
    }

    // Every simple occurs exactly once among the Delta-modules.
    {
        std::vector<int> mult(static_cast<std::size_t>(n), 0);
        for (const auto& d : deltas)
            for (int v : composition_factors(a, d.module)) ++mult[static_cast<std::size_t>(v - 1)];
        r.expect("Delta-modules have every simple once", std::all_of(mult.begin(), mult.end(), [](int m) { return m == 1; }),
                 name);
        for (const auto& d : deltas) {
            int s_count = 0;
            int t_count = 0;
            for (int v : composition_factors(a, d.module)) {
                s_count += contains(cls.torsionless, v);
                t_count += contains(cls.id_ge2, v);
            }
            const std::string w = name + " T=" + std::to_string(d.t);
            r.expect_lazy("soc Delta T is its only torsionless factor",
                          s_count == 1 && contains(cls.torsionless, d.module.soc), [&] { return w; });
            r.expect_lazy("T is the only factor of Delta T with id >= 2", t_count == 1 && top(a, d.module) == d.t,
                          [&] { return w; });
        }
    }

    for (int v = 1; v <= n; ++v)
        r.expect_lazy("S torsionless iff id tau S >= 2",
                      contains(cls.torsionless, v) == contains(cls.id_ge2, a.vertex(v - 1LL)),
                      [&] { return name + " S_" + std::to_string(v); });

    // Cardinalities.
    {
        const std::size_t rr = cls.torsionless.size();
        const bool same = cls.id_ge2.size() == rr && cls.pd_ge2.size() == rr && cls.peaks.size() == rr &&
                          cls.valleys.size() == rr && cls.minimal_projectives.size() == rr &&
                          cls.minimal_injectives.size() == rr && deltas.size() == rr;
        r.expect("all classes have r elements", same, name);
    }

    // The named bijections.
    {
        using OI = std::optional<int>;
        using OM = std::optional<Module>;
        std::vector<Module> dmods;
        for (const auto& d : deltas) dmods.push_back(d.module);
        std::sort(dmods.begin(), dmods.end());
        const auto& T = cls.id_ge2;
        const auto& U = cls.pd_ge2;
        const auto& S = cls.torsionless;
        auto arrow = [&](const char* label, bool ok) { r.expect(label, ok, name); };
        arrow("bijection psi: T -> U", bijective(T, U, [&](int v) { return psi(a, v); }));
        arrow("bijection gamma: U -> T", bijective(U, T, [&](int v) { return gamma(a, v); }));
        arrow("bijection tau-: T -> S", bijective(T, S, [&](int v) { return OI(a.vertex(v + 1LL)); }));
        arrow("bijection tau: S -> T", bijective(S, T, [&](int v) { return OI(a.vertex(v - 1LL)); }));
        arrow("bijection soc Delta: T -> S", bijective(T, S, [&](int v) { return OI(delta_unchecked(a, v).soc); }));
        arrow("bijection top: Delta -> T", bijective(dmods, T, [&](const Module& m) { return OI(top(a, m)); }));
        arrow("bijection Omega: valleys -> Delta", bijective(cls.valleys, dmods, [&](const Module& m) { return syzygy(a, m); }));
        arrow("bijection Omega: U -> valleys",
              bijective(U, cls.valleys, [&](int v) { return syzygy(a, simple(v)); }));
        arrow("bijection P: U -> minimal projectives",
              bijective(U, cls.minimal_projectives, [&](int v) { return OM(projective(a, v)); }));
        arrow("bijection rad: minimal projectives -> valleys",
              bijective(cls.minimal_projectives, cls.valleys, [&](const Module& m) { return radical(m); }));
        arrow("bijection I: T -> minimal injectives",
              bijective(T, cls.minimal_injectives, [&](int v) { return OM(injective(a, v)); }));
        arrow("bijection I/soc: minimal injectives -> valleys",
              bijective(cls.minimal_injectives, cls.valleys, [&](const Module& m) { return mod_socle(a, m); }));
        arrow("bijection P: minimal injectives -> peaks",
              bijective(cls.minimal_injectives, cls.peaks, [&](const Module& m) { return OM(proj_cover(a, m)); }));
        arrow("bijection I: Delta -> peaks",
              bijective(dmods, cls.peaks, [&](const Module& m) { return OM(inj_env(a, m)); }));
        arrow("bijection I: S -> peaks", bijective(S, cls.peaks, [&](int v) { return OM(injective(a, v)); }));
    }

    // eps(A) and its gamma-quiver.
    try {
        EpsilonAlgebra eps = epsilon_algebra(a);
        r.expect("eps(A) is Delta-filtered with admissible components", true);
        int total = 0;
        for (const auto& c : eps.components) total += c.n();
        r.expect("eps(A) has one vertex per T", total == static_cast<int>(eps.t_vertices.size()), name);
        bool agree = true;
        for (std::size_t k = 0; k < eps.t_vertices.size(); ++k) {
            const auto [comp, w] = eps.vertex_map[k];
            const Algebra& e = eps.components[static_cast<std::size_t>(comp)];
            std::optional<int> ge = gamma(e, w);
            if (!ge) continue;
            const int gt = *gamma(a, eps.t_vertices[k]);
            auto pos = std::lower_bound(eps.t_vertices.begin(), eps.t_vertices.end(), gt) - eps.t_vertices.begin();
            if (pos >= static_cast<long>(eps.t_vertices.size()) || eps.t_vertices[static_cast<std::size_t>(pos)] != gt ||
                eps.vertex_map[static_cast<std::size_t>(pos)] != std::make_pair(comp, *ge))
                agree = false;
        }
        r.expect("gamma-quiver of eps(A) is gamma on T", agree, name);
    } catch (const FiltrationError& e) {
        r.expect("eps(A) is Delta-filtered with admissible components", false, e.what());
    }
    return r;
}

}  // namespace nakayama
