#include "nakayama/homdim.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace nakayama {

namespace {

bool is_odd(Dim d) { return finite(d) && d >= 0 && d % 2 == 1; }
bool is_even(Dim d) { return finite(d) && d >= 0 && d % 2 == 0; }

std::string vname(int v) { return "S_" + std::to_string(v); }

// Layer k holds every nonzero Omega^k N (or Sigma^k N) with N indecomposable.
class OrbitLayers {
public:
    OrbitLayers(const Algebra& a, bool forward) : a_(a), forward_(forward) {
        auto mods = all_modules(a);
        layers_.emplace_back(mods.begin(), mods.end());
    }

    const std::set<Module>& layer(int k) {
        while (static_cast<int>(layers_.size()) <= k) {
            std::set<Module> next;
            for (const Module& m : layers_.back()) {
                MaybeModule x = forward_ ? syzygy(a_, m) : cosyzygy(a_, m);
                if (x) next.insert(*x);
            }
            layers_.push_back(std::move(next));
        }
        return layers_[static_cast<std::size_t>(k)];
    }

private:
    const Algebra& a_;
    bool forward_;
    std::vector<std::set<Module>> layers_;
};

std::optional<int> level_search(const Algebra& a, const Module& m, int cap, bool forward, OrbitLayers& layers) {
    MaybeModule x = m;
    for (int d = 0; d <= cap; ++d) {
        if (!x) return d;
        if (forward ? is_projective(a, *x) : is_injective(a, *x)) return d;
        if (layers.layer(d + 1).count(*x)) return d;
        x = forward ? syzygy(a, *x) : cosyzygy(a, *x);
    }
    return std::nullopt;
}

int horizon(const Algebra& a) { return 2 * static_cast<int>(all_modules(a).size()) + 2; }

using Map = std::vector<std::optional<int>>;

Map identity_map(int n) {
    Map m(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v) m[static_cast<std::size_t>(v - 1)] = v;
    return m;
}

// (f after g)
Map compose(const Map& f, const Map& g) {
    Map out(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g[i]) out[i] = f[static_cast<std::size_t>(*g[i] - 1)];
    return out;
}

Map power(const Map& f, int t) {
    Map out = identity_map(static_cast<int>(f.size()));
    for (int i = 0; i < t; ++i) out = compose(f, out);
    return out;
}

std::set<int> image(const Map& f) {
    std::set<int> out;
    for (const auto& x : f)
        if (x) out.insert(*x);
    return out;
}

Map psi_map(const Algebra& a) {
    Map m(static_cast<std::size_t>(a.n()));
    for (int v = 1; v <= a.n(); ++v) m[static_cast<std::size_t>(v - 1)] = psi(a, v);
    return m;
}

Map gamma_map(const Algebra& a) {
    Map m(static_cast<std::size_t>(a.n()));
    for (int v = 1; v <= a.n(); ++v) m[static_cast<std::size_t>(v - 1)] = gamma(a, v);
    return m;
}

Map shift_map(const Algebra& a, int delta) {
    Map m(static_cast<std::size_t>(a.n()));
    for (int v = 1; v <= a.n(); ++v) {
        long long w = static_cast<long long>(v) + delta;
        if (a.in_range(w)) m[static_cast<std::size_t>(v - 1)] = a.vertex(w);
    }
    return m;
}

std::string map_text(const Map& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) s += ",";
        s += m[i] ? std::to_string(*m[i]) : std::string("-");
    }
    return s + "]";
}

}  // namespace

std::optional<int> psi(const Algebra& a, int v) {
    const int t = phi(a, v);
    if (a.inj_len(t) == 1) return std::nullopt;
    return a.vertex(static_cast<long long>(v) + a.inj_len(v));
}

std::optional<int> gamma(const Algebra& a, int v) {
    const int s = a.proj_socle(v);
    if (a.c(s) == 1) return std::nullopt;
    return a.vertex(static_cast<long long>(s) - 1);
}

int phi(const Algebra& a, int v) { return top(a, injective(a, v)); }

int FunctionQuiver::cyclic_count() const {
    return static_cast<int>(std::count(on_cycle.begin(), on_cycle.end(), true));
}

int FunctionQuiver::max_acyclic_depth() const {
    int best = 0;
    for (Dim d : depth)
        if (finite(d)) best = std::max(best, d);
    return best;
}

std::vector<int> FunctionQuiver::component_sizes() const {
    std::vector<int> out;
    for (const auto& c : components) out.push_back(static_cast<int>(c.size()));
    std::sort(out.begin(), out.end());
    return out;
}

FunctionQuiver function_quiver(const Algebra& a, QuiverKind kind) {
    const int n = a.n();
    FunctionQuiver q;
    q.kind = kind;
    q.successor = kind == QuiverKind::psi ? psi_map(a) : gamma_map(a);
    q.on_cycle.assign(static_cast<std::size_t>(n), false);
    for (int v = 1; v <= n; ++v) {
        std::optional<int> x = q.next(v);
        for (int k = 1; k <= n && x; ++k) {
            if (*x == v) {
                q.on_cycle[static_cast<std::size_t>(v - 1)] = true;
                break;
            }
            x = q.next(*x);
        }
    }

    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
        return x;
    };
    for (int v = 1; v <= n; ++v)
        if (auto w = q.next(v)) parent[static_cast<std::size_t>(find(v - 1))] = find(*w - 1);
    std::map<int, std::vector<int>> groups;
    for (int v = 1; v <= n; ++v) groups[find(v - 1)].push_back(v);
    for (auto& [root, members] : groups) q.components.push_back(members);
    std::sort(q.components.begin(), q.components.end());

    // Depth by relaxation: vertices off the cycles form a forest feeding into them.
    q.depth.assign(static_cast<std::size_t>(n), 1);
    for (int v = 1; v <= n; ++v)
        if (q.on_cycle[static_cast<std::size_t>(v - 1)]) q.depth[static_cast<std::size_t>(v - 1)] = kInf;
    for (int round = 0; round < n; ++round) {
        bool changed = false;
        for (int u = 1; u <= n; ++u) {
            if (q.on_cycle[static_cast<std::size_t>(u - 1)]) continue;
            auto w = q.next(u);
            if (!w || q.on_cycle[static_cast<std::size_t>(*w - 1)]) continue;
            Dim cand = q.depth[static_cast<std::size_t>(u - 1)] + 1;
            if (cand > q.depth[static_cast<std::size_t>(*w - 1)]) {
                q.depth[static_cast<std::size_t>(*w - 1)] = cand;
                changed = true;
            }
        }
        if (!changed) break;
    }
    return q;
}

std::optional<int> delooping_level(const Algebra& a, const Module& m, int cap) {
    OrbitLayers layers(a, true);
    return level_search(a, m, cap, true, layers);
}

std::optional<int> desuspending_level(const Algebra& a, const Module& m, int cap) {
    OrbitLayers layers(a, false);
    return level_search(a, m, cap, false, layers);
}

std::vector<SimpleProfile> dimension_profiles(const Algebra& a) {
    const int n = a.n();
    FunctionQuiver qpsi = function_quiver(a, QuiverKind::psi);
    FunctionQuiver qgamma = function_quiver(a, QuiverKind::gamma);
    OrbitLayers omega_layers(a, true);
    OrbitLayers sigma_layers(a, false);
    const int far = horizon(a);

    std::vector<SimpleProfile> out;
    bool infinite_gldim = false;
    for (int v = 1; v <= n; ++v) {
        SimpleProfile p;
        p.vertex = v;
        p.pd_S = pd(a, simple(v));
        p.id_S = injdim(a, simple(v));
        p.pd_IS = pd(a, injective(a, v));
        p.id_PS = injdim(a, projective(a, v));
        p.e = std::min(p.pd_S, p.pd_IS);
        p.e_star = std::min(p.id_S, p.id_PS);

        if (is_odd(p.pd_S) && is_even(p.pd_IS))
            p.f = 0;
        else if (!is_even(p.pd_IS))
            p.f = p.pd_S;
        else
            p.f = p.pd_IS;
        if (is_odd(p.id_S) && is_even(p.id_PS))
            p.f_star = 0;
        else if (!is_even(p.id_PS))
            p.f_star = p.id_S;
        else
            p.f_star = p.id_PS;

        p.a = qpsi.depth[static_cast<std::size_t>(v - 1)];
        p.a_prime = qgamma.depth[static_cast<std::size_t>(v - 1)];
        p.psi_cyclic = qpsi.on_cycle[static_cast<std::size_t>(v - 1)];
        p.gamma_cyclic = qgamma.on_cycle[static_cast<std::size_t>(v - 1)];

        auto del = level_search(a, simple(v), far, true, omega_layers);
        auto des = level_search(a, simple(v), far, false, sigma_layers);
        p.del = del ? *del : kInf;
        p.des = des ? *des : kInf;
        if (!finite(p.pd_S)) infinite_gldim = true;
        out.push_back(p);
    }
    for (auto& p : out) {
        p.g_defined = infinite_gldim;
        if (!infinite_gldim)
            p.g = 0;
        else if (finite(p.pd_S) && finite(p.pd_IS))
            p.g = 0;
        else if (!finite(p.pd_IS))
            p.g = p.pd_S;
        else
            p.g = p.pd_IS;
    }
    return out;
}

SimpleProfile dimension_profile(const Algebra& a, int v) {
    return dimension_profiles(a)[static_cast<std::size_t>(a.vertex(v) - 1)];
}

int delooping(const Algebra& a, int v) {
    SimpleProfile p = dimension_profile(a, v);
    if (!finite(p.e)) throw Contradiction("e(S) finite", vname(v));
    auto d = delooping_level(a, simple(a.vertex(v)), p.e);
    if (!d) throw Contradiction("del S <= e(S)", vname(v) + " has e = " + dim_to_string(p.e));
    return *d;
}

int desuspending(const Algebra& a, int v) {
    SimpleProfile p = dimension_profile(a, v);
    if (!finite(p.e_star)) throw Contradiction("e*(S) finite", vname(v));
    auto d = desuspending_level(a, simple(a.vertex(v)), p.e_star);
    if (!d) throw Contradiction("des S <= e*(S)", vname(v) + " has e* = " + dim_to_string(p.e_star));
    return *d;
}

AlgebraSummary finitistic_summary(const Algebra& a, bool assert_equalities) {
    auto profiles = dimension_profiles(a);
    AlgebraSummary s;
    s.a_extended = !a.cyclic();
    for (const auto& p : profiles) {
        s.finpro = std::max(s.finpro, p.e);
        s.fininj = std::max(s.fininj, p.e_star);
        s.del_A = std::max(s.del_A, p.del);
        s.des_A = std::max(s.des_A, p.des);
        s.gldim = std::max(s.gldim, p.pd_S);
    }
    FunctionQuiver qpsi = function_quiver(a, QuiverKind::psi);
    FunctionQuiver qgamma = function_quiver(a, QuiverKind::gamma);
    s.a_A = qpsi.max_acyclic_depth();
    s.c_psi = qpsi.cyclic_count();
    s.c_gamma = qgamma.cyclic_count();
    s.gorenstein = true;
    s.selfinjective = true;
    for (int v = 1; v <= a.n(); ++v) {
        if (!finite(injdim(a, projective(a, v))) || !finite(pd(a, injective(a, v)))) s.gorenstein = false;
        if (!is_injective(a, projective(a, v))) s.selfinjective = false;
    }
    if (assert_equalities && !(s.finpro == s.fininj && s.finpro == s.del_A && s.finpro == s.des_A))
        throw Contradiction("fin-pro = fin-inj = del A = des A",
                            serialize(a) + " gives " + dim_to_string(s.finpro) + "," +
                                dim_to_string(s.fininj) + "," + dim_to_string(s.del_A) + "," +
                                dim_to_string(s.des_A));
    return s;
}

long long psi_lift(const Algebra& a, long long i) { return i + a.inj_len(a.vertex(i)); }

long long gamma_lift(const Algebra& a, long long i) { return i - a.c(a.vertex(i)); }

CheckReport covering_lift_check(const Algebra& a, long long lo, long long hi) {
    CheckReport r;
    if (!a.cyclic()) return r;
    auto psi_t = [&](long long i, int t) {
        for (int k = 0; k < t; ++k) i = psi_lift(a, i);
        return i;
    };
    auto gamma_t = [&](long long i, int t) {
        for (int k = 0; k < t; ++k) i = gamma_lift(a, i);
        return i;
    };
    for (long long i = lo; i <= hi; ++i) {
        const std::string at = serialize(a) + " i=" + std::to_string(i);
        if (i < hi) {
            r.expect_lazy("lift: psi~ monotone", psi_lift(a, i) <= psi_lift(a, i + 1), [&] { return at; });
            r.expect_lazy("lift: gamma~ monotone", gamma_lift(a, i) <= gamma_lift(a, i + 1), [&] { return at; });
        }
        r.expect_lazy("lift: psi~gamma~(i) <= i", psi_lift(a, gamma_lift(a, i)) <= i, [&] { return at; });
        r.expect_lazy("lift: i <= gamma~psi~(i)", i <= gamma_lift(a, psi_lift(a, i)), [&] { return at; });
        r.expect_lazy("lift: covers psi", a.vertex(psi_lift(a, i)) == *psi(a, a.vertex(i)), [&] { return at; });
        r.expect_lazy("lift: covers gamma", a.vertex(gamma_lift(a, i)) == *gamma(a, a.vertex(i)),
                      [&] { return at; });
        for (int t = 1; t <= 3; ++t) {
            r.expect_lazy("lift: psi~^t gamma~^t psi~^t = psi~^t", psi_t(gamma_t(psi_t(i, t), t), t) == psi_t(i, t),
                          [&] { return at + " t=" + std::to_string(t); });
            r.expect_lazy("lift: gamma~^t psi~^t gamma~^t = gamma~^t",
                          gamma_t(psi_t(gamma_t(i, t), t), t) == gamma_t(i, t),
                          [&] { return at + " t=" + std::to_string(t); });
        }
    }
    return r;
}

CheckReport check_theorems(const Algebra& a) {
    CheckReport r;
    const int n = a.n();
    const std::string name = serialize(a);
    const auto profiles = dimension_profiles(a);
    const AlgebraSummary sum = finitistic_summary(a, false);
    const auto mods = all_modules(a);
    const int far = horizon(a);
    auto prof = [&](int v) -> const SimpleProfile& { return profiles[static_cast<std::size_t>(v - 1)]; };
    auto at = [&](const std::string& what) { return name + " " + what; };

    std::map<Module, Dim> pd_of;
    std::map<Module, Dim> id_of;
    for (const Module& m : mods) {
        pd_of[m] = pd(a, m);
        id_of[m] = injdim(a, m);
    }

    // Finiteness of e and e*, and the parity dichotomy behind it.
    for (const auto& p : profiles) {
        const std::string w = at(vname(p.vertex));
        r.expect_lazy("S odd or IS even", is_odd(p.pd_S) || is_even(p.pd_IS), [&] { return w; });
        r.expect_lazy("id S odd or id PS even", is_odd(p.id_S) || is_even(p.id_PS), [&] { return w; });
        r.expect_lazy("e(S) finite", finite(p.e), [&] { return w; });
        r.expect_lazy("e*(S) finite", finite(p.e_star), [&] { return w; });
        r.expect_lazy("del S <= e(S)", p.del <= p.e, [&] { return w; });
        r.expect_lazy("des S <= e*(S)", p.des <= p.e_star, [&] { return w; });
        r.expect_lazy("del S = 0 iff S torsionless", (p.del == 0) == a.is_torsionless_simple(p.vertex),
                      [&] { return w; });
        r.expect_lazy("del S = 1 iff not torsionless and pd S = 1",
                      (p.del == 1) == (!a.is_torsionless_simple(p.vertex) && p.pd_S == 1), [&] { return w; });
        r.expect_lazy("f(S) <= e(S)", p.f <= p.e, [&] { return w; });
        r.expect_lazy("f(S) = e(S) unless S odd and IS even",
                      (is_odd(p.pd_S) && is_even(p.pd_IS)) || p.f == p.e, [&] { return w; });
        r.expect_lazy("f*(S) <= e*(S)", p.f_star <= p.e_star, [&] { return w; });
        if (p.g_defined) r.expect_lazy("g = f for infinite gldim", p.g == p.f, [&] { return w; });
    }

    // Summary equalities, including d = max pd M_S and d' = max id N_S.
    Dim d = 0;
    Dim d_prime = 0;
    Dim max_f = 0;
    Dim max_f_star = 0;
    for (const auto& p : profiles) {
        d = std::max(d, finite(p.pd_S) ? p.pd_S : p.pd_IS);
        d_prime = std::max(d_prime, finite(p.id_S) ? p.id_S : p.id_PS);
        max_f = std::max(max_f, p.f);
        max_f_star = std::max(max_f_star, p.f_star);
    }
    r.expect_lazy("fin-pro = fin-inj = del A = des A = d = d'",
                  sum.finpro == sum.fininj && sum.finpro == sum.del_A && sum.finpro == sum.des_A &&
                      sum.finpro == d && sum.finpro == d_prime,
                  [&] {
                      return at("finpro=" + dim_to_string(sum.finpro) + " fininj=" + dim_to_string(sum.fininj) +
                                " del=" + dim_to_string(sum.del_A) + " des=" + dim_to_string(sum.des_A) +
                                " d=" + dim_to_string(d) + " d'=" + dim_to_string(d_prime));
                  });
    r.expect_lazy("fin-pro = max f", max_f == sum.finpro, [&] { return at(""); });
    r.expect_lazy("fin-inj = max f*", max_f_star == sum.fininj, [&] { return at(""); });
    {
        bool found = false;
        bool all_equal = true;
        for (const auto& p : profiles)
            if (p.del == sum.finpro) {
                found = true;
                if (p.del != p.e) all_equal = false;
            }
        r.expect_lazy("some S has del S = fin-pro, and then del S = e(S)", found && all_equal,
                      [&] { return at(""); });
    }
    {
        Algebra op = opposite(a);
        AlgebraSummary ops = finitistic_summary(op, false);
        r.expect_lazy("fin-pro(A^op) = fin-inj(A)", ops.finpro == sum.fininj, [&] { return at(""); });
    }

    // Gorenstein algebras of infinite global dimension have even fin-pro.
    if (sum.gorenstein && !finite(sum.gldim))
        r.expect_lazy("Gorenstein and gldim infinite implies fin-pro even", sum.finpro % 2 == 0,
                      [&] { return at(""); });

    // Every odd number up to fin-pro is the projective dimension of a simple.
    for (int i = 1; i <= sum.finpro; i += 2) {
        bool hit = false;
        for (const auto& p : profiles) hit = hit || p.pd_S == i;
        r.expect_lazy("odd i <= fin-pro realized by pd S", hit, [&] { return at("i=" + std::to_string(i)); });
    }

    // Images of psi and gamma.
    {
        std::set<int> im_psi = image(psi_map(a));
        std::set<int> im_gamma = image(gamma_map(a));
        for (int v = 1; v <= n; ++v) {
            r.expect_lazy("Im psi = {pd >= 2}", im_psi.count(v) == (prof(v).pd_S >= 2 ? 1u : 0u),
                          [&] { return at(vname(v)); });
            r.expect_lazy("Im gamma = {id >= 2}", im_gamma.count(v) == (prof(v).id_S >= 2 ? 1u : 0u),
                          [&] { return at(vname(v)); });
        }
    }

    // Composition factors of Omega^2 S are the psi-predecessors of S.
    for (int v = 1; v <= n; ++v) {
        std::multiset<int> factors;
        if (auto x = omega_k(a, simple(v), 2)) {
            auto cf = composition_factors(a, *x);
            factors.insert(cf.begin(), cf.end());
        }
        std::multiset<int> preds;
        for (int u = 1; u <= n; ++u)
            if (psi(a, u) == v) preds.insert(u);
        r.expect_lazy("factors of Omega^2 S = psi-predecessors of S", factors == preds,
                      [&] { return at(vname(v)); });
    }

    // Top of even syzygies follows gamma, socle of even cosyzygies follows psi.
    for (const Module& m : mods) {
        for (int k = 1; 2 * k <= std::min(pd_of[m], far); ++k) {
            MaybeModule x = omega_k(a, m, 2 * k);
            std::optional<int> g = top(a, m);
            for (int i = 0; i < k && g; ++i) g = gamma(a, *g);
            r.expect_lazy("top Omega^2m M = gamma^m top M", x && g && top(a, *x) == *g,
                          [&] { return at(to_string(m) + " m=" + std::to_string(k)); });
        }
        for (int k = 1; 2 * k <= std::min(id_of[m], far); ++k) {
            MaybeModule x = sigma_k(a, m, 2 * k);
            std::optional<int> p = m.soc;
            for (int i = 0; i < k && p; ++i) p = psi(a, *p);
            r.expect_lazy("soc Sigma^2m M = psi^m soc M", x && p && x->soc == *p,
                          [&] { return at(to_string(m) + " m=" + std::to_string(k)); });
        }
    }

    // Subfactor laws and the maximum property of odd modules.
    for (const Module& m : mods) {
        const Dim pm = pd_of[m];
        for (const Module& x : mods) {
            if (!is_subfactor(a, x, m)) continue;
            const Dim px = pd_of[x];
            if (is_odd(pm))
                r.expect_lazy("subfactor of odd M is odd with smaller pd", is_odd(px) && px <= pm,
                              [&] { return at(to_string(x) + " in " + to_string(m)); });
            if (is_even(px))
                r.expect_lazy("M with even subfactor X is even with pd M <= pd X", is_even(pm) && pm <= px,
                              [&] { return at(to_string(x) + " in " + to_string(m)); });
        }
        bool all_odd = true;
        Dim mx = 0;
        for (int v : composition_factors(a, m)) {
            all_odd = all_odd && is_odd(prof(v).pd_S);
            mx = std::max(mx, prof(v).pd_S);
        }
        r.expect_lazy("M odd iff all composition factors odd", is_odd(pm) == all_odd,
                      [&] { return at(to_string(m)); });
        if (is_odd(pm))
            r.expect_lazy("pd of odd M is the maximum over composition factors", pm == mx,
                          [&] { return at(to_string(m)); });
    }

    // del X <= pd Y whenever X is a submodule of Y of finite projective dimension.
    {
        OrbitLayers layers(a, true);
        std::map<Module, Dim> del_of;
        for (const Module& x : mods) {
            auto lv = level_search(a, x, far, true, layers);
            del_of[x] = lv ? *lv : kInf;
        }
        for (const Module& y : mods) {
            if (!finite(pd_of[y])) continue;
            for (const Module& x : mods)
                if (is_submodule(x, y))
                    r.expect_lazy("del X <= pd Y for X inside Y", del_of[x] <= pd_of[y],
                                  [&] { return at(to_string(x) + " in " + to_string(y)); });
        }
    }

    // The nonzero-even-z and odd-z cases of the tie theorem.
    for (int t = 1; t <= n; ++t) {
        const auto& p = prof(t);
        if (is_even(p.pd_IS) && p.pd_S >= p.pd_IS) {
            const int z = p.pd_IS;
            MaybeModule ps = omega_k(a, injective(a, t), z);
            int s = top(a, *ps);
            r.expect_lazy("even z: Sigma^z PS = IT", sigma_k(a, *ps, z) == MaybeModule(injective(a, t)),
                          [&] { return at(vname(t) + " z=" + std::to_string(z)); });
            r.expect_lazy("even z: id S >= z", prof(s).id_S >= z, [&] { return at(vname(t)); });
        }
        if (is_odd(p.pd_S) && p.pd_IS >= p.pd_S) {
            const int z = p.pd_S;
            MaybeModule ps = omega_k(a, simple(t), z);
            int s = top(a, *ps);
            r.expect_lazy("odd z: Sigma^z S = IT", sigma_k(a, simple(s), z) == MaybeModule(injective(a, t)),
                          [&] { return at(vname(t) + " z=" + std::to_string(z)); });
            r.expect_lazy("odd z: id PS >= z", prof(s).id_PS >= z, [&] { return at(vname(t)); });
        }
    }

    // Peaks, torsionless simples and the bound on simples with e >= 2.
    {
        int peaks = 0;
        for (int i = 1; i <= n; ++i)
            if (is_injective(a, projective(a, i))) ++peaks;
        int e0 = 0;
        int e2 = 0;
        for (const auto& p : profiles) {
            if (p.e == 0) ++e0;
            if (p.e >= 2 && finite(p.e)) {
                ++e2;
                const Module s = simple(p.vertex);
                r.expect_lazy("e(S) >= 2 implies tau S divisible", !is_projective(a, s) && is_divisible(a, tau(a, s)),
                              [&] { return at(vname(p.vertex)); });
            }
        }
        r.expect_lazy("|E(0)| = number of peaks", e0 == peaks, [&] { return at(""); });
        r.expect_lazy("|union of E(z), z >= 2| <= number of peaks", e2 <= peaks, [&] { return at(""); });
    }

    // The psi-quiver of A is the gamma-quiver of A^op.
    {
        Algebra op = opposite_labelled(a);
        for (int v = 1; v <= n; ++v) {
            std::optional<int> lhs = gamma(op, opposite_vertex(a, v));
            std::optional<int> p = psi(a, v);
            std::optional<int> rhs = p ? std::optional<int>(opposite_vertex(a, *p)) : std::nullopt;
            r.expect_lazy("psi-quiver of A = gamma-quiver of A^op", lhs == rhs, [&] { return at(vname(v)); });
        }
    }

    if (!a.cyclic()) return r;

    // Statements about cyclic algebras only.
    const FunctionQuiver qpsi = function_quiver(a, QuiverKind::psi);
    const FunctionQuiver qgamma = function_quiver(a, QuiverKind::gamma);
    const int aA = sum.a_A;
    for (const auto& p : profiles) {
        const std::string w = at(vname(p.vertex));
        r.expect_lazy("a(S) finite iff pd S odd", finite(p.a) == is_odd(p.pd_S), [&] { return w; });
        if (finite(p.a)) r.expect_lazy("pd S = 2a(S) - 1", p.pd_S == 2 * p.a - 1, [&] { return w; });
        else
            r.expect_lazy("a(S) infinite implies pd IS even and <= 2a(A)", is_even(p.pd_IS) && p.pd_IS <= 2 * aA,
                          [&] { return w; });
        r.expect_lazy("a'(S) finite iff id S odd", finite(p.a_prime) == is_odd(p.id_S), [&] { return w; });
        if (finite(p.a_prime)) r.expect_lazy("id S = 2a'(S) - 1", p.id_S == 2 * p.a_prime - 1, [&] { return w; });
        else
            r.expect_lazy("a'(S) infinite implies id PS even and <= 2a(A)", is_even(p.id_PS) && p.id_PS <= 2 * aA,
                          [&] { return w; });
    }
    r.expect_lazy("2a(A) - 1 <= fin-pro <= 2a(A)", 2 * aA - 1 <= sum.finpro && sum.finpro <= 2 * aA,
                  [&] { return at("a(A)=" + std::to_string(aA) + " finpro=" + dim_to_string(sum.finpro)); });

    {
        Algebra op = opposite(a);
        FunctionQuiver opq = function_quiver(op, QuiverKind::psi);
        r.expect_lazy("a(A) = a(A^op)", opq.max_acyclic_depth() == aA, [&] { return at(""); });
        r.expect_lazy("a(A) = max a'(S) off gamma-cycles", qgamma.max_acyclic_depth() == aA, [&] { return at(""); });
        r.expect_lazy("c(A) = c(A^op)", opq.cyclic_count() == qpsi.cyclic_count(), [&] { return at(""); });
        r.expect_lazy("psi-cyclic count = gamma-cyclic count", qpsi.cyclic_count() == qgamma.cyclic_count(),
                      [&] { return at(""); });
        r.expect_lazy("psi- and gamma-quivers have equal component counts",
                      qpsi.components.size() == qgamma.components.size(), [&] { return at(""); });
    }

    // E(2a(A)) consists of the psi-cyclic simples with pd IS = 2a(A).
    for (const auto& p : profiles) {
        bool lhs = p.e == 2 * aA;
        bool rhs = p.psi_cyclic && p.pd_IS == 2 * aA;
        r.expect_lazy("E(2a(A)) = psi-cyclic simples with pd IS = 2a(A)", lhs == rhs,
                      [&] { return at(vname(p.vertex)); });
    }

    // psi/gamma identities on the simples.
    {
        const Map ps = psi_map(a);
        const Map gm = gamma_map(a);
        const Map tau_m = shift_map(a, -1);
        const Map tau_inv_m = shift_map(a, 1);
        int stable = -1;
        for (int t = 0; t <= aA + 2; ++t) {
            const Map pt = power(ps, t);
            const Map gt = power(gm, t);
            const std::string wt = at("t=" + std::to_string(t));
            r.expect_lazy("psi^t gamma^t psi^t = psi^t", compose(pt, compose(gt, pt)) == pt,
                          [&] { return wt + " psi^t=" + map_text(pt); });
            r.expect_lazy("gamma^t psi^t gamma^t = gamma^t", compose(gt, compose(pt, gt)) == gt,
                          [&] { return wt + " gamma^t=" + map_text(gt); });
            r.expect_lazy("psi^t tau- gamma^t tau psi^t = psi^t",
                          compose(pt, compose(tau_inv_m, compose(gt, compose(tau_m, pt)))) == pt,
                          [&] { return wt; });
            r.expect_lazy("gamma^t tau psi^t tau- gamma^t = gamma^t",
                          compose(gt, compose(tau_m, compose(pt, compose(tau_inv_m, gt)))) == gt,
                          [&] { return wt; });
            const std::set<int> im_p = image(pt);
            const std::set<int> im_g = image(gt);
            std::set<int> via_g;
            std::set<int> via_gt;
            for (int v : im_p) {
                int g = *gt[static_cast<std::size_t>(v - 1)];
                via_g.insert(g);
                r.expect_lazy("psi^t inverts gamma^t on Im psi^t", pt[static_cast<std::size_t>(g - 1)] == v,
                              [&] { return wt + " " + vname(v); });
                int h = *compose(gt, tau_m)[static_cast<std::size_t>(v - 1)];
                via_gt.insert(h);
                r.expect_lazy("psi^t tau- inverts gamma^t tau on Im psi^t",
                              compose(pt, tau_inv_m)[static_cast<std::size_t>(h - 1)] == v,
                              [&] { return wt + " " + vname(v); });
            }
            r.expect_lazy("gamma^t maps Im psi^t onto Im gamma^t", via_g == im_g, [&] { return wt; });
            r.expect_lazy("gamma^t tau maps Im psi^t onto Im gamma^t", via_gt == im_g, [&] { return wt; });
            if (stable < 0 && image(power(ps, t)) == image(power(ps, t + 1))) stable = t;
        }
        r.expect_lazy("a(A) is where Im psi^t stabilizes", stable == aA,
                      [&] { return at("stable at " + std::to_string(stable)); });
    }

    r.merge(covering_lift_check(a, -3LL * n, 3LL * n));
    return r;
}

}  // namespace nakayama
