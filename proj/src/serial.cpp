#include "nakayama/serial.hpp"

#include <charconv>
#include <set>

namespace nakayama {

bool exists(const Algebra& a, int socle, int length) {
    if (length < 1) return false;
    long long t = static_cast<long long>(socle) + length - 1;
    if (!a.in_range(socle) || !a.in_range(t)) return false;
    return length <= a.c(a.vertex(t));
}

Module make(const Algebra& a, int socle, int length) {
    if (!exists(a, socle, length))
        throw NonexistentModule("no indecomposable module with socle " + std::to_string(socle) +
                                " and length " + std::to_string(length));
    return Module{a.vertex(socle), length};
}

int top(const Algebra& a, const Module& m) {
    return a.vertex(static_cast<long long>(m.soc) + m.len - 1);
}

Module simple(int v) { return Module{v, 1}; }

Module projective(const Algebra& a, int i) { return Module{a.proj_socle(i), a.c(i)}; }

Module injective(const Algebra& a, int v) { return Module{a.vertex(v), a.inj_len(v)}; }

Module proj_cover(const Algebra& a, const Module& m) { return projective(a, top(a, m)); }

Module inj_env(const Algebra& a, const Module& m) { return injective(a, m.soc); }

bool is_projective(const Algebra& a, const Module& m) { return m.len == a.c(top(a, m)); }

bool is_injective(const Algebra& a, const Module& m) { return m.len == a.inj_len(m.soc); }

MaybeModule syzygy(const Algebra& a, const Module& m) {
    const int t = top(a, m);
    const int c = a.c(t);
    if (m.len == c) return std::nullopt;
    return Module{a.vertex(static_cast<long long>(t) - c + 1), c - m.len};
}

MaybeModule cosyzygy(const Algebra& a, const Module& m) {
    const int il = a.inj_len(m.soc);
    if (m.len == il) return std::nullopt;
    return Module{a.vertex(static_cast<long long>(m.soc) + m.len), il - m.len};
}

MaybeModule omega_k(const Algebra& a, const MaybeModule& m, int k) {
    MaybeModule x = m;
    for (int i = 0; i < k && x; ++i) x = syzygy(a, *x);
    return x;
}

MaybeModule sigma_k(const Algebra& a, const MaybeModule& m, int k) {
    MaybeModule x = m;
    for (int i = 0; i < k && x; ++i) x = cosyzygy(a, *x);
    return x;
}

namespace {

template <class Step, class Stop>
Dim orbit_dimension(const MaybeModule& m, Step step, Stop stop) {
    if (!m) return kZeroDim;
    std::set<Module> seen;
    Module x = *m;
    for (Dim d = 0;; ++d) {
        if (stop(x)) return d;
        if (!seen.insert(x).second) return kInf;
        x = *step(x);
    }
}

}  // namespace

Dim pd(const Algebra& a, const MaybeModule& m) {
    return orbit_dimension(
        m, [&](const Module& x) { return syzygy(a, x); },
        [&](const Module& x) { return is_projective(a, x); });
}

Dim injdim(const Algebra& a, const MaybeModule& m) {
    return orbit_dimension(
        m, [&](const Module& x) { return cosyzygy(a, x); },
        [&](const Module& x) { return is_injective(a, x); });
}

bool is_torsionless(const Algebra& a, const Module& m) {
    for (int i = 1; i <= a.n(); ++i)
        if (a.proj_socle(i) == m.soc && a.c(i) >= m.len) return true;
    return false;
}

bool is_divisible(const Algebra& a, const Module& m) {
    const int t = top(a, m);
    for (int v = 1; v <= a.n(); ++v) {
        Module inj = injective(a, v);
        if (top(a, inj) == t && inj.len >= m.len) return true;
    }
    return false;
}

MaybeModule radical(const Module& m) {
    if (m.len == 1) return std::nullopt;
    return Module{m.soc, m.len - 1};
}

MaybeModule mod_socle(const Algebra& a, const Module& m) {
    if (m.len == 1) return std::nullopt;
    return Module{a.vertex(static_cast<long long>(m.soc) + 1), m.len - 1};
}

Predicates predicates(const Algebra& a, const Module& m) {
    Predicates p;
    p.projective = is_projective(a, m);
    p.injective = is_injective(a, m);
    p.torsionless = is_torsionless(a, m);
    p.divisible = is_divisible(a, m);
    p.peak = p.projective && p.injective;

    bool rad_of_projective = false;
    for (int i = 1; i <= a.n(); ++i)
        if (radical(projective(a, i)) == MaybeModule(m)) rad_of_projective = true;
    bool injective_mod_socle = false;
    for (int v = 1; v <= a.n(); ++v)
        if (mod_socle(a, injective(a, v)) == MaybeModule(m)) injective_mod_socle = true;
    p.valley = rad_of_projective && injective_mod_socle;

    MaybeModule rad = radical(m);
    p.minimal_projective = p.projective && !(rad && is_projective(a, *rad));
    MaybeModule quo = mod_socle(a, m);
    p.minimal_injective = p.injective && !(quo && is_injective(a, *quo));
    return p;
}

Module tau(const Algebra& a, const Module& m) {
    if (is_projective(a, m)) throw TauUndefined("tau of projective module " + to_string(m));
    return Module{a.vertex(static_cast<long long>(m.soc) - 1), m.len};
}

Module tau_inv(const Algebra& a, const Module& m) {
    if (is_injective(a, m)) throw TauUndefined("inverse tau of injective module " + to_string(m));
    return Module{a.vertex(static_cast<long long>(m.soc) + 1), m.len};
}

std::vector<Module> all_modules(const Algebra& a) {
    std::vector<Module> out;
    for (int len = 1; len <= a.maxlen(); ++len)
        for (int s = 1; s <= a.n(); ++s)
            if (exists(a, s, len)) out.push_back(Module{s, len});
    return out;
}

std::vector<int> composition_factors(const Algebra& a, const Module& m) {
    std::vector<int> out;
    const int t = top(a, m);
    for (int k = 0; k < m.len; ++k) out.push_back(a.vertex(static_cast<long long>(t) - k));
    return out;
}

bool is_submodule(const Module& x, const Module& m) { return x.soc == m.soc && x.len <= m.len; }

bool is_quotient(const Algebra& a, const Module& x, const Module& m) {
    return top(a, x) == top(a, m) && x.len <= m.len;
}

bool is_subfactor(const Algebra& a, const Module& x, const Module& m) {
    if (x.len > m.len) return false;
    for (int k = 0; k + x.len <= m.len; ++k) {
        long long s = static_cast<long long>(m.soc) + k;
        if (a.vertex(s) == x.soc) return true;
    }
    return false;
}

std::string to_string(const Module& m) { return std::to_string(m.soc) + ":" + std::to_string(m.len); }

std::string to_string(const MaybeModule& m) { return m ? to_string(*m) : std::string("0"); }

Module parse_module(const Algebra& a, std::string_view text) {
    std::size_t colon = text.find(':');
    if (colon == std::string_view::npos) throw ParseError(0, "expected module literal \"s:l\"");
    int s = 0;
    int len = 0;
    auto r1 = std::from_chars(text.data(), text.data() + colon, s);
    if (r1.ec != std::errc() || r1.ptr != text.data() + colon) throw ParseError(0, "bad socle");
    auto r2 = std::from_chars(text.data() + colon + 1, text.data() + text.size(), len);
    if (r2.ec != std::errc() || r2.ptr != text.data() + text.size())
        throw ParseError(colon + 1, "bad length");
    return make(a, s, len);
}

}  // namespace nakayama
