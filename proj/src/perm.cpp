#include "nakayama/perm.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "nakayama/homdim.hpp"

namespace nakayama {

namespace {

std::string where(const Algebra& a, int v) { return serialize(a) + " S_" + std::to_string(v); }

Module ns_from(const Algebra& a, int v, Dim e) { return e % 2 == 1 ? simple(v) : injective(a, v); }

Module ns_star_from(const Algebra& a, int v, Dim e_star) { return e_star % 2 == 1 ? simple(v) : projective(a, v); }

int h_from(const Algebra& a, int v, Dim e) {
    if (!finite(e)) throw Contradiction("e(S) finite", where(a, v));
    MaybeModule x = omega_k(a, ns_from(a, v, e), e);
    if (!x || !is_projective(a, *x)) throw Contradiction("Omega^e NS projective", where(a, v));
    return top(a, *x);
}

int h_star_from(const Algebra& a, int v, Dim e_star) {
    if (!finite(e_star)) throw Contradiction("e*(S) finite", where(a, v));
    MaybeModule x = sigma_k(a, ns_star_from(a, v, e_star), e_star);
    if (!x || !is_injective(a, *x)) throw Contradiction("Sigma^e* N*S injective", where(a, v));
    return x->soc;
}

HomPermutation permutation_from(const Algebra& a, const std::vector<SimpleProfile>& profiles) {
    HomPermutation p;
    for (const auto& s : profiles) {
        p.map.push_back(h_from(a, s.vertex, s.e));
        p.inverse.push_back(h_star_from(a, s.vertex, s.e_star));
        p.z.push_back(s.e);
    }
    return p;
}

}  // namespace

Module ns(const Algebra& a, int v) { return ns_from(a, a.vertex(v), dimension_profile(a, v).e); }

Module ns_star(const Algebra& a, int v) { return ns_star_from(a, a.vertex(v), dimension_profile(a, v).e_star); }

int h(const Algebra& a, int v) { return h_from(a, a.vertex(v), dimension_profile(a, v).e); }

int h_star(const Algebra& a, int v) { return h_star_from(a, a.vertex(v), dimension_profile(a, v).e_star); }

int h_closed_form(const Algebra& a, int v) {
    v = a.vertex(v);
    const Dim e = dimension_profile(a, v).e;
    if (!finite(e)) throw Contradiction("e(S) finite", where(a, v));
    std::optional<int> x;
    if (e % 2 == 0) {
        x = phi(a, v);
    } else if (a.in_range(static_cast<long long>(v) - 1)) {
        x = a.vertex(static_cast<long long>(v) - 1);
    }
    for (int i = 0; i < e / 2 && x; ++i) x = gamma(a, *x);
    if (!x) throw Contradiction("closed form for h defined", where(a, v));
    return *x;
}

std::string cycle_notation(const std::vector<int>& image) {
    const std::size_t n = image.size();
    const bool commas = n > 9;
    std::vector<bool> seen(n, false);
    std::string out;
    for (std::size_t start = 0; start < n; ++start) {
        if (seen[start]) continue;
        out += '(';
        std::size_t v = start;
        bool first = true;
        while (!seen[v]) {
            seen[v] = true;
            if (!first && commas) out += ',';
            out += std::to_string(v + 1);
            first = false;
            v = static_cast<std::size_t>(image[v] - 1);
        }
        out += ')';
    }
    return out;
}

std::vector<int> parse_cycles(std::string_view text, int n) {
    std::vector<int> image(static_cast<std::size_t>(n), 0);
    std::set<int> used;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip();
    while (i < text.size()) {
        if (text[i] != '(') throw ParseError(i, "expected '('");
        const std::size_t open = i++;
        const bool commas = text.substr(open, text.find(')', open) - open).find(',') != std::string_view::npos;
        std::vector<int> cycle;
        while (true) {
            skip();
            if (i >= text.size()) throw ParseError(i, "unterminated cycle");
            if (text[i] == ')') {
                ++i;
                break;
            }
            if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw ParseError(i, "expected a digit");
            const std::size_t at = i;
            int value = 0;
            if (commas) {
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                    value = value * 10 + (text[i++] - '0');
                skip();
                if (i < text.size() && text[i] == ',') ++i;
            } else {
                value = text[i++] - '0';
            }
            if (value < 1 || value > n) throw ParseError(at, "entry " + std::to_string(value) + " out of range");
            if (!used.insert(value).second) throw ParseError(at, "entry " + std::to_string(value) + " repeated");
            cycle.push_back(value);
        }
        if (cycle.empty()) throw ParseError(open, "empty cycle");
        for (std::size_t k = 0; k < cycle.size(); ++k)
            image[static_cast<std::size_t>(cycle[k] - 1)] = cycle[(k + 1) % cycle.size()];
        skip();
    }
    for (int v = 1; v <= n; ++v)
        if (image[static_cast<std::size_t>(v - 1)] == 0) image[static_cast<std::size_t>(v - 1)] = v;
    return image;
}

std::string HomPermutation::one_line() const {
    std::string s = "[";
    for (std::size_t i = 0; i < map.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(map[i]);
    }
    return s + "]";
}

int HomPermutation::fixed_points() const {
    int count = 0;
    for (std::size_t i = 0; i < map.size(); ++i)
        if (map[i] == static_cast<int>(i) + 1) ++count;
    return count;
}

HomPermutation permutation(const Algebra& a) {
    const auto profiles = dimension_profiles(a);
    HomPermutation p = permutation_from(a, profiles);
    const int n = a.n();
    std::vector<int> sorted = p.map;
    std::sort(sorted.begin(), sorted.end());
    for (int v = 1; v <= n; ++v)
        if (sorted[static_cast<std::size_t>(v - 1)] != v) throw Contradiction("h is a permutation", serialize(a));
    for (int v = 1; v <= n; ++v) {
        const int hv = p(v);
        if (p.inverse[static_cast<std::size_t>(hv - 1)] != v) throw Contradiction("h* h = id", where(a, v));
        if (profiles[static_cast<std::size_t>(hv - 1)].e_star != p.z[static_cast<std::size_t>(v - 1)])
            throw Contradiction("e*(h(S)) = e(S)", where(a, v));
    }
    return p;
}

std::vector<Tie> ties(const Algebra& a) {
    const auto profiles = dimension_profiles(a);
    const HomPermutation p = permutation_from(a, profiles);
    std::vector<Tie> out;
    for (const auto& prof : profiles) {
        Tie t;
        t.t = prof.vertex;
        t.s = p(prof.vertex);
        t.z = prof.e;
        t.parity = t.z % 2 == 1 ? Parity::odd : Parity::even;
        Module x = ns_from(a, t.t, t.z);
        for (int j = 0; j < t.z; ++j) {
            t.proj_resolution.push_back(proj_cover(a, x));
            x = *syzygy(a, x);
        }
        t.proj_terminal = x;
        Module y = ns_star_from(a, t.s, profiles[static_cast<std::size_t>(t.s - 1)].e_star);
        for (int j = 0; j < t.z; ++j) {
            t.inj_coresolution.push_back(inj_env(a, y));
            y = *cosyzygy(a, y);
        }
        t.inj_terminal = y;
        if (t.z == 0) t.peak = injective(a, t.t);
        out.push_back(std::move(t));
    }
    return out;
}

std::string kupisch_to_dyck(const Algebra& a) {
    if (a.cyclic()) throw std::invalid_argument("Dyck words encode linear algebras only");
    std::string word;
    for (int i = 2; i <= a.n(); ++i) {
        word.append(static_cast<std::size_t>(a.c(i - 1) + 1 - a.c(i)), 'D');
        word += 'U';
    }
    word.append(static_cast<std::size_t>(a.c(a.n()) - 1), 'D');
    return word;
}

Algebra dyck_to_kupisch(std::string_view word) {
    std::vector<int> c{1};
    int height = 0;
    int pending = 0;
    for (std::size_t i = 0; i < word.size(); ++i) {
        const char ch = word[i];
        if (ch == 'D') {
            if (--height < 0) throw MalformedPath("prefix ending at " + std::to_string(i) + " has more D than U");
            ++pending;
        } else if (ch == 'U') {
            ++height;
            c.push_back(c.back() + 1 - pending);
            pending = 0;
        } else {
            throw MalformedPath("letter '" + std::string(1, ch) + "' at " + std::to_string(i) + " is not U or D");
        }
    }
    if (height != 0) throw MalformedPath("unbalanced word: " + std::to_string(height) + " more U than D");
    if (pending != c.back() - 1) throw MalformedPath("trailing descent does not close the roof");
    return Algebra::validate(std::move(c), Kind::linear);
}

std::vector<LinearRow> enumerate_linear_with_stats(int n) {
    std::vector<LinearRow> rows;
    std::set<std::vector<int>> seen;
    for_each_series(n, n, Kind::linear, [&](const Algebra& a) {
        LinearRow row{a, permutation(a), kupisch_to_dyck(a)};
        if (!seen.insert(row.h.map).second) throw Contradiction("A -> h_A injective", serialize(a));
        if (n >= 2) {
            for (int x = 1; x <= n; ++x) {
                const int hx = row.h(x);
                const int z = row.h.z[static_cast<std::size_t>(x - 1)];
                if (hx == x) throw Contradiction("h fixed-point free", where(a, x));
                if (z == 0 && hx <= x) throw Contradiction("e(x) = 0 implies h(x) > x", where(a, x));
                if (z > 0 && hx >= x) throw Contradiction("e(x) > 0 implies h(x) < x", where(a, x));
            }
        }
        rows.push_back(std::move(row));
    });
    return rows;
}

Algebra reconstruct_linear_from_h(const std::vector<int>& image, int n) {
    if (static_cast<int>(image.size()) != n || n < 1) throw NotRealizable("permutation size differs from n");
    std::vector<int> sorted = image;
    std::sort(sorted.begin(), sorted.end());
    for (int v = 1; v <= n; ++v)
        if (sorted[static_cast<std::size_t>(v - 1)] != v) throw NotRealizable("not a permutation");
    std::vector<int> c(static_cast<std::size_t>(n), 0);
    c[0] = 1;
    for (int x = 1; x <= n; ++x) {
        const int y = image[static_cast<std::size_t>(x - 1)];
        if (y <= x) continue;
        for (int i = x; i <= y; ++i) c[static_cast<std::size_t>(i - 1)] = std::max(c[static_cast<std::size_t>(i - 1)], i - x + 1);
    }
    if (n == 1) c[0] = 1;
    for (int i = 2; i <= n; ++i)
        if (c[static_cast<std::size_t>(i - 1)] == 0) throw NotRealizable("no peak covers vertex " + std::to_string(i));
    Algebra a = [&] {
        try {
            return Algebra::validate(c, Kind::linear);
        } catch (const AdmissibilityError& e) {
            throw NotRealizable(std::string("peaks give no admissible series: ") + e.what());
        }
    }();
    if (permutation(a).map != image) throw NotRealizable("round trip gives " + permutation(a).cycles());
    return a;
}

CheckReport check_permutation(const Algebra& a) {
    CheckReport r;
    const int n = a.n();
    const auto profiles = dimension_profiles(a);
    HomPermutation p;
    try {
        p = permutation(a);
    } catch (const Contradiction& e) {
        r.expect("h permutation with inverse h* and e* h = e", false, e.check() + ": " + e.witness());
        return r;
    }
    r.expect("h permutation with inverse h* and e* h = e", true);
    for (int v = 1; v <= n; ++v) {
        const std::string w = where(a, v);
        const auto& prof = profiles[static_cast<std::size_t>(v - 1)];
        r.expect_lazy("h h* = id", p(p.inverse[static_cast<std::size_t>(v - 1)]) == v, [&] { return w; });
        int closed = 0;
        try {
            closed = h_closed_form(a, v);
        } catch (const Contradiction&) {
            closed = 0;
        }
        r.expect_lazy("h agrees with its closed form", closed == p(v), [&] { return w; });
        const bool torsionless = a.is_torsionless_simple(v);
        r.expect_lazy("e(T) = 0 iff T torsionless iff IT projective",
                      (prof.e == 0) == torsionless && torsionless == is_projective(a, injective(a, v)),
                      [&] { return w; });
        if (prof.e == 1)
            r.expect_lazy("e(T) = 1 implies h(T) = tau T", a.in_range(v - 1LL) && p(v) == a.vertex(v - 1LL),
                          [&] { return w; });
        if (prof.e % 2 == 1 && prof.pd_S == prof.e && prof.pd_IS == prof.e)
            r.expect_lazy("odd z = pd T = pd IT implies Omega^z T = Omega^z IT",
                          omega_k(a, simple(v), prof.e) == omega_k(a, injective(a, v), prof.e), [&] { return w; });
    }
    for (const Tie& t : ties(a)) {
        const std::string w = where(a, t.t);
        r.expect_lazy("tie resolution ends at PS", t.proj_terminal == projective(a, t.s), [&] { return w; });
        r.expect_lazy("tie coresolution ends at IT", t.inj_terminal == injective(a, t.t), [&] { return w; });
        if (t.z == 0)
            r.expect_lazy("z = 0 tie is a peak IT = PS", t.peak && *t.peak == projective(a, t.s), [&] { return w; });
    }
    if (!a.cyclic() && n >= 2) {
        for (int x = 1; x <= n; ++x) {
            const std::string w = where(a, x);
            const int z = p.z[static_cast<std::size_t>(x - 1)];
            r.expect_lazy("linear: h fixed-point free", p(x) != x, [&] { return w; });
            r.expect_lazy("linear: e(x) = 0 iff h(x) > x", (z == 0) == (p(x) > x), [&] { return w; });
        }
        Algebra back = [&] {
            try {
                return reconstruct_linear_from_h(p.map, n);
            } catch (const NotRealizable&) {
                return Algebra::validate(std::vector<int>{1}, Kind::linear);
            }
        }();
        r.expect_lazy("linear: h determines the algebra", back.same_labels(a), [&] { return serialize(a); });
    }
    return r;
}

}  // namespace nakayama
