#include "nakayama/homext.hpp"

#include <boost/rational.hpp>

#include <algorithm>
#include <map>
#include <utility>

#include "nakayama/homdim.hpp"

namespace nakayama {

namespace {

using Q = boost::rational<long long>;
using Matrix = std::vector<std::vector<Q>>;

// Row reduces m in place and returns the pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][col] == Q(0)) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        const Q inv = Q(1) / m[row][col];
        for (auto& x : m[row]) x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == Q(0)) continue;
            const Q f = m[r][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(Matrix m, std::size_t cols) { return row_reduce(m, cols).size(); }

// Basis vector k of the module lives at vertex soc + k; the arrow sends it to
// basis vector k - 1.
int basis_vertex(const Algebra& a, const Module& m, int k) { return a.vertex(static_cast<long long>(m.soc) + k); }

struct Intertwiners {
    std::map<std::pair<int, int>, std::size_t> var;  // (i, j) -> column
    Matrix equations;
};

Intertwiners intertwiner_system(const Algebra& a, const Module& u, const Module& v) {
    if (u.len > kOracleCap || v.len > kOracleCap)
        throw OracleCapExceeded("module length exceeds oracle cap " + std::to_string(kOracleCap));
    Intertwiners sys;
    for (int i = 0; i < u.len; ++i)
        for (int j = 0; j < v.len; ++j)
            if (basis_vertex(a, u, i) == basis_vertex(a, v, j)) sys.var.emplace(std::make_pair(i, j), sys.var.size());
    const std::size_t cols = sys.var.size();
    for (int i = 0; i < u.len; ++i) {
        const int below = a.vertex(static_cast<long long>(basis_vertex(a, u, i)) - 1);
        for (int j = 0; j < v.len; ++j) {
            if (basis_vertex(a, v, j) != below) continue;
            std::vector<Q> row(cols, Q(0));
            bool any = false;
            if (i >= 1) {
                row[sys.var.at({i - 1, j})] += 1;
                any = true;
            }
            if (j + 1 < v.len) {
                row[sys.var.at({i, j + 1})] -= 1;
                any = true;
            }
            if (any) sys.equations.push_back(std::move(row));
        }
    }
    return sys;
}

// Basis of the solution space, one vector per free column.
Matrix null_space(Matrix m, std::size_t cols) {
    auto pivots = row_reduce(m, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    Matrix basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Q> x(cols, Q(0));
        x[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m[r][f];
        basis.push_back(std::move(x));
    }
    return basis;
}

int grade_capped(const Algebra& a, int v, int cap) {
    const Module s = simple(v);
    for (int d = 0; d <= cap; ++d) {
        int total = 0;
        for (int i = 1; i <= a.n() && total == 0; ++i) total += ext_dim(a, s, projective(a, i), d);
        if (total != 0) return d;
    }
    throw Contradiction("grade S <= del S", serialize(a) + " S_" + std::to_string(v) + " cap " + std::to_string(cap));
}

}  // namespace

std::vector<int> hom_image_lengths(const Algebra& a, const Module& u, const Module& v) {
    std::vector<int> out;
    const long long target = static_cast<long long>(top(a, u)) - v.soc + 1;
    const int bound = std::min(u.len, v.len);
    for (int l = 1; l <= bound; ++l) {
        bool match = a.cyclic() ? ((l - target) % a.n() + a.n()) % a.n() == 0 : l == target;
        if (match) out.push_back(l);
    }
    return out;
}

int hom_dim(const Algebra& a, const Module& u, const Module& v) {
    return static_cast<int>(hom_image_lengths(a, u, v).size());
}

int ext_dim(const Algebra& a, const Module& u, const Module& v, int d) {
    if (d == 0) return hom_dim(a, u, v);
    MaybeModule x = omega_k(a, u, d - 1);
    if (!x || is_projective(a, *x)) return 0;
    const Module omega = *syzygy(a, *x);
    return hom_dim(a, omega, v) - hom_dim(a, proj_cover(a, *x), v) + hom_dim(a, *x, v);
}

int grade(const Algebra& a, int v) {
    const SimpleProfile p = dimension_profile(a, v);
    return grade_capped(a, a.vertex(v), finite(p.del) ? p.del : 0);
}

int depth(const Algebra& a) {
    int best = 0;
    for (const auto& p : dimension_profiles(a))
        best = std::max(best, grade_capped(a, p.vertex, finite(p.del) ? p.del : 0));
    return best;
}

GradeWitness grade_witness(const Algebra& a, int v) {
    const int d = grade(a, v);
    const std::string where = serialize(a) + " S_" + std::to_string(v);
    if (d < 1) throw WitnessFailure("grade witness needs grade >= 1 at " + where);
    MaybeModule x = omega_k(a, simple(a.vertex(v)), d - 1);
    if (!x || is_projective(a, *x)) throw WitnessFailure("Omega^{d-1} S is projective at " + where);
    GradeWitness w{tau(a, *x), 0, 0};
    w.id_n = injdim(a, w.n);
    w.ext = ext_dim(a, simple(a.vertex(v)), w.n, d);
    if (w.id_n != d || w.ext < 1)
        throw WitnessFailure("tau Omega^{d-1} S has id " + dim_to_string(w.id_n) + " and Ext^d " +
                             std::to_string(w.ext) + " at " + where);
    return w;
}

int oracle_hom_dim(const Algebra& a, const Module& u, const Module& v) {
    Intertwiners sys = intertwiner_system(a, u, v);
    return static_cast<int>(sys.var.size() - rank(std::move(sys.equations), sys.var.size()));
}

int oracle_ext1(const Algebra& a, const Module& u, const Module& v) {
    if (is_projective(a, u)) return 0;
    const Module p = proj_cover(a, u);
    const Module omega = *syzygy(a, u);
    Intertwiners from_p = intertwiner_system(a, p, v);
    Intertwiners from_omega = intertwiner_system(a, omega, v);
    const std::size_t ncols = from_omega.var.size();
    const std::size_t hom_omega = ncols - rank(from_omega.equations, ncols);

    // Omega U is spanned by the first |Omega U| basis vectors of P.
    Matrix restricted;
    for (const auto& f : null_space(from_p.equations, from_p.var.size())) {
        std::vector<Q> row(ncols, Q(0));
        for (const auto& [ij, col] : from_omega.var) row[col] = f[from_p.var.at(ij)];
        restricted.push_back(std::move(row));
    }
    return static_cast<int>(hom_omega - rank(std::move(restricted), ncols));
}

CheckReport oracle_equivalence(const Algebra& a) {
    CheckReport r;
    const auto mods = all_modules(a);
    for (const Module& u : mods)
        for (const Module& v : mods) {
            auto at = [&] { return serialize(a) + " U=" + to_string(u) + " V=" + to_string(v); };
            r.expect_lazy("hom_dim = oracle", hom_dim(a, u, v) == oracle_hom_dim(a, u, v), at);
            r.expect_lazy("ext_dim 1 = oracle", ext_dim(a, u, v, 1) == oracle_ext1(a, u, v), at);
        }
    return r;
}

CheckReport check_homext(const Algebra& a) {
    CheckReport r;
    const auto profiles = dimension_profiles(a);
    int dep = 0;
    Dim del_a = 0;
    for (const auto& p : profiles) {
        const std::string w = serialize(a) + " S_" + std::to_string(p.vertex);
        del_a = std::max(del_a, p.del);
        int g = -1;
        try {
            g = grade_capped(a, p.vertex, finite(p.del) ? p.del : 0);
        } catch (const Contradiction&) {
            r.expect("grade S <= del S", false, w);
            continue;
        }
        r.expect("grade S <= del S", true);
        dep = std::max(dep, g);
        const bool torsionless = a.is_torsionless_simple(p.vertex);
        r.expect_lazy("del S = 0 iff grade S = 0 iff torsionless",
                      (p.del == 0) == (g == 0) && (g == 0) == torsionless, [&] { return w; });
        r.expect_lazy("del S = 1 iff grade S = 1 iff not torsionless and pd S = 1",
                      (p.del == 1) == (g == 1) && (g == 1) == (!torsionless && p.pd_S == 1), [&] { return w; });
        if (p.del == 2) r.expect_lazy("del S = 2 implies grade S = 2", g == 2, [&] { return w; });
        if (g >= 1) {
            bool good = true;
            try {
                GradeWitness gw = grade_witness(a, p.vertex);
                good = gw.id_n == g && gw.ext >= 1 && g <= p.del;
            } catch (const WitnessFailure&) {
                good = false;
            }
            r.expect_lazy("tau Omega^{d-1} S has id d and Ext^d != 0", good, [&] { return w; });
        }
    }
    r.expect_lazy("depth A <= del A", dep <= del_a, [&] { return serialize(a); });
    return r;
}

}  // namespace nakayama
