#pragma once

#include <optional>
#include <vector>

#include "nakayama/algebra.hpp"
#include "nakayama/check.hpp"
#include "nakayama/serial.hpp"

namespace nakayama {

// psi(S_v) = S_{v+|I(v)|} unless top I(S_v) is injective.
std::optional<int> psi(const Algebra& a, int v);
// gamma(S_v) = S_{v-c_v} unless soc P(S_v) is projective.
std::optional<int> gamma(const Algebra& a, int v);
// phi(S_v) = top I(S_v).
int phi(const Algebra& a, int v);

enum class QuiverKind { psi, gamma };

// The functional graph of psi or gamma on the simples.
struct FunctionQuiver {
    QuiverKind kind = QuiverKind::psi;
    std::vector<std::optional<int>> successor;  // indexed by vertex - 1
    std::vector<std::vector<int>> components;   // weak components, each sorted
    std::vector<bool> on_cycle;
    // Largest number of vertices on a path ending at the vertex; kInf on cycles.
    std::vector<Dim> depth;

    std::optional<int> next(int v) const { return successor[static_cast<std::size_t>(v - 1)]; }
    int cyclic_count() const;
    // Maximum depth over vertices off the cycles, 0 when there are none.
    int max_acyclic_depth() const;
    std::vector<int> component_sizes() const;  // sorted
};

FunctionQuiver function_quiver(const Algebra& a, QuiverKind kind);

struct SimpleProfile {
    int vertex = 0;
    Dim pd_S = 0;
    Dim id_S = 0;
    Dim pd_IS = 0;
    Dim id_PS = 0;
    int e = 0;
    int e_star = 0;
    int f = 0;
    int f_star = 0;
    int g = 0;
    bool g_defined = false;  // only for infinite global dimension
    Dim a = 0;
    Dim a_prime = 0;
    Dim del = 0;  // kInf if no level was found within the search horizon
    Dim des = 0;
    bool psi_cyclic = false;
    bool gamma_cyclic = false;
};

std::vector<SimpleProfile> dimension_profiles(const Algebra& a);
SimpleProfile dimension_profile(const Algebra& a, int v);

struct AlgebraSummary {
    Dim finpro = 0;
    Dim fininj = 0;
    Dim del_A = 0;
    Dim des_A = 0;
    Dim gldim = 0;
    int a_A = 0;
    int c_psi = 0;
    int c_gamma = 0;
    bool gorenstein = false;
    bool selfinjective = false;
    // a(S) is only defined for cyclic algebras; for linear ones the same
    // formula is used and this flag is set.
    bool a_extended = false;
};

// Throws Contradiction when finpro, fininj, del A and des A disagree, unless
// assert_equalities is false.
AlgebraSummary finitistic_summary(const Algebra& a, bool assert_equalities = true);

// Smallest d <= cap such that Omega^d M is zero, projective, or isomorphic to
// Omega^{d+1} N for some indecomposable N.
std::optional<int> delooping_level(const Algebra& a, const Module& m, int cap);
std::optional<int> desuspending_level(const Algebra& a, const Module& m, int cap);

// del S and des S for the simple S_v; Contradiction if above e(S) or e*(S).
int delooping(const Algebra& a, int v);
int desuspending(const Algebra& a, int v);

// Lifts to the universal cover: psi~(i) = i + |I(i)|, gamma~(i) = i - c_i.
long long psi_lift(const Algebra& a, long long i);
long long gamma_lift(const Algebra& a, long long i);
CheckReport covering_lift_check(const Algebra& a, long long lo, long long hi);

CheckReport check_theorems(const Algebra& a);

}  // namespace nakayama
