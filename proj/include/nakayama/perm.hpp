#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nakayama/algebra.hpp"
#include "nakayama/check.hpp"
#include "nakayama/serial.hpp"

namespace nakayama {

// NS = S when e(S) is odd and IS when e(S) is even; N*S = S or PS by e*(S).
Module ns(const Algebra& a, int v);
Module ns_star(const Algebra& a, int v);

// h(S) = top Omega^{e(S)} NS and h*(S) = soc Sigma^{e*(S)} N*S.
int h(const Algebra& a, int v);
int h_star(const Algebra& a, int v);

// Closed form: gamma^t phi(S) when e(S) = 2t, gamma^t tau(S) when e(S) = 2t+1.
int h_closed_form(const Algebra& a, int v);

// Cycle notation with every cycle led by its smallest entry, cycles sorted,
// fixed points written out. Entries are comma separated once n > 9.
std::string cycle_notation(const std::vector<int>& image);
// Accepts "(143)(2)" and "(1,4,3)(2)"; unmentioned points are fixed.
std::vector<int> parse_cycles(std::string_view text, int n);

struct HomPermutation {
    std::vector<int> map;      // map[v-1] = h(S_v)
    std::vector<int> inverse;  // inverse[v-1] = h*(S_v)
    std::vector<int> z;        // z[v-1] = e(S_v)

    int operator()(int v) const { return map[static_cast<std::size_t>(v - 1)]; }
    std::string cycles() const { return cycle_notation(map); }
    std::string one_line() const;
    int fixed_points() const;
};

// Contradiction if h is not a bijection or h* h = id or e* h = e fails.
HomPermutation permutation(const Algebra& a);

enum class Parity { even, odd };

struct Tie {
    int t = 0;
    int s = 0;  // h(T)
    int z = 0;
    Parity parity = Parity::even;
    std::vector<Module> proj_resolution;  // P_0 .. P_{z-1} of NT
    Module proj_terminal;                 // Omega^z NT = PS
    std::vector<Module> inj_coresolution;  // I_0 .. I_{z-1} of N*S
    Module inj_terminal;                   // Sigma^z N*S = IT
    std::optional<Module> peak;            // IT = PS when z = 0
};

std::vector<Tie> ties(const Algebra& a);

// Roof of a linear algebra: for i = 2..n write c_{i-1}+1-c_i letters D and
// then one U, and close with c_n - 1 letters D.
std::string kupisch_to_dyck(const Algebra& a);
Algebra dyck_to_kupisch(std::string_view word);

struct LinearRow {
    Algebra algebra;
    HomPermutation h;
    std::string dyck;
};

// Every linear algebra on n simples with its permutation. Throws Contradiction
// if h has a fixed point (n >= 2), breaks the monotone laws, or repeats.
std::vector<LinearRow> enumerate_linear_with_stats(int n);

// Peaks are the intervals [x, h(x)] with h(x) > x; NotRealizable otherwise.
Algebra reconstruct_linear_from_h(const std::vector<int>& image, int n);

CheckReport check_permutation(const Algebra& a);

}  // namespace nakayama
