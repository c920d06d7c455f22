#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "nakayama/algebra.hpp"
#include "nakayama/check.hpp"
#include "nakayama/serial.hpp"

namespace nakayama {

struct SimpleClasses {
    std::vector<int> torsionless;  // soc P for some projective P
    std::vector<int> id_ge2;       // Im gamma
    std::vector<int> pd_ge2;       // Im psi
    std::vector<int> divisible;    // top I for some injective I
    std::vector<Module> peaks;
    std::vector<Module> valleys;
    std::vector<Module> minimal_projectives;
    std::vector<Module> minimal_injectives;
    int r = 0;  // number of torsionless simples
};

SimpleClasses classify(const Algebra& a);

// The smallest nonzero torsionless quotient of P(T), for T with id T >= 2.
struct DeltaModule {
    int t = 0;
    Module module;
};

DeltaModule delta(const Algebra& a, int t);
std::vector<DeltaModule> delta_modules(const Algebra& a);

// Sen's algebra with mod eps(A) equivalent to the Delta-filtered modules.
struct EpsilonAlgebra {
    std::vector<Algebra> components;
    std::vector<int> t_vertices;                  // sorted vertices with id >= 2
    std::vector<std::pair<int, int>> vertex_map;  // per t_vertices entry: (component, vertex)
    std::vector<int> lengths;                     // Delta-length of P(T) per t_vertices entry
};

EpsilonAlgebra epsilon_algebra(const Algebra& a);

// Cokernel of the minimal left approximation of M by projectives.
MaybeModule mho(const Algebra& a, const Module& m);
bool is_reflexive(const Algebra& a, const Module& m);

struct ReflexiveChain {
    std::vector<Module> r0;          // non-projective reflexive modules
    std::vector<Module> omega2;      // nonzero second syzygies
    std::vector<Module> filtered;    // torsionless with top of id >= 2
    std::vector<Module> reflexive;   // projectives and second syzygies
    bool holds = false;              // r0 in omega2 in filtered in reflexive
    bool matches_criterion = false;  // reflexive equals the set picked by is_reflexive
    bool proper[3] = {false, false, false};
};

ReflexiveChain reflexive_chain(const Algebra& a);

struct ScanEntry {
    int t = 0;
    MaybeModule module;
    bool torsionless = false;  // the zero module counts as torsionless
};

struct MhoScan {
    std::vector<ScanEntry> entries;
    std::optional<int> repeat_from;  // first t whose value recurs later
    std::optional<int> period;
};

// mho^t Omega^t S_v for t = 0..t_max.
MhoScan mho_omega_scan(const Algebra& a, int v, int t_max);

CheckReport check_epsilon(const Algebra& a);

}  // namespace nakayama
