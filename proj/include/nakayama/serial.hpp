#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nakayama/algebra.hpp"

namespace nakayama {

// An indecomposable module, written (socle, length). Its top is
// socle + length - 1, reduced modulo n for cyclic algebras.
struct Module {
    int soc = 0;
    int len = 0;
    auto operator<=>(const Module&) const = default;
};

// std::nullopt stands for the zero module.
using MaybeModule = std::optional<Module>;

bool exists(const Algebra& a, int socle, int length);
Module make(const Algebra& a, int socle, int length);
int top(const Algebra& a, const Module& m);

Module simple(int v);
Module projective(const Algebra& a, int i);  // P(S_i)
Module injective(const Algebra& a, int v);   // I(S_v)

Module proj_cover(const Algebra& a, const Module& m);
Module inj_env(const Algebra& a, const Module& m);

MaybeModule syzygy(const Algebra& a, const Module& m);
MaybeModule cosyzygy(const Algebra& a, const Module& m);
MaybeModule omega_k(const Algebra& a, const MaybeModule& m, int k);
MaybeModule sigma_k(const Algebra& a, const MaybeModule& m, int k);

// kZeroDim for the zero module, kInf when the orbit cycles.
Dim pd(const Algebra& a, const MaybeModule& m);
Dim injdim(const Algebra& a, const MaybeModule& m);

struct Predicates {
    bool projective = false;
    bool injective = false;
    bool torsionless = false;
    bool divisible = false;
    bool peak = false;
    bool valley = false;
    bool minimal_projective = false;
    bool minimal_injective = false;
};

bool is_projective(const Algebra& a, const Module& m);
bool is_injective(const Algebra& a, const Module& m);
bool is_torsionless(const Algebra& a, const Module& m);
bool is_divisible(const Algebra& a, const Module& m);
Predicates predicates(const Algebra& a, const Module& m);

// rad M and M/soc M; zero for simple M.
MaybeModule radical(const Module& m);
MaybeModule mod_socle(const Algebra& a, const Module& m);

Module tau(const Algebra& a, const Module& m);
Module tau_inv(const Algebra& a, const Module& m);

// All indecomposables, ordered by length and then by socle.
std::vector<Module> all_modules(const Algebra& a);

// Composition factors from the top downwards.
std::vector<int> composition_factors(const Algebra& a, const Module& m);
bool is_submodule(const Module& x, const Module& m);
bool is_quotient(const Algebra& a, const Module& x, const Module& m);
bool is_subfactor(const Algebra& a, const Module& x, const Module& m);

// Literal syntax "s:l".
std::string to_string(const Module& m);
std::string to_string(const MaybeModule& m);
Module parse_module(const Algebra& a, std::string_view text);

}  // namespace nakayama
