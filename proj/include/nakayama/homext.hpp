#pragma once

#include <vector>

#include "nakayama/algebra.hpp"
#include "nakayama/check.hpp"
#include "nakayama/serial.hpp"

namespace nakayama {

// Lengths of the images of a basis of Hom(U, V). Each image is a quotient of U
// and a submodule of V, so its length l satisfies top U = soc V + l - 1.
std::vector<int> hom_image_lengths(const Algebra& a, const Module& u, const Module& v);
int hom_dim(const Algebra& a, const Module& u, const Module& v);

// dim Ext^d(U, V) by dimension shift to Ext^1(Omega^{d-1} U, V).
int ext_dim(const Algebra& a, const Module& u, const Module& v, int d);

// Smallest d with Ext^d(S_v, A) != 0, searched up to del S_v.
int grade(const Algebra& a, int v);
int depth(const Algebra& a);

struct GradeWitness {
    Module n;
    Dim id_n = 0;
    int ext = 0;  // dim Ext^d(S, N)
};

// N = tau Omega^{d-1} S for d = grade S >= 1; WitnessFailure if it misbehaves.
GradeWitness grade_witness(const Algebra& a, int v);

// Largest module length accepted by the oracles.
inline constexpr int kOracleCap = 64;

// Independent computation through explicit representations over Q.
int oracle_hom_dim(const Algebra& a, const Module& u, const Module& v);
int oracle_ext1(const Algebra& a, const Module& u, const Module& v);

// Compares hom_dim and ext_dim(., ., 1) with the oracles on all module pairs.
CheckReport oracle_equivalence(const Algebra& a);

CheckReport check_homext(const Algebra& a);

}  // namespace nakayama
