#pragma once

#include <climits>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "nakayama/errors.hpp"

namespace nakayama {

// Homological dimensions: a natural number or kInf.
using Dim = int;
inline constexpr Dim kInf = INT_MAX;
// Dimension reported for the zero module.
inline constexpr Dim kZeroDim = -1;

inline bool finite(Dim d) { return d != kInf; }
std::string dim_to_string(Dim d);

enum class Kind { linear, cyclic };

std::string to_string(Kind kind);

// A connected Nakayama algebra given by its Kupisch series.
//
// Vertices are 1..n. Entry c_i is the length of the projective cover of the
// simple S_i, the Auslander-Reiten translate of S_i is S_{i-1}, and the socle
// of P(S_i) is S_{i-c_i+1}. For cyclic algebras vertex arithmetic is modulo n.
//
// Instances are immutable. Two algebras compare equal when they agree up to
// rotation of the vertex labels (cyclic) or exactly (linear); same_labels()
// compares the labelled series.
class Algebra {
public:
    static Algebra validate(std::vector<int> entries, Kind kind);

    Kind kind() const { return kind_; }
    bool cyclic() const { return kind_ == Kind::cyclic; }
    int n() const { return static_cast<int>(c_.size()); }
    int maxlen() const { return maxlen_; }
    const std::vector<int>& entries() const { return c_; }

    // Reduce an integer position to a vertex label. Linear algebras return the
    // argument unchanged; callers use in_range() first.
    int vertex(long long x) const;
    bool in_range(long long x) const;

    int c(int v) const { return c_[static_cast<std::size_t>(vertex(v) - 1)]; }
    int inj_len(int v) const { return inj_len_[static_cast<std::size_t>(vertex(v) - 1)]; }
    int proj_socle(int i) const { return proj_socle_[static_cast<std::size_t>(vertex(i) - 1)]; }

    // Sorted socles of the indecomposable projectives.
    const std::vector<int>& torsionless_simples() const { return torsionless_; }
    bool is_torsionless_simple(int v) const;

    std::vector<int> canonical_entries() const;
    Algebra canonical() const;
    bool same_labels(const Algebra& other) const {
        return kind_ == other.kind_ && c_ == other.c_;
    }
    bool operator==(const Algebra& other) const;

private:
    Algebra() = default;

    Kind kind_ = Kind::linear;
    std::vector<int> c_;
    std::vector<int> inj_len_;
    std::vector<int> proj_socle_;
    std::vector<int> torsionless_;
    std::vector<char> torsionless_flag_;
    int maxlen_ = 0;
};

// Lexicographically smallest rotation.
std::vector<int> smallest_rotation(const std::vector<int>& entries);

// The opposite algebra with rotation normalization applied to cyclic output.
Algebra opposite(const Algebra& a);
// The opposite algebra labelled by rho(v) = 1 - v (mod n) or n + 1 - v, so
// that vertex rho(v) of the result corresponds to S_v.
Algebra opposite_labelled(const Algebra& a);
int opposite_vertex(const Algebra& a, int v);

// Every admissible series with n entries, all at most max_c, in lexicographic
// order. Cyclic series are reported once per rotation class.
std::vector<Algebra> enumerate(int n, int max_c, Kind kind);
void for_each_series(int n, int max_c, Kind kind, const std::function<void(const Algebra&)>& fn);

// Text form "kind:c_1,...,c_n".
std::string serialize(const Algebra& a);
Algebra parse(std::string_view text);

}  // namespace nakayama
