#include "nakayama/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace nakayama {

std::string dim_to_string(Dim d) {
    if (d == kInf) return "inf";
    if (d == kZeroDim) return "zero";
    return std::to_string(d);
}

std::string to_string(Kind kind) { return kind == Kind::cyclic ? "cyclic" : "linear"; }

Algebra Algebra::validate(std::vector<int> entries, Kind kind) {
    if (entries.empty()) throw EmptySeries();
    const int n = static_cast<int>(entries.size());
    auto at = [&](int i) { return entries[static_cast<std::size_t>(i - 1)]; };

    if (kind == Kind::linear) {
        if (at(1) != 1) throw AdmissibilityError(1, "linear series must start with c_1 = 1");
        for (int i = 2; i <= n; ++i) {
            if (at(i) < 2)
                throw AdmissibilityError(i, "c_i = " + std::to_string(at(i)) + " < 2 (disconnected)");
            if (at(i) > at(i - 1) + 1)
                throw AdmissibilityError(i, "c_i = " + std::to_string(at(i)) + " > c_{i-1}+1 = " +
                                                std::to_string(at(i - 1) + 1));
        }
    } else {
        for (int i = 1; i <= n; ++i)
            if (at(i) < 2)
                throw AdmissibilityError(i, "c_i = " + std::to_string(at(i)) + " < 2 in a cyclic series");
        for (int i = 1; i <= n; ++i) {
            int prev = at(i == 1 ? n : i - 1);
            if (at(i) > prev + 1)
                throw AdmissibilityError(i, "c_i = " + std::to_string(at(i)) + " > c_{i-1}+1 = " +
                                                std::to_string(prev + 1));
        }
    }

    Algebra a;
    a.kind_ = kind;
    a.c_ = std::move(entries);
    a.maxlen_ = *std::max_element(a.c_.begin(), a.c_.end());
    a.inj_len_.assign(static_cast<std::size_t>(n), 0);
    a.proj_socle_.assign(static_cast<std::size_t>(n), 0);
    a.torsionless_flag_.assign(static_cast<std::size_t>(n), 0);

    for (int v = 1; v <= n; ++v) {
        int best = 0;
        for (int len = 1; len <= a.maxlen_; ++len) {
            long long t = static_cast<long long>(v) + len - 1;
            if (!a.in_range(t)) break;
            if (len <= a.c(a.vertex(t))) best = len;
        }
        a.inj_len_[static_cast<std::size_t>(v - 1)] = best;
    }
    for (int i = 1; i <= n; ++i) {
        int s = a.vertex(static_cast<long long>(i) - a.c(i) + 1);
        a.proj_socle_[static_cast<std::size_t>(i - 1)] = s;
        a.torsionless_flag_[static_cast<std::size_t>(s - 1)] = 1;
    }
    for (int v = 1; v <= n; ++v)
        if (a.torsionless_flag_[static_cast<std::size_t>(v - 1)]) a.torsionless_.push_back(v);
    return a;
}

int Algebra::vertex(long long x) const {
    if (kind_ == Kind::linear) return static_cast<int>(x);
    long long n = static_cast<long long>(c_.size());
    long long r = (x - 1) % n;
    if (r < 0) r += n;
    return static_cast<int>(r + 1);
}

bool Algebra::in_range(long long x) const {
    if (kind_ == Kind::cyclic) return true;
    return x >= 1 && x <= static_cast<long long>(c_.size());
}

bool Algebra::is_torsionless_simple(int v) const {
    return torsionless_flag_[static_cast<std::size_t>(vertex(v) - 1)] != 0;
}

std::vector<int> smallest_rotation(const std::vector<int>& entries) {
    std::vector<int> best = entries;
    std::vector<int> rot = entries;
    for (std::size_t k = 1; k < entries.size(); ++k) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (rot < best) best = rot;
    }
    return best;
}

std::vector<int> Algebra::canonical_entries() const {
    return kind_ == Kind::cyclic ? smallest_rotation(c_) : c_;
}

Algebra Algebra::canonical() const { return validate(canonical_entries(), kind_); }

bool Algebra::operator==(const Algebra& other) const {
    return kind_ == other.kind_ && canonical_entries() == other.canonical_entries();
}

int opposite_vertex(const Algebra& a, int v) {
    return a.cyclic() ? a.vertex(1LL - v) : a.n() + 1 - v;
}

Algebra opposite_labelled(const Algebra& a) {
    std::vector<int> op(static_cast<std::size_t>(a.n()), 0);
    for (int v = 1; v <= a.n(); ++v) op[static_cast<std::size_t>(opposite_vertex(a, v) - 1)] = a.inj_len(v);
    return Algebra::validate(std::move(op), a.kind());
}

Algebra opposite(const Algebra& a) {
    Algebra op = opposite_labelled(a);
    return a.cyclic() ? op.canonical() : op;
}

namespace {

void extend(std::vector<int>& cur, int n, int max_c, Kind kind,
            const std::function<void(const Algebra&)>& fn) {
    const int i = static_cast<int>(cur.size()) + 1;
    if (i > n) {
        if (kind == Kind::cyclic) {
            if (cur.front() > cur.back() + 1) return;
            if (smallest_rotation(cur) != cur) return;
        }
        fn(Algebra::validate(cur, kind));
        return;
    }
    int lo = 2;
    int hi = max_c;
    if (kind == Kind::linear && i == 1) lo = hi = 1;
    if (i > 1) hi = std::min(hi, cur.back() + 1);
    for (int v = lo; v <= hi; ++v) {
        cur.push_back(v);
        extend(cur, n, max_c, kind, fn);
        cur.pop_back();
    }
}

}  // namespace

void for_each_series(int n, int max_c, Kind kind, const std::function<void(const Algebra&)>& fn) {
    if (n < 1) return;
    if (kind == Kind::linear && max_c < 1) return;
    if (kind == Kind::cyclic && max_c < 2) return;
    std::vector<int> cur;
    extend(cur, n, max_c, kind, fn);
}

std::vector<Algebra> enumerate(int n, int max_c, Kind kind) {
    std::vector<Algebra> out;
    for_each_series(n, max_c, kind, [&](const Algebra& a) { out.push_back(a); });
    return out;
}

std::string serialize(const Algebra& a) {
    std::string s = to_string(a.kind()) + ":";
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        if (i) s += ',';
        s += std::to_string(a.entries()[i]);
    }
    return s;
}

Algebra parse(std::string_view text) {
    std::size_t colon = text.find(':');
    if (colon == std::string_view::npos) throw ParseError(0, "expected \"kind:c_1,...,c_n\"");
    auto trim = [](std::string_view s, std::size_t& offset) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
            s.remove_prefix(1);
            ++offset;
        }
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    std::size_t off = 0;
    std::string_view kind_text = trim(text.substr(0, colon), off);
    Kind kind;
    if (kind_text == "linear")
        kind = Kind::linear;
    else if (kind_text == "cyclic")
        kind = Kind::cyclic;
    else
        throw ParseError(off, "unknown kind \"" + std::string(kind_text) + "\"");

    std::vector<int> entries;
    std::size_t pos = colon + 1;
    std::size_t ignored = 0;
    if (trim(text.substr(pos), ignored).empty()) throw EmptySeries();
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::size_t end = comma == std::string_view::npos ? text.size() : comma;
        std::size_t field_off = pos;
        std::string_view field = trim(text.substr(pos, end - pos), field_off);
        if (field.empty()) throw ParseError(field_off, "missing integer");
        int value = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (ec != std::errc() || ptr != field.data() + field.size())
            throw ParseError(field_off, "not an integer: \"" + std::string(field) + "\"");
        entries.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Algebra::validate(std::move(entries), kind);
}

}  // namespace nakayama
