#include "report.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "nakayama/epsilon.hpp"
#include "nakayama/homdim.hpp"
#include "nakayama/homext.hpp"
#include "nakayama/perm.hpp"

namespace nakayama::tools {

namespace {

Json opt_vertex(std::optional<int> v) { return v ? Json(*v) : Json(nullptr); }

Json module_list(const std::vector<Module>& ms) {
    Json out = Json::array();
    for (const auto& m : ms) out.push_back(to_string(m));
    return out;
}

std::string cell(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_null()) return "-";
    return j.dump();
}

}  // namespace

Json dim_json(Dim d) { return finite(d) ? Json(d) : Json("inf"); }

Analysis analyze(const Algebra& a) {
    Analysis an;
    Json& doc = an.doc;
    CheckReport checks;

    doc["algebra"] = {{"kind", to_string(a.kind())},
                      {"kupisch", a.entries()},
                      {"n", a.n()},
                      {"text", serialize(a)},
                      {"canonical", serialize(a.canonical())}};

    const auto profiles = dimension_profiles(a);
    std::optional<HomPermutation> perm;
    try {
        perm = permutation(a);
    } catch (const Contradiction& e) {
        checks.expect(e.check(), false, e.witness());
    }

    Json simples = Json::array();
    int dep = 0;
    for (const auto& p : profiles) {
        Json row;
        row["vertex"] = p.vertex;
        row["pd_S"] = dim_json(p.pd_S);
        row["id_S"] = dim_json(p.id_S);
        row["pd_IS"] = dim_json(p.pd_IS);
        row["id_PS"] = dim_json(p.id_PS);
        row["e"] = dim_json(p.e);
        row["e_star"] = dim_json(p.e_star);
        row["f"] = dim_json(p.f);
        row["f_star"] = dim_json(p.f_star);
        row["g"] = p.g_defined ? dim_json(p.g) : Json(nullptr);
        row["a"] = dim_json(p.a);
        row["a_prime"] = dim_json(p.a_prime);
        row["del"] = dim_json(p.del);
        row["des"] = dim_json(p.des);
        try {
            const int g = grade(a, p.vertex);
            dep = std::max(dep, g);
            row["grade"] = g;
        } catch (const Contradiction& e) {
            checks.expect(e.check(), false, e.witness());
            row["grade"] = nullptr;
        }
        row["h"] = perm ? Json((*perm)(p.vertex)) : Json(nullptr);
        row["h_star"] = perm ? Json(perm->inverse[static_cast<std::size_t>(p.vertex - 1)]) : Json(nullptr);
        row["psi"] = opt_vertex(psi(a, p.vertex));
        row["gamma"] = opt_vertex(gamma(a, p.vertex));
        row["torsionless"] = a.is_torsionless_simple(p.vertex);
        row["psi_cyclic"] = p.psi_cyclic;
        row["gamma_cyclic"] = p.gamma_cyclic;
        simples.push_back(row);
    }
    doc["simples"] = simples;

    const AlgebraSummary s = finitistic_summary(a, false);
    Json summary;
    summary["finpro"] = dim_json(s.finpro);
    summary["fininj"] = dim_json(s.fininj);
    summary["del_A"] = dim_json(s.del_A);
    summary["des_A"] = dim_json(s.des_A);
    summary["gldim"] = dim_json(s.gldim);
    summary["depth"] = dep;
    summary["a_A"] = s.a_A;
    summary["a_extended"] = s.a_extended;
    summary["c_psi"] = s.c_psi;
    summary["c_gamma"] = s.c_gamma;
    summary["gorenstein"] = s.gorenstein;
    summary["selfinjective"] = s.selfinjective;
    summary["permutation"] = perm ? Json(perm->cycles()) : Json(nullptr);
    summary["permutation_one_line"] = perm ? Json(perm->one_line()) : Json(nullptr);
    if (!a.cyclic()) summary["dyck"] = kupisch_to_dyck(a);
    summary["degenerate"] = !a.cyclic() && a.n() == 1;
    doc["summary"] = summary;

    const SimpleClasses cls = classify(a);
    Json classes;
    classes["r"] = cls.r;
    classes["torsionless"] = cls.torsionless;
    classes["id_ge2"] = cls.id_ge2;
    classes["pd_ge2"] = cls.pd_ge2;
    classes["divisible"] = cls.divisible;
    classes["peaks"] = module_list(cls.peaks);
    classes["valleys"] = module_list(cls.valleys);
    classes["minimal_projectives"] = module_list(cls.minimal_projectives);
    classes["minimal_injectives"] = module_list(cls.minimal_injectives);
    Json deltas = Json::array();
    for (const auto& d : delta_modules(a)) deltas.push_back({{"T", d.t}, {"module", to_string(d.module)}});
    classes["delta"] = deltas;
    try {
        EpsilonAlgebra eps = epsilon_algebra(a);
        Json comps = Json::array();
        for (const auto& c : eps.components) comps.push_back(serialize(c));
        classes["epsilon"] = {{"components", comps}, {"lengths", eps.lengths}};
    } catch (const FiltrationError& e) {
        classes["epsilon"] = {{"error", e.what()}};
    }
    const ReflexiveChain chain = reflexive_chain(a);
    classes["reflexive_chain"] = {{"r0", module_list(chain.r0)},
                                  {"omega2", module_list(chain.omega2)},
                                  {"filtered", module_list(chain.filtered)},
                                  {"reflexive", module_list(chain.reflexive)},
                                  {"proper", {chain.proper[0], chain.proper[1], chain.proper[2]}}};
    doc["classes"] = classes;

    Json tie_rows = Json::array();
    if (perm) {
        for (const Tie& t : ties(a)) {
            Json row;
            row["T"] = t.t;
            row["S"] = t.s;
            row["z"] = t.z;
            row["parity"] = t.parity == Parity::odd ? "odd" : "even";
            row["proj_resolution"] = module_list(t.proj_resolution);
            row["proj_terminal"] = to_string(t.proj_terminal);
            row["inj_coresolution"] = module_list(t.inj_coresolution);
            row["inj_terminal"] = to_string(t.inj_terminal);
            row["peak"] = t.peak ? Json(to_string(*t.peak)) : Json(nullptr);
            tie_rows.push_back(row);
        }
    }
    doc["ties"] = tie_rows;

    checks.merge(check_theorems(a));
    checks.merge(check_homext(a));
    checks.merge(check_permutation(a));
    checks.merge(check_epsilon(a));

    Json findings;
    Json below = Json::array();
    for (const auto& p : profiles)
        if (p.del < p.e) below.push_back(p.vertex);
    findings["del_below_e"] = below;
    std::vector<int> f, fs, del, des;
    for (const auto& p : profiles) {
        f.push_back(p.f);
        fs.push_back(p.f_star);
        del.push_back(p.del);
        des.push_back(p.des);
    }
    for (auto* v : {&f, &fs, &del, &des}) std::sort(v->begin(), v->end());
    findings["f_f_star_multisets_equal"] = f == fs;
    findings["del_des_multisets_equal"] = del == des;
    Json contra = Json::array();
    an.failures = checks.failures();
    for (const auto& c : an.failures) contra.push_back({{"check", c.name}, {"witness", c.witness}});
    findings["contradictions"] = contra;
    findings["checks_run"] = static_cast<long>(checks.results().size());
    doc["findings"] = findings;
    return an;
}

std::string format_json(const Analysis& an) { return an.doc.dump(2) + "\n"; }

std::string format_table(const Analysis& an) {
    const Json& d = an.doc;
    std::ostringstream out;
    out << d["algebra"]["text"].get<std::string>() << "\n";
    const char* cols[] = {"vertex", "pd_S", "pd_IS", "id_S", "id_PS", "e", "e_star", "f",
                          "f_star", "a",    "del",   "des",  "grade", "h"};
    const char* sep = "";
    for (const char* c : cols) out << std::exchange(sep, "\t") << c;
    out << "\n";
    for (const auto& row : d["simples"]) {
        sep = "";
        for (const char* c : cols) out << std::exchange(sep, "\t") << cell(row[c]);
        out << "\n";
    }
    const Json& s = d["summary"];
    out << "finpro " << cell(s["finpro"]) << "  fininj " << cell(s["fininj"]) << "  del A " << cell(s["del_A"])
        << "  des A " << cell(s["des_A"]) << "  gldim " << cell(s["gldim"]) << "  depth " << cell(s["depth"])
        << "  a(A) " << cell(s["a_A"]) << "\n";
    out << "h " << cell(s["permutation"]) << "  r " << cell(d["classes"]["r"]) << "\n";
    const Json& contra = d["findings"]["contradictions"];
    if (contra.empty()) {
        out << "checks passed: " << d["findings"]["checks_run"] << "\n";
    } else {
        for (const auto& c : contra)
            out << "CONTRADICTION " << c["check"].get<std::string>() << ": " << c["witness"].get<std::string>()
                << "\n";
    }
    return out.str();
}

}  // namespace nakayama::tools
