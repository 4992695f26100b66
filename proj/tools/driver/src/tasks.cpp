#include "frobvol/driver/tasks.hpp"

#include <functional>
#include <future>
#include <map>
#include <random>
#include <sstream>

#include "frobvol/artinian/algebra.hpp"
#include "frobvol/artinian/certificates.hpp"
#include "frobvol/artinian/parseval.hpp"
#include "frobvol/errors.hpp"
#include "frobvol/gradedla/chain.hpp"
#include "frobvol/gradedla/resolution.hpp"
#include "frobvol/pfaffcomb/conducting.hpp"
#include "frobvol/pfaffcomb/multigraph.hpp"
#include "frobvol/pfaffcomb/pfaffian.hpp"
#include "frobvol/poly/text.hpp"

namespace frobvol::driver {

using coeff::FiniteField;
using coeff::Frac;
using coeff::GF;
using gradedla::Grading;

namespace {

constexpr const char* PASS = "PASS";
constexpr const char* FAIL = "FAIL";
constexpr const char* CERTIFIED = "CERTIFIED";
constexpr const char* EVIDENCE = "EVIDENCE";
constexpr const char* INCONCLUSIVE = "INCONCLUSIVE";

// Task context: options with command-line overrides.
struct Ctx {
    const Problem& pr;
    const TaskSpec& task;
    const RunOptions& run;

    template <class T>
    T opt(const std::string& key, T fallback) const {
        if (!task.options.contains(key)) return fallback;
        try {
            return task.options.at(key).get<T>();
        } catch (const nlohmann::json::exception& e) {
            throw InvalidInput("option '" + key + "': " + e.what());
        }
    }
    uint64_t seed() const { return run.seed.value_or(opt<uint64_t>("seed", pr.desc.parameters.seed)); }
    size_t trials(size_t fallback) const { return run.trials.value_or(opt<size_t>("trials", fallback)); }
    int degree_bound(int fallback) const { return run.degree_bound.value_or(opt<int>("degree_bound", fallback)); }
    size_t nparams() const { return opt<size_t>("nparams", pr.desc.parameters.count); }
    uint32_t ext_degree() const { return opt<uint32_t>("ext_degree", pr.desc.parameters.ext_degree); }
    PolyGF core() const {
        auto text = opt<std::string>("core", pr.desc.core.value_or(""));
        if (text.empty()) throw InvalidInput("no core given");
        return resolve_core(pr, text);
    }
};

Json fail_with(Json out, const std::string& witness) {
    out["verdict"] = FAIL;
    out["witness"] = witness;
    return out;
}

std::string join(const std::vector<size_t>& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
}

template <class C>
std::vector<poly::Poly<C>> explicit_forms(const Problem& pr, const typename C::Field* field) {
    std::vector<poly::Poly<C>> out;
    for (const auto& s : pr.desc.parameters.forms) out.push_back(poly::parse_poly<C>(s, pr.ring, field));
    return out;
}

// Resolution from the descriptor, or computed from the ideal with the
// descriptor's twists as a template.
gradedla::FreeComplex<GF> resolution_of(const Ctx& c, int bound, std::string& source) {
    const auto& inst = c.pr.finite();
    const auto& spec = c.pr.desc.resolution;
    if (spec && !spec->differentials.empty()) {
        source = "descriptor";
        return complex_from_spec(*spec, inst.ring, inst.field);
    }
    source = "computed";
    std::optional<std::vector<std::vector<int>>> tmpl;
    if (spec) {
        tmpl.emplace();
        for (const auto& t : spec->twists) {
            std::vector<int> s;
            for (int a : t) s.push_back(-a);
            tmpl->push_back(std::move(s));
        }
    }
    auto g = Grading::fine(inst.ring->nvars(), inst.ideal);
    return gradedla::build_graded_resolution<GF>(inst.ring, inst.field, inst.ideal, bound, g, tmpl);
}

Json check_report_json(const gradedla::CheckReport& r) {
    Json j{{"ok", r.ok}};
    if (!r.failures.empty()) j["failures"] = r.failures;
    if (r.suppressed) j["suppressed"] = r.suppressed;
    return j;
}

Json task_hilbert(const Ctx& c) {
    Json out;
    const int bound = c.degree_bound(24);
    std::vector<size_t> h;
    int top = -1;
    bool gorenstein = false;
    if (c.pr.frac || c.pr.desc.parameters.mode == "explicit") {
        if (c.pr.frac) {
            artinian::ArtinianAlgebra<Frac> A(c.pr.ring, c.pr.frac, c.pr.frac_ideal,
                                              explicit_forms<Frac>(c.pr, c.pr.frac), bound);
            h = A.hilbert(), top = A.top_degree(), gorenstein = A.is_gorenstein();
        } else {
            const auto& inst = c.pr.finite();
            artinian::ArtinianAlgebra<GF> A(inst.ring, inst.field, inst.ideal, explicit_forms<GF>(c.pr, inst.field),
                                            bound);
            h = A.hilbert(), top = A.top_degree(), gorenstein = A.is_gorenstein();
        }
        out["parameters"] = "explicit";
    } else {
        const auto& inst = c.pr.finite();
        std::mt19937_64 rng(c.seed());
        const auto& K = FiniteField::get(inst.field->characteristic(), c.ext_degree());
        auto red = artinian::random_reduction(inst, K, c.nparams(), bound, rng);
        h = red.algebra->hilbert(), top = red.algebra->top_degree(), gorenstein = red.algebra->is_gorenstein();
        out["parameters"] = "random over GF(" + std::to_string(K.characteristic()) + "^" +
                            std::to_string(K.degree()) + ")";
        out["redraws"] = red.redraws;
        out["seed"] = c.seed();
    }
    out["hilbert"] = h;
    out["top_degree"] = top;
    out["gorenstein"] = gorenstein;
    out["verdict"] = PASS;
    if (c.pr.desc.resolution) {
        auto num = hilbert_from_twists(c.pr.desc.resolution->twists);
        out["hilbert_from_resolution"] = num;
        std::vector<int64_t> hh(h.begin(), h.end());
        if (num != hh) return fail_with(out, "hilbert " + join(h) + " differs from the resolution numerator");
    }
    if (c.task.options.contains("expect")) {
        auto want = c.opt<std::vector<size_t>>("expect", {});
        out["expect"] = want;
        if (want != h) return fail_with(out, "hilbert " + join(h) + " != expected " + join(want));
    }
    return out;
}

Json task_verify_complex(const Ctx& c) {
    const auto& inst = c.pr.finite();
    const int bound = c.degree_bound(8);
    std::string source;
    auto cx = resolution_of(c, bound, source);
    Json out{{"source", source}, {"betti", gradedla::betti_string(cx)}, {"degree_bound", bound}};
    const bool exact = c.opt<bool>("exactness", true);
    out["exactness_checked"] = exact;
    auto g = Grading::fine(inst.ring->nvars(), inst.ideal);
    auto rep = gradedla::verify_complex(cx, inst.ideal, bound, exact, g);
    out["check"] = check_report_json(rep);
    out["verdict"] = rep.ok ? PASS : FAIL;
    if (!rep.ok) out["witness"] = rep.failures.front();
    return out;
}

Json task_solve_chain_map(const Ctx& c) {
    const auto& inst = c.pr.finite();
    const uint32_t p = inst.field->characteristic();
    std::string source;
    auto cx = resolution_of(c, c.degree_bound(8), source);
    Json out{{"source", source}, {"betti", gradedla::betti_string(cx)}};
    if (cx.modules.back().rank() != 1) throw InvalidInput("the top module must have rank one");
    const auto top = c.opt<std::string>("top", "core");
    PolyGF h = cx.zero_poly();
    if (top == "core") {
        h = c.core();
        out["core_terms"] = h.size();
    } else if (top != "zero") {
        throw InvalidInput("top must be core or zero");
    }
    out["top"] = top;
    gradedla::ChainMapConstraints<GF> cons;
    cons.top = gradedla::GradedMatrix<GF>{gradedla::FreeModule{{int(p) * cx.modules.back().shifts[0]}},
                                          cx.modules.back(), {{h}}};
    auto g = Grading::fine(inst.ring->nvars(), inst.ideal);
    auto sol = gradedla::solve_chain_map(cx, cons, g);
    out["sat"] = sol.sat;
    out["stats"] = Json{{"unknowns", sol.stats.unknowns},
                        {"equations", sol.stats.equations},
                        {"components", sol.stats.components},
                        {"rank", sol.stats.rank},
                        {"fine_grading", sol.stats.fine_grading}};
    const auto expect = c.opt<std::string>("expect", "sat");
    out["expect"] = expect;
    if (sol.sat) {
        auto v = gradedla::verify_chain_map(cx, sol.map);
        out["verified"] = v.ok;
        if (!v.ok) return fail_with(out, v.failures.front());
        if (expect == "unsat") return fail_with(out, "a chain map exists");
        out["verdict"] = PASS;
    } else {
        out["unsat_witness"] = sol.witness;
        if (expect == "sat") return fail_with(out, sol.witness);
        // Infeasibility of the linear system, confirmed independently.
        out["verdict"] = EVIDENCE;
    }
    return out;
}

uint32_t edge_m(const Problem& pr) {
    if (!pr.desc.ring.edge_m) throw InvalidInput("this task needs an edge ring");
    return pr.desc.ring.edge_m;
}

Json task_explicit_chain_map(const Ctx& c) {
    const auto& inst = c.pr.finite();
    edge_m(c.pr);
    if (inst.field->characteristic() != 2) throw InvalidInput("the explicit chain map is for characteristic 2");
    gradedla::FreeComplex<GF> cx;
    std::string source = "buchsbaum-eisenbud";
    if (c.pr.desc.resolution && !c.pr.desc.resolution->differentials.empty()) {
        source = "descriptor";
        cx = complex_from_spec(*c.pr.desc.resolution, inst.ring, inst.field);
    } else {
        cx = pfaffcomb::buchsbaum_eisenbud(inst.ring, inst.field);
    }
    Json out{{"source", source}};
    auto phi = pfaffcomb::explicit_phi_char2(cx);
    auto chain = gradedla::verify_chain_map(cx, phi);
    auto middle = pfaffcomb::check_middle_square(inst.ring, inst.ideal);
    auto H0 = c.pr.desc.core ? c.core() : pfaffcomb::pfaffian_core(inst.ideal);
    auto left = pfaffcomb::check_left_square(inst.ideal, H0);
    out["chain_map"] = check_report_json(chain);
    out["middle_square"] = check_report_json(middle);
    out["left_square"] = check_report_json(left);
    for (const auto* r : {&chain, &middle, &left})
        if (!r->ok) return fail_with(out, r->failures.front());
    out["verdict"] = PASS;
    return out;
}

Json task_pfaffian_core(const Ctx& c) {
    const auto& inst = c.pr.finite();
    const uint32_t m = c.opt<uint32_t>("m", edge_m(c.pr));
    auto oc = pfaffcomb::enumerate_oc(m);
    auto f_oc = pfaffcomb::generating_function(oc, inst.ring, inst.field);
    auto H0 = c.pr.desc.core ? c.core() : pfaffcomb::pfaffian_core(inst.ideal);
    Json out{{"m", m}, {"oc_count", oc.size()}, {"core_terms", H0.size()}, {"oc_terms", f_oc.size()}};
    if (H0.size() <= 64) out["core"] = poly::to_string(H0);
    if (H0 != f_oc) return fail_with(out, poly::to_string(H0 - f_oc));
    out["verdict"] = PASS;
    return out;
}

Json task_enumerate(const Ctx& c) {
    const auto& inst = c.pr.finite();
    const uint32_t m = c.opt<uint32_t>("m", edge_m(c.pr));
    const auto kind = c.opt<std::string>("kind", "oc");
    Json out{{"m", m}, {"kind", kind}};
    if (kind == "oc") {
        auto oc = pfaffcomb::enumerate_oc(m);
        out["count"] = oc.size();
        std::set<pfaffcomb::WeightFunction> distinct(oc.begin(), oc.end());
        out["distinct"] = distinct.size();
        if (distinct.size() != oc.size()) return fail_with(out, "repeated weight function");
    } else if (kind == "matchings") {
        std::vector<size_t> counts;
        for (uint32_t v = 1; v <= m; ++v) {
            auto T = pfaffcomb::enumerate_matchings(m, v);
            counts.push_back(T.size());
            // With the Pfaffian ideal loaded, generating functions are its generators.
            if (inst.ideal.size() == m && c.pr.desc.ring.edge_m == m &&
                pfaffcomb::generating_function(T, inst.ring, inst.field) != inst.ideal[v - 1])
                return fail_with(out, "matchings avoiding " + std::to_string(v) + " do not give generator " +
                                          std::to_string(v));
        }
        out["counts"] = counts;
    } else {
        throw InvalidInput("kind must be oc or matchings");
    }
    out["verdict"] = PASS;
    return out;
}

Json task_check_conducting(const Ctx& c) {
    auto H0 = c.core();
    const uint32_t p = c.pr.characteristic();
    auto rep = pfaffcomb::check_conducting(H0, p);
    Json out{{"support_size", rep.support_size}, {"witnesses", rep.witnesses.size()}};
    if (!rep.witnesses.empty()) {
        auto w = PolyGF::term(H0.ring(), H0.field(), rep.witnesses.front(), H0.field()->one());
        out["first_witness"] = poly::to_string(w);
    }
    out["verdict"] = rep.pass ? PASS : INCONCLUSIVE;
    return out;
}

// Drops the leading term; a pure power of a variable can sit in the
// kernel of the split and is not a reliable corruption.
PolyGF corrupt(const PolyGF& H0) {
    if (H0.size() >= 2) {
        const auto& [m, c] = H0.terms().front();
        return H0 - PolyGF::term(H0.ring(), H0.field(), m, c);
    }
    const uint32_t deg = H0.is_zero() ? 1 : uint32_t(H0.degree());
    for (size_t v = 0; v < H0.nvars(); ++v) {
        std::vector<poly::Exponent> e(H0.nvars(), 0);
        e[v] = poly::Exponent(deg);
        auto t = PolyGF::term(H0.ring(), H0.field(), poly::Monomial(e), H0.field()->one());
        if ((H0 + t).size() > H0.size()) return H0 + t;
    }
    throw InvalidInput("no corruption available");
}

Json parseval_trials_json(const artinian::ParsevalReport& rep) {
    Json arr = Json::array();
    for (const auto& t : rep.trials) {
        Json j{{"seed", t.seed},         {"redraws", t.redraws},       {"hilbert", t.hilbert},
               {"top_degree", t.top_degree}, {"monomials", t.monomials}, {"nonzero", t.nonzero},
               {"consistent", t.consistent}, {"renormalizable", t.renormalizable}, {"lambda", t.lambda}};
        if (!t.failure.empty()) j["failure"] = t.failure;
        arr.push_back(j);
    }
    return arr;
}

Json task_check_parseval(const Ctx& c) {
    const auto& inst = c.pr.finite();
    auto H0 = c.core();
    artinian::ParsevalOptions opt;
    opt.nparams = c.nparams();
    opt.trials = c.trials(20);
    opt.seed = c.seed();
    opt.ext_degree = c.ext_degree();
    opt.degree_bound = c.degree_bound(24);
    opt.parallel = c.run.parallel;
    auto rep = artinian::parseval_check_abstract(inst, H0, opt);
    Json out{{"trials", parseval_trials_json(rep)}, {"pass", rep.pass}, {"seed", opt.seed}};
    if (!rep.pass) {
        for (const auto& t : rep.trials)
            if (!t.failure.empty()) return fail_with(out, t.failure);
        return fail_with(out, "identity fails");
    }
    if (c.opt<bool>("control", true)) {
        auto bad = corrupt(H0);
        auto copt = opt;
        copt.trials = 1;
        auto crep = artinian::parseval_check_abstract(inst, bad, copt);
        Json cj{{"core_change", poly::to_string(bad - H0)}, {"pass", crep.pass}};
        if (!crep.trials.empty() && !crep.trials[0].failure.empty()) cj["failure"] = crep.trials[0].failure;
        out["control"] = cj;
        if (crep.pass) return fail_with(out, "corrupted core " + poly::to_string(bad) + " passed");
    }
    out["verdict"] = PASS;
    return out;
}

std::vector<std::vector<size_t>> blocks_of(const Ctx& c) {
    auto named = c.opt<std::vector<std::vector<std::string>>>("blocks", {});
    if (named.empty()) throw InvalidInput("blocks are required");
    std::vector<std::vector<size_t>> out;
    for (const auto& b : named) {
        std::vector<size_t> idx;
        for (const auto& v : b) idx.push_back(c.pr.ring->require_index(v));
        out.push_back(std::move(idx));
    }
    return out;
}

Json task_check_parseval_expanded(const Ctx& c) {
    const auto& inst = c.pr.finite();
    auto H0 = c.core();
    auto blocks = blocks_of(c);
    auto names = c.opt<std::vector<std::string>>("names", {});
    const int bound = c.degree_bound(16);
    auto rep = artinian::parseval_check_expanded(inst, H0, blocks, names, bound);
    Json rows = Json::array();
    for (const auto& r : rep.rows)
        rows.push_back(Json{{"w", r.w}, {"vol", r.vol}, {"expanded", r.expanded}, {"abstract", r.abstract},
                            {"agree", r.agree}});
    Json out{{"hilbert", rep.hilbert}, {"top_degree", rep.top_degree}, {"lambda", rep.lambda}, {"rows", rows}};
    if (!rep.pass) return fail_with(out, rep.failure.empty() ? "expanded and abstract sides differ" : rep.failure);
    if (c.opt<bool>("control", true)) {
        auto bad = artinian::parseval_check_expanded(inst, H0.zero(), blocks, names, bound);
        out["control"] = Json{{"core", "0"}, {"pass", bad.pass}};
        if (bad.pass) return fail_with(out, "the zero core passed");
    }
    out["verdict"] = PASS;
    return out;
}

Json task_check_differential(const Ctx& c) {
    const auto& inst = c.pr.finite();
    auto H0 = c.core();
    auto blocks = blocks_of(c);
    auto names = c.opt<std::vector<std::string>>("names", {});
    auto orders = c.opt<std::vector<std::vector<std::vector<uint32_t>>>>("orders", {});
    if (orders.empty()) throw InvalidInput("orders are required");
    Json runs = Json::array();
    std::string witness;
    for (const auto& B : orders) {
        auto rep = artinian::differential_identity_check(inst, H0, blocks, B, names, c.degree_bound(16));
        Json rows = Json::array();
        for (const auto& r : rep.rows)
            rows.push_back(Json{{"w", r.w}, {"derivative", r.derivative}, {"rhs", r.rhs}, {"agree", r.agree}});
        runs.push_back(Json{{"orders", B},
                            {"lambda", rep.lambda},
                            {"pth_powers_constant", rep.pth_powers_constant},
                            {"rows", rows},
                            {"pass", rep.pass}});
        if (!rep.pass && witness.empty()) witness = rep.failure.empty() ? "derivative differs" : rep.failure;
    }
    Json out{{"runs", runs}};
    if (!witness.empty()) return fail_with(out, witness);
    out["verdict"] = PASS;
    return out;
}

Json task_check_lefschetz(const Ctx& c) {
    const auto& inst = c.pr.finite();
    artinian::LefschetzOptions opt;
    opt.nparams = c.nparams();
    opt.trials = c.trials(1);
    opt.seed = c.seed();
    opt.ext_degree = c.ext_degree();
    opt.degree_bound = c.degree_bound(24);
    auto rep = artinian::lefschetz_check(inst, opt);
    Json trials = Json::array();
    for (const auto& t : rep.trials) {
        Json levels = Json::array();
        for (const auto& l : t.levels)
            levels.push_back(Json{{"i", l.i},
                                  {"power", 0},
                                  {"source_dim", l.source_dim},
                                  {"target_dim", l.target_dim},
                                  {"rank", l.rank},
                                  {"full", l.full()}});
        const int s = int(t.hilbert.size()) - 1;
        for (auto& l : levels) l["power"] = s - 2 * l["i"].get<int>();
        trials.push_back(Json{{"seed", t.seed}, {"redraws", t.redraws}, {"hilbert", t.hilbert}, {"levels", levels}});
    }
    Json out{{"trials", trials}, {"certified", rep.certified}};
    out["verdict"] = rep.verdict == "CERTIFIED" ? CERTIFIED : INCONCLUSIVE;
    return out;
}

Json task_check_anisotropy(const Ctx& c) {
    const auto& inst = c.pr.finite();
    artinian::AnisotropyOptions opt;
    opt.nparams = c.nparams();
    opt.i = c.opt<uint32_t>("i", 1);
    opt.k = c.opt<uint32_t>("k", 0);
    opt.r = c.opt<uint32_t>("r", 3);
    opt.seed = c.seed();
    opt.max_exponent = c.opt<uint32_t>("max_exponent", 3);
    opt.degree_bound = c.degree_bound(24);
    auto rep = artinian::anisotropy_semilinear_check(inst, opt);
    Json out{{"i", opt.i},       {"k", opt.k},       {"r", opt.r},           {"rank", rep.rank},
             {"rows", rep.rows}, {"cols", rep.cols}, {"hilbert", rep.hilbert}, {"redraws", rep.redraws},
             {"plan", rep.plan}, {"values", rep.values}, {"label", rep.label}};
    out["verdict"] = rep.full_rank ? EVIDENCE : INCONCLUSIVE;
    return out;
}

template <class C>
Json volume_presented_impl(const Ctx& c, const typename C::Field* field) {
    using P = poly::Poly<C>;
    if (!c.pr.desc.module) throw InvalidInput("the descriptor has no module");
    const auto& ms = *c.pr.desc.module;
    auto parse = [&](const std::string& s) { return poly::parse_poly<C>(s, c.pr.ring, field); };
    artinian::ModulePresentation<C> M{c.pr.ring, field, {}, {}};
    for (int t : ms.generator_twists) M.gen_degrees.push_back(-t);
    for (const auto& rel : ms.relations) {
        gradedla::ModuleElement<C> v;
        for (const auto& s : rel) v.push_back(parse(s));
        M.relations.push_back(std::move(v));
    }
    gradedla::ModuleElement<C> z0;
    for (const auto& s : ms.normalization) z0.push_back(parse(s));
    auto forms = explicit_forms<C>(c.pr, field);
    auto V = artinian::volume_presented(M, forms, z0);

    const uint32_t p = field->characteristic();
    const size_t r = M.gen_degrees.size();
    Json table = Json::object();
    Json shapes = Json::array();
    std::string witness;
    auto expect = c.opt<std::map<std::string, std::string>>("expect", {});
    for (size_t i = 0; i < r; ++i) {
        if (M.gen_degrees[i] > 0) continue;
        for (const auto& w : poly::monomials_of_degree(c.pr.ring->nvars(), uint32_t(-M.gen_degrees[i]))) {
            gradedla::ModuleElement<C> v(r, P(c.pr.ring, field));
            v[i] = P::term(c.pr.ring, field, w, field->one());
            const std::string key = poly::to_string(v[i]) + "*e" + std::to_string(i + 1);
            const C val = V(v);
            table[key] = val.to_string();
            if (auto it = expect.find(key); it != expect.end()) {
                auto want = parse(it->second);
                const C wv = want.is_zero() ? field->zero() : want.terms().front().second;
                if (!(want.is_zero() || want.degree() == 0) || wv != val)
                    if (witness.empty()) witness = key + " = " + val.to_string() + ", expected " + it->second;
            }
            // Vol(x_v e_i) = c_v^{p-1} Vol(x_v e_i)^p with c_v the coefficient of x_v in the form.
            if (w.degree() == 1 && forms.size() == 1) {
                size_t var = 0;
                while (w[var] == 0) ++var;
                C cv = field->zero();
                for (const auto& [m, coef] : forms[0].terms())
                    if (m == w) cv = coef;
                const bool ok = val == cv.pow(p - 1) * val.pow(p);
                shapes.push_back(Json{{"element", key}, {"holds", ok}});
                if (!ok && witness.empty()) witness = "shape identity fails at " + key;
            }
        }
    }
    for (const auto& [key, want] : expect)
        if (!table.contains(key) && witness.empty()) witness = "no table entry " + key;
    Json out{{"table", table}, {"shape_identities", shapes}, {"normalization_degree", 0}};
    if (!ms.core_matrix.empty()) {
        std::vector<std::vector<P>> G;
        for (const auto& row : ms.core_matrix) {
            std::vector<P> g;
            for (const auto& s : row) g.push_back(parse(s));
            G.push_back(std::move(g));
        }
        auto rep = artinian::presented_parseval_check(M, V, G);
        Json rows = Json::array();
        for (const auto& row : rep.rows)
            rows.push_back(Json{{"element", row.element}, {"vol", row.vol}, {"rhs", row.rhs}, {"agree", row.agree}});
        out["parseval"] = Json{{"pass", rep.pass}, {"rows", rows}};
        if (!rep.pass && witness.empty()) witness = "Parseval identity fails for the core matrix";
        auto zeroG = G;
        for (auto& row : zeroG)
            for (auto& e : row) e = e.zero();
        auto bad = artinian::presented_parseval_check(M, V, zeroG);
        out["control"] = Json{{"core_matrix", "0"}, {"pass", bad.pass}};
        if (bad.pass && witness.empty()) witness = "the zero core matrix passed";
    }
    if (!witness.empty()) return fail_with(out, witness);
    out["verdict"] = PASS;
    return out;
}

Json task_volume_presented(const Ctx& c) {
    if (c.pr.frac) return volume_presented_impl<Frac>(c, c.pr.frac);
    return volume_presented_impl<GF>(c, c.pr.gf);
}

Json task_orbit_sizes(const Ctx& c) {
    const auto& inst = c.pr.finite();
    const auto group = c.opt<std::string>("group", "");
    Json out{{"group", group}};
    std::vector<size_t> sizes;
    if (group == "tom") {
        auto G = pfaffcomb::tom_group(inst.ring);
        out["order"] = G.order();
        for (const auto& e : pfaffcomb::tom_etas(inst)) sizes.push_back(G.orbit_size(e));
    } else if (group == "jerry") {
        auto G = pfaffcomb::jerry_group(inst.ring, c.opt<bool>("literal", false));
        out["order"] = G.order();
        for (const auto& e : pfaffcomb::jerry_etas(inst)) sizes.push_back(G.orbit_size(e));
    } else if (group == "s5") {
        auto G = pfaffcomb::s5_group(inst.ring);
        auto abc = c.opt<std::vector<uint32_t>>("abc", {3, 4, 5});
        if (abc.size() != 3) throw InvalidInput("abc needs three entries");
        auto u = pfaffcomb::char3_u(inst, abc[0], abc[1], abc[2]);
        out["order"] = G.order();
        out["u"] = poly::to_string(u);
        out["u_terms"] = u.size();
        out["stabilizer_order"] = G.stabilizer_order(u);
        out["affine_subgroup_order"] = pfaffcomb::affine_subgroup(inst.ring, abc[0], abc[1], abc[2]).order();
        sizes.push_back(G.orbit_size(u));
    } else {
        throw InvalidInput("group must be tom, jerry or s5");
    }
    out["orbit_sizes"] = sizes;
    if (c.task.options.contains("expect")) {
        auto want = c.opt<std::vector<size_t>>("expect", {});
        if (want != sizes) return fail_with(out, "orbit sizes " + join(sizes) + " != expected " + join(want));
    }
    out["verdict"] = PASS;
    return out;
}

using Handler = std::function<Json(const Ctx&)>;

const std::map<std::string, Handler>& handlers() {
    static const std::map<std::string, Handler> h{
        {"hilbert", task_hilbert},
        {"verify-complex", task_verify_complex},
        {"solve-chain-map", task_solve_chain_map},
        {"explicit-chain-map", task_explicit_chain_map},
        {"pfaffian-core", task_pfaffian_core},
        {"enumerate", task_enumerate},
        {"check-conducting", task_check_conducting},
        {"check-parseval", task_check_parseval},
        {"check-parseval-expanded", task_check_parseval_expanded},
        {"check-differential", task_check_differential},
        {"check-lefschetz", task_check_lefschetz},
        {"check-anisotropy", task_check_anisotropy},
        {"volume-presented", task_volume_presented},
        {"orbit-sizes", task_orbit_sizes},
    };
    return h;
}

}  // namespace

const std::vector<std::string>& task_kinds() {
    static const std::vector<std::string> k = [] {
        std::vector<std::string> v;
        for (const auto& [name, fn] : handlers()) v.push_back(name);
        return v;
    }();
    return k;
}

Json run_task(const Problem& pr, const TaskSpec& task, const RunOptions& opt) {
    Json out;
    auto it = handlers().find(task.kind);
    try {
        if (it == handlers().end()) throw InvalidInput("unknown task '" + task.kind + "'");
        out = it->second(Ctx{pr, task, opt});
    } catch (const std::exception& e) {
        out = Json{{"verdict", FAIL}, {"error", e.what()}};
    }
    out["task"] = task.kind;
    if (!task.options.empty()) out["options"] = task.options;
    return out;
}

Json run_descriptor(const Descriptor& d, const RunOptions& opt) {
    Json report{{"descriptor", d.name}, {"seed", opt.seed.value_or(d.parameters.seed)}};
    std::optional<Problem> pr;
    try {
        pr = materialize(d);
    } catch (const std::exception& e) {
        report["error"] = e.what();
        report["tasks"] = Json::array();
        report["summary"] = Json{{"tasks", 0}, {"fail", 1}};
        return report;
    }
    std::vector<Json> results(d.tasks.size());
    if (opt.parallel) {
        std::vector<std::future<Json>> fs;
        for (const auto& t : d.tasks) fs.push_back(std::async(std::launch::async, [&, &t = t] {
            return run_task(*pr, t, opt);
        }));
        for (size_t i = 0; i < fs.size(); ++i) results[i] = fs[i].get();
    } else {
        for (size_t i = 0; i < d.tasks.size(); ++i) results[i] = run_task(*pr, d.tasks[i], opt);
    }
    std::map<std::string, size_t> counts;
    for (auto& r : results) ++counts[r["verdict"].get<std::string>()];
    report["tasks"] = results;
    Json summary{{"tasks", results.size()}, {"fail", counts[FAIL]}};
    for (const auto& [v, n] : counts) summary["verdicts"][v] = n;
    report["summary"] = summary;
    return report;
}

int exit_code(const Json& report) {
    if (report.contains("error")) return 1;
    return report.at("summary").at("fail").get<size_t>() == 0 ? 0 : 1;
}

std::string emit_report(const Json& report, const std::string& format) {
    if (format == "json") return report.dump(2) + "\n";
    if (format != "text") throw InvalidInput("report format must be json or text");
    std::ostringstream os;
    os << "descriptor " << report.value("descriptor", std::string()) << "  seed " << report.value("seed", 0) << "\n";
    if (report.contains("error")) os << "error: " << report["error"].get<std::string>() << "\n";
    size_t i = 0;
    for (const auto& t : report["tasks"]) {
        os << "[" << ++i << "] " << t["task"].get<std::string>() << ": " << t["verdict"].get<std::string>();
        for (const char* key : {"hilbert", "betti", "orbit_sizes", "oc_count", "sat", "rank", "label", "witnesses"})
            if (t.contains(key)) os << "  " << key << "=" << t[key].dump();
        if (t.contains("witness")) os << "\n    witness: " << t["witness"].get<std::string>();
        if (t.contains("error")) os << "\n    error: " << t["error"].get<std::string>();
        os << "\n";
    }
    if (report.contains("summary"))
        os << report["summary"]["tasks"].get<size_t>() << " tasks, " << report["summary"]["fail"].get<size_t>()
           << " FAIL\n";
    return os.str();
}

std::vector<int64_t> hilbert_from_twists(const std::vector<std::vector<int>>& twists) {
    if (twists.empty()) return {};
    int top = 0;
    for (const auto& t : twists)
        for (int a : t) top = std::max(top, -a);
    std::vector<int64_t> num(size_t(top) + 1, 0);
    for (size_t i = 0; i < twists.size(); ++i)
        for (int a : twists[i]) num[size_t(-a)] += (i % 2 ? -1 : 1);
    // Divide by (1 - t) once per level above 0: partial sums, exact when the
    // remainder vanishes.
    for (size_t k = 1; k < twists.size(); ++k) {
        for (size_t j = 1; j < num.size(); ++j) num[j] += num[j - 1];
        if (num.back() != 0) throw InvalidInput("twists are not those of a Cohen-Macaulay quotient");
        num.pop_back();
    }
    while (!num.empty() && num.back() == 0) num.pop_back();
    return num;
}

}  // namespace frobvol::driver
