#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "frobvol/driver/descriptor.hpp"
#include "frobvol/driver/tasks.hpp"
#include "frobvol/errors.hpp"
#include "frobvol/pfaffcomb/cores.hpp"
#include "frobvol/poly/text.hpp"

using namespace frobvol;
using namespace frobvol::driver;

namespace {

struct Source {
    std::string path;
    std::string builtin;
};

void add_source(CLI::App* sub, Source& src) {
    sub->add_option("--descriptor,-d", src.path, "descriptor file");
    sub->add_option("--builtin,-b", src.builtin, "built-in descriptor (see list-builtins)");
}

Descriptor load(const Source& src, const std::string& fallback) {
    if (!src.path.empty()) return load_descriptor(src.path);
    if (!src.builtin.empty()) return builtin_descriptor(src.builtin);
    if (!fallback.empty()) return builtin_descriptor(fallback);
    throw InvalidInput("give --descriptor or --builtin");
}

// Keeps the descriptor's tasks of one kind (or a default task when there
// are none). Command-line options turn this into a single task built on the
// first one.
Descriptor select(Descriptor d, const std::string& kind, const Json& overrides) {
    std::vector<TaskSpec> keep;
    for (const auto& t : d.tasks)
        if (t.kind == kind) keep.push_back(t);
    if (keep.empty()) keep.push_back(TaskSpec{kind, Json::object()});
    if (!overrides.empty()) keep.resize(1);
    for (auto& t : keep)
        for (const auto& [k, v] : overrides.items()) t.options[k] = v;
    d.tasks = std::move(keep);
    return d;
}

// The same Pfaffian instance over GF(p): signs in the ideal change, and the
// stored resolution is dropped.
Descriptor recharacterize(Descriptor d, uint32_t p) {
    if (!d.ring.edge_m) throw InvalidInput("--p needs a Pfaffian instance");
    auto inst = pfaffcomb::pfaffian_instance(d.ring.edge_m, p);
    d.ring.field.characteristic = p;
    d.ring.antisymmetric = inst.ring->edge_convention()->antisymmetric;
    d.ideal.clear();
    for (const auto& g : inst.ideal) d.ideal.push_back(poly::to_string(g));
    d.resolution.reset();
    d.core = "pfaffian:m=" + std::to_string(d.ring.edge_m) + ",p=" + std::to_string(p);
    return d;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Volume maps, Frobenius chain maps and Parseval identities in characteristic p"};
    app.require_subcommand(1);
    app.fallthrough();

    RunOptions run;
    uint64_t seed = 0;
    size_t trials = 0;
    int degree_bound = 0;
    std::string format = "json";
    std::string output;
    auto* seed_opt = app.add_option("--seed", seed, "random seed");
    auto* trials_opt = app.add_option("--trials", trials, "random trials");
    auto* bound_opt = app.add_option("--degree-bound", degree_bound, "degree bound");
    app.add_option("--report", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--output,-o", output, "write the report to a file");
    app.add_flag("--parallel", run.parallel, "run independent work concurrently");

    Source src;
    std::string run_path;
    auto* run_cmd = app.add_subcommand("run", "run every task of a descriptor");
    run_cmd->add_option("descriptor", run_path, "descriptor file");
    run_cmd->add_option("--builtin,-b", src.builtin, "built-in descriptor");

    std::string export_name;
    auto* export_cmd = app.add_subcommand("export-descriptor", "print a built-in descriptor");
    export_cmd->add_option("name", export_name)->required();
    auto* list_cmd = app.add_subcommand("list-builtins", "list built-in descriptors and task kinds");

    // Task subcommands, each with its own options.
    Json overrides = Json::object();
    std::map<std::string, CLI::App*> tasks;
    auto task_cmd = [&](const std::string& name, const std::string& help) {
        auto* sub = app.add_subcommand(name, help);
        add_source(sub, src);
        tasks[name] = sub;
        return sub;
    };
    struct Flags {
        uint32_t m = 0, p = 2, i = 1, k = 0, r = 3;
        size_t nparams = 0;
        std::string core, top, expect, kind;
    } f;
    auto* pc = task_cmd("pfaffian-core", "H0 of the m x m Pfaffian ideal against the odd-cycle generating function");
    pc->add_option("--m", f.m, "matrix size (built-in pfaffian<m>)");
    pc->add_option("--p", f.p, "characteristic");
    auto* cc = task_cmd("check-conducting", "sufficient p-conducting criterion for a core");
    cc->add_option("--m", f.m);
    cc->add_option("--core", f.core, "polynomial or builder directive");
    auto* en = task_cmd("enumerate", "enumerate odd-cycle weight functions or matchings");
    en->add_option("--m", f.m);
    en->add_option("--kind", f.kind)->check(CLI::IsMember({"oc", "matchings"}));
    auto* hi = task_cmd("hilbert", "Hilbert function of an Artinian reduction");
    hi->add_option("--nparams", f.nparams);
    auto* sc = task_cmd("solve-chain-map", "solve for a chain map with a fixed top component");
    sc->add_option("--core", f.core);
    sc->add_option("--top", f.top)->check(CLI::IsMember({"core", "zero"}));
    sc->add_option("--expect", f.expect)->check(CLI::IsMember({"sat", "unsat"}));
    task_cmd("verify-complex", "verify a resolution");
    auto* cp = task_cmd("check-parseval", "abstract Parseval identity over random specializations");
    cp->add_option("--core", f.core);
    cp->add_option("--nparams", f.nparams);
    auto* ce = task_cmd("check-parseval-expanded", "expanded Parseval identity over the generic parameters");
    ce->add_option("--core", f.core);
    auto* cd = task_cmd("check-differential", "differential identity over the generic parameters");
    cd->add_option("--core", f.core);
    auto* cl = task_cmd("check-lefschetz", "Lefschetz ranks at random specializations");
    cl->add_option("--nparams", f.nparams);
    auto* ca = task_cmd("check-anisotropy", "semilinear anisotropy check in characteristic 2");
    ca->add_option("--i", f.i);
    ca->add_option("--k", f.k);
    ca->add_option("--r", f.r);
    task_cmd("volume-presented", "volume table of a presented module");
    task_cmd("orbit-sizes", "orbit sizes of the bundled group actions");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }
    if (*seed_opt) run.seed = seed;
    if (*trials_opt) run.trials = trials;
    if (*bound_opt) run.degree_bound = degree_bound;

    try {
        if (*list_cmd) {
            for (const auto& n : builtin_names()) std::cout << "builtin " << n << "\n";
            for (const auto& k : task_kinds()) std::cout << "task " << k << "\n";
            return 0;
        }
        if (*export_cmd) {
            std::cout << print_descriptor(builtin_descriptor(export_name));
            return 0;
        }
        Descriptor d;
        if (*run_cmd) {
            d = run_path.empty() ? load(src, "") : load_descriptor(run_path);
        } else {
            std::string kind;
            for (const auto& [name, sub] : tasks)
                if (*sub) kind = name;
            auto* sub = tasks.at(kind);
            auto set = [&](const char* opt, const char* key, const auto& value) {
                if (sub->get_option_no_throw(opt) && sub->count(opt)) overrides[key] = value;
            };
            set("--m", "m", f.m);
            set("--core", "core", f.core);
            set("--kind", "kind", f.kind);
            set("--nparams", "nparams", f.nparams);
            set("--top", "top", f.top);
            set("--expect", "expect", f.expect);
            set("--i", "i", f.i);
            set("--k", "k", f.k);
            set("--r", "r", f.r);
            // --m alone picks the built-in Pfaffian instance.
            std::string fallback = f.m ? "pfaffian" + std::to_string(f.m) : "";
            if (f.m) overrides.erase("m");
            d = select(load(src, fallback), kind, overrides);
            if (f.p != 2) d = recharacterize(d, f.p);
        }
        auto report = run_descriptor(d, run);
        auto text = emit_report(report, format);
        if (output.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(output);
            out << text;
        }
        return exit_code(report);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
}
