#include "frobvol/driver/descriptor.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "frobvol/errors.hpp"

namespace frobvol::driver {

namespace {

void check_keys(const Json& j, const std::set<std::string>& allowed, const std::string& where) {
    if (!j.is_object()) throw ParseError(where + " must be an object");
    for (const auto& [k, v] : j.items())
        if (!allowed.count(k)) throw ParseError("unknown key '" + k + "' in " + where);
}

template <class T>
T get(const Json& j, const std::string& key, const std::string& where) {
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(where + "." + key + ": " + e.what());
    }
}

template <class T>
T get_or(const Json& j, const std::string& key, T fallback, const std::string& where) {
    return j.contains(key) ? get<T>(j, key, where) : fallback;
}

FieldSpec field_from_json(const Json& j) {
    check_keys(j, {"characteristic", "kind", "ext_degree", "frac_vars"}, "ring.field");
    FieldSpec f;
    f.characteristic = get<uint32_t>(j, "characteristic", "ring.field");
    f.kind = get_or<std::string>(j, "kind", "prime", "ring.field");
    if (f.kind != "prime" && f.kind != "ext" && f.kind != "frac")
        throw ParseError("ring.field.kind must be prime, ext or frac");
    f.ext_degree = get_or<uint32_t>(j, "ext_degree", 1, "ring.field");
    f.frac_vars = get_or<std::vector<std::string>>(j, "frac_vars", {}, "ring.field");
    if (f.kind == "frac" && f.frac_vars.empty()) throw ParseError("ring.field: a fraction field needs frac_vars");
    return f;
}

Json field_to_json(const FieldSpec& f) {
    Json j{{"characteristic", f.characteristic}, {"kind", f.kind}};
    if (f.ext_degree != 1) j["ext_degree"] = f.ext_degree;
    if (!f.frac_vars.empty()) j["frac_vars"] = f.frac_vars;
    return j;
}

RingSpec ring_from_json(const Json& j) {
    check_keys(j, {"field", "variables", "edges"}, "ring");
    RingSpec r;
    r.field = field_from_json(j.at("field"));
    if (j.contains("edges")) {
        const auto& e = j["edges"];
        check_keys(e, {"prefix", "m", "convention"}, "ring.edges");
        r.edge_prefix = get_or<std::string>(e, "prefix", "z", "ring.edges");
        r.edge_m = get<uint32_t>(e, "m", "ring.edges");
        auto conv = get_or<std::string>(e, "convention", "symmetric", "ring.edges");
        if (conv != "symmetric" && conv != "antisymmetric")
            throw ParseError("ring.edges.convention must be symmetric or antisymmetric");
        r.antisymmetric = conv == "antisymmetric";
        if (j.contains("variables")) throw ParseError("ring: give either variables or edges");
    } else {
        r.variables = get<std::vector<std::string>>(j, "variables", "ring");
    }
    return r;
}

Json ring_to_json(const RingSpec& r) {
    Json j{{"field", field_to_json(r.field)}};
    if (r.edge_m)
        j["edges"] = Json{{"prefix", r.edge_prefix},
                          {"m", r.edge_m},
                          {"convention", r.antisymmetric ? "antisymmetric" : "symmetric"}};
    else
        j["variables"] = r.variables;
    return j;
}

}  // namespace

Descriptor descriptor_from_json(const Json& j) {
    check_keys(j, {"name", "ring", "ideal", "resolution", "module", "core", "parameters", "tasks"}, "descriptor");
    Descriptor d;
    d.name = get_or<std::string>(j, "name", "", "descriptor");
    if (!j.contains("ring")) throw ParseError("descriptor needs a ring");
    d.ring = ring_from_json(j["ring"]);
    d.ideal = get_or<std::vector<std::string>>(j, "ideal", {}, "descriptor");
    if (j.contains("resolution")) {
        const auto& r = j["resolution"];
        check_keys(r, {"twists", "differentials"}, "resolution");
        ResolutionSpec s;
        s.twists = get<std::vector<std::vector<int>>>(r, "twists", "resolution");
        s.differentials =
            get_or<std::vector<std::vector<std::vector<std::string>>>>(r, "differentials", {}, "resolution");
        if (!s.differentials.empty() && s.differentials.size() + 1 != s.twists.size())
            throw ParseError("resolution: need one differential per level above 0");
        d.resolution = std::move(s);
    }
    if (j.contains("module")) {
        const auto& m = j["module"];
        check_keys(m, {"generator_twists", "relations", "normalization", "core_matrix"}, "module");
        ModuleSpec s;
        s.generator_twists = get<std::vector<int>>(m, "generator_twists", "module");
        s.relations = get<std::vector<std::vector<std::string>>>(m, "relations", "module");
        s.normalization = get<std::vector<std::string>>(m, "normalization", "module");
        s.core_matrix = get_or<std::vector<std::vector<std::string>>>(m, "core_matrix", {}, "module");
        const size_t r = s.generator_twists.size();
        for (const auto& rel : s.relations)
            if (rel.size() != r) throw ParseError("module: every relation needs one entry per generator");
        if (s.normalization.size() != r) throw ParseError("module: normalization needs one entry per generator");
        d.module = std::move(s);
    }
    if (j.contains("core")) d.core = get<std::string>(j, "core", "descriptor");
    if (j.contains("parameters")) {
        const auto& p = j["parameters"];
        check_keys(p, {"count", "mode", "seed", "ext_degree", "forms"}, "parameters");
        auto& q = d.parameters;
        q.count = get_or<size_t>(p, "count", 0, "parameters");
        q.mode = get_or<std::string>(p, "mode", "random", "parameters");
        if (q.mode != "random" && q.mode != "monomial" && q.mode != "explicit")
            throw ParseError("parameters.mode must be random, monomial or explicit");
        q.seed = get_or<uint64_t>(p, "seed", 1, "parameters");
        q.ext_degree = get_or<uint32_t>(p, "ext_degree", 16, "parameters");
        q.forms = get_or<std::vector<std::string>>(p, "forms", {}, "parameters");
        if (q.mode == "explicit") q.count = q.forms.size();
    }
    if (j.contains("tasks")) {
        if (!j["tasks"].is_array()) throw ParseError("tasks must be an array");
        for (const auto& t : j["tasks"]) {
            if (!t.is_object() || !t.contains("task") || !t["task"].is_string())
                throw ParseError("every task needs a string 'task' field");
            TaskSpec ts;
            ts.kind = t["task"].get<std::string>();
            ts.options = t;
            ts.options.erase("task");
            d.tasks.push_back(std::move(ts));
        }
    }
    return d;
}

Json descriptor_to_json(const Descriptor& d) {
    Json j;
    j["name"] = d.name;
    j["ring"] = ring_to_json(d.ring);
    j["ideal"] = d.ideal;
    if (d.resolution) {
        j["resolution"] = Json{{"twists", d.resolution->twists}};
        if (!d.resolution->differentials.empty()) j["resolution"]["differentials"] = d.resolution->differentials;
    }
    if (d.module) {
        Json m{{"generator_twists", d.module->generator_twists},
               {"relations", d.module->relations},
               {"normalization", d.module->normalization}};
        if (!d.module->core_matrix.empty()) m["core_matrix"] = d.module->core_matrix;
        j["module"] = m;
    }
    if (d.core) j["core"] = *d.core;
    const auto& q = d.parameters;
    Json p{{"count", q.count}, {"mode", q.mode}, {"seed", q.seed}, {"ext_degree", q.ext_degree}};
    if (!q.forms.empty()) p["forms"] = q.forms;
    j["parameters"] = p;
    j["tasks"] = Json::array();
    for (const auto& t : d.tasks) {
        Json o = t.options;
        o["task"] = t.kind;
        j["tasks"].push_back(o);
    }
    return j;
}

Descriptor parse_descriptor(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        size_t line = 1, col = 1;
        for (size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + e.what());
    }
    return descriptor_from_json(j);
}

Descriptor load_descriptor(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_descriptor(ss.str());
}

std::string print_descriptor(const Descriptor& d) { return descriptor_to_json(d).dump(2) + "\n"; }

}  // namespace frobvol::driver
