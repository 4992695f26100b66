#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace frobvol::driver {

using Json = nlohmann::json;

struct FieldSpec {
    uint32_t characteristic = 2;
    std::string kind = "prime";  // prime | ext | frac
    uint32_t ext_degree = 1;
    std::vector<std::string> frac_vars;
    bool operator==(const FieldSpec&) const = default;
};

// Either explicit variable names or the edge variables z_{i,j} of K_m.
struct RingSpec {
    FieldSpec field;
    std::vector<std::string> variables;
    std::string edge_prefix;
    uint32_t edge_m = 0;
    bool antisymmetric = false;
    bool operator==(const RingSpec&) const = default;
};

// Modules are lists of twists: R(-3) is written -3. Differentials are given
// per level as row-major matrices of polynomial strings; when they are
// absent the twists are a template for a computed resolution.
struct ResolutionSpec {
    std::vector<std::vector<int>> twists;
    std::vector<std::vector<std::vector<std::string>>> differentials;
    bool operator==(const ResolutionSpec&) const = default;
};

// Presented module M = (+ R(-g_i)) / relations, used for volumes on
// canonical modules that are not quotient rings.
struct ModuleSpec {
    std::vector<int> generator_twists;
    std::vector<std::vector<std::string>> relations;  // one entry per generator
    std::vector<std::string> normalization;
    std::vector<std::vector<std::string>> core_matrix;  // G[j][i]
    bool operator==(const ModuleSpec&) const = default;
};

struct ParameterPolicy {
    size_t count = 0;
    std::string mode = "random";  // random | monomial | explicit
    uint64_t seed = 1;
    uint32_t ext_degree = 16;
    std::vector<std::string> forms;
    bool operator==(const ParameterPolicy&) const = default;
};

struct TaskSpec {
    std::string kind;
    Json options = Json::object();
    bool operator==(const TaskSpec&) const = default;
};

struct Descriptor {
    std::string name;
    RingSpec ring;
    std::vector<std::string> ideal;
    std::optional<ResolutionSpec> resolution;
    std::optional<ModuleSpec> module;
    std::optional<std::string> core;  // polynomial string or builder directive
    ParameterPolicy parameters;
    std::vector<TaskSpec> tasks;
    bool operator==(const Descriptor&) const = default;
};

Descriptor descriptor_from_json(const Json& j);
Json descriptor_to_json(const Descriptor& d);

// Parses UTF-8 JSON; syntax errors report line and column.
Descriptor parse_descriptor(const std::string& text);
Descriptor load_descriptor(const std::string& path);
std::string print_descriptor(const Descriptor& d);

// Built-in instances: pfaffian<m>, pfaffian<m>-char3, cm33, tom, jerry,
// char3, hypersurface.
Descriptor builtin_descriptor(const std::string& name);
std::vector<std::string> builtin_names();

}  // namespace frobvol::driver
