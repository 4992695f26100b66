#include "frobvol/driver/descriptor.hpp"
#include "frobvol/driver/problem.hpp"
#include "frobvol/errors.hpp"
#include "frobvol/pfaffcomb/pfaffian.hpp"
#include "frobvol/poly/text.hpp"

namespace frobvol::driver {

namespace {

TaskSpec task(std::string kind, Json options = Json::object()) { return TaskSpec{std::move(kind), std::move(options)}; }

void fill_instance(Descriptor& d, const pfaffcomb::Instance& inst) {
    d.ring.field.characteristic = inst.field->characteristic();
    if (const auto& e = inst.ring->edge_convention()) {
        d.ring.edge_prefix = e->prefix;
        d.ring.edge_m = e->m;
        d.ring.antisymmetric = e->antisymmetric;
    } else {
        d.ring.variables = inst.ring->names();
    }
    for (const auto& g : inst.ideal) d.ideal.push_back(poly::to_string(g));
}

std::vector<int> repeat(int v, size_t n) { return std::vector<int>(n, v); }

Descriptor pfaffian(uint32_t m) {
    Descriptor d;
    d.name = "pfaffian" + std::to_string(m);
    auto inst = pfaffcomb::pfaffian_instance(m, 2);
    fill_instance(d, inst);
    d.resolution = complex_to_spec(pfaffcomb::buchsbaum_eisenbud(inst.ring, inst.field));
    d.core = "pfaffian:m=" + std::to_string(m);
    d.parameters.count = m * (m - 1) / 2 - 3;
    const std::vector<std::vector<size_t>> hilbert{{1}, {1, 3, 1}, {1, 3, 6, 3, 1}};
    if (m <= 7)
        d.tasks.push_back(task("hilbert", {{"expect", hilbert[(m - 3) / 2]}}));
    else
        d.tasks.push_back(task("hilbert"));
    if (m < 7)
        d.tasks.push_back(task("verify-complex"));
    else
        d.tasks.push_back(task("verify-complex", {{"degree_bound", 5}, {"exactness", false}}));
    d.tasks.push_back(task("explicit-chain-map"));
    d.tasks.push_back(task("pfaffian-core"));
    if (m == 5) {
        d.tasks.push_back(task("enumerate", {{"kind", "oc"}}));
        d.tasks.push_back(task("enumerate", {{"kind", "matchings"}}));
        d.tasks.push_back(task("solve-chain-map", {{"expect", "sat"}}));
        d.tasks.push_back(task("solve-chain-map", {{"top", "zero"}, {"expect", "unsat"}}));
    }
    if (m > 3) d.tasks.push_back(task("check-conducting"));
    if (m == 5) {
        d.tasks.push_back(task("check-parseval", {{"trials", 20}}));
        d.tasks.push_back(task("check-anisotropy", {{"i", 1}, {"k", 0}, {"r", 3}}));
    }
    if (m > 3) d.tasks.push_back(task("check-lefschetz"));
    return d;
}

Descriptor cm33() {
    Descriptor d;
    d.name = "cm33";
    d.ring.field = FieldSpec{2, "frac", 1, {"a", "b", "c"}};
    d.ring.variables = {"x1", "x2", "x3"};
    d.ideal = {"x2*x3", "x1*x3", "x1*x2"};
    // The canonical module: two generators in degree -1.
    ModuleSpec m;
    m.generator_twists = {1, 1};
    m.relations = {{"x3", "0"}, {"x2", "x2"}, {"0", "x1"}};
    m.normalization = {"0", "c*x3"};
    const std::string g = "x1*x2*x3*(a*x1 + b*x2 + c*x3)";
    m.core_matrix = {{g, "0"}, {"0", g}};
    d.module = m;
    d.parameters.mode = "explicit";
    d.parameters.forms = {"a*x1 + b*x2 + c*x3"};
    d.parameters.count = 1;
    d.tasks.push_back(task("hilbert", {{"expect", {1, 2}}}));
    d.tasks.push_back(task("volume-presented", {{"expect",
                                                 {{"x1*e1", "1/a"},
                                                  {"x2*e1", "1/b"},
                                                  {"x3*e1", "0"},
                                                  {"x1*e2", "0"},
                                                  {"x2*e2", "1/b"},
                                                  {"x3*e2", "1/c"}}}}));
    return d;
}

const std::vector<std::vector<int>> kCodim4{{0}, repeat(-2, 9), repeat(-3, 16), repeat(-4, 9), {-6}};

Descriptor tom() {
    Descriptor d;
    d.name = "tom";
    fill_instance(d, pfaffcomb::tom_instance());
    d.resolution = ResolutionSpec{kCodim4, {}};
    d.core = "tom:S=[0]";
    d.parameters.count = 5;
    d.tasks.push_back(task("orbit-sizes", {{"group", "tom"}, {"expect", {9, 6, 6}}}));
    d.tasks.push_back(task("hilbert", {{"expect", {1, 4, 1}}}));
    d.tasks.push_back(task("verify-complex"));
    d.tasks.push_back(task("solve-chain-map", {{"expect", "sat"}}));
    d.tasks.push_back(task("solve-chain-map", {{"core", "tom:S=[0,3,5]"}, {"expect", "sat"}}));
    d.tasks.push_back(task("solve-chain-map", {{"core", "tom:S=[0,1]"}, {"expect", "unsat"}}));
    d.tasks.push_back(task("check-parseval", {{"trials", 20}}));
    return d;
}

Descriptor jerry() {
    Descriptor d;
    d.name = "jerry";
    fill_instance(d, pfaffcomb::jerry_instance());
    d.resolution = ResolutionSpec{kCodim4, {}};
    d.core = "jerry:S=[1]";
    d.parameters.count = 4;
    d.tasks.push_back(task("orbit-sizes", {{"group", "jerry"}, {"expect", {1, 3, 6, 2, 3}}}));
    d.tasks.push_back(task("hilbert", {{"expect", {1, 4, 1}}}));
    d.tasks.push_back(task("verify-complex"));
    d.tasks.push_back(task("solve-chain-map", {{"expect", "sat"}}));
    d.tasks.push_back(task("solve-chain-map", {{"core", "jerry:S=[0,1,2]"}, {"expect", "sat"}}));
    d.tasks.push_back(task("solve-chain-map", {{"core", "jerry:S=[0,2]"}, {"expect", "unsat"}}));
    d.tasks.push_back(task("check-parseval", {{"trials", 20}}));
    return d;
}

Descriptor char3() {
    Descriptor d;
    d.name = "char3";
    auto inst = pfaffcomb::char3_instance();
    fill_instance(d, inst);
    d.resolution = complex_to_spec(pfaffcomb::buchsbaum_eisenbud(inst.ring, inst.field));
    d.core = "char3pfaffian:abc=(3,4,5)";
    d.parameters.count = 7;
    d.tasks.push_back(task("orbit-sizes", {{"group", "s5"}, {"abc", {3, 4, 5}}, {"expect", {6}}}));
    d.tasks.push_back(task("hilbert", {{"expect", {1, 3, 1}}}));
    d.tasks.push_back(task("verify-complex"));
    d.tasks.push_back(task("solve-chain-map", {{"expect", "sat"}}));
    d.tasks.push_back(task("solve-chain-map", {{"core", "char3pfaffian:abc=(4,3,5)"}, {"expect", "sat"}}));
    d.tasks.push_back(task("solve-chain-map", {{"top", "zero"}, {"expect", "unsat"}}));
    d.tasks.push_back(task("check-conducting"));
    return d;
}

Descriptor hypersurface() {
    Descriptor d;
    d.name = "hypersurface";
    d.ring.variables = {"x", "y"};
    d.ideal = {"x^2"};
    d.core = "x^2";
    d.parameters.count = 1;
    d.tasks.push_back(task("hilbert", {{"expect", {1, 1}}}));
    const Json blocks = Json::array({Json::array({"x", "y"})});
    const Json names = Json::array({"th1", "th2"});
    const Json orders = Json::array({Json::array({Json::array({1, 0})}), Json::array({Json::array({0, 1})})});
    d.tasks.push_back(task("check-parseval-expanded", {{"blocks", blocks}, {"names", names}}));
    d.tasks.push_back(task("check-differential", {{"blocks", blocks}, {"names", names}, {"orders", orders}}));
    return d;
}

}  // namespace

std::vector<std::string> builtin_names() {
    return {"cm33", "pfaffian3", "pfaffian5", "pfaffian7", "tom", "jerry", "char3", "hypersurface"};
}

Descriptor builtin_descriptor(const std::string& name) {
    if (name == "cm33") return cm33();
    if (name.rfind("pfaffian", 0) == 0 && name.size() > 8 &&
        name.find_first_not_of("0123456789", 8) == std::string::npos) {
        const auto m = std::stoul(name.substr(8));
        if (m < 3 || m % 2 == 0 || m > 11) throw InvalidInput("pfaffian<m> needs odd m in 3..11");
        return pfaffian(uint32_t(m));
    }
    if (name == "tom") return tom();
    if (name == "jerry") return jerry();
    if (name == "char3") return char3();
    if (name == "hypersurface") return hypersurface();
    throw InvalidInput("no built-in descriptor named " + name);
}

}  // namespace frobvol::driver
