#include "frobvol/driver/problem.hpp"

#include <regex>
#include <sstream>

#include "frobvol/errors.hpp"
#include "frobvol/pfaffcomb/pfaffian.hpp"
#include "frobvol/poly/text.hpp"

namespace frobvol::driver {

using coeff::FiniteField;
using coeff::FracField;
using coeff::GF;

const pfaffcomb::Instance& Problem::finite() const {
    if (!gf) throw InvalidInput("this task needs a finite coefficient field");
    return inst;
}

uint32_t Problem::characteristic() const { return desc.ring.field.characteristic; }

Problem materialize(const Descriptor& d) {
    Problem pr;
    pr.desc = d;
    const auto& r = d.ring;
    pr.ring = r.edge_m ? poly::Ring::edges(r.edge_prefix, r.edge_m, r.antisymmetric) : poly::Ring::make(r.variables);
    const FiniteField& base = FiniteField::get(r.field.characteristic, r.field.ext_degree);
    if (r.field.kind == "frac") {
        pr.frac = &FracField::get(base, r.field.frac_vars);
    } else {
        if (r.field.kind == "prime" && r.field.ext_degree != 1) throw InvalidInput("a prime field has ext_degree 1");
        pr.gf = &base;
    }
    for (size_t i = 0; i < d.ideal.size(); ++i) {
        try {
            if (pr.gf)
                pr.inst.ideal.push_back(poly::parse_poly<GF>(d.ideal[i], pr.ring, pr.gf));
            else
                pr.frac_ideal.push_back(poly::parse_poly<coeff::Frac>(d.ideal[i], pr.ring, pr.frac));
        } catch (const Error& e) {
            throw ParseError("ideal[" + std::to_string(i) + "]: " + e.what());
        }
    }
    pr.inst.ring = pr.ring;
    pr.inst.field = pr.gf;
    return pr;
}

bool is_directive(const std::string& text) { return text.find(':') != std::string::npos; }

namespace {

std::vector<size_t> index_list(const std::string& s) {
    std::vector<size_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.find_first_not_of(" ") == std::string::npos) continue;
        out.push_back(std::stoul(item));
    }
    return out;
}

}  // namespace

BuiltCore build_core(const std::string& directive) {
    static const std::regex pf(R"(\s*pfaffian:m=(\d+)(?:,p=(\d+))?\s*)");
    static const std::regex tom(R"(\s*tom:S=\[([\d,\s]*)\]\s*)");
    static const std::regex jerry(R"(\s*jerry:S=\[([\d,\s]*)\]\s*)");
    static const std::regex c3(R"(\s*char3pfaffian:abc=\((\d+),(\d+),(\d+)\)\s*)");
    std::smatch m;
    BuiltCore b;
    if (std::regex_match(directive, m, pf)) {
        const uint32_t mm = uint32_t(std::stoul(m[1]));
        const uint32_t p = m[2].matched ? uint32_t(std::stoul(m[2])) : 2;
        if (mm < 3 || mm % 2 == 0) throw UnknownCore(directive + ": m must be odd and at least 3");
        b.inst = pfaffcomb::pfaffian_instance(mm, p);
        b.core = pfaffcomb::pfaffian_core(b.inst.ideal);
    } else if (std::regex_match(directive, m, tom)) {
        b.inst = pfaffcomb::tom_instance();
        auto S = index_list(m[1]);
        for (size_t s : S)
            if (s >= 6) throw UnknownCore(directive + ": indices run over the 6 elements of the third orbit");
        b.core = pfaffcomb::tom_core(b.inst, S);
    } else if (std::regex_match(directive, m, jerry)) {
        b.inst = pfaffcomb::jerry_instance();
        auto S = index_list(m[1]);
        for (size_t s : S)
            if (s >= 3) throw UnknownCore(directive + ": indices run over the 3 elements of Q");
        b.core = pfaffcomb::jerry_core(b.inst, S);
    } else if (std::regex_match(directive, m, c3)) {
        b.inst = pfaffcomb::char3_instance();
        b.core = pfaffcomb::char3_core(b.inst, uint32_t(std::stoul(m[1])), uint32_t(std::stoul(m[2])),
                                       uint32_t(std::stoul(m[3])));
    } else {
        throw UnknownCore(directive);
    }
    return b;
}

PolyGF resolve_core(const Problem& pr, const std::string& text) {
    const auto& inst = pr.finite();
    if (!is_directive(text)) return poly::parse_poly<GF>(text, inst.ring, inst.field);
    auto b = build_core(text);
    if (b.inst.field->characteristic() != inst.field->characteristic())
        throw FieldMismatch(text + " lives in another characteristic");
    try {
        return poly::parse_poly<GF>(poly::to_string(b.core), inst.ring, inst.field);
    } catch (const ParseError& e) {
        throw RingMismatch(text + " does not fit the descriptor's ring: " + e.what());
    }
}

ResolutionSpec complex_to_spec(const gradedla::FreeComplex<GF>& cx) {
    ResolutionSpec s;
    for (const auto& M : cx.modules) {
        std::vector<int> t;
        for (int a : M.shifts) t.push_back(-a);
        s.twists.push_back(std::move(t));
    }
    for (const auto& d : cx.d) {
        std::vector<std::vector<std::string>> rows;
        for (const auto& row : d.entries) {
            std::vector<std::string> r;
            for (const auto& e : row) r.push_back(poly::to_string(e));
            rows.push_back(std::move(r));
        }
        s.differentials.push_back(std::move(rows));
    }
    return s;
}

gradedla::FreeComplex<GF> complex_from_spec(const ResolutionSpec& s, const poly::RingPtr& ring,
                                            const FiniteField* field) {
    if (s.differentials.empty()) throw InvalidInput("the resolution has no differentials");
    gradedla::FreeComplex<GF> cx;
    cx.ring = ring;
    cx.field = field;
    for (const auto& t : s.twists) {
        gradedla::FreeModule M;
        for (int a : t) M.shifts.push_back(-a);
        cx.modules.push_back(std::move(M));
    }
    for (size_t i = 0; i < s.differentials.size(); ++i) {
        const auto& rows = s.differentials[i];
        auto m = gradedla::GradedMatrix<GF>::zero(cx.modules[i + 1], cx.modules[i], cx.zero_poly());
        if (rows.size() != m.rows()) throw InvalidMatrix("d" + std::to_string(i + 1) + " has the wrong number of rows");
        for (size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != m.cols())
                throw InvalidMatrix("d" + std::to_string(i + 1) + " has the wrong number of columns");
            for (size_t c = 0; c < rows[r].size(); ++c) m.entries[r][c] = poly::parse_poly<GF>(rows[r][c], ring, field);
        }
        cx.d.push_back(std::move(m));
    }
    return cx;
}

}  // namespace frobvol::driver
