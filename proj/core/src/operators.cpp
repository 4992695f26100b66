#include "frobvol/poly/operators.hpp"

namespace frobvol::poly {

using coeff::FiniteField;
using coeff::Frac;
using coeff::FracField;
using coeff::GF;

Poly<GF> extend_field(const Poly<GF>& f, const FiniteField& target) {
    if (f.field() == &target) return f;
    return map_coefficients<GF, GF>(f, &target, [&](const GF& c) { return coeff::embed(c, target); });
}

Poly<Frac> to_fraction_field(const Poly<GF>& f, const FracField& target) {
    return map_coefficients<GF, Frac>(
        f, &target, [&](const GF& c) { return target.from_base(coeff::embed(c, target.base())); });
}

Poly<GF> specialize(const Poly<Frac>& f, const std::vector<GF>& point) {
    if (point.size() != f.field()->nvars()) throw IncompletePlan("specialization point misses parameters");
    if (point.empty()) throw IncompletePlan("specialization needs a target field");
    const FiniteField* target = point[0].field();
    std::vector<Poly<GF>::Term> ts;
    for (const auto& [m, c] : f.terms()) {
        GF v = coeff::evaluate(c, point);
        if (!v.is_zero()) ts.emplace_back(m, v);
    }
    return Poly<GF>::from_sorted_terms(f.ring(), target, std::move(ts));
}

Poly<Frac> specialize(const Poly<Frac>& f, const std::vector<Poly<GF>>& images, const FracField& target) {
    if (images.size() != f.field()->nvars()) throw IncompletePlan("specialization plan misses parameters");
    std::vector<Poly<Frac>::Term> ts;
    for (const auto& [m, c] : f.terms()) {
        Frac v = coeff::substitute(c, images, target);
        if (!v.is_zero()) ts.emplace_back(m, v);
    }
    return Poly<Frac>::from_sorted_terms(f.ring(), &target, std::move(ts));
}

}  // namespace frobvol::poly
