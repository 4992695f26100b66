#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frobvol/coeff/fraction.hpp"
#include "frobvol/driver/descriptor.hpp"
#include "frobvol/gradedla/complex.hpp"
#include "frobvol/pfaffcomb/cores.hpp"

namespace frobvol::driver {

using PolyGF = poly::Poly<coeff::GF>;
using PolyFrac = poly::Poly<coeff::Frac>;

// A descriptor with its ring, field and ideal built.
struct Problem {
    Descriptor desc;
    poly::RingPtr ring;
    const coeff::FiniteField* gf = nullptr;  // prime or extension field
    const coeff::FracField* frac = nullptr;  // fraction field
    pfaffcomb::Instance inst;                // ideal over gf (when gf is set)
    std::vector<PolyFrac> frac_ideal;        // ideal over frac (when frac is set)

    const pfaffcomb::Instance& finite() const;  // throws InvalidInput over a fraction field
    uint32_t characteristic() const;
};

Problem materialize(const Descriptor& d);

// Bundled constructions: pfaffian:m=5, tom:S=[0], jerry:S=[0,1,2],
// char3pfaffian:abc=(3,4,5). Returns the core in the construction's own ring.
struct BuiltCore {
    pfaffcomb::Instance inst;
    PolyGF core;
};
BuiltCore build_core(const std::string& directive);
bool is_directive(const std::string& text);

// A directive or polynomial string, expressed in the problem's ring.
PolyGF resolve_core(const Problem& pr, const std::string& text);

// Complexes and their descriptor form (twists are negated shifts).
ResolutionSpec complex_to_spec(const gradedla::FreeComplex<coeff::GF>& cx);
gradedla::FreeComplex<coeff::GF> complex_from_spec(const ResolutionSpec& s, const poly::RingPtr& ring,
                                                    const coeff::FiniteField* field);

}  // namespace frobvol::driver
