#pragma once

#include <string>

#include "frobvol/coeff/finite_field.hpp"
#include "frobvol/coeff/fraction.hpp"
#include "frobvol/poly/polynomial.hpp"

namespace frobvol::poly {

// Parses sums of products of integers, ring variables, coefficient symbols
// (the extension generator `g`, fraction-field parameters), parenthesized
// subexpressions and `^` powers. Division is allowed by nonzero constants.
template <class C>
Poly<C> parse_poly(const std::string& text, const RingPtr& ring, const typename C::Field* field);

// Canonical text: terms in descending deglex order joined by " + ", residues
// printed nonnegative, coefficients other than 1 written as a leading factor.
template <class C>
std::string to_string(const Poly<C>& f);

std::string coefficient_factor(const coeff::GF& c);
std::string coefficient_factor(const coeff::Frac& c);

}  // namespace frobvol::poly
