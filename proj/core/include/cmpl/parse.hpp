#pragma once

#include <string>
#include <vector>

#include "cmpl/composition.hpp"
#include "cmpl/ext.hpp"

namespace cmpl {

// Element syntax: integers, the names theta, x, t and g (the generator of
// F_q over F_p), + - * / ^ and parentheses. A juxtaposed factor multiplies,
// so "2theta" means 2*theta. Errors throw ParseError.

/// An element of K (names theta, x, g).
ExtElem parse_elem(const ExtPtr& K, const std::string& s);
/// A polynomial in theta (names theta, g); division must be exact.
Poly parse_poly(const FieldPtr& F, const std::string& s);
/// A polynomial in t (names t, g), e.g. a multiplier a(t).
Poly parse_t_poly(const FieldPtr& F, const std::string& s);
/// A monic polynomial in x over A, as coefficients m_0..m_n (names x, theta, g).
std::vector<Poly> parse_minpoly(const FieldPtr& F, const std::string& s);

/// Semicolon-separated tuple of elements of K.
std::vector<ExtElem> parse_tuple(const ExtPtr& K, const std::string& s);
/// Comma-separated positive integers.
Composition parse_composition(const std::string& s);
/// Comma-separated base-p digits of an F_p modulus, low degree first.
std::vector<std::uint32_t> parse_digits(const std::string& s);

}  // namespace cmpl
