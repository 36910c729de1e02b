#pragma once

#include "cdf/config.hpp"
#include "cdf/gforms.hpp"

namespace cdf {

/// Run an expression file ("cdfexpr 1" header) and return one rendered
/// normal form per `eval` line, newline-terminated.
///
/// Definition lines, in the usual keyword format:
///   ring Q | Fp <p> | Zmod <m>      scalars (required)
///   vars x y ...                    base-algebra generators (required)
///   rel <poly>                      base-algebra relation
///   inv g gbar                      declared inverse pair
///   group <builtin name>            group for subsequent form/point lines
///   form NAME <degree> <gen> = <form expression>
///                                   classical image of one primary
///                                   generator class; lines with the same
///                                   NAME accumulate into one form
///   point NAME = <poly>, <poly>, ...
///                                   group point, one coordinate per
///                                   generator, values in the base algebra
///
/// Form expressions are sums of terms `coeff dv1 ^ dv2 ^ ...` where the
/// coefficient is a parenthesized polynomial, a constant, or a bare
/// variable; `dx` and `d x` both differentiate x, and d-prefixed tokens
/// resolve as differentials before variable names.
///
/// Expressions on `eval` lines are prefix-form:
///   nu <form expression>        combinatorial image of a classical form
///   classical E                 classical shadow of a combinatorial value
///   mc ( GROUP )                Maurer-Cartan form, over the group's own ring
///   delta0 POINT                coboundary of a group point
///   delta1 E                    curvature of a group-valued 1-form
///   delta2 CHI E | delta3 CHI E twisted coboundaries, CHI a defined 1-form
///   bracket E E                 combinatorial bracket
///   product E E | inverse E     pointwise group operations
///   adjoint POINT E             conjugation by a point
///   square E                    halved self-bracket, rendered classically
///   NAME                        a form defined above
///
/// FormatError for malformed or ill-typed input, LookupError for undefined
/// names; arithmetic preconditions surface as the library's own errors.
std::string run_eval(const std::string& text);

}  // namespace cdf
