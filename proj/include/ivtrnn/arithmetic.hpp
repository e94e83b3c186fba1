#pragma once

#include "ivtrnn/core.hpp"

namespace ivtrnn {

// Operational laws. Truth grades combine through the probabilistic sum
// s(u,v) = u + v - uv under addition and through the plain product under
// multiplication; indeterminacy and falsity swap those roles. Scalar
// multiple and power are the corresponding exponent forms. All four laws
// act componentwise on the trapezoids and keep components inside [0,1]
// with ordering preserved.
//
// Result heights: min of the truth heights and max of the indeterminacy
// and falsity heights for add/mul (conservative envelope); scale and pow
// copy the input heights.
TrNN add(const TrNN& x, const TrNN& y);
TrNN mul(const TrNN& x, const TrNN& y);
TrNN scale(double lambda, const TrNN& x); // throws NonPositiveLambdaError
TrNN pow(const TrNN& x, double lambda);   // throws NonPositiveLambdaError

// Interval-valued forms apply the TrNN law independently per level.
IVTrNN add(const IVTrNN& x, const IVTrNN& y);
IVTrNN mul(const IVTrNN& x, const IVTrNN& y);
IVTrNN scale(double lambda, const IVTrNN& x);
IVTrNN pow(const IVTrNN& x, double lambda);

} // namespace ivtrnn
