#pragma once

#include <string>
#include <vector>

#include "ivtrnn/errors.hpp"

namespace ivtrnn {

// Trapezoidal fuzzy value on [0,1]: support [a,d], plateau [b,c].
// Triangular values are the b == c special case.
struct Trapezoid {
    double a{0};
    double b{0};
    double c{0};
    double d{0};

    bool operator==(const Trapezoid&) const = default;
};

// Validates 0 <= a <= b <= c <= d <= 1.
Trapezoid make_trapezoid(double a, double b, double c, double d);

// Trapezoidal neutrosophic number: independent trapezoids for the
// truth, indeterminacy and falsity grades, each with its own height.
// The default heights describe a crisp statement: full truth plateau,
// indeterminacy and falsity floors at zero.
struct TrNN {
    Trapezoid truth;
    Trapezoid indet;
    Trapezoid falsity;
    double height_t{1.0};
    double height_i{0.0};
    double height_f{0.0};

    bool operator==(const TrNN&) const = default;
};

TrNN make_trnn(Trapezoid truth, Trapezoid indet, Trapezoid falsity,
               double height_t = 1.0, double height_i = 0.0,
               double height_f = 0.0);

// Interval-valued trapezoidal neutrosophic number: a pessimistic and an
// optimistic TrNN evaluated jointly. The two levels are independent
// records; see inclusion_advisory for the (soft) containment check.
struct IVTrNN {
    TrNN lower;
    TrNN upper;

    bool operator==(const IVTrNN&) const = default;
};

IVTrNN make_ivtrnn(TrNN lower, TrNN upper);

// Closed subinterval of [0,1].
struct UnitInterval {
    double lo{0};
    double hi{0};

    bool operator==(const UnitInterval&) const = default;
};

UnitInterval make_unit_interval(double lo, double hi);

enum class Channel { Truth, Indet, Falsity };

// Membership of x in a triangular value with support [a,c] and mode m.
// Defined as 0 at and outside the support endpoints.
double triangular_membership(double x, double a, double m, double c);

// Membership grade of x in one channel of a TrNN. The truth channel
// rises 0 -> height on [t1,t2], holds, and falls back to 0; the
// indeterminacy and falsity channels are the mirror image, falling
// 1 -> height and rising back to 1 outside the support.
double membership(const TrNN& n, double x, Channel ch);

// Per-level membership grades of x in one channel of an IVTrNN.
// Returned in (lower, upper) declaration order without reordering, so
// for indeterminacy/falsity channels lower_grade may exceed upper_grade.
struct LevelPair {
    double lower_grade{0};
    double upper_grade{0};

    bool operator==(const LevelPair&) const = default;
};

LevelPair membership(const IVTrNN& n, double x, Channel ch);

// True when every channel has a collapsed plateau (b == c).
bool is_triangular(const TrNN& n);
bool is_triangular(const IVTrNN& n);

// Soft containment check of the lower level in the upper one. Real
// elicitation data routinely violates it (a pessimistic falsity can sit
// below the optimistic one), so violations are reported, never rejected.
struct InclusionAdvisory {
    bool holds{true};
    std::vector<std::string> violations;
};

InclusionAdvisory inclusion_advisory(const IVTrNN& n);

} // namespace ivtrnn
