#include "ivtrnn/core.hpp"

#include <cstdio>

namespace ivtrnn {

namespace {

bool in_unit(double v) { return v >= 0.0 && v <= 1.0; }

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

void check_height(double h, const char* name) {
    if (!in_unit(h)) {
        throw OutOfRangeError(std::string(name) + " height " + fmt(h) +
                              " outside [0,1]");
    }
}

} // namespace

Trapezoid make_trapezoid(double a, double b, double c, double d) {
    if (!in_unit(a) || !in_unit(b) || !in_unit(c) || !in_unit(d)) {
        throw OutOfRangeError("trapezoid component outside [0,1]: (" + fmt(a) +
                              ", " + fmt(b) + ", " + fmt(c) + ", " + fmt(d) +
                              ")");
    }
    if (a > b || b > c || c > d) {
        throw OutOfOrderError("trapezoid components not ordered: (" + fmt(a) +
                              ", " + fmt(b) + ", " + fmt(c) + ", " + fmt(d) +
                              ")");
    }
    return Trapezoid{a, b, c, d};
}

TrNN make_trnn(Trapezoid truth, Trapezoid indet, Trapezoid falsity,
               double height_t, double height_i, double height_f) {
    // Re-run the trapezoid checks so aggregate-initialized values cannot
    // smuggle invalid components through this factory.
    truth = make_trapezoid(truth.a, truth.b, truth.c, truth.d);
    indet = make_trapezoid(indet.a, indet.b, indet.c, indet.d);
    falsity = make_trapezoid(falsity.a, falsity.b, falsity.c, falsity.d);
    check_height(height_t, "truth");
    check_height(height_i, "indeterminacy");
    check_height(height_f, "falsity");
    return TrNN{truth, indet, falsity, height_t, height_i, height_f};
}

IVTrNN make_ivtrnn(TrNN lower, TrNN upper) {
    lower = make_trnn(lower.truth, lower.indet, lower.falsity, lower.height_t,
                      lower.height_i, lower.height_f);
    upper = make_trnn(upper.truth, upper.indet, upper.falsity, upper.height_t,
                      upper.height_i, upper.height_f);
    return IVTrNN{lower, upper};
}

UnitInterval make_unit_interval(double lo, double hi) {
    if (!in_unit(lo) || !in_unit(hi)) {
        throw OutOfRangeError("interval endpoint outside [0,1]: [" + fmt(lo) +
                              ", " + fmt(hi) + "]");
    }
    if (lo > hi) {
        throw OutOfOrderError("interval endpoints reversed: [" + fmt(lo) +
                              ", " + fmt(hi) + "]");
    }
    return UnitInterval{lo, hi};
}

double triangular_membership(double x, double a, double m, double c) {
    if (m < a || c < m) {
        throw OutOfOrderError("triangular knots not ordered: (" + fmt(a) +
                              ", " + fmt(m) + ", " + fmt(c) + ")");
    }
    if (a == m || m == c) {
        throw DegenerateSupportError("triangular support collapsed: (" +
                                     fmt(a) + ", " + fmt(m) + ", " + fmt(c) +
                                     ")");
    }
    if (x <= a || x >= c) return 0.0;
    if (x == m) return 1.0;
    if (x < m) return (x - a) / (m - a);
    return (c - x) / (c - m);
}

namespace {

// Shared shape evaluator. Truth rises from 0 to the height and back;
// indeterminacy/falsity fall from 1 to the height and back. Checking the
// plateau before the ramps makes degenerate knots (a == b or c == d) take
// the plateau value instead of dividing 0 by 0.
double eval_shape(const Trapezoid& t, double x, double height, bool rises) {
    if (x >= t.b && x <= t.c) return height;
    if (x < t.a || x > t.d) return rises ? 0.0 : 1.0;
    if (x < t.b) {
        const double r = (x - t.a) / (t.b - t.a);
        return rises ? r * height : 1.0 - r * (1.0 - height);
    }
    const double r = (t.d - x) / (t.d - t.c);
    return rises ? r * height : 1.0 - r * (1.0 - height);
}

} // namespace

double membership(const TrNN& n, double x, Channel ch) {
    switch (ch) {
    case Channel::Truth:
        return eval_shape(n.truth, x, n.height_t, true);
    case Channel::Indet:
        return eval_shape(n.indet, x, n.height_i, false);
    case Channel::Falsity:
        return eval_shape(n.falsity, x, n.height_f, false);
    }
    return 0.0; // unreachable
}

LevelPair membership(const IVTrNN& n, double x, Channel ch) {
    return LevelPair{membership(n.lower, x, ch), membership(n.upper, x, ch)};
}

bool is_triangular(const TrNN& n) {
    return n.truth.b == n.truth.c && n.indet.b == n.indet.c &&
           n.falsity.b == n.falsity.c;
}

bool is_triangular(const IVTrNN& n) {
    return is_triangular(n.lower) && is_triangular(n.upper);
}

namespace {

void check_components(const Trapezoid& lo, const Trapezoid& hi,
                      bool lower_at_most, const char* channel,
                      std::vector<std::string>& out) {
    const double lo_v[4] = {lo.a, lo.b, lo.c, lo.d};
    const double hi_v[4] = {hi.a, hi.b, hi.c, hi.d};
    static const char* const names = "abcd";
    for (int i = 0; i < 4; ++i) {
        const bool ok =
            lower_at_most ? lo_v[i] <= hi_v[i] : lo_v[i] >= hi_v[i];
        if (!ok) {
            out.push_back(std::string(channel) + " component " + names[i] +
                          ": lower " + fmt(lo_v[i]) +
                          (lower_at_most ? " > upper " : " < upper ") +
                          fmt(hi_v[i]));
        }
    }
}

} // namespace

InclusionAdvisory inclusion_advisory(const IVTrNN& n) {
    InclusionAdvisory adv;
    check_components(n.lower.truth, n.upper.truth, true, "truth",
                     adv.violations);
    check_components(n.lower.indet, n.upper.indet, false, "indeterminacy",
                     adv.violations);
    check_components(n.lower.falsity, n.upper.falsity, false, "falsity",
                     adv.violations);
    adv.holds = adv.violations.empty();
    return adv;
}

} // namespace ivtrnn
