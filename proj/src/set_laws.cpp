#include "ivtrnn/set_laws.hpp"

#include <algorithm>

namespace ivtrnn {

namespace {

double psum(double u, double v) { return 1.0 - (1.0 - u) * (1.0 - v); }

bool in_unit(double v) { return v >= 0.0 && v <= 1.0; }

UnitInterval zip_lo_hi(const UnitInterval& x, const UnitInterval& y,
                       double (*f)(double, double)) {
    return UnitInterval{f(x.lo, y.lo), f(x.hi, y.hi)};
}

double min2(double u, double v) { return std::min(u, v); }
double max2(double u, double v) { return std::max(u, v); }
double prod(double u, double v) { return u * v; }

} // namespace

SvnsElement make_svns(double t, double i, double f) {
    if (!in_unit(t) || !in_unit(i) || !in_unit(f)) {
        throw OutOfRangeError("SVNS grade outside [0,1]");
    }
    return SvnsElement{t, i, f};
}

IvnsElement make_ivns(UnitInterval t, UnitInterval i, UnitInterval f) {
    t = make_unit_interval(t.lo, t.hi);
    i = make_unit_interval(i.lo, i.hi);
    f = make_unit_interval(f.lo, f.hi);
    return IvnsElement{t, i, f};
}

SvnsElement add(const SvnsElement& x, const SvnsElement& y) {
    return SvnsElement{psum(x.t, y.t), x.i * y.i, x.f * y.f};
}

SvnsElement mul(const SvnsElement& x, const SvnsElement& y) {
    return SvnsElement{x.t * y.t, psum(x.i, y.i), psum(x.f, y.f)};
}

SvnsElement join(const SvnsElement& x, const SvnsElement& y) {
    return SvnsElement{std::max(x.t, y.t), std::min(x.i, y.i),
                       std::min(x.f, y.f)};
}

SvnsElement meet(const SvnsElement& x, const SvnsElement& y) {
    return SvnsElement{std::min(x.t, y.t), std::max(x.i, y.i),
                       std::max(x.f, y.f)};
}

SvnsElement complement(const SvnsElement& x) {
    return SvnsElement{x.f, 1.0 - x.i, x.t};
}

bool includes(const SvnsElement& x, const SvnsElement& y) {
    return x.t <= y.t && x.i >= y.i && x.f >= y.f;
}

bool equals(const SvnsElement& x, const SvnsElement& y) {
    return includes(x, y) && includes(y, x);
}

IvnsElement add(const IvnsElement& x, const IvnsElement& y) {
    return IvnsElement{zip_lo_hi(x.t, y.t, psum), zip_lo_hi(x.i, y.i, prod),
                       zip_lo_hi(x.f, y.f, prod)};
}

IvnsElement mul(const IvnsElement& x, const IvnsElement& y) {
    return IvnsElement{zip_lo_hi(x.t, y.t, prod), zip_lo_hi(x.i, y.i, psum),
                       zip_lo_hi(x.f, y.f, psum)};
}

IvnsElement join(const IvnsElement& x, const IvnsElement& y) {
    return IvnsElement{zip_lo_hi(x.t, y.t, max2), zip_lo_hi(x.i, y.i, min2),
                       zip_lo_hi(x.f, y.f, min2)};
}

IvnsElement meet(const IvnsElement& x, const IvnsElement& y) {
    return IvnsElement{zip_lo_hi(x.t, y.t, min2), zip_lo_hi(x.i, y.i, max2),
                       zip_lo_hi(x.f, y.f, max2)};
}

IvnsElement complement(const IvnsElement& x) {
    // 1 - [lo, hi] taken as the interval image so lo <= hi still holds.
    return IvnsElement{x.f, UnitInterval{1.0 - x.i.hi, 1.0 - x.i.lo}, x.t};
}

bool includes(const IvnsElement& x, const IvnsElement& y) {
    return x.t.lo <= y.t.lo && x.t.hi <= y.t.hi && x.i.lo >= y.i.lo &&
           x.i.hi >= y.i.hi && x.f.lo >= y.f.lo && x.f.hi >= y.f.hi;
}

bool equals(const IvnsElement& x, const IvnsElement& y) {
    return includes(x, y) && includes(y, x);
}

ReferenceSets reference_sets() {
    ReferenceSets r;
    r.quality_svns = make_set<SvnsElement>(
        {"SECU", "MAIN", "AVAIL"},
        {make_svns(0.2, 0.3, 0.4), make_svns(0.3, 0.5, 0.6),
         make_svns(0.5, 0.2, 0.3)});
    r.backup_svns = make_set<SvnsElement>(
        {"BKUP", "MIRR"}, {make_svns(0.7, 0.2, 0.2), make_svns(0.4, 0.2, 0.4)});
    r.quality_ivns = make_set<IvnsElement>(
        {"SECU", "AVAIL"},
        {make_ivns({0.1, 0.3}, {0.3, 0.5}, {0.5, 0.8}),
         make_ivns({0.1, 0.4}, {0.0, 0.2}, {0.5, 0.8})});
    r.backup_ivns = make_set<IvnsElement>(
        {"BKUP", "MIRR"},
        {make_ivns({0.1, 0.3}, {0.0, 0.2}, {0.5, 0.7}),
         make_ivns({0.2, 0.4}, {0.0, 0.1}, {0.4, 0.8})});
    return r;
}

} // namespace ivtrnn
