#include "ivtrnn/arithmetic.hpp"

#include <algorithm>
#include <cmath>

namespace ivtrnn {

namespace {

// Probabilistic sum, computed as 1-(1-u)(1-v) rather than u+v-uv: the
// composed form is a chain of monotone roundings, so componentwise input
// ordering survives in floating point even with u,v close to 1.
double psum(double u, double v) { return 1.0 - (1.0 - u) * (1.0 - v); }

double prod(double u, double v) { return u * v; }

template <class F>
Trapezoid zip(const Trapezoid& x, const Trapezoid& y, F f) {
    return Trapezoid{f(x.a, y.a), f(x.b, y.b), f(x.c, y.c), f(x.d, y.d)};
}

template <class F>
Trapezoid map(const Trapezoid& x, F f) {
    return Trapezoid{f(x.a), f(x.b), f(x.c), f(x.d)};
}

void require_positive(double lambda) {
    if (!(lambda > 0.0)) {
        throw NonPositiveLambdaError("lambda must be > 0, got " +
                                     std::to_string(lambda));
    }
}

} // namespace

TrNN add(const TrNN& x, const TrNN& y) {
    return TrNN{zip(x.truth, y.truth, psum),
                zip(x.indet, y.indet, prod),
                zip(x.falsity, y.falsity, prod),
                std::min(x.height_t, y.height_t),
                std::max(x.height_i, y.height_i),
                std::max(x.height_f, y.height_f)};
}

TrNN mul(const TrNN& x, const TrNN& y) {
    return TrNN{zip(x.truth, y.truth, prod),
                zip(x.indet, y.indet, psum),
                zip(x.falsity, y.falsity, psum),
                std::min(x.height_t, y.height_t),
                std::max(x.height_i, y.height_i),
                std::max(x.height_f, y.height_f)};
}

TrNN scale(double lambda, const TrNN& x) {
    require_positive(lambda);
    auto grow = [lambda](double u) { return 1.0 - std::pow(1.0 - u, lambda); };
    auto decay = [lambda](double u) { return std::pow(u, lambda); };
    return TrNN{map(x.truth, grow), map(x.indet, decay),
                map(x.falsity, decay), x.height_t, x.height_i, x.height_f};
}

TrNN pow(const TrNN& x, double lambda) {
    require_positive(lambda);
    auto grow = [lambda](double u) { return 1.0 - std::pow(1.0 - u, lambda); };
    auto decay = [lambda](double u) { return std::pow(u, lambda); };
    return TrNN{map(x.truth, decay), map(x.indet, grow), map(x.falsity, grow),
                x.height_t, x.height_i, x.height_f};
}

IVTrNN add(const IVTrNN& x, const IVTrNN& y) {
    return IVTrNN{add(x.lower, y.lower), add(x.upper, y.upper)};
}

IVTrNN mul(const IVTrNN& x, const IVTrNN& y) {
    return IVTrNN{mul(x.lower, y.lower), mul(x.upper, y.upper)};
}

IVTrNN scale(double lambda, const IVTrNN& x) {
    return IVTrNN{scale(lambda, x.lower), scale(lambda, x.upper)};
}

IVTrNN pow(const IVTrNN& x, double lambda) {
    return IVTrNN{pow(x.lower, lambda), pow(x.upper, lambda)};
}

} // namespace ivtrnn
