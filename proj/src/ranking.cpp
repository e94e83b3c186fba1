#include "ivtrnn/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ivtrnn/arithmetic.hpp"

namespace ivtrnn {

WeightVector::WeightVector(std::vector<double> weights, WeightMode mode)
    : weights_(std::move(weights)), mode_(mode) {
    if (weights_.empty()) {
        throw InvalidWeightsError("weight vector is empty");
    }
    if (mode_ == WeightMode::Strict) {
        for (double w : weights_) {
            if (!(w >= 0.0 && w <= 1.0)) {
                throw InvalidWeightsError("strict weight " +
                                          std::to_string(w) +
                                          " outside [0,1]");
            }
        }
        const double sum =
            std::accumulate(weights_.begin(), weights_.end(), 0.0);
        if (std::abs(sum - 1.0) > 1e-9) {
            throw InvalidWeightsError("strict weights sum to " +
                                      std::to_string(sum) + ", need 1");
        }
    } else {
        for (double w : weights_) {
            if (!(w > 0.0)) {
                throw InvalidWeightsError("relaxed weight " +
                                          std::to_string(w) +
                                          " must be > 0");
            }
        }
    }
}

namespace {

double mean4(double a, double b, double c, double d) {
    return (a + b + c + d) / 4.0;
}

double mean4(const Trapezoid& t) { return mean4(t.a, t.b, t.c, t.d); }

// Triangular channel mean, spelled as a four-term average over (a,b,b,d)
// so it runs the exact same floating-point operations as mean4 does on a
// trapezoid with b == c. That makes the reduced score/accuracy forms
// agree with the general ones bit-for-bit, not just within tolerance.
double mean_tri(const Trapezoid& t) { return mean4(t.a, t.b, t.b, t.d); }

double score_from_means(double tl, double tu, double il, double iu, double fl,
                        double fu) {
    return (4.0 + tl + tu - il - iu - fl - fu) / 6.0;
}

double accuracy_from_means(double tl, double tu, double fl, double fu) {
    return (tl + tu - fl - fu) / 2.0;
}

void require_triangular(const IVTrNN& n) {
    if (!is_triangular(n)) {
        throw NotTriangularError(
            "triangular reduction needs b == c in every channel");
    }
}

} // namespace

double score(const IVTrNN& n) {
    return score_from_means(mean4(n.lower.truth), mean4(n.upper.truth),
                            mean4(n.lower.indet), mean4(n.upper.indet),
                            mean4(n.lower.falsity), mean4(n.upper.falsity));
}

double accuracy(const IVTrNN& n) {
    return accuracy_from_means(mean4(n.lower.truth), mean4(n.upper.truth),
                               mean4(n.lower.falsity), mean4(n.upper.falsity));
}

double score_triangular(const IVTrNN& n) {
    require_triangular(n);
    return score_from_means(mean_tri(n.lower.truth), mean_tri(n.upper.truth),
                            mean_tri(n.lower.indet), mean_tri(n.upper.indet),
                            mean_tri(n.lower.falsity),
                            mean_tri(n.upper.falsity));
}

double accuracy_triangular(const IVTrNN& n) {
    require_triangular(n);
    return accuracy_from_means(mean_tri(n.lower.truth),
                               mean_tri(n.upper.truth),
                               mean_tri(n.lower.falsity),
                               mean_tri(n.upper.falsity));
}

ScoreAccuracy score_accuracy(const IVTrNN& n) {
    return ScoreAccuracy{score(n), accuracy(n)};
}

Ordering compare(const IVTrNN& x, const IVTrNN& y) {
    const double sx = score(x);
    const double sy = score(y);
    if (sx > sy + kScoreTieTolerance) return Ordering::Greater;
    if (sy > sx + kScoreTieTolerance) return Ordering::Less;
    const double hx = accuracy(x);
    const double hy = accuracy(y);
    if (hx > hy + kScoreTieTolerance) return Ordering::Greater;
    if (hy > hx + kScoreTieTolerance) return Ordering::Less;
    return Ordering::Equal;
}

namespace {

void check_lengths(std::span<const IVTrNN> numbers, const WeightVector& w) {
    if (numbers.empty()) {
        throw LengthMismatchError("aggregation needs at least one number");
    }
    if (numbers.size() != w.size()) {
        throw LengthMismatchError(
            std::to_string(numbers.size()) + " numbers vs " +
            std::to_string(w.size()) + " weights");
    }
}

struct HeightEnvelope {
    double t{1.0};
    double i{0.0};
    double f{0.0};
};

// Zero-weight numbers are left out: they contribute factor 1 to every
// product, so they should not pull the heights around either. Keeps the
// closed form and the scale-then-add fold in exact agreement.
HeightEnvelope envelope(std::span<const IVTrNN> numbers,
                        const std::vector<double>& w,
                        const TrNN IVTrNN::*level) {
    HeightEnvelope e;
    bool seeded = false;
    for (std::size_t j = 0; j < numbers.size(); ++j) {
        if (w[j] == 0.0) continue;
        const TrNN& n = numbers[j].*level;
        if (!seeded) {
            e = HeightEnvelope{n.height_t, n.height_i, n.height_f};
            seeded = true;
        } else {
            e.t = std::min(e.t, n.height_t);
            e.i = std::max(e.i, n.height_i);
            e.f = std::max(e.f, n.height_f);
        }
    }
    return e;
}

TrNN aggregate_level(std::span<const IVTrNN> numbers,
                     const std::vector<double>& w,
                     const TrNN IVTrNN::*level) {
    auto truth_component = [&](double Trapezoid::*comp) {
        double prod = 1.0;
        for (std::size_t j = 0; j < numbers.size(); ++j) {
            prod *= std::pow(1.0 - (numbers[j].*level).truth.*comp, w[j]);
        }
        return 1.0 - prod;
    };
    auto decay_component = [&](const Trapezoid TrNN::*channel,
                               double Trapezoid::*comp) {
        double prod = 1.0;
        for (std::size_t j = 0; j < numbers.size(); ++j) {
            prod *= std::pow((numbers[j].*level).*channel.*comp, w[j]);
        }
        return prod;
    };
    auto channel = [&](const Trapezoid TrNN::*ch, bool is_truth) {
        auto comp = [&](double Trapezoid::*c) {
            return is_truth ? truth_component(c) : decay_component(ch, c);
        };
        return Trapezoid{comp(&Trapezoid::a), comp(&Trapezoid::b),
                         comp(&Trapezoid::c), comp(&Trapezoid::d)};
    };
    const HeightEnvelope e = envelope(numbers, w, level);
    return TrNN{channel(&TrNN::truth, true), channel(&TrNN::indet, false),
                channel(&TrNN::falsity, false), e.t, e.i, e.f};
}

} // namespace

IVTrNN ivtrnwaa(std::span<const IVTrNN> numbers, const WeightVector& w) {
    check_lengths(numbers, w);
    return IVTrNN{aggregate_level(numbers, w.values(), &IVTrNN::lower),
                  aggregate_level(numbers, w.values(), &IVTrNN::upper)};
}

IVTrNN ivtrnwaa_fold(std::span<const IVTrNN> numbers, const WeightVector& w) {
    check_lengths(numbers, w);
    const std::vector<double>& ws = w.values();
    // A zero strict weight contributes nothing; scale() would reject the
    // lambda, so skip such terms (the closed form gives them factor 1).
    IVTrNN acc;
    bool seeded = false;
    for (std::size_t j = 0; j < numbers.size(); ++j) {
        if (ws[j] == 0.0) continue;
        IVTrNN term = scale(ws[j], numbers[j]);
        acc = seeded ? add(acc, term) : term;
        seeded = true;
    }
    if (!seeded) {
        throw InvalidWeightsError("all weights are zero");
    }
    return acc;
}

} // namespace ivtrnn
