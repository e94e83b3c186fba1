#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ivtrnn/core.hpp"
#include "ivtrnn/errors.hpp"

namespace ivtrnn {

// Criterion weights. Strict mode is the normative one: weights in [0,1]
// summing to 1. Relaxed mode only demands positive entries; it exists for
// reconciliation runs against published data whose weights do not
// normalize (see reconcile_reference).
enum class WeightMode { Strict, Relaxed };

class WeightVector {
public:
    explicit WeightVector(std::vector<double> weights,
                          WeightMode mode = WeightMode::Strict);

    const std::vector<double>& values() const { return weights_; }
    WeightMode mode() const { return mode_; }
    std::size_t size() const { return weights_.size(); }

private:
    std::vector<double> weights_;
    WeightMode mode_;
};

inline constexpr double kScoreTieTolerance = 1e-9;

// Score in [0,1]: centered average of the six channel means, rewarding
// truth and penalizing indeterminacy and falsity equally.
double score(const IVTrNN& n);

// Accuracy in [-1,1]: mean truth minus mean falsity across both levels.
// Indeterminacy does not enter.
double accuracy(const IVTrNN& n);

// Reduced forms for triangular numbers, using the (a + 2b + d)/4 channel
// mean. They agree with score/accuracy bit-for-bit on triangular input.
// Throw NotTriangularError otherwise.
double score_triangular(const IVTrNN& n);
double accuracy_triangular(const IVTrNN& n);

struct ScoreAccuracy {
    double score{0};
    double accuracy{0};

    bool operator==(const ScoreAccuracy&) const = default;
};

ScoreAccuracy score_accuracy(const IVTrNN& n);

// Two-stage comparison: by score, then by accuracy, each with an absolute
// tie tolerance of kScoreTieTolerance. Numbers equal on both are Equal
// even if componentwise distinct.
enum class Ordering { Less, Equal, Greater };

Ordering compare(const IVTrNN& x, const IVTrNN& y);

// Weighted arithmetic-average aggregation in closed form: truth
// components 1 - prod (1-u_j)^w_j, indeterminacy/falsity components
// prod u_j^w_j, independently at both levels. Result heights take the
// min/max envelope of the inputs, matching a fold of scale-then-add.
IVTrNN ivtrnwaa(std::span<const IVTrNN> numbers, const WeightVector& w);

// Same operator computed the long way: scale each number by its weight,
// then fold with addition. Kept as an independent cross-check of the
// closed form; tests hold the two routes together.
IVTrNN ivtrnwaa_fold(std::span<const IVTrNN> numbers, const WeightVector& w);

} // namespace ivtrnn
