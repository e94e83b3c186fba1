#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ivtrnn/core.hpp"
#include "ivtrnn/errors.hpp"
#include "ivtrnn/ranking.hpp"

namespace ivtrnn {

// Ordered term -> TrNN dictionary ("Very Low" .. "Very High").
class LinguisticScale {
public:
    void define(std::string name, TrNN value);
    bool has(const std::string& name) const;
    const TrNN& term(const std::string& name) const; // UnknownTermError
    const std::vector<std::pair<std::string, TrNN>>& terms() const {
        return terms_;
    }

private:
    std::vector<std::pair<std::string, TrNN>> terms_;
};

// One matrix cell: a pessimistic and an optimistic linguistic rating.
struct IntervalTermCell {
    std::string lower;
    std::string upper;

    bool operator==(const IntervalTermCell&) const = default;
};

// Complete alternatives x criteria grid of linguistic interval ratings.
struct IntervalLinguisticMatrix {
    std::vector<std::string> alternatives;
    std::vector<std::string> criteria;
    std::vector<std::vector<IntervalTermCell>> cells; // [alternative][criterion]
};

IntervalLinguisticMatrix make_interval_matrix(
    std::vector<std::string> alternatives, std::vector<std::string> criteria,
    std::vector<std::vector<IntervalTermCell>> cells);

// Same grid with every cell resolved to an IVTrNN.
struct DecisionMatrix {
    std::vector<std::string> alternatives;
    std::vector<std::string> criteria;
    std::vector<std::vector<IVTrNN>> rows; // [alternative][criterion]
};

DecisionMatrix build_decision_matrix(const IntervalLinguisticMatrix& lm,
                                     const LinguisticScale& scale);

// One line of the final ranking. rank is the 1-based position after
// sorting; tied_with_previous marks a score/accuracy tie (within
// kScoreTieTolerance) with the line ranked directly above.
struct RankedAlternative {
    std::string name;
    IVTrNN aggregate;
    double score{0};
    double accuracy{0};
    int rank{0};
    bool tied_with_previous{false};
};

struct RankingReport {
    std::vector<RankedAlternative> ranking; // best first
    const RankedAlternative& best() const { return ranking.front(); }
};

// Aggregate each row with ivtrnwaa, then sort by score (accuracy breaks
// ties, input order breaks full ties).
RankingReport rank_alternatives(const DecisionMatrix& dm,
                                const WeightVector& w);

// Rank already-aggregated numbers directly (no weighting step).
RankingReport rank_numbers(const std::vector<std::string>& names,
                           const std::vector<IVTrNN>& numbers);

// Published combined number for one alternative, kept verbatim from the
// source table. IR's lower falsity is printed there with five components;
// value carries a best-effort 4-tuple and falsity_reconstructed is set,
// with the original string preserved in source_note.
struct PublishedRow {
    std::string name;
    IVTrNN value;
    bool falsity_reconstructed{false};
    std::string source_note;
};

// The authentication-mechanism selection example: eight alternatives
// (PW password, TF two-factor, CT captcha, FR fingerprint, IR iris,
// SM smart card, MM memory card, CK cryptographic keys) rated against
// five criteria (USF, PER, REL, RBS, SEC) on a four-term scale, plus the
// published aggregation and score tables for cross-checking.
struct ReferenceDataset {
    LinguisticScale scale;
    IntervalLinguisticMatrix matrix;
    std::vector<double> stated_weights;  // sums to 1, strict
    std::vector<double> uniform_weights; // 0.25 each, relaxed (sums to 1.25)
    std::vector<PublishedRow> published_combined;
    std::vector<std::pair<std::string, double>> published_scores; // best first
};

const ReferenceDataset& reference_dataset();

// Cross-check of the published tables against recomputation.
//
// Row verdicts recompute the combined numbers from the scale and matrix
// under a weight regime; a row is a match when its lower-level truth and
// indeterminacy components agree with the published row to four decimal
// places. Under the stated weights nothing matches; under uniform 0.25
// weights rows PW, CT, IR and SM match and the other four do not, which
// pins down how the published table was produced and where its errata
// are. Score checks recompute each published score from the published
// combined row.
struct RowCheck {
    std::string name;
    IVTrNN computed;
    double max_delta_lower_truth{0};
    double max_delta_lower_indet{0};
    double max_delta_lower_falsity{0};
    double max_delta_upper{0}; // across all upper-level components
    bool match{false};
};

struct RegimeCheck {
    std::string regime; // "stated" or "uniform025"
    std::vector<double> weights;
    std::vector<RowCheck> rows;
};

struct ScoreCheck {
    std::string name;
    double published{0};
    double recomputed{0}; // from the published combined row
    double delta{0};
    bool within_publication_tolerance{false}; // |delta| <= 6e-3
    bool consistent{false};                   // |delta| <= 1e-4
};

struct ReconcileReport {
    RegimeCheck stated;
    RegimeCheck uniform;
    std::vector<ScoreCheck> scores;          // published (best-first) order
    std::vector<std::string> computed_order; // by recomputed score
    std::vector<std::string> published_order;
    bool order_agrees{false};
};

ReconcileReport reconcile_reference();

} // namespace ivtrnn
