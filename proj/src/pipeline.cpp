#include "ivtrnn/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ivtrnn {

void LinguisticScale::define(std::string name, TrNN value) {
    if (has(name)) {
        throw ValidationError("linguistic term \"" + name +
                              "\" defined twice");
    }
    terms_.emplace_back(std::move(name), value);
}

bool LinguisticScale::has(const std::string& name) const {
    for (const auto& [n, v] : terms_) {
        if (n == name) return true;
    }
    return false;
}

const TrNN& LinguisticScale::term(const std::string& name) const {
    for (const auto& [n, v] : terms_) {
        if (n == name) return v;
    }
    throw UnknownTermError("linguistic term \"" + name + "\" not in scale");
}

IntervalLinguisticMatrix make_interval_matrix(
    std::vector<std::string> alternatives, std::vector<std::string> criteria,
    std::vector<std::vector<IntervalTermCell>> cells) {
    if (alternatives.empty() || criteria.empty()) {
        throw ValidationError("matrix needs at least one alternative and one "
                              "criterion");
    }
    if (cells.size() != alternatives.size()) {
        throw ValidationError("matrix has " + std::to_string(cells.size()) +
                              " rows for " +
                              std::to_string(alternatives.size()) +
                              " alternatives");
    }
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (cells[i].size() != criteria.size()) {
            throw ValidationError("row \"" + alternatives[i] + "\" has " +
                                  std::to_string(cells[i].size()) +
                                  " cells for " +
                                  std::to_string(criteria.size()) +
                                  " criteria");
        }
    }
    return IntervalLinguisticMatrix{std::move(alternatives),
                                    std::move(criteria), std::move(cells)};
}

DecisionMatrix build_decision_matrix(const IntervalLinguisticMatrix& lm,
                                     const LinguisticScale& scale) {
    DecisionMatrix dm;
    dm.alternatives = lm.alternatives;
    dm.criteria = lm.criteria;
    dm.rows.reserve(lm.cells.size());
    for (const auto& row : lm.cells) {
        std::vector<IVTrNN> out;
        out.reserve(row.size());
        for (const IntervalTermCell& cell : row) {
            out.push_back(
                make_ivtrnn(scale.term(cell.lower), scale.term(cell.upper)));
        }
        dm.rows.push_back(std::move(out));
    }
    return dm;
}

namespace {

RankingReport rank_rows(std::vector<RankedAlternative> rows) {
    // Sort on the exact (score, accuracy) pair; the tolerant compare()
    // only decides the tie annotations afterwards. Exact comparison is a
    // strict weak ordering, which tolerance-based comparison is not, and
    // stable_sort keeps input order on full ties.
    std::stable_sort(rows.begin(), rows.end(),
                     [](const RankedAlternative& x,
                        const RankedAlternative& y) {
                         if (x.score != y.score) return x.score > y.score;
                         return x.accuracy > y.accuracy;
                     });
    for (std::size_t i = 0; i < rows.size(); ++i) {
        rows[i].rank = static_cast<int>(i) + 1;
        rows[i].tied_with_previous =
            i > 0 && compare(rows[i - 1].aggregate, rows[i].aggregate) ==
                         Ordering::Equal;
    }
    return RankingReport{std::move(rows)};
}

} // namespace

RankingReport rank_alternatives(const DecisionMatrix& dm,
                                const WeightVector& w) {
    std::vector<RankedAlternative> rows;
    rows.reserve(dm.rows.size());
    for (std::size_t i = 0; i < dm.rows.size(); ++i) {
        RankedAlternative r;
        r.name = dm.alternatives[i];
        r.aggregate = ivtrnwaa(dm.rows[i], w);
        r.score = score(r.aggregate);
        r.accuracy = accuracy(r.aggregate);
        rows.push_back(std::move(r));
    }
    return rank_rows(std::move(rows));
}

RankingReport rank_numbers(const std::vector<std::string>& names,
                           const std::vector<IVTrNN>& numbers) {
    if (names.size() != numbers.size()) {
        throw LengthMismatchError(std::to_string(names.size()) +
                                  " names vs " +
                                  std::to_string(numbers.size()) +
                                  " numbers");
    }
    std::vector<RankedAlternative> rows;
    rows.reserve(numbers.size());
    for (std::size_t i = 0; i < numbers.size(); ++i) {
        RankedAlternative r;
        r.name = names[i];
        r.aggregate = numbers[i];
        r.score = score(numbers[i]);
        r.accuracy = accuracy(numbers[i]);
        rows.push_back(std::move(r));
    }
    return rank_rows(std::move(rows));
}

namespace {

double round4(double v) {
    // Displayed values are printed to four decimals; match in that grid.
    return std::nearbyint(v * 1e4) / 1e4;
}

double component_delta(const Trapezoid& computed, const Trapezoid& published,
                       bool rounded) {
    auto d = [rounded](double c, double p) {
        return std::abs((rounded ? round4(c) : c) - p);
    };
    return std::max(std::max(d(computed.a, published.a),
                             d(computed.b, published.b)),
                    std::max(d(computed.c, published.c),
                             d(computed.d, published.d)));
}

RegimeCheck check_regime(const char* regime, const WeightVector& w) {
    const ReferenceDataset& ref = reference_dataset();
    const DecisionMatrix dm = build_decision_matrix(ref.matrix, ref.scale);
    RegimeCheck rc;
    rc.regime = regime;
    rc.weights = w.values();
    // Published components are 4-decimal prints, so a row matches when
    // the recomputed value rounds onto them (1e-4 grid, small slack for
    // the rounding arithmetic itself).
    const double grid = 1e-4 + 1e-12;
    for (std::size_t i = 0; i < dm.rows.size(); ++i) {
        RowCheck row;
        row.name = dm.alternatives[i];
        row.computed = ivtrnwaa(dm.rows[i], w);
        const IVTrNN& pub = ref.published_combined[i].value;
        row.max_delta_lower_truth =
            component_delta(row.computed.lower.truth, pub.lower.truth, false);
        row.max_delta_lower_indet =
            component_delta(row.computed.lower.indet, pub.lower.indet, false);
        row.max_delta_lower_falsity = component_delta(
            row.computed.lower.falsity, pub.lower.falsity, false);
        row.max_delta_upper = std::max(
            {component_delta(row.computed.upper.truth, pub.upper.truth,
                             false),
             component_delta(row.computed.upper.indet, pub.upper.indet,
                             false),
             component_delta(row.computed.upper.falsity, pub.upper.falsity,
                             false)});
        row.match =
            component_delta(row.computed.lower.truth, pub.lower.truth,
                            true) <= grid &&
            component_delta(row.computed.lower.indet, pub.lower.indet,
                            true) <= grid;
        rc.rows.push_back(std::move(row));
    }
    return rc;
}

} // namespace

ReconcileReport reconcile_reference() {
    const ReferenceDataset& ref = reference_dataset();
    ReconcileReport report;
    report.stated = check_regime(
        "stated", WeightVector(ref.stated_weights, WeightMode::Strict));
    report.uniform = check_regime(
        "uniform025", WeightVector(ref.uniform_weights, WeightMode::Relaxed));

    std::vector<std::string> names;
    std::vector<IVTrNN> numbers;
    for (const PublishedRow& row : ref.published_combined) {
        names.push_back(row.name);
        numbers.push_back(row.value);
    }
    const RankingReport ranked = rank_numbers(names, numbers);
    for (const RankedAlternative& r : ranked.ranking) {
        report.computed_order.push_back(r.name);
    }
    for (const auto& [name, published] : ref.published_scores) {
        report.published_order.push_back(name);
        ScoreCheck sc;
        sc.name = name;
        sc.published = published;
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (names[i] == name) sc.recomputed = score(numbers[i]);
        }
        sc.delta = std::abs(sc.recomputed - sc.published);
        sc.within_publication_tolerance = sc.delta <= 6e-3;
        sc.consistent = sc.delta <= 1e-4;
        report.scores.push_back(sc);
    }
    report.order_agrees = report.computed_order == report.published_order;
    return report;
}

} // namespace ivtrnn
