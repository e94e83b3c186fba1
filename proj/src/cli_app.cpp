#include "ivtrnn/cli.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ivtrnn/arithmetic.hpp"
#include "ivtrnn/json_io.hpp"
#include "ivtrnn/pipeline.hpp"

namespace ivtrnn {

namespace {

std::vector<double> parse_weights_csv(const std::string& csv) {
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= csv.size()) {
        std::size_t comma = csv.find(',', start);
        if (comma == std::string::npos) comma = csv.size();
        std::string item = csv.substr(start, comma - start);
        const std::size_t b = item.find_first_not_of(" \t");
        const std::size_t e = item.find_last_not_of(" \t");
        if (b == std::string::npos) {
            throw ParseError("--weights has an empty entry");
        }
        item = item.substr(b, e - b + 1);
        std::size_t pos = 0;
        double v = 0;
        try {
            v = std::stod(item, &pos);
        } catch (const std::exception&) {
            throw ParseError("--weights entry \"" + item +
                             "\" is not a number");
        }
        if (pos != item.size()) {
            throw ParseError("--weights entry \"" + item +
                             "\" is not a number");
        }
        out.push_back(v);
        start = comma + 1;
    }
    return out;
}

WeightVector resolve_weights(const std::vector<double>& file_weights,
                             WeightMode file_mode,
                             const std::string& cli_weights_csv,
                             bool force_relaxed) {
    std::vector<double> w = cli_weights_csv.empty()
                                ? file_weights
                                : parse_weights_csv(cli_weights_csv);
    if (w.empty()) {
        throw ValidationError(
            "no weights given: pass --weights or put them in the file");
    }
    const WeightMode mode =
        force_relaxed ? WeightMode::Relaxed : file_mode;
    return WeightVector(std::move(w), mode);
}

std::string pad(std::string s, std::size_t width) {
    while (s.size() < width) s += ' ';
    return s;
}

std::string trapezoid_text(const Trapezoid& t, int prec) {
    return "(" + format_fixed(t.a, prec) + ", " + format_fixed(t.b, prec) +
           ", " + format_fixed(t.c, prec) + ", " + format_fixed(t.d, prec) +
           ")";
}

void print_number(std::ostream& out, const IVTrNN& n, int prec) {
    auto level = [&](const char* which, const TrNN& l) {
        out << "  " << pad(std::string(which) + " truth", 15)
            << trapezoid_text(l.truth, prec) << "\n";
        out << "  " << pad(std::string(which) + " indet", 15)
            << trapezoid_text(l.indet, prec) << "\n";
        out << "  " << pad(std::string(which) + " falsity", 15)
            << trapezoid_text(l.falsity, prec) << "\n";
        if (l.height_t != 1.0 || l.height_i != 0.0 || l.height_f != 0.0) {
            out << "  " << pad(std::string(which) + " heights", 15) << "t="
                << format_fixed(l.height_t, prec) << ", i="
                << format_fixed(l.height_i, prec) << ", f="
                << format_fixed(l.height_f, prec) << "\n";
        }
    };
    level("lower", n.lower);
    level("upper", n.upper);
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

int effective_precision(int cli_precision, int fallback) {
    return cli_precision >= 0 ? cli_precision : fallback;
}

int cmd_rank(const std::string& path, const std::string& weights_csv,
             bool relaxed, const std::string& format, int cli_precision,
             std::ostream& out) {
    const DecisionProblem p = load_problem(path);
    const WeightVector w =
        resolve_weights(p.weights, p.weight_mode, weights_csv, relaxed);
    if (w.size() != p.matrix.criteria.size()) {
        throw LengthMismatchError(std::to_string(w.size()) +
                                  " weights for " +
                                  std::to_string(p.matrix.criteria.size()) +
                                  " criteria");
    }
    const RankingReport report = rank_alternatives(p.matrix, w);
    if (format == "json") {
        print_json(out, report_to_json(report));
        return 0;
    }
    const int prec = effective_precision(cli_precision, p.display_precision);
    std::size_t name_w = 11; // "alternative"
    for (const RankedAlternative& r : report.ranking) {
        name_w = std::max(name_w, r.name.size());
    }
    out << "rank  " << pad("alternative", name_w + 2) << pad("score", 10)
        << "accuracy\n";
    for (const RankedAlternative& r : report.ranking) {
        out << pad(std::to_string(r.rank), 6) << pad(r.name, name_w + 2)
            << pad(format_fixed(r.score, prec), 10)
            << format_fixed(r.accuracy, prec)
            << (r.tied_with_previous ? "  (tied with previous)" : "")
            << "\n";
    }
    out << "best: " << report.best().name << "\n";
    return 0;
}

int cmd_reproduce_combined(const std::string& regime,
                           const std::string& format, int cli_precision,
                           std::ostream& out) {
    const ReconcileReport rec = reconcile_reference();
    const RegimeCheck& rc = regime == "stated" ? rec.stated : rec.uniform;
    std::vector<std::string> matching;
    for (const RowCheck& row : rc.rows) {
        if (row.match) matching.push_back(row.name);
    }
    if (format == "json") {
        json j;
        j["schema"] = "ivtrnn-reconcile-combined/1";
        j["regime"] = rc.regime;
        j["weights"] = rc.weights;
        j["rows"] = json::array();
        for (const RowCheck& row : rc.rows) {
            json e;
            e["name"] = row.name;
            e["match"] = row.match;
            e["max_abs_delta"] = {
                {"lower_truth", row.max_delta_lower_truth},
                {"lower_indet", row.max_delta_lower_indet},
                {"lower_falsity", row.max_delta_lower_falsity},
                {"upper", row.max_delta_upper}};
            e["computed"] = to_json(row.computed);
            j["rows"].push_back(std::move(e));
        }
        j["matching_rows"] = matching;
        print_json(out, j);
        return 0;
    }
    const int prec = effective_precision(cli_precision, 4);
    out << "combined-number check, regime " << rc.regime << ", weights";
    for (double w : rc.weights) out << " " << format_fixed(w, 2);
    out << "\n";
    out << "a row is a MATCH when its recomputed lower-level truth and "
           "indeterminacy\ncomponents reproduce the published 4-decimal "
           "values\n\n";
    out << "row   verdict    |d|lower-truth  |d|lower-indet  "
           "|d|lower-falsity  |d|upper\n";
    for (const RowCheck& row : rc.rows) {
        out << pad(row.name, 6) << pad(row.match ? "MATCH" : "MISMATCH", 11)
            << pad(format_fixed(row.max_delta_lower_truth, prec + 2), 16)
            << pad(format_fixed(row.max_delta_lower_indet, prec + 2), 16)
            << pad(format_fixed(row.max_delta_lower_falsity, prec + 2), 18)
            << format_fixed(row.max_delta_upper, prec + 2) << "\n";
    }
    out << "matching rows: ";
    if (matching.empty()) {
        out << "none";
    } else {
        for (std::size_t i = 0; i < matching.size(); ++i) {
            out << (i ? ", " : "") << matching[i];
        }
    }
    out << " (" << matching.size() << " of " << rc.rows.size() << ")\n";
    return 0;
}

int cmd_reproduce_scores(const std::string& format, int cli_precision,
                         std::ostream& out) {
    const ReconcileReport rec = reconcile_reference();
    auto order_text = [](const std::vector<std::string>& names) {
        std::string s;
        for (std::size_t i = 0; i < names.size(); ++i) {
            s += (i ? " > " : "") + names[i];
        }
        return s;
    };
    if (format == "json") {
        json j;
        j["schema"] = "ivtrnn-reconcile-scores/1";
        j["scores"] = json::array();
        for (const ScoreCheck& sc : rec.scores) {
            json e;
            e["name"] = sc.name;
            e["published"] = sc.published;
            e["recomputed"] = sc.recomputed;
            e["delta"] = sc.delta;
            e["within_publication_tolerance"] =
                sc.within_publication_tolerance;
            e["consistent"] = sc.consistent;
            j["scores"].push_back(std::move(e));
        }
        j["computed_order"] = rec.computed_order;
        j["published_order"] = rec.published_order;
        j["order_agrees"] = rec.order_agrees;
        print_json(out, j);
        return 0;
    }
    const int prec = effective_precision(cli_precision, 4);
    out << "score check, recomputed from the published combined numbers\n\n";
    out << "name  published  recomputed  |d|        within-6e-3  "
           "exact-1e-4\n";
    for (const ScoreCheck& sc : rec.scores) {
        out << pad(sc.name, 6) << pad(format_fixed(sc.published, prec), 11)
            << pad(format_fixed(sc.recomputed, prec + 2), 12)
            << pad(format_fixed(sc.delta, prec + 2), 11)
            << pad(sc.within_publication_tolerance ? "yes" : "no", 13)
            << (sc.consistent ? "yes" : "no") << "\n";
    }
    out << "computed order:  " << order_text(rec.computed_order) << "\n";
    out << "published order: " << order_text(rec.published_order) << "\n";
    out << "order agrees: " << (rec.order_agrees ? "yes" : "no") << "\n";
    return 0;
}

int cmd_score(const std::string& path, const std::string& format,
              int cli_precision, std::ostream& out) {
    const IVTrNN n = load_number_document(path);
    const ScoreAccuracy sa = score_accuracy(n);
    if (format == "json") {
        json j;
        j["schema"] = "ivtrnn-score/1";
        j["score"] = sa.score;
        j["accuracy"] = sa.accuracy;
        print_json(out, j);
        return 0;
    }
    const int prec = effective_precision(cli_precision, 4);
    out << "score     " << format_fixed(sa.score, prec) << "\n";
    out << "accuracy  " << format_fixed(sa.accuracy, prec) << "\n";
    return 0;
}

int cmd_agg(const std::string& path, const std::string& weights_csv,
            bool relaxed, const std::string& format, int cli_precision,
            std::ostream& out) {
    const NumbersDocument doc = load_numbers_document(path);
    const WeightVector w =
        resolve_weights(doc.weights, doc.weight_mode, weights_csv, relaxed);
    const IVTrNN agg = ivtrnwaa(doc.numbers, w);
    const ScoreAccuracy sa = score_accuracy(agg);
    if (format == "json") {
        json j;
        j["schema"] = "ivtrnn-agg/1";
        j["aggregate"] = to_json(agg);
        j["score"] = sa.score;
        j["accuracy"] = sa.accuracy;
        print_json(out, j);
        return 0;
    }
    const int prec = effective_precision(cli_precision, 4);
    out << "aggregate of " << doc.numbers.size() << " numbers\n";
    print_number(out, agg, prec);
    out << "score     " << format_fixed(sa.score, prec) << "\n";
    out << "accuracy  " << format_fixed(sa.accuracy, prec) << "\n";
    return 0;
}

int cmd_validate(const std::string& path, const std::string& weights_csv,
                 bool relaxed, std::ostream& out, std::ostream& err) {
    const DecisionProblem p = load_problem(path);
    const WeightVector w =
        resolve_weights(p.weights, p.weight_mode, weights_csv, relaxed);
    if (w.size() != p.matrix.criteria.size()) {
        throw LengthMismatchError(std::to_string(w.size()) +
                                  " weights for " +
                                  std::to_string(p.matrix.criteria.size()) +
                                  " criteria");
    }
    std::size_t advisory_cells = 0;
    for (std::size_t i = 0; i < p.matrix.rows.size(); ++i) {
        for (std::size_t k = 0; k < p.matrix.rows[i].size(); ++k) {
            const InclusionAdvisory adv =
                inclusion_advisory(p.matrix.rows[i][k]);
            if (adv.holds) continue;
            ++advisory_cells;
            for (const std::string& v : adv.violations) {
                err << "warning: cell (" << p.matrix.alternatives[i] << ", "
                    << p.matrix.criteria[k] << "): " << v << "\n";
            }
        }
    }
    const double sum =
        std::accumulate(w.values().begin(), w.values().end(), 0.0);
    out << "schema: " << kProblemSchema << "\n";
    out << "alternatives: " << p.matrix.alternatives.size() << "\n";
    out << "criteria: " << p.matrix.criteria.size() << "\n";
    out << "weights: "
        << (w.mode() == WeightMode::Strict ? "strict" : "relaxed")
        << " mode, sum " << format_fixed(sum, 6) << "\n";
    out << "matrix: complete, "
        << p.matrix.alternatives.size() * p.matrix.criteria.size()
        << " cells\n";
    if (advisory_cells > 0) {
        out << "advisory: " << advisory_cells
            << " cells have a lower level not contained in the upper level "
               "(details on standard error)\n";
    } else {
        out << "advisory: all cells have the lower level contained in the "
               "upper level\n";
    }
    out << "ok\n";
    return 0;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"interval-valued trapezoidal neutrosophic number toolkit"};
    app.require_subcommand(1);

    std::string path;
    std::string weights_csv;
    bool relaxed = false;
    std::string format = "table";
    int precision = -1;
    int table = 4;
    std::string regime = "uniform025";

    const auto add_common = [&](CLI::App* sub, bool with_weights) {
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"table", "json"}));
        sub->add_option("--precision", precision,
                        "display digits for table output")
            ->check(CLI::Range(0, 12));
        if (with_weights) {
            sub->add_option("--weights", weights_csv,
                            "comma-separated criterion weights, overriding "
                            "the file");
            sub->add_flag("--allow-unnormalized-weights", relaxed,
                          "accept positive weights that do not sum to 1");
        }
    };

    CLI::App* rank =
        app.add_subcommand("rank", "rank the alternatives of a problem file");
    rank->add_option("file", path, "problem file (JSON)")->required();
    add_common(rank, true);

    CLI::App* reproduce = app.add_subcommand(
        "reproduce",
        "recompute the built-in worked example and check it against the "
        "published tables");
    reproduce->add_option("--table", table,
                          "4 = combined numbers, 5 = scores");
    reproduce->add_option("--regime", regime,
                          "weight regime for --table 4")
        ->check(CLI::IsMember({"stated", "uniform025"}));
    add_common(reproduce, false);

    CLI::App* score_cmd =
        app.add_subcommand("score", "score/accuracy of one number file");
    score_cmd->add_option("file", path, "number file (JSON)")->required();
    add_common(score_cmd, false);

    CLI::App* agg =
        app.add_subcommand("agg", "weighted aggregation of a numbers file");
    agg->add_option("file", path, "numbers file (JSON)")->required();
    add_common(agg, true);

    CLI::App* validate = app.add_subcommand(
        "validate", "check a problem file and report diagnostics");
    validate->add_option("file", path, "problem file (JSON)")->required();
    validate->add_option("--weights", weights_csv,
                         "comma-separated criterion weights, overriding the "
                         "file");
    validate->add_flag("--allow-unnormalized-weights", relaxed,
                       "accept positive weights that do not sum to 1");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        const auto subs = app.get_subcommands();
        out << (subs.empty() ? app.help() : subs.front()->help());
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (rank->parsed()) {
            return cmd_rank(path, weights_csv, relaxed, format, precision,
                            out);
        }
        if (reproduce->parsed()) {
            if (table == 4) {
                return cmd_reproduce_combined(regime, format, precision, out);
            }
            if (table == 5) {
                return cmd_reproduce_scores(format, precision, out);
            }
            throw ParseError("--table must be 4 or 5");
        }
        if (score_cmd->parsed()) {
            return cmd_score(path, format, precision, out);
        }
        if (agg->parsed()) {
            return cmd_agg(path, weights_csv, relaxed, format, precision,
                           out);
        }
        if (validate->parsed()) {
            return cmd_validate(path, weights_csv, relaxed, out, err);
        }
        err << "error: no command given\n";
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 4;
    }
}

} // namespace ivtrnn
