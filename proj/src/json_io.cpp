#include "ivtrnn/json_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace ivtrnn {

namespace {

json parse_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) {
        throw ParseError("document is not valid JSON");
    }
    return j;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open \"" + path + "\"");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const json& require(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw ParseError(std::string("missing field \"") + key + "\"");
    }
    return j.at(key);
}

double as_number(const json& j, const char* what) {
    if (!j.is_number()) {
        throw ParseError(std::string(what) + " must be a number");
    }
    return j.get<double>();
}

std::string as_string(const json& j, const char* what) {
    if (!j.is_string()) {
        throw ParseError(std::string(what) + " must be a string");
    }
    return j.get<std::string>();
}

void require_schema(const json& j, const char* schema) {
    const std::string found = as_string(require(j, "schema"), "schema");
    if (found != schema) {
        throw ParseError("expected schema \"" + std::string(schema) +
                         "\", found \"" + found + "\"");
    }
}

} // namespace

json to_json(const Trapezoid& t) { return json::array({t.a, t.b, t.c, t.d}); }

json to_json(const TrNN& n) {
    json j;
    j["truth"] = to_json(n.truth);
    j["indet"] = to_json(n.indet);
    j["falsity"] = to_json(n.falsity);
    j["heights"] = {{"truth", n.height_t},
                    {"indet", n.height_i},
                    {"falsity", n.height_f}};
    return j;
}

json to_json(const IVTrNN& n) {
    json j;
    j["lower"] = to_json(n.lower);
    j["upper"] = to_json(n.upper);
    return j;
}

Trapezoid trapezoid_from_json(const json& j) {
    if (!j.is_array() || j.size() != 4) {
        throw ParseError("trapezoid must be an array of 4 numbers");
    }
    double v[4];
    for (int i = 0; i < 4; ++i) v[i] = as_number(j[i], "trapezoid component");
    return make_trapezoid(v[0], v[1], v[2], v[3]);
}

TrNN trnn_from_json(const json& j) {
    if (!j.is_object()) {
        throw ParseError("number level must be an object");
    }
    const Trapezoid truth = trapezoid_from_json(require(j, "truth"));
    const Trapezoid indet = trapezoid_from_json(require(j, "indet"));
    const Trapezoid falsity = trapezoid_from_json(require(j, "falsity"));
    double ht = 1.0, hi = 0.0, hf = 0.0;
    if (j.contains("heights")) {
        const json& h = j.at("heights");
        ht = as_number(require(h, "truth"), "height");
        hi = as_number(require(h, "indet"), "height");
        hf = as_number(require(h, "falsity"), "height");
    }
    return make_trnn(truth, indet, falsity, ht, hi, hf);
}

IVTrNN ivtrnn_from_json(const json& j) {
    return make_ivtrnn(trnn_from_json(require(j, "lower")),
                       trnn_from_json(require(j, "upper")));
}

namespace {

WeightMode mode_from_string(const std::string& s) {
    if (s == "strict") return WeightMode::Strict;
    if (s == "relaxed") return WeightMode::Relaxed;
    throw ParseError("weight_mode must be \"strict\" or \"relaxed\", found \"" +
                     s + "\"");
}

} // namespace

DecisionProblem parse_problem(const std::string& text) {
    const json j = parse_text(text);
    require_schema(j, kProblemSchema);

    DecisionProblem p;

    const json& criteria = require(j, "criteria");
    if (!criteria.is_array() || criteria.empty()) {
        throw ParseError("criteria must be a non-empty array");
    }
    std::vector<std::string> criterion_names;
    for (const json& c : criteria) {
        criterion_names.push_back(as_string(require(c, "name"), "criterion name"));
        p.weights.push_back(as_number(require(c, "weight"), "criterion weight"));
    }

    const json& alternatives = require(j, "alternatives");
    if (!alternatives.is_array() || alternatives.empty()) {
        throw ParseError("alternatives must be a non-empty array");
    }
    std::vector<std::string> alternative_names;
    for (const json& a : alternatives) {
        alternative_names.push_back(as_string(a, "alternative name"));
    }

    LinguisticScale scale;
    if (j.contains("scale")) {
        const json& s = j.at("scale");
        if (!s.is_object()) throw ParseError("scale must be an object");
        for (auto it = s.begin(); it != s.end(); ++it) {
            scale.define(it.key(), trnn_from_json(it.value()));
        }
    }

    const json& matrix = require(j, "matrix");
    if (!matrix.is_object()) throw ParseError("matrix must be an object");
    p.matrix.alternatives = alternative_names;
    p.matrix.criteria = criterion_names;
    for (const std::string& alt : alternative_names) {
        if (!matrix.contains(alt)) {
            throw ValidationError("matrix row \"" + alt + "\" is missing");
        }
        const json& row = matrix.at(alt);
        if (!row.is_object()) {
            throw ParseError("matrix row \"" + alt + "\" must be an object");
        }
        std::vector<IVTrNN> cells;
        for (const std::string& crit : criterion_names) {
            if (!row.contains(crit)) {
                throw ValidationError("matrix cell (" + alt + ", " + crit +
                                      ") is missing");
            }
            const json& cell = row.at(crit);
            if (cell.is_array()) {
                if (cell.size() != 2) {
                    throw ParseError("term cell (" + alt + ", " + crit +
                                     ") must name two scale terms");
                }
                cells.push_back(make_ivtrnn(
                    scale.term(as_string(cell[0], "term name")),
                    scale.term(as_string(cell[1], "term name"))));
            } else if (cell.is_object()) {
                cells.push_back(ivtrnn_from_json(cell));
            } else {
                throw ParseError("matrix cell (" + alt + ", " + crit +
                                 ") must be a term pair or a number object");
            }
        }
        p.matrix.rows.push_back(std::move(cells));
    }

    if (j.contains("options")) {
        const json& o = j.at("options");
        if (!o.is_object()) throw ParseError("options must be an object");
        if (o.contains("weight_mode")) {
            p.weight_mode =
                mode_from_string(as_string(o.at("weight_mode"), "weight_mode"));
        }
        if (o.contains("display_precision")) {
            const json& dp = o.at("display_precision");
            if (!dp.is_number_integer()) {
                throw ParseError("display_precision must be an integer");
            }
            const int prec = dp.get<int>();
            if (prec < 0 || prec > 12) {
                throw ValidationError("display_precision must be in [0,12]");
            }
            p.display_precision = prec;
        }
    }
    return p;
}

DecisionProblem load_problem(const std::string& path) {
    return parse_problem(read_file(path));
}

IVTrNN parse_number_document(const std::string& text) {
    const json j = parse_text(text);
    require_schema(j, kNumberSchema);
    return ivtrnn_from_json(require(j, "number"));
}

IVTrNN load_number_document(const std::string& path) {
    return parse_number_document(read_file(path));
}

NumbersDocument parse_numbers_document(const std::string& text) {
    const json j = parse_text(text);
    require_schema(j, kNumbersSchema);
    NumbersDocument doc;
    const json& numbers = require(j, "numbers");
    if (!numbers.is_array() || numbers.empty()) {
        throw ParseError("numbers must be a non-empty array");
    }
    for (const json& n : numbers) doc.numbers.push_back(ivtrnn_from_json(n));
    if (j.contains("weights")) {
        const json& w = j.at("weights");
        if (!w.is_array()) throw ParseError("weights must be an array");
        for (const json& v : w) doc.weights.push_back(as_number(v, "weight"));
    }
    if (j.contains("weight_mode")) {
        doc.weight_mode =
            mode_from_string(as_string(j.at("weight_mode"), "weight_mode"));
    }
    return doc;
}

NumbersDocument load_numbers_document(const std::string& path) {
    return parse_numbers_document(read_file(path));
}

json report_to_json(const RankingReport& report) {
    json j;
    j["schema"] = kReportSchema;
    j["ranking"] = json::array();
    for (const RankedAlternative& r : report.ranking) {
        json e;
        e["rank"] = r.rank;
        e["name"] = r.name;
        e["score"] = r.score;
        e["accuracy"] = r.accuracy;
        e["tied_with_previous"] = r.tied_with_previous;
        e["aggregate"] = to_json(r.aggregate);
        j["ranking"].push_back(std::move(e));
    }
    return j;
}

RankingReport report_from_json(const json& j) {
    require_schema(j, kReportSchema);
    RankingReport report;
    const json& ranking = require(j, "ranking");
    if (!ranking.is_array()) throw ParseError("ranking must be an array");
    for (const json& e : ranking) {
        RankedAlternative r;
        const json& rank = require(e, "rank");
        if (!rank.is_number_integer()) {
            throw ParseError("rank must be an integer");
        }
        r.rank = rank.get<int>();
        r.name = as_string(require(e, "name"), "name");
        r.score = as_number(require(e, "score"), "score");
        r.accuracy = as_number(require(e, "accuracy"), "accuracy");
        const json& tied = require(e, "tied_with_previous");
        if (!tied.is_boolean()) {
            throw ParseError("tied_with_previous must be a boolean");
        }
        r.tied_with_previous = tied.get<bool>();
        r.aggregate = ivtrnn_from_json(require(e, "aggregate"));
        report.ranking.push_back(std::move(r));
    }
    return report;
}

std::string format_fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

double round_half_even(double v, int digits) {
    // snprintf converts the exact binary value with correct rounding and
    // ties to even; reading the text back gives the rounded double.
    return std::strtod(format_fixed(v, digits).c_str(), nullptr);
}

} // namespace ivtrnn
