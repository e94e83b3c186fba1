#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ivtrnn/core.hpp"
#include "ivtrnn/pipeline.hpp"
#include "ivtrnn/ranking.hpp"

namespace ivtrnn {

// ordered_json keeps insertion order on output, which is what makes
// repeated runs byte-identical.
using json = nlohmann::ordered_json;

// Document schemas. A document announces its schema in a top-level
// "schema" field; readers reject anything else.
inline constexpr const char* kProblemSchema = "ivtrnn-problem/1";
inline constexpr const char* kNumberSchema = "ivtrnn-number/1";
inline constexpr const char* kNumbersSchema = "ivtrnn-numbers/1";
inline constexpr const char* kReportSchema = "ivtrnn-report/1";

json to_json(const Trapezoid& t); // [a, b, c, d]
json to_json(const TrNN& n);      // {truth, indet, falsity, heights}
json to_json(const IVTrNN& n);    // {lower, upper}

Trapezoid trapezoid_from_json(const json& j);
TrNN trnn_from_json(const json& j); // heights optional on input
IVTrNN ivtrnn_from_json(const json& j);

// A fully parsed ranking problem.
struct DecisionProblem {
    DecisionMatrix matrix;
    std::vector<double> weights;
    WeightMode weight_mode{WeightMode::Strict};
    int display_precision{4};
};

// Readers throw ParseError for unreadable structure (bad JSON, missing
// or mistyped fields, wrong schema tag) and ValidationError (or a more
// specific library error) for readable documents with invalid content.
DecisionProblem parse_problem(const std::string& text);
DecisionProblem load_problem(const std::string& path);

IVTrNN parse_number_document(const std::string& text);
IVTrNN load_number_document(const std::string& path);

struct NumbersDocument {
    std::vector<IVTrNN> numbers;
    std::vector<double> weights; // empty when the file gives none
    WeightMode weight_mode{WeightMode::Strict};
};

NumbersDocument parse_numbers_document(const std::string& text);
NumbersDocument load_numbers_document(const std::string& path);

json report_to_json(const RankingReport& report);
RankingReport report_from_json(const json& j);

// Fixed-point display formatting. The double is converted to decimal
// with correct rounding, ties to even, so repeated prints are stable.
std::string format_fixed(double v, int digits);
double round_half_even(double v, int digits);

} // namespace ivtrnn
