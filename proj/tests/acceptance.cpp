// End-to-end acceptance checks. Each criterion prints exactly one
// [PASS]/[FAIL] line on stdout; the exit code is the number of failures.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ivtrnn/arithmetic.hpp"
#include "ivtrnn/json_io.hpp"
#include "ivtrnn/pipeline.hpp"
#include "ivtrnn/ranking.hpp"
#include "ivtrnn/set_laws.hpp"
#include "test_support.hpp"

using namespace ivtrnn;
using testsup::Gen;

namespace {

int failures = 0;

void report(int n, const char* what, bool ok) {
    std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", n, what);
    if (!ok) ++failures;
}

void detail(const std::string& line) {
    std::fprintf(stderr, "        %s\n", line.c_str());
}

const PublishedRow& published(const char* name) {
    for (const PublishedRow& row : reference_dataset().published_combined) {
        if (row.name == name) return row;
    }
    throw std::runtime_error("row not bundled");
}

// ---- criterion 1: score of the verbatim PW combined row ----------------

bool golden_score_chain() {
    const PublishedRow& pw = published("PW");
    const auto t0 = std::chrono::steady_clock::now();
    const double s = score(pw.value);
    const auto t1 = std::chrono::steady_clock::now();
    const double ms =
        std::chrono::duration<double, std::milli>(t1 - t0).count();
    bool ok = std::abs(s - 0.8016) <= 5e-4;
    if (!ok) detail("PW score " + std::to_string(s) + " not within 5e-4");
    if (ms >= 1.0) {
        detail("scoring took " + std::to_string(ms) + " ms");
        ok = false;
    }
    return ok;
}

// ---- criterion 2: combined numbers under uniform 0.25 weights ----------

bool golden_aggregation_chain() {
    const ReconcileReport rec = reconcile_reference();
    bool ok = true;
    for (const RowCheck& row : rec.uniform.rows) {
        const bool expected = row.name == "PW" || row.name == "CT" ||
                              row.name == "IR" || row.name == "SM";
        if (row.match != expected) {
            detail("row " + row.name + " verdict " +
                   (row.match ? "MATCH" : "MISMATCH") + ", expected " +
                   (expected ? "MATCH" : "MISMATCH"));
            ok = false;
        }
        if (row.name == "PW") {
            const Trapezoid& t = row.computed.lower.truth;
            const bool prints = format_fixed(t.a, 4) == "0.2555" &&
                                format_fixed(t.b, 4) == "0.3732" &&
                                format_fixed(t.c, 4) == "0.4719" &&
                                format_fixed(t.d, 4) == "0.5838";
            if (!prints) {
                detail("PW lower truth prints as (" + format_fixed(t.a, 4) +
                       ", " + format_fixed(t.b, 4) + ", " +
                       format_fixed(t.c, 4) + ", " + format_fixed(t.d, 4) +
                       ")");
                ok = false;
            }
            const double plateau = row.computed.lower.indet.b;
            if (std::abs(plateau - std::pow(0.1, 1.25)) > 1e-12 ||
                format_fixed(plateau, 4) != "0.0562") {
                detail("PW indeterminacy plateau " +
                       format_fixed(plateau, 6) + " is not 0.1^1.25");
                ok = false;
            }
        }
    }
    return ok;
}

// ---- criterion 3: ranking of the verbatim combined rows ----------------

bool verbatim_ranking() {
    const ReferenceDataset& ref = reference_dataset();
    std::vector<std::string> names;
    std::vector<IVTrNN> numbers;
    for (const PublishedRow& row : ref.published_combined) {
        names.push_back(row.name);
        numbers.push_back(row.value);
    }
    const RankingReport ranked = rank_numbers(names, numbers);
    const std::vector<std::string> expected{"IR", "SM", "CK", "PW",
                                            "FR", "TF", "CT", "MM"};
    bool ok = true;
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (ranked.ranking[i].name != expected[i]) {
            detail("position " + std::to_string(i + 1) + " is " +
                   ranked.ranking[i].name + ", expected " + expected[i]);
            ok = false;
        }
    }
    if (ref.published_scores.front().first != "IR" ||
        ref.published_scores.front().second != 0.8232 ||
        ref.published_scores.back().first != "MM" ||
        ref.published_scores.back().second != 0.7593) {
        detail("bundled score table endpoints are off");
        ok = false;
    }
    for (const auto& [name, pub_score] : ref.published_scores) {
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (names[i] != name) continue;
            const double delta = std::abs(score(numbers[i]) - pub_score);
            if (delta > 6e-3) {
                detail("row " + name + " recomputed score off by " +
                       std::to_string(delta));
                ok = false;
            }
        }
    }
    return ok;
}

// ---- criterion 4: closed form vs scale-then-add fold -------------------

bool oracle_equivalence() {
    Gen gen(0xacce0004);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const std::size_t m = 1 + gen.index(5);
        std::vector<IVTrNN> in;
        in.reserve(m);
        for (std::size_t j = 0; j < m; ++j) in.push_back(gen.number(true));
        const WeightVector w = (i % 2 == 0)
                                   ? WeightVector(gen.strict_weights(m))
                                   : WeightVector(gen.relaxed_weights(m),
                                                  WeightMode::Relaxed);
        worst = std::max(worst, testsup::max_delta(ivtrnwaa(in, w),
                                                   ivtrnwaa_fold(in, w)));
    }
    const bool ok = worst <= 1e-12;
    if (!ok) detail("worst route deviation " + std::to_string(worst));
    return ok;
}

// ---- criterion 5: algebraic property suite ------------------------------

bool property_suite() {
    Gen gen(0xacce0005);
    const double tol = 1e-12;
    bool ok = true;
    auto fail = [&](const char* what, int i) {
        detail(std::string(what) + " violated at input " + std::to_string(i));
        ok = false;
    };
    auto bump = [](const Trapezoid& t, double d) {
        auto clip = [](double v) { return std::min(std::max(v, 0.0), 1.0); };
        return Trapezoid{clip(t.a + d), clip(t.b + d), clip(t.c + d),
                         clip(t.d + d)};
    };

    for (int i = 0; i < 500 && ok; ++i) {
        const IVTrNN x = gen.number(true);
        const IVTrNN y = gen.number(true);
        const IVTrNN z = gen.number(true);
        const double l1 = gen.lambda();
        const double l2 = gen.lambda();

        if (testsup::max_delta(add(x, y), add(y, x)) > tol ||
            testsup::max_delta(mul(x, y), mul(y, x)) > tol) {
            fail("commutativity", i);
        }
        if (testsup::max_delta(add(add(x, y), z), add(x, add(y, z))) > tol ||
            testsup::max_delta(mul(mul(x, y), z), mul(x, mul(y, z))) > tol) {
            fail("associativity", i);
        }
        if (testsup::max_delta(scale(1.0, x), x) > tol ||
            testsup::max_delta(pow(x, 1.0), x) > tol) {
            fail("unit scalar identities", i);
        }
        if (testsup::max_delta(scale(l1, add(x, y)),
                               add(scale(l1, x), scale(l1, y))) > tol) {
            fail("scalar distribution over addition", i);
        }
        if (testsup::max_delta(scale(l1 + l2, x),
                               add(scale(l1, x), scale(l2, x))) > tol) {
            fail("scalar-sum distribution", i);
        }
        for (const IVTrNN& r : {add(x, y), mul(x, y), scale(l1, x),
                                pow(x, l2)}) {
            if (!testsup::valid(r)) fail("closure and ordering", i);
        }

        const std::size_t m = 1 + gen.index(5);
        const WeightVector w(gen.strict_weights(m));
        const std::vector<IVTrNN> copies(m, x);
        if (testsup::max_delta(ivtrnwaa(copies, w), x) > tol) {
            fail("aggregation idempotency", i);
        }
        std::vector<IVTrNN> mixed;
        for (std::size_t j = 0; j < m; ++j) mixed.push_back(gen.number(true));
        const IVTrNN agg = ivtrnwaa(mixed, w);
        if (!testsup::valid(agg)) fail("aggregation closure", i);
        const double s = score(agg);
        const double h = accuracy(agg);
        if (s < 0.0 || s > 1.0 || h < -1.0 || h > 1.0) {
            fail("score/accuracy range", i);
        }

        IVTrNN up = x;
        up.lower.truth = bump(x.lower.truth, 0.01);
        up.upper.truth = bump(x.upper.truth, 0.01);
        IVTrNN down = x;
        down.lower.truth = bump(x.lower.truth, -0.01);
        down.upper.truth = bump(x.upper.truth, -0.01);
        IVTrNN worse = x;
        worse.lower.indet = bump(x.lower.indet, 0.01);
        worse.upper.falsity = bump(x.upper.falsity, 0.01);
        if (score(up) < score(x) - tol || score(down) > score(x) + tol ||
            score(worse) > score(x) + tol) {
            fail("score monotonicity", i);
        }

        const IVTrNN tri = gen.number_triangular();
        if (score_triangular(tri) != score(tri) ||
            accuracy_triangular(tri) != accuracy(tri)) {
            fail("triangular reductions (exact)", i);
        }
    }
    return ok;
}

// ---- criterion 6: set-theoretic law suite --------------------------------

bool set_law_suite() {
    Gen gen(0xacce0006);
    bool ok = true;
    auto fail = [&](const char* what) {
        detail(what);
        ok = false;
    };

    const SvnsElement c = complement(make_svns(0.7, 0.2, 0.2));
    if (std::abs(c.t - 0.2) > 1e-12 || std::abs(c.i - 0.8) > 1e-12 ||
        std::abs(c.f - 0.7) > 1e-12) {
        fail("complement of (0.7,0.2,0.2) is not (0.2,0.8,0.7)");
    }

    const ReferenceSets ref = reference_sets();
    auto check_svns_pair = [&](const SvnsSet& a, const SvnsSet& b) {
        if (!(complement(set_union(a, b)) ==
              set_intersection(complement(a), complement(b))) ||
            !(complement(set_intersection(a, b)) ==
              set_union(complement(a), complement(b)))) {
            fail("De Morgan (single-valued)");
        }
        if (!(set_union(a, a) == a) || !(set_intersection(a, a) == a)) {
            fail("idempotency (single-valued)");
        }
        for (std::size_t k = 0; k < a.values.size(); ++k) {
            const SvnsElement& e = a.values[k];
            const SvnsElement cc = complement(complement(e));
            if (std::abs(cc.t - e.t) > 1e-12 || std::abs(cc.i - e.i) > 1e-12 ||
                std::abs(cc.f - e.f) > 1e-12) {
                fail("double complement (single-valued)");
            }
        }
    };
    auto check_ivns_pair = [&](const IvnsSet& a, const IvnsSet& b) {
        if (!(complement(set_union(a, b)) ==
              set_intersection(complement(a), complement(b))) ||
            !(complement(set_intersection(a, b)) ==
              set_union(complement(a), complement(b)))) {
            fail("De Morgan (interval-valued)");
        }
        if (!(set_union(a, a) == a) || !(set_intersection(a, a) == a)) {
            fail("idempotency (interval-valued)");
        }
        for (std::size_t k = 0; k < a.values.size(); ++k) {
            const IvnsElement& e = a.values[k];
            const IvnsElement cc = complement(complement(e));
            if (!(cc.t == e.t) || !(cc.f == e.f) ||
                std::abs(cc.i.lo - e.i.lo) > 1e-12 ||
                std::abs(cc.i.hi - e.i.hi) > 1e-12) {
                fail("double complement (interval-valued)");
            }
        }
    };

    // Bundled example sets, paired within a shared universe.
    check_svns_pair(ref.quality_svns, ref.quality_svns);
    check_svns_pair(ref.backup_svns, ref.backup_svns);
    check_ivns_pair(ref.quality_ivns, ref.quality_ivns);
    check_ivns_pair(ref.backup_ivns, ref.backup_ivns);

    for (int i = 0; i < 500 && ok; ++i) {
        auto svns = [&] {
            return SvnsElement{gen.unit(), gen.unit(), gen.unit()};
        };
        const SvnsSet a{{"x1", "x2", "x3"}, {svns(), svns(), svns()}};
        const SvnsSet b{{"x1", "x2", "x3"}, {svns(), svns(), svns()}};
        check_svns_pair(a, b);
        auto iv = [&] {
            const double p = gen.unit();
            const double q = gen.unit();
            return UnitInterval{std::min(p, q), std::max(p, q)};
        };
        const IvnsSet ia{{"x1", "x2"},
                         {IvnsElement{iv(), iv(), iv()},
                          IvnsElement{iv(), iv(), iv()}}};
        const IvnsSet ib{{"x1", "x2"},
                         {IvnsElement{iv(), iv(), iv()},
                          IvnsElement{iv(), iv(), iv()}}};
        check_ivns_pair(ia, ib);
    }
    return ok;
}

// ---- criterion 7: extreme elements --------------------------------------

bool extreme_elements() {
    const Trapezoid ones{1.0, 1.0, 1.0, 1.0};
    const Trapezoid zeros{0.0, 0.0, 0.0, 0.0};
    const TrNN top = make_trnn(ones, zeros, zeros, 1.0, 0.0, 0.0);
    const TrNN bottom = make_trnn(zeros, ones, ones, 0.0, 1.0, 1.0);
    const IVTrNN largest = make_ivtrnn(top, top);
    const IVTrNN smallest = make_ivtrnn(bottom, bottom);
    bool ok = true;
    if (score(largest) != 1.0 || accuracy(largest) != 1.0) {
        detail("largest element scored (" + std::to_string(score(largest)) +
               ", " + std::to_string(accuracy(largest)) + ")");
        ok = false;
    }
    if (score(smallest) != 0.0 || accuracy(smallest) != -1.0) {
        detail("smallest element scored (" + std::to_string(score(smallest)) +
               ", " + std::to_string(accuracy(smallest)) + ")");
        ok = false;
    }
    return ok;
}

// ---- criterion 8: the installed CLI emits the same verdicts -------------

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool cli_verdicts(double elapsed_seconds) {
    bool ok = true;
    const std::string exe = std::string("\"") + IVTRNN_CLI_PATH + "\"";

    const std::string t4 = "acceptance_cli_table4.json";
    int rc = std::system((exe +
                          " reproduce --table 4 --regime uniform025"
                          " --format json > " +
                          t4 + " 2> " + t4 + ".err")
                             .c_str());
    if (rc != 0) {
        detail("table-4 invocation exited with status " + std::to_string(rc));
        ok = false;
    } else {
        const json j = json::parse(slurp(t4), nullptr, false);
        const std::vector<std::string> expect{"PW", "CT", "IR", "SM"};
        if (j.is_discarded() ||
            j.value("schema", "") != "ivtrnn-reconcile-combined/1" ||
            j.value("regime", "") != "uniform025" ||
            j.at("matching_rows").get<std::vector<std::string>>() != expect) {
            detail("table-4 output does not carry the criterion-2 verdicts");
            ok = false;
        }
    }

    const std::string t5 = "acceptance_cli_table5.json";
    rc = std::system(
        (exe + " reproduce --table 5 --format json > " + t5 + " 2> " + t5 +
         ".err")
            .c_str());
    if (rc != 0) {
        detail("table-5 invocation exited with status " + std::to_string(rc));
        ok = false;
    } else {
        const json j = json::parse(slurp(t5), nullptr, false);
        bool verdicts = !j.is_discarded() &&
                        j.value("order_agrees", false) == true;
        if (verdicts) {
            for (const auto& sc : j.at("scores")) {
                const std::string name = sc.at("name").get<std::string>();
                const bool expect_consistent = name != "IR" && name != "MM";
                verdicts = verdicts &&
                           sc.at("within_publication_tolerance") == true &&
                           sc.at("consistent") == expect_consistent;
            }
        }
        if (!verdicts) {
            detail("table-5 output does not carry the criterion-3 verdicts");
            ok = false;
        }
    }

    if (elapsed_seconds >= 5.0) {
        detail("suite took " + std::to_string(elapsed_seconds) + " s");
        ok = false;
    }
    return ok;
}

} // namespace

int main() {
    const auto start = std::chrono::steady_clock::now();

    report(1, "score of the verbatim PW combined row is 0.8016 +/- 5e-4",
           golden_score_chain());
    report(2,
           "uniform-0.25 aggregation reproduces rows PW, CT, IR, SM and "
           "flags TF, FR, MM, CK",
           golden_aggregation_chain());
    report(3,
           "verbatim combined rows rank IR > SM > CK > PW > FR > TF > CT > "
           "MM within score tolerance",
           verbatim_ranking());
    report(4, "closed-form aggregation equals the scale-then-add fold",
           oracle_equivalence());
    report(5, "algebraic property suite on randomized inputs",
           property_suite());
    report(6, "set-theoretic law suite on bundled and randomized sets",
           set_law_suite());
    report(7, "extreme elements score (1, 1) and (0, -1)",
           extreme_elements());

    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    report(8, "command-line reproduction emits the same verdicts in time",
           cli_verdicts(elapsed));

    return failures;
}
