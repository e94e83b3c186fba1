#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ivtrnn/core.hpp"
#include "ivtrnn/errors.hpp"

namespace ivtrnn {

// Single-valued neutrosophic grade triple. T, I and F are independent,
// so their sum may reach 3.
struct SvnsElement {
    double t{0};
    double i{0};
    double f{0};

    bool operator==(const SvnsElement&) const = default;
};

SvnsElement make_svns(double t, double i, double f);

// Interval-valued grade triple.
struct IvnsElement {
    UnitInterval t;
    UnitInterval i;
    UnitInterval f;

    bool operator==(const IvnsElement&) const = default;
};

IvnsElement make_ivns(UnitInterval t, UnitInterval i, UnitInterval f);

// Element-level operational laws. Addition/multiplication pair the
// probabilistic sum with the product (mirrored between T and I/F);
// union/intersection take componentwise max/min; the complement swaps
// T with F and reflects I. Inclusion orders T upward and I/F downward.
SvnsElement add(const SvnsElement& x, const SvnsElement& y);
SvnsElement mul(const SvnsElement& x, const SvnsElement& y);
SvnsElement join(const SvnsElement& x, const SvnsElement& y);
SvnsElement meet(const SvnsElement& x, const SvnsElement& y);
SvnsElement complement(const SvnsElement& x);
bool includes(const SvnsElement& x, const SvnsElement& y);
bool equals(const SvnsElement& x, const SvnsElement& y);

// Interval forms apply the scalar law to matching endpoints. The
// complement maps the indeterminacy interval to its image [1-hi, 1-lo]
// so the result is still a valid interval.
IvnsElement add(const IvnsElement& x, const IvnsElement& y);
IvnsElement mul(const IvnsElement& x, const IvnsElement& y);
IvnsElement join(const IvnsElement& x, const IvnsElement& y);
IvnsElement meet(const IvnsElement& x, const IvnsElement& y);
IvnsElement complement(const IvnsElement& x);
bool includes(const IvnsElement& x, const IvnsElement& y);
bool equals(const IvnsElement& x, const IvnsElement& y);

// Finite neutrosophic set: named universe points with one grade each,
// in a fixed order.
template <class E>
struct DiscreteSet {
    std::vector<std::string> universe;
    std::vector<E> values;

    bool operator==(const DiscreteSet&) const = default;
};

using SvnsSet = DiscreteSet<SvnsElement>;
using IvnsSet = DiscreteSet<IvnsElement>;

template <class E>
DiscreteSet<E> make_set(std::vector<std::string> universe,
                        std::vector<E> values) {
    if (universe.size() != values.size()) {
        throw ValidationError("universe has " +
                              std::to_string(universe.size()) +
                              " points but " + std::to_string(values.size()) +
                              " grades were given");
    }
    for (std::size_t i = 0; i < universe.size(); ++i) {
        for (std::size_t j = i + 1; j < universe.size(); ++j) {
            if (universe[i] == universe[j]) {
                throw ValidationError("duplicate universe point \"" +
                                      universe[i] + "\"");
            }
        }
    }
    return DiscreteSet<E>{std::move(universe), std::move(values)};
}

template <class E>
void require_same_universe(const DiscreteSet<E>& a, const DiscreteSet<E>& b) {
    if (a.universe != b.universe) {
        throw UniverseMismatchError(
            "pointwise operation over different universes");
    }
}

template <class E, class F>
DiscreteSet<E> pointwise(const DiscreteSet<E>& a, const DiscreteSet<E>& b,
                         F op) {
    require_same_universe(a, b);
    DiscreteSet<E> out{a.universe, {}};
    out.values.reserve(a.values.size());
    for (std::size_t k = 0; k < a.values.size(); ++k) {
        out.values.push_back(op(a.values[k], b.values[k]));
    }
    return out;
}

template <class E>
DiscreteSet<E> add(const DiscreteSet<E>& a, const DiscreteSet<E>& b) {
    return pointwise(a, b, [](const E& x, const E& y) { return add(x, y); });
}

template <class E>
DiscreteSet<E> mul(const DiscreteSet<E>& a, const DiscreteSet<E>& b) {
    return pointwise(a, b, [](const E& x, const E& y) { return mul(x, y); });
}

template <class E>
DiscreteSet<E> set_union(const DiscreteSet<E>& a, const DiscreteSet<E>& b) {
    return pointwise(a, b, [](const E& x, const E& y) { return join(x, y); });
}

template <class E>
DiscreteSet<E> set_intersection(const DiscreteSet<E>& a,
                                const DiscreteSet<E>& b) {
    return pointwise(a, b, [](const E& x, const E& y) { return meet(x, y); });
}

template <class E>
DiscreteSet<E> complement(const DiscreteSet<E>& a) {
    DiscreteSet<E> out{a.universe, {}};
    out.values.reserve(a.values.size());
    for (const E& v : a.values) out.values.push_back(complement(v));
    return out;
}

template <class E>
bool includes(const DiscreteSet<E>& a, const DiscreteSet<E>& b) {
    require_same_universe(a, b);
    for (std::size_t k = 0; k < a.values.size(); ++k) {
        if (!includes(a.values[k], b.values[k])) return false;
    }
    return true;
}

template <class E>
bool equals(const DiscreteSet<E>& a, const DiscreteSet<E>& b) {
    return includes(a, b) && includes(b, a);
}

// Worked example sets: quality attributes of a software product rated as
// single-valued and interval-valued neutrosophic grades, plus a pair of
// backup strategies rated the same two ways.
struct ReferenceSets {
    SvnsSet quality_svns;         // SECU, MAIN, AVAIL
    SvnsSet backup_svns;          // BKUP, MIRR
    IvnsSet quality_ivns;         // SECU, AVAIL
    IvnsSet backup_ivns;          // BKUP, MIRR
};

ReferenceSets reference_sets();

} // namespace ivtrnn
