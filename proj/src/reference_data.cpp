#include "ivtrnn/pipeline.hpp"

namespace ivtrnn {

namespace {

TrNN term(double t1, double t2, double t3, double t4, double i1, double i2,
          double i3, double i4, double f1, double f2, double f3, double f4) {
    return make_trnn(make_trapezoid(t1, t2, t3, t4),
                     make_trapezoid(i1, i2, i3, i4),
                     make_trapezoid(f1, f2, f3, f4));
}

IVTrNN combined(const Trapezoid& lt, const Trapezoid& li, const Trapezoid& lf,
                const Trapezoid& ut, const Trapezoid& ui,
                const Trapezoid& uf) {
    return make_ivtrnn(make_trnn(lt, li, lf), make_trnn(ut, ui, uf));
}

ReferenceDataset build() {
    ReferenceDataset ref;

    ref.scale.define("Very Low", term(0.0, 0.1, 0.1, 0.2, //
                                      0.1, 0.1, 0.1, 0.1, //
                                      0.6, 0.7, 0.8, 0.9));
    ref.scale.define("Low", term(0.2, 0.3, 0.4, 0.5, //
                                 0.0, 0.1, 0.2, 0.3, //
                                 0.0, 0.1, 0.2, 0.2));
    ref.scale.define("High", term(0.4, 0.5, 0.6, 0.7, //
                                  0.0, 0.1, 0.2, 0.3, //
                                  0.1, 0.1, 0.1, 0.1));
    ref.scale.define("Very High", term(0.7, 0.7, 0.7, 0.7, //
                                       0.0, 0.1, 0.2, 0.3, //
                                       0.1, 0.1, 0.1, 0.1));

    auto cell = [](const char* lo, const char* hi) {
        return IntervalTermCell{lo, hi};
    };
    const char* VL = "Very Low";
    const char* L = "Low";
    const char* H = "High";
    const char* VH = "Very High";
    ref.matrix = make_interval_matrix(
        {"PW", "TF", "CT", "FR", "IR", "SM", "MM", "CK"},
        {"USF", "PER", "REL", "RBS", "SEC"},
        {
            {cell(L, H), cell(VL, VH), cell(L, VH), cell(L, H), cell(H, VH)},
            {cell(VL, H), cell(VL, VH), cell(H, VH), cell(L, VH),
             cell(L, H)},
            {cell(VL, VH), cell(H, VH), cell(VL, VH), cell(VL, VH),
             cell(L, H)},
            {cell(H, VH), cell(L, VH), cell(VL, H), cell(L, H), cell(H, VH)},
            {cell(L, VH), cell(H, VH), cell(L, H), cell(L, VH), cell(H, VH)},
            {cell(L, VH), cell(L, VH), cell(H, VH), cell(H, VH),
             cell(VL, H)},
            {cell(VL, VH), cell(VL, H), cell(VL, VH), cell(L, H),
             cell(H, VH)},
            {cell(VL, VH), cell(H, VH), cell(H, VH), cell(VL, H),
             cell(L, H)},
        });

    ref.stated_weights = {0.2, 0.25, 0.25, 0.1, 0.2};
    ref.uniform_weights = {0.25, 0.25, 0.25, 0.25, 0.25};

    // Published combined numbers, one row per alternative in matrix
    // order. Upper-level indeterminacy and falsity are identical across
    // all rows in the source table.
    const Trapezoid upper_indet = {0.0, 0.0562, 0.1337, 0.2220};
    const Trapezoid upper_falsity = {0.0562, 0.0562, 0.0562, 0.0562};
    auto row = [&](const char* name, const Trapezoid& lt, const Trapezoid& li,
                   const Trapezoid& lf, const Trapezoid& ut) {
        PublishedRow r;
        r.name = name;
        r.value = combined(lt, li, lf, ut, upper_indet, upper_falsity);
        return r;
    };
    ref.published_combined.push_back(
        row("PW", {0.2555, 0.3732, 0.4719, 0.5838},
            {0.0, 0.0562, 0.1125, 0.1687}, {0.0, 0.0915, 0.1591, 0.1638},
            {0.6967, 0.7206, 0.7473, 0.7780}));
    ref.published_combined.push_back(
        row("TF", {0.2240, 0.3437, 0.4273, 0.5437},
            {0.0, 0.0562, 0.0946, 0.1282}, {0.0, 0.1488, 0.2173, 0.2305},
            {0.6880, 0.7134, 0.7436, 0.7780}));
    ref.published_combined.push_back(
        row("CT", {0.1676, 0.2893, 0.3533, 0.4736},
            {0.0, 0.0562, 0.0795, 0.0974}, {0.0, 0.2420, 0.3181, 0.3475},
            {0.7360, 0.7477, 0.7614, 0.7780}));
    ref.published_combined.push_back(
        row("FR", {0.2592, 0.3786, 0.4611, 0.5783},
            {0.0, 0.0562, 0.0914, 0.1213}, {0.0, 0.1640, 0.2027, 0.2163},
            {0.6860, 0.7134, 0.7436, 0.7780}));
    // IR's lower falsity is printed with five components,
    // "(0.0562, 0.0562, 0,0.0946, 0.0946)"; the best-effort reading drops
    // the stray leading pair and keeps the ordered tail.
    PublishedRow ir =
        row("IR", {0.3448, 0.4589, 0.5688, 0.6743},
            {0.0, 0.0562, 0.1337, 0.2220}, {0.0, 0.0562, 0.0946, 0.0946},
            {0.7360, 0.7477, 0.7614, 0.7780});
    ir.falsity_reconstructed = true;
    ir.source_note = "lower falsity printed as "
                     "(0.0562, 0.0562, 0,0.0946, 0.0946); stored 4-tuple is "
                     "a best-effort reading, not authoritative";
    ref.published_combined.push_back(std::move(ir));
    ref.published_combined.push_back(
        row("SM", {0.3072, 0.4238, 0.5228, 0.6337},
            {0.0, 0.0562, 0.1125, 0.1687}, {0.0, 0.0915, 0.1337, 0.1377},
            {0.7360, 0.7477, 0.7614, 0.7780}));
    ref.published_combined.push_back(
        row("MM", {0.1583, 0.2803, 0.3400, 0.4611},
            {0.0, 0.0562, 0.0768, 0.0922}, {0.0, 0.2667, 0.3409, 0.3746},
            {0.6967, 0.7206, 0.7473, 0.7780}));
    ref.published_combined.push_back(
        row("CK", {0.2859, 0.4042, 0.4929, 0.6078},
            {0.0, 0.0562, 0.0979, 0.1354}, {0.0, 0.1350, 0.1705, 0.1797},
            {0.6967, 0.7206, 0.7473, 0.7780}));

    ref.published_scores = {{"IR", 0.8232}, {"SM", 0.8156}, {"CK", 0.8051},
                            {"PW", 0.8016}, {"FR", 0.7962}, {"TF", 0.7895},
                            {"CT", 0.772},  {"MM", 0.7593}};
    return ref;
}

} // namespace

const ReferenceDataset& reference_dataset() {
    static const ReferenceDataset ref = build();
    return ref;
}

} // namespace ivtrnn
