#include <doctest.h>

#include <array>
#include <map>
#include <random>

#include "twc/code_builder.hpp"

using namespace twc;

namespace {

std::map<std::uint64_t, std::uint64_t> support(const WeightDistribution& d) {
    std::map<std::uint64_t, std::uint64_t> m;
    for (std::uint64_t i = 0; i < d.counts.size(); ++i)
        if (d.counts[i] > 0) m[i] = d.counts[i].convert_to<std::uint64_t>();
    return m;
}

}  // namespace

TEST_CASE("defining sets") {
    TowerParams tw = build_tower(2, 1, 2);
    TowerMaps maps(tw);
    DefiningSet d0 = build_defining_set(tw, maps, 0);
    CHECK(d0.elements.size() == 5);
    // exactly the fifth roots of unity in F_16
    for (FieldElem x : d0.elements) CHECK(tw.pow(x, 5) == 1);
    CHECK(std::is_sorted(d0.elements.begin(), d0.elements.end()));

    DefiningSet d1 = build_defining_set(tw, maps, 1);
    CHECK(d1.elements.size() == 10);
    for (FieldElem x : d1.elements) CHECK(x != 0);

    TowerParams t4 = build_tower(2, 2, 1);
    TowerMaps m4(t4);
    CHECK(build_defining_set(t4, m4, t4.element_at(1, Level::Q)).elements.size() == 5);

    CHECK_THROWS_AS(build_defining_set(tw, maps, 7), std::invalid_argument);  // 7 not in F_2
}

TEST_CASE("closed-form lengths") {
    CHECK(length_closed(2, 3, true) == 27);
    CHECK(length_closed(9, 1, false) == 10);
    CHECK(length_closed(4, 2, false) == 68);
    CHECK(length_closed(2, 1, true) == 0);  // the empty c = 0, s = 1 family
    // defining-set size equals the closed form on every small tower
    for (auto [p, e, s] : {std::array<std::uint32_t, 3>{2, 1, 2}, {2, 1, 3}, {3, 1, 1}, {2, 2, 1},
                           {3, 1, 2}, {2, 2, 2}, {5, 1, 1}}) {
        TowerParams tw = build_tower(p, e, s);
        TowerMaps maps(tw);
        for (FieldElem c : maps.q_elems) {
            if (c == 0 && s == 1) continue;
            CHECK(build_defining_set(tw, maps, c).elements.size() ==
                  length_closed(tw.q, tw.s, c == 0));
        }
    }
}

TEST_CASE("generator matrices have full rank m") {
    TowerParams tw = build_tower(2, 1, 2);
    TowerMaps maps(tw);
    TraceCode c0 = build_trace_code(tw, maps, 0);
    CHECK(c0.gen.size() == 4);
    CHECK(c0.gen[0].size() == 5);
    CHECK(matrix_rank(tw, c0.gen) == 4);

    TraceCode c1 = build_trace_code(tw, maps, 1);
    CHECK(c1.gen.size() == 4);
    CHECK(c1.gen[0].size() == 10);
    CHECK(matrix_rank(tw, c1.gen) == 4);

    TowerParams t1 = build_tower(2, 1, 1);
    TowerMaps m1(t1);
    CHECK_THROWS_WITH_AS(build_trace_code(t1, m1, 0), "empty defining set: c = 0 requires s > 1",
                         std::invalid_argument);
}

TEST_CASE("codewords") {
    TowerParams tw = build_tower(2, 1, 2);
    TowerMaps maps(tw);
    TraceCode code = build_trace_code(tw, maps, 0);

    auto zero = codeword(tw, maps, code, 0);
    CHECK(std::all_of(zero.begin(), zero.end(), [](std::uint32_t v) { return v == 0; }));

    // weight 2 exactly when the norm-trace of b is nonzero
    for (std::uint64_t b = 1; b < tw.ambient; ++b) {
        auto w = codeword(tw, maps, code, FieldElem(b));
        std::uint32_t weight = 0;
        for (auto sym : w) weight += sym != 0;
        FieldElem t = tw.trace(tw.norm(FieldElem(b), Level::QM, Level::QS), Level::QS, Level::Q);
        CHECK(weight == (t != 0 ? 2 : 4));
    }

    // linearity over F_q via the subfield elements
    TowerParams t3 = build_tower(3, 1, 1);
    TowerMaps m3(t3);
    TraceCode code3 = build_trace_code(t3, m3, 1);
    std::mt19937 rng(23);
    std::uniform_int_distribution<std::uint32_t> pick(0, std::uint32_t(t3.ambient - 1));
    for (int i = 0; i < 100; ++i) {
        FieldElem b1 = pick(rng), b2 = pick(rng);
        auto w1 = codeword(t3, m3, code3, b1);
        auto w2 = codeword(t3, m3, code3, b2);
        auto ws = codeword(t3, m3, code3, t3.add(b1, b2));
        for (std::uint32_t j = 0; j < code3.n; ++j) {
            FieldElem sum = t3.add(m3.q_elems[w1[j]], m3.q_elems[w2[j]]);
            CHECK(m3.q_elems[ws[j]] == sum);
        }
    }
}

TEST_CASE("brute-force weight distributions match frozen enumerations") {
    TowerParams tw = build_tower(2, 1, 2);
    TowerMaps maps(tw);
    auto d0 = weight_distribution(tw, maps, build_trace_code(tw, maps, 0));
    CHECK(support(d0) == std::map<std::uint64_t, std::uint64_t>{{0, 1}, {2, 10}, {4, 5}});
    d0.validate();

    TowerParams t8 = build_tower(2, 1, 3);
    TowerMaps m8(t8);
    auto d8 = weight_distribution(t8, m8, build_trace_code(t8, m8, 0));
    CHECK(support(d8) == std::map<std::uint64_t, std::uint64_t>{{0, 1}, {12, 36}, {16, 27}});

    TowerParams t3 = build_tower(3, 1, 2);
    TowerMaps m3(t3);
    auto d3 = weight_distribution(t3, m3, build_trace_code(t3, m3, 1));
    CHECK(support(d3) == std::map<std::uint64_t, std::uint64_t>{{0, 1}, {18, 50}, {24, 30}});
}

TEST_CASE("closed-form distributions") {
    auto z = closed_form_distribution(2, 2, CCase::Zero);
    CHECK(z.n == 5);
    CHECK(z.counts[2] == 10);
    CHECK(z.counts[4] == 5);
    z.validate();

    auto odd = closed_form_distribution(3, 2, CCase::NonzeroOddQ);
    CHECK(odd.counts[18] == 50);
    CHECK(odd.counts[24] == 30);
    odd.validate();

    // the degenerate one-weight family: the lower class is empty
    auto even = closed_form_distribution(4, 1, CCase::NonzeroEvenQ);
    CHECK(even.n == 5);
    CHECK(even.counts[3] == 0);
    CHECK(even.counts[4] == 15);
    CHECK(even.nonzero_weights().size() == 1);
    even.validate();

    CHECK_THROWS_AS(closed_form_distribution(2, 1, CCase::Zero), std::invalid_argument);
}

TEST_CASE("oracle equivalence on every small parameter set") {
    for (auto [p, e, s] : {std::array<std::uint32_t, 3>{2, 1, 2}, {2, 1, 3}, {2, 1, 4}, {3, 1, 1},
                           {2, 2, 1}, {2, 2, 2}, {3, 1, 2}, {5, 1, 1}, {2, 3, 1}, {7, 1, 1},
                           {13, 1, 1}}) {
        TowerParams tw = build_tower(p, e, s);
        TowerMaps maps(tw);
        for (FieldElem c : maps.q_elems) {
            if (c == 0 && s == 1) continue;
            auto bf = weight_distribution(tw, maps, build_trace_code(tw, maps, c));
            auto cf = closed_form_distribution(tw.q, tw.s, classify_c_case(tw, c));
            CHECK(bf.n == cf.n);
            CHECK(bf.counts == cf.counts);
            CHECK(bf.nonzero_weights().size() <= 2);
            // the weight of a codeword depends on b only through the norm-trace value
            std::map<FieldElem, std::uint64_t> weight_by_t;
            TraceCode code = build_trace_code(tw, maps, c);
            for (std::uint64_t b = 1; b < tw.ambient; ++b) {
                auto w = codeword(tw, maps, code, FieldElem(b));
                std::uint64_t weight = 0;
                for (auto sym : w) weight += sym != 0;
                FieldElem t = maps.tr_s_to_q[maps.norm_qs[b]];
                auto [it, fresh] = weight_by_t.try_emplace(t, weight);
                CHECK(it->second == weight);
            }
        }
    }
}

TEST_CASE("defining sets with c = 0 are closed under scaling by F_q^*") {
    for (auto [p, e, s] : {std::array<std::uint32_t, 3>{2, 2, 2}, {3, 1, 2}, {5, 1, 1}}) {
        if (s == 1) continue;
        TowerParams tw = build_tower(p, e, s);
        TowerMaps maps(tw);
        DefiningSet d = build_defining_set(tw, maps, 0);
        for (FieldElem l : maps.q_elems) {
            if (l == 0) continue;
            for (FieldElem x : d.elements)
                CHECK(std::binary_search(d.elements.begin(), d.elements.end(), tw.mul(l, x)));
        }
    }
}

TEST_CASE("exactly two nonzero weights outside the degenerate family") {
    for (auto [p, e, s] : {std::array<std::uint32_t, 3>{2, 1, 2}, {2, 1, 3}, {3, 1, 2}, {2, 2, 2},
                           {2, 2, 1}, {3, 1, 1}, {5, 1, 1}, {2, 3, 1}}) {
        TowerParams tw = build_tower(p, e, s);
        TowerMaps maps(tw);
        for (FieldElem c : maps.q_elems) {
            if (c == 0 && s == 1) continue;
            auto dist = weight_distribution(tw, maps, build_trace_code(tw, maps, c));
            bool degenerate = tw.p == 2 && c != 0 && s == 1;
            CHECK(dist.nonzero_weights().size() == (degenerate ? 1 : 2));
        }
    }
}

TEST_CASE("projectivity") {
    TowerParams tw = build_tower(2, 1, 2);
    TowerMaps maps(tw);
    CHECK(is_projective(tw, build_trace_code(tw, maps, 1)));
    CHECK(is_projective(tw, build_trace_code(tw, maps, 0)));  // q = 2 allows c = 0 as well

    TowerParams t3 = build_tower(3, 1, 2);
    TowerMaps m3(t3);
    CHECK_FALSE(is_projective(t3, build_trace_code(t3, m3, 1)));

    TowerParams t4 = build_tower(2, 2, 2);
    TowerMaps m4(t4);
    CHECK_FALSE(is_projective(t4, build_trace_code(t4, m4, 0)));
    CHECK(is_projective(t4, build_trace_code(t4, m4, t4.element_at(1, Level::Q))));
}

TEST_CASE("minimality criterion") {
    TowerParams t8 = build_tower(2, 1, 3);
    TowerMaps m8(t8);
    auto r27 = minimality_check(weight_distribution(t8, m8, build_trace_code(t8, m8, 0)));
    CHECK(r27.holds);
    CHECK(r27.w_min == 12);
    CHECK(r27.w_max == 16);

    TowerParams tw = build_tower(2, 1, 2);
    TowerMaps maps(tw);
    auto r5 = minimality_check(weight_distribution(tw, maps, build_trace_code(tw, maps, 0)));
    CHECK_FALSE(r5.holds);  // 2/4 is exactly (q-1)/q, not above it
    CHECK(r5.w_min == 2);
    CHECK(r5.w_max == 4);

    auto r10 = minimality_check(weight_distribution(tw, maps, build_trace_code(tw, maps, 1)));
    CHECK(r10.holds);
    CHECK(r10.w_min == 4);
    CHECK(r10.w_max == 6);

    WeightDistribution zero;
    zero.n = 3;
    zero.q = 2;
    zero.k = 0;
    zero.counts = {BigInt(1), 0, 0, 0};
    CHECK_THROWS_AS(minimality_check(zero), std::invalid_argument);
}
