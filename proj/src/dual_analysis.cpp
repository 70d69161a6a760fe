#include "twc/dual_analysis.hpp"

#include <stdexcept>

namespace twc {

namespace {

BigInt bpow(std::uint64_t b, std::uint64_t e) {
    BigInt base = b, r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// C(a, 0..a)
std::vector<BigInt> binom_row(std::uint64_t a) {
    std::vector<BigInt> row(a + 1);
    row[0] = 1;
    for (std::uint64_t t = 0; t < a; ++t) row[t + 1] = row[t] * (a - t) / (t + 1);
    return row;
}

BigInt exact_div(const BigInt& v, const BigInt& d, const char* what) {
    if (v % d != 0) throw std::runtime_error(std::string("expected divisibility failed in ") + what);
    return v / d;
}

}  // namespace

BigInt krawtchouk(std::uint64_t q, std::uint64_t n, std::uint64_t j, std::uint64_t i) {
    if (i > n || j > n) throw std::invalid_argument("krawtchouk arguments out of range");
    auto ri = binom_row(i);
    auto rni = binom_row(n - i);
    std::vector<BigInt> qm1pow(j + 1);
    qm1pow[0] = 1;
    for (std::uint64_t t = 1; t <= j; ++t) qm1pow[t] = qm1pow[t - 1] * (q - 1);
    std::uint64_t tlo = j > n - i ? j - (n - i) : 0;
    std::uint64_t thi = std::min(i, j);
    BigInt acc = 0;
    for (std::uint64_t t = tlo; t <= thi; ++t) {
        BigInt term = qm1pow[j - t] * ri[t] * rni[j - t];
        if (t & 1)
            acc -= term;
        else
            acc += term;
    }
    return acc;
}

WeightDistribution macwilliams_dual(const WeightDistribution& dist) {
    dist.validate();
    const std::uint64_t n = dist.n;
    const std::uint64_t q = dist.q;
    const BigInt qk = bpow(q, dist.k);

    std::vector<BigInt> qm1pow(n + 1);
    qm1pow[0] = 1;
    for (std::uint64_t t = 1; t <= n; ++t) qm1pow[t] = qm1pow[t - 1] * (q - 1);

    std::vector<BigInt> contrib(n + 1, 0);
    for (std::uint64_t i = 0; i <= n; ++i) {
        if (dist.counts[i] == 0) continue;
        auto ri = binom_row(i);
        auto rni = binom_row(n - i);
        for (std::uint64_t j = 0; j <= n; ++j) {
            std::uint64_t tlo = j > n - i ? j - (n - i) : 0;
            std::uint64_t thi = std::min(i, j);
            BigInt kji = 0;
            for (std::uint64_t t = tlo; t <= thi; ++t) {
                BigInt term = ri[t] * rni[j - t];
                if (q != 2) term *= qm1pow[j - t];
                if (t & 1)
                    kji -= term;
                else
                    kji += term;
            }
            contrib[j] += dist.counts[i] * kji;
        }
    }

    WeightDistribution dual;
    dual.n = n;
    dual.q = q;
    dual.k = std::uint32_t(n - dist.k);
    dual.counts.resize(n + 1);
    for (std::uint64_t j = 0; j <= n; ++j) {
        if (contrib[j] < 0)
            throw std::runtime_error("MacWilliams transform produced a negative coefficient");
        dual.counts[j] = exact_div(contrib[j], qk, "MacWilliams transform");
    }
    if (dual.total() != bpow(q, dual.k))
        throw std::runtime_error("MacWilliams transform total is not q^(n-k)");
    return dual;
}

DualParams dual_params_closed(std::uint64_t q, std::uint32_t s, CCase c_case) {
    bool ok = false;
    std::uint32_t d = 0;
    switch (c_case) {
        case CCase::Zero:
            if (q == 2 && s >= 3) { ok = true; d = 3; }
            if (q > 2 && s > 1) { ok = true; d = 2; }
            break;
        case CCase::NonzeroEvenQ: ok = true; d = 3; break;
        case CCase::NonzeroOddQ: ok = true; d = 2; break;
    }
    if (!ok)
        throw std::invalid_argument("no closed-form dual parameters for this (q, s, c) case");
    DualParams p;
    p.n = length_closed(q, s, c_case == CCase::Zero);
    p.k_dual = p.n - 2 * s;
    p.d_dual = d;
    return p;
}

DualLowWeight dual_low_weight_closed(std::uint64_t q, std::uint32_t s, CCase c_case) {
    const BigInt qs = bpow(q, s);
    const BigInt qs1 = bpow(q, s - 1);
    DualLowWeight r;
    switch (c_case) {
        case CCase::Zero: {
            if (s < 2)
                throw std::invalid_argument("dual low-weight closed forms need s > 1 when c = 0");
            r.a2 = exact_div(BigInt(q - 1) * (q - 2) * (qs + 1) * (qs1 - 1), 2, "dual A2");
            if (q == 2)
                r.a3 = exact_div(bpow(2, 3 * s - 4) * (qs - 3) - bpow(2, s - 2) * (2 * qs - 3) + 1,
                                 3, "dual A3");
            break;
        }
        case CCase::NonzeroEvenQ: {
            r.a2 = 0;
            BigInt inner = qs1 * (2 * q - 3) + qs1 * qs1 * (q - 1) * (q - 1) + 2 - q;
            r.a3 = exact_div(qs1 * (qs + 1) * (q - 1) * inner, 6, "dual A3");
            break;
        }
        case CCase::NonzeroOddQ:
            r.a2 = exact_div(qs1 * (q - 1) * (qs + 1), 2, "dual A2");
            break;
    }
    return r;
}

std::vector<MomentCheck> pless_moment_check(const WeightDistribution& dist,
                                            const WeightDistribution& dual) {
    if (dist.n != dual.n || dist.k + dual.k != dist.n)
        throw std::invalid_argument("moment check: mismatched primal/dual distributions");
    if (dual.counts[1] != 0)
        throw std::invalid_argument("moment check: requires a dual with no weight-1 words");

    const BigInt n = dist.n;
    const std::uint64_t q = dist.q;
    const BigInt qk = [&] {
        BigInt v = 1;
        for (std::uint32_t i = 0; i < dist.k; ++i) v *= q;
        return v;
    }();
    const BigInt sum2 = dist.power_moment(2);
    const BigInt sum3 = dist.power_moment(3);
    const BigInt a2d = dual.counts[2];
    const BigInt a3d = dist.n >= 3 ? dual.counts[3] : BigInt(0);

    std::vector<MomentCheck> out;
    // identities are cross-multiplied by q^2 / q^3 so small dimensions stay integral
    BigInt base2 = BigInt(q - 1) * n * (BigInt(q) * n - n + 1);
    out.push_back({"second_moment", BigInt(q) * q * sum2 == qk * (base2 + 2 * a2d), true});
    out.push_back({"second_moment_minus_variant",
                   BigInt(q) * q * sum2 == qk * (base2 - 2 * a2d), false});

    if (q == 2 && a2d == 0) {
        out.push_back({"third_moment_binary",
                       8 * sum3 == qk * (n * n * (n + 3) - 6 * a3d), true});
        out.push_back({"third_moment_binary_cubic_variant",
                       8 * sum3 == qk * (n * n * n * (n + 3) - 6 * a3d), false});
    }
    if (q % 2 == 0 && a2d == 0) {
        BigInt poly = BigInt(q) * q * n * n - 2 * q * n * n + 3 * q * n - q + n * n - 3 * n + 2;
        out.push_back({"third_moment_even_q",
                       BigInt(q) * q * q * sum3 == qk * (BigInt(q - 1) * n * poly - 6 * a3d),
                       true});
    }
    return out;
}

}  // namespace twc
