#include "twc/charsums.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace twc {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

}  // namespace

CycVec additive_char(const TowerParams& tw, FieldElem a, FieldElem x, Level level) {
    require(tw.in_level(a, level) && tw.in_level(x, level), "additive_char: element outside level");
    FieldElem t = tw.trace(tw.mul(a, x), level, Level::Prime);
    return CycVec::root_power(tw.p, t);
}

int quadratic_char(const TowerParams& tw, FieldElem x, Level level) {
    const std::uint64_t size = tw.level_size(level);
    require(size % 2 == 1, "quadratic_char: level size must be odd");
    require(x != 0, "quadratic_char: undefined at 0");
    require(tw.in_level(x, level), "quadratic_char: element outside level");
    return tw.pow(x, (size - 1) / 2) == 1 ? 1 : -1;
}

std::complex<double> mult_char_numeric(const TowerParams& tw, std::uint64_t j, FieldElem x,
                                       Level level) {
    require(x != 0, "mult_char_numeric: undefined at 0");
    require(tw.in_level(x, level), "mult_char_numeric: element outside level");
    const std::uint64_t size = tw.level_size(level);
    std::uint64_t k = tw.log_table[x] / tw.level_cofactor(level);
    double angle = 2.0 * std::numbers::pi * double(j % (size - 1)) * double(k) / double(size - 1);
    return {std::cos(angle), std::sin(angle)};
}

CycVec gauss_sum_quadratic(const TowerParams& tw, Level level) {
    const std::uint64_t size = tw.level_size(level);
    require(size % 2 == 1, "gauss_sum_quadratic: level size must be odd");
    const std::uint64_t cof = tw.level_cofactor(level);
    CycVec acc(tw.p);
    for (std::uint64_t t = 0; t < tw.ambient - 1; t += cof) {
        FieldElem x = tw.antilog_table[t];
        acc.add_root(tw.trace(x, level, Level::Prime), quadratic_char(tw, x, level));
    }
    return acc;
}

std::complex<double> quadratic_gauss_closed(std::uint32_t p, std::uint32_t e) {
    require(p % 2 == 1 && is_prime(p), "quadratic_gauss_closed: p must be an odd prime");
    double root_q = std::sqrt(double(ipow(p, e)));
    double sign = e % 2 == 0 ? -1.0 : 1.0;  // (-1)^(e-1)
    if (p % 4 == 1) return {sign * root_q, 0.0};
    // (-1)^(e-1) * i^e * sqrt(q)
    static const std::complex<double> i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return sign * i_pow[e % 4] * root_q;
}

CycVec quadratic_poly_sum(const TowerParams& tw, FieldElem a2, FieldElem a1, FieldElem a0,
                          FieldElem b, Level level) {
    require(a2 != 0, "quadratic_poly_sum: a2 = 0 is not a quadratic");
    require(b != 0, "quadratic_poly_sum: trivial character");
    for (FieldElem v : {a2, a1, a0, b})
        require(tw.in_level(v, level), "quadratic_poly_sum: coefficient outside level");
    CycVec acc(tw.p);
    for (FieldElem x : tw.subfield_elements(level)) {
        FieldElem fx = tw.add(tw.mul(a2, tw.mul(x, x)), tw.add(tw.mul(a1, x), a0));
        acc.add_root(tw.trace(tw.mul(b, fx), level, Level::Prime));
    }
    return acc;
}

CycVec quadratic_poly_sum_closed(const TowerParams& tw, FieldElem a2, FieldElem a1, FieldElem a0,
                                 FieldElem b, Level level) {
    require(a2 != 0, "quadratic_poly_sum_closed: a2 = 0 is not a quadratic");
    require(b != 0, "quadratic_poly_sum_closed: trivial character");
    const std::uint64_t size = tw.level_size(level);
    if (size % 2 == 0) {
        if (a2 != tw.mul(b, tw.mul(a1, a1))) return CycVec::integer(tw.p, 0);
        FieldElem t = tw.trace(tw.mul(b, a0), level, Level::Prime);
        return CycVec::root_power(tw.p, t, std::int64_t(size));
    }
    // absorb b into the coefficients, then complete the square
    FieldElem c2 = tw.mul(b, a2), c1 = tw.mul(b, a1), c0 = tw.mul(b, a0);
    FieldElem four = FieldElem(4 % tw.p);
    FieldElem shift = tw.sub(c0, tw.mul(tw.mul(c1, c1), tw.inv(tw.mul(four, c2))));
    int sign = quadratic_char(tw, c2, level);
    CycVec one_hot = CycVec::root_power(tw.p, tw.trace(shift, level, Level::Prime), sign);
    return one_hot * gauss_sum_quadratic(tw, level);
}

std::int64_t norm_form_sum_bruteforce(const TowerParams& tw, const TowerMaps& maps, FieldElem a,
                                      FieldElem b, FieldElem c) {
    require(a != 0 && tw.in_level(a, Level::QS), "norm-form sum: a must be in F_{q^s}^*");
    require(b < tw.ambient, "norm-form sum: b outside the ambient field");
    require(tw.in_level(c, Level::Q), "norm-form sum: c must be in F_q");
    CycVec acc(tw.p);
    for (FieldElem y : maps.q_elems) {
        if (y == 0) continue;
        std::uint32_t yc_exp = maps.zeta_exp[tw.mul(y, c)];
        for (std::uint64_t x = 1; x < tw.ambient; ++x) {
            FieldElem t = tw.add(maps.tr_s_to_q[tw.mul(a, maps.norm_qs[x])],
                                 maps.tr_m_to_q[tw.mul(b, FieldElem(x))]);
            acc.add_root(yc_exp + maps.zeta_exp[tw.mul(y, t)]);
        }
    }
    return acc.as_integer();
}

std::int64_t norm_form_sum_closed(const TowerParams& tw, FieldElem a, FieldElem b, FieldElem c) {
    require(a != 0 && tw.in_level(a, Level::QS), "norm-form sum: a must be in F_{q^s}^*");
    require(b < tw.ambient, "norm-form sum: b outside the ambient field");
    require(tw.in_level(c, Level::Q), "norm-form sum: c must be in F_q");
    FieldElem t = tw.trace(tw.mul(tw.norm(b, Level::QM, Level::QS), tw.inv(a)), Level::QS,
                           Level::Q);
    const std::int64_t q = std::int64_t(tw.q);
    const std::int64_t qs = std::int64_t(tw.level_size(Level::QS));
    if (c == 0) return t == 0 ? (qs + 1) * (1 - q) : qs + 1 - q;
    if (t != 0 && c == t) return qs + 1 - qs * q;
    return qs + 1;
}

std::int64_t weight_sum_bruteforce(const TowerParams& tw, const TowerMaps& maps, FieldElem b,
                                   FieldElem c) {
    require(b != 0 && b < tw.ambient, "weight sum: b must be in F_{q^m}^*");
    require(tw.in_level(c, Level::Q), "weight sum: c must be in F_q");
    CycVec acc(tw.p);
    for (FieldElem y : maps.q_elems) {
        if (y == 0) continue;
        for (FieldElem z : maps.q_elems) {
            if (z == 0) continue;
            std::uint32_t zc_exp = maps.zeta_exp[tw.mul(z, c)];
            for (std::uint64_t x = 1; x < tw.ambient; ++x) {
                std::uint32_t e1 = maps.zeta_exp[tw.mul(y, maps.tr_m_to_q[tw.mul(b, FieldElem(x))])];
                std::uint32_t e2 = maps.zeta_exp[tw.mul(z, maps.tr_s_to_q[maps.norm_qs[x]])];
                acc.add_root(zc_exp + e1 + e2);
            }
        }
    }
    return acc.as_integer();
}

std::int64_t weight_sum_closed(const TowerParams& tw, FieldElem b, FieldElem c) {
    require(b != 0 && b < tw.ambient, "weight sum: b must be in F_{q^m}^*");
    require(tw.in_level(c, Level::Q), "weight sum: c must be in F_q");
    FieldElem big_t = tw.trace(tw.norm(b, Level::QM, Level::QS), Level::QS, Level::Q);
    const std::int64_t q = std::int64_t(tw.q);
    const std::int64_t qs = std::int64_t(tw.level_size(Level::QS));
    if (c == 0) return big_t == 0 ? -(q - 1) * (q - 1) * (qs + 1) : (q - 1) * (qs - q + 1);
    if (big_t == 0) return (qs + 1) * (q - 1);
    if (tw.p == 2) return q - 1 - qs;
    std::int64_t sign = (std::uint64_t(tw.e) * ((tw.p - 1) / 2)) % 2 == 0 ? 1 : -1;
    int eta = quadratic_char(tw, tw.neg(tw.mul(c, big_t)), Level::Q);
    return (q - 1) - qs - qs * q * sign * eta;
}

CharSumKernel::CharSumKernel(const TowerParams& tw, const TowerMaps& maps)
    : tw_(tw), maps_(maps), q_(std::uint32_t(tw.q)) {
    q_add_.resize(std::size_t(q_) * q_);
    for (std::uint32_t i = 0; i < q_; ++i)
        for (std::uint32_t j = 0; j < q_; ++j)
            q_add_[std::size_t(i) * q_ + j] =
                maps.q_index[tw.add(maps.q_elems[i], maps.q_elems[j])];

    unit_row_.reserve(q_);
    for (std::uint32_t t = 0; t < q_; ++t) {
        CycVec row(tw.p);
        for (FieldElem y : maps.q_elems)
            if (y != 0) row.add_root(maps.zeta_exp[tw.mul(y, maps.q_elems[t])]);
        unit_row_.push_back(row.canonical());
    }
    row_class_.resize(q_);
    for (std::uint32_t t = 0; t < q_; ++t) {
        std::uint32_t cls = std::uint32_t(row_reps_.size());
        for (std::uint32_t k = 0; k < row_reps_.size(); ++k)
            if (row_reps_[k] == unit_row_[t]) {
                cls = k;
                break;
            }
        if (cls == row_reps_.size()) row_reps_.push_back(unit_row_[t]);
        row_class_[t] = cls;
    }
    const std::size_t nc = row_reps_.size();
    rep_products_.reserve(nc * nc);
    for (std::size_t i = 0; i < nc; ++i)
        for (std::size_t j = 0; j < nc; ++j) rep_products_.push_back(row_reps_[i] * row_reps_[j]);

    hist_.resize(q_);
    hist2_.resize(std::size_t(q_) * q_);
}

std::vector<std::int64_t> CharSumKernel::norm_form_all_c(FieldElem a, FieldElem b) {
    require(a != 0 && tw_.in_level(a, Level::QS), "norm-form sum: a must be in F_{q^s}^*");
    std::fill(hist_.begin(), hist_.end(), 0);
    for (std::uint64_t x = 1; x < tw_.ambient; ++x) {
        FieldElem t = tw_.add(maps_.tr_s_to_q[tw_.mul(a, maps_.norm_qs[x])],
                              maps_.tr_m_to_q[tw_.mul(b, FieldElem(x))]);
        ++hist_[maps_.q_index[t]];
    }
    const std::size_t nc = row_reps_.size();
    std::vector<std::int64_t> out(q_);
    std::vector<std::int64_t> cls_mass(nc);
    for (std::uint32_t ci = 0; ci < q_; ++ci) {
        std::fill(cls_mass.begin(), cls_mass.end(), 0);
        for (std::uint32_t ti = 0; ti < q_; ++ti)
            cls_mass[row_class_[q_add_[std::size_t(ti) * q_ + ci]]] += hist_[ti];
        CycVec acc(tw_.p);
        for (std::size_t k = 0; k < nc; ++k)
            if (cls_mass[k] != 0) acc.add_scaled(row_reps_[k], cls_mass[k]);
        out[ci] = acc.as_integer();
    }
    return out;
}

std::vector<std::int64_t> CharSumKernel::weight_all_c(FieldElem b) {
    require(b != 0 && b < tw_.ambient, "weight sum: b must be in F_{q^m}^*");
    std::fill(hist2_.begin(), hist2_.end(), 0);
    for (std::uint64_t x = 1; x < tw_.ambient; ++x) {
        std::uint32_t t1 = maps_.q_index[maps_.tr_m_to_q[tw_.mul(b, FieldElem(x))]];
        std::uint32_t t2 = maps_.q_index[maps_.tr_s_to_q[maps_.norm_qs[x]]];
        ++hist2_[std::size_t(t1) * q_ + t2];
    }
    const std::size_t nc = row_reps_.size();
    // mass of the y-row classes per t2 value
    std::vector<std::int64_t> gmass(std::size_t(q_) * nc, 0);
    for (std::uint32_t t1 = 0; t1 < q_; ++t1) {
        std::uint32_t k1 = row_class_[t1];
        const std::int64_t* h = &hist2_[std::size_t(t1) * q_];
        for (std::uint32_t t2 = 0; t2 < q_; ++t2)
            if (h[t2] != 0) gmass[std::size_t(t2) * nc + k1] += h[t2];
    }
    std::vector<std::int64_t> out(q_);
    std::vector<std::int64_t> pair_mass(nc * nc);
    for (std::uint32_t ci = 0; ci < q_; ++ci) {
        std::fill(pair_mass.begin(), pair_mass.end(), 0);
        for (std::uint32_t t2 = 0; t2 < q_; ++t2) {
            std::uint32_t k2 = row_class_[q_add_[std::size_t(t2) * q_ + ci]];
            for (std::size_t k1 = 0; k1 < nc; ++k1)
                pair_mass[k1 * nc + k2] += gmass[std::size_t(t2) * nc + k1];
        }
        CycVec acc(tw_.p);
        for (std::size_t k1 = 0; k1 < nc; ++k1)
            for (std::size_t k2 = 0; k2 < nc; ++k2)
                if (pair_mass[k1 * nc + k2] != 0)
                    acc.add_scaled(rep_products_[k1 * nc + k2], pair_mass[k1 * nc + k2]);
        out[ci] = acc.as_integer();
    }
    return out;
}

}  // namespace twc
