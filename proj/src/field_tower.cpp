#include "twc/field_tower.hpp"

#include <algorithm>
#include <cassert>

namespace twc {

const char* level_name(Level l) {
    switch (l) {
        case Level::Prime: return "prime";
        case Level::Q: return "q";
        case Level::QS: return "q^s";
        case Level::QM: return "q^m";
    }
    return "?";
}

bool is_prime(std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

std::uint64_t TowerParams::level_size(Level l) const {
    switch (l) {
        case Level::Prime: return p;
        case Level::Q: return q;
        case Level::QS: {
            std::uint64_t r = 1;
            for (std::uint32_t i = 0; i < s; ++i) r *= q;
            return r;
        }
        case Level::QM: return ambient;
    }
    return 0;
}

std::uint32_t TowerParams::level_degree(Level l) const {
    switch (l) {
        case Level::Prime: return 1;
        case Level::Q: return e;
        case Level::QS: return e * s;
        case Level::QM: return ext_degree;
    }
    return 0;
}

std::uint64_t TowerParams::level_cofactor(Level l) const {
    return (ambient - 1) / (level_size(l) - 1);
}

bool TowerParams::in_level(FieldElem x, Level l) const {
    if (x == 0) return true;
    return log_table[x] % level_cofactor(l) == 0;
}

FieldElem TowerParams::add(FieldElem a, FieldElem b) const {
    if (p == 2) return a ^ b;
    FieldElem r = 0;
    std::uint32_t place = 1;
    while (a != 0 || b != 0) {
        r += place * ((a % p + b % p) % p);
        a /= p;
        b /= p;
        place *= p;
    }
    return r;
}

FieldElem TowerParams::neg(FieldElem a) const {
    if (p == 2) return a;
    FieldElem r = 0;
    std::uint32_t place = 1;
    while (a != 0) {
        std::uint32_t d = a % p;
        if (d != 0) r += place * (p - d);
        a /= p;
        place *= p;
    }
    return r;
}

FieldElem TowerParams::mul(FieldElem a, FieldElem b) const {
    if (a == 0 || b == 0) return 0;
    std::uint64_t t = std::uint64_t(log_table[a]) + log_table[b];
    if (t >= ambient - 1) t -= ambient - 1;
    return antilog_table[t];
}

FieldElem TowerParams::inv(FieldElem a) const {
    if (a == 0) throw std::domain_error("field inversion of 0");
    std::uint64_t t = log_table[a];
    return antilog_table[t == 0 ? 0 : ambient - 1 - t];
}

FieldElem TowerParams::pow(FieldElem x, std::uint64_t t) const {
    if (x == 0) return t == 0 ? 1 : 0;
    std::uint64_t lt = (std::uint64_t(log_table[x]) * (t % (ambient - 1))) % (ambient - 1);
    return antilog_table[lt];
}

void TowerParams::check_nested(Level from, Level to) const {
    if (level_degree(to) > level_degree(from))
        throw std::invalid_argument(std::string("levels not nested: ") + level_name(to) +
                                    " is not a subfield of " + level_name(from));
}

void TowerParams::check_member(FieldElem x, Level l) const {
    if (x >= ambient || !in_level(x, l))
        throw std::invalid_argument("element " + std::to_string(x) + " is not in level " +
                                    level_name(l));
}

FieldElem TowerParams::trace(FieldElem x, Level from, Level to) const {
    check_nested(from, to);
    check_member(x, from);
    std::uint64_t sigma = level_size(to);
    std::uint32_t d = level_degree(from) / level_degree(to);
    FieldElem acc = 0;
    FieldElem y = x;
    for (std::uint32_t i = 0; i < d; ++i) {
        acc = add(acc, y);
        y = pow(y, sigma);
    }
    return acc;
}

FieldElem TowerParams::norm(FieldElem x, Level from, Level to) const {
    check_nested(from, to);
    check_member(x, from);
    if (x == 0) return 0;
    std::uint64_t exponent = (level_size(from) - 1) / (level_size(to) - 1);
    return pow(x, exponent);
}

std::vector<FieldElem> TowerParams::subfield_elements(Level l) const {
    switch (l) {
        case Level::Prime: return prime_elems_;
        case Level::Q: return q_elems_;
        case Level::QS: return qs_elems_;
        case Level::QM: {
            std::vector<FieldElem> all(ambient);
            for (std::uint64_t i = 0; i < ambient; ++i) all[i] = FieldElem(i);
            return all;
        }
    }
    return {};
}

std::uint32_t TowerParams::canonical_index(FieldElem x, Level l) const {
    check_member(x, l);
    if (l == Level::QM) return x;
    const std::vector<FieldElem>* elems = l == Level::Prime ? &prime_elems_
                                        : l == Level::Q     ? &q_elems_
                                                            : &qs_elems_;
    auto it = std::lower_bound(elems->begin(), elems->end(), x);
    assert(it != elems->end() && *it == x);
    return std::uint32_t(it - elems->begin());
}

FieldElem TowerParams::element_at(std::uint32_t index, Level l) const {
    if (index >= level_size(l))
        throw std::invalid_argument("canonical index " + std::to_string(index) +
                                    " out of range for level " + level_name(l));
    if (l == Level::QM) return index;
    const std::vector<FieldElem>* elems = l == Level::Prime ? &prime_elems_
                                        : l == Level::Q     ? &q_elems_
                                                            : &qs_elems_;
    return (*elems)[index];
}

std::string TowerParams::modulus_string() const {
    std::string out;
    for (std::size_t i = 0; i < modulus.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(unsigned(modulus[i]));
    }
    return out;
}

namespace {

// Multiply the residue encoded by `x` by the indeterminate, reducing by the
// monic candidate whose non-leading coefficients are the base-p digits of
// `f_low`. `ambient` is p^deg, the place value of the leading coefficient.
FieldElem mul_by_x(FieldElem x, std::uint64_t f_low, std::uint32_t p, std::uint32_t deg,
                   std::uint64_t ambient) {
    std::uint64_t shifted = std::uint64_t(x) * p;
    std::uint64_t top = shifted / ambient;
    std::uint64_t rem = shifted % ambient;
    if (top == 0) return FieldElem(rem);
    if (p == 2) return FieldElem(rem ^ f_low);
    // rem - top*f_low, digit-wise mod p
    FieldElem r = 0;
    std::uint64_t f = f_low, rr = rem, place = 1;
    for (std::uint32_t i = 0; i < deg; ++i) {
        std::uint64_t d = (rr % p + std::uint64_t(p) * p - (f % p) * top % p) % p;
        r += FieldElem(place * d);
        rr /= p;
        f /= p;
        place *= p;
    }
    return r;
}

// Fill the tables for one candidate. Succeeds iff the residue class of the
// indeterminate has multiplicative order exactly ambient-1, which also forces
// the candidate to be irreducible.
bool try_candidate(std::uint64_t f_low, std::uint32_t p, std::uint32_t deg, std::uint64_t ambient,
                   std::vector<std::uint32_t>& log_table, std::vector<FieldElem>& antilog_table) {
    const std::uint64_t order = ambient - 1;
    FieldElem b = 1;
    for (std::uint64_t t = 0; t < order; ++t) {
        antilog_table[t] = b;
        b = mul_by_x(b, f_low, p, deg, ambient);
        if (b == 1) {
            if (t + 1 == order) break;
            return false;  // order of X divides t+1 < ambient-1
        }
        if (b == 0) return false;
    }
    if (b != 1) return false;
    for (std::uint64_t t = 0; t < order; ++t) log_table[antilog_table[t]] = std::uint32_t(t);
    return true;
}

}  // namespace

TowerParams build_tower(std::uint32_t p, std::uint32_t e, std::uint32_t s,
                        std::uint64_t size_bound) {
    if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
    if (e == 0 || s == 0) throw std::invalid_argument("e and s must be positive");

    const std::uint32_t deg = e * 2 * s;
    std::uint64_t ambient = 1;
    for (std::uint32_t i = 0; i < deg; ++i) {
        ambient *= p;
        if (ambient > size_bound)
            throw std::invalid_argument("ambient field size p^(2es) exceeds the size bound " +
                                        std::to_string(size_bound));
    }

    TowerParams tw;
    tw.p = p;
    tw.e = e;
    tw.s = s;
    tw.m = 2 * s;
    tw.q = 1;
    for (std::uint32_t i = 0; i < e; ++i) tw.q *= p;
    tw.ext_degree = deg;
    tw.ambient = ambient;
    tw.log_table.assign(ambient, 0);
    tw.antilog_table.assign(ambient - 1, 0);

    // Scan monic candidates in increasing encoded value of the non-leading
    // coefficients. The constant term must be nonzero, otherwise X divides
    // the candidate.
    bool found = false;
    for (std::uint64_t f_low = 1; f_low < ambient; ++f_low) {
        if (f_low % p == 0) continue;
        if (try_candidate(f_low, p, deg, ambient, tw.log_table, tw.antilog_table)) {
            tw.modulus.resize(deg + 1);
            std::uint64_t v = f_low;
            for (std::uint32_t i = 0; i < deg; ++i) {
                tw.modulus[i] = std::uint8_t(v % p);
                v /= p;
            }
            tw.modulus[deg] = 1;
            found = true;
            break;
        }
    }
    assert(found);
    (void)found;
    tw.generator = FieldElem(p);  // the residue class of X; deg >= 2 so no reduction
    assert(tw.log_table[tw.generator] == 1);

    for (std::uint32_t le = 0; le < 3; ++le) {
        Level l = le == 0 ? Level::Prime : le == 1 ? Level::Q : Level::QS;
        std::vector<FieldElem> elems;
        elems.reserve(std::size_t(tw.level_size(l)));
        std::uint64_t cof = tw.level_cofactor(l);
        elems.push_back(0);
        for (std::uint64_t t = 0; t < ambient - 1; t += cof) elems.push_back(tw.antilog_table[t]);
        std::sort(elems.begin(), elems.end());
        switch (l) {
            case Level::Prime: tw.prime_elems_ = std::move(elems); break;
            case Level::Q: tw.q_elems_ = std::move(elems); break;
            default: tw.qs_elems_ = std::move(elems); break;
        }
    }
    return tw;
}

}  // namespace twc
