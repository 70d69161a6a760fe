#include "twc/cycvec.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace twc {

namespace {
void require_same_p(std::uint32_t a, std::uint32_t b) {
    if (a != b)
        throw std::invalid_argument("mixed cyclotomic orders " + std::to_string(a) + " and " +
                                    std::to_string(b));
}
}  // namespace

CycVec& CycVec::operator+=(const CycVec& o) {
    require_same_p(p_, o.p_);
    for (std::uint32_t i = 0; i < p_; ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

CycVec& CycVec::operator-=(const CycVec& o) {
    require_same_p(p_, o.p_);
    for (std::uint32_t i = 0; i < p_; ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

CycVec& CycVec::add_scaled(const CycVec& o, std::int64_t factor) {
    require_same_p(p_, o.p_);
    for (std::uint32_t i = 0; i < p_; ++i) coeffs_[i] += factor * o.coeffs_[i];
    return *this;
}

CycVec CycVec::operator*(const CycVec& o) const {
    require_same_p(p_, o.p_);
    CycVec r(p_);
    for (std::uint32_t i = 0; i < p_; ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::uint32_t j = 0; j < p_; ++j) {
            if (o.coeffs_[j] == 0) continue;
            std::uint32_t k = i + j;
            if (k >= p_) k -= p_;
            r.coeffs_[k] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return r;
}

CycVec CycVec::canonical() const {
    CycVec r = *this;
    std::int64_t last = r.coeffs_[p_ - 1];
    if (last != 0)
        for (auto& c : r.coeffs_) c -= last;
    return r;
}

bool CycVec::operator==(const CycVec& o) const {
    require_same_p(p_, o.p_);
    return canonical().coeffs_ == o.canonical().coeffs_;
}

bool CycVec::is_integer() const {
    CycVec c = canonical();
    for (std::uint32_t i = 1; i < p_; ++i)
        if (c.coeffs_[i] != 0) return false;
    return true;
}

std::int64_t CycVec::as_integer() const {
    CycVec c = canonical();
    for (std::uint32_t i = 1; i < p_; ++i)
        if (c.coeffs_[i] != 0)
            throw std::runtime_error("cyclotomic value is not a rational integer: " + str());
    return c.coeffs_[0];
}

std::complex<double> CycVec::to_complex() const {
    std::complex<double> acc{0.0, 0.0};
    for (std::uint32_t i = 0; i < p_; ++i) {
        if (coeffs_[i] == 0) continue;
        double angle = 2.0 * std::numbers::pi * i / p_;
        acc += double(coeffs_[i]) * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return acc;
}

std::string CycVec::str() const {
    CycVec c = canonical();
    std::string out = "[";
    for (std::uint32_t i = 0; i < p_; ++i) {
        if (i) out += ",";
        out += std::to_string(c.coeffs_[i]);
    }
    out += "]";
    return out;
}

}  // namespace twc
