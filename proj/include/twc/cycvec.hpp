// Exact arithmetic in Z[zeta_p], zeta_p a primitive p-th root of unity, as
// integer coefficient vectors of length p. Every character-sum value in this
// project lives here, so equality checks and the "result is a rational
// integer" assertions are exact.

#ifndef TWC_CYCVEC_HPP
#define TWC_CYCVEC_HPP

#include <complex>
#include <cstdint>
#include <vector>

namespace twc {

class CycVec {
  public:
    explicit CycVec(std::uint32_t p) : p_(p), coeffs_(p, 0) {}

    static CycVec integer(std::uint32_t p, std::int64_t t) {
        CycVec v(p);
        v.coeffs_[0] = t;
        return v;
    }
    static CycVec root_power(std::uint32_t p, std::uint64_t k, std::int64_t count = 1) {
        CycVec v(p);
        v.coeffs_[k % p] += count;
        return v;
    }

    std::uint32_t p() const { return p_; }

    // raw accumulation; the canonical form is taken when comparing/reading
    void add_root(std::uint64_t k, std::int64_t count = 1) { coeffs_[k % p_] += count; }

    CycVec& operator+=(const CycVec& o);
    CycVec& operator-=(const CycVec& o);
    CycVec& add_scaled(const CycVec& o, std::int64_t factor);
    CycVec operator+(const CycVec& o) const { CycVec r = *this; r += o; return r; }
    CycVec operator-(const CycVec& o) const { CycVec r = *this; r -= o; return r; }
    CycVec operator-() const {
        CycVec r(p_);
        r -= *this;
        return r;
    }
    CycVec operator*(const CycVec& o) const;  // exponents reduce mod p

    // Canonical form zeroes the last coordinate by subtracting it from every
    // coordinate (valid since the full root orbit sums to 0). Two values are
    // equal iff their canonical coefficient vectors are identical; a rational
    // integer t canonicalizes to (t, 0, ..., 0).
    CycVec canonical() const;
    bool operator==(const CycVec& o) const;
    bool operator!=(const CycVec& o) const { return !(*this == o); }

    bool is_integer() const;
    std::int64_t as_integer() const;  // throws std::runtime_error if not an integer

    std::complex<double> to_complex() const;

    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
    std::string str() const;

  private:
    std::uint32_t p_;
    std::vector<std::int64_t> coeffs_;
};

}  // namespace twc

#endif
