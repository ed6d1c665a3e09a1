#pragma once

// Exact coefficient fields.  Rational is the default everywhere; ModP is a
// prime field used where only ranks are needed and the matrices are large.

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Core>

#include <cstdint>
#include <ostream>
#include <string>

namespace plumbing {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

// Z/pZ with p = 2^61 - 1.
class ModP {
public:
    static constexpr std::uint64_t modulus = (std::uint64_t(1) << 61) - 1;

    constexpr ModP() = default;
    ModP(long long v) {
        long long r = v % static_cast<long long>(modulus);
        if (r < 0) r += static_cast<long long>(modulus);
        v_ = static_cast<std::uint64_t>(r);
    }

    std::uint64_t value() const { return v_; }

    friend ModP operator+(ModP a, ModP b) { return raw(reduce(a.v_ + b.v_)); }
    friend ModP operator-(ModP a, ModP b) { return raw(reduce(a.v_ + modulus - b.v_)); }
    friend ModP operator-(ModP a) { return raw(a.v_ == 0 ? 0 : modulus - a.v_); }
    friend ModP operator*(ModP a, ModP b) {
        unsigned __int128 m = static_cast<unsigned __int128>(a.v_) * b.v_;
        std::uint64_t lo = static_cast<std::uint64_t>(m & modulus);
        std::uint64_t hi = static_cast<std::uint64_t>(m >> 61);
        return raw(reduce(lo + hi));
    }
    friend ModP operator/(ModP a, ModP b) { return a * b.inverse(); }
    ModP& operator+=(ModP b) { return *this = *this + b; }
    ModP& operator-=(ModP b) { return *this = *this - b; }
    ModP& operator*=(ModP b) { return *this = *this * b; }
    ModP& operator/=(ModP b) { return *this = *this / b; }
    friend bool operator==(ModP a, ModP b) { return a.v_ == b.v_; }
    friend bool operator!=(ModP a, ModP b) { return a.v_ != b.v_; }

    ModP inverse() const {
        // Fermat; v_ != 0 is the caller's responsibility
        ModP r = raw(1), b = *this;
        std::uint64_t e = modulus - 2;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    friend std::ostream& operator<<(std::ostream& os, ModP a) { return os << a.v_; }

private:
    static ModP raw(std::uint64_t v) {
        ModP r;
        r.v_ = v;
        return r;
    }
    static std::uint64_t reduce(std::uint64_t v) {
        v = (v & modulus) + (v >> 61);
        return v >= modulus ? v - modulus : v;
    }
    std::uint64_t v_ = 0;
};

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(ModP x) { return x.value() == 0; }

inline std::string to_string(const Rational& x) { return x.str(); }

} // namespace plumbing

namespace Eigen {
template <>
struct NumTraits<plumbing::ModP> : GenericNumTraits<plumbing::ModP> {
    using Real = plumbing::ModP;
    using NonInteger = plumbing::ModP;
    using Nested = plumbing::ModP;
    using Literal = plumbing::ModP;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 0,
        ReadCost = 1,
        AddCost = 2,
        MulCost = 4
    };
};
} // namespace Eigen
