#ifndef ARBHH_FIELD_HPP
#define ARBHH_FIELD_HPP

#include <cstdint>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "arbhh/error.hpp"

namespace arbhh::linalg {

/// Runtime description of the coefficient field: the rationals or a prime
/// field F_p with p an odd prime. Everything downstream is exact arithmetic;
/// there is no floating point anywhere in the library.
struct FieldSpec {
    enum class Kind { Rationals, Prime };
    Kind kind = Kind::Rationals;
    std::uint64_t p = 0;

    static FieldSpec Q() { return FieldSpec{Kind::Rationals, 0}; }
    static FieldSpec Fp(std::uint64_t p);

    bool operator==(const FieldSpec& o) const { return kind == o.kind && p == o.p; }
    std::string to_string() const;

    /// Parses "Q" or "Fp:<p>".
    static FieldSpec parse(const std::string& s);
};

/// The rationals, with GMP-backed arbitrary-precision fractions.
class FieldQ {
public:
    using Elem = mpq_class;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_int(long long v) const { return Elem(static_cast<long>(v)); }
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        if (is_zero(a)) throw Error(ErrorCode::Internal, "inverse of zero");
        return Elem(1) / a;
    }
    std::string to_string(const Elem& a) const { return a.get_str(); }
};

/// F_p for an odd prime p. Elements are canonical representatives in [0, p).
class FieldFp {
public:
    using Elem = std::uint64_t;

    explicit FieldFp(std::uint64_t p) : p_(p) {}

    std::uint64_t p() const { return p_; }
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(long long v) const {
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += static_cast<long long>(p_);
        return static_cast<Elem>(r);
    }
    bool is_zero(const Elem& a) const { return a == 0; }
    Elem add(const Elem& a, const Elem& b) const {
        Elem s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Elem sub(const Elem& a, const Elem& b) const { return a >= b ? a - b : a + p_ - b; }
    Elem mul(const Elem& a, const Elem& b) const {
        return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % p_);
    }
    Elem neg(const Elem& a) const { return a == 0 ? 0 : p_ - a; }
    Elem inv(Elem a) const;
    std::string to_string(const Elem& a) const { return std::to_string(a); }

private:
    std::uint64_t p_;
};

bool is_prime_u64(std::uint64_t n);

/// Dispatches fn(FieldQ{}) or fn(FieldFp{p}) according to spec.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
    if (spec.kind == FieldSpec::Kind::Rationals) {
        return std::forward<Fn>(fn)(FieldQ{});
    }
    return std::forward<Fn>(fn)(FieldFp{spec.p});
}

} // namespace arbhh::linalg

#endif
