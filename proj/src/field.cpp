#include "arbhh/field.hpp"

namespace arbhh::linalg {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::Fp(std::uint64_t p) {
    if (p <= 2 || !is_prime_u64(p))
        throw Error(ErrorCode::InvalidField, "field characteristic must be an odd prime, got " + std::to_string(p));
    return FieldSpec{Kind::Prime, p};
}

std::string FieldSpec::to_string() const {
    if (kind == Kind::Rationals) return "Q";
    return "Fp:" + std::to_string(p);
}

FieldSpec FieldSpec::parse(const std::string& s) {
    if (s == "Q" || s == "q") return Q();
    if (s.rfind("Fp:", 0) == 0 || s.rfind("fp:", 0) == 0) {
        try {
            return Fp(std::stoull(s.substr(3)));
        } catch (const Error&) {
            throw;
        } catch (...) {
            throw Error(ErrorCode::InvalidField, "cannot parse prime in field spec '" + s + "'");
        }
    }
    throw Error(ErrorCode::InvalidField, "expected Q or Fp:<p>, got '" + s + "'");
}

FieldFp::Elem FieldFp::inv(Elem a) const {
    if (a == 0) throw Error(ErrorCode::Internal, "inverse of zero in F_p");
    // extended Euclid on (a, p)
    long long t = 0, newt = 1;
    long long r = static_cast<long long>(p_), newr = static_cast<long long>(a);
    while (newr != 0) {
        long long q = r / newr;
        long long tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (t < 0) t += static_cast<long long>(p_);
    return static_cast<Elem>(t);
}

} // namespace arbhh::linalg
