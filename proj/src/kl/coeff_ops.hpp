#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>

#include <gmpxx.h>

namespace klforge::detail {

/// Raised by the int64 kernel when a coefficient leaves the int64 range; the
/// caller rebuilds the affected table on arbitrary-precision coefficients.
struct CoefficientOverflow : std::overflow_error {
    CoefficientOverflow() : std::overflow_error("KL coefficient overflowed int64") {}
};

template <class C>
struct CoeffOps;

template <>
struct CoeffOps<std::int64_t> {
    static void add_mul(std::int64_t& acc, std::int64_t a, std::int64_t b) {
        std::int64_t prod = 0;
        if (__builtin_mul_overflow(a, b, &prod) || __builtin_add_overflow(acc, prod, &acc))
            throw CoefficientOverflow();
    }
    static void add(std::int64_t& acc, std::int64_t a) {
        if (__builtin_add_overflow(acc, a, &acc)) throw CoefficientOverflow();
    }
    static mpz_class to_integer(std::int64_t c) { return mpz_class(static_cast<long>(c)); }
    static std::size_t hash(std::int64_t c) { return std::hash<std::int64_t>{}(c); }
    static bool is_zero(std::int64_t c) { return c == 0; }
};

template <>
struct CoeffOps<mpz_class> {
    static void add_mul(mpz_class& acc, const mpz_class& a, const mpz_class& b) {
        mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    }
    static void add(mpz_class& acc, const mpz_class& a) { acc += a; }
    static mpz_class to_integer(const mpz_class& c) { return c; }
    static std::size_t hash(const mpz_class& c) {
        return std::hash<long>{}(mpz_get_si(c.get_mpz_t())) ^ static_cast<std::size_t>(mpz_sgn(c.get_mpz_t()));
    }
    static bool is_zero(const mpz_class& c) { return mpz_sgn(c.get_mpz_t()) == 0; }
};

}  // namespace klforge::detail
