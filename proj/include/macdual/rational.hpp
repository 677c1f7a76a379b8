#ifndef MACDUAL_RATIONAL_HPP
#define MACDUAL_RATIONAL_HPP

#include <gmpxx.h>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace macdual {

// Exact arithmetic everywhere; no floating point in the core.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) { return Rat(num, den); }

inline Int int_pow(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline Rat rat_pow(const Rat& base, long exp) {
    if (exp >= 0) {
        Rat r;
        mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), static_cast<unsigned long>(exp));
        mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), static_cast<unsigned long>(exp));
        r.canonicalize();
        return r;
    }
    Rat inv = 1 / base;
    return rat_pow(inv, -exp);
}

// Exact integer k-th root: returns r with r^k == v when it exists.
inline std::optional<Int> int_kth_root(const Int& v, unsigned long k) {
    if (k == 0) return std::nullopt;
    if (sgn(v) < 0) {
        if (k % 2 == 0) return std::nullopt;
        auto r = int_kth_root(-v, k);
        if (!r) return std::nullopt;
        return -*r;
    }
    Int root;
    int exact = mpz_root(root.get_mpz_t(), v.get_mpz_t(), k);
    if (!exact) return std::nullopt;
    return root;
}

// Rational lambda with lambda^k == v, when one exists over Q.
inline std::optional<Rat> rat_kth_root(const Rat& v, unsigned long k) {
    auto num = int_kth_root(v.get_num(), k);
    if (!num) return std::nullopt;
    auto den = int_kth_root(v.get_den(), k);
    if (!den) return std::nullopt;
    Rat r(*num, *den);
    r.canonicalize();
    return r;
}

inline Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline Int factorial(long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline std::string to_string(const Rat& q) { return q.get_str(); }

} // namespace macdual

#endif
