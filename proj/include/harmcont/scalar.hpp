#pragma once

#include <cstdint>
#include <cstdio>
#include <random>
#include <string>
#include <type_traits>

#include <gmpxx.h>

#include "harmcont/errors.hpp"

namespace harmcont {

// Exact backend. All certification paths run on Rational; double is the
// floating backend used for demos and the refinement studies.
using Rational = mpq_class;

template <class T>
inline constexpr bool is_exact_backend = std::is_same_v<T, Rational>;

inline Rational make_rational(long num, long den = 1) {
    require(den != 0, Err::InvalidArgument, "zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(const mpz_class& num, const mpz_class& den) {
    require(sgn(den) != 0, Err::InvalidArgument, "zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline double to_double(const Rational& q) { return q.get_d(); }

// Canonical text form: "p" for integers, "p/q" otherwise.
inline std::string rational_to_text(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Accepts "p", "p/q" and plain decimals such as "0.25" or "-1.5".
Rational parse_rational(const std::string& text);

inline std::string double_to_text(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

template <class T>
std::string scalar_to_text(const T& x) {
    if constexpr (is_exact_backend<T>) {
        return rational_to_text(x);
    } else {
        return double_to_text(x);
    }
}

template <class T>
T scalar_from_rational(const Rational& q) {
    if constexpr (is_exact_backend<T>) {
        return q;
    } else {
        return to_double(q);
    }
}

template <class T>
T scalar_parse(const std::string& text) {
    if constexpr (is_exact_backend<T>) {
        return parse_rational(text);
    } else {
        try {
            std::size_t pos = 0;
            double v = std::stod(text, &pos);
            if (pos == text.size()) return v;
        } catch (const std::exception&) {
        }
        // fall back to rational syntax ("1/8") for float inputs
        return to_double(parse_rational(text));
    }
}

template <class T>
T scalar_abs(const T& x) {
    return x < T(0) ? T(-x) : x;
}

// Deterministic RNG used for seeded test data. The engine sequence is fixed
// by the standard; the bounded draw avoids distribution objects, whose output
// is implementation defined.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // uniform draw in [0, n)
    std::uint64_t next_below(std::uint64_t n) {
        require(n > 0, Err::InternalError, "next_below(0)");
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - (std::numeric_limits<std::uint64_t>::max() % n);
        std::uint64_t v;
        do {
            v = eng_();
        } while (v >= limit);
        return v % n;
    }

    bool next_bool() { return (eng_() & 1u) != 0; }

private:
    std::mt19937_64 eng_;
};

// Uniform-ish rational in [lo, hi] with denominator bounded by max_den.
// Draws a denominator q then a numerator p with p/q in range.
Rational random_rational_in(SeededRng& rng, const Rational& lo, const Rational& hi,
                            unsigned max_den = 64);

}  // namespace harmcont
