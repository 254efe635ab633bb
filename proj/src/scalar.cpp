#include "harmcont/scalar.hpp"

#include <cctype>

namespace harmcont {

namespace {

bool looks_like_integer(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    require(!text.empty(), Err::ParseError, "empty rational literal");

    auto slash = text.find('/');
    if (slash != std::string::npos) {
        std::string num = text.substr(0, slash);
        std::string den = text.substr(slash + 1);
        require(looks_like_integer(num) && looks_like_integer(den), Err::ParseError,
                "bad rational literal '" + text + "'");
        mpz_class n(num), d(den);
        require(sgn(d) != 0, Err::ParseError, "zero denominator in '" + text + "'");
        return make_rational(n, d);
    }

    if (looks_like_integer(text)) {
        return Rational(mpz_class(text));
    }

    // decimal form: [sign] digits [. digits]
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string ip = text.substr(0, dot);
        std::string fp = text.substr(dot + 1);
        if (ip.empty() || ip == "+" || ip == "-") ip += "0";
        require(looks_like_integer(ip), Err::ParseError, "bad decimal literal '" + text + "'");
        for (char ch : fp)
            require(std::isdigit(static_cast<unsigned char>(ch)), Err::ParseError,
                    "bad decimal literal '" + text + "'");
        mpz_class scale = 1;
        for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
        mpz_class whole(ip);
        mpz_class frac = fp.empty() ? mpz_class(0) : mpz_class(fp);
        bool neg = text[0] == '-';
        mpz_class num = whole * scale + (neg ? -frac : frac);
        return make_rational(num, scale);
    }

    fail(Err::ParseError, "bad rational literal '" + text + "'");
}

Rational random_rational_in(SeededRng& rng, const Rational& lo, const Rational& hi,
                            unsigned max_den) {
    require(sgn(lo) > 0, Err::InvalidArgument, "random rational range requires lo > 0");
    require(lo <= hi, Err::InvalidArgument, "random rational range requires lo <= hi");
    require(max_den >= 1, Err::InvalidArgument, "max_den must be >= 1");

    for (int attempt = 0; attempt < 512; ++attempt) {
        unsigned long den = 1 + static_cast<unsigned long>(rng.next_below(max_den));
        // smallest p with p/den >= lo, largest p with p/den <= hi
        mpz_class p_lo, p_hi;
        mpz_cdiv_q(p_lo.get_mpz_t(), mpz_class(lo.get_num() * den).get_mpz_t(), lo.get_den().get_mpz_t());
        mpz_fdiv_q(p_hi.get_mpz_t(), mpz_class(hi.get_num() * den).get_mpz_t(), hi.get_den().get_mpz_t());
        if (p_lo > p_hi) continue;
        mpz_class span = p_hi - p_lo + 1;
        require(span.fits_ulong_p(), Err::InvalidArgument, "rational range too wide for draw");
        mpz_class p = p_lo + mpz_class(static_cast<unsigned long>(rng.next_below(span.get_ui())));
        return make_rational(p, mpz_class(den));
    }
    fail(Err::InvalidArgument, "no rational with bounded denominator in range");
}

}  // namespace harmcont
