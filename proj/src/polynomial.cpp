#include "harmcont/polynomial.hpp"

#include <algorithm>

#include "harmcont/errors.hpp"

namespace harmcont {

void Polynomial::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::x_power(int k, const Rational& scale) {
    require(k >= 0, Err::InvalidArgument, "negative power");
    std::vector<Rational> c(k + 1, Rational(0));
    c[k] = scale;
    return Polynomial(std::move(c));
}

const Rational& Polynomial::leading() const {
    require(!c_.empty(), Err::InvalidArgument, "zero polynomial has no leading coefficient");
    return c_.back();
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    std::vector<Rational> out(std::max(c_.size(), rhs.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) out[i] += rhs.c_[i];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    std::vector<Rational> out(std::max(c_.size(), rhs.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) out[i] -= rhs.c_[i];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    if (is_zero() || rhs.is_zero()) return Polynomial();
    std::vector<Rational> out(c_.size() + rhs.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < rhs.c_.size(); ++j) out[i + j] += c_[i] * rhs.c_[j];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-() const {
    std::vector<Rational> out = c_;
    for (auto& v : out) v = -v;
    return Polynomial(std::move(out));
}

Polynomial Polynomial::scaled(const Rational& s) const {
    std::vector<Rational> out = c_;
    for (auto& v : out) v *= s;
    return Polynomial(std::move(out));
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<Rational> out(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return Polynomial(std::move(out));
}

Polynomial Polynomial::monic() const {
    require(!is_zero(), Err::InvalidArgument, "zero polynomial cannot be made monic");
    return scaled(Rational(1) / leading());
}

void Polynomial::divrem(const Polynomial& num, const Polynomial& den, Polynomial& quot,
                        Polynomial& rem) {
    require(!den.is_zero(), Err::InvalidArgument, "division by zero polynomial");
    std::vector<Rational> r = num.c_;
    const int dn = den.degree();
    std::vector<Rational> q(std::max<std::size_t>(num.c_.size(), 1), Rational(0));
    while (static_cast<int>(r.size()) - 1 >= dn && !r.empty()) {
        const int dr = static_cast<int>(r.size()) - 1;
        Rational factor = r.back() / den.leading();
        q[dr - dn] = factor;
        for (int i = 0; i <= dn; ++i) r[dr - dn + i] -= factor * den.c_[i];
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    quot = Polynomial(std::move(q));
    rem = Polynomial(std::move(r));
}

Polynomial Polynomial::divided_exactly_by(const Polynomial& den) const {
    Polynomial q, r;
    divrem(*this, den, q, r);
    require(r.is_zero(), Err::InternalError, "polynomial division expected to be exact");
    return q;
}

std::string Polynomial::to_text() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rational& ci = c_[i];
        if (ci == 0) continue;
        if (!out.empty()) out += sgn(ci) > 0 ? " + " : " - ";
        else if (sgn(ci) < 0) out += "-";
        Rational a = abs(ci);
        const bool unit = (a == 1);
        if (!unit || i == 0) out += rational_to_text(a);
        if (i > 0) {
            if (!unit) out += "*";
            out += "x";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

Polynomial gcd_monic(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial q, r;
        Polynomial::divrem(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
        if (!b.is_zero()) b = b.monic();
    }
    if (a.is_zero()) return a;
    return a.monic();
}

std::vector<SquarefreeFactor> squarefree_decomposition(const Polynomial& p) {
    require(!p.is_zero(), Err::InvalidArgument, "zero polynomial");
    std::vector<SquarefreeFactor> out;
    Polynomial f = p.monic();
    if (f.degree() == 0) return out;

    Polynomial fp = f.derivative();
    Polynomial g = gcd_monic(f, fp);
    if (g.degree() == 0) {
        out.push_back({f, 1});
        return out;
    }

    // Yun's algorithm
    Polynomial a = f.divided_exactly_by(g);
    Polynomial b = fp.divided_exactly_by(g);
    Polynomial c = b - a.derivative();
    int mult = 1;
    while (a.degree() > 0) {
        Polynomial d = gcd_monic(a, c);
        if (d.degree() > 0) out.push_back({d, mult});
        a = a.divided_exactly_by(d.degree() > 0 ? d : Polynomial::constant(Rational(1)));
        b = (d.degree() > 0) ? c.divided_exactly_by(d) : c;
        c = b - a.derivative();
        ++mult;
    }
    return out;
}

SturmSequence::SturmSequence(const Polynomial& squarefree) {
    require(!squarefree.is_zero(), Err::InvalidArgument, "zero polynomial");
    seq_.push_back(squarefree);
    if (squarefree.degree() == 0) return;
    seq_.push_back(squarefree.derivative());
    while (seq_.back().degree() > 0) {
        Polynomial q, r;
        Polynomial::divrem(seq_[seq_.size() - 2], seq_.back(), q, r);
        if (r.is_zero()) break;
        seq_.push_back(-r);
    }
}

int SturmSequence::variations(const Rational& x) const {
    int count = 0;
    int prev = 0;
    for (const Polynomial& p : seq_) {
        int s = p.sign_at(x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

int SturmSequence::count_roots(const Rational& a, const Rational& b) const {
    require(a < b, Err::InvalidArgument, "empty interval");
    return variations(a) - variations(b);
}

Rational cauchy_root_bound(const Polynomial& p) {
    require(p.degree() >= 1, Err::InvalidArgument, "constant polynomial has no roots");
    Rational bound(0);
    for (int i = 0; i < p.degree(); ++i) {
        Rational v = abs(p.coeff(i) / p.leading());
        if (v > bound) bound = v;
    }
    return bound + 1;
}

namespace {

// Bisects an interval known to contain exactly one simple root with a sign
// change, stopping at the requested width. Midpoints that land on the root
// collapse the interval to a point.
RootInterval refine_bracket(const Polynomial& q, Rational lo, Rational hi, const Rational& width) {
    int sign_lo = q.sign_at(lo);
    while (hi - lo > width) {
        Rational mid = (lo + hi) / 2;
        int sm = q.sign_at(mid);
        if (sm == 0) return {mid, mid, 1};
        if (sm == sign_lo)
            lo = mid;
        else
            hi = mid;
    }
    return {lo, hi, 1};
}

}  // namespace

std::vector<RootInterval> isolate_real_roots(const Polynomial& squarefree, const Rational& width) {
    require(!squarefree.is_zero(), Err::InvalidArgument, "zero polynomial");
    std::vector<RootInterval> roots;
    Polynomial q = squarefree.monic();
    if (q.degree() == 0) return roots;

    // Exact roots found at bisection points are divided out and the
    // remaining factor is isolated afresh; each pass strictly drops the
    // degree, so this terminates.
    bool restart = true;
    while (restart && q.degree() > 0) {
        restart = false;
        SturmSequence sturm(q);
        const Rational bound = cauchy_root_bound(q);
        std::vector<std::pair<Rational, Rational>> stack;  // half-open (a, b], endpoints non-roots
        std::vector<RootInterval> found;
        stack.emplace_back(-bound, bound);
        while (!stack.empty()) {
            auto [a, b] = stack.back();
            stack.pop_back();
            const int count = sturm.count_roots(a, b);
            if (count == 0) continue;
            if (count == 1) {
                found.push_back(refine_bracket(q, a, b, width));
                continue;
            }
            Rational mid = (a + b) / 2;
            if (q.sign_at(mid) == 0) {
                roots.push_back({mid, mid, 1});
                q = q.divided_exactly_by(Polynomial({-mid, Rational(1)}));
                restart = true;
                break;
            }
            stack.emplace_back(a, mid);
            stack.emplace_back(mid, b);
        }
        if (!restart)
            for (auto& r : found) roots.push_back(std::move(r));
    }

    std::sort(roots.begin(), roots.end(),
              [](const RootInterval& x, const RootInterval& y) { return x.midpoint() < y.midpoint(); });
    return roots;
}

}  // namespace harmcont
