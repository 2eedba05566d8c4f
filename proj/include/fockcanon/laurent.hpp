#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <utility>

#include "errors.hpp"

namespace fockcanon {

using Int = boost::multiprecision::cpp_int;

// Laurent polynomial in one variable v with arbitrary-precision integer
// coefficients, stored sparsely as exponent -> coefficient with no zero
// entries.
class Laurent {
public:
    Laurent() = default;

    static Laurent monomial(int exp, Int coeff) {
        Laurent p;
        if (coeff != 0) p.coeffs_[exp] = std::move(coeff);
        return p;
    }
    static Laurent constant(Int c) { return monomial(0, std::move(c)); }
    static Laurent one() { return constant(1); }

    bool is_zero() const { return coeffs_.empty(); }

    // largest / smallest exponent; undefined on zero
    int degree() const {
        if (is_zero()) throw std::invalid_argument("degree of zero polynomial");
        return coeffs_.rbegin()->first;
    }
    int low() const {
        if (is_zero()) throw std::invalid_argument("low exponent of zero polynomial");
        return coeffs_.begin()->first;
    }

    Int coefficient(int exp) const {
        auto it = coeffs_.find(exp);
        return it == coeffs_.end() ? Int(0) : it->second;
    }

    const std::map<int, Int>& terms() const { return coeffs_; }

    void add_term(int exp, const Int& c) {
        if (c == 0) return;
        auto it = coeffs_.find(exp);
        if (it == coeffs_.end()) {
            coeffs_.emplace(exp, c);
        } else {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    Laurent& operator+=(const Laurent& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(e, c);
        return *this;
    }
    Laurent& operator-=(const Laurent& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
        return *this;
    }
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator-(const Laurent& a) {
        Laurent r;
        for (const auto& [e, c] : a.coeffs_) r.coeffs_[e] = -c;
        return r;
    }

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent r;
        for (const auto& [ea, ca] : a.coeffs_)
            for (const auto& [eb, cb] : b.coeffs_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

    friend Laurent operator*(const Laurent& a, const Int& s) {
        Laurent r;
        if (s != 0)
            for (const auto& [e, c] : a.coeffs_) r.coeffs_[e] = c * s;
        return r;
    }

    // multiply by v^k
    Laurent shifted(int k) const {
        Laurent r;
        for (const auto& [e, c] : coeffs_) r.coeffs_[e + k] = c;
        return r;
    }

    // the bar involution v -> v^{-1}
    Laurent bar() const {
        Laurent r;
        for (const auto& [e, c] : coeffs_) r.coeffs_[-e] = c;
        return r;
    }
    bool is_bar_symmetric() const { return *this == bar(); }

    Int evaluate_at_one() const {
        Int s = 0;
        for (const auto& [e, c] : coeffs_) s += c;
        return s;
    }

    // all coefficients positive and all exponents >= 1 (zero passes)
    bool in_v_nonneg() const {
        for (const auto& [e, c] : coeffs_)
            if (e < 1 || c < 0) return false;
        return true;
    }

    bool operator==(const Laurent& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Laurent& o) const { return coeffs_ != o.coeffs_; }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            const auto& [e, c] = *it;
            Int a = c < 0 ? Int(-c) : c;
            if (out.empty()) {
                if (c < 0) out += '-';
            } else {
                out += c < 0 ? '-' : '+';
            }
            bool unit = a == 1 && e != 0;
            if (!unit) out += a.str();
            if (e != 0) {
                out += 'v';
                if (e != 1) out += '^' + std::to_string(e);
            }
        }
        return out;
    }

private:
    std::map<int, Int> coeffs_;
};

struct LaurentDivision {
    Laurent quotient;
    Laurent remainder;
    bool exact = false;
};

// Long division p = quotient * q + remainder, dividing leading terms from the
// top after factoring v^{low} out of both operands.  Exact iff the remainder
// is zero; a failed integer division of leading coefficients also ends the
// division with a nonzero remainder.
inline LaurentDivision divide(const Laurent& p, const Laurent& q) {
    if (q.is_zero()) throw std::invalid_argument("division by zero polynomial");
    LaurentDivision out;
    if (p.is_zero()) {
        out.exact = true;
        return out;
    }
    const int lp = p.low(), lq = q.low();
    Laurent r = p.shifted(-lp);        // ordinary polynomial now
    const Laurent qs = q.shifted(-lq);
    const int dq = qs.degree();
    const Int& qlead = qs.terms().rbegin()->second;
    Laurent quot;
    while (!r.is_zero() && r.degree() >= dq) {
        const Int& rlead = r.terms().rbegin()->second;
        if (rlead % qlead != 0) break;
        Laurent t = Laurent::monomial(r.degree() - dq, rlead / qlead);
        quot += t;
        r -= t * qs;
    }
    out.quotient = quot.shifted(lp - lq);
    out.remainder = r.shifted(lp);
    out.exact = r.is_zero();
    return out;
}

// quotient of an exact division; throws InternalError when not exact
inline Laurent exact_divide(const Laurent& p, const Laurent& q) {
    auto d = divide(p, q);
    if (!d.exact)
        throw InternalError("expected exact polynomial division, remainder " +
                            d.remainder.str());
    return d.quotient;
}

// The unique bar-symmetric b with p - b free of nonpositive exponents:
// b = c_0 + sum_{k>0} c_{-k} (v^k + v^{-k}), where c_j are coefficients of p.
inline Laurent bar_symmetric_closure(const Laurent& p) {
    Laurent b;
    for (const auto& [e, c] : p.terms()) {
        if (e == 0) {
            b.add_term(0, c);
        } else if (e < 0) {
            b.add_term(e, c);
            b.add_term(-e, c);
        }
    }
    return b;
}

// Balanced quantum integer [k] = v^{k-1} + v^{k-3} + ... + v^{-(k-1)}.
inline Laurent gauss_integer(int k) {
    Laurent p;
    for (int j = 0; j < k; ++j) p.add_term(k - 1 - 2 * j, 1);
    return p;
}

// Balanced quantum factorial [k]! = [1][2]...[k].
inline Laurent gauss_factorial(int k) {
    if (k < 0) throw std::invalid_argument("quantum factorial of negative k");
    Laurent p = Laurent::one();
    for (int j = 2; j <= k; ++j) p *= gauss_integer(j);
    return p;
}

}  // namespace fockcanon
