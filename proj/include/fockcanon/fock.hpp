#pragma once
// Level-1 Fock space vectors and the bead-moving operator action.
//
// A FockVector is a finite Laurent-coefficient combination of partitions
// (the standard basis).  The operators f_r and e_r act on an abacus display
// with t beads by moving one bead forward or backward between adjacent
// positions; the target runner is i = (r + t) mod e, and displays with
// i = 0 (the wrap-around case) are excluded by the bead-count rule.
// Results are independent of the choice of valid t.

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "abacus.hpp"
#include "errors.hpp"
#include "laurent.hpp"
#include "partition.hpp"

namespace fockcanon {

class FockVector {
public:
    using Map = std::map<Partition, Laurent, LexGreater>;

    FockVector() = default;

    static FockVector basis(const Partition& p) {
        FockVector x;
        x.coeffs_[p] = Laurent::one();
        return x;
    }

    bool is_zero() const { return coeffs_.empty(); }
    std::size_t support_size() const { return coeffs_.size(); }
    const Map& terms() const { return coeffs_; }

    Laurent coefficient(const Partition& p) const {
        auto it = coeffs_.find(p);
        return it == coeffs_.end() ? Laurent() : it->second;
    }

    void add_term(const Partition& p, const Laurent& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = coeffs_.try_emplace(p, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    void set_term(const Partition& p, const Laurent& c) {
        if (c.is_zero())
            coeffs_.erase(p);
        else
            coeffs_[p] = c;
    }

    FockVector& operator+=(const FockVector& o) {
        for (const auto& [p, c] : o.coeffs_) add_term(p, c);
        return *this;
    }
    FockVector& operator-=(const FockVector& o) {
        for (const auto& [p, c] : o.coeffs_) add_term(p, -c);
        return *this;
    }
    friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
    friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }

    friend FockVector operator*(const Laurent& s, const FockVector& x) {
        FockVector r;
        if (s.is_zero()) return r;
        for (const auto& [p, c] : x.coeffs_) r.coeffs_[p] = s * c;
        return r;
    }

    bool operator==(const FockVector& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const FockVector& o) const { return coeffs_ != o.coeffs_; }

    int max_length() const {
        int m = 0;
        for (const auto& [p, c] : coeffs_) m = std::max(m, p.length());
        return m;
    }

    // Every support partition has the same size in vectors produced by the
    // graded operators; -1 for the zero vector.
    long long homogeneous_size() const {
        if (coeffs_.empty()) return -1;
        return coeffs_.begin()->first.size();
    }

    std::map<Partition, Int, LexGreater> at_v_one() const {
        std::map<Partition, Int, LexGreater> out;
        for (const auto& [p, c] : coeffs_) out[p] = c.evaluate_at_one();
        return out;
    }

    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::string out;
        for (const auto& [p, c] : coeffs_) {
            if (!out.empty()) out += " + ";
            bool unit = c == Laurent::one();
            if (!unit) out += "(" + c.str() + ")";
            out += "[" + to_string(p) + "]";
        }
        return out;
    }

private:
    Map coeffs_;
};

namespace detail {

inline void check_step_params(const FockVector& x, int r, int e, int t) {
    if (e < 2) throw std::invalid_argument("e must be at least 2");
    if (r < 0 || r >= e) throw std::invalid_argument("operator index must lie in 0..e-1");
    if (t < 1) throw std::invalid_argument("bead count must be positive");
    if ((r + t) % e == 0)
        throw std::invalid_argument("bead count is in the excluded residue class for this operator");
    if (t < x.max_length())
        throw std::invalid_argument("bead count is smaller than a support partition length");
}

inline bool occupied_contains(const std::vector<int>& occ, int p) {
    return std::binary_search(occ.begin(), occ.end(), p);
}

}  // namespace detail

// Smallest bead count usable for applying the index-r operator to x:
// at least min_beads and every support length, avoiding (r + t) ≡ 0 mod e.
inline int select_bead_count(const FockVector& x, int r, int e, int min_beads = 1) {
    int t = std::max({min_beads, x.max_length(), 1});
    if ((r + t) % e == 0) ++t;
    return t;
}

// f_r: moves one bead from runner i-1 to the adjacent vacant position on
// runner i (i = (r+t) mod e), with coefficient v^(N>), where N> counts the
// beads below the source on runner i-1 minus the beads below the target on
// runner i ("below" = larger position).
inline FockVector f_step(const FockVector& x, int r, int e, int t) {
    detail::check_step_params(x, r, e, t);
    int i = (r + t) % e;
    FockVector out;
    for (const auto& [lam, c] : x.terms()) {
        AbacusDisplay d = to_abacus(lam, e, t);
        for (std::size_t idx = 0; idx < d.occupied.size(); ++idx) {
            int p = d.occupied[idx];
            if (p % e != i - 1) continue;
            if (detail::occupied_contains(d.occupied, p + 1)) continue;
            int n = 0;
            for (int q : d.occupied) {
                if (q > p && q % e == i - 1) ++n;
                if (q > p + 1 && q % e == i) --n;
            }
            AbacusDisplay moved = d;
            moved.occupied[idx] = p + 1;
            std::sort(moved.occupied.begin(), moved.occupied.end());
            out.add_term(from_abacus(moved), c * Laurent::monomial(n, 1));
        }
    }
    return out;
}

// e_r: the adjoint move, sending a bead on runner i back to runner i-1,
// with coefficient v^(-N<), where N< counts the beads above the target on
// runner i-1 minus the beads above the source on runner i, read in the
// display of the input partition ("above" = smaller position).
inline FockVector e_step(const FockVector& x, int r, int e, int t) {
    detail::check_step_params(x, r, e, t);
    int i = (r + t) % e;
    FockVector out;
    for (const auto& [mu, c] : x.terms()) {
        AbacusDisplay d = to_abacus(mu, e, t);
        for (std::size_t idx = 0; idx < d.occupied.size(); ++idx) {
            int q = d.occupied[idx];
            if (q % e != i) continue;
            if (q == 0 || detail::occupied_contains(d.occupied, q - 1)) continue;
            int n = 0;
            for (int p : d.occupied) {
                if (p < q - 1 && p % e == i - 1) ++n;
                if (p < q && p % e == i) --n;
            }
            AbacusDisplay moved = d;
            moved.occupied[idx] = q - 1;
            std::sort(moved.occupied.begin(), moved.occupied.end());
            out.add_term(from_abacus(moved), c * Laurent::monomial(-n, 1));
        }
    }
    return out;
}

enum class StepKind { f, e };

inline FockVector apply_step(const FockVector& x, StepKind which, int r, int e, int t) {
    return which == StepKind::f ? f_step(x, r, e, t) : e_step(x, r, e, t);
}

// k-th divided power: apply the operator k times, then exact-divide every
// coefficient by the Gaussian factorial [k]!.  Non-divisibility here means
// a broken invariant, not bad input.
inline FockVector divided_power(const FockVector& x, StepKind which, int r, int k, int e, int t) {
    if (k < 1) throw std::invalid_argument("divided power order must be at least 1");
    FockVector y = x;
    for (int j = 0; j < k; ++j) y = apply_step(y, which, r, e, t);
    if (k == 1) return y;
    Laurent fact = gauss_factorial(k);
    FockVector out;
    for (const auto& [p, c] : y.terms()) out.set_term(p, exact_divide(c, fact));
    return out;
}

// Divided power with the bead count auto-selected per call (smallest valid
// t at least min_beads); a single t stays valid across the k internal steps
// because bead moves never change the bead count.
inline FockVector divided_power_auto(const FockVector& x, StepKind which, int r, int k, int e,
                                     int min_beads = 1) {
    return divided_power(x, which, r, k, e, select_bead_count(x, r, e, min_beads));
}

// Composite induction operator used for building columns over a fixed core:
// the product of k-th divided f-powers indexed, in application order, by
// runner slots 0, 1, ..., a-1, e-1, e-2, ..., a.  Slot j corresponds to the
// operator of index (j - l(kappa)) mod e, and each factor picks its own
// bead count no smaller than l(kappa) + e.
inline FockVector F_operator(const FockVector& x, const Partition& kappa, int a, int k, int e) {
    if (e < 2) throw std::invalid_argument("e must be at least 2");
    if (a < 1 || a >= e) throw std::invalid_argument("slot index must lie in 1..e-1");
    if (k < 1) throw std::invalid_argument("divided power order must be at least 1");
    std::vector<int> slots;
    for (int j = 0; j < a; ++j) slots.push_back(j);
    for (int j = e - 1; j >= a; --j) slots.push_back(j);
    int min_beads = kappa.length() + e;
    FockVector y = x;
    for (int j : slots) {
        if (y.is_zero()) return y;
        int r = ((j - kappa.length()) % e + e) % e;
        y = divided_power_auto(y, StepKind::f, r, k, e, min_beads);
    }
    return y;
}

}  // namespace fockcanon
