#pragma once

// Truncated bivariate power series in (x, t) with exact integer
// coefficients, the two catalytic functional equations, and closed forms.

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tamap {

using BigInt = boost::multiprecision::cpp_int;

/// sum c[n][k] t^n x^k for n <= order. Row n is a dense polynomial in x.
class BiSeries {
public:
    explicit BiSeries(std::size_t order) : rows_(order + 1) {}

    [[nodiscard]] std::size_t order() const noexcept { return rows_.size() - 1; }

    [[nodiscard]] BigInt coeff(std::size_t n, std::size_t k) const {
        if (n >= rows_.size() || k >= rows_[n].size()) return 0;
        return rows_[n][k];
    }

    void add_to(std::size_t n, std::size_t k, const BigInt& v) {
        if (n >= rows_.size()) return;
        auto& row = rows_[n];
        if (row.size() <= k) row.resize(k + 1);
        row[k] += v;
    }

    [[nodiscard]] const std::vector<BigInt>& row(std::size_t n) const { return rows_.at(n); }

    /// Highest k with a nonzero coefficient at t^n, or -1.
    [[nodiscard]] long degree_in_x(std::size_t n) const {
        const auto& row = rows_.at(n);
        for (std::size_t k = row.size(); k-- > 0;)
            if (row[k] != 0) return static_cast<long>(k);
        return -1;
    }

    static BiSeries constant(std::size_t order, const BigInt& v) {
        BiSeries s(order);
        s.add_to(0, 0, v);
        return s;
    }

    /// The monomial x t.
    static BiSeries xt(std::size_t order) {
        BiSeries s(order);
        s.add_to(1, 1, 1);
        return s;
    }

    friend BiSeries operator+(const BiSeries& a, const BiSeries& b) {
        BiSeries r(std::min(a.order(), b.order()));
        for (std::size_t n = 0; n <= r.order(); ++n) {
            for (std::size_t k = 0; k < a.rows_[n].size(); ++k) r.add_to(n, k, a.rows_[n][k]);
            for (std::size_t k = 0; k < b.rows_[n].size(); ++k) r.add_to(n, k, b.rows_[n][k]);
        }
        return r;
    }

    friend BiSeries operator*(const BiSeries& a, const BiSeries& b) {
        BiSeries r(std::min(a.order(), b.order()));
        for (std::size_t n1 = 0; n1 <= r.order(); ++n1)
            for (std::size_t n2 = 0; n1 + n2 <= r.order(); ++n2)
                for (std::size_t k1 = 0; k1 < a.rows_[n1].size(); ++k1) {
                    if (a.rows_[n1][k1] == 0) continue;
                    for (std::size_t k2 = 0; k2 < b.rows_[n2].size(); ++k2)
                        if (b.rows_[n2][k2] != 0) r.add_to(n1 + n2, k1 + k2, a.rows_[n1][k1] * b.rows_[n2][k2]);
                }
        return r;
    }

    /// Coefficients of G(1, t).
    [[nodiscard]] std::vector<BigInt> at_x_one() const {
        std::vector<BigInt> out(rows_.size());
        for (std::size_t n = 0; n < rows_.size(); ++n)
            for (const auto& c : rows_[n]) out[n] += c;
        return out;
    }

    /// (G(x, t) - G(1, t)) / (x - 1), by synthetic division row by row.
    /// Throws std::logic_error on a nonzero remainder.
    [[nodiscard]] BiSeries divided_difference() const {
        BiSeries r(order());
        for (std::size_t n = 0; n < rows_.size(); ++n) {
            const auto& row = rows_[n];
            if (row.size() < 2) continue;
            // G(x) - G(1) has a zero constant term adjustment; divide sum a_k x^k - sum a_k by (x - 1)
            std::vector<BigInt> num(row);
            BigInt at1 = 0;
            for (const auto& c : row) at1 += c;
            num[0] -= at1;
            // synthetic division by (x - 1), highest degree first
            std::vector<BigInt> q(num.size() - 1);
            BigInt carry = 0;
            for (std::size_t k = num.size(); k-- > 1;) {
                carry += num[k];
                q[k - 1] = carry;
            }
            if (carry + num[0] != 0) throw std::logic_error("divided difference left a remainder");
            for (std::size_t k = 0; k < q.size(); ++k)
                if (q[k] != 0) r.add_to(n, k, q[k]);
        }
        return r;
    }

    friend bool operator==(const BiSeries& a, const BiSeries& b) {
        if (a.order() != b.order()) return false;
        for (std::size_t n = 0; n <= a.order(); ++n) {
            const std::size_t len = std::max(a.rows_[n].size(), b.rows_[n].size());
            for (std::size_t k = 0; k < len; ++k)
                if (a.coeff(n, k) != b.coeff(n, k)) return false;
        }
        return true;
    }

private:
    std::vector<std::vector<BigInt>> rows_;
};

/// F = x t (1 + (F(x,t) - F(1,t)) / (x - 1)) (1 + F), iterated `order`
/// times from F = 0. Each round fixes one more power of t.
inline BiSeries solve_interval_equation(std::size_t order) {
    const BiSeries one = BiSeries::constant(order, 1);
    const BiSeries xt = BiSeries::xt(order);
    BiSeries f(order);
    for (std::size_t round = 0; round < order; ++round) f = xt * (one + f.divided_difference()) * (one + f);
    return f;
}

/// A / (1 - A) = A + A^2 + ... for A without a t^0 term, row by row from
/// G[n] = A[n] + sum_{0<k<n} A[k] G[n-k].
inline BiSeries geometric_tail(const BiSeries& a) {
    BiSeries g(a.order());
    for (std::size_t n = 1; n <= a.order(); ++n) {
        for (std::size_t x = 0; x < a.row(n).size(); ++x) g.add_to(n, x, a.row(n)[x]);
        for (std::size_t k = 1; k < n; ++k)
            for (std::size_t x1 = 0; x1 < a.row(k).size(); ++x1) {
                if (a.row(k)[x1] == 0) continue;
                for (std::size_t x2 = 0; x2 < g.row(n - k).size(); ++x2)
                    if (g.row(n - k)[x2] != 0) g.add_to(n, x1 + x2, a.row(k)[x1] * g.row(n - k)[x2]);
            }
    }
    return g;
}

/// M = A / (1 - A) with A = x t (1 + (M(x,t) - M(1,t)) / (x - 1)).
inline BiSeries solve_map_equation(std::size_t order) {
    const BiSeries one = BiSeries::constant(order, 1);
    const BiSeries xt = BiSeries::xt(order);
    BiSeries m(order);
    for (std::size_t round = 0; round < order; ++round) m = geometric_tail(xt * (one + m.divided_difference()));
    return m;
}

inline BigInt factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned k = 2; k <= n; ++k) r *= k;
    return r;
}

/// 2 (3n+3)! / ((n+2)! (2n+3)!). Throws std::logic_error if the division is inexact.
inline BigInt closed_form(unsigned n) {
    const BigInt num = 2 * factorial(3 * n + 3);
    const BigInt den = factorial(n + 2) * factorial(2 * n + 3);
    if (num % den != 0) throw std::logic_error("closed_form: inexact division");
    return num / den;
}

inline BigInt catalan(unsigned n) { return factorial(2 * n) / (factorial(n + 1) * factorial(n)); }

/// Rows n = 1..order, columns k = 0..order, tab separated.
inline void write_tsv(std::ostream& os, const BiSeries& s) {
    os << "n";
    for (std::size_t k = 0; k <= s.order(); ++k) os << "\tx^" << k;
    os << '\n';
    for (std::size_t n = 1; n <= s.order(); ++n) {
        os << n;
        for (std::size_t k = 0; k <= s.order(); ++k) os << '\t' << s.coeff(n, k);
        os << '\n';
    }
}

}  // namespace tamap
