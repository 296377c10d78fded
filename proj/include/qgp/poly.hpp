#pragma once

#include <utility>
#include <vector>

#include "qgp/matrix.hpp"

namespace qgp::poly {

/// Coefficient vectors over a field, lowest degree first.
template <class F>
using Poly = std::vector<F>;

template <class F>
void trim(Poly<F>& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

template <class F>
int degree(const Poly<F>& p) { return static_cast<int>(p.size()) - 1; }

template <class F>
Poly<F> mul(const Poly<F>& a, const Poly<F>& b) {
    if (a.empty() || b.empty()) return {};
    Poly<F> r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

template <class F>
Poly<F> add(Poly<F> a, const Poly<F>& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    trim(a);
    return a;
}

template <class F>
Poly<F> scale(Poly<F> a, const F& c) {
    for (auto& x : a) x *= c;
    trim(a);
    return a;
}

template <class F>
std::pair<Poly<F>, Poly<F>> divmod(Poly<F> a, const Poly<F>& b) {
    if (b.empty()) throw Error("poly division by zero");
    Poly<F> q;
    while (a.size() >= b.size()) {
        F c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        if (q.size() < shift + 1) q.resize(shift + 1);
        q[shift] += c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        trim(a);
        if (a.size() >= b.size() && a.back().is_zero()) trim(a);
    }
    trim(q);
    return {q, a};
}

/// Extended gcd: returns (g, u, v) with u a + v b = g, g monic.
template <class F>
std::tuple<Poly<F>, Poly<F>, Poly<F>> ext_gcd(Poly<F> a, Poly<F> b) {
    Poly<F> u0{F(1)}, v0{}, u1{}, v1{F(1)};
    while (!b.empty()) {
        auto [q, r] = divmod(a, b);
        a = std::move(b);
        b = std::move(r);
        Poly<F> nu = add(u0, scale(mul(q, u1), -F(1)));
        Poly<F> nv = add(v0, scale(mul(q, v1), -F(1)));
        u0 = std::move(u1); v0 = std::move(v1);
        u1 = std::move(nu); v1 = std::move(nv);
    }
    if (!a.empty()) {
        F inv = a.back().inv();
        a = scale(a, inv);
        u0 = scale(u0, inv);
        v0 = scale(v0, inv);
    }
    return {a, u0, v0};
}

template <class F>
F eval(const Poly<F>& p, const F& x) {
    F r(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
    return r;
}

template <class F>
Matrix<F> eval_matrix(const Poly<F>& p, const Matrix<F>& x) {
    Matrix<F> r(x.rows(), x.cols());
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        r = r * x;
        for (std::size_t i = 0; i < x.rows(); ++i) r(i, i) += *it;
    }
    return r;
}

/// Monic minimal polynomial of a square matrix, by incremental Krylov search
/// on the powers of x.
template <class F>
Poly<F> min_poly(const Matrix<F>& x) {
    std::size_t n = x.rows();
    if (n == 0) return {F(0), F(1)};  // minimal polynomial of the empty matrix: t
    Matrix<F> powers(n * n, 1);
    Matrix<F> pk = Matrix<F>::identity(n);
    {
        auto v = vec(pk);
        for (std::size_t i = 0; i < v.size(); ++i) powers(i, 0) = v[i];
    }
    for (std::size_t deg = 1;; ++deg) {
        pk = pk * x;
        Matrix<F> target(n * n, 1);
        auto v = vec(pk);
        for (std::size_t i = 0; i < v.size(); ++i) target(i, 0) = v[i];
        auto coeffs = solve(powers, target);
        if (coeffs) {
            Poly<F> p(deg + 1);
            for (std::size_t i = 0; i < deg; ++i) p[i] = -(*coeffs)(i, 0);
            p[deg] = F(1);
            return p;
        }
        powers = Matrix<F>::hstack(powers, target);
    }
}

}  // namespace qgp::poly
