#pragma once

#include <string>
#include <vector>

#include "qgp/deformation.hpp"
#include "qgp/homology.hpp"
#include "qgp/rep.hpp"

namespace qgp {

/// A Gamma-Lambda-bimodule as a grid of spaces X_{j,i} with commuting left
/// and right arrow actions. The right action is contravariant in the second
/// index: a Lambda-arrow a maps X e_{ta} to X e_{sa}.
template <class F>
struct Bimodule {
    AlgPtr<F> left_alg;   // Gamma
    AlgPtr<F> right_alg;  // Lambda
    std::vector<std::vector<std::size_t>> dims;  // [gamma vertex][lambda vertex]

    // left_maps[g][i]: X_{s g, i} -> X_{t g, i} for each Lambda-vertex i
    std::vector<std::vector<Matrix<F>>> left_maps;
    // right_maps[a][j]: X_{j, t a} -> X_{j, s a} for each Gamma-vertex j
    std::vector<std::vector<Matrix<F>>> right_maps;

    std::size_t total_dim() const {
        std::size_t n = 0;
        for (const auto& row : dims)
            for (std::size_t d : row) n += d;
        return n;
    }

    /// Right action of a whole Lambda-path at a fixed Gamma-vertex: the
    /// last-applied arrow acts first from the right.
    Matrix<F> right_act(std::size_t j, const Path& p) const {
        const Quiver& q = right_alg->quiver;
        Matrix<F> m = Matrix<F>::identity(dims[j][path_target(q, p)]);
        for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it)
            m = right_maps[*it][j] * m;
        return m;
    }

    Matrix<F> left_act(std::size_t i, const Path& p) const {
        const Quiver& q = left_alg->quiver;
        Matrix<F> m = Matrix<F>::identity(dims[p.source][i]);
        for (int a : p.arrows) m = left_maps[a][i] * m;
        return m;
    }

    void validate() const {
        const Quiver& gq = left_alg->quiver;
        const Quiver& lq = right_alg->quiver;
        if (dims.size() != gq.vertices.size()) throw DimensionMismatch("bimodule: grid rows");
        for (const auto& row : dims)
            if (row.size() != lq.vertices.size()) throw DimensionMismatch("bimodule: grid cols");
        if (left_maps.size() != gq.arrows.size() || right_maps.size() != lq.arrows.size())
            throw DimensionMismatch("bimodule: map family sizes");
        for (std::size_t g = 0; g < gq.arrows.size(); ++g)
            for (std::size_t i = 0; i < lq.vertices.size(); ++i) {
                const auto& m = left_maps[g][i];
                if (m.rows() != dims[gq.arrows[g].target][i] ||
                    m.cols() != dims[gq.arrows[g].source][i])
                    throw DimensionMismatch("bimodule: left map shape");
            }
        for (std::size_t a = 0; a < lq.arrows.size(); ++a)
            for (std::size_t j = 0; j < gq.vertices.size(); ++j) {
                const auto& m = right_maps[a][j];
                if (m.rows() != dims[j][lq.arrows[a].source] ||
                    m.cols() != dims[j][lq.arrows[a].target])
                    throw DimensionMismatch("bimodule: right map shape");
            }
        // the two actions commute
        for (std::size_t g = 0; g < gq.arrows.size(); ++g)
            for (std::size_t a = 0; a < lq.arrows.size(); ++a) {
                std::size_t sg = gq.arrows[g].source, tg = gq.arrows[g].target;
                std::size_t sa = lq.arrows[a].source, ta = lq.arrows[a].target;
                if (!(right_maps[a][tg] * left_maps[g][ta] ==
                      left_maps[g][sa] * right_maps[a][sg]))
                    throw DimensionMismatch("bimodule: actions do not commute");
            }
        // each side satisfies its algebra's relations
        for (const auto& rel : left_alg->relations)
            for (std::size_t i = 0; i < lq.vertices.size(); ++i) {
                const Path& p0 = rel.terms[0].second;
                Matrix<F> sum(dims[path_target(gq, p0)][i], dims[p0.source][i]);
                for (const auto& [c, p] : rel.terms) sum = sum + left_act(i, p).scaled(c);
                if (!(sum == Matrix<F>(sum.rows(), sum.cols())))
                    throw DimensionMismatch("bimodule: left relations violated");
            }
        for (const auto& rel : right_alg->relations)
            for (std::size_t j = 0; j < gq.vertices.size(); ++j) {
                const Path& p0 = rel.terms[0].second;
                Matrix<F> sum(dims[j][p0.source], dims[j][path_target(lq, p0)]);
                for (const auto& [c, p] : rel.terms) sum = sum + right_act(j, p).scaled(c);
                if (!(sum == Matrix<F>(sum.rows(), sum.cols())))
                    throw DimensionMismatch("bimodule: right relations violated");
            }
    }
};

/// Forget to a left Gamma-module: stack the Lambda-index.
template <class F>
Representation<F> forget_left(const Bimodule<F>& x) {
    const Quiver& gq = x.left_alg->quiver;
    std::size_t nl = x.right_alg->quiver.vertices.size();
    Representation<F> r;
    r.alg = x.left_alg;
    r.dims.resize(gq.vertices.size());
    for (std::size_t j = 0; j < gq.vertices.size(); ++j)
        for (std::size_t i = 0; i < nl; ++i) r.dims[j] += x.dims[j][i];
    for (std::size_t g = 0; g < gq.arrows.size(); ++g) {
        std::size_t s = gq.arrows[g].source, t = gq.arrows[g].target;
        Matrix<F> m(r.dims[t], r.dims[s]);
        std::size_t ro = 0, co = 0;
        for (std::size_t i = 0; i < nl; ++i) {
            const auto& blk = x.left_maps[g][i];
            for (std::size_t a = 0; a < blk.rows(); ++a)
                for (std::size_t b = 0; b < blk.cols(); ++b) m(ro + a, co + b) = blk(a, b);
            ro += x.dims[t][i];
            co += x.dims[s][i];
        }
        r.maps.push_back(std::move(m));
    }
    r.validate();
    return r;
}

/// Forget to a right Lambda-module, presented over the opposite algebra.
template <class F>
Representation<F> forget_right(const Bimodule<F>& x, const AlgPtr<F>& op) {
    const Quiver& lq = x.right_alg->quiver;
    std::size_t ng = x.left_alg->quiver.vertices.size();
    Representation<F> r;
    r.alg = op;
    r.dims.resize(lq.vertices.size());
    for (std::size_t i = 0; i < lq.vertices.size(); ++i)
        for (std::size_t j = 0; j < ng; ++j) r.dims[i] += x.dims[j][i];
    for (std::size_t a = 0; a < lq.arrows.size(); ++a) {
        std::size_t s = lq.arrows[a].source, t = lq.arrows[a].target;
        // the op-arrow runs t -> s, matching the right action
        Matrix<F> m(r.dims[s], r.dims[t]);
        std::size_t ro = 0, co = 0;
        for (std::size_t j = 0; j < ng; ++j) {
            const auto& blk = x.right_maps[a][j];
            for (std::size_t p = 0; p < blk.rows(); ++p)
                for (std::size_t q = 0; q < blk.cols(); ++q) m(ro + p, co + q) = blk(p, q);
            ro += x.dims[j][s];
            co += x.dims[j][t];
        }
        r.maps.push_back(std::move(m));
    }
    r.validate();
    return r;
}

template <class F>
bool is_projective_one_sided(const Bimodule<F>& x, Side side) {
    Representation<F> r = side == Side::Left ? forget_left(x)
                                             : forget_right(x, opposite(x.right_alg));
    if (r.is_zero()) return true;
    return syzygy(r, 1).is_zero();
}

/// X tensor_Lambda V: quotient of the vertexwise sums X_{j,i} (x) V_i by the
/// bilinearity span of x.a (x) v - x (x) a.v, with the left action induced.
template <class F>
Representation<F> tensor(const Bimodule<F>& x, const Representation<F>& v) {
    if (!same_algebra(x.right_alg, v.alg))
        throw AlgebraMismatch("tensor: module is not over the bimodule's right algebra");
    const Quiver& gq = x.left_alg->quiver;
    const Quiver& lq = x.right_alg->quiver;
    std::size_t ng = gq.vertices.size(), nl = lq.vertices.size();

    // ambient offsets per gamma vertex: block i holds X_{j,i} (x) V_i with
    // the module factor fastest
    std::vector<std::vector<std::size_t>> off(ng, std::vector<std::size_t>(nl + 1, 0));
    for (std::size_t j = 0; j < ng; ++j)
        for (std::size_t i = 0; i < nl; ++i)
            off[j][i + 1] = off[j][i] + x.dims[j][i] * v.dims[i];

    std::vector<Matrix<F>> proj(ng), lift(ng);
    std::vector<std::size_t> qdims(ng);
    for (std::size_t j = 0; j < ng; ++j) {
        std::size_t ambient = off[j][nl];
        std::vector<std::vector<F>> gens;
        for (std::size_t a = 0; a < lq.arrows.size(); ++a) {
            std::size_t sa = lq.arrows[a].source, ta = lq.arrows[a].target;
            for (std::size_t xi = 0; xi < x.dims[j][ta]; ++xi)
                for (std::size_t vi = 0; vi < v.dims[sa]; ++vi) {
                    std::vector<F> col(ambient);
                    for (std::size_t r = 0; r < x.dims[j][sa]; ++r)
                        col[off[j][sa] + r * v.dims[sa] + vi] += x.right_maps[a][j](r, xi);
                    for (std::size_t r = 0; r < v.dims[ta]; ++r)
                        col[off[j][ta] + xi * v.dims[ta] + r] -= v.maps[a](r, vi);
                    gens.push_back(std::move(col));
                }
        }
        Matrix<F> span(ambient, gens.size());
        for (std::size_t k = 0; k < gens.size(); ++k) span.set_col(k, gens[k]);
        auto [p, l] = quotient_basis(ambient, span);
        qdims[j] = p.rows();
        proj[j] = std::move(p);
        lift[j] = std::move(l);
    }

    Representation<F> out;
    out.alg = x.left_alg;
    out.dims = qdims;
    for (std::size_t g = 0; g < gq.arrows.size(); ++g) {
        std::size_t s = gq.arrows[g].source, t = gq.arrows[g].target;
        Matrix<F> amb(off[t][nl], off[s][nl]);
        for (std::size_t i = 0; i < nl; ++i) {
            Matrix<F> blk = Matrix<F>::kron(x.left_maps[g][i], Matrix<F>::identity(v.dims[i]));
            for (std::size_t r = 0; r < blk.rows(); ++r)
                for (std::size_t c = 0; c < blk.cols(); ++c)
                    amb(off[t][i] + r, off[s][i] + c) = blk(r, c);
        }
        out.maps.push_back(proj[t] * amb * lift[s]);
    }
    out.validate();
    return out;
}

/// The algebra as a bimodule over itself.
template <class F>
Bimodule<F> regular_bimodule(const AlgPtr<F>& alg) {
    const auto& a = *alg;
    const Quiver& q = a.quiver;
    std::size_t nv = q.vertices.size();

    // basis positions of paths grouped by (target j, source i)
    std::vector<std::vector<std::vector<int>>> grid(nv, std::vector<std::vector<int>>(nv));
    std::vector<std::pair<std::size_t, std::size_t>> where(a.dim());
    for (std::size_t k = 0; k < a.dim(); ++k) {
        const Path& p = a.basis_path(k);
        std::size_t j = path_target(q, p), i = p.source;
        where[k] = {grid[j][i].size(), 0};
        grid[j][i].push_back(static_cast<int>(k));
    }

    Bimodule<F> x;
    x.left_alg = alg;
    x.right_alg = alg;
    x.dims.assign(nv, std::vector<std::size_t>(nv, 0));
    for (std::size_t j = 0; j < nv; ++j)
        for (std::size_t i = 0; i < nv; ++i) x.dims[j][i] = grid[j][i].size();

    auto fill = [&](std::size_t ar, bool left) {
        std::vector<Matrix<F>> per;
        for (std::size_t fixed = 0; fixed < nv; ++fixed) {
            std::size_t s = q.arrows[ar].source, t = q.arrows[ar].target;
            const auto& from = left ? grid[s][fixed] : grid[fixed][t];
            const auto& to = left ? grid[t][fixed] : grid[fixed][s];
            Matrix<F> m(to.size(), from.size());
            for (std::size_t c = 0; c < from.size(); ++c) {
                Path p = a.basis_path(from[c]);
                Path prod = left ? concat_apply(q, p, Path{static_cast<int>(s), {static_cast<int>(ar)}})
                                 : concat_apply(q, Path{static_cast<int>(s), {static_cast<int>(ar)}}, p);
                auto nfv = a.nf(prod);
                for (std::size_t r = 0; r < to.size(); ++r) m(r, c) = nfv[to[r]];
            }
            per.push_back(std::move(m));
        }
        return per;
    };
    for (std::size_t ar = 0; ar < q.arrows.size(); ++ar) x.left_maps.push_back(fill(ar, true));
    for (std::size_t ar = 0; ar < q.arrows.size(); ++ar) x.right_maps.push_back(fill(ar, false));
    x.validate();
    return x;
}

/// The algebra with its right action twisted by an automorphism given as a
/// vertex and arrow permutation. Tensoring relabels modules along the
/// automorphism, a Morita-style self-equivalence.
template <class F>
Bimodule<F> twist_bimodule(const AlgPtr<F>& alg, const std::vector<int>& vertex_perm,
                           const std::vector<int>& arrow_perm) {
    const auto& a = *alg;
    const Quiver& q = a.quiver;
    std::size_t nv = q.vertices.size();

    auto base = regular_bimodule(alg);
    Bimodule<F> x;
    x.left_alg = alg;
    x.right_alg = alg;
    x.dims.assign(nv, std::vector<std::size_t>(nv, 0));
    for (std::size_t j = 0; j < nv; ++j)
        for (std::size_t i = 0; i < nv; ++i) x.dims[j][i] = base.dims[j][vertex_perm[i]];
    x.left_maps = base.left_maps;  // reindex columns along the twist
    for (std::size_t g = 0; g < q.arrows.size(); ++g)
        for (std::size_t i = 0; i < nv; ++i) x.left_maps[g][i] = base.left_maps[g][vertex_perm[i]];
    x.right_maps.resize(q.arrows.size());
    for (std::size_t ar = 0; ar < q.arrows.size(); ++ar)
        x.right_maps[ar] = base.right_maps[arrow_perm[ar]];
    x.validate();
    return x;
}

/// Deformation-ring transport along a both-sided projective bimodule.
template <class F>
struct TransportReport {
    bool pass = false;
    Representation<F> transported;  // projective-free core of X (x) V
    GprojResult transported_gproj;
    std::size_t transported_stable_end = 0;
    DefoReport source_ring, target_ring;
};

template <class F>
TransportReport<F> transport_check(const Bimodule<F>& x, const Representation<F>& v,
                                   int cutoff = 6, std::uint64_t seed = 1) {
    if (!same_algebra(x.right_alg, v.alg))
        throw AlgebraMismatch("transport_check: module is not over the right algebra");
    if (is_gorenstein_projective(v, -1, seed).verdict != Tri::True)
        throw PrerequisiteFails(
            "transport_check: module is not certified Gorenstein-projective");
    if (!is_projective_one_sided(x, Side::Left))
        throw PrerequisiteFails("transport_check: bimodule is not left projective");
    if (!is_projective_one_sided(x, Side::Right))
        throw PrerequisiteFails("transport_check: bimodule is not right projective");

    TransportReport<F> rep;
    rep.transported = strip_projectives(tensor(x, v)).core;
    rep.transported_gproj = is_gorenstein_projective(rep.transported, -1, seed);
    if (!rep.transported.is_zero())
        rep.transported_stable_end = stable_hom(rep.transported, rep.transported).dim();
    rep.source_ring = classify_defo_ring(v, cutoff, seed);
    rep.target_ring = classify_defo_ring(rep.transported, cutoff, seed);
    rep.pass = rep.source_ring.ring == rep.target_ring.ring;
    return rep;
}

}  // namespace qgp
