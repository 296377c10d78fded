#pragma once

#include <memory>
#include <optional>
#include <random>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "qgp/matrix.hpp"
#include "qgp/poly.hpp"
#include "qgp/quiver.hpp"

namespace qgp {

template <class F>
using AlgPtr = std::shared_ptr<const BoundQuiverAlgebra<F>>;

/// Structural algebra identity: same quiver names and same presentation.
template <class F>
bool same_algebra(const AlgPtr<F>& a, const AlgPtr<F>& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->quiver.vertices != b->quiver.vertices) return false;
    if (a->quiver.arrows.size() != b->quiver.arrows.size()) return false;
    for (std::size_t i = 0; i < a->quiver.arrows.size(); ++i) {
        const auto& x = a->quiver.arrows[i];
        const auto& y = b->quiver.arrows[i];
        if (x.name != y.name || x.source != y.source || x.target != y.target) return false;
    }
    if (a->relations.size() != b->relations.size()) return false;
    for (std::size_t i = 0; i < a->relations.size(); ++i) {
        const auto& r = a->relations[i].terms;
        const auto& s = b->relations[i].terms;
        if (r.size() != s.size()) return false;
        for (std::size_t j = 0; j < r.size(); ++j)
            if (!(r[j].first == s[j].first) || !(r[j].second == s[j].second)) return false;
    }
    return true;
}

/// Finite-dimensional left module as a quiver representation: a space per
/// vertex and a matrix per arrow satisfying the relations.
template <class F>
struct Representation {
    AlgPtr<F> alg;
    std::vector<std::size_t> dims;   // per vertex
    std::vector<Matrix<F>> maps;     // per arrow, dims[target] x dims[source]

    std::size_t total_dim() const {
        std::size_t t = 0;
        for (auto d : dims) t += d;
        return t;
    }
    bool is_zero() const { return total_dim() == 0; }

    Matrix<F> act(const Path& p) const {
        Matrix<F> r = Matrix<F>::identity(dims[p.source]);
        for (int a : p.arrows) r = maps[a] * r;
        return r;
    }

    void validate() const {
        const Quiver& q = alg->quiver;
        if (dims.size() != q.vertices.size() || maps.size() != q.arrows.size())
            throw DimensionMismatch("representation: wrong number of spaces or maps");
        for (std::size_t a = 0; a < maps.size(); ++a)
            if (maps[a].rows() != dims[q.arrows[a].target] || maps[a].cols() != dims[q.arrows[a].source])
                throw DimensionMismatch("representation: arrow map shape for '" + q.arrows[a].name + "'");
        for (const auto& rel : alg->relations) {
            int src = rel.terms[0].second.source, tgt = path_target(q, rel.terms[0].second);
            Matrix<F> sum(dims[tgt], dims[src]);
            for (const auto& [c, p] : rel.terms) sum = sum + act(p).scaled(c);
            if (!sum.is_zero()) throw DimensionMismatch("representation does not satisfy the relations");
        }
    }
};

template <class F>
Representation<F> zero_rep(const AlgPtr<F>& alg) {
    Representation<F> r;
    r.alg = alg;
    r.dims.assign(alg->quiver.vertices.size(), 0);
    for (const auto& a : alg->quiver.arrows) r.maps.push_back(Matrix<F>(0, 0));
    return r;
}

/// A module map M -> N as one matrix per vertex (shape N_v x M_v).
template <class F>
using VertexMaps = std::vector<Matrix<F>>;

template <class F>
VertexMaps<F> compose_maps(const VertexMaps<F>& first, const VertexMaps<F>& then) {
    VertexMaps<F> r;
    for (std::size_t v = 0; v < first.size(); ++v) r.push_back(then[v] * first[v]);
    return r;
}

template <class F>
std::vector<F> flatten_maps(const VertexMaps<F>& f) {
    std::vector<F> out;
    for (const auto& m : f)
        for (const F& x : vec(m)) out.push_back(x);
    return out;
}

/// Basis paths of the projective module at vertex i, grouped per target
/// vertex in algebra-basis order. Entry lists are basis indices.
template <class F>
std::vector<std::vector<int>> projective_basis_paths(const BoundQuiverAlgebra<F>& a, int i) {
    std::vector<std::vector<int>> per_vertex(a.quiver.vertices.size());
    for (std::size_t k = 0; k < a.dim(); ++k) {
        const Path& p = a.basis_path(k);
        if (p.source == i) per_vertex[path_target(a.quiver, p)].push_back(static_cast<int>(k));
    }
    return per_vertex;
}

/// The indecomposable projective at vertex i: basis = nonzero path residues
/// with source i, arrows act by left multiplication.
template <class F>
Representation<F> projective(const AlgPtr<F>& alg, int i) {
    const auto& a = *alg;
    auto groups = projective_basis_paths(a, i);
    Representation<F> r;
    r.alg = alg;
    r.dims.resize(a.quiver.vertices.size());
    for (std::size_t v = 0; v < groups.size(); ++v) r.dims[v] = groups[v].size();
    for (std::size_t ar = 0; ar < a.quiver.arrows.size(); ++ar) {
        int s = a.quiver.arrows[ar].source, t = a.quiver.arrows[ar].target;
        Matrix<F> m(r.dims[t], r.dims[s]);
        for (std::size_t c = 0; c < groups[s].size(); ++c) {
            Path p = a.basis_path(groups[s][c]);
            p.arrows.push_back(static_cast<int>(ar));
            auto nfv = a.nf(p);
            for (std::size_t rr = 0; rr < groups[t].size(); ++rr) m(rr, c) = nfv[groups[t][rr]];
        }
        r.maps.push_back(std::move(m));
    }
    return r;
}

/// The regular module, one projective per vertex in order.
template <class F>
Representation<F> regular_rep(const AlgPtr<F>& alg);

/// Intertwiner space Hom(M, N), with the flattened coordinates cached.
template <class F>
struct HomSpace {
    Representation<F> source, target;
    std::vector<VertexMaps<F>> basis;

    std::size_t dim() const { return basis.size(); }

    VertexMaps<F> combination(const std::vector<F>& coeffs) const {
        VertexMaps<F> r;
        for (std::size_t v = 0; v < target.dims.size(); ++v) {
            Matrix<F> m(target.dims[v], source.dims[v]);
            for (std::size_t k = 0; k < basis.size(); ++k) {
                if (coeffs[k].is_zero()) continue;
                m = m + basis[k][v].scaled(coeffs[k]);
            }
            r.push_back(std::move(m));
        }
        return r;
    }

    /// Matrix whose columns are the flattened basis maps.
    Matrix<F> flat_matrix() const {
        std::size_t n = 0;
        for (std::size_t v = 0; v < source.dims.size(); ++v) n += source.dims[v] * target.dims[v];
        Matrix<F> m(n, basis.size());
        for (std::size_t k = 0; k < basis.size(); ++k) {
            auto f = flatten_maps(basis[k]);
            for (std::size_t i = 0; i < n; ++i) m(i, k) = f[i];
        }
        return m;
    }
};

/// All vertex-indexed families commuting with the arrow maps, as the
/// nullspace of the stacked intertwiner system.
template <class F>
HomSpace<F> hom(const Representation<F>& m, const Representation<F>& n) {
    if (!same_algebra(m.alg, n.alg)) throw AlgebraMismatch("hom: modules over different algebras");
    const Quiver& q = m.alg->quiver;
    std::size_t nv = q.vertices.size();

    std::vector<std::size_t> offset(nv + 1, 0);
    for (std::size_t v = 0; v < nv; ++v) offset[v + 1] = offset[v] + m.dims[v] * n.dims[v];
    std::size_t unknowns = offset[nv];

    std::size_t rows = 0;
    for (std::size_t a = 0; a < q.arrows.size(); ++a)
        rows += m.dims[q.arrows[a].source] * n.dims[q.arrows[a].target];

    Matrix<F> sys(rows, unknowns);
    std::size_t row0 = 0;
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        std::size_t s = q.arrows[a].source, t = q.arrows[a].target;
        // N_a f_s - f_t M_a = 0; vec(N_a f_s) = (I (x) N_a) vec(f_s),
        // vec(f_t M_a) = (M_a^T (x) I) vec(f_t).
        Matrix<F> left = Matrix<F>::kron(Matrix<F>::identity(m.dims[s]), n.maps[a]);
        Matrix<F> right = Matrix<F>::kron(m.maps[a].transpose(), Matrix<F>::identity(n.dims[t]));
        for (std::size_t i = 0; i < left.rows(); ++i)
            for (std::size_t j = 0; j < left.cols(); ++j) sys(row0 + i, offset[s] + j) = left(i, j);
        for (std::size_t i = 0; i < right.rows(); ++i)
            for (std::size_t j = 0; j < right.cols(); ++j) sys(row0 + i, offset[t] + j) -= right(i, j);
        row0 += left.rows();
    }

    auto null = nullspace(sys);
    HomSpace<F> h;
    h.source = m;
    h.target = n;
    for (std::size_t k = 0; k < null.cols(); ++k) {
        VertexMaps<F> f;
        auto column = null.col(k);
        for (std::size_t v = 0; v < nv; ++v) {
            std::vector<F> slice(column.begin() + offset[v], column.begin() + offset[v + 1]);
            f.push_back(unvec(slice, n.dims[v], m.dims[v]));
        }
        h.basis.push_back(std::move(f));
    }
    return h;
}

/// Sub-representation spanned by the given vectors, with its inclusion.
template <class F>
struct SubRep {
    Representation<F> rep;
    VertexMaps<F> inclusion;  // ambient_v x sub_v
};

template <class F>
SubRep<F> sub_from_span(const Representation<F>& ambient, const std::vector<Matrix<F>>& spans) {
    SubRep<F> out;
    out.rep.alg = ambient.alg;
    out.rep.dims.resize(ambient.dims.size());
    for (std::size_t v = 0; v < ambient.dims.size(); ++v) {
        out.inclusion.push_back(column_basis(spans[v]));
        out.rep.dims[v] = out.inclusion[v].cols();
    }
    const Quiver& q = ambient.alg->quiver;
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        std::size_t s = q.arrows[a].source, t = q.arrows[a].target;
        auto x = solve(out.inclusion[t], ambient.maps[a] * out.inclusion[s]);
        if (!x) throw Error("sub_from_span: spans are not arrow-invariant");
        out.rep.maps.push_back(std::move(*x));
    }
    return out;
}

/// rad M = JM: spanned at each vertex by the images of the incoming arrows.
template <class F>
SubRep<F> radical(const Representation<F>& m) {
    const Quiver& q = m.alg->quiver;
    std::vector<Matrix<F>> spans;
    for (std::size_t v = 0; v < m.dims.size(); ++v) {
        Matrix<F> s(m.dims[v], 0);
        for (std::size_t a = 0; a < q.arrows.size(); ++a)
            if (static_cast<std::size_t>(q.arrows[a].target) == v) s = Matrix<F>::hstack(s, m.maps[a]);
        spans.push_back(std::move(s));
    }
    return sub_from_span(m, spans);
}

/// The submodule generated by a nonzero path residue inside the regular
/// module: basis residues q*p, arrows acting by left multiplication.
template <class F>
Representation<F> cyclic_module(const AlgPtr<F>& alg, const Path& p) {
    const auto& a = *alg;
    auto nfp = a.nf(p);
    bool zero = true;
    for (const auto& c : nfp) zero = zero && c.is_zero();
    if (zero) throw ZeroGenerator("cyclic_module: generator is zero in the algebra");

    Representation<F> ambient = projective(alg, p.source);
    auto groups = projective_basis_paths(a, p.source);
    std::vector<Matrix<F>> spans;
    for (std::size_t v = 0; v < ambient.dims.size(); ++v) spans.push_back(Matrix<F>(ambient.dims[v], 0));
    int tp = path_target(a.quiver, p);
    for (std::size_t k = 0; k < a.dim(); ++k) {
        const Path& qpath = a.basis_path(k);
        if (qpath.source != tp) continue;
        auto prod = a.nf(concat_apply(a.quiver, p, qpath));  // apply p, then q
        int v = path_target(a.quiver, qpath);
        Matrix<F> colm(ambient.dims[v], 1);
        for (std::size_t r = 0; r < groups[v].size(); ++r) colm(r, 0) = prod[groups[v][r]];
        spans[v] = Matrix<F>::hstack(spans[v], colm);
    }
    return sub_from_span(ambient, spans).rep;
}

template <class F>
Representation<F> direct_sum(const Representation<F>& m, const Representation<F>& n) {
    if (!same_algebra(m.alg, n.alg)) throw AlgebraMismatch("direct_sum: different algebras");
    Representation<F> r;
    r.alg = m.alg;
    for (std::size_t v = 0; v < m.dims.size(); ++v) r.dims.push_back(m.dims[v] + n.dims[v]);
    const Quiver& q = m.alg->quiver;
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        std::size_t s = q.arrows[a].source, t = q.arrows[a].target;
        Matrix<F> blk(r.dims[t], r.dims[s]);
        for (std::size_t i = 0; i < m.dims[t]; ++i)
            for (std::size_t j = 0; j < m.dims[s]; ++j) blk(i, j) = m.maps[a](i, j);
        for (std::size_t i = 0; i < n.dims[t]; ++i)
            for (std::size_t j = 0; j < n.dims[s]; ++j) blk(m.dims[t] + i, m.dims[s] + j) = n.maps[a](i, j);
        r.maps.push_back(std::move(blk));
    }
    return r;
}

template <class F>
Representation<F> regular_rep(const AlgPtr<F>& alg) {
    Representation<F> r = zero_rep(alg);
    for (std::size_t v = 0; v < alg->quiver.vertices.size(); ++v)
        r = direct_sum(r, projective(alg, static_cast<int>(v)));
    return r;
}

/// Minimal projective cover with its kernel (the syzygy).
template <class F>
struct CoverData {
    Representation<F> cover;
    VertexMaps<F> map;  // cover -> module
    Representation<F> kernel;
    VertexMaps<F> inclusion;  // kernel -> cover
};

template <class F>
CoverData<F> projective_cover(const Representation<F>& m) {
    if (m.is_zero()) throw ZeroModule("projective_cover: zero module");
    const Quiver& q = m.alg->quiver;
    std::size_t nv = q.vertices.size();

    auto rad = radical(m);
    // top basis lift: representatives of M/rad M, pivot-lifted for determinism
    std::vector<Matrix<F>> top_lift(nv);
    for (std::size_t v = 0; v < nv; ++v)
        top_lift[v] = quotient_basis<F>(m.dims[v], rad.inclusion[v]).second;

    CoverData<F> out;
    out.cover = zero_rep(m.alg);
    std::vector<std::vector<std::pair<int, int>>> pieces;  // (vertex, column in top_lift)
    for (std::size_t v = 0; v < nv; ++v)
        for (std::size_t c = 0; c < top_lift[v].cols(); ++c) {
            out.cover = direct_sum(out.cover, projective(m.alg, static_cast<int>(v)));
            pieces.push_back({{static_cast<int>(v), static_cast<int>(c)}});
        }

    // cover map: basis path p in the piece generated at (v, c) goes to p . m_{v,c}
    out.map.assign(nv, Matrix<F>());
    std::vector<std::size_t> col0(nv, 0);
    for (std::size_t v = 0; v < nv; ++v) out.map[v] = Matrix<F>(m.dims[v], out.cover.dims[v]);
    for (const auto& piece : pieces) {
        auto [pv, pc] = piece[0];
        auto groups = projective_basis_paths(*m.alg, pv);
        std::vector<F> gen = top_lift[pv].col(pc);
        for (std::size_t w = 0; w < nv; ++w) {
            for (std::size_t g = 0; g < groups[w].size(); ++g) {
                const Path& path = m.alg->basis_path(groups[w][g]);
                Matrix<F> genm(m.dims[pv], 1);
                genm.set_col(0, gen);
                Matrix<F> img = m.act(path) * genm;
                for (std::size_t i = 0; i < m.dims[w]; ++i) out.map[w](i, col0[w] + g) = img(i, 0);
            }
            col0[w] += groups[w].size();
        }
    }

    for (std::size_t v = 0; v < nv; ++v)
        if (rank(out.map[v]) != m.dims[v]) throw Error("projective_cover: map not surjective");

    std::vector<Matrix<F>> spans;
    for (std::size_t v = 0; v < nv; ++v) spans.push_back(nullspace(out.map[v]));
    auto ker = sub_from_span(out.cover, spans);
    out.kernel = std::move(ker.rep);
    out.inclusion = std::move(ker.inclusion);
    return out;
}

template <class F>
Representation<F> syzygy(const Representation<F>& m, int i) {
    if (i < 0) throw Error("syzygy: negative index");
    Representation<F> cur = m;
    for (int k = 0; k < i; ++k) {
        if (cur.is_zero()) return cur;
        cur = projective_cover(cur).kernel;
    }
    return cur;
}

enum class IsoVerdict { Yes, No, ProbablyNo };

template <class F>
struct IsoResult {
    IsoVerdict verdict;
    std::optional<VertexMaps<F>> witness;
    std::string reason;

    bool yes() const { return verdict == IsoVerdict::Yes; }
};

/// Monte Carlo isomorphism test: sound for Yes (the witness is verified
/// exactly); No is certified by dimension or hom-space asymmetry.
template <class F>
IsoResult<F> is_isomorphic(const Representation<F>& m, const Representation<F>& n, int trials = 64,
                           std::uint64_t seed = 1) {
    if (!same_algebra(m.alg, n.alg)) throw AlgebraMismatch("is_isomorphic: different algebras");
    if (m.dims != n.dims) return {IsoVerdict::No, std::nullopt, "dimension vectors differ"};
    if (m.is_zero()) {
        VertexMaps<F> id;
        for (std::size_t v = 0; v < m.dims.size(); ++v) id.push_back(Matrix<F>(0, 0));
        return {IsoVerdict::Yes, id, ""};
    }
    auto h = hom(m, n);
    auto hrev = hom(n, m);
    if (h.dim() != hrev.dim())
        return {IsoVerdict::No, std::nullopt, "hom spaces have different dimensions"};
    if (h.dim() == 0) return {IsoVerdict::No, std::nullopt, "no nonzero homomorphisms"};

    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        int radius = 1 + t / 8;
        std::uniform_int_distribution<int> d(-radius, radius);
        std::vector<F> coeffs(h.dim());
        for (auto& c : coeffs) c = F(d(rng));
        auto f = h.combination(coeffs);
        bool ok = true;
        for (std::size_t v = 0; v < m.dims.size() && ok; ++v)
            ok = rank(f[v]) == m.dims[v];
        if (ok) return {IsoVerdict::Yes, f, ""};
    }
    return {IsoVerdict::ProbablyNo, std::nullopt, "no invertible intertwiner found"};
}

template <class F>
struct StripResult {
    Representation<F> core;
    std::vector<int> peeled;  // vertices of peeled projectives, in peel order
};

/// Repeatedly splits off indecomposable projective summands. P_i divides M
/// exactly when some composite P_i -> M -> P_i is a unit of the local ring
/// End(P_i) = e_i A e_i, which reduces to a single coefficient check over the
/// hom-space bases; the detected summand is split off by an exact idempotent.
template <class F>
StripResult<F> strip_projectives(const Representation<F>& m) {
    StripResult<F> out;
    out.core = m;
    const auto& alg = *m.alg;
    std::size_t nv = alg.quiver.vertices.size();

    bool progress = true;
    while (progress && !out.core.is_zero()) {
        progress = false;
        for (std::size_t i = 0; i < nv && !progress; ++i) {
            Representation<F> p = projective(m.alg, static_cast<int>(i));
            if (p.total_dim() == 0) continue;
            auto groups = projective_basis_paths(alg, static_cast<int>(i));
            // position of the residue e_i inside P_i at vertex i
            int epos = -1;
            for (std::size_t g = 0; g < groups[i].size(); ++g)
                if (alg.basis_path(groups[i][g]).trivial()) epos = static_cast<int>(g);
            if (epos < 0) throw Error("strip_projectives: trivial path missing from projective basis");

            auto into = hom(p, out.core);
            auto back = hom(out.core, p);
            // P_i is a summand iff some composite g∘f is a unit of the local
            // ring End(P_i), i.e. has nonzero coefficient at e_i.
            int fa = -1, gb = -1;
            for (std::size_t a = 0; a < into.dim() && fa < 0; ++a)
                for (std::size_t b = 0; b < back.dim() && fa < 0; ++b) {
                    Matrix<F> comp = back.basis[b][i] * into.basis[a][i];
                    if (!comp(epos, epos).is_zero()) { fa = static_cast<int>(a); gb = static_cast<int>(b); }
                }
            if (fa < 0) continue;

            const auto& f = into.basis[fa];
            const auto& g = back.basis[gb];
            auto h = compose_maps(f, g);  // End(P_i)
            VertexMaps<F> hinv;
            for (std::size_t v = 0; v < nv; ++v) hinv.push_back(inverse(h[v]));
            // idempotent f ∘ h^{-1} ∘ g with image ≅ P_i; keep its kernel
            std::vector<Matrix<F>> spans;
            for (std::size_t v = 0; v < nv; ++v) spans.push_back(nullspace(f[v] * hinv[v] * g[v]));
            out.core = sub_from_span(out.core, spans).rep;
            out.peeled.push_back(static_cast<int>(i));
            progress = true;
        }
    }
    return out;
}

enum class Tri { True, False, Unknown };

template <class F>
struct IndecResult {
    Tri verdict;
    std::optional<VertexMaps<F>> idempotent;  // nontrivial witness on False
};

/// Indecomposability via End(M): Yes iff dim End/rad = 1 (radical by the
/// characteristic-zero trace-form criterion); No when a nontrivial idempotent
/// is exhibited; Undetermined when End/rad could be a bigger division algebra.
template <class F>
IndecResult<F> is_indecomposable(const Representation<F>& m, std::uint64_t seed = 1) {
    if constexpr (!std::is_same_v<F, Rat>)
        throw UnsupportedField("is_indecomposable: requires characteristic zero (field Q)");
    if (m.is_zero()) return {Tri::False, std::nullopt};

    auto end = hom(m, m);
    std::size_t n = end.dim();
    Matrix<F> flat = end.flat_matrix();

    auto coords_of = [&](const VertexMaps<F>& f) {
        auto v = flatten_maps(f);
        Matrix<F> col(v.size(), 1);
        for (std::size_t i = 0; i < v.size(); ++i) col(i, 0) = v[i];
        auto x = solve(flat, col);
        if (!x) throw Error("is_indecomposable: endomorphism outside End(M)");
        return *x;
    };

    // left regular representation of End(M)
    std::vector<Matrix<F>> lmul(n, Matrix<F>(n, n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            auto col = coords_of(compose_maps(end.basis[b], end.basis[a]));
            for (std::size_t i = 0; i < n; ++i) lmul[a](i, b) = col(i, 0);
        }
    Matrix<F> gram(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Matrix<F> prod = lmul[a] * lmul[b];
            F tr(0);
            for (std::size_t i = 0; i < n; ++i) tr += prod(i, i);
            gram(a, b) = tr;
        }
    std::size_t semisimple_dim = rank(gram);
    if (semisimple_dim == 1) return {Tri::True, std::nullopt};

    // Look for a nontrivial idempotent: split the minimal polynomial of a
    // candidate endomorphism at a rational eigenvalue.
    std::size_t big = m.total_dim();
    auto block_matrix = [&](const VertexMaps<F>& f) {
        Matrix<F> x(big, big);
        std::size_t off = 0;
        for (std::size_t v = 0; v < m.dims.size(); ++v) {
            for (std::size_t i = 0; i < m.dims[v]; ++i)
                for (std::size_t j = 0; j < m.dims[v]; ++j) x(off + i, off + j) = f[v](i, j);
            off += m.dims[v];
        }
        return x;
    };

    std::vector<VertexMaps<F>> candidates(end.basis);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> d(-3, 3);
    for (int t = 0; t < 24; ++t) {
        std::vector<F> coeffs(n);
        for (auto& c : coeffs) c = F(d(rng));
        candidates.push_back(end.combination(coeffs));
    }

    for (const auto& cand : candidates) {
        Matrix<F> x = block_matrix(cand);
        auto mp = poly::min_poly(x);
        // rational roots among small candidates
        for (int num = -12; num <= 12; ++num)
            for (int den = 1; den <= 4; ++den) {
                F root = F(num) / F(den);
                if (!poly::eval(mp, root).is_zero()) continue;
                poly::Poly<F> lin{-root, F(1)};
                poly::Poly<F> g{F(1)}, h = mp;
                while (true) {
                    auto [q, r] = poly::divmod(h, lin);
                    if (!r.empty()) break;
                    g = poly::mul(g, lin);
                    h = q;
                }
                if (poly::degree(h) < 1) continue;
                auto [gcd, u, v] = poly::ext_gcd(g, h);
                if (poly::degree(gcd) != 0) continue;
                Matrix<F> e = poly::eval_matrix(poly::mul(u, g), x);
                if (!(e * e == e)) continue;
                if (e.is_zero() || e == Matrix<F>::identity(big)) continue;
                // repackage as vertex maps for the witness
                VertexMaps<F> wit;
                std::size_t off = 0;
                for (std::size_t vv = 0; vv < m.dims.size(); ++vv) {
                    Matrix<F> blk(m.dims[vv], m.dims[vv]);
                    for (std::size_t i = 0; i < m.dims[vv]; ++i)
                        for (std::size_t j = 0; j < m.dims[vv]; ++j) blk(i, j) = e(off + i, off + j);
                    off += m.dims[vv];
                    wit.push_back(std::move(blk));
                }
                return {Tri::False, wit};
            }
    }
    return {Tri::Unknown, std::nullopt};
}

}  // namespace qgp
