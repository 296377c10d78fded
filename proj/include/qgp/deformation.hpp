#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qgp/gproj_monomial.hpp"
#include "qgp/homology.hpp"
#include "qgp/rep.hpp"

namespace qgp {

/// Which quotient of k[[t]] a versal deformation ring was identified as.
struct RingTag {
    enum class Kind { Trivial, DualNumbers2, TruncatedPoly, Undetermined };

    Kind kind = Kind::Undetermined;
    int order = 0;  // only for TruncatedPoly: k[[t]]/(t^order)

    static RingTag trivial() { return {Kind::Trivial, 0}; }
    static RingTag dual_numbers() { return {Kind::DualNumbers2, 2}; }
    static RingTag truncated(int n) { return {Kind::TruncatedPoly, n}; }
    static RingTag undetermined() { return {Kind::Undetermined, 0}; }

    std::string str() const {
        switch (kind) {
            case Kind::Trivial: return "k";
            case Kind::DualNumbers2: return "k[[t]]/(t^2)";
            case Kind::TruncatedPoly: return "k[[t]]/(t^" + std::to_string(order) + ")";
            default: return "undetermined";
        }
    }

    friend bool operator==(const RingTag& a, const RingTag& b) {
        return a.kind == b.kind && (a.kind != Kind::TruncatedPoly || a.order == b.order);
    }
};

/// A module structure over Lambda tensor k[t]/(t^{n+1}) reducing to the base
/// module mod t: each arrow acts by M_a + sum_j t^j C_a^{(j)}.
template <class F>
struct LiftOrderN {
    Representation<F> base;
    std::vector<VertexMaps<F>> corrections;  // corrections[j-1][a] is C_a^{(j)}

    int order() const { return static_cast<int>(corrections.size()); }

    const Matrix<F>& coeff(int j, std::size_t a) const {
        return j == 0 ? base.maps[a] : corrections[j - 1][a];
    }

    /// Truncated product of the lifted arrow maps along a path, degrees
    /// 0..max_deg.
    std::vector<Matrix<F>> poly_act(const Path& p, int max_deg) const {
        const Quiver& q = base.alg->quiver;
        std::vector<Matrix<F>> acc;
        acc.push_back(Matrix<F>::identity(base.dims[p.source]));
        for (int d = 1; d <= max_deg; ++d)
            acc.push_back(Matrix<F>(base.dims[p.source], base.dims[p.source]));
        int at = p.source;
        for (int a : p.arrows) {
            int to = q.arrows[a].target;
            std::vector<Matrix<F>> next;
            for (int d = 0; d <= max_deg; ++d) {
                Matrix<F> m(base.dims[to], acc[0].cols());
                for (int j = 0; j <= std::min(d, order()); ++j) m = m + coeff(j, a) * acc[d - j];
                next.push_back(std::move(m));
            }
            acc = std::move(next);
            at = to;
        }
        return acc;
    }

    /// Degree-d coefficient of a relation evaluated on the lifted maps.
    Matrix<F> relation_coeff(const Relation<F>& rel, int d) const {
        const Path& p0 = rel.terms[0].second;
        Matrix<F> sum(base.dims[path_target(base.alg->quiver, p0)], base.dims[p0.source]);
        for (const auto& [c, p] : rel.terms) sum = sum + poly_act(p, d)[d].scaled(c);
        return sum;
    }

    /// All relations hold modulo t^{order+1}.
    bool valid() const {
        for (const auto& rel : base.alg->relations)
            for (int d = 0; d <= order(); ++d) {
                auto m = relation_coeff(rel, d);
                for (std::size_t i = 0; i < m.rows(); ++i)
                    for (std::size_t j = 0; j < m.cols(); ++j)
                        if (!m(i, j).is_zero()) return false;
            }
        return true;
    }
};

namespace detail {

/// The linearization of the relations at the base module: the operator
/// sending a correction family (X_a) to the t-linear term of each relation.
/// The same operator governs every lifting order; only the inhomogeneous
/// defect changes.
template <class F>
struct Linearized {
    std::vector<std::size_t> offset;  // per arrow into the unknown vector
    std::vector<std::size_t> row0;    // per relation into the row space
    Matrix<F> op;

    VertexMaps<F> unflatten(const std::vector<F>& x, const Representation<F>& v) const {
        const Quiver& q = v.alg->quiver;
        VertexMaps<F> out;
        for (std::size_t a = 0; a < q.arrows.size(); ++a) {
            std::size_t r = v.dims[q.arrows[a].target], c = v.dims[q.arrows[a].source];
            std::vector<F> slice(x.begin() + offset[a], x.begin() + offset[a] + r * c);
            out.push_back(unvec(slice, r, c));
        }
        return out;
    }
};

template <class F>
Linearized<F> linearize_relations(const Representation<F>& v) {
    const auto& alg = *v.alg;
    const Quiver& q = alg.quiver;

    Linearized<F> lin;
    lin.offset.assign(q.arrows.size() + 1, 0);
    for (std::size_t a = 0; a < q.arrows.size(); ++a)
        lin.offset[a + 1] =
            lin.offset[a] + v.dims[q.arrows[a].target] * v.dims[q.arrows[a].source];
    std::size_t unknowns = lin.offset[q.arrows.size()];
    lin.offset.pop_back();

    std::size_t rows = 0;
    lin.row0.clear();
    for (const auto& rel : alg.relations) {
        lin.row0.push_back(rows);
        const Path& p = rel.terms[0].second;
        rows += v.dims[path_target(q, p)] * v.dims[p.source];
    }

    lin.op = Matrix<F>(rows, unknowns);
    for (std::size_t r = 0; r < alg.relations.size(); ++r) {
        for (const auto& [c, p] : alg.relations[r].terms) {
            for (std::size_t k = 0; k < p.arrows.size(); ++k) {
                // before: maps applied earlier; after: maps applied later
                Path pre{p.source, std::vector<int>(p.arrows.begin(), p.arrows.begin() + k)};
                Path post{q.arrows[p.arrows[k]].target,
                          std::vector<int>(p.arrows.begin() + k + 1, p.arrows.end())};
                Matrix<F> before = v.act(pre);
                Matrix<F> after = v.act(post);
                Matrix<F> block = Matrix<F>::kron(before.transpose(), after).scaled(c);
                std::size_t a = p.arrows[k];
                for (std::size_t i = 0; i < block.rows(); ++i)
                    for (std::size_t j = 0; j < block.cols(); ++j)
                        lin.op(lin.row0[r] + i, lin.offset[a] + j) += block(i, j);
            }
        }
    }
    return lin;
}

template <class F>
std::vector<F> flatten_correction(const Linearized<F>& lin, const VertexMaps<F>& x) {
    std::vector<F> out;
    for (const auto& m : x)
        for (const F& e : vec(m)) out.push_back(e);
    (void)lin;
    return out;
}

}  // namespace detail

/// First-order deformation directions: cocycles of the linearized relations
/// modulo the coboundaries coming from vertex-wise base changes.
template <class F>
struct TangentSpace {
    Matrix<F> cocycles;      // columns: basis of the kernel of the linearization
    Matrix<F> coboundaries;  // columns: the gauge directions
    std::size_t quotient_dim = 0;
    std::vector<VertexMaps<F>> representatives;  // one per quotient basis vector
};

template <class F>
TangentSpace<F> tangent_space(const Representation<F>& v) {
    if (v.is_zero()) throw ZeroModule("tangent_space: zero module");
    const Quiver& q = v.alg->quiver;
    auto lin = detail::linearize_relations(v);

    TangentSpace<F> t;
    t.cocycles = nullspace(lin.op);

    // coboundary columns: X_a = Y_{ta} M_a - M_a Y_{sa} over unit choices of Y
    std::size_t unknowns = lin.op.cols();
    std::vector<std::vector<F>> cob_cols;
    for (std::size_t vtx = 0; vtx < q.vertices.size(); ++vtx) {
        for (std::size_t i = 0; i < v.dims[vtx]; ++i)
            for (std::size_t j = 0; j < v.dims[vtx]; ++j) {
                Matrix<F> y(v.dims[vtx], v.dims[vtx]);
                y(i, j) = F(1);
                VertexMaps<F> x;
                for (std::size_t a = 0; a < q.arrows.size(); ++a) {
                    std::size_t s = q.arrows[a].source, tt = q.arrows[a].target;
                    Matrix<F> m(v.dims[tt], v.dims[s]);
                    if (tt == vtx) m = m + y * v.maps[a];
                    if (s == vtx) m = m - v.maps[a] * y;
                    x.push_back(std::move(m));
                }
                cob_cols.push_back(detail::flatten_correction(lin, x));
            }
    }
    t.coboundaries = Matrix<F>(unknowns, cob_cols.size());
    for (std::size_t k = 0; k < cob_cols.size(); ++k) t.coboundaries.set_col(k, cob_cols[k]);

    std::size_t cob_rank = rank(t.coboundaries);
    t.quotient_dim = t.cocycles.cols() - cob_rank;

    // representatives: cocycle columns that grow the span of the coboundaries
    Matrix<F> span = t.coboundaries;
    for (std::size_t k = 0; k < t.cocycles.cols() && t.representatives.size() < t.quotient_dim;
         ++k) {
        Matrix<F> cand(unknowns, 1);
        cand.set_col(0, t.cocycles.col(k));
        Matrix<F> grown = Matrix<F>::hstack(span, cand);
        if (rank(grown) > rank(span)) {
            span = std::move(grown);
            t.representatives.push_back(lin.unflatten(t.cocycles.col(k), v));
        }
    }
    return t;
}

/// Attempt to extend a valid order-n lift to order n+1: solve the linear
/// system whose right side is the order-(n+1) defect. Returns nothing when
/// the system is inconsistent (the obstruction).
template <class F>
std::optional<LiftOrderN<F>> extend_lift(const LiftOrderN<F>& lift) {
    if (!lift.valid()) throw InvalidLift("extend_lift: input violates its relations");
    const auto& alg = *lift.base.alg;
    auto lin = detail::linearize_relations(lift.base);
    int n1 = lift.order() + 1;

    Matrix<F> rhs(lin.op.rows(), 1);
    for (std::size_t r = 0; r < alg.relations.size(); ++r) {
        auto defect = vec(lift.relation_coeff(alg.relations[r], n1));
        for (std::size_t i = 0; i < defect.size(); ++i) rhs(lin.row0[r] + i, 0) = -defect[i];
    }
    auto x = solve(lin.op, rhs);
    if (!x) return std::nullopt;

    LiftOrderN<F> out = lift;
    out.corrections.push_back(lin.unflatten(x->col(0), lift.base));
    return out;
}

/// The order-1 lift carried by the projective cover when Omega V = V: in a
/// basis adapted to 0 -> V -> P(V) -> V -> 0 the cover's arrow maps are
/// upper block triangular with V on the diagonal, and the off-diagonal block
/// is the correction.
template <class F>
LiftOrderN<F> canonical_selfext_lift(const Representation<F>& v) {
    if (v.is_zero()) throw ZeroModule("canonical_selfext_lift: zero module");
    auto cd = projective_cover(v);
    auto iso = is_isomorphic(v, cd.kernel);
    if (!iso.yes())
        throw HypothesisFails("canonical_selfext_lift: syzygy is not isomorphic to the module");

    const Quiver& q = v.alg->quiver;
    std::size_t nv = q.vertices.size();

    // kernel copy of V inside the cover, and a section of the cover map
    VertexMaps<F> incl, sect;
    for (std::size_t w = 0; w < nv; ++w) {
        incl.push_back(cd.inclusion[w] * (*iso.witness)[w]);
        auto s = solve(cd.map[w], Matrix<F>::identity(v.dims[w]));
        if (!s) throw Error("canonical_selfext_lift: cover map lost surjectivity");
        sect.push_back(std::move(*s));
    }

    LiftOrderN<F> lift;
    lift.base = v;
    VertexMaps<F> corr;
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        std::size_t s = q.arrows[a].source, t = q.arrows[a].target;
        Matrix<F> res = cd.cover.maps[a] * sect[s] - sect[t] * v.maps[a];
        auto c = solve(incl[t], res);
        if (!c) throw Error("canonical_selfext_lift: residual left the kernel copy");
        corr.push_back(std::move(*c));
    }
    lift.corrections.push_back(std::move(corr));
    if (!lift.valid()) throw Error("canonical_selfext_lift: constructed lift is invalid");
    return lift;
}

/// Extendability ladder for each tangent direction, seeded with zeros above
/// order one.
struct LiftLadder {
    int reached = 1;     // highest order attained
    int failed_at = -1;  // order whose extension was obstructed, or -1
};

struct LiftProbe {
    std::size_t tangent_dim = 0;
    std::vector<LiftLadder> ladders;
};

template <class F>
LiftProbe probe_lifts(const Representation<F>& v, int max_order) {
    auto ts = tangent_space(v);
    LiftProbe out;
    out.tangent_dim = ts.quotient_dim;
    for (const auto& dir : ts.representatives) {
        LiftOrderN<F> lift;
        lift.base = v;
        lift.corrections.push_back(dir);
        LiftLadder lad;
        while (lift.order() < max_order) {
            auto next = extend_lift(lift);
            if (!next) {
                lad.failed_at = lift.order() + 1;
                break;
            }
            lift = std::move(*next);
        }
        lad.reached = lift.order();
        out.ladders.push_back(lad);
    }
    return out;
}

/// Outcome of the deformation-ring classification.
struct DefoReport {
    RingTag ring;
    std::string route;  // "monomial", "gorenstein", "zero", "none"
    std::size_t tangent_dim = 0;
    int obstruction_order = -1;
};

/// Classification of the versal deformation ring. The
/// monomial route uses the perfect-path dichotomy; the Gorenstein route
/// probes lifts order by order. A ring is only ever named under one of the
/// two hypotheses.
template <class F>
DefoReport classify_defo_ring(const Representation<F>& v, int cutoff = 6,
                              std::uint64_t seed = 1) {
    DefoReport rep;
    if (v.is_zero()) {
        rep.ring = RingTag::trivial();
        rep.route = "zero";
        return rep;
    }

    if (v.alg->monomial && overlaps(*v.alg).empty()) {
        for (const Path& p : perfect_path_set(*v.alg)) {
            if (!is_isomorphic(v, cyclic_module(v.alg, p), 64, seed).yes()) continue;
            rep.route = "monomial";
            rep.tangent_dim = ext1(v, v);
            if (rep.tangent_dim == 0) {
                rep.ring = RingTag::trivial();
            } else {
                rep.ring = RingTag::dual_numbers();
                rep.obstruction_order = 2;
            }
            return rep;
        }
    }

    auto gor = is_gorenstein(v.alg);
    auto gp = is_gorenstein_projective(v, -1, seed);
    std::size_t e1 = ext1(v, v);
    if (gor.verdict == Tri::True && gp.verdict == Tri::True &&
        (stable_hom(v, v).dim() == 1 || e1 == 0)) {
        rep.route = "gorenstein";
        auto ts = tangent_space(v);
        rep.tangent_dim = ts.quotient_dim;
        if (ts.quotient_dim == 0) {
            rep.ring = RingTag::trivial();
            return rep;
        }
        if (ts.quotient_dim == 1) {
            // prefer the cover lift when the periodicity hypothesis holds
            LiftOrderN<F> lift;
            lift.base = v;
            if (is_isomorphic(syzygy(v, 1), v, 64, seed).yes()) {
                lift = canonical_selfext_lift(v);
            } else {
                lift.corrections.push_back(ts.representatives[0]);
            }
            while (lift.order() < cutoff) {
                auto next = extend_lift(lift);
                if (!next) {
                    int failed = lift.order() + 1;
                    rep.obstruction_order = failed;
                    rep.ring = failed == 2 ? RingTag::dual_numbers() : RingTag::truncated(failed);
                    return rep;
                }
                lift = std::move(*next);
            }
        }
        rep.ring = RingTag::undetermined();
        return rep;
    }

    rep.route = "none";
    rep.tangent_dim = e1;
    rep.ring = RingTag::undetermined();
    return rep;
}

}  // namespace qgp
