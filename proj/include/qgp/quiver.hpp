#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qgp/errors.hpp"
#include "qgp/matrix.hpp"

namespace qgp {

struct Arrow {
    std::string name;
    int source = 0;
    int target = 0;
};

/// Finite directed multigraph. Vertices and arrows are referred to by index;
/// names are kept for IO.
struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    int vertex_index(const std::string& name) const {
        for (std::size_t i = 0; i < vertices.size(); ++i)
            if (vertices[i] == name) return static_cast<int>(i);
        throw ParseError("unknown vertex '" + name + "'");
    }
    int arrow_index(const std::string& name) const {
        for (std::size_t i = 0; i < arrows.size(); ++i)
            if (arrows[i].name == name) return static_cast<int>(i);
        throw ParseError("unknown arrow '" + name + "'");
    }

    void validate() const {
        std::set<std::string> vnames(vertices.begin(), vertices.end());
        if (vnames.size() != vertices.size()) throw ParseError("duplicate vertex names");
        std::set<std::string> anames;
        for (const auto& a : arrows) {
            if (!anames.insert(a.name).second) throw ParseError("duplicate arrow name '" + a.name + "'");
            if (a.source < 0 || a.source >= static_cast<int>(vertices.size()) ||
                a.target < 0 || a.target >= static_cast<int>(vertices.size()))
                throw ParseError("arrow '" + a.name + "' has undeclared endpoint");
        }
    }

    bool is_acyclic() const {
        // Kahn's algorithm on the vertex graph.
        std::vector<int> indeg(vertices.size(), 0);
        for (const auto& a : arrows) ++indeg[a.target];
        std::vector<int> stack;
        for (std::size_t v = 0; v < vertices.size(); ++v)
            if (indeg[v] == 0) stack.push_back(static_cast<int>(v));
        std::size_t seen = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++seen;
            for (const auto& a : arrows)
                if (a.source == v && --indeg[a.target] == 0) stack.push_back(a.target);
        }
        return seen == vertices.size();
    }
};

/// Arrow word in application order (first-applied first). A trivial path is
/// the empty word at `source`.
struct Path {
    int source = 0;
    std::vector<int> arrows;  // indices into the quiver's arrow list

    std::size_t length() const { return arrows.size(); }
    bool trivial() const { return arrows.empty(); }

    friend bool operator==(const Path& a, const Path& b) {
        return a.source == b.source && a.arrows == b.arrows;
    }
};

inline int path_target(const Quiver& q, const Path& p) {
    return p.arrows.empty() ? p.source : q.arrows[p.arrows.back()].target;
}

inline bool path_composable(const Quiver& q, const Path& p) {
    int at = p.source;
    for (int a : p.arrows) {
        if (q.arrows[a].source != at) return false;
        at = q.arrows[a].target;
    }
    return true;
}

/// `first` applied first, `then` after it. In the right-to-left
/// notation the product is written (then)(first).
inline Path concat_apply(const Quiver& q, const Path& first, const Path& then) {
    if (then.trivial() && first.trivial() && first.source != then.source)
        throw DimensionMismatch("concat_apply: trivial paths at different vertices");
    if (path_target(q, first) != then.source)
        throw DimensionMismatch("concat_apply: paths do not compose");
    Path r = first;
    r.arrows.insert(r.arrows.end(), then.arrows.begin(), then.arrows.end());
    return r;
}

/// Display convention: last-applied arrow written first.
inline std::string path_str(const Quiver& q, const Path& p) {
    if (p.trivial()) return "e_" + q.vertices[p.source];
    std::string s;
    for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
        if (!s.empty()) s += ".";
        s += q.arrows[*it].name;
    }
    return s;
}

/// Deterministic path order: by length, then lexicographically by the
/// application-order arrow-name sequence, then by source vertex.
struct PathLess {
    const Quiver* q;
    bool operator()(const Path& a, const Path& b) const {
        if (a.length() != b.length()) return a.length() < b.length();
        for (std::size_t i = 0; i < a.length(); ++i) {
            const std::string& an = q->arrows[a.arrows[i]].name;
            const std::string& bn = q->arrows[b.arrows[i]].name;
            if (an != bn) return an < bn;
        }
        if (a.source != b.source) return a.source < b.source;
        return a.arrows < b.arrows;
    }
};

template <class F>
struct Relation {
    std::vector<std::pair<F, Path>> terms;
};

/// Finite-dimensional quotient of a path algebra by an admissible ideal.
/// Elements are coordinate vectors over the chosen basis of path residues.
template <class F>
class BoundQuiverAlgebra {
public:
    using Elem = std::vector<F>;

    Quiver quiver;
    std::vector<Relation<F>> relations;
    int nil_bound = 0;  // every path of length >= nil_bound is zero
    bool monomial = false;

    std::vector<Path> paths;          // all paths of length < nil_bound, sorted by PathLess
    std::vector<int> basis;           // indices into `paths`
    std::vector<Elem> normal_form;    // per path index, coordinates over `basis`
    std::vector<int> trivial_basis;   // per vertex, position in `basis` of e_i

    std::size_t dim() const { return basis.size(); }

    const Path& basis_path(std::size_t k) const { return paths[basis[k]]; }

    int path_pos(const Path& p) const {
        auto it = index_.find(p);
        return it == index_.end() ? -1 : it->second;
    }

    /// Normal form of an arbitrary (composable) path.
    Elem nf(const Path& p) const {
        if (!path_composable(quiver, p)) throw DimensionMismatch("nf: path does not compose");
        if (p.length() >= static_cast<std::size_t>(nil_bound)) return Elem(dim());
        int pos = path_pos(p);
        if (pos < 0) throw Error("nf: path not tabulated");
        return normal_form[pos];
    }

    Elem zero() const { return Elem(dim()); }

    Elem unit() const {
        Elem e(dim());
        for (int k : trivial_basis) e[k] = F(1);
        return e;
    }

    Elem basis_elem(std::size_t k) const {
        Elem e(dim());
        e[k] = F(1);
        return e;
    }

    /// Product of basis residues, zero when the paths do not compose.
    const Elem& table(std::size_t u, std::size_t v) const { return mult_[u * dim() + v]; }

    /// u * v in the algebra (u acts after v).
    Elem multiply(const Elem& u, const Elem& v) const {
        if (u.size() != dim() || v.size() != dim()) throw DimensionMismatch("multiply: element size");
        Elem r(dim());
        for (std::size_t i = 0; i < dim(); ++i) {
            if (u[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim(); ++j) {
                if (v[j].is_zero()) continue;
                const Elem& t = table(i, j);
                F c = u[i] * v[j];
                for (std::size_t k = 0; k < dim(); ++k) r[k] += c * t[k];
            }
        }
        return r;
    }

    /// Basis residues as distinguished path representatives; for a monomial
    /// algebra these are exactly the nonzero paths.
    std::vector<Path> nonzero_paths() const {
        std::vector<Path> r;
        r.reserve(dim());
        for (int k : basis) r.push_back(paths[k]);
        return r;
    }

    void finish_build() {
        index_.clear();
        for (std::size_t i = 0; i < paths.size(); ++i) index_.emplace(paths[i], static_cast<int>(i));
        build_table();
    }

private:
    void build_table() {
        mult_.assign(dim() * dim(), Elem());
        for (std::size_t u = 0; u < dim(); ++u)
            for (std::size_t v = 0; v < dim(); ++v) {
                const Path& pu = basis_path(u);
                const Path& pv = basis_path(v);
                if (path_target(quiver, pv) != pu.source) {
                    mult_[u * dim() + v] = zero();
                } else {
                    mult_[u * dim() + v] = nf(concat_apply(quiver, pv, pu));
                }
            }
    }

    struct PathKeyLess {
        bool operator()(const Path& a, const Path& b) const {
            if (a.source != b.source) return a.source < b.source;
            return a.arrows < b.arrows;
        }
    };
    std::map<Path, int, PathKeyLess> index_;
    std::vector<Elem> mult_;
};

namespace detail {

inline std::vector<std::vector<Path>> paths_by_length(const Quiver& q, int max_len) {
    std::vector<std::vector<Path>> out(max_len + 1);
    for (std::size_t v = 0; v < q.vertices.size(); ++v)
        out[0].push_back(Path{static_cast<int>(v), {}});
    for (int len = 1; len <= max_len; ++len) {
        for (const Path& p : out[len - 1]) {
            int at = path_target(q, p);
            for (std::size_t a = 0; a < q.arrows.size(); ++a) {
                if (q.arrows[a].source != at) continue;
                Path np = p;
                np.arrows.push_back(static_cast<int>(a));
                out[len].push_back(np);
            }
        }
    }
    return out;
}

template <class F>
Relation<F> normalize_relation(const Quiver& q, const Relation<F>& rel) {
    if (rel.terms.empty()) throw MalformedRelation("relation with no terms");
    std::map<std::vector<int>, std::pair<F, Path>> combined;
    int src = -1, tgt = -1;
    for (const auto& [c, p] : rel.terms) {
        if (!path_composable(q, p)) throw MalformedRelation("relation term does not compose");
        if (p.length() < 2) throw MalformedRelation("relation term of length < 2");
        int ps = p.source, pt = path_target(q, p);
        if (src < 0) { src = ps; tgt = pt; }
        if (ps != src || pt != tgt) throw MalformedRelation("relation terms are not parallel");
        std::vector<int> key = p.arrows;
        key.push_back(p.source);
        auto it = combined.find(key);
        if (it == combined.end()) combined.emplace(key, std::make_pair(c, p));
        else it->second.first += c;
    }
    Relation<F> out;
    for (auto& [k, cp] : combined)
        if (!cp.first.is_zero()) out.terms.push_back(cp);
    if (out.terms.empty()) throw MalformedRelation("relation cancels to zero");
    return out;
}

/// Row space with reduction, rows indexed over a fixed column universe.
template <class F>
class RowSpan {
public:
    explicit RowSpan(std::size_t cols) : cols_(cols) {}

    /// Reduce v against the span; returns the residue.
    std::vector<F> reduce(std::vector<F> v) const {
        for (const auto& [piv, row] : rows_) {
            if (v[piv].is_zero()) continue;
            F c = v[piv];
            for (std::size_t j = 0; j < cols_; ++j) v[j] -= c * row[j];
        }
        return v;
    }

    /// Insert v; returns false if it was already in the span.
    bool insert(std::vector<F> v) {
        v = reduce(std::move(v));
        std::size_t piv = cols_;
        for (std::size_t j = 0; j < cols_; ++j)
            if (!v[j].is_zero()) { piv = j; break; }
        if (piv == cols_) return false;
        F inv = v[piv].inv();
        for (auto& x : v) x *= inv;
        // back-substitute into existing rows
        for (auto& [_, row] : rows_) {
            if (row[piv].is_zero()) continue;
            F c = row[piv];
            for (std::size_t j = 0; j < cols_; ++j) row[j] -= c * v[j];
        }
        rows_.emplace(piv, std::move(v));
        return true;
    }

    bool contains(const std::vector<F>& v) const {
        auto r = reduce(v);
        return std::all_of(r.begin(), r.end(), [](const F& x) { return x.is_zero(); });
    }

    std::size_t rank() const { return rows_.size(); }
    const std::map<std::size_t, std::vector<F>>& rows() const { return rows_; }

private:
    std::size_t cols_;
    std::map<std::size_t, std::vector<F>> rows_;  // pivot column -> reduced row
};

}  // namespace detail

/// Builds the finite-dimensional quotient algebra from an admissible
/// presentation. Works degree by degree: the ideal slice spanned by all
/// products (path)*(generator)*(path) is row-reduced against a descending
/// path order, so the surviving (non-pivot) paths form the greedy
/// shortest-lexicographic quotient basis. Terminates at the first degree d
/// whose paths all lie in the ideal; beyond that everything truncates to zero.
template <class F>
BoundQuiverAlgebra<F> build_algebra(const Quiver& quiver, const std::vector<Relation<F>>& input_rels,
                                    int max_degree = -1) {
    quiver.validate();
    if (max_degree < 0) max_degree = 2 + 8 * static_cast<int>(quiver.arrows.size());
    if (max_degree < 2) throw Error("build_algebra: max_degree must be >= 2");

    std::vector<Relation<F>> rels;
    for (const auto& r : input_rels) rels.push_back(detail::normalize_relation(quiver, r));
    if (rels.empty() && !quiver.is_acyclic())
        throw NotAdmissible("no relations and the quiver has an oriented cycle");

    auto by_len = detail::paths_by_length(quiver, max_degree);

    // Sorted universe of paths of length 2..L, largest first, with positions.
    PathLess less{&quiver};
    auto make_universe = [&](int lo, int hi) {
        std::vector<Path> u;
        for (int l = lo; l <= hi; ++l) u.insert(u.end(), by_len[l].begin(), by_len[l].end());
        std::sort(u.begin(), u.end(), [&](const Path& a, const Path& b) { return less(b, a); });
        return u;
    };

    auto pos_of = [&](const std::vector<Path>& universe, const Path& p) -> std::size_t {
        auto it = std::lower_bound(universe.begin(), universe.end(), p,
                                   [&](const Path& a, const Path& b) { return less(b, a); });
        if (it == universe.end() || !(*it == p)) throw Error("build_algebra: path missing from universe");
        return static_cast<std::size_t>(it - universe.begin());
    };

    // Emit the slice vector of u*g*v over the given universe; terms longer
    // than `drop_from` are truncated (only sound once J^drop_from is known to
    // lie in the ideal; pass a large value to disable).
    auto product_vector = [&](const std::vector<Path>& universe, const Relation<F>& g, const Path& left,
                              const Path& right, int drop_from) -> std::optional<std::vector<F>> {
        std::vector<F> v(universe.size());
        bool nonzero = false;
        for (const auto& [c, term] : g.terms) {
            // full path: apply right, then the term, then left
            Path full = concat_apply(quiver, concat_apply(quiver, right, term), left);
            if (static_cast<int>(full.length()) >= drop_from) continue;
            v[pos_of(universe, full)] += c;
            nonzero = true;
        }
        if (!nonzero) return std::nullopt;
        return v;
    };

    // Enumerate composable (left, g, right). When truncation is active the
    // frame bound uses the shortest term of g, so mixed-degree generators
    // still contribute their surviving low-degree parts.
    auto fill_span = [&](detail::RowSpan<F>& span, const std::vector<Path>& universe, int max_len,
                         int drop_from) {
        bool truncating = drop_from <= max_degree;
        for (const auto& g : rels) {
            int gmax = 0, gmin = max_degree, src = g.terms[0].second.source,
                tgt = path_target(quiver, g.terms[0].second);
            for (const auto& [c, t] : g.terms) {
                gmax = std::max<int>(gmax, static_cast<int>(t.length()));
                gmin = std::min<int>(gmin, static_cast<int>(t.length()));
            }
            int frame = truncating ? gmin : gmax;
            for (int lr = 0; lr + frame <= max_len; ++lr) {
                for (int rlen = 0; rlen <= lr; ++rlen) {
                    int llen = lr - rlen;
                    for (const Path& right : by_len[rlen]) {
                        if (path_target(quiver, right) != src) continue;
                        for (const Path& left : by_len[llen]) {
                            if (left.source != tgt) continue;
                            auto v = product_vector(universe, g, left, right, drop_from);
                            if (v) span.insert(std::move(*v));
                        }
                    }
                }
            }
        }
    };

    // Phase 1: find the admissibility witness degree d.
    int witness = -1;
    for (int L = 2; L <= max_degree && witness < 0; ++L) {
        bool empty_level = by_len[L].empty();
        if (empty_level) { witness = L; break; }
        auto universe = make_universe(2, L);
        detail::RowSpan<F> span(universe.size());
        fill_span(span, universe, L, max_degree + 1);
        bool all_in = true;
        for (const Path& p : by_len[L]) {
            std::vector<F> unit(universe.size());
            unit[pos_of(universe, p)] = F(1);
            if (!span.contains(unit)) { all_in = false; break; }
        }
        if (all_in) witness = L;
    }
    if (witness < 0)
        throw NotAdmissible("no degree <= " + std::to_string(max_degree) +
                            " has all paths in the ideal; algebra not certified finite dimensional");

    // Phase 2: exact ideal slice below the nilpotency bound, with truncation.
    int d = witness;
    std::vector<Path> universe = make_universe(2, d - 1);
    detail::RowSpan<F> span(universe.size());
    fill_span(span, universe, d - 1, d);

    BoundQuiverAlgebra<F> alg;
    alg.quiver = quiver;
    alg.relations = rels;
    alg.nil_bound = d;
    alg.monomial = std::all_of(rels.begin(), rels.end(),
                               [](const Relation<F>& r) { return r.terms.size() == 1; });

    // All paths of length < d, ascending order; basis = non-pivot paths.
    for (int l = 0; l < d; ++l) alg.paths.insert(alg.paths.end(), by_len[l].begin(), by_len[l].end());
    std::sort(alg.paths.begin(), alg.paths.end(), less);

    std::set<std::size_t> pivot_positions;  // positions in `universe`
    for (const auto& [piv, row] : span.rows()) pivot_positions.insert(piv);

    std::vector<int> basis_of_path(alg.paths.size(), -1);
    for (std::size_t i = 0; i < alg.paths.size(); ++i) {
        const Path& p = alg.paths[i];
        bool pivot = false;
        if (p.length() >= 2) pivot = pivot_positions.count(pos_of(universe, p)) > 0;
        if (!pivot) {
            basis_of_path[i] = static_cast<int>(alg.basis.size());
            alg.basis.push_back(static_cast<int>(i));
        }
    }

    // Normal forms: reduce each path's unit vector against the ideal slice.
    alg.normal_form.assign(alg.paths.size(), typename BoundQuiverAlgebra<F>::Elem(alg.basis.size()));
    for (std::size_t i = 0; i < alg.paths.size(); ++i) {
        const Path& p = alg.paths[i];
        if (basis_of_path[i] >= 0) {
            alg.normal_form[i][basis_of_path[i]] = F(1);
            continue;
        }
        std::vector<F> unit(universe.size());
        unit[pos_of(universe, p)] = F(1);
        auto residue = span.reduce(unit);
        for (std::size_t j = 0; j < universe.size(); ++j) {
            if (residue[j].is_zero()) continue;
            auto it = std::lower_bound(alg.paths.begin(), alg.paths.end(), universe[j], less);
            int bi = basis_of_path[static_cast<std::size_t>(it - alg.paths.begin())];
            if (bi < 0) throw Error("build_algebra: residue touches a pivot path");
            alg.normal_form[i][bi] += residue[j];
        }
    }

    alg.trivial_basis.assign(quiver.vertices.size(), -1);
    for (std::size_t k = 0; k < alg.basis.size(); ++k) {
        const Path& p = alg.basis_path(k);
        if (p.trivial()) alg.trivial_basis[p.source] = static_cast<int>(k);
    }

    alg.finish_build();
    return alg;
}

}  // namespace qgp
