#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "qgp/quiver.hpp"
#include "qgp/rep.hpp"

namespace qgp {

/// Word combinatorics on the nonzero paths of a monomial algebra.
/// Factorization conditions are phrased on written words (last-applied arrow
/// first); q' = q q'' means the application-order word of q' ends with q.

template <class F>
void require_monomial(const BoundQuiverAlgebra<F>& a, const char* op) {
    if (!a.monomial) throw NotMonomial(std::string(op) + ": algebra is not monomial");
}

template <class F>
bool is_nonzero_path(const BoundQuiverAlgebra<F>& a, const Path& p) {
    if (!path_composable(a.quiver, p)) return false;
    if (p.length() >= static_cast<std::size_t>(a.nil_bound)) return false;
    auto nfv = a.nf(p);
    return std::any_of(nfv.begin(), nfv.end(), [](const F& c) { return !c.is_zero(); });
}

namespace detail {

inline bool word_ends_with(const std::vector<int>& word, const std::vector<int>& tail) {
    return tail.size() <= word.size() && std::equal(tail.rbegin(), tail.rend(), word.rbegin());
}
inline bool word_starts_with(const std::vector<int>& word, const std::vector<int>& head) {
    return head.size() <= word.size() && std::equal(head.begin(), head.end(), word.begin());
}

template <class F>
std::vector<Path> nonzero_nontrivial_paths(const BoundQuiverAlgebra<F>& a) {
    std::vector<Path> out;
    for (const Path& p : a.nonzero_paths())
        if (!p.trivial()) out.push_back(p);
    return out;
}

}  // namespace detail

/// Conditions (P1)-(P3) for the ordered pair (p, q): pq is zero, q divides
/// every right annihilator of p, and p divides every left annihilator of q.
template <class F>
bool is_perfect_pair(const BoundQuiverAlgebra<F>& a, const Path& p, const Path& q) {
    require_monomial(a, "is_perfect_pair");
    if (p.trivial() || q.trivial()) return false;
    if (!is_nonzero_path(a, p) || !is_nonzero_path(a, q)) return false;

    // (P1): s p = t q and pq = 0
    if (p.source != path_target(a.quiver, q)) return false;
    if (is_nonzero_path(a, concat_apply(a.quiver, q, p))) return false;

    auto candidates = detail::nonzero_nontrivial_paths(a);
    // (P2): p q' = 0 with t q' = s p implies q' = q q''
    for (const Path& qp : candidates) {
        if (path_target(a.quiver, qp) != p.source) continue;
        if (is_nonzero_path(a, concat_apply(a.quiver, qp, p))) continue;
        // q' = q q'': the application word of q' must end with that of q
        if (!detail::word_ends_with(qp.arrows, q.arrows)) return false;
    }
    // (P3): p' q = 0 with s p' = t q implies p' = p'' p
    for (const Path& pp : candidates) {
        if (pp.source != path_target(a.quiver, q)) continue;
        if (is_nonzero_path(a, concat_apply(a.quiver, q, pp))) continue;
        if (!detail::word_starts_with(pp.arrows, p.arrows)) return false;
    }
    return true;
}

struct PerfectCycle {
    std::vector<Path> members;  // consecutive members form perfect pairs, cyclically
};

/// All cycles of the perfect-pair graph. A path is perfect exactly when it
/// lies on such a cycle; successors and predecessors in the graph are unique,
/// so the cycles are disjoint.
template <class F>
std::vector<PerfectCycle> perfect_paths(const BoundQuiverAlgebra<F>& a) {
    require_monomial(a, "perfect_paths");
    auto nodes = detail::nonzero_nontrivial_paths(a);
    std::vector<int> succ(nodes.size(), -1);
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = 0; j < nodes.size(); ++j)
            if (is_perfect_pair(a, nodes[i], nodes[j])) {
                if (succ[i] >= 0) throw Error("perfect_paths: non-unique successor");
                succ[i] = static_cast<int>(j);
            }

    std::vector<PerfectCycle> cycles;
    std::vector<int> state(nodes.size(), 0);  // 0 unvisited, 1 on stack, 2 done
    for (std::size_t start = 0; start < nodes.size(); ++start) {
        if (state[start] != 0) continue;
        std::vector<int> chain;
        int cur = static_cast<int>(start);
        while (cur >= 0 && state[cur] == 0) {
            state[cur] = 1;
            chain.push_back(cur);
            cur = succ[cur];
        }
        if (cur >= 0 && state[cur] == 1) {
            // found a new cycle: the tail of the chain from `cur`
            auto it = std::find(chain.begin(), chain.end(), cur);
            PerfectCycle c;
            for (auto k = it; k != chain.end(); ++k) c.members.push_back(nodes[*k]);
            cycles.push_back(std::move(c));
        }
        for (int k : chain) state[k] = 2;
    }
    return cycles;
}

template <class F>
std::vector<Path> perfect_path_set(const BoundQuiverAlgebra<F>& a) {
    std::vector<Path> out;
    for (const auto& c : perfect_paths(a))
        for (const Path& p : c.members) out.push_back(p);
    std::sort(out.begin(), out.end(), [&](const Path& x, const Path& y) { return PathLess{&a.quiver}(x, y); });
    return out;
}

struct Overlap {
    Path p, q;          // perfect paths
    Path x, left, right;  // p = left . x and q = x . right in written order
    bool ends_nontrivial;  // whether both left and right are nontrivial
};

/// Overlap configurations (O1)/(O2) among perfect paths. In (O2) only the
/// shared factor x is required non-trivial, exactly as stated; the
/// `ends_nontrivial` flag distinguishes the stricter reading.
template <class F>
std::vector<Overlap> overlaps(const BoundQuiverAlgebra<F>& a) {
    require_monomial(a, "overlaps");
    auto perfect = perfect_path_set(a);
    std::vector<Overlap> out;
    for (const Path& p : perfect)
        for (const Path& q : perfect) {
            bool same = p == q;
            // written(p) = written(left) + written(x); application order:
            // p.arrows = x.arrows + left.arrows
            for (std::size_t xlen = 1; xlen <= p.length(); ++xlen) {
                if (same && xlen == p.length()) continue;  // (O1) needs left nontrivial
                if (xlen > q.length()) continue;
                std::vector<int> xw(p.arrows.begin(), p.arrows.begin() + xlen);
                // q = x . right: q.arrows = right.arrows + x.arrows
                if (!detail::word_ends_with(q.arrows, xw)) continue;
                Path x{p.source, xw};
                Path left{path_target(a.quiver, x),
                          std::vector<int>(p.arrows.begin() + xlen, p.arrows.end())};
                Path right{q.source, std::vector<int>(q.arrows.begin(), q.arrows.end() - xlen)};
                if (same && (left.trivial() || right.trivial())) continue;
                // the composite p' x q' (apply right, then x, then left)
                Path comp = right;
                comp.arrows.insert(comp.arrows.end(), x.arrows.begin(), x.arrows.end());
                comp.arrows.insert(comp.arrows.end(), left.arrows.begin(), left.arrows.end());
                if (!is_nonzero_path(a, comp)) continue;
                out.push_back({p, q, x, left, right, !left.trivial() && !right.trivial()});
            }
        }
    return out;
}

/// One entry (p, Lambda p) per perfect path, deduplicated up to isomorphism.
template <class F>
std::vector<std::pair<Path, Representation<F>>> gproj_indecomposables(const AlgPtr<F>& alg,
                                                                      std::uint64_t seed = 1) {
    require_monomial(*alg, "gproj_indecomposables");
    std::vector<std::pair<Path, Representation<F>>> out;
    for (const Path& p : perfect_path_set(*alg)) {
        auto v = cyclic_module(alg, p);
        bool dup = false;
        for (const auto& [q, w] : out)
            if (is_isomorphic(v, w, 64, seed).yes()) dup = true;
        if (!dup) out.push_back({p, std::move(v)});
    }
    return out;
}

/// Predecessor of p in its perfect cycle; the cyclic-module functor turns the
/// perfect-pair graph into the syzygy action: Omega(Lambda p) = Lambda pred(p).
template <class F>
Path syzygy_of_perfect(const BoundQuiverAlgebra<F>& a, const Path& p) {
    for (const auto& c : perfect_paths(a)) {
        for (std::size_t i = 0; i < c.members.size(); ++i) {
            if (c.members[i] == p)
                return c.members[(i + c.members.size() - 1) % c.members.size()];
        }
    }
    throw NotPerfect("syzygy_of_perfect: path is not perfect");
}

}  // namespace qgp
