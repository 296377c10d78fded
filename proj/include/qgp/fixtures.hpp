#pragma once

#include <string>
#include <vector>

#include "qgp/quiver.hpp"
#include "qgp/rep.hpp"

namespace qgp::fixtures {

namespace detail {
inline Path word(const Quiver& q, int source, std::initializer_list<const char*> applied) {
    Path p{source, {}};
    for (const char* a : applied) p.arrows.push_back(q.arrow_index(a));
    return p;
}
}  // namespace detail

/// Two vertices 1 <-> 2 with a:1->2, b:2->1 and the single monomial relation
/// b.a.b.a (written baba); dimension 9.
template <class F>
BoundQuiverAlgebra<F> lambda() {
    Quiver q;
    q.vertices = {"1", "2"};
    q.arrows = {{"a", 0, 1}, {"b", 1, 0}};
    Relation<F> rel;
    rel.terms.push_back({F(1), detail::word(q, 0, {"a", "b", "a", "b"})});
    return build_algebra<F>(q, {rel});
}

/// Two vertices with x:1'->2', y:2'->1', a loop z at 2', and relations
/// yx, zx, yz, z^2 - xy; dimension 6, not monomial.
template <class F>
BoundQuiverAlgebra<F> gamma() {
    Quiver q;
    q.vertices = {"1'", "2'"};
    q.arrows = {{"x", 0, 1}, {"y", 1, 0}, {"z", 1, 1}};
    std::vector<Relation<F>> rels(4);
    rels[0].terms.push_back({F(1), detail::word(q, 0, {"x", "y"})});       // yx
    rels[1].terms.push_back({F(1), detail::word(q, 0, {"x", "z"})});       // zx
    rels[2].terms.push_back({F(1), detail::word(q, 1, {"z", "y"})});       // yz
    rels[3].terms.push_back({F(1), detail::word(q, 1, {"z", "z"})});       // z^2 - xy
    rels[3].terms.push_back({-F(1), detail::word(q, 1, {"y", "x"})});
    return build_algebra<F>(q, rels);
}

/// One vertex with a loop a and relation a^2; the dual numbers k[a]/(a^2).
template <class F>
BoundQuiverAlgebra<F> dual_numbers() {
    Quiver q;
    q.vertices = {"1"};
    q.arrows = {{"a", 0, 0}};
    Relation<F> rel;
    rel.terms.push_back({F(1), detail::word(q, 0, {"a", "a"})});
    return build_algebra<F>(q, {rel});
}

/// Hereditary A2: 1 -> 2, no relations.
template <class F>
BoundQuiverAlgebra<F> a2() {
    Quiver q;
    q.vertices = {"1", "2"};
    q.arrows = {{"a", 0, 1}};
    return build_algebra<F>(q, {});
}

/// Oriented 3-cycle a:1->2, b:2->3, c:3->1 with all length-2 paths zero.
template <class F>
BoundQuiverAlgebra<F> cycle3() {
    Quiver q;
    q.vertices = {"1", "2", "3"};
    q.arrows = {{"a", 0, 1}, {"b", 1, 2}, {"c", 2, 0}};
    std::vector<Relation<F>> rels(3);
    rels[0].terms.push_back({F(1), detail::word(q, 0, {"a", "b"})});  // ba
    rels[1].terms.push_back({F(1), detail::word(q, 1, {"b", "c"})});  // cb
    rels[2].terms.push_back({F(1), detail::word(q, 2, {"c", "a"})});  // ac
    return build_algebra<F>(q, rels);
}

/// The string module W over gamma induced by the walk 1' --x--> 2' <--z-- 2':
/// dimension vector (1,2), x and z each hit the shared middle basis vector.
template <class F>
Representation<F> gamma_w(const AlgPtr<F>& g) {
    Representation<F> w;
    w.alg = g;
    w.dims = {1, 2};
    w.maps.resize(3);
    w.maps[g->quiver.arrow_index("x")] = Matrix<F>::from_rows({{F(1)}, {F(0)}});
    w.maps[g->quiver.arrow_index("y")] = Matrix<F>(1, 2);
    w.maps[g->quiver.arrow_index("z")] = Matrix<F>::from_rows({{F(0), F(1)}, {F(0), F(0)}});
    w.validate();
    return w;
}

template <class F>
BoundQuiverAlgebra<F> by_name(const std::string& name) {
    if (name == "lambda") return lambda<F>();
    if (name == "gamma") return gamma<F>();
    if (name == "dual") return dual_numbers<F>();
    if (name == "a2") return a2<F>();
    if (name == "cycle3") return cycle3<F>();
    throw ParseError("unknown fixture '" + name + "'");
}

inline const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names = {"lambda", "gamma", "dual", "a2", "cycle3"};
    return names;
}

}  // namespace qgp::fixtures
