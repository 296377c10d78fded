#include <catch2/catch_amalgamated.hpp>

#include <memory>

#include "qgp/fixtures.hpp"
#include "qgp/homology.hpp"

using namespace qgp;

namespace {

AlgPtr<Rat> lam() {
    static AlgPtr<Rat> a = std::make_shared<BoundQuiverAlgebra<Rat>>(fixtures::lambda<Rat>());
    return a;
}
AlgPtr<Rat> gam() {
    static AlgPtr<Rat> a = std::make_shared<BoundQuiverAlgebra<Rat>>(fixtures::gamma<Rat>());
    return a;
}

Representation<Rat> vmod() { return cyclic_module(lam(), Path{0, {0, 1}}); }

Representation<Rat> simple_at(const AlgPtr<Rat>& a, int v) {
    Representation<Rat> s = zero_rep(a);
    s.dims[v] = 1;
    const Quiver& q = a->quiver;
    for (std::size_t ar = 0; ar < q.arrows.size(); ++ar)
        s.maps[ar] = Matrix<Rat>(s.dims[q.arrows[ar].target], s.dims[q.arrows[ar].source]);
    s.validate();
    return s;
}

}  // namespace

TEST_CASE("stable hom kills maps out of projectives") {
    auto v = vmod();
    for (int i = 0; i < 2; ++i) {
        auto p = projective(lam(), i);
        CHECK(stable_hom(p, v).dim() == 0);
        CHECK(stable_hom(p, p).dim() == 0);
    }
    CHECK(stable_hom(v, zero_rep(lam())).dim() == 0);
}

TEST_CASE("first extensions of the periodic modules") {
    auto v = vmod();
    CHECK(ext1(v, v) == 1);

    auto w = fixtures::gamma_w<Rat>(gam());
    CHECK(ext1(w, w) == 1);

    // projectives have no extensions in either variable slot that matters
    auto p1 = projective(lam(), 0);
    CHECK(ext1(p1, v) == 0);
    CHECK(ext1(v, p1) == 0);

    // additivity in the first argument
    CHECK(ext1(direct_sum(v, v), v) == 2);
}

TEST_CASE("ext via stable hom of the syzygy agrees when the hypothesis holds") {
    auto v = vmod();
    auto w = fixtures::gamma_w<Rat>(gam());
    for (int i = 1; i <= 3; ++i) {
        CHECK(ext_via_syzygy(v, v, i) == ext_dim(v, v, i));
        CHECK(ext_via_syzygy(w, w, i) == ext_dim(w, w, i));
    }
    // the syzygy has period 1 resp. 2, so self-extensions persist in
    // every degree
    CHECK(ext_dim(v, v, 3) == 1);
    CHECK(ext_dim(w, w, 2) == 1);

    // a non-Cohen-Macaulay module fails the vanishing hypothesis
    auto s = simple_at(lam(), 1);
    auto cm = is_cohen_macaulay(s);
    REQUIRE(cm.verdict == Tri::False);
    CHECK_THROWS_AS(ext_via_syzygy(s, s, cm.checked_up_to), HypothesisFails);
}

TEST_CASE("opposite algebra") {
    auto op = opposite(lam());
    CHECK(op->dim() == 9);
    CHECK(op->monomial);
    CHECK(op->quiver.arrows[0].source == 1);
    // reversing twice restores the presentation
    CHECK(same_algebra(opposite(op), lam()));

    auto gop = opposite(gam());
    CHECK(gop->dim() == 6);
    CHECK_FALSE(gop->monomial);
    CHECK(same_algebra(opposite(gop), gam()));
}

TEST_CASE("linear dual of the regular module") {
    auto op = opposite(lam());
    auto d = dual(regular_rep(lam()), op);
    CHECK(d.total_dim() == 9);
    d.validate();
}

TEST_CASE("star dual sends projectives to opposite projectives") {
    for (const AlgPtr<Rat>& alg : {lam(), gam()}) {
        auto op = opposite(alg);
        for (std::size_t i = 0; i < alg->quiver.vertices.size(); ++i) {
            auto star = star_dual(projective(alg, static_cast<int>(i)), op);
            CHECK(is_isomorphic(star, projective(op, static_cast<int>(i))).yes());
        }
    }
}

TEST_CASE("double star dual is the identity on Gorenstein projectives") {
    auto v = vmod();
    auto op = opposite(lam());
    auto dd = star_dual(star_dual(v, op), lam());
    CHECK(is_isomorphic(dd, v).yes());

    auto w = fixtures::gamma_w<Rat>(gam());
    auto gop = opposite(gam());
    CHECK(is_isomorphic(star_dual(star_dual(w, gop), gam()), w).yes());
}

TEST_CASE("injective dimensions of the fixtures") {
    AlgPtr<Rat> d = std::make_shared<BoundQuiverAlgebra<Rat>>(fixtures::dual_numbers<Rat>());
    AlgPtr<Rat> c = std::make_shared<BoundQuiverAlgebra<Rat>>(fixtures::cycle3<Rat>());
    for (const AlgPtr<Rat>& alg : {d, c}) {  // self-injective
        CHECK(injective_dimension(alg, Side::Left) == 0);
        CHECK(injective_dimension(alg, Side::Right) == 0);
    }

    AlgPtr<Rat> h = std::make_shared<BoundQuiverAlgebra<Rat>>(fixtures::a2<Rat>());
    CHECK(injective_dimension(h, Side::Left) == 1);
    CHECK(injective_dimension(h, Side::Right) == 1);

    // both base fixtures are Gorenstein with matching one-sided dimensions
    for (const AlgPtr<Rat>& alg : {lam(), gam()}) {
        auto g = is_gorenstein(alg);
        REQUIRE(g.verdict == Tri::True);
        CHECK(g.left == g.right);
        // not self-injective: a non-projective simple fails to be
        // Gorenstein projective below
        CHECK(*g.left >= 1);
    }
    CHECK(injective_dimension(gam(), Side::Left) == 2);
    CHECK(injective_dimension(gam(), Side::Right) == 2);
    CHECK(injective_dimension(lam(), Side::Left) == 2);
    CHECK(injective_dimension(lam(), Side::Right) == 2);
}

TEST_CASE("cohen-macaulay modules") {
    CHECK(is_cohen_macaulay(vmod()).verdict == Tri::True);
    CHECK(is_cohen_macaulay(fixtures::gamma_w<Rat>(gam())).verdict == Tri::True);
    CHECK(is_cohen_macaulay(projective(lam(), 1)).verdict == Tri::True);
    CHECK(is_cohen_macaulay(simple_at(lam(), 0)).verdict == Tri::False);
    CHECK(is_cohen_macaulay(simple_at(lam(), 1)).verdict == Tri::False);
}

TEST_CASE("gorenstein projectivity routing") {
    auto rv = is_gorenstein_projective(vmod());
    CHECK(rv.verdict == Tri::True);
    CHECK(rv.route == "monomial");

    auto rp = is_gorenstein_projective(projective(lam(), 0));
    CHECK(rp.verdict == Tri::True);
    CHECK(rp.route == "projective");

    auto rw = is_gorenstein_projective(fixtures::gamma_w<Rat>(gam()));
    CHECK(rw.verdict == Tri::True);
    CHECK(rw.route == "gorenstein");

    auto rs = is_gorenstein_projective(simple_at(lam(), 1));
    CHECK(rs.verdict == Tri::False);
    CHECK(rs.route == "monomial");

    // hereditary case: the only Gorenstein projectives are the projectives
    AlgPtr<Rat> h = std::make_shared<BoundQuiverAlgebra<Rat>>(fixtures::a2<Rat>());
    CHECK(is_gorenstein_projective(simple_at(h, 0)).verdict == Tri::False);
    CHECK(is_gorenstein_projective(projective(h, 0)).verdict == Tri::True);
}
