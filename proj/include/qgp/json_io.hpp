#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qgp/quiver.hpp"
#include "qgp/rep.hpp"
#include "qgp/transport.hpp"

namespace qgp {

using json = nlohmann::json;

/// Path words serialize in written order (last-applied arrow first), the
/// same order paths are displayed in.
inline json path_to_json(const Quiver& q, const Path& p) {
    json arr = json::array();
    for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it)
        arr.push_back(q.arrows[*it].name);
    return arr;
}

inline Path path_from_json(const Quiver& q, const json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("path: expected a nonempty name array");
    std::vector<int> app;
    for (auto it = j.rbegin(); it != j.rend(); ++it) {
        if (!it->is_string()) throw ParseError("path: arrow names must be strings");
        int a = q.arrow_index(it->get<std::string>());
        if (a < 0) throw ParseError("path: unknown arrow '" + it->get<std::string>() + "'");
        app.push_back(a);
    }
    Path p{q.arrows[app.front()].source, app};
    if (!path_composable(q, p)) throw ParseError("path: arrows do not compose");
    return p;
}

template <class F>
std::string scalar_to_string(const F& x) {
    return x.str();
}

template <class F>
F scalar_from_string(const std::string& s) {
    return F::from_string(s);
}

template <class F>
json field_to_json() {
    if constexpr (std::is_same_v<F, Rat>) {
        return "Q";
    } else {
        return json{{"Fp", F::modulus()}};
    }
}

template <class F>
json matrix_to_json(const Matrix<F>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <class F>
Matrix<F> matrix_from_json(const json& j, std::size_t rows, std::size_t cols) {
    if (!j.is_array() || j.size() != rows)
        throw ParseError("matrix: expected " + std::to_string(rows) + " rows");
    Matrix<F> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw ParseError("matrix: expected " + std::to_string(cols) + " columns");
        for (std::size_t c = 0; c < cols; ++c)
            m(i, c) = scalar_from_string<F>(j[i][c].get<std::string>());
    }
    return m;
}

template <class F>
json algebra_to_json(const BoundQuiverAlgebra<F>& a) {
    const Quiver& q = a.quiver;
    json out;
    out["field"] = field_to_json<F>();
    out["vertices"] = q.vertices;
    json arrows = json::array();
    for (const auto& ar : q.arrows)
        arrows.push_back({{"name", ar.name}, {"from", q.vertices[ar.source]},
                          {"to", q.vertices[ar.target]}});
    out["arrows"] = std::move(arrows);
    json rels = json::array();
    for (const auto& rel : a.relations) {
        json terms = json::array();
        for (const auto& [c, p] : rel.terms)
            terms.push_back({{"coeff", scalar_to_string(c)}, {"path", path_to_json(q, p)}});
        rels.push_back(std::move(terms));
    }
    out["relations"] = std::move(rels);
    return out;
}

template <class F>
AlgPtr<F> algebra_from_json(const json& j, int max_degree = -1) {
    if (!j.is_object()) throw ParseError("algebra: expected an object");
    Quiver q;
    for (const auto& v : j.at("vertices")) q.vertices.push_back(v.get<std::string>());
    for (const auto& ar : j.at("arrows")) {
        int from = q.vertex_index(ar.at("from").get<std::string>());
        int to = q.vertex_index(ar.at("to").get<std::string>());
        if (from < 0 || to < 0) throw ParseError("arrow endpoints must name vertices");
        q.arrows.push_back({ar.at("name").get<std::string>(), from, to});
    }
    std::vector<Relation<F>> rels;
    for (const auto& r : j.value("relations", json::array())) {
        Relation<F> rel;
        for (const auto& t : r) {
            F c = scalar_from_string<F>(t.at("coeff").get<std::string>());
            rel.terms.push_back({c, path_from_json(q, t.at("path"))});
        }
        rels.push_back(std::move(rel));
    }
    return std::make_shared<BoundQuiverAlgebra<F>>(build_algebra<F>(q, rels, max_degree));
}

template <class F>
json module_to_json(const Representation<F>& m) {
    const Quiver& q = m.alg->quiver;
    json out;
    json dims;
    for (std::size_t v = 0; v < q.vertices.size(); ++v)
        dims[q.vertices[v]] = m.dims[v];
    out["dims"] = std::move(dims);
    json maps;
    for (std::size_t a = 0; a < q.arrows.size(); ++a)
        maps[q.arrows[a].name] = matrix_to_json(m.maps[a]);
    out["maps"] = std::move(maps);
    return out;
}

template <class F>
Representation<F> module_from_json(const json& j, const AlgPtr<F>& alg) {
    const Quiver& q = alg->quiver;
    Representation<F> m;
    m.alg = alg;
    m.dims.assign(q.vertices.size(), 0);
    const json& dims = j.at("dims");
    for (std::size_t v = 0; v < q.vertices.size(); ++v) {
        if (dims.contains(q.vertices[v])) m.dims[v] = dims.at(q.vertices[v]).get<std::size_t>();
    }
    const json maps = j.value("maps", json::object());
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        std::size_t r = m.dims[q.arrows[a].target], c = m.dims[q.arrows[a].source];
        if (maps.contains(q.arrows[a].name)) {
            m.maps.push_back(matrix_from_json<F>(maps.at(q.arrows[a].name), r, c));
        } else if (r == 0 || c == 0) {
            m.maps.push_back(Matrix<F>(r, c));
        } else {
            throw ParseError("module: missing map for arrow '" + q.arrows[a].name + "'");
        }
    }
    m.validate();
    return m;
}

template <class F>
json bimodule_to_json(const Bimodule<F>& x) {
    const Quiver& gq = x.left_alg->quiver;
    const Quiver& lq = x.right_alg->quiver;
    json out;
    out["left_algebra"] = algebra_to_json(*x.left_alg);
    out["right_algebra"] = algebra_to_json(*x.right_alg);
    json dims;
    for (std::size_t j = 0; j < gq.vertices.size(); ++j)
        for (std::size_t i = 0; i < lq.vertices.size(); ++i)
            dims[gq.vertices[j]][lq.vertices[i]] = x.dims[j][i];
    out["dims"] = std::move(dims);
    json lmaps, rmaps;
    for (std::size_t g = 0; g < gq.arrows.size(); ++g)
        for (std::size_t i = 0; i < lq.vertices.size(); ++i)
            lmaps[gq.arrows[g].name][lq.vertices[i]] = matrix_to_json(x.left_maps[g][i]);
    for (std::size_t a = 0; a < lq.arrows.size(); ++a)
        for (std::size_t j = 0; j < gq.vertices.size(); ++j)
            rmaps[lq.arrows[a].name][gq.vertices[j]] = matrix_to_json(x.right_maps[a][j]);
    out["left_maps"] = std::move(lmaps);
    out["right_maps"] = std::move(rmaps);
    return out;
}

template <class F>
Bimodule<F> bimodule_from_json(const json& j, const AlgPtr<F>& left, const AlgPtr<F>& right) {
    const Quiver& gq = left->quiver;
    const Quiver& lq = right->quiver;
    Bimodule<F> x;
    x.left_alg = left;
    x.right_alg = right;
    x.dims.assign(gq.vertices.size(), std::vector<std::size_t>(lq.vertices.size(), 0));
    const json& dims = j.at("dims");
    for (std::size_t jj = 0; jj < gq.vertices.size(); ++jj)
        for (std::size_t i = 0; i < lq.vertices.size(); ++i)
            if (dims.contains(gq.vertices[jj]) && dims.at(gq.vertices[jj]).contains(lq.vertices[i]))
                x.dims[jj][i] = dims.at(gq.vertices[jj]).at(lq.vertices[i]).get<std::size_t>();
    const json lmaps = j.value("left_maps", json::object());
    for (std::size_t g = 0; g < gq.arrows.size(); ++g) {
        std::vector<Matrix<F>> per;
        for (std::size_t i = 0; i < lq.vertices.size(); ++i) {
            std::size_t r = x.dims[gq.arrows[g].target][i], c = x.dims[gq.arrows[g].source][i];
            if (lmaps.contains(gq.arrows[g].name) &&
                lmaps.at(gq.arrows[g].name).contains(lq.vertices[i]))
                per.push_back(
                    matrix_from_json<F>(lmaps.at(gq.arrows[g].name).at(lq.vertices[i]), r, c));
            else if (r == 0 || c == 0)
                per.push_back(Matrix<F>(r, c));
            else
                throw ParseError("bimodule: missing left map for '" + gq.arrows[g].name + "'");
        }
        x.left_maps.push_back(std::move(per));
    }
    const json rmaps = j.value("right_maps", json::object());
    for (std::size_t a = 0; a < lq.arrows.size(); ++a) {
        std::vector<Matrix<F>> per;
        for (std::size_t jj = 0; jj < gq.vertices.size(); ++jj) {
            std::size_t r = x.dims[jj][lq.arrows[a].source], c = x.dims[jj][lq.arrows[a].target];
            if (rmaps.contains(lq.arrows[a].name) &&
                rmaps.at(lq.arrows[a].name).contains(gq.vertices[jj]))
                per.push_back(
                    matrix_from_json<F>(rmaps.at(lq.arrows[a].name).at(gq.vertices[jj]), r, c));
            else if (r == 0 || c == 0)
                per.push_back(Matrix<F>(r, c));
            else
                throw ParseError("bimodule: missing right map for '" + lq.arrows[a].name + "'");
        }
        x.right_maps.push_back(std::move(per));
    }
    x.validate();
    return x;
}

}  // namespace qgp
