// Command-line frontend: algebra inspection, Gorenstein-projective
// classification, deformation-ring identification, lift probing, and
// bimodule transport checks.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qgp/deformation.hpp"
#include "qgp/fixtures.hpp"
#include "qgp/gproj_monomial.hpp"
#include "qgp/homology.hpp"
#include "qgp/json_io.hpp"
#include "qgp/transport.hpp"

namespace {

using namespace qgp;

struct Config {
    std::string command;
    std::string field = "Q";
    std::uint64_t seed = 1;
    int cutoff = -1;
    bool as_json = false;
    std::string fixture;
    std::string algebra_file;
    std::string module_file;
    std::string bimodule_file;
    std::string gen;
    int order = 3;
};

const char* tri_str(Tri t) {
    switch (t) {
        case Tri::True: return "true";
        case Tri::False: return "false";
        default: return "unknown";
    }
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

template <class F>
AlgPtr<F> load_algebra(const Config& cfg) {
    if (!cfg.fixture.empty()) {
        if (cfg.fixture == "lambda")
            return std::make_shared<BoundQuiverAlgebra<F>>(fixtures::lambda<F>());
        if (cfg.fixture == "gamma")
            return std::make_shared<BoundQuiverAlgebra<F>>(fixtures::gamma<F>());
        if (cfg.fixture == "dual")
            return std::make_shared<BoundQuiverAlgebra<F>>(fixtures::dual_numbers<F>());
        if (cfg.fixture == "a2")
            return std::make_shared<BoundQuiverAlgebra<F>>(fixtures::a2<F>());
        if (cfg.fixture == "cycle3")
            return std::make_shared<BoundQuiverAlgebra<F>>(fixtures::cycle3<F>());
        throw ParseError("unknown fixture '" + cfg.fixture +
                         "' (expected lambda, gamma, dual, a2, or cycle3)");
    }
    if (!cfg.algebra_file.empty()) return algebra_from_json<F>(load_json_file(cfg.algebra_file));
    throw ParseError("no algebra given (use --fixture or --algebra)");
}

/// Generator paths on the command line use the written order b,a (the order
/// the path is displayed in, last-applied arrow first).
template <class F>
Path parse_gen(const AlgPtr<F>& alg, const std::string& gen) {
    json names = json::array();
    std::stringstream ss(gen);
    std::string item;
    while (std::getline(ss, item, ',')) names.push_back(item);
    return path_from_json(alg->quiver, names);
}

template <class F>
Representation<F> load_module(const Config& cfg, const AlgPtr<F>& alg) {
    if (!cfg.gen.empty()) return cyclic_module(alg, parse_gen(alg, cfg.gen));
    if (!cfg.module_file.empty()) return module_from_json<F>(load_json_file(cfg.module_file), alg);
    // fixture conveniences: the canonical module of each base example
    if (cfg.fixture == "lambda") return cyclic_module(alg, parse_gen(alg, "b,a"));
    if (cfg.fixture == "gamma") return fixtures::gamma_w<F>(alg);
    throw ParseError("no module given (use --gen or --module)");
}

void emit(const Config& cfg, const json& report, const std::vector<std::string>& text) {
    if (cfg.as_json) {
        std::cout << report.dump(2) << "\n";
    } else {
        for (const auto& line : text) std::cout << line << "\n";
    }
}

json defo_to_json(const DefoReport& r) {
    return {{"ring", r.ring.str()},
            {"route", r.route},
            {"tangent_dim", r.tangent_dim},
            {"obstruction_order", r.obstruction_order}};
}

template <class F>
json dims_to_json(const Representation<F>& m) {
    json dims;
    for (std::size_t v = 0; v < m.alg->quiver.vertices.size(); ++v)
        dims[m.alg->quiver.vertices[v]] = m.dims[v];
    return dims;
}

template <class F>
int cmd_algebra_info(const Config& cfg) {
    auto alg = load_algebra<F>(cfg);
    auto gor = is_gorenstein(alg, cfg.cutoff);

    json rep;
    rep["dim"] = alg->dim();
    json basis = json::array();
    for (std::size_t k = 0; k < alg->dim(); ++k)
        basis.push_back(path_str(alg->quiver, alg->basis_path(k)));
    rep["basis"] = std::move(basis);
    rep["is_monomial"] = alg->monomial;
    json g;
    g["verdict"] = tri_str(gor.verdict);
    if (gor.left) g["left"] = *gor.left;
    if (gor.right) g["right"] = *gor.right;
    rep["gorenstein"] = std::move(g);
    rep["cutoff_used"] = cfg.cutoff < 0 ? static_cast<int>(alg->dim()) + 2 : cfg.cutoff;
    rep["seed"] = cfg.seed;

    std::vector<std::string> text;
    text.push_back("dim " + std::to_string(alg->dim()));
    text.push_back(std::string("monomial: ") + (alg->monomial ? "true" : "false"));
    if (gor.verdict == Tri::True)
        text.push_back("Gorenstein(" + std::to_string(*gor.left) + "," +
                       std::to_string(*gor.right) + ")");
    else
        text.push_back("Gorenstein: unknown at cutoff");
    emit(cfg, rep, text);
    return gor.verdict == Tri::Unknown ? 4 : 0;
}

template <class F>
int cmd_gproj_classify(const Config& cfg) {
    auto alg = load_algebra<F>(cfg);
    json rep;
    std::vector<std::string> text;
    int rc = 0;

    bool have_module = !cfg.gen.empty() || !cfg.module_file.empty() || cfg.fixture == "gamma";
    if (alg->monomial) {
        json pp = json::array();
        for (const Path& p : perfect_path_set(*alg)) pp.push_back(path_to_json(alg->quiver, p));
        rep["perfect_paths"] = pp;
        json ov = json::array();
        for (const Overlap& o : overlaps(*alg))
            ov.push_back({{"p", path_to_json(alg->quiver, o.p)},
                          {"q", path_to_json(alg->quiver, o.q)},
                          {"x", path_to_json(alg->quiver, o.x)},
                          {"ends_nontrivial", o.ends_nontrivial}});
        rep["overlaps"] = ov;
        json mods = json::array();
        for (const auto& [p, m] : gproj_indecomposables(alg, cfg.seed))
            mods.push_back({{"generator", path_to_json(alg->quiver, p)},
                            {"dims", dims_to_json(m)},
                            {"syzygy_generator",
                             path_to_json(alg->quiver, syzygy_of_perfect(*alg, p))}});
        rep["gproj_nonprojective"] = mods;

        text.push_back("perfect paths: " + std::to_string(pp.size()));
        for (const auto& p : pp) {
            std::string s;
            for (const auto& n : p) s += (s.empty() ? "" : ".") + n.get<std::string>();
            text.push_back("  " + s);
        }
        text.push_back("overlaps: " + std::to_string(ov.size()));
        text.push_back("non-projective Gorenstein projectives: " + std::to_string(mods.size()));
    } else if (!have_module) {
        throw NotMonomial("gproj classify: algebra is not monomial; give --module for the "
                          "homological routes");
    }

    if (have_module) {
        auto m = load_module<F>(cfg, alg);
        auto gp = is_gorenstein_projective(m, cfg.cutoff, cfg.seed);
        auto cm = is_cohen_macaulay(m, cfg.cutoff);
        json frag;
        frag["ext1"] = ext1(m, m);
        frag["stable_end_dim"] = m.is_zero() ? 0 : stable_hom(m, m).dim();
        frag["cm"] = tri_str(cm.verdict);
        frag["gproj"] = {{"verdict", tri_str(gp.verdict)}, {"route", gp.route}};
        rep["module"] = std::move(frag);
        text.push_back(std::string("module gproj: ") + tri_str(gp.verdict) + " via " + gp.route);
        if (gp.verdict == Tri::Unknown) rc = 4;
    }
    rep["cutoff_used"] = cfg.cutoff < 0 ? static_cast<int>(alg->dim()) + 2 : cfg.cutoff;
    rep["seed"] = cfg.seed;
    emit(cfg, rep, text);
    return rc;
}

template <class F>
int cmd_defo_ring(const Config& cfg) {
    auto alg = load_algebra<F>(cfg);
    auto m = load_module<F>(cfg, alg);
    int cutoff = cfg.cutoff < 0 ? 6 : cfg.cutoff;
    auto r = classify_defo_ring(m, cutoff, cfg.seed);
    json rep = defo_to_json(r);
    rep["cutoff_used"] = cutoff;
    rep["seed"] = cfg.seed;
    emit(cfg, rep,
         {"ring: " + r.ring.str(), "route: " + r.route,
          "tangent dimension: " + std::to_string(r.tangent_dim)});
    return r.ring == RingTag::undetermined() ? 4 : 0;
}

template <class F>
int cmd_lift_probe(const Config& cfg) {
    auto alg = load_algebra<F>(cfg);
    auto m = load_module<F>(cfg, alg);
    auto probe = probe_lifts(m, cfg.order);
    json rep;
    rep["tangent_dim"] = probe.tangent_dim;
    json lads = json::array();
    for (const auto& l : probe.ladders)
        lads.push_back({{"reached", l.reached}, {"failed_at", l.failed_at}});
    rep["ladders"] = lads;
    rep["order"] = cfg.order;
    rep["seed"] = cfg.seed;
    std::vector<std::string> text;
    text.push_back("tangent dimension: " + std::to_string(probe.tangent_dim));
    for (const auto& l : probe.ladders)
        text.push_back(l.failed_at < 0
                           ? "  lift reached order " + std::to_string(l.reached)
                           : "  lift reached order " + std::to_string(l.reached) +
                                 ", obstructed at order " + std::to_string(l.failed_at));
    emit(cfg, rep, text);
    return 0;
}

template <class F>
int cmd_transport(const Config& cfg) {
    Bimodule<F> x;
    AlgPtr<F> right;
    if (!cfg.bimodule_file.empty()) {
        json j = load_json_file(cfg.bimodule_file);
        auto left = algebra_from_json<F>(j.at("left_algebra"));
        right = algebra_from_json<F>(j.at("right_algebra"));
        x = bimodule_from_json<F>(j, left, right);
    } else {
        right = load_algebra<F>(cfg);
        x = regular_bimodule(right);
    }
    Config mcfg = cfg;
    auto v = load_module<F>(mcfg, right);
    int cutoff = cfg.cutoff < 0 ? 6 : cfg.cutoff;
    auto r = transport_check(x, v, cutoff, cfg.seed);

    json rep;
    rep["pass"] = r.pass;
    rep["source_ring"] = defo_to_json(r.source_ring);
    rep["target_ring"] = defo_to_json(r.target_ring);
    rep["transported_gproj"] = {{"verdict", tri_str(r.transported_gproj.verdict)},
                                {"route", r.transported_gproj.route}};
    rep["transported_stable_end"] = r.transported_stable_end;
    rep["transported_dims"] = dims_to_json(r.transported);
    rep["cutoff_used"] = cutoff;
    rep["seed"] = cfg.seed;
    emit(cfg, rep,
         {std::string(r.pass ? "PASS" : "FAIL"),
          "source ring: " + r.source_ring.ring.str(),
          "target ring: " + r.target_ring.ring.str()});
    return r.pass ? 0 : 3;
}

template <class F>
int run(const Config& cfg) {
    if (cfg.command == "algebra info") return cmd_algebra_info<F>(cfg);
    if (cfg.command == "gproj classify") return cmd_gproj_classify<F>(cfg);
    if (cfg.command == "defo ring") return cmd_defo_ring<F>(cfg);
    if (cfg.command == "lift probe") return cmd_lift_probe<F>(cfg);
    if (cfg.command == "transport") return cmd_transport<F>(cfg);
    throw ParseError("no command given");
}

}  // namespace

int main(int argc, char** argv) {
    Config cfg;

    CLI::App app{"Bound quiver algebras: Gorenstein-projective modules and "
                 "their deformation rings"};
    app.require_subcommand(0, 1);
    app.fallthrough();
    app.add_option("--field", cfg.field, "scalar field, Q or Fp:<p>");
    app.add_option("--seed", cfg.seed, "random seed for reproducible reports");
    app.add_option("--cutoff", cfg.cutoff, "truncation bound for semi-decisions");
    bool want_json = false, want_text = false;
    app.add_flag("--json", want_json, "emit a JSON report");
    app.add_flag("--text", want_text, "emit a plain-text report (default)");
    app.add_option("--fixture", cfg.fixture, "builtin algebra: lambda, gamma, dual, a2, cycle3");
    app.add_option("--algebra", cfg.algebra_file, "algebra JSON file");
    app.add_option("--module", cfg.module_file, "module JSON file");
    app.add_option("--gen", cfg.gen, "cyclic module generator path, e.g. b,a (written order)");
    app.add_option("--bimodule", cfg.bimodule_file, "bimodule JSON file");

    auto* algebra = app.add_subcommand("algebra", "algebra-level queries");
    algebra->fallthrough();
    auto* info = algebra->add_subcommand("info", "dimension, basis, Gorenstein data");
    info->fallthrough();
    info->callback([&] { cfg.command = "algebra info"; });

    auto* gproj = app.add_subcommand("gproj", "Gorenstein-projective classification");
    gproj->fallthrough();
    auto* classify = gproj->add_subcommand("classify", "perfect paths, overlaps, modules");
    classify->fallthrough();
    classify->callback([&] { cfg.command = "gproj classify"; });

    auto* defo = app.add_subcommand("defo", "deformation rings");
    defo->fallthrough();
    auto* ring = defo->add_subcommand("ring", "identify the versal deformation ring");
    ring->fallthrough();
    ring->callback([&] { cfg.command = "defo ring"; });

    auto* lift = app.add_subcommand("lift", "order-by-order lifting");
    lift->fallthrough();
    auto* probe = lift->add_subcommand("probe", "tangent directions and obstruction ladder");
    probe->fallthrough();
    probe->add_option("--order", cfg.order, "highest order to attempt");
    probe->callback([&] { cfg.command = "lift probe"; });

    auto* transport = app.add_subcommand("transport", "deformation-ring transport along a bimodule");
    transport->callback([&] { cfg.command = "transport"; });

    CLI11_PARSE(app, argc, argv);
    cfg.as_json = want_json && !want_text;

    try {
        if (cfg.field == "Q") return run<qgp::Rat>(cfg);
        if (cfg.field.rfind("Fp:", 0) == 0) {
            qgp::Fp::set_modulus(std::stoll(cfg.field.substr(3)));
            return run<qgp::Fp>(cfg);
        }
        throw qgp::ParseError("unknown field '" + cfg.field + "' (expected Q or Fp:<p>)");
    } catch (const qgp::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const qgp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
