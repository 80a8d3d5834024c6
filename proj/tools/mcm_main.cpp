// mcm: batch command surface over the library.
//
// Exit codes: 0 success, 1 property violation, 2 unsupported input,
// 3 cap exceeded, 4 malformed input.

#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "mcm/checks.hpp"
#include "mcm/errors.hpp"

using namespace mcm;

namespace {

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BadInput("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::exception& e) {
        throw BadInput("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

RingPtr parse_ring(const std::string& desc) {
    if (desc == "field") return BaseRing::field();
    if (desc == "dvr") return BaseRing::dvr();
    if (desc.rfind("monogenic:", 0) == 0) {
        std::size_t n = 0;
        std::istringstream in(desc.substr(10));
        if (!(in >> n) || !in.eof() || n == 0)
            throw BadInput("bad monogenic order in descriptor: " + desc);
        return BaseRing::monogenic(n);
    }
    if (desc.rfind("artinian:", 0) == 0) return BaseRing::from_json(read_json_file(desc.substr(9)));
    throw BadInput("unknown ring descriptor: " + desc);
}

// Scalar top-level entries of the report, one per line.
void print_human(const Json& rep) {
    for (const auto& [key, value] : rep.items()) {
        if (value.is_structured())
            std::cout << key << ": " << value.dump() << "\n";
        else
            std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
                      << "\n";
    }
}

void emit(const Json& rep, bool json) {
    if (json)
        std::cout << rep.dump() << "\n";
    else
        print_human(rep);
}

int cmd_gldim(const std::string& ring_desc, std::size_t cap, std::uint64_t seed, bool json) {
    RingPtr r = parse_ring(ring_desc);
    ExtInt g = gldim_mcm(r, cap);
    long d = static_cast<long>(r->krull_dim());
    long upper = d < 2 ? 2 : d;
    bool ok = ExtInt::finite(d) <= g && g <= ExtInt::finite(upper);
    Json rep;
    rep["command"] = "gldim";
    rep["ring"] = ring_desc;
    rep["seed"] = seed;
    rep["cap"] = cap;
    rep["d"] = d;
    rep["gldim"] = extint_to_json(g);
    rep["bounds"] = Json{{"lower", d}, {"upper", upper}, {"ok", ok}};
    emit(rep, json);
    return ok ? 0 : 1;
}

int cmd_resolve(const std::string& ring_desc, const std::string& module_file,
                const std::string& functor_file, std::size_t cap, std::uint64_t seed, bool json) {
    if (module_file.empty() == functor_file.empty())
        throw BadInput("resolve needs exactly one of --module or --functor");
    RingPtr r = parse_ring(ring_desc);
    Json rep;
    rep["command"] = "resolve";
    rep["ring"] = ring_desc;
    rep["seed"] = seed;
    rep["cap"] = cap;

    if (r->kind() == BaseRing::Kind::Dvr) {
        if (module_file.empty())
            throw UnsupportedBase("functor files are not supported over the dvr");
        DvrModule m = dvr_module_from_json(read_json_file(module_file));
        // resolution of (-, m): the free MCM-precover, then the free syzygy
        Json betti = Json::array();
        if (!m.is_zero()) {
            betti.push_back(Json::array({mcm_precover_dvr(m).free_rank}));
            std::size_t syz = m.torsion_exponents.size();
            if (syz > 0) betti.push_back(Json::array({syz}));
        }
        rep["pd"] = extint_to_json(functor_pd_representable_dvr(m));
        rep["betti"] = std::move(betti);
        emit(rep, json);
        return 0;
    }
    if (r->kind() == BaseRing::Kind::ArtinianLocal)
        throw UnsupportedBase("no representation generator known for this base");

    std::size_t n = r->kind() == BaseRing::Kind::Field ? 1 : r->nilpotency();
    CategoryPtr c = AddCategory::monogenic(n);
    FpFunctorModule f;
    if (!module_file.empty()) {
        Json mj = read_json_file(module_file);
        if (!mj.contains("action") || !mj.at("action").is_array())
            throw BadInput("module file needs an \"action\" array");
        std::vector<ExactMatrix> action;
        for (const Json& a : mj.at("action")) action.push_back(matrix_from_json(a));
        FinGenModule m = fin_gen_module(r, action);  // validates the module axioms
        ExactMatrix x = n >= 2 ? m.module.action_basis(1)
                               : ExactMatrix(m.dim(), m.dim(), c->ambient()->field());
        f.presenter = c->zero_morphism(c->zero_object(), realize_nilpotent(c, x).object);
    } else {
        Json fj = read_json_file(functor_file);
        std::string side = fj.value("side", "right");
        if (side != "right" && side != "left") throw BadInput("functor side must be right or left");
        f.side = side == "left" ? FpFunctorModule::Side::Left : FpFunctorModule::Side::Right;
        ObjectSpec src{fj.at("source").get<std::vector<std::size_t>>()};
        ObjectSpec tgt{fj.at("target").get<std::vector<std::size_t>>()};
        if (src.mult.size() != n || tgt.mult.size() != n)
            throw BadInput("functor objects need one multiplicity per summand");
        f.presenter = c->morphism_from_matrix(src, tgt, matrix_from_json(fj.at("matrix")));
    }
    Resolution res = min_resolution(projectivize(c, f), cap);
    Json betti = Json::array();
    for (const auto& row : res.betti(c->summand_count())) betti.push_back(row);
    rep["pd"] = extint_to_json(res.stages.empty()
                                   ? ExtInt::neg_infinity()
                                   : ExtInt::finite(static_cast<long>(res.stages.size()) - 1));
    rep["betti"] = std::move(betti);
    emit(rep, json);
    return 0;
}

int cmd_check(const std::string& suite, const std::string& ring_desc, std::uint64_t seed,
              std::size_t trials, bool json) {
    Json inner;
    if (!ring_desc.empty()) {
        if (suite != "duality")
            throw BadInput("--ring is only supported for the duality suite");
        inner = check_duality_ring(parse_ring(ring_desc), seed, trials);
    } else {
        inner = run_check_suite(suite, seed, trials);
    }
    Json rep;
    rep["command"] = "check";
    if (!ring_desc.empty()) rep["ring"] = ring_desc;
    for (auto& [key, value] : inner.items()) rep[key] = std::move(value);
    emit(rep, json);
    return rep.at("ok").get<bool>() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact homological calculator for categories of Cohen-Macaulay modules"};
    app.require_subcommand(1);

    std::string ring, module_file, functor_file, suite;
    std::size_t cap = kDefaultResolutionCap;
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    bool json = false;
    app.add_flag("--json", json, "machine-readable JSON report");

    CLI::App* gldim_cmd = app.add_subcommand("gldim", "global dimension of the MCM category");
    gldim_cmd->fallthrough();
    gldim_cmd->add_option("--ring", ring, "field | monogenic:<n> | dvr | artinian:<file>")
        ->required();
    gldim_cmd->add_option("--cap", cap, "resolution stage cap");
    gldim_cmd->add_option("--seed", seed, "echoed in the report");

    CLI::App* resolve_cmd =
        app.add_subcommand("resolve", "minimal resolution of a functor module");
    resolve_cmd->fallthrough();
    resolve_cmd->add_option("--ring", ring, "field | monogenic:<n> | dvr | artinian:<file>")
        ->required();
    resolve_cmd->add_option("--module", module_file, "module JSON; resolves (-, M)");
    resolve_cmd->add_option("--functor", functor_file, "presenter JSON");
    resolve_cmd->add_option("--cap", cap, "resolution stage cap");
    resolve_cmd->add_option("--seed", seed, "echoed in the report");

    CLI::App* check_cmd = app.add_subcommand("check", "seeded property harnesses");
    check_cmd->fallthrough();
    check_cmd->add_option("suite", suite, "duality | ext2 | proj-mod | depth | thm01")
        ->required();
    check_cmd->add_option("--ring", ring, "restrict the duality suite to one ring");
    check_cmd->add_option("--seed", seed, "rng seed");
    check_cmd->add_option("--trials", trials, "trial count; 0 = suite default");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 4;
    }

    try {
        if (app.got_subcommand(gldim_cmd)) return cmd_gldim(ring, cap, seed, json);
        if (app.got_subcommand(resolve_cmd))
            return cmd_resolve(ring, module_file, functor_file, cap, seed, json);
        return cmd_check(suite, ring, seed, trials, json);
    } catch (const UnsupportedBase& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return 2;
    } catch (const ResolutionCapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const DegreeCapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const Json::exception& e) {
        std::cerr << "malformed input: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "malformed input: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "violation: " << e.what() << "\n";
        return 1;
    }
}
