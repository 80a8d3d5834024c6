#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <string>
#include <vector>

#include "mcm/checks.hpp"
#include "mcm/errors.hpp"

namespace py = pybind11;
using namespace mcm;

namespace {

// field | monogenic:<n> | dvr, or a ring JSON document.
RingPtr ring_from_descriptor(const std::string& desc) {
    if (desc == "field") return BaseRing::field();
    if (desc == "dvr") return BaseRing::dvr();
    if (desc.rfind("monogenic:", 0) == 0) {
        std::size_t pos = 0;
        unsigned long n = std::stoul(desc.substr(10), &pos);
        if (pos != desc.size() - 10 || n == 0)
            throw BadInput("bad monogenic order in descriptor: " + desc);
        return BaseRing::monogenic(n);
    }
    if (!desc.empty() && desc.front() == '{') return BaseRing::from_json(Json::parse(desc));
    throw BadInput("unknown ring descriptor: " + desc);
}

DvrModule dvr_module(std::size_t free_rank, std::vector<std::size_t> torsion) {
    std::sort(torsion.begin(), torsion.end());
    if (!torsion.empty() && torsion.front() == 0) throw BadInput("torsion exponents must be positive");
    return DvrModule{free_rank, std::move(torsion)};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact homological algebra over Cohen-Macaulay module categories";

    m.def(
        "gldim",
        [](const std::string& ring, std::size_t cap) {
            return gldim_mcm(ring_from_descriptor(ring), cap).value();
        },
        py::arg("ring"), py::arg("cap") = kDefaultResolutionCap,
        "Global dimension of the MCM category of the given ring.");

    m.def(
        "run_check",
        [](const std::string& suite, std::uint64_t seed, std::size_t trials) {
            return run_check_suite(suite, seed, trials).dump();
        },
        py::arg("suite"), py::arg("seed") = 0, py::arg("trials") = 0,
        "Run a property suite (duality, ext2, proj-mod, depth, thm01); JSON report.");

    m.def(
        "regularity_witness",
        [](const std::string& ring, std::size_t cap) {
            return regularity_witness(ring_from_descriptor(ring), cap).dump();
        },
        py::arg("ring"), py::arg("cap") = kDefaultResolutionCap,
        "Regularity certificate or a nonzero-cokernel witness; JSON report.");

    m.def(
        "dvr_normal_form",
        [](std::size_t generators, const std::vector<std::vector<std::vector<long>>>& relations) {
            if (relations.size() != generators)
                throw BadInput("relations need one row per generator");
            DvrPresentation p;
            p.generators = generators;
            p.relations.resize(generators);
            for (std::size_t i = 0; i < generators; ++i) {
                if (relations[i].size() != relations[0].size())
                    throw BadInput("relation rows must have equal length");
                for (const auto& entry : relations[i]) {
                    std::vector<Rat> coeffs(entry.begin(), entry.end());
                    p.relations[i].emplace_back(std::move(coeffs));
                }
            }
            return dvr_module_to_json(smith_local(p)).dump();
        },
        py::arg("generators"), py::arg("relations"),
        "Invariant-factor normal form of coker(relations) over the DVR; relations "
        "are rows of polynomial coefficient lists.");

    m.def(
        "dvr_pd",
        [](std::size_t free_rank, std::vector<std::size_t> torsion) {
            return pd_dvr(dvr_module(free_rank, std::move(torsion))).str();
        },
        py::arg("free_rank"), py::arg("torsion"),
        "Projective dimension over the DVR: \"-inf\", \"0\" or \"1\".");

    m.def(
        "dvr_depth",
        [](std::size_t free_rank, std::vector<std::size_t> torsion) {
            return depth_dvr(dvr_module(free_rank, std::move(torsion))).str();
        },
        py::arg("free_rank"), py::arg("torsion"), "Depth over the DVR: \"0\", \"1\" or \"+inf\".");
}
