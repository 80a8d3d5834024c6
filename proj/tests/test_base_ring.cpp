#include <doctest.h>

#include "mcm/base_ring.hpp"
#include "mcm/errors.hpp"

using namespace mcm;

namespace {

// k[x,y]/(x,y)^2: three-dimensional, commutative, local, and its socle is
// two-dimensional, so it is not Gorenstein.
RingPtr fat_point() {
    std::vector<Rat> mult(27, Rat(0));
    auto set = [&](std::size_t i, std::size_t j, std::size_t k) {
        mult[(i * 3 + j) * 3 + k] = 1;
    };
    for (std::size_t j = 0; j < 3; ++j) {
        set(0, j, j);
        set(j, 0, j);
    }
    mult[(0 * 3 + 0) * 3 + 0] = 1;  // re-set, harmless
    std::vector<Rat> unit{Rat(1), Rat(0), Rat(0)};
    auto a = FdAlgebra::create(3, std::move(mult), unit, {unit});
    ExactMatrix mi(3, 2);
    mi.set(1, 0, Rat(1));
    mi.set(2, 1, Rat(1));
    return BaseRing::artinian_local(a, mi);
}

}  // namespace

TEST_CASE("indecomposables over k[x]/(x^3)") {
    RingPtr r = BaseRing::monogenic(3);
    auto mods = indecomposables_monogenic(r);
    REQUIRE(mods.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(mods[i].dim() == i + 1);

    // dim Hom(k[x]/(x^i), k[x]/(x^j)) = min(i, j): each map is determined by
    // the image of the generator, which must be killed by x^i
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(hom_module_basis(mods[i], mods[j]).size() == std::min(i, j) + 1);

    for (const auto& m : mods) {
        CHECK(socle_dim(m) == 1);
        CHECK(depth_artinian(m) == ExtInt::finite(0));
    }
    CHECK(depth_artinian(zero_module(r)) == ExtInt::pos_infinity());
}

TEST_CASE("dualizing module of a monogenic ring") {
    RingPtr r = BaseRing::monogenic(3);
    DualizingModule w = dualizing_module(r);
    CHECK(w.gorenstein);
    CHECK(w.omega.dim() == 3);
    // Omega ~= R: a module isomorphism exists among the homs
    auto homs = hom_module_basis(w.omega, FinGenModule{r, r->algebra()->regular_module()});
    bool found = false;
    for (const auto& h : homs)
        if (rank(h) == 3) found = true;
    CHECK(found);
}

TEST_CASE("dagger of the monogenic indecomposables") {
    RingPtr r = BaseRing::monogenic(4);
    auto mods = indecomposables_monogenic(r);
    for (const auto& m : mods) {
        FinGenModule d = dagger(m);
        CHECK(d.dim() == m.dim());  // each k[x]/(x^i) is self-dual
        bool found = false;
        for (const auto& h : hom_module_basis(d, m))
            if (m.dim() == 0 || rank(h) == m.dim()) found = true;
        CHECK(found);
        // the evaluation map is an isomorphism
        ExactMatrix dl = delta(m);
        CHECK(dl.rows() == m.dim());
        CHECK(rank(dl) == m.dim());
    }
}

TEST_CASE("dagger is contravariantly functorial and delta is natural") {
    RingPtr r = BaseRing::monogenic(2);
    auto mods = indecomposables_monogenic(r);
    FinGenModule k = mods[0], reg = mods[1];
    // f = multiplication by x on R
    ExactMatrix f = reg.module.action_basis(1);
    ExactMatrix fd = dagger_morphism(reg, reg, f);
    CHECK(fd.rows() == 2);
    CHECK(rank(fd) == rank(f));
    // (h g)^dagger = g^dagger h^dagger for g : k -> R, h = f
    ExactMatrix g = hom_module_basis(k, reg)[0];
    ExactMatrix lhs = dagger_morphism(k, reg, f * g);
    ExactMatrix rhs = dagger_morphism(k, reg, g) * dagger_morphism(reg, reg, f);
    CHECK(lhs == rhs);
    // naturality of delta: f^daggerdagger delta_R = delta_R f
    FinGenModule rd = dagger(reg);
    ExactMatrix fdd = dagger_morphism(rd, rd, dagger_morphism(reg, reg, f));
    CHECK(fdd * delta(reg) == delta(reg) * f);

    Json rep = natural_iso_check(reg, mods);
    CHECK(rep.at("ok").get<bool>());
    CHECK(rep.at("naturality_failures").get<std::size_t>() == 0);
    Json rep2 = natural_iso_check(k, mods);
    CHECK(rep2.at("summands")[0].at("dim_hom").get<std::size_t>() == 1);
    CHECK(rep2.at("summands")[0].at("bijective").get<bool>());
}

TEST_CASE("a non-Gorenstein Artinian local ring") {
    RingPtr r = fat_point();
    CHECK(r->kind() == BaseRing::Kind::ArtinianLocal);
    DualizingModule w = dualizing_module(r);
    CHECK(!w.gorenstein);
    CHECK(w.omega.dim() == 3);
    FinGenModule reg{r, r->algebra()->regular_module()};
    CHECK(socle_dim(reg) == 2);
    CHECK(depth_artinian(reg) == ExtInt::finite(0));
    // duality still works even without the Gorenstein property
    CHECK(dagger(reg).dim() == 3);
    CHECK(rank(delta(reg)) == 3);
    ModuleMorphism pre = mcm_precover(reg);
    CHECK(pre.matrix == ExactMatrix::identity(3));
}

TEST_CASE("artinian_local validation") {
    auto a = FdAlgebra::truncated_polynomial(2);
    // wrong codimension
    CHECK_THROWS_AS(BaseRing::artinian_local(a, ExactMatrix(2, 2)), BadInput);
    // the unit line is not an ideal complement candidate: not nilpotent
    ExactMatrix unit_col = ExactMatrix::column(a->unit());
    CHECK_THROWS_AS(BaseRing::artinian_local(a, unit_col), BadInput);
}

TEST_CASE("regularity witnesses") {
    Json f = regularity_witness(BaseRing::field());
    CHECK(f.at("regular").get<bool>());
    Json d = regularity_witness(BaseRing::dvr());
    CHECK(d.at("regular").get<bool>());

    Json m = regularity_witness(BaseRing::monogenic(2));
    CHECK(!m.at("regular").get<bool>());
    CHECK(m.at("witness").at("coker_dim").get<std::size_t>() >= 1);

    Json fp = regularity_witness(fat_point());
    CHECK(!fp.at("regular").get<bool>());
    CHECK(fp.at("witness").at("coker_dim").get<std::size_t>() >= 1);
}

TEST_CASE("base ring json round trip") {
    for (const RingPtr& r :
         {BaseRing::field(), BaseRing::monogenic(3), BaseRing::dvr(), fat_point()}) {
        RingPtr back = BaseRing::from_json(r->to_json());
        CHECK(back->kind() == r->kind());
        if (r->is_artinian()) CHECK(back->algebra()->dim() == r->algebra()->dim());
    }
    CHECK_THROWS_AS(BaseRing::from_json(Json{{"kind", "mystery"}}), BadInput);
    CHECK_THROWS_AS(BaseRing::from_json(Json::array()), BadInput);
}
