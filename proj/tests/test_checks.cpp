#include <doctest.h>

#include <random>

#include "mcm/checks.hpp"
#include "mcm/errors.hpp"

using namespace mcm;

namespace {

// Block-diagonal x-action of the object in its standard realization.
ExactMatrix standard_shift(const CategoryPtr& c, const ObjectSpec& o) {
    ExactMatrix s(c->realized_dim(o), c->realized_dim(o), c->ambient()->field());
    std::size_t off = 0;
    for (std::size_t t : c->copies(o)) {
        const ExactMatrix& a = c->summand(t).action_basis(1 % c->ambient()->dim());
        if (c->ambient()->dim() > 1)
            for (std::size_t r = 0; r < a.rows(); ++r)
                for (std::size_t q = 0; q < a.cols(); ++q) s.set(off + r, off + q, a.at(r, q));
        off += a.rows();
    }
    return s;
}

}  // namespace

TEST_CASE("realize_nilpotent recovers Jordan block sizes") {
    CategoryPtr c = AddCategory::monogenic(3);

    // shift with blocks of sizes 3 and 1, scrambled by an integer conjugation
    ExactMatrix n(4, 4);
    n.set(1, 0, 1);
    n.set(2, 1, 1);
    ExactMatrix p = ExactMatrix::from_rows(
        {{1, 2, 0, 1}, {0, 1, 1, 0}, {3, 0, 1, 2}, {1, 1, 0, 1}});
    REQUIRE(rank(p) == 4);
    ExactMatrix scrambled = p * n * *solve(p, ExactMatrix::identity(4));

    RealizedObject r = realize_nilpotent(c, scrambled);
    CHECK(r.object.mult == std::vector<std::size_t>{1, 0, 1});
    CHECK(rank(r.basis) == 4);
    CHECK(scrambled * r.basis == r.basis * standard_shift(c, r.object));
}

TEST_CASE("realize_nilpotent edge cases") {
    CategoryPtr c = AddCategory::monogenic(3);

    SUBCASE("zero operator gives copies of the residue field") {
        RealizedObject r = realize_nilpotent(c, ExactMatrix(3, 3));
        CHECK(r.object.mult == std::vector<std::size_t>{3, 0, 0});
        CHECK(r.basis == ExactMatrix::identity(3));
    }
    SUBCASE("empty operator gives the zero object") {
        RealizedObject r = realize_nilpotent(c, ExactMatrix(0, 0));
        CHECK(r.object == c->zero_object());
    }
    SUBCASE("non-nilpotent operators are rejected") {
        CHECK_THROWS_AS(realize_nilpotent(c, ExactMatrix::identity(2)), ShapeError);
        // nilpotent, but of too high an order for the category
        ExactMatrix big(4, 4);
        for (std::size_t i = 0; i + 1 < 4; ++i) big.set(i + 1, i, 1);
        CHECK_THROWS_AS(realize_nilpotent(c, big), ShapeError);
    }
}

TEST_CASE("random triples are left exact") {
    CategoryPtr c = AddCategory::monogenic(3);
    std::mt19937_64 rng(7);
    for (std::size_t t = 0; t < 25; ++t) {
        ExactTriple triple = random_triple(c, rng);
        const ObjectSpec& ap = triple.alpha_prime.source;
        const ObjectSpec& a = triple.alpha_prime.target;
        const ObjectSpec& app = triple.alpha.target;
        REQUIRE(triple.alpha.source == a);
        CHECK(c->realized_dim(ap) + c->realized_dim(app) == c->realized_dim(a));

        ExactMatrix mp = c->realize(triple.alpha_prime);
        ExactMatrix ma = c->realize(triple.alpha);
        // alpha' injective, alpha surjective, im alpha' = ker alpha
        CHECK(rank(mp) == c->realized_dim(ap));
        CHECK(rank(ma) == c->realized_dim(app));
        if (mp.cols() > 0) CHECK((ma * mp).is_zero());
        CHECK(rank(ma) == c->realized_dim(a) - rank(mp));
    }
}

TEST_CASE("random objects and morphisms are well formed") {
    CategoryPtr c = AddCategory::monogenic(2);
    std::mt19937_64 rng(1);
    for (std::size_t t = 0; t < 10; ++t) {
        ObjectSpec src = random_object(c, rng, 3);
        ObjectSpec tgt = random_object(c, rng, 3);
        CHECK(src.copy_count() >= 1);
        CHECK(src.copy_count() <= 3);
        CatMorphism f = random_morphism(c, src, tgt, rng);
        // round trip through the realization: f really is a morphism
        ExactMatrix m = c->realize(f);
        CatMorphism back = c->morphism_from_matrix(src, tgt, m);
        CHECK(c->realize(back) == m);
    }
}

TEST_CASE("commutant endomorphism algebra matches the category layer") {
    // dim End((+) k[x]/(x^i)) = sum_{i,j} min(i,j)
    AlgebraPtr e1 = auslander_endo_algebra(1);
    CHECK(e1->dim() == 1);
    CHECK(gldim(e1) == ExtInt::finite(0));

    AlgebraPtr e2 = auslander_endo_algebra(2);
    CHECK(e2->dim() == 5);
    CHECK(e2->idempotent_count() == 2);
    CHECK(gldim(e2) == ExtInt::finite(2));

    AlgebraPtr e3 = auslander_endo_algebra(3);
    CHECK(e3->dim() == 14);
    CHECK(gldim(e3) == ExtInt::finite(2));

    // same answers as End built from hom bases
    CHECK(e2->dim() == AddCategory::monogenic(2)->auslander_algebra()->dim());
    CHECK(gldim(e2) == gldim(AddCategory::monogenic(2)->auslander_algebra()));
}

TEST_CASE("fat point ring") {
    RingPtr r = fat_point_ring();
    CHECK(r->kind() == BaseRing::Kind::ArtinianLocal);
    CHECK(r->algebra()->dim() == 3);
    CHECK_FALSE(dualizing_module(r).gorenstein);
    FinGenModule reg = fin_gen_module(r, [&] {
        std::vector<ExactMatrix> act;
        for (std::size_t i = 0; i < 3; ++i) act.push_back(r->algebra()->right_basis(i));
        return act;
    }());
    CHECK(socle_dim(reg) == 2);
}

TEST_CASE("random artinian modules") {
    RingPtr r = fat_point_ring();
    std::mt19937_64 rng(3);
    bool saw_proper = false;
    for (std::size_t t = 0; t < 10; ++t) {
        FinGenModule m = random_artinian_module(r, rng, 2);
        CHECK(m.dim() <= 6);
        if (m.dim() > 0 && m.dim() < 6) saw_proper = true;
        if (m.dim() > 0) CHECK(depth_artinian(m) == ExtInt::finite(0));
    }
    CHECK(saw_proper);
}

TEST_CASE("random dvr presentations normalize") {
    std::mt19937_64 rng(11);
    bool saw_torsion = false;
    for (std::size_t t = 0; t < 20; ++t) {
        DvrPresentation p = random_dvr_presentation(rng);
        CHECK(p.generators >= 1);
        CHECK(p.generators <= 3);
        DvrModule m = smith_local(p);
        CHECK(m.generator_count() <= p.generators);
        DvrModule syz = syzygy_dvr(p);
        CHECK(syz.torsion_exponents.empty());
        if (!m.torsion_exponents.empty()) saw_torsion = true;
    }
    CHECK(saw_torsion);
}

TEST_CASE("check suites pass and are deterministic") {
    for (const char* name : {"duality", "ext2", "proj-mod", "depth", "thm01"}) {
        CAPTURE(name);
        Json a = run_check_suite(name, 0, 0);
        CHECK(a.at("ok") == true);
        Json b = run_check_suite(name, 0, 0);
        CHECK(a.dump() == b.dump());
    }
}

TEST_CASE("check suites honor seed and trials") {
    Json small = check_ext2(5, 6);
    CHECK(small.at("trials") == 6);
    CHECK(small.at("seed") == 5);
    CHECK(small.at("ok") == true);

    Json depth = check_depth(42, 5);
    CHECK(depth.at("trials") == 5);
    CHECK(depth.at("ok") == true);

    Json duality = check_duality(9, 4);
    CHECK(duality.at("ok") == true);
}

TEST_CASE("unknown suite name is rejected") {
    CHECK_THROWS_AS(run_check_suite("nope", 0, 0), BadInput);
}
