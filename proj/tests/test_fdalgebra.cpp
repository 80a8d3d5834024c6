#include <doctest.h>

#include <algorithm>

#include "mcm/errors.hpp"
#include "mcm/fdalgebra.hpp"

using namespace mcm;

namespace {

// Builds an FdAlgebra from explicit matrices closed under multiplication.
// Structure constants are recovered by solving in the span; used to realize
// endomorphism algebras concretely, independent of any library construction.
AlgebraPtr algebra_from_matrices(const std::vector<ExactMatrix>& basis,
                                 const std::vector<ExactMatrix>& idempotent_mats) {
    std::size_t d = basis.size();
    std::size_t n = basis[0].rows();
    ExactMatrix span(n * n, d);
    for (std::size_t k = 0; k < d; ++k) {
        ExactMatrix v = vec(basis[k]);
        for (std::size_t r = 0; r < n * n; ++r) span.set(r, k, v.at(r, 0));
    }
    std::vector<Rat> mult(d * d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            ExactMatrix coords = *solve(span, vec(basis[i] * basis[j]));
            for (std::size_t k = 0; k < d; ++k) mult[(i * d + j) * d + k] = coords.at(k, 0);
        }
    std::vector<Rat> unit(d);
    ExactMatrix uc = *solve(span, vec(ExactMatrix::identity(n)));
    for (std::size_t k = 0; k < d; ++k) unit[k] = uc.at(k, 0);
    std::vector<std::vector<Rat>> idems;
    for (const auto& e : idempotent_mats) {
        ExactMatrix ec = *solve(span, vec(e));
        std::vector<Rat> v(d);
        for (std::size_t k = 0; k < d; ++k) v[k] = ec.at(k, 0);
        idems.push_back(std::move(v));
    }
    return FdAlgebra::create(d, std::move(mult), std::move(unit), std::move(idems));
}

// The commutant of a single matrix, as a basis of matrices.
std::vector<ExactMatrix> commutant(const ExactMatrix& n) {
    std::size_t d = n.rows();
    ExactMatrix id = ExactMatrix::identity(d);
    ExactMatrix sys = kronecker(n.transpose(), id) - kronecker(id, n);
    ExactMatrix ker = kernel_basis(sys);
    std::vector<ExactMatrix> out;
    for (std::size_t c = 0; c < ker.cols(); ++c)
        out.push_back(unvec(ExactMatrix::column(ker.column_vector(c)), d, d));
    return out;
}

// End(R (+) k) for R = k[x]/(x^2): the commutant of the x-action on the
// 3-dimensional space R (+) k, with the projections onto the two summands as
// idempotents.
AlgebraPtr auslander_dual_numbers() {
    ExactMatrix x(3, 3);
    x.set(1, 0, Rat(1));  // x * 1 = x in R, x acts as 0 on k
    std::vector<ExactMatrix> basis = commutant(x);
    REQUIRE(basis.size() == 5);
    ExactMatrix pr(3, 3), pk(3, 3);
    pr.set(0, 0, Rat(1));
    pr.set(1, 1, Rat(1));
    pk.set(2, 2, Rat(1));
    return algebra_from_matrices(basis, {pr, pk});
}

void check_resolution_exact_minimal(const Resolution& res, const AlgRightModule& m) {
    REQUIRE(!res.stages.empty());
    CHECK(rank(res.augmentation) == m.dim());
    std::size_t prev_rank = rank(res.augmentation);
    if (!res.maps.empty()) CHECK((res.augmentation * res.maps[0]).is_zero());
    for (std::size_t l = 0; l < res.maps.size(); ++l) {
        std::size_t pdim = res.stages[l].module.dim();
        CHECK(rank(res.maps[l]) == pdim - prev_rank);  // im = ker at stage l
        if (l + 1 < res.maps.size()) CHECK((res.maps[l] * res.maps[l + 1]).is_zero());
        // minimality: the image lies inside P_l J
        SubmoduleData pj = module_radical(res.stages[l].module);
        CHECK(columns_contained(pj.inclusion, image_basis(res.maps[l])));
        prev_rank = rank(res.maps[l]);
    }
    if (res.complete && !res.maps.empty())
        CHECK(rank(res.maps.back()) == res.stages.back().module.dim());
}

}  // namespace

TEST_CASE("the ground field as an algebra") {
    auto k = FdAlgebra::truncated_polynomial(1);
    CHECK(radical_basis(*k).cols() == 0);
    CHECK(gldim(k) == ExtInt::finite(0));
    AlgRightModule s = simple_module(k, 0);
    CHECK(s.dim() == 1);
    CHECK(pd(s) == ExtInt::finite(0));
    CHECK(pd(k->regular_module()) == ExtInt::finite(0));
}

TEST_CASE("dual numbers: infinite global dimension") {
    auto a = FdAlgebra::truncated_polynomial(2);
    CHECK(radical_basis(*a).cols() == 1);
    AlgRightModule s = simple_module(a, 0);
    CHECK(s.dim() == 1);
    CHECK_THROWS_AS(pd(s, 6), ResolutionCapExceeded);
    CHECK_THROWS_AS(gldim(a, 6), ResolutionCapExceeded);

    Resolution res = resolution_to(s, 4);
    CHECK(!res.complete);
    CHECK(res.stages.size() == 5);
    for (const auto& p : res.stages) CHECK(p.module.dim() == 2);  // periodic, rank 1 covers
    CHECK(rank(res.augmentation) == 1);
    for (const auto& d : res.maps) CHECK(rank(d) == 1);

    // Ext^n(k, k) is one-dimensional in every degree
    for (std::size_t n = 0; n <= 3; ++n) CHECK(ext_algebra(n, s, s, 8).dim == 1);
    CHECK(hom_dim(s, s) == 1);
}

TEST_CASE("k[x]/(x^3) is periodic too") {
    auto a = FdAlgebra::truncated_polynomial(3);
    CHECK(radical_basis(*a).cols() == 2);
    AlgRightModule s = simple_module(a, 0);
    CHECK(ext_algebra(0, s, s, 8).dim == 1);
    CHECK(ext_algebra(1, s, s, 8).dim == 1);
    CHECK(ext_algebra(2, s, s, 8).dim == 1);
    CHECK_THROWS_AS(gldim(a, 5), ResolutionCapExceeded);
    // hom_dim agrees with Ext^0 on a non-simple module as well
    AlgRightModule r = a->regular_module();
    CHECK(hom_dim(r, s) == ext_algebra(0, r, s).dim);
    CHECK(hom_dim(s, r) == ext_algebra(0, s, r).dim);
}

TEST_CASE("endomorphism algebra of R (+) k over the dual numbers") {
    AlgebraPtr g = auslander_dual_numbers();
    CHECK(g->dim() == 5);
    // rad End(R), Hom(R, k) and Hom(k, R) are radical; the two identity
    // components survive in the semisimple quotient
    CHECK(radical_basis(*g).cols() == 3);

    ExtInt gd = gldim(g);
    CHECK(gd == ExtInt::finite(2));
    ExtInt p0 = pd(simple_module(g, 0));
    ExtInt p1 = pd(simple_module(g, 1));
    CHECK(std::max(p0, p1) == ExtInt::finite(2));

    // resolutions of both simples are exact and minimal
    for (std::size_t i = 0; i < 2; ++i) {
        AlgRightModule s = simple_module(g, i);
        Resolution res = min_resolution(s);
        check_resolution_exact_minimal(res, s);
    }

    // gldim is invariant under listing the idempotents in the other order
    ExactMatrix x(3, 3);
    x.set(1, 0, Rat(1));
    std::vector<ExactMatrix> basis = commutant(x);
    ExactMatrix pr(3, 3), pk(3, 3);
    pr.set(0, 0, Rat(1));
    pr.set(1, 1, Rat(1));
    pk.set(2, 2, Rat(1));
    AlgebraPtr g2 = algebra_from_matrices(basis, {pk, pr});
    CHECK(gldim(g2) == gd);

    // and under passing to the opposite algebra
    CHECK(gldim(g->opposite()) == gd);
}

TEST_CASE("projective covers and syzygies") {
    AlgebraPtr g = auslander_dual_numbers();
    AlgRightModule r = g->regular_module();
    CoverData c = projective_cover(r);
    CHECK(c.cover.module.dim() == r.dim());
    CHECK(kernel_basis(c.epi).cols() == 0);  // regular module is projective
    CHECK(pd(r) == ExtInt::finite(0));

    AlgRightModule s = simple_module(g, 0);
    SubmoduleData syz = syzygy(s);
    CHECK(is_module_map(syz.module, projective_cover(s).cover.module, syz.inclusion));
}

TEST_CASE("validation failures") {
    // non-associative structure constants: basis {1, x, y} with x^2 = y,
    // y x = 0 and x y = y, so (x x) x = 0 but x (x x) = y
    std::vector<Rat> bad(27, Rat(0));
    auto set = [&](std::size_t i, std::size_t j, std::size_t k, int v) {
        bad[(i * 3 + j) * 3 + k] = v;
    };
    for (std::size_t j = 0; j < 3; ++j) { set(0, j, j, 1); set(j, 0, j, 1); }
    set(0, 0, 0, 1);
    set(1, 1, 2, 1);  // x^2 = y
    set(1, 2, 2, 1);  // x y = y
    std::vector<Rat> unit{Rat(1), Rat(0), Rat(0)};
    CHECK_THROWS_AS(FdAlgebra::create(3, bad, unit, {unit}), ShapeError);

    // module whose action ignores the multiplication law
    auto a = FdAlgebra::truncated_polynomial(2);
    ExactMatrix one = ExactMatrix::identity(1);
    CHECK_THROWS_AS(AlgRightModule(a, 1, {one, one}), ShapeError);
}

TEST_CASE("split-top requirement") {
    // Q[x]/(x^2 + 1) is semisimple with a 2-dimensional simple: not split
    std::vector<Rat> mult(8, Rat(0));
    mult[(0 * 2 + 0) * 2 + 0] = 1;
    mult[(0 * 2 + 1) * 2 + 1] = 1;
    mult[(1 * 2 + 0) * 2 + 1] = 1;
    mult[(1 * 2 + 1) * 2 + 0] = -1;
    std::vector<Rat> unit{Rat(1), Rat(0)};
    auto a = FdAlgebra::create(2, mult, unit, {unit});
    CHECK(radical_basis(*a).cols() == 0);
    CHECK_THROWS_AS(gldim(a), NonSplitTop);
}

TEST_CASE("radical over a prime field is unsupported") {
    std::vector<Rat> mult{Rat(1)};
    std::vector<Rat> unit{Rat(1)};
    auto a = FdAlgebra::create(1, mult, unit, {unit}, FieldSpec::prime(5));
    CHECK_THROWS_AS(radical_basis(*a), UnsupportedField);
}

TEST_CASE("algebra json round trip") {
    auto a = FdAlgebra::truncated_polynomial(3);
    auto j = a->to_json();
    auto b = FdAlgebra::from_json(j);
    CHECK(b->dim() == 3);
    CHECK(radical_basis(*b).cols() == 2);
    AlgRightModule s = simple_module(b, 0);
    CHECK(ext_algebra(1, s, s, 6).dim == 1);
}
