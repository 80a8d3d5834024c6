#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "mcm/category.hpp"
#include "mcm/dvr.hpp"

namespace mcm {

// Object of a monogenic category realizing a nilpotent operator, with the
// change of basis: basis columns are the operator-space coordinates of the
// object's standard (shift) basis.
struct RealizedObject {
    ObjectSpec object;
    ExactMatrix basis;
};

RealizedObject realize_nilpotent(const CategoryPtr& c, const ExactMatrix& n);

// Seeded left-exact triple 0 -> A' -> A -> A'' over a monogenic category:
// a random submodule inclusion of a random object and the projection onto
// the quotient, both returned as category morphisms.
struct ExactTriple {
    CatMorphism alpha_prime;
    CatMorphism alpha;
};

ExactTriple random_triple(const CategoryPtr& c, std::mt19937_64& rng);

ObjectSpec random_object(const CategoryPtr& c, std::mt19937_64& rng, std::size_t max_copies);
CatMorphism random_morphism(const CategoryPtr& c, const ObjectSpec& src, const ObjectSpec& tgt,
                            std::mt19937_64& rng);

// End(k[x]/(x) (+) ... (+) k[x]/(x^n)) built directly as the commutant of the
// block-shift operator; independent of the category layer, for cross-checks.
AlgebraPtr auslander_endo_algebra(std::size_t n);

// k[x,y]/(x,y)^2, the smallest non-Gorenstein Artinian local ring.
RingPtr fat_point_ring();

// Random quotient of R^free_rank over an Artinian local base.
FinGenModule random_artinian_module(const RingPtr& r, std::mt19937_64& rng,
                                    std::size_t free_rank);

DvrPresentation random_dvr_presentation(std::mt19937_64& rng);

// Property harnesses behind `check <suite>`; deterministic given (seed,
// trials).  Every report carries "ok", "seed" and "trials".
Json check_duality(std::uint64_t seed, std::size_t trials);
Json check_ext2(std::uint64_t seed, std::size_t trials);
Json check_proj_mod(std::uint64_t seed, std::size_t trials);
Json check_depth(std::uint64_t seed, std::size_t trials);
Json check_thm01(std::size_t cap = kDefaultResolutionCap);
// Delta-isomorphism battery over one Artinian ring: every module of dim <= 6
// for field/monogenic bases, seeded random modules for ArtinianLocal.
Json check_duality_ring(const RingPtr& r, std::uint64_t seed, std::size_t trials);

// Dispatch by suite name (duality, ext2, proj-mod, depth, thm01); throws
// BadInput on an unknown name.
Json run_check_suite(const std::string& name, std::uint64_t seed, std::size_t trials);

}  // namespace mcm
