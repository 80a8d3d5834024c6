#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "mcm/dvr.hpp"
#include "mcm/extint.hpp"
#include "mcm/fdalgebra.hpp"
#include "mcm/json_io.hpp"
#include "mcm/matrix.hpp"

namespace mcm {

class BaseRing;
using RingPtr = std::shared_ptr<const BaseRing>;

// Commutative noetherian local base ring.  The Artinian variants carry an
// explicit finite-dimensional algebra; the DVR variant delegates to the
// normal-form machinery and has no algebra handle.
class BaseRing {
public:
    enum class Kind { Field, MonogenicArtinian, ArtinianLocal, Dvr };

    static RingPtr field();
    static RingPtr monogenic(std::size_t n);  // k[x]/(x^n)
    // Commutative local algebra with the given basis of the maximal ideal;
    // verified commutative, local (the ideal is nilpotent and complements the
    // unit line) and closed.
    static RingPtr artinian_local(AlgebraPtr algebra, ExactMatrix maximal_ideal);
    static RingPtr dvr();

    Kind kind() const { return kind_; }
    std::size_t krull_dim() const { return kind_ == Kind::Dvr ? 1 : 0; }
    bool is_artinian() const { return kind_ != Kind::Dvr; }
    std::size_t nilpotency() const;  // MonogenicArtinian only

    const AlgebraPtr& algebra() const;        // Artinian variants
    const ExactMatrix& maximal_ideal() const; // basis inside the algebra

    Json to_json() const;
    static RingPtr from_json(const Json& j);

private:
    BaseRing(Kind k, std::size_t n, AlgebraPtr a, ExactMatrix mi);
    Kind kind_;
    std::size_t n_ = 0;
    AlgebraPtr algebra_;
    ExactMatrix maximal_ideal_;
};

// Finitely generated module over an Artinian base, as action matrices for the
// whole k-basis of R (the module axioms, hence commuting actions, are checked
// by the AlgRightModule constructor).
struct FinGenModule {
    RingPtr ring;
    AlgRightModule module;

    std::size_t dim() const { return module.dim(); }
};

struct ModuleMorphism {
    FinGenModule source;
    FinGenModule target;
    ExactMatrix matrix;
};

FinGenModule fin_gen_module(const RingPtr& r, std::vector<ExactMatrix> action);
FinGenModule zero_module(const RingPtr& r);

// Basis of Hom_R(M, N) as matrices, by the commuting linear system.
std::vector<ExactMatrix> hom_module_basis(const FinGenModule& m, const FinGenModule& n);

// The indecomposables over k[x]/(x^n): the cyclic modules k[x]/(x^i), i = 1..n,
// with x acting as the nilpotent Jordan block.
std::vector<FinGenModule> indecomposables_monogenic(std::size_t n);
// Same inventory, over an existing ring handle (so the modules share it).
std::vector<FinGenModule> indecomposables_monogenic(const RingPtr& r);

// Socle = Hom(k, M); depth is 0 for nonzero M and +infinity for M = 0.
ExtInt depth_artinian(const FinGenModule& m);
std::size_t socle_dim(const FinGenModule& m);

// The dualizing module Omega = Hom_k(R, k) with contragredient action;
// gorenstein reports whether Omega is cyclic (equivalently Omega ~= R),
// decided by Nakayama: dim(Omega / Omega m) = 1.
struct DualizingModule {
    FinGenModule omega;
    bool gorenstein = false;
};

DualizingModule dualizing_module(const RingPtr& r);

// Deterministic basis of Hom_R(M, Omega); dagger(m) is M^dagger realized in
// exactly these coordinates, so morphism daggers are reproducible.
std::vector<ExactMatrix> dagger_basis(const FinGenModule& m);
FinGenModule dagger(const FinGenModule& m);

// f : M -> N contravariantly induces f^dagger : N^dagger -> M^dagger.
ExactMatrix dagger_morphism(const FinGenModule& m, const FinGenModule& n, const ExactMatrix& f);

// Evaluation map delta_M : M -> M^dagger^dagger in the dagger coordinates.
ExactMatrix delta(const FinGenModule& m);

// MCM-precover; at Krull dimension 0 every module is MCM and the identity
// works.  (The DVR case lives in dvr-modules.)
ModuleMorphism mcm_precover(const FinGenModule& m);

// Checks Hom((-)^dagger, M^dagger) ~= Hom(M, -) on each module of the battery:
// dimension equality, bijectivity of g -> g^dagger, and the naturality squares
// (h g)^dagger = g^dagger h^dagger on hom bases.
Json natural_iso_check(const FinGenModule& m, const std::vector<FinGenModule>& battery);

// Global dimension of the MCM category of r; defined in terms of the
// category layer for the Artinian variants.  ArtinianLocal needs an explicit
// representation generator (see gldim_mcm_with_generator) and is refused here.
ExtInt gldim_mcm(const RingPtr& r, std::size_t cap = kDefaultResolutionCap);

// gldim of add(X1 (+) ... (+) Xn) for a user-supplied generator list.
ExtInt gldim_mcm_with_generator(const RingPtr& r, const std::vector<FinGenModule>& summands,
                                std::size_t cap = kDefaultResolutionCap);

// For regular inputs reports so; otherwise exhibits X, the free cover
// L ->> X, and the non-surjective Hom(iota, Y) with its nonzero cokernel.
Json regularity_witness(const RingPtr& r, std::size_t cap = kDefaultResolutionCap);

}  // namespace mcm
