#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "mcm/extint.hpp"
#include "mcm/json_io.hpp"
#include "mcm/matrix.hpp"

namespace mcm {

inline constexpr std::size_t kDefaultResolutionCap = 32;

class AlgRightModule;

// Finite-dimensional associative algebra with a distinguished complete set of
// orthogonal idempotents.  Structure constants c[i][j][k]: b_i b_j = sum_k
// c_ijk b_k.  Associativity, the unit and the idempotent axioms are checked on
// construction.
class FdAlgebra : public std::enable_shared_from_this<FdAlgebra> {
public:
    static std::shared_ptr<const FdAlgebra> create(
        std::size_t dim, std::vector<Rat> mult, std::vector<Rat> unit,
        std::vector<std::vector<Rat>> idempotents, FieldSpec field = FieldSpec::rationals());

    // k[x]/(x^n) with idempotent {1}; handy in tests and as a base case.
    static std::shared_ptr<const FdAlgebra> truncated_polynomial(std::size_t n);

    std::size_t dim() const { return dim_; }
    const FieldSpec& field() const { return field_; }
    std::size_t idempotent_count() const { return idempotents_.size(); }
    const std::vector<Rat>& idempotent(std::size_t i) const { return idempotents_[i]; }
    const std::vector<Rat>& unit() const { return unit_; }
    const Rat& structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
        return mult_[(i * dim_ + j) * dim_ + k];
    }

    // matrix of y -> x y  /  y -> y x on coordinates
    ExactMatrix left_mult(const std::vector<Rat>& x) const;
    ExactMatrix right_mult(const std::vector<Rat>& x) const;
    std::vector<Rat> multiply(const std::vector<Rat>& x, const std::vector<Rat>& y) const;

    std::shared_ptr<const FdAlgebra> opposite() const;

    // The algebra as a right module over itself.
    AlgRightModule regular_module() const;

    Json to_json() const;
    static std::shared_ptr<const FdAlgebra> from_json(const Json& j);

    // Cached basis of the Jacobson radical as a subspace (see radical_basis).
    const ExactMatrix& radical_subspace() const;
    // Cached basis of the subspace e_i E of the regular module.
    const ExactMatrix& idempotent_projective_basis(std::size_t i) const;
    // Cached right multiplications by the basis restricted to e_i E, and the
    // coordinates of e_i, both in that basis.
    const std::vector<ExactMatrix>& idempotent_projective_action(std::size_t i) const;
    const std::vector<Rat>& idempotent_projective_generator(std::size_t i) const;
    // Throws NonSplitTop unless dim(e_i (E/J) e_j) = delta_ij.
    void check_basic_split() const;

private:
    FdAlgebra(std::size_t dim, std::vector<Rat> mult, std::vector<Rat> unit,
              std::vector<std::vector<Rat>> idempotents, FieldSpec field);
    void validate() const;

    std::size_t dim_;
    FieldSpec field_;
    std::vector<Rat> mult_;
    std::vector<Rat> unit_;
    std::vector<std::vector<Rat>> idempotents_;
    std::vector<ExactMatrix> left_mult_bases_;
    std::vector<ExactMatrix> right_mult_bases_;
    mutable std::optional<ExactMatrix> radical_cache_;
    mutable std::vector<ExactMatrix> proj_basis_cache_;
    mutable std::vector<std::vector<ExactMatrix>> proj_action_cache_;
    mutable std::vector<std::vector<Rat>> proj_gen_cache_;
    mutable bool split_checked_ = false;

public:
    // matrices of y -> b_i y and y -> y b_i

    const ExactMatrix& left_basis(std::size_t i) const { return left_mult_bases_[i]; }
    const ExactMatrix& right_basis(std::size_t i) const { return right_mult_bases_[i]; }
};

using AlgebraPtr = std::shared_ptr<const FdAlgebra>;

// Finite-dimensional right module: one action matrix per algebra basis
// element; the module axioms are checked on construction.
class AlgRightModule {
public:
    AlgRightModule(AlgebraPtr alg, std::size_t dim, std::vector<ExactMatrix> action);

    // For actions derived inside the library (restrictions, conjugates and
    // block sums of validated actions): checks shapes and the unit action but
    // skips the quadratic pairwise multiplication check.
    static AlgRightModule trusted(AlgebraPtr alg, std::size_t dim,
                                  std::vector<ExactMatrix> action);

    const AlgebraPtr& algebra() const { return alg_; }
    std::size_t dim() const { return dim_; }
    bool is_zero() const { return dim_ == 0; }

    // matrix of m -> m * x
    ExactMatrix action(const std::vector<Rat>& x) const;
    const ExactMatrix& action_basis(std::size_t i) const { return action_[i]; }

    AlgRightModule direct_sum(const AlgRightModule& other) const;

private:
    struct Trusted {};
    AlgRightModule(Trusted, AlgebraPtr alg, std::size_t dim, std::vector<ExactMatrix> action);
    void validate(bool full) const;
    AlgebraPtr alg_;
    std::size_t dim_;
    std::vector<ExactMatrix> action_;
};

// Linear map between right modules commuting with the action.
struct ModuleMap {
    const AlgRightModule* source = nullptr;  // views; modules owned by caller
    const AlgRightModule* target = nullptr;
    ExactMatrix matrix;
};

// Checks f(m a) = f(m) a for all basis a.
bool is_module_map(const AlgRightModule& src, const AlgRightModule& dst, const ExactMatrix& f);

// Basis of the Jacobson radical, computed as the kernel of the trace form
// (x,y) -> tr(left mult by xy) of the regular representation; verified
// nilpotent.  Characteristic 0 only.
ExactMatrix radical_basis(const FdAlgebra& a);

// Explicit direct sum of indecomposable projectives e_i E.
struct ProjectiveModule {
    std::vector<std::size_t> summands;          // idempotent index per copy
    AlgRightModule module;                      // concatenated realization
    std::vector<std::vector<Rat>> generators;   // coords of each copy's e_i
};

struct SubmoduleData {
    AlgRightModule module;
    ExactMatrix inclusion;  // ambient_dim x sub_dim
};

struct QuotientData {
    AlgRightModule module;
    ExactMatrix projection;  // quot_dim x ambient_dim
};

SubmoduleData submodule_from_basis(const AlgRightModule& m, const ExactMatrix& basis);
QuotientData quotient_by_subspace(const AlgRightModule& m, const ExactMatrix& subspace);

// M * J as a submodule.
SubmoduleData module_radical(const AlgRightModule& m);

struct TopData {
    QuotientData top;
    std::vector<std::size_t> multiplicities;  // of the simple S_i per idempotent
};

// M / MJ with its semisimple decomposition along the idempotent blocks.
// Requires split tops (dim S_i e_j = delta_ij); otherwise NonSplitTop.
TopData top(const AlgRightModule& m);

// Simple module S_i = top of e_i E.
AlgRightModule simple_module(const AlgebraPtr& a, std::size_t i);

// P = direct sum of e_i E by top multiplicities; epi lifts the identity on
// tops; ker(epi) lies in P * J.
struct CoverData {
    ProjectiveModule cover;
    ExactMatrix epi;  // dim M x dim P
};

CoverData projective_cover(const AlgRightModule& m);

ProjectiveModule projective_from_summands(const AlgebraPtr& a,
                                          const std::vector<std::size_t>& summands);

SubmoduleData syzygy(const AlgRightModule& m);

// Minimal projective resolution ... -> P_1 -> P_0 ->> M.
struct Resolution {
    std::vector<ProjectiveModule> stages;
    std::vector<ExactMatrix> maps;  // maps[l] : P_{l+1} -> P_l
    ExactMatrix augmentation;       // P_0 ->> M
    bool minimal = true;
    bool complete = true;           // false if stopped early at a stage bound

    // Betti numbers: per-stage idempotent multiplicity vectors.
    std::vector<std::vector<std::size_t>> betti(std::size_t idempotent_count) const;
};

// Resolves until the syzygy vanishes; throws ResolutionCapExceeded past cap.
Resolution min_resolution(const AlgRightModule& m, std::size_t cap = kDefaultResolutionCap);

// Resolution truncated after max_stage covers (no cap error); used by Ext.
Resolution resolution_to(const AlgRightModule& m, std::size_t max_stage);

ExtInt pd(const AlgRightModule& m, std::size_t cap = kDefaultResolutionCap);

ExtInt gldim(const AlgebraPtr& a, std::size_t cap = kDefaultResolutionCap);

struct ExtGroup {
    std::size_t dim = 0;
    ExactMatrix cocycles;      // basis of ker(delta^n) in Hom(P_n, h) coords
    ExactMatrix coboundaries;  // basis of im(delta^(n-1))
};

// Ext^n(m, h) as the n-th cohomology of Hom(minimal resolution of m, h).
ExtGroup ext_algebra(std::size_t n, const AlgRightModule& m, const AlgRightModule& h,
                     std::size_t cap = kDefaultResolutionCap);

// dim Hom_E(m, h), by the intertwiner linear system (independent route from
// ext_algebra at n = 0; used as an oracle in tests).
std::size_t hom_dim(const AlgRightModule& m, const AlgRightModule& h);

}  // namespace mcm
