#pragma once

#include <cstddef>
#include <vector>

#include "mcm/extint.hpp"
#include "mcm/json_io.hpp"
#include "mcm/localpoly.hpp"

namespace mcm {

// Finitely generated module over the discrete valuation ring V = k[t]_(t), in
// invariant-factor normal form: V^r (+) V/(t^e1) (+) ... (+) V/(t^es) with
// e1 <= ... <= es.
struct DvrModule {
    std::size_t free_rank = 0;
    std::vector<std::size_t> torsion_exponents;  // positive, nondecreasing

    static DvrModule zero() { return DvrModule{}; }
    static DvrModule free_module(std::size_t r) { return DvrModule{r, {}}; }
    static DvrModule cyclic(std::size_t e) { return DvrModule{0, {e}}; }

    bool is_zero() const { return free_rank == 0 && torsion_exponents.empty(); }
    bool is_torsion() const { return free_rank == 0; }
    std::size_t generator_count() const { return free_rank + torsion_exponents.size(); }

    DvrModule direct_sum(const DvrModule& other) const;

    bool operator==(const DvrModule&) const = default;
};

Json dvr_module_to_json(const DvrModule& m);
DvrModule dvr_module_from_json(const Json& j);

// Presentation of coker(relations): V^q --relations--> V^generators.
struct DvrPresentation {
    std::size_t generators = 0;
    // generators x q matrix, row-major
    std::vector<std::vector<LocalPoly>> relations;

    std::size_t relation_count() const { return relations.empty() ? 0 : relations[0].size(); }
};

// Invariant-factor decomposition of the cokernel.  Pivots on the entry of
// minimal t-adic valuation; the row operation  row_j := u_a * row_j - t^(w-v) u_b * row_i
// stays inside k[t] because polynomials with nonzero constant term are units
// in the localization.
DvrModule smith_local(const DvrPresentation& p, std::size_t cap = kDefaultDegreeCap);

// The first syzygy of coker(relations) inside the free cover V^generators,
// i.e. the column span of the relation matrix; free of rank = number of
// nonzero invariant factors.
DvrModule syzygy_dvr(const DvrPresentation& p, std::size_t cap = kDefaultDegreeCap);

// Ext^i_V(m, n).  Ext^0 = Hom; Ext^1 is computed from the length-one free
// resolution 0 -> V^s -> V^(r+s) -> m -> 0; Ext^i = 0 for i >= 2.
DvrModule ext_dvr(std::size_t i, const DvrModule& m, const DvrModule& n,
                  std::size_t cap = kDefaultDegreeCap);

// depth via the formula depth M = inf{ i : Ext^i(k, M) != 0 }, k = V/(t).
// Values: 0, 1, or +inf (zero module).
ExtInt depth_dvr(const DvrModule& m);

// -inf for zero, 0 for nonzero free, 1 otherwise.
ExtInt pd_dvr(const DvrModule& m);

// Canonical surjection V^(r+s) ->> m in normal-form coordinates; over a DVR
// the free modules are exactly the MCM modules, so this is an MCM-precover.
struct DvrCover {
    std::size_t free_rank = 0;  // rank of the covering free module
    DvrModule target;
};

DvrCover mcm_precover_dvr(const DvrModule& m);

// pd of the right functor (-, m) on MCM = proj over the DVR; equals pd_dvr(m),
// and is asserted equal to 1 - depth(m) for nonzero m.
ExtInt functor_pd_representable_dvr(const DvrModule& m);

// For nonzero torsion m: pd of the module Ext^1(m, V) corresponding to the
// left functor Ext^1(m,-)|MCM; asserted equal to 1.
long ext_functor_pd_dvr(const DvrModule& m, std::size_t cap = kDefaultDegreeCap);

}  // namespace mcm
