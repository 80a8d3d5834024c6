#include "mcm/dvr.hpp"

#include <algorithm>

#include "mcm/errors.hpp"

namespace mcm {

DvrModule DvrModule::direct_sum(const DvrModule& other) const {
    DvrModule out;
    out.free_rank = free_rank + other.free_rank;
    out.torsion_exponents = torsion_exponents;
    out.torsion_exponents.insert(out.torsion_exponents.end(), other.torsion_exponents.begin(),
                                 other.torsion_exponents.end());
    std::sort(out.torsion_exponents.begin(), out.torsion_exponents.end());
    return out;
}

Json dvr_module_to_json(const DvrModule& m) {
    Json j;
    j["free_rank"] = m.free_rank;
    j["torsion"] = m.torsion_exponents;
    return j;
}

DvrModule dvr_module_from_json(const Json& j) {
    try {
        DvrModule m;
        m.free_rank = j.at("free_rank").get<std::size_t>();
        m.torsion_exponents = j.at("torsion").get<std::vector<std::size_t>>();
        for (std::size_t e : m.torsion_exponents)
            if (e == 0) throw BadInput("torsion exponent must be positive");
        std::sort(m.torsion_exponents.begin(), m.torsion_exponents.end());
        return m;
    } catch (const nlohmann::json::exception& e) {
        throw BadInput(std::string("bad DvrModule json: ") + e.what());
    }
}

namespace {

using PolyMat = std::vector<std::vector<LocalPoly>>;

// Diagonalizes a relation matrix in place by unimodular row/column operations
// over the localization and returns the list of pivot valuations.
std::vector<std::size_t> diagonal_valuations(PolyMat a, std::size_t cap) {
    std::vector<std::size_t> vals;
    std::size_t top = 0;  // current corner; rows/cols < top are finished
    std::size_t rows = a.size();
    std::size_t cols = rows == 0 ? 0 : a[0].size();
    while (top < rows && top < cols) {
        // find the entry of minimal valuation in the remaining block
        std::size_t best_i = rows, best_j = cols, best_v = 0;
        for (std::size_t i = top; i < rows; ++i)
            for (std::size_t j = top; j < cols; ++j) {
                if (a[i][j].is_zero()) continue;
                std::size_t v = a[i][j].valuation();
                if (best_i == rows || v < best_v) { best_i = i; best_j = j; best_v = v; }
            }
        if (best_i == rows) break;  // remaining block is zero
        std::swap(a[top], a[best_i]);
        for (std::size_t i = top; i < rows; ++i) std::swap(a[i][top], a[i][best_j]);

        const LocalPoly pivot = a[top][top];
        const std::size_t v = pivot.valuation();
        const LocalPoly unit = pivot.shifted_down(v);  // pivot = t^v * unit
        // clear the column:  row_i := unit * row_i - t^(w-v) * u_b * row_top
        for (std::size_t i = top + 1; i < rows; ++i) {
            if (a[i][top].is_zero()) continue;
            std::size_t w = a[i][top].valuation();
            LocalPoly factor = LocalPoly::power(w - v, pivot.field())
                                   .mul(a[i][top].shifted_down(w), cap);
            for (std::size_t j = top; j < cols; ++j)
                a[i][j] = unit.mul(a[i][j], cap) - factor.mul(a[top][j], cap);
        }
        // clear the row with the matching column operations
        for (std::size_t j = top + 1; j < cols; ++j) {
            if (a[top][j].is_zero()) continue;
            std::size_t w = a[top][j].valuation();
            LocalPoly factor = LocalPoly::power(w - v, pivot.field())
                                   .mul(a[top][j].shifted_down(w), cap);
            for (std::size_t i = top; i < rows; ++i)
                a[i][j] = unit.mul(a[i][j], cap) - factor.mul(a[i][top], cap);
        }
        vals.push_back(v);
        ++top;
    }
    return vals;
}

// Canonical presentation of a normal-form module: V^q -> V^(r+s) with the
// relation t^(e_i) on the torsion generators.
PolyMat canonical_relations(const DvrModule& m) {
    std::size_t g = m.generator_count();
    std::size_t s = m.torsion_exponents.size();
    PolyMat rel(g, std::vector<LocalPoly>(s, LocalPoly()));
    for (std::size_t i = 0; i < s; ++i)
        rel[m.free_rank + i][i] = LocalPoly::power(m.torsion_exponents[i]);
    return rel;
}

}  // namespace

DvrModule smith_local(const DvrPresentation& p, std::size_t cap) {
    for (const auto& row : p.relations)
        if (row.size() != p.relation_count())
            throw ShapeError("smith_local: ragged relation matrix");
    if (!p.relations.empty() && p.relations.size() != p.generators)
        throw ShapeError("smith_local: relation rows != generators");
    std::vector<std::size_t> vals = diagonal_valuations(p.relations, cap);
    DvrModule out;
    out.free_rank = p.generators - vals.size();
    for (std::size_t v : vals)
        if (v > 0) out.torsion_exponents.push_back(v);
    std::sort(out.torsion_exponents.begin(), out.torsion_exponents.end());
    return out;
}

DvrModule syzygy_dvr(const DvrPresentation& p, std::size_t cap) {
    std::vector<std::size_t> vals = diagonal_valuations(p.relations, cap);
    return DvrModule::free_module(vals.size());
}

namespace {

// Hom via the structure of the two normal forms:
//   Hom(V, V) = V        Hom(V, V/t^b) = V/t^b
//   Hom(V/t^a, V) = 0    Hom(V/t^a, V/t^b) = V/t^min(a,b)
DvrModule hom_dvr(const DvrModule& m, const DvrModule& n) {
    DvrModule out;
    out.free_rank = m.free_rank * n.free_rank;
    for (std::size_t r = 0; r < m.free_rank; ++r)
        for (std::size_t b : n.torsion_exponents) out.torsion_exponents.push_back(b);
    for (std::size_t a : m.torsion_exponents)
        for (std::size_t b : n.torsion_exponents)
            out.torsion_exponents.push_back(std::min(a, b));
    std::sort(out.torsion_exponents.begin(), out.torsion_exponents.end());
    return out;
}

}  // namespace

DvrModule ext_dvr(std::size_t i, const DvrModule& m, const DvrModule& n, std::size_t cap) {
    if (i == 0) return hom_dvr(m, n);
    if (i >= 2) return DvrModule::zero();

    // Ext^1 from 0 -> V^s --D--> V^(r+s) -> m -> 0:  the cokernel of
    // Hom(V^(r+s), n) -> Hom(V^s, n), i.e. of D^T acting on column blocks
    // of n.  Presented over V by [D^T (x) I_gn | I_s (x) R_n].
    const std::size_t s = m.torsion_exponents.size();
    if (s == 0 || n.is_zero()) return DvrModule::zero();
    const std::size_t gm = m.generator_count();
    const std::size_t gn = n.generator_count();
    const PolyMat rn = canonical_relations(n);
    const std::size_t qn = n.torsion_exponents.size();

    DvrPresentation pres;
    pres.generators = s * gn;
    std::size_t q = gm * gn + s * qn;
    pres.relations.assign(pres.generators, std::vector<LocalPoly>(q, LocalPoly()));
    // D^T (x) I: D^T[i][r+i] = t^(e_i)
    for (std::size_t i = 0; i < s; ++i) {
        std::size_t col_block = m.free_rank + i;  // generator of V^(r+s) hit by t^(e_i)
        for (std::size_t k = 0; k < gn; ++k)
            pres.relations[i * gn + k][col_block * gn + k] =
                LocalPoly::power(m.torsion_exponents[i]);
    }
    // I_s (x) R_n
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t k = 0; k < gn; ++k)
            for (std::size_t c = 0; c < qn; ++c)
                pres.relations[i * gn + k][gm * gn + i * qn + c] = rn[k][c];
    return smith_local(pres, cap);
}

ExtInt depth_dvr(const DvrModule& m) {
    if (m.is_zero()) return ExtInt::pos_infinity();
    const DvrModule k = DvrModule::cyclic(1);
    if (!ext_dvr(0, k, m).is_zero()) return ExtInt::finite(0);
    if (!ext_dvr(1, k, m).is_zero()) return ExtInt::finite(1);
    throw std::logic_error("depth_dvr: Ext^0(k,m) = Ext^1(k,m) = 0 for nonzero m");
}

ExtInt pd_dvr(const DvrModule& m) {
    if (m.is_zero()) return ExtInt::neg_infinity();
    if (m.torsion_exponents.empty()) return ExtInt::finite(0);
    return ExtInt::finite(1);
}

DvrCover mcm_precover_dvr(const DvrModule& m) {
    return DvrCover{m.generator_count(), m};
}

ExtInt functor_pd_representable_dvr(const DvrModule& m) {
    ExtInt pd = pd_dvr(m);
    ExtInt depth = depth_dvr(m);
    if (m.is_zero()) {
        if (!pd.is_neg_infinity()) throw std::logic_error("pd of zero module must be -inf");
        return pd;
    }
    if (!(pd == ExtInt::finite(1 - depth.value())))
        throw std::logic_error("functor pd defect: pd(-,M) != 1 - depth M");
    return pd;
}

long ext_functor_pd_dvr(const DvrModule& m, std::size_t cap) {
    if (m.is_zero() || !m.is_torsion())
        throw PreconditionError("ext_functor_pd_dvr requires a nonzero torsion module");
    DvrModule e = ext_dvr(1, m, DvrModule::free_module(1), cap);
    ExtInt pd = pd_dvr(e);
    if (!(pd == ExtInt::finite(1)))
        throw std::logic_error("Ext functor pd defect: expected projective dimension 1");
    return 1;
}

}  // namespace mcm
