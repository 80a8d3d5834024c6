#include "mcm/fdalgebra.hpp"

#include <algorithm>

#include "mcm/errors.hpp"

namespace mcm {

namespace {

ExactMatrix matrix_from_columns(const std::vector<std::vector<Rat>>& cols, std::size_t rows,
                                FieldSpec field) {
    ExactMatrix m(rows, cols.size(), field);
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw ShapeError("column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m.set(i, j, cols[j][i]);
    }
    return m;
}

// Extends the (independent) columns of basis to a basis of k^n by standard
// vectors; returns [basis | completion].
ExactMatrix extend_to_full_basis(const ExactMatrix& basis, std::size_t n, FieldSpec field) {
    ExactMatrix full = basis;
    for (std::size_t j = 0; j < n && full.cols() < n; ++j) {
        ExactMatrix e(n, 1, field);
        e.set(j, 0, Rat(1));
        ExactMatrix cand = full.cols() == 0 ? e : hstack(full, e);
        if (rank(cand) > full.cols()) full = cand;
    }
    if (full.cols() != n) throw ShapeError("could not extend to a basis");
    return full;
}

}  // namespace

// ---------------------------------------------------------------------------
// FdAlgebra

FdAlgebra::FdAlgebra(std::size_t dim, std::vector<Rat> mult, std::vector<Rat> unit,
                     std::vector<std::vector<Rat>> idempotents, FieldSpec field)
    : dim_(dim), field_(field), mult_(std::move(mult)), unit_(std::move(unit)),
      idempotents_(std::move(idempotents)) {
    if (mult_.size() != dim_ * dim_ * dim_) throw ShapeError("structure constants: wrong size");
    if (unit_.size() != dim_) throw ShapeError("unit: wrong size");
    for (Rat& c : mult_) c = field_.normalize(c);
    for (Rat& c : unit_) c = field_.normalize(c);
    for (auto& e : idempotents_) {
        if (e.size() != dim_) throw ShapeError("idempotent: wrong size");
        for (Rat& c : e) c = field_.normalize(c);
    }
    left_mult_bases_.reserve(dim_);
    right_mult_bases_.reserve(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        ExactMatrix L(dim_, dim_, field_), R(dim_, dim_, field_);
        for (std::size_t j = 0; j < dim_; ++j)
            for (std::size_t k = 0; k < dim_; ++k) {
                L.set(k, j, structure_constant(i, j, k));
                R.set(k, j, structure_constant(j, i, k));
            }
        left_mult_bases_.push_back(std::move(L));
        right_mult_bases_.push_back(std::move(R));
    }
    validate();
}

std::shared_ptr<const FdAlgebra> FdAlgebra::create(std::size_t dim, std::vector<Rat> mult,
                                                   std::vector<Rat> unit,
                                                   std::vector<std::vector<Rat>> idempotents,
                                                   FieldSpec field) {
    return std::shared_ptr<const FdAlgebra>(
        new FdAlgebra(dim, std::move(mult), std::move(unit), std::move(idempotents), field));
}

std::shared_ptr<const FdAlgebra> FdAlgebra::truncated_polynomial(std::size_t n) {
    if (n == 0) throw BadInput("truncated_polynomial: n >= 1 required");
    std::vector<Rat> mult(n * n * n, Rat(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i + j < n) mult[(i * n + j) * n + (i + j)] = 1;
    std::vector<Rat> unit(n, Rat(0));
    unit[0] = 1;
    return create(n, std::move(mult), unit, {unit});
}

void FdAlgebra::validate() const {
    // unit is a two-sided identity
    ExactMatrix id = ExactMatrix::identity(dim_, field_);
    if (!(left_mult(unit_) == id) || !(right_mult(unit_) == id))
        throw ShapeError("unit is not a two-sided identity");
    // associativity: (b_i b_j) b_m = b_i (b_j b_m), checked sparsely on the
    // structure constants.  The slice c[a][b][.] is contiguous in mult_.
    {
        std::vector<Rat> acc(dim_, Rat(0));
        std::vector<std::size_t> touched;
        auto slice = [&](std::size_t a, std::size_t b) {
            return mult_.data() + (a * dim_ + b) * dim_;
        };
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                for (std::size_t m = 0; m < dim_; ++m) {
                    const Rat* cij = slice(i, j);
                    const Rat* cjm = slice(j, m);
                    for (std::size_t l = 0; l < dim_; ++l) {
                        if (cij[l] == 0) continue;
                        const Rat* clm = slice(l, m);
                        for (std::size_t k = 0; k < dim_; ++k) {
                            if (clm[k] == 0) continue;
                            if (acc[k] == 0) touched.push_back(k);
                            acc[k] += cij[l] * clm[k];
                        }
                    }
                    for (std::size_t l = 0; l < dim_; ++l) {
                        if (cjm[l] == 0) continue;
                        const Rat* cil = slice(i, l);
                        for (std::size_t k = 0; k < dim_; ++k) {
                            if (cil[k] == 0) continue;
                            if (acc[k] == 0) touched.push_back(k);
                            acc[k] -= cjm[l] * cil[k];
                        }
                    }
                    for (std::size_t k : touched) {
                        if (acc[k] != 0 && field_.normalize(acc[k]) != 0)
                            throw ShapeError("structure constants are not associative");
                        acc[k] = 0;
                    }
                    touched.clear();
                }
    }
    // orthogonal idempotents summing to the unit
    std::vector<Rat> sum(dim_, Rat(0));
    for (std::size_t i = 0; i < idempotents_.size(); ++i) {
        for (std::size_t k = 0; k < dim_; ++k) sum[k] = field_.add(sum[k], idempotents_[i][k]);
        for (std::size_t j = 0; j < idempotents_.size(); ++j) {
            std::vector<Rat> prod = multiply(idempotents_[i], idempotents_[j]);
            const std::vector<Rat>& want =
                i == j ? idempotents_[i] : std::vector<Rat>(dim_, Rat(0));
            if (prod != want) throw ShapeError("idempotents are not orthogonal idempotents");
        }
    }
    if (sum != unit_) throw ShapeError("idempotents do not sum to the unit");
}

namespace {

// out += c * m on the nonzero entries only; avoids temporaries.
void accumulate_scaled(ExactMatrix& out, const ExactMatrix& m, const Rat& c,
                       const FieldSpec& field) {
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rat& v = m.at(r, j);
            if (v == 0) continue;
            out.set(r, j, field.add(out.at(r, j), field.mul(c, v)));
        }
}

}  // namespace

ExactMatrix FdAlgebra::left_mult(const std::vector<Rat>& x) const {
    ExactMatrix out(dim_, dim_, field_);
    for (std::size_t i = 0; i < dim_; ++i)
        if (x[i] != 0) accumulate_scaled(out, left_mult_bases_[i], x[i], field_);
    return out;
}

ExactMatrix FdAlgebra::right_mult(const std::vector<Rat>& x) const {
    ExactMatrix out(dim_, dim_, field_);
    for (std::size_t i = 0; i < dim_; ++i)
        if (x[i] != 0) accumulate_scaled(out, right_mult_bases_[i], x[i], field_);
    return out;
}

std::vector<Rat> FdAlgebra::multiply(const std::vector<Rat>& x, const std::vector<Rat>& y) const {
    std::vector<Rat> out(dim_, Rat(0));
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j] == 0) continue;
            Rat f = field_.mul(x[i], y[j]);
            for (std::size_t k = 0; k < dim_; ++k) {
                const Rat& c = structure_constant(i, j, k);
                if (c != 0) out[k] = field_.add(out[k], field_.mul(f, c));
            }
        }
    }
    return out;
}

std::shared_ptr<const FdAlgebra> FdAlgebra::opposite() const {
    std::vector<Rat> mult(dim_ * dim_ * dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            for (std::size_t k = 0; k < dim_; ++k)
                mult[(i * dim_ + j) * dim_ + k] = structure_constant(j, i, k);
    return create(dim_, std::move(mult), unit_, idempotents_, field_);
}

AlgRightModule FdAlgebra::regular_module() const {
    auto self = shared_from_this();
    std::vector<ExactMatrix> action = right_mult_bases_;
    return AlgRightModule::trusted(self, dim_, std::move(action));
}

Json FdAlgebra::to_json() const {
    Json j;
    j["dim"] = dim_;
    j["field"] = field_.name();
    Json mult = Json::array();
    for (const Rat& c : mult_) mult.push_back(rat_to_string(c));
    j["mult"] = std::move(mult);
    Json unit = Json::array();
    for (const Rat& c : unit_) unit.push_back(rat_to_string(c));
    j["unit"] = std::move(unit);
    Json idem = Json::array();
    for (const auto& e : idempotents_) {
        Json v = Json::array();
        for (const Rat& c : e) v.push_back(rat_to_string(c));
        idem.push_back(std::move(v));
    }
    j["idempotents"] = std::move(idem);
    return j;
}

std::shared_ptr<const FdAlgebra> FdAlgebra::from_json(const Json& j) {
    try {
        auto parse_vec = [](const Json& arr) {
            std::vector<Rat> out;
            for (const auto& e : arr)
                out.push_back(e.is_number_integer() ? Rat(e.get<long>())
                                                    : rat_from_string(e.get<std::string>()));
            return out;
        };
        std::size_t dim = j.at("dim").get<std::size_t>();
        FieldSpec field = FieldSpec::from_name(j.value("field", "Q"));
        std::vector<Rat> mult = parse_vec(j.at("mult"));
        std::vector<Rat> unit = parse_vec(j.at("unit"));
        std::vector<std::vector<Rat>> idem;
        for (const auto& e : j.at("idempotents")) idem.push_back(parse_vec(e));
        return create(dim, std::move(mult), std::move(unit), std::move(idem), field);
    } catch (const nlohmann::json::exception& e) {
        throw BadInput(std::string("bad algebra json: ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// AlgRightModule

AlgRightModule::AlgRightModule(AlgebraPtr alg, std::size_t dim, std::vector<ExactMatrix> action)
    : alg_(std::move(alg)), dim_(dim), action_(std::move(action)) {
    validate(true);
}

AlgRightModule::AlgRightModule(Trusted, AlgebraPtr alg, std::size_t dim,
                               std::vector<ExactMatrix> action)
    : alg_(std::move(alg)), dim_(dim), action_(std::move(action)) {
    validate(false);
}

AlgRightModule AlgRightModule::trusted(AlgebraPtr alg, std::size_t dim,
                                       std::vector<ExactMatrix> action) {
    return AlgRightModule(Trusted{}, std::move(alg), dim, std::move(action));
}

void AlgRightModule::validate(bool full) const {
    if (action_.size() != alg_->dim()) throw ShapeError("module: one action matrix per basis");
    for (const auto& a : action_)
        if (a.rows() != dim_ || a.cols() != dim_) throw ShapeError("module: action shape");
    if (!(action(alg_->unit()) == ExactMatrix::identity(dim_, alg_->field())))
        throw ShapeError("module: unit does not act as identity");
    if (!full) return;
    // m (b_i b_j) = (m b_i) b_j
    std::size_t n = alg_->dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            ExactMatrix lhs(dim_, dim_, alg_->field());
            for (std::size_t k = 0; k < n; ++k) {
                const Rat& c = alg_->structure_constant(i, j, k);
                if (c != 0) lhs = lhs + action_[k].scaled(c);
            }
            if (!(lhs == action_[j] * action_[i]))
                throw ShapeError("module: action does not respect multiplication");
        }
}

ExactMatrix AlgRightModule::action(const std::vector<Rat>& x) const {
    const FieldSpec& F = alg_->field();
    ExactMatrix out(dim_, dim_, F);
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0) accumulate_scaled(out, action_[i], x[i], F);
    return out;
}

AlgRightModule AlgRightModule::direct_sum(const AlgRightModule& other) const {
    if (alg_ != other.alg_) throw ShapeError("direct_sum: different algebras");
    std::size_t n = dim_ + other.dim_;
    std::vector<ExactMatrix> action;
    for (std::size_t i = 0; i < alg_->dim(); ++i) {
        ExactMatrix a(n, n, alg_->field());
        for (std::size_t r = 0; r < dim_; ++r)
            for (std::size_t c = 0; c < dim_; ++c) a.set(r, c, action_[i].at(r, c));
        for (std::size_t r = 0; r < other.dim_; ++r)
            for (std::size_t c = 0; c < other.dim_; ++c)
                a.set(dim_ + r, dim_ + c, other.action_[i].at(r, c));
        action.push_back(std::move(a));
    }
    return AlgRightModule::trusted(alg_, n, std::move(action));
}

bool is_module_map(const AlgRightModule& src, const AlgRightModule& dst, const ExactMatrix& f) {
    if (f.rows() != dst.dim() || f.cols() != src.dim()) return false;
    for (std::size_t i = 0; i < src.algebra()->dim(); ++i)
        if (!(dst.action_basis(i) * f == f * src.action_basis(i))) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Radical and tops

const ExactMatrix& FdAlgebra::radical_subspace() const {
    if (!radical_cache_) radical_cache_ = radical_basis(*this);
    return *radical_cache_;
}

const ExactMatrix& FdAlgebra::idempotent_projective_basis(std::size_t i) const {
    if (proj_basis_cache_.empty()) {
        proj_basis_cache_.reserve(idempotents_.size());
        for (std::size_t c = 0; c < idempotents_.size(); ++c)
            proj_basis_cache_.push_back(image_basis(left_mult(idempotents_[c])));
    }
    return proj_basis_cache_[i];
}

const std::vector<ExactMatrix>& FdAlgebra::idempotent_projective_action(std::size_t i) const {
    if (proj_action_cache_.empty()) proj_action_cache_.resize(idempotents_.size());
    if (proj_action_cache_[i].empty()) {
        const ExactMatrix& b = idempotent_projective_basis(i);
        proj_action_cache_[i].reserve(dim_);
        for (std::size_t k = 0; k < dim_; ++k)
            proj_action_cache_[i].push_back(*solve(b, right_basis(k) * b));
    }
    return proj_action_cache_[i];
}

const std::vector<Rat>& FdAlgebra::idempotent_projective_generator(std::size_t i) const {
    if (proj_gen_cache_.empty()) proj_gen_cache_.resize(idempotents_.size());
    if (proj_gen_cache_[i].empty()) {
        const ExactMatrix& b = idempotent_projective_basis(i);
        ExactMatrix coords = *solve(b, ExactMatrix::column(idempotents_[i], field_));
        proj_gen_cache_[i] = coords.column_vector(0);
    }
    return proj_gen_cache_[i];
}

void FdAlgebra::check_basic_split() const {
    if (split_checked_) return;
    const ExactMatrix& j = radical_subspace();
    std::size_t jr = j.cols();
    for (std::size_t a = 0; a < idempotents_.size(); ++a)
        for (std::size_t b = 0; b < idempotents_.size(); ++b) {
            ExactMatrix block = image_basis(left_mult(idempotents_[a]) * right_mult(idempotents_[b]));
            std::size_t d = (block.cols() == 0 && jr == 0)
                                ? 0
                                : rank(block.cols() == 0 ? j
                                       : jr == 0         ? block
                                                         : hstack(block, j)) -
                                      jr;
            if (d != (a == b ? 1u : 0u))
                throw NonSplitTop("algebra is not basic with split simple tops");
        }
    split_checked_ = true;
}

ExactMatrix radical_basis(const FdAlgebra& a) {
    if (!a.field().is_rational())
        throw UnsupportedField("radical via the trace form requires characteristic 0");
    std::size_t n = a.dim();
    ExactMatrix gram(n, n);
    // tr(L_i L_j) = sum_{k,l} L_i[k][l] L_j[l][k], no full products needed
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j2 = 0; j2 < n; ++j2) {
            Rat t(0);
            const ExactMatrix& li = a.left_basis(i);
            const ExactMatrix& lj = a.left_basis(j2);
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    if (li.at(k, l) == 0) continue;
                    if (lj.at(l, k) == 0) continue;
                    t += li.at(k, l) * lj.at(l, k);
                }
            gram.set(i, j2, t);
        }
    ExactMatrix j = kernel_basis(gram);
    // verify nilpotency by repeated squaring of the subspace
    ExactMatrix span = j;
    for (std::size_t iter = 0; iter <= n && span.cols() > 0; ++iter) {
        std::vector<std::vector<Rat>> prods;
        for (std::size_t c1 = 0; c1 < span.cols(); ++c1)
            for (std::size_t c2 = 0; c2 < span.cols(); ++c2)
                prods.push_back(a.multiply(span.column_vector(c1), span.column_vector(c2)));
        ExactMatrix next = image_basis(matrix_from_columns(prods, n, a.field()));
        if (next.cols() >= span.cols())
            throw std::logic_error("trace-form kernel is not nilpotent");
        span = next;
    }
    return j;
}

SubmoduleData submodule_from_basis(const AlgRightModule& m, const ExactMatrix& basis) {
    std::vector<ExactMatrix> action;
    for (std::size_t i = 0; i < m.algebra()->dim(); ++i) {
        auto sol = solve(basis, m.action_basis(i) * basis);
        if (!sol) throw ShapeError("subspace is not invariant under the action");
        action.push_back(std::move(*sol));
    }
    return SubmoduleData{AlgRightModule::trusted(m.algebra(), basis.cols(), std::move(action)),
                         basis};
}

QuotientData quotient_by_subspace(const AlgRightModule& m, const ExactMatrix& subspace) {
    const FieldSpec& F = m.algebra()->field();
    ExactMatrix sub = image_basis(subspace);
    ExactMatrix full = extend_to_full_basis(sub, m.dim(), F);
    std::size_t s = sub.cols();
    std::size_t q = m.dim() - s;
    // x = full * c; the quotient keeps the last q coordinates
    std::vector<ExactMatrix> action;
    for (std::size_t i = 0; i < m.algebra()->dim(); ++i) {
        ExactMatrix conj = *solve(full, m.action_basis(i) * full);
        ExactMatrix qa(q, q, F);
        for (std::size_t r = 0; r < q; ++r)
            for (std::size_t c = 0; c < q; ++c) qa.set(r, c, conj.at(s + r, s + c));
        action.push_back(std::move(qa));
    }
    ExactMatrix inv_rows = *solve(full, ExactMatrix::identity(m.dim(), F));
    ExactMatrix proj(q, m.dim(), F);
    for (std::size_t r = 0; r < q; ++r)
        for (std::size_t c = 0; c < m.dim(); ++c) proj.set(r, c, inv_rows.at(s + r, c));
    return QuotientData{AlgRightModule::trusted(m.algebra(), q, std::move(action)),
                        std::move(proj)};
}

SubmoduleData module_radical(const AlgRightModule& m) {
    const ExactMatrix& j = m.algebra()->radical_subspace();
    ExactMatrix images(m.dim(), j.cols() * m.dim(), m.algebra()->field());
    for (std::size_t c = 0; c < j.cols(); ++c) {
        ExactMatrix a = m.action(j.column_vector(c));
        for (std::size_t r = 0; r < m.dim(); ++r)
            for (std::size_t q = 0; q < m.dim(); ++q)
                images.set(r, c * m.dim() + q, a.at(r, q));
    }
    return submodule_from_basis(m, image_basis(images));
}

AlgRightModule simple_module(const AlgebraPtr& a, std::size_t i) {
    ProjectiveModule p = projective_from_summands(a, {i});
    return top(p.module).top.module;
}

TopData top(const AlgRightModule& m) {
    m.algebra()->check_basic_split();
    SubmoduleData mj = module_radical(m);
    QuotientData t = quotient_by_subspace(m, mj.inclusion);
    const AlgebraPtr& a = m.algebra();
    std::vector<std::size_t> mult(a->idempotent_count(), 0);
    std::size_t covered = 0;
    for (std::size_t i = 0; i < a->idempotent_count(); ++i) {
        std::size_t d = rank(t.module.action(a->idempotent(i)));
        mult[i] = d;
        covered += d;
    }
    if (covered != t.module.dim())
        throw NonSplitTop("top does not decompose along the idempotent blocks");
    return TopData{std::move(t), std::move(mult)};
}

// ---------------------------------------------------------------------------
// Projectives, covers, resolutions

ProjectiveModule projective_from_summands(const AlgebraPtr& a,
                                          const std::vector<std::size_t>& summands) {
    const FieldSpec& F = a->field();
    std::size_t n = a->dim();
    // bases of the subspaces e_i E inside the regular module
    std::vector<ExactMatrix> bases;
    std::size_t total = 0;
    for (std::size_t idx : summands) {
        ExactMatrix b = a->idempotent_projective_basis(idx);
        total += b.cols();
        bases.push_back(std::move(b));
    }
    std::vector<ExactMatrix> action;
    for (std::size_t k = 0; k < n; ++k) action.emplace_back(total, total, F);
    std::vector<std::vector<Rat>> generators;
    std::size_t offset = 0;
    for (std::size_t c = 0; c < summands.size(); ++c) {
        const ExactMatrix& b = bases[c];
        const auto& restricted = a->idempotent_projective_action(summands[c]);
        for (std::size_t k = 0; k < n; ++k) {
            const ExactMatrix& sub = restricted[k];
            for (std::size_t r = 0; r < sub.rows(); ++r)
                for (std::size_t cc = 0; cc < sub.cols(); ++cc)
                    action[k].set(offset + r, offset + cc, sub.at(r, cc));
        }
        const std::vector<Rat>& coords = a->idempotent_projective_generator(summands[c]);
        std::vector<Rat> gen(total, Rat(0));
        for (std::size_t r = 0; r < coords.size(); ++r) gen[offset + r] = coords[r];
        generators.push_back(std::move(gen));
        offset += b.cols();
    }
    AlgRightModule module = AlgRightModule::trusted(a, total, std::move(action));
    // cache of the basis elements as algebra coordinates, needed by the epi:
    // stored implicitly via generators and the action.
    return ProjectiveModule{summands, std::move(module), std::move(generators)};
}

CoverData projective_cover(const AlgRightModule& m) {
    const AlgebraPtr& a = m.algebra();
    const FieldSpec& F = a->field();
    TopData t = top(m);
    std::vector<std::size_t> summands;
    std::vector<std::vector<Rat>> lifts;  // one element of M per copy
    for (std::size_t i = 0; i < a->idempotent_count(); ++i) {
        if (t.multiplicities[i] == 0) continue;
        ExactMatrix ti = image_basis(t.top.module.action(a->idempotent(i)));
        // each top basis vector lifts to v = u e_i with u any preimage
        for (std::size_t c = 0; c < ti.cols(); ++c) {
            ExactMatrix u = *solve(t.top.projection,
                                   ExactMatrix::column(ti.column_vector(c), F));
            ExactMatrix v = m.action(a->idempotent(i)) * u;
            summands.push_back(i);
            lifts.push_back(v.column_vector(0));
        }
    }
    ProjectiveModule p = projective_from_summands(a, summands);
    // epi on the concatenated basis: basis vector x of copy c (an algebra
    // element of e_i E) maps to v_c * x
    ExactMatrix epi(m.dim(), p.module.dim(), F);
    std::size_t offset = 0;
    for (std::size_t c = 0; c < summands.size(); ++c) {
        const ExactMatrix& b = a->idempotent_projective_basis(summands[c]);
        // v_c * x is linear in x: tabulate v_c * b_k once, then the block of
        // columns is one product with the coordinate matrix of e_i E
        ExactMatrix vc = ExactMatrix::column(lifts[c], F);
        ExactMatrix w(m.dim(), a->dim(), F);
        for (std::size_t k = 0; k < a->dim(); ++k) {
            ExactMatrix col = m.action_basis(k) * vc;
            for (std::size_t r = 0; r < m.dim(); ++r) w.set(r, k, col.at(r, 0));
        }
        ExactMatrix block = w * b;
        for (std::size_t j = 0; j < b.cols(); ++j)
            for (std::size_t r = 0; r < m.dim(); ++r) epi.set(r, offset + j, block.at(r, j));
        offset += b.cols();
    }
    if (rank(epi) != m.dim()) throw std::logic_error("projective cover is not surjective");
    // minimality: the kernel must lie inside P * J
    ExactMatrix ker = kernel_basis(epi);
    if (ker.cols() > 0) {
        SubmoduleData pj = module_radical(p.module);
        if (!columns_contained(pj.inclusion, ker))
            throw std::logic_error("cover kernel escapes P*J; cover not minimal");
    }
    return CoverData{std::move(p), std::move(epi)};
}

SubmoduleData syzygy(const AlgRightModule& m) {
    CoverData c = projective_cover(m);
    return submodule_from_basis(c.cover.module, kernel_basis(c.epi));
}

namespace {

Resolution resolve(const AlgRightModule& m, std::size_t bound, bool throw_on_bound) {
    Resolution res;
    if (m.is_zero()) {
        res.augmentation = ExactMatrix(0, 0, m.algebra()->field());
        return res;
    }
    AlgRightModule current = m;
    ExactMatrix embed;  // inclusion of current syzygy into previous cover
    for (std::size_t stage = 0;; ++stage) {
        if (stage > bound) {
            if (throw_on_bound)
                throw ResolutionCapExceeded("no finite resolution within cap " +
                                            std::to_string(bound));
            res.complete = false;
            return res;
        }
        CoverData c = projective_cover(current);
        if (stage == 0)
            res.augmentation = c.epi;
        else
            res.maps.push_back(embed * c.epi);
        ExactMatrix ker = kernel_basis(c.epi);
        res.stages.push_back(std::move(c.cover));
        if (ker.cols() == 0) return res;
        SubmoduleData syz = submodule_from_basis(res.stages.back().module, ker);
        embed = syz.inclusion;
        current = std::move(syz.module);
    }
}

}  // namespace

Resolution min_resolution(const AlgRightModule& m, std::size_t cap) {
    return resolve(m, cap, true);
}

Resolution resolution_to(const AlgRightModule& m, std::size_t max_stage) {
    return resolve(m, max_stage, false);
}

std::vector<std::vector<std::size_t>> Resolution::betti(std::size_t idempotent_count) const {
    std::vector<std::vector<std::size_t>> out;
    for (const auto& p : stages) {
        std::vector<std::size_t> row(idempotent_count, 0);
        for (std::size_t s : p.summands) ++row[s];
        out.push_back(std::move(row));
    }
    return out;
}

ExtInt pd(const AlgRightModule& m, std::size_t cap) {
    if (m.is_zero()) return ExtInt::neg_infinity();
    Resolution r = min_resolution(m, cap);
    return ExtInt::finite(static_cast<long>(r.stages.size()) - 1);
}

ExtInt gldim(const AlgebraPtr& a, std::size_t cap) {
    ExtInt best = ExtInt::neg_infinity();
    for (std::size_t i = 0; i < a->idempotent_count(); ++i) {
        ExtInt p = pd(simple_module(a, i), cap);
        if (best < p) best = p;
    }
    return best;
}

// ---------------------------------------------------------------------------
// Ext

namespace {

// Hom(P, h) for an explicit projective P = (+) e_i E: an element is a choice
// of w_c in h e_{i_c}; basis per copy from image_basis(h.act(e_i)).
struct HomSpace {
    std::vector<ExactMatrix> copy_bases;  // h-coordinates of the basis of h e_i
    std::size_t dim = 0;
};

HomSpace hom_from_projective(const ProjectiveModule& p, const AlgRightModule& h) {
    HomSpace hs;
    for (std::size_t idx : p.summands) {
        ExactMatrix b = image_basis(h.action(h.algebra()->idempotent(idx)));
        hs.dim += b.cols();
        hs.copy_bases.push_back(std::move(b));
    }
    return hs;
}

// The module map P -> h represented by hom coordinates phi.
ExactMatrix hom_element_matrix(const ProjectiveModule& p, const AlgRightModule& h,
                               const HomSpace& hs, const std::vector<Rat>& phi) {
    const AlgebraPtr& a = h.algebra();
    const FieldSpec& F = a->field();
    // w_c in h for each copy
    std::vector<ExactMatrix> w;
    std::size_t pos = 0;
    for (const auto& b : hs.copy_bases) {
        ExactMatrix acc(h.dim(), 1, F);
        for (std::size_t j = 0; j < b.cols(); ++j) {
            ExactMatrix col(h.dim(), 1, F);
            for (std::size_t r = 0; r < h.dim(); ++r) col.set(r, 0, b.at(r, j));
            acc = acc + col.scaled(phi[pos + j]);
        }
        pos += b.cols();
        w.push_back(std::move(acc));
    }
    ExactMatrix f(h.dim(), p.module.dim(), F);
    std::size_t offset = 0;
    for (std::size_t c = 0; c < p.summands.size(); ++c) {
        const ExactMatrix& b = a->idempotent_projective_basis(p.summands[c]);
        for (std::size_t j = 0; j < b.cols(); ++j) {
            ExactMatrix img = h.action(b.column_vector(j)) * w[c];
            for (std::size_t r = 0; r < h.dim(); ++r) f.set(r, offset + j, img.at(r, 0));
        }
        offset += b.cols();
    }
    return f;
}

// Coordinates in Hom(P, h) of a concrete module map f : P -> h, read off on
// the generators.
std::vector<Rat> hom_coordinates(const ProjectiveModule& p, const AlgRightModule& h,
                                 const HomSpace& hs, const ExactMatrix& f) {
    const FieldSpec& F = h.algebra()->field();
    std::vector<Rat> out;
    for (std::size_t c = 0; c < p.summands.size(); ++c) {
        ExactMatrix val = f * ExactMatrix::column(p.generators[c], F);
        ExactMatrix coords = *solve(hs.copy_bases[c], val);
        for (std::size_t r = 0; r < coords.rows(); ++r) out.push_back(coords.at(r, 0));
    }
    return out;
}

}  // namespace

ExtGroup ext_algebra(std::size_t n, const AlgRightModule& m, const AlgRightModule& h,
                     std::size_t cap) {
    const FieldSpec& F = m.algebra()->field();
    if (m.algebra() != h.algebra()) throw ShapeError("ext: different algebras");
    Resolution res = resolution_to(m, std::min(cap, n + 1));
    if (!res.complete && res.stages.size() < n + 2)
        throw ResolutionCapExceeded("resolution for Ext^" + std::to_string(n) +
                                    " not available within cap");
    auto cochain_dim = [&](std::size_t l) -> std::size_t {
        if (l >= res.stages.size()) return 0;
        return hom_from_projective(res.stages[l], h).dim;
    };
    // delta^l : Hom(P_l, h) -> Hom(P_{l+1}, h), phi -> phi o d_{l+1}
    auto delta = [&](std::size_t l) -> ExactMatrix {
        if (l + 1 >= res.stages.size()) return ExactMatrix(0, cochain_dim(l), F);
        HomSpace src = hom_from_projective(res.stages[l], h);
        HomSpace dst = hom_from_projective(res.stages[l + 1], h);
        ExactMatrix out(dst.dim, src.dim, F);
        for (std::size_t j = 0; j < src.dim; ++j) {
            std::vector<Rat> phi(src.dim, Rat(0));
            phi[j] = 1;
            ExactMatrix fm = hom_element_matrix(res.stages[l], h, src, phi);
            ExactMatrix comp = fm * res.maps[l];
            std::vector<Rat> coords = hom_coordinates(res.stages[l + 1], h, dst, comp);
            for (std::size_t r = 0; r < dst.dim; ++r) out.set(r, j, coords[r]);
        }
        return out;
    };
    if (cochain_dim(n) == 0) return ExtGroup{0, ExactMatrix(0, 0, F), ExactMatrix(0, 0, F)};
    ExactMatrix d_n = delta(n);
    ExactMatrix cocycles = kernel_basis(d_n);
    ExactMatrix coboundaries(cochain_dim(n), 0, F);
    if (n > 0) coboundaries = image_basis(delta(n - 1));
    ExtGroup out;
    out.dim = cocycles.cols() - coboundaries.cols();
    out.cocycles = std::move(cocycles);
    out.coboundaries = std::move(coboundaries);
    return out;
}

std::size_t hom_dim(const AlgRightModule& m, const AlgRightModule& h) {
    if (m.dim() == 0 || h.dim() == 0) return 0;
    const FieldSpec& F = m.algebra()->field();
    ExactMatrix sys(0, h.dim() * m.dim(), F);
    for (std::size_t i = 0; i < m.algebra()->dim(); ++i) {
        // f * A_i - B_i * f = 0, vec: (A_i^T (x) I - I (x) B_i) vec(f) = 0
        ExactMatrix row = kronecker(m.action_basis(i).transpose(),
                                    ExactMatrix::identity(h.dim(), F)) -
                          kronecker(ExactMatrix::identity(m.dim(), F), h.action_basis(i));
        sys = sys.rows() == 0 ? row : vstack(sys, row);
    }
    return kernel_basis(sys).cols();
}

}  // namespace mcm
