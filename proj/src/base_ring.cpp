#include "mcm/base_ring.hpp"

#include <string>

#include "mcm/errors.hpp"

namespace mcm {

namespace {

ExactMatrix stack_vec_columns(const std::vector<ExactMatrix>& mats, FieldSpec field) {
    if (mats.empty()) return ExactMatrix(0, 0, field);
    ExactMatrix out(mats[0].rows() * mats[0].cols(), mats.size(), field);
    for (std::size_t c = 0; c < mats.size(); ++c) {
        ExactMatrix v = vec(mats[c]);
        for (std::size_t r = 0; r < v.rows(); ++r) out.set(r, c, v.at(r, 0));
    }
    return out;
}

}  // namespace

BaseRing::BaseRing(Kind k, std::size_t n, AlgebraPtr a, ExactMatrix mi)
    : kind_(k), n_(n), algebra_(std::move(a)), maximal_ideal_(std::move(mi)) {}

RingPtr BaseRing::field() {
    auto a = FdAlgebra::truncated_polynomial(1);
    return RingPtr(new BaseRing(Kind::Field, 1, a, ExactMatrix(1, 0)));
}

RingPtr BaseRing::monogenic(std::size_t n) {
    if (n == 0) throw BadInput("monogenic: n >= 1 required");
    auto a = FdAlgebra::truncated_polynomial(n);
    ExactMatrix mi(n, n - 1);
    for (std::size_t j = 0; j + 1 < n; ++j) mi.set(j + 1, j, Rat(1));
    return RingPtr(new BaseRing(Kind::MonogenicArtinian, n, a, std::move(mi)));
}

RingPtr BaseRing::artinian_local(AlgebraPtr algebra, ExactMatrix maximal_ideal) {
    const std::size_t d = algebra->dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < i; ++j)
            for (std::size_t k = 0; k < d; ++k)
                if (algebra->structure_constant(i, j, k) != algebra->structure_constant(j, i, k))
                    throw BadInput("artinian_local: algebra is not commutative");
    if (maximal_ideal.rows() != d || maximal_ideal.cols() != d - 1)
        throw BadInput("artinian_local: maximal ideal must have codimension 1");
    ExactMatrix with_unit =
        hstack(maximal_ideal, ExactMatrix::column(algebra->unit(), algebra->field()));
    if (rank(with_unit) != d)
        throw BadInput("artinian_local: ideal does not complement the unit line");
    for (std::size_t i = 0; i < d; ++i)
        if (!columns_contained(maximal_ideal, algebra->left_basis(i) * maximal_ideal))
            throw BadInput("artinian_local: not an ideal");
    // nilpotency of the ideal
    ExactMatrix span = maximal_ideal;
    for (std::size_t iter = 0; span.cols() > 0; ++iter) {
        if (iter > d) throw BadInput("artinian_local: maximal ideal is not nilpotent");
        ExactMatrix next(d, 0, algebra->field());
        for (std::size_t c = 0; c < maximal_ideal.cols(); ++c) {
            ExactMatrix prod = algebra->left_mult(maximal_ideal.column_vector(c)) * span;
            next = next.cols() == 0 ? prod : hstack(next, prod);
        }
        span = image_basis(next);
    }
    return RingPtr(
        new BaseRing(Kind::ArtinianLocal, 0, std::move(algebra), std::move(maximal_ideal)));
}

RingPtr BaseRing::dvr() { return RingPtr(new BaseRing(Kind::Dvr, 0, nullptr, ExactMatrix())); }

std::size_t BaseRing::nilpotency() const {
    if (kind_ != Kind::MonogenicArtinian && kind_ != Kind::Field)
        throw UnsupportedBase("nilpotency index only defined for k[x]/(x^n)");
    return n_;
}

const AlgebraPtr& BaseRing::algebra() const {
    if (!algebra_) throw UnsupportedBase("the DVR variant carries no finite algebra");
    return algebra_;
}

const ExactMatrix& BaseRing::maximal_ideal() const {
    if (!algebra_) throw UnsupportedBase("the DVR variant carries no finite algebra");
    return maximal_ideal_;
}

Json BaseRing::to_json() const {
    Json j;
    switch (kind_) {
    case Kind::Field: j["kind"] = "field"; break;
    case Kind::MonogenicArtinian:
        j["kind"] = "monogenic";
        j["n"] = n_;
        break;
    case Kind::ArtinianLocal:
        j["kind"] = "artinian_local";
        j["algebra"] = algebra_->to_json();
        j["maximal_ideal"] = matrix_to_json(maximal_ideal_);
        break;
    case Kind::Dvr: j["kind"] = "dvr"; break;
    }
    return j;
}

RingPtr BaseRing::from_json(const Json& j) {
    try {
        std::string kind = j.at("kind").get<std::string>();
        if (kind == "field") return field();
        if (kind == "monogenic") return monogenic(j.at("n").get<std::size_t>());
        if (kind == "dvr") return dvr();
        if (kind == "artinian_local")
            return artinian_local(FdAlgebra::from_json(j.at("algebra")),
                                  matrix_from_json(j.at("maximal_ideal")));
        throw BadInput("unknown ring kind: " + kind);
    } catch (const nlohmann::json::exception& e) {
        throw BadInput(std::string("bad ring json: ") + e.what());
    }
}

FinGenModule fin_gen_module(const RingPtr& r, std::vector<ExactMatrix> action) {
    std::size_t dim = action.empty() ? 0 : action[0].rows();
    return FinGenModule{r, AlgRightModule(r->algebra(), dim, std::move(action))};
}

FinGenModule zero_module(const RingPtr& r) {
    std::vector<ExactMatrix> action(r->algebra()->dim(), ExactMatrix(0, 0, r->algebra()->field()));
    return FinGenModule{r, AlgRightModule(r->algebra(), 0, std::move(action))};
}

std::vector<ExactMatrix> hom_module_basis(const FinGenModule& m, const FinGenModule& n) {
    const FieldSpec& F = m.ring->algebra()->field();
    if (m.dim() == 0 || n.dim() == 0) return {};
    ExactMatrix sys(0, n.dim() * m.dim(), F);
    for (std::size_t i = 0; i < m.ring->algebra()->dim(); ++i) {
        ExactMatrix row = kronecker(m.module.action_basis(i).transpose(),
                                    ExactMatrix::identity(n.dim(), F)) -
                          kronecker(ExactMatrix::identity(m.dim(), F), n.module.action_basis(i));
        sys = sys.rows() == 0 ? row : vstack(sys, row);
    }
    ExactMatrix ker = kernel_basis(sys);
    std::vector<ExactMatrix> out;
    for (std::size_t c = 0; c < ker.cols(); ++c)
        out.push_back(unvec(ExactMatrix::column(ker.column_vector(c), F), n.dim(), m.dim()));
    return out;
}

std::vector<FinGenModule> indecomposables_monogenic(std::size_t n) {
    return indecomposables_monogenic(BaseRing::monogenic(n));
}

std::vector<FinGenModule> indecomposables_monogenic(const RingPtr& r) {
    std::size_t n = r->nilpotency();
    std::vector<FinGenModule> out;
    for (std::size_t i = 1; i <= n; ++i) {
        ExactMatrix shift(i, i);
        for (std::size_t t = 0; t + 1 < i; ++t) shift.set(t + 1, t, Rat(1));
        std::vector<ExactMatrix> action;
        ExactMatrix pow = ExactMatrix::identity(i);
        for (std::size_t j = 0; j < n; ++j) {
            action.push_back(pow);
            pow = pow * shift;
        }
        out.push_back(fin_gen_module(r, std::move(action)));
    }
    return out;
}

std::size_t socle_dim(const FinGenModule& m) {
    const ExactMatrix& mi = m.ring->maximal_ideal();
    if (m.dim() == 0) return 0;
    if (mi.cols() == 0) return m.dim();  // field: everything is socle
    ExactMatrix sys(0, m.dim(), m.ring->algebra()->field());
    for (std::size_t c = 0; c < mi.cols(); ++c) {
        ExactMatrix a = m.module.action(mi.column_vector(c));
        sys = sys.rows() == 0 ? a : vstack(sys, a);
    }
    return kernel_basis(sys).cols();
}

ExtInt depth_artinian(const FinGenModule& m) {
    if (!m.ring->is_artinian()) throw UnsupportedBase("depth_artinian needs an Artinian base");
    if (m.dim() == 0) return ExtInt::pos_infinity();
    if (socle_dim(m) > 0) return ExtInt::finite(0);
    throw std::logic_error("nonzero Artinian module with zero socle");
}

DualizingModule dualizing_module(const RingPtr& r) {
    const AlgebraPtr& a = r->algebra();
    std::vector<ExactMatrix> action;
    for (std::size_t i = 0; i < a->dim(); ++i) action.push_back(a->left_basis(i).transpose());
    FinGenModule omega{r, AlgRightModule(a, a->dim(), std::move(action))};
    // cyclic iff dim(Omega / Omega m) = 1
    const ExactMatrix& mi = r->maximal_ideal();
    ExactMatrix span(omega.dim(), 0, a->field());
    for (std::size_t c = 0; c < mi.cols(); ++c) {
        ExactMatrix img = omega.module.action(mi.column_vector(c));
        span = span.cols() == 0 ? img : hstack(span, img);
    }
    std::size_t top = omega.dim() - (span.cols() == 0 ? 0 : rank(span));
    return DualizingModule{std::move(omega), top == 1};
}

std::vector<ExactMatrix> dagger_basis(const FinGenModule& m) {
    if (!m.ring->is_artinian()) throw UnsupportedBase("dagger needs an Artinian base");
    return hom_module_basis(m, dualizing_module(m.ring).omega);
}

namespace {

// Coordinates of matrices in the span of a hom basis.
ExactMatrix coords_in_basis(const std::vector<ExactMatrix>& basis,
                            const std::vector<ExactMatrix>& elements, FieldSpec field) {
    ExactMatrix span = stack_vec_columns(basis, field);
    ExactMatrix targets = stack_vec_columns(elements, field);
    if (basis.empty()) return ExactMatrix(0, elements.size(), field);
    auto sol = solve(span, targets);
    if (!sol) throw ShapeError("element outside the hom span");
    return *sol;
}

}  // namespace

FinGenModule dagger(const FinGenModule& m) {
    const AlgebraPtr& a = m.ring->algebra();
    std::vector<ExactMatrix> basis = dagger_basis(m);
    std::size_t d = basis.size();
    std::vector<ExactMatrix> action;
    for (std::size_t i = 0; i < a->dim(); ++i) {
        std::vector<ExactMatrix> moved;
        for (const auto& f : basis) moved.push_back(f * m.module.action_basis(i));
        ExactMatrix coords = coords_in_basis(basis, moved, a->field());
        ExactMatrix act(d, d, a->field());
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c) act.set(r, c, coords.at(r, c));
        action.push_back(std::move(act));
    }
    return FinGenModule{m.ring, AlgRightModule(a, d, std::move(action))};
}

ExactMatrix dagger_morphism(const FinGenModule& m, const FinGenModule& n, const ExactMatrix& f) {
    const FieldSpec& F = m.ring->algebra()->field();
    std::vector<ExactMatrix> mb = dagger_basis(m);
    std::vector<ExactMatrix> nb = dagger_basis(n);
    std::vector<ExactMatrix> composed;
    for (const auto& g : nb) composed.push_back(g * f);
    return coords_in_basis(mb, composed, F);  // dim M^dag x dim N^dag
}

ExactMatrix delta(const FinGenModule& m) {
    const FieldSpec& F = m.ring->algebra()->field();
    std::vector<ExactMatrix> mb = dagger_basis(m);  // F_c : M -> Omega
    FinGenModule md = dagger(m);
    std::vector<ExactMatrix> mdb = dagger_basis(md);  // G_d : M^dag -> Omega
    std::size_t omega_dim = m.ring->algebra()->dim();
    std::vector<ExactMatrix> evals;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        // evaluation at the i-th basis vector, as a map M^dag -> Omega
        ExactMatrix e(omega_dim, mb.size(), F);
        for (std::size_t c = 0; c < mb.size(); ++c)
            for (std::size_t r = 0; r < omega_dim; ++r) e.set(r, c, mb[c].at(r, i));
        evals.push_back(std::move(e));
    }
    return coords_in_basis(mdb, evals, F);  // dim M^dagdag x dim M
}

ModuleMorphism mcm_precover(const FinGenModule& m) {
    if (!m.ring->is_artinian())
        throw UnsupportedBase("mcm_precover on finite modules needs an Artinian base");
    return ModuleMorphism{m, m, ExactMatrix::identity(m.dim(), m.ring->algebra()->field())};
}

Json natural_iso_check(const FinGenModule& m, const std::vector<FinGenModule>& battery) {
    const FieldSpec& F = m.ring->algebra()->field();
    Json report;
    report["summands"] = Json::array();
    bool ok = true;
    std::vector<FinGenModule> daggers;
    for (const auto& u : battery) daggers.push_back(dagger(u));
    FinGenModule md = dagger(m);
    for (std::size_t ui = 0; ui < battery.size(); ++ui) {
        const FinGenModule& u = battery[ui];
        std::vector<ExactMatrix> hom_mu = hom_module_basis(m, u);
        std::vector<ExactMatrix> hom_dd = hom_module_basis(daggers[ui], md);
        bool bij = hom_mu.size() == hom_dd.size();
        if (bij && !hom_mu.empty()) {
            std::vector<ExactMatrix> images;
            for (const auto& g : hom_mu) images.push_back(dagger_morphism(m, u, g));
            ExactMatrix coords = coords_in_basis(hom_dd, images, F);
            bij = rank(coords) == hom_mu.size();
        }
        ok = ok && bij;
        Json entry;
        entry["dim_hom"] = hom_mu.size();
        entry["dim_dagger_hom"] = hom_dd.size();
        entry["bijective"] = bij;
        report["summands"].push_back(std::move(entry));
    }
    // naturality: (h g)^dag = g^dag h^dag on hom bases
    std::size_t failures = 0;
    for (std::size_t ui = 0; ui < battery.size(); ++ui)
        for (std::size_t vi = 0; vi < battery.size(); ++vi) {
            std::vector<ExactMatrix> gs = hom_module_basis(m, battery[ui]);
            std::vector<ExactMatrix> hs = hom_module_basis(battery[ui], battery[vi]);
            for (const auto& g : gs)
                for (const auto& h : hs) {
                    ExactMatrix lhs = dagger_morphism(m, battery[vi], h * g);
                    ExactMatrix rhs = dagger_morphism(m, battery[ui], g) *
                                      dagger_morphism(battery[ui], battery[vi], h);
                    if (!(lhs == rhs)) ++failures;
                }
        }
    ok = ok && failures == 0;
    report["naturality_failures"] = failures;
    report["ok"] = ok;
    return report;
}

Json regularity_witness(const RingPtr& r, std::size_t cap) {
    Json report;
    try {
        report["gldim"] = extint_to_json(gldim_mcm(r, cap));
    } catch (const UnsupportedBase&) {
        report["gldim"] = nullptr;  // no representation generator known
    }
    if (r->kind() == BaseRing::Kind::Field ||
        (r->kind() == BaseRing::Kind::MonogenicArtinian && r->nilpotency() == 1)) {
        report["regular"] = true;
        report["detail"] = "field";
        return report;
    }
    if (r->kind() == BaseRing::Kind::Dvr) {
        report["regular"] = true;
        report["detail"] = "discrete valuation ring";
        return report;
    }
    // non-regular Artinian: X = k, L = R ->> k, Y = ker = maximal ideal;
    // Hom(iota, Y) : Hom(L, Y) -> Hom(Y, Y) fails to be surjective
    const AlgebraPtr& a = r->algebra();
    const FieldSpec& F = a->field();
    const ExactMatrix& mi = r->maximal_ideal();
    FinGenModule reg{r, a->regular_module()};
    SubmoduleData ideal = submodule_from_basis(reg.module, mi);
    FinGenModule y{r, ideal.module};
    std::vector<ExactMatrix> hom_ly = hom_module_basis(reg, y);
    std::vector<ExactMatrix> hom_yy = hom_module_basis(y, y);
    std::vector<ExactMatrix> composed;
    for (const auto& f : hom_ly) composed.push_back(f * ideal.inclusion);
    ExactMatrix coords = coords_in_basis(hom_yy, composed, F);
    std::size_t image_rank = coords.cols() == 0 ? 0 : rank(coords);
    std::size_t coker = hom_yy.size() - image_rank;
    report["regular"] = false;
    report["witness"]["module_dim"] = 1;      // X = k
    report["witness"]["cover_rank"] = 1;      // L = R
    report["witness"]["hom_LY_dim"] = hom_ly.size();
    report["witness"]["hom_YY_dim"] = hom_yy.size();
    report["witness"]["coker_dim"] = coker;
    if (coker == 0) throw std::logic_error("non-regular ring produced a surjective Hom(iota, Y)");
    return report;
}

}  // namespace mcm
