#include "mcm/matrix.hpp"

#include <sstream>

namespace mcm {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, FieldSpec field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, Rat(0)) {}

ExactMatrix ExactMatrix::identity(std::size_t n, FieldSpec field) {
    ExactMatrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, Rat(1));
    return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<Rat>>& rows, FieldSpec field) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows[0].size();
    ExactMatrix m(r, c, field);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw ShapeError("from_rows: ragged rows");
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

ExactMatrix ExactMatrix::column(const std::vector<Rat>& entries, FieldSpec field) {
    ExactMatrix m(entries.size(), 1, field);
    for (std::size_t i = 0; i < entries.size(); ++i) m.set(i, 0, entries[i]);
    return m;
}

bool ExactMatrix::is_zero() const {
    for (const Rat& x : data_)
        if (x != 0) return false;
    return true;
}

bool ExactMatrix::operator==(const ExactMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && field_ == other.field_ &&
           data_ == other.data_;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = at(i, j);
    return t;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& other) const {
    if (field_ != other.field_) throw ShapeError("matmul: field mismatch");
    if (cols_ != other.rows_) throw ShapeError("matmul: inner dimension mismatch");
    ExactMatrix out(rows_, other.cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& a = at(i, k);
            if (a == 0) continue;  // structure-constant matrices are sparse
            for (std::size_t j = 0; j < other.cols_; ++j) {
                const Rat& b = other.at(k, j);
                if (b == 0) continue;
                out.data_[i * other.cols_ + j] += a * b;
            }
        }
    }
    if (!field_.is_rational())
        for (Rat& x : out.data_) x = field_.normalize(x);
    return out;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& other) const {
    check_same_shape(other);
    ExactMatrix out(rows_, cols_, field_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = field_.add(data_[i], other.data_[i]);
    return out;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& other) const {
    check_same_shape(other);
    ExactMatrix out(rows_, cols_, field_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = field_.sub(data_[i], other.data_[i]);
    return out;
}

ExactMatrix ExactMatrix::scaled(const Rat& c) const {
    ExactMatrix out(rows_, cols_, field_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.mul(data_[i], c);
    return out;
}

std::vector<Rat> ExactMatrix::column_vector(std::size_t j) const {
    std::vector<Rat> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

std::string ExactMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? "," : "") << rat_to_string(at(i, j));
    }
    os << "]";
    return os.str();
}

void ExactMatrix::check_same_shape(const ExactMatrix& other) const {
    if (field_ != other.field_) throw ShapeError("field mismatch");
    if (rows_ != other.rows_ || cols_ != other.cols_) throw ShapeError("shape mismatch");
}

RrefResult rref(const ExactMatrix& m) {
    const FieldSpec& F = m.field();
    ExactMatrix a = m;
    ExactMatrix t = ExactMatrix::identity(m.rows(), F);
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t piv = a.rows();
        for (std::size_t i = row; i < a.rows(); ++i) {
            if (a.at(i, col) != 0) { piv = i; break; }
        }
        if (piv == a.rows()) continue;
        if (piv != row) {  // swap rows piv and row in both a and t
            for (std::size_t j = 0; j < a.cols(); ++j) {
                Rat tmp = a.at(row, j); a.set(row, j, a.at(piv, j)); a.set(piv, j, tmp);
            }
            for (std::size_t j = 0; j < t.cols(); ++j) {
                Rat tmp = t.at(row, j); t.set(row, j, t.at(piv, j)); t.set(piv, j, tmp);
            }
        }
        Rat inv = F.inv(a.at(row, col));
        for (std::size_t j = 0; j < a.cols(); ++j) a.set(row, j, F.mul(a.at(row, j), inv));
        for (std::size_t j = 0; j < t.cols(); ++j) t.set(row, j, F.mul(t.at(row, j), inv));
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row) continue;
            Rat f = a.at(i, col);
            if (f == 0) continue;
            for (std::size_t j = 0; j < a.cols(); ++j)
                a.set(i, j, F.sub(a.at(i, j), F.mul(f, a.at(row, j))));
            for (std::size_t j = 0; j < t.cols(); ++j)
                t.set(i, j, F.sub(t.at(i, j), F.mul(f, t.at(row, j))));
        }
        pivots.push_back(col);
        ++row;
    }
    return RrefResult{std::move(a), std::move(pivots), std::move(t)};
}

std::size_t rank(const ExactMatrix& m) { return rref(m).pivots.size(); }

ExactMatrix kernel_basis(const ExactMatrix& m) {
    RrefResult r = rref(m);
    std::vector<std::size_t> free_cols;
    {
        std::size_t pi = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (pi < r.pivots.size() && r.pivots[pi] == j) { ++pi; continue; }
            free_cols.push_back(j);
        }
    }
    ExactMatrix k(m.cols(), free_cols.size(), m.field());
    for (std::size_t c = 0; c < free_cols.size(); ++c) {
        std::size_t fj = free_cols[c];
        k.set(fj, c, Rat(1));
        for (std::size_t pi = 0; pi < r.pivots.size(); ++pi)
            k.set(r.pivots[pi], c, m.field().neg(r.reduced.at(pi, fj)));
    }
    return k;
}

ExactMatrix image_basis(const ExactMatrix& m) {
    RrefResult r = rref(m);
    ExactMatrix b(m.rows(), r.pivots.size(), m.field());
    for (std::size_t c = 0; c < r.pivots.size(); ++c)
        for (std::size_t i = 0; i < m.rows(); ++i) b.set(i, c, m.at(i, r.pivots[c]));
    return b;
}

std::optional<ExactMatrix> solve(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows() != b.rows()) throw ShapeError("solve: row counts disagree");
    if (a.field() != b.field()) throw ShapeError("solve: field mismatch");
    RrefResult r = rref(a);
    ExactMatrix tb = r.transform * b;
    // zero rows of the reduced matrix must have zero right-hand side
    for (std::size_t i = r.pivots.size(); i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (tb.at(i, j) != 0) return std::nullopt;
    ExactMatrix x(a.cols(), b.cols(), a.field());
    for (std::size_t pi = 0; pi < r.pivots.size(); ++pi)
        for (std::size_t j = 0; j < b.cols(); ++j) x.set(r.pivots[pi], j, tb.at(pi, j));
    return x;
}

ExactMatrix kronecker(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.field() != b.field()) throw ShapeError("kronecker: field mismatch");
    ExactMatrix out(a.rows() * b.rows(), a.cols() * b.cols(), a.field());
    for (std::size_t ia = 0; ia < a.rows(); ++ia)
        for (std::size_t ja = 0; ja < a.cols(); ++ja) {
            const Rat& x = a.at(ia, ja);
            if (x == 0) continue;
            for (std::size_t ib = 0; ib < b.rows(); ++ib)
                for (std::size_t jb = 0; jb < b.cols(); ++jb)
                    out.set(ia * b.rows() + ib, ja * b.cols() + jb,
                            a.field().mul(x, b.at(ib, jb)));
        }
    return out;
}

ExactMatrix hstack(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.field() != b.field()) throw ShapeError("hstack: field mismatch");
    if (a.rows() != b.rows()) throw ShapeError("hstack: row mismatch");
    ExactMatrix out(a.rows(), a.cols() + b.cols(), a.field());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, a.at(i, j));
        for (std::size_t j = 0; j < b.cols(); ++j) out.set(i, a.cols() + j, b.at(i, j));
    }
    return out;
}

ExactMatrix vstack(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.field() != b.field()) throw ShapeError("vstack: field mismatch");
    if (a.cols() != b.cols()) throw ShapeError("vstack: column mismatch");
    ExactMatrix out(a.rows() + b.rows(), a.cols(), a.field());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, a.at(i, j));
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) out.set(a.rows() + i, j, b.at(i, j));
    return out;
}

bool columns_contained(const ExactMatrix& space, const ExactMatrix& sub) {
    if (sub.cols() == 0) return true;
    return solve(space, sub).has_value();
}

ExactMatrix vec(const ExactMatrix& m) {
    ExactMatrix v(m.rows() * m.cols(), 1, m.field());
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i) v.set(j * m.rows() + i, 0, m.at(i, j));
    return v;
}

ExactMatrix unvec(const ExactMatrix& v, std::size_t rows, std::size_t cols) {
    if (v.rows() != rows * cols || v.cols() != 1) throw ShapeError("unvec: size mismatch");
    ExactMatrix m(rows, cols, v.field());
    for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t i = 0; i < rows; ++i) m.set(i, j, v.at(j * rows + i, 0));
    return m;
}

}  // namespace mcm
