#pragma once

// Left vector spaces over the *-fields. Vectors are rows, scalars always act
// on the left, and every row operation is a left multiplication, so all of
// this is valid over the quaternions.

#include "orthoform/star_field.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace orthoform {

class Vector {
public:
    Vector() = default;

    Vector(const FieldDescriptor& field, std::size_t n) : field_(field), coords_(n, Scalar::zero(field)) {}

    Vector(const FieldDescriptor& field, std::vector<Scalar> coords)
        : field_(field), coords_(std::move(coords)) {
        for (const auto& c : coords_)
            if (!(c.field() == field_))
                throw MismatchError("vector coordinate from " + c.field().name() + " in " +
                                    field_.name() + " vector");
    }

    static Vector unit(const FieldDescriptor& field, std::size_t n, std::size_t i) {
        Vector v(field, n);
        v.coords_.at(i) = Scalar::one(field);
        return v;
    }

    static Vector from_ints(const FieldDescriptor& field, std::initializer_list<long> values) {
        std::vector<Scalar> c;
        for (long v : values)
            c.push_back(Scalar::integer(field, v));
        return Vector(field, std::move(c));
    }

    const FieldDescriptor& field() const noexcept { return field_; }
    std::size_t size() const noexcept { return coords_.size(); }
    const Scalar& operator[](std::size_t i) const { return coords_[i]; }
    Scalar& operator[](std::size_t i) { return coords_[i]; }
    const std::vector<Scalar>& coords() const noexcept { return coords_; }

    bool is_zero() const {
        return std::all_of(coords_.begin(), coords_.end(), [](const Scalar& s) { return s.is_zero(); });
    }

    // Index of the first nonzero coordinate, or size() for the zero vector.
    std::size_t leading_index() const {
        for (std::size_t i = 0; i < coords_.size(); ++i)
            if (!coords_[i].is_zero())
                return i;
        return coords_.size();
    }

    friend Vector operator+(const Vector& a, const Vector& b) {
        a.require_compatible(b);
        Vector r = a;
        for (std::size_t i = 0; i < r.size(); ++i)
            r.coords_[i] += b.coords_[i];
        return r;
    }

    friend Vector operator-(const Vector& a, const Vector& b) {
        a.require_compatible(b);
        Vector r = a;
        for (std::size_t i = 0; i < r.size(); ++i)
            r.coords_[i] -= b.coords_[i];
        return r;
    }

    Vector operator-() const { return Vector(field_, size()) - *this; }

    // Left scalar multiplication.
    friend Vector operator*(const Scalar& s, const Vector& v) {
        Vector r = v;
        for (auto& c : r.coords_)
            c = s * c;
        return r;
    }

    friend bool operator==(const Vector& a, const Vector& b) {
        return a.field_ == b.field_ && a.coords_ == b.coords_;
    }

    friend int compare(const Vector& a, const Vector& b) {
        for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
            if (int c = compare(a.coords_[i], b.coords_[i]); c != 0)
                return c;
        return a.size() < b.size() ? -1 : (a.size() > b.size() ? 1 : 0);
    }

    // "(a,b,c)" with canonical scalar literals and no spaces.
    std::string to_string() const {
        std::string out = "(";
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (i)
                out += ',';
            out += coords_[i].to_string();
        }
        return out + ")";
    }

    void require_compatible(const Vector& b) const {
        if (!(field_ == b.field_) || size() != b.size())
            throw MismatchError("vector mismatch: " + field_.name() + "^" + std::to_string(size()) +
                                " vs " + b.field_.name() + "^" + std::to_string(b.size()));
    }

private:
    FieldDescriptor field_;
    std::vector<Scalar> coords_;
};

class Matrix {
public:
    Matrix() = default;

    Matrix(const FieldDescriptor& field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

    static Matrix identity(const FieldDescriptor& field, std::size_t n) {
        Matrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = Scalar::one(field);
        return m;
    }

    // Matrix unit E_ij (0-based).
    static Matrix unit(const FieldDescriptor& field, std::size_t n, std::size_t i, std::size_t j) {
        Matrix m(field, n, n);
        m(i, j) = Scalar::one(field);
        return m;
    }

    static Matrix from_rows(const FieldDescriptor& field, std::size_t cols, std::span<const Vector> rows) {
        Matrix m(field, rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols || !(rows[i].field() == field))
                throw MismatchError("ragged or mismatched rows");
            for (std::size_t j = 0; j < cols; ++j)
                m(i, j) = rows[i][j];
        }
        return m;
    }

    static Matrix diagonal(const FieldDescriptor& field, std::span<const Scalar> entries) {
        Matrix m(field, entries.size(), entries.size());
        for (std::size_t i = 0; i < entries.size(); ++i)
            m(i, i) = entries[i];
        return m;
    }

    static Matrix diagonal_ints(const FieldDescriptor& field, std::initializer_list<long> entries) {
        std::vector<Scalar> d;
        for (long e : entries)
            d.push_back(Scalar::integer(field, e));
        return diagonal(field, d);
    }

    const FieldDescriptor& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    Vector row(std::size_t i) const {
        std::vector<Scalar> c(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                              data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
        return Vector(field_, std::move(c));
    }

    std::vector<Vector> row_vectors() const {
        std::vector<Vector> out;
        for (std::size_t i = 0; i < rows_; ++i)
            out.push_back(row(i));
        return out;
    }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
    }

    // Conjugate transpose: (A*)_ij = (A_ji)*.
    Matrix star() const {
        Matrix r(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                r(j, i) = (*this)(i, j).star();
        return r;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (!(a.field_ == b.field_) || a.cols_ != b.rows_)
            throw MismatchError("matrix product shape mismatch");
        Matrix r(a.field_, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Scalar& aik = a(i, k);
                if (aik.is_zero())
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    r(i, j) += aik * b(k, j);
            }
        return r;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b);
        Matrix r = a;
        for (std::size_t k = 0; k < r.data_.size(); ++k)
            r.data_[k] += b.data_[k];
        return r;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b);
        Matrix r = a;
        for (std::size_t k = 0; k < r.data_.size(); ++k)
            r.data_[k] -= b.data_[k];
        return r;
    }

    // Left multiplication by a scalar.
    friend Matrix operator*(const Scalar& s, const Matrix& m) {
        Matrix r = m;
        for (auto& c : r.data_)
            c = s * c;
        return r;
    }

    // Row vector times matrix.
    friend Vector operator*(const Vector& v, const Matrix& m) {
        if (v.size() != m.rows_)
            throw MismatchError("vector-matrix shape mismatch");
        Vector r(m.field_, m.cols_);
        for (std::size_t i = 0; i < m.rows_; ++i) {
            if (v[i].is_zero())
                continue;
            for (std::size_t j = 0; j < m.cols_; ++j)
                r[j] += v[i] * m(i, j);
        }
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    std::string to_string() const {
        std::string out = "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i)
                out += ';';
            out += row(i).to_string();
        }
        return out + "]";
    }

private:
    void require_same_shape(const Matrix& b) const {
        if (!(field_ == b.field_) || rows_ != b.rows_ || cols_ != b.cols_)
            throw MismatchError("matrix shape mismatch");
    }

    FieldDescriptor field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

// A subspace of K^n held as its unique reduced row-echelon basis: each pivot is
// 1, pivot columns are strictly increasing and every other row is zero in a
// pivot column. Equality of subspaces is therefore equality of bases.
class Subspace {
public:
    Subspace() = default;

    // Canonicalizes the left row span of `rows`. Pivots are chosen leftmost
    // column first, then first row, so the result is reproducible.
    static Subspace span(const FieldDescriptor& field, std::size_t ambient, std::vector<Vector> rows) {
        for (const auto& r : rows)
            if (r.size() != ambient || !(r.field() == field))
                throw MismatchError("ragged input to span: expected " + field.name() + "^" +
                                    std::to_string(ambient));
        Subspace s;
        s.field_ = field;
        s.ambient_ = ambient;
        std::size_t rank = 0;
        for (std::size_t col = 0; col < ambient && rank < rows.size(); ++col) {
            std::size_t pivot = rank;
            while (pivot < rows.size() && rows[pivot][col].is_zero())
                ++pivot;
            if (pivot == rows.size())
                continue;
            std::swap(rows[rank], rows[pivot]);
            rows[rank] = rows[rank][col].inverse() * rows[rank];
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (r == rank || rows[r][col].is_zero())
                    continue;
                rows[r] = rows[r] - rows[r][col] * rows[rank];
            }
            s.pivots_.push_back(col);
            ++rank;
        }
        rows.resize(rank);
        s.basis_ = std::move(rows);
        return s;
    }

    static Subspace zero(const FieldDescriptor& field, std::size_t ambient) { return span(field, ambient, {}); }

    static Subspace full(const FieldDescriptor& field, std::size_t ambient) {
        std::vector<Vector> rows;
        for (std::size_t i = 0; i < ambient; ++i)
            rows.push_back(Vector::unit(field, ambient, i));
        return span(field, ambient, std::move(rows));
    }

    static Subspace line(const Vector& v) { return span(v.field(), v.size(), {v}); }

    const FieldDescriptor& field() const noexcept { return field_; }
    std::size_t ambient() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return basis_.size(); }
    const std::vector<Vector>& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
    bool is_zero() const noexcept { return basis_.empty(); }
    bool is_full() const noexcept { return basis_.size() == ambient_; }

    // Subtracts the pivot components; zero iff x is in the subspace.
    Vector residual(const Vector& x) const {
        require_ambient(x);
        Vector r = x;
        for (std::size_t k = 0; k < basis_.size(); ++k) {
            const Scalar& c = r[pivots_[k]];
            if (!c.is_zero())
                r = r - c * basis_[k];
        }
        return r;
    }

    bool contains(const Vector& x) const { return residual(x).is_zero(); }

    bool contains(const Subspace& other) const {
        require_compatible(other);
        return std::all_of(other.basis_.begin(), other.basis_.end(),
                           [this](const Vector& v) { return contains(v); });
    }

    // Coefficients c with x = sum c_k basis_k, when x lies in the subspace.
    std::optional<std::vector<Scalar>> coordinates(const Vector& x) const {
        if (!contains(x))
            return std::nullopt;
        std::vector<Scalar> c;
        for (std::size_t p : pivots_)
            c.push_back(x[p]);
        return c;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.field_ == b.field_ && a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

    // Lexicographic order of canonical bases.
    friend int compare(const Subspace& a, const Subspace& b) {
        for (std::size_t k = 0; k < std::min(a.dim(), b.dim()); ++k)
            if (int c = compare(a.basis_[k], b.basis_[k]); c != 0)
                return c;
        return a.dim() < b.dim() ? -1 : (a.dim() > b.dim() ? 1 : 0);
    }

    friend bool operator<(const Subspace& a, const Subspace& b) { return compare(a, b) < 0; }

    // "span{(1,0,0),(0,1,0)}"; the zero subspace prints as "span{}".
    std::string to_string() const {
        std::string out = "span{";
        for (std::size_t k = 0; k < basis_.size(); ++k) {
            if (k)
                out += ',';
            out += basis_[k].to_string();
        }
        return out + "}";
    }

    void require_ambient(const Vector& x) const {
        if (x.size() != ambient_ || !(x.field() == field_))
            throw MismatchError("vector outside ambient " + field_.name() + "^" + std::to_string(ambient_));
    }

    void require_compatible(const Subspace& b) const {
        if (!(field_ == b.field_) || ambient_ != b.ambient_)
            throw MismatchError("subspace ambient mismatch");
    }

private:
    FieldDescriptor field_;
    std::size_t ambient_ = 0;
    std::vector<Vector> basis_;
    std::vector<std::size_t> pivots_;
};

inline Subspace canonicalize(const FieldDescriptor& field, std::size_t ambient, std::vector<Vector> rows) {
    return Subspace::span(field, ambient, std::move(rows));
}

// {x : x W = 0} for an n x k matrix W, i.e. the solutions of
// sum_i x_i W_ij = 0 with the unknowns on the left. W is column-reduced by
// right multiplications, which do not change the solution set.
inline Subspace left_kernel(const Matrix& w) {
    const FieldDescriptor& field = w.field();
    const std::size_t n = w.rows(), k = w.cols();
    Matrix m = w;
    std::vector<std::size_t> pivot_rows;
    std::size_t r = 0;
    for (std::size_t i = 0; i < n && r < k; ++i) {
        std::size_t c = r;
        while (c < k && m(i, c).is_zero())
            ++c;
        if (c == k)
            continue;
        if (c != r)
            for (std::size_t row = 0; row < n; ++row)
                std::swap(m(row, c), m(row, r));
        Scalar inv = m(i, r).inverse();
        for (std::size_t row = 0; row < n; ++row)
            m(row, r) = m(row, r) * inv;
        for (std::size_t col = 0; col < k; ++col) {
            if (col == r || m(i, col).is_zero())
                continue;
            Scalar factor = m(i, col);
            for (std::size_t row = 0; row < n; ++row)
                m(row, col) = m(row, col) - m(row, r) * factor;
        }
        pivot_rows.push_back(i);
        ++r;
    }
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : pivot_rows)
        is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t i = 0; i < n; ++i) {
        if (is_pivot[i])
            continue;
        Vector x = Vector::unit(field, n, i);
        for (std::size_t a = 0; a < pivot_rows.size(); ++a)
            x[pivot_rows[a]] = -m(i, a);
        basis.push_back(std::move(x));
    }
    return Subspace::span(field, n, std::move(basis));
}

inline Subspace sum(const Subspace& a, const Subspace& b) {
    a.require_compatible(b);
    std::vector<Vector> rows = a.basis();
    rows.insert(rows.end(), b.basis().begin(), b.basis().end());
    return Subspace::span(a.field(), a.ambient(), std::move(rows));
}

// Common vectors x = alpha A = beta B come from the left kernel of the stacked
// bases: (alpha | -beta) [A; B] = 0.
inline Subspace intersect(const Subspace& a, const Subspace& b) {
    a.require_compatible(b);
    if (a.is_zero() || b.is_zero())
        return Subspace::zero(a.field(), a.ambient());
    std::vector<Vector> rows = a.basis();
    rows.insert(rows.end(), b.basis().begin(), b.basis().end());
    Subspace kernel = left_kernel(Matrix::from_rows(a.field(), a.ambient(), rows));
    std::vector<Vector> common;
    for (const auto& coeffs : kernel.basis()) {
        Vector v(a.field(), a.ambient());
        for (std::size_t i = 0; i < a.dim(); ++i)
            if (!coeffs[i].is_zero())
                v = v + coeffs[i] * a.basis()[i];
        common.push_back(std::move(v));
    }
    return Subspace::span(a.field(), a.ambient(), std::move(common));
}

inline bool contains(const Subspace& a, const Vector& x) { return a.contains(x); }
inline bool equals(const Subspace& a, const Subspace& b) { return a == b; }
inline std::size_t dim(const Subspace& a) { return a.dim(); }

// Coefficients c with target = sum c_i rows_i, if any. Unique when the rows are
// independent; otherwise some solution is returned.
inline std::optional<std::vector<Scalar>> solve_left(const FieldDescriptor& field, std::size_t ambient,
                                                    const std::vector<Vector>& rows, const Vector& target) {
    std::vector<Vector> stacked = rows;
    stacked.push_back(target);
    Subspace kernel = left_kernel(Matrix::from_rows(field, ambient, stacked));
    // The reduced basis has at most one vector with a nonzero last coordinate.
    for (const auto& k : kernel.basis()) {
        const Scalar& last = k[rows.size()];
        if (last.is_zero())
            continue;
        Scalar scale = -last.inverse();
        std::vector<Scalar> c;
        for (std::size_t i = 0; i < rows.size(); ++i)
            c.push_back(scale * k[i]);
        return c;
    }
    if (target.is_zero())
        return std::vector<Scalar>(rows.size(), Scalar::zero(field));
    return std::nullopt;
}

// Two-sided inverse of a square matrix by Gauss-Jordan with left row
// operations on [A | I].
inline Matrix inverse(const Matrix& a) {
    if (a.rows() != a.cols())
        throw MismatchError("inverse of a non-square matrix");
    const std::size_t n = a.rows();
    const FieldDescriptor& f = a.field();
    Matrix m = a;
    Matrix inv = Matrix::identity(f, n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m(pivot, col).is_zero())
            ++pivot;
        if (pivot == n)
            throw DomainError("matrix is singular");
        if (pivot != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(pivot, j), m(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        Scalar s = m(col, col).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            m(col, j) = s * m(col, j);
            inv(col, j) = s * inv(col, j);
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m(r, col).is_zero())
                continue;
            Scalar factor = m(r, col);
            for (std::size_t j = 0; j < n; ++j) {
                m(r, j) = m(r, j) - factor * m(col, j);
                inv(r, j) = inv(r, j) - factor * inv(col, j);
            }
        }
    }
    return inv;
}

inline std::size_t rank(const Matrix& a) {
    return Subspace::span(a.field(), a.cols(), a.row_vectors()).dim();
}

} // namespace orthoform
