#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "ans/errors.hpp"
#include "ans/scalar.hpp"

namespace ans {

class RowVector;
class ColVector;

/// Dense matrix with exact entries, all tagged by one semiring.
/// The dimensions in play (k, 2k+1, 2k^2+k) stay small, so no sparse
/// or blocked storage is attempted.
class Matrix {
public:
    Matrix(Semiring ring, std::size_t rows, std::size_t cols)
        : ring_(ring), rows_(rows), cols_(cols), e_(rows * cols, Scalar::zero(ring)) {}

    static Matrix identity(Semiring ring, std::size_t n) {
        Matrix m(ring, n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar::one(ring));
        return m;
    }

    Semiring ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Scalar& at(std::size_t i, std::size_t j) const {
        check_index(i, j);
        return e_[i * cols_ + j];
    }

    void set(std::size_t i, std::size_t j, Scalar v) {
        check_index(i, j);
        if (v.ring() != ring_)
            throw SemiringError(std::string("entry semiring ") + semiring_name(v.ring()) +
                                " does not match matrix semiring " + semiring_name(ring_));
        e_[i * cols_ + j] = std::move(v);
    }

    Matrix operator+(const Matrix& o) const {
        require_ring(o.ring_);
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw DimensionError("matrix addition: " + shape() + " vs " + o.shape());
        Matrix out(ring_, rows_, cols_);
        for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] + o.e_[i];
        return out;
    }

    Matrix operator*(const Matrix& o) const {
        require_ring(o.ring_);
        if (cols_ != o.rows_)
            throw DimensionError("matrix product: " + shape() + " times " + o.shape());
        Matrix out(ring_, rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t l = 0; l < cols_; ++l) {
                const Scalar& x = e_[i * cols_ + l];
                if (x.is_zero()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    const Scalar& y = o.e_[l * o.cols_ + j];
                    if (y.is_zero()) continue;
                    out.e_[i * o.cols_ + j] += x * y;
                }
            }
        }
        return out;
    }

    /// m^e by repeated squaring; m^0 is the identity.
    Matrix pow(unsigned long long e) const {
        if (rows_ != cols_) throw DimensionError("matrix power of non-square " + shape());
        Matrix result = identity(ring_, rows_);
        Matrix base = *this;
        while (e > 0) {
            if (e & 1ULL) result = result * base;
            base = base * base;
            e >>= 1ULL;
        }
        return result;
    }

    Matrix embedded(Semiring to) const {
        Matrix out(to, rows_, cols_);
        for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i].embedded(to);
        return out;
    }

    /// Kronecker product; block (i,j) of the result is a(i,j) * b.
    Matrix tensor(const Matrix& o) const {
        require_ring(o.ring_);
        Matrix out(ring_, rows_ * o.rows_, cols_ * o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) {
                const Scalar& x = e_[i * cols_ + j];
                if (x.is_zero()) continue;
                for (std::size_t p = 0; p < o.rows_; ++p)
                    for (std::size_t q = 0; q < o.cols_; ++q)
                        out.e_[(i * o.rows_ + p) * out.cols_ + (j * o.cols_ + q)] =
                            x * o.e_[p * o.cols_ + q];
            }
        return out;
    }

    bool is_zero() const {
        for (const Scalar& s : e_)
            if (!s.is_zero()) return false;
        return true;
    }

    bool operator==(const Matrix& o) const {
        if (ring_ != o.ring_ || rows_ != o.rows_ || cols_ != o.cols_) return false;
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] != o.e_[i]) return false;
        return true;
    }

    std::string shape() const {
        return std::to_string(rows_) + "x" + std::to_string(cols_);
    }

private:
    void check_index(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_)
            throw DimensionError("matrix index (" + std::to_string(i) + "," + std::to_string(j) +
                                 ") out of range for " + shape());
    }

    void require_ring(Semiring other) const {
        if (ring_ != other)
            throw SemiringError(std::string("semiring mismatch: ") + semiring_name(ring_) +
                                " vs " + semiring_name(other));
    }

    Semiring ring_;
    std::size_t rows_, cols_;
    std::vector<Scalar> e_;
};

/// Row vector; left-multiplies matrices (lambda in a representation).
class RowVector {
public:
    RowVector(Semiring ring, std::size_t dim)
        : ring_(ring), e_(dim, Scalar::zero(ring)) {}

    RowVector(Semiring ring, std::vector<Scalar> entries) : ring_(ring), e_(std::move(entries)) {
        for (const Scalar& s : e_)
            if (s.ring() != ring_) throw SemiringError("row vector entries mix semirings");
    }

    Semiring ring() const { return ring_; }
    std::size_t dim() const { return e_.size(); }

    const Scalar& at(std::size_t i) const {
        check_index(i);
        return e_[i];
    }

    void set(std::size_t i, Scalar v) {
        check_index(i);
        if (v.ring() != ring_) throw SemiringError("entry semiring does not match vector");
        e_[i] = std::move(v);
    }

    RowVector operator+(const RowVector& o) const {
        require_compatible(o);
        RowVector out(ring_, dim());
        for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] + o.e_[i];
        return out;
    }

    /// v * M for a row vector v.
    RowVector operator*(const Matrix& m) const {
        if (m.ring() != ring_) throw SemiringError("semiring mismatch in vector-matrix product");
        if (m.rows() != dim())
            throw DimensionError("row vector of dim " + std::to_string(dim()) +
                                 " times matrix " + m.shape());
        RowVector out(ring_, m.cols());
        for (std::size_t i = 0; i < dim(); ++i) {
            const Scalar& x = e_[i];
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < m.cols(); ++j) {
                const Scalar& y = m.at(i, j);
                if (y.is_zero()) continue;
                out.e_[j] += x * y;
            }
        }
        return out;
    }

    Scalar operator*(const ColVector& v) const;  // dot product

    RowVector embedded(Semiring to) const {
        RowVector out(to, dim());
        for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i].embedded(to);
        return out;
    }

    RowVector tensor(const RowVector& o) const {
        require_ring(o.ring_);
        RowVector out(ring_, dim() * o.dim());
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = 0; j < o.dim(); ++j) out.e_[i * o.dim() + j] = e_[i] * o.e_[j];
        return out;
    }

    bool is_zero() const {
        for (const Scalar& s : e_)
            if (!s.is_zero()) return false;
        return true;
    }

    bool operator==(const RowVector& o) const {
        if (ring_ != o.ring_ || dim() != o.dim()) return false;
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] != o.e_[i]) return false;
        return true;
    }

    std::string to_string() const {
        std::string out = "(";
        for (std::size_t i = 0; i < e_.size(); ++i) {
            if (i > 0) out += ",";
            out += e_[i].to_string();
        }
        return out + ")";
    }

    friend std::ostream& operator<<(std::ostream& os, const RowVector& v) {
        return os << v.to_string();
    }

private:
    void check_index(std::size_t i) const {
        if (i >= e_.size())
            throw DimensionError("vector index " + std::to_string(i) + " out of range");
    }

    void require_ring(Semiring other) const {
        if (ring_ != other) throw SemiringError("semiring mismatch between vectors");
    }

    void require_compatible(const RowVector& o) const {
        require_ring(o.ring_);
        if (dim() != o.dim())
            throw DimensionError("vector dims " + std::to_string(dim()) + " vs " +
                                 std::to_string(o.dim()));
    }

    Semiring ring_;
    std::vector<Scalar> e_;
};

/// Column vector; right-multiplies matrices (nu in a representation).
class ColVector {
public:
    ColVector(Semiring ring, std::size_t dim)
        : ring_(ring), e_(dim, Scalar::zero(ring)) {}

    ColVector(Semiring ring, std::vector<Scalar> entries) : ring_(ring), e_(std::move(entries)) {
        for (const Scalar& s : e_)
            if (s.ring() != ring_) throw SemiringError("column vector entries mix semirings");
    }

    Semiring ring() const { return ring_; }
    std::size_t dim() const { return e_.size(); }

    const Scalar& at(std::size_t i) const {
        if (i >= e_.size())
            throw DimensionError("vector index " + std::to_string(i) + " out of range");
        return e_[i];
    }

    void set(std::size_t i, Scalar v) {
        if (i >= e_.size())
            throw DimensionError("vector index " + std::to_string(i) + " out of range");
        if (v.ring() != ring_) throw SemiringError("entry semiring does not match vector");
        e_[i] = std::move(v);
    }

    ColVector embedded(Semiring to) const {
        ColVector out(to, dim());
        for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i].embedded(to);
        return out;
    }

    ColVector tensor(const ColVector& o) const {
        if (ring_ != o.ring_) throw SemiringError("semiring mismatch between vectors");
        ColVector out(ring_, dim() * o.dim());
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = 0; j < o.dim(); ++j) out.e_[i * o.dim() + j] = e_[i] * o.e_[j];
        return out;
    }

    bool operator==(const ColVector& o) const {
        if (ring_ != o.ring_ || dim() != o.dim()) return false;
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] != o.e_[i]) return false;
        return true;
    }

    std::string to_string() const {
        std::string out = "(";
        for (std::size_t i = 0; i < e_.size(); ++i) {
            if (i > 0) out += ",";
            out += e_[i].to_string();
        }
        return out + ")^T";
    }

private:
    Semiring ring_;
    std::vector<Scalar> e_;
};

inline Scalar RowVector::operator*(const ColVector& v) const {
    if (v.ring() != ring_) throw SemiringError("semiring mismatch in dot product");
    if (v.dim() != dim())
        throw DimensionError("dot product dims " + std::to_string(dim()) + " vs " +
                             std::to_string(v.dim()));
    Scalar acc = Scalar::zero(ring_);
    for (std::size_t i = 0; i < dim(); ++i) acc += e_[i] * v.at(i);
    return acc;
}

/// M * v for a column vector v.
inline ColVector operator*(const Matrix& m, const ColVector& v) {
    if (m.ring() != v.ring()) throw SemiringError("semiring mismatch in matrix-vector product");
    if (m.cols() != v.dim())
        throw DimensionError("matrix " + m.shape() + " times column vector of dim " +
                             std::to_string(v.dim()));
    ColVector out(m.ring(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Scalar acc = Scalar::zero(m.ring());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Scalar& x = m.at(i, j);
            if (x.is_zero()) continue;
            acc += x * v.at(j);
        }
        out.set(i, acc);
    }
    return out;
}

}  // namespace ans
