#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ans/alphabet.hpp"
#include "ans/automaton.hpp"
#include "ans/automaton_ops.hpp"
#include "ans/errors.hpp"
#include "ans/linalg.hpp"
#include "ans/scalar.hpp"

namespace ans {

/// A linear representation (lambda, mu, nu) of a series over A*:
/// the coefficient of w is lambda * mu(w) * nu.
class LinearRepresentation {
public:
    LinearRepresentation(Semiring ring, OrderedAlphabet alphabet, RowVector lambda,
                         std::vector<Matrix> mu, ColVector nu)
        : ring_(ring),
          alphabet_(std::move(alphabet)),
          lambda_(std::move(lambda)),
          mu_(std::move(mu)),
          nu_(std::move(nu)) {
        std::size_t k = lambda_.dim();
        if (mu_.size() != alphabet_.size())
            throw DimensionError("one matrix per alphabet letter expected");
        if (nu_.dim() != k)
            throw DimensionError("lambda and nu dimensions differ");
        if (lambda_.ring() != ring_ || nu_.ring() != ring_)
            throw SemiringError("vector semiring does not match representation semiring");
        for (const Matrix& m : mu_) {
            if (m.rows() != k || m.cols() != k)
                throw DimensionError("mu matrix is " + m.shape() + ", expected " +
                                     std::to_string(k) + "x" + std::to_string(k));
            if (m.ring() != ring_)
                throw SemiringError("matrix semiring does not match representation semiring");
        }
    }

    Semiring ring() const { return ring_; }
    const OrderedAlphabet& alphabet() const { return alphabet_; }
    std::size_t dimension() const { return lambda_.dim(); }

    const RowVector& lambda() const { return lambda_; }
    const ColVector& nu() const { return nu_; }
    const Matrix& mu(std::size_t letter_index) const {
        if (letter_index >= mu_.size()) throw DimensionError("letter index out of range");
        return mu_[letter_index];
    }
    const Matrix& mu_of(char letter) const { return mu_[alphabet_.index_of(letter)]; }

    /// mu extended to words: the product of the letter matrices.
    Matrix mu_of_word(const Word& w) const {
        Matrix m = Matrix::identity(ring_, dimension());
        for (char c : w) m = m * mu_of(c);
        return m;
    }

    /// lambda * mu(w) * nu, evaluated left to right in O(|w| k^2).
    Scalar coefficient(const Word& w) const {
        RowVector row = lambda_;
        for (char c : w) row = row * mu_of(c);
        return row * nu_;
    }

    /// Sum of all letter matrices (sigma = mu(A)).
    Matrix letter_sum() const {
        Matrix s(ring_, dimension(), dimension());
        for (const Matrix& m : mu_) s = s + m;
        return s;
    }

    LinearRepresentation embedded(Semiring to) const {
        std::vector<Matrix> mu2;
        mu2.reserve(mu_.size());
        for (const Matrix& m : mu_) mu2.push_back(m.embedded(to));
        return LinearRepresentation(to, alphabet_, lambda_.embedded(to), std::move(mu2),
                                    nu_.embedded(to));
    }

    /// Drops coordinates that no nonzero path from lambda reaches or that
    /// reach no nonzero nu entry. Purely structural, so sound over any
    /// semiring: a coordinate cut here contributes zero to every product.
    LinearRepresentation trimmed() const {
        std::size_t k = dimension();
        std::vector<bool> fwd(k, false), bwd(k, false);
        for (std::size_t i = 0; i < k; ++i) {
            if (!lambda_.at(i).is_zero()) fwd[i] = true;
            if (!nu_.at(i).is_zero()) bwd[i] = true;
        }
        for (bool changed = true; changed;) {
            changed = false;
            for (const Matrix& m : mu_)
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) {
                        if (m.at(i, j).is_zero()) continue;
                        if (fwd[i] && !fwd[j]) fwd[j] = changed = true;
                        if (bwd[j] && !bwd[i]) bwd[i] = changed = true;
                    }
        }
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < k; ++i)
            if (fwd[i] && bwd[i]) keep.push_back(i);

        RowVector l2(ring_, keep.size());
        ColVector n2(ring_, keep.size());
        for (std::size_t i = 0; i < keep.size(); ++i) {
            l2.set(i, lambda_.at(keep[i]));
            n2.set(i, nu_.at(keep[i]));
        }
        std::vector<Matrix> mu2;
        mu2.reserve(mu_.size());
        for (const Matrix& m : mu_) {
            Matrix t(ring_, keep.size(), keep.size());
            for (std::size_t i = 0; i < keep.size(); ++i)
                for (std::size_t j = 0; j < keep.size(); ++j)
                    t.set(i, j, m.at(keep[i], keep[j]));
            mu2.push_back(std::move(t));
        }
        return LinearRepresentation(ring_, alphabet_, std::move(l2), std::move(mu2),
                                    std::move(n2));
    }

    bool operator==(const LinearRepresentation& o) const {
        return ring_ == o.ring_ && alphabet_ == o.alphabet_ && lambda_ == o.lambda_ &&
               mu_ == o.mu_ && nu_ == o.nu_;
    }

private:
    Semiring ring_;
    OrderedAlphabet alphabet_;
    RowVector lambda_;
    std::vector<Matrix> mu_;
    ColVector nu_;
};

/// Characteristic representation of an unambiguous automaton's language:
/// lambda/nu are initial/final indicators, mu(a) counts a-transitions.
/// For unambiguous input, lambda * mu(w) * nu is 1 on the language, 0 off.
inline LinearRepresentation to_linear_representation(const Nfa& n) {
    if (!is_unambiguous(n))
        throw AmbiguityError("automaton is ambiguous: no characteristic representation");
    const OrderedAlphabet& ab = n.alphabet();
    std::size_t k = n.num_states();
    RowVector lambda(Semiring::N, k);
    ColVector nu(Semiring::N, k);
    for (State s : n.initials()) lambda.set(s, Scalar::one(Semiring::N));
    for (State s : n.finals()) nu.set(s, Scalar::one(Semiring::N));
    std::vector<Matrix> mu;
    mu.reserve(ab.size());
    for (std::size_t a = 0; a < ab.size(); ++a) {
        Matrix m(Semiring::N, k, k);
        for (State s = 0; s < n.num_states(); ++s)
            for (State t : n.targets(s, a)) m.set(s, t, Scalar::one(Semiring::N));
        mu.push_back(std::move(m));
    }
    return LinearRepresentation(Semiring::N, ab, std::move(lambda), std::move(mu),
                                std::move(nu));
}

/// |L ∩ A^len| = lambda * sigma^len * nu for a characteristic representation.
inline Integer count_words_of_length(const LinearRepresentation& rep, unsigned long long len) {
    Scalar c = rep.lambda() * rep.letter_sum().pow(len) * rep.nu();
    return c.to_integer();
}

/// The exact coefficient of w (free-function spelling of coefficient()).
inline Scalar series_coefficient(const LinearRepresentation& rep, const Word& w) {
    return rep.coefficient(w);
}

/// Hadamard (pointwise) product via the tensor construction:
/// every coefficient of the result is the product of the factors'.
inline LinearRepresentation hadamard(const LinearRepresentation& r1,
                                     const LinearRepresentation& r2) {
    if (!(r1.alphabet() == r2.alphabet()))
        throw ParseError("hadamard product across different alphabets");
    if (r1.ring() != r2.ring())
        throw SemiringError("hadamard product across different semirings");
    std::vector<Matrix> mu;
    mu.reserve(r1.alphabet().size());
    for (std::size_t a = 0; a < r1.alphabet().size(); ++a)
        mu.push_back(r1.mu(a).tensor(r2.mu(a)));
    return LinearRepresentation(r1.ring(), r1.alphabet(), r1.lambda().tensor(r2.lambda()),
                                std::move(mu), r1.nu().tensor(r2.nu()));
}

}  // namespace ans
