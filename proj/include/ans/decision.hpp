#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ans/automaton.hpp"
#include "ans/automaton_ops.hpp"
#include "ans/enumerating_series.hpp"
#include "ans/errors.hpp"
#include "ans/linalg.hpp"
#include "ans/representation.hpp"
#include "ans/scalar.hpp"
#include "ans/system.hpp"

namespace ans {

/// DFA of {w : coefficient of w is nonzero}. Sound for semiring N only:
/// without cancellation, the support is exactly the language of the
/// nonzero-pattern Boolean automaton, which is then made minimal.
inline Dfa support_dfa(const LinearRepresentation& s) {
    if (s.ring() != Semiring::N)
        throw SemiringError("support automaton requires semiring N "
                            "(supports of Z- or Q-series need not be rational)");
    const OrderedAlphabet& ab = s.alphabet();
    std::size_t k = s.dimension();
    Nfa pattern(ab, static_cast<State>(k));
    for (std::size_t i = 0; i < k; ++i) {
        if (!s.lambda().at(i).is_zero()) pattern.add_initial(static_cast<State>(i));
        if (!s.nu().at(i).is_zero()) pattern.add_final(static_cast<State>(i));
        for (std::size_t a = 0; a < ab.size(); ++a)
            for (std::size_t j = 0; j < k; ++j)
                if (!s.mu(a).at(i, j).is_zero())
                    pattern.add_transition(static_cast<State>(i), ab.letter(a),
                                           static_cast<State>(j));
    }
    return minimize(determinize(pattern));
}

/// Difference of two series by direct sum: dimension n1+n2, lambda is
/// (lambda1 | -lambda2), mu block-diagonal, nu stacked. The result lives
/// in Z (or Q if either input does).
inline LinearRepresentation subtract(const LinearRepresentation& s1,
                                     const LinearRepresentation& s2) {
    if (!(s1.alphabet() == s2.alphabet()))
        throw ParseError("series difference across different alphabets");
    Semiring ring = (s1.ring() == Semiring::Q || s2.ring() == Semiring::Q) ? Semiring::Q
                                                                           : Semiring::Z;
    LinearRepresentation a = s1.embedded(ring);
    LinearRepresentation b = s2.embedded(ring);
    std::size_t n1 = a.dimension(), n2 = b.dimension();

    RowVector lambda(ring, n1 + n2);
    ColVector nu(ring, n1 + n2);
    for (std::size_t i = 0; i < n1; ++i) {
        lambda.set(i, a.lambda().at(i));
        nu.set(i, a.nu().at(i));
    }
    for (std::size_t i = 0; i < n2; ++i) {
        lambda.set(n1 + i, -b.lambda().at(i));
        nu.set(n1 + i, b.nu().at(i));
    }
    std::vector<Matrix> mu;
    mu.reserve(a.alphabet().size());
    for (std::size_t x = 0; x < a.alphabet().size(); ++x) {
        Matrix m(ring, n1 + n2, n1 + n2);
        for (std::size_t i = 0; i < n1; ++i)
            for (std::size_t j = 0; j < n1; ++j) m.set(i, j, a.mu(x).at(i, j));
        for (std::size_t i = 0; i < n2; ++i)
            for (std::size_t j = 0; j < n2; ++j) m.set(n1 + i, n1 + j, b.mu(x).at(i, j));
        mu.push_back(std::move(m));
    }
    return LinearRepresentation(ring, a.alphabet(), std::move(lambda), std::move(mu),
                                std::move(nu));
}

namespace detail {

/// Reduced-echelon basis of row vectors over Q supporting the zeroness
/// test: reduce() eliminates every pivot, insert() keeps the basis fully
/// reduced so one reduction pass always suffices.
class RowBasis {
public:
    explicit RowBasis(std::size_t dim) : dim_(dim) {}

    /// Reduces v against the basis in place; returns true if a nonzero
    /// remainder was inserted (v was independent).
    bool insert(std::vector<Rational> v) {
        for (std::size_t b = 0; b < rows_.size(); ++b) {
            const Rational& c = v[pivot_[b]];
            if (c != 0) subtract_scaled(v, rows_[b], c);
        }
        std::size_t p = dim_;
        for (std::size_t j = 0; j < dim_; ++j)
            if (v[j] != 0) {
                p = j;
                break;
            }
        if (p == dim_) return false;
        Rational lead = v[p];
        for (Rational& x : v) x /= lead;
        // Back-eliminate the new pivot from the existing rows.
        for (std::size_t b = 0; b < rows_.size(); ++b) {
            const Rational& c = rows_[b][p];
            if (c != 0) subtract_scaled(rows_[b], v, c);
        }
        rows_.push_back(std::move(v));
        pivot_.push_back(p);
        return true;
    }

    std::size_t size() const { return rows_.size(); }
    const std::vector<Rational>& row(std::size_t i) const { return rows_[i]; }

private:
    static void subtract_scaled(std::vector<Rational>& target,
                                const std::vector<Rational>& src, Rational factor) {
        for (std::size_t j = 0; j < target.size(); ++j) target[j] -= factor * src[j];
    }

    std::size_t dim_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<std::size_t> pivot_;
};

}  // namespace detail

/// Exact zeroness of a series: close the row space {lambda * mu(w)} under
/// the letter maps (at most dim basis vectors appear), then test every
/// basis vector against nu. No tolerances anywhere — plain rational rank.
inline bool is_zero(const LinearRepresentation& s) {
    LinearRepresentation q = s.embedded(Semiring::Q);
    std::size_t d = q.dimension();
    const OrderedAlphabet& ab = q.alphabet();

    // Plain rational copies of the data, to keep the closure loop lean.
    std::vector<Rational> lambda(d), nu(d);
    for (std::size_t i = 0; i < d; ++i) {
        lambda[i] = q.lambda().at(i).value();
        nu[i] = q.nu().at(i).value();
    }
    std::vector<std::vector<std::vector<Rational>>> mu(ab.size());
    for (std::size_t a = 0; a < ab.size(); ++a) {
        mu[a].assign(d, std::vector<Rational>(d));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) mu[a][i][j] = q.mu(a).at(i, j).value();
    }

    detail::RowBasis basis(d);
    std::vector<std::vector<Rational>> work;
    if (basis.insert(lambda)) work.push_back(lambda);
    while (!work.empty()) {
        std::vector<Rational> v = std::move(work.back());
        work.pop_back();
        for (std::size_t a = 0; a < ab.size(); ++a) {
            std::vector<Rational> u(d, Rational(0));
            for (std::size_t i = 0; i < d; ++i) {
                if (v[i] == 0) continue;
                for (std::size_t j = 0; j < d; ++j)
                    if (mu[a][i][j] != 0) u[j] += v[i] * mu[a][i][j];
            }
            if (basis.insert(u)) work.push_back(std::move(u));
        }
    }
    for (std::size_t b = 0; b < basis.size(); ++b) {
        Rational dot = 0;
        for (std::size_t j = 0; j < d; ++j) dot += basis.row(b)[j] * nu[j];
        if (dot != 0) return false;
    }
    return true;
}

/// Coefficientwise equality of two series, decided exactly.
inline bool equivalent(const LinearRepresentation& s1, const LinearRepresentation& s2) {
    return is_zero(subtract(s1, s2));
}

/// Verdict of the enumerating-series decision, with diagnostics for "no".
struct EnumDecision {
    enum class Reason {
        ByEquivalence,        // yes: equals the canonical series of its support
        EmptySupport,         // no: support is empty
        FiniteSupport,        // no: support is finite (no numeration system)
        CoefficientMismatch,  // no: witness word found within the search depth
        MismatchBeyondDepth,  // no: series differ, first mismatch lies deeper
    };

    bool is_enumerating;
    Reason reason;
    std::optional<Word> witness;
    std::optional<Integer> expected;  // coefficient of the canonical series
    std::optional<Integer> actual;    // coefficient of the input series
};

/// Decides whether s enumerates some rational numeration system, by
/// reconstruction: take L = supp(s), rebuild the canonical enumerating
/// series of (L, A, <), and compare exactly. On failure a witness word is
/// sought in radix order up to `depth`.
inline EnumDecision is_enumerating_series(const LinearRepresentation& s,
                                          unsigned depth = 12) {
    if (s.ring() != Semiring::N)
        throw SemiringError("the enumerating-series decision applies to N-series");
    Dfa support = support_dfa(s);
    if (is_empty_language(support))
        return {false, EnumDecision::Reason::EmptySupport, std::nullopt, std::nullopt,
                std::nullopt};
    if (!is_infinite(support))
        return {false, EnumDecision::Reason::FiniteSupport, std::nullopt, std::nullopt,
                std::nullopt};

    AnsSystem sys = AnsSystem::from_language(support);
    LinearRepresentation canonical = enumerating_series(sys).final_rep();
    if (equivalent(s, canonical))
        return {true, EnumDecision::Reason::ByEquivalence, std::nullopt, std::nullopt,
                std::nullopt};

    // Radix-ordered witness search: all words, shortest first, letters in
    // alphabet order, up to the requested depth.
    const OrderedAlphabet& ab = s.alphabet();
    for (unsigned len = 0; len <= depth; ++len) {
        std::vector<std::size_t> idx(len, 0);
        for (;;) {
            Word w;
            w.reserve(len);
            for (std::size_t i : idx) w.push_back(ab.letter(i));
            Integer actual = s.coefficient(w).to_integer();
            Integer expected = canonical.coefficient(w).to_integer();
            if (actual != expected)
                return {false, EnumDecision::Reason::CoefficientMismatch, w, expected,
                        actual};
            // Odometer step over letter indices.
            std::size_t pos = len;
            while (pos > 0 && idx[pos - 1] + 1 == ab.size()) idx[--pos] = 0;
            if (pos == 0) break;
            ++idx[pos - 1];
        }
    }
    return {false, EnumDecision::Reason::MismatchBeyondDepth, std::nullopt, std::nullopt,
            std::nullopt};
}

}  // namespace ans
