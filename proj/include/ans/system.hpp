#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ans/alphabet.hpp"
#include "ans/automaton.hpp"
#include "ans/automaton_ops.hpp"
#include "ans/errors.hpp"
#include "ans/linalg.hpp"
#include "ans/representation.hpp"
#include "ans/scalar.hpp"

namespace ans {

/// One step of the value computation: the alpha/beta/gamma state after
/// consuming `letter` (the first record has no letter and shows the
/// initialization alpha = beta = lambda, gamma = 0).
struct ValueStep {
    std::size_t index;
    std::optional<char> letter;
    RowVector alpha;
    RowVector beta;
    RowVector gamma;
};

struct ValueTrace {
    std::vector<ValueStep> steps;
    bool in_language;
    std::optional<Integer> value;  // present iff in_language
};

/// A numeration system: an infinite rational language L over an ordered
/// alphabet, with the machinery to rank words (value), unrank naturals
/// (representation) and enumerate. Immutable once built; all queries are
/// pure, so one instance may be shared across threads.
class AnsSystem {
public:
    /// Canonical construction: determinize and minimize, which guarantees
    /// an unambiguous (indeed deterministic) trim automaton of minimal k.
    static AnsSystem from_language(const Nfa& language) {
        Dfa d = minimize(determinize(language));
        return AnsSystem(d.as_nfa(), d, true);
    }

    static AnsSystem from_language(const Dfa& language) {
        Dfa d = minimize(language);
        return AnsSystem(d.as_nfa(), d, true);
    }

    /// Keeps a caller-supplied automaton as the presentation (trimmed),
    /// validating unambiguity instead of determinizing.
    static AnsSystem from_unambiguous(const Nfa& automaton) {
        Nfa t = automaton.trimmed();
        if (!is_unambiguous(t))
            throw AmbiguityError("automaton is ambiguous: cannot present a numeration system");
        std::optional<Dfa> dfa;
        if (t.is_deterministic()) {
            Dfa d(t.alphabet(), t.num_states(), t.initials().front());
            for (State s = 0; s < t.num_states(); ++s) {
                if (t.is_final(s)) d.set_final(s);
                for (std::size_t a = 0; a < t.alphabet().size(); ++a)
                    if (!t.targets(s, a).empty())
                        d.set_transition(s, t.alphabet().letter(a), t.targets(s, a).front());
            }
            dfa = std::move(d);
        }
        bool det = dfa.has_value();
        return AnsSystem(t, std::move(dfa), det);
    }

    const OrderedAlphabet& alphabet() const { return rep_.alphabet(); }
    const Nfa& automaton() const { return automaton_; }
    bool deterministic() const { return deterministic_; }

    /// The minimal (or supplied) presentation as a DFA; only available
    /// when the presentation is deterministic.
    const Dfa& dfa() const {
        if (!dfa_) throw InternalError("no deterministic presentation available");
        return *dfa_;
    }

    /// Characteristic representation of L: dimension k, coefficient 1 on
    /// L and 0 elsewhere.
    const LinearRepresentation& representation_of_language() const { return rep_; }

    std::size_t dimension() const { return rep_.dimension(); }
    const Matrix& sigma() const { return sigma_; }
    const Matrix& sigma_below(std::size_t letter_index) const {
        if (letter_index >= sigma_below_.size())
            throw DimensionError("letter index out of range");
        return sigma_below_[letter_index];
    }

    bool contains(const Word& w) const { return rep_.coefficient(w).is_one(); }

    /// Rank of w within L in radix order (0-based): the alpha/beta/gamma
    /// recurrences, O(|w| k^2) scalar operations, no enumeration.
    Integer value(const Word& w) const {
        RowVector alpha = rep_.lambda();
        RowVector gamma(Semiring::N, dimension());
        for (char c : w) {
            std::size_t a = alphabet().index_of(c);
            RowVector beta = alpha * sigma_below_[a];
            gamma = rep_.lambda() + beta + gamma * sigma_;
            alpha = alpha * rep_.mu(a);
        }
        if (!(alpha * rep_.nu()).is_one())
            throw NotInLanguageError("word \"" + w + "\" is not in the language");
        return (gamma * rep_.nu()).to_integer();
    }

    /// The full evolution of the value computation, membership included.
    ValueTrace value_trace(const Word& w) const {
        alphabet().check_word(w);
        ValueTrace out;
        RowVector alpha = rep_.lambda();
        RowVector gamma(Semiring::N, dimension());
        out.steps.push_back({0, std::nullopt, alpha, alpha, gamma});
        std::size_t i = 0;
        for (char c : w) {
            std::size_t a = alphabet().index_of(c);
            RowVector beta = alpha * sigma_below_[a];
            gamma = rep_.lambda() + beta + gamma * sigma_;
            alpha = alpha * rep_.mu(a);
            out.steps.push_back({++i, c, alpha, beta, gamma});
        }
        out.in_language = (alpha * rep_.nu()).is_one();
        if (out.in_language) out.value = (gamma * rep_.nu()).to_integer();
        return out;
    }

    /// |L ∩ A^len|.
    Integer count_words_of_length(unsigned long long len) const {
        LengthCounts cache(*this);
        return (rep_.lambda() * cache.column(len)).to_integer();
    }

    /// Unranking: the unique w in L with value(w) = n. Scans lengths
    /// until the cumulative count passes n, then fixes letters left to
    /// right, counting completions through sigma-power columns.
    Word representation(const Integer& n) const {
        if (n < 0) throw Error("representation of a negative number");
        LengthCounts cache(*this);
        return unrank(n, cache);
    }

    /// Representations of start .. start+count-1, in radix order.
    std::vector<Word> enumerate(const Integer& start, unsigned long long count) const {
        LengthCounts cache(*this);
        std::vector<Word> out;
        out.reserve(count);
        Integer n = start;
        for (unsigned long long i = 0; i < count; ++i, ++n) out.push_back(unrank(n, cache));
        return out;
    }

private:
    /// Lazily grown table of the columns sigma^j * nu; column(j).at(q) is
    /// the number of length-j words accepted from state q. Local to each
    /// query batch, which keeps the system itself immutable.
    class LengthCounts {
    public:
        explicit LengthCounts(const AnsSystem& sys) : sys_(sys) {
            cols_.push_back(sys.rep_.nu());
        }

        const ColVector& column(unsigned long long j) {
            while (cols_.size() <= j) cols_.push_back(sys_.sigma_ * cols_.back());
            return cols_[static_cast<std::size_t>(j)];
        }

    private:
        const AnsSystem& sys_;
        std::vector<ColVector> cols_;
    };

    AnsSystem(Nfa automaton, std::optional<Dfa> dfa, bool deterministic)
        : automaton_(std::move(automaton)),
          dfa_(std::move(dfa)),
          deterministic_(deterministic),
          rep_(make_rep(automaton_)),
          sigma_(rep_.letter_sum()),
          sigma_below_(make_sigma_below(rep_)) {
        if (is_empty_language(automaton_))
            throw FiniteLanguageError("language is empty: a numeration system needs an infinite language");
        if (!is_infinite(automaton_))
            throw FiniteLanguageError("language is finite: a numeration system needs an infinite language");
    }

    static LinearRepresentation make_rep(const Nfa& a) {
        if (a.num_states() == 0) {
            // Degenerate empty automaton; construction fails right after
            // on the emptiness check, but the member must be built first.
            Nfa one(a.alphabet(), 1);
            one.add_initial(0);
            return to_linear_representation(one);
        }
        return to_linear_representation(a);
    }

    static std::vector<Matrix> make_sigma_below(const LinearRepresentation& rep) {
        std::vector<Matrix> out;
        out.reserve(rep.alphabet().size());
        Matrix acc(rep.ring(), rep.dimension(), rep.dimension());
        for (std::size_t a = 0; a < rep.alphabet().size(); ++a) {
            out.push_back(acc);  // sum over letters strictly below a
            acc = acc + rep.mu(a);
        }
        return out;
    }

    Word unrank(const Integer& n, LengthCounts& cache) const {
        // Find the length block containing rank n.
        Integer before = 0;  // words of L shorter than len
        unsigned long long len = 0;
        for (;;) {
            Integer here = (rep_.lambda() * cache.column(len)).to_integer();
            if (before + here > n) break;
            before += here;
            ++len;
        }
        Integer rem = n - before;  // rank within L ∩ A^len

        Word w;
        RowVector alpha = rep_.lambda();
        for (unsigned long long pos = 0; pos < len; ++pos) {
            bool placed = false;
            for (std::size_t a = 0; a < alphabet().size(); ++a) {
                RowVector next = alpha * rep_.mu(a);
                Integer cnt = (next * cache.column(len - pos - 1)).to_integer();
                if (rem < cnt) {
                    w.push_back(alphabet().letter(a));
                    alpha = std::move(next);
                    placed = true;
                    break;
                }
                rem -= cnt;
            }
            if (!placed)
                throw InternalError("unranking inconsistency: counts do not cover the rank");
        }
        if (!(alpha * rep_.nu()).is_one() || rem != 0)
            throw InternalError("unranking inconsistency: rank not consumed exactly");
        return w;
    }

    Nfa automaton_;
    std::optional<Dfa> dfa_;
    bool deterministic_;
    LinearRepresentation rep_;
    Matrix sigma_;
    std::vector<Matrix> sigma_below_;
};

/// Shorthand constructor: builds the default (minimal DFA) system.
inline AnsSystem new_ans(const Nfa& language) { return AnsSystem::from_language(language); }
inline AnsSystem new_ans(const Dfa& language) { return AnsSystem::from_language(language); }

}  // namespace ans
