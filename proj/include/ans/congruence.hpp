#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "ans/automaton.hpp"
#include "ans/automaton_ops.hpp"
#include "ans/errors.hpp"
#include "ans/linalg.hpp"
#include "ans/scalar.hpp"
#include "ans/system.hpp"

namespace ans {

/// One arithmetic progression p*N + r of values.
struct CongruenceSpec {
    std::uint64_t modulus;
    std::uint64_t residue;

    void validate() const {
        if (modulus == 0) throw ParseError("modulus must be at least 1");
        if (residue >= modulus)
            throw ParseError("residue " + std::to_string(residue) +
                             " must be smaller than modulus " + std::to_string(modulus));
    }
};

/// A recognizable set of naturals: a finite union of progressions,
/// plus/minus finitely many explicit values.
struct RecognizableSetSpec {
    std::vector<CongruenceSpec> progressions;
    std::set<std::uint64_t> include;
    std::set<std::uint64_t> exclude;

    void validate() const {
        for (const CongruenceSpec& c : progressions) c.validate();
        for (std::uint64_t n : include)
            if (exclude.count(n))
                throw ParseError("value " + std::to_string(n) +
                                 " appears in both include and exclude");
    }

    bool empty_language() const { return progressions.empty() && include.empty(); }
};

namespace detail {

/// Core reachability over pairs (alpha, delta) where alpha = alpha(w) is
/// the 0/1 path-indicator row and delta = gamma(w) mod p. The transition
/// on x follows the value recurrences reduced mod p:
///   alpha' = alpha * mu(x)        delta' = (lambda + alpha*sigma_x + delta*sigma) mod p.
/// States whose alpha is all-zero (dead prefixes) are never materialized.
/// Finality: alpha*nu = 1 (membership) and delta*nu = r (mod p).
inline Dfa congruence_reachability(const AnsSystem& sys, std::uint64_t p, std::uint64_t r) {
    const LinearRepresentation& rep = sys.representation_of_language();
    const OrderedAlphabet& ab = rep.alphabet();
    std::size_t k = rep.dimension();
    Integer mod = p;

    // Residue tables; everything below stays in [0, p).
    auto reduce = [&](const Integer& x) {
        return static_cast<std::uint64_t>(Integer(x % mod));
    };
    std::vector<std::uint64_t> lam(k), nu(k);
    for (std::size_t j = 0; j < k; ++j) {
        lam[j] = reduce(rep.lambda().at(j).to_integer());
        nu[j] = static_cast<std::uint64_t>(rep.nu().at(j).to_integer());  // 0/1 indicator
    }

    using Key = std::pair<std::vector<std::uint8_t>, std::vector<std::uint64_t>>;
    std::vector<std::uint8_t> alpha0(k);
    for (std::size_t j = 0; j < k; ++j) {
        Integer v = rep.lambda().at(j).to_integer();
        if (v < 0 || v > 1) throw AmbiguityError("initial vector is not a 0/1 indicator");
        alpha0[j] = static_cast<std::uint8_t>(v);
    }

    std::map<Key, State> id;
    std::vector<Key> keys;
    Key start{alpha0, std::vector<std::uint64_t>(k, 0)};
    id[start] = 0;
    keys.push_back(start);
    std::vector<std::vector<State>> delta_out;

    for (std::size_t done = 0; done < keys.size(); ++done) {
        const auto [alpha, delta] = keys[done];  // copy: keys grows below
        std::vector<State> row(ab.size(), kNoState);
        for (std::size_t x = 0; x < ab.size(); ++x) {
            const Matrix& mu = rep.mu(x);
            const Matrix& below = sys.sigma_below(x);
            const Matrix& sigma = sys.sigma();
            std::vector<std::uint8_t> alpha2(k, 0);
            std::vector<std::uint64_t> delta2(k, 0);
            bool live = false;
            for (std::size_t j = 0; j < k; ++j) {
                Integer a2 = 0;
                Integer d2 = lam[j];
                for (std::size_t i = 0; i < k; ++i) {
                    if (alpha[i]) {
                        a2 += mu.at(i, j).to_integer();
                        d2 += below.at(i, j).to_integer();
                    }
                    if (delta[i]) d2 += Integer(delta[i]) * sigma.at(i, j).to_integer();
                }
                if (a2 > 1)
                    throw AmbiguityError("two paths reach one state: automaton is ambiguous");
                alpha2[j] = static_cast<std::uint8_t>(a2);
                if (alpha2[j]) live = true;
                delta2[j] = reduce(d2);
            }
            if (!live) continue;  // no word of L extends this prefix with x
            Key next{std::move(alpha2), std::move(delta2)};
            auto [it, fresh] = id.try_emplace(next, static_cast<State>(keys.size()));
            if (fresh) keys.push_back(std::move(next));
            row[x] = it->second;
        }
        delta_out.push_back(std::move(row));
    }

    Dfa out(ab, static_cast<State>(keys.size()), 0);
    for (State s = 0; s < out.num_states(); ++s) {
        const auto& [alpha, delta] = keys[s];
        Integer members = 0, residue = 0;
        for (std::size_t j = 0; j < k; ++j) {
            if (!nu[j]) continue;
            members += alpha[j];
            residue += delta[j];
        }
        if (members > 1)
            throw AmbiguityError("two accepting paths for one word: automaton is ambiguous");
        if (members == 1 && static_cast<std::uint64_t>(Integer(residue % mod)) == r % p)
            out.set_final(s);
        for (std::size_t x = 0; x < ab.size(); ++x)
            if (delta_out[s][x] != kNoState)
                out.set_transition(s, ab.letter(x), delta_out[s][x]);
    }
    return out;
}

/// p^k * factor as exact integers, for the reachable-state bound checks.
inline Integer power_bound(std::uint64_t p, std::size_t k, const Integer& factor) {
    Integer b = factor;
    for (std::size_t i = 0; i < k; ++i) b *= p;
    return b;
}

}  // namespace detail

/// Recognizer of {representation(n) : n = r mod p} for a system presented
/// by a DFA. Reachable states are pairs of an automaton state and a
/// residue vector; at most k * p^k of them.
inline Dfa congruence_dfa(const AnsSystem& sys, const CongruenceSpec& spec) {
    spec.validate();
    if (!sys.deterministic())
        throw Error("congruence recognizer needs a deterministic system; "
                    "use the unambiguous variant instead");
    Dfa out = detail::congruence_reachability(sys, spec.modulus, spec.residue);
    Integer bound =
        detail::power_bound(spec.modulus, sys.dimension(), Integer(sys.dimension()));
    if (Integer(out.num_states()) > bound)
        throw InternalError("reachable congruence states exceed the k*p^k bound");
    return out;
}

/// Same language for any unambiguous presentation; the indicator part of
/// a state now ranges over 0/1 vectors, so the bound is 2^k * p^k.
inline Dfa congruence_dfa_unambiguous(const AnsSystem& sys, const CongruenceSpec& spec) {
    spec.validate();
    Dfa out = detail::congruence_reachability(sys, spec.modulus, spec.residue);
    Integer bound = detail::power_bound(spec.modulus, sys.dimension(),
                                        detail::power_bound(2, sys.dimension(), 1));
    if (Integer(out.num_states()) > bound)
        throw InternalError("reachable congruence states exceed the 2^k*p^k bound");
    return out;
}

/// Minimized DFA of the representations of (union of progressions,
/// plus `include`, minus `exclude`). An empty spec is the empty language.
inline Dfa recognizable_set_dfa(const AnsSystem& sys, const RecognizableSetSpec& spec) {
    spec.validate();
    const OrderedAlphabet& ab = sys.alphabet();
    Dfa acc(ab, 1, 0);  // empty language
    for (const CongruenceSpec& c : spec.progressions) {
        Dfa part = sys.deterministic() ? congruence_dfa(sys, c)
                                       : congruence_dfa_unambiguous(sys, c);
        acc = dfa_union(acc, part);
    }
    if (!spec.include.empty()) {
        std::vector<Word> words;
        words.reserve(spec.include.size());
        for (std::uint64_t n : spec.include) words.push_back(sys.representation(Integer(n)));
        acc = dfa_union(acc, dfa_from_words(words, ab));
    }
    if (!spec.exclude.empty()) {
        std::vector<Word> words;
        words.reserve(spec.exclude.size());
        for (std::uint64_t n : spec.exclude) words.push_back(sys.representation(Integer(n)));
        acc = dfa_difference(acc, dfa_from_words(words, ab));
    }
    return minimize(acc);
}

}  // namespace ans
