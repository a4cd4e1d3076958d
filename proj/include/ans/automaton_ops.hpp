#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <queue>
#include <utility>
#include <vector>

#include "ans/automaton.hpp"
#include "ans/errors.hpp"

namespace ans {

/// Subset construction. Only subsets reachable from the initial set are
/// materialized; the empty subset is never stored — transitions into it
/// are simply left undefined (partial-DFA semantics).
inline Dfa determinize(const Nfa& n) {
    const OrderedAlphabet& ab = n.alphabet();
    std::map<std::vector<State>, State> id;
    std::vector<std::vector<State>> subsets;
    std::vector<std::vector<State>> delta;  // per subset, per letter

    std::vector<State> start(n.initials());
    id[start] = 0;
    subsets.push_back(start);
    for (std::size_t done = 0; done < subsets.size(); ++done) {
        std::vector<State> row(ab.size(), kNoState);
        for (std::size_t a = 0; a < ab.size(); ++a) {
            std::vector<bool> mark(n.num_states(), false);
            for (State s : subsets[done])
                for (State t : n.targets(s, a)) mark[t] = true;
            std::vector<State> next;
            for (State t = 0; t < n.num_states(); ++t)
                if (mark[t]) next.push_back(t);
            if (next.empty()) continue;
            auto [it, fresh] = id.try_emplace(next, static_cast<State>(subsets.size()));
            if (fresh) subsets.push_back(next);
            row[a] = it->second;
        }
        delta.push_back(std::move(row));
    }

    Dfa out(ab, static_cast<State>(subsets.size()), 0);
    for (State s = 0; s < out.num_states(); ++s) {
        for (std::size_t a = 0; a < ab.size(); ++a)
            if (delta[s][a] != kNoState) out.set_transition(s, ab.letter(a), delta[s][a]);
        for (State q : subsets[s])
            if (n.is_final(q)) {
                out.set_final(s);
                break;
            }
    }
    return out;
}

namespace detail {

/// BFS renumbering of a partial DFA from its initial state, expanding
/// letters in alphabet order. Unreachable states must not exist.
inline Dfa bfs_renumber(const Dfa& d) {
    const OrderedAlphabet& ab = d.alphabet();
    std::vector<State> order(d.num_states(), kNoState);
    std::vector<State> queue;
    order[d.initial()] = 0;
    queue.push_back(d.initial());
    for (std::size_t i = 0; i < queue.size(); ++i) {
        for (std::size_t a = 0; a < ab.size(); ++a) {
            State t = d.next(queue[i], a);
            if (t != kNoState && order[t] == kNoState) {
                order[t] = static_cast<State>(queue.size());
                queue.push_back(t);
            }
        }
    }
    Dfa out(ab, static_cast<State>(queue.size()), 0);
    for (State s : queue) {
        if (d.is_final(s)) out.set_final(order[s]);
        for (std::size_t a = 0; a < ab.size(); ++a) {
            State t = d.next(s, a);
            if (t != kNoState) out.set_transition(order[s], ab.letter(a), order[t]);
        }
    }
    return out;
}

}  // namespace detail

/// Canonical minimal partial DFA: trim, Moore refinement (an implicit
/// sink class absorbs missing transitions), quotient, then breadth-first
/// renumbering with letters in alphabet order. The empty language yields
/// the one-state non-final DFA with no transitions.
inline Dfa minimize(const Dfa& d) {
    const OrderedAlphabet& ab = d.alphabet();

    // Trim: keep useful states (accessible and co-accessible).
    Nfa trimmed_nfa = d.as_nfa().trimmed();
    if (trimmed_nfa.num_states() == 0) return Dfa(ab, 1, 0);
    Dfa t(ab, trimmed_nfa.num_states(), trimmed_nfa.initials().front());
    for (State s = 0; s < t.num_states(); ++s) {
        if (trimmed_nfa.is_final(s)) t.set_final(s);
        for (std::size_t a = 0; a < ab.size(); ++a) {
            const auto& ts = trimmed_nfa.targets(s, a);
            if (!ts.empty()) t.set_transition(s, ab.letter(a), ts.front());
        }
    }

    // Moore refinement. Class 0 is reserved for the implicit sink, so a
    // present and a missing transition can never look alike.
    std::vector<std::uint32_t> cls(t.num_states());
    for (State s = 0; s < t.num_states(); ++s) cls[s] = t.is_final(s) ? 2 : 1;
    std::uint32_t num_classes = 0;  // forces at least one refinement round
    for (;;) {
        std::map<std::vector<std::uint32_t>, std::uint32_t> sig_id;
        std::vector<std::uint32_t> next_cls(t.num_states());
        for (State s = 0; s < t.num_states(); ++s) {
            std::vector<std::uint32_t> sig;
            sig.reserve(ab.size() + 1);
            sig.push_back(cls[s]);
            for (std::size_t a = 0; a < ab.size(); ++a) {
                State to = t.next(s, a);
                sig.push_back(to == kNoState ? 0 : cls[to]);
            }
            auto [it, fresh] = sig_id.try_emplace(std::move(sig),
                                                  static_cast<std::uint32_t>(sig_id.size() + 1));
            next_cls[s] = it->second;
        }
        std::uint32_t n = static_cast<std::uint32_t>(sig_id.size() + 1);
        cls.swap(next_cls);
        if (n == num_classes) break;
        num_classes = n;
    }

    // Quotient on class representatives.
    std::map<std::uint32_t, State> rep;  // class -> quotient state
    for (State s = 0; s < t.num_states(); ++s) rep.try_emplace(cls[s], 0);
    State next_id = 0;
    for (auto& [c, q] : rep) q = next_id++;
    Dfa quot(ab, static_cast<State>(rep.size()), rep.at(cls[t.initial()]));
    for (State s = 0; s < t.num_states(); ++s) {
        State q = rep.at(cls[s]);
        if (t.is_final(s)) quot.set_final(q);
        for (std::size_t a = 0; a < ab.size(); ++a) {
            State to = t.next(s, a);
            if (to != kNoState) quot.set_transition(q, ab.letter(a), rep.at(cls[to]));
        }
    }
    return detail::bfs_renumber(quot);
}

/// Whether two DFAs over the same alphabet accept the same language.
inline bool same_language(const Dfa& a, const Dfa& b) {
    if (!(a.alphabet() == b.alphabet()))
        throw ParseError("language comparison across different alphabets");
    return minimize(a) == minimize(b);
}

/// Unambiguity via the self-product: the automaton is ambiguous iff the
/// accessible/co-accessible part of the product contains an off-diagonal
/// pair. The input is trimmed first so useless states cannot mislead.
inline bool is_unambiguous(const Nfa& n) {
    Nfa t = n.trimmed();
    const OrderedAlphabet& ab = t.alphabet();
    State k = t.num_states();
    if (k == 0) return true;

    auto pair_id = [k](State p, State q) {
        return static_cast<std::size_t>(p) * k + q;
    };
    Nfa product(ab, static_cast<State>(static_cast<std::size_t>(k) * k));
    for (State p : t.initials())
        for (State q : t.initials()) product.add_initial(static_cast<State>(pair_id(p, q)));
    for (State p : t.finals())
        for (State q : t.finals()) product.add_final(static_cast<State>(pair_id(p, q)));
    for (State p = 0; p < k; ++p)
        for (State q = 0; q < k; ++q)
            for (std::size_t a = 0; a < ab.size(); ++a)
                for (State pp : t.targets(p, a))
                    for (State qq : t.targets(q, a))
                        product.add_transition(static_cast<State>(pair_id(p, q)), ab.letter(a),
                                               static_cast<State>(pair_id(pp, qq)));

    std::vector<bool> fwd = product.accessible();
    std::vector<bool> bwd = product.coaccessible();
    for (State p = 0; p < k; ++p)
        for (State q = 0; q < k; ++q)
            if (p != q && fwd[pair_id(p, q)] && bwd[pair_id(p, q)]) return false;
    return true;
}

/// Whether the accepted language is infinite: the trim part has a cycle.
inline bool is_infinite(const Nfa& n) {
    Nfa t = n.trimmed();
    State k = t.num_states();
    // Iterative three-color DFS over every useful state.
    std::vector<int> color(k, 0);  // 0 white, 1 on stack, 2 done
    for (State root = 0; root < k; ++root) {
        if (color[root] != 0) continue;
        std::vector<std::pair<State, std::size_t>> stack{{root, 0}};
        color[root] = 1;
        while (!stack.empty()) {
            auto& [s, edge] = stack.back();
            // Flatten (letter, target-index) into one edge counter.
            std::size_t a = 0, skipped = edge;
            State next_state = kNoState;
            for (; a < t.alphabet().size(); ++a) {
                const auto& ts = t.targets(s, a);
                if (skipped < ts.size()) {
                    next_state = ts[skipped];
                    break;
                }
                skipped -= ts.size();
            }
            if (next_state == kNoState) {
                color[s] = 2;
                stack.pop_back();
                continue;
            }
            ++edge;
            if (color[next_state] == 1) return true;
            if (color[next_state] == 0) {
                color[next_state] = 1;
                stack.emplace_back(next_state, 0);
            }
        }
    }
    return false;
}

inline bool is_infinite(const Dfa& d) { return is_infinite(d.as_nfa()); }

/// Whether the accepted language is empty: trim leaves nothing.
inline bool is_empty_language(const Nfa& n) { return n.trimmed().num_states() == 0; }
inline bool is_empty_language(const Dfa& d) { return is_empty_language(d.as_nfa()); }

/// Product of two partial DFAs under a Boolean combination of their
/// acceptance (union, intersection, difference...). A run that has fallen
/// off one operand continues in an implicit sink so the other operand can
/// still decide; pairs where both sides are sunk are dropped.
inline Dfa dfa_combine(const Dfa& a, const Dfa& b, const std::function<bool(bool, bool)>& keep) {
    if (!(a.alphabet() == b.alphabet()))
        throw ParseError("boolean combination across different alphabets");
    const OrderedAlphabet& ab = a.alphabet();

    using Pair = std::pair<State, State>;  // kNoState marks the sunk side
    std::map<Pair, State> id;
    std::vector<Pair> pairs;
    Pair start{a.initial(), b.initial()};
    id[start] = 0;
    pairs.push_back(start);
    std::vector<std::vector<State>> delta;
    for (std::size_t done = 0; done < pairs.size(); ++done) {
        auto [p, q] = pairs[done];
        std::vector<State> row(ab.size(), kNoState);
        for (std::size_t x = 0; x < ab.size(); ++x) {
            State pp = (p == kNoState) ? kNoState : a.next(p, x);
            State qq = (q == kNoState) ? kNoState : b.next(q, x);
            if (pp == kNoState && qq == kNoState) continue;
            Pair np{pp, qq};
            auto [it, fresh] = id.try_emplace(np, static_cast<State>(pairs.size()));
            if (fresh) pairs.push_back(np);
            row[x] = it->second;
        }
        delta.push_back(std::move(row));
    }

    Dfa out(ab, static_cast<State>(pairs.size()), 0);
    for (State s = 0; s < out.num_states(); ++s) {
        auto [p, q] = pairs[s];
        bool fa = p != kNoState && a.is_final(p);
        bool fb = q != kNoState && b.is_final(q);
        if (keep(fa, fb)) out.set_final(s);
        for (std::size_t x = 0; x < ab.size(); ++x)
            if (delta[s][x] != kNoState) out.set_transition(s, ab.letter(x), delta[s][x]);
    }
    return out;
}

inline Dfa dfa_union(const Dfa& a, const Dfa& b) {
    return dfa_combine(a, b, [](bool x, bool y) { return x || y; });
}

inline Dfa dfa_intersection(const Dfa& a, const Dfa& b) {
    return dfa_combine(a, b, [](bool x, bool y) { return x && y; });
}

inline Dfa dfa_difference(const Dfa& a, const Dfa& b) {
    return dfa_combine(a, b, [](bool x, bool y) { return x && !y; });
}

/// Trie of an explicit finite word set, as a partial DFA.
inline Dfa dfa_from_words(const std::vector<Word>& words, const OrderedAlphabet& alphabet) {
    std::vector<std::vector<State>> delta(1, std::vector<State>(alphabet.size(), kNoState));
    std::vector<bool> final_(1, false);
    for (const Word& w : words) {
        State s = 0;
        for (char c : w) {
            std::size_t a = alphabet.index_of(c);
            if (delta[s][a] == kNoState) {
                delta[s][a] = static_cast<State>(delta.size());
                delta.push_back(std::vector<State>(alphabet.size(), kNoState));
                final_.push_back(false);
            }
            s = delta[s][a];
        }
        final_[s] = true;
    }
    Dfa out(alphabet, static_cast<State>(delta.size()), 0);
    for (State s = 0; s < out.num_states(); ++s) {
        if (final_[s]) out.set_final(s);
        for (std::size_t a = 0; a < alphabet.size(); ++a)
            if (delta[s][a] != kNoState) out.set_transition(s, alphabet.letter(a), delta[s][a]);
    }
    return out;
}

}  // namespace ans
