#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "ans/alphabet.hpp"
#include "ans/errors.hpp"

namespace ans {

using State = std::uint32_t;

/// Sentinel for a missing transition in a (possibly partial) DFA.
inline constexpr State kNoState = std::numeric_limits<State>::max();

struct Transition {
    State from;
    char letter;
    State to;
};

/// Nondeterministic finite automaton without epsilon transitions.
/// Per-(state, letter) target lists are kept sorted and duplicate-free.
class Nfa {
public:
    Nfa(OrderedAlphabet alphabet, State num_states)
        : alphabet_(std::move(alphabet)),
          num_states_(num_states),
          delta_(static_cast<std::size_t>(num_states) * alphabet_.size()) {}

    const OrderedAlphabet& alphabet() const { return alphabet_; }
    State num_states() const { return num_states_; }

    void add_initial(State s) {
        check_state(s);
        insert_sorted(initials_, s);
    }

    void add_final(State s) {
        check_state(s);
        insert_sorted(finals_, s);
    }

    void add_transition(State from, char letter, State to) {
        check_state(from);
        check_state(to);
        insert_sorted(delta_[cell(from, alphabet_.index_of(letter))], to);
    }

    const std::vector<State>& initials() const { return initials_; }
    const std::vector<State>& finals() const { return finals_; }

    const std::vector<State>& targets(State from, std::size_t letter_index) const {
        check_state(from);
        if (letter_index >= alphabet_.size())
            throw DimensionError("letter index out of range");
        return delta_[cell(from, letter_index)];
    }

    bool is_initial(State s) const { return std::binary_search(initials_.begin(), initials_.end(), s); }
    bool is_final(State s) const { return std::binary_search(finals_.begin(), finals_.end(), s); }

    bool is_deterministic() const {
        if (initials_.size() != 1) return false;
        for (const auto& t : delta_)
            if (t.size() > 1) return false;
        return true;
    }

    std::size_t transition_count() const {
        std::size_t n = 0;
        for (const auto& t : delta_) n += t.size();
        return n;
    }

    std::vector<Transition> transitions() const {
        std::vector<Transition> out;
        out.reserve(transition_count());
        for (State s = 0; s < num_states_; ++s)
            for (std::size_t a = 0; a < alphabet_.size(); ++a)
                for (State t : delta_[cell(s, a)])
                    out.push_back({s, alphabet_.letter(a), t});
        return out;
    }

    /// Membership by subset simulation; foreign letters are an error,
    /// not a rejection.
    bool accepts(const Word& w) const {
        std::vector<bool> cur(num_states_, false);
        for (State s : initials_) cur[s] = true;
        for (char c : w) {
            std::size_t a = alphabet_.index_of(c);
            std::vector<bool> next(num_states_, false);
            for (State s = 0; s < num_states_; ++s)
                if (cur[s])
                    for (State t : delta_[cell(s, a)]) next[t] = true;
            cur.swap(next);
        }
        for (State s : finals_)
            if (cur[s]) return true;
        return false;
    }

    /// States reachable from the initials.
    std::vector<bool> accessible() const {
        std::vector<bool> seen(num_states_, false);
        std::vector<State> stack(initials_.begin(), initials_.end());
        for (State s : stack) seen[s] = true;
        while (!stack.empty()) {
            State s = stack.back();
            stack.pop_back();
            for (std::size_t a = 0; a < alphabet_.size(); ++a)
                for (State t : delta_[cell(s, a)])
                    if (!seen[t]) {
                        seen[t] = true;
                        stack.push_back(t);
                    }
        }
        return seen;
    }

    /// States from which some final state is reachable.
    std::vector<bool> coaccessible() const {
        // Reverse adjacency, then BFS from the finals.
        std::vector<std::vector<State>> rev(num_states_);
        for (State s = 0; s < num_states_; ++s)
            for (std::size_t a = 0; a < alphabet_.size(); ++a)
                for (State t : delta_[cell(s, a)]) rev[t].push_back(s);
        std::vector<bool> seen(num_states_, false);
        std::vector<State> stack(finals_.begin(), finals_.end());
        for (State s : stack) seen[s] = true;
        while (!stack.empty()) {
            State s = stack.back();
            stack.pop_back();
            for (State t : rev[s])
                if (!seen[t]) {
                    seen[t] = true;
                    stack.push_back(t);
                }
        }
        return seen;
    }

    /// Restriction to accessible and co-accessible states, renumbered in
    /// their original relative order.
    Nfa trimmed() const {
        std::vector<bool> fwd = accessible();
        std::vector<bool> bwd = coaccessible();
        std::vector<State> map(num_states_, kNoState);
        State next = 0;
        for (State s = 0; s < num_states_; ++s)
            if (fwd[s] && bwd[s]) map[s] = next++;
        Nfa out(alphabet_, next);
        for (State s : initials_)
            if (map[s] != kNoState) out.add_initial(map[s]);
        for (State s : finals_)
            if (map[s] != kNoState) out.add_final(map[s]);
        for (State s = 0; s < num_states_; ++s) {
            if (map[s] == kNoState) continue;
            for (std::size_t a = 0; a < alphabet_.size(); ++a)
                for (State t : delta_[cell(s, a)])
                    if (map[t] != kNoState)
                        out.add_transition(map[s], alphabet_.letter(a), map[t]);
        }
        return out;
    }

private:
    void check_state(State s) const {
        if (s >= num_states_)
            throw DimensionError("state " + std::to_string(s) + " out of range (" +
                                 std::to_string(num_states_) + " states)");
    }

    static void insert_sorted(std::vector<State>& v, State s) {
        auto it = std::lower_bound(v.begin(), v.end(), s);
        if (it == v.end() || *it != s) v.insert(it, s);
    }

    std::size_t cell(State s, std::size_t a) const {
        return static_cast<std::size_t>(s) * alphabet_.size() + a;
    }

    OrderedAlphabet alphabet_;
    State num_states_;
    std::vector<std::vector<State>> delta_;
    std::vector<State> initials_;
    std::vector<State> finals_;
};

/// Deterministic finite automaton, possibly partial: a missing transition
/// (kNoState) rejects. No sink completion is ever added.
class Dfa {
public:
    Dfa(OrderedAlphabet alphabet, State num_states, State initial)
        : alphabet_(std::move(alphabet)),
          num_states_(num_states),
          initial_(initial),
          delta_(static_cast<std::size_t>(num_states) * alphabet_.size(), kNoState),
          final_(num_states, false) {
        check_state(initial);
    }

    const OrderedAlphabet& alphabet() const { return alphabet_; }
    State num_states() const { return num_states_; }
    State initial() const { return initial_; }

    void set_transition(State from, char letter, State to) {
        check_state(from);
        check_state(to);
        delta_[cell(from, alphabet_.index_of(letter))] = to;
    }

    void set_final(State s, bool f = true) {
        check_state(s);
        final_[s] = f;
    }

    bool is_final(State s) const {
        check_state(s);
        return final_[s];
    }

    /// Target of (from, letter), or kNoState if undefined.
    State next(State from, std::size_t letter_index) const {
        check_state(from);
        if (letter_index >= alphabet_.size())
            throw DimensionError("letter index out of range");
        return delta_[cell(from, letter_index)];
    }

    bool accepts(const Word& w) const {
        State s = initial_;
        for (char c : w) {
            s = delta_[cell(s, alphabet_.index_of(c))];
            if (s == kNoState) return false;
        }
        return final_[s];
    }

    std::vector<State> finals() const {
        std::vector<State> out;
        for (State s = 0; s < num_states_; ++s)
            if (final_[s]) out.push_back(s);
        return out;
    }

    std::size_t transition_count() const {
        std::size_t n = 0;
        for (State t : delta_)
            if (t != kNoState) ++n;
        return n;
    }

    Nfa as_nfa() const {
        Nfa out(alphabet_, num_states_);
        out.add_initial(initial_);
        for (State s = 0; s < num_states_; ++s) {
            if (final_[s]) out.add_final(s);
            for (std::size_t a = 0; a < alphabet_.size(); ++a) {
                State t = delta_[cell(s, a)];
                if (t != kNoState) out.add_transition(s, alphabet_.letter(a), t);
            }
        }
        return out;
    }

    bool operator==(const Dfa& o) const {
        return alphabet_ == o.alphabet_ && num_states_ == o.num_states_ &&
               initial_ == o.initial_ && delta_ == o.delta_ && final_ == o.final_;
    }

private:
    void check_state(State s) const {
        if (s >= num_states_)
            throw DimensionError("state " + std::to_string(s) + " out of range (" +
                                 std::to_string(num_states_) + " states)");
    }

    std::size_t cell(State s, std::size_t a) const {
        return static_cast<std::size_t>(s) * alphabet_.size() + a;
    }

    OrderedAlphabet alphabet_;
    State num_states_;
    State initial_;
    std::vector<State> delta_;
    std::vector<bool> final_;
};

}  // namespace ans
