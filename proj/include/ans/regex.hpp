#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "ans/alphabet.hpp"
#include "ans/automaton.hpp"
#include "ans/errors.hpp"

namespace ans {
namespace detail {

/// Syntax tree for the minimal regex dialect: literals, concatenation,
/// `|`, `*`, `+`, `?`, parentheses. An empty alternative denotes epsilon.
struct RegexNode {
    enum class Kind { Epsilon, Letter, Cat, Alt, Star, Plus, Opt };
    Kind kind;
    std::size_t pos = 0;    // Letter: position index (1-based, Glushkov style)
    char letter = 0;        // Letter: which letter
    std::size_t left = 0;   // Cat/Alt: children; Star/Plus/Opt: child in `left`
    std::size_t right = 0;
};

class RegexParser {
public:
    RegexParser(const std::string& pattern, const OrderedAlphabet& alphabet)
        : p_(pattern), alphabet_(alphabet) {}

    /// Parses the whole pattern; the root node index is returned.
    std::size_t parse() {
        std::size_t root = parse_alt();
        if (i_ != p_.size())
            throw ParseError(std::string("unexpected '") + p_[i_] + "' in pattern", i_);
        return root;
    }

    const std::vector<RegexNode>& nodes() const { return nodes_; }
    std::size_t position_count() const { return positions_; }
    char letter_at(std::size_t pos1) const { return letter_of_[pos1 - 1]; }

private:
    std::size_t parse_alt() {
        std::size_t node = parse_cat();
        while (i_ < p_.size() && p_[i_] == '|') {
            ++i_;
            std::size_t rhs = parse_cat();
            node = add({RegexNode::Kind::Alt, 0, 0, node, rhs});
        }
        return node;
    }

    std::size_t parse_cat() {
        // An empty concatenation (at a '|', ')' or end) denotes epsilon.
        std::size_t node = kNone;
        while (i_ < p_.size() && p_[i_] != '|' && p_[i_] != ')') {
            std::size_t factor = parse_rep();
            node = (node == kNone) ? factor
                                   : add({RegexNode::Kind::Cat, 0, 0, node, factor});
        }
        if (node == kNone) node = add({RegexNode::Kind::Epsilon, 0, 0, 0, 0});
        return node;
    }

    std::size_t parse_rep() {
        std::size_t node = parse_atom();
        while (i_ < p_.size()) {
            char c = p_[i_];
            if (c == '*')
                node = add({RegexNode::Kind::Star, 0, 0, node, 0});
            else if (c == '+')
                node = add({RegexNode::Kind::Plus, 0, 0, node, 0});
            else if (c == '?')
                node = add({RegexNode::Kind::Opt, 0, 0, node, 0});
            else
                break;
            ++i_;
        }
        return node;
    }

    std::size_t parse_atom() {
        if (i_ >= p_.size()) throw ParseError("pattern ends where a letter or '(' is expected", i_);
        char c = p_[i_];
        if (c == '(') {
            std::size_t open = i_++;
            std::size_t node = parse_alt();
            if (i_ >= p_.size() || p_[i_] != ')')
                throw ParseError("unmatched '('", open);
            ++i_;
            return node;
        }
        if (c == ')' || c == '|' || c == '*' || c == '+' || c == '?')
            throw ParseError(std::string("unexpected '") + c + "' in pattern", i_);
        if (!alphabet_.contains(c))
            throw ForeignLetterError(std::string("letter '") + c + "' at position " +
                                     std::to_string(i_) + " is not in alphabet \"" +
                                     alphabet_.letters() + "\"");
        ++i_;
        std::size_t pos = ++positions_;
        letter_of_.push_back(c);
        return add({RegexNode::Kind::Letter, pos, c, 0, 0});
    }

    std::size_t add(RegexNode n) {
        nodes_.push_back(n);
        return nodes_.size() - 1;
    }

    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

    const std::string& p_;
    const OrderedAlphabet& alphabet_;
    std::size_t i_ = 0;
    std::vector<RegexNode> nodes_;
    std::size_t positions_ = 0;
    std::vector<char> letter_of_;  // indexed pos-1
};

/// Glushkov analysis: nullability plus first/last/follow position sets.
class GlushkovSets {
public:
    GlushkovSets(const std::vector<RegexNode>& nodes, std::size_t positions, std::size_t root)
        : nodes_(nodes),
          nullable_(nodes.size(), false),
          done_(nodes.size(), false),
          first_(nodes.size()),
          last_(nodes.size()),
          follow_(positions + 1),
          root_(root) {
        analyze(root);
    }

    bool nullable(std::size_t n) const { return nullable_[n]; }
    const std::set<std::size_t>& first(std::size_t n) const { return first_[n]; }
    const std::set<std::size_t>& last(std::size_t n) const { return last_[n]; }
    const std::set<std::size_t>& follow(std::size_t pos) const { return follow_[pos]; }
    std::size_t root() const { return root_; }

private:
    void analyze(std::size_t n) {
        if (done_[n]) return;
        const RegexNode& node = nodes_[n];
        using K = RegexNode::Kind;
        switch (node.kind) {
            case K::Epsilon:
                nullable_[n] = true;
                break;
            case K::Letter:
                nullable_[n] = false;
                first_[n] = {node.pos};
                last_[n] = {node.pos};
                break;
            case K::Cat: {
                analyze(node.left);
                analyze(node.right);
                nullable_[n] = nullable_[node.left] && nullable_[node.right];
                first_[n] = first_[node.left];
                if (nullable_[node.left])
                    first_[n].insert(first_[node.right].begin(), first_[node.right].end());
                last_[n] = last_[node.right];
                if (nullable_[node.right])
                    last_[n].insert(last_[node.left].begin(), last_[node.left].end());
                for (std::size_t p : last_[node.left])
                    follow_[p].insert(first_[node.right].begin(), first_[node.right].end());
                break;
            }
            case K::Alt: {
                analyze(node.left);
                analyze(node.right);
                nullable_[n] = nullable_[node.left] || nullable_[node.right];
                first_[n] = first_[node.left];
                first_[n].insert(first_[node.right].begin(), first_[node.right].end());
                last_[n] = last_[node.left];
                last_[n].insert(last_[node.right].begin(), last_[node.right].end());
                break;
            }
            case K::Star:
            case K::Plus:
            case K::Opt: {
                analyze(node.left);
                nullable_[n] = (node.kind != K::Plus) || nullable_[node.left];
                first_[n] = first_[node.left];
                last_[n] = last_[node.left];
                if (node.kind != K::Opt)
                    for (std::size_t p : last_[node.left])
                        follow_[p].insert(first_[node.left].begin(), first_[node.left].end());
                break;
            }
        }
        done_[n] = true;
    }

    const std::vector<RegexNode>& nodes_;
    std::vector<bool> nullable_;
    std::vector<bool> done_;
    std::vector<std::set<std::size_t>> first_, last_;
    std::vector<std::set<std::size_t>> follow_;
    std::size_t root_ = 0;
};

}  // namespace detail

/// Compiles a pattern to an epsilon-free NFA by the position (Glushkov)
/// construction: state 0 is the start, state p > 0 stands for the p-th
/// letter occurrence of the pattern.
inline Nfa parse_regex(const std::string& pattern, const OrderedAlphabet& alphabet) {
    detail::RegexParser parser(pattern, alphabet);
    std::size_t root = parser.parse();
    detail::GlushkovSets sets(parser.nodes(), parser.position_count(), root);

    Nfa nfa(alphabet, static_cast<State>(parser.position_count() + 1));
    nfa.add_initial(0);
    if (sets.nullable(root)) nfa.add_final(0);
    for (std::size_t p : sets.last(root)) nfa.add_final(static_cast<State>(p));
    for (std::size_t p : sets.first(root))
        nfa.add_transition(0, parser.letter_at(p), static_cast<State>(p));
    for (std::size_t p = 1; p <= parser.position_count(); ++p)
        for (std::size_t q : sets.follow(p))
            nfa.add_transition(static_cast<State>(p), parser.letter_at(q), static_cast<State>(q));
    return nfa;
}

}  // namespace ans
