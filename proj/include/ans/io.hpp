#pragma once

#include <cstddef>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ans/alphabet.hpp"
#include "ans/automaton.hpp"
#include "ans/errors.hpp"
#include "ans/linalg.hpp"
#include "ans/representation.hpp"
#include "ans/scalar.hpp"

namespace ans {
namespace detail {

inline std::string trim_copy(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

inline unsigned long parse_state_number(const std::string& tok, std::size_t line_no) {
    try {
        std::size_t used = 0;
        unsigned long v = std::stoul(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line_no) + ": expected a state number, got \"" +
                         tok + "\"", line_no);
    }
}

}  // namespace detail

/// Reads the automaton text format:
///   alphabet: a b        # listing order = total order
///   states: 2
///   initial: 0
///   final: 0
///   trans: 0 a 0 | 0 b 1 | 1 a 1 | 1 b 0
/// '#' starts a comment; initial/final/trans lines may repeat (merged).
inline Nfa read_automaton(const std::string& text) {
    std::vector<std::pair<std::string, std::string>> entries;  // (key, value)
    std::vector<std::size_t> lines;
    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::string line = detail::trim_copy(raw);
        if (line.empty()) continue;
        std::size_t colon = line.find(':');
        if (colon == std::string::npos)
            throw ParseError("line " + std::to_string(line_no) + ": expected \"key: value\"",
                             line_no);
        entries.emplace_back(detail::trim_copy(line.substr(0, colon)),
                             detail::trim_copy(line.substr(colon + 1)));
        lines.push_back(line_no);
    }

    std::string alphabet_text;
    long states = -1;
    bool saw_alphabet = false;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto& [key, value] = entries[i];
        if (key == "alphabet") {
            if (saw_alphabet)
                throw ParseError("line " + std::to_string(lines[i]) + ": repeated alphabet",
                                 lines[i]);
            saw_alphabet = true;
            for (const std::string& tok : detail::split_ws(value)) {
                if (tok.size() != 1)
                    throw ParseError("line " + std::to_string(lines[i]) +
                                     ": alphabet letters are single characters, got \"" + tok +
                                     "\"", lines[i]);
                alphabet_text += tok;
            }
        } else if (key == "states") {
            if (states >= 0)
                throw ParseError("line " + std::to_string(lines[i]) + ": repeated states",
                                 lines[i]);
            states = static_cast<long>(detail::parse_state_number(value, lines[i]));
        } else if (key != "initial" && key != "final" && key != "trans") {
            throw ParseError("line " + std::to_string(lines[i]) + ": unknown key \"" + key + "\"",
                             lines[i]);
        }
    }
    if (!saw_alphabet) throw ParseError("missing alphabet line");
    if (states < 0) throw ParseError("missing states line");

    OrderedAlphabet alphabet(alphabet_text);
    Nfa nfa(alphabet, static_cast<State>(states));
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto& [key, value] = entries[i];
        if (key == "initial") {
            for (const std::string& tok : detail::split_ws(value))
                nfa.add_initial(
                    static_cast<State>(detail::parse_state_number(tok, lines[i])));
        } else if (key == "final") {
            for (const std::string& tok : detail::split_ws(value))
                nfa.add_final(static_cast<State>(detail::parse_state_number(tok, lines[i])));
        } else if (key == "trans") {
            std::istringstream parts(value);
            std::string part;
            while (std::getline(parts, part, '|')) {
                std::vector<std::string> toks = detail::split_ws(part);
                if (toks.empty()) continue;
                if (toks.size() != 3 || toks[1].size() != 1)
                    throw ParseError("line " + std::to_string(lines[i]) +
                                     ": transition must be \"from letter to\", got \"" +
                                     detail::trim_copy(part) + "\"", lines[i]);
                nfa.add_transition(
                    static_cast<State>(detail::parse_state_number(toks[0], lines[i])),
                    toks[1][0],
                    static_cast<State>(detail::parse_state_number(toks[2], lines[i])));
            }
        }
    }
    return nfa;
}

/// Canonical writer for the automaton text format.
inline std::string write_automaton(const Nfa& nfa) {
    std::ostringstream out;
    out << "alphabet:";
    for (std::size_t a = 0; a < nfa.alphabet().size(); ++a)
        out << ' ' << nfa.alphabet().letter(a);
    out << "\nstates: " << nfa.num_states() << '\n';
    if (!nfa.initials().empty()) {
        out << "initial:";
        for (State s : nfa.initials()) out << ' ' << s;
        out << '\n';
    }
    if (!nfa.finals().empty()) {
        out << "final:";
        for (State s : nfa.finals()) out << ' ' << s;
        out << '\n';
    }
    std::vector<Transition> trans = nfa.transitions();
    if (!trans.empty()) {
        out << "trans: ";
        for (std::size_t i = 0; i < trans.size(); ++i) {
            if (i > 0) out << " | ";
            out << trans[i].from << ' ' << trans[i].letter << ' ' << trans[i].to;
        }
        out << '\n';
    }
    return out.str();
}

inline Nfa read_automaton_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open automaton file \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return read_automaton(buf.str());
}

/// Graphviz view: states in numeric order, parallel edges merged into one
/// arrow with a comma-joined letter list, initials marked by point nodes.
inline std::string export_dot(const Nfa& nfa, const std::string& name = "automaton") {
    std::ostringstream out;
    out << "digraph " << name << " {\n  rankdir=LR;\n";
    for (std::size_t i = 0; i < nfa.initials().size(); ++i)
        out << "  __init" << i << " [shape=point];\n";
    for (State s = 0; s < nfa.num_states(); ++s)
        out << "  " << s << " [shape=" << (nfa.is_final(s) ? "doublecircle" : "circle")
            << "];\n";
    for (std::size_t i = 0; i < nfa.initials().size(); ++i)
        out << "  __init" << i << " -> " << nfa.initials()[i] << ";\n";
    for (State s = 0; s < nfa.num_states(); ++s) {
        std::map<State, std::string> merged;  // target -> letter list
        for (std::size_t a = 0; a < nfa.alphabet().size(); ++a)
            for (State t : nfa.targets(s, a)) {
                std::string& label = merged[t];
                if (!label.empty()) label += ",";
                label += nfa.alphabet().letter(a);
            }
        for (const auto& [t, label] : merged)
            out << "  " << s << " -> " << t << " [label=\"" << label << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

inline std::string export_dot(const Dfa& dfa, const std::string& name = "automaton") {
    return export_dot(dfa.as_nfa(), name);
}

namespace detail {

inline Scalar scalar_from_json(Semiring ring, const nlohmann::ordered_json& v,
                               const std::string& where) {
    if (v.is_string()) return Scalar::parse(ring, v.get<std::string>());
    if (v.is_number_integer())
        return Scalar::parse(ring, std::to_string(v.get<long long>()));
    throw ParseError(where + ": expected an exact number as a decimal string");
}

}  // namespace detail

/// Reads the series exchange document: semiring, dimension, alphabet
/// (ordered), lambda, one matrix per letter, nu — exact values as decimal
/// strings like "3" or "-22/7".
inline LinearRepresentation read_series(const std::string& text) {
    nlohmann::ordered_json doc;
    try {
        doc = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("series document: ") + e.what(), e.byte);
    }
    if (!doc.is_object()) throw ParseError("series document must be a JSON object");
    for (const std::string key : {"semiring", "dimension", "alphabet", "lambda", "mu", "nu"})
        if (!doc.contains(key)) throw ParseError("series document: missing \"" + key + "\"");

    if (!doc["semiring"].is_string())
        throw ParseError("series document: semiring must be a string");
    Semiring ring = semiring_from_name(doc["semiring"].get<std::string>());
    if (!doc["dimension"].is_number_unsigned())
        throw ParseError("series document: dimension must be a non-negative integer");
    std::size_t d = doc["dimension"].get<std::size_t>();
    if (!doc["alphabet"].is_string())
        throw ParseError("series document: alphabet must be a string of letters");
    OrderedAlphabet alphabet(doc["alphabet"].get<std::string>());

    auto read_vector = [&](const nlohmann::ordered_json& arr, const std::string& where) {
        if (!arr.is_array() || arr.size() != d)
            throw ParseError(where + ": expected an array of " + std::to_string(d) + " entries");
        std::vector<Scalar> out;
        out.reserve(d);
        for (std::size_t i = 0; i < d; ++i)
            out.push_back(detail::scalar_from_json(ring, arr[i], where));
        return out;
    };

    RowVector lambda(ring, read_vector(doc["lambda"], "lambda"));
    ColVector nu(ring, read_vector(doc["nu"], "nu"));

    if (!doc["mu"].is_object()) throw ParseError("series document: mu must be an object");
    for (const auto& [key, value] : doc["mu"].items()) {
        if (key.size() != 1 || !alphabet.contains(key[0]))
            throw ParseError("mu: \"" + key + "\" is not a letter of the alphabet");
        (void)value;
    }
    std::vector<Matrix> mu;
    mu.reserve(alphabet.size());
    for (std::size_t a = 0; a < alphabet.size(); ++a) {
        std::string letter(1, alphabet.letter(a));
        if (!doc["mu"].contains(letter))
            throw ParseError("mu: missing matrix for letter \"" + letter + "\"");
        const auto& rows = doc["mu"][letter];
        if (!rows.is_array() || rows.size() != d)
            throw ParseError("mu[" + letter + "]: expected " + std::to_string(d) + " rows");
        Matrix m(ring, d, d);
        for (std::size_t i = 0; i < d; ++i) {
            if (!rows[i].is_array() || rows[i].size() != d)
                throw ParseError("mu[" + letter + "] row " + std::to_string(i) + ": expected " +
                                 std::to_string(d) + " entries");
            for (std::size_t j = 0; j < d; ++j)
                m.set(i, j, detail::scalar_from_json(ring, rows[i][j],
                                                     "mu[" + letter + "]"));
        }
        mu.push_back(std::move(m));
    }
    return LinearRepresentation(ring, alphabet, std::move(lambda), std::move(mu),
                                std::move(nu));
}

inline std::string write_series(const LinearRepresentation& rep) {
    nlohmann::ordered_json doc;
    doc["semiring"] = semiring_name(rep.ring());
    doc["dimension"] = rep.dimension();
    doc["alphabet"] = rep.alphabet().letters();
    nlohmann::ordered_json lambda = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < rep.dimension(); ++i)
        lambda.push_back(rep.lambda().at(i).to_string());
    doc["lambda"] = std::move(lambda);
    nlohmann::ordered_json mu = nlohmann::ordered_json::object();
    for (std::size_t a = 0; a < rep.alphabet().size(); ++a) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < rep.dimension(); ++i) {
            nlohmann::ordered_json row = nlohmann::ordered_json::array();
            for (std::size_t j = 0; j < rep.dimension(); ++j)
                row.push_back(rep.mu(a).at(i, j).to_string());
            rows.push_back(std::move(row));
        }
        mu[std::string(1, rep.alphabet().letter(a))] = std::move(rows);
    }
    doc["mu"] = std::move(mu);
    nlohmann::ordered_json nu = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < rep.dimension(); ++i)
        nu.push_back(rep.nu().at(i).to_string());
    doc["nu"] = std::move(nu);
    return doc.dump(2) + "\n";
}

inline LinearRepresentation read_series_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open series file \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return read_series(buf.str());
}

}  // namespace ans
