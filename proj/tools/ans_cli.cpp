// Command-line front end: define a numeration system from a regex or an
// automaton file, then rank/unrank/enumerate, build the enumerating
// series, construct congruence recognizers, and run the series decision.
//
// Exit codes: 0 success (or YES), 2 domain-negative (word not in the
// language, decision NO), 1 usage or input errors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ans/ans.hpp"

namespace {

struct SourceOpts {
    std::string regex;
    std::string alphabet;
    std::string automaton_path;
};

void add_source_options(CLI::App* cmd, SourceOpts& s) {
    auto* regex = cmd->add_option("--regex", s.regex, "language as a regular expression");
    auto* alphabet =
        cmd->add_option("--alphabet", s.alphabet, "ordered alphabet, e.g. ab means a<b");
    auto* file = cmd->add_option("--automaton", s.automaton_path, "language as an automaton file");
    regex->needs(alphabet);
    file->excludes(regex);
    file->excludes(alphabet);
}

ans::Nfa load_nfa(const SourceOpts& s) {
    if (!s.automaton_path.empty()) return ans::read_automaton_file(s.automaton_path);
    if (!s.regex.empty() || !s.alphabet.empty()) {
        if (s.alphabet.empty()) throw ans::ParseError("--regex needs --alphabet");
        return ans::parse_regex(s.regex, ans::OrderedAlphabet(s.alphabet));
    }
    throw ans::ParseError("no language given: use --regex/--alphabet or --automaton");
}

ans::AnsSystem load_system(const SourceOpts& s) {
    return ans::AnsSystem::from_language(load_nfa(s));
}

/// ε is shown as the token (default: two double quotes) and accepted as
/// input in either spelling.
std::string render_word(const ans::Word& w, const std::string& epsilon) {
    return w.empty() ? epsilon : w;
}

ans::Word parse_word(const std::string& text, const std::string& epsilon) {
    if (text == epsilon || text == "\"\"") return ans::Word();
    return text;
}

ans::Integer parse_natural(const std::string& text) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
        throw ans::ParseError("expected a natural number, got \"" + text + "\"");
    return ans::Integer(text);
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw ans::ParseError("cannot write file \"" + path + "\"");
    out << content;
}

std::string vector_row(const ans::RowVector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (i > 0) out += ",";
        out += v.at(i).to_string();
    }
    return out + ")";
}

int cmd_value(const SourceOpts& src, const std::string& word_text, bool trace,
              const std::string& epsilon) {
    ans::AnsSystem sys = load_system(src);
    ans::Word w = parse_word(word_text, epsilon);
    if (trace) {
        ans::ValueTrace t;
        try {
            t = sys.value_trace(w);
        } catch (const ans::ForeignLetterError& e) {
            std::cerr << "not in language: " << e.what() << "\n";
            return 2;
        }
        std::cout << "i\ta\talpha\tbeta\tgamma\n";
        for (const ans::ValueStep& step : t.steps) {
            std::cout << step.index << '\t' << (step.letter ? std::string(1, *step.letter) : "")
                      << '\t' << vector_row(step.alpha) << '\t' << vector_row(step.beta) << '\t'
                      << vector_row(step.gamma) << '\n';
        }
        if (!t.in_language) {
            std::cout << "not in language\n";
            return 2;
        }
        std::cout << "value: " << *t.value << '\n';
        return 0;
    }
    try {
        std::cout << sys.value(w) << '\n';
    } catch (const ans::NotInLanguageError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const ans::ForeignLetterError& e) {
        std::cerr << "not in language: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

int cmd_repr(const SourceOpts& src, const std::string& n_text, const std::string& epsilon) {
    ans::AnsSystem sys = load_system(src);
    std::cout << render_word(sys.representation(parse_natural(n_text)), epsilon) << '\n';
    return 0;
}

int cmd_enum(const SourceOpts& src, const std::string& start_text, std::uint64_t count,
             const std::string& epsilon) {
    ans::AnsSystem sys = load_system(src);
    for (const ans::Word& w : sys.enumerate(parse_natural(start_text), count))
        std::cout << render_word(w, epsilon) << '\n';
    return 0;
}

int cmd_series_build(const SourceOpts& src, const std::string& out_path) {
    ans::AnsSystem sys = load_system(src);
    ans::EnumeratorRep e = ans::enumerating_series(sys);
    std::cout << "dimension: " << e.pre_trim_dimension() << '\n';
    if (!out_path.empty()) write_text_file(out_path, ans::write_series(e.final_rep()));
    return 0;
}

int cmd_series_coeff(const SourceOpts& src, const std::string& series_path,
                     const std::string& word_text, const std::string& epsilon) {
    ans::Word w = parse_word(word_text, epsilon);
    std::optional<ans::LinearRepresentation> rep;
    if (!series_path.empty()) {
        if (!src.regex.empty() || !src.automaton_path.empty())
            throw ans::ParseError("give either a language source or --series, not both");
        rep = ans::read_series_file(series_path);
    } else {
        rep = ans::enumerating_series(load_system(src)).final_rep();
    }
    try {
        std::cout << rep->coefficient(w) << '\n';
    } catch (const ans::ForeignLetterError& e) {
        std::cerr << "not in language: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

int cmd_congruence(const SourceOpts& src, const std::vector<std::uint64_t>& mods,
                   const std::vector<std::uint64_t>& residues,
                   const std::vector<std::uint64_t>& include,
                   const std::vector<std::uint64_t>& exclude, bool minimize_it,
                   const std::string& out_path, const std::string& dot_path) {
    if (mods.size() != residues.size())
        throw ans::ParseError("--mod and --residue must be paired");
    if (mods.empty() && include.empty())
        throw ans::ParseError("nothing to recognize: give --mod/--residue or --include");
    ans::AnsSystem sys = load_system(src);

    ans::Dfa result(sys.alphabet(), 1, 0);
    if (mods.size() == 1 && include.empty() && exclude.empty()) {
        result = ans::congruence_dfa(sys, {mods[0], residues[0]});
        if (minimize_it) result = ans::minimize(result);
    } else {
        ans::RecognizableSetSpec spec;
        for (std::size_t i = 0; i < mods.size(); ++i)
            spec.progressions.push_back({mods[i], residues[i]});
        spec.include.insert(include.begin(), include.end());
        spec.exclude.insert(exclude.begin(), exclude.end());
        result = ans::recognizable_set_dfa(sys, spec);  // minimal by construction
    }
    std::cout << "states: " << result.num_states() << '\n';
    if (!out_path.empty()) write_text_file(out_path, ans::write_automaton(result.as_nfa()));
    if (!dot_path.empty()) write_text_file(dot_path, ans::export_dot(result));
    return 0;
}

int cmd_decide_enum(const std::string& series_path, unsigned depth,
                    const std::string& epsilon) {
    ans::LinearRepresentation rep = ans::read_series_file(series_path);
    ans::EnumDecision d = ans::is_enumerating_series(rep, depth);
    if (d.is_enumerating) {
        std::cout << "YES\n";
        return 0;
    }
    switch (d.reason) {
        case ans::EnumDecision::Reason::EmptySupport:
            std::cout << "NO (empty support)\n";
            break;
        case ans::EnumDecision::Reason::FiniteSupport:
            std::cout << "NO (finite support)\n";
            break;
        case ans::EnumDecision::Reason::CoefficientMismatch:
            std::cout << "NO " << render_word(*d.witness, epsilon) << " expected=" << *d.expected
                      << " actual=" << *d.actual << '\n';
            break;
        case ans::EnumDecision::Reason::MismatchBeyondDepth:
            std::cout << "NO (mismatch beyond depth " << depth << ")\n";
            break;
        case ans::EnumDecision::Reason::ByEquivalence:
            break;  // unreachable on the NO path
    }
    return 2;
}

int cmd_export_dot(const SourceOpts& src, bool raw, const std::string& out_path) {
    std::string dot;
    if (raw) {
        dot = ans::export_dot(load_nfa(src));
    } else {
        dot = ans::export_dot(load_system(src).automaton());
    }
    if (out_path.empty())
        std::cout << dot;
    else
        write_text_file(out_path, dot);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Abstract numeration systems: rank, unrank, enumerate, and decide"};
    app.require_subcommand(1);
    std::string epsilon = "\"\"";
    app.add_option("--epsilon", epsilon, "token that renders the empty word")
        ->capture_default_str();

    SourceOpts value_src, repr_src, enum_src, build_src, coeff_src, cong_src, dot_src;

    auto* value_cmd = app.add_subcommand("value", "rank of a word in the language");
    add_source_options(value_cmd, value_src);
    std::string value_word;
    bool value_trace = false;
    value_cmd->add_option("word", value_word, "the word to rank")->required();
    value_cmd->add_flag("--trace", value_trace, "print the alpha/beta/gamma table");

    auto* repr_cmd = app.add_subcommand("repr", "word representing a natural number");
    add_source_options(repr_cmd, repr_src);
    std::string repr_n;
    repr_cmd->add_option("n", repr_n, "the number to represent")->required();

    auto* enum_cmd = app.add_subcommand("enum", "list consecutive representations");
    add_source_options(enum_cmd, enum_src);
    std::string enum_start;
    std::uint64_t enum_count = 0;
    enum_cmd->add_option("start", enum_start, "first rank")->required();
    enum_cmd->add_option("count", enum_count, "how many words")->required();

    auto* series_cmd = app.add_subcommand("series", "enumerating-series operations");
    series_cmd->require_subcommand(1);
    auto* build_cmd = series_cmd->add_subcommand("build", "construct the enumerating series");
    add_source_options(build_cmd, build_src);
    std::string build_out;
    build_cmd->add_option("--out", build_out, "write the series document here");
    auto* coeff_cmd = series_cmd->add_subcommand("coeff", "coefficient of a word");
    add_source_options(coeff_cmd, coeff_src);
    std::string coeff_series, coeff_word;
    coeff_cmd->add_option("--series", coeff_series, "series document to evaluate");
    coeff_cmd->add_option("word", coeff_word, "the word to look up")->required();

    auto* cong_cmd = app.add_subcommand("congruence", "recognizer of value progressions");
    add_source_options(cong_cmd, cong_src);
    std::vector<std::uint64_t> cong_mods, cong_residues, cong_include, cong_exclude;
    bool cong_minimize = false;
    std::string cong_out, cong_dot;
    cong_cmd->add_option("--mod", cong_mods, "progression modulus (repeatable)");
    cong_cmd->add_option("--residue", cong_residues, "progression residue (repeatable)");
    cong_cmd->add_option("--include", cong_include, "values to add")->delimiter(',');
    cong_cmd->add_option("--exclude", cong_exclude, "values to remove")->delimiter(',');
    cong_cmd->add_flag("--minimize", cong_minimize, "minimize the recognizer");
    cong_cmd->add_option("--out", cong_out, "write the automaton file here");
    cong_cmd->add_option("--dot", cong_dot, "write a DOT rendering here");

    auto* decide_cmd = app.add_subcommand("decide-enum",
                                          "is this series the enumerating series of its support?");
    std::string decide_path;
    unsigned decide_depth = 12;
    decide_cmd->add_option("series", decide_path, "series document")->required();
    decide_cmd->add_option("--depth", decide_depth, "witness search depth")
        ->capture_default_str();

    auto* dot_cmd = app.add_subcommand("export-dot", "emit the system's automaton as DOT");
    add_source_options(dot_cmd, dot_src);
    bool dot_raw = false;
    std::string dot_out;
    dot_cmd->add_flag("--raw", dot_raw, "export the input automaton, not the minimal DFA");
    dot_cmd->add_option("--out", dot_out, "write here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (value_cmd->parsed()) return cmd_value(value_src, value_word, value_trace, epsilon);
        if (repr_cmd->parsed()) return cmd_repr(repr_src, repr_n, epsilon);
        if (enum_cmd->parsed()) return cmd_enum(enum_src, enum_start, enum_count, epsilon);
        if (build_cmd->parsed()) return cmd_series_build(build_src, build_out);
        if (coeff_cmd->parsed())
            return cmd_series_coeff(coeff_src, coeff_series, coeff_word, epsilon);
        if (cong_cmd->parsed())
            return cmd_congruence(cong_src, cong_mods, cong_residues, cong_include,
                                  cong_exclude, cong_minimize, cong_out, cong_dot);
        if (decide_cmd->parsed()) return cmd_decide_enum(decide_path, decide_depth, epsilon);
        if (dot_cmd->parsed()) return cmd_export_dot(dot_src, dot_raw, dot_out);
    } catch (const ans::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
