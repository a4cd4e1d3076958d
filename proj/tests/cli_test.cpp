// End-to-end checks of the ans binary: golden outputs, exit codes, and
// the representation/value round trip over every bundled system.
// Usage: cli_test <path-to-ans> <data-dir>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ans/ans.hpp"

namespace {

std::string ans_bin;
std::string data_dir;
std::filesystem::path work_dir;
int failures = 0;

struct RunResult {
    int status;
    std::string out;
};

std::string sh_quote(const std::string& s) {
    std::string out = "'";
    for (char c : s) {
        if (c == '\'')
            out += "'\\''";
        else
            out += c;
    }
    return out + "'";
}

RunResult run(const std::vector<std::string>& args) {
    std::string cmd = sh_quote(ans_bin);
    for (const std::string& a : args) cmd += " " + sh_quote(a);
    cmd += " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int rc = pclose(pipe);
    if (rc == -1 || !WIFEXITED(rc)) return {-1, out};
    return {WEXITSTATUS(rc), out};
}

void check(bool ok, const std::string& what) {
    if (!ok) ++failures;
    std::cout << (ok ? "[ok]  " : "[FAIL] ") << what << "\n";
}

void check_output(const std::vector<std::string>& args, int status, const std::string& out,
                  const std::string& what) {
    RunResult r = run(args);
    bool ok = r.status == status && r.out == out;
    check(ok, what);
    if (!ok)
        std::cout << "       got status " << r.status << ", output:\n" << r.out;
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
}

std::string aut(const std::string& name) { return data_dir + "/" + name; }

std::string temp_file(const std::string& name) { return (work_dir / name).string(); }

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    out << content;
}

const char* kCharSeriesDoc = R"({
  "semiring": "N",
  "dimension": 2,
  "alphabet": "ab",
  "lambda": ["1", "0"],
  "mu": {
    "a": [["1", "0"], ["0", "1"]],
    "b": [["0", "1"], ["1", "0"]]
  },
  "nu": ["1", "0"]
})";

const char* kEpsilonSeriesDoc = R"({
  "semiring": "N",
  "dimension": 1,
  "alphabet": "ab",
  "lambda": ["1"],
  "mu": {"a": [["0"]], "b": [["0"]]},
  "nu": ["1"]
})";

const char* kZeroSeriesDoc = R"({
  "semiring": "N",
  "dimension": 1,
  "alphabet": "ab",
  "lambda": ["0"],
  "mu": {"a": [["1"]], "b": [["1"]]},
  "nu": ["1"]
})";

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: cli_test <path-to-ans> <data-dir>\n";
        return 2;
    }
    ans_bin = argv[1];
    data_dir = argv[2];
    work_dir = std::filesystem::temp_directory_path() / "ans-cli-test";
    std::filesystem::create_directories(work_dir);

    const std::vector<std::string> l1 = {"--automaton", aut("l1.aut")};
    const std::vector<std::string> l1_regex = {"--regex", "(a*ba*b)*a*", "--alphabet", "ab"};

    auto with = [](std::vector<std::string> head, std::vector<std::string> tail) {
        head.insert(head.end(), tail.begin(), tail.end());
        return head;
    };

    // --- value ---------------------------------------------------------
    check_output(with({"value"}, with(l1, {"bbabb"})), 0, "29\n", "value of bbabb is 29");
    check_output(with({"value"}, with(l1_regex, {"bbabb"})), 0, "29\n",
                 "regex source agrees with the automaton file");
    {
        RunResult r = run(with({"value"}, with(l1, {"ba"})));
        check(r.status == 2 && r.out.empty(), "value of a non-member exits 2");
    }
    {
        RunResult r = run(with({"value"}, with(l1, {"abc"})));
        check(r.status == 2, "value of a foreign-letter word exits 2");
    }
    {
        RunResult r = run(with({"value", "--trace"}, with(l1, {"bbabb"})));
        std::vector<std::string> lines = lines_of(r.out);
        check(r.status == 0 && lines.size() == 8, "trace prints header, six rows, value");
        if (lines.size() == 8) {
            check(lines[0] == "i\ta\talpha\tbeta\tgamma", "trace header");
            check(lines[5] == "4\tb\t(0,1)\t(1,0)\t(15,13)", "trace row four");
            check(lines[6] == "5\tb\t(1,0)\t(0,1)\t(29,29)", "trace row five");
            check(lines[7] == "value: 29", "trace value line");
        }
        RunResult miss = run(with({"value", "--trace"}, with(l1, {"ba"})));
        std::vector<std::string> miss_lines = lines_of(miss.out);
        check(miss.status == 2 && !miss_lines.empty() &&
                  miss_lines.back() == "not in language",
              "trace of a non-member still prints the table, exits 2");
    }
    check_output(with({"value"}, with(l1, {"\"\""})), 0, "0\n", "the empty word has value 0");

    // --- repr ----------------------------------------------------------
    check_output(with({"repr"}, with(l1, {"18"})), 0, "aabab\n", "representation of 18");
    check_output(with({"repr"}, with(l1, {"0"})), 0, "\"\"\n", "ε prints as the quoted token");
    check_output(with({"--epsilon", "eps", "repr"}, with(l1, {"0"})), 0, "eps\n",
                 "--epsilon overrides the ε rendering");
    check_output({"repr", "--automaton", aut("binary.aut"), "5"}, 0, "101\n",
                 "binary representation of 5");
    check_output({"repr", "--automaton", aut("fibonacci.aut"), "7"}, 0, "1010\n",
                 "Fibonacci representation of 7");
    {
        RunResult r = run(with({"repr"}, with(l1, {"-3"})));
        check(r.status == 1, "negative input is a usage error");
    }

    // --- enum ----------------------------------------------------------
    check_output(with({"enum"}, with(l1, {"0", "7"})), 0, "\"\"\na\naa\nbb\naaa\nabb\nbab\n",
                 "first seven words of the running example");
    check_output({"enum", "--automaton", aut("fibonacci.aut"), "0", "4"}, 0,
                 "0\n1\n10\n100\n", "first four Fibonacci words");

    // --- series build / coeff ------------------------------------------
    std::string series_path = temp_file("l1-series.json");
    check_output(with({"series", "build", "--out", series_path}, l1), 0, "dimension: 10\n",
                 "series build reports the pre-trim dimension");
    {
        ans::LinearRepresentation rep = ans::read_series_file(series_path);
        check(rep.coefficient("bbabb") == ans::Scalar(ans::Semiring::N, 30),
              "written series document evaluates bbabb to 30");
        check(rep.dimension() == 8, "written series is the trimmed representation");
    }
    check_output(with({"series", "coeff"}, with(l1, {"bbabb"})), 0, "30\n",
                 "series coeff from a language source");
    check_output({"series", "coeff", "--series", series_path, "\"\""}, 0, "1\n",
                 "series coeff of ε from a series file");
    check_output({"series", "coeff", "--series", series_path, "ba"}, 0, "0\n",
                 "series coeff of a non-member is 0");
    {
        RunResult r = run(with({"series", "coeff", "--series", series_path}, with(l1, {"a"})));
        check(r.status == 1, "series coeff refuses a source and a file together");
    }

    // --- congruence ------------------------------------------------------
    check_output(with({"congruence", "--mod", "3", "--residue", "1"}, l1), 0, "states: 12\n",
                 "congruence recognizer has 12 reachable states");
    check_output(with({"congruence", "--mod", "3", "--residue", "1", "--minimize"}, l1), 0,
                 "states: 8\n", "minimized congruence recognizer has 8 states");
    {
        std::string out_path = temp_file("cong.aut");
        std::string dot_path = temp_file("cong.dot");
        RunResult r = run(with({"congruence", "--mod", "3", "--residue", "1", "--minimize",
                                "--out", out_path, "--dot", dot_path},
                               l1));
        check(r.status == 0, "congruence writes artifacts");
        ans::Nfa written = ans::read_automaton_file(out_path);
        check(written.num_states() == 8 && written.accepts("a") && written.accepts("bba") &&
                  !written.accepts("aa"),
              "written congruence automaton is the minimal recognizer");
        std::ifstream dot(dot_path);
        std::stringstream dot_text;
        dot_text << dot.rdbuf();
        check(dot_text.str().find("digraph") != std::string::npos,
              "DOT artifact contains a digraph");
    }
    check_output(with({"congruence", "--include", "0,4"}, l1), 0, "states: 4\n",
                 "include-only recognizer is the four-state word trie");
    {
        RunResult r = run(with({"congruence", "--mod", "3"}, l1));
        check(r.status == 1, "unpaired --mod is a usage error");
        RunResult none = run(with({"congruence"}, l1));
        check(none.status == 1, "congruence with nothing to recognize is a usage error");
    }

    // --- decide-enum -----------------------------------------------------
    check_output({"decide-enum", series_path}, 0, "YES\n",
                 "the built series is recognized as enumerating");
    std::string char_path = temp_file("char.json");
    write_file(char_path, kCharSeriesDoc);
    check_output({"decide-enum", char_path}, 2, "NO a expected=2 actual=1\n",
                 "the characteristic series is rejected with its witness");
    check_output({"decide-enum", char_path, "--depth", "0"}, 2,
                 "NO (mismatch beyond depth 0)\n", "depth 0 hides the witness");
    std::string eps_path = temp_file("epsilon.json");
    write_file(eps_path, kEpsilonSeriesDoc);
    check_output({"decide-enum", eps_path}, 2, "NO (finite support)\n",
                 "finite support is rejected as such");
    std::string zero_path = temp_file("zero.json");
    write_file(zero_path, kZeroSeriesDoc);
    check_output({"decide-enum", zero_path}, 2, "NO (empty support)\n",
                 "empty support is rejected as such");
    {
        RunResult r = run({"decide-enum", temp_file("missing.json")});
        check(r.status == 1, "a missing series file is an input error");
    }

    // --- export-dot ------------------------------------------------------
    {
        RunResult r = run(with({"export-dot"}, l1));
        check(r.status == 0 && r.out.find("doublecircle") != std::string::npos,
              "export-dot emits the minimal DFA");
        RunResult raw = run(with({"export-dot", "--raw"}, l1_regex));
        check(raw.status == 0 && raw.out.find("digraph") != std::string::npos,
              "export-dot --raw emits the input automaton");
    }

    // --- usage errors ----------------------------------------------------
    {
        RunResult r = run({"value", "bbabb"});
        check(r.status == 1, "a sourceless command is a usage error");
        RunResult both = run({"value", "--regex", "a*", "--alphabet", "a", "--automaton",
                              aut("l1.aut"), "a"});
        check(both.status == 1, "two sources at once are a usage error");
        RunResult regex_only = run({"value", "--regex", "a*", "aa"});
        check(regex_only.status == 1, "--regex without --alphabet is a usage error");
        RunResult bad_flag = run({"value", "--frobnicate", "x"});
        check(bad_flag.status == 1, "unknown flags are a usage error");
        RunResult bad_file = run({"value", "--automaton", temp_file("missing.aut"), "a"});
        check(bad_file.status == 1, "a missing automaton file is an input error");
        RunResult help = run({"--help"});
        check(help.status == 0 && help.out.find("value") != std::string::npos,
              "--help exits 0 and lists subcommands");
    }

    // --- round trip over every bundled system -----------------------------
    for (const std::string name : {"l1.aut", "binary.aut", "fibonacci.aut"}) {
        RunResult listing = run({"enum", "--automaton", aut(name), "0", "200"});
        std::vector<std::string> words = lines_of(listing.out);
        bool ok = listing.status == 0 && words.size() == 200;
        for (std::size_t n = 0; ok && n < words.size(); ++n) {
            RunResult v = run({"value", "--automaton", aut(name), words[n]});
            ok = v.status == 0 && v.out == std::to_string(n) + "\n";
        }
        check(ok, "repr/value round trip over " + name + " for n < 200");
    }

    if (failures == 0) {
        std::cout << "all cli checks passed\n";
        return 0;
    }
    std::cout << failures << " cli checks failed\n";
    return 1;
}
