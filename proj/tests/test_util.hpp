#pragma once

// Shared helpers for the test suites: word generation in radix order,
// independent membership predicates for the bundled languages, and a
// deterministic random-representation generator.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "ans/ans.hpp"

namespace test_util {

/// All words over the alphabet with length <= max_len, in radix order.
inline std::vector<ans::Word> words_up_to(const ans::OrderedAlphabet& ab,
                                          std::size_t max_len) {
    std::vector<ans::Word> out;
    for (std::size_t len = 0; len <= max_len; ++len) {
        std::vector<std::size_t> idx(len, 0);
        for (;;) {
            ans::Word w;
            w.reserve(len);
            for (std::size_t i : idx) w.push_back(ab.letter(i));
            out.push_back(std::move(w));
            std::size_t pos = len;
            while (pos > 0 && idx[pos - 1] + 1 == ab.size()) idx[--pos] = 0;
            if (pos == 0) break;
            ++idx[pos - 1];
        }
    }
    return out;
}

/// Even number of b's (the running example language over a < b).
inline bool in_even_b(const ans::Word& w) {
    return std::count(w.begin(), w.end(), 'b') % 2 == 0;
}

/// Binary numeration language: 1(0|1)* plus the word "0".
inline bool in_binary(const ans::Word& w) {
    return w == "0" || (!w.empty() && w[0] == '1');
}

/// Fibonacci numeration language: starts with 1, no factor 11; plus "0".
inline bool in_fibonacci(const ans::Word& w) {
    if (w == "0") return true;
    if (w.empty() || w[0] != '1') return false;
    return w.find("11") == std::string::npos;
}

inline std::string data_file(const std::string& name) {
    return std::string(ANS_DATA_DIR) + "/" + name;
}

/// Deterministic random representation over the given semiring with
/// entries drawn from a small range (negative values only outside N).
inline ans::LinearRepresentation random_rep(std::mt19937& rng, ans::Semiring ring,
                                            const ans::OrderedAlphabet& ab,
                                            std::size_t dim) {
    int lo = ring == ans::Semiring::N ? 0 : -2;
    std::uniform_int_distribution<int> entry(lo, 2);
    auto scalar = [&](int v) { return ans::Scalar(ring, v); };
    ans::RowVector lambda(ring, dim);
    ans::ColVector nu(ring, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        lambda.set(i, scalar(entry(rng)));
        nu.set(i, scalar(entry(rng)));
    }
    std::vector<ans::Matrix> mu;
    for (std::size_t a = 0; a < ab.size(); ++a) {
        ans::Matrix m(ring, dim, dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) m.set(i, j, scalar(entry(rng)));
        mu.push_back(std::move(m));
    }
    return ans::LinearRepresentation(ring, ab, std::move(lambda), std::move(mu),
                                     std::move(nu));
}

}  // namespace test_util
