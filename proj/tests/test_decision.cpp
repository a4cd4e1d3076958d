#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ans/ans.hpp"
#include "test_util.hpp"

using namespace ans;
using test_util::random_rep;
using test_util::words_up_to;

namespace {

Dfa parity_dfa() {
    Dfa d(OrderedAlphabet("ab"), 2, 0);
    d.set_final(0);
    d.set_transition(0, 'a', 0);
    d.set_transition(0, 'b', 1);
    d.set_transition(1, 'a', 1);
    d.set_transition(1, 'b', 0);
    return d;
}

AnsSystem parity_system() { return AnsSystem::from_language(parity_dfa()); }

/// Counts occurrences of 'a': lambda mu(w) nu = |w|_a.
LinearRepresentation count_a_rep() {
    OrderedAlphabet ab("ab");
    RowVector lambda(Semiring::N, 2);
    lambda.set(0, Scalar::one(Semiring::N));
    Matrix ma = Matrix::identity(Semiring::N, 2);
    ma.set(0, 1, Scalar::one(Semiring::N));
    Matrix mb = Matrix::identity(Semiring::N, 2);
    ColVector nu(Semiring::N, 2);
    nu.set(1, Scalar::one(Semiring::N));
    return LinearRepresentation(Semiring::N, ab, lambda, {ma, mb}, nu);
}

/// The same series with the state order reversed.
LinearRepresentation count_a_rep_flipped() {
    OrderedAlphabet ab("ab");
    RowVector lambda(Semiring::N, 2);
    lambda.set(1, Scalar::one(Semiring::N));
    Matrix ma = Matrix::identity(Semiring::N, 2);
    ma.set(1, 0, Scalar::one(Semiring::N));
    Matrix mb = Matrix::identity(Semiring::N, 2);
    ColVector nu(Semiring::N, 2);
    nu.set(0, Scalar::one(Semiring::N));
    return LinearRepresentation(Semiring::N, ab, lambda, {ma, mb}, nu);
}

LinearRepresentation zero_series() {
    OrderedAlphabet ab("ab");
    return LinearRepresentation(Semiring::N, ab, RowVector(Semiring::N, 1),
                                {Matrix(Semiring::N, 1, 1), Matrix(Semiring::N, 1, 1)},
                                ColVector(Semiring::N, 1));
}

LinearRepresentation epsilon_only_series() {
    OrderedAlphabet ab("ab");
    Nfa n(ab, 1);
    n.add_initial(0);
    n.add_final(0);
    return to_linear_representation(n);
}

/// Zero iff every coefficient on words shorter than the dimension is zero;
/// the finite check is the textbook bound for linear recurrences.
bool zero_by_bounded_check(const LinearRepresentation& s) {
    for (const Word& w : words_up_to(s.alphabet(), s.dimension() - 1))
        if (!s.coefficient(w).is_zero()) return false;
    return true;
}

}  // namespace

TEST_CASE("support automata") {
    AnsSystem sys = parity_system();
    LinearRepresentation s = enumerating_series(sys).final_rep();
    Dfa support = support_dfa(s);
    CHECK(support == minimize(parity_dfa()));  // canonical forms coincide

    CHECK(is_empty_language(support_dfa(zero_series())));

    OrderedAlphabet ab("ab");
    Nfa astar(ab, 1);
    astar.add_initial(0);
    astar.add_final(0);
    astar.add_transition(0, 'a', 0);
    Dfa asup = support_dfa(to_linear_representation(astar));
    CHECK(asup.num_states() == 1);
    for (const Word& w : words_up_to(ab, 5))
        CHECK(asup.accepts(w) == (w.find('b') == Word::npos));

    CHECK_THROWS_AS(support_dfa(s.embedded(Semiring::Z)), SemiringError);
}

TEST_CASE("difference of series") {
    AnsSystem sys = parity_system();
    LinearRepresentation s = enumerating_series(sys).final_rep();
    LinearRepresentation ch = sys.representation_of_language();

    LinearRepresentation self = subtract(s, s);
    CHECK(self.ring() == Semiring::Z);
    CHECK(self.dimension() == 2 * s.dimension());
    for (const Word& w : words_up_to(sys.alphabet(), 6))
        CHECK(self.coefficient(w).is_zero());

    // Enumerating minus characteristic leaves exactly the value of each word.
    LinearRepresentation diff = subtract(s, ch);
    CHECK(diff.dimension() == s.dimension() + ch.dimension());
    for (const Word& w : words_up_to(sys.alphabet(), 6)) {
        Integer want = sys.contains(w) ? sys.value(w) : Integer(0);
        CHECK(diff.coefficient(w).to_integer() == want);
    }

    OrderedAlphabet abc("abc");
    Nfa other(abc, 1);
    other.add_initial(0);
    other.add_final(0);
    CHECK_THROWS_AS(subtract(s, to_linear_representation(other)), ParseError);
}

TEST_CASE("zero-series decision") {
    LinearRepresentation a1 = count_a_rep();
    LinearRepresentation a2 = count_a_rep_flipped();
    for (const Word& w : words_up_to(a1.alphabet(), 6))
        CHECK(a1.coefficient(w) == a2.coefficient(w));
    CHECK(is_zero(subtract(a1, a2)));
    CHECK(is_zero(zero_series()));
    CHECK_FALSE(is_zero(a1));
    CHECK_FALSE(is_zero(epsilon_only_series()));
}

TEST_CASE("zero-series decision agrees with the bounded coefficient check") {
    OrderedAlphabet ab("ab");
    std::mt19937 rng(555);
    int zeros = 0;
    for (int round = 0; round < 30; ++round) {
        std::size_t dim = 1 + round % 3;
        for (Semiring ring : {Semiring::Z, Semiring::Q}) {
            LinearRepresentation r = random_rep(rng, ring, ab, dim);
            CHECK(is_zero(r) == zero_by_bounded_check(r));

            LinearRepresentation d = subtract(r, r);
            CHECK(is_zero(d));
            CHECK(zero_by_bounded_check(d));
            ++zeros;
        }
    }
    CHECK(zeros == 60);
}

TEST_CASE("equivalence of presentations") {
    AnsSystem sys = parity_system();
    EnumeratorRep en(sys);
    LinearRepresentation trimmed = en.final_rep();
    LinearRepresentation untrimmed =
        hadamard(en.one_plus_rep(), sys.representation_of_language());
    CHECK(trimmed.dimension() == 8);
    CHECK(untrimmed.dimension() == 10);
    for (const Word& w : words_up_to(sys.alphabet(), 6))
        CHECK(trimmed.coefficient(w) == untrimmed.coefficient(w));

    CHECK(equivalent(trimmed, trimmed));
    CHECK(equivalent(trimmed, untrimmed));
    CHECK(equivalent(untrimmed, trimmed));
    CHECK_FALSE(equivalent(trimmed, sys.representation_of_language()));
    CHECK_FALSE(equivalent(count_a_rep(), trimmed));
}

TEST_CASE("series that do enumerate are recognized") {
    AnsSystem parity = parity_system();
    OrderedAlphabet bits("01");
    AnsSystem bin = AnsSystem::from_language(parse_regex("0|1(0|1)*", bits));
    AnsSystem fib = AnsSystem::from_language(parse_regex("0|1(0|01)*", bits));
    for (const AnsSystem* sys : {&parity, &bin, &fib}) {
        EnumDecision d = is_enumerating_series(enumerating_series(*sys).final_rep());
        CHECK(d.is_enumerating);
        CHECK(d.reason == EnumDecision::Reason::ByEquivalence);
        CHECK_FALSE(d.witness.has_value());
    }
}

TEST_CASE("characteristic series are rejected with a witness") {
    AnsSystem sys = parity_system();
    LinearRepresentation ch = sys.representation_of_language();
    EnumDecision d = is_enumerating_series(ch);
    CHECK_FALSE(d.is_enumerating);
    CHECK(d.reason == EnumDecision::Reason::CoefficientMismatch);
    REQUIRE(d.witness.has_value());
    CHECK(*d.witness == "a");
    CHECK(*d.expected == 2);
    CHECK(*d.actual == 1);
    // The witness is sound: the input really takes the reported value there.
    CHECK(ch.coefficient(*d.witness).to_integer() == *d.actual);
    CHECK(*d.expected != *d.actual);
}

TEST_CASE("scaled series are rejected at the empty word") {
    AnsSystem sys = parity_system();
    LinearRepresentation s = enumerating_series(sys).final_rep();
    RowVector doubled = s.lambda() + s.lambda();
    std::vector<Matrix> mu;
    for (std::size_t a = 0; a < s.alphabet().size(); ++a) mu.push_back(s.mu(a));
    LinearRepresentation scaled(Semiring::N, s.alphabet(), doubled, mu, s.nu());
    EnumDecision d = is_enumerating_series(scaled);
    CHECK_FALSE(d.is_enumerating);
    CHECK(d.reason == EnumDecision::Reason::CoefficientMismatch);
    REQUIRE(d.witness.has_value());
    CHECK(d.witness->empty());
    CHECK(*d.expected == 1);
    CHECK(*d.actual == 2);
    CHECK(scaled.coefficient(*d.witness).to_integer() == *d.actual);
}

TEST_CASE("degenerate supports are reported as such") {
    EnumDecision empty = is_enumerating_series(zero_series());
    CHECK_FALSE(empty.is_enumerating);
    CHECK(empty.reason == EnumDecision::Reason::EmptySupport);

    EnumDecision finite = is_enumerating_series(epsilon_only_series());
    CHECK_FALSE(finite.is_enumerating);
    CHECK(finite.reason == EnumDecision::Reason::FiniteSupport);
}

TEST_CASE("witness search honors the depth limit") {
    AnsSystem sys = parity_system();
    LinearRepresentation ch = sys.representation_of_language();
    // The first mismatch of the characteristic series sits at "a", one
    // letter deep; with depth zero only the empty word is inspected.
    EnumDecision d = is_enumerating_series(ch, 0);
    CHECK_FALSE(d.is_enumerating);
    CHECK(d.reason == EnumDecision::Reason::MismatchBeyondDepth);
    CHECK_FALSE(d.witness.has_value());
}

TEST_CASE("the decision requires a natural series") {
    LinearRepresentation z = count_a_rep().embedded(Semiring::Z);
    CHECK_THROWS_AS(is_enumerating_series(z), SemiringError);
}
