#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ans/errors.hpp"
#include "ans/linalg.hpp"
#include "ans/representation.hpp"
#include "ans/scalar.hpp"
#include "ans/system.hpp"

namespace ans {

/// The block construction turning a numeration system into the linear
/// representation of its enumerating series.
///
/// With k the system dimension, the (1, k, k)-block data
///   eta      = (1, lambda, 0)
///   kappa(a) = | 1  0      lambda  |
///              | 0  mu(a)  sigma_a |
///              | 0  0      sigma   |
///   zeta     = (0, 0, nu)^T        xi = (1, 0, nu)^T
/// satisfies eta * kappa(u) * zeta = |{v in L : v < u}| (radix order) for
/// every word u, and eta * kappa(u) * xi adds 1 to that count. The final
/// representation is the Hadamard product of (eta, kappa, xi) with the
/// characteristic representation of L: coefficient value(w)+1 on L, 0 off.
class EnumeratorRep {
public:
    explicit EnumeratorRep(const AnsSystem& sys) : EnumeratorRep(make_parts(sys)) {}

    std::size_t system_dimension() const { return k_; }
    std::size_t block_dimension() const { return 2 * k_ + 1; }
    std::size_t pre_trim_dimension() const { return (2 * k_ + 1) * k_; }

    const RowVector& eta() const { return eta_; }
    const Matrix& kappa(std::size_t letter_index) const {
        if (letter_index >= kappa_.size()) throw DimensionError("letter index out of range");
        return kappa_[letter_index];
    }
    const ColVector& zeta() const { return zeta_; }
    const ColVector& xi() const { return xi_; }

    /// (eta, kappa, zeta) as a representation of u -> |{v in L : v < u}|.
    LinearRepresentation below_count_rep() const {
        return LinearRepresentation(Semiring::N, alphabet_, eta_, kappa_, zeta_);
    }

    /// (eta, kappa, xi): u -> 1 + |{v in L : v < u}|, on every word u.
    LinearRepresentation one_plus_rep() const {
        return LinearRepresentation(Semiring::N, alphabet_, eta_, kappa_, xi_);
    }

    /// |{v in L : v < u}| for an arbitrary word u (not only members).
    Integer rank_below(const Word& u) const {
        RowVector row = eta_;
        for (char c : u) row = row * kappa_[alphabet_.index_of(c)];
        return (row * zeta_).to_integer();
    }

    /// The enumerating series itself: trimmed Hadamard product, with
    /// coefficient value(w)+1 on L and 0 elsewhere.
    const LinearRepresentation& final_rep() const { return final_rep_; }

private:
    struct Parts {
        OrderedAlphabet alphabet;
        std::size_t k;
        RowVector eta;
        std::vector<Matrix> kappa;
        ColVector zeta;
        ColVector xi;
        LinearRepresentation characteristic;
    };

    static Parts make_parts(const AnsSystem& sys) {
        const LinearRepresentation& rep = sys.representation_of_language();
        std::size_t k = rep.dimension();
        std::size_t d = 2 * k + 1;

        RowVector eta(Semiring::N, d);
        eta.set(0, Scalar::one(Semiring::N));
        for (std::size_t j = 0; j < k; ++j) eta.set(1 + j, rep.lambda().at(j));

        ColVector zeta(Semiring::N, d);
        ColVector xi(Semiring::N, d);
        xi.set(0, Scalar::one(Semiring::N));
        for (std::size_t i = 0; i < k; ++i) {
            zeta.set(k + 1 + i, rep.nu().at(i));
            xi.set(k + 1 + i, rep.nu().at(i));
        }

        std::vector<Matrix> kappa;
        kappa.reserve(rep.alphabet().size());
        for (std::size_t a = 0; a < rep.alphabet().size(); ++a) {
            Matrix m(Semiring::N, d, d);
            m.set(0, 0, Scalar::one(Semiring::N));
            for (std::size_t j = 0; j < k; ++j) m.set(0, k + 1 + j, rep.lambda().at(j));
            const Matrix& mu = rep.mu(a);
            const Matrix& below = sys.sigma_below(a);
            const Matrix& sigma = sys.sigma();
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) {
                    m.set(1 + i, 1 + j, mu.at(i, j));
                    m.set(1 + i, k + 1 + j, below.at(i, j));
                    m.set(k + 1 + i, k + 1 + j, sigma.at(i, j));
                }
            kappa.push_back(std::move(m));
        }
        return Parts{rep.alphabet(), k,         std::move(eta), std::move(kappa),
                     std::move(zeta), std::move(xi), rep};
    }

    explicit EnumeratorRep(Parts p)
        : alphabet_(std::move(p.alphabet)),
          k_(p.k),
          eta_(std::move(p.eta)),
          kappa_(std::move(p.kappa)),
          zeta_(std::move(p.zeta)),
          xi_(std::move(p.xi)),
          final_rep_(build_final(p.characteristic)) {}

    LinearRepresentation build_final(const LinearRepresentation& characteristic) const {
        LinearRepresentation product = hadamard(one_plus_rep(), characteristic);
        if (product.dimension() != pre_trim_dimension())
            throw InternalError("enumerating series dimension mismatch before trim");
        return product.trimmed();
    }

    OrderedAlphabet alphabet_;
    std::size_t k_;
    RowVector eta_;
    std::vector<Matrix> kappa_;
    ColVector zeta_;
    ColVector xi_;
    LinearRepresentation final_rep_;
};

inline EnumeratorRep enumerating_series(const AnsSystem& sys) { return EnumeratorRep(sys); }

}  // namespace ans
