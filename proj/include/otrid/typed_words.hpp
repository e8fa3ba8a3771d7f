#pragma once

#include <optional>
#include <string>
#include <vector>

#include "otrid/error.hpp"
#include "otrid/lincomb.hpp"
#include "otrid/omega_table.hpp"
#include "otrid/tridend.hpp"

namespace otrid {

// Associative matching algebra on a finite basis: for each omega a d x d
// table of structure vectors. Associativity across pairs of products is
// verified by check_matching, never assumed.
class MatchingAlgebra {
public:
    using Vec = LinComb<int>;  // element over the basis

    MatchingAlgebra(int dim, int omega_size, std::vector<Vec> tables);  // tables[w*d*d + i*d + j]

    int dim() const { return dim_; }
    int omega_size() const { return omega_size_; }
    const Vec& star_basis(int omega, int i, int j) const {
        return tables_[(omega * dim_ + i) * dim_ + j];
    }
    Vec star(int omega, const Vec& a, const Vec& b) const;

    bool symmetric() const;  // star_w(i, j) == star_w(j, i) for all w, i, j

    std::string to_json() const;
    static MatchingAlgebra from_json(const std::string& text);

    // d = 1 with every product the scalar identity.
    static MatchingAlgebra scalar(int omega_size);
    // pointwise products on d basis idempotents, all star_w equal.
    static MatchingAlgebra pointwise(int dim, int omega_size);
    // Free truncation for term counting: basis = letters + one fresh symbol
    // per (letter, omega, letter); star of anything involving a composite
    // symbol is junk (first composite), so only use where merges never nest.
    static MatchingAlgebra free_truncation(int letters, int omega_size);

private:
    int dim_;
    int omega_size_;
    std::vector<Vec> tables_;
};

struct MatchingViolation {
    int alpha, beta;
    int i, j, k;  // basis triple
    std::string lhs, rhs;
};

struct MatchingReport {
    bool passed = true;
    std::vector<MatchingViolation> violations;
    std::string to_json() const;
};

// (a *_alpha b) *_beta c == a *_alpha (b *_beta c) over all basis triples and
// all (alpha, beta).
MatchingReport check_matching(const MatchingAlgebra& alg);

// An Omega-typed word: letters are algebra basis indices, types sit between
// consecutive letters.
struct TypedWord {
    std::vector<int> letters;  // size n+1
    std::vector<int> types;    // size n

    int length() const { return static_cast<int>(letters.size()); }
    std::string str() const;  // "a0 :t1 a1 :t2 a2"
    friend auto operator<=>(const TypedWord&, const TypedWord&) = default;
};

using WordComb = LinComb<TypedWord>;

inline std::string show_word_comb(const WordComb& c) {
    return c.str([](const TypedWord& w) { return w.str(); });
}

TypedWord parse_word(const std::string& text, int dim, int omega_size);

// sh^+(A): the quasi-shuffle-style recursive products on typed words.
class WordAlgebra {
public:
    using Elem = WordComb;

    WordAlgebra(const OmegaTable& t, const MatchingAlgebra& alg, bool require_checks = false);

    const OmegaTable& table() const { return *table_; }
    const MatchingAlgebra& algebra() const { return *alg_; }

    WordComb basis_product(Prod op, int omega, const TypedWord& a, const TypedWord& b) const;
    WordComb product(Prod op, int omega, const WordComb& a, const WordComb& b) const;

    // 1 succ w = w prec 1 = w, 1 prec w = w succ 1 = 0, circ with 1 = 0.
    WordComb product_with_unit(Prod op, int omega, const std::optional<WordComb>& a,
                               const std::optional<WordComb>& b) const;

    WordComb add(const WordComb& a, const WordComb& b) const { return a + b; }
    bool equal(const WordComb& a, const WordComb& b) const { return a == b; }
    std::string show(const WordComb& c) const { return show_word_comb(c); }

private:
    const OmegaTable* table_;
    const MatchingAlgebra* alg_;

    WordComb prepend(const MatchingAlgebra::Vec& head, int type, const WordComb& tail) const;
    WordComb lift(const MatchingAlgebra::Vec& v) const;  // length-1 words
};

// Delannoy recursion D(m,n) = D(m-1,n) + D(m,n-1) + D(m-1,n-1); the
// independent oracle for quasi-shuffle term counts.
BigInt quasi_shuffle_term_count(int m, int n);

// All basis words with the given letter count.
std::vector<TypedWord> enumerate_words(int length, int dim, int omega_size);

// The unique extension of phi to word combinations:
// Phi(a1 x_t rest) = phi(a1) prec_t Phi(rest). phi maps basis indices of A
// into the target; it must intertwine star with circ on basis pairs, which
// verify_matching_morphism checks (universal_morphism rejects phi otherwise).
template <TridendImpl Target>
bool verify_matching_morphism(const MatchingAlgebra& alg, const Target& target,
                              const std::vector<typename Target::Elem>& phi) {
    for (int w = 0; w < alg.omega_size(); ++w)
        for (int i = 0; i < alg.dim(); ++i)
            for (int j = 0; j < alg.dim(); ++j) {
                typename Target::Elem lhs{};
                for (const auto& [k, c] : alg.star_basis(w, i, j).terms())
                    lhs = target.add(lhs, phi[k].scaled(c));
                auto rhs = target.product(Prod::Circ, w, phi[i], phi[j]);
                if (!target.equal(lhs, rhs)) return false;
            }
    return true;
}

template <TridendImpl Target>
typename Target::Elem universal_morphism_word(const TypedWord& w, const Target& target,
                                              const std::vector<typename Target::Elem>& phi) {
    if (w.length() == 1) return phi[w.letters[0]];
    TypedWord rest{std::vector<int>(w.letters.begin() + 1, w.letters.end()),
                   std::vector<int>(w.types.begin() + 1, w.types.end())};
    return target.product(Prod::Prec, w.types[0], phi[w.letters[0]],
                          universal_morphism_word(rest, target, phi));
}

template <TridendImpl Target>
typename Target::Elem universal_morphism(const WordComb& comb, const Target& target,
                                         const MatchingAlgebra& alg,
                                         const std::vector<typename Target::Elem>& phi) {
    if (!verify_matching_morphism(alg, target, phi))
        throw Error(Errc::domain, "universal morphism: phi is not a matching-algebra morphism");
    typename Target::Elem acc{};
    for (const auto& [w, c] : comb.terms())
        acc = target.add(acc, universal_morphism_word(w, target, phi).scaled(c));
    return acc;
}

}  // namespace otrid
