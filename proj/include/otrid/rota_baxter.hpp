#pragma once

#include <string>
#include <vector>

#include "otrid/lincomb.hpp"
#include "otrid/omega_table.hpp"
#include "otrid/tridend.hpp"

namespace otrid {

// Finite-dimensional associative algebra with one linear operator P_w and one
// scalar weight mu_w per omega. The defining identity (checked, not assumed):
//   P_a(x) P_b(y) = P_{a->b}(P_{a|>b}(x) y) + P_{a<-b}(x P_{a<|b}(y))
//                   + P_{a.b}(mu_{a*b} x y)
// over all basis pairs (x, y) and all (a, b).
class OmegaRBAlgebra {
public:
    using Vec = LinComb<int>;

    OmegaRBAlgebra(int dim, int omega_size, std::vector<Vec> mult,
                   std::vector<std::vector<Rational>> operators, std::vector<Rational> weights);

    int dim() const { return dim_; }
    int omega_size() const { return omega_size_; }
    const Vec& mult_basis(int i, int j) const { return mult_[i * dim_ + j]; }
    Vec mult(const Vec& a, const Vec& b) const;
    Vec apply(int omega, const Vec& v) const;   // P_omega
    const Rational& weight(int omega) const { return weights_[omega]; }

    std::string to_json() const;
    static OmegaRBAlgebra from_json(const std::string& text);

private:
    int dim_;
    int omega_size_;
    std::vector<Vec> mult_;                          // dim x dim structure vectors
    std::vector<std::vector<Rational>> operators_;   // per omega, dim x dim, row-major: out_i = sum_j M[i][j] v_j
    std::vector<Rational> weights_;
};

struct RBViolation {
    std::string kind;  // "assoc" or "rb"
    int alpha, beta;   // unused for "assoc"
    int i, j;          // basis pair (b, c); "assoc" uses (i, j, k) packed via alpha
    std::string lhs, rhs;
};

struct RBReport {
    bool passed = true;
    std::vector<RBViolation> violations;
    std::string to_json() const;
};

// Associativity of the base product, then the family identity above.
RBReport check_rb(const OmegaRBAlgebra& alg, const OmegaTable& t);

// The induced structure: a prec_w b = a P_w(b), a succ_w b = P_w(a) b,
// a circ_w b = mu_w a b. Construction verifies check_rb and check_ets unless
// explicitly waived.
class RBInducedAlgebra {
public:
    using Elem = OmegaRBAlgebra::Vec;

    RBInducedAlgebra(const OmegaTable& t, const OmegaRBAlgebra& alg, bool waive_checks = false);

    const OmegaTable& table() const { return *table_; }

    Elem product(Prod op, int omega, const Elem& a, const Elem& b) const;
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }
    std::string show(const Elem& v) const {
        return v.str([](int k) { return "e" + std::to_string(k); });
    }

private:
    const OmegaTable* table_;
    const OmegaRBAlgebra* alg_;
};

// Seeded random element triples for the generic axiom checker.
std::vector<std::array<OmegaRBAlgebra::Vec, 3>> rb_random_triples(int dim, int samples, uint64_t seed);

}  // namespace otrid
