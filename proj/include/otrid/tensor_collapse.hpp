#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "otrid/lincomb.hpp"
#include "otrid/omega_table.hpp"
#include "otrid/tree_algebra.hpp"
#include "otrid/tridend.hpp"

namespace otrid {

enum class PhiKind { Left, Right, Star };

// phi_<-(a, b) = (a <- b, a <| b); phi_->(a, b) = (a -> b, a |> b);
// phi_*(a, b) = (a . b, a * b).
std::pair<int, int> phi_map(PhiKind which, const OmegaTable& t, int a, int b);

struct PhiProperties {
    bool surjective = false;
    bool injective = false;
    std::optional<std::pair<int, int>> missed_pair;                 // outside the image
    std::optional<std::array<std::pair<int, int>, 2>> collision;    // two preimages of one pair
};

// Exhaustive image / fiber computation on Omega^2 for one map.
PhiProperties phi_properties(PhiKind which, const OmegaTable& t);
std::string phi_properties_json(const OmegaTable& t);

// kOmega (x) A with the three collapsed products:
//   (a (x) x) prec (b (x) y) = (a <- b) (x) (x prec_{a <| b} y), etc.
// The result is a classical tridendriform structure, modeled as an
// implementation over the one-element table so the generic checker applies.
// Elements are combinations keyed by (omega, basis key of the inner algebra).
template <class Comb>
struct comb_key;
template <class K>
struct comb_key<LinComb<K>> {
    using type = K;
};

template <TridendImpl Inner>
class CollapsedAlgebra {
public:
    using Key = typename comb_key<typename Inner::Elem>::type;
    using Elem = LinComb<std::pair<int, Key>>;

    CollapsedAlgebra(const OmegaTable& t, const Inner& inner)
        : trivial_(builtin_table("trivial", 1)), inner_table_(&t), inner_(&inner) {}

    const OmegaTable& table() const { return trivial_; }

    Elem product(Prod op, int, const Elem& a, const Elem& b) const {
        const OmegaTable& t = *inner_table_;
        PhiKind kind = op == Prod::Prec ? PhiKind::Left
                       : op == Prod::Succ ? PhiKind::Right
                                          : PhiKind::Star;
        return Elem::bilinear(
            [&](const std::pair<int, Key>& x, const std::pair<int, Key>& y) {
                auto [outer, idx] = phi_map(kind, t, x.first, y.first);
                typename Inner::Elem parts =
                    inner_->product(op, idx, Inner::Elem::single(x.second), Inner::Elem::single(y.second));
                Elem out;
                for (const auto& [k, c] : parts.terms()) out.add_term({outer, k}, c);
                return out;
            },
            a, b);
    }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }
    std::string show(const Elem& c) const {
        return c.str([&](const std::pair<int, Key>& k) {
            return std::to_string(k.first) + " (x) " +
                   inner_->show(Inner::Elem::single(k.second));
        });
    }

private:
    OmegaTable trivial_;
    const OmegaTable* inner_table_;
    const Inner* inner_;
};

using CollapsedKey = std::pair<int, Tree>;
using CollapsedComb = LinComb<CollapsedKey>;

std::string show_collapsed(const CollapsedComb& c);

class CollapsedTreeAlgebra {
public:
    using Elem = CollapsedComb;

    CollapsedTreeAlgebra(const OmegaTable& t, bool require_ets = false);

    // classical structure: the table seen by the axiom checker is trivial
    const OmegaTable& table() const { return trivial_; }
    const OmegaTable& inner_table() const { return *inner_table_; }

    Elem product(Prod op, int /*omega*/, const Elem& a, const Elem& b) const;
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }
    std::string show(const Elem& c) const { return show_collapsed(c); }

private:
    OmegaTable trivial_;
    const OmegaTable* inner_table_;
    FreeTreeAlgebra trees_;
};

struct ProbeResult {
    bool ok = true;
    int failed_degree = 0;           // 0 when ok
    std::string detail;              // rank vs target at the failing degree
};

// Degree-by-degree spans of the products of the generators w (x) (x-corolla)
// inside kOmega (x) kT_n. generation: span dimension reaches
// |Omega| * |T_n(X, Omega)| at every degree; freeness: span dimension equals
// S_n * (|Omega| |X|)^n at every degree.
ProbeResult generation_probe(const OmegaTable& t, const std::vector<std::string>& labels, int n_max);
ProbeResult freeness_probe(const OmegaTable& t, const std::vector<std::string>& labels, int n_max);

}  // namespace otrid
