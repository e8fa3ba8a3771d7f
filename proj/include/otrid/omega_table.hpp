#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace otrid {

// The six binary operations of an extended triassociative semigroup candidate.
enum class Op : int { LeftArrow = 0, RightArrow, LTri, RTri, Dot, Star };
inline constexpr std::array<const char*, 6> kOpJsonKeys = {
    "left_arrow", "right_arrow", "ltri", "rtri", "dot", "star"};

// A finite set {0..n-1} with six n x n operation tables (row index = first operand).
// Immutable after construction.
class OmegaTable {
public:
    OmegaTable(int size, std::array<std::vector<int>, 6> tables);

    int size() const { return size_; }
    int apply(Op op, int a, int b) const { return tables_[static_cast<int>(op)][a * size_ + b]; }

    int la(int a, int b) const { return apply(Op::LeftArrow, a, b); }    // <-
    int ra(int a, int b) const { return apply(Op::RightArrow, a, b); }   // ->
    int lt(int a, int b) const { return apply(Op::LTri, a, b); }         // <| (lhd)
    int rt(int a, int b) const { return apply(Op::RTri, a, b); }         // |> (rhd)
    int dot(int a, int b) const { return apply(Op::Dot, a, b); }         // .
    int star(int a, int b) const { return apply(Op::Star, a, b); }       // *

    OmegaTable opposite() const;
    bool is_commutative() const;  // equal to its opposite, entrywise

    friend bool operator==(const OmegaTable& a, const OmegaTable& b) {
        return a.size_ == b.size_ && a.tables_ == b.tables_;
    }

    std::string to_json() const;
    static OmegaTable from_json(const std::string& text);  // throws Error on bad input

    static OmegaTable random(int size, uint64_t seed);

private:
    int size_;
    std::array<std::vector<int>, 6> tables_;  // flattened n x n
};

// One violated identity with its witness triple and both evaluated sides.
struct TableViolation {
    std::string axiom;  // "D1".."D5", "E1".."E10", "T1".."T18"
    int eq = 0;         // position in the numbered E/T identities (1-28); 0 for D1-D5
    std::string text;   // the identity, ASCII-rendered
    int alpha = 0, beta = 0, gamma = 0;
    int lhs = 0, rhs = 0;
};

struct TableReport {
    bool passed = true;
    int families_checked = 0;
    std::vector<TableViolation> violations;  // sorted by (axiom order, witness)
    std::string to_json() const;
};

enum class CheckLevel { Diassociative, Eds, Ets };

// Exhaustive scan of the identity families over all (alpha, beta, gamma).
// Eds includes the diassociative identities; Ets includes both.
TableReport check_table(const OmegaTable& t, CheckLevel level);
inline TableReport check_diassociative(const OmegaTable& t) { return check_table(t, CheckLevel::Diassociative); }
inline TableReport check_eds(const OmegaTable& t) { return check_table(t, CheckLevel::Eds); }
inline TableReport check_ets(const OmegaTable& t) { return check_table(t, CheckLevel::Ets); }

// Quick variant used by samplers: stops at the first violation.
bool table_passes(const OmegaTable& t, CheckLevel level);

// Builtin families.
//
// trivial        all six operations constant 0
// projections_A  <-
//                 = left, -> = right, |> = left, <| = right, * = left, . = right
// projections_B  same arrows/triangles, * = right, . = left
// matching       -> = <| = * = right projection, |> = <- = . = left projection
// family         <- = -> = . = an associative product, |> = left, <| = right,
//                * = caller-supplied (right projection by default); the result
//                is rejected unless it passes the full ETS check
//
// The projection builtins take -> as the right projection: with -> the left
// projection the assembled tables fail the scan (variant A at eq 11, variant B
// at eq 20), and every builtin here must verify.
OmegaTable builtin_table(const std::string& name, int size,
                         const std::vector<int>* family_product = nullptr,
                         const std::vector<int>* family_star = nullptr);

}  // namespace otrid
