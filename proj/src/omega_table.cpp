#include "otrid/omega_table.hpp"

#include <functional>

#include "json.hpp"
#include "otrid/error.hpp"
#include "otrid/prng.hpp"

namespace otrid {

OmegaTable::OmegaTable(int size, std::array<std::vector<int>, 6> tables)
    : size_(size), tables_(std::move(tables)) {
    if (size_ <= 0) throw Error(Errc::invalid, "table size must be positive");
    for (int op = 0; op < 6; ++op) {
        const auto& t = tables_[op];
        if (static_cast<int>(t.size()) != size_ * size_)
            throw Error(Errc::invalid, std::string("table '") + kOpJsonKeys[op] + "' is not " +
                                           std::to_string(size_) + "x" + std::to_string(size_));
        for (int v : t)
            if (v < 0 || v >= size_)
                throw Error(Errc::invalid, std::string("table '") + kOpJsonKeys[op] +
                                               "' has an entry out of range: " + std::to_string(v));
    }
}

OmegaTable OmegaTable::opposite() const {
    std::array<std::vector<int>, 6> t;
    for (auto& v : t) v.assign(size_ * size_, 0);
    for (int a = 0; a < size_; ++a) {
        for (int b = 0; b < size_; ++b) {
            t[static_cast<int>(Op::LeftArrow)][a * size_ + b] = ra(b, a);
            t[static_cast<int>(Op::RightArrow)][a * size_ + b] = la(b, a);
            t[static_cast<int>(Op::LTri)][a * size_ + b] = rt(b, a);
            t[static_cast<int>(Op::RTri)][a * size_ + b] = lt(b, a);
            t[static_cast<int>(Op::Dot)][a * size_ + b] = dot(b, a);
            t[static_cast<int>(Op::Star)][a * size_ + b] = star(b, a);
        }
    }
    return OmegaTable(size_, std::move(t));
}

bool OmegaTable::is_commutative() const { return *this == opposite(); }

OmegaTable OmegaTable::random(int size, uint64_t seed) {
    SplitMix64 rng(seed);
    std::array<std::vector<int>, 6> t;
    for (auto& v : t) {
        v.resize(size * size);
        for (auto& x : v) x = static_cast<int>(rng.below(static_cast<uint64_t>(size)));
    }
    return OmegaTable(size, std::move(t));
}

namespace {

using nlohmann::ordered_json;

struct Identity {
    const char* axiom;
    int eq;  // 0 for diassociative
    const char* text;
    // returns {lhs, rhs}
    std::pair<int, int> (*eval)(const OmegaTable&, int, int, int);
};

#define ID(label, eqno, txt, L, R)                                          \
    Identity{label, eqno, txt, [](const OmegaTable& t, int a, int b, int c) \
                                   -> std::pair<int, int> {                 \
                 (void)t; (void)a; (void)b; (void)c;                        \
                 return {L, R};                                             \
             }}

const Identity kDiassoc[] = {
    ID("D1", 0, "(a <- b) <- c = a <- (b <- c)", t.la(t.la(a, b), c), t.la(a, t.la(b, c))),
    ID("D2", 0, "a <- (b <- c) = a <- (b -> c)", t.la(a, t.la(b, c)), t.la(a, t.ra(b, c))),
    ID("D3", 0, "(a -> b) <- c = a -> (b <- c)", t.la(t.ra(a, b), c), t.ra(a, t.la(b, c))),
    ID("D4", 0, "(a -> b) -> c = (a <- b) -> c", t.ra(t.ra(a, b), c), t.ra(t.la(a, b), c)),
    ID("D5", 0, "(a <- b) -> c = a -> (b -> c)", t.ra(t.la(a, b), c), t.ra(a, t.ra(b, c))),
};

const Identity kEds[] = {
    ID("E1", 1, "a |> (b <- c) = a |> b", t.rt(a, t.la(b, c)), t.rt(a, b)),
    ID("E2", 2, "(a -> b) <| c = b <| c", t.lt(t.ra(a, b), c), t.lt(b, c)),
    ID("E3", 3, "(a <| b) <- ((a <- b) <| c) = a <| (b <- c)",
       t.la(t.lt(a, b), t.lt(t.la(a, b), c)), t.lt(a, t.la(b, c))),
    ID("E4", 4, "(a <| b) <| ((a <- b) <| c) = b <| c",
       t.lt(t.lt(a, b), t.lt(t.la(a, b), c)), t.lt(b, c)),
    ID("E5", 5, "(a <| b) -> ((a <- b) <| c) = a <| (b -> c)",
       t.ra(t.lt(a, b), t.lt(t.la(a, b), c)), t.lt(a, t.ra(b, c))),
    ID("E6", 6, "(a <| b) |> ((a <- b) <| c) = b |> c",
       t.rt(t.lt(a, b), t.lt(t.la(a, b), c)), t.rt(b, c)),
    ID("E7", 7, "(a |> (b -> c)) <- (b |> c) = (a <- b) |> c",
       t.la(t.rt(a, t.ra(b, c)), t.rt(b, c)), t.rt(t.la(a, b), c)),
    ID("E8", 8, "(a |> (b -> c)) <| (b |> c) = a <| b",
       t.lt(t.rt(a, t.ra(b, c)), t.rt(b, c)), t.lt(a, b)),
    ID("E9", 9, "(a |> (b -> c)) -> (b |> c) = (a -> b) |> c",
       t.ra(t.rt(a, t.ra(b, c)), t.rt(b, c)), t.rt(t.ra(a, b), c)),
    ID("E10", 10, "(a |> (b -> c)) |> (b |> c) = a |> b",
       t.rt(t.rt(a, t.ra(b, c)), t.rt(b, c)), t.rt(a, b)),
};

const Identity kEts[] = {
    ID("T1", 11, "(a -> b) * c = b * c", t.star(t.ra(a, b), c), t.star(b, c)),
    ID("T2", 12, "(a -> b) . c = a -> (b . c)", t.dot(t.ra(a, b), c), t.ra(a, t.dot(b, c))),
    ID("T3", 13, "a |> b = a |> (b . c)", t.rt(a, b), t.rt(a, t.dot(b, c))),
    ID("T4", 14, "(a <| b) * ((a <- b) <| c) = b * c",
       t.star(t.lt(a, b), t.lt(t.la(a, b), c)), t.star(b, c)),
    ID("T5", 15, "(a <| b) . ((a <- b) <| c) = a <| (b . c)",
       t.dot(t.lt(a, b), t.lt(t.la(a, b), c)), t.lt(a, t.dot(b, c))),
    ID("T6", 16, "(a <- b) <- c = a <- (b . c)", t.la(t.la(a, b), c), t.la(a, t.dot(b, c))),
    ID("T7", 17, "(a |> (b -> c)) * (b |> c) = a * b",
       t.star(t.rt(a, t.ra(b, c)), t.rt(b, c)), t.star(a, b)),
    ID("T8", 18, "a -> (b -> c) = (a . b) -> c", t.ra(a, t.ra(b, c)), t.ra(t.dot(a, b), c)),
    ID("T9", 19, "(a |> (b -> c)) . (b |> c) = (a . b) |> c",
       t.dot(t.rt(a, t.ra(b, c)), t.rt(b, c)), t.rt(t.dot(a, b), c)),
    ID("T10", 20, "(a <- b) * c = a * (b -> c)", t.star(t.la(a, b), c), t.star(a, t.ra(b, c))),
    ID("T11", 21, "(a <- b) . c = a . (b -> c)", t.dot(t.la(a, b), c), t.dot(a, t.ra(b, c))),
    ID("T12", 22, "a <| b = b |> c", t.lt(a, b), t.rt(b, c)),
    ID("T13", 23, "a * b = a * (b <- c)", t.star(a, b), t.star(a, t.la(b, c))),
    ID("T14", 24, "(a . b) <| c = b <| c", t.lt(t.dot(a, b), c), t.lt(b, c)),
    ID("T15", 25, "(a . b) <- c = a . (b <- c)", t.la(t.dot(a, b), c), t.dot(a, t.la(b, c))),
    ID("T16", 26, "a * b = a * (b . c)", t.star(a, b), t.star(a, t.dot(b, c))),
    ID("T17", 27, "(a . b) * c = b * c", t.star(t.dot(a, b), c), t.star(b, c)),
    ID("T18", 28, "(a . b) . c = a . (b . c)", t.dot(t.dot(a, b), c), t.dot(a, t.dot(b, c))),
};

#undef ID

template <class Fn>
void for_each_identity(CheckLevel level, Fn&& fn) {
    for (const auto& id : kDiassoc) fn(id);
    if (level == CheckLevel::Diassociative) return;
    for (const auto& id : kEds) fn(id);
    if (level == CheckLevel::Eds) return;
    for (const auto& id : kEts) fn(id);
}

}  // namespace

TableReport check_table(const OmegaTable& t, CheckLevel level) {
    TableReport rep;
    const int n = t.size();
    for_each_identity(level, [&](const Identity& id) {
        ++rep.families_checked;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) {
                    auto [l, r] = id.eval(t, a, b, c);
                    if (l != r)
                        rep.violations.push_back({id.axiom, id.eq, id.text, a, b, c, l, r});
                }
    });
    rep.passed = rep.violations.empty();
    return rep;
}

bool table_passes(const OmegaTable& t, CheckLevel level) {
    const int n = t.size();
    bool ok = true;
    for_each_identity(level, [&](const Identity& id) {
        if (!ok) return;
        for (int a = 0; a < n && ok; ++a)
            for (int b = 0; b < n && ok; ++b)
                for (int c = 0; c < n && ok; ++c) {
                    auto [l, r] = id.eval(t, a, b, c);
                    if (l != r) ok = false;
                }
    });
    return ok;
}

std::string TableReport::to_json() const {
    ordered_json j;
    j["passed"] = passed;
    j["families_checked"] = families_checked;
    j["violations"] = ordered_json::array();
    for (const auto& v : violations) {
        ordered_json jv;
        jv["axiom"] = v.axiom;
        if (v.eq > 0) jv["eq"] = v.eq;
        jv["identity"] = v.text;
        jv["witness"] = {v.alpha, v.beta, v.gamma};
        jv["lhs"] = v.lhs;
        jv["rhs"] = v.rhs;
        j["violations"].push_back(jv);
    }
    return j.dump(2);
}

std::string OmegaTable::to_json() const {
    ordered_json j;
    j["size"] = size_;
    for (int op = 0; op < 6; ++op) {
        ordered_json rows = ordered_json::array();
        for (int a = 0; a < size_; ++a) {
            ordered_json row = ordered_json::array();
            for (int b = 0; b < size_; ++b) row.push_back(tables_[op][a * size_ + b]);
            rows.push_back(row);
        }
        j[kOpJsonKeys[op]] = rows;
    }
    return j.dump(2);
}

OmegaTable OmegaTable::from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw Error(Errc::parse, std::string("table JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("size") || !j["size"].is_number_integer())
        throw Error(Errc::parse, "table JSON: missing integer field 'size'");
    int n = j["size"].get<int>();
    if (n <= 0) throw Error(Errc::invalid, "table JSON: size must be positive");
    std::array<std::vector<int>, 6> tabs;
    for (int op = 0; op < 6; ++op) {
        if (!j.contains(kOpJsonKeys[op]))
            throw Error(Errc::parse, std::string("table JSON: missing table '") + kOpJsonKeys[op] + "'");
        const auto& rows = j[kOpJsonKeys[op]];
        if (!rows.is_array() || static_cast<int>(rows.size()) != n)
            throw Error(Errc::invalid, std::string("table JSON: '") + kOpJsonKeys[op] + "' must have " +
                                           std::to_string(n) + " rows");
        auto& flat = tabs[op];
        flat.reserve(n * n);
        for (const auto& row : rows) {
            if (!row.is_array() || static_cast<int>(row.size()) != n)
                throw Error(Errc::invalid, std::string("table JSON: '") + kOpJsonKeys[op] +
                                               "' rows must have " + std::to_string(n) + " entries");
            for (const auto& e : row) {
                if (!e.is_number_integer())
                    throw Error(Errc::parse, std::string("table JSON: '") + kOpJsonKeys[op] +
                                                 "' entries must be integers");
                flat.push_back(e.get<int>());
            }
        }
    }
    return OmegaTable(n, std::move(tabs));
}

namespace {

std::vector<int> fill(int n, int (*f)(int, int)) {
    std::vector<int> v(n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) v[a * n + b] = f(a, b);
    return v;
}

int proj_left(int a, int) { return a; }
int proj_right(int, int b) { return b; }
int const_zero(int, int) { return 0; }

}  // namespace

OmegaTable builtin_table(const std::string& name, int n,
                         const std::vector<int>* family_product,
                         const std::vector<int>* family_star) {
    if (n <= 0) throw Error(Errc::domain, "builtin: size must be positive");
    using TA = std::array<std::vector<int>, 6>;
    if (name == "trivial") {
        TA t;
        for (auto& v : t) v = fill(n, const_zero);
        return OmegaTable(n, std::move(t));
    }
    if (name == "projections_A" || name == "projections_B") {
        TA t;
        t[static_cast<int>(Op::LeftArrow)] = fill(n, proj_left);
        t[static_cast<int>(Op::RightArrow)] = fill(n, proj_right);
        t[static_cast<int>(Op::RTri)] = fill(n, proj_left);
        t[static_cast<int>(Op::LTri)] = fill(n, proj_right);
        bool a_variant = name == "projections_A";
        t[static_cast<int>(Op::Star)] = fill(n, a_variant ? proj_left : proj_right);
        t[static_cast<int>(Op::Dot)] = fill(n, a_variant ? proj_right : proj_left);
        return OmegaTable(n, std::move(t));
    }
    if (name == "matching") {
        TA t;
        t[static_cast<int>(Op::LeftArrow)] = fill(n, proj_left);
        t[static_cast<int>(Op::RightArrow)] = fill(n, proj_right);
        t[static_cast<int>(Op::RTri)] = fill(n, proj_left);
        t[static_cast<int>(Op::LTri)] = fill(n, proj_right);
        t[static_cast<int>(Op::Star)] = fill(n, proj_right);
        t[static_cast<int>(Op::Dot)] = fill(n, proj_left);
        return OmegaTable(n, std::move(t));
    }
    if (name == "family") {
        if (!family_product || static_cast<int>(family_product->size()) != n * n)
            throw Error(Errc::domain, "builtin family: needs an n x n product table");
        const auto& p = *family_product;
        for (int v : p)
            if (v < 0 || v >= n) throw Error(Errc::invalid, "builtin family: product entry out of range");
        // the supplied product must be associative; report the first offending triple
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (p[p[a * n + b] * n + c] != p[a * n + p[b * n + c]])
                        throw Error(Errc::invalid, "builtin family: product not associative at (" +
                                                       std::to_string(a) + "," + std::to_string(b) + "," +
                                                       std::to_string(c) + ")");
        TA t;
        t[static_cast<int>(Op::LeftArrow)] = p;
        t[static_cast<int>(Op::RightArrow)] = p;
        t[static_cast<int>(Op::Dot)] = p;
        t[static_cast<int>(Op::RTri)] = fill(n, proj_left);
        t[static_cast<int>(Op::LTri)] = fill(n, proj_right);
        if (family_star) {
            if (static_cast<int>(family_star->size()) != n * n)
                throw Error(Errc::domain, "builtin family: star table must be n x n");
            t[static_cast<int>(Op::Star)] = *family_star;
        } else {
            t[static_cast<int>(Op::Star)] = fill(n, proj_right);
        }
        OmegaTable table(n, std::move(t));
        TableReport rep = check_ets(table);
        if (!rep.passed) {
            const auto& v = rep.violations.front();
            throw Error(Errc::invalid, "builtin family: assembled table fails " + v.axiom + " [" + v.text +
                                           "] at (" + std::to_string(v.alpha) + "," + std::to_string(v.beta) +
                                           "," + std::to_string(v.gamma) + ")");
        }
        return table;
    }
    throw Error(Errc::domain, "unknown builtin table '" + name + "'");
}

}  // namespace otrid
