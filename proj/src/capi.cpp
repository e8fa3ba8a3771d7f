#include "otrid.h"

#include <cstring>
#include <sstream>

#include "json.hpp"
#include "otrid/error.hpp"
#include "otrid/omega_table.hpp"
#include "otrid/operad.hpp"
#include "otrid/rota_baxter.hpp"
#include "otrid/schroeder_tree.hpp"
#include "otrid/tensor_collapse.hpp"
#include "otrid/tree_algebra.hpp"
#include "otrid/tridend.hpp"
#include "otrid/typed_words.hpp"

using namespace otrid;
using nlohmann::ordered_json;

struct otrid_table {
    OmegaTable value;
};
struct otrid_algebra {
    MatchingAlgebra value;
};
struct otrid_rb {
    OmegaRBAlgebra value;
};

namespace {

thread_local std::string g_last_error;

int set_error(const Error& e) {
    g_last_error = e.what();
    switch (e.code()) {
        case Errc::parse: return OTRID_ERR_PARSE;
        case Errc::invalid: return OTRID_ERR_INVALID;
        case Errc::domain: return OTRID_ERR_DOMAIN;
        case Errc::limit: return OTRID_ERR_LIMIT;
    }
    return OTRID_ERR_INVALID;
}

int set_error(const std::exception& e) {
    g_last_error = e.what();
    return OTRID_ERR_INVALID;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <class Fn>
int guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const Error& e) {
        return set_error(e);
    } catch (const std::exception& e) {
        return set_error(e);
    }
}

int require(bool cond, const char* what) {
    if (cond) return OTRID_OK;
    g_last_error = std::string("null argument: ") + what;
    return OTRID_ERR_NULL;
}

Prod parse_op(const char* op) {
    std::string s(op);
    if (s == "prec") return Prod::Prec;
    if (s == "succ") return Prod::Succ;
    if (s == "circ") return Prod::Circ;
    throw Error(Errc::domain, "op must be prec, succ or circ");
}

std::vector<std::string> split_labels(const char* labels) {
    std::vector<std::string> out;
    std::istringstream in(labels ? labels : "x");
    std::string tok;
    while (in >> tok) out.push_back(tok);
    if (out.empty()) out.push_back("x");
    return out;
}

std::vector<Rational> parse_csv_rationals(const char* text, int n, const char* what) {
    if (!text) throw Error(Errc::domain, std::string(what) + ": missing coefficient vector");
    std::vector<Rational> out;
    std::string s(text);
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        // trim spaces
        size_t b = tok.find_first_not_of(' ');
        size_t e = tok.find_last_not_of(' ');
        tok = b == std::string::npos ? "" : tok.substr(b, e - b + 1);
        auto r = Rational::parse(tok);
        if (!r) throw Error(Errc::parse, std::string(what) + ": bad rational '" + tok + "'");
        out.push_back(*r);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (static_cast<int>(out.size()) != n)
        throw Error(Errc::domain, std::string(what) + ": expected " + std::to_string(n) + " entries");
    return out;
}

}  // namespace

extern "C" {

const char* otrid_version(void) { return "otrid 1.0.0"; }

const char* otrid_feature_list(void) {
    return "extended di/triassociative semigroup tables: 33-identity exhaustive checker, builtins, opposite\n"
           "leaf-typed angularly decorated Schroeder trees: grammar, enumeration, exact counting\n"
           "free tridendriform products on trees (prec/circ/succ families) with boundary conventions\n"
           "typed-word quasi-shuffle products over matching associative algebras\n"
           "Rota-Baxter operator families: identity verification and induced products\n"
           "tensor collapse to classical tridendriform structures, generation/freeness probes\n"
           "quadratic operad presentation: relation space, Koszul dual, associativity conditions\n";
}

const char* otrid_last_error(void) { return g_last_error.c_str(); }

void otrid_string_free(char* s) { std::free(s); }

int otrid_table_parse_json(const char* json, otrid_table** out) {
    int rc = require(json && out, "json/out");
    if (rc) return rc;
    return guarded([&] {
        *out = new otrid_table{OmegaTable::from_json(json)};
        return OTRID_OK;
    });
}

int otrid_table_builtin(const char* name, int size, const char* aux_json, otrid_table** out) {
    int rc = require(name && out, "name/out");
    if (rc) return rc;
    return guarded([&] {
        std::vector<int> product, star;
        const std::vector<int>*pp = nullptr, *ps = nullptr;
        if (aux_json && std::strlen(aux_json) > 0) {
            ordered_json j;
            try {
                j = ordered_json::parse(aux_json);
            } catch (const std::exception& e) {
                throw Error(Errc::parse, std::string("aux JSON: ") + e.what());
            }
            auto read_table = [&](const ordered_json& rows, std::vector<int>& flat) {
                if (!rows.is_array()) throw Error(Errc::parse, "aux JSON: expected a 2D array");
                for (const auto& row : rows) {
                    if (!row.is_array()) throw Error(Errc::parse, "aux JSON: expected a 2D array");
                    for (const auto& e : row) flat.push_back(e.get<int>());
                }
            };
            if (j.is_array()) {
                read_table(j, product);
                pp = &product;
            } else if (j.is_object()) {
                if (j.contains("product")) {
                    read_table(j["product"], product);
                    pp = &product;
                }
                if (j.contains("star")) {
                    read_table(j["star"], star);
                    ps = &star;
                }
            }
        }
        *out = new otrid_table{builtin_table(name, size, pp, ps)};
        return OTRID_OK;
    });
}

int otrid_table_random(int size, uint64_t seed, otrid_table** out) {
    int rc = require(out != nullptr, "out");
    if (rc) return rc;
    return guarded([&] {
        *out = new otrid_table{OmegaTable::random(size, seed)};
        return OTRID_OK;
    });
}

void otrid_table_free(otrid_table* t) { delete t; }

int otrid_table_size(const otrid_table* t) { return t ? t->value.size() : 0; }

int otrid_table_to_json(const otrid_table* t, char** out_json) {
    int rc = require(t && out_json, "table/out");
    if (rc) return rc;
    return guarded([&] {
        *out_json = dup_string(t->value.to_json());
        return OTRID_OK;
    });
}

int otrid_table_opposite(const otrid_table* t, otrid_table** out) {
    int rc = require(t && out, "table/out");
    if (rc) return rc;
    return guarded([&] {
        *out = new otrid_table{t->value.opposite()};
        return OTRID_OK;
    });
}

int otrid_table_is_commutative(const otrid_table* t, int* out) {
    int rc = require(t && out, "table/out");
    if (rc) return rc;
    return guarded([&] {
        *out = t->value.is_commutative() ? 1 : 0;
        return OTRID_OK;
    });
}

int otrid_table_check(const otrid_table* t, const char* level, char** out_report_json) {
    int rc = require(t && level && out_report_json, "table/level/out");
    if (rc) return rc;
    return guarded([&] {
        std::string s(level);
        CheckLevel lv;
        if (s == "diassociative")
            lv = CheckLevel::Diassociative;
        else if (s == "eds")
            lv = CheckLevel::Eds;
        else if (s == "ets")
            lv = CheckLevel::Ets;
        else
            throw Error(Errc::domain, "level must be diassociative, eds or ets");
        *out_report_json = dup_string(check_table(t->value, lv).to_json());
        return OTRID_OK;
    });
}

int otrid_trees_count(int n, int x_size, int omega_size, char** out_decimal) {
    int rc = require(out_decimal != nullptr, "out");
    if (rc) return rc;
    return guarded([&] {
        *out_decimal = dup_string(count_trees(n, x_size, omega_size).str());
        return OTRID_OK;
    });
}

int otrid_trees_enumerate(int n, const char* labels, int omega_size, int max_n, char** out_lines) {
    int rc = require(out_lines != nullptr, "out");
    if (rc) return rc;
    return guarded([&] {
        auto trees = enumerate_trees(n, split_labels(labels), omega_size, max_n);
        std::string s;
        for (const auto& t : trees) {
            s += t.canonical();
            s += "\n";
        }
        *out_lines = dup_string(s);
        return OTRID_OK;
    });
}

int otrid_tree_canonical(const char* text, int omega_size, char** out) {
    int rc = require(text && out, "text/out");
    if (rc) return rc;
    return guarded([&] {
        *out = dup_string(parse_tree(text, omega_size).canonical());
        return OTRID_OK;
    });
}

int otrid_tree_product(const otrid_table* t, const char* op, int omega, const char* left,
                       const char* right, int unchecked, char** out_comb) {
    int rc = require(t && op && left && right && out_comb, "table/op/left/right/out");
    if (rc) return rc;
    return guarded([&] {
        FreeTreeAlgebra alg(t->value, unchecked == 0);
        auto operand = [&](const char* text) -> std::optional<TreeComb> {
            std::string s(text);
            if (s == "|") return std::nullopt;
            return TreeComb::single(parse_tree(s, t->value.size()));
        };
        TreeComb out = alg.product_with_unit(parse_op(op), omega, operand(left), operand(right));
        *out_comb = dup_string(show_tree_comb(out));
        return OTRID_OK;
    });
}

int otrid_ets_equivalence_probe(const otrid_table* t, int leaf_bound, int* ets_ok, int* axioms_ok) {
    int rc = require(t && ets_ok && axioms_ok, "table/out");
    if (rc) return rc;
    return guarded([&] {
        EquivalenceProbe p = ets_equivalence_probe(t->value, leaf_bound);
        *ets_ok = p.ets_ok ? 1 : 0;
        *axioms_ok = p.axioms_ok ? 1 : 0;
        return OTRID_OK;
    });
}

int otrid_axioms_fuzz(const otrid_table* t, const char* structure, const char* algebra_json,
                      int max_size, int samples, uint64_t seed, char** out_report_json) {
    int rc = require(t && structure && out_report_json, "table/structure/out");
    if (rc) return rc;
    return guarded([&] {
        std::string kind(structure);
        ordered_json j;
        j["structure"] = kind;
        j["seed"] = seed;
        TridendReport rep;
        if (kind == "trees") {
            FreeTreeAlgebra alg(t->value, false);
            auto triples = tree_triples_by_total_leaves(max_size, t->value);
            j["triples"] = triples.size();
            rep = check_tridend_axioms(alg, std::span(triples));
        } else if (kind == "words") {
            if (!algebra_json) throw Error(Errc::domain, "words fuzz needs an algebra");
            MatchingAlgebra alg = MatchingAlgebra::from_json(algebra_json);
            WordAlgebra wa(t->value, alg, false);
            std::vector<std::array<WordComb, 3>> triples;
            for (int la = 1; la + 2 <= max_size; ++la)
                for (int lb = 1; la + lb + 1 <= max_size; ++lb)
                    for (int lc = 1; la + lb + lc <= max_size; ++lc)
                        for (const auto& a : enumerate_words(la, alg.dim(), t->value.size()))
                            for (const auto& b : enumerate_words(lb, alg.dim(), t->value.size()))
                                for (const auto& c : enumerate_words(lc, alg.dim(), t->value.size()))
                                    triples.push_back({WordComb::single(a), WordComb::single(b),
                                                       WordComb::single(c)});
            j["triples"] = triples.size();
            rep = check_tridend_axioms(wa, std::span(triples));
        } else if (kind == "rb") {
            if (!algebra_json) throw Error(Errc::domain, "rb fuzz needs an algebra");
            OmegaRBAlgebra alg = OmegaRBAlgebra::from_json(algebra_json);
            RBInducedAlgebra ind(t->value, alg, true);
            auto triples = rb_random_triples(alg.dim(), samples, seed);
            j["triples"] = triples.size();
            rep = check_tridend_axioms(ind, std::span(triples));
        } else if (kind == "tensor") {
            CollapsedTreeAlgebra alg(t->value, false);
            std::vector<std::array<CollapsedComb, 3>> triples;
            std::vector<Tree> trees;
            for (int n = 1; n + 1 + 4 <= max_size; ++n)
                for (const auto& tr : enumerate_trees(n, {"x"}, t->value.size(), max_size))
                    trees.push_back(tr);
            for (const auto& a : trees)
                for (const auto& b : trees)
                    for (const auto& c : trees) {
                        if (a.leaves() + b.leaves() + c.leaves() > max_size) continue;
                        for (int wa = 0; wa < t->value.size(); ++wa)
                            for (int wb = 0; wb < t->value.size(); ++wb)
                                for (int wc = 0; wc < t->value.size(); ++wc)
                                    triples.push_back({CollapsedComb::single({wa, a}),
                                                       CollapsedComb::single({wb, b}),
                                                       CollapsedComb::single({wc, c})});
                    }
            j["triples"] = triples.size();
            rep = check_tridend_axioms(alg, std::span(triples));
        } else {
            throw Error(Errc::domain, "structure must be trees, words, rb or tensor");
        }
        ordered_json rj = ordered_json::parse(rep.to_json());
        j["passed"] = rj["passed"];
        j["instances_checked"] = rj["instances_checked"];
        j["violations"] = rj["violations"];
        *out_report_json = dup_string(j.dump(2));
        return OTRID_OK;
    });
}

int otrid_algebra_parse_json(const char* json, otrid_algebra** out) {
    int rc = require(json && out, "json/out");
    if (rc) return rc;
    return guarded([&] {
        *out = new otrid_algebra{MatchingAlgebra::from_json(json)};
        return OTRID_OK;
    });
}

void otrid_algebra_free(otrid_algebra* a) { delete a; }

int otrid_algebra_check_matching(const otrid_algebra* a, char** out_report_json) {
    int rc = require(a && out_report_json, "algebra/out");
    if (rc) return rc;
    return guarded([&] {
        *out_report_json = dup_string(check_matching(a->value).to_json());
        return OTRID_OK;
    });
}

int otrid_word_product(const otrid_table* t, const otrid_algebra* a, const char* op, int omega,
                       const char* left, const char* right, int unchecked, char** out_comb) {
    int rc = require(t && a && op && left && right && out_comb, "table/algebra/op/left/right/out");
    if (rc) return rc;
    return guarded([&] {
        WordAlgebra wa(t->value, a->value, unchecked == 0);
        TypedWord l = parse_word(left, a->value.dim(), t->value.size());
        TypedWord r = parse_word(right, a->value.dim(), t->value.size());
        WordComb out = wa.product(parse_op(op), omega, WordComb::single(l), WordComb::single(r));
        *out_comb = dup_string(show_word_comb(out));
        return OTRID_OK;
    });
}

int otrid_rb_parse_json(const char* json, otrid_rb** out) {
    int rc = require(json && out, "json/out");
    if (rc) return rc;
    return guarded([&] {
        *out = new otrid_rb{OmegaRBAlgebra::from_json(json)};
        return OTRID_OK;
    });
}

void otrid_rb_free(otrid_rb* a) { delete a; }

int otrid_rb_verify(const otrid_table* t, const otrid_rb* a, char** out_report_json) {
    int rc = require(t && a && out_report_json, "table/rb/out");
    if (rc) return rc;
    return guarded([&] {
        *out_report_json = dup_string(check_rb(a->value, t->value).to_json());
        return OTRID_OK;
    });
}

int otrid_rb_induce_check(const otrid_table* t, const otrid_rb* a, int samples, uint64_t seed,
                          char** out_report_json) {
    int rc = require(t && a && out_report_json, "table/rb/out");
    if (rc) return rc;
    return guarded([&] {
        RBInducedAlgebra ind(t->value, a->value);  // verifies check_rb + check_ets
        auto triples = rb_random_triples(a->value.dim(), samples, seed);
        TridendReport rep = check_tridend_axioms(ind, std::span(triples));
        ordered_json j = ordered_json::parse(rep.to_json());
        j["seed"] = seed;
        j["samples"] = samples;
        *out_report_json = dup_string(j.dump(2));
        return OTRID_OK;
    });
}

int otrid_tensor_phi(const otrid_table* t, char** out_report_json) {
    int rc = require(t && out_report_json, "table/out");
    if (rc) return rc;
    return guarded([&] {
        *out_report_json = dup_string(phi_properties_json(t->value));
        return OTRID_OK;
    });
}

int otrid_tensor_probe(const otrid_table* t, const char* mode, const char* labels, int n_max,
                       char** out_report_json) {
    int rc = require(t && mode && out_report_json, "table/mode/out");
    if (rc) return rc;
    return guarded([&] {
        std::string m(mode);
        ProbeResult res;
        if (m == "generation")
            res = generation_probe(t->value, split_labels(labels), n_max);
        else if (m == "freeness")
            res = freeness_probe(t->value, split_labels(labels), n_max);
        else
            throw Error(Errc::domain, "mode must be generation or freeness");
        ordered_json j;
        j["mode"] = m;
        j["n_max"] = n_max;
        j["ok"] = res.ok;
        if (!res.ok) {
            j["failed_degree"] = res.failed_degree;
            j["detail"] = res.detail;
        }
        *out_report_json = dup_string(j.dump(2));
        return OTRID_OK;
    });
}

int otrid_operad_relations(const otrid_table* t, int emit_vectors, char** out_report_json) {
    int rc = require(t && out_report_json, "table/out");
    if (rc) return rc;
    return guarded([&] {
        *out_report_json = dup_string(relation_space(t->value).to_json(emit_vectors != 0));
        return OTRID_OK;
    });
}

int otrid_operad_koszul_dual(const otrid_table* t, int emit_presentation, char** out_report_json) {
    int rc = require(t && out_report_json, "table/out");
    if (rc) return rc;
    return guarded([&] {
        RelationSpace dual = koszul_dual(t->value);
        RelationSpace pres = prop43_relations(t->value);
        ordered_json j;
        j["omega_size"] = t->value.size();
        j["ambient_dim"] = dual.basis.dim();
        j["dual_rank"] = dual.rank();
        j["presentation_rank"] = pres.rank();
        j["spans_match"] = dual.span == pres.span;
        if (emit_presentation) {
            ordered_json lines = ordered_json::array();
            for (const auto& line : render_presentation(pres, true)) lines.push_back(line);
            j["presentation"] = lines;
        }
        *out_report_json = dup_string(j.dump(2));
        return OTRID_OK;
    });
}

int otrid_operad_assoc(const otrid_table* t, const char* a, const char* b, const char* c,
                       char** out_report_json) {
    int rc = require(t && out_report_json, "table/out");
    if (rc) return rc;
    return guarded([&] {
        int n = t->value.size();
        auto av = parse_csv_rationals(a, n, "a");
        auto bv = parse_csv_rationals(b, n, "b");
        auto cv = parse_csv_rationals(c, n, "c");
        AssocReport rep = assoc_conditions(t->value, av, bv, cv);
        bool remark = assoc_by_remark(t->value, av, bv, cv);
        ordered_json j = ordered_json::parse(rep.to_json());
        j["associative"] = rep.passed;
        j["remark_verdict"] = remark;
        j["remark_agrees"] = remark == rep.passed;
        *out_report_json = dup_string(j.dump(2));
        return OTRID_OK;
    });
}

}  // extern "C"
