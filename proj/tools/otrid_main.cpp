// otrid command line: thin dispatch over the shared-library C interface.
// Exit codes: 0 = pass, 1 = a check failed or an input was rejected,
// 2 = usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "otrid.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
    bool json = false;
    int threads = 1;  // reserved; the current build computes on one worker
};

class Fail {
public:
    explicit Fail(std::string msg) : msg_(std::move(msg)) {}
    const std::string& message() const { return msg_; }

private:
    std::string msg_;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Fail("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Str {
    char* p = nullptr;
    ~Str() { otrid_string_free(p); }
    std::string str() const { return p ? p : ""; }
};

struct Table {
    otrid_table* t = nullptr;
    ~Table() { otrid_table_free(t); }
};

struct Algebra {
    otrid_algebra* a = nullptr;
    ~Algebra() { otrid_algebra_free(a); }
};

struct RB {
    otrid_rb* r = nullptr;
    ~RB() { otrid_rb_free(r); }
};

void check_rc(int rc) {
    if (rc != OTRID_OK) throw Fail(otrid_last_error());
}

Table load_table(const std::string& path) {
    Table t;
    check_rc(otrid_table_parse_json(read_file(path).c_str(), &t.t));
    return t;
}

Algebra load_algebra(const std::string& path) {
    Algebra a;
    check_rc(otrid_algebra_parse_json(read_file(path).c_str(), &a.a));
    return a;
}

RB load_rb(const std::string& path) {
    RB r;
    check_rc(otrid_rb_parse_json(read_file(path).c_str(), &r.r));
    return r;
}

// crude but sufficient field probes for the reports this binary prints
bool json_flag(const std::string& report, const std::string& key) {
    return report.find("\"" + key + "\": true") != std::string::npos;
}

long long json_count(const std::string& report, const std::string& key) {
    size_t pos = report.find("\"" + key + "\":");
    if (pos == std::string::npos) return -1;
    return std::atoll(report.c_str() + pos + key.size() + 4);
}

int report_verdict(const Options& opt, const std::string& report, const std::string& pass_line,
                   const std::string& fail_line, const std::string& key = "passed") {
    bool ok = json_flag(report, key);
    if (opt.json) {
        std::cout << report << "\n";
    } else {
        std::cout << (ok ? pass_line : fail_line) << "\n";
        if (!ok) std::cout << report << "\n";
    }
    return ok ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations for generalized tridendriform structures"};
    app.require_subcommand(0, 1);
    Options opt;
    app.add_flag("--json", opt.json, "machine-readable JSON output");
    app.add_option("--threads", opt.threads, "worker bound (this build computes on one)")
        ->check(CLI::PositiveNumber);
    bool show_version = false;
    app.add_flag("--version", show_version, "print version and feature coverage");

    // ---- ets ----
    auto* ets = app.add_subcommand("ets", "operation-table checks and constructions");
    std::string table_path, level = "ets", builtin_name, aux_path, star_path, out_path;
    int size = 1;
    bool want_commutative = false;

    auto* ets_check = ets->add_subcommand("check", "verify the axiom families of a table");
    ets_check->add_option("table", table_path, "table JSON file")->required();
    ets_check->add_option("--level", level, "diassociative | eds | ets")
        ->check(CLI::IsMember({"diassociative", "eds", "ets"}));

    auto* ets_builtin = ets->add_subcommand("builtin", "emit a builtin table");
    ets_builtin->add_option("--name", builtin_name, "trivial | projections_A | projections_B | matching | family")
        ->required();
    ets_builtin->add_option("--n", size, "number of elements")->required();
    ets_builtin->add_option("--aux", aux_path, "family: associative product table (2D JSON array)");
    ets_builtin->add_option("--star", star_path, "family: star table (2D JSON array)");
    ets_builtin->add_option("--out", out_path, "write the table here instead of stdout");

    auto* ets_opp = ets->add_subcommand("opposite", "emit the opposite table");
    ets_opp->add_option("table", table_path, "table JSON file")->required();
    ets_opp->add_flag("--commutative", want_commutative, "report whether the table equals its opposite");

    // ---- trees ----
    auto* trees = app.add_subcommand("trees", "decorated Schroeder trees");
    int n = 1, x_size = 1, omega_size = 1, max_n = 8, omega_idx = 0;
    std::string labels = "x", op = "prec", left, right, tree_text;
    bool unchecked = false;

    auto* t_count = trees->add_subcommand("count", "count trees with n+1 leaves");
    t_count->add_option("--n", n)->required();
    t_count->add_option("--x", x_size, "|X|")->required();
    t_count->add_option("--omega", omega_size, "|Omega|")->required();

    auto* t_enum = trees->add_subcommand("enumerate", "list every tree once, canonically sorted");
    t_enum->add_option("--n", n)->required();
    t_enum->add_option("--labels", labels, "space-separated angle labels");
    t_enum->add_option("--omega", omega_size, "|Omega|");
    t_enum->add_option("--max-n", max_n, "resource guard");

    auto* t_parse = trees->add_subcommand("parse", "validate and canonicalize a tree");
    t_parse->add_option("tree", tree_text)->required();
    t_parse->add_option("--omega", omega_size, "|Omega|");

    auto* t_prod = trees->add_subcommand("product", "prec / succ / circ on trees");
    t_prod->add_option("--op", op)->check(CLI::IsMember({"prec", "succ", "circ"}))->required();
    t_prod->add_option("--omega", omega_idx, "index into Omega")->required();
    t_prod->add_option("--table", table_path)->required();
    t_prod->add_option("--left", left, "tree text, or | for the unit")->required();
    t_prod->add_option("--right", right)->required();
    t_prod->add_flag("--unchecked", unchecked, "skip the table precondition");

    // ---- axioms ----
    auto* axioms = app.add_subcommand("axioms", "generic axiom scans");
    std::string structure = "trees", algebra_path;
    int max_leaves = 7, samples = 512;
    uint64_t seed = 0;
    auto* fuzz = axioms->add_subcommand("fuzz", "scan the seven axioms on a structure");
    fuzz->add_option("--structure", structure)
        ->check(CLI::IsMember({"trees", "words", "rb", "tensor"}))
        ->required();
    fuzz->add_option("--table", table_path)->required();
    fuzz->add_option("--algebra", algebra_path, "matching algebra (words) or operator data (rb)");
    fuzz->add_option("--max-leaves", max_leaves, "size bound for trees/words/tensor scans");
    fuzz->add_option("--samples", samples, "triples for rb sampling");
    fuzz->add_option("--seed", seed);

    // ---- words ----
    auto* words = app.add_subcommand("words", "typed words over a matching algebra");
    auto* w_prod = words->add_subcommand("product", "prec / succ / circ on words");
    w_prod->add_option("--op", op)->check(CLI::IsMember({"prec", "succ", "circ"}))->required();
    w_prod->add_option("--omega", omega_idx)->required();
    w_prod->add_option("--table", table_path)->required();
    w_prod->add_option("--algebra", algebra_path)->required();
    w_prod->add_option("--left", left, "word text: letters and :types interleaved")->required();
    w_prod->add_option("--right", right)->required();
    w_prod->add_flag("--unchecked", unchecked, "skip the table/algebra preconditions");

    auto* w_check = words->add_subcommand("check-matching", "verify matching associativity");
    w_check->add_option("--algebra", algebra_path)->required();

    // ---- rb ----
    auto* rb = app.add_subcommand("rb", "Rota-Baxter operator families");
    bool check_axioms_flag = false;
    auto* rb_verify = rb->add_subcommand("verify", "check the family identity");
    rb_verify->add_option("--table", table_path)->required();
    rb_verify->add_option("--algebra", algebra_path)->required();

    auto* rb_induce = rb->add_subcommand("induce", "induced products; optionally scan the axioms");
    rb_induce->add_option("--table", table_path)->required();
    rb_induce->add_option("--algebra", algebra_path)->required();
    rb_induce->add_flag("--check-axioms", check_axioms_flag);
    rb_induce->add_option("--samples", samples);
    rb_induce->add_option("--seed", seed);

    // ---- tensor ----
    auto* tensor = app.add_subcommand("tensor", "collapse to classical structures");
    std::string mode = "generation";
    auto* phi = tensor->add_subcommand("phi", "image/fiber analysis of the three pair maps");
    phi->add_option("--table", table_path)->required();

    auto* probe = tensor->add_subcommand("probe", "generation / freeness span ranks");
    probe->add_option("--mode", mode)->check(CLI::IsMember({"generation", "freeness"}))->required();
    probe->add_option("--table", table_path)->required();
    probe->add_option("--n", n, "degree bound")->required();
    probe->add_option("--labels", labels);

    // ---- operad ----
    auto* operad = app.add_subcommand("operad", "quadratic presentation computations");
    std::string a_csv, b_csv, c_csv;
    bool emit_vectors = false, emit_presentation = false;
    auto* o_rel = operad->add_subcommand("relations", "relation space and its rank");
    o_rel->add_option("--table", table_path)->required();
    o_rel->add_flag("--emit-vectors", emit_vectors);

    auto* o_dual = operad->add_subcommand("koszul-dual", "annihilator and dual presentation");
    o_dual->add_option("--table", table_path)->required();
    o_dual->add_flag("--emit-presentation", emit_presentation);

    auto* o_assoc = operad->add_subcommand("assoc", "associativity of a coefficient combination");
    o_assoc->add_option("--table", table_path)->required();
    o_assoc->add_option("--a", a_csv, "comma-separated rationals over Omega")->required();
    o_assoc->add_option("--b", b_csv)->required();
    o_assoc->add_option("--c", c_csv)->required();

    // let the global --json / --threads flags appear after a subcommand too
    std::function<void(CLI::App*)> allow_fallthrough = [&](CLI::App* cmd) {
        cmd->fallthrough();
        for (CLI::App* sub : cmd->get_subcommands({})) allow_fallthrough(sub);
    };
    for (CLI::App* sub : app.get_subcommands({})) allow_fallthrough(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    if (show_version) {
        std::cout << otrid_version() << "\n" << otrid_feature_list();
        return kExitPass;
    }
    if (app.get_subcommands().empty()) {
        std::cerr << app.help();
        return kExitUsage;
    }

    try {
        if (*ets_check) {
            Table t = load_table(table_path);
            Str rep;
            check_rc(otrid_table_check(t.t, level.c_str(), &rep.p));
            long long fams = json_count(rep.str(), "families_checked");
            std::string tag = level == "ets" ? "ETS" : level == "eds" ? "EDS" : "DIASSOCIATIVE";
            return report_verdict(opt, rep.str(),
                                  tag + ": PASS (" + std::to_string(fams) + "/" + std::to_string(fams) +
                                      " axiom families)",
                                  tag + ": FAIL");
        }
        if (*ets_builtin) {
            std::string aux;
            if (!aux_path.empty() || !star_path.empty()) {
                aux = "{";
                if (!aux_path.empty()) aux += "\"product\": " + read_file(aux_path);
                if (!star_path.empty()) {
                    if (!aux_path.empty()) aux += ", ";
                    aux += "\"star\": " + read_file(star_path);
                }
                aux += "}";
            }
            Table t;
            check_rc(otrid_table_builtin(builtin_name.c_str(), size, aux.empty() ? nullptr : aux.c_str(),
                                         &t.t));
            Str json;
            check_rc(otrid_table_to_json(t.t, &json.p));
            if (out_path.empty()) {
                std::cout << json.str() << "\n";
            } else {
                std::ofstream out(out_path, std::ios::binary);
                if (!out) throw Fail("cannot write '" + out_path + "'");
                out << json.str() << "\n";
            }
            return kExitPass;
        }
        if (*ets_opp) {
            Table t = load_table(table_path);
            if (want_commutative) {
                int comm = 0;
                check_rc(otrid_table_is_commutative(t.t, &comm));
                std::cout << (opt.json ? (comm ? "{\"commutative\": true}" : "{\"commutative\": false}")
                                       : (comm ? "commutative: true" : "commutative: false"))
                          << "\n";
                return comm ? kExitPass : kExitFail;
            }
            Table o;
            check_rc(otrid_table_opposite(t.t, &o.t));
            Str json;
            check_rc(otrid_table_to_json(o.t, &json.p));
            std::cout << json.str() << "\n";
            return kExitPass;
        }
        if (*t_count) {
            Str out;
            check_rc(otrid_trees_count(n, x_size, omega_size, &out.p));
            if (opt.json)
                std::cout << "{\"count\": \"" << out.str() << "\"}\n";
            else
                std::cout << out.str() << "\n";
            return kExitPass;
        }
        if (*t_enum) {
            Str out;
            check_rc(otrid_trees_enumerate(n, labels.c_str(), omega_size, max_n, &out.p));
            std::cout << out.str();
            return kExitPass;
        }
        if (*t_parse) {
            Str out;
            check_rc(otrid_tree_canonical(tree_text.c_str(), omega_size, &out.p));
            std::cout << out.str() << "\n";
            return kExitPass;
        }
        if (*t_prod) {
            Table t = load_table(table_path);
            Str out;
            check_rc(otrid_tree_product(t.t, op.c_str(), omega_idx, left.c_str(), right.c_str(),
                                        unchecked ? 1 : 0, &out.p));
            std::cout << out.str() << "\n";
            return kExitPass;
        }
        if (*fuzz) {
            Table t = load_table(table_path);
            std::string alg_json;
            if (!algebra_path.empty()) alg_json = read_file(algebra_path);
            Str rep;
            check_rc(otrid_axioms_fuzz(t.t, structure.c_str(), alg_json.empty() ? nullptr : alg_json.c_str(),
                                       max_leaves, samples, seed, &rep.p));
            return report_verdict(opt, rep.str(),
                                  "AXIOMS: PASS (structure " + structure + ", seed " +
                                      std::to_string(seed) + ")",
                                  "AXIOMS: FAIL (structure " + structure + ", seed " +
                                      std::to_string(seed) + ")");
        }
        if (*w_prod) {
            Table t = load_table(table_path);
            Algebra a = load_algebra(algebra_path);
            Str out;
            check_rc(otrid_word_product(t.t, a.a, op.c_str(), omega_idx, left.c_str(), right.c_str(),
                                        unchecked ? 1 : 0, &out.p));
            std::cout << out.str() << "\n";
            return kExitPass;
        }
        if (*w_check) {
            Algebra a = load_algebra(algebra_path);
            Str rep;
            check_rc(otrid_algebra_check_matching(a.a, &rep.p));
            return report_verdict(opt, rep.str(), "MATCHING: PASS", "MATCHING: FAIL");
        }
        if (*rb_verify) {
            Table t = load_table(table_path);
            RB r = load_rb(algebra_path);
            Str rep;
            check_rc(otrid_rb_verify(t.t, r.r, &rep.p));
            return report_verdict(opt, rep.str(), "ROTA-BAXTER: PASS", "ROTA-BAXTER: FAIL");
        }
        if (*rb_induce) {
            Table t = load_table(table_path);
            RB r = load_rb(algebra_path);
            Str vrep;
            check_rc(otrid_rb_verify(t.t, r.r, &vrep.p));
            if (!json_flag(vrep.str(), "passed"))
                return report_verdict(opt, vrep.str(), "", "ROTA-BAXTER: FAIL (cannot induce)");
            if (!check_axioms_flag) {
                std::cout << (opt.json ? vrep.str() : "ROTA-BAXTER: PASS (products induced)") << "\n";
                return kExitPass;
            }
            Str rep;
            check_rc(otrid_rb_induce_check(t.t, r.r, samples, seed, &rep.p));
            return report_verdict(opt, rep.str(),
                                  "INDUCED AXIOMS: PASS (" + std::to_string(samples) +
                                      " seeded triples, seed " + std::to_string(seed) + ")",
                                  "INDUCED AXIOMS: FAIL");
        }
        if (*phi) {
            Table t = load_table(table_path);
            Str rep;
            check_rc(otrid_tensor_phi(t.t, &rep.p));
            std::cout << rep.str() << "\n";
            return kExitPass;
        }
        if (*probe) {
            Table t = load_table(table_path);
            Str rep;
            check_rc(otrid_tensor_probe(t.t, mode.c_str(), labels.c_str(), n, &rep.p));
            return report_verdict(opt, rep.str(), "PROBE: PASS (" + mode + ")",
                                  "PROBE: FAIL (" + mode + ")", "ok");
        }
        if (*o_rel) {
            Table t = load_table(table_path);
            Str rep;
            check_rc(otrid_operad_relations(t.t, emit_vectors ? 1 : 0, &rep.p));
            std::cout << rep.str() << "\n";
            return kExitPass;
        }
        if (*o_dual) {
            Table t = load_table(table_path);
            Str rep;
            check_rc(otrid_operad_koszul_dual(t.t, emit_presentation ? 1 : 0, &rep.p));
            std::cout << rep.str() << "\n";
            return json_flag(rep.str(), "spans_match") ? kExitPass : kExitFail;
        }
        if (*o_assoc) {
            Table t = load_table(table_path);
            Str rep;
            check_rc(otrid_operad_assoc(t.t, a_csv.c_str(), b_csv.c_str(), c_csv.c_str(), &rep.p));
            return report_verdict(opt, rep.str(), "ASSOCIATIVE: YES", "ASSOCIATIVE: NO", "associative");
        }
        std::cerr << app.help();
        return kExitUsage;
    } catch (const Fail& f) {
        std::cerr << "error: " << f.message() << "\n";
        return kExitFail;
    }
}
