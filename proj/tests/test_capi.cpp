#include <cstring>
#include <string>

#include "doctest.h"
#include "otrid.h"

namespace {

struct StringOut {
    char* p = nullptr;
    ~StringOut() { otrid_string_free(p); }
    std::string str() const { return p ? p : ""; }
};

struct TableHandle {
    otrid_table* t = nullptr;
    ~TableHandle() { otrid_table_free(t); }
};

}  // namespace

TEST_CASE("version and feature list") {
    CHECK(std::string(otrid_version()).find("otrid") == 0);
    CHECK(std::string(otrid_feature_list()).find("Koszul dual") != std::string::npos);
}

TEST_CASE("table lifecycle through the C surface") {
    TableHandle h;
    REQUIRE(otrid_table_builtin("matching", 2, nullptr, &h.t) == OTRID_OK);
    CHECK(otrid_table_size(h.t) == 2);

    StringOut json;
    REQUIRE(otrid_table_to_json(h.t, &json.p) == OTRID_OK);
    TableHandle back;
    REQUIRE(otrid_table_parse_json(json.p, &back.t) == OTRID_OK);
    StringOut json2;
    REQUIRE(otrid_table_to_json(back.t, &json2.p) == OTRID_OK);
    CHECK(json.str() == json2.str());

    StringOut rep;
    REQUIRE(otrid_table_check(h.t, "ets", &rep.p) == OTRID_OK);
    CHECK(rep.str().find("\"passed\": true") != std::string::npos);

    int comm = -1;
    REQUIRE(otrid_table_is_commutative(h.t, &comm) == OTRID_OK);
    CHECK(comm == 0);

    TableHandle opp;
    REQUIRE(otrid_table_opposite(h.t, &opp.t) == OTRID_OK);
    TableHandle oppopp;
    REQUIRE(otrid_table_opposite(opp.t, &oppopp.t) == OTRID_OK);
    StringOut j3;
    REQUIRE(otrid_table_to_json(oppopp.t, &j3.p) == OTRID_OK);
    CHECK(j3.str() == json.str());
}

TEST_CASE("error paths set codes and messages") {
    otrid_table* t = nullptr;
    CHECK(otrid_table_parse_json("{not json", &t) == OTRID_ERR_PARSE);
    CHECK(std::strlen(otrid_last_error()) > 0);
    CHECK(otrid_table_parse_json(nullptr, &t) == OTRID_ERR_NULL);
    CHECK(otrid_table_builtin("no_such", 2, nullptr, &t) == OTRID_ERR_DOMAIN);

    TableHandle h;
    REQUIRE(otrid_table_builtin("trivial", 1, nullptr, &h.t) == OTRID_OK);
    char* out = nullptr;
    CHECK(otrid_table_check(h.t, "bogus", &out) == OTRID_ERR_DOMAIN);
    CHECK(out == nullptr);
    CHECK(otrid_trees_count(0, 1, 1, &out) == OTRID_ERR_DOMAIN);
    CHECK(otrid_trees_enumerate(9, "x", 1, 8, &out) == OTRID_ERR_LIMIT);
}

TEST_CASE("tree operations through the C surface") {
    StringOut count;
    REQUIRE(otrid_trees_count(3, 1, 1, &count.p) == OTRID_OK);
    CHECK(count.str() == "11");

    StringOut lines;
    REQUIRE(otrid_trees_enumerate(2, "x", 1, 8, &lines.p) == OTRID_OK);
    CHECK(lines.str() == "((| x |:0) x |)\n(| x (|:0 x |))\n(| x |:0 x |)\n");

    StringOut canon;
    REQUIRE(otrid_tree_canonical("( | x  ( |:0 y | ) )", 1, &canon.p) == OTRID_OK);
    CHECK(canon.str() == "(| x (|:0 y |))");
}

TEST_CASE("tree product through the C surface") {
    TableHandle h;
    REQUIRE(otrid_table_builtin("matching", 2, nullptr, &h.t) == OTRID_OK);
    StringOut out;
    REQUIRE(otrid_tree_product(h.t, "prec", 1, "(| x |)", "(| y |)", 0, &out.p) == OTRID_OK);
    CHECK(out.str() == "1*(| x (|:1 y |))");

    StringOut unit;
    REQUIRE(otrid_tree_product(h.t, "circ", 0, "|", "(| y |)", 0, &unit.p) == OTRID_OK);
    CHECK(unit.str() == "0");

    char* bad = nullptr;
    CHECK(otrid_tree_product(h.t, "prec", 9, "(| x |)", "(| y |)", 0, &bad) == OTRID_ERR_DOMAIN);
    CHECK(otrid_tree_product(h.t, "prec", 0, "(| x", "(| y |)", 0, &bad) == OTRID_ERR_PARSE);
}

TEST_CASE("equivalence probe and fuzz through the C surface") {
    TableHandle h;
    REQUIRE(otrid_table_builtin("projections_B", 2, nullptr, &h.t) == OTRID_OK);
    int ets = -1, ax = -1;
    REQUIRE(otrid_ets_equivalence_probe(h.t, 6, &ets, &ax) == OTRID_OK);
    CHECK(ets == 1);
    CHECK(ax == 1);

    StringOut rep;
    REQUIRE(otrid_axioms_fuzz(h.t, "trees", nullptr, 7, 0, 0, &rep.p) == OTRID_OK);
    CHECK(rep.str().find("\"passed\": true") != std::string::npos);
}

TEST_CASE("words and rb through the C surface") {
    TableHandle h;
    REQUIRE(otrid_table_builtin("matching", 2, nullptr, &h.t) == OTRID_OK);

    otrid_algebra* alg = nullptr;
    // pointwise d=2 over two products
    const char* alg_json =
        "{\"dim\": 2, \"star\": {\"0\": [[[[1,0]],[]],[[],[[1,1]]]], \"1\": [[[[1,0]],[]],[[],[[1,1]]]]}}";
    REQUIRE(otrid_algebra_parse_json(alg_json, &alg) == OTRID_OK);
    StringOut mrep;
    REQUIRE(otrid_algebra_check_matching(alg, &mrep.p) == OTRID_OK);
    CHECK(mrep.str().find("\"passed\": true") != std::string::npos);

    StringOut prod;
    REQUIRE(otrid_word_product(h.t, alg, "prec", 1, "0", "1", 0, &prod.p) == OTRID_OK);
    CHECK(prod.str() == "1*0 :1 1");
    otrid_algebra_free(alg);

    otrid_rb* rb = nullptr;
    const char* rb_json =
        "{\"dim\": 2, \"mult\": [[[[\"1\",0]],[]],[[],[[\"1\",1]]]],"
        " \"operators\": {\"0\": [[\"0\",\"0\"],[\"1\",\"0\"]], \"1\": [[\"0\",\"0\"],[\"0\",\"0\"]]},"
        " \"weights\": {\"0\": \"1\", \"1\": \"0\"}}";
    REQUIRE(otrid_rb_parse_json(rb_json, &rb) == OTRID_OK);
    StringOut vrep;
    REQUIRE(otrid_rb_verify(h.t, rb, &vrep.p) == OTRID_OK);
    CHECK(vrep.str().find("\"passed\": true") != std::string::npos);
    StringOut irep;
    REQUIRE(otrid_rb_induce_check(h.t, rb, 64, 0, &irep.p) == OTRID_OK);
    CHECK(irep.str().find("\"passed\": true") != std::string::npos);
    otrid_rb_free(rb);
}

TEST_CASE("tensor and operad through the C surface") {
    TableHandle h;
    REQUIRE(otrid_table_builtin("matching", 2, nullptr, &h.t) == OTRID_OK);

    StringOut phi;
    REQUIRE(otrid_tensor_phi(h.t, &phi.p) == OTRID_OK);
    CHECK(phi.str().find("phi_right") != std::string::npos);

    StringOut probe;
    REQUIRE(otrid_tensor_probe(h.t, "generation", "x", 3, &probe.p) == OTRID_OK);
    CHECK(probe.str().find("\"ok\": true") != std::string::npos);

    StringOut rel;
    REQUIRE(otrid_operad_relations(h.t, 0, &rel.p) == OTRID_OK);
    CHECK(rel.str().find("\"rank\": 28") != std::string::npos);

    StringOut dual;
    REQUIRE(otrid_operad_koszul_dual(h.t, 1, &dual.p) == OTRID_OK);
    CHECK(dual.str().find("\"dual_rank\": 44") != std::string::npos);
    CHECK(dual.str().find("\"spans_match\": true") != std::string::npos);

    StringOut assoc;
    REQUIRE(otrid_operad_assoc(h.t, "1,1", "1,1", "1,1", &assoc.p) == OTRID_OK);
    CHECK(assoc.str().find("\"remark_agrees\": true") != std::string::npos);
}
