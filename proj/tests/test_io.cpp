#include <cstdint>
#include <random>
#include <sstream>
#include <vector>

#include "boxfree/construction.hpp"
#include "boxfree/io.hpp"
#include "doctest.h"

using namespace boxfree;

TEST_SUITE_BEGIN("io");

TEST_CASE("field descriptors") {
    auto f9 = make_field(3, 2);
    CHECK(field_descriptor(*f9) == "GF(3^2)/1,0,1");

    auto parsed = parse_field_descriptor("GF(3^2)");
    CHECK(parsed->modulus() == f9->modulus());

    auto explicit_mod = parse_field_descriptor("GF(3^2)/2,1,1");
    CHECK(explicit_mod->modulus() == std::vector<std::uint32_t>{2, 1, 1});

    CHECK_THROWS_AS(parse_field_descriptor("GF(3^2)/1,1"), parse_error);   // wrong count
    CHECK_THROWS_AS(parse_field_descriptor("GF(3^2)/0,1,1"), parse_error); // reducible
    CHECK_THROWS_AS(parse_field_descriptor("GF(6^2)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_field_descriptor("GF[3^2]"), parse_error);
}

TEST_CASE("polynomial files round-trip") {
    auto f9 = make_field(3, 2);
    const Polynomial f = box_polynomial(*f9);

    std::ostringstream os;
    write_polynomial(os, f);
    const std::string text = os.str();
    CHECK(text.find("field GF(3^2)\n") != std::string::npos);  // canonical modulus stays bare
    CHECK(text.find("arity 2") != std::string::npos);

    std::istringstream is(text);
    const PolynomialFile back = read_polynomial(is);
    CHECK(back.poly.terms() == f.terms());
    CHECK(back.field->modulus() == f9->modulus());
}

TEST_CASE("polynomial files accept comments and explicit moduli") {
    std::istringstream is(
        "# construction polynomial, nonstandard modulus\n"
        "field GF(3^2)/2,1,1\n"
        "arity 2\n"
        "1 : 1,1\n"
        "2 : 0,6\n");
    const PolynomialFile file = read_polynomial(is);
    CHECK(file.field->modulus() == std::vector<std::uint32_t>{2, 1, 1});
    CHECK(file.poly.term_count() == 2);
    CHECK(file.poly.coefficient(Monomial({0, 6})).encoding() == 2);
}

TEST_CASE("polynomial file errors") {
    {
        std::istringstream is("arity 2\n1 : 1,1\n");
        CHECK_THROWS_AS(read_polynomial(is), parse_error);  // missing field
    }
    {
        std::istringstream is("field GF(3^1)\narity 2\n1 : 1\n");
        CHECK_THROWS_AS(read_polynomial(is), parse_error);  // term arity mismatch
    }
    {
        std::istringstream is("field GF(3^1)\narity 1\n7 : 1\n");
        CHECK_THROWS_AS(read_polynomial(is), parse_error);  // coefficient out of range
    }
}

TEST_CASE("edge lists round-trip") {
    const BoxInstance inst = build_instance(3, 2);
    std::ostringstream os;
    write_edge_list(os, inst.graph);
    const std::string text = os.str();
    CHECK(text.rfind("# r=2 parts=8,8\n", 0) == 0);

    std::istringstream is(text);
    const EdgeListFile back = read_edge_list(is);
    CHECK(back.declared_sizes == std::vector<std::uint64_t>{8, 8});
    REQUIRE(back.graph.num_edges() == inst.graph.num_edges());
    for (std::size_t e = 0; e < back.graph.num_edges(); ++e) {
        const auto edge = back.graph.edge(e);
        std::vector<std::uint32_t> labels(edge.size());
        for (std::size_t i = 0; i < edge.size(); ++i) {
            labels[i] = back.graph.label(i, edge[i]);
        }
        // The original graph uses encodings as labels with index = enc - 1.
        std::vector<std::uint32_t> idx(labels.size());
        for (std::size_t i = 0; i < labels.size(); ++i) idx[i] = labels[i] - 1;
        CHECK(inst.graph.contains(idx));
    }

    SUBCASE("writer output is canonical: rewriting parses to the same bytes") {
        std::ostringstream os2;
        write_edge_list(os2, back.graph);
        // Part sizes may shrink to the used labels, so compare edge lines.
        const auto body = [](const std::string& s) { return s.substr(s.find('\n') + 1); };
        CHECK(body(os2.str()) == body(text));
    }
}

TEST_CASE("edge list parse errors") {
    {
        std::istringstream is("1:1 2:2\n");
        CHECK_THROWS_AS(read_edge_list(is), parse_error);  // edge before header
    }
    {
        std::istringstream is("# r=2 parts=3\n");
        CHECK_THROWS_AS(read_edge_list(is), parse_error);  // wrong parts count
    }
    {
        std::istringstream is("# r=2 parts=3,3\n2:1 1:2\n");
        CHECK_THROWS_AS(read_edge_list(is), parse_error);  // out-of-order part index
    }
    {
        std::istringstream is("# r=2 parts=3,3\n1:1\n");
        CHECK_THROWS_AS(read_edge_list(is), parse_error);  // short edge
    }
    {
        std::istringstream is("# r=2 parts=1,1\n1:1 2:1\n1:2 2:2\n");
        CHECK_THROWS_AS(read_edge_list(is), parse_error);  // more labels than declared
    }
}

TEST_CASE("empty edge list parses to an edgeless hypergraph") {
    std::istringstream is("# r=3 parts=4,4,4\n");
    const EdgeListFile file = read_edge_list(is);
    CHECK(file.graph.num_edges() == 0);
    CHECK(file.graph.arity() == 3);
    CHECK(file.declared_sizes == std::vector<std::uint64_t>{4, 4, 4});
}

TEST_CASE("random hypergraphs survive a write/read cycle") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t r = 2 + trial % 3;
        const std::uint32_t n = 2 + static_cast<std::uint32_t>(rng() % 5);
        std::vector<std::uint32_t> labels(n);
        for (std::uint32_t i = 0; i < n; ++i) labels[i] = i * 3 + 1;  // sparse labels
        Hypergraph h(std::vector<std::vector<std::uint32_t>>(r, labels));
        const int edges = static_cast<int>(rng() % (2 * n));
        std::vector<std::uint32_t> idx(r);
        for (int e = 0; e < edges; ++e) {
            for (auto& v : idx) v = rng() % n;
            h.add_edge(idx);
        }

        std::ostringstream os;
        write_edge_list(os, h);
        std::istringstream is(os.str());
        const EdgeListFile back = read_edge_list(is);
        CHECK(back.graph.num_edges() == h.num_edges());
        for (std::size_t e = 0; e < back.graph.num_edges(); ++e) {
            const auto edge = back.graph.edge(e);
            std::vector<std::uint32_t> tuple_labels(r);
            for (std::size_t i = 0; i < r; ++i) {
                tuple_labels[i] = back.graph.label(i, edge[i]);
            }
            bool found = false;
            for (std::size_t e2 = 0; e2 < h.num_edges() && !found; ++e2) {
                const auto orig = h.edge(e2);
                bool same = true;
                for (std::size_t i = 0; i < r; ++i) {
                    if (h.label(i, orig[i]) != tuple_labels[i]) { same = false; break; }
                }
                found = same;
            }
            CHECK(found);
        }
    }
}

TEST_CASE("instance report JSON carries the contract fields") {
    const BoxInstance inst = build_instance(2, 2);
    const auto j = to_json(inst.report);
    CHECK(j["p"] == 2);
    CHECK(j["r"] == 2);
    CHECK(j["field"] == "GF(2^2)/1,1,1");
    CHECK(j["n_per_part"] == 3);
    CHECK(j["num_vertices"] == 6);
    CHECK(j["num_edges"] == 6);
    CHECK(j["expected_edges"] == 6);
    CHECK(j["box_free"] == true);
    CHECK(j["density_ok"] == true);
    CHECK(j["density_exponent"] == "3/2");
    CHECK(j["mode"] == "fast");

    BuildOptions opts;
    opts.check_box = false;
    const auto skipped = to_json(build_instance(2, 2, opts).report);
    CHECK(skipped["box_free"] == "skipped-budget");
}

TEST_CASE("bounds table renders both ways") {
    const auto table = comparison_table(5);
    const auto j = to_json(table);
    REQUIRE(j.size() == 4);
    CHECK(j[0]["r"] == 2);
    CHECK(j[0]["matches_cpz"] == true);
    CHECK(j[3]["r"] == 5);
    CHECK(j[3]["matches_cpz"] == false);
    CHECK(j[3]["cpz"] == "34/7");
    CHECK(j[3]["construction"] == "24/5");

    const std::string text = render_bounds_table(table);
    CHECK(text.find("3/2") != std::string::npos);
    CHECK(text.find("34/7") != std::string::npos);
}

TEST_SUITE_END();
