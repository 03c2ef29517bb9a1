#include <doctest.h>

#include "test_support.hpp"

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "ramsey/catalog.hpp"
#include "ramsey/certificate_doc.hpp"
#include "ramsey/constructions.hpp"
#include "ramsey/graph6.hpp"

using namespace ramsey;

TEST_CASE("graph6 encoding of the forced small cases")
{
    CHECK(encode_graph6(Graph::from_edges(2, {{0, 1}})) == "A_");
    CHECK(encode_graph6(Graph::from_edges(1, {})) == "@");
    CHECK(encode_graph6(Graph::from_edges(2, {})) == "A?");
    CHECK(encode_graph6(Graph::from_edges(0, {})) == "?");
    CHECK(encode_graph6(Graph::from_edges(5, {})) == "D??");

    CHECK(decode_graph6("A_") == Graph::from_edges(2, {{0, 1}}));
    CHECK(decode_graph6("@") == Graph::from_edges(1, {}));
    CHECK(decode_graph6("D??") == Graph::from_edges(5, {}));
    CHECK(decode_graph6("Bw") == Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}}));
}

TEST_CASE("graph6 decode errors are distinct")
{
    auto error_code = [](const std::string& text) -> std::optional<Graph6Error::Code> {
        try {
            decode_graph6(text);
        } catch (const Graph6Error& e) {
            return e.code();
        }
        return std::nullopt;
    };
    // n=5 needs exactly two body bytes
    CHECK(error_code("D?") == Graph6Error::Code::length_mismatch);
    CHECK(error_code("D???") == Graph6Error::Code::length_mismatch);
    // n=2 leaves five padding bits; 'O' sets one of them
    CHECK(error_code("AO") == Graph6Error::Code::trailing_bits);
    // bytes outside 63..126
    CHECK(error_code("A ") == Graph6Error::Code::malformed_header);
    CHECK(error_code("") == Graph6Error::Code::malformed_header);
    // eight-byte order form
    CHECK(error_code("~~?????") == Graph6Error::Code::unsupported_order);
    // long form order above the 128-vertex cap
    CHECK(error_code("~?B?") == Graph6Error::Code::unsupported_order);
    // truncated long-form header
    CHECK(error_code("~?") == Graph6Error::Code::malformed_header);
}

TEST_CASE("graph6 roundtrip on 500 random graphs and the catalog")
{
    std::mt19937 rng(testsupport::seed(2024));
    std::uniform_int_distribution<int> size(0, 70);
    std::uniform_real_distribution<double> density(0.05, 0.9);
    for (int i = 0; i < 500; ++i) {
        int n = size(rng);
        std::vector<Edge> edges;
        std::bernoulli_distribution coin(density(rng));
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng))
                    edges.emplace_back(u, v);
        Graph g = Graph::from_edges(n, edges);
        CHECK(decode_graph6(encode_graph6(g)) == g);
    }
    for (const auto& entry : catalog_entries()) {
        Graph g = entry.make();
        CHECK(decode_graph6(encode_graph6(g)) == g);
    }
}

TEST_CASE("long-form graph6 for orders above 62")
{
    Graph big = circulant({100, {1, 7, 13}});
    std::string text = encode_graph6(big);
    CHECK(text[0] == '~');
    CHECK(decode_graph6(text) == big);
}

TEST_CASE("certificate documents have a stable field order")
{
    Certificate cert = certify_or_throw(h8(), {ClaimKind::ks, 4, 8}, "catalog:h8");
    std::string text = certificate_to_text(cert);
    std::istringstream is(text);
    std::string line;
    std::vector<std::string> keys;
    while (std::getline(is, line))
        keys.push_back(line.substr(0, line.find(':')));
    CHECK(keys == std::vector<std::string>{"schema", "claim", "graph6", "edges", "triangle_free",
                                           "alpha", "js_free", "provenance", "chosen", "inputs",
                                           "solver"});
    CHECK(text.find("schema: ramsey-cert/1\n") == 0);
    CHECK(text.find("claim: kind=ks s=4 n=8\n") != std::string::npos);
    CHECK(text.find("alpha: 3\n") != std::string::npos);
    CHECK(text.find("triangle_free: true\n") != std::string::npos);
}

TEST_CASE("documents parse back to the same certificate")
{
    PipelineResult pipe = corollary7_pipeline(petersen(), 5);
    std::string text = certificate_to_text(pipe.certificate, &pipe.trace);
    Certificate back = certificate_from_text(text);
    CHECK(back.graph == pipe.certificate.graph);
    CHECK(back.claim == pipe.certificate.claim);
    CHECK(back.alpha == pipe.certificate.alpha);
    CHECK(back.chosen == pipe.certificate.chosen);
    CHECK(back.input_hashes == pipe.certificate.input_hashes);
    CHECK(back.provenance == pipe.certificate.provenance);

    // and the parsed facts re-verify from scratch
    Certificate again = certify_or_throw(back.graph, back.claim);
    CHECK(again.alpha == back.alpha);
}

TEST_CASE("tampered documents are rejected")
{
    Certificate cert = certify_or_throw(c5(), {ClaimKind::ks, 3, 5});
    std::string text = certificate_to_text(cert);

    std::string wrong_edges = text;
    wrong_edges.replace(wrong_edges.find("edges: 0-1"), 10, "edges: 0-2");
    CHECK_THROWS_AS(certificate_from_text(wrong_edges), DocumentError);

    std::string wrong_schema = text;
    wrong_schema.replace(wrong_schema.find("ramsey-cert/1"), 13, "ramsey-cert/9");
    CHECK_THROWS_AS(certificate_from_text(wrong_schema), DocumentError);

    CHECK_THROWS_AS(certificate_from_text("schema: ramsey-cert/1\n"), DocumentError);
}

TEST_CASE("failure documents name the predicate and witness")
{
    CertifyResult res = certify(Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}}),
                                {ClaimKind::ks, 3, 3});
    REQUIRE(std::holds_alternative<WitnessFailure>(res));
    std::string text = failure_to_text({ClaimKind::ks, 3, 3}, std::get<WitnessFailure>(res));
    CHECK(text.find("schema: ramsey-fail/1\n") == 0);
    CHECK(text.find("predicate: triangle_free\n") != std::string::npos);
    CHECK(text.find("witness: 0 1 2\n") != std::string::npos);
}
