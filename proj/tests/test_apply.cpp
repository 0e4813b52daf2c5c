#include "gp/apply.hpp"
#include "gp/canonical.hpp"
#include "gp/hostgraph.hpp"
#include "oracle/oracle.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace gp;

namespace {

const CompiledSchema& schema_of(const support::Compiled& c,
                                const std::string& name) {
    const CompiledSchema* s = c.prog->find_schema(name);
    REQUIRE(s != nullptr);
    return *s;
}

} // namespace

TEST_CASE("apply_match: the reserved skip schema returns the host unchanged") {
    support::Compiled c = support::compile_text("main = skip");
    REQUIRE(c.ok());
    const CompiledSchema& skip = schema_of(c, kSkipSchemaName);

    Graph host = support::g({1, 2, 3}, {{0, 1, 7}, {2, 2, 8}});
    std::vector<Match> ms = find_matches(skip, host);
    REQUIRE(ms.size() == 1);
    std::optional<Graph> out = apply_match(skip, ms[0], host);
    REQUIRE(out.has_value());
    CHECK(*out == host);
}

TEST_CASE("apply_match: relabelling an interface node") {
    support::Compiled c = support::compile_text(R"(
choose(x : int)
  left  { node 1 x }
  right { node 1 x_0 }
  interface {1}
main = choose
)");
    REQUIRE(c.ok());
    const CompiledSchema& s = schema_of(c, "choose");

    Graph host = support::g({5});
    std::vector<Match> ms = find_matches(s, host);
    REQUIRE(ms.size() == 1);
    std::optional<Graph> out = apply_match(s, ms[0], host);
    REQUIRE(out.has_value());
    REQUIRE(out->node_count() == 1);
    CHECK(*out->node_labels[0] == support::label2(5, 0));
    CHECK(out->edge_count() == 0);
}

TEST_CASE("apply_match: relabelling keeps incident edges") {
    support::Compiled c = support::compile_text(R"(
r(x, y, a : int)
  left  { node 1 x; node 2 y; edge 1 2 a }
  right { node 1 x+y; node 2 y; edge 1 2 a+1 }
  interface {1, 2}
  where x = 2
main = r
)");
    REQUIRE(c.ok());
    const CompiledSchema& s = schema_of(c, "r");

    // extra structure around the redex must survive untouched
    Graph host = support::g({2, 3, 9}, {{0, 1, 5}, {2, 0, 4}, {1, 2, 6}});
    std::vector<Match> ms = find_matches(s, host);
    REQUIRE(ms.size() == 1);
    std::optional<Graph> out = apply_match(s, ms[0], host);
    REQUIRE(out.has_value());
    CHECK(out->node_count() == 3);
    CHECK(out->edge_count() == 3);
    CHECK(oracle::iso(*out, support::g({5, 3, 9}, {{0, 1, 6}, {2, 0, 4}, {1, 2, 6}})));
}

TEST_CASE("apply_match: node deletion and addition") {
    support::Compiled c = support::compile_text(R"(
r(x : int)
  left  { node 1 x; node 2 0 }
  right { node 1 x; node 3 x_1 }
  interface {1}
main = r
)");
    REQUIRE(c.ok());
    const CompiledSchema& s = schema_of(c, "r");

    Graph host = support::g({4, 0});
    std::vector<Match> ms = find_matches(s, host);
    REQUIRE(ms.size() == 1);
    std::optional<Graph> out = apply_match(s, ms[0], host);
    REQUIRE(out.has_value());
    REQUIRE(out->node_count() == 2);
    CHECK(oracle::iso(*out, [] {
        Graph w;
        w.add_node(int_label(4));
        w.add_node(support::label2(4, 1));
        return w;
    }()));
    CHECK(validate(*out).empty());
    CHECK(is_totally_labelled(*out));
}

TEST_CASE("apply_match: added edges attach through the interface") {
    support::Compiled c = support::compile_text(R"(
link(x, y : int)
  left  { node 1 x; node 2 y }
  right { node 1 x; node 2 y; edge 1 2 x*y }
  interface {1, 2}
  where not edge(1, 2)
main = link
)");
    REQUIRE(c.ok());
    const CompiledSchema& s = schema_of(c, "link");

    Graph host = support::g({3, 4});
    std::vector<Match> ms = find_matches(s, host);
    REQUIRE(ms.size() == 2); // (0,1) and (1,0)
    for (const Match& m : ms) {
        std::optional<Graph> out = apply_match(s, m, host);
        REQUIRE(out.has_value());
        REQUIRE(out->edge_count() == 1);
        const Graph::Edge& e = out->edges[0];
        CHECK(e.label == int_label(12));
        CHECK(e.src != e.tgt);
        // the new edge runs from the image of 1 to the image of 2
        CHECK(*out->node_labels[e.src] == *host.node_labels[m.node_image[0]]);
        CHECK(*out->node_labels[e.tgt] == *host.node_labels[m.node_image[1]]);
    }
}

TEST_CASE("apply_match: right-hand division by zero yields nullopt") {
    support::Compiled c = support::compile_text(R"(
r(x : int)
  left  { node 1 x }
  right { node 1 1/x }
  interface {1}
main = r
)");
    REQUIRE(c.ok());
    const CompiledSchema& s = schema_of(c, "r");
    Graph host = support::g({0});
    std::vector<Match> ms = find_matches(s, host);
    REQUIRE(ms.size() == 1); // the *condition* is fine; the right label is not
    std::string note;
    CHECK_FALSE(apply_match(s, ms[0], host, &note).has_value());
    CHECK_FALSE(note.empty());
}

TEST_CASE("derive_all: list semantics") {
    support::Compiled c = support::compile_text(R"(
a(x : int)
  left  { node 1 x }
  right { node 1 x+1 }
  interface {1}
b(x : int)
  left  { node 1 x }
  right { node 1 x+10 }
  interface {1}
main = {a, b}
)");
    REQUIRE(c.ok());
    const CompiledSchema& a = schema_of(c, "a");
    const CompiledSchema& b = schema_of(c, "b");

    Graph host = support::g({1, 2});

    CHECK(derive_all({}, host).empty());

    std::vector<Derivation> one = derive_all({&a}, host);
    CHECK(one.size() == 2);

    std::vector<Derivation> both = derive_all({&a, &b}, host);
    REQUIRE(both.size() == 4);
    // deterministic order: all of a's derivations, then all of b's
    CHECK(both[0].schema == &a);
    CHECK(both[1].schema == &a);
    CHECK(both[2].schema == &b);
    CHECK(both[3].schema == &b);
    CHECK(oracle::iso(both[0].result, support::g({2, 2})));
    CHECK(oracle::iso(both[3].result, support::g({1, 12})));

    for (const Derivation& d : both) {
        CHECK(validate(d.result).empty());
        CHECK(is_totally_labelled(d.result));
    }
}

TEST_CASE("identity schema families keep the host up to isomorphism") {
    support::Compiled c = support::compile_text(R"(
keep(x, y, a : int)
  left  { node 1 x; node 2 y; edge 1 2 a }
  right { node 1 x; node 2 y; edge 1 2 a }
  interface {1, 2}
main = keep
)");
    REQUIRE(c.ok());
    const CompiledSchema& s = schema_of(c, "keep");
    std::mt19937_64 rng(99);
    for (int i = 0; i < 20; ++i) {
        Graph host = oracle::random_graph(rng, 2, 5, 6, 3, false);
        for (const Derivation& d : derive_all({&s}, host))
            CHECK(oracle::iso(d.result, host));
    }
}

TEST_CASE("apply conformance against the set-construction oracle") {
    std::mt19937_64 rng(20260826);
    int applied = 0;
    for (int trial = 0; trial < 100; ++trial) {
        std::string text = oracle::random_schema_text(rng);
        support::Compiled c = support::compile_text(text);
        REQUIRE(c.ok());
        const CompiledSchema& s = c.prog->schemata.front();
        // Planted hosts guarantee a steady supply of real derivations.
        Graph host = trial % 2 == 0
                         ? oracle::planted_host(rng, s, 5, 4, true)
                         : oracle::random_graph(rng, 0, 5, 6, 4, true);

        std::vector<oracle::FoundMatch> ms = oracle::find_matches(s, host);
        for (const oracle::FoundMatch& om : ms) {
            Match m{om.node_image, om.edge_image, Assignment(s)};
            m.assignment.values = om.bindings;

            std::optional<Graph> got = apply_match(s, m, host);
            std::optional<Graph> want = oracle::apply(s, om, host);
            REQUIRE(got.has_value() == want.has_value());
            if (got.has_value()) {
                ++applied;
                CAPTURE(text);
                CAPTURE(serialize_host(host));
                CHECK(oracle::iso(*got, *want));
                CHECK(validate(*got).empty());
                CHECK(is_totally_labelled(*got));
            }
        }
    }
    CHECK(applied >= 50);
}

TEST_CASE("instantiated rule embeds: derivation as pushout complement") {
    // For matches of a deleting schema, removing the instantiated left and
    // re-adding the instantiated right reproduces apply_match's answer.
    support::Compiled c = support::compile_text(R"(
r(x, y : int)
  left  { node 1 x; node 2 y; edge 1 2 0 }
  right { node 1 x; node 3 x+y }
  interface {1}
main = r
)");
    REQUIRE(c.ok());
    const CompiledSchema& s = schema_of(c, "r");
    Graph host = support::g({3, 4, 8}, {{0, 1, 0}, {1, 1, 2}});
    // node 1 has a self-loop, so deleting it dangles; instead add a clean pair
    Graph clean = support::g({3, 4}, {{0, 1, 0}});
    std::vector<Match> ms = find_matches(s, clean);
    REQUIRE(ms.size() == 1);
    const Match& m = ms[0];

    Graph left = instantiate_left(s, m.assignment);
    std::optional<Graph> right = instantiate_right(s, m.assignment);
    REQUIRE(right.has_value());
    CHECK(right->node_count() == 2);

    std::optional<Graph> out = apply_match(s, m, clean);
    REQUIRE(out.has_value());

    // manual reconstruction: keep interface image, drop the rest, add R-K
    Graph manual;
    manual.add_node(int_label(3));       // interface node keeps its label
    manual.add_node(int_label(7));       // added node x+y
    CHECK(oracle::iso(*out, manual));

    // the dangling host has no derivation at all
    CHECK(find_matches(s, host).empty());
}
