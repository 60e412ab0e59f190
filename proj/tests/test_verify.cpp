#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"
#include "teec/verify.hpp"

using namespace teec;

namespace {

// a->b(8), b->c(9), c->b(17), b->a(20): one directed journey through b twice.
TemporalGraph commute() {
    return ts::make_graph(true, 3, {{0, 1, 8}, {1, 2, 9}, {2, 1, 17}, {1, 0, 20}});
}

}  // namespace

TEST_CASE("one journey through a repeated vertex: walk and trail yes, path no") {
    auto g = commute();
    Journey j{{0, 0, 1}, {1, 1, 2}, {2, 2, 1}, {3, 1, 0}};
    CHECK(journey_ok(g, j, Kind::Walk, Strictness::Strict));
    CHECK(journey_ok(g, j, Kind::Trail, Strictness::Strict));  // four distinct arcs
    VerificationReport rep;
    check_journey(g, j, Kind::Path, Strictness::Strict, rep);
    REQUIRE_FALSE(rep.ok());
    CHECK(rep.items[0].what == Violation::RepeatedVertex);
}

TEST_CASE("strictness separates equal labels") {
    auto g = ts::make_graph(true, 3, {{0, 1, 4}, {1, 2, 4}});
    Journey j{{0, 0, 1}, {1, 1, 2}};
    CHECK(journey_ok(g, j, Kind::Walk, Strictness::NonStrict));
    VerificationReport rep;
    check_journey(g, j, Kind::Walk, Strictness::Strict, rep);
    REQUIRE_FALSE(rep.ok());
    CHECK(rep.items[0].what == Violation::NotTimeRespecting);
}

TEST_CASE("directed edges cannot be traversed backwards") {
    auto g = ts::make_graph(true, 2, {{0, 1, 1}});
    VerificationReport rep;
    check_journey(g, Journey{{0, 1, 0}}, Kind::Walk, Strictness::Strict, rep);
    REQUIRE_FALSE(rep.ok());
    CHECK(rep.items[0].what == Violation::WrongDirection);

    // Undirected: both orientations fine, garbage endpoints are not.
    auto u = ts::make_graph(false, 3, {{0, 1, 1}});
    CHECK(journey_ok(u, Journey{{0, 1, 0}}, Kind::Walk, Strictness::Strict));
    VerificationReport rep2;
    check_journey(u, Journey{{0, 0, 2}}, Kind::Walk, Strictness::Strict, rep2);
    CHECK(rep2.items[0].what == Violation::WrongEndpoints);
}

TEST_CASE("consecutive steps must share their junction vertex") {
    auto g = ts::make_graph(true, 4, {{0, 1, 1}, {2, 3, 2}});
    VerificationReport rep;
    check_journey(g, Journey{{0, 0, 1}, {1, 2, 3}}, Kind::Walk, Strictness::Strict, rep);
    REQUIRE_FALSE(rep.ok());
    CHECK(rep.items[0].what == Violation::NotConnected);
}

TEST_CASE("trail rules use static identity") {
    // Two temporal copies of the same arc.
    auto g = ts::make_graph(true, 2, {{0, 1, 1}, {0, 1, 5}});
    VerificationReport rep;
    check_journey(g, Journey{{0, 0, 1}}, Kind::Trail, Strictness::Strict, rep);
    CHECK(rep.ok());
    // An undirected edge used once per direction still repeats its static edge.
    auto u = ts::make_graph(false, 2, {{0, 1, 1}, {1, 0, 2}});
    VerificationReport rep2;
    check_journey(u, Journey{{0, 0, 1}, {1, 1, 0}}, Kind::Trail, Strictness::Strict, rep2);
    REQUIRE_FALSE(rep2.ok());
    CHECK(rep2.items[0].what == Violation::RepeatedStaticEdge);
    // As directed arcs, (0,1) and (1,0) are distinct static edges.
    auto d = ts::make_graph(true, 2, {{0, 1, 1}, {1, 0, 2}});
    CHECK(journey_ok(d, Journey{{0, 0, 1}, {1, 1, 0}}, Kind::Trail, Strictness::Strict));
}

TEST_CASE("cover checks: exactness, budget, empty journeys") {
    auto g = commute();
    Instance inst = ts::make_instance(g, Kind::Walk, Strictness::Strict, 1);

    Cover good{{{0, 0, 1}, {1, 1, 2}, {2, 2, 1}, {3, 1, 0}}};
    CHECK(cover_ok(inst, good));

    Cover missing{{{0, 0, 1}, {1, 1, 2}, {2, 2, 1}}};
    auto rep = check_cover(inst, missing);
    REQUIRE_FALSE(rep.ok());
    CHECK(rep.items[0].what == Violation::MissingEdge);

    Cover dup{{{0, 0, 1}, {1, 1, 2}, {2, 2, 1}, {3, 1, 0}}, {{0, 0, 1}}};
    rep = check_cover(inst, dup);
    bool saw_dup = false, saw_budget = false;
    for (auto& it : rep.items) {
        saw_dup |= it.what == Violation::DuplicateEdge;
        saw_budget |= it.what == Violation::BudgetExceeded;
    }
    CHECK(saw_dup);
    CHECK(saw_budget);  // two journeys against k=1

    Cover with_empty{{{0, 0, 1}, {1, 1, 2}, {2, 2, 1}, {3, 1, 0}}, {}};
    inst.k = 2;
    rep = check_cover(inst, with_empty);
    REQUIRE_FALSE(rep.ok());
    CHECK(rep.items[0].what == Violation::EmptyJourney);

    // The empty cover is exactly right for an edgeless graph.
    Instance none = ts::make_instance(ts::make_graph(true, 2, {}), Kind::Path, Strictness::Strict, 1);
    CHECK(cover_ok(none, Cover{}));
}

TEST_CASE("cover checks: fixed terminals") {
    auto g = ts::make_graph(true, 4, {{0, 1, 1}, {2, 3, 1}});
    TerminalSpec ts_spec{{0, 2}, {1, 3}};
    Instance inst = ts::make_instance(g, Kind::Path, Strictness::Strict, 2, ts_spec);

    Cover good{{{0, 0, 1}}, {{1, 2, 3}}};
    CHECK(cover_ok(inst, good));
    // Order of journeys is irrelevant: multiset comparison.
    Cover swapped{{{1, 2, 3}}, {{0, 0, 1}}};
    CHECK(cover_ok(inst, swapped));

    // One journey covering everything misses the second terminal pair.
    Instance loose = ts::make_instance(g, Kind::Path, Strictness::Strict, 2, ts_spec);
    Cover merged{{{0, 0, 1}}, {{1, 3, 2}}};  // wrong direction anyway
    CHECK_FALSE(cover_ok(loose, merged));

    TerminalSpec wrong{{0, 2}, {3, 3}};
    Instance bad = ts::make_instance(g, Kind::Path, Strictness::Strict, 2, wrong);
    auto rep = check_cover(bad, good);
    REQUIRE_FALSE(rep.ok());
    CHECK(rep.items[0].what == Violation::TerminalMismatch);
}
