#include <doctest.h>

#include <random>
#include <sstream>

#include "twocon/oracle.hpp"
#include "twocon/species.hpp"
#include "twocon/wser.hpp"

using namespace twocon;

TEST_CASE("rational parsing") {
    CHECK(parse_rational("3/6") == ratio(1, 2));
    CHECK(parse_rational("-7") == ratio(-7));
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

TEST_CASE("WSER bytes for the K2 series") {
    Truncation t(4, 6);
    IndexSeries w = graph_index_series(SimpleGraph::complete(2), t);
    CHECK(wser::to_string(w, wser::Kind::Graph) ==
          "WSER 1 nmax=4 mmax=6 kind=graph\n"
          "a=1:2 b=1:1 c=- coef=1/2\n"
          "a=2:1 b=- c=1:1 coef=1/2\n");
}

TEST_CASE("WSER round trip on random series") {
    std::mt19937 rng(51);
    std::uniform_int_distribution<int> idx(1, 4), expo(1, 3), num(-5, 5), den(1, 4), fam(0, 2), cnt(1, 3);
    for (int round = 0; round < 10; ++round) {
        Truncation t(8, 12);
        IndexSeries s(t);
        for (int i = 0; i < 12; ++i) {
            CycleMonomial m;
            int parts = cnt(rng);
            for (int p = 0; p < parts; ++p) m.mul_var(static_cast<Var>(fam(rng)), idx(rng), expo(rng));
            s.add_term(m, ratio(num(rng), den(rng)));
        }
        std::stringstream ss;
        wser::write(ss, s, wser::Kind::NetPlus);
        auto back = wser::read(ss);
        CHECK(back.kind == wser::Kind::NetPlus);
        CHECK(back.series == s);
        CHECK(back.series.trunc() == s.trunc());
    }
}

TEST_CASE("WSER round trip on an oracle core series") {
    Truncation t = Truncation::for_graphs(6);
    IndexSeries w = oracle::oracle_index_series(oracle::OracleFamily::ThreeConnectedPlanar, 6, t);
    std::stringstream ss;
    wser::write(ss, w, wser::Kind::Graph);
    auto back = wser::read(ss);
    CHECK(back.series == w);
    // two writes are byte-identical
    std::stringstream ss2;
    wser::write(ss2, w, wser::Kind::Graph);
    CHECK(ss.str() == ss2.str());
}

TEST_CASE("WSER rejects malformed input") {
    std::stringstream bad1("WSRE 1 nmax=3 mmax=3 kind=graph\n");
    CHECK_THROWS_AS(wser::read(bad1), std::invalid_argument);
    std::stringstream bad2("WSER 1 nmax=3 mmax=3 kind=tree\n");
    CHECK_THROWS_AS(wser::read(bad2), std::invalid_argument);
    std::stringstream bad3("WSER 1 nmax=3 mmax=3 kind=graph\na=2:1,1:1 b=- c=- coef=1\n");
    CHECK_THROWS_AS(wser::read(bad3), std::invalid_argument);
}

TEST_CASE("count tables") {
    std::vector<wser::CountRow> rows{{2, 1, Integer(1)}, {3, 3, Integer(1)}, {4, 4, Integer(12345678901234)}};
    CHECK(wser::to_csv(rows) == "n,m,count\n2,1,1\n3,3,1\n4,4,12345678901234\n");
    CHECK(wser::to_json(rows) ==
          "[\n  {\"n\": 2, \"m\": 1, \"count\": \"1\"},\n  {\"n\": 3, \"m\": 3, \"count\": \"1\"},\n"
          "  {\"n\": 4, \"m\": 4, \"count\": \"12345678901234\"}\n]\n");
    CHECK(wser::to_json({}) == "[]\n");
}

TEST_CASE("row extraction enforces integrality") {
    Truncation t(3, 3);
    BiSeries frac = BiSeries::monomial(t, 2, 1, ratio(1, 2));
    CHECK_THROWS_AS(wser::unlabelled_rows(frac), IntegrityError);
    // but 1/2 is a fine EGF coefficient: 2!/2 = 1 labelled object
    auto rows = wser::labelled_rows(frac);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].count == 1);
}
