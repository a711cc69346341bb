#include <doctest.h>

#include "symdyn/json_io.hpp"
#include "symdyn/recon.hpp"
#include "catch_code.hpp"
#include "test_helpers.hpp"

using namespace symdyn;
using namespace symdyn::test;

TEST_CASE("symbols and words render and parse exactly") {
    Symbol plain = sym("abc");
    CHECK(Symbol::parse(plain.str()) == plain);

    Symbol tup = Symbol::tuple({sym("a"), Symbol::tuple({sym("b"), sym("c")})});
    CHECK(tup.str() == "(a|(b|c))");
    CHECK(Symbol::parse(tup.str()) == tup);

    Word w({sym("x"), tup, sym("y")});
    CHECK(Word::parse(w.str()) == w);

    CHECK(thrown_code([] { Symbol("has,comma"); }) == ErrorCode::ParseError);
    CHECK(thrown_code([] { Symbol::parse("(unclosed"); }) == ErrorCode::ParseError);
    CHECK(thrown_code([] { Word::parse(""); }) == ErrorCode::ParseError);
}

TEST_CASE("system documents round-trip and canonicalize") {
    FiniteDynSys sys = c3();
    std::string text = io::to_json(sys);
    CHECK(io::parse_system(text) == sys);
    CHECK(io::to_json(io::parse_system(text)) == text);

    // Unsorted keys parse to the same value and re-emit canonically.
    std::string scrambled =
        R"({"step":{"c":"a","a":"b","b":"c"},"states":["c","b","a"]})";
    CHECK(io::parse_system(scrambled) == sys);
    CHECK(io::to_json(io::parse_system(scrambled)) == text);

    CHECK(thrown_code([] { io::parse_system("{nope"); }) == ErrorCode::ParseError);
    CHECK(thrown_code([] { io::parse_system(R"({"states":["a"],"step":{}})"); }) ==
          ErrorCode::ParseError);
    CHECK(thrown_code([] {
              io::parse_system(R"({"states":["a"],"step":{"a":"zz"}})");
          }) == ErrorCode::ParseError);
}

TEST_CASE("observed systems, presentations, codes, morphisms, tsd round-trip") {
    ObservedSystem obs = parity_c4();
    CHECK(io::to_json(io::parse_observed_system(io::to_json(obs))) == io::to_json(obs));

    SubshiftPresentation p = golden_mean();
    CHECK(io::to_json(io::parse_presentation(io::to_json(p))) == io::to_json(p));

    SplitMix64 rng(61);
    SlidingBlockCode c = random_full_code(rng, 2, small_alphabet(2), small_alphabet(3, "t"));
    CHECK(io::to_json(io::parse_code(io::to_json(c))) == io::to_json(c));

    TsdMorphism m = tsd_morphism_of_code(c);
    CHECK(io::to_json(io::parse_tsd_morphism(io::to_json(m))) == io::to_json(m));

    ObsMorphism om;
    om.h = {{"0", "0"}, {"1", "1"}};
    om.A = {{sym("even"), sym("e")}, {sym("odd"), sym("o")}};
    CHECK(io::to_json(io::parse_obs_morphism(io::to_json(om))) == io::to_json(om));

    TimeSeriesData data = data_functor(obs, 1, 3);
    CHECK(io::to_json(io::parse_tsd(io::to_json(data))) == io::to_json(data));

    DynDiagram d;
    d.nodes = {c3(), int_cycle(2)};
    d.arrows.push_back({0, 0, {{"a", "a"}, {"b", "b"}, {"c", "c"}}});
    CHECK(io::to_json(io::parse_diagram(io::to_json(d))).size() > 0);

    ReconResult r = reconstruct(data, 2);
    CHECK(io::to_json(io::parse_recon_result(io::to_json(r))) == io::to_json(r));
}

TEST_CASE("tuple symbols survive the observed-system format") {
    ObservedSystem embedded = delay_embed(parity_c4(), 2, 1);
    std::string text = io::to_json(embedded);
    ObservedSystem back = io::parse_observed_system(text);
    CHECK(back.meas.phi == embedded.meas.phi);
    CHECK(io::to_json(back) == text);
}

TEST_CASE("schema closure on randomized values") {
    SplitMix64 rng(62);
    for (int trial = 0; trial < 20; ++trial) {
        ObservedSystem x = random_observed_system(rng, 6, small_alphabet(3));
        CHECK_NOTHROW(io::parse_observed_system(io::to_json(x)));
        TimeSeriesData data = data_functor(x, 1 + rng.below(2), 1 + rng.below(4));
        CHECK_NOTHROW(io::parse_tsd(io::to_json(data)));
        ReconResult r = reconstruct(data);
        CHECK_NOTHROW(io::parse_recon_result(io::to_json(r)));
        SubshiftPresentation p = random_presentation(rng, 4, small_alphabet(2));
        CHECK_NOTHROW(io::parse_presentation(io::to_json(p)));
    }
}

TEST_CASE("kind detection and the roundtrip helper") {
    CHECK(io::detect_kind(io::to_json(c3())) == io::DocKind::System);
    CHECK(io::detect_kind(io::to_json(parity_c4())) == io::DocKind::ObservedSystem);
    CHECK(io::detect_kind(io::to_json(golden_mean())) == io::DocKind::Presentation);
    CHECK(io::detect_kind(io::to_json(word_functor(golden_mean(), 2))) == io::DocKind::Tsd);

    io::RoundtripResult res = io::roundtrip(io::to_json(golden_mean()));
    CHECK(res.stable);
    CHECK(res.kind == io::DocKind::Presentation);

    CHECK(thrown_code([] { io::roundtrip("{}"); }) == ErrorCode::ParseError);
}

TEST_CASE("raw sequences parse from both layouts") {
    std::vector<Symbol> expected = seq("0110");
    CHECK(io::parse_raw_sequence("0\n1\n1\n0\n") == expected);
    CHECK(io::parse_raw_sequence("0,1,1,0\n") == expected);
    CHECK(io::parse_raw_sequence("").empty());
}
