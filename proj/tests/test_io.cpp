#include <catch2/catch_amalgamated.hpp>

#include "shalika/json_io.hpp"

using namespace shalika;

static Json parse(const char* text) { return Json::parse(text); }

TEST_CASE("module parsing and normalization") {
    Json j = parse(R"({
        "field": "R",
        "factors": [
            {"type": "chi", "k": 4, "lambda": "-1"},
            {"type": "D", "k": 3, "lambda": "1/2"},
            {"type": "chi", "k": 1, "lambda": "-5/2"}
        ]
    })");
    StandardModule m = module_from_json(j);
    CHECK(m.field() == ArchField::Real);
    CHECK(m.blocks() == 3);
    // sorted by exponent: the discrete series comes first
    CHECK(m.factor(1).is_disc());
    CHECK(m.factor(2).chi().k() == 0); // 4 mod 2
    CHECK(m.factor(3).chi().k() == 1);
    CHECK(m.composition().str() == "2+1+1");
}

TEST_CASE("complex modules take characters only") {
    Json j = parse(R"({"field": "C", "factors": [{"type": "chi", "k": -2, "lambda": "1/2+1/2i"}]})");
    StandardModule m = module_from_json(j);
    CHECK(m.field() == ArchField::Complex);
    CHECK(m.factor(1).chi().k() == -2);
    Json bad = parse(R"({"field": "C", "factors": [{"type": "D", "k": 1, "lambda": "0"}]})");
    CHECK_THROWS_WITH(module_from_json(bad), Catch::Matchers::ContainsSubstring("over R"));
}

TEST_CASE("input validation messages name the field") {
    CHECK_THROWS_WITH(module_from_json(parse(R"({"factors": []})")),
                      Catch::Matchers::ContainsSubstring("field"));
    CHECK_THROWS_WITH(module_from_json(parse(R"({"field": "Q", "factors": []})")),
                      Catch::Matchers::ContainsSubstring("\"Q\""));
    CHECK_THROWS_WITH(module_from_json(parse(R"({"field": "R", "factors": []})")),
                      Catch::Matchers::ContainsSubstring("factors"));
    CHECK_THROWS_WITH(module_from_json(parse(R"({"field": "R", "factors": [{"k": 1}]})")),
                      Catch::Matchers::ContainsSubstring("factors[0]"));
    CHECK_THROWS_WITH(
        module_from_json(parse(
            R"({"field": "R", "factors": [{"type": "D", "k": 1, "lambda": "ha"}]})")),
        Catch::Matchers::ContainsSubstring("lambda"));
    CHECK_THROWS_WITH(
        module_from_json(parse(
            R"({"field": "R", "factors": [{"type": "D", "k": -1, "lambda": "0"}]})")),
        Catch::Matchers::ContainsSubstring("k >= 0"));
    Json noeta = parse(R"({"field": "R", "factors": [{"type": "D", "k": 1, "lambda": "0"}]})");
    CHECK_THROWS_WITH(eta_from_json(noeta, ArchField::Real),
                      Catch::Matchers::ContainsSubstring("eta"));
}

TEST_CASE("eta and psi parameters") {
    Json j = parse(R"({"eta": {"k": 3, "z": "1/2"}, "psi_a": "-2/3", "assume_generic": true})");
    MultChar eta = eta_from_json(j, ArchField::Real);
    CHECK(eta.k() == 1);
    CHECK(eta.lambda() == GaussRat(Rat(1, 2)));
    CHECK(psi_a_from_json(j) == Rat(-2, 3));
    CHECK(assume_generic_from_json(j));
    Json defaults = parse(R"({"eta": {"k": 0, "z": "0"}})");
    CHECK(psi_a_from_json(defaults) == Rat(1));
    CHECK_FALSE(assume_generic_from_json(defaults));
    CHECK_THROWS_WITH(psi_a_from_json(parse(R"({"psi_a": "0"})")),
                      Catch::Matchers::ContainsSubstring("nonzero"));
    CHECK_THROWS_WITH(psi_a_from_json(parse(R"({"psi_a": 1})")),
                      Catch::Matchers::ContainsSubstring("psi_a"));
}

TEST_CASE("orbit serialization") {
    ParabolicDatum P(Composition::parse("2+2"));
    auto orbits = classified_orbits(P);
    Json j = orbit_to_json(orbits[0]);
    CHECK(j["omega"] == "3,4,1,2");
    CHECK(j["class"] == "Matching");
    CHECK(j["s"] == Json::array({2, 1}));
    CHECK(j["conormal_dim"] == 0);
    CHECK(j["length"] == 4);

    CHECK(orbit_tsv_header() ==
          "omega\tlength\tclass\tpsi\tpsi_wh\tpsi_ma\tpsi_um\ts\tconormal_dim");
    CHECK(orbit_to_tsv(orbits[0]) ==
          "3,4,1,2\t4\tMatching\t(1,2)(3,4)\t-\t(1,2)(3,4)\t-\t2,1\t0");
    CHECK(orbit_to_tsv(orbits[1]) ==
          "3,1,2,4\t2\tPsiVanishing\t(1,4)(2,3)\t-\t-\t(1,4)(2,3)\t-\t-");
    CHECK(orbit_to_tsv(orbits[2]) == "1,3,2,4\t1\tMatching\t(1,3)(2,4)\t(1,3)(2,4)\t-\t-\t1,2\t2");
}

TEST_CASE("report serialization") {
    MultChar eta(ArchField::Real, 1, GaussRat(Rat(1)));
    StandardModule m = StandardModule::normalized(
        ArchField::Real, {CuspidalFactor::disc(3, GaussRat(Rat(1, 2))),
                          CuspidalFactor::disc(3, GaussRat(Rat(1, 2)))});
    auto rep = shalika_decision(m, ShalikaSpec(eta, Rat(1)), true);
    Json j = period_report_to_json(m, rep);
    CHECK(j["necessary"] == true);
    CHECK(j["matching_orbits"] == 2);
    CHECK(j["compatible_orbits"] == 1);
    CHECK(j["dim_upper_bound"] == 1);
    CHECK(j["witness_omega"] == "3,4,1,2");
    CHECK(j["verdict"] == "Exists");
    CHECK(period_report_to_tsv(m, rep) ==
          "module\tnecessary\tmatching_orbits\tcompatible_orbits\tdim_upper_bound\twitness_"
          "omega\tverdict\n[D(3,1/2) x D(3,1/2)]\ttrue\t2\t1\t1\t3,4,1,2\tExists");

    auto eps = epsilon_pi(m, ShalikaSpec(eta, Rat(1)));
    Json je = epsilon_report_to_json(m, eps);
    CHECK(je["p"] == 0);
    CHECK(je["q"] == 1);
    CHECK(je["epsilon"] == -1);
    CHECK(epsilon_report_to_tsv(m, eps) == "module\tp\tq\tepsilon\n[D(3,1/2) x D(3,1/2)]\t0\t1\t-1");

    auto phi = langlands_param(m);
    auto dec = is_symplectic_eta(phi, eta);
    Json jp = param_check_to_json(m, phi, dec);
    CHECK(jp["dim"] == 4);
    CHECK(jp["symplectic"] == true);
    CHECK(jp["pairing"] == Json::array({Json::array({1, 2})}));
}

TEST_CASE("failed decisions serialize a null witness") {
    MultChar eta(ArchField::Real, 0, GaussRat());
    StandardModule m = StandardModule::normalized(
        ArchField::Real, {CuspidalFactor::disc(3, GaussRat(Rat(1, 2))),
                          CuspidalFactor::disc(3, GaussRat(Rat(1, 2)))});
    auto rep = shalika_decision(m, ShalikaSpec(eta, Rat(1)), true);
    Json j = period_report_to_json(m, rep);
    CHECK(j["witness_omega"].is_null());
    CHECK(j["verdict"] == "NotExists");
}

TEST_CASE("serialization is deterministic") {
    ParabolicDatum P(Composition::parse("2+2+2"));
    auto orbits = classified_orbits(P);
    std::string a = orbits_to_json(orbits).dump(2);
    std::string b = orbits_to_json(classified_orbits(P)).dump(2);
    CHECK(a == b);
}
