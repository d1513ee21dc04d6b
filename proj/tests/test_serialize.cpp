#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cftnvm/serialize.hpp"

using namespace cftnvm;

TEST_CASE("cyclotomic number json") {
    CHECK(to_json(CycNum(5L)).dump() == R"({"order":1,"coeffs":["5"]})");
    CHECK(to_json(CycNum(mpq_class(-3, 4))).dump() == R"({"order":1,"coeffs":["-3/4"]})");
    CHECK(to_json(CycNum::root_of_unity(4, 1)).dump() == R"({"order":4,"coeffs":["0","1"]})");

    CycNum mixed = CycNum::from_rational_coeffs(3, {mpq_class(1, 2), mpq_class(3)});
    CHECK(to_json(mixed).dump() == R"({"order":3,"coeffs":["1/2","3"]})");
}

TEST_CASE("field and character json") {
    Field f4 = make_field_for_q(4);
    ordered_json spec = field_spec_json(f4);
    CHECK(spec["p"] == 2);
    CHECK(spec["m"] == 2);
    CHECK(spec["modulus"] == ordered_json::array({1, 1, 1}));
    CHECK(spec.dump().find(R"("p":2,"m":2,"modulus")") != std::string::npos);

    Field f7 = make_field_for_q(7);
    ordered_json spec7 = field_spec_json(f7);
    CHECK(spec7["modulus"] == ordered_json::array({0, 1}));
    CHECK(spec7["generator"] == ordered_json::array({3}));

    CHECK(to_json(MultCharacter(f7, 2)).dump() == R"({"k":2})");
    CHECK(to_json(AddCharacter(f7.one())).dump() == R"({"a":[1]})");
    CHECK(to_json(SubgroupChar(Subgroup(f7, 3), 1)).dump() == R"({"index":3,"j":1})");
}

TEST_CASE("group algebra element json") {
    Field f5 = make_field_for_q(5);
    GroupAlgebraElement g(f5);
    g[f5.one()] = CycNum(2L);
    ordered_json arr = to_json(g);
    REQUIRE(arr.is_array());
    REQUIRE(arr.size() == 5);
    CHECK(arr[1] == to_json(CycNum(2L)));
    CHECK(arr[0] == to_json(CycNum(0L)));
}

TEST_CASE("cft matrix json") {
    Field f7 = make_field_for_q(7);
    SubgroupChar chi(Subgroup(f7, 3), 1);
    CftMatrix M = cft_matrix(chi);
    ordered_json j = to_json(M);
    CHECK(j["chi"] == to_json(chi));
    REQUIRE(j["R"].size() == 3);
    REQUIRE(j["S"].size() == 3);
    REQUIRE(j["entries"].size() == 3);
    REQUIRE(j["entries"][0].size() == 3);
    CHECK(j["entries"][1][2] == to_json(M.matrix.at(1, 2)));
    CHECK(j["R"][0] == ordered_json::array({1}));
    CHECK(j.dump().rfind(R"({"chi":)", 0) == 0);
}

TEST_CASE("report json matches the fixed schema") {
    Field f7 = make_field_for_q(7);
    NvmReport ok = nvm_instance(SubgroupChar(Subgroup(f7, 3), 1), NvmMethod::both);
    CHECK(to_json(ok).dump() ==
          R"({"q":7,"index":3,"chi_j":1,"method":"both","holds":true,)"
          R"("theorem_prediction":true,"agreement":true,"witness":null,"minors_checked":19})");

    Field f4 = make_field_for_q(4);
    NvmReport bad = nvm_instance(SubgroupChar(Subgroup(f4, 3), 0), NvmMethod::both);
    CHECK(to_json(bad).dump() ==
          R"({"q":4,"index":3,"chi_j":0,"method":"both","holds":false,)"
          R"("theorem_prediction":false,"agreement":true,)"
          R"("witness":{"I":[0,1],"J":[0,1]},"minors_checked":17})");

    NvmReport brute = nvm_instance(SubgroupChar(Subgroup(f7, 3), 1), NvmMethod::brute);
    ordered_json j = to_json(brute);
    CHECK(j["theorem_prediction"].is_null());
    CHECK(j["agreement"].is_null());
}

TEST_CASE("report csv") {
    CHECK(report_csv_header() ==
          "q,index,chi_j,method,holds,theorem_prediction,agreement,minors_checked");
    Field f7 = make_field_for_q(7);
    NvmReport r = nvm_instance(SubgroupChar(Subgroup(f7, 3), 1), NvmMethod::both);
    CHECK(report_csv_row(r) == "7,3,1,both,true,true,true,19");
    NvmReport b = nvm_instance(SubgroupChar(Subgroup(f7, 3), 1), NvmMethod::brute);
    CHECK(report_csv_row(b) == "7,3,1,brute,true,,,19");
}

TEST_CASE("approximate rendering") {
    CHECK(approx_string(CycNum(1L)) == "1+0i");
    std::string z3 = approx_string(CycNum::root_of_unity(3, 1));
    CHECK(z3.find("-0.5") == 0);
    CHECK(z3.back() == 'i');
    CHECK(z3.find("0.8660254") != std::string::npos);
}
