#include <doctest.h>

#include <json.hpp>

#include "mub/composite_mubs.hpp"
#include "mub/construct.hpp"
#include "mub/document_io.hpp"
#include "mub/prime_mubs.hpp"
#include "mub/product_structure.hpp"
#include "mub/verification.hpp"
#include "mub/wocjan_beth.hpp"

using namespace mub;

TEST_CASE("JSON round-trip is byte-stable and exponent-lossless") {
  for (const MubSet& set :
       {complete_prime_set(5), two_qubit_complete_set(),
        two_qudit_complete_set(3, 2), product_mub_set(2, 3)}) {
    std::string once = to_json(set);
    MubSet back = mub_set_from_json(once);
    CHECK(to_json(back) == once);
    REQUIRE(back.bases.size() == set.bases.size());
    for (std::size_t i = 0; i < set.bases.size(); ++i) {
      CHECK(back.bases[i].label == set.bases[i].label);
      REQUIRE(back.bases[i].exact.has_value());
      CHECK(back.bases[i].exact->same_entries(*set.bases[i].exact));
    }
  }
}

TEST_CASE("float grids round-trip losslessly too") {
  MubSet wb = wocjan_beth_mubs(2);
  CHECK_FALSE(wb.bases[0].exact.has_value());
  std::string once = to_json(wb);
  MubSet back = mub_set_from_json(once);
  CHECK(to_json(back) == once);
  for (std::size_t i = 0; i < wb.bases.size(); ++i)
    CHECK((back.bases[i].matrix - wb.bases[i].matrix).cwiseAbs().maxCoeff() ==
          0.0);
  CHECK(check_mub_set(back, 1e-10).pass());
}

TEST_CASE("every generated document verifies immediately") {
  for (const MubSet& set : {complete_prime_set(7), wocjan_beth_mubs(3),
                            three_qubit_set()}) {
    MubSet back = mub_set_from_json(to_json(set));
    CHECK(check_mub_set(back, 1e-9).pass());
  }
}

TEST_CASE("construct_set reproduces documents from their provenance") {
  MubSet set = two_qudit_complete_set(5, 1);
  MubSet again = construct_set(set.provenance);
  CHECK(to_json(again) == to_json(set));
}

TEST_CASE("malformed documents are rejected") {
  CHECK_THROWS(mub_set_from_json("{"));
  CHECK_THROWS(mub_set_from_json("{}"));
  CHECK_THROWS_AS(mub_set_from_json(R"({"kind":"other","schema_version":1})"),
                  std::invalid_argument);
  // a basis may not carry both grids
  nlohmann::json doc = nlohmann::json::parse(to_json(complete_prime_set(3)));
  doc["bases"][0]["float"] = nlohmann::json::array();
  CHECK_THROWS_AS(mub_set_from_json(doc.dump()), std::invalid_argument);
}

TEST_CASE("text rendering shows powers over the common root") {
  std::string text = render_text(mub_set_from_json(to_json(complete_prime_set(3))));
  CHECK(text.find("a = exp(2*pi*i/3)") != std::string::npos);
  CHECK(text.find("a^2") != std::string::npos);
  CHECK(text.find(".") != std::string::npos);  // zero entries of the standard basis
  CHECK(text.find("standard") != std::string::npos);
}

TEST_CASE("latex rendering emits balanced standalone arrays") {
  MubSet set = two_qubit_complete_set();
  std::string tex = render_latex(set);
  CHECK(tex.rfind("\\documentclass", 0) == 0);
  auto count = [&](const std::string& needle) {
    std::size_t n = 0, pos = 0;
    while ((pos = tex.find(needle, pos)) != std::string::npos) {
      ++n;
      pos += needle.size();
    }
    return n;
  };
  CHECK(count("\\begin{array}") == set.bases.size());
  CHECK(count("\\begin{array}") == count("\\end{array}"));
  CHECK(count("\\begin{document}") == 1);
  CHECK(count("\\end{document}") == 1);
  CHECK(tex.find("\\alpha^{3}") != std::string::npos);  // -i over L = 4
}

TEST_CASE("analysis documents add up") {
  MubSet set = two_qudit_complete_set(3, 2);
  std::string text = analysis_to_json(set, Bipartition(3, 3));
  auto doc = nlohmann::json::parse(text);
  CHECK(doc.at("dim") == 9);
  CHECK(doc.at("conservation_reference") == 54.0);
  CHECK(std::abs(doc.at("entanglement_total").get<double>() - 54.0) < 1e-8);
  CHECK(doc.at("complete") == true);
  CHECK(doc.at("design_pass") == true);
  double total = 0.0;
  int products = 0, maximals = 0;
  for (const auto& b : doc.at("bases")) {
    total += b.at("purity_sum").get<double>();
    products += b.at("class") == "product" ? 1 : 0;
    maximals += b.at("class") == "maximal" ? 1 : 0;
  }
  CHECK(std::abs(total - doc.at("entanglement_total").get<double>()) < 1e-10);
  CHECK(products == 4);
  CHECK(maximals == 6);
}
