#include <doctest.h>

#include "orbifrob/cocycle.hpp"
#include "orbifrob/errors.hpp"
#include "orbifrob/io.hpp"
#include "orbifrob/models.hpp"
#include "orbifrob/symprod.hpp"

using namespace orbifrob;
using io::Json;

TEST_CASE("algebra document round trip") {
  for (const auto& a : {models::ground_field(), models::dual_numbers(), models::surface()}) {
    const Json j = io::to_json(a);
    const FrobeniusAlgebra b = io::frobenius_from_json(Json::parse(io::dump(j)));
    CHECK(b.basis() == a.basis());
    CHECK(b.metric() == a.metric());
    CHECK(b.unit() == a.unit());
    CHECK(io::dump(io::to_json(b)) == io::dump(j));
  }
}

TEST_CASE("algebra document fields") {
  const Json j = io::to_json(models::dual_numbers());
  CHECK(j["dim"] == 2);
  CHECK(j["unit"] == Json::array({"1", "0"}));
  CHECK(j["metric"] == Json::parse(R"([[0,1,"1"],[1,0,"1"]])"));
  CHECK(j["structure"] == Json::parse(R"([[0,0,0,"1"],[0,1,1,"1"],[1,0,1,"1"]])"));
  CHECK(j["basis"][1] == Json::parse(R"({"label":"x","degree":2,"parity":0})"));
}

TEST_CASE("G-algebra document round trip is bit exact") {
  const GFrobeniusAlgebra x = hilbert_twist(SymmetricProduct(models::surface(), 3).build());
  const std::string text = io::dump(io::to_json(x));
  const GFrobeniusAlgebra y = io::gfrob_from_json(Json::parse(text));
  CHECK(y == x);
  CHECK(io::dump(io::to_json(y)) == text);
  const FiniteGroup s3 = FiniteGroup::symmetric(3);
  const GFrobeniusAlgebra k = twisted_group_ring(s3, normalized_sn_cocycle(3, Scalar(1, 3)), sign_supertwist(3));
  CHECK(io::gfrob_from_json(io::to_json(k)) == k);
}

TEST_CASE("explicit group tables round trip") {
  const FiniteGroup z3({"e", "r", "rr"}, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  const GFrobeniusAlgebra k = twisted_group_ring(z3, Cocycle2::trivial(z3), SuperTwist::trivial(z3));
  const Json j = io::to_json(k);
  CHECK(j["group"]["type"] == "table");
  CHECK(io::gfrob_from_json(j) == k);
}

TEST_CASE("cocycle documents") {
  const Cocycle2 a = normalized_sn_cocycle(3, Scalar(-1));
  CHECK(io::cocycle_from_json(io::to_json(a)) == a);
  const Json j = Json::parse(R"j({"group":"S_2","values":[["(1 2)","(1 2)","-1"]]})j");
  CHECK(io::cocycle_from_json(j) == normalized_sn_cocycle(2, Scalar(-1)));
  CHECK_THROWS_AS(io::cocycle_from_json(Json::parse(R"j({"group":"S_2","values":[["(1 3)","e","2"]]})j")),
                  ParseError);
}

TEST_CASE("malformed documents are parse errors") {
  const char* bad[] = {
      R"({"basis":[{"label":"1","degree":0}],"unit":["1"],"metric":[[0,2,"1"]]})",
      R"({"basis":[{"label":"1","degree":0}],"unit":["1","0"]})",
      R"({"basis":[{"label":"1","degree":0}],"unit":["1/0"]})",
      R"({"basis":[{"label":"1","degree":"zero"}],"unit":["1"]})",
      R"({"unit":["1"]})",
      R"({"group":{"type":"S_n","n":2},"sectors":[],"unit":[]})",
  };
  for (const char* text : bad) {
    INFO(text);
    const Json j = Json::parse(text);
    if (io::is_gfrob_document(j))
      CHECK_THROWS_AS(io::gfrob_from_json(j), ParseError);
    else
      CHECK_THROWS_AS(io::frobenius_from_json(j), ParseError);
  }
}

TEST_CASE("element syntax") {
  const GFrobeniusAlgebra x = SymmetricProduct(models::dual_numbers(), 3).build();
  const FiniteGroup& g = x.group();
  const int c = g.index_of(Permutation::parse("(1 2 3)", 3));
  const int tau = g.index_of(Permutation::parse("(1 2)", 3));
  CHECK(io::parse_element(x, "1@(1 2 3)") == SectorElement{c, SparseVec::unit(0)});
  CHECK(io::parse_element(x, "1@(2 3 1)") == SectorElement{c, SparseVec::unit(0)});
  CHECK(io::parse_element(x, "2x@(1 3 2)").coeffs == SparseVec::unit(1, Scalar(2)));
  CHECK(io::parse_element(x, "−2x@(1 3 2)").coeffs == SparseVec::unit(1, Scalar(-2)));
  CHECK(io::parse_element(x, "-1/2*x@(1 2 3)").coeffs == SparseVec::unit(1, Scalar(-1, 2)));
  CHECK(io::parse_element(x, "0@e").coeffs.empty());
  const SectorElement s = io::parse_element(x, "sector=(1 2); coeffs={(x,1): 3/2, (1,1): 1}");
  CHECK(s.sector == tau);
  CHECK(s.coeffs == SparseVec::unit(0) + SparseVec::unit(2, Scalar(3, 2)));
  const SectorElement sum = io::parse_element(x, "(1⊗1⊗x + x⊗1⊗1 - 2x⊗x⊗x)@e");
  CHECK(sum.coeffs.nnz() == 3);
  CHECK(sum.coeffs.at(7) == Scalar(-2));
  // format and parse are inverse
  const SparseVec v = SparseVec::unit(1, Scalar(3)) + SparseVec::unit(2, Scalar(-1, 2)) + SparseVec::unit(3);
  CHECK(io::parse_element(x, format_element(x, tau, v)).coeffs == v);
  CHECK_THROWS_AS(io::parse_element(x, "y@e"), ParseError);
  CHECK_THROWS_AS(io::parse_element(x, "1@(1 4)"), ParseError);
  CHECK_THROWS_AS(io::parse_element(x, "1"), ParseError);
  CHECK_THROWS_AS(io::parse_element(x, "x +@(1 2 3)"), ParseError);
}

TEST_CASE("report lines") {
  const Report r = verify(models::dual_numbers());
  const std::string lines = io::report_jsonl(r);
  std::size_t count = 0;
  for (char ch : lines) count += ch == '\n';
  CHECK(count == r.checks.size());
  const Json first = Json::parse(lines.substr(0, lines.find('\n')));
  CHECK(first["passed"] == true);
  CHECK(first["witness"].is_null());
}
