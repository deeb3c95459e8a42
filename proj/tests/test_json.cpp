#include <doctest.h>

#include "practicum/error.hpp"
#include "practicum/json.hpp"

using namespace practicum;

TEST_CASE("integers switch to strings beyond 64 bits") {
  CHECK(json_int(5).is_number_unsigned());
  CHECK(json_int(-5).is_number_integer());
  const BigInt big = (BigInt(1) << 70) + 3;
  CHECK(json_int(big).is_string());
  CHECK(int_from_json(json_int(big)) == big);
  CHECK(int_from_json(json_int(-big)) == -big);
  CHECK(int_from_json(Json(42)) == 42);
  CHECK_THROWS_AS(int_from_json(Json(1.5)), Error);
  CHECK_THROWS_AS(int_from_json(Json("12x")), Error);
}

TEST_CASE("verdict json layout") {
  auto j = to_json(is_practical(BigInt(88)));
  CHECK(j.dump() == R"({"n":88,"practical":true,"chain":[[2,3,15],[11,1,180]]})");
  auto k = to_json(is_practical(BigInt(10)));
  CHECK(k.dump() == R"({"n":10,"practical":false,"chain":[[2,1,3]],"witness":{"index":1,"prime":5,"bound":4}})");
}

TEST_CASE("verdict round trip") {
  for (std::uint64_t n = 1; n <= 2000; ++n) {
    auto v = is_practical(BigInt(n));
    auto back = verdict_from_json(Json::parse(to_json(v).dump()));
    REQUIRE(back.n == v.n);
    REQUIRE(back.practical == v.practical);
    REQUIRE(back.chain == v.chain);
    REQUIRE(back.witness == v.witness);
    REQUIRE(back.replay());
  }
  const BigInt big = (BigInt(1) << 100) * 3;
  auto v = is_practical(big);
  CHECK(verdict_from_json(to_json(v)).chain == v.chain);
}

TEST_CASE("certificate round trip") {
  auto c = certify_product(is_practical(BigInt(88)), BigInt(101));
  auto back = certificate_from_json(Json::parse(to_json(c).dump()));
  CHECK(back.check());
  CHECK(back.product == 8888);
  CHECK(back.base_chain == c.base_chain);

  auto lb = certify_product_lower_bound(BigInt(8888), BigInt(10001), 1);
  auto j = to_json(lb);
  CHECK(j["kind"] == "lower_bound");
  CHECK(j["base_ref"] == 1);
  CHECK_FALSE(j.contains("base_chain"));
  CHECK(certificate_from_json(j).check());

  j["kind"] = "bogus";
  CHECK_THROWS_AS(certificate_from_json(j), Error);
}

TEST_CASE("decomposition round trip") {
  auto d = decompose_square_plus_practical((BigInt(1) << 90) + 1);
  auto back = decomposition_from_json(Json::parse(to_json(d).dump()));
  CHECK(back.n == d.n);
  CHECK(back.x == d.x);
  CHECK(back.practical_part == d.practical_part);
  CHECK(back.m == d.m);
  CHECK(back.s == d.s);
  CHECK(back.certificate.check());
}

TEST_CASE("classification and mq layout") {
  auto c = to_json(classify_ap(12, 2));
  CHECK(c["case"] == "exactly_one");
  CHECK(c["unique_value"] == 2);
  CHECK_FALSE(c.contains("witness_prime"));

  auto m = to_json(mq(QuadraticPoly(1, 0, 3), 2));
  CHECK(m["mq"] == 2);
  auto inf = to_json(mq(QuadraticPoly(1, 0, 3), 7));
  CHECK(inf["mq"] == "infinite");
  CHECK(inf.contains("reason"));

  auto q = to_json(classify_quadratic(QuadraticPoly(1, 0, 3)));
  CHECK(q["case"] == "infinitely_many");
  CHECK(q["witness_N"] == 84);
  CHECK(q["exponents"].dump() == "[[2,2],[3,1],[5,0]]");
}
