#include "practicum/json.hpp"

#include "practicum/error.hpp"

namespace practicum {

Json json_int(const BigInt& v) {
  if (auto u = to_u64(v)) return *u;
  if (auto i = to_i64(v)) return *i;
  return to_string(v);
}

BigInt int_from_json(const Json& j) {
  if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return parse_bigint(j.get<std::string>());
  throw Error(Errc::InvalidInput, "expected an integer, got " + j.dump());
}

namespace {

Json chain_json(const std::vector<ChainStep>& chain) {
  Json out = Json::array();
  for (const auto& s : chain) out.push_back(Json::array({json_int(s.prime), s.exponent, json_int(s.running_sigma)}));
  return out;
}

std::vector<ChainStep> chain_from_json(const Json& j) {
  std::vector<ChainStep> chain;
  for (const auto& s : j) chain.push_back({int_from_json(s.at(0)), s.at(1).get<unsigned>(), int_from_json(s.at(2))});
  return chain;
}

Json factorization_json(const Factorization& f) {
  Json out = Json::array();
  for (const auto& pp : f.factors()) out.push_back(Json::array({json_int(pp.prime), pp.exponent}));
  return out;
}

}  // namespace

Json to_json(const PracticalityVerdict& v) {
  Json j;
  j["n"] = json_int(v.n);
  j["practical"] = v.practical;
  j["chain"] = chain_json(v.chain);
  if (v.witness)
    j["witness"] = {{"index", v.witness->index}, {"prime", json_int(v.witness->prime)},
                    {"bound", json_int(v.witness->bound)}};
  return j;
}

PracticalityVerdict verdict_from_json(const Json& j) {
  PracticalityVerdict v;
  v.n = int_from_json(j.at("n"));
  v.practical = j.at("practical").get<bool>();
  v.chain = chain_from_json(j.at("chain"));
  if (j.contains("witness")) {
    const auto& w = j.at("witness");
    v.witness = ChainBreak{w.at("index").get<std::size_t>(), int_from_json(w.at("prime")),
                           int_from_json(w.at("bound"))};
  }
  return v;
}

Json to_json(const MultiplierCertificate& c) {
  Json j;
  j["kind"] = c.kind == MultiplierCertificate::Kind::ExactSigma ? "exact_sigma" : "lower_bound";
  j["base"] = json_int(c.base);
  j["multiplier"] = json_int(c.multiplier);
  j["bound"] = json_int(c.bound);
  j["product"] = json_int(c.product);
  if (c.kind == MultiplierCertificate::Kind::ExactSigma) j["base_chain"] = chain_json(c.base_chain);
  if (c.base_ref) j["base_ref"] = *c.base_ref;
  return j;
}

MultiplierCertificate certificate_from_json(const Json& j) {
  MultiplierCertificate c;
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "exact_sigma")
    c.kind = MultiplierCertificate::Kind::ExactSigma;
  else if (kind == "lower_bound")
    c.kind = MultiplierCertificate::Kind::LowerBound;
  else
    throw Error(Errc::InvalidInput, "unknown certificate kind " + kind);
  c.base = int_from_json(j.at("base"));
  c.multiplier = int_from_json(j.at("multiplier"));
  c.bound = int_from_json(j.at("bound"));
  c.product = int_from_json(j.at("product"));
  if (j.contains("base_chain")) c.base_chain = chain_from_json(j.at("base_chain"));
  if (j.contains("base_ref")) c.base_ref = j.at("base_ref").get<std::size_t>();
  return c;
}

Json to_json(const APClassification& c) {
  Json j;
  j["a"] = json_int(c.a);
  j["b"] = json_int(c.b);
  j["case"] = ap_case_name(c.kind);
  j["d"] = json_int(c.d);
  j["sigma_bound"] = json_int(c.sigma_bound);
  if (c.witness_prime) j["witness_prime"] = *c.witness_prime;
  if (c.unique_value) j["unique_value"] = json_int(*c.unique_value);
  return j;
}

Json to_json(const APWitness& w) {
  Json j;
  j["prime"] = w.prime;
  j["k"] = w.k;
  j["modulus"] = json_int(w.modulus);
  j["n"] = json_int(w.n);
  j["value"] = json_int(w.value);
  j["verdict"] = to_json(w.verdict);
  j["certificate"] = to_json(w.certificate);
  return j;
}

Json to_json(const PolyWitness& w) {
  Json j;
  j["n"] = w.n;
  j["value"] = json_int(w.value);
  j["verdict"] = to_json(w.verdict);
  return j;
}

namespace {

const char* reason_name(InfiniteReason r) {
  switch (r) {
    case InfiniteReason::HenselGap: return "hensel_gap";
    case InfiniteReason::ExactRoot: return "exact_root";
    case InfiniteReason::DoubleRoot: return "double_root";
  }
  return "unknown";
}

}  // namespace

Json to_json(const MqResult& m) {
  Json j;
  j["p"] = m.p;
  if (m.infinite) {
    j["mq"] = "infinite";
    j["reason"] = reason_name(m.reason);
  } else {
    j["mq"] = m.k;
  }
  j["content_valuation"] = m.content_valuation;
  if (m.root) j["root"] = json_int(*m.root);
  if (m.infinite && m.reason == InfiniteReason::HenselGap) {
    j["value_valuation"] = m.value_valuation;
    j["derivative_valuation"] = m.derivative_valuation;
  }
  j["classes_examined"] = m.classes_examined;
  return j;
}

Json to_json(const QuadClassification& c) {
  Json j;
  j["case"] = quad_case_name(c.kind);
  j["r"] = c.lip.r;
  j["p_r"] = c.lip.p_r;
  Json exps = Json::array();
  for (std::size_t i = 0; i < c.lip.primes.size(); ++i)
    exps.push_back(Json::array({c.lip.primes[i], c.lip.exponents[i]}));
  j["exponents"] = exps;
  j["witness_N"] = json_int(c.witness_N);
  j["verdict_N"] = to_json(c.verdict_N);
  return j;
}

Json to_json(const QuadWitness& w) {
  Json j;
  j["n"] = json_int(w.n);
  j["value"] = json_int(w.value);
  j["modulus"] = json_int(w.modulus);
  j["modulus_factorization"] = factorization_json(w.modulus_factorization);
  j["k"] = w.k;
  j["extra_primes"] = w.extra_primes;
  j["verdict"] = to_json(w.verdict);
  return j;
}

Json to_json(const SquareDecomposition& d) {
  Json j;
  j["n"] = json_int(d.n);
  j["x"] = json_int(d.x);
  j["practical_part"] = json_int(d.practical_part);
  j["m"] = d.m;
  j["s"] = json_int(d.s);
  j["certificate"] = to_json(d.certificate);
  return j;
}

SquareDecomposition decomposition_from_json(const Json& j) {
  SquareDecomposition d;
  d.n = int_from_json(j.at("n"));
  d.x = int_from_json(j.at("x"));
  d.practical_part = int_from_json(j.at("practical_part"));
  d.m = j.at("m").get<unsigned>();
  d.s = int_from_json(j.at("s"));
  d.certificate = certificate_from_json(j.at("certificate"));
  return d;
}

Json to_json(const NonRepresentability& r, bool with_trace) {
  Json j;
  j["m"] = r.m;
  j["not_representable"] = r.not_representable;
  if (!r.not_representable && !r.trace.empty()) {
    const auto& last = r.trace.back();
    j["representation"] = {{"x", last.x}, {"practical", last.remainder}};
  }
  if (with_trace) {
    Json t = Json::array();
    for (const auto& e : r.trace) {
      Json row;
      row["x"] = e.x;
      row["remainder"] = e.remainder;
      row["practical"] = e.verdict.practical;
      if (e.verdict.witness)
        row["witness"] = {{"index", e.verdict.witness->index},
                          {"prime", json_int(e.verdict.witness->prime)},
                          {"bound", json_int(e.verdict.witness->bound)}};
      t.push_back(row);
    }
    j["trace"] = t;
  }
  return j;
}

Json to_json(const PalindromeLink& link) {
  Json j;
  j["index"] = link.index;
  j["value"] = json_int(link.value);
  if (link.verdict) j["verdict"] = to_json(*link.verdict);
  if (link.certificate) j["certificate"] = to_json(*link.certificate);
  return j;
}

Json to_json(const DensityRow& row) {
  Json j;
  j["x"] = row.x;
  j["count"] = row.count;
  j["ratio"] = row.ratio;
  return j;
}

}  // namespace practicum
