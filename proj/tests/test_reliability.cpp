#include <doctest.h>

#include <map>
#include <stdexcept>

#include "reconfrel/errors.hpp"
#include "reconfrel/reliability.hpp"
#include "reconfrel/rng.hpp"
#include "test_util.hpp"

using namespace reconfrel;
using namespace testutil;

namespace {

ReliabilityPolynomial poly(std::vector<long long> coeffs) {
  ReliabilityPolynomial p;
  for (long long c : coeffs) p.coefficients.push_back(c);
  return p;
}

OdnfForm model_odnf(const char* name) {
  auto model = load_model(name);
  return orthogonalize(build_operability_dnf(enumerate_paths(model), model));
}

std::map<int, Rat> uniform(int k, const Rat& p) {
  std::map<int, Rat> out;
  for (int i = 1; i <= k; ++i) out[i] = p;
  return out;
}

}  // namespace

TEST_CASE("dual-core polynomial is 2p^2 - p^4") {
  auto p = odnf_polynomial(model_odnf("dual_core.model"));
  CHECK(p == poly({0, 0, 2, 0, -1}));
  CHECK(p.degree() == 4);
  CHECK(p.render() == "2 p^2 - p^4");
  CHECK(p.render(false) == "-p^4 + 2 p^2");
  CHECK(evaluate(p, Rat(99, 100)) == Rat(99960399, 100000000));
  CHECK(fixed_decimal_string(evaluate(p, Rat(99, 100)), 4) == "0.9996");
  CHECK(evaluate(p, Rat(1, 2)) == Rat(7, 16));
}

TEST_CASE("five-element polynomial is 4R^2 - 3R^3 - R^4 + R^5") {
  auto dnf = parse_dnf(read_file(data_path("five_element.dnf")));
  auto p = odnf_polynomial(orthogonalize(dnf));
  CHECK(p == poly({0, 0, 4, -3, -1, 1}));
  CHECK(evaluate(p, Rat(1, 2)) == Rat(19, 32));
  CHECK(decimal_string(evaluate(p, Rat(1, 2)), 7) == "0.59375");
}

TEST_CASE("five-element probability matches the direct disjoint-products sum") {
  auto odnf = orthogonalize(parse_dnf(read_file(data_path("five_element.dnf"))));
  std::map<int, Rat> r = {{1, Rat(9, 10)},
                          {2, Rat(8, 10)},
                          {3, Rat(7, 10)},
                          {4, Rat(6, 10)},
                          {5, Rat(5, 10)}};
  // R1R3 + R1R4(1-R3) + R2R4(1-R1) + R2R5(1-R1)(1-R4)
  //   + R1R2R5(1-R3)(1-R4), written out independently of the engine.
  Rat expected = r[1] * r[3] + r[1] * r[4] * (1 - r[3]) +
                 r[2] * r[4] * (1 - r[1]) +
                 r[2] * r[5] * (1 - r[1]) * (1 - r[4]) +
                 r[1] * r[2] * r[5] * (1 - r[3]) * (1 - r[4]);
  CHECK(odnf_probability(odnf, r) == expected);

  DnfForm dnf = parse_dnf(read_file(data_path("five_element.dnf")));
  CHECK(dnf_state_sum(dnf, r) == expected);
}

TEST_CASE("all R_i = 1/2 gives 19/32 on the five-element network") {
  auto odnf = orthogonalize(parse_dnf(read_file(data_path("five_element.dnf"))));
  CHECK(odnf_probability(odnf, uniform(5, Rat(1, 2))) == Rat(19, 32));
}

TEST_CASE("four-core polynomial at landmarks") {
  auto p = odnf_polynomial(model_odnf("four_core.model"));
  CHECK(p.degree() == 16);
  CHECK(evaluate(p, Rat(1, 2)) == Rat(37823, 65536));
  Rat at99 = evaluate(p, Rat(99, 100));
  Rat printed = Rat(9999991, 10000000);
  Rat diff = at99 - printed;
  if (diff < 0) diff = -diff;
  CHECK(diff < Rat(1, 1000000));
  CHECK(evaluate(p, Rat(1)) == 1);
  CHECK(evaluate(p, Rat(0)) == 0);
}

TEST_CASE("2-core/4-block value at p = 0.99") {
  auto p = odnf_polynomial(model_odnf("two_core_four_block.model"));
  // each function survives iff one of its two blocks does
  Rat q = Rat(1, 100);
  Rat expected = (1 - q * q) * (1 - q * q) * (1 - q * q) * (1 - q * q);
  CHECK(evaluate(p, Rat(99, 100)) == expected);
  CHECK(fixed_decimal_string(expected, 4) == "0.9996");
  CHECK(decimal_string(expected, 8) == "0.99960006");
  CHECK(evaluate(p, Rat(1, 2)) == Rat(81, 256));
}

TEST_CASE("polynomial_from_levels agrees with the ODNF polynomial") {
  for (const char* name :
       {"dual_core.model", "four_core.model", "two_core_four_block.model"}) {
    auto model = load_model(name);
    auto from_levels = polynomial_from_levels(level_table(model));
    auto from_odnf = odnf_polynomial(model_odnf(name));
    CHECK(from_levels == from_odnf);
  }
}

TEST_CASE("polynomial evaluation matches the state-space oracle") {
  for (const char* name : {"dual_core.model", "two_core_four_block.model"}) {
    auto model = load_model(name);
    auto p = odnf_polynomial(model_odnf(name));
    for (const Rat& value : {Rat(0), Rat(1, 4), Rat(1, 2), Rat(99, 100), Rat(1)}) {
      CHECK(evaluate(p, value) ==
            system_reliability_expansion(model, model.uniform_probabilities(value)));
    }
  }
}

TEST_CASE("per-variable probabilities agree across both exact routes") {
  auto model = load_model("dual_core.model");
  auto odnf = model_odnf("dual_core.model");
  std::map<int, Rat> probs = {{1, Rat(9, 10)},
                              {2, Rat(85, 100)},
                              {3, Rat(95, 100)},
                              {4, Rat(1, 2)}};
  CHECK(odnf_probability(odnf, probs) ==
        system_reliability_expansion(model, probs));
}

TEST_CASE("2^k * P(1/2) equals the reliable-state count") {
  for (const char* name :
       {"dual_core.model", "four_core.model", "two_core_four_block.model"}) {
    auto model = load_model(name);
    auto odnf = model_odnf(name);
    auto p = odnf_polynomial(odnf);
    Rat at_half = evaluate(p, Rat(1, 2));
    CHECK(at_half * (Int(1) << model.k_sigma()) == odnf.satisfying_count());
  }
}

TEST_CASE("reliability polynomial is monotone on a grid") {
  auto p = odnf_polynomial(model_odnf("four_core.model"));
  Rat prev = 0;
  for (int i = 0; i <= 20; ++i) {
    Rat value = evaluate(p, Rat(i, 20));
    CHECK(value >= prev);
    prev = value;
  }
  CHECK(prev == 1);
}

TEST_CASE("evaluate rejects out-of-domain points") {
  auto p = poly({0, 1});
  CHECK_THROWS_AS(evaluate(p, Rat(-1, 10)), std::domain_error);
  CHECK_THROWS_AS(evaluate(p, Rat(11, 10)), std::domain_error);
}

TEST_CASE("odnf routines reject non-orthogonal input") {
  OdnfForm bad;
  bad.k = 2;
  bad.terms = {pos_term({1}), pos_term({2})};
  CHECK_THROWS_AS(odnf_probability(bad, uniform(2, Rat(1, 2))),
                  std::invalid_argument);
  CHECK_THROWS_AS(odnf_polynomial(bad), std::invalid_argument);
}

TEST_CASE("odnf_probability reports missing variables") {
  OdnfForm odnf;
  odnf.k = 3;
  odnf.terms = {pos_term({1, 3})};
  std::map<int, Rat> partial = {{1, Rat(1, 2)}};
  CHECK_THROWS_AS(odnf_probability(odnf, partial), std::invalid_argument);
}

TEST_CASE("certainty cases") {
  auto odnf = model_odnf("dual_core.model");
  CHECK(odnf_probability(odnf, uniform(4, Rat(1))) == 1);
  CHECK(odnf_probability(odnf, uniform(4, Rat(0))) == 0);
}

TEST_CASE("random models: three exact pipelines coincide") {
  Xoshiro256 rng(777001);
  for (int trial = 0; trial < 40; ++trial) {
    auto model = random_model(rng, 12);
    auto paths = enumerate_paths(model);
    auto dnf = build_operability_dnf(paths, model);
    auto odnf = orthogonalize(dnf);
    REQUIRE(verify_orthogonal(odnf));
    REQUIRE(truth_equivalent(dnf, odnf));

    auto a = odnf_polynomial(odnf);
    auto b = polynomial_from_levels(level_table(model));
    CHECK(a == b);

    Rat p(static_cast<long long>(1 + rng.next() % 99), 100);
    auto probs = model.uniform_probabilities(p);
    Rat direct = system_reliability_expansion(model, probs);
    CHECK(evaluate(a, p) == direct);
    CHECK(odnf_probability(odnf, probs) == direct);
  }
}

TEST_CASE("render edge cases") {
  CHECK(poly({0}).render() == "0");
  CHECK(poly({1}).render() == "1");
  CHECK(poly({0, 1}).render() == "p");
  CHECK(poly({0, -1}).render() == "-p");
  CHECK(poly({2, 0, 3}).render() == "2 + 3 p^2");
  CHECK(poly({0, 0, 2, 0, -1}).coefficient_strings() ==
        std::vector<std::string>{"0", "0", "2", "0", "-1"});
}
