#include "eiscoh/errors.hpp"
#include "eiscoh/motivering.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

using namespace eiscoh;

namespace {

using M = motive_expr;

M L(int a, coeff_t c = 1) { return M::lefschetz(a, c); }
M one(coeff_t c = 1) { return M::constant(c); }
M S(int k, int a = 0, coeff_t c = 1) { return M::term(symbol::cusp(k), c, a); }
M Ec(int_vector v, int a = 0, coeff_t c = 1) {
  return M::term(symbol::euler(sp_weight(std::move(v))), c, a);
}

// A mixed pool of raw (unnormalized) expressions for property checks.
std::vector<M> sample_pool() {
  std::vector<M> out;
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coeff(-3, 3), lexp(-4, 9), pick(0, 5),
      k(1, 13), e(0, 7);
  for (int i = 0; i < 200; ++i) {
    M x;
    const int n = 1 + i % 5;
    for (int j = 0; j < n; ++j) {
      const coeff_t c = coeff(rng);
      const int a = lexp(rng);
      switch (pick(rng)) {
      case 0: x += L(a, c); break;
      case 1: x += S(2 * k(rng), a, c); break;
      case 2: x += Ec({e(rng)}, a, c); break;
      case 3: x += Ec({}, a, c); break;
      case 4: x += S(2, a, c); break;
      default: {
        int p = e(rng), q = e(rng);
        if (p < q) std::swap(p, q);
        x += Ec({p, q}, a, c);
      }
      }
    }
    out.push_back(x);
  }
  return out;
}

} // namespace

TEST_CASE("symbol construction") {
  CHECK(symbol::cusp(12).to_string() == "S[12]");
  CHECK(symbol::euler(sp_weight({2, 0})).to_string() == "Ec(2;2,0)");
  CHECK(symbol::euler(sp_weight({})).genus() == 0);
  CHECK_THROWS_AS(symbol::cusp(3), invalid_argument_error);
  CHECK_THROWS_AS(symbol::cusp(0), invalid_argument_error);
  CHECK(symbol::one() < symbol::cusp(2));
  CHECK(symbol::cusp(20) < symbol::euler(sp_weight({0})));
}

TEST_CASE("arithmetic") {
  const M x = one() + L(1) - L(2, 3);
  CHECK((x + -x).is_zero());
  CHECK((x - x).is_zero());
  CHECK(2 * x == x + x);
  CHECK(0 * x == M());
  const M e = Ec({2, 0}) * M::one_minus_l(3);
  CHECK(e.size() == 2);
  CHECK(e.coefficient(symbol::euler(sp_weight({2, 0})), 3) == -1);
  CHECK(M::one_minus_l(3) * e == e * M::one_minus_l(3));
  CHECK_THROWS_AS(S(12) * Ec({2, 0}), unsupported_product_error);
  CHECK_THROWS_AS(S(12) * S(12), unsupported_product_error);
  CHECK(x.is_l_polynomial());
  CHECK_FALSE(e.is_l_polynomial());
  CHECK(e.has_euler(2));
  CHECK_FALSE(e.has_euler(3));
  CHECK((L(2) * L(-2)) == one());
}

TEST_CASE("cusp_dim") {
  CHECK(cusp_dim(2) == -1);
  CHECK(cusp_dim(12) == 1);
  CHECK(cusp_dim(24) == 2);
  for (int k : {4, 6, 8, 10, 14}) CHECK(cusp_dim(k) == 0);
  CHECK(cusp_dim(16) == 1);
  CHECK(cusp_dim(26) == 1);
  CHECK(cusp_dim(36) == 3);
  CHECK(cusp_dim(38) == 2);
  CHECK(cusp_dim(13) == 0);
  CHECK(cusp_dim(0) == 0);
  CHECK(cusp_dim(-4) == 0);
}

TEST_CASE("normalize examples") {
  CHECK(normalize(Ec({0})) == L(1));
  CHECK(normalize(Ec({3})).is_zero());
  CHECK(normalize(Ec({10})) == -S(12) - one());
  CHECK(normalize(Ec({})) == one());
  CHECK(normalize(S(2, 3)) == -L(4) - L(3));
  CHECK(normalize(S(14)).is_zero());
  CHECK(normalize(Ec({3, 0})).is_zero());
  CHECK(normalize(Ec({2, 0})) == Ec({2, 0}));
  CHECK(normalize_symbolic(Ec({4})) == Ec({4}));
  CHECK(normalize_symbolic(Ec({3})).is_zero());
}

TEST_CASE("normalize is idempotent and independent of rule order") {
  const auto rules = all_rewrite_rules();
  std::vector<rewrite_rule> order(rules.begin(), rules.end());
  std::mt19937 rng(3);
  for (const M& x : sample_pool()) {
    const M n = normalize(x);
    CHECK(normalize(n) == n);
    for (int t = 0; t < 4; ++t) {
      std::shuffle(order.begin(), order.end(), rng);
      CHECK(normalize(x, order) == n);
    }
  }
}

TEST_CASE("normal forms carry only surviving symbols") {
  for (const M& x : sample_pool()) {
    const M n = normalize(x);
    for (const auto& [key, c] : n.terms()) {
      const symbol& s = key.first;
      CHECK(c != 0);
      if (s.type() == symbol::kind::cusp) CHECK(cusp_dim(s.weight_index()) > 0);
      if (s.type() == symbol::kind::euler) {
        CHECK(s.genus() >= 2);
        CHECK(s.lambda().total() % 2 == 0);
      }
    }
  }
}

TEST_CASE("dual") {
  CHECK(dual(L(3)) == L(-3));
  CHECK(dual(S(12)) == S(12, -11));
  CHECK(dual(S(12, 2)) == S(12, -13));
  CHECK(dual(Ec({10})) == -S(12, -11) - one());
  CHECK_THROWS_AS(dual(Ec({2, 0})), not_expandable_error);
  for (const M& x : sample_pool())
    if (!normalize(x).has_euler())
      CHECK(dual(dual(x)) == normalize(x));
}

TEST_CASE("motivic weight and splitting") {
  CHECK(motivic_weight(symbol::one(), 3) == 6);
  CHECK(motivic_weight(symbol::cusp(12), 2) == 15);
  for (int k = 0; k <= 20; k += 2) {
    const weight_split s = motivic_weight_split(M::one_minus_l(k + 1), k + 1);
    CHECK(s.low == one());
    CHECK(s.high == -L(k + 1));
  }
  const weight_split s14 =
      motivic_weight_split(S(14) * M::one_minus_l(7), 16);
  CHECK(s14.low == S(14));
  CHECK(s14.high == -S(14, 7));
  CHECK_THROWS_AS(motivic_weight_split(L(3), 6), ambiguous_split_error);
  CHECK_THROWS_AS(motivic_weight_split(Ec({2, 0}), 3), invalid_argument_error);
  // low + high reproduces the input.
  const M x = one() + L(1) - L(2) - L(3) + S(12, 1) - S(16, 4);
  const weight_split t = motivic_weight_split(x, 5);
  CHECK(t.low + t.high == x);
}

TEST_CASE("text rendering") {
  CHECK(to_text(M()) == "0");
  CHECK(to_text(one() + L(1) - L(2) - L(3)) == "1 + L - L^2 - L^3");
  CHECK(to_text(Ec({2, 0}) * M::one_minus_l(3)) ==
        "Ec(2;2,0) - Ec(2;2,0)*L^3");
  CHECK(to_text(-S(12, 2)) == "-S[12]*L^2");
  CHECK(to_text(L(14, -2)) == "-2*L^14");
  CHECK(to_text(-one()) == "-1");
}

TEST_CASE("json round trip") {
  for (const M& x : sample_pool()) {
    const M n = normalize(x);
    CHECK(motive_from_json(to_json(n)) == n);
    CHECK(motive_from_json(nlohmann::ordered_json::parse(to_json(x).dump())) ==
          x);
  }
  const auto j = to_json(S(12, 2, -1));
  CHECK(j.dump() ==
        R"([{"coeff":-1,"Lexp":2,"symbol":{"type":"S","k":12}}])");
  CHECK_THROWS_AS(motive_from_json(nlohmann::ordered_json::parse("{}")),
                  invalid_argument_error);
  CHECK_THROWS_AS(motive_from_json(nlohmann::ordered_json::parse(
                      R"([{"coeff":1,"Lexp":0,"symbol":{"type":"X"}}])")),
                  invalid_argument_error);
}
