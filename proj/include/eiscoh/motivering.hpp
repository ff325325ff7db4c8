#pragma once

// Exact expression ring for Euler characteristics: integer combinations of
// L^a * s where L is the Lefschetz motive and s is one of 1, S[k] (the motive
// of weight-k cusp forms on SL(2,Z)) or Ec(g, lambda) (the compactly supported
// Euler characteristic of V_lambda on A_g, kept symbolic).

#include "eiscoh/glbranch.hpp"
#include "eiscoh/weylcomb.hpp"

#include <json.hpp>

#include <compare>
#include <map>
#include <span>
#include <string>
#include <utility>

namespace eiscoh {

class symbol {
public:
  enum class kind { one = 0, cusp = 1, euler = 2 };

  static symbol one() { return symbol(kind::one, 0, sp_weight({})); }
  // S[k], k even and >= 2.
  static symbol cusp(int k);
  // Ec(g, lambda), lambda of length g.
  static symbol euler(const sp_weight& lambda);

  kind type() const noexcept { return kind_; }
  bool is_one() const noexcept { return kind_ == kind::one; }
  int weight_index() const noexcept { return k_; } // k of S[k]
  int genus() const noexcept { return lambda_.genus(); }
  const sp_weight& lambda() const noexcept { return lambda_; }

  std::string to_string() const;

  friend bool operator==(const symbol&, const symbol&) = default;
  friend std::strong_ordering operator<=>(const symbol& a, const symbol& b);

private:
  symbol(kind t, int k, sp_weight lambda)
      : kind_(t), k_(k), lambda_(std::move(lambda)) {}

  kind kind_;
  int k_;
  sp_weight lambda_;
};

class motive_expr {
public:
  using key = std::pair<symbol, int>; // (symbol, exponent of L)

  motive_expr() = default;

  static motive_expr constant(coeff_t c);
  // c * L^a
  static motive_expr lefschetz(int a, coeff_t c = 1);
  // c * s * L^a
  static motive_expr term(const symbol& s, coeff_t c = 1, int a = 0);
  // 1 - L^a, the recurring Eisenstein factor.
  static motive_expr one_minus_l(int a);

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const std::map<key, coeff_t>& terms() const noexcept { return terms_; }
  coeff_t coefficient(const symbol& s, int a = 0) const;

  // Only the symbol 1 occurs.
  bool is_l_polynomial() const;
  bool has_euler(int min_genus = 0) const;

  void add(const symbol& s, int a, coeff_t c);

  motive_expr& operator+=(const motive_expr& o);
  motive_expr& operator-=(const motive_expr& o);
  motive_expr operator-() const;
  friend motive_expr operator+(motive_expr a, const motive_expr& b) {
    return a += b;
  }
  friend motive_expr operator-(motive_expr a, const motive_expr& b) {
    return a -= b;
  }
  friend motive_expr operator*(coeff_t s, const motive_expr& x);
  // One side must be a polynomial in L; throws unsupported_product_error.
  friend motive_expr operator*(const motive_expr& x, const motive_expr& y);

  friend bool operator==(const motive_expr&, const motive_expr&) = default;

private:
  std::map<key, coeff_t> terms_;
};

// Dimension of weight-k cusp forms on SL(2,Z), with s_2 = -1.
int cusp_dim(int k);

enum class rewrite_rule {
  euler_base,       // Ec(0, ()) -> 1
  euler_odd,        // Ec(g, lambda) -> 0 when |lambda| is odd
  euler_genus_one,  // Ec(1, (k)) -> -S[k+2] - 1, k even
  cusp_two,         // S[2] -> -L - 1
  cusp_empty,       // S[k] -> 0 when cusp_dim(k) = 0
};

std::span<const rewrite_rule> all_rewrite_rules();

// Rewrites to a fixed point, trying rules in the given order on each term.
motive_expr normalize(const motive_expr& x, std::span<const rewrite_rule> rules);
// Every rule.
motive_expr normalize(const motive_expr& x);
// Every rule except euler_genus_one: Ec(1, .) stays symbolic.
motive_expr normalize_symbolic(const motive_expr& x);

// L^a -> L^-a, S[k] L^a -> S[k] L^(1-k-a).  Throws not_expandable_error if
// Ec(g, .) with g >= 2 survives normalization.
motive_expr dual(const motive_expr& x);

// 2a for L^a, 2a + k - 1 for S[k] L^a.
int motivic_weight(const symbol& s, int lexp);

struct weight_split {
  motive_expr low;
  motive_expr high;
};

// Throws ambiguous_split_error when a monomial has weight == threshold, and
// invalid_argument_error on Ec symbols.
weight_split motivic_weight_split(const motive_expr& x, int threshold);

std::string to_text(const motive_expr& x);
nlohmann::ordered_json to_json(const motive_expr& x);
motive_expr motive_from_json(const nlohmann::ordered_json& j);

} // namespace eiscoh
