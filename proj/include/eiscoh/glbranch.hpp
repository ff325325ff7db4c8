#pragma once

// GL(n) weight combinatorics on the boundary: branching to GL(n-1), tensoring
// with exterior powers of the dual standard representation, and the closed
// telescoping formula for the alternating direct image.

#include "eiscoh/weylcomb.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace eiscoh {

using coeff_t = std::int64_t;

bool is_dominant(std::span<const int> v) noexcept;

// Weakly decreasing integer vector; the empty weight stands for W_() = 1.
class gl_weight {
public:
  gl_weight() = default;
  explicit gl_weight(int_vector entries);

  int rank() const noexcept { return static_cast<int>(entries_.size()); }
  const int_vector& entries() const noexcept { return entries_; }
  int operator[](std::size_t i) const { return entries_[i]; }
  int total() const noexcept;

  std::string to_string() const;

  friend bool operator==(const gl_weight&, const gl_weight&) = default;
  friend auto operator<=>(const gl_weight&, const gl_weight&) = default;

private:
  int_vector entries_;
};

// Finite signed sum of twisted bundles W_mu<nu^t> over GL(n).
class virtual_bundle {
public:
  using key = std::pair<int, gl_weight>; // (twist, weight)

  explicit virtual_bundle(int rank) : rank_(rank) {}

  int rank() const noexcept { return rank_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const std::map<key, coeff_t>& terms() const noexcept { return terms_; }
  coeff_t coefficient(const gl_weight& w, int twist = 0) const;

  void add(const gl_weight& w, coeff_t c, int twist = 0);

  virtual_bundle& operator+=(const virtual_bundle& other);
  virtual_bundle& operator-=(const virtual_bundle& other);
  virtual_bundle operator-() const;
  friend virtual_bundle operator+(virtual_bundle a, const virtual_bundle& b) {
    return a += b;
  }
  friend virtual_bundle operator-(virtual_bundle a, const virtual_bundle& b) {
    return a -= b;
  }
  friend virtual_bundle operator*(coeff_t s, const virtual_bundle& v);

  // Ascending (twist, weight): "-W(-1) + W(2)", "-2*W(1,-1)<nu^3>", "0".
  std::string to_string() const;

  friend bool operator==(const virtual_bundle&,
                         const virtual_bundle&) = default;

private:
  int rank_;
  std::map<key, coeff_t> terms_;
};

// Reverse and negate: W_mu^dual = W_{-sigma_1(mu)}.
gl_weight dual_weight(const gl_weight& mu);
int_vector dual_vector(std::span<const int> v);

// Interlacing weights b with a_1 >= b_1 >= a_2 >= ... >= b_{n-1} >= a_n,
// descending lexicographic order.
std::vector<gl_weight> branch(const gl_weight& mu);

struct straightened {
  int sign;
  gl_weight weight;
  friend bool operator==(const straightened&, const straightened&) = default;
};

// Dot-action straightening of the virtual character with highest weight v;
// nullopt when v + rho_n has a repeated entry.
std::optional<straightened> straighten(std::span<const int> v);

// mu (x) wedge^k(standard dual) computed both by straightening every
// mu - 1_S and by the rule "subtract 1 from k entries, drop non-dominant".
struct wedge_product {
  virtual_bundle bundle;        // straightening route, authoritative
  virtual_bundle deletion_rule; // drop-non-dominant route
  bool agrees() const { return bundle == deletion_rule; }
};

wedge_product wedge_dual_tensor(const gl_weight& mu, int k);

// sum_k (-1)^{n-k} W_{(a_1..a_{k-1}, a_{k+1}-1..a_n-1)}
virtual_bundle telescope_closed(const gl_weight& a);

// Res^n_{n-1} W_a (x) sum_k (-1)^k wedge^k(dual), expanded and cancelled.
virtual_bundle telescope_bruteforce(const gl_weight& a);

// (a_1..a_{k-1}, a_{k+1}-1..a_n-1), the k-th telescope weight.
gl_weight telescope_weight(const gl_weight& a, int k);

// sum_{i<k} a_i + sum_{i>k} (a_i - 1) is even.
bool deletion_parity(const gl_weight& a, int k);

} // namespace eiscoh
