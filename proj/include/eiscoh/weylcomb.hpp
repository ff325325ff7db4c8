#pragma once

// Combinatorics of the Weyl group W_g of Sp(2g), realised as the permutations
// s of {1..2g} with s(i) + s(2g+1-i) = 2g+1.  An element is stored by its
// first g images only; the second half is determined by the constraint.

#include <compare>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace eiscoh {

using int_vector = std::vector<int>;

class weyl_element {
public:
  // Throws invalid_argument_error unless images is a valid first half.
  // g = 0 is the trivial group, reached by restricting from genus 1.
  weyl_element(int g, int_vector images);

  static weyl_element identity(int g);

  int genus() const noexcept { return g_; }
  const int_vector& images() const noexcept { return images_; }

  // w(i) for 1 <= i <= 2g.
  int operator()(int i) const;

  // w^{-1}(v) for 1 <= v <= 2g.
  int preimage(int v) const;

  bool contains(int v) const;

  // "[135]" while all images are single digits (g <= 4), "[1,3,5,...]" beyond.
  std::string to_string() const;

  friend bool operator==(const weyl_element&, const weyl_element&) = default;
  friend std::strong_ordering operator<=>(const weyl_element& a,
                                          const weyl_element& b) {
    if (auto c = a.g_ <=> b.g_; c != 0) return c;
    return a.images_ <=> b.images_;
  }

private:
  int g_;
  int_vector images_;
};

// Dominant weight for Sp(2g): weakly decreasing, nonnegative.
class sp_weight {
public:
  explicit sp_weight(int_vector entries);

  int genus() const noexcept { return static_cast<int>(entries_.size()); }
  const int_vector& entries() const noexcept { return entries_; }
  int operator[](std::size_t i) const { return entries_[i]; }
  // |lambda|, also the multiplier coordinate c.
  int total() const noexcept;
  // lambda_1 > lambda_2 > ... > lambda_g > 0.
  bool is_regular() const noexcept;

  std::string to_string() const;

  friend bool operator==(const sp_weight&, const sp_weight&) = default;
  friend auto operator<=>(const sp_weight&, const sp_weight&) = default;

private:
  int_vector entries_;
};

enum class side { a, b };

const char* side_name(side s) noexcept;

struct dichotomy {
  side which;
  int position;
  friend bool operator==(const dichotomy&, const dichotomy&) = default;
};

// (g, g-1, ..., 1)
int_vector rho(int g);

// The 2^g final elements, lexicographic on images.
std::vector<weyl_element> enumerate_final(int g);

// All 2^g g! elements of W_g, lexicographic on images.
std::vector<weyl_element> enumerate_all(int g);

int length(const weyl_element& w);

bool is_final(const weyl_element& w);

// u_i = v_ext[w(i)] with v_ext[j] = v_j (j <= g), -v_{2g+1-j} (j > g).
int_vector signed_apply(const weyl_element& w, std::span<const int> v);

// w * lambda = w(lambda + rho) - rho
int_vector dot_action(const weyl_element& w, std::span<const int> lambda);

// Final element whose sign changes are exactly the given (1-based) flips.
weyl_element kostant_from_signs(int g, const std::set<int>& flips);

// Deletes k (side a) or 2g+1-k (side b) and renames into F_{g-1}.
weyl_element restrict_final(const weyl_element& w, int k, side s);

dichotomy image_dichotomy(const weyl_element& w, int k);

} // namespace eiscoh
