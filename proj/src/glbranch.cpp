#include "eiscoh/glbranch.hpp"

#include "eiscoh/errors.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace eiscoh {

namespace {

std::string join_ints(std::span<const int> v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

void require_index(int k, int lo, int hi) {
  if (k < lo || k > hi)
    throw invalid_argument_error("index " + std::to_string(k) +
                                 " outside [" + std::to_string(lo) + ", " +
                                 std::to_string(hi) + "]");
}

// Calls f(mask) for every subset of {0..n-1} with exactly k elements.
template <class F>
void for_each_subset(int n, int k, F&& f) {
  for (unsigned mask = 0; mask < (1u << n); ++mask)
    if (std::popcount(mask) == k) f(mask);
}

void branch_into(const int_vector& a, std::size_t i, int_vector& cur,
                 std::vector<gl_weight>& out) {
  if (i + 1 >= a.size()) {
    out.emplace_back(cur);
    return;
  }
  for (int b = a[i]; b >= a[i + 1]; --b) {
    cur.push_back(b);
    branch_into(a, i + 1, cur, out);
    cur.pop_back();
  }
}

} // namespace

bool is_dominant(std::span<const int> v) noexcept {
  return std::adjacent_find(v.begin(), v.end(), std::less<>()) == v.end();
}

gl_weight::gl_weight(int_vector entries) : entries_(std::move(entries)) {
  if (!is_dominant(entries_))
    throw invalid_argument_error("GL weight must be weakly decreasing: (" +
                                 join_ints(entries_) + ")");
}

int gl_weight::total() const noexcept {
  return std::accumulate(entries_.begin(), entries_.end(), 0);
}

std::string gl_weight::to_string() const {
  return "(" + join_ints(entries_) + ")";
}

coeff_t virtual_bundle::coefficient(const gl_weight& w, int twist) const {
  auto it = terms_.find({twist, w});
  return it == terms_.end() ? 0 : it->second;
}

void virtual_bundle::add(const gl_weight& w, coeff_t c, int twist) {
  if (w.rank() != rank_)
    throw invalid_argument_error("weight " + w.to_string() +
                                 " does not have rank " +
                                 std::to_string(rank_));
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({twist, w}, c);
  if (!inserted && (it->second += c) == 0) terms_.erase(it);
}

virtual_bundle& virtual_bundle::operator+=(const virtual_bundle& other) {
  for (const auto& [k, c] : other.terms_) add(k.second, c, k.first);
  return *this;
}

virtual_bundle& virtual_bundle::operator-=(const virtual_bundle& other) {
  for (const auto& [k, c] : other.terms_) add(k.second, -c, k.first);
  return *this;
}

virtual_bundle virtual_bundle::operator-() const { return -1 * *this; }

virtual_bundle operator*(coeff_t s, const virtual_bundle& v) {
  virtual_bundle out(v.rank_);
  if (s == 0) return out;
  for (const auto& [k, c] : v.terms_) out.terms_.emplace(k, s * c);
  return out;
}

std::string virtual_bundle::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    const auto& [twist, w] = k;
    if (first)
      out += c < 0 ? "-" : "+";
    else
      out += c < 0 ? " - " : " + ";
    first = false;
    const coeff_t mag = c < 0 ? -c : c;
    if (mag != 1) out += std::to_string(mag) + "*";
    out += "W" + w.to_string();
    if (twist != 0) out += "<nu^" + std::to_string(twist) + ">";
  }
  return out;
}

int_vector dual_vector(std::span<const int> v) {
  int_vector out(v.rbegin(), v.rend());
  for (int& x : out) x = -x;
  return out;
}

gl_weight dual_weight(const gl_weight& mu) {
  return gl_weight(dual_vector(mu.entries()));
}

std::vector<gl_weight> branch(const gl_weight& mu) {
  if (mu.rank() < 1)
    throw invalid_argument_error("cannot branch the empty weight");
  std::vector<gl_weight> out;
  int_vector cur;
  branch_into(mu.entries(), 0, cur, out);
  return out;
}

std::optional<straightened> straighten(std::span<const int> v) {
  const int n = static_cast<int>(v.size());
  int_vector shifted(v.begin(), v.end());
  for (int i = 0; i < n; ++i) shifted[i] += n - 1 - i;
  // Bubble sort: each swap is one transposition.
  int sign = 1;
  for (int pass = 0; pass < n; ++pass) {
    for (int i = 0; i + 1 < n - pass; ++i) {
      if (shifted[i] == shifted[i + 1]) return std::nullopt;
      if (shifted[i] < shifted[i + 1]) {
        std::swap(shifted[i], shifted[i + 1]);
        sign = -sign;
      }
    }
  }
  if (std::adjacent_find(shifted.begin(), shifted.end()) != shifted.end())
    return std::nullopt;
  for (int i = 0; i < n; ++i) shifted[i] -= n - 1 - i;
  return straightened{sign, gl_weight(std::move(shifted))};
}

wedge_product wedge_dual_tensor(const gl_weight& mu, int k) {
  const int n = mu.rank();
  require_index(k, 0, n);
  wedge_product out{virtual_bundle(n), virtual_bundle(n)};
  for_each_subset(n, k, [&](unsigned mask) {
    int_vector v = mu.entries();
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1u) --v[i];
    if (is_dominant(v)) out.deletion_rule.add(gl_weight(v), 1);
    if (auto s = straighten(v)) out.bundle.add(s->weight, s->sign);
  });
  return out;
}

gl_weight telescope_weight(const gl_weight& a, int k) {
  const int n = a.rank();
  require_index(k, 1, n);
  int_vector out;
  out.reserve(n - 1);
  for (int i = 1; i <= n; ++i) {
    if (i < k) out.push_back(a[i - 1]);
    if (i > k) out.push_back(a[i - 1] - 1);
  }
  return gl_weight(std::move(out));
}

virtual_bundle telescope_closed(const gl_weight& a) {
  const int n = a.rank();
  if (n < 1) throw invalid_argument_error("telescope needs rank >= 1");
  virtual_bundle out(n - 1);
  for (int k = 1; k <= n; ++k)
    out.add(telescope_weight(a, k), (n - k) % 2 == 0 ? 1 : -1);
  return out;
}

virtual_bundle telescope_bruteforce(const gl_weight& a) {
  const int n = a.rank();
  if (n < 1) throw invalid_argument_error("telescope needs rank >= 1");
  virtual_bundle out(n - 1);
  for (const gl_weight& b : branch(a)) {
    for (int k = 0; k <= n - 1; ++k) {
      const virtual_bundle piece = wedge_dual_tensor(b, k).bundle;
      if (k % 2 == 0)
        out += piece;
      else
        out -= piece;
    }
  }
  return out;
}

bool deletion_parity(const gl_weight& a, int k) {
  return telescope_weight(a, k).total() % 2 == 0;
}

} // namespace eiscoh
