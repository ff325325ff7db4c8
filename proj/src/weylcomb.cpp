#include "eiscoh/weylcomb.hpp"

#include "eiscoh/errors.hpp"

#include <algorithm>
#include <numeric>

namespace eiscoh {

namespace {

std::string join_ints(std::span<const int> v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != 0) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

void require_genus(int g) {
  if (g < 1)
    throw invalid_argument_error("genus must be positive, got " +
                                 std::to_string(g));
}

void require_size(const weyl_element& w, std::span<const int> v) {
  if (static_cast<int>(v.size()) != w.genus())
    throw invalid_argument_error("vector of length " +
                                 std::to_string(v.size()) +
                                 " does not match genus " +
                                 std::to_string(w.genus()));
}

} // namespace

weyl_element::weyl_element(int g, int_vector images)
    : g_(g), images_(std::move(images)) {
  if (g_ < 0)
    throw invalid_argument_error("genus must be nonnegative, got " +
                                 std::to_string(g_));
  if (static_cast<int>(images_.size()) != g_)
    throw invalid_argument_error("expected " + std::to_string(g_) +
                                 " images, got " +
                                 std::to_string(images_.size()));
  std::vector<bool> seen(2 * g_ + 2, false);
  for (int v : images_) {
    if (v < 1 || v > 2 * g_)
      throw invalid_argument_error("image " + std::to_string(v) +
                                   " outside [1, " + std::to_string(2 * g_) +
                                   "]");
    if (seen[v] || seen[2 * g_ + 1 - v])
      throw invalid_argument_error("images " + join_ints(images_, ",") +
                                   " do not define an element of W_" +
                                   std::to_string(g_));
    seen[v] = true;
  }
}

weyl_element weyl_element::identity(int g) {
  int_vector im(std::max(g, 0));
  std::iota(im.begin(), im.end(), 1);
  return weyl_element(g, std::move(im));
}

int weyl_element::operator()(int i) const {
  if (i < 1 || i > 2 * g_)
    throw invalid_argument_error("index out of range");
  if (i <= g_) return images_[i - 1];
  return 2 * g_ + 1 - images_[2 * g_ - i];
}

int weyl_element::preimage(int v) const {
  if (v < 1 || v > 2 * g_)
    throw invalid_argument_error("value out of range");
  for (int i = 0; i < g_; ++i) {
    if (images_[i] == v) return i + 1;
    if (images_[i] == 2 * g_ + 1 - v) return 2 * g_ - i;
  }
  return 0; // unreachable for a valid element
}

bool weyl_element::contains(int v) const {
  return std::find(images_.begin(), images_.end(), v) != images_.end();
}

std::string weyl_element::to_string() const {
  if (g_ < 5) // images are single digits while 2g <= 9
    return "[" + join_ints(images_, "") + "]";
  return "[" + join_ints(images_, ",") + "]";
}

sp_weight::sp_weight(int_vector entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < 0)
      throw invalid_argument_error("weight entries must be nonnegative: (" +
                                   join_ints(entries_, ",") + ")");
    if (i > 0 && entries_[i - 1] < entries_[i])
      throw invalid_argument_error("weight must be weakly decreasing: (" +
                                   join_ints(entries_, ",") + ")");
  }
}

int sp_weight::total() const noexcept {
  return std::accumulate(entries_.begin(), entries_.end(), 0);
}

bool sp_weight::is_regular() const noexcept {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] <= 0) return false;
    if (i > 0 && entries_[i - 1] <= entries_[i]) return false;
  }
  return true;
}

std::string sp_weight::to_string() const {
  return "(" + join_ints(entries_, ",") + ")";
}

const char* side_name(side s) noexcept { return s == side::a ? "A" : "B"; }

int_vector rho(int g) {
  int_vector r(std::max(g, 0));
  for (int i = 0; i < g; ++i) r[i] = g - i;
  return r;
}

std::vector<weyl_element> enumerate_final(int g) {
  require_genus(g);
  std::vector<weyl_element> out;
  out.reserve(std::size_t{1} << g);
  for (unsigned mask = 0; mask < (1u << g); ++mask) {
    int_vector im;
    im.reserve(g);
    for (int i = 1; i <= g; ++i)
      im.push_back((mask >> (i - 1)) & 1u ? 2 * g + 1 - i : i);
    std::sort(im.begin(), im.end());
    out.emplace_back(g, std::move(im));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<weyl_element> enumerate_all(int g) {
  require_genus(g);
  std::vector<weyl_element> out;
  int_vector perm(g);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    for (unsigned mask = 0; mask < (1u << g); ++mask) {
      int_vector im(g);
      for (int i = 0; i < g; ++i)
        im[i] = (mask >> i) & 1u ? 2 * g + 1 - perm[i] : perm[i];
      out.emplace_back(g, std::move(im));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  return out;
}

int length(const weyl_element& w) {
  const auto& im = w.images();
  const int g = w.genus();
  int len = 0;
  for (int i = 0; i < g; ++i) {
    for (int j = i; j < g; ++j) {
      if (j > i && im[i] > im[j]) ++len;
      if (im[i] + im[j] > 2 * g + 1) ++len;
    }
  }
  return len;
}

bool is_final(const weyl_element& w) {
  const auto& im = w.images();
  return std::adjacent_find(im.begin(), im.end(), std::greater_equal<>()) ==
         im.end();
}

int_vector signed_apply(const weyl_element& w, std::span<const int> v) {
  require_size(w, v);
  const int g = w.genus();
  int_vector u(g);
  for (int i = 0; i < g; ++i) {
    const int j = w.images()[i];
    u[i] = j <= g ? v[j - 1] : -v[2 * g - j];
  }
  return u;
}

int_vector dot_action(const weyl_element& w, std::span<const int> lambda) {
  require_size(w, lambda);
  const int_vector r = rho(w.genus());
  int_vector shifted(lambda.begin(), lambda.end());
  for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] += r[i];
  int_vector u = signed_apply(w, shifted);
  for (std::size_t i = 0; i < u.size(); ++i) u[i] -= r[i];
  return u;
}

weyl_element kostant_from_signs(int g, const std::set<int>& flips) {
  require_genus(g);
  int_vector im;
  im.reserve(g);
  for (int i = 1; i <= g; ++i)
    im.push_back(flips.contains(i) ? 2 * g + 1 - i : i);
  for (int f : flips)
    if (f < 1 || f > g)
      throw invalid_argument_error("flip index " + std::to_string(f) +
                                   " outside [1, " + std::to_string(g) + "]");
  std::sort(im.begin(), im.end());
  return weyl_element(g, std::move(im));
}

weyl_element restrict_final(const weyl_element& w, int k, side s) {
  const int g = w.genus();
  if (k < 1 || k > g)
    throw invalid_argument_error("k = " + std::to_string(k) +
                                 " outside [1, " + std::to_string(g) + "]");
  if (!is_final(w))
    throw side_mismatch_error(w.to_string() + " is not final");
  const int top = 2 * g + 1 - k;
  const int drop = s == side::a ? k : top;
  if (s == side::a ? w.preimage(k) > k : w.preimage(top) > g)
    throw side_mismatch_error(w.to_string() + " is not on side " +
                              side_name(s) + " for k = " + std::to_string(k));
  int_vector im;
  im.reserve(g - 1);
  for (int m : w.images()) {
    if (m == drop) continue;
    if (m > top)
      im.push_back(m - 2);
    else if (m > k)
      im.push_back(m - 1);
    else
      im.push_back(m);
  }
  return weyl_element(g - 1, std::move(im));
}

dichotomy image_dichotomy(const weyl_element& w, int k) {
  const int g = w.genus();
  if (k < 1 || k > g)
    throw invalid_argument_error("k = " + std::to_string(k) +
                                 " outside [1, " + std::to_string(g) + "]");
  if (w.contains(k)) return {side::a, w.preimage(k)};
  return {side::b, w.preimage(2 * g + 1 - k)};
}

} // namespace eiscoh
