#include "eiscoh/eiscalc.hpp"

#include "eiscoh/errors.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <tuple>

namespace eiscoh {

namespace {

int parity_sign(int e) { return e % 2 == 0 ? 1 : -1; }

void require_g2(int l, int m) {
  if (m < 0 || l < m)
    throw invalid_argument_error("need l >= m >= 0, got l=" +
                                 std::to_string(l) +
                                 " m=" + std::to_string(m));
  if ((l - m) % 2 != 0)
    throw invalid_argument_error("need l = m (mod 2), got l=" +
                                 std::to_string(l) +
                                 " m=" + std::to_string(m));
}

motive_expr ec1(int k) {
  return motive_expr::term(symbol::euler(sp_weight({k})));
}

motive_expr g2_common(int l, int m) {
  const int top = l + m + 3;
  return -cusp_dim(l - m + 2) * motive_expr::one_minus_l(top) +
         cusp_dim(l + m + 4) *
             (motive_expr::lefschetz(m + 1) - motive_expr::lefschetz(l + 2));
}

std::string mismatch(const motive_expr& lhs, const motive_expr& rhs) {
  return "lhs = " + to_text(lhs) + ", rhs = " + to_text(rhs);
}

} // namespace

sp_weight tau_prime(const sp_weight& lambda, int k) {
  const int g = lambda.genus();
  if (k < 1 || k > g)
    throw invalid_argument_error("k = " + std::to_string(k) +
                                 " outside [1, " + std::to_string(g) + "]");
  int_vector out;
  out.reserve(g - 1);
  for (int i = 1; i <= g; ++i) {
    if (i < k) out.push_back(lambda[i - 1] + 1);
    if (i > k) out.push_back(lambda[i - 1]);
  }
  return sp_weight(std::move(out));
}

int twist_exponent(const sp_weight& lambda, int k) {
  return lambda[k - 1] + lambda.genus() + 1 - k;
}

std::vector<bgg_term> bgg_complex(const sp_weight& lambda) {
  const int g = lambda.genus();
  std::vector<bgg_term> out;
  for (const weyl_element& w : enumerate_final(g)) {
    gl_weight mu(dual_vector(dot_action(w, lambda.entries())));
    const int twice = lambda.total() + mu.total();
    if (twice % 2 != 0)
      throw std::logic_error("odd filtration for " + w.to_string());
    out.push_back({w, std::move(mu), length(w), twice / 2});
  }
  std::sort(out.begin(), out.end(), [](const bgg_term& a, const bgg_term& b) {
    return std::tie(a.degree, a.mu) < std::tie(b.degree, b.mu);
  });
  return out;
}

std::vector<boundary_term> boundary_terms(const sp_weight& lambda) {
  const int g = lambda.genus();
  std::vector<boundary_term> out;
  out.reserve(static_cast<std::size_t>(g) << g);
  for (const weyl_element& w : enumerate_final(g)) {
    const gl_weight mu(dual_vector(dot_action(w, lambda.entries())));
    const int len = length(w);
    for (int k = 1; k <= g; ++k) {
      const dichotomy d = image_dichotomy(w, k);
      const int l = g + 1 - d.position;
      out.push_back({w, k, d.which, d.position, l,
                     restrict_final(w, k, d.which), telescope_weight(mu, l),
                     parity_sign(len + g - l),
                     d.which == side::a ? 0 : twist_exponent(lambda, k),
                     deletion_parity(mu, l)});
    }
  }
  return out;
}

verification_report verify_partition(const sp_weight& lambda) {
  const int g = lambda.genus();
  const std::string at = " at lambda=" + lambda.to_string();
  verification_report report;

  std::optional<std::string> dichotomy_bad;
  for (const weyl_element& w : enumerate_final(g)) {
    std::vector<bool> hit(g + 1, false);
    for (int k = 1; k <= g && !dichotomy_bad; ++k) {
      if (w.contains(k) == w.contains(2 * g + 1 - k))
        dichotomy_bad = "w=" + w.to_string() + " k=" + std::to_string(k) +
                        ": not exactly one of k, 2g+1-k among the images";
      const int p = image_dichotomy(w, k).position;
      if (p < 1 || p > g || hit[p])
        dichotomy_bad = "w=" + w.to_string() + " k=" + std::to_string(k) +
                        ": position " + std::to_string(p) + " repeated";
      else
        hit[p] = true;
    }
  }
  report.record("dichotomy", "exclusive sides, k -> position bijective" + at,
                dichotomy_bad);

  std::optional<std::string> weight_bad, parity_bad;
  // (k, side) -> observed ratio (-1)^{l(w)+g-l} / (-1)^{l(u)}
  std::map<std::pair<int, side>, int> ratio;
  std::optional<std::string> constancy_bad, value_bad;
  for (const boundary_term& t : boundary_terms(lambda)) {
    const std::string where = "w=" + t.source_w.to_string() +
                              " k=" + std::to_string(t.k) + " side " +
                              side_name(t.which) + at;
    const sp_weight reduced = tau_prime(lambda, t.k);
    const gl_weight expected(
        dual_vector(dot_action(t.u, reduced.entries())));
    if (!weight_bad && expected != t.weight)
      weight_bad = where + ": telescope weight " + t.weight.to_string() +
                   " vs restricted " + expected.to_string();
    if (!parity_bad && t.parity_pass != (reduced.total() % 2 == 0))
      parity_bad = where + ": deletion parity disagrees with |tau'_k|";

    const int r = t.sign * parity_sign(length(t.u));
    auto [it, fresh] = ratio.try_emplace({t.k, t.which}, r);
    if (!fresh && it->second != r && !constancy_bad)
      constancy_bad = where + ": sign ratio changes with w";
    const int want = t.which == side::a ? parity_sign(t.k + 1)
                                        : parity_sign(t.k);
    if (!value_bad && r != want)
      value_bad = where + ": sign ratio " + std::to_string(r) +
                  ", expected " + std::to_string(want);
  }
  report.record("weight-identity",
                "tau_l(-sigma1(w*lambda)) = -sigma1(u*tau'_k(lambda))" + at,
                weight_bad);
  report.record("sign-constancy", "ratio depends only on (g,k,side)" + at,
                constancy_bad);
  report.record("sign-values", "c_A = (-1)^(k+1), c_B = (-1)^k" + at,
                value_bad);
  report.record("parity-routes",
                "deletion parity <=> |tau'_k(lambda)| even" + at, parity_bad);
  return report;
}

verification_report verify_reindexing(const sp_weight& lambda) {
  const int g = lambda.genus();
  using record = std::tuple<gl_weight, int, int, bool>; // weight sign twist parity
  std::map<record, int> expected, observed;
  for (const weyl_element& w : enumerate_final(g)) {
    const gl_weight mu(dual_vector(dot_action(w, lambda.entries())));
    const int len = length(w);
    // position -> (k, side), the inverse of k -> position
    std::vector<std::optional<std::pair<int, side>>> by_position(g + 1);
    for (int k = 1; k <= g; ++k) {
      const dichotomy d = image_dichotomy(w, k);
      by_position[d.position] = {k, d.which};
    }
    const virtual_bundle closed = telescope_closed(mu);
    for (const auto& [key, c] : closed.terms()) {
      int l = 1;
      while (telescope_weight(mu, l) != key.second) ++l;
      const auto [k, s] = *by_position[g + 1 - l];
      const int twist = s == side::a ? 0 : twist_exponent(lambda, k);
      ++expected[{key.second, static_cast<int>(c) * parity_sign(len), twist,
                  deletion_parity(mu, l)}];
    }
  }
  for (const boundary_term& t : boundary_terms(lambda))
    ++observed[{t.weight, t.sign, t.twist, t.parity_pass}];

  std::optional<std::string> bad;
  if (expected != observed)
    bad = "multisets of (weight, sign, twist, parity) differ at lambda=" +
          lambda.to_string();
  verification_report report;
  report.record("reindexing",
                "boundary terms = expanded telescopes at lambda=" +
                    lambda.to_string(),
                bad);
  return report;
}

motive_expr rank1(const sp_weight& lambda, bool expand) {
  const int g = lambda.genus();
  if (g < 1) throw invalid_argument_error("rank1 needs g >= 1");
  motive_expr out;
  for (int k = 1; k <= g; ++k) {
    const motive_expr ec =
        motive_expr::term(symbol::euler(tau_prime(lambda, k)));
    out += parity_sign(k + 1) *
           (ec * motive_expr::one_minus_l(twist_exponent(lambda, k)));
  }
  return expand ? normalize(out) : normalize_symbolic(out);
}

motive_expr total_g2(int l, int m) {
  require_g2(l, m);
  motive_expr x = g2_common(l, m);
  if (l % 2 == 0)
    x += ec1(m) * motive_expr::one_minus_l(l + 2) -
         (motive_expr::lefschetz(l + 2) - motive_expr::lefschetz(l + m + 3));
  else
    x += -(ec1(l + 1) * motive_expr::one_minus_l(m + 1)) -
         motive_expr::one_minus_l(m + 1);
  return normalize(x);
}

motive_expr total_g2_alt(int l, int m) {
  require_g2(l, m);
  motive_expr x =
      g2_common(l, m) - motive_expr::one_minus_l(l + m + 3);
  if (l % 2 == 0)
    x += -(motive_expr::term(symbol::cusp(m + 2)) *
           motive_expr::one_minus_l(l + 2));
  else
    x += motive_expr::term(symbol::cusp(l + 3)) *
         motive_expr::one_minus_l(m + 1);
  return normalize(x);
}

motive_expr codim2_g2(int l, int m) {
  require_g2(l, m);
  motive_expr x = g2_common(l, m);
  if (l % 2 == 0)
    x += motive_expr::lefschetz(l + m + 3) - motive_expr::lefschetz(l + 2);
  else
    x += motive_expr::lefschetz(m + 1) - motive_expr::constant(1);
  return normalize(x);
}

motive_expr kernel_g2(int l, int m) {
  require_g2(l, m);
  if (!(l > m && m > 0))
    throw invalid_argument_error("kernel formula needs regular l > m > 0, got l=" +
                                 std::to_string(l) + " m=" + std::to_string(m));
  motive_expr x = motive_expr::constant(cusp_dim(l - m + 2)) -
                  motive_expr::lefschetz(m + 1, cusp_dim(l + m + 4));
  if (l % 2 == 0)
    x += motive_expr::term(symbol::cusp(m + 2)) + motive_expr::constant(1);
  else
    x -= motive_expr::term(symbol::cusp(l + 3));
  return normalize(x);
}

verification_report consistency_g2(int l, int m) {
  require_g2(l, m);
  const std::string at =
      " at (l,m)=(" + std::to_string(l) + "," + std::to_string(m) + ")";
  verification_report report;
  const motive_expr total = total_g2(l, m);

  const motive_expr sum = rank1(sp_weight({l, m}), true) + codim2_g2(l, m);
  report.record("rank1+codim2=total", "boundary decomposition" + at,
                sum == total ? std::nullopt
                             : std::optional(mismatch(sum, total)));

  if (l > m && m > 0) {
    const motive_expr kernel = kernel_g2(l, m);
    const motive_expr low = -motivic_weight_split(total, l + m + 3).low;
    report.record("kernel=-low(total)", "weight splitting" + at,
                  kernel == low ? std::nullopt
                                : std::optional(mismatch(kernel, low)));
  }

  const motive_expr delta = total_g2_alt(l, m) - total;
  const motive_expr want =
      l % 2 == 0 ? motive_expr() : -motive_expr::one_minus_l(l + m + 3);
  report.record("printed-forms-delta",
                std::string(l % 2 == 0 ? "alt = total" : "alt - total = -(1-L^(l+m+3))") + at,
                delta == want ? std::nullopt
                              : std::optional(mismatch(delta, want)));
  return report;
}

bool check_duality(const motive_expr& x, int weight) {
  return dual(x) * motive_expr::lefschetz(weight) == -normalize(x);
}

} // namespace eiscoh
