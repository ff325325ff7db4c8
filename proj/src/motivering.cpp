#include "eiscoh/motivering.hpp"

#include "eiscoh/errors.hpp"

#include <array>
#include <optional>

namespace eiscoh {

namespace {

constexpr std::array<rewrite_rule, 5> kAllRules = {
    rewrite_rule::euler_base, rewrite_rule::euler_odd,
    rewrite_rule::euler_genus_one, rewrite_rule::cusp_two,
    rewrite_rule::cusp_empty};

constexpr std::array<rewrite_rule, 4> kSymbolicRules = {
    rewrite_rule::euler_base, rewrite_rule::euler_odd, rewrite_rule::cusp_two,
    rewrite_rule::cusp_empty};

std::optional<motive_expr> apply_rule(rewrite_rule r, const symbol& s) {
  switch (r) {
  case rewrite_rule::euler_base:
    if (s.type() == symbol::kind::euler && s.genus() == 0)
      return motive_expr::constant(1);
    break;
  case rewrite_rule::euler_odd:
    if (s.type() == symbol::kind::euler && s.lambda().total() % 2 != 0)
      return motive_expr();
    break;
  case rewrite_rule::euler_genus_one:
    if (s.type() == symbol::kind::euler && s.genus() == 1 &&
        s.lambda()[0] % 2 == 0)
      return -motive_expr::term(symbol::cusp(s.lambda()[0] + 2)) -
             motive_expr::constant(1);
    break;
  case rewrite_rule::cusp_two:
    if (s.type() == symbol::kind::cusp && s.weight_index() == 2)
      return -motive_expr::lefschetz(1) - motive_expr::constant(1);
    break;
  case rewrite_rule::cusp_empty:
    if (s.type() == symbol::kind::cusp && s.weight_index() > 2 &&
        cusp_dim(s.weight_index()) == 0)
      return motive_expr();
    break;
  }
  return std::nullopt;
}

std::string join_ints(std::span<const int> v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

} // namespace

symbol symbol::cusp(int k) {
  if (k < 2 || k % 2 != 0)
    throw invalid_argument_error("S[k] needs even k >= 2, got " +
                                 std::to_string(k));
  return symbol(kind::cusp, k, sp_weight({}));
}

symbol symbol::euler(const sp_weight& lambda) {
  return symbol(kind::euler, 0, lambda);
}

std::string symbol::to_string() const {
  switch (kind_) {
  case kind::one:
    return "1";
  case kind::cusp:
    return "S[" + std::to_string(k_) + "]";
  case kind::euler:
    return "Ec(" + std::to_string(genus()) + ";" +
           join_ints(lambda_.entries()) + ")";
  }
  return {};
}

std::strong_ordering operator<=>(const symbol& a, const symbol& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  if (auto c = a.k_ <=> b.k_; c != 0) return c;
  if (auto c = a.genus() <=> b.genus(); c != 0) return c;
  return a.lambda_.entries() <=> b.lambda_.entries();
}

motive_expr motive_expr::constant(coeff_t c) {
  return term(symbol::one(), c, 0);
}

motive_expr motive_expr::lefschetz(int a, coeff_t c) {
  return term(symbol::one(), c, a);
}

motive_expr motive_expr::term(const symbol& s, coeff_t c, int a) {
  motive_expr x;
  x.add(s, a, c);
  return x;
}

motive_expr motive_expr::one_minus_l(int a) {
  return constant(1) - lefschetz(a);
}

coeff_t motive_expr::coefficient(const symbol& s, int a) const {
  auto it = terms_.find({s, a});
  return it == terms_.end() ? 0 : it->second;
}

bool motive_expr::is_l_polynomial() const {
  for (const auto& [k, c] : terms_)
    if (!k.first.is_one()) return false;
  return true;
}

bool motive_expr::has_euler(int min_genus) const {
  for (const auto& [k, c] : terms_)
    if (k.first.type() == symbol::kind::euler && k.first.genus() >= min_genus)
      return true;
  return false;
}

void motive_expr::add(const symbol& s, int a, coeff_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({s, a}, c);
  if (!inserted && (it->second += c) == 0) terms_.erase(it);
}

motive_expr& motive_expr::operator+=(const motive_expr& o) {
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
  return *this;
}

motive_expr& motive_expr::operator-=(const motive_expr& o) {
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, -c);
  return *this;
}

motive_expr motive_expr::operator-() const { return -1 * *this; }

motive_expr operator*(coeff_t s, const motive_expr& x) {
  motive_expr out;
  if (s == 0) return out;
  for (const auto& [k, c] : x.terms_) out.terms_.emplace(k, s * c);
  return out;
}

motive_expr operator*(const motive_expr& x, const motive_expr& y) {
  if (!x.is_l_polynomial() && !y.is_l_polynomial())
    throw unsupported_product_error("cannot multiply " + to_text(x) +
                                    " by " + to_text(y));
  motive_expr out;
  for (const auto& [kx, cx] : x.terms_) {
    for (const auto& [ky, cy] : y.terms_) {
      const symbol& s = kx.first.is_one() ? ky.first : kx.first;
      out.add(s, kx.second + ky.second, cx * cy);
    }
  }
  return out;
}

int cusp_dim(int k) {
  if (k == 2) return -1;
  if (k < 2 || k % 2 != 0) return 0;
  return k % 12 == 2 ? k / 12 - 1 : k / 12;
}

std::span<const rewrite_rule> all_rewrite_rules() { return kAllRules; }

motive_expr normalize(const motive_expr& x,
                      std::span<const rewrite_rule> rules) {
  motive_expr cur = x;
  for (bool changed = true; changed;) {
    changed = false;
    motive_expr next;
    for (const auto& [k, c] : cur.terms()) {
      const auto& [s, a] = k;
      std::optional<motive_expr> rewritten;
      for (rewrite_rule r : rules)
        if ((rewritten = apply_rule(r, s))) break;
      if (rewritten) {
        next += c * (motive_expr::lefschetz(a) * *rewritten);
        changed = true;
      } else {
        next.add(s, a, c);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

motive_expr normalize(const motive_expr& x) { return normalize(x, kAllRules); }

motive_expr normalize_symbolic(const motive_expr& x) {
  return normalize(x, kSymbolicRules);
}

motive_expr dual(const motive_expr& x) {
  const motive_expr y = normalize(x);
  motive_expr out;
  for (const auto& [k, c] : y.terms()) {
    const auto& [s, a] = k;
    switch (s.type()) {
    case symbol::kind::one:
      out.add(s, -a, c);
      break;
    case symbol::kind::cusp:
      out.add(s, 1 - s.weight_index() - a, c);
      break;
    case symbol::kind::euler:
      throw not_expandable_error("cannot dualize symbolic " + s.to_string());
    }
  }
  return out;
}

int motivic_weight(const symbol& s, int lexp) {
  switch (s.type()) {
  case symbol::kind::one:
    return 2 * lexp;
  case symbol::kind::cusp:
    return 2 * lexp + s.weight_index() - 1;
  case symbol::kind::euler:
    break;
  }
  throw invalid_argument_error("no motivic weight for symbolic " +
                               s.to_string());
}

weight_split motivic_weight_split(const motive_expr& x, int threshold) {
  weight_split out;
  for (const auto& [k, c] : x.terms()) {
    const auto& [s, a] = k;
    const int w = motivic_weight(s, a);
    if (w == threshold)
      throw ambiguous_split_error(
          "term " + to_text(motive_expr::term(s, c, a)) + " has weight " +
          std::to_string(w) + " equal to the threshold");
    (w < threshold ? out.low : out.high).add(s, a, c);
  }
  return out;
}

std::string to_text(const motive_expr& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : x.terms()) {
    const auto& [s, a] = k;
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    first = false;
    const coeff_t mag = c < 0 ? -c : c;
    std::string body;
    auto append = [&](const std::string& f) {
      if (!body.empty()) body += '*';
      body += f;
    };
    if (mag != 1) append(std::to_string(mag));
    if (!s.is_one()) append(s.to_string());
    if (a == 1)
      append("L");
    else if (a != 0)
      append("L^" + std::to_string(a));
    if (body.empty()) body = "1";
    out += body;
  }
  return out;
}

nlohmann::ordered_json to_json(const motive_expr& x) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [k, c] : x.terms()) {
    const auto& [s, a] = k;
    nlohmann::ordered_json sym;
    switch (s.type()) {
    case symbol::kind::one:
      sym["type"] = "one";
      break;
    case symbol::kind::cusp:
      sym["type"] = "S";
      sym["k"] = s.weight_index();
      break;
    case symbol::kind::euler:
      sym["type"] = "Ec";
      sym["g"] = s.genus();
      sym["lambda"] = s.lambda().entries();
      break;
    }
    nlohmann::ordered_json t;
    t["coeff"] = c;
    t["Lexp"] = a;
    t["symbol"] = std::move(sym);
    arr.push_back(std::move(t));
  }
  return arr;
}

motive_expr motive_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_array())
    throw invalid_argument_error("motive JSON must be an array of terms");
  motive_expr out;
  try {
    for (const auto& t : j) {
      const auto& sym = t.at("symbol");
      const auto type = sym.at("type").get<std::string>();
      const auto c = t.at("coeff").get<coeff_t>();
      const auto a = t.at("Lexp").get<int>();
      if (type == "one") {
        out.add(symbol::one(), a, c);
      } else if (type == "S") {
        out.add(symbol::cusp(sym.at("k").get<int>()), a, c);
      } else if (type == "Ec") {
        sp_weight lambda(sym.at("lambda").get<int_vector>());
        if (lambda.genus() != sym.at("g").get<int>())
          throw invalid_argument_error("Ec genus does not match lambda");
        out.add(symbol::euler(lambda), a, c);
      } else {
        throw invalid_argument_error("unknown symbol type '" + type + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw invalid_argument_error(std::string("malformed motive JSON: ") +
                                 e.what());
  }
  return out;
}

} // namespace eiscoh
