// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include "eiscoh/cli.hpp"
#include "eiscoh/eiscalc.hpp"
#include "eiscoh/errors.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <set>

using namespace eiscoh;

namespace {

using M = motive_expr;
using failure = std::optional<std::string>;

M L(int a, coeff_t c = 1) { return M::lefschetz(a, c); }

template <class F>
void for_grid(int bound, F&& f) {
  for (int l = 0; l <= bound; ++l)
    for (int m = l % 2; m <= l; m += 2) f(l, m);
}

std::string lm(int l, int m) {
  return "(l,m)=(" + std::to_string(l) + "," + std::to_string(m) + ")";
}

failure genus_one_closed_form() {
  for (int k = 0; k <= 40; k += 2) {
    const M got = rank1(sp_weight({k}), true);
    if (got != M::constant(1) - L(k + 1))
      return "k=" + std::to_string(k) + ": " + to_text(got);
  }
  return std::nullopt;
}

// Rows of the g = 3 table, w(lambda+rho)-rho in terms of (l,m,n).
struct g3_row {
  const char* name;
  int length;
  std::function<int_vector(int, int, int)> value;
};

failure genus_three_table() {
  const g3_row rows[] = {
      {"[123]", 0, [](int l, int m, int n) { return int_vector{l, m, n}; }},
      {"[124]", 1, [](int l, int m, int n) { return int_vector{l, m, -n - 2}; }},
      {"[135]", 2, [](int l, int m, int n) { return int_vector{l, n - 1, -m - 3}; }},
      {"[236]", 3, [](int l, int m, int n) { return int_vector{m - 1, n - 1, -l - 4}; }},
      {"[145]", 3, [](int l, int m, int n) { return int_vector{l, -n - 3, -m - 3}; }},
      {"[246]", 4, [](int l, int m, int n) { return int_vector{m - 1, -n - 3, -l - 4}; }},
      {"[356]", 5, [](int l, int m, int n) { return int_vector{n - 2, -m - 4, -l - 4}; }},
      {"[456]", 6, [](int l, int m, int n) { return int_vector{-n - 4, -m - 4, -l - 4}; }},
  };
  const auto fin = enumerate_final(3);
  if (fin.size() != 8) return "enumerate_final(3) has " + std::to_string(fin.size()) + " elements";
  std::set<std::string> names;
  for (const auto& w : fin) names.insert(w.to_string());
  const int lambdas[5][3] = {{0, 0, 0}, {3, 1, 0}, {5, 3, 1}, {7, 7, 2}, {10, 4, 4}};
  for (const g3_row& row : rows) {
    if (!names.count(row.name)) return std::string(row.name) + " not enumerated";
    const weyl_element* w = nullptr;
    for (const auto& x : fin)
      if (x.to_string() == row.name) w = &x;
    if (length(*w) != row.length)
      return std::string(row.name) + ": length " + std::to_string(length(*w));
    for (const auto& lam : lambdas) {
      const int_vector v(lam, lam + 3);
      if (dot_action(*w, v) != row.value(lam[0], lam[1], lam[2]))
        return std::string(row.name) + " at lambda=" + sp_weight(v).to_string();
    }
  }
  return std::nullopt;
}

failure telescope_oracle() {
  const auto start = std::chrono::steady_clock::now();
  std::size_t cases = 0;
  for (int g = 1; g <= 3; ++g) {
    int_vector cur;
    failure bad;
    auto rec = [&](auto&& self, int upper) -> void {
      if (bad) return;
      if (static_cast<int>(cur.size()) == g) {
        ++cases;
        const gl_weight a(cur);
        if (telescope_closed(a) != telescope_bruteforce(a))
          bad = "a=" + a.to_string();
        return;
      }
      for (int x = upper; x >= -3; --x) {
        cur.push_back(x);
        self(self, x);
        cur.pop_back();
      }
    };
    rec(rec, 3);
    if (bad) return bad;
  }
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> dist(-6, 6);
  for (int i = 0; i < 500; ++i) {
    int_vector v(4 + i % 2);
    for (int& x : v) x = dist(rng);
    std::sort(v.begin(), v.end(), std::greater<>());
    const gl_weight a(v);
    ++cases;
    if (telescope_closed(a) != telescope_bruteforce(a)) return "a=" + a.to_string();
  }
  const double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  if (secs >= 60) return "took " + std::to_string(secs) + " s";
  std::printf("  (%zu inputs in %.2f s)\n", cases, secs);
  return std::nullopt;
}

failure partition_identity() {
  for (int g = 2; g <= 4; ++g) {
    int_vector cur;
    failure bad;
    auto rec = [&](auto&& self, int upper) -> void {
      if (bad) return;
      if (static_cast<int>(cur.size()) == g) {
        const verification_report r = verify_partition(sp_weight(cur));
        const char* needed[] = {"dichotomy", "weight-identity", "sign-constancy",
                                "sign-values", "parity-routes"};
        for (const char* n : needed) {
          bool seen = false;
          for (const auto& c : r.checks()) seen = seen || c.name == n;
          if (!seen) bad = std::string("missing check ") + n;
        }
        if (const check_result* f = r.first_failure())
          bad = f->name + ": " + *f->counterexample;
        return;
      }
      for (int x = upper; x >= 0; --x) {
        cur.push_back(x);
        self(self, x);
        cur.pop_back();
      }
    };
    rec(rec, 4);
    if (bad) return bad;
  }
  return std::nullopt;
}

failure genus_two_ground_truth() {
  const M total = total_g2(0, 0);
  const M want = M::constant(1) + L(1) - L(2) - L(3);
  if (total != want) return "total(0,0) = " + to_text(total);
  const M sum = rank1(sp_weight({0, 0}), true) + codim2_g2(0, 0);
  if (sum != total) return "rank1 + codim2 at (0,0) = " + to_text(sum);
  const M low = motivic_weight_split(total, 3).low;
  if (low != M::constant(1) + L(1)) return "low part at weight 3 = " + to_text(low);
  return std::nullopt;
}

failure consistency_grid() {
  failure bad;
  for_grid(20, [&](int l, int m) {
    if (bad) return;
    const M total = total_g2(l, m);
    if (rank1(sp_weight({l, m}), true) + codim2_g2(l, m) != total)
      bad = "rank1 + codim2 != total at " + lm(l, m);
    else if (l > m && m > 0 &&
             kernel_g2(l, m) != -motivic_weight_split(total, l + m + 3).low)
      bad = "kernel != -low(total) at " + lm(l, m);
  });
  return bad;
}

failure printed_forms_delta() {
  failure bad;
  for_grid(20, [&](int l, int m) {
    if (bad) return;
    const M delta = total_g2_alt(l, m) - total_g2(l, m);
    const M want = l % 2 == 0 ? M() : -M::one_minus_l(l + m + 3);
    if (delta != want) bad = lm(l, m) + ": delta = " + to_text(delta);
  });
  return bad;
}

failure duality() {
  for (int k = 0; k <= 40; k += 2)
    if (!check_duality(rank1(sp_weight({k}), true), k + 1))
      return "genus one, k=" + std::to_string(k);
  failure bad;
  for_grid(20, [&](int l, int m) {
    if (!bad && !check_duality(total_g2(l, m), l + m + 3)) bad = "total at " + lm(l, m);
  });
  return bad;
}

failure cusp_dimensions() {
  // Classical dimensions of S_k(SL(2,Z)), k = 2, 4, ..., 48, with s_2 = -1.
  const int table[] = {-1, 0, 0, 0, 0, 1, 0, 1, 1, 1, 1, 2,
                       1, 2, 2, 2, 2, 3, 2, 3, 3, 3, 3, 4};
  for (int i = 0; i < 24; ++i) {
    const int k = 2 * i + 2;
    if (cusp_dim(k) != table[i])
      return "s_" + std::to_string(k) + " = " + std::to_string(cusp_dim(k));
  }
  return std::nullopt;
}

failure filtration_exponents() {
  failure bad;
  for_grid(20, [&](int l, int m) {
    if (bad) return;
    std::multiset<int> got;
    for (const bgg_term& t : bgg_complex(sp_weight({l, m}))) got.insert(t.filtration);
    if (got != std::multiset<int>{0, m + 1, l + 2, l + m + 3}) bad = lm(l, m);
  });
  return bad;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

failure determinism() {
  const std::filesystem::path a = "acceptance_table_1.json";
  const std::filesystem::path b = "acceptance_table_2.json";
  for (const auto& p : {a, b}) {
    const cli_result r = run_cli({"table", "-g", "2", "--lmax", "12",
                                  "--format", "json", "-o", p.string()});
    if (r.exit_code != 0) return "table run failed: " + r.err;
  }
  const std::string first = slurp(a), second = slurp(b);
  std::filesystem::remove(a);
  std::filesystem::remove(b);
  if (first.empty() || first != second) return "table files differ";
  const auto j = nlohmann::ordered_json::parse(first);
  for (const auto& rec : j["records"]) {
    const int l = rec["lambda"][0], m = rec["lambda"][1];
    if (motive_from_json(rec["rank1"]) != rank1(sp_weight({l, m}), true) ||
        motive_from_json(rec["total"]) != total_g2(l, m) ||
        motive_from_json(rec["codim2"]) != codim2_g2(l, m) ||
        (rec.contains("kernel") && motive_from_json(rec["kernel"]) != kernel_g2(l, m)))
      return "record at " + lm(l, m) + " does not round-trip";
  }
  if (j["records"].size() != 49) return std::to_string(j["records"].size()) + " records";
  return std::nullopt;
}

} // namespace

int main() {
  struct criterion {
    const char* name;
    failure (*run)();
  };
  const criterion all[] = {
      {"genus-one closed form rank1(1,(k)) = 1 - L^(k+1), even k <= 40", genus_one_closed_form},
      {"genus-three Weyl table at 5 weights", genus_three_table},
      {"telescope closed form = brute force (exhaustive g <= 3, 500 random g = 4,5)", telescope_oracle},
      {"partition identity for g in {2,3,4}, entries <= 4", partition_identity},
      {"genus-two ground truth total(0,0) and low part 1 + L", genus_two_ground_truth},
      {"genus-two consistency grid l,m <= 20", consistency_grid},
      {"printed-forms delta on the grid", printed_forms_delta},
      {"anti-self-duality (genus one and genus-two grid)", duality},
      {"cusp form dimensions", cusp_dimensions},
      {"genus-two filtration exponents", filtration_exponents},
      {"deterministic table output and JSON round trip", determinism},
  };
  int failed = 0, index = 0;
  for (const criterion& c : all) {
    ++index;
    failure f;
    try {
      f = c.run();
    } catch (const std::exception& e) {
      f = std::string("exception: ") + e.what();
    }
    std::printf("%s %2d %s\n", f ? "FAIL" : "PASS", index, c.name);
    if (f) {
      std::printf("        %s\n", f->c_str());
      ++failed;
    }
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
