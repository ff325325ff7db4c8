#include "eiscoh/cli.hpp"

#include "eiscoh/eiscalc.hpp"
#include "eiscoh/errors.hpp"
#include "eiscoh/suites.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>

namespace eiscoh {

namespace {

// Input problems the user can fix; reported on stderr with exit code 2.
struct usage_error {
  std::string message;
};

enum class out_format { text, json };

const std::map<std::string, out_format> kFormats = {
    {"text", out_format::text}, {"json", out_format::json}};

int_vector parse_lambda(const std::string& text, int g) {
  int_vector out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    const std::string_view piece(text.data() + start, end - start);
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (piece.empty() || ec != std::errc() ||
        ptr != piece.data() + piece.size())
      throw usage_error{"--lambda: malformed entry '" + std::string(piece) +
                        "' in '" + text + "'"};
    out.push_back(value);
    start = end + 1;
  }
  if (static_cast<int>(out.size()) != g)
    throw usage_error{"--lambda: expected " + std::to_string(g) +
                      " entries for g=" + std::to_string(g) + ", got " +
                      std::to_string(out.size())};
  for (std::size_t i = 0; i < out.size(); ++i)
    if (out[i] < 0 || (i > 0 && out[i - 1] < out[i]))
      throw usage_error{"--lambda: '" + text +
                        "' is not weakly decreasing and nonnegative"};
  return out;
}

void require_g2_flags(int l, int m, bool regular) {
  if (m < 0 || l < m)
    throw usage_error{"-l/-m: need l >= m >= 0, got l=" + std::to_string(l) +
                      " m=" + std::to_string(m)};
  if ((l - m) % 2 != 0)
    throw usage_error{"-l/-m: need l = m (mod 2), got l=" + std::to_string(l) +
                      " m=" + std::to_string(m)};
  if (regular && !(l > m && m > 0))
    throw usage_error{"-l/-m: kernel needs a regular weight l > m > 0, got l=" +
                      std::to_string(l) + " m=" + std::to_string(m)};
}

std::string emit(const motive_expr& x, out_format f) {
  if (f == out_format::json) return to_json(x).dump() + "\n";
  return to_text(x) + "\n";
}

std::string emit_bgg(const sp_weight& lambda, out_format f) {
  const auto terms = bgg_complex(lambda);
  if (f == out_format::json) {
    auto arr = nlohmann::ordered_json::array();
    for (const bgg_term& t : terms) {
      nlohmann::ordered_json j;
      j["w"] = t.w.images();
      j["degree"] = t.degree;
      j["mu"] = t.mu.entries();
      j["filtration"] = t.filtration;
      arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
  }
  std::string out;
  for (const bgg_term& t : terms)
    out += "degree " + std::to_string(t.degree) + "  " + t.w.to_string() +
           "  W" + t.mu.to_string() + "  filtration " +
           std::to_string(t.filtration) + "\n";
  return out;
}

std::string emit_boundary(const sp_weight& lambda, out_format f) {
  const auto terms = boundary_terms(lambda);
  if (f == out_format::json) {
    auto arr = nlohmann::ordered_json::array();
    for (const boundary_term& t : terms) {
      nlohmann::ordered_json j;
      j["w"] = t.source_w.images();
      j["k"] = t.k;
      j["side"] = side_name(t.which);
      j["position"] = t.position;
      j["u"] = t.u.images();
      j["weight"] = t.weight.entries();
      j["sign"] = t.sign;
      j["twist"] = t.twist;
      j["parity_pass"] = t.parity_pass;
      arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
  }
  std::string out;
  for (const boundary_term& t : terms) {
    out += t.source_w.to_string() + " k=" + std::to_string(t.k) + " " +
           side_name(t.which) + " u=" + t.u.to_string() + "  " +
           (t.sign < 0 ? "-" : "+") + "W" + t.weight.to_string();
    if (t.twist != 0) out += "<nu^" + std::to_string(t.twist) + ">";
    out += t.parity_pass ? "  even" : "  odd";
    out += "\n";
  }
  return out;
}

// Admissible weights in ascending lexicographic order.
std::vector<sp_weight> admissible(int g, int lmax) {
  std::vector<sp_weight> out;
  int_vector cur;
  auto rec = [&](auto&& self, int upper) -> void {
    if (static_cast<int>(cur.size()) == g) {
      sp_weight w(cur);
      if (w.total() % 2 == 0) out.push_back(std::move(w));
      return;
    }
    for (int x = 0; x <= upper; ++x) {
      cur.push_back(x);
      self(self, x);
      cur.pop_back();
    }
  };
  rec(rec, lmax);
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

nlohmann::ordered_json table_json(int g, int lmax) {
  nlohmann::ordered_json meta;
  meta["g"] = g;
  meta["lmax"] = lmax;
  meta["engine-version"] = kEngineVersion;
  auto records = nlohmann::ordered_json::array();
  for (const sp_weight& lambda : admissible(g, lmax)) {
    nlohmann::ordered_json r;
    r["lambda"] = lambda.entries();
    r["rank1"] = to_json(rank1(lambda, true));
    if (g == 2) {
      const int l = lambda[0], m = lambda[1];
      r["total"] = to_json(total_g2(l, m));
      r["codim2"] = to_json(codim2_g2(l, m));
      if (lambda.is_regular()) r["kernel"] = to_json(kernel_g2(l, m));
    }
    records.push_back(std::move(r));
  }
  nlohmann::ordered_json out;
  out["metadata"] = std::move(meta);
  out["records"] = std::move(records);
  return out;
}

std::string table_text(int g, int lmax) {
  std::string out = "# g=" + std::to_string(g) + " lmax=" +
                    std::to_string(lmax) + " engine-version=" +
                    kEngineVersion + "\n";
  for (const sp_weight& lambda : admissible(g, lmax)) {
    out += lambda.to_string() + "\trank1: " + to_text(rank1(lambda, true));
    if (g == 2) {
      const int l = lambda[0], m = lambda[1];
      out += "\ttotal: " + to_text(total_g2(l, m));
      out += "\tcodim2: " + to_text(codim2_g2(l, m));
      if (lambda.is_regular()) out += "\tkernel: " + to_text(kernel_g2(l, m));
    }
    out += "\n";
  }
  return out;
}

cli_result run_cli(const std::vector<std::string>& args) {
  CLI::App app{"Eisenstein cohomology of local systems on A_g", "eiscoh"};
  app.require_subcommand(1);

  int g = 1, l = 0, m = 0, form = 1, lmax = 0;
  int max_g = 4, max_entry = 6;
  std::string lambda_text, output, suite = "all";
  bool expand = false;
  out_format format = out_format::text;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "text or json")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  };
  auto add_genus_lambda = [&](CLI::App* sub) {
    sub->add_option("-g", g, "genus")->required()->check(CLI::Range(1, 16));
    sub->add_option("-l,--lambda", lambda_text,
                    "highest weight, comma separated, highest first")
        ->required();
    add_format(sub);
  };
  auto add_lm = [&](CLI::App* sub) {
    sub->add_option("-l", l, "first weight entry")->required();
    sub->add_option("-m", m, "second weight entry")->required();
    add_format(sub);
  };

  auto* c_rank1 = app.add_subcommand("rank1", "rank-one Eisenstein part");
  add_genus_lambda(c_rank1);
  c_rank1->add_flag("--expand", expand, "rewrite Ec(1,.) via cusp motives");

  auto* c_total = app.add_subcommand("total", "genus-two total Eisenstein");
  add_lm(c_total);
  c_total->add_option("--form", form, "printed form 1 or 2")
      ->check(CLI::IsMember({1, 2}));

  auto* c_codim2 = app.add_subcommand("codim2", "genus-two codimension-2 part");
  add_lm(c_codim2);
  auto* c_kernel = app.add_subcommand("kernel", "genus-two kernel part");
  add_lm(c_kernel);

  auto* c_bgg = app.add_subcommand("bgg", "dual BGG complex terms");
  add_genus_lambda(c_bgg);
  auto* c_boundary = app.add_subcommand("boundary", "boundary restriction terms");
  add_genus_lambda(c_boundary);

  auto* c_table = app.add_subcommand("table", "regression table");
  c_table->add_option("-g", g, "genus")->required()->check(CLI::Range(1, 8));
  c_table->add_option("--lmax", lmax, "largest weight entry")
      ->required()
      ->check(CLI::Range(0, kMaxTableEntry));
  c_table->add_option("-o,--output", output, "output file (default stdout)");
  add_format(c_table);

  auto* c_verify = app.add_subcommand("verify", "run invariant suites");
  c_verify->add_option("--suite", suite, "suite name")
      ->check(CLI::IsMember(suite_names()));
  c_verify->add_option("--max-g", max_g, "largest genus")
      ->check(CLI::Range(1, 5));
  c_verify->add_option("--max-entry", max_entry, "largest weight entry")
      ->check(CLI::Range(0, 12));
  add_format(c_verify);

  cli_result res;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    res.out = app.help();
    return res;
  } catch (const CLI::ParseError& e) {
    res.exit_code = 2;
    res.err = std::string("error: ") + e.what() + "\n";
    return res;
  }

  try {
    if (c_rank1->parsed()) {
      res.out = emit(rank1(sp_weight(parse_lambda(lambda_text, g)), expand),
                     format);
    } else if (c_total->parsed()) {
      require_g2_flags(l, m, false);
      res.out = emit(form == 1 ? total_g2(l, m) : total_g2_alt(l, m), format);
    } else if (c_codim2->parsed()) {
      require_g2_flags(l, m, false);
      res.out = emit(codim2_g2(l, m), format);
    } else if (c_kernel->parsed()) {
      require_g2_flags(l, m, true);
      res.out = emit(kernel_g2(l, m), format);
    } else if (c_bgg->parsed()) {
      res.out = emit_bgg(sp_weight(parse_lambda(lambda_text, g)), format);
    } else if (c_boundary->parsed()) {
      res.out = emit_boundary(sp_weight(parse_lambda(lambda_text, g)), format);
    } else if (c_table->parsed()) {
      const std::string body = format == out_format::json
                                   ? table_json(g, lmax).dump(2) + "\n"
                                   : table_text(g, lmax);
      if (output.empty()) {
        res.out = body;
      } else {
        std::ofstream f(output, std::ios::binary | std::ios::trunc);
        if (!(f << body) || !f.flush())
          throw usage_error{"--output: cannot write '" + output + "'"};
      }
    } else if (c_verify->parsed()) {
      const verification_report r = run_suite(suite, {max_g, max_entry});
      res.out = format == out_format::json ? r.to_json().dump(2) + "\n"
                                           : r.to_text();
      if (!r.all_passed()) res.exit_code = 1;
    }
  } catch (const usage_error& e) {
    res.out.clear();
    res.exit_code = 2;
    res.err = "error: " + e.message + "\n";
  } catch (const error& e) {
    res.out.clear();
    res.exit_code = 2;
    res.err = std::string("error: ") + e.what() + "\n";
  }
  return res;
}

} // namespace eiscoh
