#include "becpolar/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "becpolar/orders.hpp"
#include "becpolar/verify.hpp"

namespace becpolar {

namespace {

using Json = nlohmann::ordered_json;

// Six decimals need an error below 5e-7.
Rational report_tolerance() { return Rational(1, 1 << 24); }

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check_size(int m, bool force) {
  if (m < 1 || m > kMaxVariables) {
    throw UsageError("--m must lie in [1, " + std::to_string(kMaxVariables) + "]");
  }
  if (m > kDefaultMaxM && !force) {
    throw UsageError("--m " + std::to_string(m) + " exceeds the default cap of " + std::to_string(kDefaultMaxM) +
                     "; pass --force to override");
  }
}

ChannelTable table_for(int m, bool force) {
  check_size(m, force);
  return synth_all(m, kMaxVariables);
}

Json string_array(const std::vector<BigInt>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(x.get_str());
  return a;
}

int cmd_synth(int m, long u_opt, const std::string& format, bool force, std::ostream& out) {
  check_size(m, force);
  std::vector<Monomial> channels;
  if (u_opt >= 0) {
    if (u_opt >= (1L << m)) throw UsageError("--u must be below 2^m");
    channels.push_back(Monomial::from_int(static_cast<std::uint32_t>(u_opt), m));
  } else {
    channels = all_monomials(m);
  }
  const unsigned n = 1u << m;
  std::vector<IntPoly> polys;
  if (u_opt >= 0) {
    polys.push_back(synth_poly(channels.front()));
  } else {
    polys = synth_all(m, kMaxVariables).polys;
  }

  if (format == "json") {
    Json doc;
    doc["m"] = m;
    doc["channels"] = Json::array();
    for (std::size_t i = 0; i < channels.size(); ++i) {
      std::vector<BigInt> coeffs(n + 1);
      for (unsigned j = 0; j <= n; ++j) coeffs[j] = polys[i].coeff(j);
      Json c;
      c["u"] = channels[i].to_int();
      c["monomial"] = channels[i].to_string();
      c["coefficients"] = string_array(coeffs);
      c["path_counts"] = string_array(to_path_counts(polys[i], n).counts);
      doc["channels"].push_back(std::move(c));
    }
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  out << "u,monomial,i,coefficient,path_count\n";
  for (std::size_t i = 0; i < channels.size(); ++i) {
    const PathCounts pc = to_path_counts(polys[i], n);
    for (unsigned j = 0; j <= n; ++j) {
      out << channels[i].to_int() << ',' << channels[i].to_string() << ',' << j << ',' << polys[i].coeff(j).get_str()
          << ',' << pc.counts[j].get_str() << '\n';
    }
  }
  return kExitOk;
}

int cmd_rank(int m, const std::string& by, std::size_t k, const std::string& format, bool force, std::ostream& out) {
  Criterion criterion;
  try {
    criterion = parse_criterion(by);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const ChannelTable table = table_for(m, force);
  if (k > table.size()) throw UsageError("--k exceeds 2^m");
  const RankedChannels ranked = rank(criterion, table);
  const auto records = report_records(ranked, table, k);

  if (format == "json") {
    Json doc;
    doc["m"] = m;
    doc["criterion"] = describe(criterion);
    doc["records"] = Json::array();
    for (const auto& r : records) {
      Json j;
      j["rank"] = r.rank;
      j["u"] = r.u;
      j["monomial"] = r.monomial;
      j["degree"] = r.degree;
      j["score"] = r.score;
      j["score_decimal"] = r.score_decimal;
      j["avr"] = r.avr;
      j["avr_decimal"] = r.avr_decimal;
      j["threshold"] = r.threshold;
      doc["records"].push_back(std::move(j));
    }
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  out << "rank,u,monomial,degree,score,score_decimal,avr,avr_decimal,threshold\n";
  for (const auto& r : records) {
    out << r.rank << ',' << r.u << ',' << r.monomial << ',' << r.degree << ',' << r.score << ',' << r.score_decimal
        << ',' << r.avr << ',' << r.avr_decimal << ',' << r.threshold << '\n';
  }
  return kExitOk;
}

Relation parse_relation(const std::string& name) {
  if (name == "w") return Relation::weak;
  if (name == "std") return Relation::standard;
  if (name == "dom") return Relation::dominance;
  throw UsageError("--relation must be w, std or dom");
}

int cmd_poset(int m, const std::string& relation, const std::string& path, std::ostream& out) {
  const Relation rel = parse_relation(relation);
  if (m < 1 || m > 7) throw UsageError("poset: --m must lie in [1, 7]");
  const auto edges = hasse_edges(m, rel);
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot open " + path);
  file << "digraph poset {\n  rankdir=BT;\n";
  for (const auto& f : all_monomials(m)) {
    file << "  n" << f.to_int() << " [label=\"" << f.to_string() << " (" << f.to_int() << ")\"];\n";
  }
  for (const auto& e : edges) file << "  n" << e.lower.to_int() << " -> n" << e.upper.to_int() << ";\n";
  file << "}\n";
  out << "nodes " << (1u << m) << " edges " << edges.size() << " relation " << to_string(rel) << '\n';
  return kExitOk;
}

int cmd_verify(int m, const std::string& suite_name, bool force, std::ostream& out) {
  Suite suite;
  try {
    suite = parse_suite(suite_name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  check_size(m, force);
  const VerifyReport report = run_verification(m, suite);
  std::size_t passed = 0, failed = 0, skipped = 0;
  char timing[32];
  for (const auto& c : report.checks) {
    if (c.skipped) {
      ++skipped;
      out << "SKIP " << c.name << ": " << c.detail << '\n';
    } else if (c.passed) {
      ++passed;
      std::snprintf(timing, sizeof timing, "%.2fs", c.seconds);
      out << "PASS " << c.name << " (" << timing << ")\n";
    } else {
      ++failed;
      out << "FAIL " << c.name << ": " << c.detail << '\n';
    }
  }
  out << passed << " passed, " << failed << " failed, " << skipped << " skipped\n";
  return report.all_passed() ? kExitOk : kExitVerificationFailed;
}

int cmd_distribution(int m, bool force, std::ostream& out) {
  const ChannelTable table = table_for(m, force);
  const auto counts = avr_distribution(avr_all(table));
  out << "lower,upper,count\n";
  for (int i = 0; i < 10; ++i) out << "0." << i << ',' << (i == 9 ? "1.0" : "0." + std::to_string(i + 1)) << ',' << counts[i] << '\n';
  return kExitOk;
}

int cmd_avrplot(int m, const std::string& path, bool force, std::ostream& out) {
  const ChannelTable table = table_for(m, force);
  const auto avr = avr_all(table);
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot open " + path);
  file << "u,avr\n";
  for (std::size_t u = 0; u < avr.size(); ++u) file << u << ',' << to_decimal(avr[u], 10) << '\n';
  out << "wrote " << avr.size() << " rows to " << path << '\n';
  return kExitOk;
}

}  // namespace

Criterion parse_criterion(const std::string& text) {
  if (text == "avr") return Average{};
  if (text.rfind("p=", 0) == 0) {
    const Rational p = parse_rational(text.substr(2));
    if (p <= 0 || p >= 1) throw std::invalid_argument("p must lie strictly between 0 and 1");
    return PointwiseAt{p};
  }
  if (text.rfind("beta=", 0) == 0) {
    const Rational beta = parse_rational(text.substr(5));
    if (beta <= 1) throw std::invalid_argument("beta must exceed 1");
    return BetaExpansion{beta};
  }
  throw std::invalid_argument("--by must be avr, p=<rational> or beta=<decimal>");
}

std::vector<ReportRecord> report_records(const RankedChannels& ranked, const ChannelTable& table, std::size_t k) {
  const std::size_t count = k == 0 ? ranked.order.size() : std::min(k, ranked.order.size());
  const bool by_avr = std::holds_alternative<Average>(ranked.criterion);
  std::vector<ReportRecord> out(count);
  const Rational tol = report_tolerance();
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint32_t u = ranked.order[i];
    const Monomial mu = Monomial::from_int(u, table.m);
    const IntPoly& z = table.polys.at(u);
    const Rational avr = by_avr ? ranked.scores[u] : integrate01(z);
    ReportRecord& r = out[i];
    r.m = table.m;
    r.rank = i + 1;
    r.u = u;
    r.monomial = mu.to_string();
    r.degree = mu.degree();
    r.score = to_fraction_string(ranked.scores[u]);
    r.score_decimal = to_decimal(ranked.scores[u], 6);
    r.avr = to_fraction_string(avr);
    r.avr_decimal = to_decimal(avr, 6);
    r.threshold = to_decimal(threshold_estimate(z, tol), 6);
  }
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Bhattacharyya polynomials, orders and constructions for BEC polar codes", "becpolar"};
  app.require_subcommand(1);

  int m = 0;
  bool force = false;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--m", m, "Number of polarization steps")->required();
    sub->add_flag("--force", force, "Allow m above the default cap of 10");
  };

  auto* synth = app.add_subcommand("synth", "Polynomial coefficients and path counts");
  long u = -1;
  std::string format = "csv";
  add_common(synth);
  synth->add_option("--u", u, "Channel index (default: all)");
  synth->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  auto* rank_cmd = app.add_subcommand("rank", "Channels ordered by a reliability criterion");
  std::string by = "avr";
  std::size_t k = 0;
  add_common(rank_cmd);
  rank_cmd->add_option("--by", by, "avr, p=<rational> or beta=<decimal>");
  rank_cmd->add_option("--k", k, "Keep only the k most reliable channels");
  rank_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  auto* poset = app.add_subcommand("poset", "Hasse diagram of an order relation in DOT");
  std::string relation;
  std::string path;
  poset->add_option("--m", m)->required();
  poset->add_option("--relation", relation, "w, std or dom")->required();
  poset->add_option("--dot", path, "Output file")->required();

  auto* verify = app.add_subcommand("verify", "Run the verification suites");
  std::string suite = "all";
  add_common(verify);
  verify->add_option("--suite", suite, "orders, reliability, identities, tables or all");

  auto* distribution = app.add_subcommand("distribution", "Avr bucket counts (CSV)");
  add_common(distribution);

  auto* avrplot = app.add_subcommand("avrplot", "u,Avr pairs (CSV)");
  add_common(avrplot);
  avrplot->add_option("--out", path, "Output file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.front()->help());
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*synth) return cmd_synth(m, u, format, force, out);
    if (*rank_cmd) return cmd_rank(m, by, k, format, force, out);
    if (*poset) return cmd_poset(m, relation, path, out);
    if (*verify) return cmd_verify(m, suite, force, out);
    if (*distribution) return cmd_distribution(m, force, out);
    if (*avrplot) return cmd_avrplot(m, path, force, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace becpolar
