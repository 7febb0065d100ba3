#include "monotone/cli.hpp"

#include <algorithm>
#include <ctime>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "monotone/af.hpp"
#include "monotone/clt.hpp"
#include "monotone/errors.hpp"
#include "monotone/matrix_rep.hpp"
#include "monotone/words.hpp"

namespace monotone::cli {
namespace {

using nlohmann::json;

struct Output {
  json payload;
  std::string text;
  std::string dot;  // only bratteli fills this
  bool pass = true;
};

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string join_args(const std::vector<std::string>& args) {
  std::string s;
  for (const auto& a : args) s += (s.empty() ? "" : " ") + a;
  return s;
}

Output from_report(const Report& r) { return {r.to_json(), r.to_text(), {}, r.pass()}; }

std::string kv_text(const json& j) {
  std::ostringstream out;
  for (const auto& [k, v] : j.items()) out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  return out.str();
}

Output cmd_nf(const std::string& word_text, const std::string& strategy) {
  const Word word = parse_word(word_text);
  const auto s = strategy == "rightmost" ? RewriteStrategy::rightmost : RewriteStrategy::leftmost;
  const LinComb nf = normal_form(word, s);
  json payload = to_json(nf);
  payload["input"] = to_string(word);
  return {payload, nf.str() + "\n", {}, true};
}

Output cmd_dim(const IndexWindow& window, const IndexWindow& carrier, bool unital) {
  const AlgebraHandle plain(window, carrier, false);
  const std::size_t non_unital = span_closure(plain).size();
  const std::size_t with_unit = span_closure(AlgebraHandle(window, carrier, true)).size();
  json payload = {{"window", window.str()},
                  {"carrier", carrier.str()},
                  {"unital", unital},
                  {"span_dim", unital ? with_unit : non_unital},
                  {"non_unital_dim", non_unital},
                  {"unital_dim", with_unit},
                  {"unit_discrepancy", non_unital != with_unit},
                  {"commutant_dim", commutant_dim(plain)}};
  return {payload, kv_text(payload), {}, true};
}

Output cmd_basis(const IndexWindow& window) {
  json states = json::array();
  for (const auto& s : enumerate_basis(window)) states.push_back(to_json(s));
  json words = json::array();
  std::ostringstream text;
  text << "fock basis (" << states.size() << "):";
  for (const auto& s : enumerate_basis(window)) text << " " << s.str();
  const auto canonical = enumerate_canonical(window);
  text << "\ncanonical words (" << canonical.size() << "):\n";
  for (const auto& w : canonical) {
    words.push_back(w.str());
    text << "  " << w.str() << "\n";
  }
  json payload = {{"window", window.str()},
                  {"fock_dim", states.size()},
                  {"fock_basis", std::move(states)},
                  {"canonical_count", canonical.size()},
                  {"canonical_words", std::move(words)}};
  return {payload, text.str(), {}, true};
}

Output cmd_bratteli(std::size_t levels, bool computed) {
  const BratteliChain chain = monotone_chain(levels, computed ? ChainMode::computed : ChainMode::formula);
  bool pass = true;
  if (computed) {
    const BratteliChain formula = monotone_chain(levels, ChainMode::formula);
    pass = formula.dims() == chain.dims() && formula.mults() == chain.mults();
  }
  return {chain.to_json(), chain.to_text(), chain.to_dot(), pass};
}

Output cmd_trace(const BratteliChain& chain) {
  const TraceVerdict v = trace_solver(chain);
  std::ostringstream text;
  text << "exists_bounded: " << (v.exists_bounded ? "true" : "false") << "\n"
       << "weight_law: " << v.weight_law << "\n"
       << "reasoning: " << v.reasoning << "\n";
  for (std::size_t n = 0; n < v.unit_values.size(); ++n) {
    text << "level " << n << ": lambda = " << v.weights[n].str() << ", tau(e_n) = " << v.unit_values[n].str()
         << "\n";
  }
  json payload = v.to_json();
  payload["chain"] = chain.to_json();
  return {payload, text.str(), {}, true};
}

Output cmd_k0(std::size_t levels, std::optional<std::uint64_t> rank, std::optional<std::size_t> level,
              const std::string& scale_test) {
  const BratteliChain chain = monotone_chain(levels, ChainMode::formula);
  json payload = k0_limit(chain).to_json();
  std::ostringstream text;
  text << "K_0 = Z[1/2], positive cone Z+[1/2]\n";
  for (std::size_t n = 0; n < chain.size(); ++n) {
    text << "level " << n << ": generator -> " << payload["generator_images"][n]["image"].get<std::string>()
         << ", [e_n] -> " << payload["unit_classes"][n]["class"].get<std::string>() << "\n";
  }
  for (const auto& note : payload["notes"]) text << "note: " << note.get<std::string>() << "\n";
  if (rank && level) {
    const Dyadic c = k0_class(*rank, *level, chain);
    payload["class"] = {{"rank", *rank}, {"level", *level}, {"value", c.str()}};
    text << "class(rank " << *rank << ", level " << *level << ") = " << c.str() << "\n";
  }
  if (!scale_test.empty()) {
    const Dyadic d = Dyadic::parse(scale_test);
    const ScaleWitness w = scale_membership(d, chain);
    payload["scale_test"] = w.to_json();
    payload["scale_test"]["value"] = d.str();
    text << "scale membership of " << d.str() << ": " << (w.member ? "true" : "false");
    if (w.member) text << " (level " << w.level << ", rank " << w.rank << ")";
    text << "\n";
  }
  return {payload, text.str(), {}, true};
}

Output cmd_moments(const std::vector<int>& ns, int max_order) {
  std::vector<int> orders;
  for (int k = 2; k <= max_order; k += 2) orders.push_back(k);
  if (orders.empty()) throw std::invalid_argument("--max-order must be at least 2");
  const MomentTable t = convergence_table(ns, orders);
  return {t.to_json(), t.to_text(), {}, true};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in the monotone C*-algebra", "monotone"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kVersion);

  std::string format = "json";
  std::string output_path;
  bool no_meta = false;
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text", "dot"}));
  app.add_option("-o,--output", output_path, "Write the report to this file");
  app.add_flag("--no-meta", no_meta, "Omit the metadata envelope");

  std::string window_text;
  std::string carrier_text;
  auto add_window = [&](CLI::App* sub, bool with_carrier) {
    sub->add_option("--window", window_text, "Index window LO..HI")->required();
    if (with_carrier) sub->add_option("--carrier", carrier_text, "Carrier window LO..HI (defaults to the window)");
  };

  std::string word_text;
  std::string strategy = "leftmost";
  auto* nf = app.add_subcommand("nf", "Normal form of a word in the Hamel basis");
  nf->add_option("word", word_text, "Word such as \"a*(0) a(0)\"")->required();
  nf->add_option("--strategy", strategy, "Rewriting strategy")->check(CLI::IsMember({"leftmost", "rightmost"}));

  auto* verify = app.add_subcommand("verify", "Check the monotone rules as matrix identities");
  add_window(verify, true);

  bool unital = false;
  auto* dim = app.add_subcommand("dim", "Span-closure and commutant dimensions");
  add_window(dim, true);
  dim->add_flag("--unital", unital, "Report the unital closure as span_dim");

  auto* basis = app.add_subcommand("basis", "Fock basis and canonical words of a window");
  add_window(basis, false);

  std::size_t levels = 0;
  bool computed = false;
  auto* bratteli = app.add_subcommand("bratteli", "Bratteli chain of the monotone algebra");
  bratteli->add_option("--levels", levels, "Number of levels")->required()->check(CLI::PositiveNumber);
  bratteli->add_flag("--computed", computed, "Compute dimensions and multiplicities from matrices");

  std::string chain_file;
  bool use_monotone = false;
  auto* trace = app.add_subcommand("trace", "Trace-compatibility solver");
  auto* chain_opt = trace->add_option("--chain", chain_file, "Chain JSON file");
  auto* monotone_flag = trace->add_flag("--monotone", use_monotone, "Use the monotone chain");
  chain_opt->excludes(monotone_flag);
  trace->add_option("--levels", levels, "Levels of the monotone chain")->check(CLI::PositiveNumber);

  std::optional<std::uint64_t> class_rank;
  std::optional<std::size_t> class_level;
  std::string scale_test;
  auto* k0 = app.add_subcommand("k0", "K_0 of the inductive limit");
  k0->add_option("--levels", levels, "Number of levels")->required()->check(CLI::PositiveNumber);
  auto* rank_opt = k0->add_option("--class-rank", class_rank, "Projection rank");
  auto* level_opt = k0->add_option("--class-level", class_level, "Projection level");
  rank_opt->needs(level_opt);
  level_opt->needs(rank_opt);
  auto* scale_opt = k0->add_option("--scale-test", scale_test, "Dyadic value to test for scale membership");
  scale_opt->excludes(rank_opt);
  scale_opt->excludes(level_opt);

  auto* masa = app.add_subcommand("masa", "Diagonal MASA checks");
  add_window(masa, false);

  std::vector<int> ns;
  int max_order = 0;
  auto* moments = app.add_subcommand("moments", "Vacuum moments of normalized position sums");
  moments->add_option("--n", ns, "Values of N")->required()->delimiter(',');
  moments->add_option("--max-order", max_order, "Largest even order")->required();

  auto* projections = app.add_subcommand("projections", "Monotone family of projections a(i) a*(i)");
  add_window(projections, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help;
    const int code = app.exit(e, help, err);
    out << help.str();
    return code == 0 ? ok : usage_error;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    const std::string command = sub->get_name();
    if (format == "dot" && command != "bratteli") throw CLI::ValidationError("--format dot is only valid for bratteli");

    auto window = [&] { return IndexWindow::parse(window_text); };
    auto carrier = [&] { return carrier_text.empty() ? window() : IndexWindow::parse(carrier_text); };

    Output result;
    if (command == "nf") {
      result = cmd_nf(word_text, strategy);
    } else if (command == "verify") {
      result = from_report(verify_monotone_rules(window(), carrier()));
    } else if (command == "dim") {
      result = cmd_dim(window(), carrier(), unital);
    } else if (command == "basis") {
      result = cmd_basis(window());
    } else if (command == "bratteli") {
      result = cmd_bratteli(levels, computed);
    } else if (command == "trace") {
      if (use_monotone) {
        if (levels == 0) throw CLI::ValidationError("--monotone requires --levels");
        result = cmd_trace(monotone_chain(levels, ChainMode::formula));
      } else if (!chain_file.empty()) {
        std::ifstream in(chain_file);
        if (!in) throw CLI::ValidationError("cannot open chain file " + chain_file);
        result = cmd_trace(BratteliChain::from_json(json::parse(in)));
      } else {
        throw CLI::ValidationError("trace needs --chain FILE or --monotone --levels K");
      }
    } else if (command == "k0") {
      result = cmd_k0(levels, class_rank, class_level, scale_test);
    } else if (command == "masa") {
      result = from_report(masa_check(window()));
    } else if (command == "moments") {
      result = cmd_moments(ns, max_order);
    } else if (command == "projections") {
      result = from_report(projection_monotonicity(window()));
    }

    std::string rendered;
    if (format == "json") {
      json doc = result.payload;
      if (!no_meta) {
        doc = {{"meta",
                {{"tool", "monotone"}, {"version", kVersion}, {"command", join_args(args)}, {"timestamp", utc_timestamp()}}},
               {"result", std::move(doc)}};
      }
      rendered = doc.dump(2) + "\n";
    } else if (format == "dot") {
      rendered = (no_meta ? "" : "// monotone " + std::string(kVersion) + " " + utc_timestamp() + "\n") + result.dot;
    } else {
      rendered = (no_meta ? "" : "# monotone " + std::string(kVersion) + " " + utc_timestamp() + "\n") + result.text;
    }

    if (output_path.empty()) {
      out << rendered;
    } else {
      std::ofstream file(output_path);
      if (!file) throw CLI::ValidationError("cannot write " + output_path);
      file << rendered;
    }
    return result.pass ? ok : verification_failed;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return budget_exceeded;
  } catch (const json::exception& e) {
    err << "error: malformed JSON: " << e.what() << "\n";
    return usage_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  }
}

}  // namespace monotone::cli
