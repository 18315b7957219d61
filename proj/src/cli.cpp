#include "threedist/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "threedist/errors.hpp"
#include "threedist/farey.hpp"
#include "threedist/json_io.hpp"
#include "threedist/oracle.hpp"
#include "threedist/render.hpp"
#include "threedist/temperament.hpp"
#include "threedist/three_distance.hpp"
#include "threedist/three_gap.hpp"

namespace threedist::cli {

namespace {

using json::Json;

struct Config {
  std::string format = "json";
  int precision_bits = kDefaultPrecisionBits;
  std::int64_t scan_cap = kDefaultScanCap;

  std::string alpha;
  std::string beta;
  std::int64_t n = 0;
  std::int64_t census = 0;
  std::int64_t big_n = 0;
  std::string neighbors;
  std::int64_t farey_cap = kDefaultFareyCap;
  std::string generator = "log2_3_frac";
  std::vector<std::int64_t> counts = {2, 3, 5, 7, 12, 17};
  std::int64_t two_length_max = 0;
  std::string svg_path;
  bool farey_verticals = false;
  std::int64_t width = 0;
  std::int64_t height = 0;
  std::string output;
};

bool text_mode(const Config& config) { return config.format == "text"; }

std::string show(const Rational& value) {
  return value.to_fixed(6) + "  (" + value.to_string() + ")";
}

void emit(std::ostream& out, const Json& payload) { out << payload.dump(2) << '\n'; }

void write_svg(const Config& config, const std::string& svg, std::ostream& out) {
  if (config.output.empty()) {
    out << svg;
    return;
  }
  std::ofstream file(config.output, std::ios::binary);
  if (!file) throw InvalidArgument("cannot open '" + config.output + "' for writing");
  file << svg;
}

void text_partition(std::ostream& out, const DistancePartition& partition) {
  if (const auto* uniform = std::get_if<UniformPartition>(&partition)) {
    out << "alpha = " << uniform->alpha.to_string() << " is in F_" << uniform->n << "\n"
        << uniform->q() << " intervals of length " << show(uniform->length()) << "\n";
    return;
  }
  const auto& g = std::get<GeneralPartition>(partition);
  const auto& p = g.pair();
  out << "alpha = " << g.alpha().approx().to_fixed(12) << " (" << g.alpha().describe() << ")\n"
      << "n = " << g.n() << ", Farey pair " << p.a() << "/" << p.b() << " < alpha < " << p.c()
      << "/" << p.d() << "\n"
      << "  " << g.count_s() << " x s   = " << show(g.s()) << "\n"
      << "  " << g.count_t() << " x t   = " << show(g.t()) << "\n";
  if (g.count_st() > 0) out << "  " << g.count_st() << " x s+t = " << show(g.st()) << "\n";
}

int cmd_decompose(const Config& config, std::ostream& out) {
  const RealValue alpha = real_value(config.alpha, config.precision_bits);
  const DistancePartition partition = decompose(alpha, config.n);
  if (text_mode(config)) {
    text_partition(out, partition);
  } else {
    emit(out, json::partition(partition));
  }
  return kOk;
}

int cmd_gaps(const Config& config, std::ostream& out) {
  const RealValue alpha = real_value(config.alpha, config.precision_bits);
  const Rational beta = parse_unit_ratio(config.beta);
  const GapStructure structure = gap_structure(alpha, beta, config.scan_cap);
  std::map<std::int64_t, Rational> census;
  if (config.census > 0) census = empirical_frequencies(alpha, beta, config.census);
  if (text_mode(config)) {
    out << (std::holds_alternative<WideGaps>(structure) ? "wide" : "narrow")
        << " case, beta = " << show(beta) << "\n";
    for (const auto& [gap, freq] : gap_frequencies(structure)) {
      out << "  gap " << gap << ": frequency " << show(freq) << "\n";
    }
    if (config.census > 0) {
      out << "empirical over " << config.census << " indices:\n";
      for (const auto& [gap, freq] : census) out << "  gap " << gap << ": " << freq.to_fixed(6) << "\n";
    }
    return kOk;
  }
  Json payload = json::gap_structure(structure);
  if (config.census > 0) {
    payload["census"] = {{"N", config.census}, {"freqs", json::frequencies(census)}};
  }
  emit(out, payload);
  return kOk;
}

int cmd_farey(const Config& config, std::ostream& out) {
  if (!config.neighbors.empty()) {
    const RealValue alpha = real_value(config.neighbors, config.precision_bits);
    const FareyLocation location = farey_neighbors(alpha, config.n);
    Json payload;
    if (const auto* member = std::get_if<ExactMember>(&location)) {
      payload = {{"exact_member", json::rational(member->value)}, {"n", config.n}};
      if (text_mode(config)) out << member->value.to_string() << " is in F_" << config.n << "\n";
    } else {
      const auto& pair = std::get<FareyPair>(location);
      payload = {{"pair", json::farey_pair(pair)}, {"n", config.n}};
      if (text_mode(config)) {
        out << pair.a() << "/" << pair.b() << " < alpha < " << pair.c() << "/" << pair.d() << "\n";
      }
    }
    if (!text_mode(config)) emit(out, payload);
    return kOk;
  }
  const auto sequence = farey_sequence(config.n, config.farey_cap);
  if (text_mode(config)) {
    for (std::size_t k = 0; k < sequence.size(); ++k) {
      out << (k ? " " : "") << sequence[k].num() << "/" << sequence[k].den();
    }
    out << "\n";
    return kOk;
  }
  Json list = Json::array();
  for (const auto& value : sequence) list.push_back(json::rational(value));
  emit(out, Json{{"n", config.n}, {"length", sequence.size()}, {"sequence", std::move(list)}});
  return kOk;
}

int cmd_temperament(const Config& config, std::ostream& out) {
  const RealValue generator = real_value(config.generator, config.precision_bits);
  const TemperamentReport report = temperament_report(generator, config.counts);
  if (!config.svg_path.empty()) {
    Config svg_config = config;
    svg_config.output = config.svg_path;
    write_svg(svg_config, render_temperament_ladder(report), out);
  }
  std::vector<std::int64_t> orders;
  if (config.two_length_max > 0) orders = two_length_orders(generator, config.two_length_max);
  if (text_mode(config)) {
    for (const auto& row : report.rows) {
      out << row.notes << " notes" << (row.two_length ? " (two lengths)" : "") << ":";
      for (const auto& [length, count] : row.lengths.entries()) {
        out << "  " << length.to_fixed(3) << " x" << count;
      }
      out << "\n    ranks:";
      for (auto rank : row.ranks_in_position_order) out << ' ' << rank;
      out << "\n";
    }
    if (config.two_length_max > 0) {
      out << "two-length note counts up to " << config.two_length_max + 1 << ":";
      for (auto n : orders) out << ' ' << n + 1;
      out << "\n";
    }
    return kOk;
  }
  Json payload = json::temperament(report);
  if (config.two_length_max > 0) {
    Json notes = Json::array();
    for (auto n : orders) notes.push_back(n + 1);
    payload["two_length_note_counts"] = std::move(notes);
  }
  emit(out, payload);
  return kOk;
}

int cmd_plot_un(const Config& config, std::ostream& out) {
  auto spec = UnMapSpec::make(config.n, config.farey_verticals, config.width ? config.width : 480,
                              config.height ? config.height : 480);
  write_svg(config, render_un_map(spec), out);
  return kOk;
}

int cmd_plot_strip(const Config& config, std::ostream& out) {
  const RealValue alpha = real_value(config.alpha, config.precision_bits);
  write_svg(config, render_partition_strip(alpha, config.n, config.width ? config.width : 800),
            out);
  return kOk;
}

int verify_distance(const Config& config, const RealValue& alpha, std::ostream& out) {
  const Rational exact = oracle::exact_proxy(alpha, config.n);
  const RealValue exact_alpha = RealValue::exact(exact);
  const DistancePartition engine = decompose(exact_alpha, config.n);
  const LengthCensus engine_census = length_census(engine);
  const LengthCensus oracle_census = oracle::brute_lengths(exact, config.n);
  bool pair_matches = true;
  if (!alpha.is_exact()) {
    const auto original = decompose(alpha, config.n);
    const auto* g1 = std::get_if<GeneralPartition>(&original);
    const auto* g2 = std::get_if<GeneralPartition>(&engine);
    pair_matches = g1 && g2 && g1->pair() == g2->pair();
  }
  const bool equal = engine_census == oracle_census && pair_matches;
  if (text_mode(config)) {
    out << "decompose vs sort-and-diff for alpha = " << exact.to_string() << ", n = " << config.n
        << ": " << (equal ? "EQUAL" : "MISMATCH") << "\n";
  } else {
    emit(out, Json{{"mode", "distance"},
                   {"alpha", json::real_value(alpha)},
                   {"exact_alpha", json::rational(exact)},
                   {"n", config.n},
                   {"engine", json::census(engine_census)},
                   {"oracle", json::census(oracle_census)},
                   {"pair_matches_input", pair_matches},
                   {"equal", equal}});
  }
  return equal ? kOk : kMismatch;
}

int verify_gaps(const Config& config, const RealValue& alpha, std::ostream& out) {
  if (config.big_n < 1) throw InvalidArgument("--N must be positive");
  const Rational beta = parse_unit_ratio(config.beta);
  const Rational exact = oracle::exact_proxy(alpha, std::max(config.big_n, config.scan_cap));
  const RealValue exact_alpha = RealValue::exact(exact);
  const GapStructure structure = gap_structure(exact_alpha, beta, config.scan_cap);
  const auto engine_hits = hits(exact_alpha, beta, config.big_n - 1);
  const auto brute = oracle::brute_gaps(exact, beta, config.big_n);
  const auto predicted = gap_set(structure);

  bool hits_equal = engine_hits == brute.hits;
  bool subset = true;
  for (const auto& [gap, count] : brute.counts) subset = subset && predicted.count(gap) > 0;
  std::int64_t misclassified = 0;
  for (std::size_t k = 0; k + 1 < brute.hits.size(); ++k) {
    const Rational position = (Rational(brute.hits[k]) * exact).frac();
    if (gap_after(structure, position) != brute.hits[k + 1] - brute.hits[k]) ++misclassified;
  }
  const bool equal = hits_equal && subset && misclassified == 0;
  if (text_mode(config)) {
    out << "gap structure vs hit enumeration for alpha = " << exact.to_string()
        << ", beta = " << beta.to_string() << ", N = " << config.big_n << ": "
        << (equal ? "EQUAL" : "MISMATCH") << "\n";
  } else {
    Json realized = Json::object();
    for (const auto& [gap, count] : brute.counts) realized[std::to_string(gap)] = count;
    emit(out, Json{{"mode", "gaps"},
                   {"alpha", json::real_value(alpha)},
                   {"exact_alpha", json::rational(exact)},
                   {"beta", json::rational(beta)},
                   {"N", config.big_n},
                   {"structure", json::gap_structure(structure)},
                   {"realized_gap_counts", std::move(realized)},
                   {"hits_equal", hits_equal},
                   {"realized_subset_of_predicted", subset},
                   {"misclassified", misclassified},
                   {"equal", equal}});
  }
  return equal ? kOk : kMismatch;
}

int cmd_verify(const Config& config, std::ostream& out) {
  const RealValue alpha = real_value(config.alpha, config.precision_bits);
  const bool distance_mode = config.n > 0;
  const bool gap_mode = !config.beta.empty() || config.big_n > 0;
  if (distance_mode == gap_mode) {
    throw InvalidArgument("verify needs either --n, or --beta with --N");
  }
  return distance_mode ? verify_distance(config, alpha, out) : verify_gaps(config, alpha, out);
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kPrecisionInsufficient: return kPrecision;
    case ErrorKind::kGapSearchCapExceeded:
    case ErrorKind::kRationalAlphaDegenerate: return kSearch;
    default: return kValidation;
  }
}

void report_error(std::ostream& err, std::string_view kind, const std::string& message) {
  err << Json{{"error", std::string(kind)}, {"message", message}}.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config config;
  CLI::App app{"Three distance and three gap structure of circle rotations", "threedist"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", config.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--precision", config.precision_bits, "Bits for named constants")
      ->check(CLI::Range(8, 1 << 16));
  app.add_option("--scan-cap", config.scan_cap, "Search cap for minimal return indices")
      ->check(CLI::PositiveNumber);

  auto positive = CLI::PositiveNumber;

  auto* decompose_cmd = app.add_subcommand("decompose", "Three distance partition");
  decompose_cmd->add_option("--alpha", config.alpha, "p/q, decimal or named constant")->required();
  decompose_cmd->add_option("--n", config.n, "Number of rotation steps")->required()->check(positive);

  auto* gaps_cmd = app.add_subcommand("gaps", "Three gap structure");
  gaps_cmd->add_option("--alpha", config.alpha)->required();
  gaps_cmd->add_option("--beta", config.beta, "Window length in (0, 1)")->required();
  gaps_cmd->add_option("--census", config.census, "Append empirical frequencies over N indices")
      ->check(positive);

  auto* farey_cmd = app.add_subcommand("farey", "Farey sequence or Farey pair");
  farey_cmd->add_option("--n", config.n, "Order")->required()->check(positive);
  farey_cmd->add_option("--neighbors", config.neighbors, "Locate this alpha in F_n");
  farey_cmd->add_option("--cap", config.farey_cap, "Largest order listed in full")->check(positive);

  auto* temperament_cmd = app.add_subcommand("temperament", "Fractional-part ladder");
  temperament_cmd->add_option("--generator", config.generator);
  temperament_cmd->add_option("--counts", config.counts, "Note counts, comma separated")
      ->delimiter(',')
      ->check(CLI::Range(std::int64_t{2}, std::int64_t{10'000'000}));
  temperament_cmd->add_option("--two-length-max", config.two_length_max,
                              "Also list two-length orders n <= this")
      ->check(positive);
  temperament_cmd->add_option("--svg", config.svg_path, "Write the ladder as SVG");

  auto* plot_un_cmd = app.add_subcommand("plot-un", "SVG of U_n");
  plot_un_cmd->add_option("--n", config.n)->required()->check(positive);
  plot_un_cmd->add_flag("--farey-verticals", config.farey_verticals);
  plot_un_cmd->add_option("--width", config.width)->check(positive);
  plot_un_cmd->add_option("--height", config.height)->check(positive);
  plot_un_cmd->add_option("--output", config.output);

  auto* plot_strip_cmd = app.add_subcommand("plot-strip", "SVG of one partition");
  plot_strip_cmd->add_option("--alpha", config.alpha)->required();
  plot_strip_cmd->add_option("--n", config.n)->required()->check(positive);
  plot_strip_cmd->add_option("--width", config.width)->check(positive);
  plot_strip_cmd->add_option("--output", config.output);

  auto* verify_cmd = app.add_subcommand("verify", "Engine against brute-force oracle");
  verify_cmd->add_option("--alpha", config.alpha)->required();
  verify_cmd->add_option("--n", config.n)->check(positive);
  verify_cmd->add_option("--beta", config.beta);
  verify_cmd->add_option("--N", config.big_n)->check(positive);

  std::vector<const char*> argv{"threedist"};
  for (const auto& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    report_error(err, "ValidationError", e.what());
    return kValidation;
  }

  try {
    if (decompose_cmd->parsed()) return cmd_decompose(config, out);
    if (gaps_cmd->parsed()) return cmd_gaps(config, out);
    if (farey_cmd->parsed()) return cmd_farey(config, out);
    if (temperament_cmd->parsed()) return cmd_temperament(config, out);
    if (plot_un_cmd->parsed()) return cmd_plot_un(config, out);
    if (plot_strip_cmd->parsed()) return cmd_plot_strip(config, out);
    if (verify_cmd->parsed()) return cmd_verify(config, out);
  } catch (const Error& e) {
    report_error(err, e.kind_name(), e.what());
    return exit_code_for(e.kind());
  }
  return kValidation;
}

}  // namespace threedist::cli
