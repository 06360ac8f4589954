// netent: command-line surface for the small-world statistics, entropy,
// growth/dating, generator, and replication modules.
//
// Exit codes: 0 success, 1 computation error, 2 usage/file/parse error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "netent/netent.hpp"

namespace {

using nlohmann::json;

// Usage-level failure (unreadable file, malformed input): exit code 2.
struct cli_failure {
  std::string message;
};

// Text mode prints 6 significant digits; structured mode keeps full
// precision through nlohmann's shortest round-trip representation.
std::string fmt(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.6g", value);
  return buffer;
}

netent::graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw cli_failure{"cannot open '" + path + "'"};
  try {
    return netent::from_edge_list(in);
  } catch (const netent::error& e) {
    throw cli_failure{path + ": " + e.what()};
  }
}

netent::time_unit parse_unit(const std::string& name) {
  if (name == "year") return netent::time_unit::year;
  if (name == "decade") return netent::time_unit::decade;
  if (name == "millennium") return netent::time_unit::millennium;
  return netent::time_unit::million_years;  // "Myr", guarded by IsMember
}

json stats_json(const netent::network_stats& s) {
  json out{{"node_count", s.node_count},
           {"total_node_count", s.total_node_count},
           {"edge_count", s.edge_count},
           {"path_length", s.path_length},
           {"clustering", s.clustering},
           {"method", s.method == netent::path_method::exact ? "exact" : "sampled"},
           {"largest_component_only", s.largest_component_only}};
  if (s.sample_size) out["sample_size"] = *s.sample_size;
  if (s.seed) out["seed"] = *s.seed;
  return out;
}

json entropy_json(const netent::entropy_report& r) {
  return {{"node_count", r.node_count},     {"path_length", r.path_length},
          {"clustering", r.clustering},     {"generations", r.generations},
          {"entropy", r.entropy},           {"ideal_entropy", r.ideal_entropy}};
}

void print_entropy_text(const netent::entropy_report& r) {
  std::cout << "n:       " << fmt(r.node_count) << '\n'
            << "L:       " << fmt(r.path_length) << '\n'
            << "C:       " << fmt(r.clustering) << '\n'
            << "eta:     " << fmt(r.generations) << '\n'
            << "H:       " << fmt(r.entropy) << '\n'
            << "H_ideal: " << fmt(r.ideal_entropy) << '\n';
}

void emit(const std::string& format, const json& structured,
          const std::string& text) {
  if (format == "structured")
    std::cout << structured.dump(2) << '\n';
  else
    std::cout << text;
}

void write_output(const std::string& out_path, const std::string& payload) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw cli_failure{"cannot write '" + out_path + "'"};
  out << payload;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"small-world network statistics and entropy toolkit"};
  app.require_subcommand(1);
  std::string format = "text";
  auto add_format = [&format](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format: text or structured")
        ->check(CLI::IsMember({"text", "structured"}));
  };

  // --- stats ---------------------------------------------------------
  auto* stats_cmd = app.add_subcommand("stats", "measure n, L, C of an edge-list graph");
  std::string stats_path;
  std::string policy = "largest";
  bool strict_connectivity = false;
  bool force_exact = false;
  std::optional<std::size_t> sample_size;
  std::uint64_t stats_seed = 0;
  unsigned threads = 0;
  stats_cmd->add_option("file", stats_path, "edge-list file")->required();
  stats_cmd->add_option("--policy", policy, "disconnected input: largest or strict")
      ->check(CLI::IsMember({"largest", "strict"}));
  stats_cmd->add_flag("--strict-connectivity", strict_connectivity,
                      "same as --policy strict");
  stats_cmd->add_flag("--exact", force_exact, "force exact path lengths");
  stats_cmd->add_option("--sample-size", sample_size,
                        "estimate path length from this many sources");
  stats_cmd->add_option("--seed", stats_seed, "source sampling seed");
  stats_cmd->add_option("--threads", threads, "worker threads (0 = all cores)");
  add_format(stats_cmd);
  stats_cmd->callback([&] {
    const netent::graph g = load_graph(stats_path);
    netent::stats_options opt;
    if (policy == "strict" || strict_connectivity)
      opt.policy = netent::component_policy::strict;
    if (force_exact) opt.sampling = netent::stats_options::mode::exact;
    if (sample_size) {
      opt.sampling = netent::stats_options::mode::sampled;
      opt.sample_size = *sample_size;
    }
    opt.seed = stats_seed;
    opt.threads = threads;
    const netent::network_stats s = netent::compute_stats(g, opt);

    json doc{{"stats", stats_json(s)}};
    std::ostringstream text;
    text << "nodes:   " << s.node_count;
    if (s.largest_component_only)
      text << "  (largest component of " << s.total_node_count << ")";
    text << '\n'
         << "edges:   " << s.edge_count << '\n'
         << "L:       " << fmt(s.path_length);
    if (s.method == netent::path_method::sampled)
      text << "  (sampled, " << *s.sample_size << " sources, seed " << *s.seed << ")";
    text << '\n' << "C:       " << fmt(s.clustering) << '\n';

    try {
      const auto r = netent::network_entropy(static_cast<double>(s.node_count),
                                             s.path_length, s.clustering);
      doc["entropy"] = entropy_json(r);
      text << "eta:     " << fmt(r.generations) << '\n'
           << "H:       " << fmt(r.entropy) << '\n'
           << "H_ideal: " << fmt(r.ideal_entropy) << '\n';
    } catch (const netent::error& e) {
      // e.g. a complete graph has L = 1: entropy is undefined there, but
      // the ideal benchmark ln(n) still applies.
      const double ideal = std::log(static_cast<double>(s.node_count));
      doc["entropy"] = {{"error", netent::to_string(e.code())},
                        {"message", e.what()},
                        {"ideal_entropy", ideal}};
      text << "H:       undefined (" << e.what() << ")\n"
           << "H_ideal: " << fmt(ideal) << '\n';
    }
    emit(format, doc, text.str());
  });

  // --- entropy -------------------------------------------------------
  auto* entropy_cmd = app.add_subcommand("entropy", "evaluate C*log_L(n)");
  double e_n = 0.0, e_l = 0.0, e_c = 0.0;
  entropy_cmd->add_option("--n", e_n, "node count")->required();
  entropy_cmd->add_option("--L", e_l, "average path length (log base)")->required();
  entropy_cmd->add_option("--C", e_c, "clustering coefficient")->required();
  add_format(entropy_cmd);
  entropy_cmd->callback([&] {
    const auto r = netent::network_entropy(e_n, e_l, e_c);
    if (format == "structured")
      std::cout << entropy_json(r).dump(2) << '\n';
    else
      print_entropy_text(r);
  });

  // --- rate ----------------------------------------------------------
  auto* rate_cmd = app.add_subcommand("rate", "exponential growth rate between two quantities");
  double q1 = 0.0, q2 = 0.0, years = 0.0;
  std::string per_unit = "year";
  rate_cmd->add_option("--q1", q1, "starting quantity")->required();
  rate_cmd->add_option("--q2", q2, "ending quantity")->required();
  rate_cmd->add_option("--years", years, "elapsed time in years")->required();
  rate_cmd->add_option("--per", per_unit, "unit of the reported rate")
      ->check(CLI::IsMember({"year", "decade", "millennium", "Myr"}));
  add_format(rate_cmd);
  rate_cmd->callback([&] {
    const auto r = netent::exponential_rate(q1, q2, years);
    const netent::time_unit target = parse_unit(per_unit);
    const double shown = netent::rate_in(r, target);
    const json doc{
        {"rate", shown},
        {"unit", per_unit},
        {"window_years", years},
        {"converted",
         {{"year", netent::rate_in(r, netent::time_unit::year)},
          {"decade", netent::rate_in(r, netent::time_unit::decade)},
          {"millennium", netent::rate_in(r, netent::time_unit::millennium)},
          {"Myr", netent::rate_in(r, netent::time_unit::million_years)}}}};
    emit(format, doc,
         "m = " + fmt(shown) + " per " + per_unit + "\n");
  });

  // --- date ----------------------------------------------------------
  auto* date_cmd = app.add_subcommand("date", "duration of a growth process");
  double d_rate = 0.0, d_from = 0.0, d_to = 0.0, d_entropy = 0.0;
  std::string d_unit = "year";
  bool linear_model = false;
  auto* from_opt = date_cmd->add_option("--from", d_from, "starting quantity");
  auto* to_opt = date_cmd->add_option("--to", d_to, "ending quantity");
  auto* entropy_opt =
      date_cmd->add_option("--entropy", d_entropy, "final entropy (linear model)");
  date_cmd->add_option("--rate", d_rate, "growth rate per unit")->required();
  date_cmd->add_option("--per", d_unit, "time unit of the rate and result")
      ->check(CLI::IsMember({"year", "decade", "millennium", "Myr"}));
  date_cmd->add_flag("--linear", linear_model,
                     "constant-rate model: duration = entropy / rate");
  add_format(date_cmd);
  date_cmd->callback([&] {
    const netent::time_unit unit = parse_unit(d_unit);
    netent::dating_result result;
    if (linear_model) {
      if (!*entropy_opt)
        throw CLI::RequiredError("--linear needs --entropy");
      result = netent::linear_duration(d_rate, d_entropy, unit);
    } else {
      if (!*from_opt || !*to_opt)
        throw CLI::RequiredError("--from and --to");
      result = netent::date_duration(d_rate, d_from, d_to, unit);
    }
    const json doc{{"duration", result.duration},
                   {"unit", netent::to_string(result.unit)},
                   {"model", netent::to_string(result.model)},
                   {"rate", result.rate},
                   {"start_quantity", result.start_quantity},
                   {"end_quantity", result.end_quantity}};
    emit(format, doc,
         "duration: " + fmt(result.duration) + " (unit: " + netent::to_string(result.unit) +
             ", model: " + netent::to_string(result.model) + ")\n");
  });

  // --- value ---------------------------------------------------------
  auto* value_cmd = app.add_subcommand("value", "rate gained by adding nodes to a network");
  double v_m = 0.0, v_c = 0.0, v_l = 0.0, v_n1 = 0.0, v_a = 0.0;
  value_cmd->add_option("--m", v_m, "process rate")->required();
  value_cmd->add_option("--C", v_c, "clustering coefficient")->required();
  value_cmd->add_option("--L", v_l, "average path length (log base)")->required();
  value_cmd->add_option("--n1", v_n1, "current node count")->required();
  value_cmd->add_option("--A", v_a, "nodes added")->required();
  add_format(value_cmd);
  value_cmd->callback([&] {
    const double delta = netent::value_delta(v_m, v_c, v_l, v_n1, v_a);
    emit(format, json{{"value_delta", delta}}, "value delta: " + fmt(delta) + "\n");
  });

  // --- generate ------------------------------------------------------
  auto* generate_cmd = app.add_subcommand("generate", "synthetic graphs and hierarchies");
  generate_cmd->require_subcommand(1);
  std::string out_path;
  std::size_t g_n = 0, g_k = 0;
  double g_p = 0.0;
  std::uint64_t g_seed = 0;
  std::uint32_t g_branching = 0, g_depth = 0;

  auto emit_graph = [&](const netent::graph& g, json parameters) {
    if (format == "structured") {
      json edges = json::array();
      for (const auto& [u, v] : g.edges())
        edges.push_back({g.label(u), g.label(v)});
      parameters["node_count"] = g.node_count();
      parameters["edge_count"] = g.edge_count();
      parameters["edges"] = std::move(edges);
      write_output(out_path, parameters.dump(2) + "\n");
    } else {
      write_output(out_path, netent::to_edge_list(g));
    }
  };

  auto* complete_cmd = generate_cmd->add_subcommand("complete", "complete graph K_n");
  complete_cmd->add_option("--n", g_n, "node count")->required();
  complete_cmd->add_option("--out", out_path, "write to file instead of stdout");
  add_format(complete_cmd);
  complete_cmd->callback([&] {
    emit_graph(netent::complete_graph(g_n), {{"generator", "complete"}, {"n", g_n}});
  });

  auto* ring_cmd = generate_cmd->add_subcommand("ring", "ring lattice");
  ring_cmd->add_option("--n", g_n, "node count")->required();
  ring_cmd->add_option("--k", g_k, "even degree")->required();
  ring_cmd->add_option("--out", out_path, "write to file instead of stdout");
  add_format(ring_cmd);
  ring_cmd->callback([&] {
    emit_graph(netent::ring_lattice(g_n, g_k),
               {{"generator", "ring"}, {"n", g_n}, {"k", g_k}});
  });

  auto* ws_cmd = generate_cmd->add_subcommand("ws", "rewired small-world graph");
  ws_cmd->add_option("--n", g_n, "node count")->required();
  ws_cmd->add_option("--k", g_k, "even lattice degree")->required();
  ws_cmd->add_option("--p", g_p, "rewiring probability")->required();
  ws_cmd->add_option("--seed", g_seed, "random seed");
  ws_cmd->add_option("--out", out_path, "write to file instead of stdout");
  add_format(ws_cmd);
  ws_cmd->callback([&] {
    emit_graph(netent::watts_strogatz(g_n, g_k, g_p, g_seed),
               {{"generator", "ws"},
                {"n", g_n},
                {"k", g_k},
                {"p", g_p},
                {"seed", g_seed}});
  });

  auto* hierarchy_cmd =
      generate_cmd->add_subcommand("hierarchy", "nested cluster partition");
  hierarchy_cmd->add_option("--branching", g_branching, "clusters per parent")->required();
  hierarchy_cmd->add_option("--depth", g_depth, "generations below the root")->required();
  hierarchy_cmd->add_option("--out", out_path, "write to file instead of stdout");
  add_format(hierarchy_cmd);
  hierarchy_cmd->callback([&] {
    const auto h = netent::nested_hierarchy(g_branching, g_depth);
    const std::string text = netent::to_nested_text(h);
    if (format == "structured") {
      const json doc{{"generator", "hierarchy"},
                     {"branching", h.branching},
                     {"depth", h.depth},
                     {"leaf_count", h.leaf_count()},
                     {"clusters", json::parse(text)}};
      write_output(out_path, doc.dump(2) + "\n");
    } else {
      write_output(out_path, text + "\n");
    }
  });

  // --- replicate -----------------------------------------------------
  auto* replicate_cmd =
      app.add_subcommand("replicate", "recompute published figures and report pass/fail");
  add_format(replicate_cmd);
  bool replicate_ok = true;
  replicate_cmd->callback([&] {
    const netent::replication_report report = netent::run_all();
    replicate_ok = report.all_pass;
    if (format == "structured") {
      json rows = json::array();
      for (const auto& row : report.rows)
        rows.push_back({{"id", row.id},
                        {"description", row.description},
                        {"source", row.source},
                        {"computed", row.computed},
                        {"expected", row.expected},
                        {"tolerance", row.tolerance},
                        {"relative", row.relative},
                        {"informational", row.informational},
                        {"delta", row.delta()},
                        {"pass", row.pass()}});
      std::cout << json{{"all_pass", report.all_pass}, {"scenarios", rows}}.dump(2)
                << '\n';
    } else {
      std::cout << netent::to_text(report);
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // 0
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const cli_failure& e) {
    std::cerr << "error: " << e.message << '\n';
    return 2;
  } catch (const netent::error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return replicate_ok ? 0 : 1;
}
