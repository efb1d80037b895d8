#include "robustham/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "robustham/io.hpp"
#include "robustham/matching.hpp"
#include "robustham/report.hpp"

namespace robustham::cli {

namespace {

struct Options {
  std::string input;
  std::string format = "json";

  int n = 0;
  int delta = 0;
  int r = 0;
  double h = 0;
  bool relaxed = false;
  double mean = 0;
  double a = 0;

  int t = -1;

  std::string mode;
  std::uint64_t seed = 0;
  double xi = 0.05;
  double lambda = 0.10;
  int max_attempts = 32;

  std::string nu;
  std::string tau;
  std::int64_t trials = 1000;
  double alpha = 0;
  std::int64_t pairs = 1000;
  bool exhaustive = false;

  int target = 0;
  std::int64_t budget_nodes = 50'000'000;
  double budget_seconds = 120;
  int restarts = 16;

  double p = 0.5;
  int k = 0;
  int m = 0;
  int q = 0;
  std::vector<int> shifts;
  bool directed = false;
  std::string graph_format = "json";

  double eps = 0.5;
  int jobs = 1;
  bool runtime = false;
};

// A failed precondition detected by the CLI itself.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

json scalar(const std::string& text) {
  if (text == "true") return true;
  if (text == "false") return false;
  try {
    json v = json::parse(text);
    if (v.is_number()) return v;
  } catch (const json::exception&) {
  }
  return text;
}

// Every option of the invoked subcommand with its resolved value.
json resolved_config(const CLI::App& app) {
  json config = json::object();
  for (const CLI::Option* opt : app.get_options()) {
    const std::string name = opt->get_single_name();
    if (name.empty() || name == "help") continue;
    if (opt->get_expected_max() > 1) {
      json values = json::array();
      for (const auto& r : opt->results()) values.push_back(scalar(r));
      config[name] = values;
    } else if (opt->get_expected_max() == 0) {
      config[name] = opt->count() > 0;
    } else if (opt->count() > 0) {
      config[name] = scalar(opt->results().back());
    } else {
      const std::string d = opt->get_default_str();
      config[name] = d.empty() ? json(nullptr) : scalar(d);
    }
  }
  return config;
}

void render_text(const json& doc, const std::string& prefix, std::ostream& out) {
  if (doc.is_object()) {
    for (const auto& [key, value] : doc.items()) render_text(value, prefix.empty() ? key : prefix + "." + key, out);
    return;
  }
  if (doc.is_array() && std::any_of(doc.begin(), doc.end(), [](const json& x) { return x.is_object(); })) {
    for (std::size_t i = 0; i < doc.size(); ++i) render_text(doc[i], prefix + "[" + std::to_string(i) + "]", out);
    return;
  }
  out << prefix << "\t" << doc.dump() << "\n";
}

class Runner {
 public:
  Runner(std::istream& in, std::ostream& out, std::ostream& err) : in_(in), out_(out), err_(err) {}

  int run(const std::vector<std::string>& args) {
    CLI::App app{"Regular factors, orientations, robust expansion and Hamilton packings."};
    app.set_help_flag("--help", "Print help and exit");
    app.require_subcommand(1);
    app.option_defaults()->always_capture_default();
    app.add_option("--format", o_.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--input", o_.input, "Read the graph from this file instead of stdin");
    app.fallthrough();
    build(app);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
      out_ << help_target(app)->help();
      return kOk;
    } catch (const CLI::CallForAllHelp&) {
      out_ << app.help("", CLI::AppFormatMode::All);
      return kOk;
    } catch (const CLI::ParseError& e) {
      err_ << "error: " << e.what() << "\n";
      return kUsage;
    }

    try {
      return handler_();
    } catch (const ParseError& e) {
      err_ << "error: malformed input: " << e.what() << "\n";
      return kDataError;
    } catch (const HypothesisNotMet& e) {
      emit({{"status", "hypothesis_not_met"}, {"reason", e.what()}});
      return kInconclusive;
    } catch (const PathNotFound& e) {
      emit({{"status", "path_not_found"}, {"reason", e.what()}});
      return kNegative;
    } catch (const PipelineFailed& e) {
      emit({{"status", "pipeline_failed"}, {"reason", e.what()}});
      return kNegative;
    } catch (const std::invalid_argument& e) {
      err_ << "error: " << e.what() << "\n";
      return kUsage;
    } catch (const std::exception& e) {
      err_ << "internal error: " << e.what() << "\n";
      return 70;
    }
  }

 private:
  static CLI::App* help_target(CLI::App& app) {
    CLI::App* target = &app;
    while (true) {
      const auto subs = target->get_subcommands();
      if (subs.empty()) return target;
      target = subs.front();
    }
  }

  // Registers a leaf subcommand; its handler runs after a successful parse.
  CLI::App* leaf(CLI::App* parent, const std::string& name, const std::string& description,
                 std::function<int()> body) {
    CLI::App* sub = parent->add_subcommand(name, description);
    sub->callback([this, sub, body]() {
      command_ = full_name(sub);
      leaf_ = sub;
      handler_ = body;
    });
    return sub;
  }

  static std::string full_name(const CLI::App* app) {
    std::string name;
    for (const CLI::App* a = app; a != nullptr && a->get_parent() != nullptr; a = a->get_parent()) {
      name = name.empty() ? a->get_name() : a->get_name() + " " + name;
    }
    return name;
  }

  void emit(const json& result) {
    json doc = {{"command", command_}, {"config", leaf_ ? resolved_config(*leaf_) : json::object()}, {"result", result}};
    if (o_.format == "text") {
      render_text(doc, "", out_);
    } else {
      out_ << doc.dump() << "\n";
    }
  }

  AnyGraph read_graph() {
    std::string text;
    if (o_.input.empty()) {
      text.assign(std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>());
    } else {
      std::ifstream file(o_.input);
      if (!file) throw UsageError("cannot open input file " + o_.input);
      text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
    }
    return parse_graph(text);
  }

  Graph read_undirected() {
    auto g = read_graph();
    if (!std::holds_alternative<Graph>(g)) throw UsageError("this command needs an undirected graph");
    return std::get<Graph>(std::move(g));
  }

  Digraph read_directed() {
    auto g = read_graph();
    if (!std::holds_alternative<Digraph>(g)) throw UsageError("this command needs a directed graph");
    return std::get<Digraph>(std::move(g));
  }

  SearchBudget budget() const {
    SearchBudget b;
    b.max_nodes = o_.budget_nodes;
    b.max_seconds = o_.budget_seconds;
    b.restarts = o_.restarts;
    b.seed = o_.seed;
    return b;
  }

  void add_budget(CLI::App* sub) {
    sub->add_option("--budget-nodes", o_.budget_nodes, "Search-tree node cap")->check(CLI::PositiveNumber);
    sub->add_option("--budget-seconds", o_.budget_seconds, "Wall-clock cap per search")->check(CLI::PositiveNumber);
    sub->add_option("--restarts", o_.restarts, "Rotation-extension restarts")->check(CLI::PositiveNumber);
  }

  static int search_exit(SearchStatus s) {
    switch (s) {
      case SearchStatus::Found: return kOk;
      case SearchStatus::None: return kNegative;
      case SearchStatus::BudgetExhausted: return kInconclusive;
    }
    return kInconclusive;
  }

  void build(CLI::App& app) {
    build_bounds(app);
    build_factors(app);
    build_orient(app);
    build_expand(app);
    build_hamilton(app);
    build_gen(app);
    build_experiment(app);
  }

  void build_bounds(CLI::App& app) {
    auto* bounds = app.add_subcommand("bounds", "Closed-form degree bounds");
    bounds->require_subcommand(1);
    auto* f = leaf(bounds, "f", "Directed regular-factor threshold f(n, delta)", [this] {
      emit(to_json(f_dir(o_.n, o_.delta)));
      return kOk;
    });
    f->add_option("--n", o_.n)->required();
    f->add_option("--delta", o_.delta)->required();

    auto* g = leaf(bounds, "g", "Undirected threshold g(n, delta) and its even roundings", [this] {
      emit(to_json(g_undir(o_.n, o_.delta, o_.relaxed)));
      return kOk;
    });
    g->add_option("--n", o_.n)->required();
    g->add_option("--delta", o_.delta)->required();
    g->add_flag("--relaxed", o_.relaxed, "Admit delta = n/2");

    auto* bin = leaf(bounds, "binresults", "Binomial estimates at p = 1/2", [this] {
      const auto b = check_binresults(o_.n, o_.r, o_.h);
      emit(to_json(b));
      return b.ratio_ok && b.point_lower_ok && b.tail_upper_ok ? kOk : kNegative;
    });
    bin->add_option("--n", o_.n)->required();
    bin->add_option("--r", o_.r)->required();
    bin->add_option("--h", o_.h)->required();

    auto* ch = leaf(bounds, "chernoff", "Lower-tail Chernoff bound exp(-a^2 mean / 3)", [this] {
      emit({{"bound", chernoff(o_.mean, o_.a)}});
      return kOk;
    });
    ch->add_option("--mean", o_.mean)->required();
    ch->add_option("--a", o_.a)->required();
  }

  void build_factors(CLI::App& app) {
    auto* factor = leaf(&app, "factor", "r-factor via max-flow (digraphs) or degree gadget (graphs)", [this] {
      auto g = read_graph();
      if (auto* d = std::get_if<Digraph>(&g)) {
        const auto f = find_r_factor_digraph(*d, o_.r);
        json result = to_json(f);
        if (f.cut) result["cut_verified"] = verify_cut(*d, DegreeSpec::regular(d->order(), o_.r), *f.cut);
        emit(result);
        return f.status == FactorStatus::Found ? kOk : kNegative;
      }
      const Graph& u = std::get<Graph>(g);
      const auto f = find_f_factor(u, std::vector<int>(u.order(), o_.r));
      emit(to_json(f));
      return f.found ? kOk : kNegative;
    });
    factor->add_option("--r", o_.r, "Target degree")->required()->check(CLI::NonNegativeNumber);

    leaf(&app, "reg", "Largest r with an r-factor (even r for graphs), with a witness", [this] {
      auto g = read_graph();
      if (auto* d = std::get_if<Digraph>(&g)) {
        const auto f = reg_dir_factor(*d);
        emit({{"reg", f.r}, {"factor_edges", arcs_json(f.factor)}});
        return kOk;
      }
      const Graph& u = std::get<Graph>(g);
      const int r = reg_even_undir(u);
      const auto f = find_r_factor_graph(u, r);
      emit({{"reg_even", r}, {"factor_edges", edges_json(f.factor)}});
      return kOk;
    });

    leaf(&app, "petersen", "Split an even-regular graph into 2-factors", [this] {
      const auto factors = petersen_2_factorization(read_undirected());
      json list = json::array();
      for (const auto& f : factors) list.push_back(edges_json(f));
      emit({{"factors", list}});
      return kOk;
    });

    auto* me = leaf(&app, "matchings-extract", "Degree-trimming factor extraction for dense graphs", [this] {
      const Graph g = read_undirected();
      const auto result = o_.t >= 0 ? matchings_extract(g, o_.t) : matchings_extract(g);
      emit(to_json(result));
      return kOk;
    });
    me->add_option("--t", o_.t, "Declared t with min degree >= n - t (default n - min degree)")->default_str("");
  }

  void build_orient(CLI::App& app) {
    auto* orient = leaf(&app, "orient", "Orient an undirected graph", [this] {
      const Graph g = read_undirected();
      const bool seeded = o_.mode == "random" || o_.mode == "paper-pipeline";
      if (seeded && leaf_->get_option("--seed")->count() == 0) throw UsageError("--seed is required for mode " + o_.mode);
      if (o_.mode == "random") {
        emit(to_json(random_orientation(g, Seed{o_.seed, 0})));
      } else if (o_.mode == "euler") {
        emit(to_json(euler_orientation(g)));
      } else {
        PipelineOptions options;
        options.xi = o_.xi;
        options.lambda = o_.lambda;
        options.max_attempts = o_.max_attempts;
        const auto pipeline = o_.mode == "regular" ? OrientationPipeline::Euler : OrientationPipeline::ExpanderSlice;
        emit(to_json(regular_orientation(g, pipeline, Seed{o_.seed, 0}, options)));
      }
      return kOk;
    });
    orient->add_option("--mode", o_.mode)->required()->check(CLI::IsMember({"random", "euler", "regular", "paper-pipeline"}));
    orient->add_option("--seed", o_.seed, "Required for random and paper-pipeline")->default_str("");
    orient->add_option("--xi", o_.xi, "Slice degree fraction");
    orient->add_option("--lambda", o_.lambda, "Edge-split probability");
    orient->add_option("--max-attempts", o_.max_attempts)->check(CLI::PositiveNumber);

    leaf(&app, "balance", "Balance an orientation of an even-regular graph by path switching", [this] {
      const Digraph d = read_directed();
      if (!is_oriented(d)) throw UsageError("balance needs an oriented graph");
      emit(to_json(path_switch_balance(OrientedGraph(d))));
      return kOk;
    });
  }

  void build_expand(CLI::App& app) {
    auto* expand = app.add_subcommand("expand", "Robust expansion");
    expand->require_subcommand(1);
    auto* check = leaf(expand, "check", "Certify or refute robust (nu, tau)-outexpansion", [this] {
      const auto params = ExpansionParams::make(parse_rational(o_.nu), parse_rational(o_.tau));
      auto g = read_graph();
      ExpansionVerdict v;
      if ((o_.mode == "sample") && leaf_->get_option("--seed")->count() == 0) {
        throw UsageError("--seed is required for mode sample");
      }
      if (o_.mode == "spectral") {
        if (!std::holds_alternative<Graph>(g)) throw UsageError("spectral mode needs an undirected graph");
        const bool has_alpha = leaf_->get_option("--alpha")->count() > 0;
        v = certify_spectral(std::get<Graph>(g), params, has_alpha ? std::optional<double>(o_.alpha) : std::nullopt);
      } else {
        v = std::visit(
            [&](const auto& x) {
              if (o_.mode == "exact") return check_exact(x, params);
              if (o_.mode == "sample") return refute_sampled(x, params, o_.trials, Seed{o_.seed, 0});
              return certify_degree(x, params);
            },
            g);
      }
      emit(to_json(v));
      switch (v.kind) {
        case VerdictKind::Certified: return kOk;
        case VerdictKind::Refuted: return kNegative;
        default: return kInconclusive;
      }
    });
    check->add_option("--nu", o_.nu)->required();
    check->add_option("--tau", o_.tau)->required();
    check->add_option("--mode", o_.mode)->required()->check(CLI::IsMember({"exact", "sample", "degree", "spectral"}));
    check->add_option("--trials", o_.trials, "Samples for mode sample")->check(CLI::NonNegativeNumber);
    check->add_option("--seed", o_.seed, "Required for mode sample")->default_str("");
    check->add_option("--alpha", o_.alpha, "Declared degree fraction for mode spectral")->default_str("");

    leaf(expand, "eigen", "Second eigenvalue of a regular graph", [this] {
      emit(to_json(second_eigenvalue(read_undirected())));
      return kOk;
    });

    auto* mixing = leaf(expand, "mixing", "Check the expander mixing inequality", [this] {
      const Graph g = read_undirected();
      const auto s = second_eigenvalue(g);
      if (!o_.exhaustive && leaf_->get_option("--seed")->count() == 0) throw UsageError("--seed is required when sampling");
      const auto report = o_.exhaustive ? verify_mixing_exhaustive(g, s)
                                        : verify_mixing_sampled(g, s, o_.pairs, Seed{o_.seed, 0});
      emit({{"spectral", to_json(s)}, {"mixing", to_json(report)}});
      return report.holds ? kOk : kNegative;
    });
    mixing->add_flag("--exhaustive", o_.exhaustive, "All pairs of nonempty sets (n <= 16)");
    mixing->add_option("--pairs", o_.pairs)->check(CLI::PositiveNumber);
    mixing->add_option("--seed", o_.seed, "Required unless --exhaustive")->default_str("");
  }

  void build_hamilton(CLI::App& app) {
    auto* ham = app.add_subcommand("hamilton", "Hamilton cycles and packings");
    ham->require_subcommand(1);
    auto* find = leaf(ham, "find", "Find one Hamilton cycle", [this] {
      auto g = read_graph();
      const auto result = std::visit([&](const auto& x) { return find_hamilton(x, budget()); }, g);
      emit(to_json(result));
      return search_exit(result.status);
    });
    add_budget(find);
    find->add_option("--seed", o_.seed, "Heuristic seed");

    auto* pack = leaf(ham, "pack", "Pack edge-disjoint Hamilton cycles", [this] {
      auto g = read_graph();
      const auto result = std::visit([&](const auto& x) { return pack_hamilton(x, o_.target, budget()); }, g);
      json doc = to_json(result);
      doc["verified"] = std::visit([&](const auto& x) { return verify_packing(x, result.packing).ok; }, g);
      emit(doc);
      return search_exit(result.status);
    });
    pack->add_option("--target", o_.target)->required()->check(CLI::NonNegativeNumber);
    add_budget(pack);

    auto* hvr = leaf(ham, "ham-vs-reg", "Compare the packing number with the regular-factor bound", [this] {
      auto g = read_graph();
      const auto report = std::visit([&](const auto& x) { return ham_vs_reg(x, budget()); }, g);
      emit(to_json(report));
      return report.status == SearchStatus::BudgetExhausted ? kInconclusive : kOk;
    });
    add_budget(hvr);
  }

  void emit_graph(const AnyGraph& g, json extra) {
    if (o_.graph_format == "edges") {
      out_ << "# " << json({{"command", command_}, {"config", resolved_config(*leaf_)}}).dump() << "\n";
      std::visit([&](const auto& x) { out_ << to_edge_list(x); }, g);
      return;
    }
    json doc = to_json(g);
    doc["command"] = command_;
    doc["config"] = resolved_config(*leaf_);
    for (auto& [key, value] : extra.items()) doc[key] = value;
    out_ << doc.dump() << "\n";
  }

  void build_gen(CLI::App& app) {
    auto* gen = app.add_subcommand("gen", "Graph generators");
    gen->require_subcommand(1);
    auto graph_format = [this](CLI::App* sub) {
      sub->add_option("--graph-format", o_.graph_format, "json or edges")->check(CLI::IsMember({"json", "edges"}));
    };

    auto* tour = leaf(gen, "tournament", "Uniform random tournament", [this] {
      emit_graph(random_tournament(o_.n, Seed{o_.seed, 0}).digraph(), json::object());
      return kOk;
    });
    tour->add_option("--n", o_.n)->required();
    tour->add_option("--seed", o_.seed)->required();
    graph_format(tour);

    auto* gnp_cmd = leaf(gen, "gnp", "Binomial random graph G(n, p)", [this] {
      emit_graph(gnp(o_.n, o_.p, Seed{o_.seed, 0}), json::object());
      return kOk;
    });
    gnp_cmd->add_option("--n", o_.n)->required();
    gnp_cmd->add_option("--p", o_.p)->required();
    gnp_cmd->add_option("--seed", o_.seed)->required();
    graph_format(gnp_cmd);

    auto* dig = leaf(gen, "digraph", "Random digraph with arc probability p", [this] {
      emit_graph(random_digraph(o_.n, o_.p, Seed{o_.seed, 0}), json::object());
      return kOk;
    });
    dig->add_option("--n", o_.n)->required();
    dig->add_option("--p", o_.p)->required();
    dig->add_option("--seed", o_.seed)->required();
    graph_format(dig);

    auto* ext = leaf(gen, "extremal", "Digraph with minimum semidegree delta and reg = f(n, delta)", [this] {
      auto [d, c] = extremal_digraph(o_.n, o_.delta);
      emit_graph(d, {{"construction", to_json(c)}});
      return kOk;
    });
    ext->add_option("--n", o_.n)->required();
    ext->add_option("--delta", o_.delta)->required();
    graph_format(ext);

    auto* rot = leaf(gen, "rotational", "Rotational regular tournament on odd n", [this] {
      emit_graph(rotational_tournament(o_.n).digraph(), json::object());
      return kOk;
    });
    rot->add_option("--n", o_.n)->required();
    graph_format(rot);

    auto* kp = leaf(gen, "kpartite", "Regular k-partite tournament with classes of even size m", [this] {
      emit_graph(k_partite_tournament(o_.k, o_.m).digraph(), json::object());
      return kOk;
    });
    kp->add_option("--k", o_.k)->required();
    kp->add_option("--m", o_.m)->required();
    graph_format(kp);

    auto* pal = leaf(gen, "paley", "Paley graph on a prime q = 1 (mod 4)", [this] {
      emit_graph(paley(o_.q), json::object());
      return kOk;
    });
    pal->add_option("--q", o_.q)->required();
    graph_format(pal);

    auto* circ = leaf(gen, "circulant", "Circulant graph or digraph", [this] {
      if (o_.directed) {
        emit_graph(circulant_digraph(o_.n, o_.shifts), json::object());
      } else {
        emit_graph(circulant_graph(o_.n, o_.shifts), json::object());
      }
      return kOk;
    });
    circ->add_option("--n", o_.n)->required();
    circ->add_option("--shifts", o_.shifts)->required()->delimiter(',');
    circ->add_flag("--directed", o_.directed);
    graph_format(circ);

    auto* comp = leaf(gen, "complete", "Complete graph or digraph", [this] {
      if (o_.directed) {
        emit_graph(complete_digraph(o_.n), json::object());
      } else {
        emit_graph(complete_graph(o_.n), json::object());
      }
      return kOk;
    });
    comp->add_option("--n", o_.n)->required();
    comp->add_flag("--directed", o_.directed);
    graph_format(comp);
  }

  int emit_trials(const std::vector<TrialReport>& reports) {
    json header = {{"command", command_}, {"config", resolved_config(*leaf_)}};
    out_ << header.dump() << "\n";
    for (const auto& r : reports) out_ << to_json(r, o_.runtime).dump() << "\n";
    return kOk;
  }

  void build_experiment(CLI::App& app) {
    auto* exp = app.add_subcommand("experiment", "Monte-Carlo suites; JSON lines, one report per trial");
    exp->require_subcommand(1);
    auto common = [this](CLI::App* sub) {
      sub->add_option("--n", o_.n)->required();
      sub->add_option("--trials", o_.trials)->required()->check(CLI::NonNegativeNumber);
      sub->add_option("--seed", o_.seed)->required();
      sub->add_option("--jobs", o_.jobs, "Worker threads")->check(CLI::PositiveNumber);
      sub->add_flag("--runtime", o_.runtime, "Include per-trial wall-clock time");
    };

    auto* te = leaf(exp, "tourn-edges", "Semidegree and edge-discrepancy statistics of random tournaments", [this] {
      return emit_trials(tourn_edges_suite(o_.n, o_.trials, o_.eps, Seed{o_.seed, 0}, static_cast<int>(o_.pairs), o_.jobs));
    });
    common(te);
    te->add_option("--eps", o_.eps);
    te->add_option("--pairs", o_.pairs, "Sampled (A, B) pairs per trial")->check(CLI::PositiveNumber);

    auto* er = leaf(exp, "erdos", "Regular factors and Hamilton packings of random tournaments", [this] {
      return emit_trials(erdos_experiment(o_.n, o_.trials, budget(), Seed{o_.seed, 0}, o_.jobs));
    });
    common(er);
    add_budget(er);

    auto* gh = leaf(exp, "gnp-h", "Dense G(n, p): factor extraction and its hypothesis", [this] {
      return emit_trials(gnp_h_property(o_.n, o_.p, o_.trials, Seed{o_.seed, 0}, o_.jobs));
    });
    common(gh);
    gh->add_option("--p", o_.p)->required();
  }

  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
  Options o_;
  std::string command_;
  CLI::App* leaf_ = nullptr;
  std::function<int()> handler_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  return Runner(in, out, err).run(args);
}

}  // namespace robustham::cli
