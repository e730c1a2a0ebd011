// bei: batch front end. Reads graphs (graph6 or edge lists, or enumerates
// them), runs classification / oracle / verification commands and writes
// line-delimited JSON followed by a summary record.

#include <algorithm>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bei/bei.hpp"
#include "bei/serialize.hpp"

using namespace bei;

namespace {

enum Exit { ok = 0, verification_failed = 1, bad_config = 2, cap_exceeded = 3 };

struct RunConfig {
  std::string command;
  std::string input;
  int enumerate = 0;
  bool connected = false;
  std::string order = "lex";
  std::vector<std::uint32_t> chars{2};
  int max_degree = -1;
  int jobs = 1;
  std::string out;
  // command specific
  std::vector<int> t{3, 3};
  int q = 0;
  std::vector<std::string> which;
  std::string g1, g2;
  int random_pairs = 0;
  std::uint32_t seed = 20240607;
  int pair_max = 6;
};

OrderKind order_kind(const RunConfig& c) { return c.order == "lex" ? OrderKind::lex : OrderKind::degrevlex; }

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  return s.substr(a, s.find_last_not_of(" \t\r") - a + 1);
}

std::vector<Graph> read_graph6(const std::string& text) {
  std::vector<Graph> out;
  std::istringstream is(text);
  std::string line;
  for (std::size_t no = 1; std::getline(is, line); ++no) {
    line = trim(line);
    if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
    if (line.empty() || line[0] == '#') continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const ParseError& e) {
      throw PreconditionError("parse error on line " + std::to_string(no) + ": " + e.what());
    }
  }
  return out;
}

std::vector<Graph> load_corpus(const RunConfig& c) {
  if (!c.input.empty()) {
    std::ifstream f(c.input);
    if (!f) throw PreconditionError("cannot open " + c.input);
    std::stringstream buf;
    buf << f.rdbuf();
    const std::string text = buf.str();
    // an edge list starts with a bare vertex count; graph6 never contains digits only
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line) && (trim(line).empty() || trim(line)[0] == '#')) {
    }
    line = trim(line);
    const bool edges = !line.empty() && std::all_of(line.begin(), line.end(), [](char ch) { return std::isdigit(ch); });
    auto gs = edges ? parse_edge_lists(text) : read_graph6(text);
    if (c.connected) std::erase_if(gs, [](const Graph& g) { return !is_connected(g); });
    return gs;
  }
  if (c.enumerate > 0) return enumerate_small_graphs(c.enumerate, c.connected);
  throw PreconditionError("no input: give --input or --enumerate");
}

class Writer {
 public:
  explicit Writer(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw PreconditionError("cannot write " + path);
    }
  }
  void line(const Json& j) { (file_.is_open() ? file_ : std::cout) << j.dump() << '\n'; }

 private:
  std::ofstream file_;
};

template <class F>
std::vector<Json> per_graph(const std::vector<Graph>& gs, int jobs, F&& f) {
  std::vector<std::pair<std::string, Json>> rows = detail::parallel_map<std::pair<std::string, Json>>(
      gs.size(), jobs, [&](std::size_t i) { return std::make_pair(detail::graph_key(gs[i]), f(gs[i])); });
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Json> out;
  for (auto& r : rows) out.push_back(std::move(r.second));
  return out;
}

Json summary_line(const std::string& command, Json body) {
  char stamp[32];
  const std::time_t now = std::time(nullptr);
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return {{"summary", command}, {"result", std::move(body)}, {"timestamp", stamp}};
}

Graph random_graph(int n, std::mt19937& rng) {
  Graph g(n);
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v)
      if (std::bernoulli_distribution(0.5)(rng)) g.add_edge(u, v);
  return g;
}

// ---------------------------------------------------------------------------

int run_classify(const RunConfig& c, Writer& w) {
  const auto gs = load_corpus(c);
  std::map<std::string, int> counts;
  for (auto& row : per_graph(gs, c.jobs, [&](const Graph& g) {
         const auto s = structural_regularity(g);
         Json j{{"graph", graph_json(g)},
                {"class", to_string(regularity_class(g))},
                {"structural_reg", reg_json(s.value)},
                {"certificate", to_json(s.certificate)}};
         if (isolated_vertices(g).empty()) j["cm_gorenstein"] = to_json(classify_cm_gorenstein(g));
         return j;
       })) {
    ++counts[row["class"].get<std::string>()];
    w.line(row);
  }
  w.line(summary_line("classify", {{"graphs", gs.size()}, {"classes", counts}}));
  std::cerr << "classify: " << gs.size() << " graphs\n";
  for (const auto& [k, v] : counts) std::cerr << "  " << k << ": " << v << "\n";
  return ok;
}

int run_reg(const RunConfig& c, Writer& w) {
  const auto gs = load_corpus(c);
  CertifyOptions opt;
  opt.order = order_kind(c);
  opt.characteristics = c.chars;
  int inconsistent = 0;
  std::map<std::string, int> status;
  for (auto& row : per_graph(gs, c.jobs, [&](const Graph& g) {
         return Json{{"graph", graph_json(g)}, {"regularity", to_json(regularity_certified(g, opt))}};
       })) {
    inconsistent += !row["regularity"]["consistent"].get<bool>();
    ++status[row["regularity"]["status"].get<std::string>()];
    w.line(row);
  }
  w.line(summary_line("reg", {{"graphs", gs.size()}, {"status", status}, {"inconsistent", inconsistent}}));
  std::cerr << "reg: " << gs.size() << " graphs, " << inconsistent << " inconsistent\n";
  return inconsistent ? verification_failed : ok;
}

int run_primes(const RunConfig& c, Writer& w) {
  const auto gs = load_corpus(c);
  std::size_t total = 0;
  for (auto& row : per_graph(gs, c.jobs, [&](const Graph& g) {
         Json primes = Json::array();
         for (const CutSet& t : cut_point_sets(g)) primes.push_back(to_json(prime_of_cutset(g, t)));
         return Json{{"graph", graph_json(g)}, {"minimal_primes", primes}};
       })) {
    total += row["minimal_primes"].size();
    w.line(row);
  }
  w.line(summary_line("primes", {{"graphs", gs.size()}, {"minimal_primes", total}}));
  std::cerr << "primes: " << gs.size() << " graphs, " << total << " minimal primes\n";
  return ok;
}

int run_betti(const RunConfig& c, Writer& w) {
  const auto gs = load_corpus(c);
  for (auto& row : per_graph(gs, c.jobs, [&](const Graph& g) {
         const auto order = TermOrder::for_graph(order_kind(c), g.order());
         Json tables = Json::array();
         if (g.edge_count() > 0)
           for (auto p : c.chars) tables.push_back(to_json(initial_betti_table(g, order, p)));
         return Json{{"graph", graph_json(g)},
                     {"order", c.order},
                     {"initial_ideal", to_string(initial_ideal_of(g, order), g.order())},
                     {"betti", tables}};
       }))
    w.line(row);
  w.line(summary_line("betti", {{"graphs", gs.size()}}));
  std::cerr << "betti: " << gs.size() << " graphs\n";
  return ok;
}

int run_verify_join(const RunConfig& c, Writer& w) {
  detail::Stopwatch clock;
  std::map<int, std::vector<Graph>> cache;
  const auto graphs_on = [&](int n) -> const std::vector<Graph>& {
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, enumerate_small_graphs(n)).first;
    return it->second;
  };
  std::vector<std::pair<Graph, Graph>> pairs;
  if (!c.g1.empty() || !c.g2.empty()) {
    if (c.g1.empty() || c.g2.empty()) throw PreconditionError("give both --g1 and --g2");
    pairs.emplace_back(parse_graph6(c.g1), parse_graph6(c.g2));
  } else {
    for (int n1 = 1; n1 < c.pair_max; ++n1)
      for (int n2 = 1; n1 + n2 <= c.pair_max; ++n2)
        for (const Graph& a : graphs_on(n1))
          for (const Graph& b : graphs_on(n2)) pairs.emplace_back(a, b);
  }
  if (c.random_pairs > 0) {
    std::mt19937 rng(c.seed);
    for (int k = 0; k < c.random_pairs; ++k) {
      const int n1 = std::uniform_int_distribution<int>(1, kOracleMaxVertices - 1)(rng);
      const int n2 = std::uniform_int_distribution<int>(1, kOracleMaxVertices - n1)(rng);
      pairs.emplace_back(random_graph(n1, rng), random_graph(n2, rng));
    }
  }
  VerificationReport total("join-regularity");
  VerificationReport cuts("join-cutsets");
  const auto rows = detail::parallel_map<Json>(pairs.size(), c.jobs, [&](std::size_t i) {
    const auto& [a, b] = pairs[i];
    Json j{{"g1", to_graph6(a)}, {"g2", to_graph6(b)}};
    Json by_char = Json::array();
    for (auto p : c.chars) {
      const auto s = join_regularity_sides(a, b, order_kind(c), p);
      by_char.push_back({{"characteristic", p}, {"joined", reg_json(s.joined)}, {"formula", reg_json(s.expected)}});
    }
    j["regularity"] = by_char;
    if (!is_connected(a) && !is_connected(b)) j["cutsets"] = to_json(verify_join_cutsets(a, b));
    return j;
  });
  for (const auto& j : rows) {
    for (const auto& r : j["regularity"]) {
      ++total.instances;
      if (r["joined"] != r["formula"])
        total.failures.push_back(j["g1"].get<std::string>() + " * " + j["g2"].get<std::string>() + " p=" +
                                 std::to_string(r["characteristic"].get<std::uint32_t>()));
    }
    if (j.contains("cutsets")) {
      ++cuts.instances;
      if (!j["cutsets"]["equal"].get<bool>())
        cuts.failures.push_back(j["g1"].get<std::string>() + " * " + j["g2"].get<std::string>());
    }
    w.line(j);
  }
  total.runtime_seconds = cuts.runtime_seconds = clock.seconds();
  w.line(summary_line("verify-join", {{"regularity", to_json(total)}, {"cutsets", to_json(cuts)}}));
  std::cerr << "verify-join: " << pairs.size() << " pairs, " << total.failures.size() << " regularity failures, "
            << cuts.failures.size() << " cut set failures\n";
  return total.passed() && cuts.passed() ? ok : verification_failed;
}

int run_verify_decomposition(const RunConfig& c, Writer& w) {
  detail::Stopwatch clock;
  const auto gs = load_corpus(c);
  VerificationReport total("primary-decomposition");
  for (auto& row : per_graph(gs, c.jobs, [&](const Graph& g) {
         const auto r = verify_primary_decomposition(
             g, c.max_degree > 0 ? std::optional<int>(c.max_degree) : std::nullopt);
         return Json{{"graph", graph_json(g)}, {"report", to_json(r)}};
       })) {
    ++total.instances;
    if (!row["report"]["passed"].get<bool>()) total.failures.push_back(row["graph"]["graph6"].get<std::string>());
    w.line(row);
  }
  total.runtime_seconds = clock.seconds();
  w.line(summary_line("verify-decomposition", to_json(total)));
  std::cerr << "verify-decomposition: " << total.instances << " graphs, " << total.failures.size() << " failures\n";
  return total.passed() ? ok : verification_failed;
}

int run_check_conjectures(const RunConfig& c, Writer& w) {
  const auto gs = load_corpus(c);
  std::vector<std::string> which = c.which;
  if (which.empty()) which = {"ehh_equality", "sk_cliques", "weakly_closed_ell"};
  SweepOptions opt;
  opt.p = c.chars.front();
  opt.jobs = c.jobs;
  bool unexpected = false;
  Json summary = Json::object();
  for (const auto& name : which) {
    const Conjecture conj = parse_conjecture(name);
    const auto r = verify_conjectures(gs, conj, opt);
    // the weakly closed statement is known to fail (see `counterexample`)
    if (conj != Conjecture::weakly_closed_ell && !r.passed()) unexpected = true;
    w.line({{"conjecture", name}, {"report", to_json(r)}});
    summary[name] = {{"instances", r.instances}, {"failures", r.failures.size()}, {"notes", r.notes.size()}};
    std::cerr << name << ": " << r.instances << " instances, " << r.failures.size() << " failures, "
              << r.notes.size() << " notes\n";
  }
  w.line(summary_line("check-conjectures", summary));
  return unexpected ? verification_failed : ok;
}

int run_census(const RunConfig& c, Writer& w) {
  if (c.enumerate < 1 || c.enumerate > kEnumerateMaxVertices) throw PreconditionError("census needs --n in 1..7");
  const auto gs = enumerate_small_graphs(c.enumerate, c.connected);
  std::map<std::string, int> counts;
  std::vector<std::string> three;
  int mismatches = 0;
  for (auto& row : per_graph(gs, c.jobs, [&](const Graph& g) {
         const auto cls = regularity_class(g);
         const int ini = regularity_initial(g, order_kind(c), c.chars.front());
         const bool agree = cls == RegClass::NoEdges ? ini == kRegNoEdges
                            : cls == RegClass::Two   ? ini == 2
                            : cls == RegClass::Three ? ini == 3
                                                     : ini >= 4;
         Json j{{"graph", graph_json(g)},
                {"class", to_string(cls)},
                {"structural_reg", reg_json(structural_regularity(g).value)},
                {"initial_reg", reg_json(ini)},
                {"agree", agree}};
         if (isolated_vertices(g).empty()) j["cm_gorenstein"] = to_json(classify_cm_gorenstein(g));
         return j;
       })) {
    const auto cls = row["class"].get<std::string>();
    ++counts[cls];
    if (cls == "three") three.push_back(row["graph"]["graph6"].get<std::string>());
    mismatches += !row["agree"].get<bool>();
    w.line(row);
  }
  w.line(summary_line("census", {{"n", c.enumerate},
                                 {"connected_only", c.connected},
                                 {"graphs", gs.size()},
                                 {"classes", counts},
                                 {"class_three", three},
                                 {"oracle_mismatches", mismatches}}));
  std::cerr << "census n=" << c.enumerate << ": " << gs.size() << " graphs\n";
  for (const auto& [k, v] : counts) std::cerr << "  " << k << ": " << v << "\n";
  std::cerr << "  class three: ";
  for (const auto& s : three) std::cerr << s << " ";
  std::cerr << "\n  oracle mismatches: " << mismatches << "\n";
  return mismatches ? verification_failed : ok;
}

int run_counterexample(const RunConfig& c, Writer& w) {
  if (c.q && c.q != static_cast<int>(c.t.size())) throw PreconditionError("--q does not match the length of --t");
  const auto cx = build_counterexample(c.t);
  const auto wc = is_weakly_closed(cx.graph);
  const int ell1 = longest_induced_path_length(cx.graph) + 1;
  const auto s = structural_regularity(cx.graph);
  Json j{{"graph", graph_json(cx.graph)},
         {"t", c.t},
         {"weakly_closed", wc.weakly_closed},
         {"ell_plus_1", ell1},
         {"predicted_reg", cx.predicted_reg},
         {"structural_reg", reg_json(s.value)}};
  bool good = wc.weakly_closed && ell1 == cx.ell_plus_1 && s.value == cx.predicted_reg;
  if (cx.graph.order() <= kOracleMaxVertices) {
    const int ini = regularity_initial(cx.graph, order_kind(c), c.chars.front());
    j["initial_reg"] = ini;
    good = good && ini == cx.predicted_reg;
  } else {
    j["initial_reg"] = nullptr;
  }
  j["conjecture_violated"] = s.value && *s.value != ell1;
  j["as_predicted"] = good;
  w.line(j);
  std::cerr << "counterexample t=(";
  for (std::size_t i = 0; i < c.t.size(); ++i) std::cerr << (i ? "," : "") << c.t[i];
  std::cerr << "): weakly closed " << (wc.weakly_closed ? "yes" : "no") << ", l+1 = " << ell1
            << ", reg = " << reg_to_string(s.value) << ", conjecture "
            << (j["conjecture_violated"].get<bool>() ? "violated" : "holds") << "\n";
  return good ? ok : verification_failed;
}

void add_common(CLI::App* sub, RunConfig& c, bool corpus = true) {
  if (corpus) {
    auto* in = sub->add_option("--input", c.input, "graph6 or edge-list file")->check(CLI::ExistingFile);
    sub->add_option("--enumerate,--n", c.enumerate, "enumerate all graphs on n vertices")
        ->check(CLI::Range(1, kEnumerateMaxVertices))
        ->excludes(in);
    sub->add_flag("--connected", c.connected, "connected graphs only");
  }
  sub->add_option("--order", c.order, "term order")->check(CLI::IsMember({"lex", "degrevlex"}));
  sub->add_option("--char", c.chars, "characteristics, comma separated")->delimiter(',');
  sub->add_option("--max-degree", c.max_degree, "degree cap D");
  sub->add_option("--jobs", c.jobs, "worker threads")->check(CLI::PositiveNumber);
  sub->add_option("--out", c.out, "output file (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regularity of binomial edge ideals: classification and algebraic checks"};
  app.require_subcommand(1);
  RunConfig c;
  struct Cmd {
    const char* name;
    const char* help;
    int (*run)(const RunConfig&, Writer&);
    bool corpus;
  };
  const Cmd cmds[] = {
      {"classify", "regularity class and join certificate per graph", run_classify, true},
      {"reg", "certified regularity per graph", run_reg, true},
      {"primes", "minimal primes P_T for T in C(G)", run_primes, true},
      {"betti", "Betti table of the initial ideal", run_betti, true},
      {"verify-join", "join formula on initial ideals and join cut sets", run_verify_join, false},
      {"verify-decomposition", "prime decomposition in bounded degree", run_verify_decomposition, true},
      {"check-conjectures", "conjecture sweeps over a corpus", run_check_conjectures, true},
      {"census", "class census of all graphs on n vertices", run_census, true},
      {"counterexample", "K1 * (P_t1 + ... + P_tq) against l(G) + 1", run_counterexample, false},
  };
  std::map<std::string, const Cmd*> by_name;
  for (const Cmd& cmd : cmds) {
    auto* sub = app.add_subcommand(cmd.name, cmd.help);
    add_common(sub, c, cmd.corpus);
    by_name[cmd.name] = &cmd;
    if (std::string(cmd.name) == "check-conjectures")
      sub->add_option("--which", c.which, "ehh_equality,sk_cliques,weakly_closed_ell")->delimiter(',');
    if (std::string(cmd.name) == "counterexample") {
      sub->add_option("--q", c.q, "number of paths");
      sub->add_option("--t", c.t, "path sizes, comma separated")->delimiter(',');
    }
    if (std::string(cmd.name) == "verify-join") {
      sub->add_option("--g1", c.g1, "first factor (graph6)");
      sub->add_option("--g2", c.g2, "second factor (graph6)");
      sub->add_option("--pairs-up-to", c.pair_max, "all pairs with n1 + n2 <= N")->check(CLI::Range(2, 8));
      sub->add_option("--random", c.random_pairs, "extra random pairs with n1 + n2 <= 8");
      sub->add_option("--seed", c.seed, "seed for --random");
    }
  }
  CLI11_PARSE(app, argc, argv);

  const auto* sub = app.get_subcommands().front();
  c.command = sub->get_name();
  try {
    if (c.chars.empty()) throw PreconditionError("--char needs at least one prime");
    for (auto p : c.chars) require_prime(p);
    log_message(LogLevel::info, "running " + c.command);
    Writer w(c.out);
    return by_name.at(c.command)->run(c, w);
  } catch (const CapExceeded& e) {
    std::cerr << "bei: cap exceeded: " << e.what() << "\n";
    return cap_exceeded;
  } catch (const ParseError& e) {
    std::cerr << "bei: parse error: " << e.what() << "\n";
    return bad_config;
  } catch (const std::exception& e) {
    std::cerr << "bei: " << e.what() << "\n";
    return bad_config;
  }
}
