#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "skelkit/enumeration.hpp"
#include "skelkit/equivalence.hpp"
#include "skelkit/errors.hpp"
#include "skelkit/formats.hpp"
#include "skelkit/prime_graph.hpp"
#include "skelkit/sep_group.hpp"
#include "skelkit/serialize.hpp"
#include "skelkit/skeleton.hpp"
#include "skelkit/spectral.hpp"

namespace skelkit::cli {
namespace {

using nlohmann::json;

enum class Mode { Human, Json, Dot, Csv };

struct Options {
  std::string input = "-";
  std::string format = "edgelist";
  bool json = false;
  bool dot = false;
  bool csv = false;
  std::size_t n = 0;
  bool skeletons = false;
  std::string perm;

  Mode mode() const {
    if (json) return Mode::Json;
    if (dot) return Mode::Dot;
    if (csv) return Mode::Csv;
    return Mode::Human;
  }
};

[[noreturn]] void unsupported(std::string_view command, Mode mode) {
  const char* name = mode == Mode::Json ? "--json" : mode == Mode::Dot ? "--dot" : "--csv";
  throw ArgumentError(std::string(command) + " does not support " + name);
}

std::string join(const VertexSet& vs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? " " : "") << vs[i];
  return out.str();
}

std::string join_primes(const std::vector<Prime>& ps) {
  std::ostringstream out;
  for (std::size_t i = 0; i < ps.size(); ++i) out << (i ? " " : "") << ps[i];
  return out.str();
}

void print_prime_graph(std::ostream& out, const PrimeGraph& pg) {
  out << "vertices: " << (pg.vertices.empty() ? "(none)" : join_primes(pg.vertices)) << '\n';
  out << "edges:";
  if (pg.edges.empty()) out << " (none)";
  for (const auto& [p, q] : pg.edges) out << ' ' << p << '-' << q;
  out << '\n';
}

class Runner {
 public:
  Runner(const Options& opt, std::istream& in, std::ostream& out) : opt_(opt), in_(in), out_(out) {}

  Graph graph() {
    std::string text;
    if (opt_.input == "-") {
      text.assign(std::istreambuf_iterator<char>(in_), {});
    } else {
      std::ifstream file(opt_.input, std::ios::binary);
      if (!file) throw ArgumentError("cannot open input file '" + opt_.input + "'");
      text.assign(std::istreambuf_iterator<char>(file), {});
    }
    return read_graph(text, opt_.format == "g6" ? InputFormat::Graph6 : InputFormat::EdgeList);
  }

  void classes() {
    const Graph g = graph();
    const Partition p = equivalence_classes(g);
    switch (opt_.mode()) {
      case Mode::Json:
        out_ << json(p).dump() << '\n';
        return;
      case Mode::Dot:
        out_ << partition_dot(g, p);
        return;
      case Mode::Human:
        out_ << p.class_count() << " structural equivalence classes\n";
        for (std::size_t i = 0; i < p.class_count(); ++i) {
          const auto& c = p.classes()[i];
          out_ << "class " << i << " (" << to_string(c.kind) << ", size " << c.size() << "): " << join(c.members)
               << '\n';
        }
        return;
      default:
        unsupported("classes", opt_.mode());
    }
  }

  void sep_order() {
    const SepSignature sig = sep_signature(equivalence_classes(graph()));
    const std::string order = skelkit::sep_order(sig).str();
    switch (opt_.mode()) {
      case Mode::Json: {
        json j = sig;
        j["order"] = order;
        out_ << j.dump() << '\n';
        return;
      }
      case Mode::Human: {
        out_ << "|SEP| = " << order << "  (class sizes";
        for (auto s : sig.sizes) out_ << ' ' << s;
        out_ << ")\n";
        return;
      }
      default:
        unsupported("sep-order", opt_.mode());
    }
  }

  void sep_member() {
    if (opt_.perm.empty()) throw ArgumentError("sep-member requires --perm \"(a b)(c d)\"");
    const Graph g = graph();
    const Partition p = equivalence_classes(g);
    const Permutation sigma = Permutation::from_cycles(opt_.perm, g.order());
    const bool member = contains(p, sigma);
    std::vector<HereditaryWitness> witnesses;
    if (member) witnesses = hereditary_witnesses(p, sigma);
    switch (opt_.mode()) {
      case Mode::Json: {
        json j{{"permutation", sigma.to_string()}, {"member", member}, {"witnesses", json::array()}};
        for (const auto& w : witnesses) j["witnesses"].push_back({{"permutation", w.permutation.to_string()}, {"member", w.member}});
        out_ << j.dump() << '\n';
        return;
      }
      case Mode::Human:
        out_ << sigma.to_string() << (member ? " is in SEP" : " is not in SEP") << '\n';
        for (const auto& w : witnesses) {
          out_ << "  sub-permutation " << w.permutation.to_string() << (w.member ? " is in SEP" : " is NOT in SEP")
               << '\n';
        }
        return;
      default:
        unsupported("sep-member", opt_.mode());
    }
  }

  void skeleton() {
    const Skeleton skel = complete_skeleton(graph());
    switch (opt_.mode()) {
      case Mode::Json:
        out_ << json(skel).dump() << '\n';
        return;
      case Mode::Dot:
        out_ << skeleton_dot(skel);
        return;
      case Mode::Human:
        out_ << skel.node_count() << " super-nodes\n";
        for (std::size_t i = 0; i < skel.node_count(); ++i) {
          out_ << "node " << i << ": K_" << skel.nodes()[i].size << " {" << join(skel.nodes()[i].members) << "}\n";
        }
        out_ << "super-edges:";
        if (skel.edges().empty()) out_ << " (none)";
        for (const auto& [a, b] : skel.edges()) out_ << ' ' << a << '-' << b;
        out_ << '\n';
        return;
      default:
        unsupported("skeleton", opt_.mode());
    }
  }

  void structure() {
    const Graph s = skeleton_structure(graph());
    switch (opt_.mode()) {
      case Mode::Json:
        out_ << json(s).dump() << '\n';
        return;
      case Mode::Dot:
        out_ << to_dot(s, {}, "structure");
        return;
      case Mode::Human: {
        out_ << "structure: " << to_graph6(s);
        if (s.order() <= kCanonicalMaxOrder) {
          if (auto name = structure_name(canonical_form(s))) out_ << " (" << *name << ")";
        }
        out_ << '\n';
        out_ << to_edge_list(s);
        return;
      }
      default:
        unsupported("structure", opt_.mode());
    }
  }

  void primegraph() {
    const PrimeGraph pg = prime_graph_of_sep(sep_signature(equivalence_classes(graph())));
    switch (opt_.mode()) {
      case Mode::Json:
        out_ << json(pg).dump() << '\n';
        return;
      case Mode::Dot:
        out_ << prime_graph_dot(pg);
        return;
      case Mode::Human:
        print_prime_graph(out_, pg);
        return;
      default:
        unsupported("primegraph", opt_.mode());
    }
  }

  void series() {
    const SepSeries s = sep_series(graph());
    switch (opt_.mode()) {
      case Mode::Json:
        out_ << json(s).dump() << '\n';
        return;
      case Mode::Human:
        out_ << "SEP series of length " << s.length() << '\n';
        for (std::size_t i = 0; i < s.length(); ++i) {
          out_ << "step " << i + 1 << ":\n";
          print_prime_graph(out_, s.steps[i]);
        }
        return;
      default:
        unsupported("series", opt_.mode());
    }
  }

  void spectral(std::string_view command) {
    const SpectralReport r = spectral_report(graph());
    if (opt_.mode() == Mode::Json) {
      out_ << json(r).dump() << '\n';
      return;
    }
    if (opt_.mode() != Mode::Human) unsupported(command, opt_.mode());
    if (command == "rank") {
      out_ << "rank(I+A) = " << r.rank_I_plus_A << '\n';
    } else if (command == "lambda") {
      out_ << "Lambda = " << r.lambda << '\n';
    } else if (r.minus_one_multiplicity == 0) {
      out_ << "multiplicity(-1) = 0: -1 is not an eigenvalue\n";
    } else {
      out_ << "multiplicity(-1) = " << r.minus_one_multiplicity << ": -1 is an eigenvalue with multiplicity "
           << r.minus_one_multiplicity << '\n';
    }
  }

  void enumerate() {
    if (opt_.skeletons) {
      print_entries(enumerate_skeleton_structures(opt_.n), "enumerate");
      return;
    }
    const auto forms = enumerate_graphs(opt_.n);
    switch (opt_.mode()) {
      case Mode::Json: {
        json j = json::array();
        for (const auto& f : forms) j.push_back(f.graph6());
        out_ << j.dump() << '\n';
        return;
      }
      case Mode::Csv:
        out_ << "graph6\n";
        [[fallthrough]];
      case Mode::Human:
        for (const auto& f : forms) out_ << f.graph6() << '\n';
        return;
      default:
        unsupported("enumerate", opt_.mode());
    }
  }

  void catalog() {
    const auto by_rank = rank_catalog(opt_.n);
    switch (opt_.mode()) {
      case Mode::Json: {
        json j = json::object();
        for (const auto& [rank, entries] : by_rank) j[std::to_string(rank)] = entries;
        out_ << j.dump() << '\n';
        return;
      }
      case Mode::Csv: {
        std::vector<CatalogEntry> all;
        for (const auto& [rank, entries] : by_rank) all.insert(all.end(), entries.begin(), entries.end());
        out_ << catalog_csv(all);
        return;
      }
      case Mode::Human:
        for (const auto& [rank, entries] : by_rank) {
          out_ << "rank " << rank << ':';
          for (std::size_t i = 0; i < entries.size(); ++i) out_ << (i ? ", " : " ") << entries[i].display_name();
          out_ << '\n';
        }
        return;
      default:
        unsupported("catalog", opt_.mode());
    }
  }

 private:
  void print_entries(const std::vector<CatalogEntry>& entries, std::string_view command) {
    switch (opt_.mode()) {
      case Mode::Json:
        out_ << json(entries).dump() << '\n';
        return;
      case Mode::Csv:
        out_ << catalog_csv(entries);
        return;
      case Mode::Human:
        for (const auto& e : entries) {
          out_ << e.form.graph6() << ' ' << e.display_name() << " rank=" << e.rank_I_plus_A << " lambda=" << e.lambda
               << '\n';
        }
        return;
      default:
        unsupported(command, opt_.mode());
    }
  }

  const Options& opt_;
  std::istream& in_;
  std::ostream& out_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Structural equivalence, complete skeletons and the -1 eigenvalue of simple graphs", "skelkit"};
  app.require_subcommand(1);
  Options opt;

  auto add_output = [&opt](CLI::App* sub) {
    auto* j = sub->add_flag("--json", opt.json, "JSON output");
    auto* d = sub->add_flag("--dot", opt.dot, "Graphviz output");
    auto* c = sub->add_flag("--csv", opt.csv, "CSV output");
    j->excludes(d)->excludes(c);
    d->excludes(c);
  };
  auto add_graph_input = [&opt, &add_output](CLI::App* sub) {
    sub->add_option("input", opt.input, "Graph file, '-' or omitted for stdin");
    sub->add_option("--format", opt.format, "Input format")->check(CLI::IsMember({"edgelist", "g6"}));
    add_output(sub);
  };

  std::vector<std::pair<CLI::App*, std::function<void(Runner&)>>> commands;
  auto graph_command = [&](const std::string& name, const std::string& help, std::function<void(Runner&)> action) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_graph_input(sub);
    commands.emplace_back(sub, std::move(action));
    return sub;
  };

  graph_command("classes", "Structural equivalence classes", [](Runner& r) { r.classes(); });
  graph_command("sep-order", "Order of the SEP group", [](Runner& r) { r.sep_order(); });
  graph_command("sep-member", "Membership of a permutation in the SEP group", [](Runner& r) { r.sep_member(); })
      ->add_option("--perm", opt.perm, "Permutation in cycle notation, e.g. \"(3 4)(1 2)\"")
      ->required();
  graph_command("skeleton", "Complete skeleton", [](Runner& r) { r.skeleton(); });
  graph_command("structure", "Structure of the complete skeleton", [](Runner& r) { r.structure(); });
  graph_command("primegraph", "Prime graph of the SEP group", [](Runner& r) { r.primegraph(); });
  graph_command("series", "SEP series down to its minimal element", [](Runner& r) { r.series(); });
  graph_command("rank", "rank(I + A) over the rationals", [](Runner& r) { r.spectral("rank"); });
  graph_command("multiplicity", "Multiplicity of the -1 eigenvalue", [](Runner& r) { r.spectral("multiplicity"); });
  graph_command("lambda", "Correction term Lambda of the skeleton structure", [](Runner& r) { r.spectral("lambda"); });

  CLI::App* enumerate = app.add_subcommand("enumerate", "Non-isomorphic graphs on n vertices");
  enumerate->add_option("-n", opt.n, "Vertex count")->required();
  enumerate->add_flag("--skeletons", opt.skeletons, "Only skeleton structures, with rank and Lambda");
  add_output(enumerate);
  commands.emplace_back(enumerate, [](Runner& r) { r.enumerate(); });

  CLI::App* catalog = app.add_subcommand("catalog", "Skeleton structures on up to n vertices grouped by rank");
  catalog->add_option("-n", opt.n, "Largest vertex count")->required();
  add_output(catalog);
  commands.emplace_back(catalog, [](Runner& r) { r.catalog(); });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "skelkit: " << e.what() << '\n';
    return kUsage;
  }

  try {
    Runner runner(opt, in, out);
    for (auto& [sub, action] : commands) {
      if (sub->parsed()) action(runner);
    }
    return kOk;
  } catch (const CapacityError& e) {
    err << "skelkit: capacity: " << e.what() << '\n';
    return kCapacity;
  } catch (const ParseError& e) {
    err << "skelkit: parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const ArgumentError& e) {
    err << "skelkit: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "skelkit: internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace skelkit::cli
