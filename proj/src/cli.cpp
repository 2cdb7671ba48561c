#include "cubefold/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>

#include "cubefold/cubulation.hpp"
#include "cubefold/equivariance.hpp"
#include "cubefold/factorize.hpp"
#include "cubefold/fold.hpp"
#include "cubefold/io.hpp"
#include "cubefold/median.hpp"
#include "cubefold/swell.hpp"

namespace cubefold {

namespace {

std::string pair_text(HyperplaneId a, HyperplaneId b) {
  return hyperplane_label(a) + ":" + hyperplane_label(b);
}

PPMap load_map(const Graph& dom, const Graph& cod, const std::string& path) {
  return map_from_ids(dom, cod, read_map(path).pairs);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) fail(ErrorKind::ParseError, "cannot write " + path);
  f << text;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Median graph folds, swells and factorizations", "cubefold"};
  app.require_subcommand(1);
  std::function<void()> action;

  std::string graph_path, dom_path, cod_path, map_path, pairs_text, trace_path, dot_dir;
  std::string group_path, cogroup_path, mode_text = "median", highlight, output;
  std::vector<std::string> ids;
  bool submedian = false, want_median = false, want_convex = false;

  auto* check = app.add_subcommand("check", "Median test with diagnostics");
  check->add_option("graph", graph_path)->required();
  check->add_flag("--submedian", submedian, "Also print the submedian certificate");
  check->callback([&] {
    action = [&] {
      auto g = read_graph(graph_path);
      out << describe(g, is_median(g)) << '\n';
      if (submedian) {
        auto c = submedian_certificate(g);
        out << "parity-injective: " << (c.parity_injective ? "true" : "false") << '\n';
        out << "squares-span-cycles: " << (c.squares_span_cycles ? "true" : "false") << " ("
            << c.square_rank << "/" << c.cycle_rank << ")\n";
      }
    };
  });

  auto* hyp = app.add_subcommand("hyperplanes", "List parallelism classes");
  hyp->add_option("graph", graph_path)->required();
  hyp->callback([&] { action = [&] { out << format_hyperplanes(read_graph(graph_path)); }; });

  auto* med = app.add_subcommand("median", "Median of three vertices");
  med->add_option("graph", graph_path)->required();
  med->add_option("vertices", ids)->required()->expected(3);
  med->callback([&] {
    action = [&] {
      auto g = read_graph(graph_path);
      auto m = median(g, g.at(ids[0]), g.at(ids[1]), g.at(ids[2]));
      out << (m ? g.id(*m) : std::string("none")) << '\n';
    };
  });

  auto* hull = app.add_subcommand("hull", "Median or convex hull of a vertex set");
  auto* hull_kind = hull->add_option_group("kind");
  hull_kind->add_flag("--median", want_median);
  hull_kind->add_flag("--convex", want_convex);
  hull_kind->require_option(1);
  hull->add_option("graph", graph_path)->required();
  hull->add_option("vertices", ids)->required();
  hull->callback([&] {
    action = [&] {
      auto g = read_graph(graph_path);
      VertexSet s;
      for (const auto& id : ids) s.push_back(g.at(id));
      out << format_set(g, want_median ? median_hull(g, s) : convex_hull(g, s)) << '\n';
    };
  });

  auto* cub = app.add_subcommand("cubulate", "Cubulate the hyperplane wallspace");
  cub->add_option("graph", graph_path)->required();
  cub->callback([&] {
    action = [&] {
      auto g = read_graph(graph_path);
      auto c = cubulate(walls_from_hyperplanes(g));
      out << format_graph(c.graph);
      out << "map eta\n";
      for (std::size_t v = 0; v < g.order(); ++v)
        out << "m " << g.id(Vertex(v)) << ' ' << c.graph.id(c.eta[v]) << '\n';
    };
  });

  auto* fold = app.add_subcommand("fold", "Fold hyperplane pairs");
  fold->add_option("--pairs", pairs_text, "A:B[,C:D...]")->required();
  fold->add_option("graph", graph_path)->required();
  fold->callback([&] {
    action = [&] {
      auto g = read_graph(graph_path);
      auto pairs = parse_pairs(g, pairs_text);
      auto fr = pairs.size() == 1 ? fold_pair(g, pairs[0].first, pairs[0].second)
                                  : fold_collection(g, pairs);
      out << format_graph(fr.target) << format_map(fr.zeta, "zeta");
      for (const auto& cls : fr.merged_classes) {
        if (cls.size() < 2) continue;
        out << "merged {";
        for (std::size_t i = 0; i < cls.size(); ++i) out << (i ? "," : "") << hyperplane_label(cls[i]);
        out << "} -> " << hyperplane_label(fr.zeta.hyperplane(cls[0])) << '\n';
      }
    };
  });

  auto* swell = app.add_subcommand("swell", "Swell tangent hyperplane pairs");
  swell->add_option("--pairs", pairs_text, "A:B[,C:D...]")->required();
  swell->add_option("graph", graph_path)->required();
  swell->callback([&] {
    action = [&] {
      auto g = read_graph(graph_path);
      auto pairs = normalize_pairs(g, parse_pairs(g, pairs_text));
      auto sr = pairs.size() == 1 && hyperplanes(g).relation(pairs[0].first, pairs[0].second).kind ==
                                         RelationKind::Tangent
                    ? swell_pair(g, pairs[0].first, pairs[0].second)
                    : swell_collection(g, pairs);
      out << format_graph(sr.target) << format_map(sr.embedding, "embedding");
      for (auto [a, b] : sr.new_transversal_pairs) out << "transverse " << pair_text(a, b) << '\n';
    };
  });

  auto* cls = app.add_subcommand("classify", "Classify a vertex map");
  cls->add_option("domain", dom_path)->required();
  cls->add_option("codomain", cod_path)->required();
  cls->add_option("map", map_path)->required();
  cls->callback([&] {
    action = [&] {
      auto dom = read_graph(dom_path);
      auto cod = read_graph(cod_path);
      auto file = read_map(map_path);
      std::vector<Vertex> f(dom.order(), -1);
      for (const auto& [a, b] : file.pairs) f[dom.at(a)] = cod.at(b);
      for (std::size_t v = 0; v < f.size(); ++v)
        if (f[v] < 0) fail(ErrorKind::ParseError, "vertex " + dom.id(Vertex(v)) + " has no image");
      auto c = classify(dom, cod, f);
      out << "class: " << map_kind_name(c.kind) << '\n';
      if (c.witness) out << "witness: " << pair_text(c.witness->first, c.witness->second) << '\n';
      if (!c.detail.empty()) out << "detail: " << c.detail << '\n';
    };
  });

  auto* fac = app.add_subcommand("factorize", "Factor a map into folds and swells");
  fac->add_option("--mode", mode_text)->check(CLI::IsMember({"median", "convex"}));
  fac->add_option("--trace", trace_path);
  fac->add_option("--emit-dot", dot_dir);
  auto* g_opt = fac->add_option("--group", group_path);
  auto* h_opt = fac->add_option("--cogroup", cogroup_path);
  g_opt->needs(h_opt);
  h_opt->needs(g_opt);
  fac->add_option("domain", dom_path)->required();
  fac->add_option("codomain", cod_path)->required();
  fac->add_option("map", map_path)->required();
  fac->callback([&] {
    action = [&] {
      auto dom = read_graph(dom_path);
      auto cod = read_graph(cod_path);
      auto psi = load_map(dom, cod, map_path);
      Mode mode = mode_text == "convex" ? Mode::ConvexHull : Mode::MedianHull;
      FactorizationTrace t;
      if (!group_path.empty()) {
        auto G = group_from_ids(dom, read_group(group_path));
        auto H = group_from_ids(cod, read_group(cogroup_path));
        t = factorize_equivariant(psi, G, H, mode);
      } else {
        t = factorize(psi, mode);
      }
      for (std::size_t k = 0; k < t.moves.size(); ++k)
        out << "move " << k + 1 << ' ' << move_name(t.moves[k].kind) << ' '
            << format_pairs(t.moves[k].pairs) << '\n';
      const Graph& z = t.iota.domain();
      out << "terminal: " << z.order() << " vertices, " << z.size() << " edges\n";
      out << "iota: " << map_kind_name(classify(t.iota).kind) << '\n';
      if (!trace_path.empty()) write_file(trace_path, format_trace(t));
      if (!dot_dir.empty()) {
        std::filesystem::create_directories(dot_dir);
        const auto dir = std::filesystem::path(dot_dir);
        for (std::size_t k = 0; k < t.moves.size(); ++k) {
          auto name = "step" + std::to_string(k + 1);
          write_file((dir / (name + ".dot")).string(), export_dot(t.moves[k].after.renamed(name)));
        }
        write_file((dir / "terminal.dot").string(), export_dot(z.renamed("terminal")));
      }
    };
  });

  auto* orb = app.add_subcommand("orbit", "Orbit of hyperplane pairs under a group");
  orb->add_option("--group", group_path)->required();
  orb->add_option("--pairs", pairs_text)->required();
  orb->add_option("graph", graph_path)->required();
  orb->callback([&] {
    action = [&] {
      auto g = read_graph(graph_path);
      auto G = group_from_ids(g, read_group(group_path));
      out << "order: " << G.elements.size() << '\n';
      out << "orbit: " << format_pairs(orbit_of_pairs(G, parse_pairs(g, pairs_text))) << '\n';
    };
  });

  auto* dot = app.add_subcommand("export-dot", "Write DOT text");
  dot->add_option("--highlight", highlight);
  dot->add_option("-o,--output", output);
  dot->add_option("graph", graph_path)->required();
  dot->callback([&] {
    action = [&] {
      auto g = read_graph(graph_path);
      std::optional<HyperplaneId> h;
      if (!highlight.empty()) h = parse_hyperplane(hyperplanes(g), highlight);
      auto text = export_dot(g, h);
      if (output.empty()) out << text;
      else write_file(output, text);
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  try {
    if (action) action();
  } catch (const Error& e) {
    err << e.name() << ": " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "InternalError: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace cubefold
