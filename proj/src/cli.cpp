#include "simembed/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "simembed/generate.hpp"
#include "simembed/io.hpp"
#include "simembed/mapped.hpp"
#include "simembed/svg.hpp"
#include "simembed/unmapped.hpp"

namespace simembed {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

bool is(const Layer& l, LayerClass c) { return l.clazz == c; }

std::string combination(const LayeredInstance& inst) {
  std::string s = std::string("mapping=") + to_string(inst.mapping) + ", layers=[";
  for (std::size_t i = 0; i < inst.layers.size(); ++i) s += (i ? "," : "") + std::string(to_string(inst.layers[i].clazz));
  return s + "]";
}

EmbedOutcome embed_given(const LayeredInstance& inst) {
  const int n = inst.n;
  const Coord N = n;
  if (std::any_of(inst.layers.begin(), inst.layers.end(), [](const Layer& l) { return is(l, LayerClass::kPlanar); })) {
    throw UnsupportedCombinationError(
        "planar layers with a given vertex mapping cannot be embedded simultaneously in general (there are pairs of "
        "planar graphs with no such drawing); " + combination(inst) + " is unsupported.\n" + supported_combinations());
  }
  if (inst.layers.size() != 2) throw UnsupportedCombinationError(combination(inst) + " is unsupported.\n" + supported_combinations());
  const Layer& a = inst.layers[0];
  const Layer& b = inst.layers[1];
  auto tree_like = [](const Layer& l) { return is(l, LayerClass::kPath) || is(l, LayerClass::kCaterpillar); };
  if (!tree_like(a) || !tree_like(b)) {
    throw UnsupportedCombinationError(combination(inst) + " is unsupported.\n" + supported_combinations());
  }

  EmbedOutcome out;
  if (is(a, LayerClass::kPath) && is(b, LayerClass::kPath)) {
    out.embedding = embed_two_paths(as_path(a, n), as_path(b, n));
    out.bounds = {N, N};
    out.method = "two-paths";
  } else if (is(a, LayerClass::kPath) || is(b, LayerClass::kPath)) {
    const bool path_first = is(a, LayerClass::kPath);
    const Layer& p = path_first ? a : b;
    const Caterpillar c = caterpillar_decompose(path_first ? b : a, n);
    auto r = embed_path_caterpillar(as_path(p, n), c);
    out.embedding = std::move(r.embedding);
    out.bounds = {2 * N - static_cast<Coord>(c.leg_count()), N};
    out.method = "path-caterpillar";
  } else {
    out.embedding = embed_two_caterpillars(caterpillar_decompose(a, n), caterpillar_decompose(b, n));
    out.bounds = {N * (2 * N + 1), N * (2 * N * N + 1)};
    out.method = "two-caterpillars";
  }
  return out;
}

EmbedOutcome embed_free(const LayeredInstance& inst) {
  const int n = inst.n;
  EmbedOutcome out;
  const auto& ls = inst.layers;
  const bool all_outer =
      !ls.empty() && std::all_of(ls.begin(), ls.end(), [](const Layer& l) { return is(l, LayerClass::kOuterplanar); });
  if (all_outer) {
    out.embedding = simul_embed_outerplanars(ls, n);
    out.bounds = {out.embedding.width, out.embedding.height};
    out.method = "outerplanars-on-parabola";
    return out;
  }
  if (ls.size() == 2) {
    const bool planar_first = is(ls[0], LayerClass::kPlanar) && is(ls[1], LayerClass::kOuterplanar);
    const bool planar_second = is(ls[1], LayerClass::kPlanar) && is(ls[0], LayerClass::kOuterplanar);
    if (planar_first || planar_second) {
      const Layer& plane = planar_first ? ls[0] : ls[1];
      const Layer& outer = planar_first ? ls[1] : ls[0];
      out.embedding = simul_embed_planar_outerplanar(plane, outer, n);
      if (planar_second) std::swap((*out.embedding.assignments)[0], (*out.embedding.assignments)[1]);
      const auto b = general_position_bounds(n);
      out.bounds = {b.width, b.height};
      out.method = "planar-outerplanar";
      return out;
    }
  }
  throw UnsupportedCombinationError(combination(inst) + " is unsupported.\n" + supported_combinations());
}

std::string read_all(const std::string& path, std::istream& in) {
  std::ostringstream ss;
  if (path == "-") {
    ss << in.rdbuf();
  } else {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot open " + path);
    ss << f.rdbuf();
  }
  return ss.str();
}

void write_all(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw UsageError("cannot write " + path);
}

std::optional<Bounds> parse_bounds(const std::string& s) {
  if (s.empty()) return std::nullopt;
  const auto x = s.find('x');
  try {
    if (x == std::string::npos) throw std::invalid_argument(s);
    std::size_t used = 0;
    const Coord w = std::stoll(s.substr(0, x), &used);
    if (used != x) throw std::invalid_argument(s);
    const Coord h = std::stoll(s.substr(x + 1), &used);
    if (used != s.size() - x - 1 || w < 1 || h < 1) throw std::invalid_argument(s);
    return Bounds{w, h};
  } catch (const std::logic_error&) {
    throw UsageError("--bounds expects WxH with positive integers, got \"" + s + "\"");
  }
}

std::uint64_t default_seed() {
  if (const char* s = std::getenv("SIMEMBED_SEED")) {
    try {
      return std::stoull(s);
    } catch (const std::logic_error&) {
      throw UsageError("SIMEMBED_SEED is not an unsigned integer");
    }
  }
  return 1;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream ss(s);
  while (std::getline(ss, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

std::string report_line(const CertificateReport& r) {
  if (r.ok) return "certificate ok";
  std::string s = "certificate FAILED:";
  for (const auto& v : r.violations) {
    s += std::string(" ") + to_string(v.kind) + "[";
    for (std::size_t i = 0; i < v.witness.size(); ++i) s += (i ? "," : "") + std::to_string(v.witness[i]);
    s += "]";
  }
  return s;
}

struct Options {
  std::string in = "-";
  std::string out = "-";
  std::string svg;
  std::string instance;
  std::string bounds;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string kind;
  int n = 0;
  int count = 1;
  std::string mapping;
  std::string paths;
  Coord grid = 5;
  int threads = 0;
  std::uint64_t samples = 0;
};

int run_embed(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const LayeredInstance inst = parse_instance(read_all(o.in, in));
  EmbedOutcome r;
  try {
    r = embed_instance(inst);
  } catch (const UnsupportedCombinationError& e) {
    err << "embed: " << e.what() << "\n";
    return 2;
  }
  if (auto b = parse_bounds(o.bounds)) r.certificate.merge(certify_bounds(r.embedding, b->width, b->height));
  write_all(o.out, serialize_result(make_result(r.embedding, r.certificate)), out);
  if (!o.svg.empty()) write_all(o.svg, render_svg(r.embedding, {}, inst.vertex_labels), out);
  err << r.method << ": " << r.bounds.width << "x" << r.bounds.height << " grid, " << report_line(r.certificate) << "\n";
  return r.certificate.ok ? 0 : 2;
}

LayeredInstance instance_for(const Options& o, std::istream& in, const char* cmd) {
  if (o.instance.empty()) throw UsageError(std::string(cmd) + " needs --instance (the layers are not stored in results)");
  if (o.instance == "-" && o.in == "-") throw UsageError("--in and --instance cannot both read stdin");
  return parse_instance(read_all(o.instance, in));
}

int run_certify(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const ResultDocument doc = parse_result(read_all(o.in, in));
  const LayeredInstance inst = instance_for(o, in, "certify");
  const SimultaneousEmbedding e = to_embedding(doc, inst);
  // Without --bounds the document's own width and height are the bound.
  const Bounds bounds = parse_bounds(o.bounds).value_or(Bounds{doc.width, doc.height});
  const CertificateReport rep = certify_embedding(e, inst, bounds);
  if (rep != doc.certificate) err << "certify: recomputed certificate differs from the stored one\n";
  ResultDocument fresh = doc;
  fresh.certificate = rep;
  write_all(o.out, serialize_result(fresh), out);
  err << report_line(rep) << "\n";
  return rep.ok ? 0 : 2;
}

int run_render(const Options& o, std::istream& in, std::ostream& out, std::ostream&) {
  const ResultDocument doc = parse_result(read_all(o.in, in));
  const LayeredInstance inst = instance_for(o, in, "render");
  const SimultaneousEmbedding e = to_embedding(doc, inst);
  if (e.coords.size() != static_cast<std::size_t>(inst.n) && inst.mapping == MappingMode::kGiven) {
    throw InputMismatchError("result has " + std::to_string(e.coords.size()) + " points for " + std::to_string(inst.n) + " vertices");
  }
  const std::vector<std::string> labels = inst.mapping == MappingMode::kGiven ? inst.vertex_labels : std::vector<std::string>{};
  write_all(o.svg.empty() ? o.out : o.svg, render_svg(e, {}, labels), out);
  return 0;
}

int run_gen(const Options& o, std::ostream& out) {
  const auto kinds = split(o.kind, ',');
  if (kinds.empty()) throw UsageError("gen needs --kind");
  if (o.count < 1) throw UsageError("--count must be positive");
  LayeredInstance inst;
  inst.n = o.n;
  bool free = false;
  for (int i = 0; i < o.count; ++i) {
    for (const auto& k : kinds) {
      auto kind = gen_kind_from_string(k);
      if (!kind) throw UsageError("unknown kind \"" + k + "\" (path, caterpillar, maximal-outerplanar, plane-triangulation)");
      free = free || *kind == GenKind::kMaximalOuterplanar || *kind == GenKind::kPlaneTriangulation;
      inst.layers.push_back(generate(*kind, o.n, o.seed + inst.layers.size()));
    }
  }
  if (o.mapping.empty()) inst.mapping = free ? MappingMode::kFree : MappingMode::kGiven;
  else if (o.mapping == "given") inst.mapping = MappingMode::kGiven;
  else if (o.mapping == "free") inst.mapping = MappingMode::kFree;
  else throw UsageError("--mapping must be given or free");
  write_all(o.out, serialize_instance(inst), out);
  return 0;
}

int run_fivepaths(const Options& o, std::ostream& out) {
  std::vector<PathOrder> paths;
  if (o.paths.empty()) {
    paths = standard_five_paths();
  } else {
    for (const auto& d : split(o.paths, ',')) paths.push_back(path_from_digits(d));
  }
  auto digits = [](const PathOrder& p) {
    std::string s;
    for (Vertex v : p.order) s += static_cast<char>('1' + v);
    return s;
  };
  const PairCoverage cov = five_path_pair_coverage(paths);
  std::ostringstream rep;
  rep << "pair coverage: " << cov.covered_count() << "/15\n";
  for (std::size_t i = 0; i < paths.size(); ++i) {
    rep << "path " << digits(paths[i]) << ":";
    for (int k : cov.pairs_of(static_cast<int>(i))) rep << ' ' << to_string(cov.pairs[static_cast<std::size_t>(k)]);
    rep << "\n";
  }
  for (std::size_t k = 0; k < cov.pairs.size(); ++k)
    if (cov.covered_by[k].empty()) rep << "uncovered pair: " << to_string(cov.pairs[k]) << "\n";

  FivePointSearch search;
  search.grid_width = search.grid_height = o.grid;
  search.threads = o.threads;
  search.samples = o.samples;
  search.seed = o.seed;
  const FivePointVerdict v = exhaustive_five_point_check(paths, search);
  rep << "grid " << o.grid << "x" << o.grid << (v.exhaustive ? " exhaustive" : " sampled") << " search, " << v.nodes
      << " nodes: ";
  if (v.vacuous()) {
    rep << "vacuous, no 5 grid points are in general position\n";
  } else if (v.counterexample) {
    rep << "counterexample";
    for (std::size_t i = 0; i < 5; ++i) rep << " v" << i + 1 << "(" << (*v.counterexample)[i].x << "," << (*v.counterexample)[i].y << ")";
    rep << "\n";
  } else {
    rep << "no counterexample\n";
  }
  write_all(o.out, rep.str(), out);
  return v.counterexample ? 2 : 0;
}

}  // namespace

std::string supported_combinations() {
  return "supported combinations:\n"
         "  mapping=given: path+path, path+caterpillar (either order), caterpillar+caterpillar\n"
         "  mapping=free:  k outerplanar layers (k >= 1), planar+outerplanar (either order)";
}

EmbedOutcome embed_instance(const LayeredInstance& inst) {
  validate_instance(inst);
  EmbedOutcome out = inst.mapping == MappingMode::kGiven ? embed_given(inst) : embed_free(inst);
  out.embedding.layers.clear();
  for (const auto& l : inst.layers) out.embedding.layers.push_back(l.edges);
  out.embedding.width = out.bounds.width;
  out.embedding.height = out.bounds.height;
  out.certificate = certify_embedding(out.embedding, inst, out.bounds);
  return out;
}

int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simultaneous embeddings of layered graphs on small integer grids", "simembed"};
  app.require_subcommand(1);
  Options o;

  auto add_io = [&o](CLI::App* c) {
    c->add_option("--in", o.in, "input document, - for stdin")->capture_default_str();
    c->add_option("--out", o.out, "output file, - for stdout")->capture_default_str();
  };
  auto add_seed = [&o](CLI::App* c) {
    c->add_option("--seed", o.seed, "random seed (default: $SIMEMBED_SEED or 1)")->each([&o](const std::string&) { o.seed_given = true; });
  };

  CLI::App* embed = app.add_subcommand("embed", "embed an instance document and certify the drawing");
  add_io(embed);
  embed->add_option("--svg", o.svg, "also render the drawing to this SVG file");
  embed->add_option("--bounds", o.bounds, "additionally require the drawing to fit WxH");

  CLI::App* certify = app.add_subcommand("certify", "re-check a result document against its instance");
  add_io(certify);
  certify->add_option("--instance", o.instance, "instance document the result was computed for")->required();
  certify->add_option("--bounds", o.bounds, "grid to check against (default: the document's width x height)");

  CLI::App* render = app.add_subcommand("render", "draw a result document as SVG");
  add_io(render);
  render->add_option("--instance", o.instance, "instance document the result was computed for")->required();
  render->add_option("--svg", o.svg, "SVG output (overrides --out)");

  CLI::App* gen = app.add_subcommand("gen", "generate a random instance document");
  gen->add_option("--out", o.out, "output file, - for stdout")->capture_default_str();
  gen->add_option("--kind", o.kind, "comma-separated layer kinds: path, caterpillar, maximal-outerplanar, plane-triangulation")
      ->required();
  gen->add_option("--n", o.n, "vertex count")->required()->check(CLI::NonNegativeNumber);
  gen->add_option("--count", o.count, "repeat the kind list this many times")->capture_default_str();
  gen->add_option("--mapping", o.mapping, "given or free (default: from the kinds)");
  add_seed(gen);

  CLI::App* five = app.add_subcommand("fivepaths", "pair coverage and small-grid search for five paths on K5");
  five->add_option("--out", o.out, "report file, - for stdout")->capture_default_str();
  five->add_option("--paths", o.paths, "comma-separated 1-based digit strings (default: 12345,13542,25134,32415,35214)");
  five->add_option("--grid", o.grid, "grid side g; points lie in [0,g)^2")->capture_default_str()->check(CLI::Range(Coord{1}, Coord{1} << 20));
  five->add_option("--threads", o.threads, "worker threads, 0 = all cores")->capture_default_str();
  five->add_option("--samples", o.samples, "random placements to draw when g exceeds the exhaustive limit");
  add_seed(five);

  try {
    std::vector<std::string> rev(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(rev.begin(), rev.end());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (!o.seed_given) o.seed = default_seed();
    if (*embed) return run_embed(o, in, out, err);
    if (*certify) return run_certify(o, in, out, err);
    if (*render) return run_render(o, in, out, err);
    if (*gen) return run_gen(o, out);
    if (*five) return run_fivepaths(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

int cli_main(const std::vector<std::string>& args) { return cli_main(args, std::cin, std::cout, std::cerr); }

}  // namespace simembed
