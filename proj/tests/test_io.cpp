#include <doctest.h>

#include <regex>

#include "oracles.hpp"
#include "simembed/error.hpp"
#include "simembed/generate.hpp"
#include "simembed/io.hpp"
#include "simembed/mapped.hpp"
#include "simembed/svg.hpp"
#include "simembed/unmapped.hpp"

using namespace simembed;

namespace {

std::size_t count(const std::string& s, const std::string& what) {
  std::size_t n = 0;
  for (auto at = s.find(what); at != std::string::npos; at = s.find(what, at + 1)) ++n;
  return n;
}

// Contents of every layer group, in document order.
std::vector<std::string> groups(const std::string& svg) {
  std::vector<std::string> out;
  const std::regex g(R"re(<g id="layer-\d+"[^>]*>([\s\S]*?)</g>)re");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), g); it != std::sregex_iterator(); ++it) out.push_back((*it)[1]);
  return out;
}

std::string where_of(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const ParseError& e) {
    return e.where();
  }
  return "<none>";
}

LayeredInstance random_instance(std::mt19937_64& rng) {
  LayeredInstance inst;
  inst.n = 3 + static_cast<int>(draw_below(rng, 20));
  const int layers = 1 + static_cast<int>(draw_below(rng, 4));
  for (int i = 0; i < layers; ++i)
    inst.layers.push_back(generate(static_cast<GenKind>(draw_below(rng, 4)), inst.n, rng()));
  inst.mapping = draw_below(rng, 2) ? MappingMode::kFree : MappingMode::kGiven;
  if (draw_below(rng, 3) == 0)
    for (int v = 0; v < inst.n; ++v) inst.vertex_labels.push_back("v\"" + std::to_string(v) + "\\");
  return inst;
}

}  // namespace

TEST_CASE("parse a minimal two-path document") {
  const auto inst = parse_instance(R"({"n":3,"mapping":"given","layers":[
      {"class":"path","edges":[[0,1],[1,2]]},{"class":"path","edges":[[1,0],[0,2]]}]})");
  CHECK(inst.n == 3);
  CHECK(inst.mapping == MappingMode::kGiven);
  REQUIRE(inst.layers.size() == 2);
  CHECK(inst.layers[1].clazz == LayerClass::kPath);
  CHECK(inst.layers[1].edges == EdgeList{{1, 0}, {0, 2}});
}

TEST_CASE("parse errors carry a position") {
  CHECK(where_of(R"({"n":3,"mapping":"free","layers":[{"class":"planar","edges":[[0,1]]}]})") == "layers[0]");
  CHECK(where_of(R"({"n":3,"mapping":"given","layers":[],"extra":1})") == "extra");
  CHECK(where_of(R"({"n":3,"mapping":"given","layers":[{"class":"path","edges":[],"colour":"red"}]})") == "layers[0].colour");
  CHECK(where_of(R"({"n":3,"mapping":"given","layers":[{"class":"tree","edges":[]}]})") == "layers[0].class");
  CHECK(where_of(R"({"n":3,"mapping":"given","layers":[{"class":"path","edges":[[0,1,2]]}]})") == "layers[0].edges[0]");
  CHECK(where_of(R"({"n":3,"mapping":"given","layers":[{"class":"path","edges":[[0,0]]}]})") == "layers[0]");
  CHECK(where_of(R"({"n":3,"mapping":"given","layers":[{"class":"path","edges":[[0,1],[1,0]]}]})") == "layers[0]");
  CHECK(where_of(R"({"n":3,"mapping":"sometimes","layers":[]})") == "mapping");
  CHECK(where_of(R"({"mapping":"given","layers":[]})") == "n");
  CHECK(where_of(R"({"n":2,"mapping":"given","layers":[],"labels":["a"]})") == "$");
  CHECK(where_of(R"({"n":3,)").rfind("byte ", 0) == 0);
}

TEST_CASE("instance documents round-trip") {
  std::mt19937_64 rng(40);
  for (int t = 0; t < 100; ++t) {
    const auto inst = random_instance(rng);
    const std::string text = serialize_instance(inst);
    const auto back = parse_instance(text);
    CHECK(back == inst);
    CHECK(serialize_instance(back) == text);
  }
}

TEST_CASE("result documents round-trip") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 50; ++t) {
    ResultDocument doc;
    const int n = 1 + static_cast<int>(draw_below(rng, 10));
    for (int i = 0; i < n; ++i)
      doc.coords.push_back({static_cast<Coord>(rng() % (1ull << 40)) - (Coord{1} << 39), static_cast<Coord>(rng() % 1000)});
    doc.width = static_cast<Coord>(rng() % (1ull << 40));
    doc.height = 7;
    if (t % 2) doc.assignments = PointAssignment{random_permutation(n, rng), random_permutation(n, rng)};
    if (t % 3 == 0) {
      doc.certificate.add({ViolationKind::kLayerCrossing, {0, 1, 2}});
      doc.certificate.add({ViolationKind::kBadBijection, {1, -1}});
    }
    const auto text = serialize_result(doc);
    CHECK(parse_result(text) == doc);
  }
  CHECK_THROWS_AS(parse_result(R"({"coords":[],"width":0,"height":0,"certificate":{"ok":false,"violations":[]}})"), ParseError);
  CHECK_THROWS_AS(parse_result(R"({"coords":[[1.5,2]],"width":0,"height":0,"certificate":{"ok":true,"violations":[]}})"), ParseError);
  CHECK_THROWS_AS(parse_result(R"({"coords":[],"width":0,"height":0,"certificate":{"ok":false,"violations":[{"kind":"bogus","witness":[]}]}})"), ParseError);
}

TEST_CASE("svg: two-path drawing") {
  const auto e = embed_two_paths({{0, 1, 2, 3, 4, 5, 6}}, {{1, 4, 0, 3, 2, 5, 6}});
  const std::string svg = render_svg(e);
  const auto gs = groups(svg);
  REQUIRE(gs.size() == 2);
  for (const auto& g : gs) CHECK(count(g, "<line ") == 6);
  CHECK(count(svg, "<circle ") == 7);
  CHECK(svg == render_svg(e));
  CHECK(count(svg, std::string("stroke=\"") + palette_colour(0)) == 1);
  CHECK(count(svg, std::string("stroke=\"") + palette_colour(1)) == 1);
  CHECK(std::string(palette_colour(0)) != palette_colour(1));
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(count(svg, "version=\"1.1\"") == 1);
}

TEST_CASE("svg: y grows upward and labels are escaped") {
  SimultaneousEmbedding e;
  e.coords = {{0, 0}, {0, 5}};
  e.layers = {{{0, 1}}};
  const std::string svg = render_svg(e, {}, {"a<b", "c&d"});
  const std::regex cy(R"re(<circle cx="[^"]+" cy="([^"]+)")re");
  std::vector<double> ys;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), cy); it != std::sregex_iterator(); ++it)
    ys.push_back(std::stod((*it)[1]));
  REQUIRE(ys.size() == 2);
  CHECK(ys[1] < ys[0]);
  CHECK(count(svg, "a&lt;b") == 1);
  CHECK(count(svg, "c&amp;d") == 1);

  SvgStyle style;
  style.layers = {{"#000000", 3.5, "4 2"}};
  const std::string styled = render_svg(e, style);
  CHECK(count(styled, "stroke=\"#000000\" stroke-width=\"3.50\"") == 1);
  CHECK(count(styled, "stroke-dasharray=\"4 2\"") == 1);
}

TEST_CASE("svg: single vertex and three outerplanar layers") {
  SimultaneousEmbedding one;
  one.coords = {{1, 1}};
  one.layers = {{}};
  const auto s1 = render_svg(one);
  CHECK(count(s1, "<circle ") == 1);
  CHECK(count(s1, "<line ") == 0);

  std::vector<Layer> ls;
  for (std::uint64_t s = 0; s < 3; ++s) ls.push_back(generate(GenKind::kMaximalOuterplanar, 8, s));
  const auto s3 = render_svg(simul_embed_outerplanars(ls, 8));
  const auto gs = groups(s3);
  REQUIRE(gs.size() == 3);
  for (const auto& g : gs) CHECK(count(g, "<line ") == 13);
}

TEST_CASE("generators satisfy their validators") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 3 + static_cast<int>(seed);
    const Layer p = generate(GenKind::kPath, n, seed);
    CHECK_NOTHROW(validate_layer(p, n));
    CHECK(as_path(p, n).order.size() == static_cast<std::size_t>(n));

    const Layer c = generate(GenKind::kCaterpillar, n, seed);
    CHECK_NOTHROW(validate_layer(c, n));
    CHECK_NOTHROW(caterpillar_decompose(c, n).validate(n));

    const Layer o = generate(GenKind::kMaximalOuterplanar, n, seed);
    CHECK_NOTHROW(validate_layer(o, n));
    CHECK(o.edges.size() == static_cast<std::size_t>(2 * n - 3));
    CHECK(maximalize_outerplanar(o, n).dummy_edges.empty());

    const Layer t = generate(GenKind::kPlaneTriangulation, n, seed);
    CHECK_NOTHROW(validate_layer(t, n));
    CHECK(check_plane_embedding(t, n) == 2 * n - 4);
    CHECK(oracle::face_count(*t.rotation) == 2 * n - 4);
  }
  CHECK(check_plane_embedding(generate(GenKind::kPlaneTriangulation, 15, 9), 15) == 26);
  CHECK_NOTHROW(as_path(generate(GenKind::kPath, 5, 4), 5));
  CHECK_THROWS_AS(generate(GenKind::kPlaneTriangulation, 2, 1), GraphError);
  CHECK(generate(GenKind::kPath, 0, 1).edges.empty());
  CHECK(generate(GenKind::kCaterpillar, 1, 1).edges.empty());
}

TEST_CASE("generators are reproducible from the seed") {
  for (auto k : {GenKind::kPath, GenKind::kCaterpillar, GenKind::kMaximalOuterplanar, GenKind::kPlaneTriangulation}) {
    CHECK(generate(k, 20, 123) == generate(k, 20, 123));
    CHECK_FALSE(generate(k, 20, 123) == generate(k, 20, 124));
    CHECK(gen_kind_from_string(to_string(k)) == k);
  }
  // Pinned output: only the engine, whose sequence the standard fixes, is used.
  std::mt19937_64 rng(5);
  CHECK(random_permutation(6, rng) == std::vector<int>{2, 5, 1, 0, 3, 4});
}
