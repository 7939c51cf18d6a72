#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "mcd/generators.hpp"
#include "mcd/io.hpp"
#include "mcd/svg.hpp"

using namespace mcd;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t c = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++c;
  return c;
}

}  // namespace

TEST(Svg, WrappingEdgeIsSplitAtTheCut) {
  std::string svg = render_svg(archetype("not-related"));
  EXPECT_EQ(count(svg, "<path "), 2u);
  // one piece for the direct edge and two for the wrapping one
  EXPECT_EQ(count(svg, "M "), 3u);
  EXPECT_EQ(svg, slurp(std::string(MCD_DATA_DIR) + "/golden/not-related.svg"));
}

TEST(Svg, HighlightMatchesGolden) {
  RenderStyle st;
  st.highlight = parse_matching(slurp(std::string(MCD_DATA_DIR) + "/golden/separating.match")).edges;
  std::string svg = render_svg(archetype("separating"), st);
  EXPECT_EQ(count(svg, "<path "), 45u);
  EXPECT_EQ(count(svg, "edge hl"), st.highlight.size());
  EXPECT_EQ(svg, slurp(std::string(MCD_DATA_DIR) + "/golden/separating.svg"));
}

TEST(Svg, OptionsAndDeterminism) {
  GenConfig c;
  c.n = 12;
  Drawing d = gen_mixed(c);
  EXPECT_EQ(render_svg(d), render_svg(d));
  RenderStyle st;
  st.show_cut = false;
  st.label_vertices = false;
  std::string bare = render_svg(d, st);
  EXPECT_EQ(count(bare, "class=\"cut\""), 0u);
  EXPECT_EQ(count(bare, "<text"), 0u);
  EXPECT_EQ(count(bare, "<circle"), 12u);
  st.width = 0;
  EXPECT_THROW(render_svg(d, st), Error);
}
