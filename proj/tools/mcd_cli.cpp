#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "mcd/mcd.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw mcd::Error(mcd::Errc::InvalidArgument, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw mcd::Error(mcd::Errc::InvalidArgument, "cannot write " + path);
  out << text;
}

mcd::Drawing load(const std::string& path) { return mcd::parse_mcd(slurp(path)); }

// Accepts "p/q" or a plain integer.
mcd::Rational rational_arg(const std::string& s) {
  return mcd::Rational::parse(s.find('/') == std::string::npos ? s + "/1" : s);
}

mcd::Drawing generate(const std::string& kind, int n, std::uint64_t seed, const std::string& wrap) {
  const std::string prefix = "archetype:";
  if (kind.rfind(prefix, 0) == 0) {
    const std::string name = kind.substr(prefix.size());
    std::string known;
    for (auto& [k, d] : mcd::gen_archetypes()) {
      if (k == name) return d;
      known += " " + k;
    }
    throw mcd::Error(mcd::Errc::InvalidArgument, "unknown archetype '" + name + "'; known:" + known);
  }
  mcd::GenConfig c;
  c.n = n;
  c.seed = seed;
  c.wrap_prob = rational_arg(wrap);
  if (kind == "flag") return mcd::gen_flag(c);
  if (kind == "mixed") return mcd::gen_mixed(c);
  if (kind == "planefree") return mcd::gen_planefree(c);
  throw mcd::Error(mcd::Errc::InvalidArgument, "unknown kind '" + kind + "'");
}

std::vector<int> parse_sizes(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  for (std::string tok; std::getline(ss, tok, ',');) out.push_back(std::stoi(tok));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Disjoint edges in monotone cylindrical drawings"};
  app.require_subcommand(1);
  int status = 0;

  // generate
  std::string g_kind = "flag", g_out, g_wrap = "1/2";
  int g_n = 10;
  std::uint64_t g_seed = 1;
  auto* gen = app.add_subcommand("generate", "Write a generated drawing in MCD1");
  gen->add_option("--kind", g_kind, "flag | mixed | planefree | archetype:<name>");
  gen->add_option("--n", g_n, "Number of vertices")->check(CLI::Range(2, 100000));
  gen->add_option("--seed", g_seed, "Random seed");
  gen->add_option("--wrap", g_wrap, "Target fraction of wrapping edges for mixed (p/q)");
  gen->add_option("--out", g_out, "Output file (default stdout)");
  gen->callback([&] { emit(g_out, mcd::serialize_mcd(generate(g_kind, g_n, g_seed, g_wrap))); });

  // validate
  std::string v_in;
  auto* val = app.add_subcommand("validate", "Check a drawing's invariants");
  val->add_option("--in", v_in, "Input MCD1 file")->required();
  val->callback([&] {
    auto r = mcd::validate(load(v_in));
    std::cout << r.summary() << "\n";
    if (!r.ok) status = 1;
  });

  // solve
  std::string s_mode = "practical", s_in, s_out, s_eps = "1/4", s_n0 = "2";
  std::size_t s_k = 0;
  bool s_verify = false;
  auto* sol = app.add_subcommand("solve", "Find pairwise disjoint edges");
  sol->add_option("--mode", s_mode, "practical | paper")->check(CLI::IsMember({"practical", "paper"}));
  sol->add_option("--k", s_k, "Slab count (0 picks the mode's rule)");
  sol->add_option("--in", s_in, "Input MCD1 file")->required();
  sol->add_option("--out", s_out, "Output matching file (default stdout)");
  sol->add_flag("--verify", s_verify, "Check flag calls and every split index (slow)");
  sol->add_option("--eps", s_eps, "Paper mode epsilon (p/q)");
  sol->add_option("--n0", s_n0, "Paper mode threshold n0");
  sol->callback([&] {
    mcd::SolveOptions o;
    o.mode = s_mode == "paper" ? mcd::SolveMode::Paper : mcd::SolveMode::Practical;
    o.k = s_k;
    o.verify = s_verify;
    if (o.mode == mcd::SolveMode::Paper) o.params = mcd::PaperParams{rational_arg(s_eps), mcd::BigInt(s_n0)};
    auto r = mcd::solve(load(s_in), o);
    emit(s_out, mcd::serialize_matching(r));
    if (!s_out.empty() && s_out != "-") std::cerr << "size " << r.size() << "\n";
  });

  // oracle
  std::string o_in;
  bool o_force = false;
  auto* orc = app.add_subcommand("oracle", "Exact maximum disjoint edge set (small n)");
  orc->add_option("--in", o_in, "Input MCD1 file")->required();
  orc->add_flag("--force", o_force, "Run above the size cap");
  orc->callback([&] {
    auto r = mcd::max_disjoint_bruteforce(load(o_in), o_force);
    std::cout << "size " << r.size() << "\n";
    for (auto [u, v] : r.edges) std::cout << "pair " << u << " " << v << "\n";
  });

  // render
  std::string r_in, r_out, r_hl;
  mcd::RenderStyle style;
  bool r_nocut = false, r_nolabels = false;
  auto* ren = app.add_subcommand("render", "Draw the plane representation as SVG");
  ren->add_option("--in", r_in, "Input MCD1 file")->required();
  ren->add_option("--out", r_out, "Output SVG (default stdout)");
  ren->add_option("--highlight", r_hl, "Matching file whose edges are emphasized");
  ren->add_option("--width", style.width, "Pixels")->check(CLI::PositiveNumber);
  ren->add_option("--height", style.height, "Pixels")->check(CLI::PositiveNumber);
  ren->add_flag("--no-cut", r_nocut, "Omit the cut lines");
  ren->add_flag("--no-labels", r_nolabels, "Omit vertex labels");
  ren->callback([&] {
    auto d = load(r_in);
    if (!r_hl.empty()) style.highlight = mcd::parse_matching(slurp(r_hl)).edges;
    style.show_cut = !r_nocut;
    style.label_vertices = !r_nolabels;
    emit(r_out, mcd::render_svg(d, style));
  });

  // lemma-check
  int l_seeds = 20;
  unsigned l_workers = 1;
  std::vector<std::string> l_suites, l_files;
  bool l_nomin = false;
  auto* lem = app.add_subcommand("lemma-check", "Run the property suites over a corpus");
  lem->add_option("--seeds", l_seeds, "Generated instances per family");
  lem->add_option("--suite", l_suites, "Restrict to these suites");
  lem->add_option("--in", l_files, "Extra MCD1 files added to the corpus");
  lem->add_option("--workers", l_workers, "Worker threads");
  lem->add_flag("--no-minimize", l_nomin, "Skip counterexample minimization");
  lem->callback([&] {
    auto corpus = mcd::default_corpus(l_seeds);
    for (const auto& f : l_files) corpus.push_back({f, load(f)});
    mcd::LemmaOptions o;
    o.only = l_suites;
    o.minimize = !l_nomin;
    o.workers = l_workers;
    auto rep = mcd::lemma_check(corpus, o);
    std::cout << rep.text();
    if (!rep.ok()) status = 1;
  });

  // bench
  std::string b_kind = "mixed", b_sizes = "25,50,100,200", b_wrap = "1/2";
  int b_reps = 3;
  std::uint64_t b_seed = 1;
  auto* ben = app.add_subcommand("bench", "Wall time of practical solve against n");
  ben->add_option("--kind", b_kind, "flag | mixed | planefree");
  ben->add_option("--sizes", b_sizes, "Comma separated vertex counts");
  ben->add_option("--reps", b_reps, "Instances per size")->check(CLI::PositiveNumber);
  ben->add_option("--seed", b_seed, "First seed");
  ben->add_option("--wrap", b_wrap, "Wrap fraction for mixed (p/q)");
  ben->callback([&] {
    std::cout << std::setw(6) << "n" << std::setw(14) << "solve_s" << std::setw(10) << "size" << std::setw(10)
              << "ratio" << "\n";
    double prev = 0;
    int prev_n = 0;
    for (int n : parse_sizes(b_sizes)) {
      double total = 0;
      std::size_t size = 0;
      for (int r = 0; r < b_reps; ++r) {
        auto d = generate(b_kind, n, b_seed + std::uint64_t(r), b_wrap);
        auto t0 = std::chrono::steady_clock::now();
        size += mcd::solve(d).size();
        total += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      }
      double mean = total / b_reps;
      std::cout << std::setw(6) << n << std::setw(14) << std::fixed << std::setprecision(5) << mean << std::setw(10)
                << std::setprecision(1) << double(size) / b_reps << std::setw(10);
      // time ratio normalized to a doubling of n
      if (prev > 0 && n > prev_n)
        std::cout << std::setprecision(2) << std::pow(mean / prev, 1.0 / std::log2(double(n) / prev_n));
      else
        std::cout << "-";
      std::cout << "\n";
      prev = mean;
      prev_n = n;
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const mcd::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return status;
}
