#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "goodsemi/apery.hpp"
#include "goodsemi/io.hpp"
#include "goodsemi/minimality.hpp"
#include "goodsemi/reducibility.hpp"
#include "goodsemi/svg.hpp"
#include "goodsemi/tracks.hpp"

namespace gs = goodsemi;

namespace {

enum Exit { kOk = 0, kFail = 1, kInput = 2, kBudget = 3 };

const char* flag(bool b) { return b ? "true" : "false"; }

// FNV-1a over the serialized form; stable across runs and shards
std::string content_hash(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex;
  out.width(16);
  out.fill('0');
  out << h;
  return out.str();
}

struct Context {
  std::string file;
  bool from_ia = false;
  std::uint64_t budget = 0;

  gs::GoodSemigroup load() const { return gs::load_semigroup(file, from_ia); }
};

int cmd_check(const Context& ctx) {
  try {
    const auto s = ctx.load();
    std::cout << "ok=true c=" << s.conductor().str() << "\n";
    return kOk;
  } catch (const gs::InvalidSemigroup& e) {
    std::cout << "ok=false\n";
    for (const auto& v : e.report().violations)
      std::cout << "violation axiom=" << v.axiom << " witnesses=" << gs::to_string(v.witnesses) << "\n";
    return kFail;
  }
}

int cmd_info(const Context& ctx) {
  const auto s = ctx.load();
  std::cout << "c=" << s.conductor().str() << " e=" << s.multiplicity().str() << " small=" << s.small().size()
            << " ia=" << gs::irreducible_absolutes(s).size() << "\n";
  return kOk;
}

int cmd_ia(const Context& ctx) {
  for (const auto& p : gs::irreducible_absolutes(ctx.load())) std::cout << "ia=" << p.str() << "\n";
  return kOk;
}

int cmd_tracks(const Context& ctx) {
  const auto s = ctx.load();
  const auto tracks = gs::enumerate_tracks(s);
  for (std::size_t i = 0; i < tracks.size(); ++i)
    std::cout << "track=" << i + 1 << " spine=" << gs::to_string(tracks[i].spine)
              << " edge=" << gs::to_string(tracks[i].edge) << "\n";
  std::cout << "tracks=" << tracks.size() << "\n";
  return kOk;
}

int cmd_mhs(const Context& ctx) {
  const auto s = ctx.load();
  const auto family = gs::minimal_hitting_sets(s);
  for (const auto& m : family.transversals)
    std::cout << "mhs=" << gs::to_string(m) << " size=" << m.size()
              << " reducibility=" << flag(gs::satisfies_reducibility_condition(s, m)) << "\n";
  return kOk;
}

int cmd_bedim(const Context& ctx) {
  std::cout << "bedim=" << gs::bedim(ctx.load()) << "\n";
  return kOk;
}

int cmd_bigbedim(const Context& ctx) {
  const auto r = gs::big_bedim(ctx.load());
  std::cout << "bigbedim=" << r.value << " witness=" << gs::to_string(r.witness) << "\n";
  return kOk;
}

int cmd_edim(const Context& ctx) {
  const auto s = ctx.load();
  try {
    const auto r = gs::edim(s, ctx.budget);
    std::cout << "edim=" << r.edim << " msor=" << gs::to_string(r.witness)
              << " method=" << gs::EdimResult::method_name(r.method) << " bedim=" << r.bedim << " nodes=" << r.nodes
              << "\n";
    return kOk;
  } catch (const gs::BudgetExhausted& e) {
    std::cout << "error=budget nodes=" << e.nodes() << " lower=" << gs::bedim(s)
              << " upper=" << gs::big_bedim(s).value << "\n";
    return kBudget;
  }
}

int cmd_apery(const Context& ctx) {
  const auto lv = gs::apery_levels(ctx.load());
  std::cout << "apery=" << lv.apery.size() << " levels=" << lv.count() << "\n";
  for (std::size_t i = 0; i < lv.levels.size(); ++i)
    std::cout << "level=" << i + 1 << " elements=" << gs::to_string(lv.levels[i]) << "\n";
  return kOk;
}

int cmd_arf(const Context& ctx) {
  std::cout << "arf=" << flag(gs::is_arf(ctx.load())) << "\n";
  return kOk;
}

int cmd_conjecture(const Context& ctx) {
  const auto s = ctx.load();
  try {
    const auto r = gs::conjecture_m_plus_m(s, ctx.budget);
    std::cout << "mm_equals_em=" << flag(r.holds_mm) << " edim=" << r.edim << " e1_plus_e2=" << s.e1() + s.e2()
              << " med=" << flag(r.is_med) << " consistent=" << flag(!r.holds_mm || r.is_med) << "\n";
    return kOk;
  } catch (const gs::BudgetExhausted& e) {
    std::cout << "error=budget nodes=" << e.nodes() << " mm_equals_em=" << flag(gs::m_plus_m_equals_e_plus_m(s))
              << "\n";
    return kBudget;
  }
}

int cmd_minimal_containing(const Context& ctx, const std::vector<std::int64_t>& bound) {
  const auto eta = gs::load_generators(ctx.file);
  gs::SearchOptions opt;
  opt.budget = ctx.budget;
  if (bound.size() == 2) {
    opt.box = gs::Point{bound[0], bound[1]};
  } else {
    try {
      opt.box = gs::conductor_bound(eta).bound;
    } catch (const gs::HypothesisError& e) {
      std::cout << "error=hypothesis which=" << e.which() << " message=\"" << e.what() << "\"\n";
      return kInput;
    }
  }
  std::cout << "bound=" << opt.box->str() << "\n";
  try {
    const auto found = gs::minimal_good_containing(eta, opt);
    for (const auto& s : found)
      std::cout << "semigroup c=" << s.conductor().str() << " ia=" << gs::to_string(gs::irreducible_absolutes(s))
                << "\n";
    std::cout << "count=" << found.size() << "\n";
    return kOk;
  } catch (const gs::BudgetExhausted& e) {
    std::cout << "error=budget nodes=" << e.nodes() << "\n";
    return kBudget;
  }
}

int cmd_enum(const Context& ctx, const std::vector<std::int64_t>& cond, const std::string& out_dir) {
  if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
  std::size_t count = 0;
  for (std::int64_t a = 0; a <= cond[0]; ++a)
    for (std::int64_t b = 0; b <= cond[1]; ++b)
      for (const auto& s : gs::enumerate_with_conductor({a, b}, ctx.budget)) {
        const std::string text = gs::serialize_semigroup(s);
        const std::string hash = content_hash(text);
        std::cout << "semigroup=" << hash << " c=" << s.conductor().str() << " small=" << s.small().size() << "\n";
        if (!out_dir.empty()) std::ofstream(std::filesystem::path(out_dir) / (hash + ".semi")) << text;
        ++count;
      }
  std::cout << "count=" << count << "\n";
  return kOk;
}

int cmd_plot(const Context& ctx, const std::string& out) {
  const auto s = ctx.load();
  std::ofstream f(out);
  if (!f) throw std::runtime_error("cannot write " + out);
  gs::emit_svg(s, f);
  std::cout << "svg=" << out << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of good semigroups in N^2"};
  app.require_subcommand(1);
  app.fallthrough();
  Context ctx;
  app.add_flag("--from-ia", ctx.from_ia, "FILE lists I_A(S) in generator format")->configurable(false);
  app.add_option("--budget", ctx.budget, "search node budget (default: GOODSEMI_BUDGET or 5000000)");

  std::map<std::string, std::function<int(const Context&)>> simple = {
      {"check", cmd_check},   {"info", cmd_info},     {"ia", cmd_ia},         {"tracks", cmd_tracks},
      {"mhs", cmd_mhs},       {"bedim", cmd_bedim},   {"bigbedim", cmd_bigbedim}, {"edim", cmd_edim},
      {"apery", cmd_apery},   {"arf", cmd_arf},       {"conjecture", cmd_conjecture},
  };
  const std::map<std::string, std::string> help = {
      {"check", "validate the axioms"},       {"info", "conductor, multiplicity and sizes"},
      {"ia", "irreducible absolutes"},        {"tracks", "all tracks"},
      {"mhs", "minimal hitting sets"},        {"bedim", "least hitting set size"},
      {"bigbedim", "least reducibility-closed set size"},
      {"edim", "embedding dimension and an msor"},
      {"apery", "Apery set levels"},          {"arf", "Arf property"},
      {"conjecture", "compare M+M = e+M with maximal embedding dimension"},
  };
  std::string chosen;
  for (const auto& [name, fn] : simple) {
    auto* sub = app.add_subcommand(name, help.at(name));
    sub->add_option("FILE", ctx.file)->required()->check(CLI::ExistingFile);
    sub->callback([&chosen, name = name] { chosen = name; });
  }

  std::vector<std::int64_t> bound;
  auto* minimal = app.add_subcommand("minimal-containing", "minimal good semigroups containing a generator set");
  minimal->add_option("GENFILE", ctx.file)->required()->check(CLI::ExistingFile);
  minimal->add_option("--bound", bound, "conductor box x y")->expected(2);

  std::vector<std::int64_t> cond;
  std::string out_dir;
  auto* en = app.add_subcommand("enum", "all good semigroups with conductor <= (x,y)");
  en->add_option("--cond", cond, "x y")->required()->expected(2);
  en->add_option("--out", out_dir, "write one .semi file per semigroup");

  std::string svg_out;
  auto* plot = app.add_subcommand("plot", "SVG picture of S");
  plot->add_option("FILE", ctx.file)->required()->check(CLI::ExistingFile);
  plot->add_option("-o,--output", svg_out)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (minimal->parsed()) return cmd_minimal_containing(ctx, bound);
    if (en->parsed()) return cmd_enum(ctx, cond, out_dir);
    if (plot->parsed()) return cmd_plot(ctx, svg_out);
    return simple.at(chosen)(ctx);
  } catch (const gs::ParseError& e) {
    std::cout << "error=parse line=" << e.line() << " message=\"" << e.what() << "\"\n";
  } catch (const gs::InvalidSemigroup& e) {
    std::cout << "error=invalid message=\"" << e.report().str() << "\"\n";
  } catch (const std::exception& e) {
    std::cout << "error=failed message=\"" << e.what() << "\"\n";
  }
  return kInput;
}
