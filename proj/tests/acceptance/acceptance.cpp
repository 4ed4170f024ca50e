// One PASS/FAIL line per acceptance criterion. Exit status is the number of failures.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "goodsemi/apery.hpp"
#include "goodsemi/io.hpp"
#include "goodsemi/minimality.hpp"
#include "goodsemi/reducibility.hpp"
#include "goodsemi/tracks.hpp"
#include "oracles.hpp"

using namespace goodsemi;

namespace {

std::string data(const std::string& name) { return std::string(GOODSEMI_DATA_DIR) + "/" + name; }

// Collects failed checks for one criterion.
struct Check {
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

int failed = 0;

void criterion(int n, double limit_s, const std::function<std::string(Check&)>& body) {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  try {
    detail = body(c);
  } catch (const std::exception& e) {
    c.failures.push_back(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0 && secs > limit_s) {
    std::ostringstream os;
    os << "runtime " << secs << "s over limit " << limit_s << "s";
    c.failures.push_back(os.str());
  }
  const bool ok = c.failures.empty();
  failed += !ok;
  std::cout << "criterion " << n << ": " << (ok ? "PASS" : "FAIL") << " (" << std::fixed << std::setprecision(2)
            << secs << "s";
  if (limit_s > 0) std::cout << " < " << std::setprecision(0) << limit_s << "s";
  std::cout << ")";
  if (!detail.empty()) std::cout << " " << detail;
  std::cout << "\n";
  for (const auto& f : c.failures) std::cout << "  - " << f << "\n";
  std::cout.flush();
}

std::vector<std::vector<Point>> spines(const std::vector<Track>& tracks) {
  std::vector<std::vector<Point>> out;
  for (const auto& t : tracks) out.push_back(t.spine);
  return out;
}

bool contains(const std::vector<GeneratorSet>& v, const GeneratorSet& g) {
  return std::find(v.begin(), v.end(), g) != v.end();
}

GeneratorSet without(const GeneratorSet& v, const Point& a) {
  GeneratorSet out;
  for (const auto& p : v)
    if (p != a) out.push_back(p);
  return out;
}

std::string gap_bedim_case(Check& c) {
  const auto ia = load_generators(data("gap_bedim.gen"));
  c.expect(ia.size() == 16, "16 irreducible absolutes in the input");
  const auto s = reconstruct_from_ia(ia);
  c.expect(validate(s.small(), s.conductor()).ok, "semigroup is valid");
  c.expect(irreducible_absolutes(s) == ia, "I_A(S) equals the input list");

  const std::vector<std::vector<Point>> tracks = {
      {{6, 3}},
      {{12, 17}, {19, 6}},
      {{39, kInf}, {kInf, 31}},
      {{41, kInf}},
      {{41, kInf}, {kInf, 23}},
      {{41, kInf}, {kInf, 31}},
      {{46, kInf}, {kInf, 15}},
      {{46, kInf}, {kInf, 23}},
      {{46, kInf}, {kInf, 31}},
  };
  c.expect(spines(enumerate_tracks(s)) == tracks, "exactly the nine tracks");

  const GeneratorSet m{{6, 3}, {12, 17}, {39, kInf}, {41, kInf}, {46, kInf}};
  c.expect(contains(minimal_hitting_sets(s).transversals, m), "M is a minimal hitting set");
  c.expect(!is_sor(s, m), "M is not a sor");

  const GeneratorSet sub_ia{{6, 3},     {12, 17},   {19, 6},    {24, kInf}, {39, kInf}, {41, kInf},
                            {46, kInf}, {50, kInf}, {kInf, 18}, {kInf, 29}, {kInf, 34}};
  bool found = false;
  std::size_t seen = 0;
  for_each_good_between(m, s, {}, [&](const GoodSemigroup& t) {
    ++seen;
    found = irreducible_absolutes(t) == sub_ia;
    return !found;
  });
  c.expect(found, "S' with the eleven-element I_A lies between M and S");
  return "tracks=9 S'=found after " + std::to_string(seen);
}

std::string sor_unreduced_case(Check& c) {
  const auto s = load_semigroup(data("sor_unreduced.gen"), true);
  const GeneratorSet eta{{3, 4}, {7, 8}, {10, 15}, {14, 18}, {kInf, 12}, {kInf, 22}};
  c.expect(red_closure(s, eta).result() == eta, "red(eta) = eta");

  auto r = reduction_certificate(s, eta, {6, kInf});
  c.expect(!r.reducible && r.range == std::vector<std::int64_t>{8, 12, 15, 16, 18, 19, 20, 22, 23, 24, 25} &&
               r.failed_at == 25,
           "(6,inf): Y = {8,...,25}, fails at 25");
  r = reduction_certificate(s, eta, {17, 25});
  c.expect(!r.reducible && r.range == std::vector<std::int64_t>{23, 24} && r.failed_at == 23,
           "(17,25): Y = {23,24}, fails at 23");
  r = reduction_certificate(s, eta, {kInf, 19});
  c.expect(!r.reducible && r.range == std::vector<std::int64_t>{13, 15, 16, 17} && r.failed_at == 13,
           "(inf,19): X = {13,15,16,17}, fails at 13");
  r = reduction_certificate(s, eta, {kInf, 29});
  c.expect(!r.reducible && !r.delta_left, "(inf,29): nothing to its left");

  c.expect(is_sor(s, eta), "eta is a sor");
  const GeneratorSet m{{3, 4}, {7, 8}, {10, 15}};
  c.expect(is_sor(s, m), "M is a sor");
  for (const auto& p : m) c.expect(!is_sor(s, without(m, p)), "M minus " + p.str() + " is not a sor");
  return "";
}

std::string six_tracks_case(Check& c) {
  const auto s = load_semigroup(data("six_tracks.gen"), true);
  const auto tracks = enumerate_tracks(s);
  c.expect(tracks.size() == 6, "six tracks");
  const std::set<GeneratorSet> mhs = {
      {{4, 3}, {7, 13}, {kInf, 12}, {kInf, 16}, {kInf, 26}},
      {{4, 3}, {7, 13}, {11, 17}, {15, kInf}, {kInf, 26}},
      {{4, 3}, {7, 13}, {11, 17}, {16, 20}, {24, kInf}},
      {{4, 3}, {7, 13}, {11, 17}, {16, 20}, {kInf, 26}},
      {{4, 3}, {7, 13}, {15, kInf}, {24, kInf}, {kInf, 16}},
      {{4, 3}, {7, 13}, {15, kInf}, {kInf, 16}, {kInf, 26}},
      {{4, 3}, {7, 13}, {16, 20}, {24, kInf}, {kInf, 16}},
      {{4, 3}, {7, 13}, {16, 20}, {kInf, 16}, {kInf, 26}},
      {{4, 3}, {7, 13}, {24, kInf}, {kInf, 12}, {kInf, 16}},
      {{4, 3}, {7, 13}, {11, 17}, {15, kInf}, {24, kInf}},
  };
  const auto family = minimal_hitting_sets(s).transversals;
  c.expect(std::set<GeneratorSet>(family.begin(), family.end()) == mhs && family.size() == 10,
           "exactly the ten minimal hitting sets");
  c.expect(bedim(s) == 5, "bedim = 5");

  const GeneratorSet eta{{4, 3}, {7, 13}, {kInf, 12}, {kInf, 16}, {kInf, 26}};
  const auto trace = red_closure(s, eta);
  c.expect(trace.chain.size() == 3, "two reduction rounds");
  if (trace.chain.size() == 3) {
    GeneratorSet added;
    std::set_difference(trace.chain[1].begin(), trace.chain[1].end(), eta.begin(), eta.end(),
                        std::back_inserter(added));
    c.expect(added == GeneratorSet{{11, 17}, {14, kInf}, {16, 20}, {24, kInf}}, "first round adds four elements");
    c.expect(trace.chain[2] == irreducible_absolutes(s), "second round reaches I_A(S)");
    c.expect(trace.rounds[1].size() == 1 && trace.rounds[1][0].target == Point{15, kInf},
             "second round adds (15,inf)");
  }
  // hand-computed witnesses: each lies in the closure to the right of its target
  const std::vector<std::pair<Point, Point>> witnesses = {
      {{11, 17}, {kInf, 16}}, {{14, kInf}, {kInf, 26}}, {{14, kInf}, {36, 27}}, {{14, kInf}, {27, 28}},
      {{16, 20}, {kInf, 12}}, {{16, 20}, {20, 15}},     {{16, 20}, {kInf, 16}}, {{16, 20}, {24, 18}},
      {{16, 20}, {kInf, 19}}, {{24, kInf}, {kInf, 18}}, {{24, kInf}, {kInf, 19}}, {{24, kInf}, {kInf, 21}},
      {{24, kInf}, {kInf, 22}}, {{24, kInf}, {kInf, 24}}, {{24, kInf}, {kInf, 25}}, {{24, kInf}, {kInf, 26}},
  };
  for (const auto& [target, w] : witnesses)
    c.expect(semiring_contains(eta, w) && w.x > target.x, "witness " + w.str() + " for " + target.str());
  if (trace.chain.size() == 3)
    for (const Point w : {Point{16, 20}, Point{kInf, 21}, Point{19, 22}})
      c.expect(semiring_contains(trace.chain[1], w) && w.x > ExtNat(15), "witness " + w.str() + " for (15,inf)");
  c.expect(odot(odot(odot({4, 3}, {4, 3}), odot({4, 3}, {4, 3})), odot({4, 3}, {4, 3})) == Point{24, 18},
           "6(4,3) = (24,18)");
  c.expect(odot({7, 13}, {kInf, 12}) == Point{kInf, 25}, "(7,13)(inf,12) = (inf,25)");

  const auto r = edim(s);
  c.expect(r.edim == 5 && r.witness == eta, "edim = 5 with eta_1");
  for (const auto& m : mhs) c.expect(satisfies_reducibility_condition(s, m), to_string(m) + " is reducible to I_A");
  return "edim=" + std::to_string(r.edim) + " via " + EdimResult::method_name(r.method);
}

std::string two_sizes_case(Check& c) {
  const auto s = load_semigroup(data("two_msor_sizes.gen"), true);
  const GeneratorSet a{{4, 3}, {6, 7}, {8, 8}, {11, kInf}, {13, kInf}};
  const GeneratorSet b{{4, 3}, {6, 7}, {8, 8}, {11, kInf}, {kInf, 9}, {kInf, 11}};
  const auto family = minimal_hitting_sets(s).transversals;
  c.expect(contains(family, a) && satisfies_reducibility_condition(s, a), "size 5 set");
  c.expect(contains(family, b) && satisfies_reducibility_condition(s, b), "size 6 set");
  const auto r = edim(s);
  c.expect(r.edim == 5, "edim = 5");
  return "edim=" + std::to_string(r.edim);
}

std::string curve_case(Check& c) {
  const auto s = load_semigroup(data("curve.semi"));
  const auto family = minimal_hitting_sets(s).transversals;
  c.expect(family.size() == 1 && family[0] == GeneratorSet{{4, 4}, {6, 6}, {15, 13}}, "unique hitting set");
  const auto r = edim(s);
  c.expect(r.edim == 3, "edim = 3");
  return "edim=" + std::to_string(r.edim);
}

std::string hypothesis_case(Check& c) {
  try {
    minimal_good_containing({{2, 2}, {3, 3}});
    c.expect(false, "no hypothesis error");
  } catch (const HypothesisError& e) {
    c.expect(e.which() == 2, "second hypothesis reported, got " + std::to_string(e.which()));
    return "which=" + std::to_string(e.which());
  }
  return "";
}

std::string gaps_case(Check& c) {
  const auto a = load_semigroup(data("gap_bedim.gen"), true);
  const auto ra = edim(a);
  c.expect(ra.bedim < ra.edim, "bedim < edim");
  const auto b = load_semigroup(data("gap_big_bedim.gen"), true);
  c.expect(irreducible_absolutes(b).size() == 19, "19 irreducible absolutes");
  const auto rb = edim(b);
  const auto big = big_bedim(b);
  c.expect(rb.edim < big.value, "edim < Bedim");
  std::ostringstream os;
  os << "bedim=" << ra.bedim << " < edim=" << ra.edim << "; edim=" << rb.edim << " < Bedim=" << big.value;
  return os.str();
}

bool strictly_inside(const GoodSemigroup& r, const GoodSemigroup& s) {
  bool dropped = false;
  for (std::int64_t x = 0; x <= 2 * (s.c1() + s.e1()); ++x)
    for (std::int64_t y = 0; y <= 2 * (s.c2() + s.e2()); ++y) {
      if (r.contains(x, y) && !s.contains(x, y)) return false;
      dropped = dropped || (s.contains(x, y) && !r.contains(x, y));
    }
  return dropped;
}

std::string corpus_case(Check& c) {
  std::vector<GoodSemigroup> corpus;
  for (std::int64_t c1 = 1; c1 <= 5; ++c1)
    for (std::int64_t c2 = 1; c2 <= 5; ++c2)
      for (auto& s : enumerate_with_conductor({c1, c2})) corpus.push_back(std::move(s));
  int arf = 0, mm = 0;
  for (const auto& s : corpus) {
    const std::string id = serialize_semigroup(s);
    auto expect = [&](bool ok, const char* prop) { c.expect(ok, std::string(prop) + "\n" + id); };
    expect(validate(s.small(), s.conductor()).ok, "(a)");
    const auto ia = irreducible_absolutes(s);
    expect(reconstruct_from_ia(ia) == s, "(b)");
    const auto tracks = enumerate_tracks(s);
    for (const auto& t : tracks) {
      const auto r = remove_track(s, t);
      expect(validate(r.small(), r.conductor()).ok && strictly_inside(r, s), "(c)");
    }
    const auto r = edim(s);
    expect(r.bedim <= r.edim && r.edim <= big_bedim(s).value, "(d)");
    expect(is_hitting_set(tracks, r.witness), "(e)");
    const auto e = static_cast<std::size_t>(s.e1() + s.e2());
    expect(r.edim <= e, "(f)");
    expect(apery_levels(s).count() == e, "(g)");
    if (is_arf(s)) {
      ++arf;
      expect(r.edim == e, "(h)");
    }
    if (m_plus_m_equals_e_plus_m(s)) {
      ++mm;
      expect(r.edim == e, "(i)");
    }
    for (const auto& a : ia) {
      const auto rest = without(ia, a);
      if (is_rho_reducible(s, rest, a)) expect(is_reducible_by(s, rest, a), "(j)");
    }
    expect(is_sor(s, rho_sor(s)) && is_sor(s, eta_s(s)), "(k)");
  }
  std::ostringstream os;
  os << "semigroups=" << corpus.size() << " (local, conductor <= (5,5), N^2 left out; arf=" << arf << " mm=" << mm
     << ")";
  return os.str();
}

std::string closure_case(Check& c) {
  std::mt19937 rng(20240611);
  std::size_t mismatches = 0, points = 0;
  for (int round = 0; round < 200; ++round) {
    const auto gens = make_generators(oracle::random_generators(rng, 8, 1 + static_cast<int>(rng() % 5)));
    const oracle::SaturatedClosure naive(gens, 40);
    const ProductMonoid m(gens);
    for (int x = 0; x <= 40; ++x)
      for (int y = 0; y <= 40; ++y, ++points)
        if (semiring_contains(m, {x, y}) != naive.contains(x, y)) ++mismatches;
  }
  c.expect(mismatches == 0, std::to_string(mismatches) + " mismatches");
  return "points=" + std::to_string(points) + " mismatches=" + std::to_string(mismatches);
}

}  // namespace

int main() {
  criterion(1, 60, gap_bedim_case);
  criterion(2, 120, sor_unreduced_case);
  criterion(3, 120, six_tracks_case);
  criterion(4, 0, two_sizes_case);
  criterion(5, 0, curve_case);
  criterion(6, 0, hypothesis_case);
  criterion(7, 1800, gaps_case);
  criterion(8, 600, corpus_case);
  criterion(9, 0, closure_case);
  return failed;
}
