#include "goodsemi/reducibility.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "goodsemi/apery.hpp"
#include "goodsemi/tracks.hpp"

namespace goodsemi {

namespace {

constexpr std::int64_t kInfRaw = ExtNat::kInfRaw;

Point as_point(std::int64_t raw_other, std::int64_t v, int axis) {
  const ExtNat o = raw_other >= ProductMonoid::kUnbounded ? kInf : ExtNat(raw_other);
  return axis == 1 ? Point{v, o} : Point{o, v};
}

std::string join(const std::vector<std::int64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

// Scan the line `axis`=v downward from `hi` for a closure point.
std::optional<ExtNat> scan_down(const ProductMonoid& m, int axis, std::int64_t v, std::int64_t hi) {
  const std::int64_t own = m.best(axis, v);
  if (own == ProductMonoid::kNone) return std::nullopt;
  if (own < ProductMonoid::kUnbounded) hi = std::min(hi, own);
  for (std::int64_t w = hi; w >= 0; --w)
    if (m.best(3 - axis, w) >= v) return ExtNat(w);
  return std::nullopt;
}

}  // namespace

std::optional<ExtNat> delta_eta(const ProductMonoid& m, const Point& a, int side) {
  if (side != 1 && side != 2) throw std::invalid_argument("side must be 1 or 2");
  const ExtNat line = a[side], along = a[3 - side];
  if (line.is_inf()) return std::nullopt;
  if (along.is_finite()) return scan_down(m, side, line.value(), along.value() - 1);
  const std::int64_t own = m.best(side, line.value());
  if (own == kInfRaw) return kInf;
  return scan_down(m, side, line.value(), own == ProductMonoid::kUnbounded ? m.limit() : own);
}

std::optional<ExtNat> delta_eta(const GeneratorSet& eta, const Point& a, int side) {
  return delta_eta(ProductMonoid(make_generators(eta)), a, side);
}

std::string ReductionCertificate::str() const {
  std::ostringstream os;
  os << target.str() << ' ' << (reducible ? "reducible" : "not-reducible");
  switch (reason) {
    case Reason::in_eta: os << " (member)"; break;
    case Reason::in_closure: os << " (in closure)"; break;
    case Reason::column: os << " (column)"; break;
    case Reason::row: os << " (row)"; break;
    case Reason::none: break;
  }
  if (side) os << (side == 1 ? " Y={" : " X={") << join(range) << '}';
  if (!witnesses.empty()) os << " witnesses=" << to_string(witnesses);
  if (failed_at) os << " fails at " << *failed_at;
  return os.str();
}

namespace {

// Conditions of the definition along one side. side 1: the column of a, with
// witnesses (x,y), x > a1, for each y of the range. side 2 symmetric.
bool side_condition(const GoodSemigroup& s, const ProductMonoid& m, const Point& a, int side, ExtNat d_eta,
                    ReductionCertificate& cert) {
  const std::int64_t line = a[side].value();
  const std::int64_t lo = d_eta.value();
  std::int64_t hi;
  if (a[3 - side].is_finite()) {
    const auto d_s = side == 1 ? delta_max_below(s, a) : delta_max_left(s, a);
    if (!d_s || d_s->is_inf()) throw std::logic_error("absolute element with unbounded side set " + a.str());
    hi = d_s->value();
    if (lo > hi) throw std::logic_error("closure reaches past S below " + a.str());
  } else {
    const std::int64_t tilde = side == 1 ? s.column_tail_start(line) : s.row_tail_start(line);
    const std::int64_t e = side == 1 ? s.e2() : s.e1();
    hi = std::max(tilde, lo) + e - 1;
  }
  cert.side = side;
  cert.range.clear();
  cert.witnesses.clear();
  cert.failed_at.reset();
  for (std::int64_t w = lo; w <= hi; ++w) {
    const bool in_s = side == 1 ? s.contains(line, w) : s.contains(w, line);
    if (!in_s) continue;
    cert.range.push_back(w);
    const std::int64_t far = m.best(3 - side, w);
    if (far > line) {
      cert.witnesses.push_back(as_point(far, w, 3 - side));
    } else if (!cert.failed_at) {
      cert.failed_at = w;
    }
  }
  return !cert.failed_at;
}

ReductionCertificate certify(const GoodSemigroup& s, const GeneratorSet& eta, const ProductMonoid& m, const Point& a) {
  ReductionCertificate cert;
  cert.target = a;
  if (std::binary_search(eta.begin(), eta.end(), a)) {
    cert.reducible = true;
    cert.reason = ReductionCertificate::Reason::in_eta;
    return cert;
  }
  if (semiring_contains(m, a)) {
    cert.reducible = true;
    cert.reason = ReductionCertificate::Reason::in_closure;
    return cert;
  }
  cert.delta_below = delta_eta(m, a, 1);
  cert.delta_left = delta_eta(m, a, 2);
  if (cert.delta_below && side_condition(s, m, a, 1, *cert.delta_below, cert)) {
    cert.reducible = true;
    cert.reason = ReductionCertificate::Reason::column;
    return cert;
  }
  ReductionCertificate row = cert;
  if (cert.delta_left && side_condition(s, m, a, 2, *cert.delta_left, row)) {
    row.reducible = true;
    row.reason = ReductionCertificate::Reason::row;
    return row;
  }
  return cert.side ? cert : row;
}

}  // namespace

ReductionCertificate reduction_certificate(const GoodSemigroup& s, const GeneratorSet& eta, const ProductMonoid& m,
                                           const Point& a) {
  const GeneratorSet ia = irreducible_absolutes(s);
  if (!std::binary_search(ia.begin(), ia.end(), a)) throw std::invalid_argument(a.str() + " is not in I_A(S)");
  return certify(s, make_generators(eta), m, a);
}

ReductionCertificate reduction_certificate(const GoodSemigroup& s, const GeneratorSet& eta, const Point& a) {
  const GeneratorSet g = make_generators(eta);
  return reduction_certificate(s, g, ProductMonoid(g, s.c1() + s.c2() + s.e1() + s.e2()), a);
}

bool is_reducible_by(const GoodSemigroup& s, const GeneratorSet& eta, const Point& a) {
  return reduction_certificate(s, eta, a).reducible;
}

namespace {

ReductionTrace closure_from(const GoodSemigroup& s, const GeneratorSet& ia, const GeneratorSet& eta) {
  ReductionTrace t;
  t.chain.push_back(make_generators(eta));
  const std::int64_t limit = s.c1() + s.c2() + s.e1() + s.e2();
  for (;;) {
    const GeneratorSet& cur = t.chain.back();
    const ProductMonoid m(cur, limit);
    std::vector<ReductionCertificate> added;
    for (const auto& a : ia) {
      if (std::binary_search(cur.begin(), cur.end(), a)) continue;
      auto cert = certify(s, cur, m, a);
      if (cert.reducible) added.push_back(std::move(cert));
    }
    if (added.empty()) break;
    GeneratorSet next = cur;
    for (const auto& c : added) next.push_back(c.target);
    t.chain.push_back(make_generators(std::move(next)));
    t.rounds.push_back(std::move(added));
  }
  return t;
}

void require_subset(const GeneratorSet& ia, const GeneratorSet& eta) {
  for (const auto& a : eta)
    if (!std::binary_search(ia.begin(), ia.end(), a)) throw std::invalid_argument(a.str() + " is not in I_A(S)");
}

}  // namespace

ReductionTrace red_closure(const GoodSemigroup& s, const GeneratorSet& eta) {
  const GeneratorSet ia = irreducible_absolutes(s);
  const GeneratorSet g = make_generators(eta);
  require_subset(ia, g);
  return closure_from(s, ia, g);
}

bool satisfies_reducibility_condition(const GoodSemigroup& s, const GeneratorSet& eta) {
  return red_closure(s, eta).result() == irreducible_absolutes(s);
}

std::vector<GeneratorSet> candidate_pool(const GeneratorSet& ia, const std::vector<GeneratorSet>& mhs, std::size_t n) {
  std::set<GeneratorSet> pool;
  for (const auto& h : mhs) {
    if (h.size() > n) continue;
    GeneratorSet rest;
    std::set_difference(ia.begin(), ia.end(), h.begin(), h.end(), std::back_inserter(rest));
    const std::size_t k = n - h.size();
    if (k > rest.size()) continue;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
      GeneratorSet c = h;
      for (std::size_t i : idx) c.push_back(rest[i]);
      pool.insert(make_generators(std::move(c)));
      // next combination
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == rest.size() - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return {pool.begin(), pool.end()};
}

BedimResult big_bedim(const GoodSemigroup& s) {
  const GeneratorSet ia = irreducible_absolutes(s);
  const auto mhs = minimal_hitting_sets(s).transversals;
  const std::size_t start = mhs.empty() ? 0 : mhs.front().size();
  for (std::size_t n = start; n <= ia.size(); ++n)
    for (const auto& c : candidate_pool(ia, mhs, n))
      if (closure_from(s, ia, c).result() == ia) return {n, c};
  return {ia.size(), ia};
}

RhoCertificate rho_certificate(const GoodSemigroup& s, const GeneratorSet& eta_in, const Point& a) {
  RhoCertificate cert;
  if (a.y.is_inf()) return cert;
  const GeneratorSet eta = make_generators(eta_in);
  const std::int64_t a2 = a.y.value();
  std::int64_t max_x = 0;
  for (const auto& g : eta)
    if (g.is_finite()) max_x = std::max(max_x, g.x.value());
  const std::int64_t cap = a.x.is_finite() ? a.x.value() - 1 : a2 * max_x;
  if (cap < 0) return cert;
  const ProductMonoid m(eta, std::max(cap, s.c1() + s.e1()) + 1);
  const auto line = m.exact_line(2, a2, cap);
  auto covered = [&](std::int64_t lo, std::int64_t hi, RhoCertificate& c) {
    c.range.clear();
    c.witnesses.clear();
    for (std::int64_t x = lo; x <= hi; ++x) {
      if (!s.contains(x, a2)) continue;
      c.range.push_back(x);
      const std::int64_t far = m.best(1, x);
      if (far <= a2) return false;
      c.witnesses.push_back(as_point(far, x, 1));
    }
    return true;
  };
  if (a.x.is_finite()) {
    if (line.empty()) return cert;
    // a larger b1 only shrinks the range to cover
    const std::int64_t b1 = line.back();
    const auto d_s = delta_max_left(s, a);
    cert.product = Point{b1, a2};
    cert.reducible = covered(b1, d_s ? d_s->value() : b1 - 1, cert);
    return cert;
  }
  const std::int64_t tilde = s.row_tail_start(a2);
  for (std::int64_t b1 : line) {
    RhoCertificate c;
    c.product = Point{b1, a2};
    if (covered(b1, std::max(b1, tilde) + s.e1() - 1, c)) {
      c.reducible = true;
      return c;
    }
  }
  return cert;
}

bool is_rho_reducible(const GoodSemigroup& s, const GeneratorSet& eta, const Point& a) {
  return rho_certificate(s, eta, a).reducible;
}

std::vector<Point> rho_order(GeneratorSet v) {
  std::sort(v.begin(), v.end(), [](const Point& a, const Point& b) { return b < a; });
  return v;
}

GeneratorSet rho_sor(const GoodSemigroup& s) {
  const GeneratorSet ia = irreducible_absolutes(s);
  GeneratorSet eta = ia;
  for (const auto& a : rho_order(ia)) {
    GeneratorSet others;
    for (const auto& b : ia)
      if (b != a) others.push_back(b);
    if (is_rho_reducible(s, others, a)) std::erase(eta, a);
  }
  return eta;
}

GeneratorSet eta_s(const GoodSemigroup& s) {
  GeneratorSet out;
  for (const auto& a : irreducible_absolutes(s)) {
    const SetDescription left = delta(s, a, DeltaKind::left);
    bool inside = true;
    for (const auto& p : left.points) inside = inside && in_apery_bar(s, p.x.value(), p.y.value());
    // a row tail is constant beyond c1+e1
    for (const auto& t : left.row_tails)
      for (std::int64_t x = t.x.value(); x <= s.c1() + s.e1() && inside; ++x) inside = in_apery_bar(s, x, t.y.value());
    if (inside) out.push_back(a);
  }
  return out;
}

}  // namespace goodsemi
