#include "lindiff/scalars.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace lindiff {

namespace {

bool desc_exps(const CoefPoly::Term& a, const CoefPoly::Term& b) { return a.first > b.first; }

ExpVec add_exps(const ExpVec& a, const ExpVec& b) {
  ExpVec r{};
  for (std::size_t i = 0; i < kMaxSymbols; ++i) r[i] = static_cast<std::uint16_t>(a[i] + b[i]);
  return r;
}

bool exps_divide(const ExpVec& d, const ExpVec& m) {
  for (std::size_t i = 0; i < kMaxSymbols; ++i)
    if (d[i] > m[i]) return false;
  return true;
}

ExpVec sub_exps(const ExpVec& a, const ExpVec& b) {
  ExpVec r{};
  for (std::size_t i = 0; i < kMaxSymbols; ++i) r[i] = static_cast<std::uint16_t>(a[i] - b[i]);
  return r;
}

// Merges two descending term lists with b scaled by `sign`.
std::vector<CoefPoly::Term> merge_terms(const std::vector<CoefPoly::Term>& a,
                                        const std::vector<CoefPoly::Term>& b, int sign) {
  std::vector<CoefPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first > b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first > a[i].first) {
      out.emplace_back(b[j].first, sign > 0 ? b[j].second : BigRat(-b[j].second));
      ++j;
    } else {
      BigRat c = sign > 0 ? BigRat(a[i].second + b[j].second) : BigRat(a[i].second - b[j].second);
      if (sgn(c) != 0) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

BigInt integer_content(const CoefPoly& p) {
  BigInt g = 0;
  for (const auto& [e, c] : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    if (g == 1) break;
  }
  return g;
}

CoefPoly positive_lead(CoefPoly p) {
  if (!p.is_zero() && sgn(p.leading_coeff()) < 0) p = -p;
  return p;
}

CoefPoly exact(const CoefPoly& a, const CoefPoly& b) {
  auto q = CoefPoly::divide_exact(a, b);
  if (!q) throw MathError("internal: inexact polynomial division");
  return *std::move(q);
}

// Polynomial in one distinguished slot with coefficients free of that slot;
// index = degree, trailing entry nonzero.
using UPoly = std::vector<CoefPoly>;

UPoly split_in(const CoefPoly& p, std::size_t v) {
  UPoly out(p.degree(v) + 1);
  std::vector<std::vector<CoefPoly::Term>> buckets(out.size());
  for (const auto& [e, c] : p.terms()) {
    ExpVec f = e;
    const unsigned d = f[v];
    f[v] = 0;
    buckets[d].emplace_back(f, c);
  }
  for (std::size_t d = 0; d < out.size(); ++d) out[d] = CoefPoly::from_terms(std::move(buckets[d]));
  return out;
}

CoefPoly join_in(const UPoly& u, std::size_t v) {
  std::vector<CoefPoly::Term> terms;
  for (std::size_t d = 0; d < u.size(); ++d)
    for (const auto& [e, c] : u[d].terms()) {
      ExpVec f = e;
      f[v] = static_cast<std::uint16_t>(d);
      terms.emplace_back(f, c);
    }
  return CoefPoly::from_terms(std::move(terms));
}

void trim(UPoly& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

UPoly pseudo_remainder(UPoly a, const UPoly& b) {
  const std::size_t db = b.size() - 1;
  const CoefPoly& lb = b.back();
  long e = static_cast<long>(a.size()) - static_cast<long>(db);
  while (!a.empty() && a.size() - 1 >= db) {
    const CoefPoly lr = a.back();
    const std::size_t d = a.size() - 1 - db;
    for (auto& c : a) c = c * lb;
    for (std::size_t i = 0; i <= db; ++i) a[i + d] -= lr * b[i];
    trim(a);
    --e;
  }
  if (e > 0) {
    const CoefPoly f = lb.pow(static_cast<unsigned>(e));
    for (auto& c : a) c = c * f;
  }
  return a;
}

CoefPoly gcd_primitive(const CoefPoly& a, const CoefPoly& b);

CoefPoly content_of(const UPoly& u) {
  CoefPoly g;
  for (const auto& c : u) {
    if (c.is_zero()) continue;
    g = poly_gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

// Subresultant PRS over Z[others][v]; inputs primitive in v.
UPoly subresultant_gcd(UPoly a, UPoly b) {
  if (a.size() < b.size()) std::swap(a, b);
  CoefPoly g(1);
  CoefPoly h(1);
  for (;;) {
    const std::size_t delta = a.size() - b.size();
    UPoly r = pseudo_remainder(a, b);
    if (r.empty()) return b;
    if (r.size() == 1) return UPoly{CoefPoly(1)};
    a = std::move(b);
    const CoefPoly divisor = g * h.pow(static_cast<unsigned>(delta));
    for (auto& c : r) c = exact(c, divisor);
    b = std::move(r);
    g = a.back();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = exact(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
    }
  }
}

ExpVec used_slots(const CoefPoly& p) {
  ExpVec m{};
  for (const auto& [e, c] : p.terms())
    for (std::size_t i = 0; i < kMaxSymbols; ++i) m[i] = std::max(m[i], e[i]);
  return m;
}

CoefPoly content_in(const CoefPoly& p, std::size_t v) { return content_of(split_in(p, v)); }

// Arithmetic modulo the Mersenne prime 2^61 - 1.
constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 t = static_cast<unsigned __int128>(a) * b;
  std::uint64_t r = static_cast<std::uint64_t>(t & kPrime) + static_cast<std::uint64_t>(t >> 61);
  return r >= kPrime ? r - kPrime : r;
}

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t r = a + b;
  return r >= kPrime ? r - kPrime : r;
}

std::uint64_t inv_mod(std::uint64_t a) {
  std::uint64_t r = 1, e = kPrime - 2;
  while (e) {
    if (e & 1U) r = mul_mod(r, a);
    a = mul_mod(a, a);
    e >>= 1U;
  }
  return r;
}

std::uint64_t to_mod(const BigRat& c) {
  // integer coefficients only
  BigInt r = c.get_num() % BigInt(static_cast<unsigned long>(kPrime));
  if (r < 0) r += static_cast<unsigned long>(kPrime);
  return r.get_ui();
}

// Image of p in Z_p[v] with every other slot replaced by point[slot].
std::vector<std::uint64_t> univariate_image(const CoefPoly& p, std::size_t v, const std::vector<std::uint64_t>& point) {
  std::vector<std::uint64_t> out(p.degree(v) + 1, 0);
  for (const auto& [e, c] : p.terms()) {
    std::uint64_t x = to_mod(c);
    for (std::size_t i = 0; i < kMaxSymbols; ++i)
      if (i != v)
        for (unsigned k = 0; k < e[i]; ++k) x = mul_mod(x, point[i]);
    out[e[v]] = add_mod(out[e[v]], x);
  }
  return out;
}

std::size_t gcd_degree_mod(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b) {
  auto strip = [](std::vector<std::uint64_t>& u) {
    while (!u.empty() && u.back() == 0) u.pop_back();
  };
  strip(a);
  strip(b);
  while (!b.empty()) {
    if (a.size() >= b.size()) {
      const std::uint64_t inv = inv_mod(b.back());
      while (a.size() >= b.size()) {
        const std::uint64_t q = mul_mod(a.back(), inv);
        const std::size_t d = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[i + d] = add_mod(a[i + d], kPrime - mul_mod(q, b[i]));
        strip(a);
      }
    }
    std::swap(a, b);
  }
  return a.empty() ? 0 : a.size() - 1;
}

// True when a modular image proves that a and b (primitive, nonconstant)
// have no common factor of positive degree. False means unknown.
bool certainly_coprime(const CoefPoly& a, const CoefPoly& b, const ExpVec& ua, const ExpVec& ub) {
  std::vector<std::uint64_t> point(kMaxSymbols);
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
  for (auto& x : point) {
    seed ^= seed << 13;
    seed ^= seed >> 7;
    seed ^= seed << 17;
    x = seed % kPrime;
  }
  for (std::size_t v = 0; v < kMaxSymbols; ++v) {
    if (ua[v] == 0 || ub[v] == 0) continue;
    const auto ia = univariate_image(a, v, point);
    const auto ib = univariate_image(b, v, point);
    if (ia.back() == 0 || ib.back() == 0) return false;
    if (gcd_degree_mod(ia, ib) != 0) return false;
  }
  return true;
}

// Both arguments nonzero, primitive over Z; result primitive, positive lead.
CoefPoly gcd_primitive(const CoefPoly& a, const CoefPoly& b) {
  if (a.is_constant() || b.is_constant()) return CoefPoly(1);
  if (a == b || a == -b) return positive_lead(a);

  if (a.size() == 1 || b.size() == 1) {
    ExpVec m = a.leading().first;
    for (const auto* p : {&a, &b})
      for (const auto& [e, c] : p->terms())
        for (std::size_t i = 0; i < kMaxSymbols; ++i) m[i] = std::min(m[i], e[i]);
    return CoefPoly::monomial(m, 1);
  }

  const ExpVec ua = used_slots(a);
  const ExpVec ub = used_slots(b);
  for (std::size_t v = 0; v < kMaxSymbols; ++v) {
    if (ua[v] > 0 && ub[v] == 0) return poly_gcd(content_in(a, v), b);
    if (ub[v] > 0 && ua[v] == 0) return poly_gcd(a, content_in(b, v));
  }

  if (certainly_coprime(a, b, ua, ub)) return CoefPoly(1);

  if (b.size() <= a.size()) {
    if (CoefPoly::divide_exact(a, b)) return positive_lead(b);
  } else if (CoefPoly::divide_exact(b, a)) {
    return positive_lead(a);
  }

  std::size_t v = kMaxSymbols;
  unsigned best = ~0U;
  for (std::size_t s = 0; s < kMaxSymbols; ++s) {
    if (ua[s] == 0) continue;
    const unsigned d = std::max<unsigned>(ua[s], ub[s]);
    if (d < best) {
      best = d;
      v = s;
    }
  }

  UPoly sa = split_in(a, v);
  UPoly sb = split_in(b, v);
  const CoefPoly ca = content_of(sa);
  const CoefPoly cb = content_of(sb);
  const CoefPoly c = poly_gcd(ca, cb);
  if (!ca.is_one())
    for (auto& t : sa) t = exact(t, ca);
  if (!cb.is_one())
    for (auto& t : sb) t = exact(t, cb);

  UPoly g = subresultant_gcd(std::move(sa), std::move(sb));
  const CoefPoly cg = content_of(g);
  if (!cg.is_one())
    for (auto& t : g) t = exact(t, cg);
  CoefPoly out = c * join_in(g, v);
  out.make_primitive();
  return positive_lead(std::move(out));
}

std::string rat_text(const BigRat& q) { return q.get_str(); }

}  // namespace

// ---------------------------------------------------------------- CoefPoly

CoefPoly::CoefPoly(const BigRat& c) {
  if (sgn(c) != 0) terms_.emplace_back(ExpVec{}, c);
}

CoefPoly CoefPoly::variable(std::size_t slot) {
  if (slot >= kMaxSymbols) throw MathError("symbol slot out of range");
  ExpVec e{};
  e[slot] = 1;
  return monomial(e, 1);
}

CoefPoly CoefPoly::monomial(const ExpVec& e, const BigRat& c) {
  CoefPoly p;
  if (sgn(c) != 0) p.terms_.emplace_back(e, c);
  return p;
}

CoefPoly CoefPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), desc_exps);
  CoefPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
    } else {
      if (!p.terms_.empty() && sgn(p.terms_.back().second) == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && sgn(p.terms_.back().second) == 0) p.terms_.pop_back();
  return p;
}

bool CoefPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == ExpVec{});
}

bool CoefPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].first == ExpVec{} && terms_[0].second == 1;
}

BigRat CoefPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().first == ExpVec{}) return terms_.back().second;
  return 0;
}

unsigned CoefPoly::degree(std::size_t slot) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max<unsigned>(d, e[slot]);
  return d;
}

unsigned CoefPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) {
    unsigned s = 0;
    for (auto x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

bool CoefPoly::uses_any_below(std::size_t count) const {
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < count && i < kMaxSymbols; ++i)
      if (e[i] != 0) return true;
  return false;
}

std::size_t CoefPoly::symbol_span() const {
  std::size_t s = 0;
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < kMaxSymbols; ++i)
      if (e[i] != 0) s = std::max(s, i + 1);
  return s;
}

CoefPoly CoefPoly::operator-() const {
  CoefPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

CoefPoly& CoefPoly::operator+=(const CoefPoly& o) {
  terms_ = merge_terms(terms_, o.terms_, 1);
  return *this;
}

CoefPoly& CoefPoly::operator-=(const CoefPoly& o) {
  terms_ = merge_terms(terms_, o.terms_, -1);
  return *this;
}

CoefPoly operator*(const CoefPoly& a, const CoefPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  if (b.size() == 1 && b.terms_[0].first == ExpVec{}) return a.scaled(b.terms_[0].second);
  if (a.size() == 1 && a.terms_[0].first == ExpVec{}) return b.scaled(a.terms_[0].second);
  std::vector<CoefPoly::Term> out;
  out.reserve(a.size() * b.size());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.emplace_back(add_exps(ea, eb), ca * cb);
  return CoefPoly::from_terms(std::move(out));
}

CoefPoly CoefPoly::scaled(const BigRat& c) const {
  if (sgn(c) == 0) return {};
  CoefPoly r = *this;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

CoefPoly CoefPoly::pow(unsigned e) const {
  CoefPoly result(1);
  CoefPoly base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

std::optional<CoefPoly> CoefPoly::divide_exact(const CoefPoly& a, const CoefPoly& b) {
  if (b.is_zero()) throw MathError("division by zero in 𝕂");
  if (a.is_zero()) return CoefPoly{};
  if (b.is_one()) return a;
  const auto& [lbe, lbc] = b.terms_.front();
  std::vector<Term> quotient;
  CoefPoly r = a;
  while (!r.is_zero()) {
    const auto& [lre, lrc] = r.terms_.front();
    if (!exps_divide(lbe, lre)) return std::nullopt;
    const ExpVec qe = sub_exps(lre, lbe);
    const BigRat qc = lrc / lbc;
    std::vector<Term> sub;
    sub.reserve(b.size());
    for (const auto& [e, c] : b.terms_) sub.emplace_back(add_exps(e, qe), c * qc);
    quotient.emplace_back(qe, qc);
    CoefPoly s;
    s.terms_ = std::move(sub);
    r -= s;
  }
  CoefPoly q;
  q.terms_ = std::move(quotient);  // generated in descending order
  return q;
}

CoefPoly CoefPoly::shifted(std::size_t slot, long steps) const {
  if (steps == 0 || !uses(slot)) return *this;
  const BigInt k = steps;
  std::vector<Term> out;
  for (const auto& [e, c] : terms_) {
    const unsigned d = e[slot];
    BigInt binom = 1;
    BigInt kp = 1;  // k^(d-j), built from j = d downwards
    std::vector<BigInt> kpow(d + 1);
    for (unsigned i = 0; i <= d; ++i) {
      kpow[i] = kp;
      kp *= k;
    }
    for (unsigned j = d + 1; j-- > 0;) {
      // binom = C(d, j)
      ExpVec f = e;
      f[slot] = static_cast<std::uint16_t>(j);
      out.emplace_back(f, c * BigRat(binom * kpow[d - j]));
      binom = binom * j / (d - j + 1);
    }
  }
  return from_terms(std::move(out));
}

CoefPoly CoefPoly::reflected(std::size_t slot) const {
  if (!uses(slot)) return *this;
  std::vector<Term> out = terms_;
  for (auto& [e, c] : out)
    if (e[slot] % 2 == 1) c = -c;
  return from_terms(std::move(out));
}

CoefPoly CoefPoly::evaluated(std::size_t slot, const BigRat& value) const {
  if (!uses(slot)) return *this;
  std::vector<Term> out;
  for (const auto& [e, c] : terms_) {
    BigRat f = c;
    for (unsigned i = 0; i < e[slot]; ++i) f *= value;
    ExpVec g = e;
    g[slot] = 0;
    out.emplace_back(g, f);
  }
  return from_terms(std::move(out));
}

BigRat CoefPoly::make_primitive() {
  if (terms_.empty()) return 1;
  BigInt l = 1;
  for (const auto& [e, c] : terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  BigInt g = 0;
  for (const auto& [e, c] : terms_) {
    BigRat s = c * l;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_num_mpz_t());
  }
  BigRat factor(l, g);
  factor.canonicalize();
  if (factor != 1)
    for (auto& t : terms_) t.second *= factor;
  return factor;
}

std::string CoefPoly::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool neg = sgn(c) < 0;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    const BigRat mag = abs(c);
    std::string mono;
    for (std::size_t i = 0; i < kMaxSymbols; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += i < names.size() ? names[i] : ("s" + std::to_string(i));
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += rat_text(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += rat_text(mag) + "*" + mono;
    }
  }
  return out;
}

// ---------------------------------------------------------------- gcd

CoefPoly poly_gcd(const CoefPoly& a, const CoefPoly& b) {
  if (a.is_zero()) return positive_lead(b);
  if (b.is_zero()) return positive_lead(a);
  BigInt ca = integer_content(a);
  BigInt cb = integer_content(b);
  BigInt ic;
  mpz_gcd(ic.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  if (a.is_constant() || b.is_constant()) return CoefPoly(BigRat(ic));
  CoefPoly pa = ca == 1 ? a : a.scaled(BigRat(1, 1) / BigRat(ca));
  CoefPoly pb = cb == 1 ? b : b.scaled(BigRat(1, 1) / BigRat(cb));
  CoefPoly g = gcd_primitive(pa, pb);
  return ic == 1 ? g : g.scaled(BigRat(ic));
}

// ---------------------------------------------------------------- RatFun

RatFun::RatFun(const BigRat& c) {
  BigRat q = c;
  q.canonicalize();
  num_ = CoefPoly(BigRat(q.get_num()));
  den_ = CoefPoly(BigRat(q.get_den()));
}

RatFun::RatFun(const CoefPoly& poly) { *this = make(poly, CoefPoly(1)); }

RatFun RatFun::make(CoefPoly num, CoefPoly den) {
  if (den.is_zero()) throw MathError("division by zero in 𝕂");
  if (num.is_zero()) return {};
  BigInt l = 1;
  for (const auto* p : {&num, &den})
    for (const auto& [e, c] : p->terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  if (l != 1) {
    num = num.scaled(BigRat(l));
    den = den.scaled(BigRat(l));
  }
  CoefPoly g = poly_gcd(num, den);
  if (!g.is_one()) {
    num = exact(num, g);
    den = exact(den, g);
  }
  if (sgn(den.leading_coeff()) < 0) {
    num = -num;
    den = -den;
  }
  return RatFun(std::move(num), std::move(den), 0);
}

RatFun ratfun_normalize(CoefPoly num, CoefPoly den) { return RatFun::make(std::move(num), std::move(den)); }

bool RatFun::is_shift_invariant(std::size_t index_count) const {
  return !num_.uses_any_below(index_count) && !den_.uses_any_below(index_count);
}

int RatFun::leading_sign() const { return num_.is_zero() ? 0 : sgn(num_.leading_coeff()); }

RatFun RatFun::operator-() const { return RatFun(-num_, den_, 0); }

RatFun operator+(const RatFun& a, const RatFun& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_.is_one() && b.den_.is_one()) {
    CoefPoly s = a.num_ + b.num_;
    if (s.is_zero()) return {};
    return RatFun(std::move(s), CoefPoly(1), 0);
  }
  if (a.den_ == b.den_) {
    CoefPoly s = a.num_ + b.num_;
    if (s.is_zero()) return {};
    CoefPoly g = poly_gcd(s, a.den_);
    if (g.is_one()) return RatFun(std::move(s), a.den_, 0);
    return RatFun(exact(s, g), exact(a.den_, g), 0);
  }
  CoefPoly d1 = poly_gcd(a.den_, b.den_);
  if (d1.is_one()) {
    CoefPoly s = a.num_ * b.den_ + b.num_ * a.den_;
    if (s.is_zero()) return {};
    return RatFun(std::move(s), a.den_ * b.den_, 0);
  }
  const CoefPoly ad1 = exact(a.den_, d1);
  const CoefPoly bd1 = exact(b.den_, d1);
  CoefPoly t = a.num_ * bd1 + b.num_ * ad1;
  if (t.is_zero()) return {};
  CoefPoly d2 = poly_gcd(t, d1);
  if (d2.is_one()) return RatFun(std::move(t), ad1 * b.den_, 0);
  return RatFun(exact(t, d2), ad1 * exact(b.den_, d2), 0);
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  CoefPoly an = a.num_;
  CoefPoly ad = a.den_;
  CoefPoly bn = b.num_;
  CoefPoly bd = b.den_;
  if (!bd.is_one()) {
    CoefPoly g1 = poly_gcd(an, bd);
    if (!g1.is_one()) {
      an = exact(an, g1);
      bd = exact(bd, g1);
    }
  }
  if (!ad.is_one()) {
    CoefPoly g2 = poly_gcd(bn, ad);
    if (!g2.is_one()) {
      bn = exact(bn, g2);
      ad = exact(ad, g2);
    }
  }
  return RatFun(an * bn, ad * bd, 0);
}

RatFun RatFun::inverse() const {
  if (is_zero()) throw MathError("division by zero in 𝕂");
  if (sgn(num_.leading_coeff()) < 0) return RatFun(-den_, -num_, 0);
  return RatFun(den_, num_, 0);
}

RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inverse(); }

RatFun RatFun::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  return RatFun(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)), 0);
}

RatFun RatFun::shifted(std::size_t slot, long steps) const {
  if (steps == 0) return *this;
  return RatFun(num_.shifted(slot, steps), den_.shifted(slot, steps), 0);
}

RatFun RatFun::reflected(std::size_t slot) const {
  return make(num_.reflected(slot), den_.reflected(slot));
}

RatFun RatFun::evaluated(std::size_t slot, const BigRat& value) const {
  return make(num_.evaluated(slot, value), den_.evaluated(slot, value));
}

std::string RatFun::to_string(std::span<const std::string> names) const {
  if (den_.is_one()) return num_.to_string(names);
  if (den_.is_constant()) return num_.scaled(1 / den_.constant_term()).to_string(names);
  return "(" + num_.to_string(names) + ")/(" + den_.to_string(names) + ")";
}

}  // namespace lindiff
