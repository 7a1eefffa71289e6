#include "axial/spectral.hpp"

#include <algorithm>
#include <map>

namespace axial {

Polynomial characteristic_polynomial(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  const FieldTag f = m.field();
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
  Polynomial c(n + 1, Scalar::zero(f));
  c[n] = Scalar::one(f);
  Matrix mk(n, n, f);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    Matrix am = m * mk;
    Scalar tr = Scalar::zero(f);
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr * mpq_class(1, static_cast<long>(k));
  }
  return c;
}

Scalar evaluate(const Polynomial& p, const Scalar& x) {
  if (p.empty()) return Scalar::zero(x.field());
  Scalar acc = p.back();
  for (std::size_t i = p.size() - 1; i-- > 0;) {
    acc *= x;
    acc += p[i];
  }
  return acc;
}

namespace {

void trim(Polynomial& p) {
  while (p.size() > 1 && p.back().is_zero()) p.pop_back();
}

// Divides p by (x - r); assumes r is a root.
Polynomial deflate(const Polynomial& p, const Scalar& r) {
  const std::size_t d = p.size() - 1;
  Polynomial q(d, Scalar::zero(r.field()));
  Scalar carry = Scalar::zero(r.field());
  for (std::size_t i = d; i-- > 0;) {
    carry = p[i + 1] + carry * r;
    q[i] = carry;
  }
  return q;
}

bool strip_root(Polynomial& p, const Scalar& r) {
  bool any = false;
  while (p.size() > 1 && evaluate(p, r).is_zero()) {
    p = deflate(p, r);
    any = true;
  }
  return any;
}

// Prime factorisation by trial division; false when a composite cofactor remains.
bool factor(mpz_class n, std::vector<std::pair<mpz_class, unsigned>>& out) {
  n = abs(n);
  for (unsigned long p = 2; p < 1000000 && mpz_class(p) * p <= n; p += (p == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(mpz_class(p), e);
  }
  if (n > 1) {
    if (n >= mpz_class(1000000) * 1000000 && mpz_probab_prime_p(n.get_mpz_t(), 30) == 0) return false;
    out.emplace_back(n, 1);
  }
  return true;
}

std::vector<mpz_class> divisors(const mpz_class& n, bool& ok, std::size_t cap) {
  std::vector<std::pair<mpz_class, unsigned>> fs;
  ok = factor(n, fs);
  std::vector<mpz_class> ds{1};
  if (!ok) return ds;
  for (const auto& [p, e] : fs) {
    std::size_t cur = ds.size();
    mpz_class pw = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pw *= p;
      for (std::size_t i = 0; i < cur; ++i) ds.push_back(ds[i] * pw);
      if (ds.size() > cap) {
        ok = false;
        return ds;
      }
    }
  }
  return ds;
}

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
  if (sgn(q) < 0) return std::nullopt;
  mpz_class num = q.get_num(), den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return mpq_class(rn, rd);
}

std::optional<Scalar> field_sqrt(const Scalar& d) {
  if (d.field() == FieldTag::Rationals) {
    auto r = rational_sqrt(d.re());
    if (!r) return std::nullopt;
    return Scalar(*r);
  }
  if (d.is_real()) {
    if (sgn(d.re()) >= 0) {
      auto r = rational_sqrt(d.re());
      if (r) return Scalar(*r, mpq_class(0));
      return std::nullopt;
    }
    auto r = rational_sqrt(-d.re());
    if (r) return Scalar(mpq_class(0), *r);
    return std::nullopt;
  }
  // (x + yi)^2 = u + vi: x^2 = (u + |d|) / 2, y = v / (2x).
  auto modulus = rational_sqrt(d.re() * d.re() + d.im() * d.im());
  if (!modulus) return std::nullopt;
  auto x = rational_sqrt((d.re() + *modulus) / 2);
  if (!x || sgn(*x) == 0) return std::nullopt;
  mpq_class y = d.im() / (2 * *x);
  return Scalar(*x, y);
}

void rational_scan(Polynomial& p, std::vector<Scalar>& roots) {
  trim(p);
  if (p.size() <= 1) return;
  for (const auto& c : p)
    if (!c.is_real()) return;
  const FieldTag f = p[0].field();
  strip_root(p, Scalar::zero(f)) ? roots.push_back(Scalar::zero(f)) : void();
  if (p.size() <= 1) return;
  mpz_class l = 1;
  for (const auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.re().get_den().get_mpz_t());
  mpz_class a0 = mpq_class(p.front().re() * l).get_num();
  mpz_class ad = mpq_class(p.back().re() * l).get_num();
  bool ok0 = true, okd = true;
  auto dp = divisors(a0, ok0, 20000);
  auto dq = divisors(ad, okd, 20000);
  if (!ok0 || !okd) return;
  for (const auto& q : dq)
    for (const auto& num : dp)
      for (int sign : {1, -1}) {
        if (p.size() <= 1) return;
        mpq_class r(sign * num, q);
        r.canonicalize();
        if (r.get_den() != q) continue;  // already tried in lowest terms
        Scalar s(r, f);
        if (strip_root(p, s)) roots.push_back(s);
      }
}

}  // namespace

RootSearch find_roots(Polynomial p, const std::vector<Scalar>& candidates) {
  trim(p);
  RootSearch res;
  for (const auto& c : candidates) {
    if (std::find(res.roots.begin(), res.roots.end(), c) != res.roots.end()) continue;
    if (strip_root(p, c)) res.roots.push_back(c);
  }
  rational_scan(p, res.roots);
  trim(p);
  if (p.size() == 2) {
    Scalar r = -p[0] / p[1];
    strip_root(p, r);
    res.roots.push_back(r);
  } else if (p.size() == 3) {
    Scalar a = p[2], b = p[1], c = p[0];
    Scalar disc = b * b - Scalar(4L, a.field()) * a * c;
    if (auto s = field_sqrt(disc)) {
      Scalar two_a = a * mpq_class(2);
      for (const Scalar& r : {(-b + *s) / two_a, (-b - *s) / two_a}) {
        if (strip_root(p, r)) res.roots.push_back(r);
      }
    }
  }
  trim(p);
  res.remainder = p;
  res.complete = p.size() <= 1;
  std::sort(res.roots.begin(), res.roots.end());
  return res;
}

std::vector<Scalar> EigenData::spectrum() const {
  std::vector<Scalar> s;
  for (const auto& e : spaces) s.push_back(e.value);
  return s;
}

const Eigenspace* EigenData::find(const Scalar& v) const {
  for (const auto& e : spaces)
    if (e.value.compare(v) == 0) return &e;
  return nullptr;
}

std::size_t EigenData::dim_of(const Scalar& v) const {
  const auto* e = find(v);
  return e ? e->space.dim() : 0;
}

void EigenData::prepare_decomposition() {
  if (!semisimple) return;
  std::vector<Vector> cols;
  blocks_.clear();
  for (const auto& e : spaces) {
    blocks_.emplace_back(cols.size(), e.space.dim());
    for (const auto& b : e.space.basis()) cols.push_back(b);
  }
  const std::size_t n = element.size();
  auto inv = inverse(Matrix::from_columns(cols, n, spaces.empty() ? FieldTag::Rationals : spaces[0].value.field()));
  if (!inv) throw SpectralError("internal: eigenbasis is singular");
  basis_inverse_ = *inv;
}

std::vector<std::pair<Scalar, Vector>> EigenData::decompose(const Vector& v) const {
  if (!semisimple) throw SpectralError("decomposition requires a semisimple element");
  Vector c = basis_inverse_ * v;
  std::vector<std::pair<Scalar, Vector>> out;
  for (std::size_t s = 0; s < spaces.size(); ++s) {
    Vector z = zero_vector(v.size(), v.empty() ? FieldTag::Rationals : v[0].field());
    auto [start, len] = blocks_[s];
    for (std::size_t t = 0; t < len; ++t) axpy(z, c[start + t], spaces[s].space.basis()[t]);
    out.emplace_back(spaces[s].value, std::move(z));
  }
  return out;
}

EigenData eigen_decompose(const Algebra& a, const Element& x, const std::vector<Scalar>& hints) {
  const std::size_t n = a.dim();
  const FieldTag f = a.field();
  Matrix l = left_mult_matrix(a, x);
  EigenData ed;
  ed.element = x;
  std::size_t total = 0;
  auto add_space = [&](const Scalar& v) {
    if (ed.find(v)) return;
    Matrix shifted = l;
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= v;
    Subspace k = kernel(shifted);
    if (k.dim() == 0) return;
    total += k.dim();
    ed.spaces.push_back({v, std::move(k)});
  };
  std::vector<Scalar> hs;
  for (const auto& h : hints) {
    if (h.field() == f) {
      hs.push_back(h);
    } else if (f == FieldTag::GaussianRationals || h.is_real()) {
      hs.push_back(h.in_field(f));
    }
  }
  for (const auto& h : hs) add_space(h);
  if (total == n) {
    ed.spectrum_complete = true;
  } else {
    auto rs = find_roots(characteristic_polynomial(l), ed.spectrum());
    for (const auto& r : rs.roots) add_space(r);
    ed.spectrum_complete = rs.complete;
  }
  ed.semisimple = total == n;
  std::sort(ed.spaces.begin(), ed.spaces.end(),
            [](const Eigenspace& p, const Eigenspace& q) { return p.value < q.value; });
  ed.prepare_decomposition();
  return ed;
}

AxisReport check_axis(const Algebra& a, const Element& axis, const FusionLaw& law) {
  if (law.field() != a.field()) throw FieldMismatch("fusion law and algebra live over different fields");
  AxisReport rep;
  rep.axis = axis;
  rep.idempotent = is_idempotent(a, axis);
  if (!rep.idempotent) {
    rep.violations.push_back({"not_idempotent", "a*a != a", {axis, a.multiply(axis, axis)}});
  }
  rep.eigen = eigen_decompose(a, axis, law.values());
  rep.semisimple = rep.eigen.semisimple;
  rep.spectrum_complete = rep.eigen.spectrum_complete;
  rep.primitive = rep.eigen.dim_of(Scalar::one(a.field())) == 1;
  if (!rep.spectrum_complete) {
    rep.violations.push_back({"spectrum_undetermined", "characteristic polynomial has roots outside the field", {}});
  }
  if (!rep.semisimple) {
    rep.violations.push_back({"not_semisimple", "eigenspaces do not span the algebra", {}});
  }
  rep.spectrum_in_law = true;
  for (const auto& e : rep.eigen.spaces) {
    if (!law.contains_value(e.value)) {
      rep.spectrum_in_law = false;
      rep.violations.push_back({"spectrum_outside_law", "eigenvalue " + e.value.str() + " not in law",
                                {e.space.basis().front()}});
    }
  }
  if (!rep.semisimple) return rep;

  const auto& sp = rep.eigen.spaces;
  for (std::size_t p = 0; p < sp.size(); ++p)
    for (std::size_t q = p; q < sp.size(); ++q) {
      PairObservation obs{sp[p].value, sp[q].value, {}};
      std::map<std::size_t, bool> seen;
      const auto& bp = sp[p].space.basis();
      const auto& bq = sp[q].space.basis();
      for (std::size_t i = 0; i < bp.size(); ++i)
        for (std::size_t j = (p == q ? i : 0); j < bq.size(); ++j) {
          auto comps = rep.eigen.decompose(a.multiply(bp[i], bq[j]));
          for (std::size_t c = 0; c < comps.size(); ++c) {
            if (is_zero(comps[c].second) || seen[c]) continue;
            seen[c] = true;
            obs.targets.push_back(comps[c].first);
            bool allowed = law.contains_value(obs.lambda) && law.contains_value(obs.mu) &&
                           law.star_contains(obs.lambda, obs.mu, comps[c].first);
            if (!allowed) {
              rep.violations.push_back({"fusion_violation",
                                        obs.lambda.str() + " * " + obs.mu.str() + " has a component in " +
                                            comps[c].first.str(),
                                        {bp[i], bq[j], comps[c].second}});
            }
          }
        }
      std::sort(obs.targets.begin(), obs.targets.end());
      rep.observed.push_back(std::move(obs));
    }
  return rep;
}

FusionLaw minimal_law(const Algebra& a, const std::vector<Element>& axes, const std::vector<Scalar>& hints) {
  const FieldTag f = a.field();
  struct Obs {
    Scalar l, m, t;
  };
  std::vector<Scalar> values;
  std::vector<Obs> cells;
  for (const auto& x : axes) {
    if (!is_idempotent(a, x)) throw SpectralError("minimal_law: element is not an idempotent");
    EigenData ed = eigen_decompose(a, x, hints);
    if (!ed.semisimple) throw SpectralError("minimal_law: element is not semisimple");
    for (const auto& e : ed.spaces) values.push_back(e.value);
    const auto& sp = ed.spaces;
    for (std::size_t p = 0; p < sp.size(); ++p)
      for (std::size_t q = p; q < sp.size(); ++q) {
        const auto& bp = sp[p].space.basis();
        const auto& bq = sp[q].space.basis();
        for (std::size_t i = 0; i < bp.size(); ++i)
          for (std::size_t j = (p == q ? i : 0); j < bq.size(); ++j)
            for (const auto& [nu, z] : ed.decompose(a.multiply(bp[i], bq[j])))
              if (!is_zero(z)) cells.push_back({sp[p].value, sp[q].value, nu});
      }
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  FusionLaw law(f, values);
  for (const auto& c : cells) law.add(c.l, c.m, c.t);
  return law;
}

bool AxialCertificate::certified() const {
  return generates && std::all_of(reports.begin(), reports.end(), [](const AxisReport& r) { return r.is_axis(); });
}

AxialCertificate check_axial_algebra(const Algebra& a, const std::vector<Element>& axes, const FusionLaw& law) {
  AxialCertificate cert;
  for (const auto& x : axes) cert.reports.push_back(check_axis(a, x, law));
  auto cl = subalgebra_closure(a, axes);
  cert.closure_dim = cl.span.dim();
  cert.generates = cl.span.dim() == a.dim();
  cert.max_word_length = cl.max_word_length;
  return cert;
}

}  // namespace axial
