#include "cbperm/series.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cbperm {

namespace {

std::string describe(const TruncatedSeries::Exponents& e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
  return s + ")";
}

struct Term {
  TruncatedSeries::Exponents exps;
  const mpq_class* value;
};

std::vector<Term> nonzero_terms(const TruncatedSeries& s) {
  std::vector<Term> out;
  s.for_each_nonzero([&](const TruncatedSeries::Exponents& e, const mpq_class& v) {
    out.push_back({e, &v});
  });
  return out;
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<std::string> names, std::vector<int> caps)
    : names_(std::move(names)), caps_(std::move(caps)) {
  if (caps_.empty() || caps_.size() > 3 || names_.size() != caps_.size()) {
    throw std::invalid_argument("series needs 1..3 named variables");
  }
  for (int c : caps_) {
    if (c < 0) throw std::invalid_argument("series cap below zero");
  }
  strides_.assign(caps_.size(), 1);
  for (std::size_t i = caps_.size() - 1; i-- > 0;) {
    strides_[i] = strides_[i + 1] * static_cast<std::size_t>(caps_[i + 1] + 1);
  }
  coeffs_.assign(strides_[0] * static_cast<std::size_t>(caps_[0] + 1), mpq_class(0));
}

TruncatedSeries TruncatedSeries::constant(std::vector<std::string> names, std::vector<int> caps,
                                          const mpq_class& c) {
  TruncatedSeries s(std::move(names), std::move(caps));
  s.coeffs_[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::variable(std::vector<std::string> names, std::vector<int> caps,
                                          int var) {
  Exponents e(caps.size(), 0);
  e.at(static_cast<std::size_t>(var)) = 1;
  return monomial(std::move(names), std::move(caps), e);
}

TruncatedSeries TruncatedSeries::monomial(std::vector<std::string> names, std::vector<int> caps,
                                          const Exponents& exps, const mpq_class& c) {
  TruncatedSeries s(std::move(names), std::move(caps));
  if (s.fits(exps)) s.set(exps, c);
  return s;
}

bool TruncatedSeries::fits(const Exponents& exps) const {
  if (exps.size() != caps_.size()) return false;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0 || exps[i] > caps_[i]) return false;
  }
  return true;
}

std::size_t TruncatedSeries::index(const Exponents& exps) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) idx += strides_[i] * static_cast<std::size_t>(exps[i]);
  return idx;
}

TruncatedSeries::Exponents TruncatedSeries::exponents(std::size_t idx) const {
  Exponents e(caps_.size());
  for (std::size_t i = 0; i < caps_.size(); ++i) {
    e[i] = static_cast<int>(idx / strides_[i]);
    idx %= strides_[i];
  }
  return e;
}

const mpq_class& TruncatedSeries::coefficient(const Exponents& exps) const {
  if (!fits(exps)) {
    throw std::out_of_range("coefficient " + describe(exps) + " lies beyond the truncation caps");
  }
  return coeffs_[index(exps)];
}

void TruncatedSeries::set(const Exponents& exps, const mpq_class& value) {
  if (!fits(exps)) throw std::out_of_range("set: exponent " + describe(exps) + " beyond caps");
  coeffs_[index(exps)] = value;
}

TruncatedSeries TruncatedSeries::restricted(const std::vector<int>& caps) const {
  if (caps.size() != caps_.size()) throw std::invalid_argument("restricted: arity mismatch");
  for (std::size_t i = 0; i < caps.size(); ++i) {
    if (caps[i] > caps_[i]) {
      throw std::invalid_argument("restricted: cap " + std::to_string(caps[i]) + " for " +
                                  names_[i] + " exceeds the available " +
                                  std::to_string(caps_[i]));
    }
  }
  if (caps == caps_) return *this;
  TruncatedSeries out(names_, caps);
  for (std::size_t idx = 0; idx < out.coeffs_.size(); ++idx) {
    out.coeffs_[idx] = coeffs_[index(out.exponents(idx))];
  }
  return out;
}

bool TruncatedSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const mpq_class& c) { return c == 0; });
}

bool TruncatedSeries::all_nonnegative_integers() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const mpq_class& c) {
    return c >= 0 && c.get_den() == 1;
  });
}

std::optional<std::pair<TruncatedSeries::Exponents, mpq_class>> TruncatedSeries::as_monomial() const {
  std::optional<std::pair<Exponents, mpq_class>> found;
  for (std::size_t idx = 0; idx < coeffs_.size(); ++idx) {
    if (coeffs_[idx] == 0) continue;
    if (found) return std::nullopt;
    found.emplace(exponents(idx), coeffs_[idx]);
  }
  return found;
}

void TruncatedSeries::for_each_nonzero(
    const std::function<void(const Exponents&, const mpq_class&)>& f) const {
  for (std::size_t idx = 0; idx < coeffs_.size(); ++idx) {
    if (coeffs_[idx] != 0) f(exponents(idx), coeffs_[idx]);
  }
}

std::string TruncatedSeries::dump() const {
  std::vector<std::pair<Exponents, const mpq_class*>> terms;
  for (std::size_t idx = 0; idx < coeffs_.size(); ++idx) {
    if (coeffs_[idx] != 0) terms.emplace_back(exponents(idx), &coeffs_[idx]);
  }
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    const int da = std::accumulate(a.first.begin(), a.first.end(), 0);
    const int db = std::accumulate(b.first.begin(), b.first.end(), 0);
    if (da != db) return da < db;
    return a.first < b.first;
  });
  std::ostringstream out;
  for (const auto& [e, c] : terms) {
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << names_[i] << '^' << e[i];
    out << " : " << c->get_num().get_str() << '/' << c->get_den().get_str() << '\n';
  }
  return out.str();
}

void TruncatedSeries::check_compatible(const TruncatedSeries& other) const {
  if (names_ != other.names_) throw std::invalid_argument("series over different variables");
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

TruncatedSeries& TruncatedSeries::operator*=(const mpq_class& c) {
  for (auto& v : coeffs_) v *= c;
  return *this;
}

namespace {

std::vector<int> common_caps(const TruncatedSeries& a, const TruncatedSeries& b) {
  std::vector<int> caps(a.caps().size());
  for (std::size_t i = 0; i < caps.size(); ++i) caps[i] = std::min(a.caps()[i], b.caps()[i]);
  return caps;
}

}  // namespace

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.check_compatible(b);
  const auto caps = common_caps(a, b);
  TruncatedSeries out = a.restricted(caps);
  const TruncatedSeries rb = b.restricted(caps);
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] += rb.coeffs_[i];
  return out;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }

TruncatedSeries operator+(const TruncatedSeries& a, const mpq_class& c) {
  TruncatedSeries out = a;
  out.coeffs_[0] += c;
  return out;
}

TruncatedSeries operator-(const mpq_class& c, const TruncatedSeries& a) { return (-a) + c; }

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.check_compatible(b);
  const auto caps = common_caps(a, b);
  TruncatedSeries out(a.names_, caps);
  const TruncatedSeries ra = a.restricted(caps);
  const auto ta = nonzero_terms(ra);
  const TruncatedSeries rb = b.restricted(caps);
  const auto tb = nonzero_terms(rb);
  TruncatedSeries::Exponents e(caps.size());
  mpq_class prod;
  for (const auto& x : ta) {
    for (const auto& y : tb) {
      bool ok = true;
      for (std::size_t i = 0; i < caps.size(); ++i) {
        e[i] = x.exps[i] + y.exps[i];
        if (e[i] > caps[i]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      prod = *x.value * *y.value;
      out.coeffs_[out.index(e)] += prod;
    }
  }
  return out;
}

TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.check_compatible(b);
  if (b.coeffs_[0] == 0) throw std::domain_error("series division by a divisor with zero constant term");
  const auto caps = common_caps(a, b);
  TruncatedSeries q(a.names_, caps);
  const TruncatedSeries ra = a.restricted(caps);
  const TruncatedSeries rb = b.restricted(caps);
  auto tb = nonzero_terms(rb);
  tb.erase(tb.begin());  // constant term handled separately
  const mpq_class inv_b0 = 1 / rb.coeffs_[0];
  // Flat index order refines divisibility, so every q[m - e] is final here.
  TruncatedSeries::Exponents d(caps.size());
  mpq_class acc;
  for (std::size_t idx = 0; idx < q.coeffs_.size(); ++idx) {
    const auto m = q.exponents(idx);
    acc = ra.coeffs_[idx];
    for (const auto& t : tb) {
      bool ok = true;
      for (std::size_t i = 0; i < caps.size(); ++i) {
        d[i] = m[i] - t.exps[i];
        if (d[i] < 0) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      const mpq_class& qd = q.coeffs_[q.index(d)];
      if (qd != 0) acc -= *t.value * qd;
    }
    q.coeffs_[idx] = acc * inv_b0;
  }
  return q;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.names_ != b.names_) return false;
  const auto caps = common_caps(a, b);
  return a.restricted(caps).coeffs_ == b.restricted(caps).coeffs_;
}

TruncatedSeries sqrt(const TruncatedSeries& f) {
  if (f.coefficient(TruncatedSeries::Exponents(f.caps().size(), 0)) != 1) {
    throw std::domain_error("series sqrt needs constant term 1");
  }
  int total = 0;
  for (int c : f.caps()) total += c;
  const mpq_class half(1, 2);
  TruncatedSeries s = TruncatedSeries::constant(f.names(), f.caps(), 1);
  // Correct total-degree layers at least double per step.
  for (int iter = 0; iter < total + 2; ++iter) {
    TruncatedSeries next = half * (s + f / s);
    if (next == s) break;
    s = std::move(next);
  }
  if (!(s * s == f)) throw std::logic_error("series sqrt: Newton iteration did not converge");
  return s;
}

TruncatedSeries divide_by_monomial(const TruncatedSeries& f, const TruncatedSeries::Exponents& exps) {
  if (exps.size() != f.caps().size()) throw std::invalid_argument("divide_by_monomial: arity mismatch");
  std::vector<int> caps = f.caps();
  for (std::size_t i = 0; i < caps.size(); ++i) {
    if (exps[i] < 0) throw std::invalid_argument("divide_by_monomial: negative exponent");
    caps[i] -= exps[i];
    if (caps[i] < 0) throw std::invalid_argument("divide_by_monomial: caps exhausted");
  }
  TruncatedSeries out(f.names(), caps);
  f.for_each_nonzero([&](const TruncatedSeries::Exponents& e, const mpq_class& v) {
    TruncatedSeries::Exponents shifted(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      shifted[i] = e[i] - exps[i];
      if (shifted[i] < 0) {
        throw std::domain_error("divide_by_monomial: term " + describe(e) +
                                " is not divisible by " + describe(exps));
      }
    }
    out.set(shifted, v);
  });
  return out;
}

TruncatedSeries div_by_x(const TruncatedSeries& f) {
  TruncatedSeries::Exponents e(f.caps().size(), 0);
  e[0] = 1;
  return divide_by_monomial(f, e);
}

TruncatedSeries divide_by_monomial_series(const TruncatedSeries& f, const TruncatedSeries& m) {
  const auto mono = m.as_monomial();
  if (!mono) throw std::invalid_argument("divide_by_monomial_series: divisor is not a monomial");
  TruncatedSeries out = divide_by_monomial(f, mono->first);
  out *= 1 / mono->second;
  return out;
}

TruncatedSeries substitute_equal_vars(const TruncatedSeries& f, int keep, int drop) {
  const int nv = f.num_vars();
  if (nv < 2 || keep == drop || keep < 0 || drop < 0 || keep >= nv || drop >= nv) {
    throw std::invalid_argument("substitute_equal_vars: bad variable indices");
  }
  std::vector<std::string> names;
  std::vector<int> caps;
  std::vector<int> map_to(static_cast<std::size_t>(nv));
  for (int i = 0; i < nv; ++i) {
    if (i == drop) continue;
    map_to[static_cast<std::size_t>(i)] = static_cast<int>(names.size());
    names.push_back(f.names()[static_cast<std::size_t>(i)]);
    caps.push_back(i == keep ? std::min(f.caps()[static_cast<std::size_t>(keep)],
                                        f.caps()[static_cast<std::size_t>(drop)])
                             : f.caps()[static_cast<std::size_t>(i)]);
  }
  map_to[static_cast<std::size_t>(drop)] = map_to[static_cast<std::size_t>(keep)];
  TruncatedSeries out(names, caps);
  f.for_each_nonzero([&](const TruncatedSeries::Exponents& e, const mpq_class& v) {
    TruncatedSeries::Exponents t(caps.size(), 0);
    for (int i = 0; i < nv; ++i) {
      t[static_cast<std::size_t>(map_to[static_cast<std::size_t>(i)])] += e[static_cast<std::size_t>(i)];
    }
    bool in_box = true;
    for (std::size_t i = 0; i < t.size(); ++i) in_box = in_box && t[i] <= caps[i];
    if (in_box) out.set(t, out.coefficient(t) + v);
  });
  return out;
}

TruncatedSeries divide_exact(const TruncatedSeries& f, const TruncatedSeries& g) {
  if (f.names() != g.names()) throw std::invalid_argument("divide_exact: different variables");
  const auto caps = f.caps();
  // Leading terms in lexicographic order; the last nonzero term wins.
  std::optional<std::pair<TruncatedSeries::Exponents, mpq_class>> lead_g;
  g.for_each_nonzero([&](const TruncatedSeries::Exponents& e, const mpq_class& v) { lead_g.emplace(e, v); });
  if (!lead_g) throw std::domain_error("divide_exact: division by zero polynomial");
  const auto g_terms = nonzero_terms(g);

  TruncatedSeries r = f;
  TruncatedSeries q(f.names(), caps);
  while (!r.is_zero()) {
    std::optional<std::pair<TruncatedSeries::Exponents, mpq_class>> lead_r;
    r.for_each_nonzero([&](const TruncatedSeries::Exponents& e, const mpq_class& v) { lead_r.emplace(e, v); });
    TruncatedSeries::Exponents shift(caps.size());
    for (std::size_t i = 0; i < caps.size(); ++i) {
      shift[i] = lead_r->first[i] - lead_g->first[i];
      if (shift[i] < 0) throw std::domain_error("divide_exact: polynomial is not divisible");
    }
    const mpq_class t = lead_r->second / lead_g->second;
    q.set(shift, q.coefficient(shift) + t);
    for (const auto& term : g_terms) {
      TruncatedSeries::Exponents e(caps.size());
      for (std::size_t i = 0; i < caps.size(); ++i) e[i] = term.exps[i] + shift[i];
      bool in_box = true;
      for (std::size_t i = 0; i < caps.size(); ++i) in_box = in_box && e[i] <= caps[i];
      if (!in_box) throw std::domain_error("divide_exact: quotient leaves the truncation box");
      r.set(e, r.coefficient(e) - t * *term.value);
    }
  }
  return q;
}

}  // namespace cbperm
