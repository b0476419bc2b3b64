#include "cbperm/generating_functions.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>

namespace cbperm::gf {

namespace {

constexpr int kMargin = 3;

class Ring {
 public:
  Ring(std::vector<std::string> names, int cap)
      : names_(std::move(names)), caps_(names_.size(), cap) {}

  TruncatedSeries c(const mpq_class& v) const { return TruncatedSeries::constant(names_, caps_, v); }
  TruncatedSeries var(int i) const { return TruncatedSeries::variable(names_, caps_, i); }
  TruncatedSeries mono(const TruncatedSeries::Exponents& e, const mpq_class& v = 1) const {
    return TruncatedSeries::monomial(names_, caps_, e, v);
  }

 private:
  std::vector<std::string> names_;
  std::vector<int> caps_;
};

TruncatedSeries finish(const TruncatedSeries& s, int trunc) {
  return s.restricted(std::vector<int>(s.caps().size(), trunc));
}

void check_trunc(int trunc) {
  if (trunc < 1) throw std::invalid_argument("truncation degree must be >= 1");
}

// Each *_work function evaluates at the working cap w and returns whatever
// caps survive the monomial divisions.

Ring xyw_ring(int w) { return Ring({"x", "y", "w"}, w); }
Ring xy_ring(int w) { return Ring({"x", "y"}, w); }

TruncatedSeries b_closed_work(int w) {
  const Ring r = xyw_ring(w);
  const auto xy = r.mono({1, 1, 0});
  const auto wv = r.var(2);
  const auto a = 1 - xy * (1 + wv);
  const auto rad = a * a - r.mono({2, 2, 1}, 4);
  return mpq_class(1, 2) * (wv * ((1 + xy * (1 - wv)) - sqrt(rad)));
}

TruncatedSeries b_narayana_work(int w) {
  const Ring r = xyw_ring(w);
  return r.mono({1, 1, 1}) * narayana_of(r.mono({1, 1, 0}), r.var(2));
}

TruncatedSeries j_work(int w) {
  const Ring r = xyw_ring(w);
  const auto yw = r.mono({0, 1, 1});
  // B = yw * b with b free of the monomial factor, so 2b - 1 is a unit.
  const auto b = divide_by_monomial_series(b_closed_work(w), yw);
  return yw * (b * (b + mpq_class(-1))) / (mpq_class(2) * b + mpq_class(-1));
}

TruncatedSeries c_work(int w) {
  const Ring r = xyw_ring(w);
  const auto x = r.var(0);
  return mpq_class(2) * (x * j_work(w)) - x * b_closed_work(w);
}

TruncatedSeries g_work(int w) {
  const Ring r = xy_ring(w);
  const auto x = r.var(0);
  const auto y = r.var(1);
  const auto one_minus_2xy = 1 - r.mono({1, 1}, 2);
  const auto rhs = (r.mono({3, 3}) - r.mono({2, 2})) / one_minus_2xy +
                   r.mono({2, 1}) / sqrt(1 - mpq_class(4) * x);
  return rhs / ((1 - y) + r.mono({1, 2}));
}

TruncatedSeries h_from_g_work(int w) {
  const Ring r = xy_ring(w);
  return g_work(w) + (r.mono({1, 1}) - r.mono({2, 2})) / (1 - r.mono({1, 1}, 2));
}

TruncatedSeries a_work(int w) {
  const Ring r({"x", "y", "z"}, w);
  const auto P = r.c(-1) + r.mono({1, 1, 0}) + r.mono({2, 1, 0}, 2) - r.mono({2, 2, 0}, 2) +
                 r.mono({1, 0, 1}) - r.mono({1, 1, 1}, 2) - r.mono({2, 1, 1}, 2) +
                 r.mono({2, 2, 1}, 2);
  const auto R = r.c(1) - r.mono({1, 1, 0}, 2) - r.mono({2, 1, 0}, 4) + r.mono({2, 2, 0}) -
                 r.mono({1, 0, 1}, 2) + r.mono({2, 1, 1}, 2) + r.mono({2, 0, 2});
  const auto D = r.mono({1, 1, 1}) - r.var(2) - r.mono({1, 1, 0});
  // A = (P + sqrt R) / (2xyD). The denominator is not a unit, so multiply
  // through by the conjugate: A = (P^2 - R) / (2xyD) / (P - sqrt R), where the
  // first factor is an exact polynomial quotient and P - sqrt R has constant
  // term -2.
  const auto quotient = divide_exact(P * P - R, r.mono({1, 1, 0}, 2) * D);
  return quotient / (P - sqrt(R));
}

TruncatedSeries e_closed_work(int w) {
  const Ring r = xy_ring(w);
  const auto x = r.var(0);
  const auto y = r.var(1);
  const auto rad = 1 - r.mono({1, 1}, 4) + r.mono({2, 1}, 4) * (y + mpq_class(-1));
  const auto numerator = divide_by_monomial_series(sqrt(rad) + mpq_class(-1), y);
  return numerator / (mpq_class(2) * (x * (y + mpq_class(-1)) + mpq_class(-1)));
}

TruncatedSeries e_from_a_work(int w) {
  const auto a_yy = substitute_equal_vars(a_work(w), 1, 2);
  const Ring r = xy_ring(w);
  return r.mono({1, 1}) * (a_yy + mpq_class(-1)) + r.var(0);
}

TruncatedSeries f_work(int w) {
  const auto e = e_closed_work(w);
  const Ring r = xy_ring(w);
  const auto y = r.var(1);
  return e * (1 - y * e) / ((1 - e) - y * e);
}

TruncatedSeries v_work(int w) {
  const Ring r = xy_ring(w);
  return (r.var(0) + r.mono({1, 1})) * f_work(w) - r.mono({1, 1}) * e_closed_work(w);
}

TruncatedSeries n_xy_work(int w) {
  const Ring r = xy_ring(w);
  return narayana_of(r.var(0), r.var(1));
}

TruncatedSeries s_work(int w) {
  const auto n = n_xy_work(w);
  const Ring r = xy_ring(w);
  return n / (1 - r.var(0) * n * n);
}

TruncatedSeries r_work(int w) {
  const Ring r = xy_ring(w);
  return r.var(0) * n_xy_work(w) * s_work(w);
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

std::string_view to_string(SeriesName name) {
  switch (name) {
    case SeriesName::Narayana:
      return "N";
    case SeriesName::B:
      return "B";
    case SeriesName::C:
      return "C";
    case SeriesName::J:
      return "J";
    case SeriesName::G:
      return "G";
    case SeriesName::H:
      return "H";
    case SeriesName::A:
      return "A";
    case SeriesName::E:
      return "E";
    case SeriesName::V:
      return "V";
    case SeriesName::F:
      return "F";
    case SeriesName::S:
      return "S";
    case SeriesName::M:
      return "M";
  }
  return "?";
}

const std::vector<SeriesName>& all_series() {
  static const std::vector<SeriesName> names = {
      SeriesName::Narayana, SeriesName::B, SeriesName::C, SeriesName::J,
      SeriesName::G,        SeriesName::H, SeriesName::A, SeriesName::E,
      SeriesName::V,        SeriesName::F, SeriesName::S, SeriesName::M};
  return names;
}

SeriesName parse_series_name(std::string_view text) {
  const std::string t = lower(text);
  if (t == "narayana") return SeriesName::Narayana;
  for (SeriesName n : all_series()) {
    if (lower(to_string(n)) == t) return n;
  }
  throw std::invalid_argument("unknown series \"" + std::string(text) +
                              "\" (expected one of N B C J G H A E V F S M)");
}

TruncatedSeries narayana_of(const TruncatedSeries& x_arg, const TruncatedSeries& z_arg) {
  const auto a = 1 - x_arg * (1 + z_arg);
  const auto rad = a * a - mpq_class(4) * (x_arg * x_arg * z_arg);
  return divide_by_monomial_series(a - sqrt(rad), mpq_class(2) * x_arg) + mpq_class(1);
}

TruncatedSeries narayana(int trunc) {
  check_trunc(trunc);
  const Ring r({"x", "z"}, trunc + kMargin);
  return finish(narayana_of(r.var(0), r.var(1)), trunc);
}

TruncatedSeries b_closed_form(int trunc) {
  check_trunc(trunc);
  return finish(b_closed_work(trunc + kMargin), trunc);
}

TruncatedSeries b_from_narayana(int trunc) {
  check_trunc(trunc);
  return finish(b_narayana_work(trunc + kMargin), trunc);
}

TruncatedSeries j_from_b(int trunc) {
  check_trunc(trunc);
  return finish(j_work(trunc + kMargin), trunc);
}

TruncatedSeries c_from_j(int trunc) {
  check_trunc(trunc);
  return finish(c_work(trunc + kMargin), trunc);
}

TruncatedSeries j_from_b_and_c(int trunc) {
  check_trunc(trunc);
  const int w = trunc + kMargin;
  const auto b = b_closed_work(w);
  const Ring r = xyw_ring(w);
  return finish(b + divide_by_monomial_series(b * c_work(w), r.mono({1, 1, 1})), trunc);
}

TruncatedSeries g_series(int trunc) {
  check_trunc(trunc);
  return finish(g_work(trunc + kMargin), trunc);
}

TruncatedSeries h_from_g(int trunc) {
  check_trunc(trunc);
  return finish(h_from_g_work(trunc + kMargin), trunc);
}

TruncatedSeries h_closed_form(int trunc) {
  check_trunc(trunc);
  const Ring r = xy_ring(trunc + kMargin);
  const auto x = r.var(0);
  const auto y = r.var(1);
  const auto root = sqrt(1 - mpq_class(4) * x);
  const auto xy_minus_1 = r.mono({1, 1}) + mpq_class(-1);
  const auto one_minus_2xy = 1 - r.mono({1, 1}, 2);
  const auto numerator =
      r.mono({1, 1}) * (xy_minus_1 * xy_minus_1 * (1 - y) * root + x * one_minus_2xy);
  const auto denominator = ((1 - y) + r.mono({1, 2})) * one_minus_2xy * root;
  return finish(numerator / denominator, trunc);
}

TruncatedSeries a_closed_form(int trunc) {
  check_trunc(trunc);
  return finish(a_work(trunc + kMargin), trunc);
}

TruncatedSeries e_closed_form(int trunc) {
  check_trunc(trunc);
  return finish(e_closed_work(trunc + kMargin), trunc);
}

TruncatedSeries e_from_a(int trunc) {
  check_trunc(trunc);
  return finish(e_from_a_work(trunc + kMargin), trunc);
}

TruncatedSeries f_from_e(int trunc) {
  check_trunc(trunc);
  return finish(f_work(trunc + kMargin), trunc);
}

TruncatedSeries v_from_f_and_e(int trunc) {
  check_trunc(trunc);
  return finish(v_work(trunc + kMargin), trunc);
}

TruncatedSeries f_from_e_and_v(int trunc) {
  check_trunc(trunc);
  const int w = trunc + kMargin;
  const auto e = e_closed_work(w);
  return finish(e + div_by_x(e * v_work(w)), trunc);
}

TruncatedSeries s_closed_form(int trunc) {
  check_trunc(trunc);
  return finish(s_work(trunc + kMargin), trunc);
}

TruncatedSeries r_from_n_and_s(int trunc) {
  check_trunc(trunc);
  return finish(r_work(trunc + kMargin), trunc);
}

TruncatedSeries s_from_n_and_r(int trunc) {
  check_trunc(trunc);
  const int w = trunc + kMargin;
  return finish(n_xy_work(w) * (r_work(w) + mpq_class(1)), trunc);
}

TruncatedSeries m_series(int trunc) {
  check_trunc(trunc);
  const int w = trunc + kMargin;
  return finish(xy_ring(w).var(0) * s_work(w), trunc);
}

TruncatedSeries build(SeriesName name, int trunc) {
  switch (name) {
    case SeriesName::Narayana:
      return narayana(trunc);
    case SeriesName::B:
      return b_closed_form(trunc);
    case SeriesName::C:
      return c_from_j(trunc);
    case SeriesName::J:
      return j_from_b(trunc);
    case SeriesName::G:
      return g_series(trunc);
    case SeriesName::H:
      return h_from_g(trunc);
    case SeriesName::A:
      return a_closed_form(trunc);
    case SeriesName::E:
      return e_closed_form(trunc);
    case SeriesName::V:
      return v_from_f_and_e(trunc);
    case SeriesName::F:
      return f_from_e(trunc);
    case SeriesName::S:
      return s_closed_form(trunc);
    case SeriesName::M:
      return m_series(trunc);
  }
  throw std::logic_error("unhandled series name");
}

mpz_class integer_coefficient(const TruncatedSeries& s, const TruncatedSeries::Exponents& exps) {
  const mpq_class& c = s.coefficient(exps);
  if (c.get_den() != 1 || c < 0) {
    throw std::logic_error("coefficient " + c.get_str() + " is not a nonnegative integer");
  }
  return c.get_num();
}

}  // namespace cbperm::gf
