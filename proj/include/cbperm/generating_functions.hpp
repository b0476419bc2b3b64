#pragma once

#include <gmpxx.h>
#include <string_view>
#include <vector>

#include "cbperm/series.hpp"

namespace cbperm {

/// Closed-form generating functions of the two classes, evaluated as
/// truncated series. Every builder takes the x-degree `trunc` and returns a
/// series whose caps are `trunc` in every variable. Intermediate work runs
/// a few degrees higher and is cut back at the end.
///
/// Variables:
///   N(x,z)              Dyck paths by semilength (x) and peaks (z)
///   B, C, J (x,y,w)     pos of the maximum (y), left-to-right maxima (w) over
///                       max-ending, connected and all members of Av(T1)
///   G, H (x,y)          first entry (y) over Av(T1)
///   A (x,y,z)           Dyck paths by valleys (y) and DDD factors (z)
///   E, V, F (x,y)       ascents over max-ending, connected, all of Av(T1)
///   S (x,y)             Dyck prefixes of length 2m (x^m) by peaks
///   M (x,y)             ascents over Av(T2)
namespace gf {

inline constexpr int kDefaultTruncation = 12;

enum class SeriesName { Narayana, B, C, J, G, H, A, E, V, F, S, M };

std::string_view to_string(SeriesName name);
/// "N"/"narayana", "B", ..., "M" (case-insensitive).
SeriesName parse_series_name(std::string_view text);
const std::vector<SeriesName>& all_series();

TruncatedSeries build(SeriesName name, int trunc = kDefaultTruncation);

/// N(X, Z) for series arguments with X a monomial: 1 + (1 - X(1+Z) -
/// sqrt((1 - X(1+Z))^2 - 4X^2 Z)) / (2X).
TruncatedSeries narayana_of(const TruncatedSeries& x_arg, const TruncatedSeries& z_arg);

TruncatedSeries narayana(int trunc);
TruncatedSeries b_closed_form(int trunc);
/// x y w N(x y, w).
TruncatedSeries b_from_narayana(int trunc);
/// B (B - yw) / (2B - yw).
TruncatedSeries j_from_b(int trunc);
/// 2xJ - xB.
TruncatedSeries c_from_j(int trunc);
/// B + B C / (x y w).
TruncatedSeries j_from_b_and_c(int trunc);

/// G from (1 - y + x y^2) G = (x^3y^3 - x^2y^2)/(1 - 2xy) + x^2 y / sqrt(1 - 4x).
TruncatedSeries g_series(int trunc);
/// G + (xy - x^2y^2)/(1 - 2xy).
TruncatedSeries h_from_g(int trunc);
/// The single-fraction closed form of H.
TruncatedSeries h_closed_form(int trunc);

TruncatedSeries a_closed_form(int trunc);
TruncatedSeries e_closed_form(int trunc);
/// x y (A(x,y,y) - 1) + x.
TruncatedSeries e_from_a(int trunc);
/// E (1 - yE) / (1 - E - yE).
TruncatedSeries f_from_e(int trunc);
/// (x + xy) F - xy E.
TruncatedSeries v_from_f_and_e(int trunc);
/// E + E V / x.
TruncatedSeries f_from_e_and_v(int trunc);

/// N / (1 - x N^2), with N = N(x,y).
TruncatedSeries s_closed_form(int trunc);
/// x N S: peaks over floating prefixes, equivalently over prefixes ending in U.
TruncatedSeries r_from_n_and_s(int trunc);
/// N (R + 1).
TruncatedSeries s_from_n_and_r(int trunc);
/// x S.
TruncatedSeries m_series(int trunc);

/// Coefficient that must be a nonnegative integer; throws std::logic_error
/// otherwise and std::out_of_range beyond the caps.
mpz_class integer_coefficient(const TruncatedSeries& s, const TruncatedSeries::Exponents& exps);

}  // namespace gf
}  // namespace cbperm
