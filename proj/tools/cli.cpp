#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <ostream>
#include <stdexcept>
#include <string>

#include "cbperm/bijection.hpp"
#include "cbperm/census.hpp"
#include "cbperm/generating_functions.hpp"
#include "cbperm/verify.hpp"

namespace cbperm::cli {

namespace {

using Json = nlohmann::ordered_json;

Permutation parse_pattern(std::string_view token) {
  if (token.find(' ') != std::string_view::npos) return Permutation::parse(token);
  std::vector<int> values;
  for (char c : token) {
    if (c < '1' || c > '9') throw std::invalid_argument("bad pattern \"" + std::string(token) + "\"");
    values.push_back(c - '0');
  }
  return Permutation(std::move(values));
}

Json features_json(const PathFeatures& f) {
  Json j;
  j["peaks"] = f.peaks;
  j["valleys"] = f.valleys;
  j["triple_descents"] = f.triple_descents;
  j["returns"] = f.returns;
  j["endpoint_height"] = f.endpoint_height;
  j["cut_index"] = f.cut_index ? Json(*f.cut_index) : Json(nullptr);
  j["peaks_before_cut"] = f.peaks_before_cut;
  j["downs_before_cut"] = f.downs_before_cut;
  j["valleys_before_cut"] = f.valleys_before_cut;
  j["triple_descents_before_cut"] = f.triple_descents_before_cut;
  j["downs_after_cut"] = f.downs_after_cut;
  return j;
}

int do_map(const std::string& text, const std::string& format, std::ostream& out, std::ostream& err) {
  const auto sigma = Permutation::parse(text);
  const bool in_t1 = avoids(sigma, PatternBasis::t1());
  const bool in_t2 = avoids(sigma, PatternBasis::t2());
  if (!in_t1 && !in_t2) {
    err << "error: " << sigma << " lies in neither Av(3214,3241,4213,4231) nor Av(3124,3142,4123,4132)\n";
    return kUsageError;
  }
  const auto path = phi_unchecked(sigma);
  const auto f = features(path, static_cast<int>(sigma.size()) - 1);
  if (format == "json") {
    Json j;
    j["permutation"] = sigma.to_string();
    j["t1"] = in_t1;
    j["t2"] = in_t2;
    j["path"] = path.to_string();
    j["kind"] = std::string(to_string(classify(path)));
    j["features"] = features_json(f);
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << "permutation  " << sigma << '\n'
      << "classes      " << (in_t1 ? "t1" : "") << (in_t1 && in_t2 ? " " : "") << (in_t2 ? "t2" : "") << '\n'
      << "path         " << path << '\n'
      << "profile      " << height_profile(path) << '\n'
      << "kind         " << to_string(classify(path)) << '\n'
      << "peaks " << f.peaks << ", valleys " << f.valleys << ", triple descents " << f.triple_descents
      << ", returns " << f.returns << ", endpoint height " << f.endpoint_height << '\n';
  if (f.cut_index) {
    out << "cut step " << *f.cut_index << ": " << f.peaks_before_cut << " peaks, " << f.downs_before_cut
        << " downs, " << f.valleys_before_cut << " valleys, " << f.triple_descents_before_cut
        << " triple descents before; " << f.downs_after_cut << " downs after\n";
  } else {
    out << "no cut step\n";
  }
  return kOk;
}

int do_invert(const std::string& text, const std::string& tag_text, const std::string& format, std::ostream& out) {
  const auto path = LatticePath::parse(text);
  const auto tag = parse_class_tag(tag_text);
  const auto sigma = phi_inverse(path, tag);
  if (format == "json") {
    out << Json{{"path", path.to_string()}, {"class", std::string(to_string(tag))}, {"permutation", sigma.to_string()}}
               .dump(2)
        << '\n';
  } else {
    out << sigma << '\n';
  }
  return kOk;
}

int do_enumerate(int n, const std::string& basis_text, bool count_only, const std::string& format,
                 std::ostream& out) {
  const auto basis = parse_basis(basis_text);
  if (format == "json") {
    Json j;
    j["n"] = n;
    j["basis"] = basis.name();
    if (count_only) {
      j["count"] = class_count(n, basis).get_str();
    } else {
      j["permutations"] = Json::array();
      for_each_in_class(n, basis, [&](const Permutation& s) { j["permutations"].push_back(s.to_string()); });
      j["count"] = std::to_string(j["permutations"].size());
    }
    out << j.dump(2) << '\n';
  } else if (count_only) {
    out << class_count(n, basis).get_str() << '\n';
  } else {
    for_each_in_class(n, basis, [&](const Permutation& s) { out << s << '\n'; });
  }
  return kOk;
}

int do_dist(int n, const std::string& basis_text, const std::string& stats_text, const std::string& format,
            std::ostream& out) {
  const auto basis = parse_basis(basis_text);
  const auto stats = parse_statistics(stats_text);
  const auto table = distribution(n, basis, stats);
  if (format == "csv") {
    out << table.to_csv();
  } else if (format == "text") {
    for (Statistic s : stats) out << to_string(s) << '\t';
    out << "count\n";
    for (const auto& [key, c] : table.counts()) {
      for (int v : key) out << v << '\t';
      out << c.get_str() << '\n';
    }
  } else {
    out << table.to_json() << '\n';
  }
  return kOk;
}

int do_series(const std::string& name_text, int trunc, const std::string& format, std::ostream& out) {
  const auto name = gf::parse_series_name(name_text);
  const auto s = gf::build(name, trunc);
  if (format == "text") {
    out << s.dump();
    return kOk;
  }
  if (format == "csv") {
    for (const auto& v : s.names()) out << v << ',';
    out << "coefficient\n";
    s.for_each_nonzero([&](const TruncatedSeries::Exponents& e, const mpq_class& c) {
      for (int v : e) out << v << ',';
      out << c.get_str() << '\n';
    });
    return kOk;
  }
  Json j;
  j["name"] = std::string(gf::to_string(name));
  j["variables"] = s.names();
  j["truncation"] = trunc;
  j["terms"] = Json::array();
  s.for_each_nonzero([&](const TruncatedSeries::Exponents& e, const mpq_class& c) {
    j["terms"].push_back({{"exponents", e}, {"coefficient", c.get_str()}});
  });
  out << j.dump(2) << '\n';
  return kOk;
}

int do_verify(int max_n, int trunc, const std::string& format, std::ostream& out) {
  const auto report = verify_suite(max_n, trunc);
  out << (format == "json" ? report.to_json() + "\n" : report.to_text());
  return report.all_passed() ? kOk : kVerificationFailed;
}

}  // namespace

PatternBasis parse_basis(std::string_view text) {
  if (text == "t1") return PatternBasis::t1();
  if (text == "t2") return PatternBasis::t2();
  if (text == "t1t2") return PatternBasis::t1_union_t2();
  constexpr std::string_view prefix = "custom:";
  if (!text.starts_with(prefix)) throw std::invalid_argument("unknown basis \"" + std::string(text) + "\"");
  std::string_view rest = text.substr(prefix.size());
  std::vector<Permutation> patterns;
  while (!rest.empty()) {
    const auto sep = rest.find_first_of(",;");
    const auto token = rest.substr(0, sep);
    if (!token.empty()) patterns.push_back(parse_pattern(token));
    if (sep == std::string_view::npos) break;
    rest.remove_prefix(sep + 1);
  }
  return PatternBasis(std::string(text), std::move(patterns));
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dyck-prefix encodings of Av(3214,3241,4213,4231) and Av(3124,3142,4123,4132)", "cbperm"};
  app.require_subcommand(1, 1);

  std::string permutation, path, tag = "t1", basis = "t1", stats = "asc", name, format;
  int n = 0, max_n = 8, trunc = gf::kDefaultTruncation;
  bool count_only = false;
  const auto text_json = CLI::IsMember({"text", "json"});

  auto* map = app.add_subcommand("map", "Print the class memberships, Dyck prefix and path features of a permutation");
  map->add_option("permutation", permutation, "e.g. \"2 4 1 3 7 5 9 6 8\"")->required();
  map->add_option("--format", format, "text or json")->check(text_json);

  auto* invert = app.add_subcommand("invert", "Map a Dyck prefix back to a permutation of the chosen class");
  invert->add_option("path", path, "e.g. UUUDDUUD")->required();
  invert->add_option("--class", tag, "t1 or t2")->check(CLI::IsMember({"t1", "t2"}));
  invert->add_option("--format", format, "text or json")->check(text_json);

  auto* enumerate = app.add_subcommand("enumerate", "List S_n(basis) in lexicographic order");
  enumerate->add_option("--n", n, "permutation length")->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--basis", basis, "t1, t2, t1t2 or custom:<patterns>");
  enumerate->add_flag("--count", count_only, "print only the number of permutations");
  enumerate->add_option("--format", format, "text or json")->check(text_json);

  auto* dist = app.add_subcommand("dist", "Joint distribution of statistics over S_n(basis)");
  dist->add_option("--n", n, "permutation length")->required()->check(CLI::PositiveNumber);
  dist->add_option("--basis", basis, "t1, t2, t1t2 or custom:<patterns>");
  dist->add_option("--stats", stats, "comma list of asc,lmax,pos_max,head,lds,connected,endpoint_height");
  dist->add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));

  auto* series = app.add_subcommand("series", "Truncated coefficients of a generating function");
  series->add_option("--name", name, "N, B, C, J, G, H, A, E, V, F, S or M")->required();
  series->add_option("--trunc", trunc, "largest exponent kept in every variable")->check(CLI::Range(0, 40));
  series->add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));

  auto* verify = app.add_subcommand("verify", "Run the exhaustive verification suite");
  verify->add_option("--max-n", max_n, "largest permutation length (10 for the full run)")->check(CLI::Range(4, 12));
  verify->add_option("--trunc", trunc, "x-degree of the series comparisons")->check(CLI::Range(0, 40));
  verify->add_option("--format", format, "text or json")->check(text_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsageError;
  }

  try {
    if (*map) return do_map(permutation, format.empty() ? "text" : format, out, err);
    if (*invert) return do_invert(path, tag, format.empty() ? "text" : format, out);
    if (*enumerate) return do_enumerate(n, basis, count_only, format.empty() ? "text" : format, out);
    if (*dist) return do_dist(n, basis, stats, format.empty() ? "json" : format, out);
    if (*series) return do_series(name, trunc, format.empty() ? "text" : format, out);
    return do_verify(max_n, trunc, format.empty() ? "text" : format, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace cbperm::cli
