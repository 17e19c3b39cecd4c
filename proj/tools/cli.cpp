#include "alphax/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>

#include "alphax/bounds.hpp"
#include "alphax/constructions.hpp"
#include "alphax/enumerate.hpp"
#include "alphax/errors.hpp"
#include "alphax/forbidden.hpp"
#include "alphax/graph6.hpp"
#include "alphax/harness.hpp"
#include "alphax/overloaded.hpp"
#include "alphax/spectral.hpp"

namespace alphax::cli {
namespace {

struct Decimal {
  long long mantissa = 0;
  int scale = 0;
};

Decimal parse_decimal(const std::string& text) {
  Decimal d;
  bool digits = false;
  bool point = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '.' && !point) {
      point = true;
    } else if (c >= '0' && c <= '9') {
      if (d.mantissa > 100000000000000LL) throw ParseError("too many digits in '" + text + "'", i);
      d.mantissa = d.mantissa * 10 + (c - '0');
      if (point) ++d.scale;
      digits = true;
    } else {
      throw ParseError("invalid decimal '" + text + "'", i);
    }
  }
  if (!digits) throw ParseError("empty decimal", 0);
  return d;
}

long long rescale(Decimal d, int scale) {
  long long m = d.mantissa;
  for (int i = d.scale; i < scale; ++i) m *= 10;
  return m;
}

std::string format_decimal(long long mantissa, int scale) {
  std::string digits = std::to_string(mantissa);
  if (scale == 0) return digits;
  if (static_cast<int>(digits.size()) <= scale)
    digits.insert(0, scale - digits.size() + 1, '0');
  digits.insert(digits.size() - scale, ".");
  return digits;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t at = text.find(sep, start);
    parts.push_back(text.substr(start, at - start));
    if (at == std::string::npos) return parts;
    start = at + 1;
  }
}

int parse_int(const std::string& text) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw ParseError("invalid integer '" + text + "'", 0);
  }
  if (used != text.size()) throw ParseError("invalid integer '" + text + "'", used);
  return v;
}

Alpha alpha_of(const std::string& text) {
  parse_decimal(text);
  return Alpha(std::strtod(text.c_str(), nullptr));
}

struct FamilyFlags {
  std::string g6;
  std::string family;
  std::optional<int> n, m, s, t, k, d;

  void add_to(CLI::App* app, bool allow_g6) {
    CLI::Option* fam = app->add_option("--family", family, "split|cliques|matching|regular")
                           ->check(CLI::IsMember({"split", "cliques", "matching", "regular"}));
    if (allow_g6) app->add_option("--g6", g6, "graph6 input")->excludes(fam);
    app->add_option("--n", n, "order");
    app->add_option("--m", m, "clique size (split)");
    app->add_option("--s", s, "s (cliques)");
    app->add_option("--t", t, "clique size t (cliques)");
    app->add_option("--k", k, "k (matching, regular)");
    app->add_option("--d", d, "d (regular: H is (d-1)-regular)");
  }

  static int need(const std::optional<int>& v, const char* flag) {
    if (!v) throw DomainError(std::string("missing ") + flag + " for --family");
    return *v;
  }

  ConstructionSpec spec() const {
    const int order = need(n, "--n");
    if (family == "split") return CompleteSplit{order, need(m, "--m")};
    if (family == "cliques") return clique_join_cliques(order, need(s, "--s"), need(t, "--t"));
    if (family == "matching") return CliqueJoinMatching{order, need(k, "--k")};
    return CliqueJoinRegular{order, need(k, "--k"), need(d, "--d")};
  }

  Graph graph() const {
    if (!g6.empty()) return decode_graph6(g6);
    if (family.empty()) throw DomainError("one of --g6 or --family is required");
    return construct(spec());
  }
};

int enumeration_cap(std::optional<int> flag) {
  int cap = kDefaultEnumerationCap;
  if (const char* env = std::getenv("ALPHA_EXTREMAL_CAP")) cap = parse_int(env);
  if (flag) cap = *flag;
  return cap;
}

struct ClassFlags {
  std::optional<int> r, s, t;
  std::string degrees;

  void add_to(CLI::App* app) {
    app->add_option("--r", r, "clique minor order");
    app->add_option("--s", s, "biclique side s");
    app->add_option("--t", t, "biclique side t");
    app->add_option("--degrees", degrees, "star forest degrees, e.g. 2,2");
  }

  StarForestSpec forest() const {
    if (degrees.empty()) throw DomainError("--degrees is required");
    return StarForestSpec(parse_int_list(degrees));
  }

  TheoremId theorem(const std::string& id) const {
    if (id == "T1") return T1{FamilyFlags::need(r, "--r")};
    if (id == "T2") return T2{FamilyFlags::need(s, "--s"), FamilyFlags::need(t, "--t")};
    return T3{forest()};
  }
};

std::string theorem_slug(const TheoremId& id) {
  return std::visit(Overloaded{
                        [](const T1& t) { return "T1_r" + std::to_string(t.r); },
                        [](const T2& t) {
                          return "T2_s" + std::to_string(t.s) + "_t" + std::to_string(t.t);
                        },
                        [](const T3& t) { return "T3_" + t.spec.label(); },
                    },
                    id);
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << text;
}

// Value cell of a bounds table: empty plus a reason when the row is out of domain.
struct Row {
  std::vector<std::string> cells;
  std::string reason;
};

template <typename F>
Row guarded(std::size_t width, F&& compute) {
  Row row;
  try {
    row.cells = compute();
  } catch (const DomainError& e) {
    row.cells.assign(width, "");
    row.reason = e.what();
  }
  return row;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

}  // namespace

std::vector<std::string> parse_decimal_grid(const std::string& text) {
  if (text.find(':') == std::string::npos) {
    std::vector<std::string> out = split(text, ',');
    for (const auto& v : out) parse_decimal(v);
    return out;
  }
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw ParseError("grid must be start:stop:step", 0);
  const Decimal start = parse_decimal(parts[0]);
  const Decimal stop = parse_decimal(parts[1]);
  const Decimal step = parse_decimal(parts[2]);
  const int scale = std::max({start.scale, stop.scale, step.scale});
  const long long a = rescale(start, scale);
  const long long b = rescale(stop, scale);
  const long long h = rescale(step, scale);
  if (h <= 0) throw ParseError("grid step must be positive", parts[0].size() + parts[1].size() + 2);
  std::vector<std::string> out;
  for (long long v = a; v <= b; v += h) out.push_back(format_decimal(v, scale));
  return out;
}

std::pair<int, int> parse_int_range(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 2) throw ParseError("range must be a:b", 0);
  return {parse_int(parts[0]), parse_int(parts[1])};
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const auto& p : split(text, ',')) out.push_back(parse_int(p));
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"alpha-index spectral extremal toolkit", "alphax"};
  app.require_subcommand(1);
  std::function<void()> action;

  // alpha-index
  FamilyFlags ai_graph;
  std::string ai_alpha;
  std::string ai_format = "text";
  auto* ai = app.add_subcommand("alpha-index", "largest eigenvalue of A_alpha");
  ai_graph.add_to(ai, true);
  ai->add_option("--alpha", ai_alpha, "alpha in [0,1]")->required();
  ai->add_option("--format", ai_format)->check(CLI::IsMember({"text", "json", "csv"}));
  ai->callback([&] {
    action = [&] {
      const Graph g = ai_graph.graph();
      const SpectralResult r = alpha_index(g, alpha_of(ai_alpha));
      if (ai_format == "json") {
        auto j = to_json(r);
        j["alpha"] = std::strtod(ai_alpha.c_str(), nullptr);
        j["graph6"] = encode_graph6(g);
        out << j.dump(2) << "\n";
      } else if (ai_format == "csv") {
        out << "graph6,alpha,rho,residual\n"
            << encode_graph6(g) << "," << ai_alpha << "," << format_double(r.alpha_index) << ","
            << format_double(r.residual) << "\n";
      } else {
        out << format_double(r.alpha_index) << "\n";
      }
    };
  });

  // construct
  FamilyFlags cons;
  std::string cons_format = "g6";
  auto* cn = app.add_subcommand("construct", "build an extremal construction");
  cons.add_to(cn, false);
  cn->add_option("--format", cons_format)->check(CLI::IsMember({"g6", "json"}));
  cn->callback([&] {
    action = [&] {
      const ConstructionSpec spec = cons.spec();
      const Graph g = construct(spec);
      if (cons_format == "json") {
        auto j = to_json(g);
        j["description"] = describe(spec);
        out << j.dump(2) << "\n";
      } else {
        out << encode_graph6(g) << "\n";
      }
    };
  });

  // enumerate
  int en_n = 0;
  bool en_count = false;
  std::optional<int> en_cap;
  int en_shard = 0, en_shards = 1;
  auto* en = app.add_subcommand("enumerate", "all graphs of order n up to isomorphism");
  en->add_option("--n", en_n)->required();
  en->add_flag("--count", en_count, "print only the number of graphs");
  en->add_option("--cap", en_cap, "enumeration cap (default 10 or ALPHA_EXTREMAL_CAP)");
  en->add_option("--shard", en_shard);
  en->add_option("--shards", en_shards);
  en->callback([&] {
    action = [&] {
      const EnumerationOptions opts{enumeration_cap(en_cap), en_shard, en_shards};
      if (en_count) {
        out << count_graphs(en_n, opts) << "\n";
        return;
      }
      enumerate_graphs(en_n, [&](const Graph& g) { out << encode_graph6(g) << "\n"; }, opts);
    };
  });

  // minor
  std::string mi_g6, mi_pattern_g6;
  std::optional<int> mi_clique;
  std::string mi_biclique;
  int mi_cap = kDefaultMinorHostCap;
  auto* mi = app.add_subcommand("minor", "minor containment with a branch-set certificate");
  mi->add_option("--g6", mi_g6, "host graph6")->required();
  auto* o_clique = mi->add_option("--clique", mi_clique, "K_r pattern");
  auto* o_bic = mi->add_option("--biclique", mi_biclique, "K_{s,t} pattern as s,t");
  auto* o_gen = mi->add_option("--pattern-g6", mi_pattern_g6, "general pattern graph6");
  o_clique->excludes(o_bic)->excludes(o_gen);
  o_bic->excludes(o_gen);
  mi->add_option("--host-cap", mi_cap, "largest host order searched");
  mi->callback([&] {
    action = [&] {
      const Graph host = decode_graph6(mi_g6);
      MinorPattern pattern;
      if (mi_clique) {
        pattern = CliquePattern{*mi_clique};
      } else if (!mi_biclique.empty()) {
        const auto st = parse_int_list(mi_biclique);
        if (st.size() != 2) throw ParseError("--biclique expects s,t", 0);
        pattern = BicliquePattern{st[0], st[1]};
      } else if (!mi_pattern_g6.empty()) {
        pattern = GeneralPattern{decode_graph6(mi_pattern_g6)};
      } else {
        throw DomainError("one of --clique, --biclique, --pattern-g6 is required");
      }
      const auto cert = has_minor(host, pattern, MinorSearchOptions{mi_cap});
      nlohmann::json j{{"pattern", describe(pattern)}, {"has_minor", cert.has_value()}};
      j["certificate"] = cert ? to_json(*cert) : nlohmann::json(nullptr);
      out << j.dump(2) << "\n";
    };
  });

  // star-forest
  std::string sf_g6, sf_degrees;
  auto* sf = app.add_subcommand("star-forest", "star forest subgraph containment");
  sf->add_option("--g6", sf_g6)->required();
  sf->add_option("--degrees", sf_degrees, "e.g. 2,2")->required();
  sf->callback([&] {
    action = [&] {
      const Graph host = decode_graph6(sf_g6);
      const StarForestSpec spec(parse_int_list(sf_degrees));
      const auto cert = contains_star_forest(host, spec);
      nlohmann::json j{{"forest", spec.label()}, {"contains", cert.has_value()}};
      j["certificate"] = cert ? to_json(*cert) : nlohmann::json(nullptr);
      out << j.dump(2) << "\n";
    };
  });

  // extremal
  int ex_n = 0;
  std::string ex_alpha, ex_class;
  ClassFlags ex_flags;
  int ex_workers = 0;
  std::optional<int> ex_cap;
  auto* ex = app.add_subcommand("extremal", "exhaustive maximum alpha-index over a class");
  ex->add_option("--n", ex_n)->required();
  ex->add_option("--alpha", ex_alpha)->required();
  ex->add_option("--class", ex_class, "clique|biclique|star")
      ->required()
      ->check(CLI::IsMember({"clique", "biclique", "star"}));
  ex_flags.add_to(ex);
  ex->add_option("--workers", ex_workers, "0 = machine parallelism");
  ex->add_option("--cap", ex_cap);
  ex->callback([&] {
    action = [&] {
      ForbiddenClass cls = CliqueMinorFree{3};
      if (ex_class == "clique") cls = CliqueMinorFree{FamilyFlags::need(ex_flags.r, "--r")};
      if (ex_class == "biclique")
        cls = BicliqueMinorFree{FamilyFlags::need(ex_flags.s, "--s"),
                                FamilyFlags::need(ex_flags.t, "--t")};
      if (ex_class == "star") cls = StarForestFree{ex_flags.forest()};
      SearchOptions opts;
      opts.workers = ex_workers;
      opts.cap = enumeration_cap(ex_cap);
      const auto r = extremal_search(ex_n, alpha_of(ex_alpha), cls, opts);
      nlohmann::json j{{"class", describe(cls)},
                       {"n", ex_n},
                       {"alpha", std::strtod(ex_alpha.c_str(), nullptr)},
                       {"exhaustive_max", r.value},
                       {"witnesses", r.witnesses}};
      out << j.dump(2) << "\n";
    };
  });

  // check
  std::string ck_theorem, ck_alpha, ck_grid, ck_range, ck_out, ck_stream;
  std::optional<int> ck_n, ck_cap;
  ClassFlags ck_flags;
  int ck_workers = 0;
  std::string ck_format = "json";
  auto* ck = app.add_subcommand("check", "compare a theorem's prediction with exhaustive search");
  ck->add_option("--theorem", ck_theorem)->required()->check(CLI::IsMember({"T1", "T2", "T3"}));
  ck_flags.add_to(ck);
  auto* o_n = ck->add_option("--n", ck_n);
  auto* o_range = ck->add_option("--n-range", ck_range, "a:b inclusive");
  o_n->excludes(o_range);
  auto* o_alpha = ck->add_option("--alpha", ck_alpha);
  auto* o_grid = ck->add_option("--alpha-grid", ck_grid, "start:stop:step or a,b,c");
  o_alpha->excludes(o_grid);
  ck->add_option("--workers", ck_workers, "0 = machine parallelism");
  ck->add_option("--cap", ck_cap);
  ck->add_option("--out", ck_out, "directory for report files");
  ck->add_option("--graph6-stream", ck_stream, "graph6 file replacing built-in enumeration");
  ck->add_option("--format", ck_format, "stdout format without --out")
      ->check(CLI::IsMember({"json", "csv"}));
  ck->callback([&] {
    action = [&] {
      const TheoremId id = ck_flags.theorem(ck_theorem);
      std::vector<int> orders;
      if (ck_n) {
        orders.push_back(*ck_n);
      } else if (!ck_range.empty()) {
        const auto [lo, hi] = parse_int_range(ck_range);
        for (int n = lo; n <= hi; ++n) orders.push_back(n);
      } else {
        throw DomainError("one of --n or --n-range is required");
      }
      std::vector<std::string> alphas;
      if (!ck_alpha.empty()) {
        parse_decimal(ck_alpha);
        alphas.push_back(ck_alpha);
      } else if (!ck_grid.empty()) {
        alphas = parse_decimal_grid(ck_grid);
      } else {
        throw DomainError("one of --alpha or --alpha-grid is required");
      }
      SearchOptions opts;
      opts.workers = ck_workers;
      opts.cap = enumeration_cap(ck_cap);
      if (!ck_stream.empty()) {
        std::ifstream in(ck_stream);
        if (!in) throw DomainError("cannot open " + ck_stream);
        opts.source = read_graph6_stream(in);
      }

      std::vector<VerificationReport> reports;
      for (int n : orders)
        for (const auto& text : alphas) reports.push_back(check_theorem(id, n, alpha_of(text), opts, text));

      std::string summary = csv_header() + "\n";
      for (const auto& r : reports) summary += to_csv_row(r) + "\n";
      if (!ck_out.empty()) {
        const std::filesystem::path dir(ck_out);
        std::filesystem::create_directories(dir);
        for (const auto& r : reports)
          write_file(dir / (theorem_slug(id) + "_n" + std::to_string(r.n) + "_alpha" +
                            r.alpha_text + ".json"),
                     to_json(r).dump(2) + "\n");
        write_file(dir / "summary.csv", summary);
        out << summary;
      } else if (ck_format == "csv") {
        out << summary;
      } else {
        nlohmann::json all = nlohmann::json::array();
        for (const auto& r : reports) all.push_back(to_json(r));
        out << all.dump(2) << "\n";
      }
    };
  });

  // sweep
  SweepGrid sw_grid;
  auto* sw = app.add_subcommand("sweep", "evaluate every lemma inequality over a grid");
  sw->add_option("--samples", sw_grid.samples, "random H per f_alpha grid point");
  sw->add_option("--seed", sw_grid.seed);
  sw->add_option("--exhaustive-n", sw_grid.exhaustive_n, "largest order for exhaustive checks");
  sw->add_option("--corrupt", sw_grid.corruption, "tighten every closed form (self-test)");
  int sw_status = kExitOk;
  sw->callback([&] {
    action = [&] {
      const SweepReport r = sweep_lemma_inequalities(sw_grid);
      out << to_json(r).dump(2) << "\n";
      if (!r.violations.empty()) sw_status = kExitFailure;
    };
  });

  // bounds
  bool bd_lemma21 = false, bd_falpha = false, bd_q = false;
  std::optional<int> bd_n, bd_k, bd_d, bd_s, bd_t;
  std::string bd_range, bd_alpha, bd_grid, bd_degrees;
  auto* bd = app.add_subcommand("bounds", "CSV tables of closed-form bounds");
  auto* f21 = bd->add_flag("--lemma21", bd_lemma21, "split-graph quadratic root and both lower bounds");
  auto* ffa = bd->add_flag("--falpha", bd_falpha, "largest root of f_alpha");
  auto* fq = bd->add_flag("--q", bd_q, "signless Laplacian upper bounds");
  f21->excludes(ffa)->excludes(fq);
  ffa->excludes(fq);
  auto* b_n = bd->add_option("--n", bd_n);
  auto* b_range = bd->add_option("--n-range", bd_range, "a:b inclusive");
  b_n->excludes(b_range);
  bd->add_option("--k", bd_k);
  bd->add_option("--d", bd_d);
  bd->add_option("--s", bd_s);
  bd->add_option("--t", bd_t);
  bd->add_option("--degrees", bd_degrees, "star forest for --q");
  auto* b_alpha = bd->add_option("--alpha", bd_alpha);
  auto* b_grid = bd->add_option("--alpha-grid", bd_grid);
  b_alpha->excludes(b_grid);
  bd->callback([&] {
    action = [&] {
      if (!bd_lemma21 && !bd_falpha && !bd_q)
        throw DomainError("one of --lemma21, --falpha, --q is required");
      std::vector<int> orders;
      if (bd_n) {
        orders.push_back(*bd_n);
      } else if (!bd_range.empty()) {
        const auto [lo, hi] = parse_int_range(bd_range);
        for (int n = lo; n <= hi; ++n) orders.push_back(n);
      } else {
        throw DomainError("one of --n or --n-range is required");
      }
      std::vector<std::string> alphas;
      if (!bd_alpha.empty()) alphas.push_back(bd_alpha);
      if (!bd_grid.empty()) alphas = parse_decimal_grid(bd_grid);
      for (const auto& a : alphas) parse_decimal(a);

      if (bd_q) {
        QBoundKind kind = BicliqueQ{0, 0};
        std::string head;
        if (!bd_degrees.empty()) {
          kind = StarForestQ{StarForestSpec(parse_int_list(bd_degrees))};
          head = StarForestSpec(parse_int_list(bd_degrees)).label();
        } else {
          kind = BicliqueQ{FamilyFlags::need(bd_s, "--s"), FamilyFlags::need(bd_t, "--t")};
          head = "K_{" + std::to_string(*bd_s) + "," + std::to_string(*bd_t) + "}";
        }
        out << "forbidden,n,q_bound,reason\n";
        for (int n : orders) {
          const Row row = guarded(1, [&] {
            return std::vector<std::string>{format_double(corollary_q_bound(kind, n))};
          });
          out << csv_quote(head) << "," << n << "," << row.cells[0] << "," << csv_quote(row.reason)
              << "\n";
        }
        return;
      }
      if (alphas.empty()) throw DomainError("one of --alpha or --alpha-grid is required");
      const int k = FamilyFlags::need(bd_k, "--k");
      if (bd_lemma21) {
        out << "n,k,alpha,root,first,second,second_minus_first,reason\n";
        for (int n : orders)
          for (const auto& text : alphas) {
            const Row row = guarded(4, [&] {
              const Alpha a = alpha_of(text);
              const auto b = lemma21_lower_bounds(n, k, a);
              return std::vector<std::string>{
                  format_double(lemma21_quadratic(n, k, a).largest_root()),
                  format_double(b.first), b.second ? format_double(*b.second) : "",
                  format_double(compare_lemma21_bounds(k, a))};
            });
            out << n << "," << k << "," << text;
            for (const auto& c : row.cells) out << "," << c;
            out << "," << csv_quote(row.reason) << "\n";
          }
        return;
      }
      const int d = FamilyFlags::need(bd_d, "--d");
      out << "n,k,d,alpha,root,reason\n";
      for (int n : orders)
        for (const auto& text : alphas) {
          const Row row = guarded(1, [&] {
            return std::vector<std::string>{
                format_double(falpha_quadratic(n, k, d, alpha_of(text)).largest_root())};
          });
          out << n << "," << k << "," << d << "," << text << "," << row.cells[0] << ","
              << csv_quote(row.reason) << "\n";
        }
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }
  try {
    if (action) action();
    return sw_status;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace alphax::cli
