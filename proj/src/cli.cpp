#include "grpf/cli.hpp"

#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "grpf/amap_io.hpp"
#include "grpf/report.hpp"
#include "grpf/verify.hpp"

namespace grpf {

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsage = 2;

struct Globals {
  bool json = false;
  bool timing = false;
  std::uint64_t seed = 42;
  std::optional<std::uint64_t> prime;
  std::string out_path;
};

struct Style {
  bool color;
  std::string pass() const { return color ? "\033[32mPASS\033[0m" : "PASS"; }
  std::string fail() const { return color ? "\033[31mFAIL\033[0m" : "FAIL"; }
  std::string skip() const { return color ? "\033[33mSKIP\033[0m" : "SKIP"; }
};

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::Parse, "expected a comma-separated integer list, got \"" + s + "\"");
    }
  }
  return out;
}

std::string str(const Weight& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}

std::string str(const WindowSet& set) {
  std::string s;
  for (const auto& l : set) s += (s.empty() ? "" : " ") + to_string(l);
  return s;
}

// Result of one subcommand: the JSON report plus its human rendering.
struct Outcome {
  Report report;
  std::string text;
  int code = kOk;
  std::optional<json> out_document;  // what --out writes, when not the report
};

Outcome cmd_bwb(int n, const std::string& s_arg, const std::string& q_arg) {
  const auto s = parse_int_list(s_arg);
  const auto q = parse_int_list(q_arg);
  if (s.size() != 2) throw Error(ErrorKind::RankMismatch, "--s needs exactly 2 entries");
  if (n < 3) throw Error(ErrorKind::InvalidRank, "bound violated: n >= 3");
  if (static_cast<int>(q.size()) != n - 2)
    throw Error(ErrorKind::RankMismatch, "--q needs n-2 = " + std::to_string(n - 2) + " entries");
  const GLWeight w({s[0], s[1]}, q);
  const auto r = bwb_cohomology(w);

  Outcome o;
  o.report.command = "bwb";
  o.report.params = {{"n", n}, {"s", s}, {"q", q}};
  o.report.result = to_json(r);
  o.report.provenance = {"Borel-Weil-Bott"};
  std::ostringstream t;
  t << "weight " << str(w.flat()) << " on Gr(2," << n << ")\n";
  if (r.vanishes())
    t << "all cohomology vanishes\n";
  else
    t << "H^" << r.cohomology->degree << " = V" << str(r.cohomology->representation) << ", dimension "
      << r.cohomology->dimension << "\n";
  o.text = t.str();
  return o;
}

Outcome cmd_classify(int n, int k) {
  if (k < 1) throw Error(ErrorKind::InvalidRank, "bound violated: k >= 1 (got k = " + std::to_string(k) + ")");
  const auto p = ModelParams::make(n, k);
  const auto c = classify(p);
  Outcome o;
  o.report.command = "classify";
  o.report.params = {{"n", n}, {"k", k}};
  o.report.result = to_json(c);
  o.report.provenance = {"adjunction", "Pfaffian degeneracy loci"};
  std::ostringstream t;
  t << "Y1: dim " << c.dim_y1 << ", " << (c.y1_empty ? "empty" : to_string(c.y1_type)) << "\n"
    << "Y2: dim " << c.dim_y2 << ", " << (c.y2_empty ? "empty" : to_string(c.y2_type))
    << (c.y2_smoothable ? "" : " (meets the singular locus of Pf)") << "\n"
    << "window inclusion T in S: " << (c.window_inclusion ? "yes" : "no") << "\n"
    << "embedding range: " << (c.theorem_applies ? "yes" : "no") << "\n";
  o.text = t.str();
  return o;
}

Outcome cmd_windows(int n, int k) {
  if (k < 1) throw Error(ErrorKind::InvalidRank, "bound violated: k >= 1 (got k = " + std::to_string(k) + ")");
  const auto p = ModelParams::make(n, k);
  const auto w = window_sets(p);
  const auto rect = orthogonal_rectangle(p);
  Outcome o;
  o.report.command = "windows";
  o.report.params = {{"n", n}, {"k", k}};
  o.report.result = {{"L", window_L(n)},
                     {"S", to_json(w.S)},
                     {"T", to_json(w.T)},
                     {"inclusion", w.inclusion},
                     {"inclusion_closed_form", window_inclusion_closed_form(p)},
                     {"orthogonal_rectangle", to_json(rect)}};
  o.report.provenance = {"grade restriction windows"};
  std::ostringstream t;
  t << "S (" << w.S.size() << "): " << str(w.S) << "\n"
    << "T (" << w.T.size() << "): " << str(w.T) << "\n"
    << "T in S: " << (w.inclusion ? "yes" : "no") << "\n"
    << "orthogonal rectangle (" << rect.size() << "): " << str(rect) << "\n";
  o.text = t.str();
  return o;
}

Outcome cmd_collection(int n, const std::string& which, std::optional<int> k) {
  WindowSet set;
  if (which == "S") {
    if (n < 3) throw Error(ErrorKind::InvalidRank, "bound violated: n >= 3");
    set = window_set_S(n);
  } else {
    if (!k) throw Error(ErrorKind::Parse, "--set T needs --k");
    set = window_set_T(n, ModelParams::make(n, *k).k);
  }
  const auto rep = verify_strong_exceptional(n, set);
  Outcome o;
  o.report.command = "collection verify";
  o.report.params = {{"n", n}, {"set", which}};
  if (k) o.report.params["k"] = *k;
  json order = json::array();
  for (const auto& l : rep.order) order.push_back(to_json(l));
  json failures = json::array();
  for (const auto& f : rep.failures)
    failures.push_back({{"source", to_json(f.source)},
                        {"target", to_json(f.target)},
                        {"degree", f.degree},
                        {"weight", f.weight},
                        {"reason", f.reason}});
  json hom = json::array();
  for (const auto& row : rep.hom) {
    json r = json::array();
    for (const auto& x : row) r.push_back(to_json(x));
    hom.push_back(std::move(r));
  }
  o.report.result = {{"order", order},   {"pairs_checked", rep.pairs_checked}, {"hom", hom},
                     {"failures", failures}, {"passed", rep.passed()}};
  o.report.provenance = {"Borel-Weil-Bott", "Clebsch-Gordan"};
  std::ostringstream t;
  t << "collection " << which << " on Gr(2," << n << "): " << rep.order.size() << " objects, " << rep.pairs_checked
    << " ordered pairs\n";
  for (const auto& f : rep.failures)
    t << "  " << to_string(f.source) << " -> " << to_string(f.target) << ": degree " << f.degree << " weight "
      << str(f.weight) << " (" << f.reason << ")\n";
  t << (rep.passed() ? "strong exceptional" : "NOT strong exceptional") << "\n";
  o.text = t.str();
  o.code = rep.passed() ? kOk : kVerificationFailed;
  return o;
}

Outcome cmd_lemma(int n) {
  const auto rep = lemma_vanishing_all_t(n);
  Outcome o;
  o.report.command = "lemma check";
  o.report.params = {{"n", n}};
  json failures = json::array();
  for (const auto& f : rep.failures)
    failures.push_back(
        {{"source", to_json(f.source)}, {"target", to_json(f.target)}, {"t", f.t}, {"degree", f.degree}});
  o.report.result = {{"verdict", rep.vanishes_for_all_t() ? "Vanishes-for-all-t" : "Counterexample"},
                     {"pairs", rep.pairs},
                     {"summands", rep.summands},
                     {"intervals", rep.intervals},
                     {"case_top_row", rep.case_top_row},
                     {"case_lower_rows", rep.case_lower_rows},
                     {"failures", failures}};
  o.report.provenance = {"Borel-Weil-Bott", "Clebsch-Gordan"};
  std::ostringstream t;
  t << "Ext^{>0}(E, F(t)) for E, F in S, n = " << n << ", all t >= 0\n"
    << "  " << rep.pairs << " pairs, " << rep.summands << " summands, " << rep.intervals << " t-intervals\n";
  for (const auto& f : rep.failures)
    t << "  " << to_string(f.source) << " -> " << to_string(f.target) << ": H^" << f.degree << " != 0 at t = " << f.t
      << "\n";
  t << (rep.vanishes_for_all_t() ? "Vanishes-for-all-t" : "Counterexample") << "\n";
  o.text = t.str();
  o.code = rep.vanishes_for_all_t() ? kOk : kVerificationFailed;
  return o;
}

json tangent_json(const TangentResult& t) {
  json j{{"mode", to_string(t.mode)}, {"assumptions", t.assumptions}};
  if (t.exact())
    j["h1"] = to_json(t.lower);
  else
    j["h1"] = {{"lower", to_json(t.lower)}, {"upper", to_json(t.upper)}};
  return j;
}

Outcome cmd_grass_section(int n, int k) {
  if (k < 1) throw Error(ErrorKind::InvalidRank, "bound violated: k >= 1 (got k = " + std::to_string(k) + ")");
  const auto p = ModelParams::make(n, k);
  const auto g = hodge_diamond_y1(p);
  const auto tangent = h1_tangent_y1(p);
  Outcome o;
  o.report.command = "hodge grass-section";
  o.report.params = {{"n", n}, {"k", k}};
  json chi = json::array();
  for (const auto& x : g.chi) chi.push_back(to_json(x));
  o.report.result = {{"diamond", to_json(g.diamond)},
                     {"chi_omega", chi},
                     {"heuristic", g.heuristic},
                     {"lefschetz_applicable", g.lefschetz_applicable},
                     {"h1_tangent", tangent_json(tangent)}};
  o.report.provenance = {"Koszul resolution", "Borel-Weil-Bott", "Lefschetz hyperplane theorem"};
  std::ostringstream t;
  t << "Y1 in Gr(2," << n << "), k = " << k << ", dim " << g.diamond.dim() << (g.heuristic ? " (heuristic range)" : "")
    << "\n"
    << g.diamond.str() << "middle row h^{p,d-p}, p = d..0: ";
  const auto mid = g.diamond.middle_row();
  for (std::size_t i = 0; i < mid.size(); ++i) t << (i ? " " : "") << mid[i];
  t << "\nh^1(T) = ";
  if (tangent.exact())
    t << tangent.lower;
  else
    t << "[" << tangent.lower << ", " << tangent.upper << "]";
  t << " (" << to_string(tangent.mode) << ")\n";
  o.text = t.str();
  return o;
}

Outcome cmd_hypersurface(int dim, int degree) {
  const auto h = hypersurface_hodge(dim, degree);
  Outcome o;
  o.report.command = "hodge hypersurface";
  o.report.params = {{"dim", dim}, {"degree", degree}};
  o.report.result = {{"diamond", to_json(h)}};
  o.report.provenance = {"Griffiths residues", "Lefschetz hyperplane theorem"};
  std::ostringstream t;
  t << "degree " << degree << " hypersurface in P^" << dim << "\n" << h.str() << "middle row: ";
  const auto mid = h.middle_row();
  for (std::size_t i = 0; i < mid.size(); ++i) t << (i ? " " : "") << mid[i];
  t << "\n";
  o.text = t.str();
  return o;
}

std::uint64_t resolve_prime(const AMap& a, const Globals& g) {
  if (const auto* ps = std::get_if<PrimeScalars>(&a.field)) {
    if (g.prime && *g.prime != ps->p)
      throw Error(ErrorKind::Parse, "AMap is over F_" + std::to_string(ps->p) + " but --prime is " +
                                        std::to_string(*g.prime));
    return ps->p;
  }
  return g.prime.value_or(10007);
}

template <class Field>
void describe_family(const Field& f, const AMap& a, json& result, std::ostringstream& t) {
  const auto s = build_skew_matrix(f, a);
  json entries = json::array();
  for (int i = 0; i < a.n; ++i) {
    json row = json::array();
    for (int j = 0; j < a.n; ++j) row.push_back(s.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].str());
    entries.push_back(std::move(row));
  }
  result["matrix"] = entries;
  t << "skew matrix (" << a.n << "x" << a.n << ") in u1..u" << a.k << ":\n";
  for (int i = 0; i < a.n; ++i)
    for (int j = i + 1; j < a.n; ++j)
      t << "  a[" << i + 1 << "," << j + 1 << "] = " << s.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].str()
        << "\n";
  if (a.n % 2 == 0) {
    const auto pf = pfaffian_polynomial(s);
    result["pfaffian"] = {{"polynomial", pf.str()}, {"degree", pf.total_degree()}, {"terms", pf.terms().size()}};
    t << "Pfaffian: degree " << pf.total_degree() << ", " << pf.terms().size() << " terms\n  " << pf.str() << "\n";
  } else {
    json subs = json::array();
    const auto pfs = submaximal_pfaffians(s);
    for (std::size_t i = 0; i < pfs.size(); ++i) {
      subs.push_back({{"deleted", i + 1}, {"polynomial", pfs[i].str()}, {"degree", pfs[i].total_degree()}});
      t << "Pf without " << i + 1 << ": degree " << pfs[i].total_degree() << "\n  " << pfs[i].str() << "\n";
    }
    result["submaximal_pfaffians"] = subs;
  }
}

Outcome cmd_pfaffian_build(const std::string& path, const Globals& g) {
  const auto a = load_amap(path);
  Outcome o;
  o.report.command = "pfaffian build";
  o.report.params = {{"in", path}, {"n", a.n}, {"k", a.k}};
  std::ostringstream t;
  json result = json::object();
  if (std::holds_alternative<RationalScalars>(a.field) && !g.prime) {
    result["field"] = "Q";
    describe_family(RationalField{}, a, result, t);
  } else {
    const auto p = resolve_prime(a, g);
    result["field"] = {{"p", p}};
    o.report.params["prime"] = p;
    describe_family(PrimeField(p), a, result, t);
  }
  o.report.result = std::move(result);
  o.report.provenance = {"Pfaffian expansion"};
  o.text = t.str();
  return o;
}

Outcome cmd_pfaffian_sample(const std::string& path, std::size_t points, const Globals& g) {
  const auto a = load_amap(path);
  const auto p = resolve_prime(a, g);
  const auto rep = sample_y2(a, p, points, g.seed);
  Outcome o;
  o.report.command = "pfaffian sample";
  o.report.params = {{"in", path}, {"prime", p}, {"points", points}, {"seed", g.seed}};
  json pts = json::array();
  for (const auto& pt : rep.points)
    pts.push_back({{"coordinates", pt.coordinates},
                   {"rank", pt.rank},
                   {"kernel_dim", pt.kernel_dim},
                   {"jacobian_rank", pt.jacobian_rank},
                   {"smooth_at", pt.smooth_at}});
  std::map<int, std::size_t> kernels;
  for (const auto& pt : rep.points)
    if (pt.smooth_at) ++kernels[pt.kernel_dim];
  json kj = json::object();
  for (const auto& [d, c] : kernels) kj[std::to_string(d)] = c;
  o.report.result = {{"strategy", rep.strategy}, {"attempts", rep.attempts}, {"exhausted", rep.exhausted},
                     {"note", rep.note},         {"found", rep.points.size()}, {"smooth", rep.smooth_count()},
                     {"smooth_kernel_dims", kj}, {"points", pts}};
  o.report.provenance = {"Jacobian criterion over F_p"};
  std::ostringstream t;
  t << "Y2 for (n,k) = (" << a.n << "," << a.k << ") over F_" << p << ", seed " << g.seed << ", strategy "
    << rep.strategy << "\n"
    << "  found " << rep.points.size() << " points in " << rep.attempts << " attempts, " << rep.smooth_count()
    << " smooth\n";
  for (const auto& [d, c] : kernels) t << "  smooth points with kernel_dim " << d << ": " << c << "\n";
  if (rep.exhausted) t << "  budget exhausted: " << rep.note << "\n";
  o.text = t.str();
  return o;
}

Outcome cmd_pfaffian_random(int n, int k, const Globals& g) {
  const auto p = g.prime.value_or(10007);
  if (n < 2 || k < 1 || k > n * (n - 1) / 2)
    throw Error(ErrorKind::InvalidRank, "bound violated: 1 <= k <= (n choose 2) = " + std::to_string(n * (n - 1) / 2));
  const auto a = random_amap(n, k, p, g.seed);
  Outcome o;
  o.report.command = "pfaffian random";
  o.report.params = {{"n", n}, {"k", k}, {"prime", p}, {"seed", g.seed}};
  o.report.result = amap_to_json(a);
  o.report.provenance = {"seeded uniform sampling over F_p"};
  o.text = amap_to_json(a).dump() + "\n";
  o.out_document = amap_to_json(a);
  return o;
}

Outcome cmd_verify_all(const std::string& profile, bool inject, const Style& style, std::ostream& live, bool stream) {
  VerifyOptions opts;
  opts.profile = profile == "full" ? VerifyProfile::Full : VerifyProfile::Fast;
  opts.inject_rho_fault = inject;
  auto line = [&](const VerifyItem& item) {
    std::ostringstream t;
    t << "[" << (item.skipped ? style.skip() : item.passed ? style.pass() : style.fail()) << "] " << item.id << " "
      << item.description;
    if (!item.skipped) t << " (" << static_cast<long long>(item.ms) << " ms)";
    t << "\n      " << item.detail << "\n";
    return t.str();
  };
  const auto rep = verify_all(opts, [&](const VerifyItem& item) {
    if (stream) live << line(item) << std::flush;
  });
  Outcome o;
  o.report.command = "verify-all";
  o.report.params = {{"profile", profile}, {"inject_fault", inject}};
  json items = json::array();
  std::size_t passed = 0, skipped = 0;
  for (const auto& item : rep.items) {
    items.push_back({{"id", item.id},
                     {"description", item.description},
                     {"slow", item.slow},
                     {"status", item.skipped ? "skipped" : item.passed ? "pass" : "fail"},
                     {"detail", item.detail}});
    passed += (!item.skipped && item.passed) ? 1 : 0;
    skipped += item.skipped ? 1 : 0;
  }
  o.report.result = {{"items", items}, {"passed", rep.passed()}};
  o.report.provenance = {"acceptance suite"};
  std::ostringstream t;
  if (!stream)
    for (const auto& item : rep.items) t << line(item);
  t << passed << " passed, " << rep.items.size() - passed - skipped << " failed, " << skipped << " skipped: "
    << (rep.passed() ? style.pass() : style.fail()) << "\n";
  o.text = t.str();
  o.code = rep.passed() ? kOk : kVerificationFailed;
  return o;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Homological projective duality checks for linear sections of Gr(2,n) and Pfaffians", "grpf"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_flag("--json", g.json, "Print the JSON report instead of text");
  app.add_flag("--timing", g.timing, "Include wall-clock timing in the JSON report");
  app.add_option("--seed", g.seed, "PRNG seed")->capture_default_str();
  app.add_option("--prime", g.prime, "Prime for finite-field computations")->check(CLI::PositiveNumber);
  app.add_option("--out", g.out_path, "Also write the JSON report to this path");

  int n = 0, k = 0, dim = 0, degree = 0;
  std::optional<int> opt_k;
  std::string s_arg, q_arg, which = "S", in_path, profile = "fast";
  std::size_t points = 200;
  bool inject = false;

  auto* bwb = app.add_subcommand("bwb", "Cohomology of an irreducible homogeneous bundle on Gr(2,n)");
  bwb->add_option("--n", n, "dim V")->required();
  bwb->add_option("--s", s_arg, "Weight on S^dual, e.g. \"1,0\"")->required();
  bwb->add_option("--q", q_arg, "Weight on Q^dual, n-2 entries")->required();

  auto* cls = app.add_subcommand("classify", "Dimensions and canonical class of Y1 and Y2");
  cls->add_option("--n", n)->required();
  cls->add_option("--k", k)->required();

  auto* win = app.add_subcommand("windows", "Window sets S and T and their orthogonal rectangle");
  win->add_option("--n", n)->required();
  win->add_option("--k", k)->required();

  auto* coll = app.add_subcommand("collection", "Exceptional collections");
  coll->require_subcommand(1);
  auto* coll_verify = coll->add_subcommand("verify", "Check strong exceptionality of a window set");
  coll_verify->add_option("--n", n)->required();
  coll_verify->add_option("--set", which)->check(CLI::IsMember({"S", "T"}))->capture_default_str();
  coll_verify->add_option("--k", opt_k, "Needed for --set T");

  auto* lemma = app.add_subcommand("lemma", "Ext vanishing in all twists");
  lemma->require_subcommand(1);
  auto* lemma_check = lemma->add_subcommand("check", "Decide Ext^{>0}(E, F(t)) = 0 for E, F in S and all t >= 0");
  lemma_check->add_option("--n", n)->required();

  auto* hodge = app.add_subcommand("hodge", "Hodge numbers");
  hodge->require_subcommand(1);
  auto* grass = hodge->add_subcommand("grass-section", "Hodge diamond of Y1 and h^1(T_Y1)");
  grass->add_option("--n", n)->required();
  grass->add_option("--k", k)->required();
  auto* hyper = hodge->add_subcommand("hypersurface", "Hodge diamond of a smooth hypersurface in P^dim");
  hyper->add_option("--dim", dim, "Ambient projective dimension")->required();
  hyper->add_option("--degree", degree)->required();

  auto* pf = app.add_subcommand("pfaffian", "Skew families and Y2 over finite fields");
  pf->require_subcommand(1);
  auto* pf_build = pf->add_subcommand("build", "Skew matrix of linear forms and its Pfaffians");
  pf_build->add_option("--in", in_path, "AMap JSON file")->required();
  auto* pf_sample = pf->add_subcommand("sample", "Sample points of Y2(F_p) with Jacobian data");
  pf_sample->add_option("--in", in_path, "AMap JSON file")->required();
  pf_sample->add_option("--points", points)->capture_default_str();
  auto* pf_random = pf->add_subcommand("random", "Random full-rank AMap over F_p");
  pf_random->add_option("--n", n)->required();
  pf_random->add_option("--k", k)->required();

  auto* vall = app.add_subcommand("verify-all", "Run the acceptance suite");
  vall->add_option("--profile", profile)->check(CLI::IsMember({"fast", "full"}))->capture_default_str();
  vall->add_flag("--inject-fault", inject, "Shift rho_1 by one inside the Serre-duality property");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  const char* no_color = std::getenv("NO_COLOR");
  const Style style{(no_color == nullptr || *no_color == '\0') && &out == &std::cout && isatty(STDOUT_FILENO)};

  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    if (*bwb)
      o = cmd_bwb(n, s_arg, q_arg);
    else if (*cls)
      o = cmd_classify(n, k);
    else if (*win)
      o = cmd_windows(n, k);
    else if (*coll_verify)
      o = cmd_collection(n, which, opt_k);
    else if (*lemma_check)
      o = cmd_lemma(n);
    else if (*grass)
      o = cmd_grass_section(n, k);
    else if (*hyper)
      o = cmd_hypersurface(dim, degree);
    else if (*pf_build)
      o = cmd_pfaffian_build(in_path, g);
    else if (*pf_sample)
      o = cmd_pfaffian_sample(in_path, points, g);
    else if (*pf_random)
      o = cmd_pfaffian_random(n, k, g);
    else if (*vall)
      o = cmd_verify_all(profile, inject, style, out, !g.json);
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return e.kind() == ErrorKind::Integrity ? kVerificationFailed : kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  if (g.timing)
    o.report.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  const std::string doc = o.report.to_json().dump(2) + "\n";
  if (g.json)
    out << doc;
  else
    out << o.text;
  if (!g.out_path.empty()) {
    std::ofstream f(g.out_path);
    if (!f) {
      err << "error: cannot write " << g.out_path << "\n";
      return kUsage;
    }
    f << (o.out_document ? o.out_document->dump(2) + "\n" : doc);
  }
  return o.code;
}

}  // namespace grpf
