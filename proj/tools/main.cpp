// gfstream: exact streaming of lower-triangular Toeplitz convolutions via
// generating functions, plus Hankel rank/determinant certificates.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gfstream/continual.hpp"
#include "gfstream/hankel.hpp"
#include "gfstream/ratgf.hpp"
#include "gfstream/series.hpp"
#include "gfstream/streamkit.hpp"
#include "gfstream/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace gfs;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

std::string join_rats(const std::vector<Rat>& xs, const char* sep) {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out << sep;
    out << to_string(xs[i]);
  }
  return out.str();
}

json rat_list(const std::vector<Rat>& xs) {
  json a = json::array();
  for (const Rat& x : xs) a.push_back(to_string(x));
  return a;
}

json poly_list(const Poly& p) {
  if (p.is_zero()) return json::array({"0"});
  json a = json::array();
  for (const Rat& c : p.coeffs()) a.push_back(to_string(c));
  return a;
}

// Options shared by every command that needs a generating function.
struct GfInput {
  std::string gf;
  std::string expr;

  void attach(CLI::App* cmd) {
    auto* g = cmd->add_option("--gf", gf,
                              "catalog entry, e.g. g_half or g_lm(1,1/2)");
    auto* e = cmd->add_option("--expr", expr,
                              "series expression, e.g. \"1/sqrt(1-x)\"");
    g->excludes(e);
    e->excludes(g);
  }

  Series series(std::size_t order) const {
    if (!gf.empty()) return catalog(gf, order);
    if (!expr.empty()) return parse(expr, order);
    throw CLI::RequiredError("--gf or --expr");
  }
};

std::vector<Rat> read_stream_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::domain_error("cannot open input file: " + path);
  std::vector<Rat> z;
  std::string line;
  while (std::getline(in, line)) {
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    std::size_t e = line.find_last_not_of(" \t\r");
    z.push_back(rat_from_string(line.substr(b, e - b + 1)));
  }
  return z;
}

// Input stream flags: a file or one of the generators.
struct StreamInput {
  std::string file;
  std::size_t impulse = 0, ones = 0, random = 0;
  std::uint64_t seed = 0;

  void attach(CLI::App* cmd) {
    auto* f = cmd->add_option("--input", file,
                              "input file, one rational per line (# comments)");
    auto* i = cmd->add_option("--impulse", impulse, "impulse stream of length N");
    auto* o = cmd->add_option("--ones", ones, "all-ones stream of length N");
    auto* r = cmd->add_option("--random", random,
                              "random integer stream of length N");
    cmd->add_option("--seed", seed, "seed for --random");
    f->excludes(i)->excludes(o)->excludes(r);
    i->excludes(f)->excludes(o)->excludes(r);
    o->excludes(f)->excludes(i)->excludes(r);
    r->excludes(f)->excludes(i)->excludes(o);
  }

  std::vector<Rat> values() const {
    if (!file.empty()) return read_stream_file(file);
    if (impulse > 0) {
      std::vector<Rat> z(impulse, Rat(0));
      z[0] = 1;
      return z;
    }
    if (ones > 0) return std::vector<Rat>(ones, Rat(1));
    if (random > 0) {
      std::mt19937_64 rng(seed);
      std::vector<Rat> z;
      z.reserve(random);
      for (std::size_t i = 0; i < random; ++i)
        z.emplace_back(static_cast<long>(rng() % 19) - 9);
      return z;
    }
    throw CLI::RequiredError("--input, --impulse, --ones or --random");
  }
};

Poly poly_from_list(const std::string& text) {
  std::vector<Rat> c;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    std::size_t b = item.find_first_not_of(" \t");
    if (b == std::string::npos)
      throw std::invalid_argument("empty coefficient in list: '" + text + "'");
    std::size_t e = item.find_last_not_of(" \t");
    c.push_back(rat_from_string(item.substr(b, e - b + 1)));
  }
  if (c.empty())
    throw std::invalid_argument("empty coefficient list: '" + text + "'");
  return Poly(std::move(c));
}

void print_verify_report(const Report& report, bool as_json) {
  if (as_json) {
    json lines = json::array();
    for (const auto& l : report.lines)
      lines.push_back({{"d", l.d},
                       {"expected", l.expected},
                       {"got", l.got},
                       {"ok", l.ok}});
    std::cout << json{{"suite", report.suite},
                      {"lines", lines},
                      {"ok", report.ok()}}
              << "\n";
    return;
  }
  for (const auto& l : report.lines)
    std::cout << "d=" << l.d << " expected=" << l.expected << " got=" << l.got
              << " ok=" << (l.ok ? "true" : "false") << "\n";
}

int cmd_coeffs(const GfInput& input, std::size_t order, bool as_json) {
  Series s = input.series(order);
  if (as_json) {
    std::cout << json{{"coeffs", rat_list(s.coeffs())}} << "\n";
  } else {
    std::cout << join_rats(s.coeffs(), ", ") << "\n";
  }
  return kExitOk;
}

int cmd_stream_run(const GfInput& input, const StreamInput& stream,
                   const std::string& num, const std::string& den,
                   std::optional<std::size_t> pade_degree,
                   std::optional<std::size_t> order, bool as_json) {
  std::vector<Rat> z = stream.values();

  std::unique_ptr<Streamer> s;
  if (!num.empty() || !den.empty()) {
    if (num.empty() || den.empty())
      throw std::invalid_argument("--num and --den go together");
    s = rational_streamer(RationalGF(poly_from_list(num), poly_from_list(den)));
  } else if (pade_degree) {
    std::size_t n = std::max(order.value_or(2 * *pade_degree), 2 * *pade_degree);
    s = rational_streamer(pade(input.series(n), *pade_degree));
  } else {
    std::size_t n = order.value_or(z.empty() ? 0 : z.size() - 1);
    s = dense_streamer(input.series(n));
  }

  StreamRun r = run(*s, z);
  if (as_json) {
    std::cout << json{{"outputs", rat_list(r.outputs)},
                      {"max_buffer", r.max_buffer}}
              << "\n";
  } else {
    for (const Rat& y : r.outputs) std::cout << to_string(y) << "\n";
    std::cout << "max_buffer=" << r.max_buffer << "\n";
  }
  return kExitOk;
}

int cmd_hankel(const GfInput& input, bool want_det, std::size_t I,
               std::optional<std::size_t> J_opt, bool as_json) {
  std::size_t J = J_opt.value_or(I);
  HankelView h(input.series(I + J), I, J);
  if (want_det) {
    Rat d = det(h);
    if (as_json)
      std::cout << json{{"det", to_string(d)}} << "\n";
    else
      std::cout << "det=" << to_string(d) << "\n";
  } else {
    std::size_t r = rank(h);
    if (as_json)
      std::cout << json{{"rank", r}} << "\n";
    else
      std::cout << "rank=" << r << "\n";
  }
  return kExitOk;
}

int cmd_lowerbound(const GfInput& input, std::size_t t, std::size_t I,
                   bool as_json) {
  RankCertificate c = space_lower_bound(input.series(t + I), t, I);
  if (as_json) {
    std::cout << json{{"t", c.t},
                      {"I", c.I},
                      {"rank", c.rank},
                      {"witness", c.witness}}
              << "\n";
    return kExitOk;
  }
  std::cout << "t=" << c.t << " I=" << c.I << " rank=" << c.rank
            << " witness=[";
  for (std::size_t i = 0; i < c.witness.size(); ++i) {
    if (i > 0) std::cout << ",";
    std::cout << c.witness[i];
  }
  std::cout << "]\n";
  return kExitOk;
}

int cmd_pade(const GfInput& input, std::size_t degree,
             std::optional<std::size_t> order, bool as_json) {
  std::size_t n = std::max(order.value_or(2 * degree),
                           degree > 0 ? 2 * degree - 1 : 0);
  Series f = input.series(n);
  RationalGF g = pade(f, degree);

  // largest index through which the expansion agrees with the input series
  // (-1 when the constant terms already differ)
  Series e = expand(g, f.order());
  long long agreement = -1;
  while (agreement < static_cast<long long>(f.order()) &&
         f.coeff(agreement + 1) == e.coeff(agreement + 1))
    ++agreement;

  if (as_json) {
    std::cout << json{{"P", poly_list(g.numerator())},
                      {"Q", poly_list(g.denominator())},
                      {"degree", g.degree()},
                      {"agreement", agreement}}
              << "\n";
    return kExitOk;
  }
  std::cout << "P: " << to_string(g.numerator()) << "\n";
  std::cout << "Q: " << to_string(g.denominator()) << "\n";
  std::cout << "degree=" << g.degree() << "\n";
  std::cout << "agreement=" << agreement << "\n";
  return kExitOk;
}

int cmd_continual(std::size_t length, std::size_t approx_degree,
                  std::uint64_t seed, const std::string& input_file,
                  bool as_json) {
  std::vector<Rat> z = input_file.empty()
                           ? std::vector<Rat>(length, Rat(1))
                           : read_stream_file(input_file);
  MechanismReport r = mechanism_run(length, approx_degree, seed, z);
  if (as_json) {
    std::cout << json{{"outputs", rat_list(r.outputs)},
                      {"noise", rat_list(r.noise)},
                      {"max_buffer", r.max_buffer},
                      {"coeff_error", to_string(r.coeff_error)},
                      {"P", poly_list(r.shaper_gf.numerator())},
                      {"Q", poly_list(r.shaper_gf.denominator())}}
              << "\n";
    return kExitOk;
  }
  for (const Rat& y : r.outputs) std::cout << to_string(y) << "\n";
  std::cout << "max_buffer=" << r.max_buffer << "\n";
  std::cout << "coeff_error=" << to_string(r.coeff_error) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact streaming of Toeplitz convolutions via generating functions"};
  app.require_subcommand(1);

  // coeffs
  auto* coeffs = app.add_subcommand("coeffs", "expand a generating function");
  GfInput coeffs_gf;
  coeffs_gf.attach(coeffs);
  std::size_t coeffs_order = 10;
  bool coeffs_json = false;
  coeffs->add_option("--order", coeffs_order, "truncation order");
  coeffs->add_flag("--json", coeffs_json, "structured output");

  // stream run
  auto* stream = app.add_subcommand("stream", "streaming runs");
  auto* stream_run = stream->add_subcommand("run", "feed a stream through T[a]");
  GfInput stream_gf;
  stream_gf.attach(stream_run);
  StreamInput stream_in;
  stream_in.attach(stream_run);
  std::string stream_num, stream_den;
  std::optional<std::size_t> stream_pade, stream_order;
  bool stream_json = false;
  stream_run->add_option("--num", stream_num,
                         "numerator coefficients for a rational streamer");
  stream_run->add_option("--den", stream_den,
                         "denominator coefficients for a rational streamer");
  stream_run->add_option("--pade", stream_pade,
                         "stream through the Pade approximant of this degree");
  stream_run->add_option("--order", stream_order,
                         "series order for the dense streamer");
  stream_run->add_flag("--json", stream_json, "structured output");

  // hankel det / rank
  auto* hankel = app.add_subcommand("hankel", "Hankel truncation queries");
  auto* hankel_det = hankel->add_subcommand("det", "exact determinant of H^(I,I)");
  auto* hankel_rank = hankel->add_subcommand("rank", "exact rank of H^(I,J)");
  GfInput det_gf, rank_gf;
  det_gf.attach(hankel_det);
  rank_gf.attach(hankel_rank);
  std::size_t det_I = 0, rank_I = 0;
  std::optional<std::size_t> rank_J;
  bool det_json = false, rank_json = false;
  hankel_det->add_option("--I", det_I, "truncation bound")->required();
  hankel_rank->add_option("--I", rank_I, "row bound")->required();
  hankel_rank->add_option("--J", rank_J, "column bound (default I)");
  hankel_det->add_flag("--json", det_json, "structured output");
  hankel_rank->add_flag("--json", rank_json, "structured output");

  // lowerbound
  auto* lb = app.add_subcommand(
      "lowerbound", "space lower-bound certificate rank(H^(I,t))");
  GfInput lb_gf;
  lb_gf.attach(lb);
  std::size_t lb_t = 0, lb_I = 0;
  bool lb_json = false;
  lb->add_option("--t", lb_t, "time horizon t")->required();
  lb->add_option("--I", lb_I, "look-ahead window I")->required();
  lb->add_flag("--json", lb_json, "structured output");

  // pade
  auto* pade_cmd = app.add_subcommand("pade", "rational approximation");
  GfInput pade_gf;
  pade_gf.attach(pade_cmd);
  std::size_t pade_degree = 1;
  std::optional<std::size_t> pade_order;
  bool pade_json = false;
  pade_cmd->add_option("--degree", pade_degree, "target degree d")->required();
  pade_cmd->add_option("--order", pade_order,
                       "series order to match against (default 2d)");
  pade_cmd->add_flag("--json", pade_json, "structured output");

  // verify
  auto* verify = app.add_subcommand("verify", "determinant and rank suites");
  auto* v_catalan = verify->add_subcommand("catalan", "det(H_C) = 1");
  auto* v_sqrtdet = verify->add_subcommand(
      "sqrtdet", "det(H[1/sqrt(1-4x)]) = 2^d and full rank of H[1/sqrt(1-x)]");
  auto* v_junod = verify->add_subcommand("junod", "Hankel determinant formula");
  auto* v_corank = verify->add_subcommand("corank", "weighted sqrt co-rank bound");
  auto* v_comp = verify->add_subcommand("comp", "rank-transfer relation check");
  std::size_t cat_dmax = 12, sq_dmax = 12, ju_dmax = 12, co_dmax = 10,
              comp_dmax = 10;
  std::string ju_b = "5", ju_c = "1";
  std::string co_lambda = "1", co_mu = "1/2";
  std::string comp_lambda = "1", comp_mu = "1/2";
  bool cat_json = false, sq_json = false, ju_json = false, co_json = false,
       comp_json = false;
  v_catalan->add_option("--dmax", cat_dmax, "largest truncation");
  v_catalan->add_flag("--json", cat_json, "structured output");
  v_sqrtdet->add_option("--dmax", sq_dmax, "largest truncation");
  v_sqrtdet->add_flag("--json", sq_json, "structured output");
  v_junod->add_option("--dmax", ju_dmax, "largest truncation");
  v_junod->add_option("--b", ju_b, "parameter b");
  v_junod->add_option("--c", ju_c, "parameter c");
  v_junod->add_flag("--json", ju_json, "structured output");
  v_corank->add_option("--dmax", co_dmax, "largest truncation");
  v_corank->add_option("--lambda", co_lambda, "weight decay");
  v_corank->add_option("--mu", co_mu, "momentum");
  v_corank->add_flag("--json", co_json, "structured output");
  v_comp->add_option("--dmax", comp_dmax, "largest truncation");
  v_comp->add_option("--lambda", comp_lambda, "weight decay");
  v_comp->add_option("--mu", comp_mu, "momentum");
  v_comp->add_flag("--json", comp_json, "structured output");

  // continual demo
  auto* continual = app.add_subcommand("continual", "correlated-noise counting");
  auto* demo = continual->add_subcommand("demo", "run the mechanism");
  std::size_t demo_length = 0, demo_degree = 1;
  std::uint64_t demo_seed = 0;
  std::string demo_input;
  bool demo_json = false;
  demo->add_option("--length", demo_length, "number of steps")->required();
  demo->add_option("--approx-degree", demo_degree,
                   "degree of the Pade approximant of 1/sqrt(1-x)")
      ->required();
  demo->add_option("--seed", demo_seed, "noise seed");
  demo->add_option("--input", demo_input,
                   "input stream file (default: all ones)");
  demo->add_flag("--json", demo_json, "structured output");

  try {
    app.parse(argc, argv);

    if (*coeffs) return cmd_coeffs(coeffs_gf, coeffs_order, coeffs_json);
    if (*stream_run)
      return cmd_stream_run(stream_gf, stream_in, stream_num, stream_den,
                            stream_pade, stream_order, stream_json);
    if (*hankel_det) return cmd_hankel(det_gf, true, det_I, det_I, det_json);
    if (*hankel_rank)
      return cmd_hankel(rank_gf, false, rank_I, rank_J, rank_json);
    if (*lb) return cmd_lowerbound(lb_gf, lb_t, lb_I, lb_json);
    if (*pade_cmd)
      return cmd_pade(pade_gf, pade_degree, pade_order, pade_json);
    if (*demo)
      return cmd_continual(demo_length, demo_degree, demo_seed, demo_input,
                           demo_json);

    Report report;
    if (*v_catalan) {
      report = verify_catalan_dets(cat_dmax);
      print_verify_report(report, cat_json);
    } else if (*v_sqrtdet) {
      report = verify_sqrt_dets(sq_dmax);
      print_verify_report(report, sq_json);
    } else if (*v_junod) {
      report = verify_junod(rat_from_string(ju_b), rat_from_string(ju_c),
                            ju_dmax);
      print_verify_report(report, ju_json);
    } else if (*v_corank) {
      report = verify_corank(rat_from_string(co_lambda),
                             rat_from_string(co_mu), co_dmax);
      print_verify_report(report, co_json);
    } else if (*v_comp) {
      // f = sqrt((1-lx)(1-mx)) against G = (1 - (l+m)/2 x - f)/x^2, which
      // satisfy f*G = ((l+m)/2 x - 1) G + (l-m)^2/4.
      Rat l = rat_from_string(comp_lambda), m = rat_from_string(comp_mu);
      std::size_t w = 2 * comp_dmax + 2;
      std::vector<Rat> base(w + 1, Rat(0));
      base[0] = 1;
      base[1] = -(l + m);
      base[2] = l * m;
      Series f = sqrt(Series(std::move(base)));
      Series num = sub(
          sub(Series::constant(1, w), scale((l + m) / 2, Series::x(w))), f);
      CompRelation rel{f.truncated(w - 2), shift_div_x(num, 2), Rat(-1),
                       (l + m) / 2, (l - m) * (l - m) / 4};
      report = check_comp_relation(rel, comp_dmax);
      print_verify_report(report, comp_json);
    } else if (*verify) {
      std::cerr << "verify needs a suite: catalan|sqrtdet|junod|corank|comp\n";
      return kExitUsage;
    } else if (*stream || *hankel || *continual) {
      std::cerr << "missing subcommand\n";
      return kExitUsage;
    }
    return report.ok() ? kExitOk : kExitDomain;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}
