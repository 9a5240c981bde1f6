/*
   Copyright 2026 The frobinc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


#include "cli/app.hpp"

#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cli/config.hpp"
#include "cli/reproduce.hpp"
#include "frobinc/bruteforce.hpp"
#include "frobinc/certificate.hpp"
#include "frobinc/chow.hpp"
#include "frobinc/codes.hpp"
#include "frobinc/density.hpp"
#include "frobinc/error.hpp"
#include "frobinc/lattice.hpp"
#include "frobinc/polycount.hpp"

namespace frobinc::cli {

namespace {

using json = nlohmann::ordered_json;

// Integers that fit in 64 bits are JSON numbers; larger ones are decimal
// strings.
json int_json(const Int& v) {
  if (fits_int64(v)) return json(to_int64(v));
  return json(v.get_str());
}

json rat_json(const Rat& v) {
  if (v.get_den() == 1) return int_json(v.get_num());
  return json(v.get_str());
}

json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(int_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json terms_json(const poly::IntPoly2& p) {
  json terms = json::array();
  for (const auto& [key, c] : p.sorted_terms()) {
    terms.push_back({{"coeff", int_json(c)}, {"x", key.first}, {"y", key.second}});
  }
  return terms;
}

json enumerator_json(const codes::WeightEnum& e) {
  json out = json::array();
  for (std::size_t w = 0; w < e.coeffs.size(); ++w) {
    if (e.coeffs[w] != 0) out.push_back({static_cast<int>(w), int_json(e.coeffs[w])});
  }
  return out;
}

std::string word_string(const codes::Word& w, int length) {
  std::string s(static_cast<std::size_t>(length), '0');
  for (int i = 0; i < length; ++i)
    if (codes::get_bit(w, i)) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

struct Context {
  std::ostream& out;
  bool as_json = false;
  Config config;

  void emit(const json& j) const { out << j.dump() << '\n'; }
};

// Exponent e with s^{n-1} = 2^e, for the code over Z/s^{n-1}.
int code_exponent(int n, std::uint64_t s) {
  const int a = exact_log(s, 2);
  if (a < 1) throw DomainError("codes over Z/s^(n-1) need s to be a power of 2");
  return a * (n - 1);
}

void write_gram(const Context& ctx, const std::string& path, const IntMatrix& gram) {
  if (path.empty()) {
    ctx.out << gram_to_text(gram);
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << gram_to_text(gram);
}

IntMatrix read_gram(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open Gram file " + path);
  return parse_gram(f);
}

json lattice_summary(const IntLattice& l) {
  json j;
  j["lattice"] = l.provenance;
  j["rank"] = l.rank();
  j["disc"] = int_json(disc(l));
  j["even"] = is_even(l);
  return j;
}

json density_json(const DensityReport& d) {
  json j;
  j["rank"] = d.rank;
  j["disc"] = int_json(d.disc);
  j["min_norm"] = int_json(d.min_norm);
  j["delta"] = d.delta;
  j["mh_bound"] = d.mh_bound;
  j["log2_delta"] = d.log2_delta;
  j["log2_mh_bound"] = d.log2_mh_bound;
  return j;
}

void print_density(const Context& ctx, const DensityReport& d) {
  if (ctx.as_json) {
    ctx.emit(density_json(d));
    return;
  }
  ctx.out << "rank " << d.rank << '\n'
          << "disc " << d.disc.get_str() << '\n'
          << "min_norm " << d.min_norm.get_str() << '\n'
          << "delta " << d.delta << '\n'
          << "log2_delta " << d.log2_delta << '\n'
          << "mh_bound " << d.mh_bound << '\n'
          << "log2_mh_bound " << d.log2_mh_bound << '\n';
}

json certificate_json(const codes::MinNormCertificate& c) {
  json j;
  j["length"] = c.length;
  j["exponent"] = c.exponent;
  j["denom"] = int_json(c.denom);
  json branches = json::array();
  for (const auto& b : c.branches) {
    json jb;
    jb["level"] = b.level;
    jb["route"] = b.route;
    jb["code_dim"] = b.code_dim;
    jb["min_weight"] = b.min_weight;
    jb["norm_bound"] = b.min_weight < 0 ? json(nullptr) : rat_json(b.norm_bound);
    if (b.route == "direct" || b.route == "dual") jb["enumerator"] = enumerator_json(b.enumerator);
    branches.push_back(std::move(jb));
  }
  j["branches"] = std::move(branches);
  j["top_level_even_weight"] = c.top_level_even_weight;
  j["lattice_matches_code"] = c.lattice_matches_code;
  json w = json::array();
  for (const auto& x : c.witness) w.push_back(int_json(x));
  j["witness"] = std::move(w);
  j["witness_in_lattice"] = c.witness_in_lattice;
  j["witness_norm"] = rat_json(c.witness_norm);
  j["lower_bound"] = rat_json(c.lower_bound);
  j["min_norm"] = c.valid ? rat_json(c.lower_bound) : json(nullptr);
  j["valid"] = c.valid;
  return j;
}

struct LatticeParams {
  int n = 4;
  std::uint64_t r = 2, s = 2;
};

void add_lattice_params(CLI::App* cmd, LatticeParams& p) {
  cmd->add_option("--n", p.n, "ambient dimension")->capture_default_str();
  cmd->add_option("--r", p.r, "Frobenius power r")->capture_default_str();
  cmd->add_option("--s", p.s, "Frobenius power s")->capture_default_str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for Frobenius incidence varieties", "frobinc"};
  app.require_subcommand(1);
  app.fallthrough();

  bool as_json = false;
  std::string config_path;
  std::optional<std::uint64_t> max_pairs_flag;
  std::optional<int> max_code_dim_flag, precision_flag;
  std::optional<unsigned> threads_flag;
  app.add_flag("--json", as_json, "emit JSON instead of plain text");
  app.add_option("--config", config_path, "key=value config file (FROBINC_CONFIG is used when absent)");
  app.add_option("--threads", threads_flag, "worker threads (0 = all cores)");
  app.add_option("--max-code-dim", max_code_dim_flag, "largest code dimension enumerated directly");
  app.add_option("--precision-bits", precision_flag, "mantissa bits shown in decimal output")
      ->check(CLI::Range(8, 160));

  std::function<void(Context&)> action;

  // betti
  int bn = 0, bl = 0, bc = 0;
  std::uint64_t br = 0, bs = 0;
  auto* betti = app.add_subcommand("betti", "Betti numbers b_0, b_2, ... of X[r,s]_l^c");
  betti->add_option("--n", bn)->required();
  betti->add_option("--l", bl)->required();
  betti->add_option("--c", bc)->required();
  betti->add_option("--r", br)->required();
  betti->add_option("--s", bs)->required();
  betti->callback([&] {
    action = [&](Context& ctx) {
      const auto t = poly::betti(bn, bl, bc, br, bs);
      if (ctx.as_json) {
        json b = json::array();
        for (const auto& v : t.values) b.push_back(int_json(v));
        ctx.emit({{"b", b}});
        return;
      }
      for (std::size_t i = 0; i < t.values.size(); ++i) {
        ctx.out << 'b' << 2 * i << ' ' << t.values[i].get_str() << "  " << t.symbolic[i].to_string("q") << '\n';
      }
    };
  });

  // tau
  int tn = 0, tl = 0, td = 0;
  auto* tau = app.add_subcommand("tau", "the polynomial tau_{l,d}(x, y) for ambient dimension n");
  tau->add_option("--n", tn)->required();
  tau->add_option("--l", tl)->required();
  tau->add_option("--d", td)->required();
  tau->callback([&] {
    action = [&](Context& ctx) {
      if (tn < 0 || tl < 0 || td < 0) throw DomainError("tau needs nonnegative n, l, d");
      const auto& p = poly::tau(tn, tl, td);
      if (ctx.as_json) ctx.emit({{"n", tn}, {"l", tl}, {"d", td}, {"terms", terms_json(p)}});
      else ctx.out << p.to_term_list();
    };
  });

  // npoly
  int pn = 0, pl = 0, pc = 0;
  auto* npoly = app.add_subcommand("npoly", "the point-count polynomial N_l^c(x, y)");
  npoly->add_option("--n", pn)->required();
  npoly->add_option("--l", pl)->required();
  npoly->add_option("--c", pc)->required();
  npoly->callback([&] {
    action = [&](Context& ctx) {
      const auto p = poly::count_poly(pn, pl, pc);
      if (ctx.as_json) ctx.emit({{"n", pn}, {"l", pl}, {"c", pc}, {"terms", terms_json(p)}});
      else ctx.out << p.to_term_list();
    };
  });

  // count
  int cn = 0, cl = 0, cc = 0, cnu = 1;
  std::uint64_t cr = 0, cs = 0;
  bool naive = false;
  auto* count = app.add_subcommand("count", "count F_{(rs)^nu}-points of X[r,s]_l^c by enumeration");
  count->add_option("--n", cn)->required();
  count->add_option("--l", cl)->required();
  count->add_option("--c", cc)->required();
  count->add_option("--r", cr)->required();
  count->add_option("--s", cs)->required();
  count->add_option("--nu", cnu)->required();
  count->add_flag("--naive", naive, "test every (L, M) pair against the defining conditions");
  count->add_option("--max-pairs", max_pairs_flag, "pair budget");
  count->callback([&] {
    action = [&](Context& ctx) {
      brute::CountOptions opt;
      opt.naive = naive;
      opt.max_pairs = ctx.config.max_pairs;
      opt.threads = ctx.config.threads;
      const std::uint64_t got = brute::count_points(cn, cl, cc, cr, cs, cnu, opt);
      const Int q = Int(static_cast<unsigned long>(cr)) * static_cast<unsigned long>(cs);
      const Int formula = poly::count_poly(cn, cl, cc).eval(q, int_pow(q, static_cast<unsigned long>(cnu)));
      const bool match = formula == Int(static_cast<unsigned long>(got));
      if (ctx.as_json) {
        ctx.emit({{"count", got}, {"formula", int_json(formula)}, {"match", match}});
      } else {
        ctx.out << "count " << got << "\nformula " << formula.get_str() << "\nmatch " << (match ? "true" : "false")
                << '\n';
      }
    };
  });

  // intersect
  int in_n = 0, im = 0, ik = 0, il = 1;
  long ir = 0, is = 0;
  auto* intersect = app.add_subcommand("intersect", "intersection number of two cycles Sigma_Lambda");
  intersect->add_option("--n", in_n)->required();
  intersect->add_option("--r", ir)->required();
  intersect->add_option("--s", is)->required();
  intersect->add_option("--m", im, "dim of the intersection")->required();
  intersect->add_option("--k", ik, "n - dim of the sum")->required();
  intersect->add_option("--l", il, "cycle type l = c")->capture_default_str();
  intersect->callback([&] {
    action = [&](Context& ctx) {
      if (im < 0 || ik < 0 || im > in_n || ik > in_n) throw DomainError("need 0 <= m, k <= n");
      const Int v = il == 1 ? chow::intersection_number_11(im, ik, ir, is)
                            : chow::intersection_number_lc(il, im, ik, ir, is);
      if (ctx.as_json) ctx.emit({{"value", int_json(v)}});
      else ctx.out << v.get_str() << '\n';
    };
  });

  // gram
  LatticeParams gp;
  std::optional<std::uint64_t> gq;
  std::string gram_out;
  auto* gram = app.add_subcommand("gram", "Gram matrix of h_1..h_{n-1} and every Sigma_Lambda (l = c = 1)");
  add_lattice_params(gram, gp);
  gram->add_option("--q", gq, "field size; must equal r*s");
  gram->add_option("--out", gram_out, "write the matrix to a file");
  gram->callback([&] {
    action = [&](Context& ctx) {
      if (gq && *gq != gp.r * gp.s) throw DomainError("--q must equal r*s");
      const auto geo = chow::make_geometry(gp.n, gp.r, gp.s);
      const IntMatrix g = chow::full_gram(geo, ctx.config.threads);
      if (ctx.as_json) ctx.emit({{"size", g.rows()}, {"gram", matrix_json(g)}});
      else write_gram(ctx, gram_out, g);
    };
  });

  // lattice
  auto* lattice = app.add_subcommand("lattice", "build and analyse lattices");
  lattice->require_subcommand(1);
  LatticeParams lp;
  std::string lat_out, lat_gram;
  bool want_prim = false;
  std::optional<long long> lat_min_norm;
  auto add_build = [&](const std::string& name, const std::string& help,
                       std::function<void(Context&)> body) {
    auto* cmd = lattice->add_subcommand(name, help);
    add_lattice_params(cmd, lp);
    cmd->add_option("--out", lat_out, "write the Gram matrix to a file");
    cmd->callback([&, body] { action = body; });
    return cmd;
  };
  auto emit_lattice = [&](Context& ctx, const IntLattice& l, json extra) {
    if (ctx.as_json) {
      json j = lattice_summary(l);
      for (auto& [k, v] : extra.items()) j[k] = v;
      j["gram"] = matrix_json(l.gram);
      ctx.emit(j);
    } else {
      write_gram(ctx, lat_out, l.gram);
    }
  };
  add_build("build-sigma", "N_Sigma(X) in the e_P frame", [&](Context& ctx) {
    emit_lattice(ctx, build_sigma_lattice(lp.n, lp.r, lp.s), json::object());
  });
  add_build("build-n", "N(X) (or its primitive part with --prim)", [&](Context& ctx) {
    const auto nx = build_N_and_prim(lp.n, lp.r, lp.s, ctx.config.threads);
    emit_lattice(ctx, want_prim ? nx.prim : nx.N,
                 {{"prim_rank", nx.prim.rank()}, {"prim_equals_sigma", nx.prim_equals_sigma}});
  })->add_flag("--prim", want_prim, "output N_prim(X)");
  add_build("build-mc", "M_C = N_Sigma + s^{n-1} M^vee", [&](Context& ctx) {
    emit_lattice(ctx, build_MC(lp.n, lp.r, lp.s), json::object());
  });
  auto add_gram_cmd = [&](const std::string& name, const std::string& help, std::function<void(Context&)> body) {
    auto* cmd = lattice->add_subcommand(name, help);
    cmd->add_option("--gram", lat_gram, "Gram matrix file")->required()->check(CLI::ExistingFile);
    cmd->callback([&, body] { action = body; });
    return cmd;
  };
  add_gram_cmd("disc", "discriminant of a Gram matrix", [&](Context& ctx) {
    const auto l = lattice_from_gram(read_gram(lat_gram), lat_gram);
    const Int d = disc(l);
    if (ctx.as_json) ctx.emit({{"rank", l.rank()}, {"disc", int_json(d)}});
    else ctx.out << d.get_str() << '\n';
  });
  add_gram_cmd("even", "whether every norm is even", [&](Context& ctx) {
    const auto l = lattice_from_gram(read_gram(lat_gram), lat_gram);
    const bool e = is_even(l);
    if (ctx.as_json) ctx.emit({{"rank", l.rank()}, {"even", e}});
    else ctx.out << (e ? "true" : "false") << '\n';
  });
  add_gram_cmd("density", "center density from a Gram matrix and a minimal norm", [&](Context& ctx) {
    const auto l = lattice_from_gram(read_gram(lat_gram), lat_gram);
    print_density(ctx, density_report(l.rank(), disc(l), Int(static_cast<long>(*lat_min_norm)),
                                      digits_for_bits(ctx.config.precision_bits)));
  })->add_option("--min-norm", lat_min_norm, "minimal norm")->required();

  // code
  auto* code = app.add_subcommand("code", "the code C = N_Sigma mod s^{n-1} and its filtration");
  code->require_subcommand(1);
  LatticeParams kp;
  std::string level = "0";
  auto make_code = [&] {
    const auto geo = chow::make_geometry(kp.n, kp.r, kp.s);
    return std::make_pair(geo.n, codes::ChainCode::from_matrix(sigma_generators(geo), code_exponent(kp.n, kp.s)));
  };
  auto* filt = code->add_subcommand("filtration", "dimensions and generators of Gamma_0, Gamma_1, ...");
  add_lattice_params(filt, kp);
  filt->callback([&] {
    action = [&](Context& ctx) {
      const auto c = make_code().second;
      const auto levels = codes::filtration(c);
      if (ctx.as_json) {
        json lv = json::array();
        for (std::size_t i = 0; i < levels.size(); ++i) {
          json rows = json::array();
          for (const auto& w : levels[i].rows()) rows.push_back(word_string(w, c.length()));
          lv.push_back({{"level", i}, {"dim", levels[i].dim()}, {"generators", rows}});
        }
        ctx.emit({{"length", c.length()}, {"exponent", c.exponent()}, {"log2_size", c.log2_size()}, {"levels", lv}});
        return;
      }
      for (std::size_t i = 0; i < levels.size(); ++i) ctx.out << "Gamma" << i << ' ' << levels[i].dim() << '\n';
      ctx.out << "log2|C| " << c.log2_size() << '\n';
    };
  });
  auto* weights = code->add_subcommand("weights", "weight enumerator of a filtration level");
  add_lattice_params(weights, kp);
  weights->add_option("--level", level, "0, 1, 2, ... or e.g. 1dual for the dual of Gamma_1")->capture_default_str();
  weights->callback([&] {
    action = [&](Context& ctx) {
      const auto c = make_code().second;
      const auto levels = codes::filtration(c);
      const bool want_dual = level.size() > 4 && level.substr(level.size() - 4) == "dual";
      const std::string digits = want_dual ? level.substr(0, level.size() - 4) : level;
      int nu = -1;
      try {
        std::size_t used = 0;
        nu = std::stoi(digits, &used);
        if (used != digits.size()) nu = -1;
      } catch (const std::exception&) {
        nu = -1;
      }
      if (nu < 0 || nu >= static_cast<int>(levels.size())) throw DomainError("unknown level '" + level + "'");
      const int max_dim = ctx.config.max_code_dim;
      const codes::CodeF2 target = want_dual ? codes::dual(levels[nu]) : levels[nu];
      codes::WeightEnum e;
      std::string route;
      if (target.dim() <= max_dim) {
        e = codes::weight_enumerator_direct(target, max_dim, ctx.config.threads);
        route = "direct";
      } else {
        const codes::CodeF2 d = codes::dual(target);
        e = codes::macwilliams(codes::weight_enumerator_direct(d, max_dim, ctx.config.threads), d.dim(),
                               target.length());
        route = "dual";
      }
      if (ctx.as_json) {
        ctx.emit({{"level", level}, {"dim", target.dim()}, {"route", route}, {"enumerator", enumerator_json(e)}});
      } else {
        ctx.out << e.to_lines();
      }
    };
  });
  auto* certify = code->add_subcommand("certify", "certify the minimal norm of M_C");
  add_lattice_params(certify, kp);
  certify->callback([&] {
    action = [&](Context& ctx) {
      const auto geo = chow::make_geometry(kp.n, kp.r, kp.s);
      const auto c = codes::ChainCode::from_matrix(sigma_generators(geo), code_exponent(kp.n, kp.s));
      const IntLattice mc = build_MC(geo);
      std::vector<Int> witness(geo.points().size(), 0);
      const Int scale = int_pow(Int(static_cast<unsigned long>(kp.s)), static_cast<unsigned long>(kp.n - 2));
      witness[0] = scale;
      witness[1] = -scale;
      const auto cert = codes::certify_min_norm(mc, c, witness, ctx.config.max_code_dim, ctx.config.threads);
      if (ctx.as_json) {
        ctx.emit(certificate_json(cert));
      } else {
        for (const auto& b : cert.branches) {
          ctx.out << "level " << b.level << " route " << b.route << " dim " << b.code_dim << " min_weight "
                  << b.min_weight << " norm_bound " << (b.min_weight < 0 ? std::string("-") : b.norm_bound.get_str())
                  << '\n';
        }
        ctx.out << "top_level_even_weight " << (cert.top_level_even_weight ? "true" : "false") << '\n'
                << "witness_norm " << cert.witness_norm.get_str() << '\n'
                << "lower_bound " << cert.lower_bound.get_str() << '\n'
                << "valid " << (cert.valid ? "true" : "false") << '\n';
      }
      if (!cert.valid) throw ConsistencyError("certificate does not close");
    };
  });

  // reproduce
  std::string target;
  auto* repro = app.add_subcommand("reproduce", "end-to-end checks of the headline results");
  repro->add_option("target", target, "k3-surface, betti-n7, dense-84 or dense-85")
      ->required()
      ->check(CLI::IsMember(reproduce_targets()));
  int repro_status = 0;
  repro->callback([&] {
    action = [&](Context& ctx) {
      const Report rep = reproduce(target, ctx.config);
      if (ctx.as_json) {
        json checks = json::array();
        for (const auto& c : rep.checks) {
          checks.push_back({{"name", c.name}, {"expected", c.expected}, {"computed", c.computed}, {"pass", c.pass}});
        }
        ctx.emit({{"target", rep.target}, {"pass", rep.pass()}, {"checks", checks}});
      } else {
        std::size_t passed = 0;
        for (const auto& c : rep.checks) {
          passed += c.pass;
          ctx.out << (c.pass ? "PASS " : "FAIL ") << c.name << "  expected=" << c.expected
                  << "  computed=" << c.computed << '\n';
        }
        ctx.out << rep.target << ": " << (rep.pass() ? "PASS" : "FAIL") << " (" << passed << '/' << rep.checks.size()
                << " checks)\n";
      }
      if (!rep.pass()) repro_status = 1;
    };
  });

  // density / mh-bound
  int drank = 0;
  std::string ddisc;
  long long dmin = 0;
  auto* density = app.add_subcommand("density", "normalized center density and the Minkowski-Hlawka bound");
  density->add_option("--rank", drank)->required();
  density->add_option("--disc", ddisc)->required();
  density->add_option("--min-norm", dmin)->required();
  density->callback([&] {
    action = [&](Context& ctx) {
      Int d;
      if (d.set_str(ddisc, 10) != 0) throw DomainError("--disc must be an integer");
      print_density(ctx, density_report(drank, d, Int(static_cast<long>(dmin)),
                                        digits_for_bits(ctx.config.precision_bits)));
    };
  });
  int mrank = 0;
  auto* mh = app.add_subcommand("mh-bound", "Minkowski-Hlawka bound zeta(m) 2^{1-m} / V_m");
  mh->add_option("--rank", mrank)->required();
  mh->callback([&] {
    action = [&](Context& ctx) {
      const std::string v = mh_bound(mrank, digits_for_bits(ctx.config.precision_bits));
      const double l2 = log2_mh_bound(mrank);
      if (ctx.as_json) ctx.emit({{"rank", mrank}, {"mh_bound", v}, {"log2_mh_bound", l2}});
      else ctx.out << "mh_bound " << v << "\nlog2_mh_bound " << l2 << '\n';
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  Context ctx{out, as_json, {}};
  try {
    std::optional<std::string> path;
    if (!config_path.empty()) path = config_path;
    else path = config_path_from_env();
    if (path) ctx.config = load_config_file(*path);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  if (max_pairs_flag) ctx.config.max_pairs = *max_pairs_flag;
  if (max_code_dim_flag) ctx.config.max_code_dim = *max_code_dim_flag;
  if (precision_flag) ctx.config.precision_bits = *precision_flag;
  if (threads_flag) ctx.config.threads = *threads_flag;

  try {
    action(ctx);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return repro_status;
}

}  // namespace frobinc::cli
