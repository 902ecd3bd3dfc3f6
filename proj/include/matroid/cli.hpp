// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line driver. `run` is callable in-process; exit codes are 0 on
// success, 1 on a negative verdict or a failed request, 2 on malformed input.

#pragma once

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "matroid/adjudicator.hpp"
#include "matroid/budget.hpp"
#include "matroid/catalog.hpp"
#include "matroid/certificate.hpp"
#include "matroid/claimant.hpp"
#include "matroid/error.hpp"
#include "matroid/freedom.hpp"
#include "matroid/io.hpp"
#include "matroid/representation.hpp"
#include "matroid/spike.hpp"
#include "matroid/structure.hpp"

namespace matroid::cli {

inline int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::kMalformed:
    case ErrorCode::kInvalidRankTable:
    case ErrorCode::kInvalidSpike:
    case ErrorCode::kShapeMismatch:
    case ErrorCode::kUnknownElement:
    case ErrorCode::kGroundSetMismatch:
    case ErrorCode::kNotPrime:
    case ErrorCode::kInvalidAlpha:
      return 2;
    default:
      return 1;
  }
}

namespace detail {

inline nlohmann::json set_json(const std::vector<std::string>& labels, ElementSet x) {
  nlohmann::json out = nlohmann::json::array();
  for (int e : elements(x)) out.push_back(labels[e]);
  return out;
}

inline nlohmann::json freedom_json(const FreedomResult& f) {
  if (f.infinite()) return "infinity";
  if (f.overflow()) return "overflow";
  return f.value;
}

inline std::vector<std::int64_t> parse_alphas(const std::string& s, int n) {
  std::vector<std::int64_t> out;
  if (s.empty()) return std::vector<std::int64_t>(n, 1);
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(std::stoll(tok));
    } catch (const std::exception&) {
      throw Error(ErrorCode::kMalformed, "bad alpha '" + tok + "'");
    }
  }
  if (n > 0 && static_cast<int>(out.size()) != n) {
    throw Error(ErrorCode::kInvalidAlpha, "expected " + std::to_string(n) + " alphas");
  }
  return out;
}

inline Spike load_spike(const std::string& path) {
  const Matroid m = load_matroid(path);
  if (m.kind() != MatroidKind::kSpike) throw Error(ErrorCode::kMalformed, "expected a spike description");
  return std::get<SpikeNode>(m.node().value).spike;
}

inline nlohmann::json census_json(const SpikeCensus& c) {
  return {{"v", 1},
          {"legs", c.legs},
          {"dependent", c.dependent_count},
          {"far", c.far_count},
          {"transversals", c.transversals},
          {"bound_ok", c.bound_ok},
          {"weighted_bound_ok", c.weighted_bound_ok},
          {"sqrt_bound_ok", c.sqrt_bound_ok}};
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matroid representability toolkit"};
  app.require_subcommand(1);
  std::string output;
  auto emit = [&](const nlohmann::json& j) {
    const std::string text = j.dump(2) + "\n";
    if (output.empty()) {
      out << text;
    } else {
      std::ofstream f(output);
      if (!f) throw Error(ErrorCode::kMalformed, "cannot write '" + output + "'");
      f << text;
    }
  };

  std::string file, cert_file, element, family = "u24-coloops", transversal, alphas, name, export_dir;
  std::uint32_t p = 2;
  int cap = 4, legs = 0, from = 0, to = 8;
  bool no_minimize = false;

  auto* info = app.add_subcommand("info", "summary of a matroid");
  info->add_option("matroid", file)->required();

  auto* reps = app.add_subcommand("reps", "inequivalent GF(p) representations");
  reps->add_option("matroid", file)->required();
  reps->add_option("--p", p)->required();

  auto* certify = app.add_subcommand("certify", "build a non-representability certificate");
  certify->add_option("matroid", file)->required();
  certify->add_option("--p", p)->required();
  certify->add_option("-o,--output", output);
  certify->add_flag("--no-minimize", no_minimize, "certify the whole matroid");

  auto* verify_cmd = app.add_subcommand("verify", "check a certificate against a matroid");
  verify_cmd->add_option("matroid", file)->required();
  verify_cmd->add_option("certificate", cert_file, "path or - for stdin")->required();

  auto* budget = app.add_subcommand("budget-scan", "oracle calls across a family");
  budget->add_option("--family", family)->check(CLI::IsMember(budget_families()));
  budget->add_option("--p", p);
  budget->add_option("--from", from);
  budget->add_option("--to", to);

  auto* spike = app.add_subcommand("spike", "spike tools");
  spike->require_subcommand(1);
  auto* spike_gen = spike->add_subcommand("gen", "GF(p)-represented spike");
  spike_gen->add_option("--p", p)->required();
  spike_gen->add_option("--n", legs)->required();
  spike_gen->add_option("--alphas", alphas, "comma-separated, default all 1");
  auto* spike_relax = spike->add_subcommand("relax", "make a dependent transversal a basis");
  spike_relax->add_option("spike", file)->required();
  spike_relax->add_option("--t", transversal)->required();
  auto* spike_tighten = spike->add_subcommand("tighten", "make a transversal dependent");
  spike_tighten->add_option("spike", file)->required();
  spike_tighten->add_option("--t", transversal)->required();
  auto* spike_census = spike->add_subcommand("census", "count single-set perturbations");
  spike_census->add_option("spike", file)->required();

  auto* census = app.add_subcommand("census", "perturbation census of a GF(p)-represented spike");
  census->add_option("--p", p)->required();
  census->add_option("--n", legs)->required();
  census->add_option("--alphas", alphas);

  auto* freedom_cmd = app.add_subcommand("freedom", "freedom and cofreedom of an element");
  freedom_cmd->add_option("matroid", file)->required();
  freedom_cmd->add_option("--element", element)->required();
  freedom_cmd->add_option("--cap", cap);

  auto* clones = app.add_subcommand("clones", "clonal classes and the freer-than order");
  clones->add_option("matroid", file)->required();

  auto* cat = app.add_subcommand("catalog", "built-in fixture matroids");
  cat->add_option("--name", name);
  cat->add_option("--export", export_dir);

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*info) {
      const Matroid m = load_matroid(file);
      const auto t = rank_table(m);
      const int n = m.size();
      const auto& L = m.labels();
      nlohmann::json circ = nlohmann::json::array();
      for (ElementSet c : circuits_from_table(t, n)) circ.push_back(detail::set_json(L, c));
      nlohmann::json cyc = nlohmann::json::array();
      for (ElementSet c : cyclic_flats_from_table(t, n)) cyc.push_back(detail::set_json(L, c));
      emit({{"v", 1},
            {"size", n},
            {"rank", m.rank()},
            {"labels", L},
            {"loops", detail::set_json(L, loops_of(t, n))},
            {"coloops", detail::set_json(L, coloops_of(t, n))},
            {"circuits", circ},
            {"flats", flats_from_table(t, n).size()},
            {"cyclic_flats", cyc},
            {"three_connected", is_k_connected_table(t, n, 3)}});
      return 0;
    }
    if (*reps) {
      const Matroid m = load_matroid(file);
      emit(rep_set_to_json(enumerate_reps(m, p), m.labels()));
      return 0;
    }
    if (*certify) {
      const Matroid m = load_matroid(file);
      emit(certificate_to_json(build_certificate(m, p, {.minimize = !no_minimize})));
      return 0;
    }
    if (*verify_cmd) {
      const Matroid m = load_matroid(file);
      const Certificate c = certificate_from_json(parse_json(read_text(cert_file)));
      CountedOracle o(m);
      const VerificationReport r = verify(o, c);
      emit(report_to_json(r));
      return r.accepted ? 0 : 1;
    }
    if (*budget) {
      const BudgetScan s = call_budget_scan(family, p, from, to);
      emit(budget_to_json(s));
      return s.ok ? 0 : 1;
    }
    if (*spike_gen) {
      const auto rs = representable_spike(p, detail::parse_alphas(alphas, legs));
      nlohmann::json j = matroid_to_json(Matroid::spike(rs.spike));
      j["representation"] = matrix_to_json(rs.matrix);
      emit(j);
      return 0;
    }
    if (*spike_relax || *spike_tighten) {
      const Spike s = detail::load_spike(file);
      const Transversal t = transversal_from_string(transversal);
      if (static_cast<int>(transversal.size()) != s.legs()) {
        throw Error(ErrorCode::kInvalidSpike, "transversal code has the wrong length");
      }
      emit(matroid_to_json(Matroid::spike(*spike_relax ? relax(s, t) : tighten(s, t))));
      return 0;
    }
    if (*spike_census) {
      emit(detail::census_json(lower_bound_census(detail::load_spike(file))));
      return 0;
    }
    if (*census) {
      const auto rs = representable_spike(p, detail::parse_alphas(alphas, legs));
      nlohmann::json j = detail::census_json(lower_bound_census(rs.spike));
      const auto th = spike_thresholds(p);
      j["p"] = p;
      j["thresholds"] = {{"lower_bound_rank", th.lower_bound_rank}, {"one_set_limit", th.one_set_limit}};
      emit(j);
      return 0;
    }
    if (*freedom_cmd) {
      const Matroid m = load_matroid(file);
      const int e = m.index_of(element);
      emit({{"v", 1},
            {"element", element},
            {"cap", cap},
            {"freedom", detail::freedom_json(freedom(m, e, cap))},
            {"cofreedom", detail::freedom_json(cofreedom(m, e, cap))},
            {"fixed", is_fixed(m, e)},
            {"cofixed", is_cofixed(m, e)}});
      return 0;
    }
    if (*clones) {
      const Matroid m = load_matroid(file);
      const auto& L = m.labels();
      nlohmann::json classes = nlohmann::json::array();
      for (ElementSet c : clone_classes(m)) classes.push_back(detail::set_json(L, c));
      nlohmann::json freer = nlohmann::json::array();
      const auto rel = freer_relation(m);
      for (int a = 0; a < m.size(); ++a)
        for (int b = 0; b < m.size(); ++b)
          if (a != b && rel[a][b] && !rel[b][a]) freer.push_back({L[a], L[b]});
      emit({{"v", 1}, {"classes", classes}, {"strictly_freer", freer}});
      return 0;
    }
    if (*cat) {
      if (!export_dir.empty()) {
        std::filesystem::create_directories(export_dir);
        nlohmann::json names = nlohmann::json::array();
        for (const auto& e : catalog()) {
          std::ofstream f(std::filesystem::path(export_dir) / (e.name + ".json"));
          f << matroid_to_json(e.matroid).dump(2) << "\n";
          names.push_back(e.name);
        }
        emit({{"v", 1}, {"exported", names}});
        return 0;
      }
      if (!name.empty()) {
        const auto e = catalog_entry(name);
        if (!e) throw Error(ErrorCode::kNotApplicable, "no catalog entry '" + name + "'");
        emit(matroid_to_json(e->matroid));
        return 0;
      }
      nlohmann::json list = nlohmann::json::array();
      for (const auto& e : catalog()) {
        list.push_back({{"name", e.name},
                        {"description", e.description},
                        {"size", e.matroid.size()},
                        {"rank", e.matroid.rank()},
                        {"representable", {{"2", e.gf2}, {"3", e.gf3}, {"5", e.gf5}}}});
      }
      emit({{"v", 1}, {"catalog", list}});
      return 0;
    }
  } catch (const Error& e) {
    const std::string name(error_name(e.code()));
    std::string msg = e.what();
    if (msg.rfind(name + ": ", 0) == 0) msg.erase(0, name.size() + 2);
    err << nlohmann::json{{"v", 1}, {"error", name}, {"message", msg}}.dump() << "\n";
    return exit_code_for(e.code());
  }
  return 2;
}

inline int run(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, out, err);
}

}  // namespace matroid::cli
