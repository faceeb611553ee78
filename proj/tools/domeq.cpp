// domeq: command-line front end for the gamma / gamma_2 toolkit.
//
// Exit codes: 0 success (or "yes"), 1 negative verdict or failed check,
// 2 usage, parse or precondition error.

#include <filesystem>
#include <iomanip>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "domeq/domeq.hpp"
#include "json.hpp"

using nlohmann::json;

namespace {

struct Options {
  std::string format = "text";
  std::string out;
  std::uint64_t seed = 0;
};

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(opt.out);
  if (!f) throw domeq::Error("cannot write " + opt.out);
  f << text;
}

std::string join(const std::vector<domeq::Vertex>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? " " : "") + std::to_string(vs[i]);
  return s;
}

json certificate_json(const domeq::Certificate& cert) {
  if (const auto* b = std::get_if<domeq::BCertificate>(&cert)) {
    return {{"type", "B"},
            {"w", {b->v1, b->u1, b->v2, b->u2}},
            {"pairs", {{b->x11, b->x12}, {b->x21, b->x22}}},
            {"edge", {b->x11, b->x21}}};
  }
  const auto& a = std::get<domeq::ACertificate>(cert);
  json pairs = json::array();
  for (std::size_t j = 0; j < a.leaves.size(); ++j) pairs.push_back({a.first[j], a.second[j]});
  return {{"type", "A"}, {"t", a.leaves.size()}, {"center", a.center}, {"leaves", a.leaves}, {"pairs", pairs}};
}

std::string certificate_text(const domeq::Certificate& cert) {
  std::ostringstream os;
  if (const auto* b = std::get_if<domeq::BCertificate>(&cert)) {
    os << "certificate B: W = {" << b->v1 << ", " << b->u1 << ", " << b->v2 << ", " << b->u2 << "}, pairs {" << b->x11
       << ", " << b->x12 << "} {" << b->x21 << ", " << b->x22 << "}, edge " << b->x11 << "-" << b->x21 << "\n";
    return os.str();
  }
  const auto& a = std::get<domeq::ACertificate>(cert);
  os << "certificate A_" << a.leaves.size() << ": center " << a.center << ", leaves {" << join(a.leaves) << "}, pairs";
  for (std::size_t j = 0; j < a.leaves.size(); ++j) os << " {" << a.first[j] << ", " << a.second[j] << "}";
  os << "\n";
  return os.str();
}

std::string report_text(const domeq::VerifyReport& rep) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3);
  for (const auto& c : rep.checks) {
    os << (c.ok() ? "PASS " : "FAIL ") << c.name << "  " << c.passed << "/" << c.instances << "  " << c.seconds
       << "s\n";
  }
  os << (rep.all_passed() ? "all checks passed" : "some checks FAILED") << " (" << rep.checks.size() << " checks, "
     << rep.instances() << " instances)\n";
  return os.str();
}

json report_json(const domeq::VerifyReport& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks) {
    json j{{"name", c.name}, {"instances", c.instances}, {"passed", c.passed}, {"ok", c.ok()}, {"seconds", c.seconds}};
    if (c.counterexample) {
      j["counterexample"] = *c.counterexample;
      j["counterexample_format"] = c.counterexample_format;
    }
    checks.push_back(j);
  }
  return {{"all_passed", rep.all_passed()}, {"checks", checks}};
}

std::string extension_for(const std::string& format) {
  if (format == "instance") return ".json";
  if (format == "cnf") return ".cnf";
  return ".txt";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"domeq: domination versus 2-domination"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", opt.out, "Write output to this file");
  app.add_option("--seed", opt.seed, "Random seed");

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a construction or gadget");
  gen->require_subcommand(1);
  int a_k = 2;
  auto* gen_a = gen->add_subcommand("a", "Gadget A_k");
  gen_a->add_option("k", a_k)->required()->check(CLI::Range(2, 64));
  auto* gen_b = gen->add_subcommand("b", "Gadget B");
  auto* gen_t6 = gen->add_subcommand("t6", "The tree T6");
  std::vector<int> s_mults;
  auto* gen_s = gen->add_subcommand("s", "S(i_1,...,i_k)");
  gen_s->add_option("multiplicities", s_mults)->required()->delimiter(',');
  std::string graph_path;
  auto* gen_dsub = gen->add_subcommand("dsub", "Double subdivision of a graph");
  gen_dsub->add_option("graph", graph_path)->required();
  auto* gen_join = gen->add_subcommand("joinc4", "Join a graph with a 4-cycle");
  gen_join->add_option("graph", graph_path)->required();
  int rh_size = 4;
  double rh_ep = 0.5, rh_sp = 0.1;
  auto* gen_rh = gen->add_subcommand("random-h", "Random member of H");
  gen_rh->add_option("--size", rh_size, "|V(F)|")->check(CLI::Range(1, 64));
  gen_rh->add_option("--ep", rh_ep, "Edge probability of F")->check(CLI::Range(0.0, 1.0));
  gen_rh->add_option("--sp", rh_sp, "Supplementary edge probability")->check(CLI::Range(0.0, 1.0));
  gen_rh->add_option("--seed", opt.seed, "Random seed");

  // reduce
  std::string cnf_path;
  auto* reduce = app.add_subcommand("reduce", "3-SAT reduction of a DIMACS formula");
  reduce->add_option("cnf", cnf_path)->required();

  // solve
  int solve_k = 1;
  auto* solve = app.add_subcommand("solve", "Exact k-domination number");
  solve->add_option("--k", solve_k, "k")->check(CLI::PositiveNumber);
  solve->add_option("graph", graph_path)->required();

  // match
  auto* match = app.add_subcommand("match", "Maximum matching");
  match->add_option("graph", graph_path)->required();

  // recognize
  std::string target_path;
  auto* recognize = app.add_subcommand("recognize", "Polynomial recognizers");
  recognize->require_subcommand(1);
  auto* rec_h = recognize->add_subcommand("h", "gamma = gamma_2 on an H-instance");
  rec_h->add_option("instance", target_path)->required();
  auto* rec_perfect = recognize->add_subcommand("perfect", "(gamma, gamma_2)-perfect recognition");
  rec_perfect->add_option("graph", target_path)->required();

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Exhaustive oracles");
  oracle->require_subcommand(1);
  auto* or_perfect = oracle->add_subcommand("perfect", "Definitional perfectness test");
  or_perfect->add_option("graph", target_path)->required();
  auto* or_gg2 = oracle->add_subcommand("gg2", "Definitional gamma = gamma_2 test");
  or_gg2->add_option("graph", target_path)->required();

  // verify
  std::string scope = "all";
  int budget = domeq::kDefaultVerifyBudget;
  std::string ce_dir = "counterexamples";
  auto* verify = app.add_subcommand("verify", "Run the property checks");
  verify->add_option("--scope", scope, "all, or comma-separated check names");
  verify->add_option("--budget", budget, "Random instances per check")->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", opt.seed, "Random seed");
  verify->add_option("--counterexample-dir", ce_dir, "Where failing inputs are written");
  verify->add_flag_callback("--list", [] {
    for (const auto& n : domeq::verify_check_names()) std::cout << n << "\n";
    throw CLI::Success();
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  const bool as_json = opt.format == "json";
  try {
    if (gen->parsed()) {
      if (gen_t6->parsed()) {
        emit(opt, domeq::io::serialize_graph(domeq::gadget_t6()));
        return 0;
      }
      if (gen_join->parsed()) {
        emit(opt, domeq::io::serialize_graph(domeq::join_c4(domeq::io::parse_graph_file(graph_path))));
        return 0;
      }
      domeq::PartitionedInstance inst;
      if (gen_a->parsed()) inst = domeq::gadget_a(a_k);
      if (gen_b->parsed()) inst = domeq::gadget_b();
      if (gen_s->parsed()) inst = domeq::gadget_s(s_mults);
      if (gen_dsub->parsed()) inst = domeq::double_subdivision(domeq::io::parse_graph_file(graph_path));
      if (gen_rh->parsed()) {
        auto r = domeq::random_h_instance(rh_size, rh_ep, rh_sp, opt.seed);
        if (!r) {
          std::cerr << "error: no (C3, C4)-free F found within " << domeq::kRandomHAttempts << " attempts\n";
          return 1;
        }
        inst = *r;
      }
      emit(opt, domeq::io::serialize_instance(inst));
      return 0;
    }

    if (reduce->parsed()) {
      auto red = domeq::reduce_3sat(domeq::io::parse_cnf_file(cnf_path));
      if (!red.triple_cover) std::cerr << "note: formula does not satisfy the triple-cover condition\n";
      emit(opt, domeq::io::serialize_instance(red.instance));
      return 0;
    }

    if (solve->parsed()) {
      auto g = domeq::io::parse_graph_file(graph_path);
      auto r = domeq::gamma_k(g, solve_k);
      if (as_json) {
        emit(opt, json{{"k", r.k}, {"gamma_k", r.number}, {"witness", r.witness.members()}}.dump() + "\n");
      } else {
        emit(opt, "gamma_k = " + std::to_string(r.number) + " (k = " + std::to_string(r.k) + ")\nwitness: " +
                      join(r.witness.members()) + "\n");
      }
      return 0;
    }

    if (match->parsed()) {
      auto g = domeq::io::parse_graph_file(graph_path);
      auto m = domeq::maximum_matching(g);
      if (as_json) {
        emit(opt, json{{"mu", m.size()}, {"mates", m.mates()}}.dump() + "\n");
      } else {
        emit(opt, "mu = " + std::to_string(m.size()) + "\nmates: " + join(m.mates()) + "\n");
      }
      return 0;
    }

    if (rec_h->parsed()) {
      auto inst = domeq::io::parse_instance_file(target_path);
      domeq::RecognitionVerdict v;
      try {
        v = domeq::recognize_h(inst);
      } catch (const domeq::InvalidInstanceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        for (const auto& f : e.report().failures) std::cerr << "  " << domeq::to_string(f.kind) << ": " << f.message << "\n";
        return 2;
      }
      if (as_json) {
        json j{{"equal", v.equal},
               {"stats",
                {{"supplementary_edges_checked", v.stats.supplementary_edges_checked},
                 {"matching_calls", v.stats.matching_calls},
                 {"aux_vertices", v.stats.aux_vertices},
                 {"aux_edges", v.stats.aux_edges},
                 {"max_aux_order", v.stats.max_aux_order}}}};
        if (v.certificate) j["certificate"] = certificate_json(*v.certificate);
        emit(opt, j.dump() + "\n");
      } else {
        emit(opt, std::string(v.equal ? "EQUAL\n" : "NOT-EQUAL\n") + (v.certificate ? certificate_text(*v.certificate) : ""));
      }
      return v.equal ? 0 : 1;
    }

    if (rec_perfect->parsed()) {
      auto v = domeq::recognize_perfect(domeq::io::parse_graph_file(target_path));
      if (as_json) {
        json j{{"perfect", v.perfect}};
        if (!v.perfect) {
          j["component"] = v.failing_component;
          j["reason"] = v.reason;
          if (v.witness) j["witness"] = {{"kind", domeq::to_string(v.witness->kind)}, {"vertices", v.witness->vertices}};
        }
        emit(opt, j.dump() + "\n");
      } else {
        std::string s = v.perfect ? "PERFECT\n" : "NOT-PERFECT\n";
        if (!v.perfect) {
          s += "component: " + join(v.failing_component) + "\nreason: " + v.reason + "\n";
          if (v.witness) s += "witness " + std::string(domeq::to_string(v.witness->kind)) + ": " + join(v.witness->vertices) + "\n";
        }
        emit(opt, s);
      }
      return v.perfect ? 0 : 1;
    }

    if (or_perfect->parsed() || or_gg2->parsed()) {
      auto g = domeq::io::parse_graph_file(target_path);
      bool yes = false;
      std::string detail;
      if (or_perfect->parsed()) {
        auto ce = domeq::perfect_oracle_counterexample(g);
        yes = !ce;
        if (ce) detail = join(*ce);
      } else {
        const int gamma = domeq::gamma_k_bruteforce(g, 1).number;
        const int gamma2 = domeq::gamma_k_bruteforce(g, 2).number;
        yes = gamma == gamma2;
        detail = "gamma = " + std::to_string(gamma) + ", gamma_2 = " + std::to_string(gamma2);
      }
      if (as_json) {
        json j{{"result", yes}};
        if (!detail.empty()) j[or_perfect->parsed() ? "counterexample" : "detail"] = detail;
        emit(opt, j.dump() + "\n");
      } else {
        std::string s = yes ? "YES\n" : "NO\n";
        if (!detail.empty()) s += (or_perfect->parsed() ? "induced counterexample: " : "") + detail + "\n";
        emit(opt, s);
      }
      return yes ? 0 : 1;
    }

    if (verify->parsed()) {
      auto rep = domeq::run_verify(scope, opt.seed, budget);
      for (const auto& c : rep.checks) {
        if (c.ok()) continue;
        std::filesystem::create_directories(ce_dir);
        const auto path = std::filesystem::path(ce_dir) / (c.name + extension_for(c.counterexample_format));
        std::ofstream(path) << *c.counterexample;
        std::cerr << "counterexample for " << c.name << " written to " << path.string() << "\n";
      }
      emit(opt, as_json ? report_json(rep).dump(2) + "\n" : report_text(rep));
      return rep.all_passed() ? 0 : 1;
    }
  } catch (const domeq::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
