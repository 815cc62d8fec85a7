// mixcut: facets, valid-inequality families and coverage tables for the
// mixing set with a knapsack constraint.
//
// Exit codes: 0 ok, 2 validation error, 3 resource guard, 4 reference
// mismatch (coverage --expect-reference only).

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "mixcut/bench.hpp"
#include "mixcut/blp.hpp"
#include "mixcut/errors.hpp"
#include "mixcut/families.hpp"
#include "mixcut/hull.hpp"
#include "mixcut/io.hpp"

namespace {

using namespace mixcut;

constexpr int kOk = 0;
constexpr int kValidation = 2;
constexpr int kResource = 3;
constexpr int kMismatch = 4;

double effective_budget(double flag) {
  if (const char* env = std::getenv("MIXCUT_BUDGET")) {
    try {
      return std::stod(env);
    } catch (const std::exception&) {
      throw ValidationError(std::string("MIXCUT_BUDGET is not a number: ") + env);
    }
  }
  return flag;
}

std::vector<Family> parse_families(const std::string& list) {
  std::vector<Family> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(parse_family(item));
  }
  if (out.empty()) throw ValidationError("empty family list");
  return out;
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) std::cout << text;
  else write_file(out, text);
}

int run_hull(const std::string& instance_file, const std::string& out, double budget) {
  const auto inst = instance_from_json(read_file(instance_file));
  HullOptions opt;
  opt.budget_seconds = effective_budget(budget);
  emit(facet_set_to_json(enumerate_facets(inst, opt)), out);
  return kOk;
}

int run_coverage(const std::string& example, int m, int p, const std::string& families,
                 const std::string& format, double budget, bool expect_reference,
                 bool allow_large) {
  const Example ex = parse_example(example);
  CoverageOptions opt;
  if (!families.empty()) opt.families = parse_families(families);
  opt.budget_seconds = effective_budget(budget);
  opt.allow_large = allow_large;
  const ReportFormat fmt = parse_format(format);
  const CoverageReport rep = coverage(ex, m, p, opt);
  std::cout << emit_report({rep}, fmt);
  if (!rep.complete) {
    std::cerr << "mixcut: " << rep.note << "\n";
    return kResource;
  }
  if (!expect_reference) return kOk;
  const auto ref = reference_coverage(ex, m, p);
  if (!ref) {
    std::cerr << "mixcut: no reference figures for this cell\n";
    return kMismatch;
  }
  bool ok = true;
  auto compare = [&](Family f, double want) {
    const auto got = rep.percent(f);
    if (!got) return;
    const double g = got->get_d();
    if (std::fabs(g - want) > 0.01 + 1e-9) {
      std::cerr << "mixcut: " << family_name(f) << " " << render_percent(*got)
                << " differs from reference " << want << "\n";
      ok = false;
    }
  };
  compare(Family::Zhao, ref->zhao);
  compare(Family::BlpUniform, ref->blp_uniform);
  compare(Family::BlpGeneric, ref->blp_generic);
  return ok ? kOk : kMismatch;
}

int run_generate(const std::string& family_text, const std::string& params_file,
                 const std::string& certificate_out) {
  const Family family = parse_family(family_text);
  const auto req = generate_request_from_json(read_file(params_file), family);
  const auto& inst = req.instance;
  const auto& c = req.params;
  LinearCut cut;
  switch (family) {
    case Family::Star: cut = gen_star(inst, {c.t_set}); break;
    case Family::StrengthenedStar: cut = gen_strengthened_star(inst, {c.t_set}); break;
    case Family::Lifted: cut = gen_luedtke_lifted(inst, {c.r, c.t_set, c.q_list, {}}); break;
    case Family::Kucukyavuz: cut = gen_kucukyavuz(inst, {c.r, c.t_set, c.q_list, {}}); break;
    case Family::Zhao: cut = gen_zhao(inst, {c.r, c.t_set, c.q_list, c.s_list}); break;
    case Family::BlpUniform:
      cut = gen_blp_uniform(inst, {c.r, c.t_set, c.delta, c.q_list});
      break;
    case Family::BlpGeneric: {
      const BlpGenericParams params{c.r, c.t_set, c.delta, c.q_list, c.phi, c.A_sets, c.beta};
      const auto res = gen_blp_generic(inst, params);
      if (!res.accepted) {
        std::cerr << "mixcut: rejected at j = " << res.first_infeasible_j << ": "
                  << res.reason << "\n";
        return kValidation;
      }
      cut = res.cut;
      Certificate cert = c;
      cert.A_sets = res.certificate.A_sets;
      cert.beta = res.certificate.beta;
      if (!certificate_out.empty()) write_file(certificate_out, certificate_to_json(cert));
      break;
    }
  }
  std::cerr << to_string(cut) << "\n";
  std::cout << cut_to_json(cut);
  return kOk;
}

int run_check(const std::string& instance_file, const std::string& cut_file, bool facet) {
  const auto inst = instance_from_json(read_file(instance_file));
  const auto cut = cut_from_json(read_file(cut_file));
  if (static_cast<int>(cut.x.size()) != inst.m()) {
    throw ValidationError("cut has " + std::to_string(cut.x.size()) +
                          " x coefficients, instance has m = " + std::to_string(inst.m()));
  }
  const bool valid = cut_is_valid(inst, cut);
  std::cout << "cut: " << to_string(cut) << "\n";
  std::cout << "valid: " << (valid ? "yes" : "no") << "\n";
  if (facet) {
    std::cout << "facet: " << (valid && is_facet(inst, cut) ? "yes" : "no") << "\n";
  }
  if (valid && cut.z_coef > 0) {
    const LinearCut canon = canonicalize(cut);
    for (Family f : all_families()) {
      const auto mem = member_of(inst, canon, f);
      std::cout << "member " << family_name(f) << ": " << (mem.member ? "yes" : "no") << "\n";
    }
  }
  return kOk;
}

int run_blp_aggregate(const std::string& set_file, const std::string& assignment_file) {
  const auto input = bilinear_set_from_json(read_file(set_file));
  const auto& S = input.set;
  const auto a = assignment_from_json(read_file(assignment_file), S);
  const auto expr = aggregate(S, a);
  const auto res = substitute(S, expr, a);
  std::ostringstream coef;
  for (size_t i = 0; i < res.cut.coef.size(); ++i) {
    coef << (i ? ", " : "") << to_string(res.cut.coef[i]);
  }
  std::cout << "cut: [" << coef.str() << "] . x >= " << to_string(res.cut.rhs) << "\n";
  if (input.instance) {
    const LinearCut lc = sc_cut_to_linear(res.cut);
    std::cout << "zx-cut: " << to_string(lc) << "\n";
    std::cout << "valid: " << (cut_is_valid(*input.instance, lc) ? "yes" : "no") << "\n";
  }
  std::cout << "p0: " << to_string(res.p0) << " q0: " << res.q0 << "\n";
  std::cout << "zeroed: " << res.zeroed << " required: " << res.required
            << " c1: " << (res.c1_satisfied ? "yes" : "no") << "\n";
  if (!res.implied_dual.alpha.empty()) {
    const auto cone = cone_membership(S, res.implied_dual);
    std::cout << "cone-member: " << (cone.member && cone.cut == res.cut ? "yes" : "no") << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Facets and valid inequalities for the mixing set with a knapsack constraint"};
  app.require_subcommand(1);

  std::string instance_file, out_file, cut_file, set_file, assignment_file;
  std::string example, families, format = "md", family, params_file, certificate_out;
  int m = 0, p = 0;
  double budget = 3600;
  bool facet = false, expect_reference = false, allow_large = false;

  auto* hull = app.add_subcommand("hull", "Enumerate vertices and facets of an instance");
  hull->add_option("--instance", instance_file, "Instance JSON")->required();
  hull->add_option("--out", out_file, "Write the facet set here instead of stdout");
  hull->add_option("--budget", budget, "Wall-clock budget in seconds");

  auto* cov = app.add_subcommand("coverage", "Family coverage of the hull facets");
  cov->add_option("--example", example, "Benchmark sequence: L or K")->required();
  cov->add_option("--m", m, "Number of scenarios")->required();
  cov->add_option("--p", p, "Knapsack level (epsilon = p / m)")->required();
  cov->add_option("--families", families, "Comma-separated family list");
  cov->add_option("--format", format, "csv, md or json");
  cov->add_option("--budget", budget, "Wall-clock budget in seconds");
  cov->add_flag("--expect-reference", expect_reference,
                "Exit 4 when a percentage differs from the published table");
  cov->add_flag("--allow-large", allow_large, "Permit m = 10 with p >= 5");

  auto* gen = app.add_subcommand("generate", "Emit one inequality of a family");
  gen->add_option("--family", family, "Family name")->required();
  gen->add_option("--params", params_file, "Parameter JSON")->required();
  gen->add_option("--certificate-out", certificate_out,
                  "Write the generic certificate here");

  auto* check = app.add_subcommand("check", "Validity, facet and membership checks");
  check->add_option("--instance", instance_file, "Instance JSON")->required();
  check->add_option("--cut", cut_file, "Cut JSON")->required();
  check->add_flag("--facet", facet, "Also test whether the cut defines a facet");

  auto* agg = app.add_subcommand("blp-aggregate", "Run one bilinear aggregation");
  agg->add_option("--set", set_file, "Bilinear set JSON")->required();
  agg->add_option("--assignment", assignment_file, "Assignment JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kValidation;
  }

  try {
    if (*hull) return run_hull(instance_file, out_file, budget);
    if (*cov) {
      return run_coverage(example, m, p, families, format, budget, expect_reference,
                          allow_large);
    }
    if (*gen) return run_generate(family, params_file, certificate_out);
    if (*check) return run_check(instance_file, cut_file, facet);
    if (*agg) return run_blp_aggregate(set_file, assignment_file);
  } catch (const ResourceLimitError& e) {
    std::cerr << "mixcut: resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const ValidationError& e) {
    std::cerr << "mixcut: " << e.what() << "\n";
    return kValidation;
  }
  return kOk;
}
