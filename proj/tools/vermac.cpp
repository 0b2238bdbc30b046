// Command-line front end: root data, characters, down-chains, sum-formula
// evaluation and oracle verification. JSON or TSV on stdout; exit codes
// 0 = ok, 1 = verification failure, 2 = usage error.
#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "verma/jantzen.hpp"
#include "verma/serialize.hpp"

using namespace verma;

namespace {

struct WeightSpec {
  std::string series = "A1";
  std::string weight_csv;
  bool critical = false;
  std::string level_str;
  std::string ddeg_str = "0";
  long dmax = 1;
  long hmax = 2;
  std::string format = "json";
  long seed = 0;  // reserved for randomized drivers; accepted for stability
};

void add_common(CLI::App* cmd, WeightSpec& spec, bool with_weight) {
  cmd->add_option("--series", spec.series, "Series and rank, e.g. A2")->required();
  if (with_weight) {
    cmd->add_option("--weight", spec.weight_csv,
                    "Finite coroot coordinates, comma-separated rationals p/q");
    cmd->add_flag("--critical", spec.critical, "Force the level to -h_dual");
    cmd->add_option("--level", spec.level_str, "Level (coefficient of the basic weight)");
    cmd->add_option("--ddeg", spec.ddeg_str, "Coefficient of the imaginary root delta");
    cmd->add_option("--dmax", spec.dmax, "Box depth in delta");
    cmd->add_option("--hmax", spec.hmax, "Box height over the finite simple roots");
  }
  cmd->add_option("--format", spec.format, "Output format: json or tsv")
      ->check(CLI::IsMember({"json", "tsv"}));
  cmd->add_option("--seed", spec.seed, "Random seed (accepted for reproducibility)");
}

std::vector<Rat> parse_weight_csv(const std::string& csv, int rank) {
  std::vector<Rat> out;
  std::string cur;
  for (char c : csv + ",") {
    if (c == ',') {
      if (!cur.empty()) out.push_back(parse_rat(cur));
      cur.clear();
    } else if (!isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (static_cast<int>(out.size()) != rank)
    throw CLI::ValidationError("--weight",
                               "expected " + std::to_string(rank) + " coordinates");
  return out;
}

Weight build_weight(const FiniteRootSystem& sys, const WeightSpec& spec) {
  std::vector<Rat> finite = parse_weight_csv(spec.weight_csv, sys.rank());
  Rat level;
  if (spec.critical) {
    level = -sys.hdual();
    if (!spec.level_str.empty() && parse_rat(spec.level_str) != level)
      throw CLI::ValidationError("--level", "conflicts with --critical");
  } else if (!spec.level_str.empty()) {
    level = parse_rat(spec.level_str);
  } else {
    throw CLI::ValidationError("--level", "give --level or --critical");
  }
  return make_weight(sys, std::move(finite), level, parse_rat(spec.ddeg_str));
}

void emit_character(const Character& ch, const std::string& format) {
  if (format == "json") {
    std::cout << character_to_json(ch).dump(2) << "\n";
    return;
  }
  std::cout << "c0\tcfin\tvalue\n";
  for (const auto& [nu, value] : ch.coeffs) {
    if (value == 0) continue;
    std::cout << nu.c0 << "\t";
    for (size_t i = 0; i < nu.cfin.size(); ++i)
      std::cout << (i ? "," : "") << nu.cfin[i];
    std::cout << "\t" << value << "\n";
  }
}

std::string weight_str(const Weight& w) {
  std::string s = "(";
  for (size_t i = 0; i < w.finite.size(); ++i) s += (i ? "," : "") + rat_str(w.finite[i]);
  s += ") level=" + rat_str(w.level) + " ddeg=" + rat_str(w.ddeg);
  return s;
}

int run(int argc, char** argv) {
  CLI::App app{"Exact characters and Jantzen-type sum formulas for restricted "
               "Verma modules at the critical level"};
  app.require_subcommand(1);
  WeightSpec spec;

  auto* roots = app.add_subcommand("roots", "Root system summary");
  add_common(roots, spec, false);

  auto* chr = app.add_subcommand("char", "Character on a truncation box");
  bool restricted = false, simple = false;
  add_common(chr, spec, true);
  chr->add_flag("--restricted", restricted, "Restricted Verma character (critical only)");
  chr->add_flag("--simple", simple, "Simple character (generic/subgeneric critical only)");

  auto* dn = app.add_subcommand("down", "Iterate the down operator along a root");
  std::string alpha_csv;
  long steps = 1;
  add_common(dn, spec, true);
  dn->add_option("--alpha", alpha_csv, "Root in simple-root coordinates")->required();
  dn->add_option("--steps", steps, "Number of applications");

  auto* sf = app.add_subcommand("sumformula", "Alternating sum-formula character");
  bool verify = false;
  add_common(sf, spec, true);
  sf->add_flag("--verify", verify, "Cross-check against the enveloping-algebra oracle");

  auto* sh = app.add_subcommand("shapovalov", "Gram determinant vs the product formula");
  add_common(sh, spec, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    FiniteRootSystem sys(parse_cartan(spec.series));
    Box box{spec.dmax, spec.hmax};

    if (roots->parsed()) {
      if (spec.format == "json") {
        Json j;
        j["series"] = spec.series;
        j["rank"] = sys.rank();
        j["num_roots"] = sys.roots().size();
        j["theta"] = sys.theta();
        j["h_dual"] = rat_str(sys.hdual());
        Json form = Json::array();
        for (const auto& row : sys.form_roots()) {
          Json r = Json::array();
          for (const auto& x : row) r.push_back(rat_str(x));
          form.push_back(r);
        }
        j["form_roots"] = form;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "series\t" << spec.series << "\nrank\t" << sys.rank() << "\nnum_roots\t"
                  << sys.roots().size() << "\nh_dual\t" << rat_str(sys.hdual()) << "\ntheta\t";
        for (int i = 0; i < sys.rank(); ++i) std::cout << (i ? "," : "") << sys.theta()[i];
        std::cout << "\n";
      }
      return 0;
    }

    Weight lam = build_weight(sys, spec);
    PartitionEngine pe(sys);

    if (chr->parsed()) {
      if (restricted && simple) {
        std::cerr << "usage error: --restricted and --simple are exclusive\n";
        return 2;
      }
      Character ch = simple       ? ch_simple_subgeneric(pe, lam, box)
                     : restricted ? ch_restricted_verma(pe, lam, box)
                                  : ch_verma(pe, lam, box);
      emit_character(ch, spec.format);
      return 0;
    }

    if (dn->parsed()) {
      RootCoords alpha;
      for (const Rat& c : parse_weight_csv(alpha_csv, sys.rank())) alpha.push_back(to_long(c));
      if (!sys.is_root(alpha)) {
        std::cerr << "usage error: --alpha is not a root of " << spec.series << "\n";
        return 2;
      }
      Weight w = down_pow(sys, alpha, lam, steps);
      if (spec.format == "json") {
        Json j;
        j["start"] = weight_to_json(lam);
        j["steps"] = steps;
        j["result"] = weight_to_json(w);
        auto bc = leq(sys, w, lam);
        if (bc) j["drop"] = boxcoords_to_json(*bc);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "result\t" << weight_str(w) << "\n";
      }
      return 0;
    }

    if (sf->parsed()) {
      if (!is_critical(sys, lam)) {
        std::cerr << "error: the sum formula requires the critical level (level = "
                  << rat_str(-sys.hdual()) << " for " << spec.series << ")\n";
        return 2;
      }
      Character rhs = sum_formula_rhs(pe, lam, box);
      WeightClass cls = integral_roots(sys, lam).cls;
      if (!verify) {
        if (spec.format == "json") {
          Json j = character_to_json(rhs);
          if (cls == WeightClass::Generic) j["note"] = "generic weight: empty sum";
          std::cout << j.dump(2) << "\n";
        } else {
          emit_character(rhs, spec.format);
        }
        return 0;
      }
      LoopAlgebra alg(sys, box.dmax);
      SumFormulaReport rep = verify_sum_formula(alg, pe, lam, box);
      if (spec.format == "json") {
        std::cout << sum_formula_report_to_json(rep).dump(2) << "\n";
      } else {
        std::cout << "c0\tcfin\tlhs\trhs\tmatch\n";
        for (const auto& row : rep.rows) {
          std::cout << row.nu.c0 << "\t";
          for (size_t i = 0; i < row.nu.cfin.size(); ++i)
            std::cout << (i ? "," : "") << row.nu.cfin[i];
          std::cout << "\t" << row.lhs << "\t" << row.rhs << "\t" << (row.match ? "yes" : "no")
                    << "\n";
        }
        std::cout << "verdict\t" << (rep.verdict ? "true" : "false") << "\n";
      }
      return rep.verdict ? 0 : 1;
    }

    if (sh->parsed()) {
      LoopAlgebra alg(sys, box.dmax);
      ShapovalovReport rep = verify_shapovalov(alg, pe, lam, box);
      if (spec.format == "json") {
        std::cout << shapovalov_report_to_json(rep).dump(2) << "\n";
      } else {
        std::cout << "c0\tcfin\tstatus\n";
        for (const auto& row : rep.rows) {
          std::cout << row.eta.c0 << "\t";
          for (size_t i = 0; i < row.eta.cfin.size(); ++i)
            std::cout << (i ? "," : "") << row.eta.cfin[i];
          std::cout << "\t" << row.status << "\n";
        }
        std::cout << "verdict\t" << (rep.verdict ? "true" : "false") << "\n";
      }
      return rep.verdict ? 0 : 1;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
