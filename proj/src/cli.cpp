#include "schubert/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "schubert/census.hpp"
#include "schubert/characters.hpp"
#include "schubert/errors.hpp"
#include "schubert/io.hpp"
#include "schubert/sphericality.hpp"
#include "schubert/weyl.hpp"

namespace schubert::cli {

namespace {

using io::Json;

std::uint64_t env_or(const char* name, std::uint64_t fallback) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return fallback;
  try {
    return std::stoull(v);
  } catch (const std::exception&) {
    throw InvalidInput(std::string("environment variable ") + name + " is not a number");
  }
}

struct Args {
  std::string type;
  std::string word;
  std::string levi;
  std::string weight;
  std::string battery;
  std::string out_path;
  std::optional<std::uint64_t> cap;
  std::optional<double> sample;
  unsigned jobs = 1;
  bool pretty = false;
};

struct Context {
  std::unique_ptr<RootSystem> rs;
  std::ostream& out;
  std::ostream& err;
  Args args;

  const RootSystem& root_system() {
    if (!rs) rs = std::make_unique<RootSystem>(CartanType::parse(args.type));
    return *rs;
  }
  Word word() { return io::parse_word(args.word, root_system().rank()); }
  Weight weight() { return io::parse_weight(args.weight, root_system().rank()); }

  // "descents" (or empty) means the full left descent set of w; "none" is I = {}.
  NodeSet levi_for(const WeylElement& w) {
    if (args.levi.empty() || args.levi == "descents") return left_descents(root_system(), w);
    if (args.levi == "none") return {};
    return io::parse_node_set(args.levi, root_system().rank());
  }

  void emit(const Json& j) { out << j.dump() << '\n'; }
};

std::string join(const std::vector<int>& v, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

std::string word_text(const Word& w) { return w.empty() ? "e" : "s" + join(w, " s"); }

std::string set_text(NodeSet s) { return "{" + join(s.nodes(), ",") + "}"; }

int cmd_classify(Context& ctx) {
  const RootSystem& rs = ctx.root_system();
  const WeylElement w = from_word(rs, ctx.word());
  const ClassificationResult r = classify(rs, w, ctx.levi_for(w));
  if (ctx.args.pretty) {
    ctx.out << "type       " << rs.type().name() << '\n'
            << "w          " << word_text(r.w_word) << "  (length " << r.len_w << ")\n"
            << "I          " << set_text(r.levi) << "  (w0(I) length " << r.len_w0I << ")\n"
            << "w0(I) w    " << word_text(r.d_word) << "  (length " << r.len_d << ", support "
            << set_text(r.support_d) << ")\n"
            << "spherical  " << (r.is_spherical ? "yes" : "no") << '\n';
  } else {
    ctx.emit(io::to_json(rs.type(), r));
  }
  return kOk;
}

int cmd_toric(Context& ctx) {
  const RootSystem& rs = ctx.root_system();
  const WeylElement w = from_word(rs, ctx.word());
  const Word rw = reduced_word(rs, w);
  const NodeSet supp = support(rs, w);
  const bool toric = classify_toric(rs, w);
  if (ctx.args.pretty) {
    ctx.out << "w        " << word_text(rw) << "  (length " << rw.size() << ", support "
            << set_text(supp) << ")\n"
            << "toric    " << (toric ? "yes" : "no") << '\n';
  } else {
    Json j;
    j["type"] = rs.type().name();
    j["w_word"] = rw;
    j["len"] = rw.size();
    j["support"] = io::to_json(supp);
    j["toric"] = toric;
    ctx.emit(j);
  }
  return kOk;
}

int cmd_descents(Context& ctx) {
  const RootSystem& rs = ctx.root_system();
  const WeylElement w = from_word(rs, ctx.word());
  const Word rw = reduced_word(rs, w);
  const NodeSet d = left_descents(rs, w);
  if (ctx.args.pretty) {
    ctx.out << "w            " << word_text(rw) << "  (length " << rw.size() << ")\n"
            << "left descents " << set_text(d) << '\n';
  } else {
    Json j;
    j["type"] = rs.type().name();
    j["w_word"] = rw;
    j["len"] = rw.size();
    j["descents"] = io::to_json(d);
    ctx.emit(j);
  }
  return kOk;
}

std::size_t term_ceiling() { return env_or("SCHUBERT_TERM_CEILING", kDefaultTermCeiling); }

int cmd_demazure(Context& ctx) {
  const RootSystem& rs = ctx.root_system();
  const WeylElement w = from_word(rs, ctx.word());
  const Weight lambda = ctx.weight();
  const WeightPoly ch = demazure_char(rs, lambda, w, term_ceiling());
  if (ctx.args.pretty) {
    ctx.out << "weight                       coeff\n";
    for (const auto& [mu, c] : ch.sorted_terms())
      ctx.out << std::left << std::setw(28) << mu.to_string() << ' ' << c << '\n';
    ctx.out << "mass " << ch.mass() << ", " << ch.size() << " weights\n";
  } else {
    Json j;
    j["type"] = rs.type().name();
    j["w"] = reduced_word(rs, w);
    j["weight"] = io::to_json(lambda);
    j["mass"] = ch.mass();
    j["terms"] = ch.size();
    j["character"] = io::to_json(ch);
    ctx.emit(j);
  }
  return kOk;
}

void print_decomposition(std::ostream& out, const std::vector<DecompositionEntry>& entries) {
  out << "mu                           mult\n";
  for (const DecompositionEntry& e : entries)
    out << std::left << std::setw(28) << e.mu.to_string() << ' ' << e.multiplicity << '\n';
}

int cmd_decompose(Context& ctx, bool mf_only) {
  const RootSystem& rs = ctx.root_system();
  const WeylElement w = from_word(rs, ctx.word());
  const Weight lambda = ctx.weight();
  const NodeSet levi = ctx.levi_for(w);
  const MultiplicityCheck mc = is_multiplicity_free(rs, lambda, w, levi, term_ceiling());
  if (ctx.args.pretty) {
    if (!mf_only) print_decomposition(ctx.out, mc.decomposition);
    ctx.out << "multiplicity-free " << (mc.multiplicity_free ? "yes" : "no");
    if (mc.witness)
      ctx.out << " (mu " << mc.witness->mu.to_string() << " has multiplicity "
              << mc.witness->multiplicity << ")";
    ctx.out << '\n';
    return kOk;
  }
  Json j;
  j["type"] = rs.type().name();
  j["w"] = reduced_word(rs, w);
  j["weight"] = io::to_json(lambda);
  j["levi"] = io::to_json(levi);
  if (!mf_only) j["decomposition"] = io::to_json(mc.decomposition);
  j["multiplicity_free"] = mc.multiplicity_free;
  if (mc.witness) {
    j["witness"] = {{"mu", io::to_json(mc.witness->mu)}, {"mult", mc.witness->multiplicity}};
  } else {
    j["witness"] = nullptr;
  }
  ctx.emit(j);
  return kOk;
}

const char* status_name(WitnessStatus s) {
  switch (s) {
    case WitnessStatus::Found: return "found";
    case WitnessStatus::Exhausted: return "exhausted";
    case WitnessStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

int cmd_witness(Context& ctx) {
  const RootSystem& rs = ctx.root_system();
  const WeylElement w = from_word(rs, ctx.word());
  const NodeSet levi = ctx.levi_for(w);
  WitnessOptions opts;
  opts.coeff_cap = static_cast<int>(ctx.args.cap.value_or(2));
  opts.lambda_budget = env_or("SCHUBERT_WITNESS_BUDGET", opts.lambda_budget);
  opts.term_ceiling = term_ceiling();
  opts.jobs = ctx.args.jobs;
  const WitnessResult r = witness_search(rs, w, levi, opts);
  if (ctx.args.pretty) {
    ctx.out << "status  " << status_name(r.status) << " after " << r.lambdas_checked
            << " weights\n";
    if (r.lambda)
      ctx.out << "lambda  " << r.lambda->to_string() << "\nmu      " << r.witness->mu.to_string()
              << "  (multiplicity " << r.witness->multiplicity << ")\n";
  } else {
    Json j;
    j["type"] = rs.type().name();
    j["w"] = reduced_word(rs, w);
    j["levi"] = io::to_json(levi);
    j["cap"] = opts.coeff_cap;
    j["status"] = status_name(r.status);
    j["found"] = r.status == WitnessStatus::Found;
    j["lambdas_checked"] = r.lambdas_checked;
    j["lambda"] = r.lambda ? io::to_json(*r.lambda) : Json(nullptr);
    j["mu"] = r.witness ? io::to_json(r.witness->mu) : Json(nullptr);
    j["mult"] = r.witness ? Json(r.witness->multiplicity) : Json(nullptr);
    ctx.emit(j);
  }
  if (r.status == WitnessStatus::Inconclusive) {
    ctx.err << "witness search inconclusive: budget exhausted\n";
    return kBudgetExhausted;
  }
  return kOk;
}

int cmd_census(Context& ctx) {
  const RootSystem& rs = ctx.root_system();
  CensusOptions opts;
  if (ctx.args.levi.empty() || ctx.args.levi == "all") {
    opts.levi_mode = LeviMode::AllSubsets;
  } else if (ctx.args.levi == "descents") {
    opts.levi_mode = LeviMode::FullDescentOnly;
  } else {
    throw InvalidInput("census --levi must be 'all' or 'descents'");
  }
  opts.cap = ctx.args.cap.value_or(env_or("SCHUBERT_GROUP_CAP", kDefaultGroupCap));
  opts.jobs = ctx.args.jobs;

  const std::vector<Weight> battery =
      ctx.args.battery.empty() ? std::vector<Weight>{}
                               : io::parse_battery(ctx.args.battery, rs.rank());

  // Refuse oversized groups before opening any output.
  const auto order = rs.type().weyl_group_order();
  if (!order || *order > opts.cap) {
    throw BudgetExceeded("|W(" + rs.type().name() + ")| exceeds the cap " +
                         std::to_string(opts.cap));
  }

  std::ofstream file;
  if (!ctx.args.out_path.empty()) {
    file.open(ctx.args.out_path, std::ios::binary | std::ios::trunc);
    if (!file) throw InvalidInput("cannot open " + ctx.args.out_path + " for writing");
  }
  std::ostream* record_stream = file.is_open() ? &file : (ctx.args.pretty ? nullptr : &ctx.out);

  std::vector<CensusRecord> kept;
  opts.sink = [&](const CensusRecord& r) {
    if (record_stream) *record_stream << io::to_json(r).dump() << '\n';
    if (!battery.empty()) kept.push_back(r);
  };
  const CensusSummary summary = run_census(rs, opts);

  Json j = io::to_json(rs.type(), summary);
  j["levi_mode"] = opts.levi_mode == LeviMode::AllSubsets ? "all" : "descents";
  int status = kOk;
  if (!battery.empty()) {
    CrossCheckOptions cc;
    cc.sample = ctx.args.sample.value_or(default_sample_fraction(summary.group_order));
    cc.jobs = ctx.args.jobs;
    cc.witness.lambda_budget = env_or("SCHUBERT_WITNESS_BUDGET", cc.witness.lambda_budget);
    cc.witness.term_ceiling = term_ceiling();
    const CrossCheckReport report = cross_check(rs, kept, battery, cc);
    j["cross_check"] = io::to_json(report);
    j["cross_check"]["sample"] = cc.sample;
    if (!report.violations.empty()) {
      const Violation& v = report.violations.front();
      ctx.err << "inconsistency: spherical record w=" << word_text(v.record.w_word)
              << " I=" << set_text(v.record.levi) << " lambda=" << v.lambda.to_string()
              << " has mu=" << v.witness.mu.to_string() << " with multiplicity "
              << v.witness.multiplicity << '\n';
      status = kDomainError;
    }
  }

  if (ctx.args.pretty) {
    ctx.out << "type " << rs.type().name() << "  |W| = " << summary.group_order
            << "  pairs " << summary.pair_count << "  spherical " << summary.spherical_count
            << "  toric " << summary.toric_count << '\n'
            << "len  elements  pairs  spherical  toric\n";
    for (const auto& [len, b] : summary.by_length)
      ctx.out << std::setw(3) << len << std::setw(10) << b.elements << std::setw(7) << b.pairs
              << std::setw(11) << b.spherical << std::setw(7) << b.toric << '\n';
  } else {
    ctx.emit(j);
  }
  return status;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Levi-sphericality of Schubert varieties and Demazure character tools",
               "schubert"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  Context ctx{nullptr, out, err, {}};
  Args& a = ctx.args;

  auto add_type = [&](CLI::App* sc) {
    sc->add_option("--type", a.type, "Cartan type, e.g. A3, D4, E8")->required();
    sc->add_flag("--pretty", a.pretty, "Human-readable output instead of JSON");
  };
  auto add_word = [&](CLI::App* sc) {
    sc->add_option("--word", a.word, "Word in the simple reflections, e.g. \"3 2 3 4\"")
        ->required();
  };
  auto add_levi = [&](CLI::App* sc) {
    sc->add_option("--levi", a.levi, "Levi nodes, e.g. \"2,3\", 'none', or 'descents' (default)");
  };
  auto add_weight = [&](CLI::App* sc) {
    sc->add_option("--weight", a.weight, "Dominant weight in fundamental-weight coordinates")
        ->required();
  };

  auto* classify_cmd = app.add_subcommand("classify", "Decide L_I-sphericality of X_w");
  add_type(classify_cmd);
  add_word(classify_cmd);
  add_levi(classify_cmd);

  auto* toric_cmd = app.add_subcommand("toric", "Decide whether X_w is toric");
  add_type(toric_cmd);
  add_word(toric_cmd);

  auto* descents_cmd = app.add_subcommand("descents", "Left descent set of w");
  add_type(descents_cmd);
  add_word(descents_cmd);

  auto* demazure_cmd = app.add_subcommand("demazure", "Demazure character of V_lambda^w");
  add_type(demazure_cmd);
  add_word(demazure_cmd);
  add_weight(demazure_cmd);

  auto* decompose_cmd =
      app.add_subcommand("decompose", "Decompose a Demazure character into Levi irreducibles");
  add_type(decompose_cmd);
  add_word(decompose_cmd);
  add_weight(decompose_cmd);
  add_levi(decompose_cmd);

  auto* mf_cmd = app.add_subcommand("mf-check", "Is V_lambda^w a multiplicity-free L_I-module?");
  add_type(mf_cmd);
  add_word(mf_cmd);
  add_weight(mf_cmd);
  add_levi(mf_cmd);

  auto* witness_cmd =
      app.add_subcommand("witness", "Search for a weight with a repeated Levi constituent");
  add_type(witness_cmd);
  add_word(witness_cmd);
  add_levi(witness_cmd);
  witness_cmd->add_option("--cap", a.cap, "Largest weight coordinate to try (default 2)");
  witness_cmd->add_option("--jobs", a.jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* census_cmd = app.add_subcommand("census", "Classify every pair (w, I) in a Weyl group");
  add_type(census_cmd);
  census_cmd->add_option("--levi", a.levi, "'all' subsets of descents (default) or 'descents'");
  census_cmd->add_option("--cap", a.cap, "Refuse groups larger than this");
  census_cmd->add_option("--out", a.out_path, "Write JSONL records here; summary to stdout");
  census_cmd->add_option("--battery", a.battery,
                         "Weights for the character cross-check, ';'-separated "
                         "(keywords: fundamental, rho, 2rho)");
  census_cmd->add_option("--sample", a.sample, "Fraction of records cross-checked")
      ->check(CLI::Range(0.0, 1.0));
  census_cmd->add_option("--jobs", a.jobs, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (classify_cmd->parsed()) return cmd_classify(ctx);
    if (toric_cmd->parsed()) return cmd_toric(ctx);
    if (descents_cmd->parsed()) return cmd_descents(ctx);
    if (demazure_cmd->parsed()) return cmd_demazure(ctx);
    if (decompose_cmd->parsed()) return cmd_decompose(ctx, false);
    if (mf_cmd->parsed()) return cmd_decompose(ctx, true);
    if (witness_cmd->parsed()) return cmd_witness(ctx);
    if (census_cmd->parsed()) return cmd_census(ctx);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kBudgetExhausted;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kUsageError;
}

}  // namespace schubert::cli
