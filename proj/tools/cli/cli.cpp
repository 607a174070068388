#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cayley/continuant.hpp"
#include "cayley/error.hpp"
#include "cayley/json_writer.hpp"
#include "cayley/markov.hpp"
#include "cayley/pell.hpp"
#include "cayley/search.hpp"
#include "cayley/sequences.hpp"
#include "cayley/solution_graph.hpp"
#include "cayley/surface.hpp"

namespace cayley::cli {
namespace {

constexpr const char* kNoteChebyshev =
    "note: T_n is the first-kind Chebyshev polynomial "
    "(T_0 = 1, T_1 = x, T_{n+1} = 2x T_n - T_{n-1}); R_n(b) = s T_n(b/s)";
constexpr const char* kNoteFamilyOne =
    "note: family one pairs z = R_n(y) with a = R*_{n-1}(y), d = y^2 - s^2";
constexpr const char* kNoteFamilyTwo =
    "note: family two uses a = s (R_{n+m}(p) - R_{|n-m|}(p)) / 2, "
    "d = y^2 - s^2";

std::uint64_t default_budget() {
  if (const char* env = std::getenv("CAYLEY_BUDGET")) {
    const Integer value = parse_integer(env);
    if (sgn(value) <= 0 || !value.fits_ulong_p()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "CAYLEY_BUDGET must be a positive 64-bit integer");
    }
    return value.get_ui();
  }
  return kDefaultSearchBudget;
}

std::uint64_t to_u64(const std::string& text, const char* what) {
  const Integer value = parse_integer(text);
  if (sgn(value) <= 0 || !value.fits_ulong_p()) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(what) + " must be a positive 64-bit integer");
  }
  return value.get_ui();
}

void write_triple(JsonWriter& w, const Triple& t) {
  w.begin_array();
  for (const Integer& v : t.values()) w.value(v);
  w.end_array();
}

struct Context {
  std::ostream& out;
  std::ostream& err;
  bool notes = true;
  unsigned workers = 1;
  std::string budget_text;

  void note(const char* text) const {
    if (notes) err << text << '\n';
  }
  std::uint64_t budget() const {
    return budget_text.empty() ? default_budget()
                               : to_u64(budget_text, "--budget");
  }
};

// Each subcommand registers its options and returns the action to run.
using Action = std::function<int()>;

Action add_verify(CLI::App& app, Context& ctx) {
  auto* cmd = app.add_subcommand("verify", "Evaluate C_s at a triple");
  auto s = std::make_shared<std::string>();
  auto triple = std::make_shared<std::string>();
  auto format = std::make_shared<std::string>("json");
  cmd->add_option("--s", *s, "Surface parameter")->required();
  cmd->add_option("--triple", *triple, "a,b,c")->required();
  cmd->add_option("--format", *format)->check(CLI::IsMember({"json", "text"}));
  return [=, &ctx] {
    const Triple t = parse_triple(parse_integer(*s), *triple);
    const Integer value = eval_c(t);
    const bool solution = sgn(value) == 0;
    if (*format == "text") {
      ctx.out << value.get_str() << (solution ? " solution" : " not-a-solution")
              << '\n';
    } else {
      JsonWriter w(ctx.out);
      w.begin_object().key("value").value(value).key("solution").value(solution);
      w.end_object();
      ctx.out << '\n';
    }
    return solution ? kOk : kVerificationFailure;
  };
}

Action add_family(CLI::App& app, Context& ctx) {
  auto* cmd = app.add_subcommand("family", "R-family triple (R_n, R_{n+m}, R_m)");
  auto s = std::make_shared<std::string>();
  auto b = std::make_shared<std::string>();
  auto n = std::make_shared<Index>(0);
  auto m = std::make_shared<Index>(0);
  auto format = std::make_shared<std::string>("json");
  cmd->add_option("--s", *s)->required();
  cmd->add_option("--b", *b)->required();
  cmd->add_option("--n", *n)->required();
  cmd->add_option("--m", *m)->required();
  cmd->add_option("--format", *format)->check(CLI::IsMember({"json", "text"}));
  return [=, &ctx] {
    ctx.note(kNoteChebyshev);
    const RFamily fam{parse_integer(*s), parse_integer(*b)};
    const Triple t = family_triple(fam, *n, *m);
    if (*format == "text") {
      ctx.out << t.to_string() << '\n';
    } else {
      JsonWriter w(ctx.out);
      w.begin_object();
      w.key("s").value(fam.s).key("b").value(fam.b);
      w.key("n").value(*n).key("m").value(*m);
      w.key("triple");
      write_triple(w, t);
      w.key("value").value(eval_c(t));
      w.end_object();
      ctx.out << '\n';
    }
    return kOk;
  };
}

Action add_graph(CLI::App& app, Context& ctx) {
  auto* cmd = app.add_subcommand("graph", "Bounded conjugation graph of a seed");
  auto s = std::make_shared<std::string>();
  auto seed = std::make_shared<std::string>();
  auto bound = std::make_shared<std::string>();
  auto format = std::make_shared<std::string>("json");
  auto max_vertices = std::make_shared<std::size_t>(kDefaultMaxGraphVertices);
  cmd->add_option("--s", *s)->required();
  cmd->add_option("--seed", *seed, "a,b,c")->required();
  cmd->add_option("--bound", *bound)->required();
  cmd->add_option("--max-vertices", *max_vertices);
  cmd->add_option("--format", *format)->check(CLI::IsMember({"json", "dot"}));
  return [=, &ctx] {
    const Triple t = parse_triple(parse_integer(*s), *seed);
    const SolutionGraph g =
        solution_graph(t, parse_integer(*bound), *max_vertices);
    if (*format == "dot") {
      ctx.out << to_dot(g);
    } else {
      write_json(ctx.out, g);
      ctx.out << '\n';
    }
    return kOk;
  };
}

Action add_reduce(CLI::App& app, Context& ctx) {
  auto* cmd = app.add_subcommand("reduce", "Reduction trace by conjugation");
  auto s = std::make_shared<std::string>();
  auto triple = std::make_shared<std::string>();
  auto format = std::make_shared<std::string>("json");
  cmd->add_option("--s", *s)->required();
  cmd->add_option("--triple", *triple)->required();
  cmd->add_option("--format", *format)->check(CLI::IsMember({"json", "text"}));
  return [=, &ctx] {
    const Triple t = parse_triple(parse_integer(*s), *triple);
    const std::vector<Triple> trace = reduce(t);
    if (*format == "text") {
      for (const Triple& step : trace) ctx.out << step.to_string() << '\n';
      return kOk;
    }
    JsonWriter w(ctx.out);
    w.begin_object();
    w.key("s").value(t.s());
    w.key("trace").begin_array();
    for (const Triple& step : trace) write_triple(w, step);
    w.end_array();
    w.key("steps").value(static_cast<std::uint64_t>(trace.size() - 1));
    w.key("singular").value(is_singular(trace.back()));
    w.key("base").value(is_base(trace.back()));
    w.end_object();
    ctx.out << '\n';
    return kOk;
  };
}

Action add_pell_one(CLI::App& app, Context& ctx) {
  auto* cmd = app.add_subcommand("pell-one", "z^2 - d a^2 = s^2 from R_n, R*_{n-1}");
  auto s = std::make_shared<std::string>();
  auto y = std::make_shared<std::string>();
  auto n = std::make_shared<Index>(1);
  auto count = std::make_shared<Index>(1);
  cmd->add_option("--s", *s)->required();
  cmd->add_option("--y", *y)->required();
  cmd->add_option("--n", *n, "First index (>= 1)")->required();
  cmd->add_option("--count", *count, "Number of consecutive indices");
  return [=, &ctx] {
    ctx.note(kNoteChebyshev);
    ctx.note(kNoteFamilyOne);
    const RFamily fam{parse_integer(*s), parse_integer(*y)};
    const PellInstance inst = family_one_instance(fam);
    std::vector<PellSolution> sols;
    for (Index k = 0; k < *count; ++k) sols.push_back(pell_family_one(fam, *n + k));
    write_json(ctx.out, inst, sols, "family-one");
    ctx.out << '\n';
    return kOk;
  };
}

Action add_pell_two(CLI::App& app, Context& ctx) {
  auto* cmd = app.add_subcommand("pell-two", "a^2 - d z^2 = -s^2 d with y = R_n(p)");
  auto s = std::make_shared<std::string>();
  auto p = std::make_shared<std::string>();
  auto n = std::make_shared<Index>(1);
  auto m = std::make_shared<Index>(1);
  auto count = std::make_shared<Index>(1);
  cmd->add_option("--s", *s)->required();
  cmd->add_option("--p", *p)->required();
  cmd->add_option("--n", *n)->required();
  cmd->add_option("--m", *m, "First m (>= 1)")->required();
  cmd->add_option("--count", *count, "Number of consecutive m values");
  return [=, &ctx] {
    ctx.note(kNoteChebyshev);
    ctx.note(kNoteFamilyTwo);
    const RFamily fam{parse_integer(*s), parse_integer(*p)};
    const PellInstance inst = family_two_instance(fam, *n);
    std::vector<PellSolution> sols;
    for (Index k = 0; k < *count; ++k) {
      sols.push_back(pell_family_two(fam, *n, *m + k));
    }
    write_json(ctx.out, inst, sols, "family-two");
    ctx.out << '\n';
    return kOk;
  };
}

Action add_pell_oracle(CLI::App& app, Context& ctx) {
  auto* cmd = app.add_subcommand("pell-oracle", "Exhaustive Pell scan over z");
  auto d = std::make_shared<std::string>();
  auto rhs = std::make_shared<std::string>();
  auto bound = std::make_shared<std::string>();
  auto form = std::make_shared<std::string>("z2-da2");
  auto include_zero = std::make_shared<bool>(false);
  cmd->add_option("--d", *d)->required();
  cmd->add_option("--rhs", *rhs)->required();
  cmd->add_option("--bound", *bound, "Scan 1 <= z <= bound")->required();
  cmd->add_option("--form", *form)->check(CLI::IsMember({"z2-da2", "a2-dz2"}));
  cmd->add_flag("--include-zero", *include_zero, "Admit a = 0");
  return [=, &ctx] {
    const PellInstance inst{parse_integer(*d), parse_integer(*rhs),
                            parse_pell_form(*form)};
    const std::uint64_t limit = to_u64(*bound, "--bound");
    if (limit > ctx.budget()) {
      throw Error(ErrorCode::kBudgetExceeded,
                  "scan bound " + *bound + " exceeds the compute budget");
    }
    const auto sols = pell_oracle(inst, limit, {*include_zero, ctx.workers});
    write_json(ctx.out, inst, sols, "oracle");
    ctx.out << '\n';
    return kOk;
  };
}

Action add_search(CLI::App& app, Context& ctx) {
  auto* cmd = app.add_subcommand("search", "All solutions a <= b <= c <= bound");
  auto s = std::make_shared<std::string>();
  auto bound = std::make_shared<std::string>();
  auto format = std::make_shared<std::string>("json");
  cmd->add_option("--s", *s)->required();
  cmd->add_option("--bound", *bound)->required();
  cmd->add_option("--format", *format)
      ->check(CLI::IsMember({"json", "jsonl", "csv"}));
  return [=, &ctx] {
    const std::uint64_t sv = to_u64(*s, "--s");
    const std::uint64_t bv = to_u64(*bound, "--bound");
    const auto triples = enumerate_solutions(sv, bv, {ctx.workers, ctx.budget()});
    if (*format == "csv") {
      ctx.out << "s,a,b,c\n";
      for (const Triple& t : triples) {
        ctx.out << sv << ',' << t.to_string() << '\n';
      }
    } else if (*format == "jsonl") {
      for (const Triple& t : triples) {
        JsonWriter w(ctx.out);
        w.begin_object().key("s").value(sv).key("triple");
        write_triple(w, t);
        w.end_object();
        ctx.out << '\n';
      }
    } else {
      JsonWriter w(ctx.out);
      w.begin_object();
      w.key("s").value(sv).key("bound").value(bv);
      w.key("count").value(static_cast<std::uint64_t>(triples.size()));
      w.key("solutions").begin_array();
      for (const Triple& t : triples) write_triple(w, t);
      w.end_array();
      w.end_object();
      ctx.out << '\n';
    }
    return kOk;
  };
}

Action add_classify(CLI::App& app, Context& ctx) {
  auto* cmd = app.add_subcommand("classify", "Tag every solution within a bound");
  auto s = std::make_shared<std::string>();
  auto bound = std::make_shared<std::string>();
  auto format = std::make_shared<std::string>("csv");
  cmd->add_option("--s", *s)->required();
  cmd->add_option("--bound", *bound)->required();
  cmd->add_option("--format", *format)->check(CLI::IsMember({"csv", "jsonl"}));
  return [=, &ctx] {
    const auto rows = classify(to_u64(*s, "--s"), to_u64(*bound, "--bound"),
                               {ctx.workers, ctx.budget()});
    if (*format == "jsonl") {
      write_jsonl(ctx.out, rows);
    } else {
      write_csv(ctx.out, rows);
    }
    return kOk;
  };
}

Action add_markov_tree(CLI::App& app, Context& ctx) {
  auto* cmd = app.add_subcommand("markov-tree", "Markov triples up to a depth");
  auto depth = std::make_shared<unsigned>(0);
  auto format = std::make_shared<std::string>("json");
  cmd->add_option("--depth", *depth)->required();
  cmd->add_option("--format", *format)->check(CLI::IsMember({"json", "dot"}));
  return [=, &ctx] {
    const MarkovTree tree = markov_tree(*depth);
    if (*format == "dot") {
      ctx.out << to_dot(tree);
    } else {
      write_json(ctx.out, tree);
      ctx.out << '\n';
    }
    return kOk;
  };
}

Action add_continuant(CLI::App& app, Context& ctx) {
  auto* cmd = app.add_subcommand(
      "continuant", "Continuants of a word, or a geodesic sequence");
  auto word = std::make_shared<std::optional<std::string>>();
  auto alpha = std::make_shared<std::optional<std::string>>();
  auto beta = std::make_shared<std::string>();
  auto count = std::make_shared<std::size_t>(4);
  auto* word_opt = cmd->add_option("--word", *word, "Partial quotients, e.g. 1,1,2");
  auto* alpha_opt = cmd->add_option("--alpha", *alpha, "Even-length word");
  cmd->add_option("--beta", *beta, "Word appended after alpha^k");
  cmd->add_option("--count", *count, "Number of geodesic terms");
  word_opt->excludes(alpha_opt);
  return [=, &ctx] {
    JsonWriter w(ctx.out);
    auto write_word = [&](const Word& x) {
      w.begin_array();
      for (std::uint64_t e : x.entries()) w.value(e);
      w.end_array();
    };
    if (word->has_value()) {
      const Word x = parse_word(**word);
      w.begin_object();
      w.key("word");
      write_word(x);
      w.key("K").value(continuant(x));
      w.key("K_breve");
      if (x.size() >= 1) w.value(breve_continuant(x, 1)); else w.null();
      w.key("K_breve2");
      if (x.size() >= 2) w.value(breve_continuant(x, 2)); else w.null();
      w.end_object();
    } else if (alpha->has_value()) {
      const Word a = parse_word(**alpha);
      const Word b = parse_word(*beta);
      const auto terms = geodesic_sequence(a, b, *count);
      w.begin_object();
      w.key("alpha");
      write_word(a);
      w.key("beta");
      write_word(b);
      w.key("multiplier").value(geodesic_multiplier(a).to_string());
      w.key("terms").begin_array();
      for (const Integer& t : terms) w.value(t);
      w.end_array();
      w.key("split_identity").value(split_identity_check(a, b));
      w.end_object();
    } else {
      throw Error(ErrorCode::kInvalidArgument, "give --word or --alpha");
    }
    ctx.out << '\n';
    return kOk;
  };
}

Action add_r_match(CLI::App& app, Context& ctx) {
  auto* cmd = app.add_subcommand(
      "r-match", "Search for geodesic continuant sequences equal to R_n(b)");
  auto bounds = std::make_shared<RMatchBounds>();
  cmd->add_option("--max-entry", bounds->max_entry);
  cmd->add_option("--max-len", bounds->max_len);
  cmd->add_option("--max-terms", bounds->max_terms);
  return [=, &ctx] {
    ctx.note(kNoteChebyshev);
    const RMatchReport report = r_match_search(*bounds);
    write_json(ctx.out, report);
    ctx.out << '\n';
    return report.matches_s_ge_2.empty() ? kOk : kVerificationFailure;
  };
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotASolution:
    case ErrorCode::kInvariantViolation:
      return kVerificationFailure;
    default:
      return kUsageError;
  }
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err) {
  Context ctx{out, err, true, 1, {}};
  CLI::App app{"Exact solutions of Cayley's cubic, Pell equations and "
               "continuants",
               "cayley"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--note-corrections,!--no-note-corrections", ctx.notes,
               "Print convention notes for affected operations (default on)");
  app.add_option("--workers", ctx.workers, "Worker threads for searches")
      ->check(CLI::Range(1u, 1024u));
  app.add_option("--budget", ctx.budget_text,
                 "Cap on quadratic solves / scan length (env CAYLEY_BUDGET)");

  std::vector<std::pair<CLI::App*, Action>> actions;
  auto reg = [&](Action (*add)(CLI::App&, Context&)) {
    Action action = add(app, ctx);
    actions.emplace_back(app.get_subcommands({}).back(), std::move(action));
  };
  reg(add_verify);
  reg(add_family);
  reg(add_graph);
  reg(add_reduce);
  reg(add_pell_one);
  reg(add_pell_two);
  reg(add_pell_oracle);
  reg(add_search);
  reg(add_classify);
  reg(add_markov_tree);
  reg(add_continuant);
  reg(add_r_match);

  std::vector<const char*> argv{"cayley"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    for (auto& [sub, action] : actions) {
      if (sub->parsed()) return action();
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kUsageError;
}

}  // namespace cayley::cli
