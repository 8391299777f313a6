#include "addcomb/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "addcomb/codec.hpp"
#include "addcomb/descent.hpp"
#include "addcomb/error.hpp"
#include "addcomb/search.hpp"

namespace addcomb {

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct Options {
  std::string ambient;
  std::string x;
  std::string y;
  std::vector<std::string> sets;
  std::string z;
  std::string element;
  std::string side = "right";
  std::string which;
  std::string spec;
  std::string instance;
  bool sym = false;
  std::size_t budget = kDefaultBudget;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> workers;
  std::string out_file;
  std::string format = "json";
  bool verbose = false;
};

// Inline JSON when the argument looks like a document, otherwise a file path.
json load(const std::string& arg, const char* what) {
  std::string text = arg;
  const auto first = arg.find_first_not_of(" \t\n");
  const bool inline_doc = first != std::string::npos &&
                          (arg[first] == '{' || arg[first] == '[' || arg[first] == '"' ||
                           arg[first] == '-' || std::isdigit(static_cast<unsigned char>(arg[first])));
  if (!inline_doc) {
    std::ifstream in(arg);
    if (!in) throw Error(ErrorCode::malformed_description, std::string("cannot read ") + what + " file '" + arg + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::malformed_description, std::string("bad JSON for ") + what + ": " + e.what());
  }
}

void require_flag(const std::string& v, const char* flag) {
  if (v.empty()) throw CLI::RequiredError(flag);
}

AmbientPtr ambient_of(const Options& o) {
  require_flag(o.ambient, "--ambient");
  return make_ambient(load(o.ambient, "ambient"));
}

FinSet set_of(const AmbientPtr& a, const std::string& arg, const char* flag) {
  require_flag(arg, flag);
  return decode_set(a, load(arg, flag));
}

// --sets when given, else --x and --y.
std::vector<FinSet> tuple_of(const AmbientPtr& a, const Options& o) {
  std::vector<FinSet> out;
  if (!o.sets.empty()) {
    for (const auto& s : o.sets) out.push_back(set_of(a, s, "--sets"));
    return out;
  }
  out.push_back(set_of(a, o.x, "--x"));
  out.push_back(set_of(a, o.y, "--y"));
  return out;
}

void flatten(const json& j, const std::string& path, std::ostream& os) {
  if (j.is_object() && !j.empty()) {
    for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, os);
  } else if (j.is_array() && !j.empty() && (j.front().is_object())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", os);
  } else {
    os << path << ": " << j.dump() << "\n";
  }
}

void emit(const json& doc, const Options& o, std::ostream& out) {
  std::ostringstream os;
  if (o.format == "table")
    flatten(doc, "", os);
  else
    os << doc.dump(2) << "\n";
  if (o.out_file.empty()) {
    out << os.str();
    return;
  }
  std::ofstream f(o.out_file);
  if (!f) throw Error(ErrorCode::malformed_description, "cannot write '" + o.out_file + "'");
  f << os.str();
}

int cmd_gamma(const Options& o, json& doc) {
  const auto a = ambient_of(o);
  const auto x = set_of(a, o.x, "--x");
  doc = to_json(gamma_set(x, o.budget), *a);
  return kOk;
}

int cmd_sumset(const Options& o, json& doc) {
  const auto a = ambient_of(o);
  const auto sets = tuple_of(a, o);
  const auto s = sumset(sets);
  doc = {{"sumset", encode(s)}, {"size", s.size()}};
  return kOk;
}

int cmd_difference(const Options& o, json& doc) {
  const auto a = ambient_of(o);
  const auto x = set_of(a, o.x, "--x");
  const auto y = set_of(a, o.y, "--y");
  const auto s = difference(o.side == "left" ? Side::left : Side::right, x, y);
  doc = {{"difference", encode(s)}, {"size", s.size()}, {"side", o.side}};
  return kOk;
}

int cmd_ord(const Options& o, json& doc) {
  const auto a = ambient_of(o);
  if (!o.element.empty()) {
    const auto e = decode_element(*a, load(o.element, "--element"));
    doc = {{"ord", encode(ord_elem(*a, e, o.budget))}};
  } else {
    doc = {{"ord", encode(ord_set(set_of(a, o.x, "--x"), o.budget))}};
  }
  return kOk;
}

int cmd_generated(const Options& o, json& doc) {
  const auto a = ambient_of(o);
  const auto x = set_of(a, o.x, "--x");
  doc = to_json(o.sym ? generated_sym(x, o.budget) : generated(x, o.budget));
  return kOk;
}

int cmd_davenport(const Options& o, json& doc) {
  const auto a = ambient_of(o);
  const auto x = set_of(a, o.x, "--x");
  const auto y = set_of(a, o.y, "--y");
  require_flag(o.z, "--z");
  const auto p = davenport_transform(x, y, decode_element(*a, load(o.z, "--z")));
  doc = to_json(p, *a);
  return p.all_hold() ? kOk : kViolation;
}

int cmd_check(const Options& o, json& doc) {
  require_flag(o.which, "--which");
  const auto& checker = find_checker(o.which);
  const auto a = ambient_of(o);
  const auto sets = tuple_of(a, o);
  if (checker.arity != 0 && sets.size() != checker.arity)
    throw CLI::ValidationError("--which " + o.which,
                               "expects " + std::to_string(checker.arity) + " sets");
  GammaCache cache;
  auto outcome = checker.run(sets, o.budget, &cache);
  doc = {{"checker", checker.id}, {"verdict", std::move(outcome.verdict)},
         {"violated", outcome.violated}};
  return outcome.violated ? kViolation : kOk;
}

int cmd_descent(const Options& o, json& doc) {
  const auto a = ambient_of(o);
  const auto x = set_of(a, o.x, "--x");
  const auto y = set_of(a, o.y, "--y");
  const auto t = descent(x, y, o.budget);
  doc = to_json(t, *a);
  bool ok = true;
  for (const auto& s : t.steps) ok = ok && s.ledger_holds && s.pair.all_hold() && s.size_decreases;
  return ok ? kOk : kViolation;
}

int cmd_search(const Options& o, json& doc, std::ostream& err) {
  require_flag(o.spec, "--spec");
  auto doc_spec = load(o.spec, "--spec");
  // --seed fills or overrides the seed of a random mode.
  if (o.seed && doc_spec.is_object() && doc_spec.contains("mode")) {
    auto& m = doc_spec["mode"];
    if (m.is_string()) m = json{{"kind", m}};
    if (m.is_object()) m["seed"] = *o.seed;
  }
  auto spec = parse_spec(doc_spec);
  if (o.workers) spec.workers = *o.workers;
  if (o.budget != kDefaultBudget) spec.budget = o.budget;
  const auto report = run_search(spec);
  doc = to_json(report);
  doc["spec"] = to_json(spec);
  if (o.verbose)
    err << "checked " << report.instances_checked << " instances in " << report.elapsed_seconds
        << "s\n";
  return report.violations.empty() ? kOk : kViolation;
}

int cmd_replay(const Options& o, json& doc) {
  require_flag(o.instance, "--instance");
  const auto r = replay(load(o.instance, "--instance"));
  doc = {{"verdict", r.outcome.verdict},
         {"violated", r.outcome.violated},
         {"matches_recorded", r.matches_recorded}};
  return r.outcome.violated ? kViolation : kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sumsets, Cauchy-Davenport constants and Davenport transforms"};
  app.name("addcomb");
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--ambient", o.ambient, "ambient description (JSON or file)");
    sub->add_option("--budget", o.budget, "element budget for generation and orders");
    sub->add_option("--out", o.out_file, "write the report to this file");
    sub->add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}));
    sub->add_flag("-v,--verbose", o.verbose, "progress notes on standard error");
  };
  auto xy = [&](CLI::App* sub) {
    sub->add_option("--x", o.x, "set X (JSON or file)");
    sub->add_option("--y", o.y, "set Y (JSON or file)");
  };

  auto* gamma = app.add_subcommand("gamma", "Cauchy-Davenport constant of --x");
  common(gamma);
  gamma->add_option("--x", o.x, "set X");
  auto* sum = app.add_subcommand("sumset", "X + Y, or the sum of every --sets entry");
  common(sum);
  xy(sum);
  sum->add_option("--sets", o.sets, "sets of a tuple, one per flag")->allow_extra_args(false);
  auto* diff = app.add_subcommand("difference", "difference set X - Y");
  common(diff);
  xy(diff);
  diff->add_option("--side", o.side, "right (X - Y) or left (-Y + X)")
      ->check(CLI::IsMember({"left", "right"}));
  auto* ord = app.add_subcommand("ord", "order of --element or of the set --x");
  common(ord);
  ord->add_option("--x", o.x, "set X");
  ord->add_option("--element", o.element, "single element");
  auto* gen = app.add_subcommand("generated", "subsemigroup generated by --x");
  common(gen);
  gen->add_option("--x", o.x, "set X");
  gen->add_flag("--sym", o.sym, "adjoin inverses of units first");
  auto* dav = app.add_subcommand("davenport", "Davenport transform at --z");
  common(dav);
  xy(dav);
  dav->add_option("--z", o.z, "gap element");
  auto* check = app.add_subcommand("check", "run a theorem checker");
  common(check);
  xy(check);
  check->add_option("--sets", o.sets, "sets of a tuple, one per flag")->allow_extra_args(false);
  check->add_option("--which", o.which, "checker")
      ->check(CLI::IsMember({"theorem", "prop13", "udt", "hs", "zn", "weaker", "conjecture"}));
  auto* desc = app.add_subcommand("descent", "Davenport descent trace");
  common(desc);
  xy(desc);
  auto* search = app.add_subcommand("search", "exhaustive or random search");
  common(search);
  search->add_option("--spec", o.spec, "search spec (JSON or file)");
  search->add_option("--seed", o.seed, "seed for random mode");
  search->add_option("--workers", o.workers, "worker threads")->check(CLI::Range(1, 1024));
  auto* rep = app.add_subcommand("replay", "re-run a recorded violation");
  common(rep);
  rep->add_option("--instance", o.instance, "instance encoding (JSON or file)");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    json doc;
    int status = kOk;
    if (*gamma) status = cmd_gamma(o, doc);
    else if (*sum) status = cmd_sumset(o, doc);
    else if (*diff) status = cmd_difference(o, doc);
    else if (*ord) status = cmd_ord(o, doc);
    else if (*gen) status = cmd_generated(o, doc);
    else if (*dav) status = cmd_davenport(o, doc);
    else if (*check) status = cmd_check(o, doc);
    else if (*desc) status = cmd_descent(o, doc);
    else if (*search) status = cmd_search(o, doc, err);
    else status = cmd_replay(o, doc);
    emit(doc, o, out);
    return status;
  } catch (const CLI::Error& e) {
    err << "usage error: " << e.what() << "\n";
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kUsage;
}

}  // namespace addcomb
