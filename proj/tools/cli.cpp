#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "kwise/bounds.hpp"
#include "kwise/json_io.hpp"
#include "kwise/oracle.hpp"
#include "kwise/realize_counting.hpp"
#include "kwise/realize_measure.hpp"
#include "kwise/witness.hpp"

namespace kwise::cli {
namespace {

struct InstanceFlags {
  std::string sizes;
  int k = 0;
  std::string mode = "counting";
  std::string instance_file;
};

void add_instance_flags(CLI::App* cmd, InstanceFlags& f) {
  cmd->add_option("--sizes", f.sizes, "comma separated sizes, e.g. 1,1,1 or 1/2,3");
  cmd->add_option("--k", f.k, "intersection bound: every k sets have empty intersection");
  cmd->add_option("--mode", f.mode, "counting or measure")
      ->check(CLI::IsMember({"counting", "measure"}));
  cmd->add_option("--instance", f.instance_file,
                  "JSON instance file, instead of --sizes/--k/--mode");
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (!text.empty() && text.back() == ',') parts.emplace_back();
  return parts;
}

Json read_json_file(const std::string& path) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-") {
    file.open(path);
    if (!file)
      throw Error(ErrorKind::invalid_input, "cannot open " + path);
    in = &file;
  }
  try {
    return Json::parse(*in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::invalid_input,
                "malformed JSON in " + path + ": " + e.what());
  }
}

Instance load_instance(const InstanceFlags& f) {
  if (!f.instance_file.empty()) return instance_from_json(read_json_file(f.instance_file));
  if (f.sizes.empty() || f.k == 0)
    throw Error(ErrorKind::invalid_input,
                "give --sizes and --k, or --instance FILE");
  std::vector<Rational> sizes;
  for (const auto& s : split_commas(f.sizes)) sizes.push_back(parse_rational(s));
  return Instance(std::move(sizes), f.k, parse_mode(f.mode));
}

Json error_json(const std::string& kind, const std::string& message) {
  Json j;
  j["error"] = kind;
  j["message"] = message;
  return j;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

void merge(Json& into, const Json& from) {
  for (const auto& [key, value] : from.items()) into[key] = value;
}

int cmd_bounds(const Instance& inst, const std::optional<std::string>& target,
               std::ostream& out) {
  Json j;
  j["instance"] = to_json(inst);
  merge(j, to_json(bounds(inst)));
  int code = kOk;
  if (target) {
    const Rational a = parse_rational(*target);
    const bool ok = feasible(inst, a);
    j["a"] = to_string(a);
    j["feasible"] = ok;
    if (!ok) code = kRejected;
  }
  emit(out, j);
  return code;
}

int cmd_realize(const Instance& inst, const std::string& target,
                bool materialized, std::ostream& out) {
  const Rational a = parse_rational(target);
  try {
    const WeightSystem w = realize(inst, a);
    Json j;
    j["instance"] = to_json(inst);
    j["a"] = to_string(a);
    merge(j, to_json(w));
    if (materialized)
      j["materialization"] = to_json(materialize(w, inst.mode()));
    emit(out, j);
    return kOk;
  } catch (const InfeasibleError& e) {
    Json j = error_json(to_string(e.kind()), e.what());
    j["instance"] = to_json(inst);
    j["a"] = to_string(a);
    j["report"] = to_json(e.report());
    emit(out, j);
    return kRejected;
  }
}

int cmd_verify(const Instance& inst, const std::string& target,
               const std::string& witness_file, std::ostream& out) {
  const Rational a = parse_rational(target);
  const WeightSystem w = witness_from_json(read_json_file(witness_file), inst.n());
  const VerifyReport report = verify(w, inst, a);
  Json j;
  j["instance"] = to_json(inst);
  j["a"] = to_string(a);
  merge(j, to_json(report));
  emit(out, j);
  return report.verdict ? kOk : kRejected;
}

int cmd_oracle(const Instance& inst, const std::string& restrict_list,
               bool count, std::ostream& out) {
  if (inst.mode() != Mode::counting)
    throw Error(ErrorKind::mode_mismatch, "the oracle enumerates counting instances");
  std::vector<std::int64_t> sizes;
  for (const auto& a : inst.sizes()) {
    if (!a.get_num().fits_slong_p())
      throw Error(ErrorKind::too_large, "size exceeds oracle guardrail");
    sizes.push_back(a.get_num().get_si());
  }
  std::set<int> allowed;
  if (restrict_list.empty()) {
    for (int c = 1; c < inst.k(); ++c) allowed.insert(c);
  } else {
    for (const auto& c : split_commas(restrict_list)) {
      const Rational q = parse_rational(c);
      if (!is_integer(q) || q < 1 || q > inst.n())
        throw Error(ErrorKind::invalid_input, "bad cardinality in --restrict: " + c);
      allowed.insert(static_cast<int>(q.get_num().get_si()));
    }
  }
  const oracle::Enumeration e = oracle::enumerate(sizes, inst.k(), allowed, count);

  Json j;
  j["instance"] = to_json(inst);
  j["allowed_cardinalities"] = allowed;
  Json unions = Json::array();
  for (auto u : e.unions) unions.push_back(std::to_string(u));
  j["unions"] = std::move(unions);
  if (e.witness_count) j["witness_count"] = e.witness_count->get_str();
  emit(out, j);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Union sizes of set systems with empty k-wise intersections"};
  app.require_subcommand(1);

  InstanceFlags flags;
  std::optional<std::string> target;
  std::string witness_file;
  std::string restrict_list;
  bool materialized = false;
  bool count = false;
  int counter_n = 0;

  auto* bounds_cmd = app.add_subcommand("bounds", "feasible union interval");
  add_instance_flags(bounds_cmd, flags);
  bounds_cmd->add_option("--a", target, "also report whether this union size is feasible");

  auto* realize_cmd = app.add_subcommand("realize", "construct a witness for union size a");
  add_instance_flags(realize_cmd, flags);
  realize_cmd->add_option("--a", target, "target union size")->required();
  realize_cmd->add_flag("--materialize", materialized, "also emit explicit sets or blocks");

  auto* verify_cmd = app.add_subcommand("verify", "check a witness file");
  add_instance_flags(verify_cmd, flags);
  verify_cmd->add_option("--a", target, "claimed union size")->required();
  verify_cmd->add_option("--witness", witness_file, "witness JSON file, - for stdin")
      ->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "enumerate achievable unions (tiny instances)");
  add_instance_flags(oracle_cmd, flags);
  oracle_cmd->add_option("--restrict", restrict_list,
                         "only allow keys of these cardinalities, e.g. 3,4");
  oracle_cmd->add_flag("--count", count, "also count witnesses");

  auto* counter_cmd = app.add_subcommand(
      "counterexample", "all sizes 1, k = n: two-layer support cannot reach union 2");
  counter_cmd->add_option("--n", counter_n, "number of sets (5..7)")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    err << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    emit(out, error_json("invalid-input", e.what()));
    err << app.help();
    return kInvalid;
  }

  try {
    if (*counter_cmd) {
      emit(out, to_json(oracle::addendum_counterexample(counter_n)));
      return kOk;
    }
    const Instance inst = load_instance(flags);
    if (*bounds_cmd) return cmd_bounds(inst, target, out);
    if (*realize_cmd) return cmd_realize(inst, *target, materialized, out);
    if (*verify_cmd) return cmd_verify(inst, *target, witness_file, out);
    return cmd_oracle(inst, restrict_list, count, out);
  } catch (const Error& e) {
    emit(out, error_json(to_string(e.kind()), e.what()));
    return kInvalid;
  }
}

}  // namespace kwise::cli
