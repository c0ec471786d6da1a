#include "sumlab/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "sumlab/formulas.hpp"
#include "sumlab/group.hpp"
#include "sumlab/harness.hpp"
#include "sumlab/numeric.hpp"
#include "sumlab/search.hpp"
#include "sumlab/sumset.hpp"

namespace sumlab {

namespace {

/// A usage problem detected after CLI11 accepted the arguments.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { text, json, csv };

std::string csv_field(const Json& value) {
  std::string s;
  if (value.is_string()) {
    s = value.get<std::string>();
  } else if (value.is_null()) {
    s = "";
  } else if (value.is_array()) {
    for (const Json& item : value) {
      if (!s.empty()) s += ' ';
      s += item.is_string() ? item.get<std::string>() : item.dump();
    }
  } else {
    s = value.dump();
  }
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

std::string text_value(const Json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_null()) return "-";
  return value.dump();
}

/// Prints a flat record. Arrays become indented lines in text and
/// space-joined fields in CSV.
void emit(std::ostream& out, Format format, const Json& record) {
  switch (format) {
    case Format::json:
      out << record.dump() << '\n';
      return;
    case Format::csv: {
      bool first = true;
      for (const auto& [key, value] : record.items()) {
        out << (first ? "" : ",") << key;
        first = false;
      }
      out << '\n';
      first = true;
      for (const auto& [key, value] : record.items()) {
        out << (first ? "" : ",") << csv_field(value);
        first = false;
      }
      out << '\n';
      return;
    }
    case Format::text: {
      std::size_t width = 0;
      for (const auto& [key, value] : record.items()) width = std::max(width, key.size());
      for (const auto& [key, value] : record.items()) {
        if (value.is_array()) {
          out << key << ":" << (value.empty() ? " (none)" : "") << '\n';
          for (const Json& item : value) out << "  " << text_value(item) << '\n';
        } else {
          out << key << ':' << std::string(width - key.size() + 1, ' ') << text_value(value) << '\n';
        }
      }
      return;
    }
  }
}

Json known_json(const KnownValue& k) {
  switch (k.status) {
    case ValueStatus::exact: return *k.value;
    case ValueStatus::lower_bound: return ">= " + std::to_string(*k.value);
    case ValueStatus::upper_bound: return "<= " + std::to_string(*k.value);
    case ValueStatus::undefined: return "undefined";
    case ValueStatus::unknown: return nullptr;
  }
  return nullptr;
}

std::string structure_tag(const GroupSpec& group, const ElementSet& set) {
  const WitnessClassification c = classify_witness(group, set);
  std::vector<std::string> tags;
  if (c.is_ap) tags.push_back("ap(d=" + std::to_string(c.ap_difference) + ")");
  if (c.in_prime_coset) tags.push_back("prime-coset");
  if (c.coset_union_profile && c.coset_union_profile->full_cosets > 0) {
    const auto& p = *c.coset_union_profile;
    const int rest = set.size() - p.full_cosets * p.d;
    std::string tag = std::to_string(p.full_cosets) + (p.full_cosets == 1 ? " coset" : " cosets") +
                      " of the order-" + std::to_string(p.d) + " subgroup";
    if (rest > 0) tag += " + " + std::to_string(rest) + (rest == 1 ? " element" : " elements");
    tags.push_back(tag);
  }
  if (c.is_cube) tags.push_back("cube");
  tags.emplace_back(to_string(c.symmetry));
  std::string out;
  for (const std::string& t : tags) out += (out.empty() ? "" : ", ") + t;
  return out;
}

struct Globals {
  std::string group;
  std::string format = "text";
  unsigned jobs = 0;
  std::string out_file;
  bool resume = false;
  std::uint64_t budget = SearchLimits{}.budget;
};

GroupSpec need_group(const Globals& g) {
  if (g.group.empty()) throw UsageError("--group is required");
  return GroupSpec::parse(g.group);
}

SearchLimits limits_of(const Globals& g) {
  SearchLimits limits;
  limits.budget = g.budget;
  limits.threads = g.jobs;
  return limits;
}

Format format_of(const Globals& g) {
  if (g.format == "json") return Format::json;
  if (g.format == "csv") return Format::csv;
  return Format::text;
}

// ---------------------------------------------------------------------------

int cmd_group(const Globals& gl, std::ostream& out) {
  const GroupSpec g = need_group(gl);
  Json r;
  r["group"] = g.to_string();
  r["invariant_factors"] = g.invariant_factors();
  r["order"] = g.order();
  r["exponent"] = g.exponent();
  r["rank"] = g.rank();
  r["smallest_prime"] = g.smallest_prime();
  r["involutions"] = involution_count(g);
  r["cyclic"] = g.is_cyclic();
  r["elementary_abelian"] = g.is_elementary_abelian();
  emit(out, format_of(gl), r);
  return kExitOk;
}

struct HSelection {
  std::optional<int> h;
  bool n0 = false;
  bool n = false;

  std::string label() const { return h ? std::to_string(*h) : n0 ? "N0" : "N"; }
};

void check_h(const HSelection& sel, bool allow_n) {
  const int count = (sel.h ? 1 : 0) + (sel.n0 ? 1 : 0) + (sel.n ? 1 : 0);
  if (count != 1) throw UsageError(allow_n ? "give exactly one of --h, --N0, --N" : "give exactly one of --h, --N0");
}

int cmd_sumset(const Globals& gl, const std::string& set_text, const HSelection& sel, const std::string& kind_text,
               std::ostream& out) {
  const GroupSpec g = need_group(gl);
  const ElementSet a = parse_set(g, set_text);
  check_h(sel, true);
  const SumsetKind kind = parse_sumset_kind(kind_text);
  ElementSet s;
  std::string kind_label(to_string(kind));
  if (sel.h) {
    if (*sel.h < 0) throw UsageError("--h must be non-negative");
    s = sumset(g, a, *sel.h, kind);
  } else if (kind == SumsetKind::restricted) {
    s = sigma(g, a, sel.n0);
    kind_label = sel.n0 ? "sigma" : "sigma*";
  } else {
    s = span(g, a);
    kind_label = "span";
  }
  Json r;
  r["group"] = g.to_string();
  r["set"] = format_set(g, a);
  r["h"] = sel.label();
  r["kind"] = kind_label;
  r["size"] = s.size();
  r["sumset"] = format_set(g, s);
  emit(out, format_of(gl), r);
  return kExitOk;
}

/// Formula values printed beside a search minimum.
Json min_formulas(const GroupSpec& g, int m, const HSelection& sel, SumsetKind kind, SetFilter filter) {
  Json f = Json::object();
  const int n = g.order();
  if (filter != SetFilter::all) return f;
  if (sel.h) {
    const int h = *sel.h;
    switch (kind) {
      case SumsetKind::fold:
        f["u"] = u(n, m, h);
        break;
      case SumsetKind::restricted:
        if (g.is_cyclic() && h >= 1 && h <= m) {
          f["u_hat"] = u_hat(n, m, h);
          f["conjectured"] = rho_hat_conjectured(n, m, h);
        }
        if (h == 2 && m >= 2) f["upper_bound"] = rho_hat2_bounds(g, m).upper;
        break;
      case SumsetKind::signed_:
        f["u_pm"] = u_pm(g, m, h);
        if (h >= 2) f["conjectured"] = rho_pm_conjectured(g, m, h);
        break;
    }
  } else if (kind == SumsetKind::restricted) {
    if (sel.n0 && g.is_cyclic()) f["u_sigma"] = u_sigma(n, m);
  } else if (g.is_cyclic()) {
    f["rho_span"] = rho_span(n, m);
  }
  return f;
}

int cmd_min(const Globals& gl, int m, const HSelection& sel, const std::string& kind_text,
            const std::string& filter_text, const std::string& reduction_text, int sample, std::ostream& out) {
  const GroupSpec g = need_group(gl);
  check_h(sel, true);
  SearchTask task{g,
                  m,
                  sel.h,
                  parse_sumset_kind(kind_text),
                  sel.n,
                  parse_set_filter(filter_text),
                  parse_reduction(reduction_text),
                  limits_of(gl)};
  if (!sel.h && task.kind != SumsetKind::restricted && sel.n) {
    throw UsageError("--N applies to --kind restricted only");
  }
  const SearchResult result = min_size(task);
  const Json formulas = min_formulas(g, m, sel, task.kind, task.filter);

  Json r;
  r["group"] = g.to_string();
  r["m"] = m;
  r["h"] = sel.label();
  r["kind"] = std::string(to_string(task.kind));
  r["filter"] = std::string(to_string(task.filter));
  r["oracle"] = result.value;
  for (const auto& [name, value] : formulas.items()) r[name] = value;
  if (formulas.contains("conjectured")) {
    r["difference"] = result.value - formulas["conjectured"].get<long>();
  } else if (!formulas.empty()) {
    r["difference"] = result.value - formulas.begin()->get<long>();
  }
  r["reduction"] = std::string(to_string(result.reduction));
  r["representatives"] = result.representatives;
  r["witness_count"] = result.witnesses.size();
  r["truncated"] = result.truncated;
  r["witness_cap"] = result.witness_cap;
  Json witnesses = Json::array();
  const std::size_t shown = std::min<std::size_t>(result.witnesses.size(), static_cast<std::size_t>(std::max(sample, 0)));
  for (std::size_t i = 0; i < shown; ++i) {
    const ElementSet& w = result.witnesses[i];
    if (format_of(gl) == Format::json) {
      witnesses.push_back(Json{{"set", format_set(g, w)}, {"structure", structure_tag(g, w)}});
    } else {
      witnesses.push_back(format_set(g, w) + "  " + structure_tag(g, w));
    }
  }
  r["witnesses"] = witnesses;
  emit(out, format_of(gl), r);
  return kExitOk;
}

int cmd_critical(const Globals& gl, const HSelection& sel, const std::string& kind_text, bool exclude_zero,
                 std::ostream& out) {
  const GroupSpec g = need_group(gl);
  check_h(sel, false);
  const SumsetKind kind = parse_sumset_kind(kind_text);
  if (exclude_zero && (sel.h || kind != SumsetKind::restricted)) {
    throw UsageError("--exclude-zero applies to --N0 --kind restricted only");
  }
  const SearchLimits limits = limits_of(gl);
  CriticalResult c;
  Json formula;
  if (sel.h) {
    if (*sel.h < 1) throw UsageError("--h must be positive");
    c = critical_number(g, *sel.h, kind, limits);
    if (kind == SumsetKind::fold) formula = chi(g, *sel.h);
    if (kind == SumsetKind::restricted) formula = known_json(chi_hat_known(g, *sel.h));
  } else if (kind == SumsetKind::restricted) {
    c = critical_sigma(g, exclude_zero, limits);
    if (g.order() >= 10) formula = chi_hat_sigma(g) - (exclude_zero ? 1 : 0);
  } else {
    c = critical_span(g, limits);
    formula = chi_span(g);
  }
  Json r;
  r["group"] = g.to_string();
  r["h"] = sel.label();
  r["kind"] = std::string(to_string(kind));
  r["exclude_zero"] = exclude_zero;
  r["critical"] = c.value.status == ValueStatus::undefined ? Json("undefined") : Json(*c.value.value);
  r["formula"] = formula;
  r["noncovering_witness"] = c.witness ? Json(format_set(g, *c.witness)) : Json(nullptr);
  emit(out, format_of(gl), r);
  return kExitOk;
}

int cmd_construct(const Globals& gl, const std::string& which, int n, int m, int d, const BParams& params,
                  std::optional<int> h, std::ostream& out) {
  ElementSet s;
  if (which == "A") {
    s = construct_A(n, m, d);
  } else if (which == "B") {
    validate_B(n, m, d, params);
    s = construct_B(n, m, d, params);
  } else if (which == "C") {
    s = construct_C(n, m, d);
  } else {
    throw UsageError("construction must be A, B or C");
  }
  const GroupSpec g = GroupSpec::cyclic(n);
  Json r;
  r["construction"] = which;
  r["n"] = n;
  r["m"] = m;
  r["d"] = d;
  r["set"] = format_set(g, s);
  if (h) {
    r["h"] = *h;
    r["fold_size"] = h_fold_sumset(g, s, *h).size();
    r["restricted_size"] = restricted_sumset(g, s, *h).size();
  }
  r["sigma_size"] = sigma(g, s, true).size();
  emit(out, format_of(gl), r);
  return kExitOk;
}

int cmd_classify(const Globals& gl, const std::string& set_text, std::ostream& out) {
  const GroupSpec g = need_group(gl);
  const ElementSet a = parse_set(g, set_text);
  const WitnessClassification c = classify_witness(g, a);
  Json r;
  r["group"] = g.to_string();
  r["set"] = format_set(g, a);
  r["size"] = a.size();
  r["is_ap"] = c.is_ap;
  r["ap_difference"] = c.is_ap ? Json(c.ap_difference) : Json(nullptr);
  r["in_prime_coset"] = c.in_prime_coset;
  if (c.coset_union_profile) {
    r["coset_subgroup_order"] = c.coset_union_profile->d;
    r["full_cosets"] = c.coset_union_profile->full_cosets;
    r["partial_cosets"] = c.coset_union_profile->partial_cosets;
  } else {
    r["coset_subgroup_order"] = nullptr;
    r["full_cosets"] = nullptr;
    r["partial_cosets"] = nullptr;
  }
  r["is_cube"] = c.is_cube;
  r["symmetry"] = std::string(to_string(c.symmetry));
  if (g.is_cyclic() && is_prime(g.order()) && !a.empty()) {
    const DilatedNorm norm = min_dilated_norm(g.order(), a);
    r["min_dilated_norm"] = norm.value;
    r["norm_dilation"] = norm.best_b;
  } else {
    r["min_dilated_norm"] = nullptr;
    r["norm_dilation"] = nullptr;
  }
  r["structure"] = structure_tag(g, a);
  emit(out, format_of(gl), r);
  return kExitOk;
}

int cmd_verify_list(const Globals& gl, std::ostream& out) {
  const Format format = format_of(gl);
  if (format == Format::json) {
    Json list = Json::array();
    for (const Claim& c : claim_registry()) {
      list.push_back(Json{{"id", c.id}, {"kind", std::string(to_string(c.kind))}, {"statement", c.statement},
                          {"domain", c.domain}});
    }
    out << Json{{"claims", list}}.dump() << '\n';
  } else if (format == Format::csv) {
    out << "id,kind,statement,domain\n";
    for (const Claim& c : claim_registry()) {
      out << c.id << ',' << to_string(c.kind) << ',' << csv_field(c.statement) << ',' << csv_field(c.domain) << '\n';
    }
  } else {
    for (const Claim& c : claim_registry()) {
      out << c.id << "  [" << to_string(c.kind) << "]  " << c.statement << '\n';
    }
  }
  return kExitOk;
}

int cmd_verify(const Globals& gl, const std::vector<std::string>& ids, const RangeSpec& range, bool progress,
               std::ostream& out, std::ostream& err) {
  std::vector<const Claim*> claims;
  for (const std::string& id : ids) {
    const Claim* c = find_claim(id);
    if (c == nullptr) {
      err << "error: unknown claim '" << id << "' (see verify --list)\n";
      return kExitUsage;
    }
    claims.push_back(c);
  }
  if (claims.empty()) throw UsageError("name at least one claim, or pass --all or --list");
  if (gl.resume && gl.out_file.empty()) throw UsageError("--resume needs --out");

  RunOptions options;
  options.range = range;
  options.jobs = gl.jobs == 0 ? 1 : gl.jobs;
  options.limits.budget = gl.budget;
  options.progress = progress ? &err : nullptr;

  // Without --out, text streams records live; json and csv collect them so
  // that the output stays a single object or a single table.
  const Format format = format_of(gl);
  std::ofstream file;
  std::stringstream buffer;
  std::ostream* sink = format == Format::text ? &out : static_cast<std::ostream*>(&buffer);
  if (!gl.out_file.empty()) {
    if (gl.resume) {
      std::ifstream existing(gl.out_file);
      if (existing) options.skip = completed_points(existing);
    }
    file.open(gl.out_file, gl.resume ? std::ios::app : std::ios::trunc);
    if (!file) {
      err << "error: cannot open '" << gl.out_file << "' for writing\n";
      return kExitUsage;
    }
    sink = &file;
  }

  RunSummary total;
  std::optional<std::string> failure;
  try {
    for (const Claim* c : claims) {
      const RunSummary s = run_claim(*c, options, *sink);
      total.points += s.points;
      total.skipped += s.skipped;
      total.match += s.match;
      total.discrepancy += s.discrepancy;
      total.refused += s.refused;
      total.undefined += s.undefined;
      err << c->id << ": " << s.points << " points, " << s.skipped << " skipped, " << s.match << " match, "
          << s.discrepancy << " discrepancy, " << s.refused << " refused, " << s.undefined << " undefined\n";
    }
  } catch (const TheoremFailure& e) {
    err << "THEOREM FAILURE: " << e.what() << '\n';
    failure = e.what();
  }

  Json counts;
  counts["points"] = total.points;
  counts["skipped"] = total.skipped;
  counts["match"] = total.match;
  counts["discrepancy"] = total.discrepancy;
  counts["refused"] = total.refused;
  counts["undefined"] = total.undefined;

  if (file.is_open()) {
    file.close();
    if (!file) {
      err << "error: failed writing '" << gl.out_file << "'\n";
      return kExitUsage;
    }
    std::ifstream back(gl.out_file);
    const std::string csv = summarize(back);
    const std::string summary_path = gl.out_file + ".csv";
    std::ofstream summary(summary_path, std::ios::trunc);
    summary << csv;
    if (!summary) {
      err << "error: failed writing '" << summary_path << "'\n";
      return kExitUsage;
    }
    if (format == Format::csv) {
      out << csv;
    } else {
      counts["report"] = gl.out_file;
      counts["summary"] = summary_path;
      emit(out, format, counts);
    }
  } else if (format == Format::csv) {
    out << summarize(buffer);
  } else if (format == Format::json) {
    Json records = Json::array();
    for (const ClaimRecord& r : read_records(buffer)) records.push_back(r.to_json());
    counts["records"] = std::move(records);
    if (failure) counts["theorem_failure"] = *failure;
    out << counts.dump() << '\n';
  }
  if (failure) return kExitTheoremFailure;
  return total.discrepancy > 0 ? kExitConjectureData : kExitOk;
}

int cmd_summarize(const std::string& path, std::ostream& out) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  out << summarize(in);
  return kExitOk;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exhaustive computation of minimum sumset sizes and critical numbers in finite abelian groups",
               "sumlab"};
  app.set_help_flag("--help", "print help");  // -h would clash with --h
  app.require_subcommand(1);
  Globals gl;
  app.add_option("--group", gl.group, "group type, e.g. 12, 2x6, 3x3");
  app.add_option("--format", gl.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--jobs", gl.jobs, "worker threads (0: all cores)");
  app.add_option("--out", gl.out_file, "report file for verify");
  app.add_flag("--resume", gl.resume, "skip points already recorded in --out");
  app.add_option("--budget", gl.budget, "maximum estimated orbit count per search")->check(CLI::PositiveNumber);

  HSelection sel;
  std::string set_text;
  std::string kind_text = "fold";
  auto add_h = [&](CLI::App* sub, bool allow_n) {
    sub->add_option("--h", sel.h, "number of summands");
    sub->add_flag("--N0", sel.n0, "any number of summands, including none");
    if (allow_n) sub->add_flag("--N", sel.n, "any positive number of summands");
    sub->add_option("--kind", kind_text, "fold, restricted or signed")
        ->check(CLI::IsMember({"fold", "restricted", "signed"}));
  };

  CLI::App* group_cmd = app.add_subcommand("group", "describe a group");

  CLI::App* sumset_cmd = app.add_subcommand("sumset", "compute a sumset");
  sumset_cmd->add_option("--set", set_text, "set literal, e.g. {0,5,10}")->required();
  add_h(sumset_cmd, true);

  CLI::App* min_cmd = app.add_subcommand("min", "minimum sumset size over all m-subsets");
  int m = 0;
  std::string filter_text = "all";
  std::string reduction_text = "auto";
  int sample = 10;
  min_cmd->add_option("--m", m, "subset size")->required();
  add_h(min_cmd, true);
  min_cmd->add_option("--filter", filter_text, "all, symmetric, near-symmetric or asymmetric");
  min_cmd->add_option("--reduction", reduction_text, "orbit reduction");
  min_cmd->add_option("--witnesses", sample, "number of witnesses to print");

  CLI::App* critical_cmd = app.add_subcommand("critical", "least m such that every m-subset covers the group");
  bool exclude_zero = false;
  add_h(critical_cmd, false);
  critical_cmd->add_flag("--exclude-zero", exclude_zero, "subsets of G \\ {0} only");

  CLI::App* construct_cmd = app.add_subcommand("construct", "build a coset-progression set in Z_n");
  std::string which;
  int n = 0;
  int d = 0;
  BParams params;
  std::optional<int> construct_h;
  construct_cmd->add_option("which", which, "A, B or C")->required();
  construct_cmd->add_option("--n", n)->required();
  construct_cmd->add_option("--m", m)->required();
  construct_cmd->add_option("--d", d)->required();
  construct_cmd->add_option("--k1", params.k1);
  construct_cmd->add_option("--k2", params.k2);
  construct_cmd->add_option("--j0", params.j0);
  construct_cmd->add_option("--g", params.g);
  construct_cmd->add_option("--h", construct_h, "also report sumset sizes for this h");

  CLI::App* verify_cmd = app.add_subcommand("verify", "check registered claims over their parameter grids");
  std::vector<std::string> ids;
  bool list = false;
  bool all = false;
  bool quiet = false;
  RangeSpec range;
  verify_cmd->add_option("claims", ids, "claim ids");
  verify_cmd->add_flag("--list", list, "list registered claims");
  verify_cmd->add_flag("--all", all, "run every registered claim");
  verify_cmd->add_flag("--quiet", quiet, "no per-point progress");
  verify_cmd->add_option("--min-order", range.min_order);
  verify_cmd->add_option("--max-order", range.max_order);
  verify_cmd->add_option("--max-h", range.max_h);
  verify_cmd->add_option("--primes-to", range.primes_to);

  CLI::App* classify_cmd = app.add_subcommand("classify", "structure of a set");
  classify_cmd->add_option("--set", set_text, "set literal")->required();

  CLI::App* summarize_cmd = app.add_subcommand("summarize", "CSV summary of a report file");
  std::string report_path;
  summarize_cmd->add_option("report", report_path)->required();

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (group_cmd->parsed()) return cmd_group(gl, out);
    if (sumset_cmd->parsed()) return cmd_sumset(gl, set_text, sel, kind_text, out);
    if (min_cmd->parsed()) return cmd_min(gl, m, sel, kind_text, filter_text, reduction_text, sample, out);
    if (critical_cmd->parsed()) return cmd_critical(gl, sel, kind_text, exclude_zero, out);
    if (construct_cmd->parsed()) return cmd_construct(gl, which, n, m, d, params, construct_h, out);
    if (classify_cmd->parsed()) return cmd_classify(gl, set_text, out);
    if (summarize_cmd->parsed()) return cmd_summarize(report_path, out);
    if (verify_cmd->parsed()) {
      if (list) return cmd_verify_list(gl, out);
      if (all) {
        ids.clear();
        for (const Claim& c : claim_registry()) ids.push_back(c.id);
      }
      return cmd_verify(gl, ids, range, !quiet, out, err);
    }
  } catch (const SearchRefused& e) {
    err << "error: " << e.what() << " (estimated " << e.estimate() << " orbits; raise --budget)\n";
    return kExitUsage;
  } catch (const SummaryError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const EmptySearchSpace& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace sumlab
