#include "cli.hpp"

#include "radokit/radokit.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#ifndef RADOKIT_VERSION
#define RADOKIT_VERSION "0.0.0"
#endif

namespace radokit::cli {

using ordered_json = nlohmann::ordered_json;

std::string content_digest(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

constexpr std::uint64_t default_budget = 10'000'000;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::uint64_t env_budget() {
  const char* v = std::getenv("RADOKIT_NODE_BUDGET");
  if (v == nullptr || *v == '\0') return default_budget;
  const auto parsed = parse_decimal(v);
  if (!parsed || *parsed <= 0 || !parsed->fits_ulong_p())
    throw InputError(std::string("RADOKIT_NODE_BUDGET is not a positive integer: ") + v);
  return parsed->get_ui();
}

struct Common {
  std::string file;
  std::string report_path;
  unsigned jobs = 1;
  bool timing = false;
};

struct Outcome {
  int code = ok;
  std::string name;
  ordered_json result;
  std::string summary;
};

std::vector<std::uint64_t> collect_primes(std::uint64_t up_to, const std::vector<std::uint64_t>& listed) {
  if (!listed.empty()) {
    for (auto p : listed)
      if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
    return listed;
  }
  if (up_to < 2) throw InputError("need --primes-up-to >= 2 or --primes");
  return primes_up_to(up_to);
}

ordered_json search_to_json(const SearchResult& r) {
  ordered_json j;
  j["outcome"] = outcome_name(r.outcome);
  j["radius"] = r.radius;
  j["nodes"] = r.nodes;
  if (r.outcome == SearchResult::Outcome::found) j["solution"] = solution_to_json(r.witness, r.group_colors);
  return j;
}

Coloring coloring_from_spec(const std::string& spec) {
  if (spec.rfind("smod:", 0) == 0) {
    const auto p = parse_decimal(spec.substr(5));
    if (!p || *p < 2 || !p->fits_ulong_p() || !is_prime(p->get_ui()))
      throw InputError("--coloring smod:P needs a prime P");
    return Coloring::smod(p->get_ui());
  }
  if (spec.rfind("file:", 0) == 0) return parse_coloring(read_file(spec.substr(5)));
  throw InputError("--coloring must be smod:P or file:PATH");
}

std::string join(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact tools for the k-columns condition of (D,k)-systems", "radokit"};
  app.set_version_flag("--version", RADOKIT_VERSION);
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  std::optional<std::uint64_t> budget_flag;
  app.add_option("--jobs", common.jobs, "Maximum worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--timing", common.timing, "Include wall time in the report");

  ordered_json params;
  std::function<Outcome()> run;
  std::string digest_source;

  auto add_file = [&](CLI::App* sub) { sub->add_option("FILE", common.file, "System JSON file")->required(); };
  auto add_report = [&](CLI::App* sub) { sub->add_option("--report", common.report_path, "Write the report here"); };
  auto budget = [&]() { return budget_flag ? *budget_flag : env_budget(); };
  auto load = [&]() {
    digest_source = read_file(common.file);
    return parse_system(digest_source);
  };

  // check-columns
  auto* cc = app.add_subcommand("check-columns", "Decide the classic columns condition");
  add_file(cc);
  add_report(cc);
  cc->callback([&] {
    run = [&]() -> Outcome {
      const DkSystem s = load();
      const auto cert = check_columns_condition(s.coefficient_matrix());
      if (cert) {
        if (!verify_columns_certificate(s.coefficient_matrix(), *cert))
          throw std::logic_error("columns certificate failed verification");
        return {ok, "satisfied", ordered_json{{"certificate", columns_certificate_to_json(*cert)}},
                "columns condition holds (" + std::to_string(cert->levels.size()) + " levels)"};
      }
      return {negative, "refuted", ordered_json::object(), "columns condition fails"};
    };
  });

  // check-kcolumns
  std::size_t max_t = 0;
  auto* kc = app.add_subcommand("check-kcolumns", "Decide the k-columns condition");
  add_file(kc);
  add_report(kc);
  kc->add_option("--max-t", max_t, "Largest level count to try (0: no cap)");
  kc->add_option("--node-budget", budget_flag, "Search node budget");
  kc->callback([&] {
    run = [&]() -> Outcome {
      const DkSystem s = load();
      params["max_t"] = max_t;
      params["node_budget"] = budget();
      const auto r = check_k_columns_condition(s, KSearchLimits{max_t, budget()});
      ordered_json res;
      res["nodes"] = r.nodes;
      res["levels_searched"] = r.levels_searched;
      switch (r.outcome) {
        case KSearchResult::Outcome::found:
          if (!verify_k_certificate(s, *r.certificate)) throw std::logic_error("k certificate failed verification");
          res["certificate"] = certificate_to_json(*r.certificate);
          return {ok, "satisfied", res, "k-columns condition holds"};
        case KSearchResult::Outcome::refuted:
          return {negative, "refuted", res, "k-columns condition fails"};
        case KSearchResult::Outcome::exhausted:
          return {budget_exhausted, "budget_exhausted", res, "node budget exhausted"};
      }
      throw std::logic_error("unreachable");
    };
  });

  // find-solution
  std::string coloring_spec;
  std::int64_t window = 0;
  auto* fs = app.add_subcommand("find-solution", "Search a semi-monochromatic solution in a window");
  add_file(fs);
  add_report(fs);
  fs->add_option("--coloring", coloring_spec, "smod:P or file:PATH")->required();
  fs->add_option("--window", window, "Window radius R")->required()->check(CLI::NonNegativeNumber);
  fs->add_option("--budget", budget_flag, "Search node budget");
  fs->callback([&] {
    run = [&]() -> Outcome {
      const DkSystem s = load();
      const Coloring chi = coloring_from_spec(coloring_spec);
      if (coloring_spec.rfind("file:", 0) == 0) digest_source += read_file(coloring_spec.substr(5));
      params["coloring"] = coloring_spec;
      params["window"] = window;
      params["budget"] = budget();
      const auto r = find_semi_mono_solution(s, chi, window, budget());
      if (r.outcome == SearchResult::Outcome::found && !is_semi_monochromatic(s, r.witness, chi))
        throw std::logic_error("witness failed verification");
      const int code = r.outcome == SearchResult::Outcome::found       ? ok
                       : r.outcome == SearchResult::Outcome::not_found ? negative
                                                                       : budget_exhausted;
      return {code, outcome_name(r.outcome), search_to_json(r), std::string("search ") + outcome_name(r.outcome)};
    };
  });

  // falsify
  std::uint64_t primes_up = 0;
  std::vector<std::uint64_t> primes_list;
  auto* fa = app.add_subcommand("falsify", "Look for smod-p colorings without a witness in a window");
  add_file(fa);
  add_report(fa);
  fa->add_option("--primes-up-to", primes_up, "Use every prime up to P");
  fa->add_option("--primes", primes_list, "Explicit primes")->delimiter(',');
  fa->add_option("--window", window, "Window radius R")->required()->check(CLI::NonNegativeNumber);
  fa->add_option("--budget", budget_flag, "Search node budget per prime");
  fa->callback([&] {
    run = [&]() -> Outcome {
      const DkSystem s = load();
      const auto primes = collect_primes(primes_up, primes_list);
      params["primes"] = primes;
      params["window"] = window;
      params["budget"] = budget();
      const auto rep = falsify_semi_regularity(s, primes, window, budget(), common.jobs);
      ordered_json res;
      res["radius"] = rep.radius;
      auto entries = ordered_json::array();
      bool exhausted = false;
      for (const auto& e : rep.entries) {
        if (e.result.outcome == SearchResult::Outcome::found &&
            !is_semi_monochromatic(s, e.result.witness, Coloring::smod(e.prime)))
          throw std::logic_error("witness failed verification");
        exhausted |= e.result.outcome == SearchResult::Outcome::budget_exhausted;
        ordered_json item;
        item["prime"] = e.prime;
        item.update(search_to_json(e.result));
        entries.push_back(std::move(item));
      }
      res["entries"] = std::move(entries);
      std::vector<std::uint64_t> refuting;
      for (const auto& e : rep.entries)
        if (e.result.outcome == SearchResult::Outcome::not_found) refuting.push_back(e.prime);
      res["primes_without_witness"] = refuting;
      if (!refuting.empty())
        return {negative, "falsified_in_window", res, "no witness in window for primes " + join(refuting)};
      if (exhausted) return {budget_exhausted, "budget_exhausted", res, "search budget exhausted"};
      return {ok, "witnesses_found", res, "every prime has a witness"};
    };
  });

  // extract-cert
  auto* ex = app.add_subcommand("extract-cert", "Extract a k-columns certificate from smod-p solutions");
  add_file(ex);
  ex->add_option("--report", common.report_path, "Write the provenance report here");
  ex->add_option("--primes-up-to", primes_up, "Use every prime up to P");
  ex->add_option("--primes", primes_list, "Explicit primes")->delimiter(',');
  ex->add_option("--window", window, "Window radius R")->required()->check(CLI::NonNegativeNumber);
  ex->add_option("--budget", budget_flag, "Search node budget per prime");
  std::optional<ordered_json> provenance;
  ex->callback([&] {
    run = [&]() -> Outcome {
      const DkSystem s = load();
      const auto primes = collect_primes(primes_up, primes_list);
      params["primes"] = primes;
      params["window"] = window;
      params["budget"] = budget();
      const auto rep = extract_certificate(s, primes, window, ExtractionOptions{budget(), common.jobs});
      provenance = extraction_report_to_json(rep);
      ordered_json res;
      if (rep.certificate) {
        res["certificate"] = certificate_to_json(*rep.certificate);
        return {ok, "certificate", res, "verified certificate extracted"};
      }
      res["diagnostic"] = rep.diagnostic;
      return {negative, "no_certificate", res, "no certificate: " + rep.diagnostic};
    };
  });

  // semi-rado
  unsigned colors = 0;
  std::int64_t max_window = 0;
  auto* sr = app.add_subcommand("semi-rado", "Compute a small semi-Rado number");
  add_file(sr);
  add_report(sr);
  sr->add_option("--colors", colors, "Number of colors r")->required()->check(CLI::PositiveNumber);
  sr->add_option("--max-window", max_window, "Largest radius to try")->required()->check(CLI::PositiveNumber);
  sr->add_option("--budget", budget_flag, "Search node budget per coloring");
  sr->callback([&] {
    run = [&]() -> Outcome {
      const DkSystem s = load();
      params["colors"] = colors;
      params["max_window"] = max_window;
      params["budget"] = budget();
      const auto r = semi_rado_number(s, colors, max_window, 1ULL << 22, budget());
      ordered_json res;
      res["value"] = r.value ? ordered_json(*r.value) : ordered_json();
      res["colorings_checked"] = r.colorings_checked;
      auto avoiding = ordered_json::array();
      for (const auto& c : r.avoiding_colorings) avoiding.push_back(coloring_to_json(c));
      res["avoiding_colorings"] = std::move(avoiding);
      if (r.value) return {ok, "determined", res, "semi-Rado number " + std::to_string(*r.value)};
      return {negative, "above_max_window", res, "no radius up to " + std::to_string(max_window) + " qualifies"};
    };
  });

  // smod
  std::uint64_t smod_p = 0;
  std::vector<std::string> smod_values;
  auto* sm = app.add_subcommand("smod", "Print smod-p colors of integers or fractions");
  sm->add_option("P", smod_p, "Prime")->required();
  sm->add_option("VALUES", smod_values, "Values (integers or a/b)")->required();
  sm->callback([&] {
    run = [&]() -> Outcome {
      if (!is_prime(smod_p)) throw InputError(std::to_string(smod_p) + " is not prime");
      std::ostringstream lines;
      for (const auto& v : smod_values) {
        Rational q;
        if (q.set_str(v, 10) != 0 || q.get_den() == 0) throw InputError("not a number: " + v);
        q.canonicalize();
        lines << smod(q, smod_p) << '\n';
      }
      return {ok, "smod", ordered_json(lines.str()), ""};
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::CallForVersion& e) {
    out << RADOKIT_VERSION << '\n';
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return input_error;
  }

  const std::string subcommand = app.get_subcommands().front()->get_name();
  try {
    const auto start = std::chrono::steady_clock::now();
    Outcome o = run();
    if (subcommand == "smod") {
      out << o.result.get<std::string>();
      return o.code;
    }
    ordered_json report;
    report["tool"] = "radokit";
    report["version"] = RADOKIT_VERSION;
    report["subcommand"] = subcommand;
    report["input_digest"] = content_digest(digest_source);
    report["parameters"] = params.is_null() ? ordered_json::object() : params;
    report["outcome"] = o.name;
    report["exit_code"] = o.code;
    report["result"] = o.result;
    if (common.timing) {
      const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      report["wall_time_ms"] = ms;
    }
    const std::string text = report.dump(2) + "\n";
    if (subcommand == "extract-cert") {
      out << text;
      if (!common.report_path.empty()) {
        std::ofstream f(common.report_path, std::ios::binary);
        if (!f) throw InputError("cannot write " + common.report_path);
        f << provenance->dump(2) << '\n';
      }
    } else if (!common.report_path.empty()) {
      std::ofstream f(common.report_path, std::ios::binary);
      if (!f) throw InputError("cannot write " + common.report_path);
      f << text;
    } else {
      out << text;
    }
    if (!o.summary.empty()) err << subcommand << ": " << o.summary << '\n';
    return o.code;
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << '\n';
  } catch (const ColoringDomainError& e) {
    err << "input error: " << e.what() << '\n';
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return input_error;
}

}  // namespace radokit::cli
