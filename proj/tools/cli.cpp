#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "almukai/corr.hpp"
#include "almukai/errors.hpp"
#include "almukai/fmcalc.hpp"
#include "almukai/json_io.hpp"
#include "almukai/verify.hpp"

namespace almukai::cli {

namespace {

const std::map<std::string, OutputFormat> kFormats{
    {"json", OutputFormat::json}, {"csv", OutputFormat::csv}, {"text", OutputFormat::text}};

// RFC 4180 field quoting
std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\r\n") == std::string::npos) return value;
  std::string out = "\"";
  for (char ch : value) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void csv_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << csv_field(fields[i]);
  out << "\r\n";
}

std::string defect_string(double x) {
  std::ostringstream s;
  s << std::setprecision(17) << x;
  return s.str();
}

// --- table -----------------------------------------------------------------

struct TableArgs {
  long long d_min = 1;
  long long d_max = 50;
  OutputFormat format = OutputFormat::csv;
};

int cmd_table(const TableArgs& args, std::ostream& out, std::ostream& err) {
  if (args.d_min < 1 || args.d_max < args.d_min) {
    err << "table: invalid range [" << args.d_min << ", " << args.d_max << "]\n";
    return kUsageError;
  }
  const std::vector<std::string> header{"d", "omega", "exact_divisors", "fm_number",
                                        "al_fr_index"};
  Json rows = Json::array();
  std::vector<std::vector<std::string>> table;
  bool consistent = true;
  for (long long n = args.d_min; n <= args.d_max; ++n) {
    const Integer d(n);
    const std::size_t omega = factorize(d).distinct_primes();
    const std::size_t divisors = exact_divisors(d).size();
    const std::size_t fm = partner_census(d).fm_number;
    const std::size_t index = fricke_coset_count(d);
    consistent = consistent && fm == index;
    table.push_back({std::to_string(n), std::to_string(omega), std::to_string(divisors),
                     std::to_string(fm), std::to_string(index)});
  }
  switch (args.format) {
    case OutputFormat::csv:
      csv_row(out, header);
      for (const auto& row : table) csv_row(out, row);
      break;
    case OutputFormat::json:
      for (const auto& row : table) {
        Json obj;
        for (std::size_t i = 0; i < header.size(); ++i) obj[header[i]] = row[i];
        rows.push_back(std::move(obj));
      }
      out << rows.dump(2) << "\n";
      break;
    case OutputFormat::text:
      for (const auto& h : header) out << std::setw(15) << h;
      out << "\n";
      for (const auto& row : table) {
        for (const auto& f : row) out << std::setw(15) << f;
        out << "\n";
      }
      break;
  }
  if (!consistent) {
    err << "table: Fourier-Mukai number differs from [AL_d : Fr_d]\n";
    return kVerificationFailed;
  }
  return kSuccess;
}

// --- partners --------------------------------------------------------------

struct PartnersArgs {
  long long d = 0;
  OutputFormat format = OutputFormat::json;
};

int cmd_partners(const PartnersArgs& args, std::ostream& out, std::ostream& err) {
  if (args.d < 1) {
    err << "partners: d must be at least 1\n";
    return kUsageError;
  }
  const Integer d(args.d);
  const PartnerCensus census = partner_census(d);
  Json j = to_json(census);
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < census.labels.size(); ++i) {
    const PartnerLabel& label = census.labels[i];
    const InducedTransform t = induced_transform(d, label.r());
    const Integer level = classify_coset(represent(t.image)).s;
    j["labels"][i]["transform"] = to_json(t.image);
    j["labels"][i]["coset_level"] = to_string(level);
    rows.push_back({to_string(label.r()), label.moduli(), to_string(t.image.s()),
                    to_string(t.image.a()), to_string(t.image.b()), to_string(t.image.c()),
                    to_string(t.image.e()), to_string(level)});
  }
  switch (args.format) {
    case OutputFormat::json:
      out << j.dump(2) << "\n";
      break;
    case OutputFormat::csv:
      csv_row(out, {"r", "moduli", "s", "a", "b", "c", "e", "coset_level"});
      for (const auto& row : rows) csv_row(out, row);
      break;
    case OutputFormat::text:
      out << "d = " << d << ", Fourier-Mukai number " << census.fm_number << "\n";
      for (const auto& row : rows) {
        out << "  " << row[1] << "  -> X via W_" << row[2] << " (" << row[3] << ", " << row[4]
            << ", " << row[5] << ", " << row[6] << ")\n";
      }
      break;
  }
  return kSuccess;
}

// --- classify --------------------------------------------------------------

struct ClassifyArgs {
  std::string input = "-";
  long long d = 0;
  OutputFormat format = OutputFormat::json;
};

struct UsageError : Error {
  using Error::Error;
};

int cmd_classify(const ClassifyArgs& args, std::istream& in, std::ostream& out,
                 std::ostream& err) {
  Json input;
  try {
    if (args.input == "-") {
      input = Json::parse(in);
    } else {
      std::ifstream file(args.input);
      if (!file) {
        err << "classify: cannot open " << args.input << "\n";
        return kParseError;
      }
      input = Json::parse(file);
    }
  } catch (const nlohmann::json::exception& ex) {
    err << "classify: parse error: " << ex.what() << "\n";
    return kParseError;
  }

  try {
    auto level_of = [&](const Json& j) -> Integer {
      const bool has_field = j.is_object() && j.contains("d");
      if (has_field) {
        const Integer d = integer_from_json(j.at("d"));
        if (args.d != 0 && Integer(args.d) != d) throw ParseError("--d disagrees with input d");
        return d;
      }
      if (args.d < 1) throw UsageError("level d is required (--d)");
      return Integer(args.d);
    };

    IsometryN g = IsometryN::identity(1);
    if (input.is_object() && input.contains("abce")) {
      g = represent(al_element_from_json(input));
    } else if (input.is_object() && input.contains("matrix")) {
      g = isometry_from_json(input.at("matrix"), level_of(input));
    } else if (input.is_array()) {
      g = isometry_from_json(input, level_of(input));
    } else {
      throw ParseError("expected an Atkin-Lehner tuple or a 3x3 matrix");
    }

    const ALElement w = descend(g);
    const bool orientation = is_orientation_preserving(g);
    const DiscriminantUnit u = discriminant_unit(g);
    Json result{{"d", to_string(g.d())},
                {"level", to_string(w.s())},
                {"fricke", is_fricke(w)},
                {"discriminant_unit", to_string(u.u())},
                {"orientation", orientation},
                {"preimage", to_json(w)}};
    switch (args.format) {
      case OutputFormat::json:
        out << result.dump(2) << "\n";
        break;
      case OutputFormat::csv:
        csv_row(out, {"d", "level", "fricke", "discriminant_unit", "orientation"});
        csv_row(out, {to_string(g.d()), to_string(w.s()), is_fricke(w) ? "true" : "false",
                      to_string(u.u()), orientation ? "true" : "false"});
        break;
      case OutputFormat::text:
        out << "level s = " << w.s() << (is_fricke(w) ? " (Fricke)" : "")
            << ", discriminant unit " << u.u() << ", preimage " << w.to_string() << "\n";
        break;
    }
    return kSuccess;
  } catch (const UsageError& ex) {
    err << "classify: " << ex.what() << "\n";
    return kUsageError;
  } catch (const ParseError& ex) {
    err << "classify: parse error: " << ex.what() << "\n";
    return kParseError;
  } catch (const Error& ex) {
    err << "classify: not in the image of the Atkin-Lehner group: " << ex.what() << "\n";
    return kClassificationFailed;
  }
}

// --- verify ----------------------------------------------------------------

struct VerifyArgs {
  long long d_min = 1;
  long long d_max = 50;
  std::size_t samples = 50;
  std::uint64_t seed = VerifyConfig{}.seed;
  double tolerance = 1e-9;
  OutputFormat format = OutputFormat::json;
  unsigned threads = 0;
};

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  VerifyConfig config;
  config.d_min = args.d_min;
  config.d_max = args.d_max;
  config.samples_per_coset = args.samples;
  config.seed = args.seed;
  config.tolerance = args.tolerance;
  config.format = args.format;
  config.threads = args.threads;
  try {
    config.validate();
  } catch (const Error& ex) {
    err << "verify: " << ex.what() << "\n";
    return kUsageError;
  }

  const std::vector<LevelReport> reports = run_verify(config);
  std::size_t failures = 0;
  for (const auto& r : reports) failures += r.failure_count();

  switch (config.format) {
    case OutputFormat::json: {
      Json levels = Json::array();
      for (const auto& r : reports) levels.push_back(to_json(r));
      const Json j{{"config", to_json(config)},
                   {"levels", std::move(levels)},
                   {"failures", failures},
                   {"passed", failures == 0}};
      out << j.dump(2) << "\n";
      break;
    }
    case OutputFormat::csv:
      csv_row(out, {"d", "check", "checked", "failures", "max_defect"});
      for (const auto& r : reports) {
        csv_row(out, {to_string(r.d), "dolgachev", std::to_string(r.dolgachev.checked),
                      std::to_string(r.dolgachev.failures.size()), ""});
        for (const auto& c : r.checks) {
          csv_row(out, {to_string(r.d), c.name, std::to_string(c.checked),
                        std::to_string(c.failures.size()),
                        c.max_defect ? defect_string(*c.max_defect) : ""});
        }
      }
      break;
    case OutputFormat::text:
      for (const auto& r : reports) {
        out << "d=" << r.d << ": " << (r.failure_count() ? "FAIL" : "ok") << " (dolgachev "
            << r.dolgachev.checked << " samples";
        for (const auto& c : r.checks) {
          out << ", " << c.name << " " << c.checked;
          if (c.max_defect) out << " max " << defect_string(*c.max_defect);
        }
        out << ")\n";
        for (const auto& f : r.dolgachev.failures) out << "  dolgachev/" << f.check << ": " << f.input << "\n";
        for (const auto& c : r.checks)
          for (const auto& f : c.failures) out << "  " << c.name << ": " << f.input << " " << f.detail << "\n";
      }
      out << (failures == 0 ? "PASSED" : "FAILED") << " (" << failures << " failures)\n";
      break;
  }
  return failures == 0 ? kSuccess : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Atkin-Lehner and Fourier-Mukai invariants of Picard rank one K3 surfaces"};
  app.require_subcommand(1);

  TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "Fourier-Mukai number against [AL_d : Fr_d]");
  table_cmd->add_option("--d-min", table.d_min, "smallest level")->capture_default_str();
  table_cmd->add_option("--d-max", table.d_max, "largest level")->capture_default_str();
  table_cmd->add_option("--format", table.format, "json|csv|text")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

  PartnersArgs partners;
  auto* partners_cmd = app.add_subcommand("partners", "Fourier-Mukai partners of level d");
  partners_cmd->add_option("-d,--d", partners.d, "level d (L^2 = 2d)")->required();
  partners_cmd->add_option("--format", partners.format, "json|csv|text")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

  ClassifyArgs classify;
  auto* classify_cmd = app.add_subcommand("classify", "classify a lattice isometry or AL tuple");
  classify_cmd->add_option("input", classify.input, "JSON file, or - for stdin");
  classify_cmd->add_option("-d,--d", classify.d, "level d when the input does not carry one");
  classify_cmd->add_option("--format", classify.format, "json|csv|text")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "run the verification suite over a range of d");
  verify_cmd->add_option("--d-min", verify.d_min)->capture_default_str();
  verify_cmd->add_option("--d-max", verify.d_max)->capture_default_str();
  verify_cmd->add_option("--samples", verify.samples, "samples per coset")->capture_default_str();
  verify_cmd->add_option("--seed", verify.seed)->capture_default_str();
  verify_cmd->add_option("--tol", verify.tolerance, "floating tolerance")->capture_default_str();
  verify_cmd->add_option("--format", verify.format, "json|csv|text")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  verify_cmd->add_option("--threads", verify.threads, "worker threads (0: all cores)");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  if (*table_cmd) return cmd_table(table, out, err);
  if (*partners_cmd) return cmd_partners(partners, out, err);
  if (*classify_cmd) return cmd_classify(classify, in, out, err);
  return cmd_verify(verify, out, err);
}

}  // namespace almukai::cli
