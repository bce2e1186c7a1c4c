#include "almukai/json_io.hpp"

#include "almukai/errors.hpp"

namespace almukai {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

const char* format_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::json: return "json";
    case OutputFormat::csv: return "csv";
    case OutputFormat::text: return "text";
  }
  return "json";
}

}  // namespace

Integer integer_from_json(const Json& j) {
  if (j.is_string()) return parse_integer(j.get<std::string>());
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  throw ParseError("expected an integer, got " + j.dump());
}

Json to_json(const ALElement& w) {
  return Json{{"d", to_string(w.d())},
              {"s", to_string(w.s())},
              {"abce", {to_string(w.a()), to_string(w.b()), to_string(w.c()), to_string(w.e())}}};
}

ALElement al_element_from_json(const Json& j) {
  const Json& abce = field(j, "abce");
  if (!abce.is_array() || abce.size() != 4) throw ParseError("'abce' must hold four integers");
  return ALElement::make(integer_from_json(field(j, "d")), integer_from_json(field(j, "s")),
                         integer_from_json(abce[0]), integer_from_json(abce[1]),
                         integer_from_json(abce[2]), integer_from_json(abce[3]));
}

Json to_json(const IsometryN& g) {
  Json rows = Json::array();
  for (int i = 0; i < 3; ++i) {
    Json row = Json::array();
    for (int j = 0; j < 3; ++j) row.push_back(to_string(g(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IsometryN isometry_from_json(const Json& rows, const Integer& d) {
  if (!rows.is_array() || rows.size() != 3) throw ParseError("matrix must have three rows");
  Matrix3 m{};
  for (int i = 0; i < 3; ++i) {
    const Json& row = rows[i];
    if (!row.is_array() || row.size() != 3) throw ParseError("matrix rows must have three entries");
    for (int j = 0; j < 3; ++j) {
      if (row[j].is_string()) {
        m[i][j] = parse_rational(row[j].get<std::string>());
      } else if (row[j].is_number_integer()) {
        m[i][j] = Rational(row[j].get<std::int64_t>());
      } else {
        throw ParseError("matrix entries must be rational strings, got " + row[j].dump());
      }
    }
  }
  if (d < 1) throw ParseError("level d must be positive");
  return IsometryN(d, m);
}

Json to_json(const CorrespondenceReport& report) {
  Json failures = Json::array();
  for (const auto& f : report.failures) failures.push_back({{"input", f.input}, {"check", f.check}});
  return Json{{"d", to_string(report.d)},
              {"samples_per_coset", report.samples_per_coset},
              {"checked", report.checked},
              {"failures", std::move(failures)}};
}

Json to_json(const PartnerCensus& census) {
  Json labels = Json::array();
  for (const auto& label : census.labels) {
    labels.push_back({{"r", to_string(label.r())}, {"moduli", label.moduli()}});
  }
  return Json{{"d", to_string(census.d)},
              {"labels", std::move(labels)},
              {"fm_number", std::to_string(census.fm_number)}};
}

Json to_json(const CheckResult& check) {
  Json failures = Json::array();
  for (const auto& f : check.failures) failures.push_back({{"input", f.input}, {"detail", f.detail}});
  Json out{{"name", check.name}, {"checked", check.checked}};
  if (check.max_defect) out["max_defect"] = *check.max_defect;
  out["failures"] = std::move(failures);
  return out;
}

Json to_json(const LevelReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) checks.push_back(to_json(c));
  return Json{{"d", to_string(report.d)},
              {"dolgachev", to_json(report.dolgachev)},
              {"checks", std::move(checks)},
              {"failure_count", report.failure_count()}};
}

Json to_json(const VerifyConfig& config) {
  return Json{{"d_min", to_string(config.d_min)},
              {"d_max", to_string(config.d_max)},
              {"samples_per_coset", config.samples_per_coset},
              {"seed", std::to_string(config.seed)},
              {"tolerance", config.tolerance},
              {"format", format_name(config.format)}};
}

}  // namespace almukai
