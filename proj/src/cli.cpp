#include "unimodal_lab/cli.hpp"

#include "unimodal_lab/certmax.hpp"
#include "unimodal_lab/eclass.hpp"
#include "unimodal_lab/parallel.hpp"
#include "unimodal_lab/theorem1.hpp"

#include "json.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <vector>

namespace unimodal_lab::cli {

using Json = nlohmann::ordered_json;

namespace {

constexpr double kReportedAlpha = 0.3229;
constexpr double kReportedAccuracy = 5e-4;
constexpr double kAlphaTolForEclass = 1e-9;
constexpr double kDefaultThetaTol = 1e-10;
constexpr double kDefaultCertTol = 1e-9;
constexpr std::int64_t kDefaultGeneralCap = 1000;

Json number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

Json make_doc(Command c) {
  Json doc;
  doc["schema"] = kSchema;
  doc["command"] = to_string(c);
  return doc;
}

std::string cell(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_float()) return format_double(v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void flatten(const Json& obj, const std::string& prefix, std::vector<std::pair<std::string, Json>>& out) {
  for (const auto& [key, value] : obj.items()) {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object()) {
      flatten(value, name, out);
    } else {
      out.emplace_back(name, value);
    }
  }
}

// Renders a document whose payload is either a list of rows with fixed
// columns, or a flat (possibly nested) set of fields.
std::string render(const Json& doc, Format format, const std::vector<std::string>& columns = {}) {
  if (format == Format::json) return doc.dump(2) + "\n";
  std::ostringstream os;
  if (doc.contains("rows")) {
    if (format == Format::csv) {
      for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
      os << "\n";
      for (const auto& row : doc["rows"]) {
        for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << cell(row[columns[i]]);
        os << "\n";
      }
      return os.str();
    }
    std::vector<std::size_t> widths(columns.size());
    for (std::size_t i = 0; i < columns.size(); ++i) widths[i] = columns[i].size();
    for (const auto& row : doc["rows"]) {
      for (std::size_t i = 0; i < columns.size(); ++i) widths[i] = std::max(widths[i], cell(row[columns[i]]).size());
    }
    const auto emit = [&](auto&& text_of) {
      for (std::size_t i = 0; i < columns.size(); ++i) {
        const std::string t = text_of(i);
        os << (i ? "  " : "") << t << std::string(widths[i] - t.size(), ' ');
      }
      os << "\n";
    };
    emit([&](std::size_t i) { return columns[i]; });
    for (const auto& row : doc["rows"]) emit([&](std::size_t i) { return cell(row[columns[i]]); });
    return os.str();
  }
  std::vector<std::pair<std::string, Json>> fields;
  flatten(doc, "", fields);
  if (format == Format::csv) {
    for (std::size_t i = 0; i < fields.size(); ++i) os << (i ? "," : "") << fields[i].first;
    os << "\n";
    for (std::size_t i = 0; i < fields.size(); ++i) os << (i ? "," : "") << cell(fields[i].second);
    os << "\n";
    return os.str();
  }
  for (const auto& [name, value] : fields) os << name << ": " << cell(value) << "\n";
  return os.str();
}

CommandResult usage_error(const std::string& what) {
  return CommandResult{exit_code::usage, "", "usage error: " + what + "\n"};
}

}  // namespace

std::string to_string(Command c) {
  switch (c) {
    case Command::check: return "check";
    case Command::scan_theorem1: return "scan-theorem1";
    case Command::probe_inequality: return "probe-inequality";
    case Command::eclass: return "eclass";
    case Command::scan_eclass: return "scan-eclass";
    case Command::certmax: return "certmax";
    case Command::general: return "general";
  }
  return "unknown";
}

std::string to_string(Format f) {
  switch (f) {
    case Format::csv: return "csv";
    case Format::json: return "json";
    case Format::text: return "text";
  }
  return "unknown";
}

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  if (s == "text") return Format::text;
  throw std::invalid_argument("unknown format '" + s + "' (expected csv, json or text)");
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
  return std::string(buf.data(), res.ptr);
}

void RunConfig::validate() const {
  switch (command) {
    case Command::check:
      exactpoly::FamilyParams::make(m, k);
      break;
    case Command::scan_theorem1:
    case Command::scan_eclass:
      if (k_min < 2) throw std::invalid_argument("--k-min must be >= 2");
      if (k_min > k_max) throw std::invalid_argument("empty k range: --k-min exceeds --k-max");
      break;
    case Command::probe_inequality:
      if (k < 3) throw std::invalid_argument("--k must be >= 3");
      break;
    case Command::eclass:
      if (k < 2) throw std::invalid_argument("--k must be >= 2");
      break;
    case Command::certmax:
      break;
    case Command::general:
      if (!input) throw std::invalid_argument("a coefficient file is required");
      break;
  }
  if (tol < 0.0) throw std::invalid_argument("--tol must be > 0");
  if (cap < 0) throw std::invalid_argument("--cap must be >= 0");
  if ((command == Command::eclass || command == Command::scan_eclass) && grid < 1000) {
    throw std::invalid_argument("--grid must be >= 1000");
  }
}

exactpoly::CoeffSeq parse_coefficients(const std::string& text) {
  std::vector<BigInt> coeffs;
  std::istringstream lines(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream tokens(line);
    std::string token;
    while (tokens >> token) {
      const bool digits = token.find_first_not_of("0123456789") == std::string::npos;
      if (!digits) {
        throw ParseError(line_no, "expected a nonnegative decimal integer, got '" + token + "'");
      }
      coeffs.emplace_back(token, 10);
    }
  }
  if (coeffs.empty()) throw ParseError(line_no == 0 ? 1 : line_no, "no coefficients found");
  return exactpoly::CoeffSeq(std::move(coeffs));
}

// --- check ------------------------------------------------------------------

CommandResult cmd_check(const RunConfig& cfg) {
  const auto params = exactpoly::FamilyParams::make(cfg.m, cfg.k);
  const auto seq = exactpoly::expand_family(params);
  const auto report = exactpoly::classify(seq);
  const std::int64_t m = cfg.m;
  const std::int64_t k = cfg.k;
  const bool odd = (m + k) % 2 != 0;
  const std::int64_t outer = odd ? (m + k - 3) / 2 : (m + k - 2) / 2;
  const BigInt a_outer = seq.at(outer);
  const BigInt a_inner = seq.at(outer + 1);
  const bool condition_c = a_outer <= a_inner;
  const bool predicted = m >= theorem1::critical_m(k);

  Json doc = make_doc(Command::check);
  doc["m"] = m;
  doc["k"] = k;
  if (cfg.show_coeffs) doc["coefficients"] = seq.to_strings();
  doc["unimodal"] = report.unimodal.unimodal;
  if (report.unimodal.witness) {
    doc["unimodal_witness"] = {report.unimodal.witness->first, report.unimodal.witness->second};
  } else {
    doc["unimodal_witness"] = nullptr;
  }
  doc["strongly_unimodal"] = report.strong.strongly_unimodal;
  doc["strong_failure"] = exactpoly::to_string(report.strong.failure);
  doc["strong_failure_index"] = report.strong.strongly_unimodal ? Json(nullptr) : Json(report.strong.index);
  doc["parity"] = odd ? "odd" : "even";
  doc["central_positions"] = {outer, outer + 1};
  const BigRational ratio = make_rational(a_outer, a_inner);
  doc["central_ratio"] = ratio.get_str();
  doc["central_ratio_decimal"] = number(ratio.get_d());
  try {
    const BigRational closed = odd ? theorem1::central_ratio_odd(m, k) : theorem1::central_ratio_even(m, k);
    doc["central_ratio_closed_form"] = closed.get_str();
    doc["closed_form_matches"] = closed == ratio;
  } catch (const std::invalid_argument&) {
    doc["central_ratio_closed_form"] = nullptr;
    doc["closed_form_matches"] = nullptr;
  }
  doc["condition_c"] = condition_c;
  doc["predicted"] = predicted;
  const bool agreement = report.unimodal.unimodal == predicted && report.strong.strongly_unimodal == predicted &&
                         condition_c == predicted;
  doc["agreement"] = agreement;

  CommandResult out;
  out.output = render(doc, cfg.format);
  if (!agreement) {
    out.exit_code = exit_code::theorem_mismatch;
    out.messages = "theorem mismatch for m = " + std::to_string(m) + ", k = " + std::to_string(k) + "\n";
  }
  return out;
}

// --- scan-theorem1 ------------------------------------------------------------

CommandResult cmd_scan_theorem1(const RunConfig& cfg) {
  struct Row {
    std::int64_t k = 0;
    std::optional<theorem1::ThresholdResult> result;
    std::string error;
  };
  const auto count = static_cast<std::size_t>(cfg.k_max - cfg.k_min + 1);
  const auto rows = parallel_map(count, [&](std::size_t i) {
    Row row;
    row.k = cfg.k_min + static_cast<std::int64_t>(i);
    try {
      row.result = theorem1::threshold(row.k, cfg.cap, cfg.exhaustive);
    } catch (const theorem1::NotFound& e) {
      row.error = e.what();
    }
    return row;
  });

  Json doc = make_doc(Command::scan_theorem1);
  doc["rows"] = Json::array();
  CommandResult out;
  for (const auto& row : rows) {
    Json r;
    r["k"] = row.k;
    if (row.result) {
      r["min_m_strong"] = row.result->minimal_m_strong;
      r["min_m_unimodal"] = row.result->minimal_m_unimodal;
      r["predicted"] = row.result->predicted;
      r["match"] = row.result->matches();
      if (!row.result->matches() && out.exit_code == exit_code::ok) out.exit_code = exit_code::theorem_mismatch;
    } else {
      r["min_m_strong"] = "not_found";
      r["min_m_unimodal"] = "not_found";
      r["predicted"] = theorem1::critical_m(row.k);
      r["match"] = false;
      out.exit_code = exit_code::not_found;
      out.messages += row.error + "\n";
    }
    doc["rows"].push_back(std::move(r));
  }
  out.output = render(doc, cfg.format, {"k", "min_m_strong", "min_m_unimodal", "predicted", "match"});
  return out;
}

// --- probe-inequality -----------------------------------------------------------

CommandResult cmd_probe_inequality(const RunConfig& cfg) {
  const std::int64_t k = cfg.k;
  const std::int64_t case_lo = (2 * k * k + 4) / 5;
  Json doc = make_doc(Command::probe_inequality);
  doc["k"] = k;
  doc["rows"] = Json::array();
  CommandResult out;
  for (std::int64_t u = k; u <= theorem1::probe_upper(k); ++u) {
    const auto probe = theorem1::inequality_one_probe(k, u);
    Json r;
    r["u"] = u;
    r["lhs"] = number(probe.lhs.get_d());
    r["rhs"] = number(probe.rhs.get_d());
    r["holds"] = probe.holds;
    r["lhs_exact"] = unimodal_lab::to_string(probe.lhs);
    r["rhs_exact"] = unimodal_lab::to_string(probe.rhs);
    if (u >= case_lo) {
      r["case-bound-holds"] = theorem1::case_polynomial_probe(k, u).bound_holds();
    } else {
      r["case-bound-holds"] = nullptr;
    }
    if (!probe.holds) out.exit_code = exit_code::theorem_mismatch;
    doc["rows"].push_back(std::move(r));
  }
  out.output = render(doc, cfg.format, {"u", "lhs", "rhs", "holds", "case-bound-holds"});
  return out;
}

// --- eclass -------------------------------------------------------------------

namespace {

Json certificate_json(std::int64_t m, const eclass::MembershipCertificate& c) {
  Json j;
  j["m"] = m;
  j["verdict"] = eclass::to_string(c.verdict);
  j["min_defect"] = number(c.min_defect);
  j["min_theta"] = number(c.min_theta);
  j["witness_theta"] = c.witness_theta ? number(*c.witness_theta) : Json(nullptr);
  return j;
}

struct EclassOutcome {
  eclass::EClassResult result;
  bool in_sandwich = false;
  double scaled_max = 0.0;
};

EclassOutcome eclass_core(std::int64_t k, const RunConfig& cfg, const certmax::Interval& alpha) {
  const auto scan = eclass::ThetaScan::make(k, cfg.grid, cfg.tol > 0.0 ? cfg.tol : kDefaultThetaTol);
  EclassOutcome o;
  o.result = eclass::max_L(scan);
  eclass::attach_sandwich(o.result, alpha);
  const double kd = static_cast<double>(k);
  o.scaled_max = o.result.max_L / (kd * kd * kd * kd);
  o.in_sandwich = o.scaled_max >= *o.result.sandwich_lo - eclass::kSandwichTol &&
                  o.scaled_max <= *o.result.sandwich_hi + eclass::kSandwichTol;
  return o;
}

}  // namespace

CommandResult cmd_eclass(const RunConfig& cfg) {
  const std::int64_t k = cfg.k;
  CommandResult out;
  certmax::CertifiedMax alpha;
  EclassOutcome o;
  try {
    alpha = certmax::certified_alpha(kAlphaTolForEclass);
    o = eclass_core(k, cfg, alpha.value_enclosure);
  } catch (const certmax::BracketFailure& e) {
    return CommandResult{exit_code::certification_failure, "", std::string(e.what()) + "\n"};
  } catch (const eclass::ReductionViolation& e) {
    return CommandResult{exit_code::certification_failure, "", std::string(e.what()) + "\n"};
  }
  const auto& r = o.result;

  Json doc = make_doc(Command::eclass);
  doc["k"] = k;
  doc["grid"] = cfg.grid;
  doc["max_L"] = number(r.max_L);
  doc["argmax_theta"] = number(r.argmax_theta);
  doc["m_of_k"] = r.m_of_k;
  doc["near_integer"] = r.near_integer;
  doc["coarse_full_max"] = number(r.coarse_full_max);
  doc["scaled_max"] = number(o.scaled_max);
  doc["alpha"] = {{"lo", alpha.value_enclosure.lo}, {"hi", alpha.value_enclosure.hi}};
  doc["sandwich"] = {{"lo", *r.sandwich_lo}, {"hi", *r.sandwich_hi}, {"holds", o.in_sandwich}};

  const auto at = eclass::membership_certificate(r.m_of_k, k, cfg.grid);
  doc["certificate_at_m"] = certificate_json(r.m_of_k, at);
  bool consistent = at.verdict == eclass::Membership::member;
  if (r.m_of_k > 1) {
    const auto below = eclass::membership_certificate(r.m_of_k - 1, k, cfg.grid);
    doc["certificate_below_m"] = certificate_json(r.m_of_k - 1, below);
    consistent = consistent && below.verdict == eclass::Membership::nonmember;
  } else {
    doc["certificate_below_m"] = nullptr;
  }
  doc["certificates_consistent"] = consistent;

  Json warnings = Json::array();
  if (r.below_supported_k) {
    warnings.push_back("k = " + std::to_string(k) +
                       " is below 9; the k^4 bounds and the interval reduction are only established for k >= 9");
  }
  if (r.near_integer) {
    warnings.push_back("max_L is within 1e-6 of an integer; m_of_k was decided by direct certificates");
  }
  doc["warnings"] = warnings;

  out.output = render(doc, cfg.format);
  for (const auto& w : warnings) out.messages += "warning: " + w.get<std::string>() + "\n";
  const bool sandwich_required = k >= 8;
  if ((!consistent && !r.near_integer) || (sandwich_required && !o.in_sandwich)) {
    out.exit_code = exit_code::certification_failure;
  }
  return out;
}

CommandResult cmd_scan_eclass(const RunConfig& cfg) {
  certmax::CertifiedMax alpha;
  try {
    alpha = certmax::certified_alpha(kAlphaTolForEclass);
  } catch (const certmax::BracketFailure& e) {
    return CommandResult{exit_code::certification_failure, "", std::string(e.what()) + "\n"};
  }
  struct Row {
    std::int64_t k = 0;
    std::optional<EclassOutcome> outcome;
    std::string error;
  };
  const auto count = static_cast<std::size_t>(cfg.k_max - cfg.k_min + 1);
  const auto rows = parallel_map(count, [&](std::size_t i) {
    Row row;
    row.k = cfg.k_min + static_cast<std::int64_t>(i);
    try {
      row.outcome = eclass_core(row.k, cfg, alpha.value_enclosure);
    } catch (const eclass::ReductionViolation& e) {
      row.error = e.what();
    }
    return row;
  });

  Json doc = make_doc(Command::scan_eclass);
  doc["rows"] = Json::array();
  CommandResult out;
  for (const auto& row : rows) {
    Json r;
    r["k"] = row.k;
    if (row.outcome) {
      const auto& res = row.outcome->result;
      r["max_L"] = number(res.max_L);
      r["argmax_theta"] = number(res.argmax_theta);
      r["m_of_k"] = res.m_of_k;
      r["scaled_max"] = number(row.outcome->scaled_max);
      r["sandwich_lo"] = number(*res.sandwich_lo);
      r["sandwich_hi"] = number(*res.sandwich_hi);
      r["in_sandwich"] = row.outcome->in_sandwich;
      r["near_integer"] = res.near_integer;
      if (row.k >= 8 && !row.outcome->in_sandwich) out.exit_code = exit_code::certification_failure;
    } else {
      r["in_sandwich"] = false;
      out.exit_code = exit_code::certification_failure;
      out.messages += row.error + "\n";
    }
    doc["rows"].push_back(std::move(r));
  }
  out.output = render(doc, cfg.format,
                      {"k", "max_L", "argmax_theta", "m_of_k", "scaled_max", "sandwich_lo", "sandwich_hi",
                       "in_sandwich", "near_integer"});
  return out;
}

// --- certmax ------------------------------------------------------------------

CommandResult cmd_certmax(const RunConfig& cfg) {
  const double tol = cfg.tol > 0.0 ? cfg.tol : kDefaultCertTol;
  certmax::CertifiedMax cm;
  try {
    cm = certmax::certified_alpha(tol);
  } catch (const certmax::BracketFailure& e) {
    return CommandResult{exit_code::certification_failure, "", std::string(e.what()) + "\n"};
  }
  const auto& enc = cm.value_enclosure;
  const double x0 = 0.705 * std::numbers::pi;
  const double x1 = 0.708 * std::numbers::pi;
  const bool contains_reported = enc.contains(kReportedAlpha);
  const bool within_accuracy = enc.lo >= kReportedAlpha - kReportedAccuracy && enc.hi <= kReportedAlpha + kReportedAccuracy;

  Json doc = make_doc(Command::certmax);
  doc["tol"] = tol;
  doc["crit_bracket"] = {{"lo", cm.crit_bracket.lo}, {"hi", cm.crit_bracket.hi}};
  doc["value_enclosure"] = {{"lo", enc.lo}, {"hi", enc.hi}};
  doc["width"] = enc.width();
  doc["evaluations"] = cm.evaluations;
  doc["reported_value"] = kReportedAlpha;
  doc["contains_reported_value"] = contains_reported;
  doc["within_reported_accuracy"] = within_accuracy;
  doc["bracket_inside_x0_x1"] = x0 < cm.crit_bracket.lo && cm.crit_bracket.hi < x1;

  CommandResult out;
  out.output = render(doc, cfg.format);
  if (enc.width() > tol) {
    out.exit_code = exit_code::certification_failure;
    out.messages += "enclosure width " + format_double(enc.width()) + " exceeds tol\n";
  }
  if (tol >= kReportedAccuracy && !contains_reported) {
    out.exit_code = exit_code::certification_failure;
    out.messages += "reported value 0.3229 lies outside the enclosure [" + format_double(enc.lo) + ", " +
                    format_double(enc.hi) + "]\n";
  }
  return out;
}

// --- general ------------------------------------------------------------------

CommandResult cmd_general_text(const RunConfig& cfg, const std::string& text, const std::string& source) {
  exactpoly::CoeffSeq p;
  try {
    p = parse_coefficients(text);
  } catch (const ParseError& e) {
    return usage_error(source + ": " + e.what());
  }
  if (p.is_zero()) return usage_error(source + ": the zero polynomial has no strongly unimodal multiple");
  const std::int64_t cap = cfg.cap > 0 ? cfg.cap : kDefaultGeneralCap;

  Json doc = make_doc(Command::general);
  doc["input"] = source;
  doc["degree"] = p.degree();
  doc["cap"] = cap;
  CommandResult out;
  try {
    doc["N"] = theorem1::generic_min_N(p, cap);
    doc["found"] = true;
  } catch (const theorem1::NotFound& e) {
    doc["N"] = nullptr;
    doc["found"] = false;
    out.exit_code = exit_code::not_found;
    out.messages = std::string(e.what()) + "\n";
  }
  out.output = render(doc, cfg.format);
  return out;
}

CommandResult cmd_general(const RunConfig& cfg) {
  if (!cfg.input) return usage_error("a coefficient file is required");
  std::ifstream in(*cfg.input);
  if (!in) return usage_error("cannot open '" + *cfg.input + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return cmd_general_text(cfg, buffer.str(), *cfg.input);
}

CommandResult run(const RunConfig& cfg) {
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what());
  }
  try {
    switch (cfg.command) {
      case Command::check: return cmd_check(cfg);
      case Command::scan_theorem1: return cmd_scan_theorem1(cfg);
      case Command::probe_inequality: return cmd_probe_inequality(cfg);
      case Command::eclass: return cmd_eclass(cfg);
      case Command::scan_eclass: return cmd_scan_eclass(cfg);
      case Command::certmax: return cmd_certmax(cfg);
      case Command::general: return cmd_general(cfg);
    }
  } catch (const theorem1::NotFound& e) {
    return CommandResult{exit_code::not_found, "", std::string("not found: ") + e.what() + "\n"};
  } catch (const certmax::BracketFailure& e) {
    return CommandResult{exit_code::certification_failure, "", std::string("certification failed: ") + e.what() + "\n"};
  } catch (const certmax::PreconditionViolation& e) {
    return CommandResult{exit_code::certification_failure, "", std::string("certification failed: ") + e.what() + "\n"};
  } catch (const eclass::ReductionViolation& e) {
    return CommandResult{exit_code::certification_failure, "", std::string("certification failed: ") + e.what() + "\n"};
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what());
  } catch (const std::domain_error& e) {
    return usage_error(e.what());
  } catch (const std::out_of_range& e) {
    return usage_error(e.what());
  }
  return usage_error("unknown command");
}

}  // namespace unimodal_lab::cli
