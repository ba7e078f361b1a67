#include "primelab/report.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include <json.hpp>

#include "primelab/error.hpp"

namespace primelab {

namespace {

using nlohmann::json;

json witness_json(const Witness& w) {
  return json{{"label", w.label}, {"x", w.x},           {"q", w.q},
              {"a", w.a},         {"y", w.y},           {"pass", w.pass},
              {"exempt", w.exempt}, {"witness", w.witness}, {"margin", w.margin}};
}

Witness witness_from(const json& j) {
  Witness w;
  w.label = j.at("label").get<std::string>();
  w.x = j.at("x").get<std::uint64_t>();
  w.q = j.at("q").get<std::uint64_t>();
  w.a = j.at("a").get<std::uint64_t>();
  w.y = j.at("y").get<std::uint64_t>();
  w.pass = j.at("pass").get<bool>();
  w.exempt = j.at("exempt").get<bool>();
  w.witness = j.at("witness").get<std::uint64_t>();
  w.margin = j.at("margin").get<double>();
  return w;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.insert(0, width - s.size(), ' ');
  return s;
}

}  // namespace

std::size_t VerificationReport::counted_failures() const {
  return static_cast<std::size_t>(
      std::count_if(failures.begin(), failures.end(), [](const Witness& w) { return !w.exempt; }));
}

std::string format_double(double v) {
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string format_fixed(double v, int decimals) {
  if (v == 0.0) v = 0.0;
  char buf[128];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, decimals);
  if (res.ec != std::errc{}) return format_double(v);
  std::string out(buf, res.ptr);
  // a negative value that rounds to zero prints without its sign
  if (out[0] == '-' && out.find_first_not_of("-0.") == std::string::npos) out.erase(0, 1);
  return out;
}

std::string csv_field(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string to_json(const VerificationReport& r, const EmitOptions& options) {
  json j;
  j["theorem_id"] = r.theorem_id;
  j["range"] = {r.lo, r.hi};
  j["samples"] = r.samples;
  j["exemption_threshold"] = r.exemption_threshold;
  j["seed"] = r.seed;
  j["failures"] = json::array();
  for (const auto& w : r.failures) j["failures"].push_back(witness_json(w));
  j["extremal"] = r.extremal ? witness_json(*r.extremal) : json(nullptr);
  j["metrics"] = json::object();
  for (const auto& [k, v] : r.metrics) j["metrics"][k] = v;
  j["counted_failures"] = r.counted_failures();
  j["passed"] = r.passed();
  if (options.include_rows) {
    j["rows"] = json::array();
    for (const auto& w : r.rows) j["rows"].push_back(witness_json(w));
  }
  if (options.include_runtime) j["runtime_seconds"] = r.runtime_seconds;
  return j.dump(2) + "\n";
}

VerificationReport report_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
    for (std::size_t i = 0; i < upto; ++i)
      if (text[i] == '\n') ++line;
    throw ParseError(std::string("malformed report JSON: ") + e.what(), line);
  }
  try {
    VerificationReport r;
    r.theorem_id = j.at("theorem_id").get<std::string>();
    r.lo = j.at("range").at(0).get<std::uint64_t>();
    r.hi = j.at("range").at(1).get<std::uint64_t>();
    r.samples = j.at("samples").get<std::uint64_t>();
    r.exemption_threshold = j.at("exemption_threshold").get<std::uint64_t>();
    r.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& w : j.at("failures")) r.failures.push_back(witness_from(w));
    if (!j.at("extremal").is_null()) r.extremal = witness_from(j.at("extremal"));
    for (const auto& [k, v] : j.at("metrics").items()) r.metrics[k] = v.get<double>();
    if (j.contains("rows"))
      for (const auto& w : j.at("rows")) r.rows.push_back(witness_from(w));
    if (j.contains("runtime_seconds")) r.runtime_seconds = j.at("runtime_seconds").get<double>();
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("report JSON missing or mistyped field: ") + e.what(), 1);
  }
}

std::string to_csv(const VerificationReport& r) {
  std::ostringstream out;
  out << "theorem,label,x,q,a,y,pass,exempt,witness,margin\n";
  const auto& list = r.rows.empty() ? r.failures : r.rows;
  for (const auto& w : list) {
    out << csv_field(r.theorem_id) << ',' << csv_field(w.label) << ',' << w.x << ',' << w.q << ','
        << w.a << ',' << w.y << ',' << (w.pass ? "true" : "false") << ','
        << (w.exempt ? "true" : "false") << ',' << w.witness << ',' << format_double(w.margin)
        << '\n';
  }
  return out.str();
}

std::string to_table(const VerificationReport& r) {
  std::ostringstream out;
  out << "theorem      " << r.theorem_id << '\n'
      << "range        [" << r.lo << ", " << r.hi << "]\n"
      << "samples      " << r.samples << '\n'
      << "seed         0x" << std::hex << r.seed << std::dec << '\n'
      << "exempt below " << r.exemption_threshold << '\n'
      << "failures     " << r.failures.size() << " (" << r.counted_failures() << " counted)\n"
      << "result       " << (r.passed() ? "PASS" : "FAIL") << '\n';
  if (r.extremal) {
    const auto& w = *r.extremal;
    out << "extremal     x=" << w.x;
    if (w.q) out << " q=" << w.q << " a=" << w.a;
    if (!w.label.empty()) out << " [" << w.label << "]";
    out << " margin=" << format_double(w.margin) << '\n';
  }
  for (const auto& [k, v] : r.metrics) out << "  " << k << " = " << format_double(v) << '\n';
  if (!r.failures.empty()) {
    const char* head[] = {"label", "x", "q", "a", "y", "witness", "margin", "exempt"};
    std::vector<std::vector<std::string>> cells;
    for (const auto& w : r.failures)
      cells.push_back({w.label, std::to_string(w.x), std::to_string(w.q), std::to_string(w.a),
                       std::to_string(w.y), std::to_string(w.witness), format_double(w.margin),
                       w.exempt ? "yes" : "no"});
    std::vector<std::size_t> width(8);
    for (std::size_t c = 0; c < 8; ++c) {
      width[c] = std::string_view(head[c]).size();
      for (const auto& row : cells) width[c] = std::max(width[c], row[c].size());
    }
    for (std::size_t c = 0; c < 8; ++c) out << pad(head[c], width[c]) << (c + 1 < 8 ? "  " : "\n");
    for (const auto& row : cells)
      for (std::size_t c = 0; c < 8; ++c) out << pad(row[c], width[c]) << (c + 1 < 8 ? "  " : "\n");
  }
  return out.str();
}

}  // namespace primelab
