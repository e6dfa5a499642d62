#include "radonlink/io.hpp"

#include <openssl/evp.h>

#include <array>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "radonlink/errors.hpp"

namespace radonlink {

using nlohmann::json;

namespace {

std::vector<std::string> split_tokens(std::string_view line) {
  std::vector<std::string> tokens;
  std::istringstream in{std::string(line)};
  std::string token;
  while (in >> token) tokens.push_back(token);
  return tokens;
}

std::size_t parse_count(const std::string& token, const char* what, std::size_t line_no) {
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos || token.size() > 9) {
    throw ParseError("line " + std::to_string(line_no) + ": " + what + " must be a positive integer, got '" + token +
                     "'");
  }
  return std::stoul(token);
}

json index_array(const IndexSet& s) {
  json out = json::array();
  for (auto i : s) out.push_back(i + 1);
  return out;
}

IndexSet index_set_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected an array of point indices");
  IndexSet out;
  for (const auto& v : j) {
    if (!v.is_number_unsigned() || v.get<std::size_t>() == 0) {
      throw ParseError("point indices must be positive integers");
    }
    out.push_back(v.get<std::size_t>() - 1);
  }
  return out;
}

json vec_to_json(const Vec& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(to_json(q));
  return out;
}

Vec vec_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected an array of rationals");
  std::vector<Rational> entries;
  for (const auto& v : j) entries.push_back(rational_from_json(v));
  return Vec(std::move(entries));
}

json combination_to_json(const Combination& comb) {
  json coefficients = json::array();
  for (const auto& q : comb.coefficients) coefficients.push_back(to_json(q));
  return json{{"indices", index_array(comb.indices)}, {"coefficients", coefficients}};
}

Combination combination_from_json(const json& j) {
  Combination comb;
  comb.indices = index_set_from_json(j.at("indices"));
  const json& coefficients = j.at("coefficients");
  if (!coefficients.is_array()) throw ParseError("coefficients must be an array");
  for (const auto& v : coefficients) comb.coefficients.push_back(rational_from_json(v));
  return comb;
}

json piercing_to_json(const Piercing& p) {
  return json{{"point", vec_to_json(p.point)},
              {"facet", combination_to_json(p.facet)},
              {"simplex", combination_to_json(p.simplex)}};
}

Piercing piercing_from_json(const json& j) {
  return Piercing{vec_from_json(j.at("point")), combination_from_json(j.at("facet")),
                  combination_from_json(j.at("simplex"))};
}

json certificate_to_json(const Certificate& cert) {
  if (const auto* w = std::get_if<InteriorWitness>(&cert.witness)) {
    return json{{"kind", "interior-intersection"},
                {"point", vec_to_json(w->point)},
                {"first", combination_to_json(w->first)},
                {"second", combination_to_json(w->second)}};
  }
  const auto& w = std::get<LinkingWitness>(cert.witness);
  return json{{"kind", "linking"},
              {"first", index_array(w.first)},
              {"second", index_array(w.second)},
              {"first_boundary", piercing_to_json(w.first_boundary)},
              {"second_boundary", piercing_to_json(w.second_boundary)},
              {"piercing_counts", {{"first_into_second", w.first_into_second}, {"second_into_first", w.second_into_first}}}};
}

Certificate certificate_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  Certificate cert;
  if (kind == "interior-intersection") {
    cert.witness = InteriorWitness{vec_from_json(j.at("point")), combination_from_json(j.at("first")),
                                   combination_from_json(j.at("second"))};
  } else if (kind == "linking") {
    LinkingWitness w;
    w.first = index_set_from_json(j.at("first"));
    w.second = index_set_from_json(j.at("second"));
    w.first_boundary = piercing_from_json(j.at("first_boundary"));
    w.second_boundary = piercing_from_json(j.at("second_boundary"));
    const json& counts = j.at("piercing_counts");
    w.first_into_second = counts.at("first_into_second").get<std::size_t>();
    w.second_into_first = counts.at("second_into_first").get<std::size_t>();
    cert.witness = std::move(w);
  } else {
    throw ParseError("unknown certificate kind '" + kind + "'");
  }
  return cert;
}

const char* case_name(ParityCase p) { return p == ParityCase::even ? "even" : "odd"; }

json input_echo(const Configuration& c) {
  return json{{"n", c.dimension()}, {"points", c.size()}, {"sha256", input_hash(c)}};
}

}  // namespace

Configuration parse_point_file(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::size_t n = 0;
  std::size_t count = 0;
  bool have_header = false;
  std::vector<Vec> points;

  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto tokens = split_tokens(line);
    if (!have_header) {
      if (tokens.size() != 2) throw ParseError("line " + std::to_string(line_no) + ": header must be '<n> <n+3>'");
      n = parse_count(tokens[0], "dimension", line_no);
      count = parse_count(tokens[1], "point count", line_no);
      if (n == 0) throw ParseError("line " + std::to_string(line_no) + ": dimension must be positive");
      if (count != n + 3) {
        throw ParseError("line " + std::to_string(line_no) + ": point count must be n+3 = " + std::to_string(n + 3) +
                         ", got " + std::to_string(count));
      }
      have_header = true;
      continue;
    }
    if (points.size() == count) throw ParseError("line " + std::to_string(line_no) + ": more than " +
                                                 std::to_string(count) + " point rows");
    if (tokens.size() != n) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(n) + " coordinates, got " +
                       std::to_string(tokens.size()));
    }
    Vec p(n);
    for (std::size_t r = 0; r < n; ++r) {
      try {
        p[r] = parse_rational(tokens[r]);
      } catch (const ParseError& e) {
        throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
      }
    }
    points.push_back(std::move(p));
  }
  if (!have_header) throw ParseError("missing header line '<n> <n+3>'");
  if (points.size() != count) {
    throw ParseError("expected " + std::to_string(count) + " point rows, got " + std::to_string(points.size()));
  }
  return Configuration(n, std::move(points));
}

Configuration read_point_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open point file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_point_file(buffer.str());
}

std::string format_point_file(const Configuration& c) {
  std::ostringstream out;
  out << c.dimension() << ' ' << c.size() << '\n';
  for (const auto& p : c.points()) {
    for (std::size_t r = 0; r < p.size(); ++r) {
      if (r != 0) out << ' ';
      out << to_string(p[r]);
    }
    out << '\n';
  }
  return out.str();
}

std::string input_hash(const Configuration& c) {
  const std::string text = format_point_file(c);
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  if (EVP_Digest(text.data(), text.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 computation failed");
  }
  std::ostringstream hex;
  hex << std::hex << std::setfill('0');
  for (unsigned int i = 0; i < length; ++i) hex << std::setw(2) << static_cast<int>(digest[i]);
  return hex.str();
}

json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const json& j) {
  if (!j.is_string()) throw ParseError("rationals must be encoded as strings");
  const auto text = j.get<std::string>();
  if (text.find('.') != std::string::npos) throw ParseError("rationals in documents must be 'p' or 'p/q'");
  return parse_rational(text);
}

json result_to_json(const Configuration& c, const PartitionResult& r, const VerificationReport& verdict) {
  json verification{{"verdict", verdict.ok ? "pass" : "fail"}};
  if (!verdict.ok) verification["failed_clause"] = verdict.failed_clause;
  return json{{"format", "radonlink.result/1"},
              {"input", input_echo(c)},
              {"case", case_name(r.parity)},
              {"subsets", json::array({index_array(r.first), index_array(r.second)})},
              {"certificate", certificate_to_json(r.certificate)},
              {"verification", verification}};
}

PartitionResult result_from_json(const json& doc) {
  try {
    if (!doc.is_object()) throw ParseError("result document must be an object");
    PartitionResult r;
    const std::string parity = doc.at("case").get<std::string>();
    if (parity == "even") {
      r.parity = ParityCase::even;
    } else if (parity == "odd") {
      r.parity = ParityCase::odd;
    } else {
      throw ParseError("case must be 'even' or 'odd'");
    }
    const json& subsets = doc.at("subsets");
    if (!subsets.is_array() || subsets.size() != 2) throw ParseError("subsets must be a pair of index arrays");
    r.first = index_set_from_json(subsets[0]);
    r.second = index_set_from_json(subsets[1]);
    r.certificate = certificate_from_json(doc.at("certificate"));
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed result document: ") + e.what());
  }
}

json enumeration_to_json(const Configuration& c, const EnumerationReport& report) {
  json pairs = json::array();
  for (const auto& p : report.pairs) pairs.push_back(json::array({index_array(p.first), index_array(p.second)}));
  return json{{"format", "radonlink.enumeration/1"},
              {"input", input_echo(c)},
              {"case", case_name(report.parity_case)},
              {"candidates", report.candidates},
              {"count", report.count()},
              {"parity", report.count_is_odd() ? "odd" : "even"},
              {"pairs", pairs}};
}

json general_position_to_json(const Configuration& c, const GeneralPositionReport& report) {
  json out{{"format", "radonlink.general-position/1"}, {"input", input_echo(c)}, {"general_position", report.ok}};
  if (report.violation) out["violation"] = index_array(*report.violation);
  return out;
}

}  // namespace radonlink
