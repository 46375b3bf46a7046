#include "rootpath/cli.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "rootpath/errors.h"

namespace rootpath::cli {

using nlohmann::json;

namespace {

bool is_blank(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

double parse_real(std::string_view token, std::size_t offset) {
  std::size_t b = 0;
  std::size_t e = token.size();
  while (b < e && is_blank(token[b])) ++b;
  while (e > b && is_blank(token[e - 1])) --e;
  if (b == e) throw ParseError("empty coefficient", offset);
  std::string_view body = token.substr(b, e - b);
  // from_chars rejects a leading '+'.
  if (body.front() == '+') body.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
  if (ec != std::errc{} || ptr != body.data() + body.size()) {
    throw ParseError("malformed number '" + std::string(token.substr(b, e - b)) + "'", offset + b);
  }
  if (!std::isfinite(value)) throw ParseError("non-finite coefficient", offset + b);
  return value;
}

SolveRequest parse_csv(std::string_view text) {
  SolveRequest req;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view token =
        text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    req.coefficients.emplace_back(parse_real(token, pos), 0.0);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return req;
}

double json_real(const json& v, const std::string& what) {
  if (!v.is_number()) throw ParseError(what + " must be a number", 0);
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ParseError(what + " is not finite", 0);
  return x;
}

Complex json_coefficient(const json& v, std::size_t index) {
  const std::string what = "coefficient " + std::to_string(index);
  if (v.is_number()) return {json_real(v, what), 0.0};
  if (v.is_array() && v.size() == 2) return {json_real(v[0], what), json_real(v[1], what)};
  throw ParseError(what + " must be a number or an [re, im] pair", 0);
}

std::vector<Complex> json_coefficients(const json& arr) {
  if (!arr.is_array()) throw ParseError("coefficients must be an array", 0);
  std::vector<Complex> out;
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(json_coefficient(arr[i], i));
  return out;
}

const char* start_name(StartSystem s) { return s == StartSystem::unit ? "unit" : "gamma"; }
const char* path_name(PathShape p) { return p == PathShape::line ? "line" : "parabola"; }

SolveRequest parse_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(),
                     e.byte > 0 ? e.byte - 1 : 0);
  }
  SolveRequest req;
  if (doc.is_array()) {
    req.coefficients = json_coefficients(doc);
    return req;
  }
  if (!doc.is_object()) throw ParseError("document must be an object or an array", 0);
  if (!doc.contains("coefficients")) throw ParseError("document has no 'coefficients'", 0);
  for (const auto& [key, value] : doc.items()) {
    if (key == "coefficients") {
      req.coefficients = json_coefficients(value);
    } else if (key == "steps" || key == "max_restarts") {
      if (!value.is_number_integer()) throw ParseError(key + " must be an integer", 0);
      (key == "steps" ? req.steps : req.max_restarts) = value.get<int>();
    } else if (key == "tol") {
      req.tol = json_real(value, key);
    } else if (key == "seed") {
      if (!value.is_number_unsigned()) throw ParseError("seed must be a nonnegative integer", 0);
      req.seed = value.get<std::uint64_t>();
    } else if (key == "certify") {
      if (!value.is_boolean()) throw ParseError("certify must be a boolean", 0);
      req.certify = value.get<bool>();
    } else if (key == "dump_paths") {
      if (!value.is_string()) throw ParseError("dump_paths must be a string", 0);
      req.dump_paths = value.get<std::string>();
    } else if (key == "start") {
      const auto s = value.is_string() ? value.get<std::string>() : std::string{};
      if (s == "unit") req.start = StartSystem::unit;
      else if (s == "gamma") req.start = StartSystem::gamma;
      else throw ParseError("start must be \"unit\" or \"gamma\"", 0);
    } else if (key == "path") {
      const auto s = value.is_string() ? value.get<std::string>() : std::string{};
      if (s == "line") req.path = PathShape::line;
      else if (s == "parabola") req.path = PathShape::parabola;
      else throw ParseError("path must be \"line\" or \"parabola\"", 0);
    } else {
      throw ParseError("unknown key '" + key + "'", 0);
    }
  }
  return req;
}

}  // namespace

SolveRequest parse_input(std::string_view text) {
  const auto first = std::find_if_not(text.begin(), text.end(), is_blank);
  if (first == text.end()) throw ParseError("empty input", 0);
  SolveRequest req = (*first == '{' || *first == '[') ? parse_json(text) : parse_csv(text);
  if (req.coefficients.size() < 2) {
    throw ParseError("need at least 2 coefficients, got " + std::to_string(req.coefficients.size()),
                     text.size());
  }
  return req;
}

std::string format_request(const SolveRequest& r) {
  json doc;
  json coeffs = json::array();
  for (const auto& c : r.coefficients) coeffs.push_back({c.real(), c.imag()});
  doc["coefficients"] = std::move(coeffs);
  if (r.steps) doc["steps"] = *r.steps;
  if (r.tol) doc["tol"] = *r.tol;
  if (r.seed) doc["seed"] = *r.seed;
  if (r.certify) doc["certify"] = *r.certify;
  if (r.dump_paths) doc["dump_paths"] = *r.dump_paths;
  if (r.start) doc["start"] = start_name(*r.start);
  if (r.path) doc["path"] = path_name(*r.path);
  if (r.max_restarts) doc["max_restarts"] = *r.max_restarts;
  return doc.dump();
}

SolveOptions options_for(const SolveRequest& r) {
  SolveOptions opt;
  if (r.steps) opt.tracker.steps = *r.steps;
  if (r.tol) opt.tracker.residual_tol = *r.tol;
  if (r.seed) opt.tracker.seed = *r.seed;
  if (r.max_restarts) opt.tracker.max_restarts = *r.max_restarts;
  if (r.certify) opt.certify = *r.certify;
  if (r.start) opt.start = *r.start;
  if (r.path) opt.path = *r.path;
  return opt;
}

namespace {

void fill_roots(SolveResponse& resp, const std::vector<RootReport>& reports) {
  for (const auto& r : reports) {
    resp.roots.push_back({r.value.real(), r.value.imag(), r.multiplicity, r.residual, r.certified,
                          r.path_indices});
  }
}

}  // namespace

SolveResponse run(const SolveRequest& request) {
  SolveResponse resp;
  try {
    const auto result = solve(Polynomial(request.coefficients), options_for(request));
    resp.success = true;
    resp.exit_code = kExitSuccess;
    fill_roots(resp, result.reports);
    resp.diagnostics = result.diagnostics;
    resp.paths = result.paths;
  } catch (const SolveError& e) {
    resp.exit_code = kExitSolverFailure;
    resp.error = e.what();
    fill_roots(resp, e.partial().reports);
    resp.diagnostics = e.partial().diagnostics;
    resp.paths = e.partial().paths;
  } catch (const Error& e) {
    resp.exit_code = kExitSolverFailure;
    resp.error = e.what();
  }
  return resp;
}

std::string render_response(const SolveResponse& resp) {
  nlohmann::ordered_json doc;
  doc["status"] = resp.success ? "success" : "failure";
  if (!resp.success) doc["error"] = resp.error;
  auto roots = nlohmann::ordered_json::array();
  for (const auto& r : resp.roots) {
    roots.push_back(nlohmann::ordered_json{{"re", r.re},
                     {"im", r.im},
                     {"multiplicity", r.multiplicity},
                     {"residual", r.residual},
                     {"certified", r.certified},
                     {"path_indices", r.path_indices}});
  }
  doc["roots"] = std::move(roots);
  const auto& d = resp.diagnostics;
  doc["diagnostics"] = nlohmann::ordered_json{{"degree", d.degree},
                        {"discriminant_modulus", d.discriminant_modulus},
                        {"sigma_member", d.sigma_member},
                        {"escape_radius", d.escape_radius},
                        {"restarts", d.restarts},
                        {"newton_steps", d.newton_steps},
                        {"steps", d.steps},
                        {"strategy", to_string(d.strategy)},
                        {"cluster_tolerance", d.cluster_tolerance},
                        {"restriction", d.restriction}};
  return doc.dump(2) + "\n";
}

void dump_paths(std::span<const TrackedPath> paths, std::ostream& out) {
  std::vector<const TrackedPath*> order;
  for (const auto& p : paths) order.push_back(&p);
  std::stable_sort(order.begin(), order.end(),
                   [](const TrackedPath* a, const TrackedPath* b) { return a->index < b->index; });
  std::ostringstream buf;
  buf << std::setprecision(std::numeric_limits<double>::max_digits10);
  buf << "path,t,re,im,residual\n";
  for (const auto* p : order) {
    for (const auto& s : p->samples) {
      buf << p->index << ',' << s.t << ',' << s.z.real() << ',' << s.z.imag() << ','
          << s.residual << '\n';
    }
  }
  out << buf.str();
}

void write_path_dump(std::span<const TrackedPath> paths, const std::string& filename) {
  std::ofstream file(filename, std::ios::binary | std::ios::trunc);
  if (!file) throw Error("cannot open path dump file '" + filename + "'");
  dump_paths(paths, file);
  file.flush();
  if (!file) throw Error("failed writing path dump file '" + filename + "'");
}

}  // namespace rootpath::cli
