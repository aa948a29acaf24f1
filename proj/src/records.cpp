#include "harmonia/records.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace harmonia {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  return out;
}

void expect_header(std::istream& is, const std::string& header) {
  std::string line;
  if (!std::getline(is, line)) throw Error(ErrorKind::InvalidArgument, "empty CSV stream");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != header) throw Error(ErrorKind::InvalidArgument, "unexpected CSV header '" + line + "'");
}

template <typename Row>
void for_each_row(std::istream& is, std::size_t columns, Row row) {
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto cells = split_csv_line(line);
    if (cells.size() != columns) throw Error(ErrorKind::InvalidArgument, "malformed CSV row '" + line + "'");
    row(cells);
  }
}

}  // namespace

std::string format_double17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double parse_double(const std::string& text) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0' || (errno == ERANGE && std::isinf(v)))
    throw Error(ErrorKind::InvalidArgument, "not a number: '" + text + "'");
  return v;
}

void write_principal_csv(std::ostream& os, const TransformRecord& r) {
  os << "re_lambda,im_lambda,re_F,im_F\n";
  for (const auto& [z, F] : r.principal)
    os << format_double17(z.real()) << ',' << format_double17(z.imag()) << ',' << format_double17(F.real()) << ','
       << format_double17(F.imag()) << '\n';
}

void write_discrete_csv(std::ostream& os, const TransformRecord& r) {
  os << "k,re_F,im_F\n";
  for (const auto& [k, F] : r.discrete)
    os << k << ',' << format_double17(F.real()) << ',' << format_double17(F.imag()) << '\n';
}

TransformRecord read_transform_csv(std::istream& principal, std::istream* discrete, int n) {
  TransformRecord r;
  r.n = n;
  expect_header(principal, "re_lambda,im_lambda,re_F,im_F");
  for_each_row(principal, 4, [&](const std::vector<std::string>& c) {
    r.principal.emplace_back(cplx(parse_double(c[0]), parse_double(c[1])), cplx(parse_double(c[2]), parse_double(c[3])));
  });
  if (discrete) {
    expect_header(*discrete, "k,re_F,im_F");
    for_each_row(*discrete, 3, [&](const std::vector<std::string>& c) {
      r.discrete.emplace_back(std::stoi(c[0]), cplx(parse_double(c[1]), parse_double(c[2])));
    });
  }
  return r;
}

std::string transform_record_to_json(const TransformRecord& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["principal"] = nlohmann::ordered_json::array();
  for (const auto& [z, F] : r.principal)
    j["principal"].push_back({{"re_lambda", z.real()}, {"im_lambda", z.imag()}, {"re_F", F.real()}, {"im_F", F.imag()}});
  j["discrete"] = nlohmann::ordered_json::array();
  for (const auto& [k, F] : r.discrete) j["discrete"].push_back({{"k", k}, {"re_F", F.real()}, {"im_F", F.imag()}});
  return j.dump(2);
}

TransformRecord transform_record_from_json(const std::string& text) {
  TransformRecord r;
  try {
    const auto j = nlohmann::json::parse(text);
    r.n = j.at("n").get<int>();
    for (const auto& e : j.at("principal"))
      r.principal.emplace_back(cplx(e.at("re_lambda").get<double>(), e.at("im_lambda").get<double>()),
                               cplx(e.at("re_F").get<double>(), e.at("im_F").get<double>()));
    for (const auto& e : j.at("discrete"))
      r.discrete.emplace_back(e.at("k").get<int>(), cplx(e.at("re_F").get<double>(), e.at("im_F").get<double>()));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("transform record JSON: ") + e.what());
  }
  return r;
}

void write_reconstruction_csv(std::ostream& os, const std::vector<ReconstructionRow>& rows) {
  os << "t,re_f,re_reconstruction,abs_error\n";
  for (const auto& r : rows)
    os << format_double17(r.t) << ',' << format_double17(r.f) << ',' << format_double17(r.reconstruction) << ','
       << format_double17(r.abs_error) << '\n';
}

std::vector<ReconstructionRow> read_reconstruction_csv(std::istream& is) {
  std::vector<ReconstructionRow> rows;
  expect_header(is, "t,re_f,re_reconstruction,abs_error");
  for_each_row(is, 4, [&](const std::vector<std::string>& c) {
    rows.push_back({parse_double(c[0]), parse_double(c[1]), parse_double(c[2]), parse_double(c[3])});
  });
  return rows;
}

}  // namespace harmonia
