#pragma once

// The two dimension tables, recomputed from normal forms and compared with
// the published values.

#include <cstdio>
#include <string>
#include <vector>

#include "bianchi/classify.hpp"
#include "bianchi/cohomology.hpp"

namespace bianchi {

struct UnimodularRow {
  std::string type;
  Mat3 q;
  // rank dF, dim orbit, dim Z_N^2, dim Z^2, dim H^2
  std::array<std::size_t, 5> values{};
};

struct NonUnimodularRow {
  std::string type;
  Mat3 q;
  // dim B^2, dim Z^2, dim H^2
  std::array<std::size_t, 3> values{};
};

struct Tables {
  std::vector<UnimodularRow> unimodular;
  std::vector<NonUnimodularRow> non_unimodular;
};

inline const std::array<const char*, 5> kUnimodularColumns{"rank dF", "dim orbit", "dim Z_N^2", "dim Z^2", "dim H^2"};
inline const std::array<const char*, 3> kNonUnimodularColumns{"dim B^2", "dim Z^2", "dim H^2"};

namespace detail {
inline Mat3 diag3(int a, int b, int c) {
  Mat3 m;
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  return m;
}
}  // namespace detail

/// Published values, one entry per normal form (the +- members share a row).
inline Tables expected_tables() {
  using detail::diag3;
  const Mat3 a3 = charge(2).q();
  return {{{"A0", Mat3(), {0, 0, 3, 9, 9}},
           {"A1", diag3(1, 0, 0), {1, 3, 2, 8, 5}},
           {"A2-", diag3(1, -1, 0), {2, 5, 1, 7, 2}},
           {"A2+", diag3(1, 1, 0), {2, 5, 1, 7, 2}},
           {"A3-", diag3(1, 1, -1), {3, 6, 0, 6, 0}},
           {"A3+", diag3(1, 1, 1), {3, 6, 0, 6, 0}}},
          {{"B0", a3, {3, 6, 3}},
           {"B1", diag3(1, 0, 0) + a3, {5, 6, 1}},
           {"B2+", diag3(1, 1, 0) + a3, {5, 6, 1}},
           {"B2-", diag3(1, -1, 0) + a3, {5, 6, 1}}}};
}

/// Recomputes every cell; only the normal forms are taken from the fixture.
inline Tables compute_tables() {
  Tables out = expected_tables();
  for (auto& row : out.unimodular) {
    const StructureTensor q(row.q);
    const CohomologyReport rep = cohomology_report(q);
    row.type = classify(q).name();
    row.values = {matrix_rank(row.q), rep.dim_B2, zeta_fiber_basis(row.q).size(), rep.dim_Z2, rep.dim_H2};
  }
  for (auto& row : out.non_unimodular) {
    const StructureTensor q(row.q);
    const CohomologyReport rep = cohomology_report(q);
    row.type = classify(q).name();
    row.values = {rep.dim_B2, rep.dim_Z2, rep.dim_H2};
  }
  return out;
}

/// Cell-level differences, empty when the tables agree.
inline std::vector<std::string> diff_tables(const Tables& expected, const Tables& computed) {
  std::vector<std::string> out;
  auto cell = [&](const std::string& table, const std::string& row, const char* col, std::size_t e, std::size_t c) {
    if (e != c)
      out.push_back(table + " row " + row + " column '" + col + "': expected " + std::to_string(e) + ", computed " +
                    std::to_string(c));
  };
  for (std::size_t r = 0; r < expected.unimodular.size(); ++r) {
    const auto& e = expected.unimodular[r];
    const auto& c = computed.unimodular[r];
    if (e.type != c.type) out.push_back("unimodular row " + e.type + ": classified as " + c.type);
    for (std::size_t k = 0; k < 5; ++k) cell("unimodular", e.type, kUnimodularColumns[k], e.values[k], c.values[k]);
  }
  for (std::size_t r = 0; r < expected.non_unimodular.size(); ++r) {
    const auto& e = expected.non_unimodular[r];
    const auto& c = computed.non_unimodular[r];
    if (e.type != c.type) out.push_back("non-unimodular row " + e.type + ": classified as " + c.type);
    for (std::size_t k = 0; k < 3; ++k)
      cell("non-unimodular", e.type, kNonUnimodularColumns[k], e.values[k], c.values[k]);
  }
  return out;
}

inline std::string render_tables(const Tables& t) {
  std::string out;
  char buf[128];
  out += "Unimodular structures\n";
  std::snprintf(buf, sizeof buf, "%-5s %8s %10s %10s %8s %8s\n", "type", "rank dF", "dim orbit", "dim Z_N^2",
                "dim Z^2", "dim H^2");
  out += buf;
  for (const auto& r : t.unimodular) {
    std::snprintf(buf, sizeof buf, "%-5s %8zu %10zu %10zu %8zu %8zu\n", r.type.c_str(), r.values[0], r.values[1],
                  r.values[2], r.values[3], r.values[4]);
    out += buf;
  }
  out += "\nNon-unimodular structures\n";
  std::snprintf(buf, sizeof buf, "%-5s %8s %8s %8s\n", "type", "dim B^2", "dim Z^2", "dim H^2");
  out += buf;
  for (const auto& r : t.non_unimodular) {
    std::snprintf(buf, sizeof buf, "%-5s %8zu %8zu %8zu\n", r.type.c_str(), r.values[0], r.values[1], r.values[2]);
    out += buf;
  }
  return out;
}

}  // namespace bianchi
