#pragma once

// Input documents, report documents and atomic file output.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "rhh/algebra.hpp"
#include "rhh/liealg.hpp"
#include "rhh/verify.hpp"

namespace rhh::io {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

enum class InputKind { StructureConstants, Quiver, Catalog, RestrictedLieFixture };
std::string to_string(InputKind k);

struct InputDocument {
  int format_version = kFormatVersion;
  std::uint32_t p = 2;
  InputKind kind = InputKind::Catalog;
  /// Filled for every kind except restricted_lie_fixture.
  std::optional<FDCategory> category;
  std::optional<RestrictedLie> lie;
  std::string id;
};

/// Throws ParseError naming the offending field; structural validation errors
/// (associativity, unit, prime) propagate with their own codes.
InputDocument parse_document(const Json& j);
InputDocument load_document(const std::filesystem::path& path);

Json category_document(const FDCategory& c);
Json quiver_document(const QuiverPresentation& q);
Json lie_document(const RestrictedLie& l);

Json to_json(const Fingerprint& fp);
Json to_json(const RestrictedLie& l);
Json to_json(const PrimeMatrix& m);
Json to_json(const Failure& f);

/// Serialized with two-space indentation and a trailing newline, written to a
/// temporary file next to `path` and renamed into place.
void write_atomic(const std::filesystem::path& path, const Json& doc);

// ---------------------------------------------------------------- commands

struct ComputeOptions {
  int degree_max = 3;
  bool normalized = true;
  /// Upper bound on the bytes of any one cochain vector or matrix; 0 keeps the defaults.
  std::uint64_t cap_bytes = 0;
};

Json compute_report(const InputDocument& doc, const ComputeOptions& opt);

Json compare_report(const InputDocument& a, const InputDocument& b, std::size_t budget);

struct SuiteResult {
  Json report;
  std::size_t failures = 0;
};

/// Suites: appendix, welldefined, morita, zeta, all. BadParameter for anything else.
SuiteResult run_suite(const std::string& suite, std::uint64_t seed, std::size_t trials);

}  // namespace rhh::io
