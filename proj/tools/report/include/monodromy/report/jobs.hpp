#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "monodromy/mapping_torus.hpp"
#include "monodromy/report/json_io.hpp"

namespace monodromy::report {

enum class Mode { certify, polytope, batch, verify };

enum ExitCode : int {
  kSuccess = 0,
  kIoOrParseError = 1,
  kRejectedInput = 2,
};

inline constexpr std::size_t kMaxBatchCount = 100000;
inline constexpr std::size_t kMaxGenus = 64;

struct JobSpec {
  Mode mode = Mode::certify;
  std::string input;   // empty or "-" reads the input stream
  std::string output;  // empty writes the output stream
  bool force = false;  // overwrite an existing output file
  bool emit_torsion = true;
  std::uint64_t seed = 1;
  std::size_t count = 10;
  std::size_t genus_min = 2;
  std::size_t genus_max = 6;
  unsigned threads = 0;  // 0: hardware concurrency
  bool verbose = false;
};

std::optional<Mode> parse_mode(std::string_view name);
/// "3", "2-6" or "2:6". Throws ParseError.
std::pair<std::size_t, std::size_t> parse_genus_range(std::string_view text);

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& diag;  // human-readable reports and one-line error reasons
};

int run_certify(const JobSpec& spec, Streams io);
int run_polytope(const JobSpec& spec, Streams io);
int run_batch(const JobSpec& spec, Streams io);
int run_verify(const JobSpec& spec, Streams io);
int run(const JobSpec& spec, Streams io);

/// Generated instance `index` of a batch run: deterministic in (seed, index).
IntMatrix batch_instance(std::uint64_t seed, std::size_t index, std::size_t genus_min, std::size_t genus_max);

std::string render_certificate_report(const Certificate& c);
std::string render_batch_table(const json& summary);

}  // namespace monodromy::report
