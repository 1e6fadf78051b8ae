#include "monodromy/report/jobs.hpp"

#include <spdlog/spdlog.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <thread>
#include <unistd.h>

#include "monodromy/random.hpp"

namespace monodromy::report {

namespace {

namespace fs = std::filesystem;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string one_line(std::string s) {
  for (auto& c : s)
    if (c == '\n' || c == '\r') c = ' ';
  return s;
}

int fail(Streams io, int code, std::string_view kind, const std::string& reason) {
  io.diag << "error: exit=" << code << " kind=" << kind << " reason=" << one_line(reason) << '\n';
  return code;
}

std::string read_input(const JobSpec& spec, Streams io) {
  std::ostringstream buf;
  if (spec.input.empty() || spec.input == "-") {
    buf << io.in.rdbuf();
    return buf.str();
  }
  std::ifstream f(spec.input, std::ios::binary);
  if (!f) throw IoError("cannot read " + spec.input);
  buf << f.rdbuf();
  return buf.str();
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

void check_output_writable(const JobSpec& spec) {
  if (spec.output.empty() || spec.output == "-") return;
  if (fs::exists(spec.output) && !spec.force)
    throw IoError("output " + spec.output + " exists; pass --force to overwrite");
}

// Whole-file write through a temporary and rename.
void write_output(const JobSpec& spec, Streams io, const json& doc) {
  const std::string text = doc.dump(2) + "\n";
  if (spec.output.empty() || spec.output == "-") {
    io.out << text;
    return;
  }
  const fs::path target(spec.output);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot write " + tmp.string());
    f << text;
    if (!f.flush()) throw IoError("cannot write " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw IoError("cannot move output into place at " + spec.output + ": " + ec.message());
  }
}

// Maps exceptions from a job body to exit codes and a one-line reason.
template <class Body>
int guarded_job(Streams io, Body&& body) {
  try {
    return body();
  } catch (const IoError& e) {
    return fail(io, kIoOrParseError, "io", e.what());
  } catch (const ParseError& e) {
    return fail(io, kIoOrParseError, "parse", e.what());
  } catch (const json::exception& e) {
    return fail(io, kIoOrParseError, "parse", e.what());
  } catch (const DomainError& e) {
    return fail(io, kRejectedInput, "rejected-input", e.what());
  } catch (const DimensionMismatch& e) {
    return fail(io, kRejectedInput, "dimension-mismatch", e.what());
  } catch (const InternalError& e) {
    return fail(io, kIoOrParseError, "internal", e.what());
  } catch (const std::exception& e) {
    return fail(io, kIoOrParseError, "io", e.what());
  }
}

json vector_to_json(const RatVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(rational_to_json(x));
  return out;
}

bool is_primitive_integral(const Covector& w) {
  Integer content = 0;
  for (const auto& c : w.coefficients) {
    if (c.get_den() != 1) return false;
    content = gcd(content, c.get_num());
  }
  return content == 1;
}

}  // namespace

std::optional<Mode> parse_mode(std::string_view name) {
  if (name == "certify") return Mode::certify;
  if (name == "polytope") return Mode::polytope;
  if (name == "batch") return Mode::batch;
  if (name == "verify") return Mode::verify;
  return std::nullopt;
}

std::pair<std::size_t, std::size_t> parse_genus_range(std::string_view text) {
  auto to_count = [&](std::string_view s) {
    std::size_t v = 0;
    if (s.empty()) throw ParseError("malformed genus range \"" + std::string(text) + "\"");
    for (char c : s) {
      if (c < '0' || c > '9') throw ParseError("malformed genus range \"" + std::string(text) + "\"");
      v = v * 10 + static_cast<std::size_t>(c - '0');
      if (v > 1'000'000) throw ParseError("genus out of range");
    }
    return v;
  };
  const auto sep = text.find_first_of("-:");
  if (sep == std::string_view::npos) {
    auto g = to_count(text);
    return {g, g};
  }
  return {to_count(text.substr(0, sep)), to_count(text.substr(sep + 1))};
}

int run_certify(const JobSpec& spec, Streams io) {
  return guarded_job(io, [&]() -> int {
    check_output_writable(spec);
    const json doc = parse_json(read_input(spec, io));
    CertifyInput input = certify_input_from_json(doc);
    Certificate cert = std::visit([](const auto& in) { return certify(in); }, input);
    auto problems = verify_certificate(cert);
    if (!problems.empty()) throw InternalError("emitted certificate fails verification: " + problems.front());
    spdlog::debug("certified genus {} input, k = {}", cert.genus(), cert.block_form.k);
    if (spec.verbose) io.diag << render_certificate_report(cert);
    write_output(spec, io, certificate_to_json(cert, {spec.emit_torsion}));
    return kSuccess;
  });
}

int run_polytope(const JobSpec& spec, Streams io) {
  return guarded_job(io, [&]() -> int {
    check_output_writable(spec);
    const json doc = parse_json(read_input(spec, io));
    const json& pj = doc.contains("polytope") ? doc.at("polytope") : doc;
    Polytope P = polytope_from_json(pj);
    json records = json::array();
    if (doc.contains("covectors")) {
      if (!doc.at("covectors").is_array()) throw ParseError("\"covectors\" must be an array");
      for (const auto& cj : doc.at("covectors")) {
        Covector w = covector_from_json(cj);
        json rec;
        rec["covector"] = vector_to_json(w.coefficients);
        Rational t = thickness(P, w);
        rec["T"] = rational_to_json(t);
        rec["unit_ball"] = t <= 1;
        auto cone = cone_of(P, w);
        if (cone) {
          rec["cone"] = json::array({vector_to_json(cone->argmin_vertex), vector_to_json(cone->argmax_vertex)});
          if (is_primitive_integral(w)) {
            try {
              auto chi = euler_char_of_class(P, w);
              rec["chi"] = integer_to_json(chi.chi);
              if (chi.point_polytope)
                rec["chi_note"] = "point polytope: thickness gives chi = 0 but G = Z has chi(ker) = 1";
            } catch (const DomainError& e) {
              rec["chi_error"] = e.what();
            }
          }
        } else {
          rec["cone"] = "boundary";
        }
        records.push_back(std::move(rec));
      }
    }
    spdlog::debug("evaluated {} covectors on a polytope with {} vertices", records.size(), P.vertices().size());
    write_output(spec, io, json{{"polytope", polytope_to_json(P)}, {"records", records}});
    return kSuccess;
  });
}

IntMatrix batch_instance(std::uint64_t seed, std::size_t index, std::size_t genus_min, std::size_t genus_max) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  const std::size_t g = genus_min + static_cast<std::size_t>(rng() % (genus_max - genus_min + 1));
  return UnimodularSampler{g, 3}(rng);
}

int run_batch(const JobSpec& spec, Streams io) {
  return guarded_job(io, [&]() -> int {
    check_output_writable(spec);
    if (spec.count > kMaxBatchCount) throw DomainError("count exceeds " + std::to_string(kMaxBatchCount));
    if (spec.genus_min < 1 || spec.genus_min > spec.genus_max || spec.genus_max > kMaxGenus)
      throw DomainError("genus range must satisfy 1 <= min <= max <= " + std::to_string(kMaxGenus));

    std::vector<json> instances(spec.count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < spec.count; i = next++) {
        json inst;
        inst["index"] = std::to_string(i);
        IntMatrix f = batch_instance(spec.seed, i, spec.genus_min, spec.genus_max);
        inst["genus"] = std::to_string(f.rows());
        try {
          Certificate c = certify(f);
          auto problems = verify_certificate(c);
          if (problems.empty()) {
            inst["status"] = "ok";
          } else {
            inst["status"] = "failed";
            inst["reason"] = problems.front();
          }
          inst["certificate"] = certificate_to_json(c, {spec.emit_torsion});
        } catch (const std::exception& e) {
          inst["status"] = "failed";
          inst["reason"] = e.what();
        }
        instances[i] = std::move(inst);
      }
    };
    unsigned threads = spec.threads ? spec.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(spec.count, 1)));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::size_t ok = 0;
    std::map<std::size_t, std::size_t> histogram;
    for (const auto& inst : instances) {
      if (inst.at("status") != "ok") continue;
      ++ok;
      ++histogram[count_from_json(inst.at("certificate").at("homology").at("dim_M"))];
    }
    json hist = json::object();
    for (const auto& [dim, n] : histogram) hist[std::to_string(dim)] = std::to_string(n);
    json summary = {{"count", std::to_string(spec.count)},
                    {"successes", std::to_string(ok)},
                    {"failures", std::to_string(spec.count - ok)},
                    {"dimension_histogram", hist}};
    json doc = {{"format", kBatchFormat},
                {"seed", std::to_string(spec.seed)},
                {"genus", {{"min", std::to_string(spec.genus_min)}, {"max", std::to_string(spec.genus_max)}}},
                {"summary", summary},
                {"instances", instances}};
    spdlog::debug("batch: {} of {} instances certified", ok, spec.count);
    if (spec.verbose) io.diag << render_batch_table(summary);
    write_output(spec, io, doc);
    return ok == spec.count ? kSuccess : kIoOrParseError;
  });
}

int run_verify(const JobSpec& spec, Streams io) {
  return guarded_job(io, [&]() -> int {
    check_output_writable(spec);
    const json doc = parse_json(read_input(spec, io));
    std::vector<std::pair<std::string, const json*>> items;
    if (doc.contains("instances")) {
      for (const auto& inst : doc.at("instances"))
        items.emplace_back(inst.value("index", std::string("?")), inst.contains("certificate") ? &inst.at("certificate") : nullptr);
    } else {
      items.emplace_back("0", &doc);
    }
    json failures = json::array();
    for (const auto& [index, cj] : items) {
      std::vector<std::string> problems;
      if (!cj) {
        problems.emplace_back("instance carries no certificate");
      } else {
        problems = verify_certificate(certificate_from_json(*cj));
      }
      if (!problems.empty()) failures.push_back({{"index", index}, {"problems", problems}});
    }
    const bool valid = failures.empty();
    write_output(spec, io, json{{"valid", valid}, {"checked", std::to_string(items.size())}, {"failures", failures}});
    if (!valid) return fail(io, kRejectedInput, "invalid-certificate",
                            std::to_string(failures.size()) + " of " + std::to_string(items.size()) + " certificates failed verification");
    return kSuccess;
  });
}

int run(const JobSpec& spec, Streams io) {
  switch (spec.mode) {
    case Mode::certify: return run_certify(spec, io);
    case Mode::polytope: return run_polytope(spec, io);
    case Mode::batch: return run_batch(spec, io);
    case Mode::verify: return run_verify(spec, io);
  }
  return kIoOrParseError;
}

std::string render_certificate_report(const Certificate& c) {
  std::ostringstream os;
  const auto& f = c.block_form;
  os << "genus                 " << c.genus() << '\n'
     << "f_*                   " << to_string(c.f_star) << '\n'
     << "conjugator P          " << to_string(f.P) << '\n'
     << "fixed block k         " << f.k << (f.v_minus_id_invertible() ? "" : "  (V - Id singular: Jordan block at 1)") << '\n'
     << "A                     " << to_string(c.handlebody.A()) << '\n'
     << "B                     " << to_string(c.handlebody.B()) << '\n'
     << "unipotent block       " << to_string(c.unipotent_block) << '\n'
     << "twist word            ";
  if (c.twist_word.empty()) os << "(empty)";
  for (const auto& [gen, e] : c.twist_word.factors()) {
    if (gen.kind == TwistGenerator::Kind::alpha)
      os << "alpha(" << gen.i << ")";
    else
      os << "delta(" << gen.i << "," << gen.j << ")";
    os << "^" << e.get_str() << ' ';
  }
  os << '\n'
     << "criterion             " << (c.criterion ? "holds" : "fails") << '\n'
     << "dim H1(M;Q), H1(W;Q)  " << c.homology.dim_h1_M << ", " << c.homology.dim_h1_W << '\n'
     << "torsion H1(M;Z)       ";
  if (c.homology.torsion_M.empty()) os << "none";
  for (const auto& t : c.homology.torsion_M) os << "Z/" << t.get_str() << ' ';
  os << '\n' << "N, T                  " << c.norms.N.get_str() << ", " << c.norms.T.get_str() << '\n';
  return os.str();
}

std::string render_batch_table(const json& summary) {
  std::ostringstream os;
  os << "instances   " << summary.at("count").get<std::string>() << '\n'
     << "certified   " << summary.at("successes").get<std::string>() << '\n'
     << "failed      " << summary.at("failures").get<std::string>() << '\n'
     << "dim H1(M;Q) | count\n";
  for (const auto& [dim, n] : summary.at("dimension_histogram").items())
    os << "  " << dim << std::string(dim.size() < 10 ? 10 - dim.size() : 1, ' ') << "| " << n.get<std::string>() << '\n';
  return os.str();
}

}  // namespace monodromy::report
