#include "monodromy/report/json_io.hpp"

#include <cctype>
#include <limits>

namespace monodromy::report {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

bool is_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return all_digits(s);
}

Integer integer_from_text(const std::string& s) {
  if (!is_integer_text(s)) throw ParseError("not a decimal integer: \"" + s + "\"");
  return Integer(s.front() == '+' ? s.substr(1) : s);
}

// Wraps json type errors (wrong kinds, missing keys) as ParseError.
template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace

json integer_to_json(const Integer& x) { return x.get_str(); }

Integer integer_from_json(const json& j) {
  if (j.is_string()) return integer_from_text(j.get<std::string>());
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    return Integer(std::to_string(j.get<std::int64_t>()));
  }
  throw ParseError("expected an integer (decimal string or JSON integer), got " + j.dump());
}

std::size_t count_from_json(const json& j) {
  Integer x = integer_from_json(j);
  if (x < 0 || !x.fits_ulong_p()) throw ParseError("expected a non-negative count, got " + j.dump());
  return static_cast<std::size_t>(x.get_ui());
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(integer_from_text(text));
  std::string num = text.substr(0, slash);
  std::string den = text.substr(slash + 1);
  if (!is_integer_text(num) || !all_digits(den)) throw ParseError("not a rational p/q: \"" + text + "\"");
  Integer d(den);
  if (d == 0) throw ParseError("zero denominator in \"" + text + "\"");
  Rational q(integer_from_text(num), d);
  q.canonicalize();
  return q;
}

json rational_to_json(const Rational& x) { return x.get_str(); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  return Rational(integer_from_json(j));
}

json matrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(integer_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("matrix must be an array of rows");
  if (j.empty()) return IntMatrix(0, 0);
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  IntMatrix m(j.size(), cols);
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw ParseError("matrix rows must be arrays of equal length");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = integer_from_json(j[i][c]);
  }
  return m;
}

IntMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols) {
  IntMatrix m = matrix_from_json(j);
  if (m.rows() == rows && m.cols() == cols) return m;
  if (m.empty() && (rows == 0 || cols == 0)) return IntMatrix(rows, cols);
  throw ParseError("matrix has shape " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                   ", expected " + std::to_string(rows) + "x" + std::to_string(cols));
}

json twist_word_to_json(const TwistWord& w) {
  json out = json::array();
  for (const auto& [gen, e] : w.factors()) {
    json f;
    if (gen.kind == TwistGenerator::Kind::alpha) {
      f["gen"] = "alpha";
      f["i"] = gen.i;
    } else {
      f["gen"] = "delta";
      f["i"] = gen.i;
      f["j"] = gen.j;
    }
    f["exp"] = integer_to_json(e);
    out.push_back(std::move(f));
  }
  return out;
}

TwistWord twist_word_from_json(const json& j, std::size_t g) {
  if (!j.is_array()) throw ParseError("twist word must be an array");
  std::vector<TwistFactor> factors;
  for (const auto& f : j) {
    const std::string gen = guarded("twist factor", [&] { return field(f, "gen").get<std::string>(); });
    const std::size_t i = count_from_json(field(f, "i"));
    TwistGenerator generator;
    if (gen == "alpha") {
      generator = TwistGenerator::alpha(i);
    } else if (gen == "delta") {
      generator = TwistGenerator::delta(i, count_from_json(field(f, "j")));
    } else {
      throw ParseError("unknown twist generator \"" + gen + "\"");
    }
    factors.push_back({generator, integer_from_json(field(f, "exp"))});
  }
  return TwistWord(g, factors);
}

CertifyInput certify_input_from_json(const json& j) {
  return guarded("certify input", [&]() -> CertifyInput {
    if (!j.is_object()) throw ParseError("input must be a JSON object");
    if (j.contains("matrix")) {
      IntMatrix m = matrix_from_json(j.at("matrix"));
      return m;
    }
    if (j.contains("images")) {
      const auto& images = j.at("images");
      if (!images.is_array()) throw ParseError("\"images\" must be an array of words");
      const std::size_t rank = j.contains("rank") ? count_from_json(j.at("rank")) : images.size();
      std::vector<std::string> words;
      for (const auto& w : images) words.push_back(w.get<std::string>());
      return FreeEndomorphism::parse(rank, words);
    }
    throw ParseError("input needs either \"matrix\" or \"rank\" + \"images\"");
  });
}

json certify_input_to_json(const CertifyInput& in) {
  if (const auto* f = std::get_if<FreeEndomorphism>(&in)) {
    json images = json::array();
    for (const auto& w : f->images()) images.push_back(to_string(w, f->rank()));
    return {{"rank", std::to_string(f->rank())}, {"images", images}};
  }
  return {{"matrix", matrix_to_json(std::get<IntMatrix>(in))}};
}

json certificate_to_json(const Certificate& c, const CertificateOptions& options) {
  json out;
  out["format"] = kCertificateFormat;
  out["genus"] = std::to_string(c.genus());
  out["input"] = c.word_input ? certify_input_to_json(*c.word_input) : certify_input_to_json(c.f_star);
  out["f_star"] = matrix_to_json(c.f_star);
  out["automorphism_verified"] = c.automorphism_verified;
  out["conjugator"] = matrix_to_json(c.block_form.P);
  out["f_star_conjugated"] = matrix_to_json(c.block_form.conjugated());
  out["blocks"] = {{"U", matrix_to_json(c.block_form.U)},
                   {"V", matrix_to_json(c.block_form.V)},
                   {"k", std::to_string(c.block_form.k)},
                   {"v_minus_id_invertible", c.block_form.v_minus_id_invertible()}};
  out["A"] = matrix_to_json(c.handlebody.A());
  out["B"] = matrix_to_json(c.handlebody.B());
  out["unipotent_block"] = matrix_to_json(c.unipotent_block);
  out["twist_word"] = twist_word_to_json(c.twist_word);
  out["criterion"] = c.criterion;
  json homology = {{"dim_M", std::to_string(c.homology.dim_h1_M)},
                   {"dim_W", std::to_string(c.homology.dim_h1_W)},
                   {"iota_iso", c.homology.iota_iso}};
  if (options.emit_torsion) {
    json torsion = json::array();
    for (const auto& t : c.homology.torsion_M) torsion.push_back(integer_to_json(t));
    homology["torsion_M"] = std::move(torsion);
  }
  out["homology"] = std::move(homology);
  out["norms"] = {{"fiber_genus", std::to_string(c.norms.fiber_genus)},
                  {"handlebody_rank", std::to_string(c.norms.handlebody_rank)},
                  {"N", integer_to_json(c.norms.N)},
                  {"T", integer_to_json(c.norms.T)}};
  out["family_note"] = c.family_note;
  return out;
}

Certificate certificate_from_json(const json& j) {
  return guarded("certificate", [&] {
    if (!j.is_object()) throw ParseError("certificate must be a JSON object");
    if (j.contains("format") && j.at("format") != kCertificateFormat)
      throw ParseError("unsupported certificate format " + j.at("format").dump());
    const std::size_t g = count_from_json(field(j, "genus"));
    IntMatrix f_star = matrix_from_json(field(j, "f_star"), g, g);

    std::optional<FreeEndomorphism> words;
    if (j.contains("input") && j.at("input").contains("images")) {
      auto in = certify_input_from_json(j.at("input"));
      words = std::get<FreeEndomorphism>(in);
    }

    const json& blocks = field(j, "blocks");
    const std::size_t k = count_from_json(field(blocks, "k"));
    if (k > g) throw ParseError("blocks.k exceeds the genus");
    FixedBlockForm form{matrix_from_json(field(j, "conjugator"), g, g),
                        matrix_from_json(field(blocks, "U"), k, g - k),
                        matrix_from_json(field(blocks, "V"), g - k, g - k), k};

    HandlebodyMatrix h(matrix_from_json(field(j, "A"), g, g), matrix_from_json(field(j, "B"), g, g));
    IntMatrix unipotent = matrix_from_json(field(j, "unipotent_block"), g, g);
    TwistWord word = twist_word_from_json(field(j, "twist_word"), g);

    const json& hj = field(j, "homology");
    HomologyReport homology;
    homology.dim_h1_M = count_from_json(field(hj, "dim_M"));
    homology.dim_h1_W = count_from_json(field(hj, "dim_W"));
    homology.iota_iso = hj.value("iota_iso", false);
    if (hj.contains("torsion_M")) {
      for (const auto& t : hj.at("torsion_M")) homology.torsion_M.push_back(integer_from_json(t));
    } else if (validate(h)) {
      homology.torsion_M = h1_surface_torus(full_matrix(h)).torsion;
    }

    const json& nj = field(j, "norms");
    NormBookkeeping norms{count_from_json(field(nj, "fiber_genus")), count_from_json(field(nj, "handlebody_rank")),
                          integer_from_json(field(nj, "N")), integer_from_json(field(nj, "T"))};

    return Certificate{std::move(words),
                       std::move(f_star),
                       std::move(form),
                       std::move(h),
                       std::move(unipotent),
                       std::move(word),
                       field(j, "criterion").get<bool>(),
                       std::move(homology),
                       std::move(norms),
                       j.value("automorphism_verified", false),
                       j.value("family_note", std::string())};
  });
}

Polytope polytope_from_json(const json& j) {
  return guarded("polytope", [&] {
    const std::size_t dim = count_from_json(field(j, "dim"));
    const json& vs = field(j, "vertices");
    if (!vs.is_array()) throw ParseError("\"vertices\" must be an array of points");
    std::vector<RatVector> points;
    for (const auto& p : vs) {
      if (!p.is_array()) throw ParseError("each vertex must be an array of coordinates");
      RatVector v;
      for (const auto& x : p) v.push_back(rational_from_json(x));
      points.push_back(std::move(v));
    }
    return Polytope::from_points(dim, std::move(points));
  });
}

json polytope_to_json(const Polytope& p) {
  json vs = json::array();
  for (const auto& v : p.vertices()) {
    json pt = json::array();
    for (const auto& x : v) pt.push_back(rational_to_json(x));
    vs.push_back(std::move(pt));
  }
  return {{"dim", std::to_string(p.dim())}, {"vertices", vs}};
}

Covector covector_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("covector must be an array of rationals");
  Covector w;
  for (const auto& x : j) w.coefficients.push_back(rational_from_json(x));
  return w;
}

}  // namespace monodromy::report
