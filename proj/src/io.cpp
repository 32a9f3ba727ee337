// Copyright 2026 The mfcat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mfcat/io.hpp"

#include <fstream>
#include <sstream>

#include "mfcat/error.hpp"

namespace mfcat::io {

namespace fs = std::filesystem;

Source Source::read(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return Source(path.string(), ss.str());
}

std::string Source::locate(std::size_t offset) const {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text_.size(); ++i) {
    if (text_[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return name_ + ":" + std::to_string(line) + ":" + std::to_string(col);
}

std::string Source::locate_string(const std::string& value, std::size_t inner) const {
  const auto pos = text_.find('"' + value + '"');
  if (pos == std::string::npos) return name_;
  return locate(pos + 1 + inner);
}

Json Source::parse() const {
  try {
    return Json::parse(text_);
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t off = e.byte > 0 ? e.byte - 1 : 0;
    std::string msg = e.what();
    // Drop the library prefix "[json.exception.parse_error.101] ".
    if (const auto p = msg.find("] "); p != std::string::npos) msg = msg.substr(p + 2);
    if (msg.rfind("parse error at line", 0) == 0) {
      if (const auto p = msg.find(": "); p != std::string::npos) msg = msg.substr(p + 2);
    }
    throw ParseError(ErrorCode::ParseError, locate(off) + ": " + msg, off);
  }
}

namespace {

[[noreturn]] void fail(const Source& src, const std::string& what, ErrorCode code = ErrorCode::ParseError) {
  throw ParseError(code, src.name() + ": " + what, 0);
}

const Json& need(const Json& j, const char* key, const Source& src) {
  if (!j.is_object()) fail(src, "expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) fail(src, std::string("missing key \"") + key + "\"");
  return *it;
}

std::string scalar_text(const Json& j, const Source& src, const std::string& what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  fail(src, what + ": expected a string or an integer");
}

Scalar scalar_from(const Json& j, Field f, const Source& src, const std::string& what) {
  const std::string s = scalar_text(j, src, what);
  try {
    return Scalar::parse(f, s);
  } catch (const Error& e) {
    throw ParseError(e.code(), src.locate_string(s) + ": " + what + ": " + e.what(), 0);
  }
}

Poly poly_from(const Json& j, const Ring& ring, const Source& src, const std::string& what) {
  const std::string s = scalar_text(j, src, what);
  try {
    return parse_poly(s, ring);
  } catch (const ParseError& e) {
    throw ParseError(e.code(),
                     src.locate_string(s, e.offset()) + ": " + what + ": " + e.what() +
                         " in \"" + s + "\"",
                     e.offset());
  } catch (const Error& e) {
    throw ParseError(e.code(), src.locate_string(s) + ": " + what + ": " + e.what(), 0);
  }
}

PolyMatrix matrix_from(const Json& j, const Ring& ring, std::size_t rows, std::size_t cols,
                       const Source& src, const std::string& what) {
  const std::string shape = std::to_string(rows) + "x" + std::to_string(cols);
  if (!j.is_array() || j.size() != rows) fail(src, what + " must be a " + shape + " matrix", ErrorCode::ShapeMismatch);
  PolyMatrix m(ring, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) {
      fail(src, what + " must be a " + shape + " matrix", ErrorCode::ShapeMismatch);
    }
    for (std::size_t c = 0; c < cols; ++c) {
      m(r, c) = poly_from(j[r][c], ring, src,
                          what + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
    }
  }
  return m;
}

Json matrix_to_json(const PolyMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json mat_to_json(const Mat& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json homotopy_pair(const Homotopy& h) {
  Json j;
  j["s"] = matrix_to_json(h.s);
  j["t"] = matrix_to_json(h.t);
  return j;
}

Json f_pair(const MFMorphism& f) {
  Json j;
  j["f1"] = matrix_to_json(f.f1());
  j["f0"] = matrix_to_json(f.f0());
  return j;
}

// Prefixes non-parse errors with the file name.
template <class F>
auto with_name(const Source& src, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw Error(e.code(), src.name() + ": " + e.what());
  } catch (const nlohmann::json::exception& e) {
    fail(src, e.what());
  }
}

MatrixFactorization mf_ref(const Json& j, const Source& src, const fs::path& base) {
  if (j.is_string()) {
    const fs::path p = fs::path(j.get<std::string>());
    return read_mf(p.is_absolute() ? p : base / p);
  }
  return mf_from_json(j, src);
}

}  // namespace

Json field_to_json(Field f) {
  if (f.is_rational()) return "Q";
  Json j;
  j["Fp"] = f.modulus();
  return j;
}

Field parse_field_flag(const std::string& text) {
  if (text == "Q") return Field::rationals();
  if (text.rfind("Fp:", 0) == 0) {
    try {
      std::size_t used = 0;
      const unsigned long p = std::stoul(text.substr(3), &used);
      if (used == text.size() - 3) return Field::prime(static_cast<std::uint32_t>(p));
    } catch (const std::logic_error&) {
    }
  }
  throw Error(ErrorCode::InvalidField, "field must be Q or Fp:<prime>, got '" + text + "'");
}

Field field_from_json(const Json& j) {
  if (j.is_string()) return parse_field_flag(j.get<std::string>());
  if (j.is_object() && j.contains("Fp") && j["Fp"].is_number_unsigned()) {
    return Field::prime(j["Fp"].get<std::uint32_t>());
  }
  throw Error(ErrorCode::InvalidField, "field must be \"Q\" or {\"Fp\": p}");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json mf_to_json(const MatrixFactorization& X) {
  const auto& ring = *X.ring();
  Json j;
  j["field"] = field_to_json(ring.field());
  j["vars"] = ring.vars();
  if (ring.weights()) j["weights"] = *ring.weights();
  j["w0"] = ring.w0().to_string();
  j["W"] = (X.W() + Poly(X.ring(), ring.w0())).to_string();
  j["rank"] = X.rank();
  j["p1"] = matrix_to_json(X.p1());
  j["p0"] = matrix_to_json(X.p0());
  return j;
}

Json morphism_to_json(const MFMorphism& f) {
  Json j;
  j["kind"] = "morphism";
  j["source"] = mf_to_json(f.source());
  j["target"] = mf_to_json(f.target());
  j["f1"] = matrix_to_json(f.f1());
  j["f0"] = matrix_to_json(f.f0());
  return j;
}

Json homotopy_to_json(const MFMorphism& f, const Homotopy& h) {
  Json j = morphism_to_json(f);
  j["kind"] = "homotopy";
  j["s"] = matrix_to_json(h.s);
  j["t"] = matrix_to_json(h.t);
  return j;
}

Json iso_to_json(const MatrixFactorization& X, const MatrixFactorization& Y,
                 const IsoResult& iso) {
  Json j;
  j["kind"] = "isomorphism";
  j["source"] = mf_to_json(X);
  j["target"] = mf_to_json(Y);
  if (iso.u) j["u"] = f_pair(*iso.u);
  if (iso.v) j["v"] = f_pair(*iso.v);
  if (iso.vu_homotopy) j["vu_homotopy"] = homotopy_pair(*iso.vu_homotopy);
  if (iso.uv_homotopy) j["uv_homotopy"] = homotopy_pair(*iso.uv_homotopy);
  return j;
}

Json module_to_json(const QuotModule& M) {
  Json j;
  j["field"] = field_to_json(M.field());
  j["var"] = M.ring()->vars()[0];
  j["W"] = M.W().to_string();
  j["dim"] = M.dim();
  j["Z"] = mat_to_json(M.Z());
  return j;
}

Json module_morphism_to_json(const ModuleMorphism& f) {
  Json j;
  j["kind"] = "module-morphism";
  j["source"] = module_to_json(f.source());
  j["target"] = module_to_json(f.target());
  j["F"] = mat_to_json(f.F());
  return j;
}

MatrixFactorization mf_from_json(const Json& j, const Source& src) {
  return with_name(src, [&] {
    const Field field = field_from_json(need(j, "field", src));
    const Json& vj = need(j, "vars", src);
    if (!vj.is_array()) fail(src, "\"vars\" must be an array of names");
    std::vector<std::string> vars;
    for (const auto& v : vj) {
      if (!v.is_string()) fail(src, "\"vars\" must be an array of names");
      vars.push_back(v.get<std::string>());
    }
    std::optional<std::vector<std::int64_t>> weights;
    if (j.contains("weights") && !j["weights"].is_null()) {
      if (!j["weights"].is_array()) fail(src, "\"weights\" must be an array of integers");
      weights.emplace();
      for (const auto& w : j["weights"]) {
        if (!w.is_number_integer()) fail(src, "\"weights\" must be an array of integers");
        weights->push_back(w.get<std::int64_t>());
      }
    }
    std::optional<Scalar> w0;
    if (j.contains("w0")) w0 = scalar_from(j["w0"], field, src, "w0");
    const Ring ring = make_ring(field, vars, weights, w0);
    const Poly W = poly_from(need(j, "W", src), ring, src, "W");
    const Json& p1j = need(j, "p1", src);
    const std::size_t d = j.contains("rank") ? j["rank"].get<std::size_t>() : p1j.size();
    const auto p1 = matrix_from(p1j, ring, d, d, src, "p1");
    const auto p0 = matrix_from(need(j, "p0", src), ring, d, d, src, "p0");
    return MatrixFactorization::create(ring, W, p1, p0);
  });
}

MFMorphism morphism_from_json(const Json& j, const Source& src, const fs::path& base) {
  const auto X = mf_ref(need(j, "source", src), src, base);
  const auto Y = mf_ref(need(j, "target", src), src, base);
  return with_name(src, [&] {
    const auto f1 = matrix_from(need(j, "f1", src), X.ring(), Y.rank(), X.rank(), src, "f1");
    const auto f0 = matrix_from(need(j, "f0", src), X.ring(), Y.rank(), X.rank(), src, "f0");
    return MFMorphism::create(X, Y, f1, f0);
  });
}

Homotopy homotopy_from_json(const Json& j, const Source& src, const MFMorphism& f) {
  const auto& X = f.source();
  const auto& Y = f.target();
  return with_name(src, [&] {
    return Homotopy{matrix_from(need(j, "s", src), X.ring(), Y.rank(), X.rank(), src, "s"),
                    matrix_from(need(j, "t", src), X.ring(), Y.rank(), X.rank(), src, "t")};
  });
}

QuotModule module_from_json(const Json& j, const Source& src) {
  return with_name(src, [&] {
    const Field field = field_from_json(need(j, "field", src));
    std::string var = "z";
    if (j.contains("var")) {
      if (!j["var"].is_string()) fail(src, "\"var\" must be a name");
      var = j["var"].get<std::string>();
    }
    const Ring ring = make_ring(field, {var});
    const Poly W = poly_from(need(j, "W", src), ring, src, "W");
    const Json& zj = need(j, "Z", src);
    const std::size_t m = j.contains("dim") ? j["dim"].get<std::size_t>() : zj.size();
    if (!zj.is_array() || zj.size() != m) {
      fail(src, "Z must be a " + std::to_string(m) + "x" + std::to_string(m) + " matrix",
           ErrorCode::ShapeMismatch);
    }
    Mat Z(field, m, m);
    for (std::size_t r = 0; r < m; ++r) {
      if (!zj[r].is_array() || zj[r].size() != m) {
        fail(src, "Z must be a " + std::to_string(m) + "x" + std::to_string(m) + " matrix",
             ErrorCode::ShapeMismatch);
      }
      for (std::size_t c = 0; c < m; ++c) {
        Z(r, c) = scalar_from(zj[r][c], field, src,
                              "Z[" + std::to_string(r) + "][" + std::to_string(c) + "]");
      }
    }
    return QuotModule::create(W, std::move(Z));
  });
}

MatrixFactorization read_mf(const fs::path& path) {
  const Source src = Source::read(path);
  return mf_from_json(src.parse(), src);
}

MFMorphism read_morphism(const fs::path& path) {
  const Source src = Source::read(path);
  return morphism_from_json(src.parse(), src, path.parent_path());
}

QuotModule read_module(const fs::path& path) {
  const Source src = Source::read(path);
  return module_from_json(src.parse(), src);
}

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
  out << text;
}

}  // namespace mfcat::io
