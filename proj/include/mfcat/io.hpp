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

#pragma once

#include <json.hpp>

#include <filesystem>
#include <string>

#include "mfcat/homotopy.hpp"
#include "mfcat/mf.hpp"
#include "mfcat/quotmod.hpp"

namespace mfcat::io {

using Json = nlohmann::ordered_json;

/// Text of an input file with position lookup for diagnostics.
class Source {
 public:
  Source(std::string name, std::string text) : name_(std::move(name)), text_(std::move(text)) {}
  /// Throws Io when the file cannot be read.
  static Source read(const std::filesystem::path& path);

  const std::string& name() const noexcept { return name_; }
  const std::string& text() const noexcept { return text_; }

  /// "name:line:col" for a byte offset (1-based line and column).
  std::string locate(std::size_t offset) const;
  /// Location of the first occurrence of the JSON string literal `value`,
  /// shifted by `inner` characters into it; falls back to the file name.
  std::string locate_string(const std::string& value, std::size_t inner = 0) const;

  /// Parses the JSON document; syntax errors become ParseError with a
  /// line:col location.
  Json parse() const;

 private:
  std::string name_;
  std::string text_;
};

Json field_to_json(Field f);
/// "Q", {"Fp": p} or the command-line spelling "Fp:p".
Field field_from_json(const Json& j);
Field parse_field_flag(const std::string& text);

/// Canonical file layout: 2-space indentation and a trailing newline.
std::string dump(const Json& j);

Json mf_to_json(const MatrixFactorization& X);
Json morphism_to_json(const MFMorphism& f);
/// The witnessed morphism together with (s, t).
Json homotopy_to_json(const MFMorphism& f, const Homotopy& h);
/// u, v and the homotopies for v u - id and u v - id.
Json iso_to_json(const MatrixFactorization& X, const MatrixFactorization& Y,
                 const IsoResult& iso);
Json module_to_json(const QuotModule& M);
Json module_morphism_to_json(const ModuleMorphism& f);

/// Readers. `base` resolves relative paths in morphism files; `src` is used
/// for diagnostics.
MatrixFactorization mf_from_json(const Json& j, const Source& src);
MFMorphism morphism_from_json(const Json& j, const Source& src,
                              const std::filesystem::path& base);
Homotopy homotopy_from_json(const Json& j, const Source& src, const MFMorphism& f);
QuotModule module_from_json(const Json& j, const Source& src);

MatrixFactorization read_mf(const std::filesystem::path& path);
MFMorphism read_morphism(const std::filesystem::path& path);
QuotModule read_module(const std::filesystem::path& path);

void write_file(const std::filesystem::path& path, const std::string& text);

}  // namespace mfcat::io
