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

#include "mfcat/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <functional>
#include <sstream>

#include "mfcat/andyn.hpp"
#include "mfcat/error.hpp"
#include "mfcat/homotopy.hpp"
#include "mfcat/io.hpp"
#include "mfcat/quotmod.hpp"

namespace mfcat::cli {

namespace fs = std::filesystem;
using io::Json;

namespace {

struct Options {
  std::string field = "Q";
  std::string out_dir;
  std::vector<std::string> files;
  std::string x = "x";
  std::string y = "y";
  bool graded = false;
  std::optional<std::uint32_t> bound;
  int n = 0;
  bool csv = false;
  bool brute = false;
  std::string pairs = "all";
  std::string W;
  std::string var = "z";
  std::size_t lst_stride = 1;
};

class Runner {
 public:
  Runner(const Options& o, std::ostream& out, std::ostream& err) : o_(o), out_(out), err_(err) {}

  int validate();
  int shift_cmd();
  int cone_cmd();
  int knorrer_cmd();
  int hom();
  int homotopy_cmd();
  int iso();
  int stable_hom_cmd();
  int cok_cmd();
  int stabilize_cmd();
  int decompose_cmd();
  int critical_values_cmd();
  int an_table();
  int an_verify_cmd();
  int verify_knorrer();

 private:
  SearchPolicy policy_for(std::initializer_list<const MatrixFactorization*> objs) const;
  /// Writes a witness when --out is set; returns the path or "-".
  std::string witness(const std::string& name, const Json& j) const;
  Field field() const { return io::parse_field_flag(o_.field); }

  const Options& o_;
  std::ostream& out_;
  std::ostream& err_;
};

std::string ring_name(const RingContext& r) {
  std::string s = r.field().name() + "[";
  for (std::size_t i = 0; i < r.nvars(); ++i) s += (i ? "," : "") + r.vars()[i];
  return s + "]";
}

SearchPolicy Runner::policy_for(std::initializer_list<const MatrixFactorization*> objs) const {
  if (o_.graded && o_.bound) {
    throw Error(ErrorCode::PolicyInfeasible, "--graded and --bound are exclusive");
  }
  if (o_.bound) return SearchPolicy::bounded(o_.bound);
  bool gradable = true;
  for (const auto* X : objs) {
    if (!X->ring()->weights() || !X->W().weighted_degree() || !find_grading(*X)) gradable = false;
  }
  if (gradable) return SearchPolicy::graded();
  if (o_.graded) {
    throw Error(ErrorCode::PolicyInfeasible,
                "graded search needs weights, a quasi-homogeneous W and homogeneous entries");
  }
  return SearchPolicy::bounded();
}

std::string Runner::witness(const std::string& name, const Json& j) const {
  if (o_.out_dir.empty()) return "-";
  const fs::path p = fs::path(o_.out_dir) / (name + ".json");
  io::write_file(p, io::dump(j));
  return p.string();
}

int Runner::validate() {
  const auto& path = o_.files.at(0);
  const auto src = io::Source::read(path);
  const Json j = src.parse();
  std::string kind = "factorization";
  if (j.is_object()) {
    if (j.contains("kind") && j["kind"].is_string()) {
      kind = j["kind"].get<std::string>();
    } else if (j.contains("u")) {
      kind = "isomorphism";
    } else if (j.contains("s")) {
      kind = "homotopy";
    } else if (j.contains("f1")) {
      kind = "morphism";
    } else if (j.contains("F")) {
      kind = "module-morphism";
    } else if (j.contains("Z")) {
      kind = "module";
    }
  }
  const fs::path base = fs::path(path).parent_path();
  if (kind == "factorization") {
    const auto X = io::mf_from_json(j, src);
    out_ << "ok factorization rank=" << X.rank() << " ring=" << ring_name(*X.ring())
         << " W=" << (X.W() + Poly(X.ring(), X.ring()->w0())).to_string() << "\n";
    return kPass;
  }
  if (kind == "morphism") {
    const auto f = io::morphism_from_json(j, src, base);
    out_ << "ok morphism " << f.source().rank() << " -> " << f.target().rank() << "\n";
    return kPass;
  }
  if (kind == "homotopy") {
    const auto f = io::morphism_from_json(j, src, base);
    const auto h = io::homotopy_from_json(j, src, f);
    if (!is_null_homotopy(f, h)) {
      err_ << path << ": s, t do not satisfy f1 = q0*t + s*p1, f0 = t*p0 + q1*s\n";
      return kMathFailure;
    }
    out_ << "ok homotopy\n";
    return kPass;
  }
  if (kind == "isomorphism") {
    const auto X = io::mf_from_json(j.at("source"), src);
    const auto Y = io::mf_from_json(j.at("target"), src);
    Json ju = j.at("u"), jv = j.at("v");
    ju["source"] = j["source"];
    ju["target"] = j["target"];
    jv["source"] = j["target"];
    jv["target"] = j["source"];
    const auto u = io::morphism_from_json(ju, src, base);
    const auto v = io::morphism_from_json(jv, src, base);
    const auto hvu = io::homotopy_from_json(j.at("vu_homotopy"), src,
                                            MFMorphism::identity(X));
    const auto huv = io::homotopy_from_json(j.at("uv_homotopy"), src,
                                            MFMorphism::identity(Y));
    const bool ok1 = is_null_homotopy(compose(v, u) - MFMorphism::identity(X), hvu);
    const bool ok2 = is_null_homotopy(compose(u, v) - MFMorphism::identity(Y), huv);
    if (!ok1) err_ << path << ": v*u - id is not the boundary of vu_homotopy\n";
    if (!ok2) err_ << path << ": u*v - id is not the boundary of uv_homotopy\n";
    if (!(ok1 && ok2)) return kMathFailure;
    out_ << "ok isomorphism\n";
    return kPass;
  }
  if (kind == "module") {
    const auto M = io::module_from_json(j, src);
    out_ << "ok module dim=" << M.dim() << " W=" << M.W().to_string() << "\n";
    return kPass;
  }
  if (kind == "module-morphism") {
    const auto M = io::module_from_json(j.at("source"), src);
    const auto N = io::module_from_json(j.at("target"), src);
    Mat F(M.field(), N.dim(), M.dim());
    const Json& fj = j.at("F");
    for (std::size_t r = 0; r < N.dim(); ++r) {
      for (std::size_t c = 0; c < M.dim(); ++c) {
        F(r, c) = Scalar::parse(M.field(), fj.at(r).at(c).get<std::string>());
      }
    }
    ModuleMorphism::create(M, N, F);
    out_ << "ok module-morphism " << M.dim() << " -> " << N.dim() << "\n";
    return kPass;
  }
  throw Error(ErrorCode::ParseError, path + ": unknown kind \"" + kind + "\"");
}

int Runner::shift_cmd() {
  out_ << io::dump(io::mf_to_json(shift(io::read_mf(o_.files.at(0)))));
  return kPass;
}

int Runner::cone_cmd() {
  const auto f = io::read_morphism(o_.files.at(0));
  const auto c = cone(f);
  witness("cone-g", io::morphism_to_json(c.g));
  witness("cone-h", io::morphism_to_json(c.h));
  out_ << io::dump(io::mf_to_json(c.C));
  return kPass;
}

int Runner::knorrer_cmd() {
  out_ << io::dump(io::mf_to_json(knorrer(io::read_mf(o_.files.at(0)), o_.x, o_.y)));
  return kPass;
}

int Runner::hom() {
  const auto X = io::read_mf(o_.files.at(0));
  const auto Y = io::read_mf(o_.files.at(1));
  const auto policy = policy_for({&X, &Y});
  HomDimension h;
  if (policy.mode == SearchPolicy::Mode::GradedExhaustive) {
    h = graded_stable_hom(X, Y, policy);
    out_ << "dim " << h.dim << " (graded";
    if (!h.degrees_examined.empty()) {
      out_ << ", degrees " << h.degrees_examined.front() << ".." << h.degrees_examined.back();
    }
    out_ << ")\n";
    for (const auto& [d, k] : h.by_degree) out_ << "degree " << d << ": " << k << "\n";
  } else {
    h = bounded_stable_hom(X, Y, policy.bound);
    out_ << "dim " << h.dim << " (total degree <= " << h.degrees_examined.front()
         << ", not certified)\n";
  }
  for (std::size_t i = 0; i < h.basis.size(); ++i) {
    witness("hom-basis-" + std::to_string(i), io::morphism_to_json(h.basis[i]));
  }
  return kPass;
}

int Runner::homotopy_cmd() {
  const auto f = io::read_morphism(o_.files.at(0));
  const auto res = find_null_homotopy(f, policy_for({&f.source(), &f.target()}));
  switch (res.status) {
    case NullHomotopyResult::Status::Found:
      out_ << "null-homotopic witness=" << witness("homotopy", io::homotopy_to_json(f, *res.homotopy))
           << "\n";
      return kPass;
    case NullHomotopyResult::Status::ProvenNone:
      out_ << "not null-homotopic (certified)\n";
      return kMathFailure;
    case NullHomotopyResult::Status::NoneUpToBound:
      out_ << "no homotopy up to degree " << res.degrees_examined.front() << "\n";
      return kMathFailure;
  }
  return kMathFailure;
}

int Runner::iso() {
  const auto X = io::read_mf(o_.files.at(0));
  const auto Y = io::read_mf(o_.files.at(1));
  const auto r = is_iso_in_db(X, Y, policy_for({&X, &Y}));
  switch (r.status) {
    case IsoResult::Status::Isomorphic:
      out_ << "isomorphic witness=" << witness("isomorphism", io::iso_to_json(X, Y, r)) << "\n";
      return kPass;
    case IsoResult::Status::NotIsomorphic:
      out_ << "not isomorphic (certified): " << r.note << "\n";
      return kMathFailure;
    case IsoResult::Status::NotFound:
      out_ << "no isomorphism found: " << r.note << "\n";
      return kMathFailure;
  }
  return kMathFailure;
}

int Runner::stable_hom_cmd() {
  const auto M = io::read_module(o_.files.at(0));
  const auto N = io::read_module(o_.files.at(1));
  const auto s = stable_hom(M, N);
  out_ << "hom " << s.hom_basis.size() << "\n";
  out_ << "factoring " << s.factoring_basis.size() << "\n";
  out_ << "stable " << s.stable_dim << "\n";
  // Representatives of a basis of the stable quotient.
  std::vector<Vec> span;
  for (const auto& B : s.factoring_basis) span.push_back(B.flatten());
  std::size_t idx = 0;
  for (const auto& B : s.hom_basis) {
    span.push_back(B.flatten());
    if (span_rank(M.field(), M.dim() * N.dim(), span) < span.size()) {
      span.pop_back();
      continue;
    }
    witness("stable-hom-basis-" + std::to_string(idx++),
            io::module_morphism_to_json(ModuleMorphism::create(M, N, B)));
  }
  return kPass;
}

int Runner::cok_cmd() {
  const auto& path = o_.files.at(0);
  const auto src = io::Source::read(path);
  const Json j = src.parse();
  if (j.is_object() && j.contains("f1")) {
    const auto f = io::morphism_from_json(j, src, fs::path(path).parent_path());
    out_ << io::dump(io::module_morphism_to_json(cok(f)));
  } else {
    out_ << io::dump(io::module_to_json(cok(io::mf_from_json(j, src))));
  }
  return kPass;
}

int Runner::stabilize_cmd() {
  out_ << io::dump(io::mf_to_json(stabilize(io::read_module(o_.files.at(0)))));
  return kPass;
}

int Runner::decompose_cmd() {
  for (const auto& [mu, m] : decompose(io::read_module(o_.files.at(0)))) {
    out_ << "z^" << mu << " " << m << "\n";
  }
  return kPass;
}

int Runner::critical_values_cmd() {
  const Ring r = make_ring(field(), {o_.var});
  const Poly W = parse_poly(o_.W, r);
  const auto cv = critical_values(W);
  for (const auto& v : cv.rational) out_ << v.to_string() << "\n";
  if (cv.has_irrational) out_ << "irrational critical values present\n";
  return kPass;
}

int Runner::an_table() {
  const int n = o_.n;
  const Field f = field();
  const char sep = o_.csv ? ',' : ' ';
  if (o_.csv) {
    out_ << "mu\\nu";
    for (int nu = 1; nu < n; ++nu) out_ << sep << nu;
    out_ << "\n";
  }
  for (int mu = 1; mu < n; ++mu) {
    if (o_.csv) out_ << mu << sep;
    for (int nu = 1; nu < n; ++nu) {
      std::size_t d = static_cast<std::size_t>(an_hom_dim(n, mu, nu));
      if (o_.brute) d = stable_hom(an_module(f, n, mu), an_module(f, n, nu)).stable_dim;
      out_ << (nu > 1 ? std::string(1, sep) : "") << d;
    }
    out_ << "\n";
  }
  return kPass;
}

int Runner::an_verify_cmd() {
  AnVerifyOptions opts;
  opts.lst_stride = o_.lst_stride;
  const auto rep = an_verify(o_.n, field(), opts);
  std::size_t failed = 0;
  for (const auto& c : rep.checks) {
    std::string w = "-";
    if (c.witness) {
      std::string name = c.name + "-" + c.params;
      std::replace(name.begin(), name.end(), ' ', '-');
      name.erase(std::remove(name.begin(), name.end(), '='), name.end());
      w = witness(name, io::morphism_to_json(*c.witness));
    }
    out_ << c.name << "\t" << c.params << "\t" << (c.pass ? "pass" : "fail") << "\t" << w;
    if (!c.pass && !c.detail.empty()) out_ << "\t" << c.detail;
    out_ << "\n";
    if (!c.pass) ++failed;
  }
  out_ << "summary\tn=" << rep.n << " field=" << rep.field.name() << "\t"
       << (failed ? "fail" : "pass") << "\t" << rep.checks.size() - failed << "/"
       << rep.checks.size() << "\n";
  return failed ? kMathFailure : kPass;
}

int Runner::verify_knorrer() {
  const int n = o_.n;
  if (o_.pairs != "all" && o_.pairs != "diag") {
    throw Error(ErrorCode::InvalidShape, "--pairs must be all or diag");
  }
  const Ring r = an_ring(field());
  std::size_t failed = 0, total = 0;
  for (int mu = 1; mu < n; ++mu) {
    for (int nu = 1; nu < n; ++nu) {
      if (o_.pairs == "diag" && mu != nu) continue;
      const auto X = knorrer(an_mf(r, n, mu), o_.x, o_.y);
      const auto Y = knorrer(an_mf(r, n, nu), o_.x, o_.y);
      const auto h = graded_stable_hom(X, Y);
      const auto expected = static_cast<std::size_t>(an_hom_dim(n, mu, nu));
      const bool ok = h.dim == expected;
      ++total;
      if (!ok) ++failed;
      out_ << "knorrer\tmu=" << mu << " nu=" << nu << "\t" << (ok ? "pass" : "fail") << "\tdim "
           << h.dim << " expected " << expected << "\n";
    }
  }
  out_ << "summary\tn=" << n << "\t" << (failed ? "fail" : "pass") << "\t" << total - failed
       << "/" << total << "\n";
  return failed ? kMathFailure : kPass;
}

bool is_input_error(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotAFactorization:
    case ErrorCode::NotAMorphism:
    case ErrorCode::RelationViolated:
      return false;
    default:
      return true;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Matrix factorizations, singularity categories and the A_{n-1} catalogue",
               "mfcat"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--field", o.field, "Ground field for catalogue commands: Q or Fp:<p>");
  app.add_option("--out", o.out_dir, "Directory for witness files");

  std::function<int(Runner&)> action;
  auto sub = [&](const char* name, const char* help, int files, int (Runner::*fn)()) {
    auto* s = app.add_subcommand(name, help);
    if (files > 0) s->add_option("files", o.files, "input files")->required()->expected(files);
    s->callback([&action, fn] { action = [fn](Runner& r) { return (r.*fn)(); }; });
    return s;
  };

  sub("validate", "Check a factorization, morphism, witness or module file", 1, &Runner::validate);
  sub("shift", "Print X[1]", 1, &Runner::shift_cmd);
  sub("cone", "Print the mapping cone of a morphism", 1, &Runner::cone_cmd);
  auto* kn = sub("knorrer", "Tensor with the factorization (x, y) of x*y", 1, &Runner::knorrer_cmd);
  kn->add_option("--x", o.x, "first new variable");
  kn->add_option("--y", o.y, "second new variable");
  for (auto* s : {sub("hom", "Dimension of Hom in DB", 2, &Runner::hom),
                  sub("homotopy", "Search for a null-homotopy of a morphism", 1,
                      &Runner::homotopy_cmd),
                  sub("iso", "Search for an isomorphism in DB", 2, &Runner::iso)}) {
    s->add_flag("--graded", o.graded, "degree-by-degree exact search");
    s->add_option("--bound", o.bound, "total degree bound for the ansatz");
  }
  sub("stable-hom", "Stable Hom between modules", 2, &Runner::stable_hom_cmd);
  sub("cok", "Cokernel module of a factorization (or the induced map of a morphism)", 1,
      &Runner::cok_cmd);
  sub("stabilize", "Factorization presenting a module", 1, &Runner::stabilize_cmd);
  sub("decompose", "Jordan type of a module over k[z]/(z^n)", 1, &Runner::decompose_cmd);
  auto* cv = sub("critical-values", "Critical values of W", 0, &Runner::critical_values_cmd);
  cv->add_option("W", o.W, "polynomial")->required();
  cv->add_option("--var", o.var, "variable name");
  auto* tab = sub("an-table", "Hom dimension grid of the A_{n-1} catalogue", 0, &Runner::an_table);
  tab->add_option("n", o.n, "n >= 2")->required()->check(CLI::Range(2, 64));
  tab->add_flag("--csv", o.csv, "CSV output");
  tab->add_flag("--brute", o.brute, "compute each entry from modules");
  auto* ver = sub("an-verify", "Cross-check the catalogue for one n", 0, &Runner::an_verify_cmd);
  ver->add_option("n", o.n, "n >= 2")->required()->check(CLI::Range(2, 64));
  ver->add_option("--lst-stride", o.lst_stride, "certify every k-th two-step triangle");
  auto* vk = sub("verify-knorrer", "Compare Hom after Knorrer's functor", 0,
                 &Runner::verify_knorrer);
  vk->add_option("n", o.n, "n >= 2")->required()->check(CLI::Range(2, 64));
  vk->add_option("--pairs", o.pairs, "all or diag");
  vk->add_option("--x", o.x, "first new variable");
  vk->add_option("--y", o.y, "second new variable");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInputError;
  }

  Runner runner(o, out, err);
  try {
    return action(runner);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    err << "error [" << error_code_name(e.code()) << "]: " << e.what() << "\n";
    return is_input_error(e.code()) ? kInputError : kMathFailure;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace mfcat::cli
