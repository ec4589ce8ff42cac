// Copyright 2026 The hvskit Authors
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

#include "hvskit/json_io.hpp"

#include <optional>
#include <utility>

#include "hvskit/error.hpp"

namespace hvskit::io {

using exact::to_string;

namespace {

// A JSON value together with its pointer, so errors can name the field.
class Node {
 public:
  Node(const Json& j, std::string path) : j_(j), path_(std::move(path)) {}

  [[noreturn]] void bad(const std::string& msg) const {
    fail(ErrorKind::InvalidInput, (path_.empty() ? std::string("/") : path_) + ": " + msg);
  }

  const Json& raw() const { return j_; }

  Node at(const std::string& key) const {
    if (!j_.is_object()) bad("expected an object");
    auto it = j_.find(key);
    if (it == j_.end()) fail(ErrorKind::InvalidInput, path_ + "/" + key + ": missing field");
    return Node(*it, path_ + "/" + key);
  }

  std::optional<Node> find(const std::string& key) const {
    if (!j_.is_object()) bad("expected an object");
    auto it = j_.find(key);
    if (it == j_.end() || it->is_null()) return std::nullopt;
    return Node(*it, path_ + "/" + key);
  }

  std::size_t size() const {
    if (!j_.is_array()) bad("expected an array");
    return j_.size();
  }

  Node operator[](std::size_t i) const { return Node(j_[i], path_ + "/" + std::to_string(i)); }

  std::string scalar_text() const {
    if (j_.is_string()) return j_.get<std::string>();
    if (j_.is_number_integer()) return j_.dump();
    if (j_.is_number_float()) bad("floating point scalars are not accepted; use a \"p/q\" string");
    bad("expected a scalar string");
  }

  Rational rational() const {
    try {
      return exact::parse_rational(scalar_text());
    } catch (const Error& e) {
      bad(e.what());
    }
  }

  Gaussian gaussian() const {
    try {
      return exact::parse_gaussian(scalar_text());
    } catch (const Error& e) {
      bad(e.what());
    }
  }

  long integer() const {
    if (!j_.is_number_integer()) bad("expected an integer");
    return j_.get<long>();
  }

  unsigned count() const {
    long v = integer();
    if (v < 0) bad("expected a non-negative integer");
    return static_cast<unsigned>(v);
  }

  int sign() const {
    long v = integer();
    if (v != 1 && v != -1) bad("expected +1 or -1");
    return static_cast<int>(v);
  }

  template <class T, class F>
  exact::Matrix<T> matrix(F entry, std::optional<std::size_t> rows = std::nullopt,
                          std::optional<std::size_t> cols = std::nullopt) const {
    std::size_t r = size();
    if (rows && r != *rows) bad("expected " + std::to_string(*rows) + " rows, found " + std::to_string(r));
    std::size_t c = r == 0 ? cols.value_or(0) : (*this)[0].size();
    if (cols && c != *cols) bad("expected " + std::to_string(*cols) + " columns, found " + std::to_string(c));
    exact::Matrix<T> m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      Node row = (*this)[i];
      if (row.size() != c) row.bad("ragged matrix row");
      for (std::size_t k = 0; k < c; ++k) m(i, k) = entry(row[k]);
    }
    return m;
  }

  GMatrix gmatrix(std::optional<std::size_t> rows = std::nullopt,
                  std::optional<std::size_t> cols = std::nullopt) const {
    return matrix<Gaussian>([](const Node& n) { return n.gaussian(); }, rows, cols);
  }

  QMatrix qmatrix(std::optional<std::size_t> rows = std::nullopt,
                  std::optional<std::size_t> cols = std::nullopt) const {
    return matrix<Rational>([](const Node& n) { return n.rational(); }, rows, cols);
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i) out.push_back((*this)[i].count());
    return out;
  }

 private:
  const Json& j_;
  std::string path_;
};

// Calls `f` and prefixes any InvalidInput error raised by a library
// constructor with the node's pointer.
template <class F>
auto guarded(const Node& n, F f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::InvalidInput) throw;
    n.bad(e.what());
  }
}

Spectrum spectrum_node(const Node& n) {
  std::vector<Rational> entries;
  for (std::size_t i = 0; i < n.size(); ++i) entries.push_back(n[i].rational());
  return guarded(n, [&] { return make_spectrum(entries); });
}

int epsilon_of(const Node& n) {
  auto e = n.find("epsilon");
  return e ? e->sign() : -1;
}

Json inertia_json(const Inertia& in) {
  return Json{{"plus", in.plus}, {"minus", in.minus}, {"zero", in.zero}, {"signature", in.signature()}};
}

Json strings(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

LinkSpectrumData link_spectrum_node(const Node& n) {
  LinkSpectrumData d;
  d.spectrum = spectrum_node(n.at("spectrum"));
  if (auto ja = n.find("jump_angles")) {
    for (std::size_t i = 0; i < ja->size(); ++i) {
      Rational s = (*ja)[i].rational();
      if (sgn(s) <= 0 || s > 1) (*ja)[i].bad("jump angle must lie in (0, 1]");
      d.jump_angles.emplace_back(s);
    }
  }
  if (auto c = n.find("c")) d.c = c->count();
  if (auto g = n.find("g")) d.g = g->count();
  if (auto k = n.find("n")) d.n = k->count();
  return d;
}

Json link_spectrum_json(const LinkSpectrumData& d) {
  Json ja = Json::array();
  for (const auto& a : d.jump_angles) ja.push_back(to_string(a.value()));
  return Json{{"spectrum", to_json(d.spectrum)}, {"jump_angles", ja}, {"c", d.c}, {"g", d.g}, {"n", d.n}};
}

}  // namespace

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

Json to_json(const GMatrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    a.push_back(row);
  }
  return a;
}

Json to_json(const QMatrix& m) { return to_json(exact::to_gaussian(m)); }

Json to_json(const Spectrum& sp) { return strings(sp); }

Json to_json(const Hvs& v) {
  return Json{{"epsilon", v.epsilon}, {"dim", v.dim()}, {"b", to_json(v.b)}, {"h", to_json(v.h)},
              {"V", to_json(v.V)}};
}

Json to_json(const BlockSpec& spec) {
  Json circle = Json::array(), off = Json::array();
  for (const auto& c : spec.circle)
    circle.push_back(Json{{"k", c.k}, {"s", to_string(c.s.value())}, {"u", c.u}, {"mult", c.mult}});
  for (const auto& o : spec.offcircle)
    off.push_back(Json{{"k", o.k}, {"lam", to_string(o.lambda)}, {"mult", o.mult}});
  return Json{{"epsilon", spec.epsilon}, {"circle", circle}, {"offcircle", off}};
}

Json to_json(const FibredLinkData& fl) {
  return Json{{"epsilon", fl.epsilon}, {"n", fl.n},          {"c", fl.c},
              {"g", fl.g},             {"h", to_json(fl.h)}, {"b", to_json(fl.b)},
              {"Var", to_json(fl.Var)}};
}

Json to_json(const FracturedData& fd) {
  Json j{{"epsilon", fd.epsilon}, {"n", fd.n},
         {"c", fd.c},             {"g", fd.g},
         {"dimU", fd.dimU},       {"S", to_json(fd.S)},
         {"h_res", to_json(fd.h_res)}, {"b_res", to_json(fd.b_res)},
         {"basis", to_json(fd.basis)}};
  if (fd.blocks)
    j["decomposition"] = Json{{"neq1", fd.blocks->neq1}, {"im", fd.blocks->im}, {"bnd", fd.blocks->bnd}};
  return j;
}

Json to_json(const PlumbingGraph& g) {
  Json verts = Json::array(), edges = Json::array();
  for (auto gv : g.genus) verts.push_back(Json{{"genus", gv}});
  for (const auto& [a, b] : g.edges) edges.push_back(Json::array({a, b}));
  return Json{{"vertices", verts}, {"edges", edges}, {"arrowheads", g.arrowheads}};
}

Json to_json(const DeformationScenario& ds) {
  Json sats = Json::array();
  for (const auto& s : ds.satellites) sats.push_back(link_spectrum_json(s));
  return Json{{"central", link_spectrum_json(ds.central)}, {"satellites", sats}, {"irr1", ds.irr1},
              {"irr2", ds.irr2}};
}

Json to_json(const CobordismInvariants& ci) {
  return Json{{"dimU0", ci.dimU0},       {"dimU1", ci.dimU1}, {"b1Sigma0", ci.b1Sigma0},
              {"b1Sigma1", ci.b1Sigma1}, {"b1Glued", ci.b1Glued}, {"irr2", ci.irr2},
              {"kerH1", ci.kerH1}};
}

Hvs hvs_from_json(const Json& j) {
  Node n(j, "");
  Hvs v;
  v.epsilon = epsilon_of(n);
  std::optional<std::size_t> dim;
  if (auto d = n.find("dim")) dim = d->count();
  if (!dim) dim = n.at("h").size();
  v.h = n.at("h").gmatrix(dim, dim);
  v.b = n.at("b").gmatrix(dim, dim);
  v.V = n.at("V").gmatrix(dim, dim);
  return v;
}

BlockSpec blocks_from_json(const Json& j) {
  Node n(j, "");
  BlockSpec spec;
  spec.epsilon = epsilon_of(n);
  if (auto c = n.find("circle")) {
    for (std::size_t i = 0; i < c->size(); ++i) {
      Node e = (*c)[i];
      CircleBlock b;
      b.k = e.at("k").count();
      if (b.k == 0) e.at("k").bad("block size must be positive");
      Rational s = e.at("s").rational();
      if (sgn(s) <= 0 || s > 1) e.at("s").bad("angle must lie in (0, 1]");
      b.s = AngleFraction(s);
      b.u = e.at("u").sign();
      if (auto m = e.find("mult")) b.mult = m->count();
      spec.circle.push_back(b);
    }
  }
  if (auto o = n.find("offcircle")) {
    for (std::size_t i = 0; i < o->size(); ++i) {
      Node e = (*o)[i];
      OffCircleBlock b;
      b.k = e.at("k").count();
      if (b.k == 0) e.at("k").bad("block size must be positive");
      b.lambda = e.at("lam").gaussian();
      Rational nm = b.lambda.norm();
      if (sgn(nm) == 0 || nm >= 1) e.at("lam").bad("off-circle eigenvalue needs 0 < |lam| < 1");
      if (auto m = e.find("mult")) b.mult = m->count();
      spec.offcircle.push_back(b);
    }
  }
  return spec;
}

FibredLinkData fibred_from_json(const Json& j) {
  Node n(j, "");
  FibredLinkData fl;
  fl.epsilon = epsilon_of(n);
  fl.n = n.at("n").count();
  if (fl.n == 0) n.at("n").bad("a link has at least one component");
  fl.c = n.at("c").count();
  fl.g = n.at("g").count();
  std::size_t d = n.at("h").size();
  fl.h = n.at("h").gmatrix(d, d);
  fl.b = n.at("b").gmatrix(d, d);
  fl.Var = n.at("Var").gmatrix(d, d);
  return fl;
}

FracturedData fractured_from_json(const Json& j) {
  Node n(j, "");
  FracturedData fd;
  fd.epsilon = epsilon_of(n);
  fd.n = n.at("n").count();
  if (fd.n == 0) n.at("n").bad("a link has at least one component");
  fd.c = n.at("c").count();
  fd.g = n.at("g").count();
  fd.dimU = n.at("dimU").count();
  fd.S = n.at("S").qmatrix(fd.dimU, fd.dimU);
  fd.h_res = n.at("h_res").gmatrix(fd.dimU, fd.dimU);
  fd.b_res = n.at("b_res").gmatrix(fd.dimU, fd.dimU);
  if (auto b = n.find("basis")) {
    fd.basis = b->gmatrix(std::nullopt, fd.dimU);
  }
  if (auto d = n.find("decomposition")) {
    FracturedBlocks blk{d->at("neq1").indices(), d->at("im").indices(), d->at("bnd").indices()};
    std::vector<bool> seen(fd.dimU, false);
    for (const auto* part : {&blk.neq1, &blk.im, &blk.bnd})
      for (auto i : *part) {
        if (i >= fd.dimU || seen[i]) d->bad("decomposition indices must partition 0..dimU-1");
        seen[i] = true;
      }
    for (bool s : seen)
      if (!s) d->bad("decomposition indices must partition 0..dimU-1");
    fd.blocks = blk;
  }
  return fd;
}

PlumbingGraph plumbing_from_json(const Json& j) {
  Node n(j, "");
  PlumbingGraph g;
  Node verts = n.at("vertices");
  for (std::size_t i = 0; i < verts.size(); ++i) {
    auto genus = verts[i].find("genus");
    g.genus.push_back(genus ? genus->count() : 0);
  }
  Node edges = n.at("edges");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    Node e = edges[i];
    if (e.size() != 2) e.bad("an edge is a pair of vertex indices");
    g.edges.emplace_back(e[0].count(), e[1].count());
  }
  g.arrowheads = n.at("arrowheads").indices();
  return g;
}

DeformationScenario scenario_from_json(const Json& j) {
  Node n(j, "");
  DeformationScenario ds;
  ds.central = link_spectrum_node(n.at("central"));
  Node sats = n.at("satellites");
  for (std::size_t i = 0; i < sats.size(); ++i) ds.satellites.push_back(link_spectrum_node(sats[i]));
  if (ds.satellites.empty()) sats.bad("at least one satellite is required");
  if (auto i1 = n.find("irr1")) ds.irr1 = i1->integer();
  if (auto i2 = n.find("irr2")) ds.irr2 = i2->count();
  return ds;
}

Spectrum spectrum_from_json(const Json& j) { return spectrum_node(Node(j, "")); }

QMatrix linking_from_json(const Json& j) {
  Node n(j, "");
  QMatrix clk = n.at("clk").qmatrix();
  if (!clk.square()) n.at("clk").bad("linking matrix must be square");
  if (auto k = n.find("n"))
    if (k->count() != clk.rows()) k->bad("n disagrees with the size of clk");
  return clk;
}

MurasugiInput murasugi_from_json(const Json& j) {
  Node n(j, "");
  MurasugiInput in;
  in.sig0 = n.at("sig0").integer();
  in.sig1 = n.at("sig1").integer();
  in.null0 = n.at("null0").count();
  in.null1 = n.at("null1").count();
  in.ci.dimU0 = n.at("dimU0").count();
  in.ci.dimU1 = n.at("dimU1").count();
  in.ci.b1Sigma0 = n.at("b1Sigma0").count();
  in.ci.b1Sigma1 = n.at("b1Sigma1").count();
  in.ci.b1Glued = n.at("b1Glued").count();
  in.ci.irr2 = n.at("irr2").count();
  in.ci.kerH1 = n.at("kerH1").count();
  return in;
}

Json report_json(const HvsValidation& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) failures.push_back(Json{{"identity", f.identity}, {"residual", to_json(f.residual)}});
  return Json{{"axioms", r.ok() ? "pass" : "fail"},
              {"failures", failures},
              {"rank_V", r.rank_V},
              {"simple", r.simple},
              {"nondegenerate", r.nondegenerate}};
}

Json report_json(const SignatureProfile& p) {
  Json arcs = Json::array(), points = Json::array(), jumps = Json::array();
  auto bounds = arcs_of(p.jumps);
  for (std::size_t i = 0; i < p.jumps.size(); ++i) {
    jumps.push_back(to_string(p.jumps[i].value()));
    arcs.push_back(Json{{"from", to_string(bounds[i].first)},
                        {"to", to_string(bounds[i].second)},
                        {"signature", p.arc_values[i]}});
    if (i < p.point_data.size() && p.point_data[i])
      points.push_back(Json{{"s", to_string(p.jumps[i].value())},
                            {"signature", p.point_data[i]->first},
                            {"nullity", p.point_data[i]->second}});
  }
  return Json{{"jumps", jumps}, {"arcs", arcs}, {"points", points}};
}

Json report_json(const JordanData& jd) {
  Json orbits = Json::array();
  for (const auto& [o, sizes] : jd.blocks) {
    Json angles = Json::array(), blocks = Json::object();
    for (const auto& a : orbit_angles(o)) angles.push_back(to_string(a.value()));
    for (const auto& [k, m] : sizes) blocks[std::to_string(k)] = m;
    orbits.push_back(Json{{"d", o.d}, {"orbit", o.orbit}, {"angles", angles}, {"blocks", blocks}});
  }
  return Json{{"orbits", orbits}, {"noncyclotomic_dim", jd.noncyclotomic_dim}};
}

Json report_json(const SpectrumSolve& s) {
  Json amb = Json::array();
  for (const auto& dir : s.ambiguous) amb.push_back(strings(dir));
  return Json{{"determined", s.determined}, {"spectrum", to_json(s.spectrum)}, {"unknowns", s.unknowns},
              {"ambiguous", amb}};
}

Json report_json(const CheckReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return Json{{"checks", checks}, {"pass", r.ok()}};
}

Json report_json(const LinkingReport& r) {
  return Json{{"L", to_json(r.L)},
              {"inertia", inertia_json(r.inertia)},
              {"kernel_is_diagonal", r.kernel_is_diagonal},
              {"pass", r.ok()}};
}

Json report_json(const TwistReport& r) {
  Json j{{"N", r.N}, {"inertia", inertia_json(r.inertia)}, {"pass", r.ok()}};
  if (r.witness) {
    Json w = Json::array();
    for (std::size_t i = 0; i < r.witness->rows(); ++i) w.push_back(to_string((*r.witness)(i, 0)));
    j["witness"] = w;
  }
  return j;
}

Json report_json(const PlumbingInvariants& p) {
  return Json{{"c", p.c}, {"gsum", p.gsum}, {"n", p.n}, {"b1M", p.b1M}};
}

Json report_json(const MurasugiReport& r) {
  return Json{{"lhs", r.lhs}, {"rhs", r.rhs}, {"slack", r.slack()}, {"pass", r.pass()}};
}

Json report_json(const SemicontReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back(Json{{"s", to_string(row.s)},
                        {"inequality", row.inequality},
                        {"lhs", row.lhs},
                        {"rhs", row.rhs},
                        {"slack", row.slack()},
                        {"pass", row.pass()}});
  return Json{{"verdict", r.pass() ? "pass" : "fail"}, {"per_s", rows}, {"delta1", r.delta1},
              {"delta2", r.delta2}};
}

Json report_json(const FracturedSpectrum& fs, const FracturedData& fd) {
  Spectrum mhs = mhs_spectrum(fs.solve.spectrum, fd.c, fd.g);
  return Json{{"frct", report_json(fs.solve)},
              {"m1", fs.m1},
              {"m2", fs.m2},
              {"mhs", to_json(mhs)},
              {"mhs_multiplicity_1", multiplicity(mhs, Rational(1))},
              {"mhs_multiplicity_2", multiplicity(mhs, Rational(2))}};
}

namespace {

bool flat(const Json& j) {
  if (j.is_object()) return j.empty();
  if (!j.is_array()) return true;
  for (const auto& x : j)
    if (x.is_structured() && !x.empty()) return false;
  return true;
}

// Like dump(2), but arrays of scalars stay on one line so matrices read
// as one row per line.
void write(std::string& out, const Json& j, int indent) {
  if (flat(j)) {
    if (!j.is_array()) {
      out += j.dump();
      return;
    }
    out += "[";
    for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
    out += "]";
    return;
  }
  std::string pad(indent + 2, ' ');
  bool obj = j.is_object();
  out += obj ? "{\n" : "[\n";
  bool first = true;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!first) out += ",\n";
    first = false;
    out += pad;
    if (obj) out += Json(it.key()).dump() + ": ";
    write(out, *it, indent + 2);
  }
  out += "\n" + std::string(indent, ' ') + (obj ? "}" : "]");
}

}  // namespace

std::string dump(const Json& j) {
  std::string out;
  write(out, j, 0);
  return out + "\n";
}

}  // namespace hvskit::io
