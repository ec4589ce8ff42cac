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

#include "hvskit/hvskit.h"

#include <new>
#include <sstream>
#include <string>

#include "hvskit/cobordism.hpp"
#include "hvskit/error.hpp"
#include "hvskit/hvs.hpp"
#include "hvskit/json_io.hpp"
#include "hvskit/seifert.hpp"

struct hvsk_hvs {
  hvskit::Hvs v;
};
struct hvsk_fibred {
  hvskit::FibredLinkData fl;
};
struct hvsk_fractured {
  hvskit::FracturedData fd;
};
struct hvsk_report {
  std::string json;
  std::string text;
  bool passed = true;
};

namespace {

using hvskit::io::Json;
namespace io = hvskit::io;

thread_local std::string last_error;

template <class F>
hvsk_status guard(F&& f) {
  last_error.clear();
  try {
    return f();
  } catch (const hvskit::Error& e) {
    last_error = e.what();
    return e.kind() == hvskit::ErrorKind::Internal ? HVSK_INTERNAL : HVSK_INPUT_ERROR;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return HVSK_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return HVSK_INTERNAL;
  }
}

hvsk_status null_arg(const char* name) {
  last_error = std::string("null argument: ") + name;
  return HVSK_INPUT_ERROR;
}

hvsk_status emit(hvsk_report** out, const Json& j, std::string text, bool passed) {
  *out = new hvsk_report{io::dump(j), std::move(text), passed};
  return passed ? HVSK_OK : HVSK_VIOLATED;
}

std::string pass_word(bool ok) { return ok ? "pass" : "fail"; }

std::string validation_text(const hvskit::HvsValidation& r) {
  std::ostringstream os;
  os << "HVS axioms: " << pass_word(r.ok());
  for (const auto& f : r.failures) os << " [" << f.identity << "]";
  os << "; simple: " << (r.simple ? "yes" : "no (V singular)");
  os << "\nrank V: " << r.rank_V << "\nnon-degenerate: " << (r.nondegenerate ? "yes" : "no") << "\n";
  return os.str();
}

std::string profile_text(const hvskit::SignatureProfile& p) {
  std::ostringstream os;
  auto bounds = hvskit::arcs_of(p.jumps);
  for (std::size_t i = 0; i < p.jumps.size(); ++i) {
    os << "arc (" << hvskit::exact::to_string(bounds[i].first) << ", "
       << hvskit::exact::to_string(bounds[i].second) << "): " << p.arc_values[i] << "\n";
    if (i < p.point_data.size() && p.point_data[i])
      os << "at " << hvskit::exact::to_string(p.jumps[i].value()) << ": signature " << p.point_data[i]->first
         << ", nullity " << p.point_data[i]->second << "\n";
  }
  return os.str();
}

std::string solve_text(const hvskit::SpectrumSolve& s) {
  if (s.determined) return hvskit::to_string(s.spectrum) + "\n";
  std::string out = "underdetermined; free directions over";
  for (const auto& u : s.unknowns) out += " " + u;
  return out + "\n";
}

std::string checks_text(const hvskit::CheckReport& r) {
  std::ostringstream os;
  for (const auto& c : r.checks) {
    os << pass_word(c.pass) << "  " << c.name;
    if (!c.detail.empty()) os << " (" << c.detail << ")";
    os << "\n";
  }
  return os.str();
}

std::string semicont_text(const hvskit::SemicontReport& r) {
  std::ostringstream os;
  os << "verdict: " << pass_word(r.pass()) << "\n";
  for (const auto& row : r.rows)
    os << "s=" << hvskit::exact::to_string(row.s) << " " << (row.inequality == 1 ? "inside " : "outside") << " "
       << row.lhs << " >= " << row.rhs << "  " << pass_word(row.pass()) << "\n";
  return os.str();
}

}  // namespace

extern "C" {

const char* hvsk_version(void) { return "0.1.0"; }

const char* hvsk_last_error(void) { return last_error.c_str(); }

const char* hvsk_report_json(const hvsk_report* r) { return r ? r->json.c_str() : ""; }
const char* hvsk_report_text(const hvsk_report* r) { return r ? r->text.c_str() : ""; }
int hvsk_report_passed(const hvsk_report* r) { return r && r->passed ? 1 : 0; }
void hvsk_report_free(hvsk_report* r) { delete r; }

hvsk_status hvsk_hvs_from_json(const char* json, hvsk_hvs** out) {
  if (!json || !out) return null_arg("json/out");
  return guard([&] {
    *out = new hvsk_hvs{io::hvs_from_json(io::parse_text(json))};
    return HVSK_OK;
  });
}

hvsk_status hvsk_hvs_from_blocks(const char* blocks_json, uint64_t seed, hvsk_hvs** out) {
  if (!blocks_json || !out) return null_arg("blocks_json/out");
  return guard([&] {
    auto spec = io::blocks_from_json(io::parse_text(blocks_json));
    *out = new hvsk_hvs{hvskit::realize_blocks(spec, seed).hvs};
    return HVSK_OK;
  });
}

size_t hvsk_hvs_dim(const hvsk_hvs* v) { return v ? v->v.dim() : 0; }

hvsk_status hvsk_hvs_to_json(const hvsk_hvs* v, hvsk_report** out) {
  if (!v || !out) return null_arg("hvs/out");
  return guard([&] {
    Json j = io::to_json(v->v);
    return emit(out, j, io::dump(j), true);
  });
}

void hvsk_hvs_free(hvsk_hvs* v) { delete v; }

hvsk_status hvsk_validate(const hvsk_hvs* v, hvsk_report** out) {
  if (!v || !out) return null_arg("hvs/out");
  return guard([&] {
    auto r = hvskit::validate_hvs(v->v);
    return emit(out, io::report_json(r), validation_text(r), r.ok());
  });
}

hvsk_status hvsk_signature_profile(const hvsk_hvs* v, unsigned density, hvsk_report** out) {
  if (!v || !out) return null_arg("hvs/out");
  return guard([&] {
    auto p = hvskit::signature_profile(v->v, density == 0 ? 1 : density);
    return emit(out, io::report_json(p), profile_text(p), true);
  });
}

hvsk_status hvsk_spectrum_from_signatures(const hvsk_hvs* v, unsigned m1, unsigned m2, hvsk_report** out) {
  if (!v || !out) return null_arg("hvs/out");
  return guard([&] {
    auto s = hvskit::spectrum_from_signatures(v->v, m1, m2);
    return emit(out, io::report_json(s), solve_text(s), true);
  });
}

hvsk_status hvsk_spectrum_from_blocks(const char* blocks_json, hvsk_report** out) {
  if (!blocks_json || !out) return null_arg("blocks_json/out");
  return guard([&] {
    auto sp = hvskit::spectrum_from_blocks(io::blocks_from_json(io::parse_text(blocks_json)));
    return emit(out, Json{{"spectrum", io::to_json(sp)}}, hvskit::to_string(sp) + "\n", true);
  });
}

hvsk_status hvsk_jordan_data(const hvsk_hvs* v, hvsk_report** out) {
  if (!v || !out) return null_arg("hvs/out");
  return guard([&] {
    auto jd = hvskit::jordan_data(v->v.h);
    std::ostringstream os;
    for (const auto& [o, sizes] : jd.blocks) {
      os << "d=" << o.d << (o.orbit ? " orbit " + std::to_string(o.orbit) : std::string()) << ":";
      for (const auto& [k, m] : sizes) os << " " << m << "xJ" << k;
      os << "\n";
    }
    if (jd.noncyclotomic_dim) os << "non-cyclotomic part: dim " << jd.noncyclotomic_dim << "\n";
    return emit(out, io::report_json(jd), os.str(), true);
  });
}

hvsk_status hvsk_fibred_from_json(const char* json, hvsk_fibred** out) {
  if (!json || !out) return null_arg("json/out");
  return guard([&] {
    *out = new hvsk_fibred{io::fibred_from_json(io::parse_text(json))};
    return HVSK_OK;
  });
}

hvsk_status hvsk_fibred_to_json(const hvsk_fibred* fl, hvsk_report** out) {
  if (!fl || !out) return null_arg("fibred/out");
  return guard([&] {
    Json j = io::to_json(fl->fl);
    return emit(out, j, io::dump(j), true);
  });
}

void hvsk_fibred_free(hvsk_fibred* fl) { delete fl; }

hvsk_status hvsk_fractured_from_json(const char* json, hvsk_fractured** out) {
  if (!json || !out) return null_arg("json/out");
  return guard([&] {
    *out = new hvsk_fractured{io::fractured_from_json(io::parse_text(json))};
    return HVSK_OK;
  });
}

hvsk_status hvsk_fractured_to_json(const hvsk_fractured* fd, hvsk_report** out) {
  if (!fd || !out) return null_arg("fractured/out");
  return guard([&] {
    Json j = io::to_json(fd->fd);
    return emit(out, j, io::dump(j), true);
  });
}

void hvsk_fractured_free(hvsk_fractured* fd) { delete fd; }

hvsk_status hvsk_extract(const hvsk_fibred* fl, uint64_t seed, hvsk_fractured** out) {
  if (!fl || !out) return null_arg("fibred/out");
  return guard([&] {
    *out = new hvsk_fractured{hvskit::extract_fractured(fl->fl, seed)};
    return HVSK_OK;
  });
}

hvsk_status hvsk_mend(const hvsk_fractured* fd, hvsk_fibred** out) {
  if (!fd || !out) return null_arg("fractured/out");
  return guard([&] {
    *out = new hvsk_fibred{hvskit::mend(fd->fd)};
    return HVSK_OK;
  });
}

hvsk_status hvsk_seifert_checks(const hvsk_fractured* fd, hvsk_report** out) {
  if (!fd || !out) return null_arg("fractured/out");
  return guard([&] {
    auto r = hvskit::seifert_checks(fd->fd);
    return emit(out, io::report_json(r), checks_text(r), r.ok());
  });
}

hvsk_status hvsk_fractured_spectrum(const hvsk_fractured* fd, hvsk_report** out) {
  if (!fd || !out) return null_arg("fractured/out");
  return guard([&] {
    auto fs = hvskit::fractured_spectrum(fd->fd);
    std::string text = "Sp_frct: " + solve_text(fs.solve);
    if (fs.solve.determined)
      text += "Sp_MHS: " + hvskit::to_string(hvskit::mhs_spectrum(fs.solve.spectrum, fd->fd.c, fd->fd.g)) + "\n";
    return emit(out, io::report_json(fs, fd->fd), text, true);
  });
}

hvsk_status hvsk_twist(const hvsk_fibred* fl, hvsk_report** out) {
  if (!fl || !out) return null_arg("fibred/out");
  return guard([&] {
    auto r = hvskit::twist_check(fl->fl);
    std::string text = "twist: " + pass_word(r.ok()) + " (N = " + std::to_string(r.N) +
                       ", inertia " + hvskit::exact::to_string(r.inertia) + ")\n";
    return emit(out, io::report_json(r), text, r.ok());
  });
}

hvsk_status hvsk_plumbing(const char* json, hvsk_report** out) {
  if (!json || !out) return null_arg("json/out");
  return guard([&] {
    auto p = hvskit::plumbing_invariants(io::plumbing_from_json(io::parse_text(json)));
    std::string text = "c = " + std::to_string(p.c) + ", g = " + std::to_string(p.gsum) + ", n = " +
                       std::to_string(p.n) + ", b1(M) = " + std::to_string(p.b1M) + "\n";
    return emit(out, io::report_json(p), text, true);
  });
}

hvsk_status hvsk_linking(const char* json, hvsk_report** out) {
  if (!json || !out) return null_arg("json/out");
  return guard([&] {
    auto r = hvskit::linking_matrix_check(io::linking_from_json(io::parse_text(json)));
    std::string text = "linking form: " + pass_word(r.ok()) + " (inertia " + hvskit::exact::to_string(r.inertia) +
                       (r.kernel_is_diagonal ? ", kernel (1, ..., 1)" : ", kernel not diagonal") + ")\n";
    return emit(out, io::report_json(r), text, r.ok());
  });
}

hvsk_status hvsk_murasugi(const char* json, hvsk_report** out) {
  if (!json || !out) return null_arg("json/out");
  return guard([&] {
    auto in = io::murasugi_from_json(io::parse_text(json));
    auto r = hvskit::murasugi_check(in.sig0, in.sig1, in.null0, in.null1, in.ci);
    std::string text = "|sigma0 - sigma1| = " + std::to_string(r.lhs) + " <= " + std::to_string(r.rhs) + ": " +
                       pass_word(r.pass()) + " (slack " + std::to_string(r.slack()) + ")\n";
    return emit(out, io::report_json(r), text, r.pass());
  });
}

hvsk_status hvsk_semicont(const char* json, hvsk_report** out) {
  if (!json || !out) return null_arg("json/out");
  return guard([&] {
    auto r = hvskit::semicontinuity_check(io::scenario_from_json(io::parse_text(json)));
    return emit(out, io::report_json(r), semicont_text(r), r.pass());
  });
}

hvsk_status hvsk_semicont_mhs(const char* json, hvsk_report** out) {
  if (!json || !out) return null_arg("json/out");
  return guard([&] {
    auto r = hvskit::semicontinuity_mhs_check(io::scenario_from_json(io::parse_text(json)));
    return emit(out, io::report_json(r),
                "delta1 = " + std::to_string(r.delta1) + ", delta2 = " + std::to_string(r.delta2) + "\n" +
                    semicont_text(r),
                r.pass());
  });
}

}  // extern "C"
