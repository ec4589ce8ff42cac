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

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "hvskit/hvskit.h"

namespace {

struct Options {
  std::string format = "text";
  unsigned density = 1;
  std::uint64_t seed = 1;
};

constexpr int kExitInput = 2;

int fail_input(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return kExitInput;
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

int status_exit(hvsk_status st) {
  switch (st) {
    case HVSK_OK: return 0;
    case HVSK_VIOLATED: return 1;
    case HVSK_INPUT_ERROR: return kExitInput;
    default: return 3;
  }
}

int library_error(hvsk_status st) {
  std::cerr << "error: " << hvsk_last_error() << "\n";
  return status_exit(st);
}

// Takes the address so the status call is sequenced before the read.
int print_report(hvsk_status st, hvsk_report** r, const Options& opt) {
  if (!*r) return library_error(st);
  std::cout << (opt.format == "json" ? hvsk_report_json(*r) : hvsk_report_text(*r));
  hvsk_report_free(*r);
  return status_exit(st);
}

// Loads `path` and runs a report-producing call on its contents.
int run_json(const std::string& path, const Options& opt,
             const std::function<hvsk_status(const char*, hvsk_report**)>& call) {
  std::string text;
  if (!read_file(path, text)) return fail_input("cannot read " + path);
  hvsk_report* r = nullptr;
  hvsk_status st = call(text.c_str(), &r);
  return print_report(st, &r, opt);
}

template <class Handle, class Load, class Free>
int with_handle(const std::string& path, Load load, Free release, const std::function<int(Handle*)>& body) {
  std::string text;
  if (!read_file(path, text)) return fail_input("cannot read " + path);
  Handle* h = nullptr;
  hvsk_status st = load(text.c_str(), &h);
  if (st != HVSK_OK) return library_error(st);
  int rc = body(h);
  release(h);
  return rc;
}

int with_hvs(const std::string& path, const std::function<int(hvsk_hvs*)>& body) {
  return with_handle<hvsk_hvs>(path, hvsk_hvs_from_json, hvsk_hvs_free, body);
}

int with_fibred(const std::string& path, const std::function<int(hvsk_fibred*)>& body) {
  return with_handle<hvsk_fibred>(path, hvsk_fibred_from_json, hvsk_fibred_free, body);
}

int with_fractured(const std::string& path, const std::function<int(hvsk_fractured*)>& body) {
  return with_handle<hvsk_fractured>(path, hvsk_fractured_from_json, hvsk_fractured_free, body);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hvskit: exact hermitian variation structures, fractured Seifert forms and spectra"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--sample-density", opt.density, "certified samples per signature arc")
      ->check(CLI::Range(1u, 64u));
  app.add_option("--seed", opt.seed, "seed for randomized constructions");

  std::string input;
  std::function<int()> action;

  auto* validate = app.add_subcommand("validate", "check the HVS axioms of an hvs.json");
  validate->add_option("input", input, "hvs.json")->required();
  validate->callback([&] {
    action = [&] {
      return with_hvs(input, [&](hvsk_hvs* v) {
        hvsk_report* r = nullptr;
        return print_report(hvsk_validate(v, &r), &r, opt);
      });
    };
  });

  auto* blocks = app.add_subcommand("blocks", "realize a blocks.json as an explicit HVS");
  blocks->add_option("input", input, "blocks.json")->required();
  blocks->callback([&] {
    action = [&] {
      std::string text;
      if (!read_file(input, text)) return fail_input("cannot read " + input);
      hvsk_hvs* v = nullptr;
      hvsk_status st = hvsk_hvs_from_blocks(text.c_str(), opt.seed, &v);
      if (st != HVSK_OK) return library_error(st);
      hvsk_report* r = nullptr;
      st = hvsk_hvs_to_json(v, &r);
      hvsk_hvs_free(v);
      return print_report(st, &r, opt);
    };
  });

  std::string blocks_file, fractured_file;
  unsigned m1 = 0, m2 = 0;
  auto* spectrum = app.add_subcommand("spectrum", "spectrum from blocks, signatures or fractured data");
  auto* in_opt = spectrum->add_option("input", input, "hvs.json (signature reconstruction)");
  auto* bl_opt = spectrum->add_option("--blocks", blocks_file, "blocks.json");
  auto* fr_opt = spectrum->add_option("--fractured", fractured_file, "fractured.json");
  in_opt->excludes(bl_opt)->excludes(fr_opt);
  bl_opt->excludes(fr_opt);
  spectrum->add_option("--m1", m1, "multiplicity of 1 (with an hvs.json)");
  spectrum->add_option("--m2", m2, "multiplicity of 2 (with an hvs.json)");
  spectrum->callback([&] {
    action = [&] {
      if (!blocks_file.empty()) return run_json(blocks_file, opt, hvsk_spectrum_from_blocks);
      if (!fractured_file.empty())
        return with_fractured(fractured_file, [&](hvsk_fractured* fd) {
          hvsk_report* r = nullptr;
          return print_report(hvsk_fractured_spectrum(fd, &r), &r, opt);
        });
      if (input.empty()) return fail_input("spectrum needs an hvs.json, --blocks or --fractured");
      return with_hvs(input, [&](hvsk_hvs* v) {
        hvsk_report* r = nullptr;
        return print_report(hvsk_spectrum_from_signatures(v, m1, m2, &r), &r, opt);
      });
    };
  });

  auto* signature = app.add_subcommand("signature", "signature step function of an hvs.json");
  signature->add_option("input", input, "hvs.json")->required();
  signature->callback([&] {
    action = [&] {
      return with_hvs(input, [&](hvsk_hvs* v) {
        hvsk_report* r = nullptr;
        return print_report(hvsk_signature_profile(v, opt.density, &r), &r, opt);
      });
    };
  });

  bool checks_only = false;
  auto* fractured = app.add_subcommand(
      "fractured", "fractured Seifert data of a fibred_link.json, or checks of a fractured.json");
  fractured->add_option("input", input, "fibred_link.json or fractured.json")->required();
  fractured->add_flag("--checks", checks_only, "print the Seifert identity checks instead of the data");
  fractured->callback([&] {
    action = [&] {
      auto report = [&](hvsk_fractured* fd) {
        hvsk_report* r = nullptr;
        hvsk_status st = checks_only ? hvsk_seifert_checks(fd, &r) : hvsk_fractured_to_json(fd, &r);
        return print_report(st, &r, opt);
      };
      std::string text;
      if (!read_file(input, text)) return fail_input("cannot read " + input);
      auto j = nlohmann::json::parse(text, nullptr, false);
      if (j.is_object() && j.contains("S")) return with_fractured(input, report);
      return with_fibred(input, [&](hvsk_fibred* fl) {
        hvsk_fractured* fd = nullptr;
        hvsk_status st = hvsk_extract(fl, opt.seed, &fd);
        if (st != HVSK_OK) return library_error(st);
        int rc = report(fd);
        hvsk_fractured_free(fd);
        return rc;
      });
    };
  });

  auto* mend = app.add_subcommand("mend", "rebuild the fibred link structure from a fractured.json");
  mend->add_option("input", input, "fractured.json")->required();
  mend->callback([&] {
    action = [&] {
      return with_fractured(input, [&](hvsk_fractured* fd) {
        hvsk_fibred* fl = nullptr;
        hvsk_status st = hvsk_mend(fd, &fl);
        if (st != HVSK_OK) return library_error(st);
        hvsk_report* r = nullptr;
        st = hvsk_fibred_to_json(fl, &r);
        hvsk_fibred_free(fl);
        return print_report(st, &r, opt);
      });
    };
  });

  auto* twist = app.add_subcommand("twist", "analyticity (twist) test of a fibred_link.json");
  twist->add_option("input", input, "fibred_link.json")->required();
  twist->callback([&] {
    action = [&] {
      return with_fibred(input, [&](hvsk_fibred* fl) {
        hvsk_report* r = nullptr;
        return print_report(hvsk_twist(fl, &r), &r, opt);
      });
    };
  });

  auto simple = [&](const char* name, const char* help, const char* what,
                    hvsk_status (*call)(const char*, hvsk_report**)) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("input", input, what)->required();
    sub->callback([&, call] { action = [&, call] { return run_json(input, opt, call); }; });
  };
  simple("graph", "plumbing graph invariants", "plumbing.json", hvsk_plumbing);
  simple("linking", "fractured linking form of a special link", "linking.json", hvsk_linking);
  simple("murasugi", "Murasugi-type signature bound", "murasugi.json", hvsk_murasugi);
  simple("semicont", "fractured spectrum semicontinuity", "scenario.json", hvsk_semicont);
  simple("semicont-mhs", "MHS spectrum semicontinuity", "scenario.json", hvsk_semicont_mhs);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }
  return action ? action() : kExitInput;
}
