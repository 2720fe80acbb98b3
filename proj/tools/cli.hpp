// Copyright 2026 The ringcyclic Authors.
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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ringcyclic/cyclic.hpp"
#include "ringcyclic/detail/fault_injection.hpp"
#include "ringcyclic/errors.hpp"
#include "ringcyclic/gf.hpp"
#include "ringcyclic/limits.hpp"
#include "ringcyclic/oracle.hpp"
#include "ringcyclic/poly.hpp"
#include "ringcyclic/rcode.hpp"
#include "ringcyclic/ring_poly.hpp"
#include "ringcyclic/ring_r.hpp"
#include "ringcyclic/verify.hpp"

namespace ringcyclic::cli {

using json = nlohmann::ordered_json;

enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitInputError = 2,
  kExitLimit = 3,
};

inline int exit_code_for(Errc code) {
  switch (code) {
    case Errc::kLimitExceeded: return kExitLimit;
    case Errc::kInternal: return kExitVerifyFailed;
    default: return kExitInputError;
  }
}

namespace detail {

struct FieldArgs {
  std::uint32_t p = 0;
  std::uint32_t k = 1;
  std::string modulus;

  Field field() const {
    if (modulus.empty()) return Field(p, k);
    return Field(p, k, ringcyclic::detail::parse_int_poly(modulus, p));
  }
};

inline void add_field_options(CLI::App* cmd, FieldArgs& a) {
  cmd->add_option("--p", a.p, "characteristic")->required();
  cmd->add_option("--k", a.k, "extension degree")->capture_default_str();
  cmd->add_option("--modulus", a.modulus, "irreducible modulus over F_p, e.g. x^2+1");
}

inline std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) throw Error(Errc::kParseError, "cannot read '" + path + "'");
  buf << file.rdbuf();
  return buf.str();
}

inline void write_output(const std::string& path, const std::string& text) {
  std::ofstream file(path);
  if (!file) throw Error(Errc::kParseError, "cannot write '" + path + "'");
  file << text;
}

inline json descriptor_json(const RCode& c) {
  return json{{"ring", c.ring().description()},
              {"n", c.n()},
              {"g1", c.component(1).generator().to_string()},
              {"g2", c.component(2).generator().to_string()},
              {"g3", c.component(3).generator().to_string()}};
}

inline oracle::CodewordSet rcode_set(const oracle::Alphabet& a, const RCode& c, EnumerationLimit limit) {
  return verify::detail::enumerated_set(a, c, limit);
}

inline std::vector<RingElement> parse_ring_word(const RingSpec& ring, const std::string& text) {
  std::vector<RingElement> out;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    out.push_back(RingElement::parse(ring, rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return out;
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

}  // namespace detail

// Parses `args` (without the program name) and runs one subcommand.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cyclic codes over F_q[v]/(v^{r+1} - v)", "ringcyclic"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  detail::FieldArgs field_args;
  std::uint32_t n = 0;
  std::uint32_t r = 0;
  std::string descriptor_path;
  std::string output_path;
  bool do_verify = false;
  std::string word_text;
  std::uint32_t n_max = 0;
  std::string grid_text;
  bool grid_given = false;
  std::uint64_t seed = verify::Options{}.seed;
  unsigned workers = 1;
  std::string fault_name;

  auto* factor = app.add_subcommand("factor", "irreducible factors of x^n - 1");
  detail::add_field_options(factor, field_args);
  factor->add_option("--n", n, "length")->required();

  auto* idempotents = app.add_subcommand("idempotents", "the idempotents e1, e2, e3 of R_r");
  detail::add_field_options(idempotents, field_args);
  idempotents->add_option("--r", r, "r")->required();

  auto add_descriptor_command = [&](const char* name, const char* help, bool writes) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("descriptor", descriptor_path, "R-code descriptor file, '-' for stdin")->required();
    cmd->add_flag("--verify", do_verify, "cross-check against the brute-force oracle");
    if (writes) cmd->add_option("-o,--output", output_path, "write the resulting descriptor here");
    return cmd;
  };
  auto* build = add_descriptor_command("build", "canonical form and size of an R-code", true);
  auto* dual_cmd = add_descriptor_command("dual", "dual of an R-code", true);
  auto* gray = add_descriptor_command("gray", "Gray image of an R-code or of one word", false);
  gray->add_option("--word", word_text, "comma-separated ring elements, e.g. 1+v,0");
  auto* idempotent = add_descriptor_command("idempotent", "generating idempotent over R", false);
  auto* single_gen = add_descriptor_command("single-gen", "single generator over R", false);
  auto* min_distance = add_descriptor_command("min-distance", "minimum Hamming distance", false);

  auto* selfdual = app.add_subcommand("selfdual-search", "all self-dual R-codes up to a length");
  detail::add_field_options(selfdual, field_args);
  selfdual->add_option("--r", r, "r")->required();
  selfdual->add_option("--n-max", n_max, "largest length")->required();

  auto* verify_cmd = app.add_subcommand("verify", "run the oracle suite over a parameter grid");
  verify_cmd->add_option("--grid", grid_text, "e.g. p=2,3,5;k=1,2;r=2,3;n=1,2,4")->each([&](const std::string&) {
    grid_given = true;
  });
  verify_cmd->add_option("--seed", seed, "seed for randomized cases")->capture_default_str();
  verify_cmd->add_option("--workers", workers, "threads for exhaustive scans")->capture_default_str();
  if constexpr (ringcyclic::detail::kFaultInjectionAvailable) {
    verify_cmd->add_option("--inject-fault", fault_name, "test-only fault")->group("");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    const EnumerationLimit limit = EnumerationLimit::from_env();
    std::ostringstream text;
    json doc;

    if (factor->parsed()) {
      const Field f = field_args.field();
      const auto factors = factor_xn_minus_1(f, n, limit);
      json list = json::array();
      for (const Poly& g : factors) {
        text << g.to_string() << "\n";
        list.push_back(g.to_string());
      }
      doc = json{{"field", f.description()}, {"n", n}, {"factors", list}};
    } else if (idempotents->parsed()) {
      const RingSpec ring(field_args.field(), r);
      const auto e = ring.idempotents();
      const RingElement zero(ring);
      json checks = json::array();
      bool ok = true;
      text << "ring = " << ring.description() << "\n";
      for (int i = 0; i < 3; ++i) text << "e" << i + 1 << " = " << e[i].to_string() << "\n";
      auto line = [&](const std::string& name, bool pass) {
        ok = ok && pass;
        text << name << " " << (pass ? "PASS" : "FAIL") << "\n";
        checks.push_back(json{{"check", name}, {"pass", pass}});
      };
      for (int i = 0; i < 3; ++i) {
        line("e" + std::to_string(i + 1) + "^2 = e" + std::to_string(i + 1), e[i] * e[i] == e[i]);
      }
      for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
          line("e" + std::to_string(i + 1) + "*e" + std::to_string(j + 1) + " = 0", e[i] * e[j] == zero);
        }
      }
      for (int i = 0; i < 3; ++i) line("e" + std::to_string(i + 1) + " != 0", !e[i].is_zero());
      line("sum = 1", e[0] + e[1] + e[2] == RingElement::one(ring));
      doc = json{{"ring", ring.description()},
                 {"e1", e[0].to_string()},
                 {"e2", e[1].to_string()},
                 {"e3", e[2].to_string()},
                 {"checks", checks}};
      if (!ok) {
        out << (as_json ? doc.dump(2) + "\n" : text.str());
        return kExitVerifyFailed;
      }
    } else if (selfdual->parsed()) {
      const RingSpec ring(field_args.field(), r);
      const Field& f = ring.field();
      json rows = json::array();
      std::size_t examined = 0;
      text << "n g1 g2 g3\n";
      for (std::uint32_t len = 1; len <= n_max; ++len) {
        if (len % f.p() == 0) continue;
        const auto codes = all_cyclic_codes(f, len, limit);
        std::vector<CyclicCode> self_dual_components;
        for (const CyclicCode& c : codes) {
          if (dual(c) == c) self_dual_components.push_back(c);
        }
        examined += codes.size() * codes.size() * codes.size();
        for (const CyclicCode& a : self_dual_components) {
          for (const CyclicCode& b : self_dual_components) {
            for (const CyclicCode& c : self_dual_components) {
              const RCode code = RCode::build(ring, a, b, c);
              RINGCYCLIC_CHECK(is_self_dual(code), "search rows are self-dual");
              text << len << " " << a.generator().to_string() << " " << b.generator().to_string() << " "
                   << c.generator().to_string() << "\n";
              rows.push_back(json{{"n", len},
                                  {"g1", a.generator().to_string()},
                                  {"g2", b.generator().to_string()},
                                  {"g3", c.generator().to_string()}});
            }
          }
        }
      }
      text << "# codes=" << examined << " self-dual=" << rows.size() << "\n";
      doc = json{{"ring", ring.description()}, {"n_max", n_max}, {"codes", examined}, {"rows", rows}};
    } else if (verify_cmd->parsed()) {
      verify::Options opt;
      if (grid_given) opt.grid = verify::Grid::parse(grid_text);
      opt.seed = seed;
      opt.workers = workers;
      opt.limit = limit;
      std::optional<verify::Report> report;
      if constexpr (ringcyclic::detail::kFaultInjectionAvailable) {
        [[maybe_unused]] auto fault = ringcyclic::detail::Fault::kNone;
        if (!fault_name.empty()) {
          const auto parsed = ringcyclic::detail::parse_fault(fault_name);
          if (!parsed) throw Error(Errc::kInvalidArgument, "unknown fault '" + fault_name + "'");
          fault = *parsed;
        }
#if defined(RINGCYCLIC_FAULT_INJECTION)
        const ringcyclic::detail::ScopedFault guard(fault);
        report = verify::run_suite(opt);
#endif
      } else {
        report = verify::run_suite(opt);
      }
      text << report->to_text();
      json results = json::array();
      for (const auto& res : report->results) {
        json item{{"theorem", res.id}, {"params", res.ran() ? res.full_params() : res.params}};
        item["status"] = !res.ran() ? "SKIPPED" : res.failed ? "FAIL" : "PASS";
        if (res.failed) item["counterexample"] = res.counterexample;
        results.push_back(std::move(item));
      }
      doc = json{{"results", results},
                 {"checks", report->checks()},
                 {"failed", report->failures()},
                 {"invalid_points", report->invalid_points}};
      out << (as_json ? doc.dump(2) + "\n" : text.str());
      return report->all_passed() ? kExitOk : kExitVerifyFailed;
    } else {
      const RCode code = RCode::parse_descriptor(detail::read_input(descriptor_path, in));
      const RingSpec& ring = code.ring();
      bool verified = true;
      std::string verify_note;
      auto oracle_alphabet = [&] { return oracle::Alphabet::subring(ring, limit); };

      if (build->parsed() || dual_cmd->parsed()) {
        const RCode result = build->parsed() ? code : dual(code);
        text << result.descriptor();
        text << "|C| = " << result.cardinality() << "\n";
        doc = detail::descriptor_json(result);
        doc["cardinality"] = result.cardinality();
        if (do_verify) {
          const oracle::Alphabet a = oracle_alphabet();
          const oracle::CodewordSet got = detail::rcode_set(a, result, limit);
          oracle::CodewordSet expected(a, code.n());
          if (build->parsed()) {
            std::vector<oracle::Row> gens;
            for (const RingPoly& g : generators_over_r(code)) {
              gens.push_back(verify::detail::ring_poly_row(a, g, code.n()));
            }
            expected = oracle::ideal_closure(a, code.n(), gens, limit);
          } else {
            expected = oracle::exhaustive_dual(detail::rcode_set(a, code, limit), limit);
          }
          verified = got == expected;
        }
        if (!output_path.empty()) detail::write_output(output_path, result.descriptor());
      } else if (gray->parsed()) {
        if (!word_text.empty()) {
          const auto word = detail::parse_ring_word(ring, word_text);
          if (word.size() != code.n()) throw Error(Errc::kInvalidArgument, "word length differs from n");
          const Word image = gray_map(from_ring_word(word));
          std::vector<std::string> parts;
          for (FieldElement c : image) parts.push_back(ring.field().to_string(c));
          text << detail::join(parts, " ") << "\n";
          doc = json{{"word", word_text}, {"image", parts}};
          if (do_verify) verified = gray_preimage(image) == from_ring_word(word);
        } else {
          const GrayImage g = gray_map_code(code);
          text << "length = " << g.length << "\n";
          for (std::size_t i = 0; i < 3; ++i) text << "block" << i + 1 << " = " << g.blocks[i].descriptor() << "\n";
          text << "|phi(C)| = " << g.cardinality << "\n";
          doc = json{{"length", g.length},
                     {"blocks", {g.blocks[0].descriptor(), g.blocks[1].descriptor(), g.blocks[2].descriptor()}},
                     {"cardinality", g.cardinality}};
          if (do_verify) verified = is_quasi_cyclic_order3(code, limit);
        }
      } else if (idempotent->parsed()) {
        const RingPoly e = idempotent_over_r(code);
        const auto f = component_idempotents(code);
        text << "e = " << e.to_string() << "\n";
        for (std::size_t i = 0; i < 3; ++i) text << "f" << i + 1 << " = " << f[i].to_string() << "\n";
        const RingPoly de = dual_idempotent(code);
        text << "dual e = " << de.to_string() << "\n";
        doc = json{{"e", e.to_string()},
                   {"components", {f[0].to_string(), f[1].to_string(), f[2].to_string()}},
                   {"dual", de.to_string()}};
        if (do_verify) {
          const oracle::Alphabet a = oracle_alphabet();
          const oracle::CodewordSet s = detail::rcode_set(a, code, limit);
          const oracle::Row row = verify::detail::ring_poly_row(a, e, code.n());
          verified = oracle::ideal_closure(a, code.n(), {row}, limit) == s && oracle::is_unity(s, row);
        }
      } else if (single_gen->parsed()) {
        const RingPoly g = single_generator(code);
        text << "g = " << g.to_string() << "\n";
        doc = json{{"g", g.to_string()}};
        if (do_verify) {
          const oracle::Alphabet a = oracle_alphabet();
          verified = oracle::ideal_closure(a, code.n(), {verify::detail::ring_poly_row(a, g, code.n())}, limit) ==
                     detail::rcode_set(a, code, limit);
        }
      } else if (min_distance->parsed()) {
        const auto d = min_weight(code, limit);
        std::optional<std::size_t> d_gray;
        for (const RCodeword& w : code.enumerate_codewords(limit)) {
          std::size_t weight = 0;
          for (FieldElement c : gray_map(w)) weight += !(c == Field::zero());
          if (weight != 0 && (!d_gray || weight < *d_gray)) d_gray = weight;
        }
        text << "d = " << (d ? std::to_string(*d) : "inf") << "\n";
        text << "d_gray = " << (d_gray ? std::to_string(*d_gray) : "inf") << "\n";
        doc = json{{"d", d ? json(*d) : json(nullptr)}, {"d_gray", d_gray ? json(*d_gray) : json(nullptr)}};
        if (do_verify) {
          std::size_t components_min = code.n() + 1;
          for (const CyclicCode& c : code.components()) {
            if (auto w = c.min_weight(limit)) components_min = std::min(components_min, *w);
          }
          verified = d_gray == (components_min > code.n() ? std::nullopt : std::optional<std::size_t>(components_min));
        }
      }
      if (do_verify) {
        text << "verify " << (verified ? "PASS" : "FAIL") << "\n";
        doc["verify"] = verified ? "PASS" : "FAIL";
      }
      out << (as_json ? doc.dump(2) + "\n" : text.str());
      return verified ? kExitOk : kExitVerifyFailed;
    }
    out << (as_json ? doc.dump(2) + "\n" : text.str());
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace ringcyclic::cli
