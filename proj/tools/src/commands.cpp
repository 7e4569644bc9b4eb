// Copyright 2026 The serfact Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "serfact/cli/commands.hpp"

#include <chrono>
#include <exception>
#include <functional>
#include <map>

#include "serfact/cli/suites.hpp"
#include "serfact/error.hpp"
#include "serfact/factorization.hpp"
#include "serfact/integer.hpp"
#include "serfact/lattice.hpp"

namespace serfact::cli {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Ok: return "ok";
    case Status::Fail: return "fail";
    case Status::Error: return "error";
  }
  return "?";
}

Json Report::to_json() const {
  Json j;
  j["command"] = command;
  j["status"] = to_string(status);
  j["payload"] = payload;
  j["witnesses"] = witnesses;
  j["wall_time_ms"] = wall_time_ms;
  return j;
}

const std::vector<std::string_view>& command_names() {
  static const std::vector<std::string_view> names = {
      "ring-check",    "ideal-factor",   "ideal-verify", "ideal-list", "overideal-factor",
      "similarity",    "classify-ring",  "int-factor",   "int-rigid",  "suite"};
  return names;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::CapExceeded:
    case ErrorCode::BudgetExceeded:
    case ErrorCode::FactorBudgetExceeded:
      return 3;
    default:
      return 2;
  }
}

namespace {

struct Context {
  const CommandInput& in;
  Report& report;

  Ring ring() const {
    if (!in.ring) throw Error(ErrorCode::ParseError, "--ring is required");
    return build_ring(load_ring_spec(*in.ring), {in.cap, kDefaultTableThreshold});
  }

  RightIdeal ideal(const Ring& r, const std::optional<std::string>& csv, const char* flag) const {
    if (!csv) throw Error(ErrorCode::ParseError, std::string(flag) + " is required");
    const auto gens = parse_element_list(*csv);
    return right_ideal(r, gens);
  }

  std::int64_t integer() const {
    if (!in.integer) throw Error(ErrorCode::ParseError, "an integer argument is required");
    return *in.integer;
  }

  void fail() const { report.status = Status::Fail; }
};

Json factor_lists(const std::vector<RightIdeal>& factors) {
  Json out = Json::array();
  for (const RightIdeal& f : factors) out.push_back(small_generating_set(f));
  return out;
}

Json certificate_json(const std::vector<CertificateEntry>& cert) {
  Json out = Json::array();
  for (const CertificateEntry& c : cert) {
    Json e;
    e["check"] = c.check;
    e["passed"] = c.passed;
    e["witness"] = c.witness;
    out.push_back(std::move(e));
  }
  return out;
}

Json parts_json(const PrimePowerFactorization& f) {
  Json out = Json::array();
  for (const PrimePower& p : f.parts) out.push_back(Json::array({p.prime, p.exponent}));
  return out;
}

void ring_check(Context& c) {
  const Ring ring = c.ring();
  const AxiomReport axioms = ring_axioms_report(ring);
  Json& p = c.report.payload;
  p["ring"] = ring.name();
  p["order"] = ring.order();
  Json a;
  a["ok"] = axioms.ok;
  if (axioms.first_violation) {
    a["first_violation"] = {{"axiom", axioms.first_violation->axiom},
                            {"witness", axioms.first_violation->witness}};
    c.report.witnesses = axioms.first_violation->witness;
  } else {
    a["first_violation"] = nullptr;
  }
  a["notes"] = axioms.notes;
  p["axioms"] = std::move(a);
  if (!axioms.ok) {
    c.fail();
    return;
  }
  const auto& index = lattice_index(ring);
  std::size_t two_sided = 0;
  for (bool b : index.two_sided) two_sided += b ? 1 : 0;
  p["commutative"] = is_commutative(ring);
  p["field"] = is_field(ring);
  p["right_chain"] = is_right_chain(ring);
  p["right_duo"] = is_right_duo(ring);
  p["right_ideals"] = index.ideals.size();
  p["two_sided_ideals"] = two_sided;
  p["primitive_central_idempotents"] = central_idempotents(ring).primitive;
}

void ideal_factor(Context& c) {
  const Ring ring = c.ring();
  const RightIdeal a = c.ideal(ring, c.in.generators, "--generators");
  const FactorizationResult r = find_serial_factorization(a);
  Json& p = c.report.payload;
  p["ideal"] = ideal_to_json(a);
  p["factorizable"] = r.ok();
  if (r.ok()) {
    p["factors"] = factor_lists(r.factorization().factors);
    p["reason"] = nullptr;
  } else {
    p["factors"] = Json::array();
    p["reason"] = to_string(r.failure().reason);
    p["detail"] = r.failure().detail;
    c.report.witnesses = r.failure().witness;
  }
  p["certificate"] = certificate_json(r.certificate());
}

void ideal_verify(Context& c) {
  const Ring ring = c.ring();
  const RightIdeal a = c.ideal(ring, c.in.generators, "--generators");
  if (!c.in.factors) throw Error(ErrorCode::ParseError, "--factors is required");
  std::vector<RightIdeal> factors;
  for (const auto& gens : parse_generator_lists(*c.in.factors)) factors.push_back(right_ideal(ring, gens));
  const FactorizationResult r = verify_serial_factorization(a, factors);
  Json& p = c.report.payload;
  p["valid"] = r.ok();
  p["reason"] = r.ok() ? Json(nullptr) : Json(to_string(r.failure().reason));
  p["certificate"] = certificate_json(r.certificate());
  if (!r.ok()) {
    c.report.witnesses = r.failure().witness;
    c.fail();
  }
}

void ideal_list(Context& c) {
  const Ring ring = c.ring();
  const auto& index = lattice_index(ring);
  Json list = Json::array();
  for (std::size_t i = 0; i < index.ideals.size(); ++i) {
    const RightIdeal a(ring, index.ideals[i]);
    Json e;
    e["index"] = i;
    e["size"] = a.size();
    e["generators"] = small_generating_set(a);
    e["two_sided"] = static_cast<bool>(index.two_sided[i]);
    if (a.is_proper()) {
      e["uniserial_quotient"] = is_uniserial_quotient(a);
      e["factorizable"] = find_serial_factorization(a).ok();
    } else {
      e["uniserial_quotient"] = nullptr;
      e["factorizable"] = nullptr;
    }
    list.push_back(std::move(e));
  }
  c.report.payload["ring"] = ring.name();
  c.report.payload["count"] = index.ideals.size();
  c.report.payload["ideals"] = std::move(list);
}

void overideal_factor(Context& c) {
  const Ring ring = c.ring();
  const RightIdeal a = c.ideal(ring, c.in.generators, "--generators");
  const RightIdeal b = c.ideal(ring, c.in.over, "--over");
  const FactorizationResult fa = find_serial_factorization(a);
  if (!fa.ok()) {
    throw Error(ErrorCode::NotFactorizable,
                std::string("A has no serial factorization (") +
                    std::string(to_string(fa.failure().reason)) + ")");
  }
  const bool has = overideal_has_factorization(fa.factorization(), b);
  Json& p = c.report.payload;
  p["target_factors"] = factor_lists(fa.factorization().factors);
  p["overideal"] = ideal_to_json(b);
  p["has_factorization"] = has;
  if (has) {
    const SerialFactorization fb = overideal_factorization(fa.factorization(), b);
    p["factors"] = factor_lists(fb.factors);
    p["divisor_injection"] = divisor_injection(fa.factorization(), fb);
  } else {
    p["factors"] = Json::array();
    p["divisor_injection"] = nullptr;
  }
}

void similarity_cmd(Context& c) {
  const Ring ring = c.ring();
  const RightIdeal a = c.ideal(ring, c.in.generators, "--generators");
  const RightIdeal b = c.ideal(ring, c.in.other, "--other");
  const auto iso = find_isomorphism(a, b);
  const bool similar = a == b || iso.has_value();
  Json& p = c.report.payload;
  p["similar"] = similar;
  p["isomorphism_multiplier"] = iso ? Json(iso->c) : Json(nullptr);
  p["mono_exists"] = exists_mono(a, b);
  p["epi_exists"] = exists_epi(a, b);
  if (iso) c.report.witnesses = Json::array({iso->c});
  if (!a.is_proper() || !b.is_proper()) return;
  const bool fa = find_serial_factorization(a).ok();
  const bool fb = find_serial_factorization(b).ok();
  const bool uniserial = is_uniserial_quotient(a);
  p["a_factorizable"] = fa;
  p["b_factorizable"] = fb;
  p["a_uniserial_quotient"] = uniserial;
  if (similar && fa && !(fb && (a == b || uniserial))) c.fail();
}

void classify_ring(Context& c) {
  const Ring ring = c.ring();
  const AllFactorReport r = classify_all_factor(ring);
  Json& p = c.report.payload;
  p["ring"] = ring.name();
  p["all_factor"] = r.all_factor;
  p["classification"] = to_string(r.classification);
  p["blocks"] = r.blocks;
  p["ideals_checked"] = r.ideals_checked;
  p["first_unfactorable"] =
      r.first_unfactorable ? ideal_to_json(*r.first_unfactorable) : Json(nullptr);
  p["consistent"] = r.consistent();
  if (!r.consistent()) c.fail();
}

void int_factor(Context& c) {
  const std::int64_t a = c.integer();
  const PrimePowerFactorization f = factor_int(a);
  Json& p = c.report.payload;
  p["input"] = a;
  p["unit"] = f.sign;
  p["parts"] = parts_json(f);
  p["class"] = to_string(classify_int(a));
}

void int_rigid(Context& c) {
  const std::int64_t a = c.integer();
  const IntFactorList r = rigid_factorization_int(a);
  Json& p = c.report.payload;
  p["input"] = a;
  p["unit"] = r.unit;
  p["factors"] = r.factors;
  p["parts"] = parts_json(factor_int(a));
  if (!c.in.divisor) return;
  const std::int64_t b = *c.in.divisor;
  const IntFactorList split = left_divisor_factorization_int(a, b);
  Json d;
  d["input"] = b;
  d["class"] = to_string(classify_int(b));
  d["unit"] = split.unit;
  d["factors"] = split.factors;
  if (!split.factors.empty()) {
    d["parent_indices"] = rigid_refinement_of_divisor(a, b).parent_indices;
  } else {
    d["parent_indices"] = Json::array();
  }
  p["divisor"] = std::move(d);
}

void suite_cmd(Context& c) {
  if (!c.in.suite) throw Error(ErrorCode::ParseError, "--suite is required");
  const SuiteResult r = run_suite(*c.in.suite, {c.in.budget, c.in.cap});
  Json& p = c.report.payload;
  p["suite"] = r.name;
  p["passed"] = r.passed;
  Json counts = Json::object();
  for (const auto& [k, v] : r.counts) counts[k] = v;
  p["counts"] = std::move(counts);
  p["counterexample"] = r.passed ? Json(nullptr) : Json(r.counterexample);
  if (!r.passed) {
    c.report.witnesses = Json::array({r.counterexample});
    c.fail();
  }
}

Json echo(const CommandInput& in) {
  Json j;
  j["name"] = in.name;
  if (in.ring) {
    try {
      j["ring"] = spec_to_json(load_ring_spec(*in.ring));
    } catch (const Error&) {
      j["ring"] = *in.ring;
    }
  }
  if (in.generators) j["generators"] = *in.generators;
  if (in.factors) j["factors"] = *in.factors;
  if (in.over) j["over"] = *in.over;
  if (in.other) j["other"] = *in.other;
  if (in.suite) j["suite"] = *in.suite;
  if (in.integer) j["integer"] = *in.integer;
  if (in.divisor) j["divisor"] = *in.divisor;
  j["cap"] = in.cap;
  j["budget"] = in.budget;
  return j;
}

}  // namespace

Report run_command(const CommandInput& input) {
  static const std::map<std::string_view, void (*)(Context&)> dispatch = {
      {"ring-check", ring_check},        {"ideal-factor", ideal_factor},
      {"ideal-verify", ideal_verify},    {"ideal-list", ideal_list},
      {"overideal-factor", overideal_factor}, {"similarity", similarity_cmd},
      {"classify-ring", classify_ring},  {"int-factor", int_factor},
      {"int-rigid", int_rigid},          {"suite", suite_cmd},
  };
  Report report;
  report.command = echo(input);
  const auto start = std::chrono::steady_clock::now();
  auto set_error = [&](ErrorCode code, const std::string& message) {
    report.status = Status::Error;
    report.payload = Json::object();
    report.payload["error"] = {{"code", to_string(code)}, {"message", message}};
    report.witnesses = Json::array();
    report.exit_code = exit_code_for(code);
  };
  try {
    const auto it = dispatch.find(input.name);
    if (it == dispatch.end()) throw Error(ErrorCode::ParseError, "unknown command \"" + input.name + "\"");
    Context ctx{input, report};
    it->second(ctx);
    report.exit_code = report.status == Status::Ok ? 0 : 1;
  } catch (const Error& e) {
    set_error(e.code(), e.what());
  } catch (const std::bad_alloc&) {
    set_error(ErrorCode::CapExceeded, "out of memory");
  } catch (const std::exception& e) {
    set_error(ErrorCode::ParseError, e.what());
  }
  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace serfact::cli
