// Command-line surface of the specgeo shared library.  Every invocation
// prints one self-describing JSON record on stdout and a short summary on
// stderr.  Exit codes: 0 success, 2 invalid arguments, 3 domain errors.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "specgeo/specgeo.h"
#include "json_writer.hpp"

namespace {

using sgcli::JsonWriter;

constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

struct Rational64 {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

struct NumberArg {
  double value = 0.0;
  std::optional<Rational64> exact;
  std::string text;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public std::runtime_error {
 public:
  DomainError(sg_status status, const std::string& message)
      : std::runtime_error(message), status_(status) {}
  sg_status status() const { return status_; }

 private:
  sg_status status_;
};

NumberArg parse_number(const std::string& text) {
  NumberArg out;
  out.text = text;
  Rational64 r;
  if (sg_parse_rational(text.c_str(), &r.num, &r.den) == SG_OK) {
    out.exact = r;
    out.value = static_cast<double>(r.num) / static_cast<double>(r.den);
    return out;
  }
  char* end = nullptr;
  out.value = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0') {
    throw UsageError("not a number: '" + text + "'");
  }
  return out;
}

std::vector<NumberArg> parse_numbers(const std::vector<std::string>& texts) {
  std::vector<NumberArg> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(parse_number(t));
  return out;
}

void check(sg_status status) {
  if (status != SG_OK) throw DomainError(status, sg_last_error_message());
}

std::string exact_pi2(const Rational64& r) {
  if (r.num == 0) return "0";
  std::string s = std::to_string(r.num);
  if (r.den != 1) s += "/" + std::to_string(r.den);
  return s + "*pi^2";
}

struct Context {
  sg_context* ctx = nullptr;
  bool exact = false;

  ~Context() { sg_context_destroy(ctx); }
};

void heat_object(JsonWriter& w, const sg_heat_invariants& h) {
  w.begin_object();
  w.key("a0").value(h.a0);
  w.key("a1").value(h.a1);
  w.key("a2").value(h.a2);
  w.key("a3").value(h.a3);
  w.end_object();
}

void curvature_object(JsonWriter& w, const sg_curvature_profile& c) {
  w.begin_object();
  w.key("principal").triple(c.principal);
  w.key("ricci").triple(c.ricci);
  w.key("sc").value(c.sc);
  w.key("r2").value(c.r2);
  w.key("ric2").value(c.ric2);
  w.key("rrr").value(c.rrr);
  w.key("ric_rr").value(c.ric_rr);
  w.key("ricric_r").value(c.ricric_r);
  w.key("ricricric").value(c.ricricric);
  w.key("grad_r2").value(c.grad_r2);
  w.key("grad_ric2").value(c.grad_ric2);
  w.end_object();
}

void emit(const JsonWriter& w, const std::string& summary) {
  std::cout << w.str() << "\n";
  if (!summary.empty()) std::cerr << summary << "\n";
}

// ---- forward ------------------------------------------------------------

struct ForwardArgs {
  std::vector<std::string> eigenvalues;
  std::vector<std::string> mu;
  std::uint64_t order = 1;
};

int run_forward(Context& g, const ForwardArgs& args) {
  if (args.eigenvalues.empty() == args.mu.empty()) {
    throw UsageError("forward requires exactly one of --eigenvalues or --mu");
  }
  const bool from_mu = !args.mu.empty();
  const auto inputs = parse_numbers(from_mu ? args.mu : args.eigenvalues);
  double given[3] = {inputs[0].value, inputs[1].value, inputs[2].value};

  double mu[3], eig[3];
  if (from_mu) {
    mu[0] = given[0]; mu[1] = given[1]; mu[2] = given[2];
    std::sort(mu, mu + 3);
    check(sg_christoffel_to_eigenvalues(g.ctx, mu, eig));
  } else {
    eig[0] = given[0]; eig[1] = given[1]; eig[2] = given[2];
    check(sg_eigenvalues_to_christoffel(g.ctx, eig, mu));
    check(sg_christoffel_to_eigenvalues(g.ctx, mu, eig));
  }

  int metric_class = 0;
  check(sg_classify_metric(g.ctx, eig, &metric_class));
  double volume = 0.0;
  check(sg_covering_volume(g.ctx, mu, &volume));
  sg_heat_invariants h{};
  check(sg_heat_invariants_compute(g.ctx, mu, args.order, &h));
  sg_curvature_profile profile{};
  check(sg_curvature_profile_compute(g.ctx, mu, &profile));
  sg_isometry_descriptor iso{};
  check(sg_isometry_group_descriptor(metric_class, &iso));

  std::vector<std::string> warnings;
  std::optional<std::array<Rational64, 3>> exact_mu;
  if (g.exact) {
    bool rational_inputs = true;
    std::int64_t num[3], den[3];
    for (int i = 0; i < 3; ++i) {
      if (!inputs[i].exact) { rational_inputs = false; break; }
      num[i] = inputs[i].exact->num;
      den[i] = inputs[i].exact->den;
    }
    if (rational_inputs) {
      std::int64_t mn[3], md[3];
      sg_status s = SG_OK;
      if (from_mu) {
        for (int i = 0; i < 3; ++i) { mn[i] = num[i]; md[i] = den[i]; }
      } else {
        s = sg_exact_christoffel_from_eigenvalues(num, den, mn, md);
      }
      if (s == SG_OK) {
        exact_mu = std::array<Rational64, 3>{Rational64{mn[0], md[0]}, Rational64{mn[1], md[1]},
                                             Rational64{mn[2], md[2]}};
      } else {
        warnings.push_back("exact mode unavailable: " + std::string(sg_last_error_message()));
      }
    } else {
      warnings.push_back("exact mode unavailable: inputs are not exact rationals");
    }
  }

  JsonWriter w;
  w.begin_object();
  w.key("command").value("forward");
  w.key("inputs").begin_object();
  w.key(from_mu ? "mu" : "eigenvalues").triple(given);
  w.key("order").value(args.order);
  w.end_object();
  w.key("outputs").begin_object();
  w.key("mu").triple(mu);
  w.key("eigenvalues").triple(eig);
  w.key("metric_class").value(sg_metric_class_name(metric_class));
  w.key("isometry_group").begin_object();
  w.key("label").value(iso.label);
  w.key("identity_component").value(iso.component);
  w.end_object();
  w.key("covering_volume").value(volume);
  w.key("quotient_volume").value(h.a0);
  w.key("heat_invariants");
  heat_object(w, h);
  w.key("curvature");
  curvature_object(w, profile);
  if (exact_mu) {
    std::int64_t mn[3] = {(*exact_mu)[0].num, (*exact_mu)[1].num, (*exact_mu)[2].num};
    std::int64_t md[3] = {(*exact_mu)[0].den, (*exact_mu)[1].den, (*exact_mu)[2].den};
    std::int64_t vn = 0, vd = 1, hn[4], hd[4];
    sg_status s = sg_exact_covering_volume(mn, md, &vn, &vd);
    if (s == SG_OK) s = sg_exact_heat_invariants(mn, md, args.order, hn, hd);
    if (s == SG_OK) {
      w.key("exact").begin_object();
      w.key("covering_volume").value(exact_pi2({vn, vd}));
      w.key("a0").value(exact_pi2({hn[0], hd[0]}));
      w.key("a1").value(exact_pi2({hn[1], hd[1]}));
      w.key("a2").value(exact_pi2({hn[2], hd[2]}));
      w.key("a3").value(exact_pi2({hn[3], hd[3]}));
      w.end_object();
    } else {
      warnings.push_back("exact mode unavailable: " + std::string(sg_last_error_message()));
    }
  }
  w.end_object();
  w.key("branch").null();
  w.key("warnings").begin_array();
  for (const auto& warning : warnings) w.value(warning);
  w.end_array();
  w.end_object();

  emit(w, std::string("forward: class=") + sg_metric_class_name(metric_class) +
              " a0=" + std::to_string(h.a0));
  return 0;
}

// ---- invert ---------------------------------------------------------------

struct InvertArgs {
  std::string a0, a1, a2, a3;
  std::uint64_t order = 1;
};

int run_invert(Context& g, const InvertArgs& args) {
  const sg_heat_invariants h{parse_number(args.a0).value, parse_number(args.a1).value,
                             parse_number(args.a2).value, parse_number(args.a3).value};
  sg_recovery_report report{};
  check(sg_invert_spectrum(g.ctx, &h, args.order, &report));
  int metric_class = 0;
  check(sg_classify_metric(g.ctx, report.eigenvalues, &metric_class));

  JsonWriter w;
  w.begin_object();
  w.key("command").value("invert");
  w.key("inputs").begin_object();
  w.key("heat_invariants");
  heat_object(w, h);
  w.key("order").value(args.order);
  w.end_object();
  w.key("outputs").begin_object();
  w.key("mu").triple(report.mu);
  w.key("p").triple(report.p);
  w.key("eigenvalues").triple(report.eigenvalues);
  w.key("metric_class").value(sg_metric_class_name(metric_class));
  w.key("a3_required").value(report.a3_required != 0);
  w.key("degenerate_ricci").value(report.degenerate_ricci != 0);
  w.end_object();
  w.key("branch").value(sg_branch_name(report.branch));
  w.key("warnings").begin_array();
  if (report.shared_root_warning) w.value("both q1 roots satisfied the q2 residual test");
  w.end_array();
  w.end_object();

  emit(w, std::string("invert: branch=") + sg_branch_name(report.branch));
  return 0;
}

// ---- classify ---------------------------------------------------------------

struct ClassifyArgs {
  std::string group;
  std::string metric_class;
  std::vector<std::uint64_t> lens;
};

sg_group parse_group(const std::string& text) {
  const auto colon = text.find(':');
  std::string type = text.substr(0, colon);
  for (auto& c : type) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  std::vector<std::uint64_t> params;
  if (colon != std::string::npos) {
    std::string rest = text.substr(colon + 1);
    size_t pos = 0;
    while (pos <= rest.size()) {
      const auto comma = rest.find(',', pos);
      const std::string tok = rest.substr(pos, comma == std::string::npos ? std::string::npos
                                                                          : comma - pos);
      if (tok.empty()) throw UsageError("empty group parameter in '" + text + "'");
      try {
        params.push_back(std::stoull(tok));
      } catch (const std::exception&) {
        throw UsageError("bad group parameter '" + tok + "'");
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }

  const auto want = [&](size_t n, const char* shape) {
    if (params.size() != n) {
      throw UsageError("group " + type + " takes parameters " + shape);
    }
  };
  sg_group group{};
  if (type == "I") {
    want(2, "q,p");
    group.type = SG_GROUP_I;
    group.q = params[0];
    group.p = params[1];
  } else if (type == "II") {
    want(3, "n,k,q");
    group.type = SG_GROUP_II;
    group.n = params[0];
    group.k = params[1];
    group.q = params[2];
  } else if (type == "III") {
    want(2, "n,q");
    group.type = SG_GROUP_III;
    group.n = params[0];
    group.q = params[1];
  } else if (type == "IV") {
    want(2, "k,q");
    group.type = SG_GROUP_IV;
    group.k = params[0];
    group.q = params[1];
  } else if (type == "V") {
    want(1, "q");
    group.type = SG_GROUP_V;
    group.q = params[0];
  } else if (type == "VI") {
    want(1, "q");
    group.type = SG_GROUP_VI;
    group.q = params[0];
  } else {
    throw UsageError("unknown group type '" + type + "' (expected I..VI)");
  }
  return group;
}

int parse_metric_class(std::string text) {
  for (auto& c : text) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (text == "constant" || text == "constant-curvature" || text == "constantcurvature") {
    return SG_METRIC_CONSTANT_CURVATURE;
  }
  if (text == "berger" || text == "berger-non-constant" || text == "bergernonconstant") {
    return SG_METRIC_BERGER_NON_CONSTANT;
  }
  if (text == "generic") return SG_METRIC_GENERIC;
  throw UsageError("unknown metric class '" + text + "' (constant|berger|generic)");
}

int run_classify(Context&, const ClassifyArgs& args) {
  if (!args.lens.empty()) {
    if (args.lens.size() != 3) throw UsageError("--lens takes q p1 p2");
    int result = 0;
    check(sg_lens_diffeomorphic(args.lens[0], args.lens[1], args.lens[2], &result));
    JsonWriter w;
    w.begin_object();
    w.key("command").value("classify");
    w.key("inputs").begin_object();
    w.key("lens").begin_array().value(args.lens[0]).value(args.lens[1]).value(args.lens[2])
        .end_array();
    w.end_object();
    w.key("outputs").begin_object();
    w.key("diffeomorphic").value(result != 0);
    w.end_object();
    w.key("branch").null();
    w.key("warnings").begin_array().end_array();
    w.end_object();
    emit(w, std::string("lens: ") + (result ? "diffeomorphic" : "not diffeomorphic"));
    return 0;
  }

  if (args.group.empty() || args.metric_class.empty()) {
    throw UsageError("classify requires --group and --metric-class (or --lens q p1 p2)");
  }
  const sg_group group = parse_group(args.group);
  const int metric_class = parse_metric_class(args.metric_class);
  std::uint64_t order = 0;
  check(sg_group_order(&group, &order));
  sg_quotient_structure q{};
  check(sg_quotient_structure_compute(&group, metric_class, &q));
  sg_isometry_descriptor iso{};
  check(sg_isometry_group_descriptor(metric_class, &iso));

  JsonWriter w;
  w.begin_object();
  w.key("command").value("classify");
  w.key("inputs").begin_object();
  w.key("group").value(args.group);
  w.key("metric_class").value(sg_metric_class_name(metric_class));
  w.end_object();
  w.key("outputs").begin_object();
  w.key("group_order").value(order);
  w.key("class_count").value(q.class_count);
  w.key("homogeneous").begin_array();
  for (int i = 0; i < q.class_count; ++i) w.value(q.homogeneous[i] != 0);
  w.end_array();
  w.key("centralizer").value(q.centralizer);
  w.key("notes").value(q.notes);
  w.key("isometry_group").begin_object();
  w.key("label").value(iso.label);
  w.key("identity_component").value(iso.component);
  w.end_object();
  w.end_object();
  w.key("branch").null();
  w.key("warnings").begin_array().end_array();
  w.end_object();

  emit(w, "classify: classes=" + std::to_string(q.class_count));
  return 0;
}

// ---- isocurved ---------------------------------------------------------------

struct IsocurvedArgs {
  std::vector<std::string> curvatures;
  std::string sc;
  std::string vol;
  std::uint64_t order = 1;
  bool degenerate = false;
};

int run_isocurved(Context& g, const IsocurvedArgs& args) {
  double mu[3];
  JsonWriter w;
  w.begin_object();
  w.key("command").value("isocurved");
  if (args.degenerate) {
    if (args.sc.empty() || args.vol.empty()) {
      throw UsageError("isocurved --degenerate requires --sc and --vol");
    }
    const double sc = parse_number(args.sc).value;
    const double vol = parse_number(args.vol).value;
    w.key("inputs").begin_object();
    w.key("sc").value(sc);
    w.key("vol").value(vol);
    w.key("order").value(args.order);
    w.end_object();
    check(sg_unique_degenerate_metric(g.ctx, sc, vol, args.order, mu));
  } else {
    if (args.curvatures.size() != 3 || args.vol.empty()) {
      throw UsageError("isocurved requires --K k1 k2 k3 and --vol");
    }
    const auto k = parse_numbers(args.curvatures);
    const double kv[3] = {k[0].value, k[1].value, k[2].value};
    const double vol = parse_number(args.vol).value;
    w.key("inputs").begin_object();
    w.key("K").triple(kv);
    w.key("vol").value(vol);
    w.key("order").value(args.order);
    w.end_object();
    check(sg_recover_from_curvature_and_volume(g.ctx, kv, vol, args.order, mu));
  }

  double eig[3];
  check(sg_christoffel_to_eigenvalues(g.ctx, mu, eig));
  sg_curvature_profile profile{};
  check(sg_curvature_profile_compute(g.ctx, mu, &profile));
  double volume = 0.0;
  check(sg_covering_volume(g.ctx, mu, &volume));

  w.key("outputs").begin_object();
  w.key("mu").triple(mu);
  w.key("eigenvalues").triple(eig);
  w.key("verification").begin_object();
  w.key("principal").triple(profile.principal);
  w.key("sc").value(profile.sc);
  w.key("covering_volume").value(volume);
  w.key("quotient_volume").value(volume / static_cast<double>(args.order));
  w.end_object();
  w.end_object();
  w.key("branch").null();
  w.key("warnings").begin_array().end_array();
  w.end_object();

  emit(w, "isocurved: recovered mu");
  return 0;
}

// ---- molecule ---------------------------------------------------------------

struct MoleculeArgs {
  std::vector<std::string> moments;
  std::vector<std::string> invert;
};

const char* body_class_name(int metric_class) {
  switch (metric_class) {
    case SG_METRIC_CONSTANT_CURVATURE: return "spherical";
    case SG_METRIC_BERGER_NON_CONSTANT: return "symmetric";
    default: return "asymmetric";
  }
}

int run_molecule(Context& g, const MoleculeArgs& args) {
  if (args.moments.empty() == args.invert.empty()) {
    throw UsageError("molecule requires exactly one of --moments or --invert");
  }

  JsonWriter w;
  w.begin_object();
  w.key("command").value("molecule");

  if (!args.invert.empty()) {
    if (args.invert.size() != 4) throw UsageError("--invert takes a0 a1 a2 a3");
    const auto h_in = parse_numbers(args.invert);
    const sg_heat_invariants h{h_in[0].value, h_in[1].value, h_in[2].value, h_in[3].value};
    double moments[3];
    check(sg_recover_moments(g.ctx, &h, moments));
    double eig[3];
    check(sg_moments_to_eigenvalues(moments, eig));
    int metric_class = 0;
    check(sg_classify_metric(g.ctx, eig, &metric_class));

    w.key("inputs").begin_object();
    w.key("heat_invariants");
    heat_object(w, h);
    w.end_object();
    w.key("outputs").begin_object();
    w.key("moments").triple(moments);
    w.key("body_class").value(body_class_name(metric_class));
    w.end_object();
    w.key("branch").null();
    w.key("warnings").begin_array().end_array();
    w.end_object();
    emit(w, "molecule: recovered moments");
    return 0;
  }

  if (args.moments.size() != 3) throw UsageError("--moments takes I1 I2 I3");
  const auto m_in = parse_numbers(args.moments);
  const double moments[3] = {m_in[0].value, m_in[1].value, m_in[2].value};
  double eig[3];
  check(sg_moments_to_eigenvalues(moments, eig));
  int metric_class = 0;
  check(sg_classify_metric(g.ctx, eig, &metric_class));
  sg_heat_invariants h{};
  check(sg_rotational_invariants(g.ctx, moments, &h));

  std::vector<std::string> warnings;
  std::optional<std::string> exact_fields[4];
  if (g.exact) {
    bool rational = true;
    std::int64_t en[3], ed[3];
    for (int i = 0; i < 3; ++i) {
      if (!m_in[i].exact) { rational = false; break; }
      // eigenvalues are 2/I exactly
      en[i] = 2 * m_in[i].exact->den;
      ed[i] = m_in[i].exact->num;
    }
    if (rational) {
      std::int64_t mn[3], md[3], hn[4], hd[4];
      sg_status s = sg_exact_christoffel_from_eigenvalues(en, ed, mn, md);
      if (s == SG_OK) s = sg_exact_heat_invariants(mn, md, 2, hn, hd);
      if (s == SG_OK) {
        const char* keys[4] = {"a0", "a1", "a2", "a3"};
        (void)keys;
        for (int i = 0; i < 4; ++i) exact_fields[i] = exact_pi2({hn[i], hd[i]});
      } else {
        warnings.push_back("exact mode unavailable: " + std::string(sg_last_error_message()));
      }
    } else {
      warnings.push_back("exact mode unavailable: inputs are not exact rationals");
    }
  }

  w.key("inputs").begin_object();
  w.key("moments").triple(moments);
  w.end_object();
  w.key("outputs").begin_object();
  w.key("eigenvalues").triple(eig);
  w.key("body_class").value(body_class_name(metric_class));
  w.key("metric_class").value(sg_metric_class_name(metric_class));
  w.key("heat_invariants");
  heat_object(w, h);
  if (exact_fields[0]) {
    w.key("exact").begin_object();
    w.key("a0").value(*exact_fields[0]);
    w.key("a1").value(*exact_fields[1]);
    w.key("a2").value(*exact_fields[2]);
    w.key("a3").value(*exact_fields[3]);
    w.end_object();
  }
  w.end_object();
  w.key("branch").null();
  w.key("warnings").begin_array();
  for (const auto& warning : warnings) w.value(warning);
  w.end_array();
  w.end_object();
  emit(w, std::string("molecule: ") + body_class_name(metric_class));
  return 0;
}

// ---- compare ---------------------------------------------------------------

struct CompareArgs {
  std::vector<std::string> first;
  std::vector<std::string> second;
  std::uint64_t order1 = 1;
  std::uint64_t order2 = 1;
};

int run_compare(Context& g, const CompareArgs& args) {
  if (args.first.size() != 4 || args.second.size() != 4) {
    throw UsageError("compare requires --first a0 a1 a2 a3 and --second b0 b1 b2 b3");
  }
  const auto f = parse_numbers(args.first);
  const auto s = parse_numbers(args.second);
  const sg_heat_invariants h1{f[0].value, f[1].value, f[2].value, f[3].value};
  const sg_heat_invariants h2{s[0].value, s[1].value, s[2].value, s[3].value};
  int verdict = 0;
  char note[256] = {0};
  check(sg_compare_spectra(g.ctx, &h1, args.order1, &h2, args.order2, &verdict, note,
                           sizeof note));

  JsonWriter w;
  w.begin_object();
  w.key("command").value("compare");
  w.key("inputs").begin_object();
  w.key("first");
  heat_object(w, h1);
  w.key("order1").value(args.order1);
  w.key("second");
  heat_object(w, h2);
  w.key("order2").value(args.order2);
  w.end_object();
  w.key("outputs").begin_object();
  w.key("verdict").value(sg_verdict_name(verdict));
  w.key("note").value(note);
  w.end_object();
  w.key("branch").null();
  w.key("warnings").begin_array().end_array();
  w.end_object();

  emit(w, std::string("compare: ") + sg_verdict_name(verdict));
  return 0;
}

void emit_error(const std::string& command, const char* code, const std::string& message) {
  JsonWriter w;
  w.begin_object();
  w.key("command").value(command);
  w.key("error").begin_object();
  w.key("code").value(code);
  w.key("message").value(message);
  w.end_object();
  w.end_object();
  std::cout << w.str() << "\n";
  std::cerr << "error: " << message << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"geometric and spectral data of locally homogeneous elliptic three-manifolds"};
  app.require_subcommand(1);
  app.fallthrough();
  app.failure_message(CLI::FailureMessage::simple);

  Context g;
  g.ctx = sg_context_create();

  bool exact = false;
  double tol_eq = -1.0, tol_root = -1.0, tol_disc = -1.0;
  app.add_flag("--exact", exact, "print volumes and heat invariants as rational multiples of pi^2");
  app.add_option("--tol-eq", tol_eq, "multiset equality tolerance");
  app.add_option("--tol-root", tol_root, "polynomial residual tolerance");
  app.add_option("--tol-disc", tol_disc, "discriminant tolerance");

  ForwardArgs forward_args;
  auto* forward = app.add_subcommand("forward", "metric -> heat invariants and curvature");
  forward->add_option("--eigenvalues", forward_args.eigenvalues, "metric eigenvalues")
      ->expected(3);
  forward->add_option("--mu", forward_args.mu, "Christoffel triple")->expected(3);
  forward->add_option("--order", forward_args.order, "fundamental group order");

  InvertArgs invert_args;
  auto* invert = app.add_subcommand("invert", "heat invariants -> metric");
  invert->add_option("--a0", invert_args.a0, "a0")->required();
  invert->add_option("--a1", invert_args.a1, "a1")->required();
  invert->add_option("--a2", invert_args.a2, "a2")->required();
  invert->add_option("--a3", invert_args.a3, "a3")->required();
  invert->add_option("--order", invert_args.order, "fundamental group order");

  ClassifyArgs classify_args;
  auto* classify = app.add_subcommand("classify", "group taxonomy and isometry classes");
  classify->add_option("--group", classify_args.group, "group, e.g. I:5,2 or II:3,3,1");
  classify->add_option("--metric-class", classify_args.metric_class,
                       "constant | berger | generic");
  classify->add_option("--lens", classify_args.lens, "lens diffeomorphism test: q p1 p2")
      ->expected(3);

  IsocurvedArgs isocurved_args;
  auto* isocurved = app.add_subcommand("isocurved", "metric from curvature and volume");
  isocurved->add_option("--K", isocurved_args.curvatures, "principal curvatures")->expected(3);
  isocurved->add_option("--vol", isocurved_args.vol, "quotient volume");
  isocurved->add_option("--sc", isocurved_args.sc, "scalar curvature (degenerate mode)");
  isocurved->add_option("--order", isocurved_args.order, "fundamental group order");
  isocurved->add_flag("--degenerate", isocurved_args.degenerate,
                      "unique degenerate-Ricci metric from (sc, vol)");

  MoleculeArgs molecule_args;
  auto* molecule = app.add_subcommand("molecule", "rigid-body rotational data");
  molecule->add_option("--moments", molecule_args.moments, "principal moments of inertia")
      ->expected(3);
  molecule->add_option("--invert", molecule_args.invert, "recover moments from a0 a1 a2 a3")
      ->expected(4);

  CompareArgs compare_args;
  auto* compare = app.add_subcommand("compare", "compare two (heat, order) records");
  compare->add_option("--first", compare_args.first, "first a0 a1 a2 a3")->expected(4)->required();
  compare->add_option("--order1", compare_args.order1, "first group order");
  compare->add_option("--second", compare_args.second, "second a0 a1 a2 a3")
      ->expected(4)
      ->required();
  compare->add_option("--order2", compare_args.order2, "second group order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  g.exact = exact;
  if (tol_eq > 0.0) sg_context_set_tolerance(g.ctx, "eq", tol_eq);
  if (tol_root > 0.0) sg_context_set_tolerance(g.ctx, "root", tol_root);
  if (tol_disc > 0.0) sg_context_set_tolerance(g.ctx, "disc", tol_disc);

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (forward->parsed()) return run_forward(g, forward_args);
    if (invert->parsed()) return run_invert(g, invert_args);
    if (classify->parsed()) return run_classify(g, classify_args);
    if (isocurved->parsed()) return run_isocurved(g, isocurved_args);
    if (molecule->parsed()) return run_molecule(g, molecule_args);
    if (compare->parsed()) return run_compare(g, compare_args);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    emit_error(command, sg_status_name(e.status()), e.what());
    return kExitDomain;
  } catch (const std::exception& e) {
    emit_error(command, "Internal", e.what());
    return kExitDomain;
  }
  return kExitUsage;
}
