#include "quadcert/cli.hpp"

#include <json.hpp>

#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "quadcert/classifier.hpp"
#include "quadcert/minors.hpp"
#include "quadcert/oracle.hpp"
#include "quadcert/parse.hpp"

namespace quadcert {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kUsage = R"(usage: quadcert <command> [flags]

commands:
  classify   definiteness class with verified evidence
  certify    sum-of-squares certificate, or a negative witness
  witness    negative and positive witness vectors, if any
  minors     leading principal minors; --all adds every principal minor
  hessian    discriminant test verdict for a critical-point Hessian
  oracle     floating-point eigenvalue oracle next to the exact class

input (choose one; stdin is read if none is given):
  --matrix TEXT   rows split by ';' or newlines, entries by spaces or commas
  --form TEXT     quadratic form such as "2x^2 + 2xy + 2y^2"
  --file PATH     file containing a matrix or a form
  --batch PATH    classify only: one matrix or form per line

flags:
  --all           include the full principal-minor table (minors)
  --json          machine-readable output
  --seed N        sampling seed (oracle; default 1)
  --trials N      sampling trial count (oracle; default 200)

exit codes: 0 = PositiveDefinite/PositiveSemidefinite/Zero,
1 = NegativeDefinite/NegativeSemidefinite/Indefinite, 2 = input error,
3 = internal verification failure.
)";

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::string command;
  std::optional<std::string> matrix_text;
  std::optional<std::string> form_text;
  std::optional<std::string> file_path;
  std::optional<std::string> batch_path;
  bool all = false;
  bool json_output = false;
  std::uint64_t seed = 1;
  std::size_t trials = 200;
};

Options parse_args(const std::vector<std::string>& args) {
  Options opt;
  opt.command = args[0];
  const bool known =
      opt.command == "classify" || opt.command == "certify" ||
      opt.command == "witness" || opt.command == "minors" ||
      opt.command == "hessian" || opt.command == "oracle";
  if (!known) throw UsageError("unknown command '" + opt.command + "'");

  for (std::size_t i = 1; i < args.size(); ++i) {
    const std::string& flag = args[i];
    const auto value = [&]() -> const std::string& {
      if (i + 1 >= args.size())
        throw UsageError("flag " + flag + " needs a value");
      return args[++i];
    };
    if (flag == "--matrix")
      opt.matrix_text = value();
    else if (flag == "--form")
      opt.form_text = value();
    else if (flag == "--file")
      opt.file_path = value();
    else if (flag == "--batch")
      opt.batch_path = value();
    else if (flag == "--all")
      opt.all = true;
    else if (flag == "--json")
      opt.json_output = true;
    else if (flag == "--seed" || flag == "--trials") {
      const std::string& v = value();
      std::uint64_t parsed = 0;
      try {
        std::size_t used = 0;
        parsed = std::stoull(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
      } catch (const std::exception&) {
        throw UsageError("flag " + flag + " needs a nonnegative integer, got '" + v + "'");
      }
      if (flag == "--seed") {
        opt.seed = parsed;
      } else {
        if (parsed == 0) throw UsageError("--trials must be at least 1");
        opt.trials = static_cast<std::size_t>(parsed);
      }
    } else {
      throw UsageError("unknown flag '" + flag + "'");
    }
  }

  const int sources = (opt.matrix_text ? 1 : 0) + (opt.form_text ? 1 : 0) +
                      (opt.file_path ? 1 : 0) + (opt.batch_path ? 1 : 0);
  if (sources > 1) throw UsageError("choose a single input source");
  if (opt.batch_path && opt.command != "classify")
    throw UsageError("--batch is only supported by classify");
  return opt;
}

// A line of input is a form expression iff it mentions a variable.
bool looks_like_form(const std::string& text) {
  for (char ch : text)
    if (std::isalpha(static_cast<unsigned char>(ch))) return true;
  return false;
}

SymMatrix parse_any(const std::string& text) {
  return looks_like_form(text) ? parse_form(text) : parse_matrix(text);
}

struct Input {
  SymMatrix matrix;
  std::string echo;
};

Input read_input(const Options& opt) {
  if (opt.matrix_text) return {parse_matrix(*opt.matrix_text), *opt.matrix_text};
  if (opt.form_text) return {parse_form(*opt.form_text), *opt.form_text};
  std::string text;
  if (opt.file_path) {
    std::ifstream in(*opt.file_path);
    if (!in) throw UsageError("cannot open file '" + *opt.file_path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  } else {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  }
  return {parse_any(text), text};
}

int exit_for(DefinitenessClass c) {
  switch (c) {
    case DefinitenessClass::PositiveDefinite:
    case DefinitenessClass::PositiveSemidefinite:
    case DefinitenessClass::Zero:
      return 0;
    default:
      return 1;
  }
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

ordered_json matrix_json(const SymMatrix& A) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < A.n(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < A.n(); ++j) row.push_back(A.at(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json witness_json(const Witness& w) {
  ordered_json j;
  ordered_json x = ordered_json::array();
  for (std::size_t i = 0; i < w.x.size(); ++i) x.push_back(w.x[i].to_string());
  j["x"] = std::move(x);
  j["value"] = w.value.to_string();
  j["sign"] = w.sign_claim == SignClaim::Negative ? "negative" : "positive";
  return j;
}

ordered_json certificate_json(const SosCertificate& c, bool for_negation) {
  ordered_json j;
  j["for"] = for_negation ? "-A" : "A";
  j["claim"] = c.claim() == SosClaim::Zero ? "zero" : "nonnegative";
  ordered_json terms = ordered_json::array();
  for (const auto& t : c.terms()) {
    ordered_json term;
    term["weight"] = t.weight.to_string();
    ordered_json form = ordered_json::array();
    for (std::size_t i = 0; i < t.form.size(); ++i)
      form.push_back(t.form[i].to_string());
    term["form"] = std::move(form);
    terms.push_back(std::move(term));
  }
  j["terms"] = std::move(terms);
  j["rendered"] = render_certificate(c);
  j["verified"] = true;
  return j;
}

std::string witness_text(const Witness& w) {
  return "x = " + render_vector(w.x) + ", Q(x) = " + w.value.to_string();
}

// The spec of the output contract: a certificate is re-verified right
// before it is shown; a failure here is exit code 3.
void ensure_verified(const SymMatrix& A, const SosCertificate& c,
                     bool for_negation) {
  const SymMatrix target = for_negation ? A.negated() : A;
  if (!verify_certificate(target, c))
    throw VerificationFailure("certificate failed verification before emission");
}

struct Report {
  std::ostringstream text;
  ordered_json json;

  void echo_input(const Input& in, const Options& opt) {
    json["command"] = opt.command;
    json["input"] = in.echo;
    json["n"] = in.matrix.n();
    json["matrix"] = matrix_json(in.matrix);
    text << "input (n=" << in.matrix.n() << "):\n";
    for (std::size_t i = 0; i < in.matrix.n(); ++i) {
      text << " ";
      for (std::size_t j = 0; j < in.matrix.n(); ++j)
        text << " " << in.matrix.at(i, j).to_string();
      text << "\n";
    }
  }

  void classification(DefinitenessClass cls) {
    json["class"] = std::string(to_string(cls));
    text << "class: " << to_string(cls) << "\n";
  }
};

void cmd_classify(const Input& in, Report& rep) {
  const ClassificationEvidence ev = classify_with_evidence(in.matrix);
  rep.classification(ev.cls);
  if (ev.certificate) {
    ensure_verified(in.matrix, *ev.certificate, ev.certificate_is_for_negation);
    const char* lhs = ev.certificate_is_for_negation ? "-Q" : "Q";
    rep.text << "certificate: " << lhs << " = "
             << render_certificate(*ev.certificate) << "\n";
    rep.json["evidence"] =
        certificate_json(*ev.certificate, ev.certificate_is_for_negation);
  } else {
    rep.text << "positive witness: " << witness_text(*ev.positive_witness) << "\n";
    rep.text << "negative witness: " << witness_text(*ev.negative_witness) << "\n";
    ordered_json evidence;
    evidence["positive_witness"] = witness_json(*ev.positive_witness);
    evidence["negative_witness"] = witness_json(*ev.negative_witness);
    rep.json["evidence"] = std::move(evidence);
  }
}

void cmd_certify(const Input& in, Report& rep) {
  rep.classification(classify(in.matrix));
  PsdOutcome outcome = psd_certificate(in.matrix);
  if (std::holds_alternative<SosCertificate>(outcome)) {
    const auto& cert = std::get<SosCertificate>(outcome);
    ensure_verified(in.matrix, cert, false);
    rep.text << "certificate: Q = " << render_certificate(cert) << "\n";
    rep.text << "claim: " << (cert.claim() == SosClaim::Zero ? "zero" : "nonnegative")
             << "\n";
    rep.text << "verified: yes\n";
    rep.json["certificate"] = certificate_json(cert, false);
  } else {
    const auto& w = std::get<Witness>(outcome);
    rep.text << "not nonnegative definite\n";
    rep.text << "negative witness: " << witness_text(w) << "\n";
    rep.json["witness"] = witness_json(w);
  }
}

void cmd_witness(const Input& in, Report& rep) {
  rep.classification(classify(in.matrix));
  PsdOutcome down = psd_certificate(in.matrix);
  PsdOutcome up = psd_certificate(in.matrix.negated());
  if (std::holds_alternative<Witness>(down)) {
    const auto& w = std::get<Witness>(down);
    rep.text << "negative witness: " << witness_text(w) << "\n";
    rep.json["negative_witness"] = witness_json(w);
  } else {
    rep.text << "negative witness: none\n";
    rep.json["negative_witness"] = nullptr;
  }
  if (std::holds_alternative<Witness>(up)) {
    Witness w = std::get<Witness>(std::move(up));
    w.value = -w.value;
    w.sign_claim = SignClaim::Positive;
    rep.text << "positive witness: " << witness_text(w) << "\n";
    rep.json["positive_witness"] = witness_json(w);
  } else {
    rep.text << "positive witness: none\n";
    rep.json["positive_witness"] = nullptr;
  }
}

void cmd_minors(const Input& in, const Options& opt, Report& rep) {
  const LeadingMinorSequence lm = leading_minors(in.matrix);
  rep.text << "Δ:";
  ordered_json leading = ordered_json::array();
  for (std::size_t k = 0; k < lm.values.size(); ++k) {
    rep.text << (k ? ", " : " ") << lm.values[k].to_string();
    leading.push_back(lm.values[k].to_string());
  }
  rep.text << "\n";
  ordered_json minors;
  minors["leading"] = std::move(leading);
  if (opt.all) {
    ordered_json table = ordered_json::array();
    for (const auto& [S, value] : all_principal_minors(in.matrix).entries()) {
      rep.text << S.to_string() << ": " << value.to_string() << "\n";
      ordered_json entry;
      entry["indices"] = S.values();
      entry["value"] = value.to_string();
      table.push_back(std::move(entry));
    }
    minors["all"] = std::move(table);
  }
  rep.json["minors"] = std::move(minors);
  rep.classification(classify(in.matrix));
}

void cmd_hessian(const Input& in, Report& rep) {
  const CriticalPointVerdict verdict = classify_critical_point(in.matrix);
  rep.text << "verdict: " << to_string(verdict) << "\n";
  rep.json["verdict"] = std::string(to_string(verdict));
  rep.classification(classify(in.matrix));
}

void cmd_oracle(const Input& in, const Options& opt, Report& rep) {
  const SpectrumReport sr = spectrum_classify(in.matrix);
  const DefinitenessClass exact = classify(in.matrix);

  ordered_json oracle;
  if (sr.converged) {
    rep.text << "eigenvalues (approx):";
    ordered_json eig = ordered_json::array();
    for (std::size_t i = 0; i < sr.eigenvalues.size(); ++i) {
      rep.text << (i ? ", " : " ") << format_double(sr.eigenvalues[i]);
      eig.push_back(sr.eigenvalues[i]);
    }
    rep.text << "\n";
    oracle["eigenvalues"] = std::move(eig);
  } else {
    rep.text << "eigenvalues: not converged\n";
    oracle["eigenvalues"] = nullptr;
  }
  oracle["converged"] = sr.converged;
  oracle["zero_threshold"] = sr.zero_threshold;
  rep.text << "zero threshold: " << format_double(sr.zero_threshold) << "\n";
  const std::string verdict =
      sr.verdict ? std::string(to_string(*sr.verdict)) : "Unresolved";
  oracle["verdict"] = verdict;
  rep.text << "oracle verdict: " << verdict << "\n";
  rep.json["oracle"] = std::move(oracle);

  rep.classification(exact);
  rep.text << "agreement: "
           << (sr.verdict ? (*sr.verdict == exact ? "yes" : "NO") : "n/a (oracle abstained)")
           << "\n";

  const auto found = sampling_refute(in.matrix, opt.trials, opt.seed);
  if (found) {
    rep.text << "sampling witness: " << witness_text(*found) << "\n";
    rep.json["sampling"] = witness_json(*found);
  } else {
    rep.text << "sampling witness: none (" << opt.trials << " trials, seed "
             << opt.seed << ")\n";
    rep.json["sampling"] = nullptr;
  }
}

RunResult run_batch(const Options& opt) {
  RunResult res;
  std::ifstream in(*opt.batch_path);
  if (!in) throw UsageError("cannot open file '" + *opt.batch_path + "'");

  ordered_json j;
  j["command"] = "classify";
  ordered_json batch = ordered_json::array();
  std::ostringstream text;

  std::string line;
  std::size_t lineno = 0;
  bool any_negative_side = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::string trimmed = line;
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
      trimmed.pop_back();
    std::size_t lead = 0;
    while (lead < trimmed.size() && std::isspace(static_cast<unsigned char>(trimmed[lead])))
      ++lead;
    trimmed = trimmed.substr(lead);
    if (trimmed.empty() || trimmed[0] == '#') continue;

    DefinitenessClass cls;
    try {
      cls = classify(parse_any(trimmed));
    } catch (const Error& e) {
      throw UsageError("line " + std::to_string(lineno) + ": " + e.what());
    }
    any_negative_side = any_negative_side || exit_for(cls) != 0;
    text << lineno << ": " << to_string(cls) << "\n";
    ordered_json entry;
    entry["line"] = lineno;
    entry["input"] = trimmed;
    entry["class"] = std::string(to_string(cls));
    batch.push_back(std::move(entry));
  }

  res.exit_code = any_negative_side ? 1 : 0;
  j["batch"] = std::move(batch);
  j["exit"] = res.exit_code;
  res.output = opt.json_output ? j.dump(2) + "\n" : text.str();
  return res;
}

}  // namespace

RunResult run(const std::vector<std::string>& args) {
  RunResult res;
  if (args.empty() || args[0] == "--help" || args[0] == "-h" || args[0] == "help") {
    res.output = kUsage;
    res.exit_code = args.empty() ? 2 : 0;
    if (args.empty()) {
      res.output.clear();
      res.diagnostics = kUsage;
    }
    return res;
  }

  try {
    const Options opt = parse_args(args);
    if (opt.batch_path) return run_batch(opt);

    const Input in = read_input(opt);
    Report rep;
    rep.echo_input(in, opt);

    if (opt.command == "classify")
      cmd_classify(in, rep);
    else if (opt.command == "certify")
      cmd_certify(in, rep);
    else if (opt.command == "witness")
      cmd_witness(in, rep);
    else if (opt.command == "minors")
      cmd_minors(in, opt, rep);
    else if (opt.command == "hessian")
      cmd_hessian(in, rep);
    else
      cmd_oracle(in, opt, rep);

    res.exit_code = exit_for(classify(in.matrix));
    rep.json["exit"] = res.exit_code;
    res.output = opt.json_output ? rep.json.dump(2) + "\n" : rep.text.str();
    return res;
  } catch (const VerificationFailure& e) {
    res.diagnostics = std::string("internal verification failure: ") + e.what() + "\n";
    res.exit_code = 3;
    return res;
  } catch (const UsageError& e) {
    res.diagnostics = std::string("error: ") + e.what() + "\n\n" + kUsage;
    res.exit_code = 2;
    return res;
  } catch (const Error& e) {
    res.diagnostics = std::string("error: ") + e.what() + "\n";
    res.exit_code = 2;
    return res;
  }
}

}  // namespace quadcert
