#include "mdlmon/cli.hpp"

#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "mdlmon/ddd.hpp"
#include "mdlmon/monitor.hpp"
#include "mdlmon/parse.hpp"
#include "mdlmon/refsolver.hpp"
#include "mdlmon/translate.hpp"

namespace mdlmon::cli {

namespace {

using nlohmann::json;

std::string verdict_line(const Verdict& v) {
  return "{\"t\":\"" + v.time.to_string() + "\",\"verdict\":\"" + to_string(v.state) + "\",\"source\":\"" +
         to_string(v.source) + "\"}";
}

Rational parse_time(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw std::invalid_argument("time must be a string or an integer");
}

TimedState parse_event(const std::string& line, PropTable& props) {
  json j = json::parse(line);
  if (!j.is_object() || !j.contains("t") || !j.contains("props")) {
    throw std::invalid_argument("event must be an object with \"t\" and \"props\"");
  }
  TimedState ev;
  ev.time = parse_time(j["t"]);
  if (ev.time.is_negative()) throw std::invalid_argument("negative timestamp");
  if (!j["props"].is_array()) throw std::invalid_argument("\"props\" must be an array");
  for (const auto& p : j["props"]) {
    if (!p.is_string()) throw std::invalid_argument("proposition names must be strings");
    ev.state.insert(props.intern(p.get<std::string>()));
  }
  return ev;
}

void print_pred_set(std::ostream& out, const std::set<PredId>& s) {
  if (s.empty()) {
    out << "(none)";
    return;
  }
  bool first = true;
  for (const auto& p : s) {
    if (!first) out << " ";
    out << p.name();
    first = false;
  }
}

int explain(const BtlFormula& psi, std::ostream& out) {
  MdlFormula translated = translate_z(psi);
  MdlFormula pos = to_positive_form(translated);
  PolaritySets ps = polarity_sets(pos);
  out << "formula: " << psi.to_string() << "\n";
  out << "translation: " << translated.to_string() << "\n";
  out << "positive form: " << pos.to_string() << "\n";
  out << "positive predicates: ";
  print_pred_set(out, ps.positive);
  out << "\n";
  out << "negative predicates: ";
  print_pred_set(out, ps.negative);
  out << "\n";
  out << "homogeneous: " << (is_homogeneous(pos) ? "yes" : "no") << "\n";
  return kExitFulfilled;
}

void dump_decision_diagrams(const MdlFormula& phi, const std::string& path, std::ostream& err) {
  std::ofstream f(path);
  if (!f) {
    err << "cannot open " << path << " for writing\n";
    return;
  }
  {
    DddManager m;
    f << "# zero-substitution\n" << m.dump(m.build_closed(literal_substitute(phi, false)));
  }
  {
    DddManager m;
    f << "# one-substitution\n" << m.dump(m.build_closed(literal_substitute(phi, true)));
  }
}

}  // namespace

int run(const Options& opts, std::istream& trace, std::ostream& out, std::ostream& err) {
  PropTable props;
  std::optional<BtlFormula> parsed;
  try {
    parsed = parse_btl(opts.formula, props);
  } catch (const std::exception& e) {
    err << "formula error: " << e.what() << "\n";
    return kExitInputError;
  }
  const BtlFormula& psi = *parsed;

  if (opts.explain) return explain(psi, out);

  std::optional<Monitor> monitor;
  RunPrefix prefix;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(trace, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    TimedState ev;
    try {
      ev = parse_event(line, props);
      prefix.append(ev);
    } catch (const std::exception& e) {
      err << "trace error at line " << line_no << ": " << e.what() << "\n";
      return kExitInputError;
    }
    if (!monitor) {
      monitor.emplace(psi, ev.state);
      out << verdict_line(monitor->verdict().decided()
                              ? monitor->verdict()
                              : Verdict{VerdictState::Undetermined, Rational(0), VerdictSource::Initial})
          << "\n";
    } else if (!monitor->decided()) {
      try {
        if (opts.timer) {
          for (const auto& v : monitor->feed_timed(ev)) out << verdict_line(v) << "\n";
        } else {
          out << verdict_line(monitor->feed(ev)) << "\n";
        }
      } catch (const std::exception& e) {
        err << "trace error at line " << line_no << ": " << e.what() << "\n";
        return kExitInputError;
      }
    }
  }
  if (!monitor) {
    err << "empty trace\n";
    return kExitInputError;
  }
  if (opts.timer && !monitor->decided()) {
    for (const auto& v : monitor->feed_timed(std::nullopt)) out << verdict_line(v) << "\n";
  }

  if (opts.dump_ddd_path) dump_decision_diagrams(monitor->formula(), *opts.dump_ddd_path, err);

  int exit_code = kExitUndetermined;
  switch (monitor->verdict().state) {
    case VerdictState::Fulfilled:
      exit_code = kExitFulfilled;
      break;
    case VerdictState::Failed:
      exit_code = kExitFailed;
      break;
    case VerdictState::Undetermined:
      exit_code = kExitUndetermined;
      break;
  }

  if (opts.check) {
    Rational horizon = opts.horizon ? *opts.horizon : prefix.back().time;
    if (horizon < prefix.back().time) {
      err << "check error: horizon before the last event\n";
      return kExitInputError;
    }
    ThreeValued ref = eval_btl(prefix, horizon, Rational(0), psi);
    bool contradiction = (monitor->verdict().state == VerdictState::Fulfilled && ref == ThreeValued::False) ||
                         (monitor->verdict().state == VerdictState::Failed && ref == ThreeValued::True);
    out << "{\"check\":\"" << (contradiction ? "mismatch" : "ok") << "\",\"reference\":\"" << to_string(ref)
        << "\"}\n";
    if (contradiction) {
      err << "check error: verdict " << to_string(monitor->verdict().state)
          << " contradicts the reference evaluation " << to_string(ref) << "\n";
      return kExitInputError;
    }
  }
  return exit_code;
}

}  // namespace mdlmon::cli
