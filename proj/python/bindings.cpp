#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mdlmon/cli.hpp"
#include "mdlmon/monitor.hpp"
#include "mdlmon/parse.hpp"
#include "mdlmon/refsolver.hpp"
#include "mdlmon/translate.hpp"

namespace py = pybind11;
using namespace mdlmon;

namespace {

Rational time_from(const py::object& t) {
  if (py::isinstance<py::str>(t)) return Rational::parse(t.cast<std::string>());
  if (py::isinstance<py::int_>(t)) return Rational(t.cast<std::int64_t>());
  throw std::invalid_argument("time must be a string like '7/2' or an int");
}

/// Formula + proposition table + monitor in one object, so trace proposition
/// names resolve against the same table the formula was parsed with.
class TraceMonitor {
public:
  TraceMonitor(const std::string& formula, const std::vector<std::string>& initial_props) {
    psi_.emplace(parse_btl(formula, props_));
    std::set<PropId> s0;
    for (const auto& n : initial_props) s0.insert(props_.intern(n));
    monitor_.emplace(*psi_, std::move(s0));
  }

  Verdict verdict() const { return monitor_->verdict(); }
  bool decided() const { return monitor_->decided(); }
  std::string formula_text() const { return monitor_->formula().to_string(); }
  std::string time() const { return monitor_->time().to_string(); }

  Verdict feed(const py::object& t, const std::vector<std::string>& names) {
    return monitor_->feed(event_from(t, names));
  }

  std::vector<Verdict> feed_timed(const py::object& t, const std::vector<std::string>& names) {
    return monitor_->feed_timed(event_from(t, names));
  }

  std::vector<Verdict> finish_timed() { return monitor_->feed_timed(std::nullopt); }

  std::optional<std::string> earliest_fulfillment() const {
    auto r = compute_ett(monitor_->formula(), monitor_->state(), monitor_->time());
    return r ? std::optional<std::string>(r->to_string()) : std::nullopt;
  }

  std::optional<std::string> earliest_violation() const {
    auto r = compute_eut(monitor_->formula(), monitor_->state(), monitor_->time());
    return r ? std::optional<std::string>(r->to_string()) : std::nullopt;
  }

private:
  TimedState event_from(const py::object& t, const std::vector<std::string>& names) {
    TimedState ev;
    ev.time = time_from(t);
    for (const auto& n : names) ev.state.insert(props_.intern(n));
    return ev;
  }

  PropTable props_;
  std::optional<BtlFormula> psi_;
  std::optional<Monitor> monitor_;
};

py::dict explain_formula(const std::string& text) {
  BtlFormula psi = parse_btl(text);
  MdlFormula translated = translate_z(psi);
  MdlFormula pos = to_positive_form(translated);
  PolaritySets ps = polarity_sets(pos);
  py::list positive, negative;
  for (const auto& p : ps.positive) positive.append(p.name());
  for (const auto& p : ps.negative) negative.append(p.name());
  py::dict out;
  out["formula"] = psi.to_string();
  out["translation"] = translated.to_string();
  out["positive_form"] = pos.to_string();
  out["positive_predicates"] = positive;
  out["negative_predicates"] = negative;
  out["homogeneous"] = is_homogeneous(pos);
  return out;
}

}  // namespace

PYBIND11_MODULE(_mdlmon, m) {
  m.doc() = "Online verification of bounded temporal formulas over timed event streams";

  py::enum_<VerdictState>(m, "VerdictState")
      .value("UNDETERMINED", VerdictState::Undetermined)
      .value("FULFILLED", VerdictState::Fulfilled)
      .value("FAILED", VerdictState::Failed);

  py::class_<Verdict>(m, "Verdict")
      .def_property_readonly("state", [](const Verdict& v) { return to_string(v.state); })
      .def_property_readonly("time", [](const Verdict& v) { return v.time.to_string(); })
      .def_property_readonly("source", [](const Verdict& v) { return to_string(v.source); })
      .def_property_readonly("decided", &Verdict::decided)
      .def("__repr__", [](const Verdict& v) {
        return "Verdict(" + to_string(v.state) + "@" + v.time.to_string() + ", " + to_string(v.source) + ")";
      });

  py::class_<TraceMonitor>(m, "Monitor")
      .def(py::init<const std::string&, const std::vector<std::string>&>(), py::arg("formula"),
           py::arg("initial_props"))
      .def("feed", &TraceMonitor::feed, py::arg("t"), py::arg("props"),
           "Feed the next timed state; returns the verdict snapshot for it.")
      .def("feed_timed", &TraceMonitor::feed_timed, py::arg("t"), py::arg("props"),
           "Feed with timer injection; returns one snapshot per injected state plus the event.")
      .def("finish_timed", &TraceMonitor::finish_timed,
           "Flush pending timer injections at the end of a trace.")
      .def_property_readonly("verdict", &TraceMonitor::verdict)
      .def_property_readonly("decided", &TraceMonitor::decided)
      .def_property_readonly("formula", &TraceMonitor::formula_text)
      .def_property_readonly("time", &TraceMonitor::time)
      .def("earliest_fulfillment", &TraceMonitor::earliest_fulfillment,
           "Earliest time the formula becomes a tautology absent state change, or None.")
      .def("earliest_violation", &TraceMonitor::earliest_violation,
           "Earliest time the formula becomes unsatisfiable absent state change, or None.");

  m.def("parse_formula", [](const std::string& text) { return parse_btl(text).to_string(); },
        py::arg("text"), "Parse a formula and return its normalized text.");
  m.def("translate", [](const std::string& text) { return translate_z(parse_btl(text)).to_string(); },
        py::arg("text"), "Translate a formula into monadic difference logic (starting point z).");
  m.def("positive_form",
        [](const std::string& text) { return translate_positive(parse_btl(text)).to_string(); },
        py::arg("text"), "Positive form of the translated formula.");
  m.def("explain", &explain_formula, py::arg("text"),
        "Translation, positive form, predicate polarities and homogeneity of a formula.");
}
