// Python bindings: descriptors in as JSON text, results out as JSON text.
#include <optional>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chevchow/commands.hpp"
#include "chevchow/io.hpp"

namespace py = pybind11;
using namespace chevchow;

namespace {

std::string run(const std::string& command, const std::string& descriptor, const std::string& subgroup,
                std::optional<std::size_t> max_degree, bool rational, bool integral, std::size_t cap) {
  CommandOptions opts;
  opts.subgroup = subgroup;
  opts.max_degree = max_degree;
  opts.rational = rational;
  opts.integral = integral;
  opts.limits.group_cap = cap;
  CommandResult r;
  {
    py::gil_scoped_release release;
    DescriptorDocument doc = parse_descriptor(descriptor);
    r = run_command(command, doc, opts);
  }
  Json out = Json::object();
  out["ok"] = r.ok;
  out["result"] = std::move(r.result);
  return out.dump();
}

std::string canonical(const std::string& descriptor) { return emit_descriptor(parse_descriptor(descriptor)); }

std::string report(const std::string& command, const std::string& descriptor, const std::string& subgroup,
                   std::optional<std::size_t> max_degree, bool rational, bool integral, std::size_t cap,
                   const std::string& format) {
  DescriptorDocument doc = parse_descriptor(descriptor);
  CommandOptions opts;
  opts.subgroup = subgroup;
  opts.max_degree = max_degree;
  opts.rational = rational;
  opts.integral = integral;
  opts.limits.group_cap = cap;
  CommandResult r = run_command(command, doc, opts);
  return emit_report(command, doc.group.name, r.result, format == "text" ? Format::text : Format::json);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Picard groups, Chow rings and structure checks of algebraic groups";
  m.attr("SCHEMA") = kSchemaVersion;
  m.attr("DEFAULT_GROUP_CAP") = kDefaultGroupCap;

  static py::exception<Error> base(m, "Error");
  static py::exception<SyntaxError> syntax(m, "DescriptorSyntaxError", base.ptr());
  static py::exception<SchemaError> schema(m, "SchemaError", base.ptr());
  static py::exception<ValidationFailed> invalid(m, "ValidationFailed", base.ptr());
  static py::exception<InvalidArgument> argument(m, "InvalidArgument", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const SyntaxError& e) {
      py::object err = py::handle(syntax.ptr())(e.what());
      err.attr("line") = e.line();
      err.attr("column") = e.column();
      PyErr_SetObject(syntax.ptr(), err.ptr());
    } catch (const SchemaError& e) {
      py::object err = py::handle(schema.ptr())(e.what());
      err.attr("path") = e.path();
      err.attr("reason") = e.reason();
      PyErr_SetObject(schema.ptr(), err.ptr());
    } catch (const ValidationFailed& e) {
      py::object err = py::handle(invalid.ptr())(e.what());
      err.attr("report_json") = e.report().dump();
      PyErr_SetObject(invalid.ptr(), err.ptr());
    } catch (const InvalidArgument& e) {
      py::set_error(argument, e.what());
    } catch (const Error& e) {
      py::set_error(base, e.what());
    }
  });

  m.def("run", &run, py::arg("command"), py::arg("descriptor"), py::arg("subgroup") = "",
        py::arg("max_degree") = py::none(), py::arg("rational") = false, py::arg("integral") = false,
        py::arg("cap") = kDefaultGroupCap,
        "Run a command on descriptor JSON text; returns {\"ok\", \"result\"} as JSON text.");
  m.def("report", &report, py::arg("command"), py::arg("descriptor"), py::arg("subgroup") = "",
        py::arg("max_degree") = py::none(), py::arg("rational") = false, py::arg("integral") = false,
        py::arg("cap") = kDefaultGroupCap, py::arg("format") = "json",
        "Same as run, rendered in the command-line envelope.");
  m.def("canonical", &canonical, py::arg("descriptor"), "Canonical re-emission of a descriptor.");
}
