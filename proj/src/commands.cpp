#include "chevchow/commands.hpp"

#include "chevchow/chow_picard.hpp"
#include "chevchow/root_datum.hpp"
#include "chevchow/structure_checks.hpp"

namespace chevchow {

namespace {

void require_valid(const DescriptorDocument& doc, const std::optional<SubgroupDescriptor>& hd,
                   const Limits& limits) {
  ValidationReport g = validate_group(doc.group, limits);
  if (!g.ok()) throw ValidationFailed(to_json(g));
  if (hd) {
    ValidationReport h = validate_subgroup(doc.group, *hd, limits);
    if (!h.ok()) throw ValidationFailed(to_json(h));
  }
}

Json validate_all(const DescriptorDocument& doc, const std::optional<SubgroupDescriptor>& hd,
                  const std::string& name, const Limits& limits, bool& ok) {
  const GroupDescriptor& gd = doc.group;
  Json out = Json::object();
  ValidationReport g = validate_group(gd, limits);
  ok = g.ok();
  out["group"] = to_json(g);
  Json subs = Json::object();
  if (ok) {
    for (const auto& [sub_name, sub] : doc.subgroups) {
      if (hd && sub_name != name) continue;
      ValidationReport r = validate_subgroup(gd, sub, limits);
      ok = ok && r.ok();
      subs[sub_name] = to_json(r);
    }
    if (hd && !doc.find_subgroup(name)) {
      ValidationReport r = validate_subgroup(gd, *hd, limits);
      ok = ok && r.ok();
      subs[name] = to_json(r);
    }
    out["attributes"] = to_json(derived_attributes(gd));
  }
  out["subgroups"] = std::move(subs);
  out["ok"] = ok;
  return out;
}

}  // namespace

bool command_needs_subgroup(const std::string& command) {
  return command == "hchow" || command == "hpic" || command == "complete";
}

CommandResult run_command(const std::string& command, const DescriptorDocument& doc, const CommandOptions& opts) {
  const Limits& limits = opts.limits;
  const GroupDescriptor& gd = doc.group;
  std::optional<SubgroupDescriptor> hd;
  if (!opts.subgroup.empty()) hd = resolve_subgroup(doc, opts.subgroup);
  if (command_needs_subgroup(command) && !hd) throw InvalidArgument(command + " needs a subgroup");

  if (command == "validate") {
    bool ok = true;
    Json out = validate_all(doc, hd, opts.subgroup, limits, ok);
    return {std::move(out), ok};
  }
  if (command == "echo") return {to_json(doc)};

  require_valid(doc, hd, limits);

  if (command == "picard") return {to_json(picard_group(gd))};
  if (command == "ns") {
    if (hd) return {to_json(homogeneous_ns(gd, *hd, limits))};
    PicardReport r = picard_group(gd);
    Json out = Json::object();
    out["ns"] = to_json(r.ns);
    out["pic0"] = to_json(r.pic0);
    return {out};
  }
  if (command == "chow") {
    if (opts.rational) return {to_json(rational_chow(gd, opts.max_degree, limits))};
    GradedPresentation p = chow_presentation(gd, opts.max_degree, limits);
    WeylGroup weyl = weyl_group(gd.rd, limits.group_cap);
    return {to_json(p, &weyl)};
  }
  if (command == "hchow") return {to_json(homogeneous_rational_chow(gd, *hd, opts.max_degree, limits))};
  if (command == "hpic") return {to_json(homogeneous_picard(gd, *hd, opts.integral, limits))};
  if (command == "complete") return {to_json(completeness_test(gd, *hd, limits))};
  if (command == "structure") {
    Json out = Json::object();
    out["albanese_split"] = to_json(albanese_split_test(gd));
    AffinizationVerdicts aff = affinization_test(gd);
    out["affinization_locally_trivial"] = to_json(aff.locally_trivial);
    out["affinization_trivial"] = to_json(aff.trivial);
    if (hd) {
      out["fibration"] = to_json(fibration_report(gd, *hd, limits));
      out["phi_locally_trivial"] = to_json(phi_local_triviality_test(gd, *hd));
      out["complete"] = to_json(completeness_test(gd, *hd, limits));
      AffineVerdicts av = affine_test(gd, *hd);
      out["affine"] = to_json(av.affine);
      out["quasi_affine"] = to_json(av.quasi_affine);
    }
    return {out};
  }
  if (command == "cover") {
    GroupDescriptor cover = construct_cover(gd);
    Json out = Json::object();
    out["unchanged"] = cover == gd;
    out["group"] = to_json(cover);
    out["attributes"] = to_json(derived_attributes(cover));
    return {out};
  }
  throw InvalidArgument("unknown command " + command);
}

}  // namespace chevchow
