#include "subnil/report.hpp"

#include <sstream>

#include <json.hpp>

namespace subnil {

using json = nlohmann::ordered_json;

namespace {

std::string csv_escape(const std::string &field) {
  if (field.find_first_of(",\"\n") == std::string::npos)
    return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"')
      quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

} // namespace

std::string to_json(const NilReport &report, bool decimals) {
  json doc;
  doc["group"] = report.group_name;
  doc["order"] = report.order;
  doc["degree"] = report.degree;
  doc["dn"] = report.dn.str();
  doc["spr"] = report.spr.str();
  doc["dc"] = report.dc.str();
  if (decimals) {
    doc["dn_decimal"] = report.dn.to_double();
    doc["spr_decimal"] = report.spr.to_double();
  }
  doc["nilpotent"] = report.nilpotent;
  doc["fitting_index"] = report.fitting_index;
  json classes = json::array();
  for (const auto &row : report.classes) {
    json c;
    c["representative"] = row.representative_cycles;
    c["order"] = row.element_order;
    c["size"] = row.class_size;
    c["nil"] = row.nil_size;
    c["subnormalizer"] = row.subnormalizer_size;
    c["spr"] = row.spr_x.str();
    if (decimals)
      c["spr_decimal"] = row.spr_x.to_double();
    classes.push_back(std::move(c));
  }
  doc["classes"] = std::move(classes);
  return doc.dump(2) + "\n";
}

std::string csv_header_nilreport() {
  return "group,order,dn,spr,nilpotent,fitting_index";
}

std::string to_csv(const NilReport &report, bool decimals) {
  std::ostringstream os;
  os << csv_header_nilreport();
  if (decimals)
    os << ",dn_decimal,spr_decimal";
  os << "\n";
  os << csv_escape(report.group_name) << "," << report.order << ","
     << report.dn.str() << "," << report.spr.str() << ","
     << (report.nilpotent ? "true" : "false") << "," << report.fitting_index;
  if (decimals)
    os << "," << report.dn.to_double() << "," << report.spr.to_double();
  os << "\n";
  return os.str();
}

std::string to_json(const SweepReport &report) {
  json rows = json::array();
  for (const SweepRow &row : report.rows) {
    json r;
    r["group"] = row.group;
    r["order"] = row.order;
    r["check"] = sweep_check_name(row.check);
    r["status"] = sweep_status_name(row.status);
    r["detail"] = row.detail;
    rows.push_back(std::move(r));
  }
  json doc;
  doc["rows"] = std::move(rows);
  doc["failures"] = report.any_fail();
  return doc.dump(2) + "\n";
}

std::string to_csv(const SweepReport &report) {
  std::ostringstream os;
  os << "group,order,check,status,detail\n";
  for (const SweepRow &row : report.rows)
    os << csv_escape(row.group) << "," << row.order << ","
       << sweep_check_name(row.check) << "," << sweep_status_name(row.status)
       << "," << csv_escape(row.detail) << "\n";
  return os.str();
}

} // namespace subnil
