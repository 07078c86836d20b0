#include "realenum/report.hpp"

#include <sstream>
#include <stdexcept>

namespace realenum {

namespace {

void render_node(const Json& node, const std::string& prefix, std::ostringstream& os) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) {
      if (value.is_object() || value.is_array()) {
        os << prefix << key << ":\n";
        render_node(value, prefix + "  ", os);
      } else {
        os << prefix << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
           << "\n";
      }
    }
  } else if (node.is_array()) {
    for (const auto& value : node) {
      if (value.is_object() || value.is_array()) {
        os << prefix << "-\n";
        render_node(value, prefix + "  ", os);
      } else {
        os << prefix << "- "
           << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
      }
    }
  } else {
    os << prefix << (node.is_string() ? node.get<std::string>() : node.dump()) << "\n";
  }
}

}  // namespace

Json json_integer(const Integer& value) {
  static const Integer lo = Integer(std::numeric_limits<std::int64_t>::min());
  static const Integer hi = Integer(std::numeric_limits<std::int64_t>::max());
  if (value >= lo && value <= hi) return value.convert_to<std::int64_t>();
  return value.str();
}

std::string render_text(const Json& report) {
  std::ostringstream os;
  render_node(report, "", os);
  return os.str();
}

std::string render_report(const Json& report, const std::string& format) {
  if (format == "json") return report.dump(2) + "\n";
  if (format == "text") return render_text(report);
  throw std::invalid_argument("unknown format '" + format + "' (expected text or json)");
}

}  // namespace realenum
