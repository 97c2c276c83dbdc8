#include <charconv>

#include "kohn/cli.hpp"
#include "kohn/errors.hpp"

namespace kohn::cli {

namespace {

std::int64_t parse_int(const std::string& text, const std::string& what) {
  std::int64_t v = 0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, v);
  if (text.empty() || ec != std::errc() || ptr != end)
    throw ParseError("expected an integer for " + what + ", got '" + text + "'");
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
    if (pos == std::string::npos) return parts;
    start = pos + 1;
  }
}

[[noreturn]] void unknown(const std::string& text) {
  throw ParseError("unrecognized group '" + text +
                   "'; expected cyclic:m, lens:m:q1,..,qn, bindih:2m, Q, 2T, 2O, 2I, <base>xC:l, qsemi:l or cycsemi:m:l");
}

}  // namespace

QuotientGroup parse_group_spec(const std::string& text) {
  if (const auto pos = text.rfind("xC:"); pos != std::string::npos) {
    const QuotientGroup base = parse_group_spec(text.substr(0, pos));
    return make_product_with_center(base, parse_int(text.substr(pos + 3), "l"));
  }
  if (text == "Q") return make_binary_dihedral(2);
  if (text == "2T") return make_binary_tetrahedral();
  if (text == "2O") return make_binary_octahedral();
  if (text == "2I") return make_binary_icosahedral();

  const auto parts = split(text, ':');
  const std::string& family = parts[0];
  if (family == "cyclic") {
    if (parts.size() != 2) throw ParseError("cyclic takes one parameter: cyclic:m");
    const auto m = parse_int(parts[1], "m");
    if (m < 1) throw ConstraintError("cyclic:m requires m >= 1");
    return make_cyclic(m);
  }
  if (family == "lens") {
    if (parts.size() != 3) throw ParseError("lens takes the form lens:m:q1,...,qn");
    std::vector<std::int64_t> rotations;
    for (const auto& r : split(parts[2], ',')) rotations.push_back(parse_int(r, "rotation number"));
    return make_lens(parse_int(parts[1], "m"), rotations);
  }
  if (family == "bindih") {
    if (parts.size() != 2) throw ParseError("bindih takes one parameter: bindih:2m");
    const auto twice_m = parse_int(parts[1], "2m");
    if (twice_m < 4 || twice_m % 2 != 0) throw ConstraintError("bindih:2m requires an even parameter 2m >= 4");
    return make_binary_dihedral(twice_m / 2);
  }
  if (family == "qsemi") {
    if (parts.size() != 2) throw ParseError("qsemi takes one parameter: qsemi:l");
    return make_q_semidirect(parse_int(parts[1], "l"));
  }
  if (family == "cycsemi") {
    if (parts.size() != 3) throw ParseError("cycsemi takes two parameters: cycsemi:m:l");
    return make_cyclic_semidirect(parse_int(parts[1], "m"), parse_int(parts[2], "l"));
  }
  unknown(text);
}

std::string canonical_spec(const std::string& text) { return parse_group_spec(text).name(); }

}  // namespace kohn::cli
