#include "vspin/program.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>
#include <vector>

namespace vspin {

namespace {

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

struct Token {
  std::string text;
  int col;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

[[noreturn]] void fail(int line, int col, const std::string& msg) {
  throw ParseError(line, col, msg);
}

std::int64_t parse_int(const std::string& s, int line, int col, const char* what) {
  std::int64_t v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    fail(line, col, std::string("malformed ") + what + " '" + s + "'");
  return v;
}

Angle parse_angle(const std::string& raw, int line, int col) {
  const std::string text = lower(raw);
  if (text.empty()) fail(line, col, "empty angle literal");
  const auto pi_pos = text.find("pi");
  if (pi_pos != std::string::npos) {
    std::string head = text.substr(0, pi_pos);   // optional sign and multiplier
    std::string tail = text.substr(pi_pos + 2);  // optional /denominator
    std::int64_t sign = 1;
    if (!head.empty() && (head[0] == '+' || head[0] == '-')) {
      if (head[0] == '-') sign = -1;
      head.erase(0, 1);
    }
    const std::int64_t num = head.empty() ? 1 : parse_int(head, line, col, "angle multiplier");
    std::int64_t den = 1;
    if (!tail.empty()) {
      if (tail[0] != '/') fail(line, col, "malformed angle literal '" + raw + "'");
      den = parse_int(tail.substr(1), line, col, "angle denominator");
      if (den == 0) fail(line, col, "zero denominator in angle literal '" + raw + "'");
    }
    return Angle::pi_over(sign * num, den);
  }
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size())
    fail(line, col, "malformed angle literal '" + raw + "'");
  return Angle::radians(v);
}

Angle parse_kv_angle(const Token& tok, const char* key, int line) {
  const std::string low = lower(tok.text);
  const std::string prefix = std::string(key) + "=";
  if (low.rfind(prefix, 0) != 0)
    fail(line, tok.col, "expected " + prefix + "<angle>, got '" + tok.text + "'");
  return parse_angle(tok.text.substr(prefix.size()),
                     line, tok.col + static_cast<int>(prefix.size()));
}

int parse_level(const Token& tok, int line) {
  const std::int64_t v = parse_int(tok.text, line, tok.col, "level index");
  if (v < 0 || v > 3) fail(line, tok.col, "level index must be 0..3");
  return static_cast<int>(v);
}

PulseSpec parse_pulse(const std::vector<Token>& toks, int line) {
  if (toks.size() < 5 || toks.size() > 6)
    fail(line, toks[0].col, "pulse line needs: pulse <X|Y> <m> <n> angle=<a> [phase=<f>]");
  const std::string ax = lower(toks[1].text);
  if (ax != "x" && ax != "y") fail(line, toks[1].col, "axis must be X or Y");
  const int m = parse_level(toks[2], line);
  const int n = parse_level(toks[3], line);
  if (m >= n) fail(line, toks[2].col, "transition levels must satisfy m < n");
  const Angle angle = parse_kv_angle(toks[4], "angle", line);
  Angle phase = Angle::zero();
  if (toks.size() == 6) phase = parse_kv_angle(toks[5], "phase", line);
  return PulseSpec(ax == "x" ? Axis::X : Axis::Y, m, n, angle, phase);
}

}  // namespace

ParseError::ParseError(int line_, int col_, const std::string& message_)
    : std::runtime_error("line " + std::to_string(line_) + ", col " +
                         std::to_string(col_) + ": " + message_),
      line(line_),
      col(col_),
      message(message_) {}

PulseSequence parse(const std::string& text) {
  PulseSequence seq;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto toks = tokenize(line);
    if (toks.empty()) continue;
    const std::string kw = lower(toks[0].text);
    if (kw == "pulse") {
      seq << parse_pulse(toks, lineno);
    } else if (kw == "grad") {
      if (toks.size() != 1) fail(lineno, toks[1].col, "grad takes no arguments");
      seq << GradientEvent{};
    } else if (kw == "delay") {
      if (toks.size() != 2) fail(lineno, toks[0].col, "delay needs one duration argument");
      char* end = nullptr;
      const double secs = std::strtod(toks[1].text.c_str(), &end);
      if (end != toks[1].text.c_str() + toks[1].text.size())
        fail(lineno, toks[1].col, "malformed duration '" + toks[1].text + "'");
      if (secs < 0) fail(lineno, toks[1].col, "delay duration must be >= 0");
      seq << DelayEvent{secs};
    } else {
      fail(lineno, toks[0].col, "unknown keyword '" + toks[0].text + "'");
    }
  }
  return seq;
}

std::string serialize(const PulseSequence& seq) {
  std::ostringstream os;
  os.precision(17);
  for (const auto& ev : seq.events) {
    if (const auto* p = std::get_if<PulseSpec>(&ev)) {
      os << "pulse " << axis_name(p->axis) << " " << p->m << " " << p->n
         << " angle=" << p->angle.str();
      if (!(p->phase == Angle::zero())) os << " phase=" << p->phase.str();
      os << "\n";
    } else if (std::holds_alternative<GradientEvent>(ev)) {
      os << "grad\n";
    } else {
      os << "delay " << std::get<DelayEvent>(ev).seconds << "\n";
    }
  }
  return os.str();
}

}  // namespace vspin
