#include "doob/params.hpp"

#include <charconv>
#include <cstdlib>
#include <string>

#include "doob/error.hpp"

namespace doob {

DoobParams::DoobParams(int m, int n) : m_(m), n_(n) {
  if (m < 0 || n < 0) throw InvalidArgument("D(m,n) needs m >= 0 and n >= 0");
  if (2 * m + n < 1) throw InvalidArgument("D(m,n) needs 2m+n >= 1");
  if (2 * m + n > kMaxWeight) {
    throw InvalidArgument("D(" + std::to_string(m) + "," + std::to_string(n) + ") is too large for 32-bit vertex indices");
  }
}

int DoobParams::shift(int coord) const {
  // Weight of the coordinates after `coord`, two index bits per unit.
  const int after = coord < m_ ? 2 * (m_ - 1 - coord) + n_ : n_ - 1 - (coord - m_);
  return 2 * after;
}

std::string DoobParams::to_string() const {
  return "D(" + std::to_string(m_) + "," + std::to_string(n_) + ")";
}

bool sh_adjacent(ShElement x, ShElement y) {
  const int da = (y.a - x.a + 4) & 3;
  const int db = (y.b - x.b + 4) & 3;
  // {01, 10, 11, 03, 30, 33}
  return (da == 0 && (db == 1 || db == 3)) || (db == 0 && (da == 1 || da == 3)) ||
         (da == db && (da == 1 || da == 3));
}

bool k4_adjacent(K4Element x, K4Element y) { return !(x == y); }

Vertex::Vertex(DoobParams params, std::vector<std::uint8_t> digits)
    : params_(params), digits_(std::move(digits)) {
  if (static_cast<int>(digits_.size()) != params_.coordinate_count()) {
    throw InvalidArgument("vertex of " + params_.to_string() + " needs " +
                          std::to_string(params_.coordinate_count()) + " coordinates");
  }
  for (int i = 0; i < params_.coordinate_count(); ++i) {
    if (digits_[i] >= params_.radix(i)) throw InvalidArgument("coordinate value out of range");
  }
}

Vertex Vertex::from_index(const DoobParams& params, VertexIndex index) {
  if (index >= params.vertex_count()) throw InvalidArgument("vertex index out of range");
  std::vector<std::uint8_t> digits(static_cast<std::size_t>(params.coordinate_count()));
  for (int i = 0; i < params.coordinate_count(); ++i) digits[i] = static_cast<std::uint8_t>(params.digit(index, i));
  return Vertex(params, std::move(digits));
}

VertexIndex Vertex::index() const {
  VertexIndex v = 0;
  for (int i = 0; i < params_.coordinate_count(); ++i) v = params_.with_digit(v, i, digits_[i]);
  return v;
}

ShElement Vertex::sh(int i) const {
  if (i < 0 || i >= params_.m()) throw InvalidArgument("no such Shrikhande coordinate");
  return ShElement::from_value(digits_[i]);
}

K4Element Vertex::k(int j) const {
  if (j < 0 || j >= params_.n()) throw InvalidArgument("no such K4 coordinate");
  return K4Element::from_value(digits_[params_.m() + j]);
}

std::string Vertex::to_string() const {
  std::string out;
  for (int i = 0; i < params_.coordinate_count(); ++i) {
    if (i > 0) out.push_back('.');
    if (params_.factor(i) == Factor::shrikhande) {
      const auto e = ShElement::from_value(digits_[i]);
      out.push_back(static_cast<char>('0' + e.a));
      out.push_back(static_cast<char>('0' + e.b));
    } else {
      const auto e = K4Element::from_value(digits_[i]);
      out.push_back(static_cast<char>('0' + e.c));
      out.push_back(static_cast<char>('0' + e.d));
    }
  }
  return out;
}

Vertex Vertex::parse(const DoobParams& params, std::string_view text) {
  const auto coords = static_cast<std::size_t>(params.coordinate_count());
  if (text.size() != 3 * coords - 1) throw FormatError("bad vertex text '" + std::string(text) + "'");
  std::vector<std::uint8_t> digits(coords);
  for (std::size_t i = 0; i < coords; ++i) {
    if (i > 0 && text[3 * i - 1] != '.') throw FormatError("bad vertex text '" + std::string(text) + "'");
    const int hi = text[3 * i] - '0';
    const int lo = text[3 * i + 1] - '0';
    const int limit = params.factor(static_cast<int>(i)) == Factor::shrikhande ? 4 : 2;
    if (hi < 0 || hi >= limit || lo < 0 || lo >= limit) {
      throw FormatError("bad vertex text '" + std::string(text) + "'");
    }
    digits[i] = static_cast<std::uint8_t>(hi * limit + lo);
  }
  return Vertex(params, std::move(digits));
}

bool adjacent(const Vertex& u, const Vertex& v) {
  if (!(u.params() == v.params())) throw ParamMismatch("vertices of different graphs");
  const auto& p = u.params();
  int differing = -1;
  for (int i = 0; i < p.coordinate_count(); ++i) {
    if (u.digits()[i] != v.digits()[i]) {
      if (differing >= 0) return false;
      differing = i;
    }
  }
  if (differing < 0) return false;
  if (p.factor(differing) == Factor::shrikhande) {
    return sh_adjacent(ShElement::from_value(u.digits()[differing]), ShElement::from_value(v.digits()[differing]));
  }
  return k4_adjacent(K4Element::from_value(u.digits()[differing]), K4Element::from_value(v.digits()[differing]));
}

std::string format_vertex(const DoobParams& params, VertexIndex v) { return Vertex::from_index(params, v).to_string(); }

VertexIndex parse_vertex(const DoobParams& params, std::string_view text) { return Vertex::parse(params, text).index(); }

std::uint64_t vertex_cap(std::uint64_t fallback) {
  const char* env = std::getenv("DOOB_CAP");
  if (env == nullptr || *env == '\0') return fallback;
  std::uint64_t value = 0;
  const std::string_view text(env);
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw InvalidArgument("DOOB_CAP must be a decimal vertex count");
  }
  return value;
}

}  // namespace doob
