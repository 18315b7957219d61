#include "threedist/render.hpp"

#include <sstream>

#include "threedist/errors.hpp"
#include "threedist/farey.hpp"
#include "threedist/three_distance.hpp"

namespace threedist {

namespace {

// Styling constants.
constexpr const char* kInk = "#000000";
constexpr const char* kSegmentColor = "#1f3a93";
constexpr const char* kVerticalColor = "#7f7f7f";
constexpr const char* kEndpointColor = "#c0392b";
constexpr const char* kDash = "4,3";
constexpr const char* kFont = "font-family=\"sans-serif\"";
constexpr std::int64_t kMargin = 40;
constexpr std::int64_t kStripRowHeight = 90;

std::string px(const Rational& value) { return value.to_fixed(6); }

void open_document(std::ostringstream& out, std::int64_t width, std::int64_t height,
                   const std::string& title) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
      << "<title>" << title << "</title>\n";
}

void text(std::ostringstream& out, const Rational& x, const Rational& y, const std::string& body,
          const char* css_class, const char* anchor = "middle", int size = 12,
          const char* color = kInk) {
  out << "<text class=\"" << css_class << "\" x=\"" << px(x) << "\" y=\"" << px(y)
      << "\" text-anchor=\"" << anchor << "\" " << kFont << " font-size=\"" << size
      << "\" fill=\"" << color << "\">" << body << "</text>\n";
}

void line(std::ostringstream& out, const Rational& x1, const Rational& y1, const Rational& x2,
          const Rational& y2, const char* css_class, const char* color, bool dashed = false,
          const std::string& extra = {}) {
  out << "<line class=\"" << css_class << "\"" << extra << " x1=\"" << px(x1) << "\" y1=\""
      << px(y1) << "\" x2=\"" << px(x2) << "\" y2=\"" << px(y2) << "\" stroke=\"" << color
      << "\" stroke-width=\"1.000000\"";
  if (dashed) out << " stroke-dasharray=\"" << kDash << "\"";
  out << "/>\n";
}

void check_dims(std::int64_t width, std::int64_t height) {
  if (width < 64 || height < 64) throw InvalidArgument("SVG dimensions must be at least 64 px");
}

// One ladder row: the unit segment at baseline y with a tick per point.
void strip_row(std::ostringstream& out, const DistancePartition& partition, std::int64_t width,
               const Rational& baseline, const std::string& caption) {
  const Rational x0(kMargin);
  const Rational span(width - 2 * kMargin);
  const Rational tick(6);
  line(out, x0, baseline, x0 + span, baseline, "unit", kInk);
  line(out, x0, baseline - tick, x0, baseline + tick, "endpoint", kEndpointColor);
  line(out, x0 + span, baseline - tick, x0 + span, baseline + tick, "endpoint", kEndpointColor);
  text(out, x0, baseline + Rational(22), "0", "endpoint-label", "middle", 12, kEndpointColor);
  text(out, x0 + span, baseline + Rational(22), "1", "endpoint-label", "middle", 12,
       kEndpointColor);
  if (!caption.empty()) text(out, x0, baseline - Rational(30), caption, "caption", "start");

  Rational position;
  for (const auto& entry : interval_sequence(partition)) {
    const Rational x = x0 + position * span;
    line(out, x, baseline - tick, x, baseline + tick, "tick", kInk, false,
         " data-rank=\"" + std::to_string(entry.index) + "\"");
    text(out, x, baseline - Rational(10), std::to_string(entry.index), "rank");
    const Rational mid = x0 + (position + entry.length / Rational(2)) * span;
    text(out, mid, baseline + Rational(16), entry.length.to_fixed(3), "length", "middle", 10);
    position += entry.length;
  }
}

}  // namespace

UnMapSpec UnMapSpec::make(std::int64_t n, bool show_farey_verticals, std::int64_t width_px,
                          std::int64_t height_px) {
  if (n < 1) throw InvalidArgument("order must be positive");
  if (n > kMaxRenderOrder) throw SizeLimitExceeded("order too large to render");
  UnMapSpec spec;
  spec.n = n;
  spec.show_farey_verticals = show_farey_verticals;
  spec.width_px = width_px;
  spec.height_px = height_px;
  for (std::int64_t i = 1; i <= n; ++i) {
    for (std::int64_t j = 0; j < i; ++j) spec.lines.emplace_back(i, j);
  }
  return spec;
}

std::string render_un_map(const UnMapSpec& spec) {
  check_dims(spec.width_px, spec.height_px);
  if (UnMapSpec::make(spec.n).lines != spec.lines) {
    throw InvalidArgument("lines must list every (i, j) with 0 <= j < i <= n");
  }
  const Rational x0(kMargin);
  const Rational y1(spec.height_px - kMargin);
  const Rational w(spec.width_px - 2 * kMargin);
  const Rational h(spec.height_px - 2 * kMargin);
  auto to_x = [&](const Rational& alpha) { return x0 + alpha * w; };
  auto to_y = [&](const Rational& height) { return y1 - height * h; };

  std::ostringstream out;
  open_document(out, spec.width_px, spec.height_px,
                "Unit interval integral partition of order " + std::to_string(spec.n));
  out << "<rect class=\"frame\" x=\"" << px(x0) << "\" y=\"" << px(Rational(kMargin))
      << "\" width=\"" << px(w) << "\" height=\"" << px(h) << "\" fill=\"none\" stroke=\""
      << kInk << "\" stroke-width=\"1.000000\"/>\n";

  if (spec.show_farey_verticals && spec.n >= 2) {
    for (const Rational& member : farey_sequence(spec.n - 1)) {
      if (member.is_zero() || member == Rational(1)) continue;
      line(out, to_x(member), to_y(0), to_x(member), to_y(1), "farey-vertical", kVerticalColor,
           true);
      text(out, to_x(member), to_y(0) + Rational(16), member.num().str() + "/" + member.den().str(),
           "farey-label", "middle", 11);
    }
  }
  for (const auto& [i, j] : spec.lines) {
    // h = i alpha - j runs from (j/i, 0) to ((j+1)/i, 1).
    line(out, to_x(Rational(j, i)), to_y(0), to_x(Rational(j + 1, i)), to_y(1), "segment",
         kSegmentColor, false,
         " data-i=\"" + std::to_string(i) + "\" data-j=\"" + std::to_string(j) + "\"");
  }
  text(out, to_x(0), to_y(0) + Rational(16), "0", "axis-label");
  text(out, to_x(1), to_y(0) + Rational(16), "1", "axis-label");
  text(out, to_x(0) - Rational(10), to_y(1) + Rational(4), "1", "axis-label", "end");
  text(out, to_x(1) + Rational(12), to_y(0) + Rational(4), "&#945;", "axis-label", "start");
  text(out, to_x(0) - Rational(10), to_y(1) - Rational(12), "h", "axis-label", "end");
  out << "</svg>\n";
  return out.str();
}

std::string render_partition_strip(const RealValue& alpha, std::int64_t n, std::int64_t width_px) {
  check_dims(width_px, 2 * kStripRowHeight);
  if (n > kMaxRenderOrder) throw SizeLimitExceeded("order too large to render");
  const DistancePartition partition = decompose(alpha, n);
  const std::int64_t height = 2 * kStripRowHeight;
  std::ostringstream out;
  open_document(out, width_px, height,
                "Partition of the unit interval by {i alpha}, 0 &lt;= i &lt;= " + std::to_string(n));
  strip_row(out, partition, width_px, Rational(height / 2), {});
  out << "</svg>\n";
  return out.str();
}

std::string render_temperament_ladder(const TemperamentReport& report, std::int64_t width_px) {
  const auto rows = static_cast<std::int64_t>(report.rows.size());
  const std::int64_t height = kStripRowHeight * rows + kMargin;
  check_dims(width_px, height);
  std::ostringstream out;
  open_document(out, width_px, height, "Temperament ladder");
  for (std::int64_t r = 0; r < rows; ++r) {
    const auto& row = report.rows[static_cast<std::size_t>(r)];
    if (row.notes - 1 > kMaxRenderOrder) throw SizeLimitExceeded("order too large to render");
    strip_row(out, row.partition, width_px, Rational(kMargin + kStripRowHeight * r + 30),
              std::to_string(row.notes) + " notes");
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace threedist
