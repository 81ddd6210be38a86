#include "tautring/figure.hpp"

#include <cstdio>
#include <functional>

namespace tautring {

namespace {

constexpr double kWidth = 640, kHeight = 520;
constexpr double kLeft = 64, kRight = 24, kTop = 24, kBottom = 56;
constexpr double kP1Min = -4, kP1Max = 4, kP2Min = -3, kP2Max = 30;

double sx(double p1) { return kLeft + (p1 - kP1Min) / (kP1Max - kP1Min) * (kWidth - kLeft - kRight); }
double sy(double p2) { return kHeight - kBottom - (p2 - kP2Min) / (kP2Max - kP2Min) * (kHeight - kTop - kBottom); }

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  if (s == "-0.00") s = "0.00";
  return s;
}

std::string point(double p1, double p2) { return fmt(sx(p1)) + "," + fmt(sy(p2)); }

// Polyline pieces of p2 = f(p1) inside the viewport.
std::string curve(const std::function<double(double)>& f, const std::string& color, const std::string& label,
                  double label_p1) {
  std::string out = "<g class=\"curve\" stroke=\"" + color + "\" fill=\"none\" stroke-width=\"1.5\">\n";
  std::string piece;
  constexpr int kSamples = 400;
  for (int i = 0; i <= kSamples; ++i) {
    double p1 = kP1Min + (kP1Max - kP1Min) * i / kSamples;
    double p2 = f(p1);
    if (p2 < kP2Min || p2 > kP2Max) {
      if (!piece.empty()) out += "<polyline points=\"" + piece + "\"/>\n";
      piece.clear();
      continue;
    }
    if (!piece.empty()) piece += ' ';
    piece += point(p1, p2);
  }
  if (!piece.empty()) out += "<polyline points=\"" + piece + "\"/>\n";
  out += "</g>\n";
  out += "<text x=\"" + fmt(sx(label_p1) + 6) + "\" y=\"" + fmt(sy(f(label_p1)) - 4) + "\" fill=\"" + color +
         "\" font-size=\"12\">" + label + "</text>\n";
  return out;
}

std::string marker(const FiberDimensionRecord& r) {
  double x = sx(r.p1.get_d()), y = sy(r.p2.get_d());
  std::string title = "<title>(" + to_string(r.p1) + ", " + to_string(r.p2) + ") dim " +
                      (r.dimension ? std::to_string(*r.dimension) : std::string("?")) + "</title>";
  int d = r.dimension.value_or(-2);
  if (d == 3)
    return "<rect x=\"" + fmt(x - 5) + "\" y=\"" + fmt(y - 5) +
           "\" width=\"10\" height=\"10\" fill=\"#1f77b4\" stroke=\"black\">" + title + "</rect>\n";
  if (d == 1)
    return "<circle cx=\"" + fmt(x) + "\" cy=\"" + fmt(y) + "\" r=\"5\" fill=\"#ff7f0e\" stroke=\"black\">" + title +
           "</circle>\n";
  return "<polygon points=\"" + fmt(x) + "," + fmt(y - 6) + " " + fmt(x + 6) + "," + fmt(y) + " " + fmt(x) + "," +
         fmt(y + 6) + " " + fmt(x - 6) + "," + fmt(y) + "\" fill=\"#2ca02c\" stroke=\"black\">" + title +
         "</polygon>\n";
}

}  // namespace

std::string render_figure(const std::vector<FiberDimensionRecord>& records) {
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(kWidth) + "\" height=\"" + fmt(kHeight) +
         "\" viewBox=\"0 0 " + fmt(kWidth) + " " + fmt(kHeight) + "\" font-family=\"sans-serif\">\n";
  out += "<defs><clipPath id=\"plot\"><rect x=\"" + fmt(kLeft) + "\" y=\"" + fmt(kTop) + "\" width=\"" +
         fmt(kWidth - kLeft - kRight) + "\" height=\"" + fmt(kHeight - kTop - kBottom) + "\"/></clipPath></defs>\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Frame, ticks and axis lines.
  out += "<g stroke=\"black\" fill=\"none\">\n";
  out += "<rect x=\"" + fmt(kLeft) + "\" y=\"" + fmt(kTop) + "\" width=\"" + fmt(kWidth - kLeft - kRight) +
         "\" height=\"" + fmt(kHeight - kTop - kBottom) + "\"/>\n";
  out += "<line x1=\"" + fmt(sx(0)) + "\" y1=\"" + fmt(sy(kP2Min)) + "\" x2=\"" + fmt(sx(0)) + "\" y2=\"" +
         fmt(sy(kP2Max)) + "\" stroke=\"#bbbbbb\"/>\n";
  out += "<line x1=\"" + fmt(sx(kP1Min)) + "\" y1=\"" + fmt(sy(0)) + "\" x2=\"" + fmt(sx(kP1Max)) + "\" y2=\"" +
         fmt(sy(0)) + "\" stroke=\"#bbbbbb\"/>\n";
  for (int p1 = -4; p1 <= 4; ++p1)
    out += "<line x1=\"" + fmt(sx(p1)) + "\" y1=\"" + fmt(sy(kP2Min)) + "\" x2=\"" + fmt(sx(p1)) + "\" y2=\"" +
           fmt(sy(kP2Min) + 5) + "\"/>\n";
  for (int p2 = 0; p2 <= 30; p2 += 5)
    out += "<line x1=\"" + fmt(sx(kP1Min) - 5) + "\" y1=\"" + fmt(sy(p2)) + "\" x2=\"" + fmt(sx(kP1Min)) +
           "\" y2=\"" + fmt(sy(p2)) + "\"/>\n";
  out += "</g>\n<g font-size=\"12\" fill=\"black\">\n";
  for (int p1 = -4; p1 <= 4; ++p1)
    out += "<text x=\"" + fmt(sx(p1)) + "\" y=\"" + fmt(sy(kP2Min) + 18) + "\" text-anchor=\"middle\">" +
           std::to_string(p1) + "</text>\n";
  for (int p2 = 0; p2 <= 30; p2 += 5)
    out += "<text x=\"" + fmt(sx(kP1Min) - 8) + "\" y=\"" + fmt(sy(p2) + 4) + "\" text-anchor=\"end\">" +
           std::to_string(p2) + "</text>\n";
  out += "<text x=\"" + fmt((kLeft + kWidth - kRight) / 2) + "\" y=\"" + fmt(kHeight - 12) +
         "\" text-anchor=\"middle\">P1</text>\n";
  out += "<text x=\"16\" y=\"" + fmt((kTop + kHeight - kBottom) / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " +
         fmt((kTop + kHeight - kBottom) / 2) + ")\">P2</text>\n";
  out += "</g>\n";

  out += "<g clip-path=\"url(#plot)\">\n";
  out += curve([](double p) { return 7 * p * p / 4; }, "#d62728", "Â₂ = 0", 3.4);
  out += curve([](double p) { return (45 + p * p) / 7; }, "#9467bd", "L₂ = 1", -3.9);
  out += curve([](double p) { return p * p / 7; }, "#8c564b", "L₂ = 0", 2.6);
  out += "</g>\n";

  out += "<g class=\"markers\" clip-path=\"url(#plot)\">\n";
  for (const auto& r : records) out += marker(r);
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace tautring
