#include "zitterlab/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>

namespace zitterlab::io {

std::string format_double(double v) {
    std::array<char, 40> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                   std::chars_format::general, 17);
    return std::string(buf.data(), res.ptr);
}

std::string csv_line(const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) line += ',';
        line += cells[i];
    }
    line += '\n';
    return line;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open for writing: " + path);
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!f) throw Error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open for reading: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

namespace {

// Compact SHA-1 (FIPS 180-1); used only for content fingerprints.
class Sha1 {
  public:
    void update(const unsigned char* data, std::size_t len) {
        total_ += len;
        while (len > 0) {
            const std::size_t space = 64 - fill_;
            const std::size_t take = std::min(space, len);
            std::memcpy(block_.data() + fill_, data, take);
            fill_ += take;
            data += take;
            len -= take;
            if (fill_ == 64) {
                process();
                fill_ = 0;
            }
        }
    }

    std::string hex_digest() {
        const std::uint64_t bits = total_ * 8;
        const unsigned char pad = 0x80;
        update(&pad, 1);
        const unsigned char zero = 0x00;
        while (fill_ != 56) update(&zero, 1);
        unsigned char lenbuf[8];
        for (int i = 0; i < 8; ++i) lenbuf[i] = static_cast<unsigned char>(bits >> (56 - 8 * i));
        update(lenbuf, 8);

        static const char* digits = "0123456789abcdef";
        std::string out;
        out.reserve(40);
        for (std::uint32_t word : h_) {
            for (int i = 28; i >= 0; i -= 4) out += digits[(word >> i) & 0xF];
        }
        return out;
    }

  private:
    static std::uint32_t rol(std::uint32_t x, int s) { return (x << s) | (x >> (32 - s)); }

    void process() {
        std::uint32_t w[80];
        for (int i = 0; i < 16; ++i) {
            w[i] = (std::uint32_t(block_[4 * i]) << 24) | (std::uint32_t(block_[4 * i + 1]) << 16) |
                   (std::uint32_t(block_[4 * i + 2]) << 8) | std::uint32_t(block_[4 * i + 3]);
        }
        for (int i = 16; i < 80; ++i) w[i] = rol(w[i - 3] ^ w[i - 8] ^ w[i - 14] ^ w[i - 16], 1);

        std::uint32_t a = h_[0], b = h_[1], c = h_[2], d = h_[3], e = h_[4];
        for (int i = 0; i < 80; ++i) {
            std::uint32_t f, k;
            if (i < 20) {
                f = (b & c) | (~b & d);
                k = 0x5A827999u;
            } else if (i < 40) {
                f = b ^ c ^ d;
                k = 0x6ED9EBA1u;
            } else if (i < 60) {
                f = (b & c) | (b & d) | (c & d);
                k = 0x8F1BBCDCu;
            } else {
                f = b ^ c ^ d;
                k = 0xCA62C1D6u;
            }
            const std::uint32_t tmp = rol(a, 5) + f + e + k + w[i];
            e = d;
            d = c;
            c = rol(b, 30);
            b = a;
            a = tmp;
        }
        h_[0] += a;
        h_[1] += b;
        h_[2] += c;
        h_[3] += d;
        h_[4] += e;
    }

    std::array<std::uint32_t, 5> h_{0x67452301u, 0xEFCDAB89u, 0x98BADCFEu, 0x10325476u,
                                    0xC3D2E1F0u};
    std::array<unsigned char, 64> block_{};
    std::size_t fill_ = 0;
    std::uint64_t total_ = 0;
};

}  // namespace

std::string sha1_hex(const std::string& content) {
    Sha1 h;
    h.update(reinterpret_cast<const unsigned char*>(content.data()), content.size());
    return h.hex_digest();
}

std::string git_blob_sha1(const std::string& content) {
    std::string prefixed = "blob " + std::to_string(content.size());
    prefixed += '\0';
    prefixed += content;
    return sha1_hex(prefixed);
}

namespace {

std::string fmt_label(double v) {
    std::array<char, 40> buf{};
    const auto res =
        std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 6);
    return std::string(buf.data(), res.ptr);
}

}  // namespace

std::string svg_line_plot(const ObservableSeries& series, const std::string& x_label,
                          const std::string& y_label) {
    if (series.size() == 0) throw EmptyData("svg_line_plot: empty series");

    const double width = 800, height = 500;
    const double ml = 80, mr = 20, mt = 20, mb = 50;

    const auto [tmin_it, tmax_it] = std::minmax_element(series.times.begin(), series.times.end());
    const auto [vmin_it, vmax_it] = std::minmax_element(series.values.begin(), series.values.end());
    const double tmin = *tmin_it, tmax = *tmax_it;
    double vmin = *vmin_it, vmax = *vmax_it;
    if (vmax == vmin) {
        vmax += 1.0;
        vmin -= 1.0;
    }
    const double tspan = (tmax > tmin) ? (tmax - tmin) : 1.0;

    auto px = [&](double t) { return ml + (t - tmin) / tspan * (width - ml - mr); };
    auto py = [&](double v) { return height - mb - (v - vmin) / (vmax - vmin) * (height - mt - mb); };

    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    s << "<line x1=\"" << ml << "\" y1=\"" << height - mb << "\" x2=\"" << width - mr << "\" y2=\""
      << height - mb << "\" stroke=\"black\"/>\n";
    s << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << height - mb
      << "\" stroke=\"black\"/>\n";

    s << "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1\" points=\"";
    for (std::size_t i = 0; i < series.size(); ++i) {
        if (i) s << ' ';
        s << fmt_label(px(series.times[i])) << ',' << fmt_label(py(series.values[i]));
    }
    s << "\"/>\n";

    s << "<text x=\"" << (width / 2) << "\" y=\"" << (height - 12)
      << "\" font-size=\"14\" text-anchor=\"middle\">" << x_label << "</text>\n";
    s << "<text x=\"16\" y=\"" << (height / 2)
      << "\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 16 " << (height / 2)
      << ")\">" << y_label << "</text>\n";
    s << "<text x=\"" << ml << "\" y=\"" << (height - mb + 18) << "\" font-size=\"12\">"
      << fmt_label(tmin) << "</text>\n";
    s << "<text x=\"" << (width - mr) << "\" y=\"" << (height - mb + 18)
      << "\" font-size=\"12\" text-anchor=\"end\">" << fmt_label(tmax) << "</text>\n";
    s << "<text x=\"" << (ml - 6) << "\" y=\"" << (height - mb)
      << "\" font-size=\"12\" text-anchor=\"end\">" << fmt_label(vmin) << "</text>\n";
    s << "<text x=\"" << (ml - 6) << "\" y=\"" << (mt + 10)
      << "\" font-size=\"12\" text-anchor=\"end\">" << fmt_label(vmax) << "</text>\n";
    s << "</svg>\n";
    return s.str();
}

std::string svg_heatmap(const std::vector<double>& values, int n, double x0, double x1, double y0,
                        double y1, const std::string& axis_label) {
    if (values.empty() || n <= 0) throw EmptyData("svg_heatmap: empty data");

    double vmax = 0.0;
    for (double v : values) vmax = std::max(vmax, v);
    if (vmax <= 0.0) vmax = 1.0;

    const double plot = 640, ml = 70, mb = 50, mt = 20, mr = 20;
    const double cell = plot / n;
    const double width = ml + plot + mr, height = mt + plot + mb;

    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double v = values[static_cast<std::size_t>(i * n + j)];
            const int g = 255 - static_cast<int>(std::lround(255.0 * std::min(1.0, v / vmax)));
            // Skip white cells to keep the file small.
            if (g >= 255) continue;
            const double x = ml + j * cell;
            const double y = mt + (n - 1 - i) * cell;
            s << "<rect x=\"" << fmt_label(x) << "\" y=\"" << fmt_label(y) << "\" width=\""
              << fmt_label(cell + 0.5) << "\" height=\"" << fmt_label(cell + 0.5)
              << "\" fill=\"rgb(" << g << ',' << g << ',' << g << ")\"/>\n";
        }
    }
    s << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << plot << "\" height=\"" << plot
      << "\" fill=\"none\" stroke=\"black\"/>\n";
    s << "<text x=\"" << (ml + plot / 2) << "\" y=\"" << (height - 12)
      << "\" font-size=\"14\" text-anchor=\"middle\">" << axis_label << " x (a.u.)</text>\n";
    s << "<text x=\"16\" y=\"" << (mt + plot / 2)
      << "\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
      << (mt + plot / 2) << ")\">" << axis_label << " y (a.u.)</text>\n";
    s << "<text x=\"" << ml << "\" y=\"" << (height - mb + 18) << "\" font-size=\"12\">"
      << fmt_label(x0) << "</text>\n";
    s << "<text x=\"" << (ml + plot) << "\" y=\"" << (height - mb + 18)
      << "\" font-size=\"12\" text-anchor=\"end\">" << fmt_label(x1) << "</text>\n";
    s << "<text x=\"" << (ml - 6) << "\" y=\"" << (mt + plot)
      << "\" font-size=\"12\" text-anchor=\"end\">" << fmt_label(y0) << "</text>\n";
    s << "<text x=\"" << (ml - 6) << "\" y=\"" << (mt + 10)
      << "\" font-size=\"12\" text-anchor=\"end\">" << fmt_label(y1) << "</text>\n";
    s << "</svg>\n";
    return s.str();
}

}  // namespace zitterlab::io
