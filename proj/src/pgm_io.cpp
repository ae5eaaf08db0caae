#include "qvseg/pgm_io.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>

namespace qvseg {

namespace {

// Next whitespace/comment-delimited token of a PGM header or P2 body.
std::string next_token(std::istream& in) {
    std::string token;
    int ch;
    while ((ch = in.get()) != EOF) {
        if (ch == '#') {
            while ((ch = in.get()) != EOF && ch != '\n') {
            }
            continue;
        }
        if (std::isspace(ch)) {
            if (!token.empty()) {
                break;
            }
            continue;
        }
        token.push_back(static_cast<char>(ch));
    }
    return token;
}

int parse_int(std::istream& in, const std::filesystem::path& file, const char* what) {
    std::string token = next_token(in);
    if (token.empty()) {
        throw std::invalid_argument(file.string() + ": missing " + what);
    }
    try {
        return std::stoi(token);
    } catch (const std::exception&) {
        throw std::invalid_argument(file.string() + ": bad " + what + " '" + token + "'");
    }
}

}  // namespace

Frame read_pgm(const std::filesystem::path& file, int& maxval_out) {
    std::ifstream in(file, std::ios::binary);
    if (!in) {
        throw std::invalid_argument("cannot open " + file.string());
    }
    const std::string magic = next_token(in);
    if (magic != "P2" && magic != "P5") {
        throw std::invalid_argument(file.string() + ": not a P2/P5 PGM file");
    }
    const int width = parse_int(in, file, "width");
    const int height = parse_int(in, file, "height");
    const int maxval = parse_int(in, file, "maxval");
    if (width < 1 || height < 1 || maxval < 1 || maxval > 65535) {
        throw std::invalid_argument(file.string() + ": bad dimensions or maxval");
    }
    maxval_out = maxval;

    Frame frame(height, std::vector<uint16_t>(width, 0));
    if (magic == "P2") {
        for (int y = 0; y < height; ++y) {
            for (int x = 0; x < width; ++x) {
                frame[y][x] = static_cast<uint16_t>(parse_int(in, file, "pixel"));
            }
        }
    } else {
        // Exactly one whitespace byte separates the header from raster data;
        // next_token has already consumed it.
        const int bytes = maxval > 255 ? 2 : 1;
        for (int y = 0; y < height; ++y) {
            for (int x = 0; x < width; ++x) {
                int hi = in.get();
                if (hi == EOF) {
                    throw std::invalid_argument(file.string() + ": truncated raster");
                }
                if (bytes == 2) {
                    int lo = in.get();
                    if (lo == EOF) {
                        throw std::invalid_argument(file.string() + ": truncated raster");
                    }
                    frame[y][x] = static_cast<uint16_t>((hi << 8) | lo);
                } else {
                    frame[y][x] = static_cast<uint16_t>(hi);
                }
            }
        }
    }
    return frame;
}

void write_pgm(const std::filesystem::path& file, const Frame& frame, int maxval) {
    std::ofstream out(file, std::ios::binary);
    if (!out) {
        throw std::invalid_argument("cannot write " + file.string());
    }
    const size_t height = frame.size();
    const size_t width = height ? frame[0].size() : 0;
    out << "P2\n" << width << " " << height << "\n" << maxval << "\n";
    for (const auto& row : frame) {
        for (size_t x = 0; x < row.size(); ++x) {
            if (x) {
                out << ' ';
            }
            out << row[x];
        }
        out << '\n';
    }
}

static std::string frame_file_name(size_t index) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "frame_%04zu.pgm", index);
    return buf;
}

Video read_video_pgm_dir(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir)) {
        throw std::invalid_argument(dir.string() + " is not a directory");
    }
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".pgm") {
            files.push_back(entry.path());
        }
    }
    if (files.empty()) {
        throw std::invalid_argument("no .pgm files in " + dir.string());
    }
    std::sort(files.begin(), files.end());

    Video video;
    int maxval = 1;
    for (const auto& file : files) {
        int frame_maxval = 1;
        video.frames.push_back(read_pgm(file, frame_maxval));
        maxval = std::max(maxval, frame_maxval);
    }
    video.q = static_cast<int>(std::bit_width(static_cast<unsigned>(maxval)));
    video.m_exp = std::max(1, static_cast<int>(std::bit_width(files.size() - 1)));
    const size_t side = video.frames[0].size();
    video.n_exp = std::max(1, static_cast<int>(std::bit_width(side > 0 ? side - 1 : 0)));
    return video;
}

void write_video_pgm_dir(const Video& video, const std::filesystem::path& dir, bool binary_scale) {
    std::filesystem::create_directories(dir);
    const int maxval = binary_scale ? 255 : (1 << video.q) - 1;
    for (size_t j = 0; j < video.frames.size(); ++j) {
        Frame frame = video.frames[j];
        if (binary_scale) {
            for (auto& row : frame) {
                for (auto& p : row) {
                    p = p ? 255 : 0;
                }
            }
        }
        write_pgm(dir / frame_file_name(j), frame, maxval);
    }
}

}  // namespace qvseg
